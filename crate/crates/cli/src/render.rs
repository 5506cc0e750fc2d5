//! Text and CSV rendering of exact values.

use stcalc_core::exactring::RatFunc;
use stcalc_verify::{Status, VerifyReport};

use crate::CliResult;

/// Compact coefficient text; multi-term values are parenthesized when they
/// multiply a power.
pub fn coeff(c: &RatFunc) -> String {
    c.render_compact()
}

fn needs_parens(s: &str) -> bool {
    s.chars().skip(1).any(|c| matches!(c, '+' | '-' | '/'))
}

fn power(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

/// `sum c_k var^k` in descending powers, e.g. `q^3*x^3 + q*x^2 + x + 1`.
pub fn polynomial(coeffs: &[RatFunc], var: &str) -> String {
    join_terms(coeffs.iter().enumerate().rev(), var)
}

/// Ascending powers, for denominators such as `1 - x^3`.
pub fn polynomial_ascending(coeffs: &[RatFunc], var: &str) -> String {
    join_terms(coeffs.iter().enumerate(), var)
}

fn join_terms<'a>(terms: impl Iterator<Item = (usize, &'a RatFunc)>, var: &str) -> String {
    let mut parts: Vec<(bool, String)> = Vec::new();
    for (k, c) in terms {
        if c.is_zero() {
            continue;
        }
        let mut cs = coeff(c);
        let neg = cs.starts_with('-') && !needs_parens(&cs);
        if neg {
            cs.remove(0);
        }
        let p = power(var, k);
        let body = match (cs.as_str(), p.is_empty()) {
            (_, true) => cs.clone(),
            ("1", false) => p,
            (_, false) if needs_parens(&cs) => format!("({cs})*{p}"),
            (_, false) => format!("{cs}*{p}"),
        };
        parts.push((neg, body));
    }
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (neg, body)) in parts.into_iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

/// A truncated series: the polynomial part plus its error term.
pub fn series(coeffs: &[RatFunc], var: &str) -> String {
    format!("{} + O({})", polynomial(coeffs, var), power(var, coeffs.len()))
}

pub fn csv_rows(header: &[&str], rows: &[Vec<String>]) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    let bytes = w.into_inner().map_err(|e| crate::CliError::Failed(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn report_csv(r: &VerifyReport) -> CliResult<String> {
    let rows: Vec<Vec<String>> = r
        .cases
        .iter()
        .map(|c| {
            let w = match &c.status {
                Status::Fail { witness } | Status::ExpectedFailure { witness } => Some(witness),
                _ => None,
            };
            vec![
                c.id.clone(),
                c.status.label().to_string(),
                w.and_then(|w| w.index).map(|i| i.to_string()).unwrap_or_default(),
                w.map(|w| w.lhs.clone()).unwrap_or_default(),
                w.map(|w| w.rhs.clone()).unwrap_or_default(),
                w.map(|w| w.point.clone()).unwrap_or_default(),
                c.millis.to_string(),
            ]
        })
        .collect();
    csv_rows(&["id", "status", "index", "lhs", "rhs", "point", "millis"], &rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use stcalc_core::exactring::Var;

    #[test]
    fn descending_with_parens() {
        let q = RatFunc::var(Var::Q);
        let cs = vec![RatFunc::one(), RatFunc::from(-3), &RatFunc::one() + &q, RatFunc::zero(), q.clone()];
        assert_eq!(polynomial(&cs, "x"), "q*x^4 + (1+q)*x^2 - 3*x + 1");
        assert_eq!(series(&cs[..2], "y"), "-3*y + 1 + O(y^2)");
        assert_eq!(polynomial(&[], "x"), "0");
        assert_eq!(polynomial_ascending(&cs, "x"), "1 - 3*x + (1+q)*x^2 + q*x^4");
    }
}
