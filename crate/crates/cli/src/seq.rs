//! `stcalc seq`.

use clap::ValueEnum;
use serde_json::json;
use stcalc_core::exactring::{BigRat, RatFunc};
use stcalc_core::stcore::STContext;
use stcalc_verify::cases::polytopic::{printed_sequence_for, SeqSpec};

use crate::params::{Param, Point};
use crate::{render, CliError, CliResult, Format, Output, MAX_D, MAX_N};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// [[n]], n = 0, 1, ...
    Fib,
    /// {n+d-1 over d}; needs --d.
    Polytopic,
    /// d = 2.
    Triangular,
    /// d = 3.
    Tetrahedral,
    /// d = 4.
    Pentachoron,
    /// d = 5.
    Hexateron,
    /// Gaussian binomial [n+d-1 over d]_q; needs --d, uses --q.
    QbinomColumn,
}

#[derive(clap::Args, Debug)]
pub struct SeqArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long, value_parser = Param::parse, allow_hyphen_values = true, default_value = "symbolic")]
    s: Param,
    #[arg(long, value_parser = Param::parse, allow_hyphen_values = true, default_value = "symbolic")]
    t: Param,
    /// Base of the q-binomials (qbinom-column only).
    #[arg(long, value_parser = Param::parse, allow_hyphen_values = true, default_value = "symbolic")]
    q: Param,
    /// Dimension for polytopic and qbinom-column.
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, default_value_t = 10)]
    count: i64,
    /// First index; defaults to where the matching printed list starts, else 0.
    #[arg(long)]
    start: Option<i64>,
}

fn dimension(a: &SeqArgs) -> CliResult<usize> {
    let fixed = match a.family {
        Family::Fib => Some(1),
        Family::Triangular => Some(2),
        Family::Tetrahedral => Some(3),
        Family::Pentachoron => Some(4),
        Family::Hexateron => Some(5),
        Family::Polytopic | Family::QbinomColumn => None,
    };
    let d = match (fixed, a.d) {
        (Some(f), Some(d)) if f != d => {
            return Err(CliError::Usage(format!("{:?} has d = {f}; drop --d {d}", a.family)));
        }
        (Some(f), _) => f,
        (None, Some(d)) => d,
        (None, None) => return Err(CliError::Usage("this family needs --d".into())),
    };
    if d > MAX_D {
        return Err(CliError::Usage(format!("--d must be at most {MAX_D}, got {d}")));
    }
    Ok(d)
}

/// The `(s, t)` of the computation: qbinom-column maps `q` to `(1+q, -q)`.
fn point(a: &SeqArgs) -> CliResult<(Point, bool)> {
    if a.family != Family::QbinomColumn {
        return Ok((Point { s: a.s.clone(), t: a.t.clone() }, false));
    }
    if a.s != Param::Symbolic || a.t != Param::Symbolic {
        return Err(CliError::Usage("qbinom-column takes --q, not --s/--t".into()));
    }
    Ok(match a.q.value() {
        Some(q) => {
            let s = &BigRat::from(1) + q;
            (Point { s: Param::Value(s), t: Param::Value(-q) }, false)
        }
        None => (Point { s: Param::Symbolic, t: Param::Symbolic }, true),
    })
}

struct Mismatch {
    n: i64,
    computed: String,
    printed: i64,
}

pub fn run(a: &SeqArgs, format: Format) -> CliResult<Output> {
    let d = dimension(a)?;
    let (pt, qnum) = point(a)?;
    let printed: Option<&SeqSpec> = match (pt.s.as_i64(), pt.t.as_i64()) {
        (Some(s), Some(t)) => printed_sequence_for(s, t, d),
        _ => None,
    };
    let start = a.start.unwrap_or(printed.map_or(0, |p| p.first_n));
    if start < 0 || a.count < 0 {
        return Err(CliError::Usage("--start and --count must be nonnegative".into()));
    }
    if a.count > 0 && start + a.count - 1 > MAX_N {
        return Err(CliError::Usage(format!("indices must stay at most {MAX_N}")));
    }
    let ctx = if qnum { STContext::qnum() } else { pt.context() };
    let di = d as i64;
    let mut values: Vec<(i64, RatFunc)> = Vec::new();
    for n in start..start + a.count {
        let v = if qnum { ctx.st_binom(n + di - 1, d)? } else { pt.compute(&ctx, |c| c.st_binom(n + di - 1, d))? };
        values.push((n, v));
    }

    let mut mismatches = Vec::new();
    let mut compared = 0;
    if let Some(p) = printed {
        for (n, v) in &values {
            let j = n - p.first_n;
            if j < 0 || j as usize >= p.printed.len() {
                continue;
            }
            compared += 1;
            let want = p.printed[j as usize];
            if *v != RatFunc::from(want) {
                mismatches.push(Mismatch { n: *n, computed: render::coeff(v), printed: want });
            }
        }
    }

    let strings: Vec<String> = values.iter().map(|(_, v)| render::coeff(v)).collect();
    let body = match format {
        Format::Text => {
            let mut out = strings.join(",") + "\n";
            if let Some(p) = printed {
                if compared == 0 {
                    out += &format!("# {}: no overlap with the printed list\n", p.id);
                } else if mismatches.is_empty() {
                    out += &format!("# {}: agrees with the printed list on {compared} entries\n", p.id);
                } else {
                    for m in &mismatches {
                        out += &format!(
                            "# {}: differs from the printed list at n = {}: computed {}, printed {}\n",
                            p.id, m.n, m.computed, m.printed
                        );
                    }
                    if !p.note.is_empty() {
                        out += &format!("# {}: {}\n", p.id, p.note);
                    }
                }
            }
            out
        }
        Format::Json => {
            let check = printed.map(|p| {
                json!({
                    "id": p.id,
                    "compared": compared,
                    "mismatches": mismatches.iter().map(|m| json!({
                        "n": m.n, "computed": m.computed, "printed": m.printed.to_string(),
                    })).collect::<Vec<_>>(),
                    "note": p.note,
                })
            });
            let v = json!({
                "family": a.family.to_possible_value().expect("named family").get_name(),
                "s": pt.s.to_string(),
                "t": pt.t.to_string(),
                "d": d,
                "start": start,
                "values": strings,
                "printed": check,
            });
            serde_json::to_string_pretty(&v).expect("json value") + "\n"
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = values
                .iter()
                .zip(&strings)
                .map(|((n, _), s)| {
                    let p = printed
                        .and_then(|p| usize::try_from(n - p.first_n).ok().and_then(|j| p.printed.get(j)))
                        .map(|v| v.to_string())
                        .unwrap_or_default();
                    vec![n.to_string(), s.clone(), p]
                })
                .collect();
            render::csv_rows(&["n", "value", "printed"], &rows)?
        }
    };
    Ok(Output::ok(body))
}
