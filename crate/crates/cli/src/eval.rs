//! `stcalc eval`.

use clap::ValueEnum;
use serde_json::json;
use stcalc_core::exactring::{phi, phi_prime, QuadExt, RatFunc, Var};
use stcalc_core::pseries::{product_linear, Series};
use stcalc_core::qrs::rogers_szego_r;
use stcalc_core::deformed::{deformed_binom, theta_deriv, ThetaMode};

use crate::params::{Param, Point};
use crate::{render, CliError, CliResult, Format, Output, MAX_D, MAX_N, MAX_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Expr {
    /// n-th (s,t)-derivative of the partial theta function sum q^C(k,2) x^k.
    ThetaDeriv,
    /// Rogers-Szego polynomial r_n(x, b; q).
    RsPoly,
    /// (1 (+)_{u,v} y)^(alpha) as a series in y.
    BinomSeries,
    /// sum_n {n+d over d} x^n, checked against 1 / prod_k (1 - phi^(d-k) phi'^k x).
    PolytopicOgf,
}

#[derive(clap::Args, Debug)]
pub struct EvalArgs {
    #[arg(value_enum)]
    expr: Expr,
    /// n, alpha or d depending on the expression.
    #[arg(allow_hyphen_values = true)]
    arg: i64,
    #[arg(long, default_value_t = 8)]
    order: usize,
    #[arg(long, value_parser = Param::parse, allow_hyphen_values = true, default_value = "symbolic")]
    s: Param,
    #[arg(long, value_parser = Param::parse, allow_hyphen_values = true, default_value = "symbolic")]
    t: Param,
    #[arg(long, value_parser = Param::parse, allow_hyphen_values = true, default_value = "symbolic")]
    q: Param,
    #[arg(long, value_parser = Param::parse, allow_hyphen_values = true, default_value = "symbolic")]
    u: Param,
    #[arg(long, value_parser = Param::parse, allow_hyphen_values = true, default_value = "symbolic")]
    v: Param,
}

struct Evaluated {
    var: &'static str,
    coeffs: Vec<RatFunc>,
    /// Polynomials print without an error term.
    exact: bool,
    text: String,
    closed_form: Option<(String, bool)>,
}

fn check_range(name: &str, value: i64, lo: i64, hi: i64) -> CliResult<usize> {
    if value < lo || value > hi {
        return Err(CliError::Usage(format!("{name} must lie in {lo}..={hi}, got {value}")));
    }
    Ok(value.unsigned_abs() as usize)
}

fn specialize(pt: &Point, s: Series<RatFunc>) -> CliResult<Vec<RatFunc>> {
    let at = pt.assignments();
    let coeffs = s.into_coeffs();
    if at.is_empty() {
        return Ok(coeffs);
    }
    Ok(coeffs.iter().map(|c| c.eval_vars(&at)).collect::<Result<_, _>>()?)
}

fn theta(a: &EvalArgs, pt: &Point) -> CliResult<Evaluated> {
    let n = check_range("n", a.arg, 0, MAX_N)?;
    let q = a.q.as_ratfunc(Var::Q);
    let ctx = pt.context();
    let f = match theta_deriv(n, &q, ThetaMode::Direct, &ctx, a.order) {
        Ok(f) => f,
        Err(_) if !ctx.is_symbolic() => {
            theta_deriv(n, &q, ThetaMode::Direct, &stcalc_core::stcore::STContext::symbolic(), a.order)?
        }
        Err(e) => return Err(e.into()),
    };
    let coeffs = specialize(pt, f)?;
    Ok(Evaluated { var: "x", text: render::series(&coeffs, "x"), coeffs, exact: false, closed_form: None })
}

fn rs_poly(a: &EvalArgs) -> CliResult<Evaluated> {
    let n = check_range("n", a.arg, 0, MAX_N)?;
    let r = rogers_szego_r(n, &a.q.as_ratfunc(Var::Q))?;
    Ok(Evaluated { var: "x", coeffs: r.coeffs().to_vec(), exact: true, text: r.to_string(), closed_form: None })
}

fn binom_series(a: &EvalArgs, pt: &Point) -> CliResult<Evaluated> {
    check_range("alpha", a.arg, -MAX_N, MAX_N)?;
    let (u, v) = (a.u.as_ratfunc(Var::U), a.v.as_ratfunc(Var::V));
    let one = Series::one(a.order);
    let y = Series::var(a.order);
    let ctx = pt.context();
    let f = match deformed_binom(&one, &y, &u, &v, a.arg, &ctx) {
        Ok(f) => f,
        Err(_) if !ctx.is_symbolic() => {
            deformed_binom(&one, &y, &u, &v, a.arg, &stcalc_core::stcore::STContext::symbolic())?
        }
        Err(e) => return Err(e.into()),
    };
    let coeffs = specialize(pt, f)?;
    Ok(Evaluated { var: "y", text: render::series(&coeffs, "y"), coeffs, exact: false, closed_form: None })
}

fn polytopic_ogf(a: &EvalArgs, pt: &Point) -> CliResult<Evaluated> {
    let d = check_range("d", a.arg, 0, MAX_D as i64)?;
    let ctx = pt.context();
    let di = d as i64;
    let coeffs = (0..=a.order as i64)
        .map(|n| pt.compute(&ctx, |c| c.st_binom(n + di, d)))
        .collect::<CliResult<Vec<_>>>()?;

    // prod_{k=0}^{d} (1 - phi^(d-k) phi'^k x), symmetric under phi <-> phi'.
    let roots: Vec<QuadExt> = (0..=di)
        .map(|k| Ok(&phi().pow(di - k)? * &phi_prime().pow(k)?))
        .collect::<stcalc_core::Result<_>>()?;
    let den = product_linear(&roots, d + 1);
    let mut den_coeffs = Vec::with_capacity(d + 2);
    for c in den.coeffs() {
        if !c.delta_part().is_zero() {
            return Err(CliError::Failed("denominator is not symmetric in phi, phi'".into()));
        }
        den_coeffs.push(c.symmetric_part().eval_vars(&pt.assignments())?);
    }
    let den_series = Series::new(den_coeffs.clone(), a.order);
    let closed = den_series.reciprocal()?;
    let agrees = closed.coeffs() == coeffs.as_slice();
    let closed_text = format!("1/({})", render::polynomial_ascending(&den_coeffs, "x"));
    Ok(Evaluated {
        var: "x",
        text: render::series(&coeffs, "x"),
        coeffs,
        exact: false,
        closed_form: Some((closed_text, agrees)),
    })
}

pub fn run(a: &EvalArgs, format: Format) -> CliResult<Output> {
    if a.order > MAX_ORDER {
        return Err(CliError::Usage(format!("--order must be at most {MAX_ORDER}, got {}", a.order)));
    }
    let pt = Point { s: a.s.clone(), t: a.t.clone() };
    let e = match a.expr {
        Expr::ThetaDeriv => theta(a, &pt)?,
        Expr::RsPoly => rs_poly(a)?,
        Expr::BinomSeries => binom_series(a, &pt)?,
        Expr::PolytopicOgf => polytopic_ogf(a, &pt)?,
    };
    let strings: Vec<String> = e.coeffs.iter().map(render::coeff).collect();
    let ok = e.closed_form.as_ref().map_or(true, |(_, agrees)| *agrees);
    let body = match format {
        Format::Text => {
            let mut out = format!("{}\n", e.text);
            if !e.exact {
                out += &format!("coefficients: {}\n", strings.join(", "));
            }
            if let Some((c, agrees)) = &e.closed_form {
                let verdict = if *agrees { "agrees" } else { "DISAGREES" };
                out += &format!("closed form: {c} ({verdict} to order {})\n", a.order);
            }
            out
        }
        Format::Json => {
            let v = json!({
                "expr": a.expr.to_possible_value().expect("named expression").get_name(),
                "arg": a.arg,
                "order": if e.exact { None } else { Some(a.order) },
                "variable": e.var,
                "text": e.text,
                "coefficients": strings,
                "closed_form": e.closed_form.as_ref().map(|(c, _)| c),
                "closed_form_agrees": e.closed_form.as_ref().map(|(_, ok)| ok),
            });
            serde_json::to_string_pretty(&v).expect("json value") + "\n"
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> =
                strings.iter().enumerate().map(|(k, c)| vec![k.to_string(), c.clone()]).collect();
            render::csv_rows(&["k", "coefficient"], &rows)?
        }
    };
    Ok(Output { body, ok })
}
