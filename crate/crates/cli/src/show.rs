//! `stcalc show`.

use clap::ValueEnum;
use serde_json::json;
use stcalc_verify::cases::polytopic::printed_sequences;
use stcalc_verify::{registry, Expect, RingReq, TheoremCase};

use crate::{render, CliError, CliResult, Format, Output};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Topic {
    /// Every registered identity.
    Cases,
    /// One case in detail; needs an id.
    Case,
    /// The printed sequence lists.
    Sequences,
    /// Named (s,t) choices.
    Specializations,
}

#[derive(clap::Args, Debug)]
pub struct ShowArgs {
    #[arg(value_enum)]
    topic: Topic,
    id: Option<String>,
}

const SPECIALIZATIONS: &[(&str, &str, &str)] = &[
    ("naturals", "(2, -1)", "[[n]] = n"),
    ("fibonacci", "(1, 1)", "Fibonacci numbers"),
    ("pell", "(2, 1)", "Pell numbers"),
    ("jacobsthal", "(1, 2)", "Jacobsthal numbers"),
    ("mersenne", "(3, -2)", "2^n - 1"),
    ("pq", "(p + q, -pq)", "(p,q)-numbers (p^n - q^n)/(p - q)"),
    ("chebyshev", "(2x, -1)", "Chebyshev polynomials of the second kind U_{n-1}(x)"),
    ("lucas", "(P, -Q)", "Lucas sequences U_n(P, Q)"),
    ("qnum", "(1 + q, -q)", "q-numbers [n]_q"),
];

fn ring(c: &TheoremCase) -> &'static str {
    match c.ring {
        RingReq::RationalFunction => "rational_function",
        RingReq::QuadraticExtension => "quadratic_extension",
    }
}

fn expect(c: &TheoremCase) -> &'static str {
    match c.expect {
        Expect::Holds => "holds",
        Expect::PrintedTypo => "printed_typo",
    }
}

fn case_json(c: &TheoremCase) -> serde_json::Value {
    json!({
        "id": c.id, "reference": c.reference, "ring": ring(c), "expect": expect(c),
        "symbolic_budget": c.symbolic_budget, "note": c.note,
    })
}

pub fn run(a: &ShowArgs, format: Format) -> CliResult<Output> {
    let body = match a.topic {
        Topic::Cases | Topic::Case => {
            let all = registry();
            let chosen: Vec<TheoremCase> = match (a.topic, &a.id) {
                (Topic::Case, Some(id)) => {
                    let c = all.iter().find(|c| c.id == id).ok_or_else(|| CliError::Usage(format!("no case `{id}`")))?;
                    vec![*c]
                }
                (Topic::Case, None) => return Err(CliError::Usage("show case needs an id".into())),
                _ => all,
            };
            match format {
                Format::Json => {
                    let v: Vec<_> = chosen.iter().map(case_json).collect();
                    serde_json::to_string_pretty(&v).expect("json value") + "\n"
                }
                Format::Csv => {
                    let rows: Vec<Vec<String>> = chosen
                        .iter()
                        .map(|c| {
                            vec![
                                c.id.into(),
                                ring(c).into(),
                                expect(c).into(),
                                c.symbolic_budget.to_string(),
                                c.reference.into(),
                                c.note.into(),
                            ]
                        })
                        .collect();
                    render::csv_rows(&["id", "ring", "expect", "symbolic_budget", "reference", "note"], &rows)?
                }
                Format::Text if a.topic == Topic::Case => {
                    let c = &chosen[0];
                    let mut out = format!(
                        "{}\n  reference: {}\n  ring: {}\n  expect: {}\n  symbolic up to order {}\n",
                        c.id,
                        c.reference,
                        ring(c),
                        expect(c),
                        c.symbolic_budget
                    );
                    if !c.note.is_empty() {
                        out += &format!("  note: {}\n", c.note);
                    }
                    out
                }
                Format::Text => chosen
                    .iter()
                    .map(|c| {
                        let tag = if c.expect == Expect::PrintedTypo { " [printed typo]" } else { "" };
                        format!("{:<44} {}{}\n", c.id, c.reference, tag)
                    })
                    .collect(),
            }
        }
        Topic::Sequences => {
            let lists = printed_sequences();
            let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
            match format {
                Format::Json => {
                    let v: Vec<_> = lists
                        .iter()
                        .map(|p| {
                            json!({
                                "id": p.id, "reference": p.reference, "s": p.s, "t": p.t, "d": p.d,
                                "first_n": p.first_n, "printed": p.printed, "holds": p.holds, "note": p.note,
                            })
                        })
                        .collect();
                    serde_json::to_string_pretty(&v).expect("json value") + "\n"
                }
                Format::Csv => {
                    let rows: Vec<Vec<String>> = lists
                        .iter()
                        .map(|p| {
                            vec![
                                p.id.into(),
                                p.s.to_string(),
                                p.t.to_string(),
                                p.d.to_string(),
                                p.first_n.to_string(),
                                join(p.printed),
                                p.holds.to_string(),
                            ]
                        })
                        .collect();
                    render::csv_rows(&["id", "s", "t", "d", "first_n", "printed", "holds"], &rows)?
                }
                Format::Text => lists
                    .iter()
                    .map(|p| {
                        let flag = if p.holds { "" } else { "  [printed list is wrong]" };
                        format!("{:<28} (s,t)=({},{}) d={} from n={}: {}{}\n", p.id, p.s, p.t, p.d, p.first_n, join(p.printed), flag)
                    })
                    .collect(),
            }
        }
        Topic::Specializations => match format {
            Format::Json => {
                let v: Vec<_> = SPECIALIZATIONS
                    .iter()
                    .map(|(n, st, d)| json!({"name": n, "st": st, "description": d}))
                    .collect();
                serde_json::to_string_pretty(&v).expect("json value") + "\n"
            }
            Format::Csv => {
                let rows: Vec<Vec<String>> =
                    SPECIALIZATIONS.iter().map(|(n, st, d)| vec![n.to_string(), st.to_string(), d.to_string()]).collect();
                render::csv_rows(&["name", "st", "description"], &rows)?
            }
            Format::Text => SPECIALIZATIONS.iter().map(|(n, st, d)| format!("{n:<12} (s,t) = {st:<14} {d}\n")).collect(),
        },
    };
    Ok(Output::ok(body))
}
