//! Rendering of combinatorial and algebraic objects as text, CSV or JSON.

use clap::ValueEnum;
use serde_json::{json, Value};

use coinv_core::characters::frobenius_formula;
use coinv_core::combinat::{enumerate_tail_positive, good_monomials, staircases};
use coinv_core::rings::RingSpec;
use coinv_core::schubert::ExplicitGroebnerBasis;
use coinv_core::tesler::{tesler_csv, tesler_table, TeslerIndexSet};
use coinv_core::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Object {
    Words,
    Staircases,
    Goodmons,
    Gb,
    Frobenius,
    Tesler,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string() + "\n").collect()
}

fn spaced(v: &[u32]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn render(object: Object, spec: &RingSpec, format: Format) -> Result<String> {
    let (n, k, r) = (spec.n, spec.k, spec.r);
    let header = json!({"n": n, "k": k, "r": r});
    let with_header = |key: &str, body: Value| {
        let mut v = header.clone();
        v[key] = body;
        pretty(&v)
    };
    Ok(match object {
        Object::Words => {
            let words = enumerate_tail_positive(n, k, r)?;
            match format {
                Format::Text => lines(&words),
                Format::Csv => {
                    "word,inv,maj\n".to_string() + &lines(words.iter().map(|w| format!("{w},{},{}", w.inv(), w.maj())))
                }
                Format::Json => with_header("words", json!(words.iter().map(|w| w.to_string()).collect::<Vec<_>>())),
            }
        }
        Object::Staircases => {
            let all = staircases(n, k, r)?;
            match format {
                Format::Text => lines(all.iter().map(|s| format!("{s:?}"))),
                Format::Csv => {
                    let cols: Vec<String> = (1..=n).map(|i| format!("d{i}")).collect();
                    cols.join(",") + "\n" + &lines(all.iter().map(|s| spaced(s).replace(' ', ",")))
                }
                Format::Json => with_header("staircases", json!(all)),
            }
        }
        Object::Goodmons => {
            let mons = good_monomials(n, k, r)?;
            match format {
                Format::Text => lines(&mons),
                Format::Csv => {
                    "monomial,degree,exponents\n".to_string()
                        + &lines(
                            mons.iter()
                                .map(|m| format!("{m},{},{}", m.degree(), spaced(&m.exponents()))),
                        )
                }
                Format::Json => with_header(
                    "monomials",
                    json!(mons.iter().map(|m| m.exponents()).collect::<Vec<_>>()),
                ),
            }
        }
        Object::Gb => {
            let gb = ExplicitGroebnerBasis::new(spec)?;
            let leads = gb.expected_leading_terms()?;
            let kinds = gb
                .truncated_h
                .iter()
                .enumerate()
                .map(|(i, p)| ("h".to_string(), format!("{}", i + 1), p))
                .chain(gb.characters.iter().map(|(s, p)| {
                    let s: Vec<String> = s.iter().map(|x| x.to_string()).collect();
                    ("kappa".to_string(), s.join(" "), p)
                }));
            let rows: Vec<(String, String, String, String)> = kinds
                .zip(&leads)
                .map(|((kind, index, p), lead)| (kind, index, lead.to_string(), p.to_string()))
                .collect();
            match format {
                Format::Text => lines(rows.iter().map(|(_, _, _, p)| p)),
                Format::Csv => {
                    "kind,index,leading_term,polynomial\n".to_string()
                        + &lines(rows.iter().map(|(a, b, c, d)| format!("{a},{b},{c},{d}")))
                }
                Format::Json => with_header(
                    "elements",
                    json!(rows
                        .iter()
                        .map(|(a, b, c, d)| json!({"kind": a, "index": b, "leading_term": c, "polynomial": d}))
                        .collect::<Vec<_>>()),
                ),
            }
        }
        Object::Frobenius => {
            let f = frobenius_formula(n, k, r)?;
            match format {
                Format::Text => format!("{f}\n"),
                Format::Csv => {
                    let mut out = String::from("partition,q_degree,coefficient\n");
                    for (lambda, c) in f.terms() {
                        for (d, coeff) in c.q_coefficients().iter().enumerate() {
                            if *coeff != 0.into() {
                                out.push_str(&format!("{},{d},{coeff}\n", spaced(lambda.parts())));
                            }
                        }
                    }
                    out
                }
                Format::Json => with_header("frobenius", f.to_json()),
            }
        }
        Object::Tesler => {
            let rows = tesler_table(n, k, r, TeslerIndexSet::Cumulative)?;
            match format {
                Format::Text => lines(rows.iter().map(|row| format!("{}: {}", row.alpha, row.at_t_zero))),
                Format::Csv => tesler_csv(&rows),
                Format::Json => with_header(
                    "rows",
                    json!(rows
                        .iter()
                        .map(|row| json!({
                            "alpha": row.alpha.parts(),
                            "matrices": row.matrices,
                            "tes_qt": row.bivariate.to_json(),
                            "tes_q0": row.at_t_zero.to_json(),
                        }))
                        .collect::<Vec<_>>()),
                ),
            }
        }
    })
}
