use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::parse::parse_relations;
use super::poly::{Monomial, Polynomial};
use super::presentation::{Presentation, Variable};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Self::Text),
            "latex" => Ok(Self::Latex),
            "json" | "json-doc" => Ok(Self::Json),
            other => Err(Error::Input(format!("unknown format `{other}`"))),
        }
    }
}

/// Serialized form of a presentation. Polynomial relations are strings in the
/// relation grammar so they parse back through [`parse_relations`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub variables: Vec<Variable>,
    pub monomial_relations: Vec<Vec<usize>>,
    pub polynomial_relations: Vec<String>,
}

pub fn render(p: &Presentation, format: Format) -> String {
    match format {
        Format::Text => render_text(p),
        Format::Latex => render_latex(p),
        Format::Json => serde_json::to_string_pretty(&to_doc(p)).expect("plain data"),
    }
}

/// `Z[x1,x2,y1]/(2*x1-3*x2, x1-x2+2*y1, x1*x2)`: polynomial relations first,
/// then monomial ones. No relations renders as `/(0)`; no variables as `Z`.
pub fn render_text(p: &Presentation) -> String {
    let names = p.names();
    if names.is_empty() && !p.has_relations() {
        return "Z".into();
    }
    let rels = relation_strings(p, |q| poly_text(q, &names));
    format!("Z[{}]/({})", names.join(","), rels.join(", "))
}

pub fn render_latex(p: &Presentation) -> String {
    let names: Vec<String> = p.names().iter().map(|n| latex_name(n)).collect();
    if names.is_empty() && !p.has_relations() {
        return "\\mathbb{Z}".into();
    }
    let rels = relation_strings(p, |q| poly_latex(q, &names));
    format!("\\mathbb{{Z}}[{}]/({})", names.join(","), rels.join(", "))
}

fn relation_strings(p: &Presentation, f: impl Fn(&Polynomial) -> String) -> Vec<String> {
    let n = p.num_variables();
    let mut out: Vec<String> = p.polynomial_relations().iter().map(&f).collect();
    out.extend(
        p.monomial_relations()
            .iter()
            .map(|m| f(&Polynomial::squarefree(n, m))),
    );
    if out.is_empty() {
        out.push("0".into());
    }
    out
}

pub fn to_doc(p: &Presentation) -> PresentationDoc {
    let names = p.names();
    PresentationDoc {
        variables: p.variables().to_vec(),
        monomial_relations: p.monomial_relations().to_vec(),
        polynomial_relations: p
            .polynomial_relations()
            .iter()
            .map(|q| poly_text(q, &names))
            .collect(),
    }
}

pub fn from_doc(doc: &PresentationDoc) -> Result<Presentation> {
    if let Some(v) = doc.variables.iter().find(|v| v.degree != 1) {
        return Err(Error::Input(format!(
            "variable `{}` has degree {}; only degree 1 is supported",
            v.name, v.degree
        )));
    }
    let names: Vec<String> = doc.variables.iter().map(|v| v.name.clone()).collect();
    let mut polys = Vec::new();
    for rel in &doc.polynomial_relations {
        polys.extend(parse_relations(rel, &names)?);
    }
    Presentation::new(names, doc.monomial_relations.clone(), polys)
}

/// Renders one polynomial in the relation grammar, e.g. `24*y1^2` or `2*x1-3*x2`.
pub fn poly_text(p: &Polynomial, names: &[&str]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (m, c)) in p.terms().enumerate() {
        write_sign(&mut s, c, k == 0, "+", "-");
        let mono = monomial_text(m, names, "*", |b, e| format!("{b}^{e}"));
        write_term(&mut s, &c.abs(), &mono, "*");
    }
    s
}

fn poly_latex(p: &Polynomial, names: &[String]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut s = String::new();
    for (k, (m, c)) in p.terms().enumerate() {
        write_sign(&mut s, c, k == 0, "+", "-");
        let mono = monomial_text(m, &refs, "", |b, e| format!("{b}^{{{e}}}"));
        write_term(&mut s, &c.abs(), &mono, "");
    }
    s
}

fn write_sign(s: &mut String, c: &BigInt, first: bool, plus: &str, minus: &str) {
    if c.is_negative() {
        s.push_str(minus);
    } else if !first {
        s.push_str(plus);
    }
}

fn write_term(s: &mut String, abs: &BigInt, mono: &str, times: &str) {
    if mono.is_empty() {
        let _ = write!(s, "{abs}");
    } else if abs.is_one() {
        s.push_str(mono);
    } else {
        let _ = write!(s, "{abs}{times}{mono}");
    }
}

fn monomial_text(
    m: &Monomial,
    names: &[&str],
    times: &str,
    power: impl Fn(&str, u32) -> String,
) -> String {
    let factors: Vec<String> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                names[i].to_string()
            } else {
                power(names[i], e)
            }
        })
        .collect();
    factors.join(times)
}

/// `x12` becomes `x_{12}`; names without a numeric suffix are kept.
fn latex_name(name: &str) -> String {
    let stem = name.trim_end_matches(|c: char| c.is_ascii_digit());
    if stem.is_empty() || stem.len() == name.len() {
        name.to_string()
    } else {
        format!("{stem}_{{{}}}", &name[stem.len()..])
    }
}
