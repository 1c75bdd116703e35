//! Text formats for complexes and chains.
//!
//! Facet files hold an optional `vertices: l1 l2 ...` header fixing the vertex
//! order, then one facet per line as whitespace-separated labels. `#` starts a
//! comment and blank lines are skipped. The token `{}` on its own line is the
//! empty face, so `{∅}` can be written down. Without a header the order is
//! that of first appearance.
//!
//! Chain files hold one term per line: `<coeff> : v1 v2 ... vk+1`.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::chain::Chain;
use crate::complex::{make_labels, RelativeComplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTICES};
use crate::field::Field;

fn content(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut labels: Vec<String> = Vec::new();
    let mut position: HashMap<String, usize> = HashMap::new();
    let mut header = false;
    let mut facets: Vec<(usize, Vec<String>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = content(raw);
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vertices:") {
            if header || !facets.is_empty() {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: "the vertices header must come first and only once".into(),
                });
            }
            header = true;
            for l in rest.split_whitespace() {
                if position.insert(l.to_string(), labels.len()).is_some() {
                    return Err(Error::Parse {
                        line: i + 1,
                        msg: format!("duplicate vertex label `{l}`"),
                    });
                }
                labels.push(l.to_string());
            }
            continue;
        }
        let toks: Vec<String> = if line == "{}" {
            Vec::new()
        } else {
            line.split_whitespace().map(String::from).collect()
        };
        for t in &toks {
            if !position.contains_key(t) {
                if header {
                    return Err(Error::Parse {
                        line: i + 1,
                        msg: format!("unknown vertex label `{t}`"),
                    });
                }
                position.insert(t.clone(), labels.len());
                labels.push(t.clone());
            }
        }
        facets.push((i + 1, toks));
    }
    if labels.len() > MAX_VERTICES {
        return Err(Error::TooManyVertices(labels.len()));
    }
    let labels = make_labels(&labels)?;
    let mut faces = Vec::with_capacity(facets.len());
    for (line, toks) in facets {
        let mut f = Face::EMPTY;
        for t in &toks {
            let v = position[t];
            if f.contains(v) {
                return Err(Error::Parse {
                    line,
                    msg: format!("vertex `{t}` repeated in a facet"),
                });
            }
            f = f.with(v);
        }
        faces.push(f);
    }
    Ok(SimplicialComplex::from_facets(labels, faces))
}

/// Facet file with header; parses back to an equal complex.
pub fn dump_complex(c: &SimplicialComplex) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "vertices: {}", c.labels().join(" "));
    for &f in c.facets() {
        if f.is_empty() {
            out.push_str("{}\n");
        } else {
            let _ = writeln!(out, "{}", c.face_labels(f).join(" "));
        }
    }
    out
}

/// Parses a chain whose faces must lie in Δ ∖ Γ of the ambient pair.
pub fn parse_chain<F: Field>(field: &F, text: &str, ambient: &RelativeComplex) -> Result<Chain<F::Elem>> {
    let total = ambient.total();
    let mut degree: Option<i32> = None;
    let mut terms = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = content(raw);
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line: i + 1, msg };
        let (coeff, face) = line
            .split_once(':')
            .ok_or_else(|| err("expected `<coeff> : v1 v2 ...`".into()))?;
        let c = field.parse(coeff).map_err(err)?;
        let labels: Vec<&str> = face.split_whitespace().collect();
        let f = match total.face_from_labels(&labels) {
            Ok(f) => f,
            Err(Error::UnknownLabel(l)) => return Err(err(format!("unknown vertex label `{l}`"))),
            Err(e) => return Err(e),
        };
        if !total.contains(f) || ambient.removed().contains(f) {
            return Err(Error::NotAFace(format!("{{{}}}", labels.join(","))));
        }
        match degree {
            None => degree = Some(f.dim()),
            Some(d) if d != f.dim() => {
                return Err(Error::MixedDegree {
                    face: total.format_face(f),
                    got: f.dim(),
                    expected: d,
                })
            }
            _ => {}
        }
        terms.push((f, c));
    }
    let degree = degree.ok_or(Error::Parse {
        line: 0,
        msg: "chain file has no terms".into(),
    })?;
    Chain::from_terms(field, degree, terms)
}

/// One `coeff : labels` line per term, in face order.
pub fn format_chain<F: Field>(field: &F, c: &Chain<F::Elem>, complex: &SimplicialComplex) -> Vec<String> {
    c.terms()
        .iter()
        .map(|(&f, x)| format!("{} : {}", field.format(x), complex.face_labels(f).join(" ")))
        .collect()
}
