//! Triangulation files: the facet file of the subdivision, a line holding
//! `%`, then `face -> carrier` lines for every vertex and every facet of the
//! subdivision. Other carriers are the unions of their vertex carriers. The
//! base complex is the one generated by the facet carriers.

use std::collections::HashMap;
use std::path::Path;
use std::sync::Arc;

use super::Triangulation;
use crate::complex::io::{face_line, parse_face_line};
use crate::complex::{Face, LabelTable, SimplicialComplex};
use crate::error::{Error, Result};

pub const SEPARATOR: &str = "%";

pub fn write_triangulation_file(t: &Triangulation) -> String {
    let mut out = crate::complex::io::write_facet_file(t.total());
    out.push_str(SEPARATOR);
    out.push('\n');
    let mut lines: Vec<&Face> = t
        .total()
        .vertices()
        .into_iter()
        .map(Face::vertex)
        .filter_map(|v| t.carrier_map().get_key_value(&v).map(|(k, _)| k))
        .collect();
    lines.extend(t.total().facets().iter().filter(|f| f.len() != 1));
    for f in lines {
        out.push_str(&format!(
            "{} -> {}\n",
            face_line(f, t.total().labels()),
            face_line(t.carrier(f).expect("carrier is total"), t.base().labels())
        ));
    }
    out
}

pub fn parse_triangulation_file(text: &str) -> Result<Triangulation> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let mut total_table = LabelTable::new();
    let mut facets = Vec::new();
    let mut saw_separator = false;
    for (lineno, raw) in lines.by_ref() {
        if raw.trim() == SEPARATOR {
            saw_separator = true;
            break;
        }
        if let Some(f) = parse_face_line(raw, lineno, &mut total_table)? {
            facets.push(f);
        }
    }
    if !saw_separator {
        return Err(Error::Parse {
            line: text.lines().count(),
            message: format!("missing `{SEPARATOR}` separator"),
        });
    }
    let mut base_table = LabelTable::new();
    let mut given: Vec<(usize, Face, Face)> = Vec::new();
    for (lineno, raw) in lines {
        if raw.trim().is_empty() || raw.trim_start().starts_with('#') {
            continue;
        }
        let Some((lhs, rhs)) = raw.split_once("->") else {
            return Err(Error::Parse {
                line: lineno,
                message: "expected `face -> carrier`".into(),
            });
        };
        let before = total_table.len();
        let face = parse_face_line(lhs, lineno, &mut total_table)?;
        if total_table.len() != before {
            return Err(Error::Parse {
                line: lineno,
                message: "carrier line names a vertex that is not in the subdivision".into(),
            });
        }
        let carrier = parse_face_line(rhs, lineno, &mut base_table)?;
        match (face, carrier) {
            (Some(f), Some(c)) => given.push((lineno, f, c)),
            _ => {
                return Err(Error::Parse {
                    line: lineno,
                    message: "empty side in carrier line".into(),
                })
            }
        }
    }
    let total = SimplicialComplex::from_facets(facets, Arc::new(total_table));
    let given_map: HashMap<Face, Face> = given.iter().map(|(_, f, c)| (f.clone(), c.clone())).collect();
    for v in total.vertices() {
        if !given_map.contains_key(&Face::vertex(v)) {
            return Err(Error::InvalidCarrier(format!(
                "no carrier given for vertex {}",
                total.labels().label(v)
            )));
        }
    }
    let mut carrier = HashMap::new();
    for f in total.faces() {
        let c = f.iter().fold(Face::empty(), |acc, &v| acc.union(&given_map[&Face::vertex(v)]));
        carrier.insert(f.clone(), c);
    }
    for (lineno, f, c) in &given {
        match carrier.get(f) {
            Some(derived) if derived == c => {}
            Some(_) => {
                carrier.insert(f.clone(), c.clone());
            }
            None => {
                return Err(Error::Parse {
                    line: *lineno,
                    message: "carrier given for a set that is not a face".into(),
                })
            }
        }
    }
    let base_facets = total.facets().iter().map(|f| carrier[f].clone()).collect();
    let base = SimplicialComplex::from_facets(base_facets, Arc::new(base_table));
    Triangulation::new("file", base, total, carrier)
}

pub fn read_triangulation_file(path: impl AsRef<Path>) -> Result<Triangulation> {
    parse_triangulation_file(&std::fs::read_to_string(path)?)
}
