//! Plain-text facet files.
//!
//! One facet per line as whitespace-separated vertex labels. Lines starting
//! with `#` are comments and blank lines are skipped. The single token `@`
//! stands for the empty face, so a file whose only facet line is `@` is the
//! empty complex `{∅}`, and a file with no facet lines is the void complex.

use std::path::Path;
use std::sync::Arc;

use super::{Face, LabelTable, SimplicialComplex};
use crate::error::{Error, Result};

pub const EMPTY_FACE_TOKEN: &str = "@";

/// Parses facet lines from an iterator of `(line_number, text)` pairs.
pub(crate) fn parse_facet_lines<'a, I>(lines: I, table: &mut LabelTable) -> Result<Vec<Face>>
where
    I: IntoIterator<Item = (usize, &'a str)>,
{
    let mut facets = Vec::new();
    for (lineno, raw) in lines {
        if let Some(face) = parse_face_line(raw, lineno, table)? {
            facets.push(face);
        }
    }
    Ok(facets)
}

pub(crate) fn parse_face_line(raw: &str, lineno: usize, table: &mut LabelTable) -> Result<Option<Face>> {
    let line = raw.trim();
    if line.is_empty() || line.starts_with('#') {
        return Ok(None);
    }
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.contains(&EMPTY_FACE_TOKEN) {
        if tokens.len() > 1 {
            return Err(Error::Parse {
                line: lineno,
                message: "`@` must appear alone".into(),
            });
        }
        return Ok(Some(Face::empty()));
    }
    let ids = tokens.iter().map(|t| table.intern(*t)).collect();
    Face::new(ids).map(Some).map_err(|e| Error::Parse {
        line: lineno,
        message: e.to_string(),
    })
}

pub fn parse_facet_file(text: &str) -> Result<SimplicialComplex> {
    let mut table = LabelTable::new();
    let facets = parse_facet_lines(text.lines().enumerate().map(|(i, l)| (i + 1, l)), &mut table)?;
    Ok(SimplicialComplex::from_facets(facets, Arc::new(table)))
}

pub fn read_facet_file(path: impl AsRef<Path>) -> Result<SimplicialComplex> {
    parse_facet_file(&std::fs::read_to_string(path)?)
}

pub(crate) fn face_line(face: &Face, labels: &LabelTable) -> String {
    if face.is_empty() {
        return EMPTY_FACE_TOKEN.to_string();
    }
    face.iter().map(|&v| labels.label(v)).collect::<Vec<_>>().join(" ")
}

pub fn write_facet_file(complex: &SimplicialComplex) -> String {
    let mut out = String::new();
    for f in complex.facets() {
        out.push_str(&face_line(f, complex.labels()));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::generators::*;

    #[test]
    fn degenerate_files() {
        assert!(parse_facet_file("").unwrap().is_void());
        assert!(parse_facet_file("# only a comment\n\n").unwrap().is_void());
        assert!(parse_facet_file("@\n").unwrap().is_empty_complex());
        assert!(parse_facet_file("a @\n").is_err());
        assert!(matches!(parse_facet_file("a b a\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn round_trip() {
        for c in [example_5_2_ball(), cross_polytope_boundary(3), simplex(0), path(3)] {
            let back = parse_facet_file(&write_facet_file(&c)).unwrap();
            assert_eq!(back.labelled_facets(), c.labelled_facets());
        }
    }
}
