//! Text formats for codes, matrices, field literals, family literals,
//! and r ranges.
//!
//! A code file is a field header, a shape line, and the generator rows:
//!
//! ```text
//! q 3^1
//! rows 2 cols 4
//! 1 0 1 2
//! 0 1 -1 1
//! ```
//!
//! Blank lines and lines starting with `#` are skipped. Entries are
//! element numbers 0..q-1; prime fields also accept signed literals,
//! which reduce mod p. Matrix files use the same grammar. Codes are
//! canonicalized on read, so writing and re-reading a code is exact.

use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::codes::LinearCode;
use crate::families::{rm_code, rs_code};
use crate::gfield::{Field, FieldElement};
use crate::linalg::Matrix;
use crate::{Error, Result};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Accepts `p^m` or a plain prime-power order.
pub fn parse_field_spec(s: &str) -> Result<Arc<Field>> {
    let field = if let Some((p, m)) = s.split_once('^') {
        let p: u32 = p
            .parse()
            .map_err(|_| parse_err(format!("bad characteristic in field {s:?}")))?;
        let m: u32 = m
            .parse()
            .map_err(|_| parse_err(format!("bad extension degree in field {s:?}")))?;
        Field::new(p, m)?
    } else {
        let q: u32 = s
            .parse()
            .map_err(|_| parse_err(format!("bad field order {s:?}")))?;
        Field::from_order(q)?
    };
    Ok(Arc::new(field))
}

/// Meaningful lines of a file: comments and blanks removed.
fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn parse_element(field: &Field, token: &str) -> Result<FieldElement> {
    if field.m() == 1 {
        let v: i64 = token
            .parse()
            .map_err(|_| parse_err(format!("bad element literal {token:?}")))?;
        field.elem_signed(v)
    } else {
        let v: u32 = token.parse().map_err(|_| {
            parse_err(format!(
                "bad element literal {token:?} (extension fields take element numbers 0..{})",
                field.q() - 1
            ))
        })?;
        field.elem(v)
    }
}

fn parse_matrix_body(text: &str) -> Result<Matrix> {
    let mut lines = content_lines(text);
    let header = lines.next().ok_or_else(|| parse_err("empty file"))?;
    let field = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["q", spec] => parse_field_spec(spec)?,
        _ => return Err(parse_err(format!("expected `q <p>^<m>`, got {header:?}"))),
    };
    let shape = lines
        .next()
        .ok_or_else(|| parse_err("missing `rows <r> cols <c>` line"))?;
    let (rows, cols) = match shape.split_whitespace().collect::<Vec<_>>()[..] {
        ["rows", r, "cols", c] => (
            r.parse::<usize>()
                .map_err(|_| parse_err(format!("bad row count {r:?}")))?,
            c.parse::<usize>()
                .map_err(|_| parse_err(format!("bad column count {c:?}")))?,
        ),
        _ => {
            return Err(parse_err(format!(
                "expected `rows <r> cols <c>`, got {shape:?}"
            )))
        }
    };
    if cols == 0 {
        return Err(parse_err("a matrix needs at least one column"));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for line in lines {
        for token in line.split_whitespace() {
            data.push(parse_element(&field, token).map_err(|e| match e {
                Error::Parse(m) => Error::Parse(m),
                other => parse_err(format!("bad entry {token:?}: {other}")),
            })?);
        }
    }
    if data.len() != rows * cols {
        return Err(parse_err(format!(
            "expected {} entries for a {rows} x {cols} matrix, got {}",
            rows * cols,
            data.len()
        )));
    }
    Matrix::new(field, rows, cols, data)
}

/// Reads a generator matrix and canonicalizes it into a code.
pub fn parse_code_text(text: &str) -> Result<LinearCode> {
    Ok(LinearCode::from_generator(&parse_matrix_body(text)?))
}

/// Reads a matrix verbatim (no canonicalization).
pub fn parse_matrix_text(text: &str) -> Result<Matrix> {
    parse_matrix_body(text)
}

fn render_header(field: &Field, rows: usize, cols: usize) -> String {
    format!("q {}^{}\nrows {rows} cols {cols}\n", field.p(), field.m())
}

fn render_rows(m: &Matrix) -> String {
    let mut out = String::new();
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|e| e.value().to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn render_code(c: &LinearCode) -> String {
    let gen = c.generator();
    render_header(c.field(), gen.rows(), gen.cols()) + &render_rows(gen)
}

pub fn render_matrix(m: &Matrix) -> String {
    render_header(m.field(), m.rows(), m.cols()) + &render_rows(m)
}

/// Builds a code from a family literal: `rs:q=<p^m>,n=<n>,k=<k>` or
/// `rm:q=<p^m>,nu=<nu>,m=<m>`.
pub fn parse_family(s: &str) -> Result<LinearCode> {
    let (kind, rest) = s
        .split_once(':')
        .ok_or_else(|| parse_err(format!("family literal {s:?} has no `kind:` prefix")))?;
    let mut pairs = std::collections::BTreeMap::new();
    for item in rest.split(',') {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| parse_err(format!("bad `key=value` item {item:?} in {s:?}")))?;
        if pairs.insert(key, value).is_some() {
            return Err(parse_err(format!("duplicate key {key:?} in {s:?}")));
        }
    }
    let mut take = |key: &str| -> Result<&str> {
        pairs
            .remove(key)
            .ok_or_else(|| parse_err(format!("family literal {s:?} is missing {key}=")))
    };
    let field = parse_field_spec(take("q")?)?;
    let code = match kind {
        "rs" => {
            let n: usize = take("n")?
                .parse()
                .map_err(|_| parse_err(format!("bad n in {s:?}")))?;
            let k: usize = take("k")?
                .parse()
                .map_err(|_| parse_err(format!("bad k in {s:?}")))?;
            rs_code(field, n, k)?
        }
        "rm" => {
            let nu: i64 = take("nu")?
                .parse()
                .map_err(|_| parse_err(format!("bad nu in {s:?}")))?;
            let m: usize = take("m")?
                .parse()
                .map_err(|_| parse_err(format!("bad m in {s:?}")))?;
            rm_code(field, nu, m)?
        }
        other => {
            return Err(parse_err(format!(
                "unknown family {other:?}, expected rs or rm"
            )))
        }
    };
    if let Some(extra) = pairs.keys().next() {
        return Err(parse_err(format!("unexpected key {extra:?} in {s:?}")));
    }
    Ok(code)
}

/// An inclusive r range: `3` or `1..5`.
pub fn parse_r_range(s: &str) -> Result<(usize, usize)> {
    let parse_one = |t: &str| -> Result<usize> {
        t.parse()
            .map_err(|_| parse_err(format!("bad GHW index {t:?}")))
    };
    if let Some((lo, hi)) = s.split_once("..") {
        let (lo, hi) = (parse_one(lo)?, parse_one(hi)?);
        if lo > hi {
            return Err(parse_err(format!("empty range {s:?}")));
        }
        Ok((lo, hi))
    } else {
        let r = parse_one(s)?;
        Ok((r, r))
    }
}

/// Short stable digest of the command inputs.
pub fn digest(parts: &[&str]) -> String {
    let mut hasher = Sha256::new();
    for p in parts {
        hasher.update(p.as_bytes());
        hasher.update([0u8]);
    }
    let bytes = hasher.finalize();
    bytes[..8].iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_files_round_trip_to_the_canonical_form() {
        let text = "# a ternary code\nq 3^1\nrows 2 cols 4\n1 0 1 2\n0 1 -1 1\n";
        let code = parse_code_text(text).unwrap();
        assert_eq!((code.dim(), code.n()), (2, 4));
        let rendered = render_code(&code);
        let again = parse_code_text(&rendered).unwrap();
        assert_eq!(code, again);
        assert_eq!(render_code(&again), rendered);
    }

    #[test]
    fn extension_fields_reject_signed_literals() {
        let ok = "q 2^2\nrows 1 cols 3\n0 2 3\n";
        assert!(parse_code_text(ok).is_ok());
        let bad = "q 2^2\nrows 1 cols 3\n0 -1 3\n";
        assert!(matches!(parse_code_text(bad), Err(Error::Parse(_))));
    }

    #[test]
    fn malformed_files_fail_with_parse_errors() {
        for text in [
            "",
            "q 6^1\nrows 1 cols 1\n0\n",
            "rows 1 cols 1\n0\n",
            "q 3^1\nrows 2 cols 2\n1 0 0\n",
            "q 2^2\nrows 1 cols 2\n1 7\n",
            "q 3^1\ncols 2 rows 1\n1 0\n",
        ] {
            assert!(parse_code_text(text).is_err(), "{text:?}");
        }
    }

    #[test]
    fn matrices_are_read_verbatim() {
        // A plain order in the header normalizes to `p^m` on output.
        let text = "q 4\nrows 2 cols 2\n2 2\n0 1\n";
        let m = parse_matrix_text(text).unwrap();
        assert_eq!(m.get(0, 0).value(), 2);
        assert_eq!(render_matrix(&m), "q 2^2\nrows 2 cols 2\n2 2\n0 1\n");
    }

    #[test]
    fn family_literals_build_the_expected_codes() {
        let rs = parse_family("rs:q=2^2,n=4,k=2").unwrap();
        assert_eq!((rs.n(), rs.dim()), (4, 2));
        let rm = parse_family("rm:q=3,nu=1,m=2").unwrap();
        assert_eq!((rm.n(), rm.dim()), (9, 3));
        let zero = parse_family("rm:q=2,nu=-1,m=2").unwrap();
        assert!(zero.is_zero());
        for bad in [
            "rs:q=4,n=4",
            "rs:n=4,k=2",
            "rs:q=4,n=4,k=2,x=1",
            "rq:q=4,n=4,k=2",
            "rs",
            "rs:q=4,n=five,k=2",
            "rs:q=4,q=4,n=4,k=2",
        ] {
            assert!(matches!(parse_family(bad), Err(Error::Parse(_))), "{bad}");
        }
    }

    #[test]
    fn r_ranges_parse_inclusively() {
        assert_eq!(parse_r_range("3").unwrap(), (3, 3));
        assert_eq!(parse_r_range("1..5").unwrap(), (1, 5));
        assert!(parse_r_range("5..1").is_err());
        assert!(parse_r_range("x").is_err());
    }

    #[test]
    fn digests_are_stable_and_input_sensitive() {
        let a = digest(&["one", "two"]);
        assert_eq!(a.len(), 16);
        assert_eq!(a, digest(&["one", "two"]));
        assert_ne!(a, digest(&["onet", "wo"]));
    }
}
