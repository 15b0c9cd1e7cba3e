//! Plain-text formats.
//!
//! A subspace block is `k` lines of `n` element codes. A plane set is a
//! header `q n k count` followed by `count` blocks separated by blank lines.
//! A Gram file is a header `q n` followed by `n` rows of `n` codes. Readers
//! skip blank lines and lines starting with `#`.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::gf::{Field, Matrix};
use crate::singsets::{PlaneSet, WitnessF};
use crate::subspace::Subspace;

fn write_rows(out: &mut String, m: &Matrix) {
    for row in m.row_iter() {
        let codes: Vec<String> = row.iter().map(|e| e.code().to_string()).collect();
        out.push_str(&codes.join(" "));
        out.push('\n');
    }
}

/// The canonical basis, one row per line.
pub fn write_subspace(s: &Subspace) -> String {
    let mut out = String::new();
    write_rows(&mut out, s.basis());
    out
}

pub fn write_plane_set(x: &PlaneSet) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {} {} {}", x.q(), x.n(), x.k(), x.len());
    for (i, s) in x.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        write_rows(&mut out, s.basis());
    }
    out
}

/// One block per domain element s: the rows of s, then the rows of F(s).
/// Blocks are separated by blank lines.
pub fn write_witness(w: &WitnessF) -> String {
    let mut out = String::new();
    for (i, (s, fs)) in w.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        write_rows(&mut out, s.basis());
        write_rows(&mut out, fs.basis());
    }
    out
}

pub fn write_gram(m: &Matrix) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", m.field().order(), m.rows());
    write_rows(&mut out, m);
    out
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_numbers(line: usize, text: &str, expected: usize, what: &str) -> Result<Vec<u32>> {
    let nums = text
        .split_whitespace()
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| Error::parse(line, format!("`{t}` is not a nonnegative integer")))
        })
        .collect::<Result<Vec<_>>>()?;
    if nums.len() != expected {
        return Err(Error::parse(
            line,
            format!("{what}: expected {expected} integers, found {}", nums.len()),
        ));
    }
    Ok(nums)
}

fn parse_field(line: usize, q: u32) -> Result<Field> {
    Field::with_order(q).map_err(|e| Error::parse(line, e.to_string()))
}

fn parse_row(field: &Field, line: usize, text: &str, n: usize) -> Result<Vec<u32>> {
    let row = parse_numbers(line, text, n, "row")?;
    if let Some(&c) = row.iter().find(|&&c| c as usize >= field.order()) {
        return Err(Error::parse(
            line,
            format!("element code {c} out of range for GF({})", field.order()),
        ));
    }
    Ok(row)
}

pub fn parse_plane_set(text: &str) -> Result<PlaneSet> {
    let mut lines = data_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header `q n k count`"))?;
    let h = parse_numbers(hl, header, 4, "header `q n k count`")?;
    let field = parse_field(hl, h[0])?;
    let (n, k, count) = (h[1] as usize, h[2] as usize, h[3] as usize);
    if k > n {
        return Err(Error::parse(hl, format!("k={k} exceeds n={n}")));
    }
    let mut set = PlaneSet::new(&field, n, k)?;
    if k == 0 {
        if count > 1 {
            return Err(Error::parse(hl, "only one 0-dimensional plane exists"));
        }
        if count == 1 {
            set.insert(Subspace::zero(&field, n))?;
        }
    }
    let rows: Vec<(usize, &str)> = lines.collect();
    if k > 0 && rows.len() != count * k {
        return Err(Error::parse(
            rows.last().map_or(hl, |r| r.0),
            format!("expected {count} blocks of {k} rows, found {} rows", rows.len()),
        ));
    }
    if k == 0 && !rows.is_empty() {
        return Err(Error::parse(rows[0].0, "unexpected rows for k=0"));
    }
    for block in rows.chunks(k.max(1)).filter(|_| k > 0) {
        let codes = block
            .iter()
            .map(|&(ln, t)| parse_row(&field, ln, t, n))
            .collect::<Result<Vec<_>>>()?;
        let s = Subspace::from_matrix(&Matrix::from_codes(&field, n, &codes)?);
        let ln = block[0].0;
        if s.dim() != k {
            return Err(Error::parse(ln, format!("rows span a {}-dimensional space, not {k}", s.dim())));
        }
        if !set.insert(s)? {
            return Err(Error::parse(ln, "duplicate plane"));
        }
    }
    Ok(set)
}

pub fn parse_gram(text: &str) -> Result<Matrix> {
    let mut lines = data_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header `q n`"))?;
    let h = parse_numbers(hl, header, 2, "header `q n`")?;
    let field = parse_field(hl, h[0])?;
    let n = h[1] as usize;
    let rows: Vec<(usize, &str)> = lines.collect();
    if rows.len() != n {
        return Err(Error::parse(
            rows.last().map_or(hl, |r| r.0),
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    let codes = rows
        .iter()
        .map(|&(ln, t)| parse_row(&field, ln, t, n))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_codes(&field, n, &codes)
}
