//! Plain-text file formats for spreads, check matrices, explicit codes, and
//! coset recipes.
//!
//! All four formats share one shape: a single header line of decimal
//! integers, then fixed-width rows of single-character digits (0-9 then a-z,
//! so radices up to 36). Parse errors carry 1-based line numbers.
//!
//! - spread:  `p t m n lambda mu`, then n rows of t*m digits (block i, row
//!   vector j at columns j*m .. (j+1)*m)
//! - matrix:  `p t n m`, then m rows of n*t digits
//! - code:    `q n`, then one row of n digits per codeword
//! - recipe:  `p t n m kappa`, then m matrix rows, then kappa syndrome rows
//!   of m digits

use crate::codes::{word_from_index, word_index, CheckMatrix, CodeSet};
use crate::digits::{digit_char, digit_val};
use crate::ff::{is_prime, FpMat, FpVec};
use crate::multispread::{BlockTuple, Multispread};
use crate::Error;
use std::collections::HashSet;

/// An unverified spread file: header claims (lambda, mu), blocks are as
/// listed. Verification is a separate step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpreadDoc {
    pub p: u32,
    pub t: usize,
    pub m: usize,
    pub lambda: u64,
    pub mu: u64,
    pub blocks: Vec<BlockTuple>,
}

/// A parsed coset recipe: a check matrix plus the syndromes of the cosets
/// whose union forms the code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecipeDoc {
    pub check: CheckMatrix,
    pub syndromes: Vec<FpVec>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn radix_guard(radix: u64, line: usize) -> Result<(), Error> {
    if radix > 36 {
        Err(parse_err(
            line,
            format!("radix {radix} does not fit the single-character digit format (max 36)"),
        ))
    } else {
        Ok(())
    }
}

/// Non-blank lines with their 1-based numbers; blank lines are tolerated
/// only after the last non-blank one.
fn content_lines(text: &str) -> Result<Vec<(usize, &str)>, Error> {
    let mut lines = Vec::new();
    let mut blank_at: Option<usize> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end();
        if line.is_empty() {
            blank_at.get_or_insert(i + 1);
        } else {
            if let Some(b) = blank_at {
                return Err(parse_err(b, "unexpected blank line"));
            }
            lines.push((i + 1, line));
        }
    }
    Ok(lines)
}

fn parse_header(line: &str, lineno: usize, names: &[&str]) -> Result<Vec<u64>, Error> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != names.len() {
        return Err(parse_err(
            lineno,
            format!(
                "header needs {} fields ({}), found {}",
                names.len(),
                names.join(" "),
                fields.len()
            ),
        ));
    }
    fields
        .iter()
        .zip(names)
        .map(|(f, name)| {
            f.parse::<u64>()
                .map_err(|_| parse_err(lineno, format!("{name} must be a nonnegative integer, found {f:?}")))
        })
        .collect()
}

fn parse_digit_row(line: &str, lineno: usize, width: usize, radix: u32) -> Result<FpVec, Error> {
    let chars: Vec<char> = line.chars().collect();
    if chars.len() != width {
        return Err(parse_err(
            lineno,
            format!("expected {width} digits, found {}", chars.len()),
        ));
    }
    chars
        .into_iter()
        .map(|c| match digit_val(c) {
            Some(v) if v < radix => Ok(v),
            _ => Err(parse_err(lineno, format!("invalid digit {c:?} for radix {radix}"))),
        })
        .collect()
}

fn prime_header(p: u64, lineno: usize) -> Result<u32, Error> {
    u32::try_from(p)
        .ok()
        .filter(|&p| is_prime(p))
        .ok_or_else(|| parse_err(lineno, format!("p = {p} is not prime")))
}

fn positive(value: u64, name: &str, lineno: usize) -> Result<usize, Error> {
    usize::try_from(value)
        .ok()
        .filter(|&v| v >= 1)
        .ok_or_else(|| parse_err(lineno, format!("{name} must be at least 1")))
}

fn expect_rows<'a>(
    lines: &'a [(usize, &'a str)],
    from: usize,
    count: usize,
    what: &str,
) -> Result<&'a [(usize, &'a str)], Error> {
    let have = lines.len().saturating_sub(from);
    if have < count {
        let last = lines.last().map_or(1, |(n, _)| n + 1);
        return Err(parse_err(last, format!("expected {count} {what} rows, found {have}")));
    }
    if have > count {
        return Err(parse_err(lines[from + count].0, format!("unexpected extra row after {count} {what} rows")));
    }
    Ok(&lines[from..from + count])
}

pub fn parse_spread(text: &str) -> Result<SpreadDoc, Error> {
    let lines = content_lines(text)?;
    let (hline, header) = lines
        .first()
        .ok_or_else(|| parse_err(1, "missing header line"))?;
    let h = parse_header(header, *hline, &["p", "t", "m", "n", "lambda", "mu"])?;
    let p = prime_header(h[0], *hline)?;
    radix_guard(p as u64, *hline)?;
    let t = positive(h[1], "t", *hline)?;
    let m = positive(h[2], "m", *hline)?;
    let n = positive(h[3], "n", *hline)?;
    let rows = expect_rows(&lines, 1, n, "block")?;
    let mut blocks = Vec::with_capacity(n);
    for (lineno, line) in rows {
        let digits = parse_digit_row(line, *lineno, t * m, p)?;
        let vectors = digits.chunks(m).map(|c| c.to_vec()).collect();
        blocks.push(BlockTuple::new(vectors).expect("validated dimensions"));
    }
    Ok(SpreadDoc {
        p,
        t,
        m,
        lambda: h[4],
        mu: h[5],
        blocks,
    })
}

pub fn format_spread(ms: &Multispread) -> Result<String, Error> {
    radix_guard(ms.p() as u64, 1)?;
    let mut out = format!(
        "{} {} {} {} {} {}\n",
        ms.p(),
        ms.t(),
        ms.m(),
        ms.n(),
        ms.lambda(),
        ms.mu()
    );
    for block in ms.blocks() {
        for v in block.vectors() {
            for &c in v {
                out.push(digit_char(c).expect("entry below radix 36"));
            }
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn parse_matrix(text: &str) -> Result<CheckMatrix, Error> {
    let lines = content_lines(text)?;
    let (hline, header) = lines
        .first()
        .ok_or_else(|| parse_err(1, "missing header line"))?;
    let h = parse_header(header, *hline, &["p", "t", "n", "m"])?;
    let p = prime_header(h[0], *hline)?;
    radix_guard(p as u64, *hline)?;
    let t = positive(h[1], "t", *hline)?;
    let n = positive(h[2], "n", *hline)?;
    let m = positive(h[3], "m", *hline)?;
    let rows = expect_rows(&lines, 1, m, "matrix")?;
    let mut mat_rows = Vec::with_capacity(m);
    for (lineno, line) in rows {
        mat_rows.push(parse_digit_row(line, *lineno, n * t, p)?);
    }
    let mat = FpMat::from_rows(mat_rows).expect("validated dimensions");
    CheckMatrix::from_parts(mat, p, t, n)
}

pub fn format_matrix(cm: &CheckMatrix) -> Result<String, Error> {
    radix_guard(cm.p() as u64, 1)?;
    let mut out = format!("{} {} {} {}\n", cm.p(), cm.t(), cm.n(), cm.m());
    for r in 0..cm.m() {
        for &c in cm.matrix().row(r) {
            out.push(digit_char(c).expect("entry below radix 36"));
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn parse_code(text: &str) -> Result<CodeSet, Error> {
    let lines = content_lines(text)?;
    let (hline, header) = lines
        .first()
        .ok_or_else(|| parse_err(1, "missing header line"))?;
    let h = parse_header(header, *hline, &["q", "n"])?;
    let q = h[0];
    if q < 2 {
        return Err(parse_err(*hline, "q must be at least 2"));
    }
    radix_guard(q, *hline)?;
    let n = positive(h[1], "n", *hline)?;
    if q.checked_pow(n as u32).is_none() {
        return Err(parse_err(*hline, format!("q^n = {q}^{n} overflows vertex indexing")));
    }
    let mut words = Vec::with_capacity(lines.len() - 1);
    let mut seen = HashSet::new();
    for (lineno, line) in &lines[1..] {
        let digits = parse_digit_row(line, *lineno, n, q as u32)?;
        let idx = word_index(q, &digits);
        if !seen.insert(idx) {
            return Err(parse_err(*lineno, format!("duplicate codeword {line}")));
        }
        words.push(idx);
    }
    CodeSet::from_words(q, n, words)
}

pub fn format_code(code: &CodeSet) -> Result<String, Error> {
    radix_guard(code.q(), 1)?;
    let mut out = format!("{} {}\n", code.q(), code.n());
    for &w in code.words() {
        for d in word_from_index(code.q(), code.n(), w) {
            out.push(digit_char(d).expect("digit below radix 36"));
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn parse_recipe(text: &str) -> Result<RecipeDoc, Error> {
    let lines = content_lines(text)?;
    let (hline, header) = lines
        .first()
        .ok_or_else(|| parse_err(1, "missing header line"))?;
    let h = parse_header(header, *hline, &["p", "t", "n", "m", "kappa"])?;
    let p = prime_header(h[0], *hline)?;
    radix_guard(p as u64, *hline)?;
    let t = positive(h[1], "t", *hline)?;
    let n = positive(h[2], "n", *hline)?;
    let m = positive(h[3], "m", *hline)?;
    let kappa = positive(h[4], "kappa", *hline)?;
    if lines.len().saturating_sub(1) != m + kappa {
        let last = lines.last().map_or(1, |(ln, _)| ln + 1);
        return Err(parse_err(
            last,
            format!(
                "expected {m} matrix rows and {kappa} syndrome rows, found {} rows",
                lines.len() - 1
            ),
        ));
    }
    let mut mat_rows = Vec::with_capacity(m);
    for (lineno, line) in &lines[1..1 + m] {
        mat_rows.push(parse_digit_row(line, *lineno, n * t, p)?);
    }
    let mut syndromes = Vec::with_capacity(kappa);
    for (lineno, line) in &lines[1 + m..] {
        syndromes.push(parse_digit_row(line, *lineno, m, p)?);
    }
    let mat = FpMat::from_rows(mat_rows).expect("validated dimensions");
    let check = CheckMatrix::from_parts(mat, p, t, n)?;
    Ok(RecipeDoc { check, syndromes })
}

pub fn format_recipe(check: &CheckMatrix, syndromes: &[FpVec]) -> Result<String, Error> {
    radix_guard(check.p() as u64, 1)?;
    if syndromes.is_empty() {
        return Err(Error::Precondition("a recipe needs at least one syndrome".into()));
    }
    if syndromes.iter().any(|s| s.len() != check.m()) {
        return Err(Error::AmbientMismatch(
            "syndrome length must match the matrix row count".into(),
        ));
    }
    let mut out = format!(
        "{} {} {} {} {}\n",
        check.p(),
        check.t(),
        check.n(),
        check.m(),
        syndromes.len()
    );
    for r in 0..check.m() {
        for &c in check.matrix().row(r) {
            out.push(digit_char(c).expect("entry below radix 36"));
        }
        out.push('\n');
    }
    for s in syndromes {
        for &c in s {
            out.push(digit_char(c).expect("entry below radix 36"));
        }
        out.push('\n');
    }
    Ok(out)
}
