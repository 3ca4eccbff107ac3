//! Linear codes with canonical generators, and the plaintext code file format.

use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::linalg::MatrixGF;

/// A linear code stored by the rref of a generator matrix.
#[derive(Clone)]
pub struct LinearCode {
    gen: MatrixGF,
    parity: OnceLock<MatrixGF>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.gen == other.gen
    }
}

impl Eq for LinearCode {}

impl std::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}] code over {}", self.n(), self.k(), self.field())
    }
}

impl LinearCode {
    /// The code spanned by the rows of `m`.
    pub fn from_generator(m: &MatrixGF) -> Self {
        LinearCode {
            gen: m.row_basis(),
            parity: OnceLock::new(),
        }
    }

    pub fn from_rows(field: Arc<FiniteField>, n: usize, rows: &[Vec<u32>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameters(
                "code length must be positive".into(),
            ));
        }
        Ok(Self::from_generator(&MatrixGF::from_rows(field, n, rows)?))
    }

    pub fn zero(field: Arc<FiniteField>, n: usize) -> Self {
        Self::from_generator(&MatrixGF::zeros(field, 0, n))
    }

    pub fn full(field: Arc<FiniteField>, n: usize) -> Self {
        Self::from_generator(&MatrixGF::identity(field, n))
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        self.gen.field()
    }

    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    /// Canonical `k × n` generator matrix.
    pub fn generator(&self) -> &MatrixGF {
        &self.gen
    }

    /// Generator of the dual code, i.e. a parity-check matrix of `self`.
    pub fn parity_check(&self) -> &MatrixGF {
        self.parity
            .get_or_init(|| self.gen.null_space().row_basis())
    }

    pub fn dual(&self) -> LinearCode {
        let parity = OnceLock::new();
        let _ = parity.set(self.gen.clone());
        LinearCode {
            gen: self.parity_check().clone(),
            parity,
        }
    }

    fn check_compatible(&self, other: &LinearCode) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.n() != other.n() {
            return Err(Error::ShapeMismatch(format!(
                "codes of length {} and {}",
                self.n(),
                other.n()
            )));
        }
        Ok(())
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        v.len() == self.n() && self.parity_check().apply(v).iter().all(|&s| s == 0)
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> Result<bool> {
        self.check_compatible(other)?;
        Ok((0..self.k()).all(|r| other.contains(self.gen.row(r))))
    }

    pub fn intersect(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_compatible(other)?;
        Ok(Self::from_generator(
            &self.gen.row_space_intersect(&other.gen)?,
        ))
    }

    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_compatible(other)?;
        Ok(Self::from_generator(&self.gen.row_space_sum(&other.gen)?))
    }

    /// Whether the code is invariant under the cyclic shift of coordinates.
    pub fn is_cyclic(&self) -> bool {
        let n = self.n();
        (0..self.k()).all(|r| {
            let row = self.gen.row(r);
            let shifted: Vec<u32> = (0..n).map(|j| row[(j + n - 1) % n]).collect();
            self.contains(&shifted)
        })
    }

    /// Encodes a message of length `k`.
    pub fn encode(&self, message: &[u32]) -> Vec<u32> {
        self.gen.transpose().apply(message)
    }

    /// Serializes in the plaintext code format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "field {}", self.field().designator());
        let _ = writeln!(out, "n {}", self.n());
        let _ = writeln!(out, "k {}", self.k());
        for r in 0..self.k() {
            out.push_str("row");
            for v in self.gen.row(r) {
                let _ = write!(out, " {v}");
            }
            out.push('\n');
        }
        out
    }

    /// Parses the plaintext code format.
    ///
    /// ```text
    /// field 2^4
    /// n 15
    /// k 3
    /// row 1 0 0 5 7 ...
    /// ```
    ///
    /// Headers appear exactly once, in that order, followed by `k` rows.
    /// `#` starts a comment. The rows must be linearly independent.
    pub fn from_text(text: &str) -> Result<LinearCode> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, tokens(l)))
            .filter(|(_, t)| !t.is_empty());
        let eof_line = text.lines().count().max(1);

        let (ln, toks) = expect_line(&mut lines, "field", eof_line)?;
        let designator = single_arg(ln, &toks)?;
        let field = Arc::new(
            FiniteField::parse(designator.1)
                .map_err(|e| parse_err(ln, designator.0, e.to_string()))?,
        );

        let (ln, toks) = expect_line(&mut lines, "n", eof_line)?;
        let n = parse_num::<usize>(ln, single_arg(ln, &toks)?)?;
        if n == 0 {
            return Err(parse_err(
                ln,
                toks[1].0,
                "code length must be positive".into(),
            ));
        }

        let (k_line, toks) = expect_line(&mut lines, "k", eof_line)?;
        let k_col = toks[1.min(toks.len() - 1)].0;
        let k = parse_num::<usize>(k_line, single_arg(k_line, &toks)?)?;
        if k > n {
            return Err(parse_err(
                k_line,
                k_col,
                format!("dimension {k} exceeds length {n}"),
            ));
        }

        let mut rows = Vec::with_capacity(k);
        for _ in 0..k {
            let (ln, toks) = expect_line(&mut lines, "row", eof_line)?;
            if toks.len() - 1 != n {
                let col = toks.get(n + 1).map_or(toks.last().unwrap().0, |t| t.0);
                return Err(parse_err(
                    ln,
                    col,
                    format!("expected {n} entries, found {}", toks.len() - 1),
                ));
            }
            let mut row = Vec::with_capacity(n);
            for &(col, tok) in &toks[1..] {
                let v = parse_num::<u64>(ln, (col, tok))?;
                if !field.contains(v) {
                    return Err(parse_err(
                        ln,
                        col,
                        format!("{v} is not an element of {}", field),
                    ));
                }
                row.push(v as u32);
            }
            rows.push(row);
        }
        if let Some((ln, toks)) = lines.next() {
            return Err(parse_err(
                ln,
                toks[0].0,
                format!("unexpected `{}` after {k} rows", toks[0].1),
            ));
        }
        let code = LinearCode::from_rows(field, n, &rows)?;
        if code.k() != k {
            return Err(parse_err(
                k_line,
                k_col,
                format!("rows span a space of dimension {}, not {k}", code.k()),
            ));
        }
        Ok(code)
    }
}

type Token<'a> = (usize, &'a str);

fn tokens(line: &str) -> Vec<Token<'_>> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in content.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &content[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &content[s..]));
    }
    out.into_iter()
        .map(|(s, t)| (content[..s].chars().count() + 1, t))
        .collect()
}

fn parse_err(line: usize, column: usize, message: String) -> Error {
    Error::Parse {
        line,
        column,
        message,
    }
}

fn expect_line<'a, I>(
    lines: &mut I,
    keyword: &str,
    eof_line: usize,
) -> Result<(usize, Vec<Token<'a>>)>
where
    I: Iterator<Item = (usize, Vec<Token<'a>>)>,
{
    match lines.next() {
        None => Err(parse_err(
            eof_line,
            1,
            format!("expected `{keyword}`, found end of input"),
        )),
        Some((ln, toks)) if toks[0].1 == keyword => Ok((ln, toks)),
        Some((ln, toks)) => Err(parse_err(
            ln,
            toks[0].0,
            format!("expected `{keyword}`, found `{}`", toks[0].1),
        )),
    }
}

fn single_arg<'a>(line: usize, toks: &[Token<'a>]) -> Result<Token<'a>> {
    match toks.len() {
        2 => Ok(toks[1]),
        1 => Err(parse_err(
            line,
            toks[0].0 + toks[0].1.len(),
            format!("`{}` needs a value", toks[0].1),
        )),
        _ => Err(parse_err(line, toks[2].0, "unexpected extra value".into())),
    }
}

fn parse_num<T: std::str::FromStr>(line: usize, (col, tok): Token<'_>) -> Result<T> {
    tok.parse()
        .map_err(|_| parse_err(line, col, format!("`{tok}` is not a non-negative integer")))
}

/// Number of coordinate pairs `(a_j, b_j) != (0, 0)` in `(a | b)`.
pub fn symplectic_weight(v: &[u32]) -> Result<usize> {
    if !v.len().is_multiple_of(2) {
        return Err(Error::OddLength(v.len()));
    }
    let n = v.len() / 2;
    Ok((0..n).filter(|&j| v[j] != 0 || v[n + j] != 0).count())
}

pub fn hamming_weight(v: &[u32]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Arc<FiniteField> {
        Arc::new(FiniteField::with_order(q).unwrap())
    }

    pub(crate) fn hamming74() -> LinearCode {
        LinearCode::from_rows(
            gf(2),
            7,
            &[
                vec![1, 0, 0, 0, 1, 1, 0],
                vec![0, 1, 0, 0, 1, 0, 1],
                vec![0, 0, 1, 0, 0, 1, 1],
                vec![0, 0, 0, 1, 1, 1, 1],
            ],
        )
        .unwrap()
    }

    #[test]
    fn duals() {
        let f = gf(2);
        let rep = LinearCode::from_rows(f.clone(), 3, &[vec![1, 1, 1]]).unwrap();
        let even = rep.dual();
        assert_eq!(even.k(), 2);
        assert!(even.contains(&[1, 1, 0]));
        assert!(!even.contains(&[1, 0, 0]));
        assert_eq!(even.dual(), rep);

        assert_eq!(
            LinearCode::full(f.clone(), 5).dual(),
            LinearCode::zero(f.clone(), 5)
        );
        assert_eq!(LinearCode::zero(f, 5).dual().k(), 5);

        let simplex = hamming74().dual();
        assert_eq!(simplex.k(), 3);
        for m in 1..8u32 {
            let msg: Vec<u32> = (0..3).map(|i| (m >> i) & 1).collect();
            assert_eq!(hamming_weight(&simplex.encode(&msg)), 4);
        }
        let g = hamming74()
            .generator()
            .mul(&simplex.generator().transpose())
            .unwrap();
        assert!(g.is_zero());
    }

    #[test]
    fn from_rows_canonicalizes() {
        let f = gf(2);
        let a = LinearCode::from_rows(f.clone(), 3, &[vec![1, 1, 1]]).unwrap();
        let b = LinearCode::from_rows(f.clone(), 3, &[vec![1, 1, 1], vec![1, 1, 1]]).unwrap();
        assert_eq!(a.k(), 1);
        assert_eq!(a, b);
        assert!(LinearCode::from_rows(f.clone(), 3, &[vec![1, 2, 1]]).is_err());
        assert!(LinearCode::from_rows(f, 0, &[]).is_err());
    }

    #[test]
    fn subcodes_and_intersections() {
        let h = hamming74();
        let f = h.field().clone();
        let rep = LinearCode::from_rows(f.clone(), 7, &[vec![1; 7]]).unwrap();
        assert!(rep.is_subcode_of(&h).unwrap());
        assert!(!h.is_subcode_of(&rep).unwrap());
        assert_eq!(h.intersect(&rep).unwrap(), rep);
        assert_eq!(h.sum(&rep).unwrap(), h);
        let other = LinearCode::full(gf(3), 7);
        assert_eq!(h.intersect(&other).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn cyclicity() {
        // The cyclic Hamming code generated by 1 + x + x^3.
        let f = gf(2);
        let g = [1, 1, 0, 1, 0, 0, 0];
        let rows: Vec<Vec<u32>> = (0..4)
            .map(|s| (0..7).map(|j| g[(j + 7 - s) % 7]).collect())
            .collect();
        let c = LinearCode::from_rows(f.clone(), 7, &rows).unwrap();
        assert!(c.is_cyclic());
        assert!(!hamming74().is_cyclic());
        assert!(LinearCode::zero(f.clone(), 4).is_cyclic());
        assert!(LinearCode::full(f, 4).is_cyclic());
    }

    #[test]
    fn symplectic_weights() {
        assert_eq!(symplectic_weight(&[0; 6]).unwrap(), 0);
        assert_eq!(symplectic_weight(&[1, 0, 0, 0, 0, 1]).unwrap(), 2);
        assert_eq!(symplectic_weight(&[1, 1, 1, 0]).unwrap(), 2);
        assert_eq!(
            symplectic_weight(&[1, 0, 1]).unwrap_err(),
            Error::OddLength(3)
        );
    }

    #[test]
    fn text_round_trip() {
        let h = hamming74();
        let text = h.to_text();
        assert!(text.starts_with("field 2\nn 7\nk 4\nrow 1 0 0 0"));
        assert_eq!(LinearCode::from_text(&text).unwrap(), h);

        let f16 = gf(16);
        let c = LinearCode::from_rows(f16, 4, &[vec![1, 0, 5, 7], vec![0, 1, 15, 2]]).unwrap();
        let text = c.to_text();
        assert!(text.starts_with("field 2^4\n"));
        assert_eq!(LinearCode::from_text(&text).unwrap(), c);

        let commented = "# a code\nfield 3  # ternary\n\nn 3\nk 1\nrow 1 2 1 # last\n";
        let c = LinearCode::from_text(commented).unwrap();
        assert_eq!(c.k(), 1);
        assert!(c.contains(&[2, 1, 2]));
    }

    fn parse_error(text: &str) -> (usize, usize) {
        match LinearCode::from_text(text).unwrap_err() {
            Error::Parse { line, column, .. } => (line, column),
            e => panic!("unexpected error {e:?}"),
        }
    }

    #[test]
    fn text_diagnostics() {
        assert_eq!(parse_error("n 3\n"), (1, 1));
        assert_eq!(parse_error("field 6\nn 3\n"), (1, 7));
        assert_eq!(parse_error("field 2\nn x\n"), (2, 3));
        assert_eq!(parse_error("field 2\nn 3\nk 1\nrow 1 2 1\n"), (4, 7));
        assert_eq!(parse_error("field 2\nn 3\nk 1\nrow 1 1\n"), (4, 7));
        assert_eq!(parse_error("field 2\nn 3\nk 2\nrow 1 1 1\n"), (4, 1));
        assert_eq!(
            parse_error("field 2\nn 3\nk 2\nrow 1 1 1\nrow 1 1 1\n"),
            (3, 3)
        );
        assert_eq!(parse_error("field 2\nk 1\n"), (2, 1));
        assert_eq!(
            parse_error("field 2\nn 3\nk 1\nrow 1 1 1\nrow 0 0 1\n"),
            (5, 1)
        );
        assert_eq!(parse_error("field 2\nn 3\nk 4\n"), (3, 3));
    }
}
