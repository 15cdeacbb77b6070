//! Matrices whose entries are zero or `±t^e`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub sign: Sign,
    pub exponent: u32,
}

impl Monomial {
    pub fn plus(exponent: u32) -> Self {
        Monomial {
            sign: Sign::Plus,
            exponent,
        }
    }

    pub fn minus(exponent: u32) -> Self {
        Monomial {
            sign: Sign::Minus,
            exponent,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign == Sign::Minus { "-" } else { "" };
        match self.exponent {
            0 => write!(f, "{sign}1"),
            1 => write!(f, "{sign}t"),
            e => write!(f, "{sign}t^{e}"),
        }
    }
}

/// A sparse matrix of signed monomials. Row and column labels are carried
/// along so callers can map positions back to valleys and peaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMatrix {
    rows: Vec<usize>,
    cols: Vec<usize>,
    entries: BTreeMap<(usize, usize), Monomial>,
}

impl MonomialMatrix {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Self {
        MonomialMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    /// Builds the `p × p` matrix with `-t^{a_i}` at `(i, i)` and `+t^{b_i}` at
    /// `(i+1 mod p, i)`. Needs `p >= 2` so that the two cyclic diagonals are
    /// disjoint.
    pub fn cyclic_bidiagonal(
        rows: Vec<usize>,
        cols: Vec<usize>,
        a: &[u32],
        b: &[u32],
    ) -> Result<Self> {
        let p = a.len();
        if p < 2 || b.len() != p || rows.len() != p || cols.len() != p {
            return Err(Error::MalformedMatrix(format!(
                "cyclic bidiagonal layout needs p >= 2 and matching lengths (p = {p})"
            )));
        }
        let mut m = MonomialMatrix::new(rows, cols);
        for i in 0..p {
            m.set(i, i, Monomial::minus(a[i]));
            m.set((i + 1) % p, i, Monomial::plus(b[i]));
        }
        Ok(m)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn row_labels(&self) -> &[usize] {
        &self.rows
    }

    pub fn col_labels(&self) -> &[usize] {
        &self.cols
    }

    pub fn set(&mut self, row: usize, col: usize, value: Monomial) {
        assert!(
            row < self.nrows() && col < self.ncols(),
            "index out of bounds"
        );
        self.entries.insert((row, col), value);
    }

    pub fn get(&self, row: usize, col: usize) -> Option<Monomial> {
        self.entries.get(&(row, col)).copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), Monomial)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Recovers `(a, b)` from a matrix in cyclic bidiagonal form, rejecting
    /// anything else.
    pub fn bidiagonal_exponents(&self) -> Result<(Vec<u32>, Vec<u32>)> {
        let p = self.nrows();
        if p < 2 || self.ncols() != p {
            return Err(Error::MalformedMatrix(format!(
                "expected a square matrix of size >= 2, got {}x{}",
                p,
                self.ncols()
            )));
        }
        if self.entries.len() != 2 * p {
            return Err(Error::MalformedMatrix(format!(
                "expected {} nonzero entries, found {}",
                2 * p,
                self.entries.len()
            )));
        }
        let mut a = Vec::with_capacity(p);
        let mut b = Vec::with_capacity(p);
        for i in 0..p {
            match (self.get(i, i), self.get((i + 1) % p, i)) {
                (Some(d), Some(s)) if d.sign == Sign::Minus && s.sign == Sign::Plus => {
                    a.push(d.exponent);
                    b.push(s.exponent);
                }
                _ => {
                    return Err(Error::MalformedMatrix(format!(
                        "column {i} is not (-t^a on the diagonal, +t^b below)"
                    )))
                }
            }
        }
        Ok((a, b))
    }

    /// Reorders rows and columns: new row `r` is old row `row_order[r]`.
    pub fn permuted(&self, row_order: &[usize], col_order: &[usize]) -> MonomialMatrix {
        let mut row_pos = vec![0; self.nrows()];
        for (new, &old) in row_order.iter().enumerate() {
            row_pos[old] = new;
        }
        let mut col_pos = vec![0; self.ncols()];
        for (new, &old) in col_order.iter().enumerate() {
            col_pos[old] = new;
        }
        let mut m = MonomialMatrix::new(
            row_order.iter().map(|&r| self.rows[r]).collect(),
            col_order.iter().map(|&c| self.cols[c]).collect(),
        );
        for ((r, c), v) in self.entries() {
            m.set(row_pos[r], col_pos[c], v);
        }
        m
    }
}

impl fmt::Display for MonomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.nrows())
            .map(|r| {
                (0..self.ncols())
                    .map(|c| {
                        self.get(r, c)
                            .map_or_else(|| "0".to_string(), |m| m.to_string())
                    })
                    .collect()
            })
            .collect();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for row in cells {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}
