//! Invariant factors of signed monomial matrices over `F[t]`.
//!
//! The fast path works on the cyclic sequence `a_1, b_1, a_2, b_2, …` of a
//! cyclic bidiagonal matrix: a unit exponent lets its column be cleared,
//! which fuses its two neighbours; after that the smallest offset `h` is
//! split off as `t^h` and its neighbours fuse to `x + y - h`. The last pair
//! left over is the dependent column. [`snf_oracle`] recomputes the same
//! answer from determinantal divisors.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::monomial::MonomialMatrix;
use crate::poly::IntPoly;

/// Largest matrix side the oracle accepts.
pub const ORACLE_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct InvariantFactorList {
    pub unit_count: usize,
    /// Strictly positive, ascending.
    pub exponents: Vec<u32>,
    pub zero_count: usize,
}

impl InvariantFactorList {
    pub fn len(&self) -> usize {
        self.unit_count + self.exponents.len() + self.zero_count
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn total_degree(&self) -> u64 {
        self.exponents.iter().map(|&e| e as u64).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoxOffsets {
    pub pairs: Vec<(u32, u32)>,
}

impl BoxOffsets {
    pub fn new(pairs: Vec<(u32, u32)>) -> Self {
        BoxOffsets { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Residual {
    /// Everything cleared to units except a zero column.
    Empty,
    Boxes(BoxOffsets),
}

/// One entry of the cyclic offset sequence; `diagonal` marks an `a_i`.
#[derive(Clone, Copy, Debug)]
struct Offset {
    diagonal: bool,
    value: u32,
}

fn interleave(a: &[u32], b: &[u32]) -> Vec<Offset> {
    a.iter()
        .zip(b)
        .flat_map(|(&a, &b)| {
            [
                Offset {
                    diagonal: true,
                    value: a,
                },
                Offset {
                    diagonal: false,
                    value: b,
                },
            ]
        })
        .collect()
}

/// Removes the entry at `i` and replaces its neighbours by `x + y - h`.
fn fuse_at(seq: &mut Vec<Offset>, i: usize) {
    let len = seq.len();
    let prev = (i + len - 1) % len;
    let next = (i + 1) % len;
    let fused = seq[prev].value + seq[next].value - seq[i].value;
    seq[prev].value = fused;
    let (hi, lo) = if i > next { (i, next) } else { (next, i) };
    seq.remove(hi);
    seq.remove(lo);
}

fn pairs_of(seq: &[Offset]) -> Vec<(u32, u32)> {
    let start = seq.iter().position(|o| o.diagonal).unwrap_or(0);
    let rotated: Vec<u32> = seq[start..]
        .iter()
        .chain(&seq[..start])
        .map(|o| o.value)
        .collect();
    rotated.chunks(2).map(|c| (c[0], c[1])).collect()
}

fn balanced_exponents(matrix: &MonomialMatrix) -> Result<(Vec<u32>, Vec<u32>)> {
    let (a, b) = matrix.bidiagonal_exponents()?;
    let (sa, sb): (u64, u64) = (
        a.iter().map(|&x| x as u64).sum(),
        b.iter().map(|&x| x as u64).sum(),
    );
    if sa != sb {
        return Err(Error::MalformedMatrix(format!(
            "diagonal exponents sum to {sa} but subdiagonal ones to {sb}"
        )));
    }
    Ok((a, b))
}

/// Clears every column that carries a unit entry.
pub fn reduce_units(matrix: &MonomialMatrix) -> Result<(usize, Residual)> {
    let (a, b) = balanced_exponents(matrix)?;
    let mut seq = interleave(&a, &b);
    let mut units = 0;
    while seq.len() > 2 {
        let Some(i) = seq.iter().position(|o| o.value == 0) else {
            break;
        };
        fuse_at(&mut seq, i);
        units += 1;
    }
    let pairs = pairs_of(&seq);
    if pairs == [(0, 0)] {
        Ok((units, Residual::Empty))
    } else {
        Ok((units, Residual::Boxes(BoxOffsets::new(pairs))))
    }
}

/// Invariant factors of the cyclic bidiagonal matrix with the given
/// strictly positive offsets.
pub fn box_merge_invariants(boxes: &BoxOffsets) -> Result<InvariantFactorList> {
    if boxes.is_empty() {
        return Err(Error::EmptyInput);
    }
    if boxes.pairs.iter().any(|&(a, b)| a == 0 || b == 0) {
        return Err(Error::MalformedMatrix(
            "box offsets must be strictly positive".into(),
        ));
    }
    let (a, b): (Vec<u32>, Vec<u32>) = boxes.pairs.iter().copied().unzip();
    if a.iter().sum::<u32>() != b.iter().sum::<u32>() {
        return Err(Error::MalformedMatrix(
            "left and right offsets are not balanced".into(),
        ));
    }
    let mut seq = interleave(&a, &b);
    let mut exponents = Vec::with_capacity(boxes.len() - 1);
    while seq.len() > 2 {
        let (i, h) = seq
            .iter()
            .enumerate()
            .min_by_key(|&(i, o)| (o.value, i))
            .map(|(i, o)| (i, o.value))
            .expect("nonempty");
        exponents.push(h);
        fuse_at(&mut seq, i);
    }
    exponents.sort_unstable();
    Ok(InvariantFactorList {
        unit_count: 0,
        exponents,
        zero_count: 1,
    })
}

/// Full pipeline on a cyclic bidiagonal matrix.
pub fn invariant_factors(matrix: &MonomialMatrix) -> Result<InvariantFactorList> {
    let (units, residual) = reduce_units(matrix)?;
    let mut list = match residual {
        Residual::Empty => InvariantFactorList {
            unit_count: 0,
            exponents: Vec::new(),
            zero_count: 1,
        },
        Residual::Boxes(boxes) => box_merge_invariants(&boxes)?,
    };
    list.unit_count += units;
    Ok(list)
}

/// Nonzero `k × k` minors keyed by `(row mask, column mask)`.
type MinorLevel = HashMap<(u16, u16), IntPoly>;

/// Builds the next level by expanding along the top row of each minor.
fn next_level(level: &MinorLevel, cells: &[Vec<Option<IntPoly>>]) -> MinorLevel {
    let mut out: MinorLevel = HashMap::new();
    for (&(rows, cols), minor) in level {
        let top = if rows == 0 {
            cells.len()
        } else {
            rows.trailing_zeros() as usize
        };
        for (r, row) in cells.iter().enumerate().take(top) {
            for (c, cell) in row.iter().enumerate() {
                let Some(entry) = cell else { continue };
                if cols & (1 << c) != 0 {
                    continue;
                }
                let pos = (cols & ((1u16 << c) - 1)).count_ones();
                let mut term = entry * minor;
                if pos % 2 == 1 {
                    term = -&term;
                }
                let key = (rows | (1 << r), cols | (1 << c));
                let slot = out.entry(key).or_default();
                *slot = &*slot + &term;
            }
        }
    }
    out.retain(|_, p| !p.is_zero());
    out
}

/// Invariant factors from determinantal divisors `d_k`, the gcd of all
/// `k × k` minors, via `f_k = d_k / d_{k-1}`.
pub fn snf_oracle(matrix: &MonomialMatrix) -> Result<InvariantFactorList> {
    let (nr, nc) = (matrix.nrows(), matrix.ncols());
    let side = nr.max(nc);
    if side > ORACLE_CAP {
        return Err(Error::TooLarge {
            size: side,
            cap: ORACLE_CAP,
        });
    }
    let mut cells = vec![vec![None; nc]; nr];
    for ((r, c), m) in matrix.entries() {
        cells[r][c] = Some(IntPoly::monomial(m.sign.as_i64(), m.exponent as usize));
    }

    let mut list = InvariantFactorList::default();
    let mut level: MinorLevel = HashMap::from([((0u16, 0u16), IntPoly::one())]);
    let mut prev = IntPoly::one();
    let mut rank = 0;
    for k in 1..=nr.min(nc) {
        level = next_level(&level, &cells);
        if level.is_empty() {
            break;
        }
        let d = level
            .values()
            .fold(IntPoly::zero(), |g, minor| g.gcd(minor));
        let f = d
            .exact_div(&prev)
            .and_then(|q| q.as_monomial())
            .ok_or(Error::NonMonomialFactor { index: k })?;
        match f {
            0 => list.unit_count += 1,
            e => list.exponents.push(e as u32),
        }
        prev = d;
        rank = k;
    }
    list.zero_count = nr.min(nc) - rank;
    list.exponents.sort_unstable();
    Ok(list)
}
