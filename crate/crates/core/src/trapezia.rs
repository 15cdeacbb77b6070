//! Geometry of two rims drawn one above the other.
//!
//! Wherever the rims have different tendencies they bound a trapezium. An
//! edge in `J ∖ I` (I climbs, J falls) belongs to a left trapezium `L`, an
//! edge in `I ∖ J` to a right trapezium `R`. One mismatch edge is one unit of
//! lateral length, i.e. one power of `t`.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::MonomialMatrix;
use crate::rim::{wrap, EdgeInterval, Rim};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LetterKind {
    L,
    R,
}

impl fmt::Display for LetterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LetterKind::L => "L",
            LetterKind::R => "R",
        })
    }
}

/// A maximal run of consecutive mismatch edges of one kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Letter {
    pub kind: LetterKind,
    pub length: usize,
    pub start_edge: usize,
}

impl Letter {
    pub fn edges(&self, n: usize) -> impl Iterator<Item = usize> {
        let start = self.start_edge;
        (0..self.length).map(move |i| wrap(n, (start + i) as i64))
    }
}

/// One left trapezium followed by one right trapezium after merging
/// neighbours of the same orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LrBox {
    pub left: usize,
    pub right: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrapeziumWord {
    n: usize,
    letters: Vec<Letter>,
    rotation: usize,
    boxes: Vec<LrBox>,
}

impl TrapeziumWord {
    /// Letters in reading order, starting with an `L` and ending with an `R`.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// How many runs (in order of starting edge) were moved to the back so
    /// that the word starts with `L`.
    pub fn rotation(&self) -> usize {
        self.rotation
    }

    pub fn boxes(&self) -> &[LrBox] {
        &self.boxes
    }

    pub fn box_count(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn raw_string(&self) -> String {
        self.letters.iter().map(|l| l.kind.to_string()).collect()
    }

    /// `LR` repeated once per box.
    pub fn reduced_string(&self) -> String {
        "LR".repeat(self.boxes.len())
    }

    /// Vertex at which the first letter begins, or `None` for equal rims.
    pub fn start_vertex(&self) -> Option<usize> {
        self.letters
            .first()
            .map(|l| wrap(self.n, l.start_edge as i64 - 1))
    }
}

fn classify(i: &Rim, j: &Rim, edge: usize) -> Option<LetterKind> {
    match (i.contains(edge), j.contains(edge)) {
        (false, true) => Some(LetterKind::L),
        (true, false) => Some(LetterKind::R),
        _ => None,
    }
}

pub fn build_word(i: &Rim, j: &Rim) -> Result<TrapeziumWord> {
    i.same_circle(j)?;
    let n = i.n();
    let empty = TrapeziumWord {
        n,
        letters: Vec::new(),
        rotation: 0,
        boxes: Vec::new(),
    };
    if i == j {
        return Ok(empty);
    }
    // Begin scanning at a class boundary so no run is split across the seam.
    let seam = (1..=n)
        .find(|&e| classify(i, j, e) != classify(i, j, e + n - 1))
        .expect("distinct rims have a class boundary");
    let mut runs: Vec<Letter> = Vec::new();
    let mut offset = 0;
    while offset < n {
        let start = wrap(n, (seam + offset) as i64);
        let class = classify(i, j, start);
        let mut length = 0;
        while offset < n && classify(i, j, seam + offset) == class {
            length += 1;
            offset += 1;
        }
        if let Some(kind) = class {
            runs.push(Letter {
                kind,
                length,
                start_edge: start,
            });
        }
    }
    runs.sort_by_key(|l| l.start_edge);
    let count = runs.len();
    let rotation = (0..count)
        .find(|&r| {
            runs[r].kind == LetterKind::L && runs[(r + count - 1) % count].kind == LetterKind::R
        })
        .expect("both letter kinds occur");
    runs.rotate_left(rotation);

    let mut boxes = Vec::new();
    let mut idx = 0;
    while idx < runs.len() {
        let mut left = 0;
        while idx < runs.len() && runs[idx].kind == LetterKind::L {
            left += runs[idx].length;
            idx += 1;
        }
        let mut right = 0;
        while idx < runs.len() && runs[idx].kind == LetterKind::R {
            right += runs[idx].length;
            idx += 1;
        }
        boxes.push(LrBox { left, right });
    }
    Ok(TrapeziumWord {
        n,
        letters: runs,
        rotation,
        boxes,
    })
}

/// Valley/peak pairs `(v_i, u_i)` in the order used for the rows and columns
/// of `D*`: `u_1` is the first peak after the word's starting vertex (vertex
/// `n` for equal rims) and `v_i` is the valley just before `u_i`.
pub fn dstar_layout(i: &Rim, word: &TrapeziumWord) -> Vec<(usize, usize)> {
    let start = word.start_vertex().unwrap_or(i.n());
    let first = i.next_peak_after(start);
    let p = i.peak_count();
    let mut pairs = Vec::with_capacity(p);
    let mut u = first;
    for _ in 0..p {
        pairs.push((i.prev_valley_before(u), u));
        u = i.next_peak_after(u);
    }
    pairs
}

/// Exponents `(a, b)` of `D*` in layout order: `a_i = #(J ∩ (v_i, u_i])` and
/// `b_i = #((u_i, v_{i+1}] ∖ J)`.
pub fn dstar_exponents(i: &Rim, j: &Rim, layout: &[(usize, usize)]) -> (Vec<u32>, Vec<u32>) {
    let n = i.n();
    let p = layout.len();
    let a = layout
        .iter()
        .map(|&(v, u)| EdgeInterval::new(n, v as i64, u as i64).count_in(j) as u32)
        .collect();
    let b = (0..p)
        .map(|idx| {
            let u = layout[idx].1;
            let next_v = layout[(idx + 1) % p].0;
            EdgeInterval::new(n, u as i64, next_v as i64).count_outside(j) as u32
        })
        .collect();
    (a, b)
}

/// The matrix of `Hom(D, L_J)`: rows are valleys of `I`, columns are peaks.
pub fn build_dstar(i: &Rim, j: &Rim) -> Result<MonomialMatrix> {
    let word = build_word(i, j)?;
    if i.is_projective() {
        return Err(Error::ProjectiveModule);
    }
    let layout = dstar_layout(i, &word);
    let (a, b) = dstar_exponents(i, j, &layout);
    MonomialMatrix::cyclic_bidiagonal(
        layout.iter().map(|&(v, _)| v).collect(),
        layout.iter().map(|&(_, u)| u).collect(),
        &a,
        &b,
    )
}

fn height_gap(i: &Rim, j: &Rim) -> Vec<i64> {
    let hi = i.height_profile();
    let hj = j.height_profile();
    hi.heights()
        .iter()
        .zip(hj.heights())
        .map(|(a, b)| a - b)
        .collect()
}

/// `max_v (h_I(v) - h_J(v)) / 2`: how far the lattice of `L_I` sits when
/// pushed as high as possible inside `L_J`.
pub fn canonical_hom_offset(i: &Rim, j: &Rim) -> Result<u32> {
    i.same_circle(j)?;
    let max = *height_gap(i, j).iter().max().expect("nonempty");
    Ok((max / 2) as u32)
}

/// Coefficients `t^{α_u}` of the column relation of `D*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelCoefficients {
    pub peaks: Vec<usize>,
    pub alphas: Vec<u32>,
}

pub fn kernel_coefficients(i: &Rim, j: &Rim) -> Result<KernelCoefficients> {
    let dstar = build_dstar(i, j)?;
    let delta = height_gap(i, j);
    let max = *delta.iter().max().expect("nonempty");
    let peaks = dstar.col_labels().to_vec();
    let alphas: Vec<u32> = peaks
        .iter()
        .map(|&u| ((max - delta[u]) / 2) as u32)
        .collect();

    // Every row of D* holds exactly two monomials; the relation holds iff
    // they cancel after scaling by the column coefficients.
    for row in 0..dstar.nrows() {
        let mut terms: Vec<(u32, i64)> = dstar
            .entries()
            .filter(|((r, _), _)| *r == row)
            .map(|((_, c), m)| (m.exponent + alphas[c], m.sign.as_i64()))
            .collect();
        terms.sort();
        let cancels = match terms.as_slice() {
            [(e1, s1), (e2, s2)] => e1 == e2 && s1 + s2 == 0,
            _ => false,
        };
        if !cancels {
            return Err(Error::KernelRelationFailed { row });
        }
    }
    Ok(KernelCoefficients { peaks, alphas })
}
