//! Projective covers, syzygy rims and periods of minimal resolutions.
//!
//! The cover of `L_I` is `⊕_{u ∈ U} P_u` over the peaks `U` and its kernel
//! is covered by `⊕_{v ∈ V} P_v` over the valleys. Every second syzygy is
//! again rank one, with rim `I + k`. With exactly two peaks every syzygy is
//! rank one, which allows odd periods.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::monomial::Sign;
use crate::rim::{EdgeInterval, Rim};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveCover {
    pub summands: Vec<usize>,
}

impl ProjectiveCover {
    pub fn rank(&self) -> usize {
        self.summands.len()
    }
}

pub fn projective_cover(rim: &Rim) -> ProjectiveCover {
    ProjectiveCover {
        summands: rim.peaks(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Arrow {
    X,
    Y,
}

/// `x^e` or `-y^e` in the presentation matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathEntry {
    pub row: usize,
    pub col: usize,
    pub arrow: Arrow,
    pub sign: Sign,
    pub exponent: usize,
}

/// The map `⊕_v P_v → ⊕_u P_u`. Rows follow valleys, columns follow peaks,
/// with `u_1` the smallest peak and `v_i` the valley just before `u_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationMatrixD {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub entries: Vec<PathEntry>,
}

impl PresentationMatrixD {
    /// A single peak puts both arrows in the one cell; `L_I` is projective.
    pub fn is_degenerate(&self) -> bool {
        self.cols.len() == 1
    }
}

pub fn build_d(rim: &Rim) -> PresentationMatrixD {
    let n = rim.n();
    let peaks = rim.peaks();
    let p = peaks.len();
    let rows: Vec<usize> = peaks.iter().map(|&u| rim.prev_valley_before(u)).collect();
    let mut entries = Vec::with_capacity(2 * p);
    for (idx, (&v, &u)) in rows.iter().zip(&peaks).enumerate() {
        let prev = (idx + p - 1) % p;
        entries.push(PathEntry {
            row: idx,
            col: prev,
            arrow: Arrow::X,
            sign: Sign::Plus,
            exponent: EdgeInterval::new(n, peaks[prev] as i64, v as i64).len(),
        });
        entries.push(PathEntry {
            row: idx,
            col: idx,
            arrow: Arrow::Y,
            sign: Sign::Minus,
            exponent: EdgeInterval::new(n, v as i64, u as i64).len(),
        });
    }
    PresentationMatrixD {
        rows,
        cols: peaks,
        entries,
    }
}

/// Rim of `Ω^{2·steps}(L_I)`, namely `I + steps·k`.
pub fn syzygy_rim_even(rim: &Rim, steps: u64) -> Result<Rim> {
    if rim.is_projective() {
        return Err(Error::ProjectiveModule);
    }
    let turn = (steps % rim.n() as u64) as i64 * rim.k() as i64;
    Ok(rim.shift(turn))
}

/// Rim of `Ω(L_I)` for a rim with two peaks.
///
/// With `A_1 = {1..d_1}` moved to start at 1, the first syzygy is
/// `{1-l_2, ..., d_1-l_2} ∪ {d_1+1, ..., d_1+d_2}`.
pub fn first_syzygy_two_peak(rim: &Rim) -> Result<Rim> {
    let dec = rim.decompose();
    if dec.peak_count() != 2 {
        return Err(Error::NotTwoPeak(dec.peak_count()));
    }
    let (d, l) = (dec.downward(), dec.upward());
    let (d1, d2, l2) = (d[0] as i64, d[1] as i64, l[1] as i64);
    let normalized = (1 - l2..=d1 - l2).chain(d1 + 1..=d1 + d2);
    let offset = dec.segments()[0].start as i64 - 1;
    Rim::new(
        rim.n(),
        normalized.map(|x| crate::rim::wrap(rim.n(), x + offset)),
    )
}

/// Rim of `Ω^{steps}(L_I)` for a rim with two peaks.
pub fn syzygy_rim_two_peak(rim: &Rim, steps: u64) -> Result<Rim> {
    let peaks = rim.peak_count();
    if peaks != 2 {
        return Err(Error::NotTwoPeak(peaks));
    }
    if steps.is_multiple_of(2) {
        syzygy_rim_even(rim, steps / 2)
    } else {
        syzygy_rim_even(&first_syzygy_two_peak(rim)?, steps / 2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PeriodResult {
    /// Interval rim: the resolution stops after one step.
    Projective,
    Finite(u64),
}

impl PeriodResult {
    pub fn finite(self) -> Option<u64> {
        match self {
            PeriodResult::Finite(m) => Some(m),
            PeriodResult::Projective => None,
        }
    }
}

/// Smallest `t >= 1` with `c + t·k ≡ 0 (mod n)`, if any.
fn min_t(c: i64, k: i64, n: i64) -> Option<i64> {
    (1..=n).find(|t| (c + t * k).rem_euclid(n) == 0)
}

/// The period from the segment and gap lengths alone.
pub fn period_closed_form(rim: &Rim) -> PeriodResult {
    let dec = rim.decompose();
    let n = rim.n() as i64;
    let k = rim.k() as i64;
    let full = 2 * n / n.gcd(&k);
    let (d, l) = (dec.downward(), dec.upward());
    match dec.peak_count() {
        1 => PeriodResult::Projective,
        2 => {
            let (d1, d2) = (d[0] as i64, d[1] as i64);
            let (l1, l2) = (l[0] as i64, l[1] as i64);
            let mut candidates = vec![full];
            if d1 == d2 {
                candidates.extend(min_t(d1, k, n).map(|t| 2 * t + 1));
            }
            if l1 == l2 {
                candidates.extend(min_t(-l2, k, n).map(|t| 2 * t + 1));
            }
            if d1 == d2 && l1 == l2 {
                candidates.extend(min_t(d1 + l1, k, n).map(|t| 2 * t));
            }
            PeriodResult::Finite(*candidates.iter().min().expect("nonempty") as u64)
        }
        segments => {
            // c ranges over rotations that carry the slope pattern to itself;
            // prefix[c] is the offset between A_1 and A_{c+1}.
            let aligned: Vec<(usize, i64)> = (0..segments)
                .filter(|&c| {
                    (0..segments)
                        .all(|i| d[(c + i) % segments] == d[i] && l[(c + i) % segments] == l[i])
                })
                .map(|c| (c, (0..c).map(|i| (d[i] + l[i]) as i64).sum()))
                .collect();
            let t = (1..=n / n.gcd(&k))
                .find(|t| {
                    aligned
                        .iter()
                        .any(|&(_, offset)| (k * t - offset).rem_euclid(n) == 0)
                })
                .expect("t = n/gcd(n,k) always works");
            PeriodResult::Finite(2 * t as u64)
        }
    }
}

/// The period found by applying syzygies until the rim returns.
pub fn period_iterative(rim: &Rim) -> PeriodResult {
    let bound = 2 * rim.n() as u64;
    match rim.peak_count() {
        1 => PeriodResult::Projective,
        2 => {
            let omega1 = first_syzygy_two_peak(rim).expect("two peaks");
            let m = (1..=bound)
                .find(|&m| {
                    let base = if m % 2 == 0 { rim } else { &omega1 };
                    &base.shift((m / 2) as i64 * rim.k() as i64) == rim
                })
                .expect("period bounded by 2n");
            PeriodResult::Finite(m)
        }
        _ => {
            let t = (1..=rim.n() as u64)
                .find(|&t| &rim.shift(t as i64 * rim.k() as i64) == rim)
                .expect("shift by n·k is the identity");
            PeriodResult::Finite(2 * t)
        }
    }
}
