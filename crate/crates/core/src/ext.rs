//! `Ext^d(L_I, L_J)` as an `F[t]`-module.
//!
//! Degree one comes from the invariant factors of `D*`. Odd degrees reduce
//! to degree one for `Ω^{d-1}(L_I)`, whose rim is a shift of `I`. Even
//! degrees are cyclic, `F[t]/(t^a)` with `a` the least of the numbers
//! `a_{uv}` over peaks `u` and valleys `v`.

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rim::{EdgeInterval, Rim};
use crate::snf::{invariant_factors, snf_oracle, InvariantFactorList};
use crate::trapezia::build_dstar;

pub const DEFAULT_MAX_DEGREE: u32 = 1000;
pub const DEFAULT_TABLE_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtShape {
    /// `F[t]/(t^{h_1}) × … × F[t]/(t^{h_m})`, all `h_i >= 1`, ascending.
    OddLike {
        exponents: Vec<u32>,
    },
    /// `F[t]/(t^a)` with `a >= 1`.
    EvenCyclic {
        a: u32,
    },
    Zero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtDecomposition {
    pub degree: u32,
    pub shape: ExtShape,
    pub dimension: u64,
    /// The rim standing in for `I` after the dimension shift.
    pub context: Rim,
}

impl ExtDecomposition {
    fn odd(degree: u32, exponents: Vec<u32>, context: Rim) -> Self {
        let dimension = exponents.iter().map(|&e| e as u64).sum();
        let shape = if exponents.is_empty() {
            ExtShape::Zero
        } else {
            ExtShape::OddLike { exponents }
        };
        ExtDecomposition {
            degree,
            shape,
            dimension,
            context,
        }
    }

    fn even(degree: u32, a: u32, context: Rim) -> Self {
        let shape = if a == 0 {
            ExtShape::Zero
        } else {
            ExtShape::EvenCyclic { a }
        };
        ExtDecomposition {
            degree,
            shape,
            dimension: a as u64,
            context,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.shape == ExtShape::Zero
    }

    /// Exponents of the cyclic factors, ascending. Lets odd and even
    /// degrees be compared, since with two peaks an odd syzygy can land on
    /// an even one.
    pub fn factors(&self) -> Vec<u32> {
        match &self.shape {
            ExtShape::OddLike { exponents } => exponents.clone(),
            ExtShape::EvenCyclic { a } => vec![*a],
            ExtShape::Zero => Vec::new(),
        }
    }
}

fn check_degree(degree: u32, cap: u32) -> Result<()> {
    if degree == 0 || degree > cap {
        return Err(Error::DegreeOutOfRange { degree, cap });
    }
    Ok(())
}

/// Rim of `Ω^{2·steps}(L_I)`.
fn even_syzygy(i: &Rim, steps: u32) -> Rim {
    let turns = (steps as u64 % i.n() as u64) as i64;
    i.shift(turns * i.k() as i64)
}

pub fn ext1(i: &Rim, j: &Rim) -> Result<ExtDecomposition> {
    i.same_circle(j)?;
    if i == j || i.is_projective() {
        return Ok(ExtDecomposition::odd(1, Vec::new(), i.clone()));
    }
    let factors = invariant_factors(&build_dstar(i, j)?)?;
    Ok(ExtDecomposition::odd(1, factors.exponents, i.clone()))
}

/// Degree one recomputed from determinantal divisors of `D*`.
pub fn ext1_oracle(i: &Rim, j: &Rim) -> Result<(ExtDecomposition, InvariantFactorList)> {
    i.same_circle(j)?;
    if i.is_projective() {
        let empty = InvariantFactorList::default();
        return Ok((ExtDecomposition::odd(1, Vec::new(), i.clone()), empty));
    }
    let factors = snf_oracle(&build_dstar(i, j)?)?;
    let ext = ExtDecomposition::odd(1, factors.exponents.clone(), i.clone());
    Ok((ext, factors))
}

pub fn ext_odd(i: &Rim, j: &Rim, degree: u32) -> Result<ExtDecomposition> {
    if degree.is_multiple_of(2) {
        return Err(Error::EvenDegree(degree));
    }
    i.same_circle(j)?;
    let shifted = even_syzygy(i, (degree - 1) / 2);
    let mut out = ext1(&shifted, j)?;
    out.degree = degree;
    Ok(out)
}

/// Whether `u` counts as left of `v`: `(u, v]` has at most `k` edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AuvEntry {
    pub u: usize,
    pub v: usize,
    pub side: Side,
    pub value: u32,
}

fn auv(i: &Rim, j: &Rim, u: usize, v: usize) -> AuvEntry {
    let (n, k) = (i.n() as i64, i.k() as i64);
    let (u, v) = (u as i64, v as i64);
    let arc = EdgeInterval::new(n as usize, u, v);
    let (side, value) = if arc.len() as i64 <= k {
        let value = arc.count_outside(i) + EdgeInterval::new(n as usize, v, u + k).count_outside(j);
        (Side::Left, value)
    } else {
        let value = EdgeInterval::new(n as usize, u - (n - k), v).count_in(j)
            + EdgeInterval::new(n as usize, v, u).count_in(i);
        (Side::Right, value)
    };
    AuvEntry {
        u: u as usize,
        v: v as usize,
        side,
        value: value as u32,
    }
}

/// Every `a_{uv}` for `Ext^2(L_I, L_J)`, rows by peak and columns by valley.
pub fn auv_table(i: &Rim, j: &Rim) -> Result<Vec<AuvEntry>> {
    i.same_circle(j)?;
    Ok(i.peaks()
        .into_iter()
        .cartesian_product(i.valleys())
        .map(|(u, v)| auv(i, j, u, v))
        .collect())
}

/// `min a_{uv}`. The table splits as `x_u + y_v`, so the column minimising
/// the first row also holds the global minimum.
fn min_auv(i: &Rim, j: &Rim) -> u32 {
    let peaks = i.peaks();
    let v_star = i
        .valleys()
        .into_iter()
        .min_by_key(|&v| auv(i, j, peaks[0], v).value)
        .expect("valley exists");
    peaks
        .iter()
        .map(|&u| auv(i, j, u, v_star).value)
        .min()
        .expect("peak exists")
}

pub fn ext_even(i: &Rim, j: &Rim, degree: u32) -> Result<ExtDecomposition> {
    if degree % 2 == 1 || degree == 0 {
        return Err(Error::OddDegree(degree));
    }
    i.same_circle(j)?;
    let shifted = even_syzygy(i, degree / 2 - 1);
    if shifted.is_projective() {
        return Ok(ExtDecomposition::even(degree, 0, shifted));
    }
    let a = min_auv(&shifted, j);
    Ok(ExtDecomposition::even(degree, a, shifted))
}

/// Even degree from the whole `a_{uv}` table.
pub fn ext_even_exhaustive(i: &Rim, j: &Rim, degree: u32) -> Result<ExtDecomposition> {
    if degree % 2 == 1 || degree == 0 {
        return Err(Error::OddDegree(degree));
    }
    i.same_circle(j)?;
    let shifted = even_syzygy(i, degree / 2 - 1);
    if shifted.is_projective() {
        return Ok(ExtDecomposition::even(degree, 0, shifted));
    }
    let a = auv_table(&shifted, j)?
        .iter()
        .map(|e| e.value)
        .min()
        .expect("nonempty table");
    Ok(ExtDecomposition::even(degree, a, shifted))
}

pub fn ext(i: &Rim, j: &Rim, degree: u32) -> Result<ExtDecomposition> {
    ext_with_cap(i, j, degree, DEFAULT_MAX_DEGREE)
}

pub fn ext_with_cap(i: &Rim, j: &Rim, degree: u32, cap: u32) -> Result<ExtDecomposition> {
    check_degree(degree, cap)?;
    if degree % 2 == 1 {
        ext_odd(i, j, degree)
    } else {
        ext_even(i, j, degree)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VanishingCondition {
    /// `#J ∩ (u_next - (n-k), v] = 0`
    NothingBefore,
    /// `#J ∩ (v, u_prev + k] = k - |(u_prev, v]|`
    FilledAfter,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VanishingWitness {
    pub valley: usize,
    pub condition: VanishingCondition,
}

/// Decides `Ext^2(L_I, L_J) = 0` valley by valley, returning the first
/// valley that forces it.
pub fn ext2_vanishes(i: &Rim, j: &Rim) -> Result<Option<VanishingWitness>> {
    i.same_circle(j)?;
    if i.is_projective() {
        return Err(Error::ProjectiveModule);
    }
    let (n, k) = (i.n(), i.k() as i64);
    let peaks = i.peaks();
    for v in i.valleys() {
        let next = i.next_peak_after(v);
        let prev = *peaks
            .iter()
            .rev()
            .find(|&&u| u < v)
            .unwrap_or_else(|| peaks.last().expect("peak exists"));
        let before = EdgeInterval::new(n, next as i64 - (n as i64 - k), v as i64);
        if before.count_in(j) == 0 {
            return Ok(Some(VanishingWitness {
                valley: v,
                condition: VanishingCondition::NothingBefore,
            }));
        }
        let drop = EdgeInterval::new(n, prev as i64, v as i64).len() as i64;
        let after = EdgeInterval::new(n, v as i64, prev as i64 + k);
        if after.count_in(j) as i64 == k - drop {
            return Ok(Some(VanishingWitness {
                valley: v,
                condition: VanishingCondition::FilledAfter,
            }));
        }
    }
    Ok(None)
}

/// `dim Ext^1(L_I, L_J)` over all ordered pairs of k-subsets, in
/// lexicographic order of the subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionTable {
    pub n: usize,
    pub k: usize,
    pub rims: Vec<Rim>,
    pub dims: Vec<Vec<u64>>,
}

impl DimensionTable {
    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.dims[row][col]
    }

    pub fn is_symmetric(&self) -> bool {
        let m = self.rims.len();
        (0..m).all(|r| (0..r).all(|c| self.dims[r][c] == self.dims[c][r]))
    }
}

/// All k-subsets of `1..=n` in lexicographic order.
pub fn all_rims(n: usize, k: usize) -> Result<Vec<Rim>> {
    if n < 2 {
        return Err(Error::DegenerateCircle(n));
    }
    if k == 0 || k >= n {
        return Err(Error::DegenerateSubset { n, k });
    }
    (1..=n).combinations(k).map(|c| Rim::new(n, c)).collect()
}

pub fn ext1_dimension_table(n: usize, k: usize, cap: usize) -> Result<DimensionTable> {
    if n > cap {
        return Err(Error::TooLarge { size: n, cap });
    }
    let rims = all_rims(n, k)?;
    let dims = rims
        .par_iter()
        .map(|i| {
            rims.iter()
                .map(|j| ext1(i, j).map(|e| e.dimension))
                .collect::<Result<Vec<u64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DimensionTable { n, k, rims, dims })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rim(n: usize, labels: &[usize]) -> Rim {
        Rim::new(n, labels.iter().copied()).unwrap()
    }

    fn seven_of_fifteen() -> (Rim, Rim) {
        (
            rim(15, &[2, 4, 9, 11, 12, 14, 15]),
            rim(15, &[1, 2, 4, 6, 7, 10, 13]),
        )
    }

    fn prose_pair() -> (Rim, Rim) {
        (
            rim(15, &[1, 2, 4, 9, 11, 12, 14]),
            rim(15, &[1, 2, 10, 12, 13, 14, 15]),
        )
    }

    #[test]
    fn degree_one() {
        let (i, j) = seven_of_fifteen();
        let e = ext1(&i, &j).unwrap();
        assert_eq!(
            e.shape,
            ExtShape::OddLike {
                exponents: vec![1, 1]
            }
        );
        assert_eq!(e.dimension, 2);
        assert!(ext1(&i, &i).unwrap().is_zero());
        assert!(ext1(&rim(4, &[1, 2]), &rim(4, &[2, 3])).unwrap().is_zero());
        assert_eq!(
            ext1(&rim(4, &[1, 3]), &rim(4, &[2, 4])).unwrap().factors(),
            vec![1]
        );
        let (oracle, list) = ext1_oracle(&i, &j).unwrap();
        assert_eq!(oracle, e);
        assert_eq!(list.unit_count, 2);
    }

    #[test]
    fn odd_degrees() {
        let (i, j) = seven_of_fifteen();
        assert_eq!(ext_odd(&i, &j, 1).unwrap(), ext1(&i, &j).unwrap());
        let three = ext_odd(&i, &j, 3).unwrap();
        assert_eq!(three.context, rim(15, &[1, 3, 4, 6, 7, 9, 11]));
        assert_eq!(three.factors(), vec![1]);
        let alt = rim(8, &[1, 3, 5, 7]);
        let other = rim(8, &[1, 2, 5, 6]);
        assert_eq!(
            ext_odd(&alt, &other, 3).unwrap().factors(),
            ext1(&alt, &other).unwrap().factors()
        );
        assert_eq!(ext_odd(&i, &j, 2), Err(Error::EvenDegree(2)));
    }

    #[test]
    fn degree_two() {
        let (i, j) = prose_pair();
        let table = auv_table(&i, &j).unwrap();
        let a_10_9 = table.iter().find(|e| e.u == 10 && e.v == 9).unwrap();
        assert_eq!(a_10_9.value, 0);
        assert!(ext_even(&i, &j, 2).unwrap().is_zero());
        assert!(ext2_vanishes(&i, &j).unwrap().is_some());
        assert_eq!(ext1(&i, &j).unwrap().factors(), vec![1]);

        let (i, j) = seven_of_fifteen();
        assert_eq!(ext_even(&i, &j, 2).unwrap().dimension, 1);
        assert_eq!(ext2_vanishes(&i, &j).unwrap(), None);

        let sym = rim(4, &[1, 3]);
        assert!(auv_table(&sym, &sym).unwrap().iter().all(|e| e.value == 1));
        assert_eq!(
            ext_even(&sym, &sym, 2).unwrap().shape,
            ExtShape::EvenCyclic { a: 1 }
        );
        assert_eq!(ext_even(&i, &j, 3), Err(Error::OddDegree(3)));
    }

    #[test]
    fn projective_shortcuts() {
        let p = rim(5, &[1, 2, 3]);
        let j = rim(5, &[1, 3, 5]);
        assert!(ext(&p, &j, 1).unwrap().is_zero());
        assert!(ext(&p, &j, 2).unwrap().is_zero());
        assert_eq!(ext2_vanishes(&p, &j), Err(Error::ProjectiveModule));
    }

    #[test]
    fn dispatch_and_caps() {
        let (i, j) = seven_of_fifteen();
        assert_eq!(ext(&i, &j, 1).unwrap(), ext1(&i, &j).unwrap());
        assert_eq!(
            ext(&i, &j, 0),
            Err(Error::DegreeOutOfRange {
                degree: 0,
                cap: 1000
            })
        );
        assert!(ext_with_cap(&i, &j, 5, 4).is_err());
        assert!(matches!(
            ext(&i, &rim(15, &[1, 2]), 1),
            Err(Error::MismatchedParameters { .. })
        ));
    }

    #[test]
    fn small_tables() {
        let t = ext1_dimension_table(4, 2, DEFAULT_TABLE_CAP).unwrap();
        assert_eq!(t.rims.len(), 6);
        let nonzero: Vec<(String, String)> = (0..6)
            .flat_map(|r| (0..6).map(move |c| (r, c)))
            .filter(|&(r, c)| t.get(r, c) != 0)
            .map(|(r, c)| (t.rims[r].to_string(), t.rims[c].to_string()))
            .collect();
        assert_eq!(
            nonzero,
            vec![
                ("{1,3}".to_string(), "{2,4}".to_string()),
                ("{2,4}".to_string(), "{1,3}".to_string())
            ]
        );
        assert!(t.is_symmetric());
        assert_eq!(
            ext1_dimension_table(13, 2, DEFAULT_TABLE_CAP),
            Err(Error::TooLarge { size: 13, cap: 12 })
        );
    }
}
