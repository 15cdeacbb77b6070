mod common;

use common::{any_rim, rim_pair, two_peak_rim};
use gext::*;
use num_integer::Integer;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

proptest! {
    #[test]
    fn peaks_and_valleys_alternate(i in any_rim(30)) {
        let peaks = i.peaks();
        let valleys = i.valleys();
        prop_assert_eq!(peaks.len(), valleys.len());
        prop_assert_eq!(peaks.len(), i.decompose().peak_count());
        let mut marks: Vec<(usize, bool)> = peaks.iter().map(|&u| (u, true)).collect();
        marks.extend(valleys.iter().map(|&v| (v, false)));
        marks.sort();
        for w in marks.windows(2) {
            prop_assert_ne!(w[0].1, w[1].1);
        }
    }

    #[test]
    fn decomposition_round_trip(i in any_rim(30)) {
        let d = i.decompose();
        prop_assert_eq!(d.downward().iter().sum::<usize>(), i.k());
        prop_assert_eq!(d.upward().iter().sum::<usize>(), i.n() - i.k());
        prop_assert_eq!(d.reconstruct().unwrap(), i);
    }

    #[test]
    fn height_profile_shape(i in any_rim(30)) {
        let h = i.height_profile();
        let (n, k) = (i.n() as i64, i.k() as i64);
        prop_assert_eq!(h.at(i.n()) - h.at(0), n - 2 * k);
        for (x, &y) in h.heights().iter().enumerate() {
            prop_assert_eq!((y - x as i64).rem_euclid(2), 0);
        }
        let ends = [h.at(0), h.at(i.n())];
        let valleys = i.valleys();
        prop_assert!(valleys.iter().any(|&v| h.at(v) == h.min()) || ends.contains(&h.min()));
        let peaks = i.peaks();
        prop_assert!(peaks.iter().any(|&u| h.at(u) == h.max()) || ends.contains(&h.max()));
    }

    #[test]
    fn shifts_compose(i in any_rim(30), a in -60i64..60, b in -60i64..60) {
        prop_assert_eq!(i.shift(a).shift(b), i.shift(a + b));
        prop_assert_eq!(i.shift(i.n() as i64), i.clone());
    }

    #[test]
    fn crossing_is_symmetric((i, j) in rim_pair(2, 20)) {
        prop_assert_eq!(is_noncrossing(&i, &j).unwrap(), is_noncrossing(&j, &i).unwrap());
    }

    #[test]
    fn period_routes_agree(i in any_rim(30)) {
        let closed = period_closed_form(&i);
        prop_assert_eq!(closed, period_iterative(&i));
        let (n, k) = (i.n() as u64, i.k() as u64);
        if let PeriodResult::Finite(m) = closed {
            prop_assert_eq!((2 * n / n.gcd(&k)) % m, 0);
            if i.peak_count() >= 3 {
                prop_assert_eq!(m % 2, 0);
            }
            prop_assert_eq!(syzygy_rim_even(&i, n / n.gcd(&k)).unwrap(), i.clone());
        } else {
            prop_assert!(i.is_projective());
        }
    }

    #[test]
    fn two_peak_syzygies_match_even_ones(i in two_peak_rim(8), t in 0u64..20) {
        prop_assert_eq!(
            syzygy_rim_two_peak(&i, 2 * t).unwrap(),
            syzygy_rim_even(&i, t).unwrap()
        );
        let odd = syzygy_rim_two_peak(&i, 2 * t + 1).unwrap();
        prop_assert_eq!(odd.peak_count(), 2);
    }

    #[test]
    fn presentation_matrix_has_two_diagonals(i in any_rim(30)) {
        prop_assume!(!i.is_projective());
        let d = build_d(&i);
        let p = d.cols.len();
        for idx in 0..p {
            prop_assert_eq!(d.entries.iter().filter(|e| e.row == idx).count(), 2);
            prop_assert_eq!(d.entries.iter().filter(|e| e.col == idx).count(), 2);
        }
    }

    #[test]
    fn oracle_ignores_permutations((i, j) in rim_pair(4, 14), seed in any::<u64>()) {
        prop_assume!(!i.is_projective());
        let d = build_dstar(&i, &j).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let mut rows: Vec<usize> = (0..d.nrows()).collect();
        let mut cols: Vec<usize> = (0..d.ncols()).collect();
        rows.shuffle(&mut rng);
        cols.shuffle(&mut rng);
        let base = snf_oracle(&d).unwrap();
        let shuffled = snf_oracle(&d.permuted(&rows, &cols)).unwrap();
        prop_assert_eq!(&base, &shuffled);
        prop_assert_eq!(base, invariant_factors(&d).unwrap());
    }

    #[test]
    fn unit_clearing_preserves_factors((i, j) in rim_pair(4, 14)) {
        prop_assume!(!i.is_projective());
        let d = build_dstar(&i, &j).unwrap();
        let full = snf_oracle(&d).unwrap();
        let (units, residual) = reduce_units(&d).unwrap();
        match residual {
            Residual::Empty => {
                prop_assert_eq!(full.unit_count, units);
                prop_assert!(full.exponents.is_empty());
            }
            Residual::Boxes(boxes) => {
                prop_assert!(boxes.pairs.iter().all(|&(a, b)| a > 0 && b > 0));
                let merged = box_merge_invariants(&boxes).unwrap();
                prop_assert_eq!(&merged.exponents, &full.exponents);
                if boxes.len() >= 2 {
                    let (a, b): (Vec<u32>, Vec<u32>) = boxes.pairs.iter().copied().unzip();
                    let labels: Vec<usize> = (0..a.len()).collect();
                    let rest = MonomialMatrix::cyclic_bidiagonal(labels.clone(), labels, &a, &b).unwrap();
                    let tail = snf_oracle(&rest).unwrap();
                    prop_assert_eq!(tail.exponents, full.exponents);
                    prop_assert_eq!(tail.unit_count + units, full.unit_count);
                }
            }
        }
    }

    #[test]
    fn box_merge_against_oracle(pairs in prop::collection::vec((1u32..6, 1u32..6), 1..7)) {
        // rebalance so the two sides carry the same total
        let mut pairs = pairs;
        let left: u32 = pairs.iter().map(|p| p.0).sum();
        let right: u32 = pairs.iter().map(|p| p.1).sum();
        let last = pairs.len() - 1;
        if left > right {
            pairs[last].1 += left - right;
        } else {
            pairs[last].0 += right - left;
        }
        let merged = box_merge_invariants(&BoxOffsets::new(pairs.clone())).unwrap();
        prop_assert_eq!(merged.exponents.len(), pairs.len() - 1);
        prop_assert!(merged.exponents.windows(2).all(|w| w[0] <= w[1]));
        if pairs.len() >= 2 {
            let (a, b): (Vec<u32>, Vec<u32>) = pairs.into_iter().unzip();
            let labels: Vec<usize> = (0..a.len()).collect();
            let m = MonomialMatrix::cyclic_bidiagonal(labels.clone(), labels, &a, &b).unwrap();
            prop_assert_eq!(snf_oracle(&m).unwrap(), merged);
        }
    }

    #[test]
    fn ext1_symmetric_beyond_exhaustive_range((i, j) in rim_pair(9, 14)) {
        prop_assert_eq!(ext1(&i, &j).unwrap().factors(), ext1(&j, &i).unwrap().factors());
    }

    #[test]
    fn ext_is_periodic((i, j) in rim_pair(3, 12), d in 1u32..=20) {
        prop_assume!(!i.is_projective());
        let m = period_closed_form(&i).finite().unwrap() as u32;
        prop_assert_eq!(
            ext(&i, &j, d).unwrap().factors(),
            ext(&i, &j, d + m).unwrap().factors()
        );
    }

    #[test]
    fn even_degree_matches_vanishing_test((i, j) in rim_pair(3, 14)) {
        prop_assume!(!i.is_projective());
        prop_assert_eq!(
            ext2_vanishes(&i, &j).unwrap().is_some(),
            ext(&i, &j, 2).unwrap().is_zero()
        );
    }
}
