//! Route-against-route checks over every rim or pair of rims on small circles.

mod common;

use common::{all_pairs, all_rims, placement};
use gext::resolution::first_syzygy_two_peak;
use gext::*;

#[test]
fn periods_agree_up_to_ten() {
    for i in all_rims(2..=10) {
        assert_eq!(period_closed_form(&i), period_iterative(&i), "{i:?}");
    }
}

/// `a_{uv}` recomputed from how far lattices can be pushed into one another:
/// the composite `P_{u+k} → L_{I+k} → P_v → L_J` measured in powers of `t`.
fn auv_from_heights(i: &Rim, j: &Rim, u: usize, v: usize) -> i64 {
    let (n, k) = (i.n(), i.k());
    let next = i.shift(k as i64);
    let pw = Rim::projective(n, k, (u + k - 1) % n + 1).unwrap();
    let pv = Rim::projective(n, k, v).unwrap();
    let total =
        placement(&pw, j) - placement(&pw, &next) - placement(&next, &pv) - placement(&pv, j);
    assert!(total >= 0 && total % 2 == 0, "{i:?} {j:?} {u} {v}: {total}");
    total / 2
}

#[test]
fn auv_table_matches_heights() {
    for (i, j) in all_pairs(2..=8).filter(|(i, _)| !i.is_projective()) {
        for e in auv_table(&i, &j).unwrap() {
            assert_eq!(
                e.value as i64,
                auv_from_heights(&i, &j, e.u, e.v),
                "{i:?} {j:?} u={} v={}",
                e.u,
                e.v
            );
        }
    }
}

#[test]
fn even_degree_shortcut_matches_table() {
    for (i, j) in all_pairs(2..=8) {
        for d in [2, 4] {
            assert_eq!(
                ext(&i, &j, d).unwrap(),
                ext_even_exhaustive(&i, &j, d).unwrap(),
                "{i:?} {j:?} degree {d}"
            );
        }
    }
}

#[test]
fn two_peak_second_degree_via_first_syzygy() {
    for (i, j) in all_pairs(2..=8).filter(|(i, _)| i.peak_count() == 2) {
        let omega = first_syzygy_two_peak(&i).unwrap();
        assert_eq!(
            ext(&i, &j, 2).unwrap().factors(),
            ext1(&omega, &j).unwrap().factors(),
            "{i:?} {j:?}"
        );
    }
}

#[test]
fn word_structure() {
    for (i, j) in all_pairs(2..=8) {
        let w = build_word(&i, &j).unwrap();
        let mismatch = i.elements().iter().filter(|&&e| !j.contains(e)).count();
        let left: usize = w.boxes().iter().map(|b| b.left).sum();
        let right: usize = w.boxes().iter().map(|b| b.right).sum();
        assert_eq!((left, right), (mismatch, mismatch));
        assert_eq!(w.box_count() == 0, i == j);

        let back = build_word(&j, &i).unwrap();
        let mut forward: Vec<(usize, usize, bool)> = w
            .letters()
            .iter()
            .map(|l| (l.start_edge, l.length, l.kind == LetterKind::L))
            .collect();
        let mut flipped: Vec<(usize, usize, bool)> = back
            .letters()
            .iter()
            .map(|l| (l.start_edge, l.length, l.kind == LetterKind::R))
            .collect();
        forward.sort();
        flipped.sort();
        assert_eq!(forward, flipped, "{i:?} {j:?}");
    }
}

#[test]
fn kernel_relation_and_corank() {
    for (i, j) in all_pairs(2..=8).filter(|(i, _)| !i.is_projective()) {
        let kc = kernel_coefficients(&i, &j).unwrap();
        assert_eq!(kc.alphas.iter().min(), Some(&0));
        let d = build_dstar(&i, &j).unwrap();
        let (a, b) = d.bidiagonal_exponents().unwrap();
        let p = a.len();
        for (idx, &ai) in a.iter().enumerate() {
            let prev = (idx + p - 1) % p;
            assert_eq!(ai + kc.alphas[idx], b[prev] + kc.alphas[prev]);
        }
        let list = invariant_factors(&d).unwrap();
        assert_eq!(list.zero_count, 1);
        assert_eq!(list.len(), p);

        let s = build_word(&i, &j).unwrap().box_count();
        assert_eq!(ext1(&i, &j).unwrap().factors().len(), s.saturating_sub(1));
    }
}

#[test]
fn dstar_exponents_from_letters() {
    for (i, j) in all_pairs(2..=8).filter(|(i, _)| !i.is_projective()) {
        let w = build_word(&i, &j).unwrap();
        let d = build_dstar(&i, &j).unwrap();
        let (a, b) = d.bidiagonal_exponents().unwrap();
        let n = i.n();
        let rows = d.row_labels();
        let cols = d.col_labels();
        // Between a valley and the next peak I only climbs, so its J-edges
        // there are exactly the left letters; between a peak and the next
        // valley the non-J edges are exactly the right letters.
        let count = |from: usize, to: usize, kind: LetterKind| -> u32 {
            let arc: Vec<usize> = EdgeInterval::new(n, from as i64, to as i64)
                .edges()
                .collect();
            w.letters()
                .iter()
                .filter(|l| l.kind == kind)
                .flat_map(|l| l.edges(n))
                .filter(|e| arc.contains(e))
                .count() as u32
        };
        let p = cols.len();
        for idx in 0..p {
            assert_eq!(a[idx], count(rows[idx], cols[idx], LetterKind::L));
            assert_eq!(b[idx], count(cols[idx], rows[(idx + 1) % p], LetterKind::R));
        }
    }
}

#[test]
fn canonical_offset_is_smallest_fit() {
    for (i, j) in all_pairs(2..=7) {
        let offset = canonical_hom_offset(&i, &j).unwrap() as i64;
        assert_eq!(2 * offset, -placement(&i, &j), "{i:?} {j:?}");
    }
}
