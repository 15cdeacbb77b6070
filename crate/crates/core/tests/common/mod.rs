#![allow(dead_code)]

use gext::Rim;
use itertools::Itertools;
use proptest::prelude::*;

pub fn rim(n: usize, labels: &[usize]) -> Rim {
    Rim::new(n, labels.iter().copied()).unwrap()
}

/// Every k-subset for every admissible k, for each n in the range.
pub fn all_pairs(ns: std::ops::RangeInclusive<usize>) -> impl Iterator<Item = (Rim, Rim)> {
    ns.flat_map(|n| (1..n).map(move |k| (n, k)))
        .flat_map(|(n, k)| {
            let rims: Vec<Rim> = (1..=n)
                .combinations(k)
                .map(|c| Rim::new(n, c).unwrap())
                .collect();
            let pairs: Vec<(Rim, Rim)> = rims
                .iter()
                .cartesian_product(&rims)
                .map(|(a, b)| (a.clone(), b.clone()))
                .collect();
            pairs
        })
}

pub fn all_rims(ns: std::ops::RangeInclusive<usize>) -> impl Iterator<Item = Rim> {
    ns.flat_map(|n| {
        (1..n)
            .flat_map(move |k| (1..=n).combinations(k))
            .map(move |c| Rim::new(n, c).unwrap())
    })
}

pub fn rim_on(n: usize, k: usize) -> impl Strategy<Value = Rim> {
    proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), k)
        .prop_map(move |labels| Rim::new(n, labels).unwrap())
}

pub fn any_rim(max_n: usize) -> impl Strategy<Value = Rim> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_flat_map(|(n, k)| rim_on(n, k))
}

pub fn rim_pair(min_n: usize, max_n: usize) -> impl Strategy<Value = (Rim, Rim)> {
    (min_n..=max_n)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_flat_map(|(n, k)| (rim_on(n, k), rim_on(n, k)))
}

/// `min_x (h_B(x) - h_A(x))`: how far the lattice of `A` must drop to fit
/// under `B`.
pub fn placement(a: &Rim, b: &Rim) -> i64 {
    let ha = a.height_profile();
    let hb = b.height_profile();
    (0..=a.n()).map(|x| hb.at(x) - ha.at(x)).min().unwrap()
}

/// Rims with exactly two peaks, built from slope lengths and a rotation.
pub fn two_peak_rim(max_part: usize) -> impl Strategy<Value = Rim> {
    (
        1..=max_part,
        1..=max_part,
        1..=max_part,
        1..=max_part,
        0usize..64,
    )
        .prop_map(|(d1, l1, d2, l2, turn)| {
            let n = d1 + l1 + d2 + l2;
            let labels = (1..=d1).chain(d1 + l1 + 1..=d1 + l1 + d2);
            Rim::new(n, labels).unwrap().shift(turn as i64)
        })
}
