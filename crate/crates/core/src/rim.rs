//! Rims: k-subsets of the edge set of the n-cycle.
//!
//! Edge `i` joins vertices `i-1` and `i`; both edges and vertices carry labels
//! in `1..=n`, with vertex `n` doubling as vertex `0`. A rim `I` is drawn as a
//! lattice path that steps down across every edge of `I` and up across every
//! other edge.

use std::fmt;

use crate::error::{Error, Result};
use crate::trapezia;

/// Reduces an integer into the label range `1..=n`.
pub fn wrap(n: usize, x: i64) -> usize {
    ((x - 1).rem_euclid(n as i64) + 1) as usize
}

/// The edges strictly after vertex `from` up to and including vertex `to`,
/// i.e. `{from+1, ..., to}` reduced into `1..=n`.
///
/// Every cyclic interval in the crate, half-open or not, is expressed through
/// this type. An interval from a vertex to itself is empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeInterval {
    n: usize,
    from: usize,
    to: usize,
}

impl EdgeInterval {
    pub fn new(n: usize, from: i64, to: i64) -> Self {
        EdgeInterval {
            n,
            from: wrap(n, from),
            to: wrap(n, to),
        }
    }

    pub fn from(&self) -> usize {
        self.from
    }

    pub fn to(&self) -> usize {
        self.to
    }

    pub fn len(&self) -> usize {
        (self.to + self.n - self.from) % self.n
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.len()).map(move |i| wrap(self.n, (self.from + i) as i64))
    }

    /// `#(interval ∩ I)`
    pub fn count_in(&self, rim: &Rim) -> usize {
        self.edges().filter(|&e| rim.contains(e)).count()
    }

    /// `#(interval ∖ I)`
    pub fn count_outside(&self, rim: &Rim) -> usize {
        self.len() - self.count_in(rim)
    }
}

/// A k-subset of `{1..n}` with `1 <= k <= n-1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rim {
    n: usize,
    k: usize,
    members: Vec<bool>,
}

impl Rim {
    pub fn new<T: IntoIterator<Item = usize>>(n: usize, labels: T) -> Result<Self> {
        if n < 2 {
            return Err(Error::DegenerateCircle(n));
        }
        let mut members = vec![false; n];
        let mut k = 0;
        for label in labels {
            if label == 0 || label > n {
                return Err(Error::LabelOutOfRange { label, n });
            }
            if members[label - 1] {
                return Err(Error::DuplicateLabel(label));
            }
            members[label - 1] = true;
            k += 1;
        }
        if k == 0 || k == n {
            return Err(Error::DegenerateSubset { n, k });
        }
        Ok(Rim { n, k, members })
    }

    /// Like [`Rim::new`], additionally checking `|labels| = k`.
    pub fn with_k<T: IntoIterator<Item = usize>>(n: usize, k: usize, labels: T) -> Result<Self> {
        if n < 2 {
            return Err(Error::DegenerateCircle(n));
        }
        if k == 0 || k >= n {
            return Err(Error::DegenerateSubset { n, k });
        }
        let rim = Rim::new(n, labels)?;
        if rim.k != k {
            return Err(Error::WrongCardinality {
                expected: k,
                found: rim.k,
            });
        }
        Ok(rim)
    }

    /// Parses comma-separated, strictly ascending labels such as `"1,2,4,5"`.
    pub fn parse(n: usize, k: usize, text: &str) -> Result<Self> {
        let mut labels = Vec::new();
        let mut last = 0usize;
        for raw in text.split(',') {
            let token = raw.trim();
            if token.is_empty() {
                return Err(Error::BadToken {
                    token: raw.to_string(),
                    reason: "empty label",
                });
            }
            let label: usize = token.parse().map_err(|_| Error::BadToken {
                token: token.to_string(),
                reason: "not a positive integer",
            })?;
            if label == 0 || label > n {
                return Err(Error::BadToken {
                    token: token.to_string(),
                    reason: "label out of range 1..=n",
                });
            }
            if label == last {
                return Err(Error::BadToken {
                    token: token.to_string(),
                    reason: "duplicate label",
                });
            }
            if label < last {
                return Err(Error::BadToken {
                    token: token.to_string(),
                    reason: "labels must be ascending",
                });
            }
            last = label;
            labels.push(label);
        }
        Rim::with_k(n, k, labels)
    }

    /// The rim `{j+1, ..., j+k}` of the indecomposable projective `P_j`.
    pub fn projective(n: usize, k: usize, j: usize) -> Result<Self> {
        Rim::with_k(n, k, (1..=k).map(|i| wrap(n, (j + i) as i64)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn contains(&self, label: usize) -> bool {
        self.members[wrap(self.n, label as i64) - 1]
    }

    pub fn elements(&self) -> Vec<usize> {
        (1..=self.n).filter(|&e| self.members[e - 1]).collect()
    }

    /// Vertices `u ∉ I` with `u+1 ∈ I`, ascending.
    pub fn peaks(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&u| !self.contains(u) && self.contains(u + 1))
            .collect()
    }

    /// Vertices `v ∈ I` with `v+1 ∉ I`, ascending.
    pub fn valleys(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&v| self.contains(v) && !self.contains(v + 1))
            .collect()
    }

    pub fn peak_count(&self) -> usize {
        self.peaks().len()
    }

    /// Interval rims give the indecomposable projectives.
    pub fn is_projective(&self) -> bool {
        self.peak_count() == 1
    }

    pub fn same_circle(&self, other: &Rim) -> Result<()> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::MismatchedParameters {
                n1: self.n,
                k1: self.k,
                n2: other.n,
                k2: other.k,
            });
        }
        Ok(())
    }

    /// First peak strictly after `vertex` in cyclic order.
    pub fn next_peak_after(&self, vertex: usize) -> usize {
        (1..=self.n)
            .map(|i| wrap(self.n, (vertex + i) as i64))
            .find(|&u| !self.contains(u) && self.contains(u + 1))
            .expect("a proper subset always has a peak")
    }

    /// Last valley strictly before `vertex` in cyclic order.
    pub fn prev_valley_before(&self, vertex: usize) -> usize {
        (1..=self.n)
            .map(|i| wrap(self.n, vertex as i64 - i as i64))
            .find(|&v| self.contains(v) && !self.contains(v + 1))
            .expect("a proper subset always has a valley")
    }

    /// Maximal runs of `I` and of its complement.
    ///
    /// The first segment is the one starting right after the peak that
    /// follows the largest valley label.
    pub fn decompose(&self) -> SegmentDecomposition {
        let largest_valley = *self.valleys().last().expect("valley exists");
        let start = wrap(self.n, self.next_peak_after(largest_valley) as i64 + 1);
        let mut segments = Vec::new();
        let mut gaps = Vec::new();
        let mut i = 0;
        while i < self.n {
            let e = wrap(self.n, (start + i) as i64);
            let inside = self.contains(e);
            let mut len = 0;
            while i < self.n && self.contains(start + i) == inside {
                len += 1;
                i += 1;
            }
            if inside {
                segments.push(Segment { start: e, len });
            } else {
                gaps.push(len);
            }
        }
        SegmentDecomposition {
            n: self.n,
            segments,
            gaps,
        }
    }

    pub fn height_profile(&self) -> HeightProfile {
        let mut heights = Vec::with_capacity(self.n + 1);
        heights.push(0i64);
        for e in 1..=self.n {
            let prev = heights[e - 1];
            heights.push(if self.contains(e) { prev - 1 } else { prev + 1 });
        }
        HeightProfile { heights }
    }

    /// Translates every label by `delta` modulo `n`.
    pub fn shift(&self, delta: i64) -> Rim {
        let mut members = vec![false; self.n];
        for e in self.elements() {
            members[wrap(self.n, e as i64 + delta) - 1] = true;
        }
        Rim {
            n: self.n,
            k: self.k,
            members,
        }
    }

    /// Comma-separated labels, the same syntax [`Rim::parse`] reads.
    pub fn to_label_string(&self) -> String {
        self.elements()
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Debug for Rim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rim(n={}, {{{}}})", self.n, self.to_label_string())
    }
}

impl fmt::Display for Rim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_label_string())
    }
}

/// Two rims are noncrossing when their reduced trapezium word has at most one box.
pub fn is_noncrossing(i: &Rim, j: &Rim) -> Result<bool> {
    Ok(trapezia::build_word(i, j)?.box_count() <= 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Segment {
    pub start: usize,
    pub len: usize,
}

/// `I = A_1 ∪ ... ∪ A_{r+1}` with `|A_i| = d_i` and a gap of `l_i` after `A_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentDecomposition {
    n: usize,
    segments: Vec<Segment>,
    gaps: Vec<usize>,
}

impl SegmentDecomposition {
    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn gaps(&self) -> &[usize] {
        &self.gaps
    }

    pub fn downward(&self) -> Vec<usize> {
        self.segments.iter().map(|s| s.len).collect()
    }

    pub fn upward(&self) -> Vec<usize> {
        self.gaps.clone()
    }

    pub fn peak_count(&self) -> usize {
        self.segments.len()
    }

    pub fn reconstruct(&self) -> Result<Rim> {
        Rim::new(
            self.n,
            self.segments
                .iter()
                .flat_map(|s| (0..s.len).map(move |i| wrap(self.n, (s.start + i) as i64))),
        )
    }
}

/// Heights `h(0..=n)` of the rim's lattice path, `h(0) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightProfile {
    heights: Vec<i64>,
}

impl HeightProfile {
    pub fn heights(&self) -> &[i64] {
        &self.heights
    }

    /// Height at vertex `0..=n`.
    pub fn at(&self, vertex: usize) -> i64 {
        self.heights[vertex]
    }

    pub fn min(&self) -> i64 {
        *self.heights.iter().min().expect("nonempty")
    }

    pub fn max(&self) -> i64 {
        *self.heights.iter().max().expect("nonempty")
    }
}
