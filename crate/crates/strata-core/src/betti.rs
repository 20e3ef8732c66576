//! Finitely supported tables of homology ranks.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

/// Map from degree to a positive rank, together with the top degree of the
/// ambient object (which bounds every supported degree from above).
///
/// Degrees are signed: reduced homology of the empty complex is rank 1 in
/// degree -1. All geometric inputs (links, catalog spaces) live in degrees
/// >= 0.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GradedBetti {
    ranks: BTreeMap<i64, usize>,
    top_degree: i64,
}

impl GradedBetti {
    /// Empty table with the given top degree.
    pub fn new(top_degree: i64) -> Self {
        GradedBetti {
            ranks: BTreeMap::new(),
            top_degree,
        }
    }

    /// Table from (degree, rank) pairs; zero ranks are dropped, and the top
    /// degree is raised if a supported degree exceeds it.
    pub fn from_pairs(pairs: &[(i64, usize)], top_degree: i64) -> Self {
        let mut t = Self::new(top_degree);
        for &(d, r) in pairs {
            t.set(d, r);
        }
        t
    }

    /// Set the rank at a degree (zero removes the entry).
    pub fn set(&mut self, degree: i64, rank: usize) {
        if rank == 0 {
            self.ranks.remove(&degree);
        } else {
            self.ranks.insert(degree, rank);
            if degree > self.top_degree {
                self.top_degree = degree;
            }
        }
    }

    /// Rank at a degree (zero when unsupported).
    pub fn rank(&self, degree: i64) -> usize {
        self.ranks.get(&degree).copied().unwrap_or(0)
    }

    pub fn top_degree(&self) -> i64 {
        self.top_degree
    }

    /// Same table with a (weakly larger) top degree.
    pub fn with_top_degree(mut self, top_degree: i64) -> Self {
        if top_degree > self.top_degree {
            self.top_degree = top_degree;
        }
        self
    }

    /// Supported (degree, rank) pairs in increasing degree order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.ranks.iter().map(|(&d, &r)| (d, r))
    }

    /// Degrees with nonzero rank, increasing.
    pub fn support(&self) -> Vec<i64> {
        self.ranks.keys().copied().collect()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Sum of all ranks.
    pub fn total_rank(&self) -> usize {
        self.ranks.values().sum()
    }

    /// Alternating sum of the stored ranks.
    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .map(|(&d, &r)| {
                let s = if d.rem_euclid(2) == 0 { 1 } else { -1 };
                s * r as i64
            })
            .sum()
    }

    /// Table shifted up by `offset` degrees (top degree shifts too).
    pub fn shifted(&self, offset: i64) -> Self {
        let mut t = Self::new(self.top_degree + offset);
        for (d, r) in self.iter() {
            t.set(d + offset, r);
        }
        t
    }

    /// Degreewise sum of two tables.
    pub fn sum(&self, other: &Self) -> Self {
        let mut t = Self::new(self.top_degree.max(other.top_degree));
        for (d, r) in self.iter() {
            t.set(d, r);
        }
        for (d, r) in other.iter() {
            t.set(d, t.rank(d) + r);
        }
        t
    }

    /// Degrees where the two tables disagree, increasing.
    pub fn differing_degrees(&self, other: &Self) -> Vec<i64> {
        let mut degrees: Vec<i64> = self
            .ranks
            .keys()
            .chain(other.ranks.keys())
            .copied()
            .collect();
        degrees.sort_unstable();
        degrees.dedup();
        degrees
            .into_iter()
            .filter(|&d| self.rank(d) != other.rank(d))
            .collect()
    }
}

fn fmt_table(t: &GradedBetti, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{{")?;
    for (i, (d, r)) in t.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{}: {}", d, r)?;
    }
    write!(f, "}}")
}

impl fmt::Debug for GradedBetti {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_table(self, f)
    }
}

impl fmt::Display for GradedBetti {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_table(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_ranks_are_not_stored() {
        let mut t = GradedBetti::new(3);
        t.set(2, 1);
        t.set(2, 0);
        assert!(t.is_empty());
        assert_eq!(t.rank(2), 0);
    }

    #[test]
    fn top_degree_tracks_support() {
        let t = GradedBetti::from_pairs(&[(5, 2)], 3);
        assert_eq!(t.top_degree(), 5);
    }

    #[test]
    fn euler_characteristic_alternates() {
        let t = GradedBetti::from_pairs(&[(0, 1), (1, 2), (2, 4)], 2);
        assert_eq!(t.euler_characteristic(), 3);
    }

    #[test]
    fn shift_moves_support_and_top() {
        let t = GradedBetti::from_pairs(&[(3, 1)], 3).shifted(1);
        assert_eq!(t.rank(4), 1);
        assert_eq!(t.top_degree(), 4);
    }

    #[test]
    fn differing_degrees_is_symmetric_difference_on_values() {
        let a = GradedBetti::from_pairs(&[(4, 1), (5, 1)], 9);
        let b = GradedBetti::from_pairs(&[(5, 1), (9, 1)], 9);
        assert_eq!(a.differing_degrees(&b), alloc::vec![4, 9]);
    }
}
