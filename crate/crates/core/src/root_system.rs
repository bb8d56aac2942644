//! Finite crystallographic root systems in Bourbaki numbering.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ratpoly::MAX_VARS;

/// Cartan type letter and rank, e.g. `B3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub letter: char,
    pub rank: usize,
}

impl CartanType {
    pub fn new(letter: char, rank: usize) -> Result<Self> {
        let letter = letter.to_ascii_uppercase();
        let ok = match letter {
            'A' => (1..=MAX_VARS).contains(&rank),
            'B' | 'C' => (2..=MAX_VARS).contains(&rank),
            'D' => (4..=MAX_VARS).contains(&rank),
            'E' => (6..=8).contains(&rank),
            'F' => rank == 4,
            'G' => rank == 2,
            _ => false,
        };
        if ok {
            Ok(Self { letter, rank })
        } else {
            Err(Error::UnknownType(format!("{letter}{rank}")))
        }
    }

    /// `a[i][j] = <alpha_j, alpha_i^vee>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.letter {
            'A' | 'B' | 'C' | 'F' | 'G' => {
                for i in 0..n.saturating_sub(1) {
                    link(i, i + 1);
                }
            }
            'D' => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            'E' => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            _ => unreachable!(),
        }
        match self.letter {
            // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            'B' => a[n - 1][n - 2] = -2,
            // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
            'C' => a[n - 2][n - 1] = -2,
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            'F' => a[2][1] = -2,
            // alpha_1 short, alpha_2 long
            'G' => a[0][1] = -3,
            _ => {}
        }
        a
    }

    /// Number of positive roots, from the classification.
    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match (self.letter, n) {
            ('A', _) => n * (n + 1) / 2,
            ('B' | 'C', _) => n * n,
            ('D', _) => n * (n - 1),
            ('E', 6) => 36,
            ('E', 7) => 63,
            ('E', 8) => 120,
            ('F', 4) => 24,
            ('G', 2) => 6,
            _ => unreachable!(),
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| Error::UnknownType(s.into()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(s.into()))?;
        CartanType::new(letter, rank)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

/// Integral weight in fundamental-weight coordinates, so
/// `<lambda, alpha_i^vee> = coords[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// Half the sum of the positive roots: all ones.
    pub fn rho(rank: usize) -> Self {
        Weight(vec![1; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn pair_simple_coroot(&self, i: usize) -> i64 {
        self.0[i]
    }

    /// `<lambda, beta^vee>` for a coroot given in simple-coroot coordinates.
    pub fn pair_coroot(&self, coroot: &[i64]) -> i64 {
        self.0.iter().zip(coroot).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    /// `<lambda + rho, alpha_i^vee>` for each simple `i`.
    pub fn shifted_pairings(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.iter().map(|c| c + 1)
    }

    /// `<lambda + rho, alpha^vee> >= 0` for all simple `alpha`.
    pub fn is_dot_dominant(&self) -> bool {
        self.shifted_pairings().all(|p| p >= 0)
    }

    /// `<lambda + rho, alpha^vee> <= 0` for all simple `alpha`.
    pub fn is_dot_antidominant(&self) -> bool {
        self.shifted_pairings().all(|p| p <= 0)
    }
}

/// Cartan matrix with positive roots and coroots.
#[derive(Debug, Clone)]
pub struct RootDatum {
    pub kind: CartanType,
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, sorted by height then
    /// lexicographically.
    pub pos_roots: Vec<Vec<i64>>,
    /// `pos_coroots[k]` is the coroot of `pos_roots[k]` in simple-coroot
    /// coordinates.
    pub pos_coroots: Vec<Vec<i64>>,
}

impl RootDatum {
    /// Closes the simple roots under simple reflections and keeps the
    /// positive ones. Coroots are carried along by the dual action.
    pub fn new(kind: CartanType) -> Self {
        let cartan = kind.cartan_matrix();
        let n = kind.rank;
        let unit = |i: usize| {
            let mut e = vec![0i64; n];
            e[i] = 1;
            e
        };
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<(Vec<i64>, Vec<i64>)> = VecDeque::new();
        let mut pairs = Vec::new();
        for i in 0..n {
            seen.insert(unit(i));
            queue.push_back((unit(i), unit(i)));
        }
        while let Some((root, coroot)) = queue.pop_front() {
            for i in 0..n {
                // <root, alpha_i^vee> = sum_j c_j a_{ij}
                let p: i64 = (0..n).map(|j| root[j] * cartan[i][j]).sum();
                // <alpha_i, coroot> = sum_j d_j a_{ji}
                let q: i64 = (0..n).map(|j| coroot[j] * cartan[j][i]).sum();
                let mut r = root.clone();
                r[i] -= p;
                let mut c = coroot.clone();
                c[i] -= q;
                if seen.insert(r.clone()) {
                    queue.push_back((r, c));
                }
            }
            if root.iter().all(|&c| c >= 0) {
                pairs.push((root, coroot));
            }
        }
        pairs.sort_by(|a, b| {
            let ha: i64 = a.0.iter().sum();
            let hb: i64 = b.0.iter().sum();
            ha.cmp(&hb).then_with(|| b.0.cmp(&a.0))
        });
        let (pos_roots, pos_coroots) = pairs.into_iter().unzip();
        Self {
            kind,
            cartan,
            pos_roots,
            pos_coroots,
        }
    }

    pub fn rank(&self) -> usize {
        self.kind.rank
    }

    /// A root in simple-root coordinates expressed in fundamental-weight
    /// coordinates: `alpha_j = sum_i a_{ij} omega_i`.
    pub fn root_to_weight(&self, root: &[i64]) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|i| (0..n).map(|j| self.cartan[i][j] * root[j]).sum())
                .collect(),
        )
    }

    pub fn simple_root_weight(&self, j: usize) -> Weight {
        Weight((0..self.rank()).map(|i| self.cartan[i][j]).collect())
    }

    /// `{i : <lambda + rho, alpha_i^vee> = 0}`.
    pub fn singularity_subset(&self, lambda: &Weight) -> SimpleSubset {
        SimpleSubset::from_indices(
            lambda
                .shifted_pairings()
                .enumerate()
                .filter(|(_, p)| *p == 0)
                .map(|(i, _)| i),
        )
    }

    /// As [`Self::singularity_subset`], but rejects weights that are neither
    /// dot-dominant nor dot-antidominant.
    pub fn canonical_singularity_subset(&self, lambda: &Weight) -> Result<SimpleSubset> {
        self.check_rank(lambda)?;
        if lambda.is_dot_dominant() || lambda.is_dot_antidominant() {
            Ok(self.singularity_subset(lambda))
        } else {
            Err(Error::NotCanonical(lambda.0.clone()))
        }
    }

    pub fn check_rank(&self, lambda: &Weight) -> Result<()> {
        if lambda.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: self.rank(),
                got: lambda.rank(),
            })
        }
    }

    /// The antidominant weight whose singularity subset is `subset`:
    /// `<lambda + rho, alpha_i^vee>` is 0 on the subset and -1 elsewhere.
    pub fn antidominant_with_singularity(&self, subset: &SimpleSubset) -> Weight {
        Weight(
            (0..self.rank())
                .map(|i| if subset.contains(i) { -1 } else { -2 })
                .collect(),
        )
    }
}

/// A set of simple-root indices (0-based internally).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct SimpleSubset(u16);

impl SimpleSubset {
    pub fn empty() -> Self {
        Self(0)
    }

    pub fn full(rank: usize) -> Self {
        Self(((1u32 << rank) - 1) as u16)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Self(indices.into_iter().fold(0u16, |acc, i| acc | (1 << i)))
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..16).filter(move |&i| self.contains(i))
    }

    pub fn is_subset_of(&self, other: &SimpleSubset) -> bool {
        self.0 & !other.0 == 0
    }

    /// All subsets of `{0..rank}`, in increasing bitmask order.
    pub fn all(rank: usize) -> impl Iterator<Item = SimpleSubset> {
        (0u16..(1u16 << rank)).map(SimpleSubset)
    }

    /// Parse comma-separated 1-based indices; the empty string is the empty
    /// set.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let mut out = Self::empty();
        for part in s.split(',') {
            let i: usize = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad index `{part}`")))?;
            if i == 0 || i > rank {
                return Err(Error::BadIndex(i));
            }
            out.0 |= 1 << (i - 1);
        }
        Ok(out)
    }
}

impl fmt::Display for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_root_counts() {
        for s in [
            "A1", "A2", "A3", "A5", "B2", "B3", "C3", "D4", "D5", "E6", "F4", "G2",
        ] {
            let kind: CartanType = s.parse().unwrap();
            let d = RootDatum::new(kind);
            assert_eq!(d.pos_roots.len(), kind.num_positive_roots(), "{s}");
            assert_eq!(d.pos_coroots.len(), d.pos_roots.len());
        }
    }

    #[test]
    fn a2_roots() {
        let d = RootDatum::new("A2".parse().unwrap());
        assert_eq!(d.pos_roots, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn cartan_shape() {
        for s in ["B3", "C4", "F4", "G2", "E7", "D6"] {
            let a = s.parse::<CartanType>().unwrap().cartan_matrix();
            for (i, row) in a.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    if i == j {
                        assert_eq!(x, 2);
                    } else {
                        assert!(x <= 0);
                        assert_eq!(x == 0, a[j][i] == 0);
                    }
                }
            }
        }
    }

    #[test]
    fn g2_coroots_pair_to_two() {
        let d = RootDatum::new("G2".parse().unwrap());
        for (r, c) in d.pos_roots.iter().zip(&d.pos_coroots) {
            let w = d.root_to_weight(r);
            assert_eq!(w.pair_coroot(c), 2);
        }
    }

    #[test]
    fn unknown_types() {
        for s in [
            "A0", "B1", "D3", "E5", "E9", "F3", "G3", "H3", "X2", "", "A",
        ] {
            assert!(s.parse::<CartanType>().is_err(), "{s}");
        }
    }

    #[test]
    fn singularity_examples() {
        let d = RootDatum::new("A2".parse().unwrap());
        assert!(d.singularity_subset(&Weight::zero(2)).is_empty());
        assert_eq!(
            d.singularity_subset(&Weight(vec![-1, -1])),
            SimpleSubset::full(2)
        );
        assert_eq!(
            d.singularity_subset(&Weight(vec![-1, 0])),
            SimpleSubset::from_indices([0])
        );
        assert!(matches!(
            d.canonical_singularity_subset(&Weight(vec![-3, 2])),
            Err(Error::NotCanonical(_))
        ));
    }

    #[test]
    fn subset_parse() {
        assert_eq!(SimpleSubset::parse("", 3).unwrap(), SimpleSubset::empty());
        assert_eq!(
            SimpleSubset::parse("1, 3", 3).unwrap(),
            SimpleSubset::from_indices([0, 2])
        );
        assert!(SimpleSubset::parse("4", 3).is_err());
        assert!(SimpleSubset::parse("x", 3).is_err());
        assert_eq!(SimpleSubset::from_indices([0, 2]).to_string(), "{1,3}");
    }
}
