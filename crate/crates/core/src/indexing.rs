//! Index combinatorics of `∧²[n]`.
//!
//! Indices are 1-based throughout, matching the usual notation `t_{i,j}`;
//! ranks (matrix row/column positions) are 0-based. Pairs are enumerated
//! lexicographically: `{1,2} ↦ 0, {1,3} ↦ 1, …, {n−1,n} ↦ N−1`.

use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(positive: bool) -> Sign {
        if positive {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(v: i64) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::Parse(format!("sign must be 1 or -1, got {v}"))),
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, o: Sign) -> Sign {
        Sign::of(self == o)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// `sign(i, j)`: `+1` if `i < j`, `−1` if `i > j`.
pub fn sign(i: usize, j: usize) -> Sign {
    debug_assert_ne!(i, j);
    Sign::of(i < j)
}

/// `C(n, 2)`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Recovers `n` from `N = C(n, 2)`.
pub fn rank_from_pair_count(big_n: usize) -> Option<usize> {
    (2..=big_n + 1).find(|&n| pair_count(n) == big_n)
}

fn check_range(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::BadIndex(format!("{i} not in [1, {n}]")));
    }
    Ok(())
}

/// A 2-subset `{i1 < i2}` of `[n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Index2 {
    i1: usize,
    i2: usize,
    n: usize,
}

impl Index2 {
    /// Builds the pair from already sorted entries.
    pub fn new(i1: usize, i2: usize, n: usize) -> Result<Index2> {
        check_range(i1, n)?;
        check_range(i2, n)?;
        if i1 >= i2 {
            return Err(Error::BadIndex(format!("pair ({i1},{i2}) is not increasing")));
        }
        Ok(Index2 { i1, i2, n })
    }

    pub fn first(&self) -> usize {
        self.i1
    }

    pub fn second(&self) -> usize {
        self.i2
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, k: usize) -> bool {
        self.i1 == k || self.i2 == k
    }

    pub fn as_array(&self) -> [usize; 2] {
        [self.i1, self.i2]
    }

    /// Lexicographic position in `[0, N)`.
    pub fn rank(&self) -> usize {
        let (a, b, n) = (self.i1, self.i2, self.n);
        (a - 1) * n - (a - 1) * a / 2 + (b - a - 1)
    }

    pub fn unrank(p: usize, n: usize) -> Result<Index2> {
        if p >= pair_count(n) {
            return Err(Error::BadIndex(format!("rank {p} out of range for n = {n}")));
        }
        let mut rest = p;
        for a in 1..n {
            let row = n - a;
            if rest < row {
                return Ok(Index2 { i1: a, i2: a + 1 + rest, n });
            }
            rest -= row;
        }
        unreachable!()
    }

    /// The element of `self` that is not `k`.
    pub fn other(&self, k: usize) -> Option<usize> {
        if self.i1 == k {
            Some(self.i2)
        } else if self.i2 == k {
            Some(self.i1)
        } else {
            None
        }
    }

    pub fn intersection(&self, other: &Index2) -> Vec<usize> {
        self.as_array().into_iter().filter(|&k| other.contains(k)).collect()
    }

    pub fn is_disjoint(&self, other: &Index2) -> bool {
        height(self, other) == 0
    }
}

impl fmt::Display for Index2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.i1, self.i2)
    }
}

impl Serialize for Index2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.as_array().serialize(s)
    }
}

/// Parsed pair entries before the ambient rank is known.
#[derive(Clone, Copy, Debug, Deserialize)]
pub struct RawPair(pub [usize; 2]);

impl RawPair {
    pub fn resolve(self, n: usize) -> Result<Index2> {
        Index2::new(self.0[0], self.0[1], n)
    }
}

/// Sorts `(i, j)` into a pair and reports `sign(i, j)`.
pub fn canon(i: usize, j: usize, n: usize) -> Result<(Index2, Sign)> {
    check_range(i, n)?;
    check_range(j, n)?;
    if i == j {
        return Err(Error::BadIndex(format!("repeated entry {i}")));
    }
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    Ok((Index2 { i1: a, i2: b, n }, sign(i, j)))
}

/// `|I ∩ J|`.
pub fn height(a: &Index2, b: &Index2) -> usize {
    a.as_array().iter().filter(|&&k| b.contains(k)).count()
}

fn permutation_sign(v: &[usize]) -> Sign {
    let mut inversions = 0;
    for x in 0..v.len() {
        for y in x + 1..v.len() {
            if v[x] > v[y] {
                inversions += 1;
            }
        }
    }
    Sign::of(inversions % 2 == 0)
}

/// Sign of the permutation sorting `(b1, b2, d1, d2)`.
pub fn shuffle_sign(b: &Index2, d: &Index2) -> Result<Sign> {
    if !b.is_disjoint(d) {
        return Err(Error::BadIndex(format!("{b} and {d} overlap")));
    }
    let s = permutation_sign(&[b.i1, b.i2, d.i1, d.i2]);
    Ok(crate::fault::shuffle_sign_hook(b, d, s))
}

macro_rules! sorted_subset {
    ($name:ident, $k:literal) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name {
            entries: [usize; $k],
            n: usize,
        }

        impl $name {
            pub fn new(entries: [usize; $k], n: usize) -> Result<Self> {
                for &e in &entries {
                    check_range(e, n)?;
                }
                if entries.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::BadIndex(format!("{:?} is not increasing", entries)));
                }
                Ok($name { entries, n })
            }

            pub fn entries(&self) -> [usize; $k] {
                self.entries
            }

            pub fn n(&self) -> usize {
                self.n
            }

            pub fn contains(&self, k: usize) -> bool {
                self.entries.contains(&k)
            }

            /// All subsets of `[n]` of this size, in lexicographic order.
            pub fn all(n: usize) -> Vec<$name> {
                let mut out = Vec::new();
                let mut cur = [0usize; $k];
                fn rec(pos: usize, start: usize, n: usize, cur: &mut [usize; $k], out: &mut Vec<$name>) {
                    if pos == $k {
                        out.push($name { entries: *cur, n });
                        return;
                    }
                    for v in start..=n {
                        cur[pos] = v;
                        rec(pos + 1, v + 1, n, cur, out);
                    }
                }
                rec(0, 1, n, &mut cur, &mut out);
                out
            }
        }

        impl Serialize for $name {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                self.entries.serialize(s)
            }
        }
    };
}

sorted_subset!(Index3, 3);
sorted_subset!(Index4, 4);

impl Index4 {
    /// The three ways of splitting into two pairs, each listed in both
    /// orders: six ordered splittings `(B, D)` with `B ⊔ D = H`.
    pub fn ordered_splittings(&self) -> [(Index2, Index2); 6] {
        let [a, b, c, d] = self.entries;
        let n = self.n;
        let p = |x, y| Index2 { i1: x, i2: y, n };
        [
            (p(a, b), p(c, d)),
            (p(c, d), p(a, b)),
            (p(a, c), p(b, d)),
            (p(b, d), p(a, c)),
            (p(a, d), p(b, c)),
            (p(b, c), p(a, d)),
        ]
    }

    /// `H ∖ A` for a pair `A ⊂ H`.
    pub fn complement(&self, a: &Index2) -> Option<Index2> {
        if !(self.contains(a.i1) && self.contains(a.i2)) {
            return None;
        }
        let rest: Vec<usize> = self.entries.iter().copied().filter(|&k| !a.contains(k)).collect();
        Some(Index2 { i1: rest[0], i2: rest[1], n: self.n })
    }

    pub fn from_union(a: &Index2, b: &Index2) -> Option<Index4> {
        if !a.is_disjoint(b) {
            return None;
        }
        let mut e = [a.i1, a.i2, b.i1, b.i2];
        e.sort_unstable();
        Some(Index4 { entries: e, n: a.n })
    }
}

/// All pairs of `[n]` in rank order.
pub fn all_pairs(n: usize) -> Vec<Index2> {
    (0..pair_count(n)).map(|p| Index2::unrank(p, n).unwrap()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: usize, b: usize, n: usize) -> Index2 {
        Index2::new(a, b, n).unwrap()
    }

    #[test]
    fn canon_examples() {
        assert_eq!(canon(1, 3, 5).unwrap(), (p(1, 3, 5), Sign::Plus));
        assert_eq!(canon(3, 1, 5).unwrap(), (p(1, 3, 5), Sign::Minus));
        assert!(canon(2, 2, 5).is_err());
        assert!(canon(0, 2, 5).is_err());
        assert!(canon(2, 6, 5).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(p(1, 2, 5).rank(), 0);
        assert_eq!(p(4, 5, 5).rank(), 9);
        assert_eq!(Index2::unrank(1, 5).unwrap(), p(1, 3, 5));
        assert!(Index2::unrank(10, 5).is_err());
    }

    #[test]
    fn rank_unrank_are_inverse() {
        for n in 3..=8 {
            let pairs = all_pairs(n);
            assert_eq!(pairs.len(), pair_count(n));
            for (k, pair) in pairs.iter().enumerate() {
                assert_eq!(pair.rank(), k);
            }
            // lexicographic order
            assert!(pairs.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn height_examples() {
        assert_eq!(height(&p(1, 2, 5), &p(1, 3, 5)), 1);
        assert_eq!(height(&p(1, 2, 5), &p(3, 4, 5)), 0);
        assert_eq!(height(&p(1, 2, 5), &p(1, 2, 5)), 2);
    }

    #[test]
    fn shuffle_sign_examples() {
        assert_eq!(shuffle_sign(&p(1, 2, 4), &p(3, 4, 4)).unwrap(), Sign::Plus);
        assert_eq!(shuffle_sign(&p(1, 3, 4), &p(2, 4, 4)).unwrap(), Sign::Minus);
        assert_eq!(shuffle_sign(&p(1, 4, 4), &p(2, 3, 4)).unwrap(), Sign::Plus);
        assert!(shuffle_sign(&p(1, 2, 4), &p(2, 3, 4)).is_err());
    }

    #[test]
    fn sign_is_antisymmetric() {
        for i in 1..=6 {
            for j in 1..=6 {
                if i != j {
                    assert_eq!(sign(i, j) * sign(j, i), Sign::Minus);
                }
            }
        }
    }

    #[test]
    fn shuffle_sign_flips_under_transposition() {
        // swapping the two pairs is an even permutation of four slots
        // (two transpositions); swapping within one pair is odd.
        for n in 4..=6 {
            for h in Index4::all(n) {
                for (b, d) in h.ordered_splittings() {
                    let s = shuffle_sign(&b, &d).unwrap();
                    let [b1, b2] = b.as_array();
                    let [d1, d2] = d.as_array();
                    assert_eq!(permutation_sign(&[b2, b1, d1, d2]), -s);
                    assert_eq!(permutation_sign(&[b1, d1, b2, d2]), -s);
                    assert_eq!(permutation_sign(&[b1, b2, d2, d1]), -s);
                    assert_eq!(shuffle_sign(&d, &b).unwrap(), s);
                }
            }
        }
    }

    #[test]
    fn subsets_enumerate() {
        assert_eq!(Index3::all(5).len(), 10);
        assert_eq!(Index4::all(6).len(), 15);
        let h = Index4::new([1, 2, 3, 4], 4).unwrap();
        assert_eq!(h.complement(&p(1, 3, 4)).unwrap(), p(2, 4, 4));
        assert!(Index4::new([1, 1, 2, 3], 4).is_err());
    }

    #[test]
    fn pair_count_roundtrip() {
        for n in 2..10 {
            assert_eq!(rank_from_pair_count(pair_count(n)), Some(n));
        }
        assert_eq!(rank_from_pair_count(7), None);
    }
}
