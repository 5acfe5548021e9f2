//! Plücker relations on columns, the bilinear membership test for the
//! exterior square of `GL_n`, and the block-zero check for matrices with a
//! standard column.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::indexing::{all_pairs, canon, pair_count, rank_from_pair_count, shuffle_sign, Index2, Index3, Index4, Sign};
use crate::linalg::SquareMatrix;
use crate::ring::{RingDescriptor, RingElem};

/// A vector of `R^N`, `N = C(n,2)`, indexed by pairs in rank order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnVector {
    n: usize,
    entries: Vec<RingElem>,
}

impl ColumnVector {
    pub fn new(n: usize, entries: Vec<RingElem>) -> Result<ColumnVector> {
        if entries.len() != pair_count(n) {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for rank {n} (need {})",
                entries.len(),
                pair_count(n)
            )));
        }
        if let Some(first) = entries.first() {
            if entries.iter().any(|e| !e.same_ring(first)) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(ColumnVector { n, entries })
    }

    /// Column `J` of an `N × N` matrix.
    pub fn from_column(g: &SquareMatrix, j: &Index2) -> Result<ColumnVector> {
        let n = ambient(g)?;
        ColumnVector::new(n, g.column(j.rank()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[RingElem] {
        &self.entries
    }

    /// The entry stored at the canonical pair `{a, b}`.
    pub fn at(&self, a: usize, b: usize) -> Result<&RingElem> {
        let (p, _) = canon(a, b, self.n)?;
        Ok(&self.entries[p.rank()])
    }

    /// The antisymmetric coordinate `w_{ab} = −w_{ba}`, with `w_{aa} = 0`.
    pub fn coord(&self, a: usize, b: usize) -> Result<RingElem> {
        if a == b {
            return Ok(self.zero());
        }
        let (p, s) = canon(a, b, self.n)?;
        let e = &self.entries[p.rank()];
        Ok(match s {
            Sign::Plus => e.clone(),
            Sign::Minus => -e,
        })
    }

    fn zero(&self) -> RingElem {
        self.entries[0].descriptor().zero()
    }

    pub fn ring(&self) -> RingDescriptor {
        self.entries[0].descriptor()
    }

    pub fn neg(&self) -> ColumnVector {
        ColumnVector { n: self.n, entries: self.entries.iter().map(|e| -e).collect() }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "entries": self.entries.iter().map(RingElem::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value, ring: &RingDescriptor) -> Result<ColumnVector> {
        let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| Error::Parse("vector without n".into()))? as usize;
        let entries = v
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("vector without entries".into()))?
            .iter()
            .map(|e| ring.elem_from_json(e))
            .collect::<Result<Vec<_>>>()?;
        ColumnVector::new(n, entries)
    }
}

fn ambient(g: &SquareMatrix) -> Result<usize> {
    rank_from_pair_count(g.dim())
        .filter(|&n| n >= 3)
        .ok_or_else(|| Error::DimensionMismatch(format!("{} is not C(n,2) for n ≥ 3", g.dim())))
}

/// The short Plücker polynomial
/// `f_{i,J}(w) = Σ_t (−1)^t · w_{j_t,i} · w_{J∖j_t}` for `J = (j₀ < j₁ < j₂)`.
/// For `J = {3,4,5}` this is `w₄₅w₃ᵢ − w₃₅w₄ᵢ + w₃₄w₅ᵢ`.
pub fn pluecker_poly(i: usize, big_j: &Index3, w: &ColumnVector) -> Result<RingElem> {
    let n = w.n;
    if i == 0 || i > n || big_j.n() != n {
        return Err(Error::BadIndex(format!("f_{{{i},{:?}}} in rank {n}", big_j.entries())));
    }
    if big_j.contains(i) {
        return Ok(w.zero());
    }
    let js = big_j.entries();
    let mut acc = w.zero();
    for t in 0..3 {
        let rest: Vec<usize> = js.iter().copied().filter(|&x| x != js[t]).collect();
        let term = &w.coord(js[t], i)? * w.at(rest[0], rest[1])?;
        acc = if t % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    Ok(acc)
}

/// Whether every short Plücker polynomial vanishes on `w`.
pub fn column_satisfies(w: &ColumnVector) -> bool {
    Index3::all(w.n).iter().all(|j| (1..=w.n).all(|i| pluecker_poly(i, j, w).map(|v| v.is_zero()).unwrap_or(false)))
}

/// `a^H_{A,C}(g) = Σ_{B⊔D=H} shuffle_sign(B,D)·g_{B,A}·g_{D,C}` over the six
/// ordered splittings of `H`.
pub fn a_sum(g: &SquareMatrix, h: &Index4, a: &Index2, c: &Index2) -> Result<RingElem> {
    let mut acc = g.ring().zero();
    for (b, d) in h.ordered_splittings() {
        let s = shuffle_sign(&b, &d)?;
        let term = g.get(b.rank(), a.rank()) * g.get(d.rank(), c.rank());
        acc = match s {
            Sign::Plus => &acc + &term,
            Sign::Minus => &acc - &term,
        };
    }
    Ok(acc)
}

/// The bilinear membership test: `a^H_{A,C}(g) = 0` whenever `A ∩ C ≠ ∅`,
/// and `shuffle_sign(A,C)·a^H_{A,C}(g)` depends only on `A ∪ C` for disjoint
/// `A, C`.
pub fn is_member(g: &SquareMatrix) -> Result<bool> {
    let n = ambient(g)?;
    if n < 4 {
        return Err(Error::RankTooSmall(format!("membership test needs n ≥ 4, got {n}")));
    }
    let pairs = all_pairs(n);
    let quads = Index4::all(n);
    for h in &quads {
        for a in &pairs {
            for c in pairs.iter().filter(|c| !c.is_disjoint(a)) {
                if !a_sum(g, h, a, c)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        for s in &quads {
            let mut first: Option<RingElem> = None;
            for (a, c) in s.ordered_splittings() {
                let v = a_sum(g, h, &a, &c)?;
                let v = match shuffle_sign(&a, &c)? {
                    Sign::Plus => v,
                    Sign::Minus => -&v,
                };
                match &first {
                    None => first = Some(v),
                    Some(f) if *f != v => return Ok(false),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(true)
}

/// For `g` whose column `I` is the standard basis column `e_I`: whether
/// `g_{K,J} = 0` for every `K` disjoint from `I` and every `J` with
/// `|I ∩ J| = 1`.
pub fn parabolic_zero_check(g: &SquareMatrix, big_i: &Index2) -> Result<bool> {
    let n = ambient(g)?;
    let col = big_i.rank();
    for r in 0..g.dim() {
        let e = g.get(r, col);
        let ok = if r == col { e.is_one() } else { e.is_zero() };
        if !ok {
            return Err(Error::Precondition(format!("column {big_i} is not standard")));
        }
    }
    let pairs = all_pairs(n);
    for k in pairs.iter().filter(|k| k.is_disjoint(big_i)) {
        for j in pairs.iter().filter(|j| j.intersection(big_i).len() == 1) {
            if !g.get(k.rank(), j.rank()).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
