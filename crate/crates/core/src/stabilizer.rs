//! Exterior elementary words fixing a given vector: `T_{*,j}` for any
//! column, `T_{i,*}` for any row, and the three-letter `T_1` for columns
//! satisfying the Plücker relations.

use crate::error::{Error, Result};
use crate::indexing::{canon, pair_count, sign, Index3, Sign};
use crate::pluecker::{column_satisfies, pluecker_poly, ColumnVector};
use crate::ring::RingElem;
use crate::words::{ElemWord, ExtLetter};

/// A row vector of `^N R`, indexed like [`ColumnVector`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowVector(ColumnVector);

impl RowVector {
    pub fn new(n: usize, entries: Vec<RingElem>) -> Result<RowVector> {
        Ok(RowVector(ColumnVector::new(n, entries)?))
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn entries(&self) -> &[RingElem] {
        self.0.entries()
    }

    pub fn at(&self, a: usize, b: usize) -> Result<&RingElem> {
        self.0.at(a, b)
    }

    pub fn coord(&self, a: usize, b: usize) -> Result<RingElem> {
        self.0.coord(a, b)
    }

    pub fn as_coordinates(&self) -> &ColumnVector {
        &self.0
    }
}

impl From<ColumnVector> for RowVector {
    fn from(v: ColumnVector) -> RowVector {
        RowVector(v)
    }
}

fn signed(s: Sign, e: &RingElem) -> RingElem {
    match s {
        Sign::Plus => e.clone(),
        Sign::Minus => -e,
    }
}

fn check_index(k: usize, n: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::BadIndex(format!("{k} not in [1, {n}]")));
    }
    if n < 3 {
        return Err(Error::RankTooSmall(format!("n = {n} < 3")));
    }
    Ok(())
}

/// `T_{*,j} = ∏_{s≠j} ∧²t_{s,j}(sign(s,j)·w_{sj})`, which fixes `w`.
pub fn t_star_col(j: usize, w: &ColumnVector) -> Result<ElemWord> {
    let n = w.n();
    check_index(j, n)?;
    let letters = (1..=n)
        .filter(|&s| s != j)
        .map(|s| Ok(ExtLetter::new(s, j, signed(sign(s, j), w.at(s, j)?))))
        .collect::<Result<Vec<_>>>()?;
    ElemWord::new(n, letters)
}

/// `T_{i,*} = ∏_{s≠i} ∧²t_{i,s}(sign(i,s)·z_{is})`, which fixes the row `z`
/// acting from the right.
pub fn t_star_row(i: usize, z: &RowVector) -> Result<ElemWord> {
    let n = z.n();
    check_index(i, n)?;
    let letters = (1..=n)
        .filter(|&s| s != i)
        .map(|s| Ok(ExtLetter::new(i, s, signed(sign(i, s), z.at(i, s)?))))
        .collect::<Result<Vec<_>>>()?;
    ElemWord::new(n, letters)
}

/// The increment that the letters of `T_{*,j}` for `p` and `q` together
/// add to coordinate `{p,q}`:
/// `sign(pq,jq)·sign(p,j)·w_{pj}w_{jq} + sign(qp,jp)·sign(q,j)·w_{qj}w_{jp}`,
/// where `sign(ab,cd) = sign(a,b)·sign(c,d)` and `w` is read at canonical
/// pairs. It always vanishes.
pub fn z_term(p: usize, q: usize, j: usize, w: &ColumnVector) -> Result<RingElem> {
    let n = w.n();
    if p == q || q == j || p == j {
        return Err(Error::BadIndex(format!("({p},{q},{j}) not pairwise distinct")));
    }
    let s1 = sign(p, q) * sign(j, q) * sign(p, j);
    let s2 = sign(q, p) * sign(j, p) * sign(q, j);
    let _ = canon(p, q, n)?;
    let t1 = w.at(p, j)? * w.at(j, q)?;
    let t2 = w.at(q, j)? * w.at(j, p)?;
    Ok(&signed(s1, &t1) + &signed(s2, &t2))
}

/// `T_1 = ∧²t_{2,3}(w₄₅)·∧²t_{2,4}(−w₃₅)·∧²t_{2,5}(w₃₄)` without checking
/// the Plücker relations. On an arbitrary `w` it adds `f_{i,{3,4,5}}(w)`
/// to the coordinate `w_{2i}` for every `i ∉ {2,3,4,5}` and changes nothing
/// else.
pub fn t_one_word(w: &ColumnVector) -> Result<ElemWord> {
    let n = w.n();
    if n < 5 {
        return Err(Error::RankTooSmall(format!("T_1 needs n ≥ 5, got {n}")));
    }
    ElemWord::new(
        n,
        vec![
            ExtLetter::new(2, 3, w.at(4, 5)?.clone()),
            ExtLetter::new(2, 4, -w.at(3, 5)?.clone()),
            ExtLetter::new(2, 5, w.at(3, 4)?.clone()),
        ],
    )
}

/// `T_1` for a column satisfying the Plücker relations; it fixes `w`.
pub fn t_one(w: &ColumnVector) -> Result<ElemWord> {
    let word = t_one_word(w)?;
    if !column_satisfies(w) {
        return Err(Error::NotWedgeColumn);
    }
    Ok(word)
}

/// The change `T_1·w − w` predicted by the Plücker polynomials, in rank
/// order.
pub fn t_one_residual(w: &ColumnVector) -> Result<Vec<RingElem>> {
    let n = w.n();
    let ring = w.ring();
    let mut out = vec![ring.zero(); pair_count(n)];
    let j = Index3::new([3, 4, 5], n)?;
    for i in (1..=n).filter(|i| !(2..=5).contains(i)) {
        let f = pluecker_poly(i, &j, w)?;
        let (p, s) = canon(2, i, n)?;
        out[p.rank()] = signed(s, &f);
    }
    Ok(out)
}
