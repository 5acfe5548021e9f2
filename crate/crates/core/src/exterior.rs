//! The Cauchy–Binet homomorphism `∧²: GL_n → GL_N`, the expansion of an
//! exterior transvection `∧²t_{i,j}(ξ)` into elementary transvections of
//! `E_N`, the monomial elements `P_{ij}`, and routes that move a
//! transvection or a matrix entry to a fixed position by monomial
//! conjugation.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::indexing::{canon, height, pair_count, sign, Index2, Sign};
use crate::linalg::{InvPair, Side, SquareMatrix};
use crate::ring::{RingDescriptor, RingElem};
use crate::words::{ElemWord, ExtLetter};

/// An elementary transvection `t_{I,J}(ξ)` of `E_N`, `N = C(n,2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transvection {
    pub row: Index2,
    pub col: Index2,
    pub xi: RingElem,
}

impl fmt::Display for Transvection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = self.row.as_array();
        let [c, d] = self.col.as_array();
        write!(f, "t_{{{a}{b},{c}{d}}}({})", self.xi)
    }
}

/// The `C(n,2) × C(n,2)` matrix of 2×2 minors of an `n × n` matrix.
pub fn cauchy_binet(x: &SquareMatrix) -> Result<SquareMatrix> {
    let n = x.dim();
    if n < 3 {
        return Err(Error::RankTooSmall(format!("n = {n} < 3")));
    }
    let pairs = crate::indexing::all_pairs(n);
    Ok(SquareMatrix::from_fn(pair_count(n), x.ring(), |r, c| {
        let [i1, i2] = pairs[r].as_array();
        let [j1, j2] = pairs[c].as_array();
        let g = |a: usize, b: usize| x.get(a - 1, b - 1);
        &(g(i1, j1) * g(i2, j2)) - &(g(i1, j2) * g(i2, j1))
    }))
}

/// A source matrix together with its exterior square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtSquareImage {
    pub source: SquareMatrix,
    pub image: SquareMatrix,
}

impl ExtSquareImage {
    pub fn new(source: SquareMatrix) -> Result<ExtSquareImage> {
        let image = cauchy_binet(&source)?;
        Ok(ExtSquareImage { source, image })
    }
}

/// The `n × n` elementary transvection `t_{i,j}(ξ)` (1-based indices).
pub fn elementary(n: usize, i: usize, j: usize, xi: &RingElem) -> Result<SquareMatrix> {
    if i == 0 || j == 0 || i > n || j > n || i == j {
        return Err(Error::BadIndex(format!("t_{{{i},{j}}} in rank {n}")));
    }
    SquareMatrix::transvection(n, i - 1, j - 1, xi)
}

/// Expands `∧²t_{i,j}(ξ)` into `n − 2` commuting transvections of `E_N`:
/// one letter `t_{im, jm}(±ξ)` for every `m ∉ {i, j}`, in increasing `m`,
/// where the pairs are written in ascending order and the sign is
/// `sign(i,m)·sign(j,m)`. For `i < j` this reads
///
/// ```text
/// ∏_{k<i} t_{ki,kj}(ξ) · ∏_{i<l<j} t_{il,lj}(−ξ) · ∏_{m>j} t_{im,jm}(ξ)
/// ```
pub fn ext_transvection(i: usize, j: usize, xi: &RingElem, n: usize) -> Result<Vec<Transvection>> {
    if n < 3 {
        return Err(Error::RankTooSmall(format!("n = {n} < 3")));
    }
    if i == 0 || j == 0 || i > n || j > n || i == j {
        return Err(Error::BadIndex(format!("∧²t_{{{i},{j}}} in rank {n}")));
    }
    let mut out = Vec::with_capacity(n - 2);
    let neg = -xi;
    for (position, m) in (1..=n).filter(|&m| m != i && m != j).enumerate() {
        let (row, si) = canon(i, m, n)?;
        let (col, sj) = canon(j, m, n)?;
        let s = crate::fault::formula_sign_hook(i, j, n, position, si * sj);
        out.push(Transvection {
            row,
            col,
            xi: match s {
                Sign::Plus => xi.clone(),
                Sign::Minus => neg.clone(),
            },
        });
    }
    Ok(out)
}

/// `P_{ij} = ∧²t_{i,j}(1)·∧²t_{j,i}(−1)·∧²t_{i,j}(1)`.
pub fn p_element(i: usize, j: usize, n: usize, ring: &RingDescriptor) -> Result<ElemWord> {
    let one = ring.one();
    let minus = ring.from_i64(-1);
    ElemWord::new(n, vec![ExtLetter::new(i, j, one.clone()), ExtLetter::new(j, i, minus), ExtLetter::new(i, j, one)])
}

/// Route words are built once per shape and re-instantiated in the
/// caller's ring. Cached entries hold `(i, j)` of each `P_{ij}` factor.
type RouteCache = Mutex<HashMap<(usize, usize, usize), Vec<(usize, usize)>>>;

fn target_cache() -> &'static RouteCache {
    static CACHE: OnceLock<RouteCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn p_product(factors: &[(usize, usize)], n: usize, ring: &RingDescriptor) -> Result<ElemWord> {
    let mut w = ElemWord::empty(n);
    for &(a, b) in factors {
        w = w.concat(&p_element(a, b, n, ring)?)?;
    }
    Ok(w)
}

/// A word `w` in monomial elements with `ʷ∧²t_{2,3}(ξ) = ∧²t_{k,l}(ξ)`
/// (left conjugation `w·x·w⁻¹`) for every `ξ`.
///
/// Each factor `P_{ab}` moves one index of the transvection. The target
/// `(3, 2)` exchanges both indices and needs a detour through a spare
/// index, so it takes three factors; every other target takes at most two.
/// The identity is checked over `ℤ[ξ]` the first time a shape is built.
pub fn monomial_route_target(k: usize, l: usize, n: usize, ring: &RingDescriptor) -> Result<ElemWord> {
    if n < 4 {
        return Err(Error::RankTooSmall(format!("routing needs n ≥ 4, got {n}")));
    }
    if k == 0 || l == 0 || k > n || l > n || k == l {
        return Err(Error::BadIndex(format!("target ({k},{l}) in rank {n}")));
    }
    let use_cache = crate::fault::active().is_none();
    if use_cache {
        if let Some(f) = target_cache().lock().unwrap().get(&(k, l, n)) {
            return p_product(f, n, ring);
        }
    }
    // factors listed outermost first: w = P_last ⋯ P_first
    let factors: Vec<(usize, usize)> = match (k, l) {
        (2, 3) => vec![],
        (2, _) => vec![(l, 3)],
        (_, 3) => vec![(k, 2)],
        (3, 2) => {
            let m = (1..=n).find(|&m| m != 2 && m != 3).expect("n ≥ 4");
            vec![(3, m), (2, 3), (m, 2)]
        }
        (3, _) => vec![(3, 2), (l, 3)],
        _ => vec![(l, 3), (k, 2)],
    };
    let zx = RingDescriptor::poly_int(["xi"])?;
    let xi = zx.var(0)?;
    let w = p_product(&factors, n, &zx)?.eval(&zx)?;
    let from = ElemWord::letter(n, 2, 3, xi.clone())?.eval(&zx)?;
    let to = ElemWord::letter(n, k, l, xi)?.eval(&zx)?;
    if InvPair::conjugate(&from, &w, Side::Left)? != to {
        return Err(Error::StepViolated(format!("monomial route to ({k},{l})")));
    }
    if use_cache {
        target_cache().lock().unwrap().insert((k, l, n), factors.clone());
    }
    p_product(&factors, n, ring)
}

/// A word `w` in monomial elements and a sign `σ` such that for every `N × N`
/// matrix `g`, `(w·g·w⁻¹)_{{1,3},{1,2}} = σ·g_{I,J}`.
///
/// The underlying permutation of `[n]` sends `I ∩ J ↦ 1`, `I ∖ J ↦ 3` and
/// `J ∖ I ↦ 2`, built greedily from at most three transpositions. The sign
/// is read off a probe matrix carrying a single `1` at `(I, J)`.
pub fn monomial_route_source(
    big_i: &Index2,
    big_j: &Index2,
    n: usize,
    ring: &RingDescriptor,
) -> Result<(ElemWord, Sign)> {
    if n < 4 {
        return Err(Error::RankTooSmall(format!("routing needs n ≥ 4, got {n}")));
    }
    if big_i.n() != n || big_j.n() != n {
        return Err(Error::BadIndex("index rank does not match".into()));
    }
    if height(big_i, big_j) != 1 {
        return Err(Error::Height(format!("height({big_i},{big_j}) ≠ 1")));
    }
    let common = big_i.intersection(big_j)[0];
    let only_i = big_i.other(common).unwrap();
    let only_j = big_j.other(common).unwrap();

    // pos[v] = current position of original index v under the permutation
    let mut pos: Vec<usize> = (0..=n).collect();
    let mut factors: Vec<(usize, usize)> = Vec::new();
    for (v, dest) in [(common, 1), (only_i, 3), (only_j, 2)] {
        let here = pos[v];
        if here != dest {
            factors.push((here, dest));
            for p in pos.iter_mut() {
                if *p == here {
                    *p = dest;
                } else if *p == dest {
                    *p = here;
                }
            }
        }
    }
    factors.reverse();

    let zz = RingDescriptor::Int;
    let w = p_product(&factors, n, &zz)?.eval(&zz)?;
    let target_row = Index2::new(1, 3, n)?.rank();
    let target_col = Index2::new(1, 2, n)?.rank();
    let (ri, cj) = (big_i.rank(), big_j.rank());
    // W is a signed permutation matrix: row {1,3} of W has its only nonzero
    // entry at column I, and column {1,2} of W⁻¹ has its only one at row J.
    let fwd_row = w.fwd().row(target_row);
    let bwd_col = w.bwd().column(target_col);
    let unique = |v: &[RingElem], at: usize| v.iter().enumerate().all(|(p, e)| (p == at) != e.is_zero());
    if !unique(fwd_row, ri) || !unique(&bwd_col, cj) {
        return Err(Error::StepViolated(format!("monomial route from ({big_i},{big_j})")));
    }
    let probe = w.fwd().get(target_row, ri) * w.bwd().get(cj, target_col);
    let sigma = if probe.is_one() {
        Sign::Plus
    } else if (-&probe).is_one() {
        Sign::Minus
    } else {
        return Err(Error::StepViolated(format!("monomial route sign at ({big_i},{big_j})")));
    };
    Ok((p_product(&factors, n, ring)?, sigma))
}

/// Reads `g_{(a,b),(c,d)}` for arbitrary ordered pairs, using
/// `e_a∧e_b = −e_b∧e_a`.
pub fn oriented_entry(g: &SquareMatrix, a: usize, b: usize, c: usize, d: usize, n: usize) -> Result<RingElem> {
    let (r, s1) = canon(a, b, n)?;
    let (col, s2) = canon(c, d, n)?;
    let e = g.get(r.rank(), col.rank());
    Ok(match s1 * s2 {
        Sign::Plus => e.clone(),
        Sign::Minus => -e,
    })
}

/// `sign(i, j)` re-exported for callers working with oriented pairs.
pub fn pair_sign(i: usize, j: usize) -> Sign {
    sign(i, j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zxi() -> (RingDescriptor, RingElem) {
        let r = RingDescriptor::poly_int(["xi"]).unwrap();
        let x = r.var(0).unwrap();
        (r, x)
    }

    #[test]
    fn worked_example_n5() {
        let (_, xi) = zxi();
        let w = ext_transvection(1, 3, &xi, 5).unwrap();
        let shown: Vec<String> = w.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["t_{12,23}(-xi)", "t_{14,34}(xi)", "t_{15,35}(xi)"]);
    }

    #[test]
    fn expansion_matches_minor_oracle() {
        let (r, xi) = zxi();
        for n in 3..=6 {
            for i in 1..=n {
                for j in 1..=n {
                    if i == j {
                        continue;
                    }
                    let word = ElemWord::letter(n, i, j, xi.clone()).unwrap();
                    let lhs = word.eval(&r).unwrap();
                    let rhs = cauchy_binet(&elementary(n, i, j, &xi).unwrap()).unwrap();
                    assert_eq!(lhs.fwd(), &rhs, "n={n} ({i},{j})");
                    assert_eq!(ext_transvection(i, j, &xi, n).unwrap().len(), n - 2);
                }
            }
        }
    }

    #[test]
    fn cauchy_binet_basics() {
        let r = RingDescriptor::poly_int(["a", "b", "c"]).unwrap();
        let (a, b, c) = (r.var(0).unwrap(), r.var(1).unwrap(), r.var(2).unwrap());
        let x =
            SquareMatrix::from_fn(
                3,
                &r,
                |p, q| {
                    if p != q {
                        r.zero()
                    } else {
                        [a.clone(), b.clone(), c.clone()][p].clone()
                    }
                },
            );
        let img = cauchy_binet(&x).unwrap();
        let expect = [&a * &b, &a * &c, &b * &c];
        for (p, diag) in expect.iter().enumerate() {
            for q in 0..3 {
                let e = if p == q { diag.clone() } else { r.zero() };
                assert_eq!(img.get(p, q), &e);
            }
        }
        for n in 3..6 {
            let e = SquareMatrix::identity(n, &r);
            assert!(cauchy_binet(&e).unwrap().is_identity());
        }
        assert!(matches!(cauchy_binet(&SquareMatrix::identity(2, &r)), Err(Error::RankTooSmall(_))));
    }

    #[test]
    fn monomial_conjugation_both_forms() {
        let (r, xi) = zxi();
        for n in 4..=6 {
            for i in 1..=n {
                for j in 1..=n {
                    if i == j {
                        continue;
                    }
                    let t = ElemWord::letter(n, i, j, xi.clone()).unwrap().eval(&r).unwrap();
                    for k in (1..=n).filter(|&k| k != i && k != j) {
                        let pki = p_element(k, i, n, &r).unwrap().eval(&r).unwrap();
                        let got = InvPair::conjugate(&t, &pki, Side::Left).unwrap();
                        let want = ElemWord::letter(n, k, j, xi.clone()).unwrap().eval(&r).unwrap();
                        assert_eq!(got, want);
                        let pkj = p_element(k, j, n, &r).unwrap().eval(&r).unwrap();
                        let got = InvPair::conjugate(&t, &pkj, Side::Left).unwrap();
                        let want = ElemWord::letter(n, i, k, xi.clone()).unwrap().eval(&r).unwrap();
                        assert_eq!(got, want);
                    }
                }
            }
        }
    }

    #[test]
    fn p_element_is_signed_permutation() {
        let zz = RingDescriptor::Int;
        for n in 3..=5 {
            let p = p_element(1, 2, n, &zz).unwrap().eval(&zz).unwrap();
            let m = p.fwd();
            for r in 0..m.dim() {
                let nz: Vec<&RingElem> = m.row(r).iter().filter(|e| !e.is_zero()).collect();
                assert_eq!(nz.len(), 1);
                assert!(nz[0].is_one() || (-nz[0]).is_one());
                let col = m.column(r);
                assert_eq!(col.iter().filter(|e| !e.is_zero()).count(), 1);
            }
        }
    }

    #[test]
    fn route_target_cases() {
        let zz = RingDescriptor::Int;
        assert!(monomial_route_target(2, 3, 5, &zz).unwrap().is_empty());
        let w = monomial_route_target(4, 3, 5, &zz).unwrap();
        assert_eq!(w, p_element(4, 2, 5, &zz).unwrap());
        for n in 4..=6 {
            for k in 1..=n {
                for l in (1..=n).filter(|&l| l != k) {
                    let w = monomial_route_target(k, l, n, &zz).unwrap();
                    let max = if (k, l) == (3, 2) { 9 } else { 6 };
                    assert!(w.len() <= max, "({k},{l}) took {} letters", w.len());
                }
            }
        }
        assert!(monomial_route_target(2, 2, 5, &zz).is_err());
        assert!(monomial_route_target(1, 2, 3, &zz).is_err());
    }

    #[test]
    fn route_source_places_entry() {
        let zz = RingDescriptor::Int;
        let n = 4;
        let i = Index2::new(1, 3, n).unwrap();
        let j = Index2::new(1, 2, n).unwrap();
        let (w, s) = monomial_route_source(&i, &j, n, &zz).unwrap();
        assert!(w.is_empty());
        assert_eq!(s, Sign::Plus);

        // I={2,3}, J={2,4}: permutation 2↦1, 3↦3, 4↦2
        let i = Index2::new(2, 3, n).unwrap();
        let j = Index2::new(2, 4, n).unwrap();
        let (w, s) = monomial_route_source(&i, &j, n, &zz).unwrap();
        let wp = w.eval(&zz).unwrap();
        let probe = SquareMatrix::zero(6, &zz).with_entry(i.rank(), j.rank(), zz.one()).unwrap();
        let moved = wp.fwd().mul(&probe).unwrap().mul(wp.bwd()).unwrap();
        let at = moved.get(Index2::new(1, 3, n).unwrap().rank(), 0);
        assert_eq!(at, &zz.from_i64(s.to_i64()));

        let bad = Index2::new(3, 4, n).unwrap();
        assert!(matches!(monomial_route_source(&Index2::new(1, 2, n).unwrap(), &bad, n, &zz), Err(Error::Height(_))));
    }

    #[test]
    fn oriented_entry_signs() {
        let zz = RingDescriptor::Int;
        let g = SquareMatrix::from_fn(6, &zz, |r, c| zz.from_i64((10 * r + c) as i64 + 1));
        let e = oriented_entry(&g, 2, 1, 1, 3, 4).unwrap();
        assert_eq!(e, zz.from_i64(-2));
        assert_eq!(oriented_entry(&g, 2, 1, 3, 1, 4).unwrap(), zz.from_i64(2));
    }
}
