//! Symbolic self-certification: each suite checks one family of identities
//! over integer polynomial rings with generic parameters.

use std::fmt;

use crate::error::{Error, Result};
use crate::exterior::{cauchy_binet, elementary, monomial_route_target, p_element};
use crate::indexing::{all_pairs, pair_count};
use crate::linalg::{InvPair, Side, SquareMatrix};
use crate::pluecker::{is_member, ColumnVector};
use crate::ring::{RingDescriptor, RingElem};
use crate::stabilizer::{t_one, t_one_residual, t_one_word, t_star_col, t_star_row, z_term, RowVector};
use crate::words::ElemWord;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SuiteStatus {
    /// All `checks` identities held.
    Pass {
        checks: usize,
    },
    Fail(String),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub status: SuiteStatus,
}

impl SuiteReport {
    pub fn failed(&self) -> bool {
        matches!(self.status, SuiteStatus::Fail(_))
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            SuiteStatus::Pass { checks } => write!(f, "{:<20} pass ({checks} checks)", self.name),
            SuiteStatus::Fail(why) => write!(f, "{:<20} FAIL: {why}", self.name),
            SuiteStatus::Skipped(why) => write!(f, "{:<20} skipped ({why})", self.name),
        }
    }
}

struct Tally(usize);

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) -> std::result::Result<(), String> {
        self.0 += 1;
        if ok {
            Ok(())
        } else {
            Err(what())
        }
    }
}

type Suite = fn(usize, &mut Tally) -> std::result::Result<(), String>;

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn poly(names: &[&str]) -> RingDescriptor {
    RingDescriptor::poly_int(names.iter().copied()).expect("distinct names")
}

fn letter(n: usize, i: usize, j: usize, xi: &RingElem, r: &RingDescriptor) -> Result<InvPair> {
    ElemWord::letter(n, i, j, xi.clone())?.eval(r)
}

fn ordered(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)))
}

/// A column vector whose coordinates are independent indeterminates.
pub fn generic_column(n: usize) -> (RingDescriptor, ColumnVector) {
    let r = RingDescriptor::poly_int(all_pairs(n).iter().map(|p| format!("w{}{}", p.first(), p.second())))
        .expect("distinct names");
    let w =
        ColumnVector::new(n, (0..pair_count(n)).map(|k| r.var(k).expect("in range")).collect()).expect("length C(n,2)");
    (r, w)
}

/// An `n × n` matrix whose entries are independent indeterminates.
pub fn generic_matrix(n: usize) -> (RingDescriptor, SquareMatrix) {
    let r = RingDescriptor::poly_int((1..=n).flat_map(|a| (1..=n).map(move |b| format!("x{a}{b}"))))
        .expect("distinct names");
    let x = SquareMatrix::from_fn(n, &r, |a, b| r.var(a * n + b).expect("in range"));
    (r, x)
}

fn formula(max_n: usize, t: &mut Tally) -> std::result::Result<(), String> {
    let r = poly(&["xi"]);
    let xi = r.var(0).expect("one var");
    for n in 3..=max_n {
        for (i, j) in ordered(n) {
            let lhs = lift(letter(n, i, j, &xi, &r))?;
            let rhs = lift(elementary(n, i, j, &xi).and_then(|e| cauchy_binet(&e)))?;
            t.check(lhs.fwd() == &rhs, || format!("∧²t_{{{i},{j}}}(xi), n={n}"))?;
        }
    }
    Ok(())
}

fn additivity(max_n: usize, t: &mut Tally) -> std::result::Result<(), String> {
    let r = poly(&["a", "b"]);
    let (a, b) = (r.var(0).expect("a"), r.var(1).expect("b"));
    for n in 3..=max_n.min(5) {
        for (i, j) in ordered(n) {
            let lhs = lift(letter(n, i, j, &a, &r).and_then(|x| x.compose(&letter(n, i, j, &b, &r)?)))?;
            let rhs = lift(letter(n, i, j, &(&a + &b), &r))?;
            t.check(lhs == rhs, || format!("additivity at ({i},{j}), n={n}"))?;
        }
    }
    Ok(())
}

fn chevalley(max_n: usize, t: &mut Tally) -> std::result::Result<(), String> {
    let r = poly(&["a", "b"]);
    let (a, b) = (r.var(0).expect("a"), r.var(1).expect("b"));
    let one = r.one();
    for n in 3..=max_n.min(5) {
        let id = InvPair::identity(pair_count(n), &r);
        for (i, j) in ordered(n) {
            let x = lift(letter(n, i, j, &a, &r))?;
            for (k, l) in ordered(n) {
                let y = lift(letter(n, k, l, &b, &r))?;
                let c = lift(InvPair::commutator(&x, &y))?;
                let want = if j == k && i != l {
                    lift(letter(n, i, l, &(&a * &b), &r))?
                } else if i == l && j != k {
                    lift(letter(n, k, j, &-&(&a * &b), &r))?
                } else if j != k && i != l {
                    id.clone()
                } else {
                    continue;
                };
                t.check(c == want, || format!("[t_{{{i},{j}}}(a), t_{{{k},{l}}}(b)], n={n}"))?;
            }
        }
        let (x, y, z) =
            (lift(letter(n, 1, 2, &a, &r))?, lift(letter(n, 2, 3, &b, &r))?, lift(letter(n, 3, 1, &one, &r))?);
        let lhs =
            lift(InvPair::commutator(&lift(x.compose(&y))?, &z).and_then(|c| InvPair::conjugate(&c, &x, Side::Right)))?;
        let rhs = lift(InvPair::commutator(&z, &x.invert()).and_then(|c| InvPair::commutator(&y, &z)?.compose(&c)))?;
        t.check(lhs == rhs, || format!("[xy,z]^x = [y,z][z,x⁻¹], n={n}"))?;
    }
    Ok(())
}

fn monomial(max_n: usize, t: &mut Tally) -> std::result::Result<(), String> {
    let r = poly(&["xi"]);
    let xi = r.var(0).expect("one var");
    for n in 4..=max_n {
        for (i, j) in ordered(n) {
            let x = lift(letter(n, i, j, &xi, &r))?;
            for k in (1..=n).filter(|&k| k != i && k != j) {
                let pki = lift(p_element(k, i, n, &r).and_then(|p| p.eval(&r)))?;
                let got = lift(InvPair::conjugate(&x, &pki, Side::Left))?;
                t.check(got == lift(letter(n, k, j, &xi, &r))?, || format!("P_{{{k}{i}}} on ({i},{j}), n={n}"))?;
                let pkj = lift(p_element(k, j, n, &r).and_then(|p| p.eval(&r)))?;
                let got = lift(InvPair::conjugate(&x, &pkj, Side::Left))?;
                t.check(got == lift(letter(n, i, k, &xi, &r))?, || format!("P_{{{k}{j}}} on ({i},{j}), n={n}"))?;
            }
        }
        let base = lift(letter(n, 2, 3, &xi, &r))?;
        for (k, l) in ordered(n) {
            let route = lift(monomial_route_target(k, l, n, &r).and_then(|w| w.eval(&r)))?;
            let got = lift(InvPair::conjugate(&base, &route, Side::Left))?;
            t.check(got == lift(letter(n, k, l, &xi, &r))?, || format!("route to ({k},{l}), n={n}"))?;
        }
    }
    Ok(())
}

fn column_stabilizer(max_n: usize, t: &mut Tally) -> std::result::Result<(), String> {
    for n in 3..=max_n.min(5) {
        let (r, w) = generic_column(n);
        for j in 1..=n {
            let tw = lift(t_star_col(j, &w).and_then(|s| s.eval(&r)?.fwd().mul_vec(w.entries())))?;
            t.check(tw == w.entries(), || format!("T_{{*,{j}}}·w, n={n}"))?;
        }
        for (p, q) in ordered(n) {
            for j in (1..=n).filter(|&j| j != p && j != q) {
                let z = lift(z_term(p, q, j, &w))?;
                t.check(z.is_zero(), || format!("z-term ({p},{q},{j}), n={n}"))?;
            }
        }
    }
    Ok(())
}

fn row_stabilizer(max_n: usize, t: &mut Tally) -> std::result::Result<(), String> {
    for n in 3..=max_n.min(5) {
        let (r, w) = generic_column(n);
        let z = RowVector::from(w);
        for i in 1..=n {
            let zt = lift(t_star_row(i, &z).and_then(|s| s.eval(&r)?.fwd().vec_mul(z.entries())))?;
            t.check(zt == z.entries(), || format!("z·T_{{{i},*}}, n={n}"))?;
        }
    }
    Ok(())
}

fn t_one_suite(max_n: usize, t: &mut Tally) -> std::result::Result<(), String> {
    let n = max_n.min(6);
    let (r, x) = generic_matrix(n);
    let g = lift(cauchy_binet(&x))?;
    for j in all_pairs(n).into_iter().take(3) {
        let w = lift(ColumnVector::from_column(&g, &j))?;
        let tw = lift(t_one(&w).and_then(|s| s.eval(&r)?.fwd().mul_vec(w.entries())))?;
        t.check(tw == w.entries(), || format!("T_1·w for column {j}, n={n}"))?;
    }
    let (r, w) = generic_column(n);
    let tw = lift(t_one_word(&w).and_then(|s| s.eval(&r)?.fwd().mul_vec(w.entries())))?;
    let diff: Vec<RingElem> = tw.iter().zip(w.entries()).map(|(a, b)| a - b).collect();
    t.check(diff == lift(t_one_residual(&w))?, || format!("T_1 residual, n={n}"))?;
    Ok(())
}

fn membership(_: usize, t: &mut Tally) -> std::result::Result<(), String> {
    let (_, x) = generic_matrix(4);
    let g = lift(cauchy_binet(&x))?;
    t.check(lift(is_member(&g))?, || "generic 4×4 source".into())?;
    Ok(())
}

/// Runs every suite for ranks up to `max_n`.
pub fn run_suites(max_n: usize) -> Result<Vec<SuiteReport>> {
    if !(3..=6).contains(&max_n) {
        return Err(Error::BadIndex(format!("max rank {max_n} not in [3, 6]")));
    }
    let suites: [(&'static str, usize, Suite); 8] = [
        ("formula", 3, formula),
        ("additivity", 3, additivity),
        ("chevalley", 3, chevalley),
        ("monomial", 4, monomial),
        ("column-stabilizer", 3, column_stabilizer),
        ("row-stabilizer", 3, row_stabilizer),
        ("t-one", 5, t_one_suite),
        ("membership", 4, membership),
    ];
    Ok(suites
        .into_iter()
        .map(|(name, min_n, suite)| {
            let status = if max_n < min_n {
                SuiteStatus::Skipped(format!("n<{min_n}"))
            } else {
                let mut t = Tally(0);
                match suite(max_n, &mut t) {
                    Ok(()) => SuiteStatus::Pass { checks: t.0 },
                    Err(why) => SuiteStatus::Fail(why),
                }
            };
            SuiteReport { name, status }
        })
        .collect())
}
