//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! A polynomial is a list of terms sorted strictly decreasing in graded
//! lexicographic order (total degree first, then exponent vectors compared
//! lexicographically), with no zero coefficients. Two polynomials over the
//! same variables are equal iff their term lists are equal.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub exps: Vec<u32>,
    pub coeff: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    vars: Arc<[String]>,
    terms: Vec<Term>,
}

/// Graded lexicographic comparison of exponent vectors.
pub fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl Polynomial {
    pub fn zero(vars: Arc<[String]>) -> Self {
        Polynomial { vars, terms: Vec::new() }
    }

    pub fn constant(vars: Arc<[String]>, c: BigInt) -> Self {
        let nv = vars.len();
        let mut p = Polynomial::zero(vars);
        if !c.is_zero() {
            p.terms.push(Term { exps: vec![0; nv], coeff: c });
        }
        p
    }

    /// The polynomial consisting of the single variable with index `idx`.
    pub fn var(vars: Arc<[String]>, idx: usize) -> Self {
        assert!(idx < vars.len(), "variable index out of range");
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        Polynomial { vars, terms: vec![Term { exps, coeff: BigInt::one() }] }
    }

    /// Builds a polynomial from arbitrary terms, bringing them into
    /// canonical form.
    pub fn from_terms(vars: Arc<[String]>, terms: Vec<Term>) -> Self {
        let mut p = Polynomial { vars, terms };
        p.normalize();
        p
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn same_ring(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }

    /// Sorts, merges like terms and drops zeros.
    pub fn normalize(&mut self) {
        self.terms.sort_by(|a, b| grlex(&b.exps, &a.exps));
        let mut out: Vec<Term> = Vec::with_capacity(self.terms.len());
        for t in self.terms.drain(..) {
            match out.last_mut() {
                Some(last) if last.exps == t.exps => last.coeff += t.coeff,
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        self.terms = out;
    }

    pub fn is_canonical(&self) -> bool {
        self.terms.windows(2).all(|w| grlex(&w[0].exps, &w[1].exps) == Ordering::Greater)
            && self.terms.iter().all(|t| !t.coeff.is_zero() && t.exps.len() == self.vars.len())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, true)
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let take_other =
            |t: &Term| Term { exps: t.exps.clone(), coeff: if negate_other { -&t.coeff } else { t.coeff.clone() } };
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match grlex(&a.exps, &b.exps) {
                Ordering::Greater => {
                    terms.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(take_other(b));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &a.coeff - &b.coeff } else { &a.coeff + &b.coeff };
                    if !c.is_zero() {
                        terms.push(Term { exps: a.exps.clone(), coeff: c });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend(self.terms[i..].iter().cloned());
        terms.extend(other.terms[j..].iter().map(take_other));
        Polynomial { vars: self.vars.clone(), terms }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|t| Term { exps: t.exps.clone(), coeff: -&t.coeff }).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.vars.clone());
        }
        // constant fast paths are common in matrix work
        if let Some(c) = self.as_constant() {
            return other.scale(c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(c);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(Term {
                    exps: a.exps.iter().zip(&b.exps).map(|(x, y)| x + y).collect(),
                    coeff: &a.coeff * &b.coeff,
                });
            }
        }
        Polynomial::from_terms(self.vars.clone(), terms)
    }

    fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_one() {
            return self.clone();
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|t| Term { exps: t.exps.clone(), coeff: &t.coeff * c }).collect(),
        }
    }

    /// Returns the coefficient if the polynomial is a constant (zero
    /// excluded).
    pub fn as_constant(&self) -> Option<&BigInt> {
        match self.terms.as_slice() {
            [t] if t.exps.iter().all(|&e| e == 0) => Some(&t.coeff),
            _ => None,
        }
    }

    /// Substitutes integer values for the variables.
    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.vars.len(), "evaluation point has wrong arity");
        self.terms.iter().map(|t| t.exps.iter().zip(point).fold(t.coeff.clone(), |acc, (&e, x)| acc * x.pow(e))).sum()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let mag = t.coeff.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let is_const = t.exps.iter().all(|&e| e == 0);
            if !mag.is_one() || is_const {
                write!(f, "{mag}")?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (v, &e) in self.vars.iter().zip(&t.exps) {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "{v}")?;
                } else {
                    write!(f, "{v}^{e}")?;
                }
            }
        }
        Ok(())
    }
}
