//! Words in exterior transvections, and words in elementary conjugates of
//! a fixed matrix.
//!
//! Words are kept verbatim: no free reduction, no merging of letters.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exterior::{ext_transvection, Transvection};
use crate::indexing::{pair_count, Sign};
use crate::linalg::{InvPair, SquareMatrix};
use crate::ring::{RingDescriptor, RingElem};

/// One letter `∧²t_{i,j}(ξ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtLetter {
    pub i: usize,
    pub j: usize,
    pub xi: RingElem,
}

impl ExtLetter {
    pub fn new(i: usize, j: usize, xi: RingElem) -> ExtLetter {
        ExtLetter { i, j, xi }
    }
}

impl fmt::Display for ExtLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "∧²t_{{{},{}}}({})", self.i, self.j, self.xi)
    }
}

/// A product `∧²t_{i₁,j₁}(ξ₁) ⋯ ∧²t_{i_k,j_k}(ξ_k)` in ambient rank `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElemWord {
    n: usize,
    letters: Vec<ExtLetter>,
}

impl ElemWord {
    pub fn new(n: usize, letters: Vec<ExtLetter>) -> Result<ElemWord> {
        if n < 3 {
            return Err(Error::RankTooSmall(format!("n = {n} < 3")));
        }
        for l in &letters {
            if l.i == 0 || l.j == 0 || l.i > n || l.j > n || l.i == l.j {
                return Err(Error::BadIndex(format!("letter {l} in rank {n}")));
            }
        }
        Ok(ElemWord { n, letters })
    }

    pub fn empty(n: usize) -> ElemWord {
        ElemWord { n, letters: Vec::new() }
    }

    pub fn letter(n: usize, i: usize, j: usize, xi: RingElem) -> Result<ElemWord> {
        ElemWord::new(n, vec![ExtLetter::new(i, j, xi)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[ExtLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &ElemWord) -> Result<ElemWord> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!("rank {} vs {}", self.n, other.n)));
        }
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Ok(ElemWord { n: self.n, letters })
    }

    /// Adjacent letters on the same pair merged, trivial letters dropped.
    pub fn reduced(&self) -> ElemWord {
        let mut out: Vec<ExtLetter> = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            match out.last_mut() {
                Some(top) if (top.i, top.j) == (l.i, l.j) => {
                    top.xi = &top.xi + &l.xi;
                    if top.xi.is_zero() {
                        out.pop();
                    }
                }
                _ if l.xi.is_zero() => {}
                _ => out.push(l.clone()),
            }
        }
        ElemWord { n: self.n, letters: out }
    }

    /// Letters reversed, each `ξ ↦ −ξ`.
    pub fn invert(&self) -> ElemWord {
        ElemWord { n: self.n, letters: self.letters.iter().rev().map(|l| ExtLetter::new(l.i, l.j, -&l.xi)).collect() }
    }

    /// The flat list of elementary transvections of `E_N` whose product is
    /// the word's image.
    pub fn expand(&self) -> Result<Vec<Transvection>> {
        let mut out = Vec::with_capacity(self.letters.len() * (self.n - 2));
        for l in &self.letters {
            out.extend(ext_transvection(l.i, l.j, &l.xi, self.n)?);
        }
        Ok(out)
    }

    /// The `N × N` image with its inverse.
    pub fn eval(&self, ring: &RingDescriptor) -> Result<InvPair> {
        let taus = self.checked_expansion(ring)?;
        let mut p = InvPair::identity(pair_count(self.n), ring);
        for t in &taus {
            p.right_transvection(t.row.rank(), t.col.rank(), &t.xi);
        }
        Ok(p)
    }

    /// `w·g·w⁻¹`, computed by row and column operations.
    pub fn conjugate_left(&self, g: &InvPair) -> Result<InvPair> {
        if g.dim() != pair_count(self.n) {
            return Err(Error::DimensionMismatch(format!("rank {} vs dimension {}", self.n, g.dim())));
        }
        let taus = self.checked_expansion(g.ring())?;
        let mut p = g.clone();
        for t in taus.iter().rev() {
            p.left_transvection(t.row.rank(), t.col.rank(), &t.xi);
            p.right_transvection(t.row.rank(), t.col.rank(), &-&t.xi);
        }
        Ok(p)
    }

    /// `gʷ = w⁻¹·g·w`.
    pub fn conjugate_right(&self, g: &InvPair) -> Result<InvPair> {
        self.invert().conjugate_left(g)
    }

    fn checked_expansion(&self, ring: &RingDescriptor) -> Result<Vec<Transvection>> {
        if self.letters.iter().any(|l| !l.xi.belongs_to(ring)) {
            return Err(Error::RingMismatch);
        }
        self.expand()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "letters": self.letters.iter().map(|l| json!({
                "i": l.i,
                "j": l.j,
                "xi": l.xi.to_json(),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value, ring: &RingDescriptor) -> Result<ElemWord> {
        let n = json_usize(v, "n")?;
        let letters = v
            .get("letters")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("word without letters".into()))?
            .iter()
            .map(|l| {
                let xi = ring.elem_from_json(l.get("xi").ok_or_else(|| Error::Parse("letter without xi".into()))?)?;
                Ok(ExtLetter::new(json_usize(l, "i")?, json_usize(l, "j")?, xi))
            })
            .collect::<Result<Vec<_>>>()?;
        ElemWord::new(n, letters)
    }
}

impl fmt::Display for ElemWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, "·")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn json_usize(v: &Value, key: &str) -> Result<usize> {
    v.get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| Error::Parse(format!("missing integer field \"{key}\"")))
}

/// One elementary conjugate `h⁻¹·g^ε·h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjTerm {
    pub eps: Sign,
    pub h: ElemWord,
}

/// A product of elementary conjugates of one matrix `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjWord {
    n: usize,
    terms: Vec<ConjTerm>,
}

impl ConjWord {
    pub fn new(n: usize, terms: Vec<ConjTerm>) -> Result<ConjWord> {
        if let Some(t) = terms.iter().find(|t| t.h.n != n) {
            return Err(Error::DimensionMismatch(format!("conjugator of rank {} in rank {n}", t.h.n)));
        }
        Ok(ConjWord { n, terms })
    }

    pub fn empty(n: usize) -> ConjWord {
        ConjWord { n, terms: Vec::new() }
    }

    /// The single term `g^ε`.
    pub fn single(n: usize, eps: Sign) -> ConjWord {
        ConjWord { n, terms: vec![ConjTerm { eps, h: ElemWord::empty(n) }] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[ConjTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn concat(&self, other: &ConjWord) -> Result<ConjWord> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!("rank {} vs {}", self.n, other.n)));
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(ConjWord { n: self.n, terms })
    }

    /// Terms reversed with `ε` flipped; evaluates to the inverse and keeps
    /// the length.
    pub fn invert(&self) -> ConjWord {
        ConjWord {
            n: self.n,
            terms: self.terms.iter().rev().map(|t| ConjTerm { eps: -t.eps, h: t.h.clone() }).collect(),
        }
    }

    /// The right conjugate `wordʷ`: every conjugator `h` becomes `h·w`.
    pub fn conjugated_by(&self, w: &ElemWord) -> Result<ConjWord> {
        let terms =
            self.terms.iter().map(|t| Ok(ConjTerm { eps: t.eps, h: t.h.concat(w)? })).collect::<Result<Vec<_>>>()?;
        Ok(ConjWord { n: self.n, terms })
    }

    /// Rewrites a word in `g′ = gᵛ` as a word in `g`: every conjugator `h`
    /// becomes `v·h`.
    pub fn pulled_back(&self, v: &ElemWord) -> Result<ConjWord> {
        let terms =
            self.terms.iter().map(|t| Ok(ConjTerm { eps: t.eps, h: v.concat(&t.h)? })).collect::<Result<Vec<_>>>()?;
        Ok(ConjWord { n: self.n, terms })
    }

    /// Every conjugator reduced; the number of terms is unchanged.
    pub fn reduced(&self) -> ConjWord {
        ConjWord { n: self.n, terms: self.terms.iter().map(|t| ConjTerm { eps: t.eps, h: t.h.reduced() }).collect() }
    }

    pub(crate) fn flip_eps(&mut self, term: usize) {
        if let Some(t) = self.terms.get_mut(term) {
            t.eps = -t.eps;
        }
    }

    /// `∏ h⁻¹·g^ε·h` as a single matrix.
    pub fn eval(&self, g: &InvPair) -> Result<SquareMatrix> {
        let big_n = pair_count(self.n);
        if g.dim() != big_n {
            return Err(Error::DimensionMismatch(format!(
                "word of rank {} needs {big_n}×{big_n}, got {}",
                self.n,
                g.dim()
            )));
        }
        let ring = g.ring();
        let mut acc = SquareMatrix::identity(big_n, ring);
        let mut first = true;
        for t in &self.terms {
            let taus = t.h.checked_expansion(ring)?;
            for tau in taus.iter().rev() {
                acc.right_transvection(tau.row.rank(), tau.col.rank(), &-&tau.xi);
            }
            let factor = match t.eps {
                Sign::Plus => g.fwd(),
                Sign::Minus => g.bwd(),
            };
            acc = if first && taus.is_empty() { factor.clone() } else { acc.mul_unchecked(factor) };
            first = false;
            for tau in &taus {
                acc.right_transvection(tau.row.rank(), tau.col.rank(), &tau.xi);
            }
        }
        Ok(acc)
    }

    /// Evaluation with a certified inverse.
    pub fn eval_pair(&self, g: &InvPair) -> Result<InvPair> {
        let fwd = self.eval(g)?;
        let bwd = self.invert().eval(g)?;
        InvPair::new(fwd, bwd)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "terms": self.terms.iter().map(|t| json!({
                "eps": t.eps.to_i64(),
                "h": t.h.to_json(),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value, ring: &RingDescriptor) -> Result<ConjWord> {
        let n = json_usize(v, "n")?;
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("conjugate word without terms".into()))?
            .iter()
            .map(|t| {
                let eps =
                    t.get("eps").and_then(Value::as_i64).ok_or_else(|| Error::Parse("term without eps".into()))?;
                let h = ElemWord::from_json(t.get("h").ok_or_else(|| Error::Parse("term without h".into()))?, ring)?;
                Ok(ConjTerm { eps: Sign::from_i64(eps)?, h })
            })
            .collect::<Result<Vec<_>>>()?;
        ConjWord::new(n, terms)
    }
}
