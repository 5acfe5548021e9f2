//! Exact commutative rings: the integers, the integers modulo `m`, and
//! multivariate polynomials over the integers.
//!
//! Every element carries enough of its ring to detect mixing, and every
//! payload is kept in canonical form so that structural equality is ring
//! equality. There is no division except [`RingElem::zmod_inverse`].

mod poly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub use poly::{grlex, Polynomial, Term};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", try_from = "RawDescriptor")]
pub enum RingDescriptor {
    Int,
    Zmod { modulus: u64 },
    PolyInt { vars: Arc<[String]> },
}

#[derive(Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum RawDescriptor {
    Int,
    Zmod { modulus: u64 },
    PolyInt { vars: Vec<String> },
}

impl TryFrom<RawDescriptor> for RingDescriptor {
    type Error = Error;

    fn try_from(raw: RawDescriptor) -> Result<Self> {
        match raw {
            RawDescriptor::Int => Ok(RingDescriptor::Int),
            RawDescriptor::Zmod { modulus } => RingDescriptor::zmod(modulus),
            RawDescriptor::PolyInt { vars } => RingDescriptor::poly_int(vars),
        }
    }
}

impl RingDescriptor {
    pub fn zmod(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::BadRing(format!("modulus {modulus} < 2")));
        }
        Ok(RingDescriptor::Zmod { modulus })
    }

    pub fn poly_int<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Result<Self> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (k, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::BadRing("empty variable name".into()));
            }
            if vars[..k].contains(v) {
                return Err(Error::BadRing(format!("duplicate variable {v}")));
            }
        }
        Ok(RingDescriptor::PolyInt { vars: vars.into() })
    }

    pub fn zero(&self) -> RingElem {
        self.from_bigint(BigInt::zero())
    }

    pub fn one(&self) -> RingElem {
        self.from_bigint(BigInt::one())
    }

    pub fn from_i64(&self, v: i64) -> RingElem {
        match self {
            RingDescriptor::Int => RingElem::Int(BigInt::from(v)),
            RingDescriptor::Zmod { modulus } => {
                RingElem::Zmod(Residue { value: (v as i128).rem_euclid(*modulus as i128) as u64, modulus: *modulus })
            }
            RingDescriptor::PolyInt { vars } => RingElem::Poly(Polynomial::constant(vars.clone(), BigInt::from(v))),
        }
    }

    /// The image of an integer under the canonical map `ℤ → R`.
    pub fn from_bigint(&self, v: BigInt) -> RingElem {
        match self {
            RingDescriptor::Int => RingElem::Int(v),
            RingDescriptor::Zmod { modulus } => {
                let r = v.mod_floor(&BigInt::from(*modulus));
                RingElem::Zmod(Residue { value: r.to_u64().expect("residue fits in u64"), modulus: *modulus })
            }
            RingDescriptor::PolyInt { vars } => RingElem::Poly(Polynomial::constant(vars.clone(), v)),
        }
    }

    /// The `idx`-th indeterminate of a polynomial ring.
    pub fn var(&self, idx: usize) -> Result<RingElem> {
        match self {
            RingDescriptor::PolyInt { vars } if idx < vars.len() => {
                Ok(RingElem::Poly(Polynomial::var(vars.clone(), idx)))
            }
            RingDescriptor::PolyInt { .. } => Err(Error::BadRing(format!("no variable #{idx}"))),
            _ => Err(Error::BadRing("not a polynomial ring".into())),
        }
    }

    /// Looks up an indeterminate by name.
    pub fn var_named(&self, name: &str) -> Result<RingElem> {
        match self {
            RingDescriptor::PolyInt { vars } => {
                let idx =
                    vars.iter().position(|v| v == name).ok_or_else(|| Error::BadRing(format!("no variable {name}")))?;
                self.var(idx)
            }
            _ => Err(Error::BadRing("not a polynomial ring".into())),
        }
    }

    /// Parses an element from its JSON form: a decimal string (or JSON
    /// integer) for `int`/`zmod`, an array of `{"coeff", "exps"}` terms for
    /// `poly_int`.
    pub fn elem_from_json(&self, v: &Value) -> Result<RingElem> {
        match self {
            RingDescriptor::Int | RingDescriptor::Zmod { .. } => {
                let n = json_integer(v)?;
                Ok(self.from_bigint(n))
            }
            RingDescriptor::PolyInt { vars } => {
                let arr = v.as_array().ok_or_else(|| Error::Parse("polynomial must be an array of terms".into()))?;
                let mut terms = Vec::with_capacity(arr.len());
                for t in arr {
                    let coeff = json_integer(t.get("coeff").ok_or_else(|| Error::Parse("term without coeff".into()))?)?;
                    let exps = t
                        .get("exps")
                        .and_then(Value::as_array)
                        .ok_or_else(|| Error::Parse("term without exps".into()))?
                        .iter()
                        .map(|e| {
                            e.as_u64()
                                .and_then(|e| u32::try_from(e).ok())
                                .ok_or_else(|| Error::Parse(format!("bad exponent {e}")))
                        })
                        .collect::<Result<Vec<u32>>>()?;
                    if exps.len() != vars.len() {
                        return Err(Error::Parse(format!(
                            "term has {} exponents, ring has {} variables",
                            exps.len(),
                            vars.len()
                        )));
                    }
                    terms.push(Term { exps, coeff });
                }
                Ok(RingElem::Poly(Polynomial::from_terms(vars.clone(), terms)))
            }
        }
    }

    /// Parses a plain textual element: a decimal integer, or for polynomial
    /// rings additionally a bare variable name or its negation.
    pub fn parse_elem(&self, s: &str) -> Result<RingElem> {
        let s = s.trim();
        if let Ok(n) = BigInt::from_str(s) {
            return Ok(self.from_bigint(n));
        }
        if s.starts_with('[') {
            return self.elem_from_json(&serde_json::from_str(s)?);
        }
        if let RingDescriptor::PolyInt { .. } = self {
            if let Some(rest) = s.strip_prefix('-') {
                return Ok(self.var_named(rest.trim())?.neg());
            }
            return self.var_named(s);
        }
        Err(Error::Parse(format!("cannot parse ring element {s:?}")))
    }
}

fn json_integer(v: &Value) -> Result<BigInt> {
    match v {
        Value::String(s) => BigInt::from_str(s.trim()).map_err(|_| Error::Parse(format!("bad integer {s:?}"))),
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from))
            .ok_or_else(|| Error::Parse(format!("bad integer {n}"))),
        other => Err(Error::Parse(format!("expected integer, got {other}"))),
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Int => write!(f, "int"),
            RingDescriptor::Zmod { modulus } => write!(f, "zmod:{modulus}"),
            RingDescriptor::PolyInt { vars } => write!(f, "poly:{}", vars.join(",")),
        }
    }
}

/// Command-line syntax: `int`, `zmod:<m>` or `poly:<v1,v2,...>`.
impl FromStr for RingDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "int" {
            return Ok(RingDescriptor::Int);
        }
        if let Some(m) = s.strip_prefix("zmod:") {
            let m = m.trim().parse::<u64>().map_err(|_| Error::BadRing(format!("bad modulus {m:?}")))?;
            return RingDescriptor::zmod(m);
        }
        if let Some(vs) = s.strip_prefix("poly:") {
            return RingDescriptor::poly_int(vs.split(',').map(str::trim));
        }
        Err(Error::BadRing(format!("unknown ring {s:?}")))
    }
}

/// A residue class modulo `modulus`, stored reduced in `[0, modulus)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Residue {
    pub value: u64,
    pub modulus: u64,
}

impl Residue {
    #[inline]
    fn add(self, o: Residue) -> Residue {
        let m = self.modulus;
        let value = if self.value >= m - o.value { self.value - (m - o.value) } else { self.value + o.value };
        Residue { value, modulus: m }
    }

    #[inline]
    fn neg(self) -> Residue {
        let value = if self.value == 0 { 0 } else { self.modulus - self.value };
        Residue { value, modulus: self.modulus }
    }

    #[inline]
    fn mul(self, o: Residue) -> Residue {
        let value = ((self.value as u128 * o.value as u128) % self.modulus as u128) as u64;
        Residue { value, modulus: self.modulus }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingElem {
    Int(BigInt),
    Zmod(Residue),
    Poly(Polynomial),
}

impl RingElem {
    pub fn descriptor(&self) -> RingDescriptor {
        match self {
            RingElem::Int(_) => RingDescriptor::Int,
            RingElem::Zmod(r) => RingDescriptor::Zmod { modulus: r.modulus },
            RingElem::Poly(p) => RingDescriptor::PolyInt { vars: p.vars().clone() },
        }
    }

    pub fn belongs_to(&self, ring: &RingDescriptor) -> bool {
        match (self, ring) {
            (RingElem::Int(_), RingDescriptor::Int) => true,
            (RingElem::Zmod(r), RingDescriptor::Zmod { modulus }) => r.modulus == *modulus,
            (RingElem::Poly(p), RingDescriptor::PolyInt { vars }) => Arc::ptr_eq(p.vars(), vars) || p.vars() == vars,
            _ => false,
        }
    }

    pub fn same_ring(&self, other: &RingElem) -> bool {
        match (self, other) {
            (RingElem::Int(_), RingElem::Int(_)) => true,
            (RingElem::Zmod(a), RingElem::Zmod(b)) => a.modulus == b.modulus,
            (RingElem::Poly(a), RingElem::Poly(b)) => a.same_ring(b),
            _ => false,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingElem::Int(v) => v.is_zero(),
            RingElem::Zmod(r) => r.value == 0,
            RingElem::Poly(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            RingElem::Int(v) => v.is_one(),
            RingElem::Zmod(r) => r.value == 1,
            RingElem::Poly(p) => p.as_constant().is_some_and(|c| c.is_one()),
        }
    }

    fn check(&self, other: &RingElem) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &RingElem) -> Result<RingElem> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &RingElem) -> Result<RingElem> {
        self.check(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn try_mul(&self, other: &RingElem) -> Result<RingElem> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn try_eq(&self, other: &RingElem) -> Result<bool> {
        self.check(other)?;
        Ok(self == other)
    }

    fn add_unchecked(&self, other: &RingElem) -> RingElem {
        match (self, other) {
            (RingElem::Int(a), RingElem::Int(b)) => RingElem::Int(a + b),
            (RingElem::Zmod(a), RingElem::Zmod(b)) => RingElem::Zmod(a.add(*b)),
            (RingElem::Poly(a), RingElem::Poly(b)) => RingElem::Poly(a.add(b)),
            _ => panic!("ring mismatch"),
        }
    }

    fn sub_unchecked(&self, other: &RingElem) -> RingElem {
        match (self, other) {
            (RingElem::Int(a), RingElem::Int(b)) => RingElem::Int(a - b),
            (RingElem::Zmod(a), RingElem::Zmod(b)) => RingElem::Zmod(a.add(b.neg())),
            (RingElem::Poly(a), RingElem::Poly(b)) => RingElem::Poly(a.sub(b)),
            _ => panic!("ring mismatch"),
        }
    }

    fn mul_unchecked(&self, other: &RingElem) -> RingElem {
        match (self, other) {
            (RingElem::Int(a), RingElem::Int(b)) => RingElem::Int(a * b),
            (RingElem::Zmod(a), RingElem::Zmod(b)) => RingElem::Zmod(a.mul(*b)),
            (RingElem::Poly(a), RingElem::Poly(b)) => RingElem::Poly(a.mul(b)),
            _ => panic!("ring mismatch"),
        }
    }

    /// `self += a * b`, the inner step of every row operation.
    pub(crate) fn add_mul_assign(&mut self, a: &RingElem, b: &RingElem) {
        match (&mut *self, a, b) {
            (RingElem::Zmod(s), RingElem::Zmod(x), RingElem::Zmod(y)) => *s = s.add(x.mul(*y)),
            _ => {
                if a.is_zero() || b.is_zero() {
                    return;
                }
                *self = self.add_unchecked(&a.mul_unchecked(b));
            }
        }
    }

    /// Multiplicative inverse in `ℤ/m`; fails with "non-unit" when
    /// `gcd(a, m) ≠ 1`.
    pub fn zmod_inverse(&self) -> Result<RingElem> {
        let RingElem::Zmod(r) = self else {
            return Err(Error::BadRing("inverse is only defined for zmod".into()));
        };
        let a = BigInt::from(r.value);
        let m = BigInt::from(r.modulus);
        let e = a.extended_gcd(&m);
        if !e.gcd.is_one() {
            return Err(Error::NonUnit);
        }
        Ok(RingDescriptor::Zmod { modulus: r.modulus }.from_bigint(e.x))
    }

    /// The integer representative: the value itself for `int`, the reduced
    /// residue for `zmod`, `None` for polynomials.
    pub fn to_bigint(&self) -> Option<BigInt> {
        match self {
            RingElem::Int(v) => Some(v.clone()),
            RingElem::Zmod(r) => Some(BigInt::from(r.value)),
            RingElem::Poly(_) => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            RingElem::Int(v) => Value::String(v.to_string()),
            RingElem::Zmod(r) => Value::String(r.value.to_string()),
            RingElem::Poly(p) => {
                Value::Array(p.terms().iter().map(|t| json!({"coeff": t.coeff.to_string(), "exps": t.exps})).collect())
            }
        }
    }

    /// Whether the payload is in canonical form.
    pub fn is_canonical(&self) -> bool {
        match self {
            RingElem::Int(_) => true,
            RingElem::Zmod(r) => r.value < r.modulus,
            RingElem::Poly(p) => p.is_canonical(),
        }
    }

    /// Evaluates a polynomial at an integer point; integers evaluate to
    /// themselves.
    pub fn eval_at(&self, point: &[BigInt]) -> Option<BigInt> {
        match self {
            RingElem::Int(v) => Some(v.clone()),
            RingElem::Poly(p) => Some(p.eval(point)),
            RingElem::Zmod(_) => None,
        }
    }
}

impl Neg for &RingElem {
    type Output = RingElem;

    fn neg(self) -> RingElem {
        match self {
            RingElem::Int(v) => RingElem::Int(-v),
            RingElem::Zmod(r) => RingElem::Zmod(r.neg()),
            RingElem::Poly(p) => RingElem::Poly(p.neg()),
        }
    }
}

impl Neg for RingElem {
    type Output = RingElem;

    fn neg(self) -> RingElem {
        -&self
    }
}

// Operator forms panic on mixed rings; the matrix layer checks rings once
// per operation and then uses these.
impl Add for &RingElem {
    type Output = RingElem;
    fn add(self, o: &RingElem) -> RingElem {
        self.add_unchecked(o)
    }
}

impl Sub for &RingElem {
    type Output = RingElem;
    fn sub(self, o: &RingElem) -> RingElem {
        self.sub_unchecked(o)
    }
}

impl Mul for &RingElem {
    type Output = RingElem;
    fn mul(self, o: &RingElem) -> RingElem {
        self.mul_unchecked(o)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElem::Int(v) => write!(f, "{v}"),
            RingElem::Zmod(r) => write!(f, "{}", r.value),
            RingElem::Poly(p) => write!(f, "{p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: u64) -> RingDescriptor {
        RingDescriptor::zmod(m).unwrap()
    }

    #[test]
    fn zmod_addition_reduces() {
        let r = z(5);
        assert_eq!(r.from_i64(3).try_add(&r.from_i64(4)).unwrap(), r.from_i64(2));
        assert_eq!(r.from_i64(-1), r.from_i64(4));
    }

    #[test]
    fn poly_difference_of_squares() {
        let r = RingDescriptor::poly_int(["x"]).unwrap();
        let x = r.var(0).unwrap();
        let one = r.one();
        let p = (&x + &one).try_mul(&(&x - &one)).unwrap();
        let x2 = x.try_mul(&x).unwrap();
        assert_eq!(p, &x2 - &one);
    }

    #[test]
    fn zero_equals_its_negation() {
        for r in [RingDescriptor::Int, z(7), RingDescriptor::poly_int(["a"]).unwrap()] {
            let zero = r.zero();
            assert!(zero.try_eq(&-&zero).unwrap());
        }
    }

    #[test]
    fn mixing_rings_is_an_error() {
        let a = z(5).from_i64(1);
        let b = z(7).from_i64(1);
        assert_eq!(a.try_add(&b), Err(Error::RingMismatch));
        assert_eq!(a.try_eq(&RingDescriptor::Int.one()), Err(Error::RingMismatch));
        let p = RingDescriptor::poly_int(["x"]).unwrap().one();
        let q = RingDescriptor::poly_int(["y"]).unwrap().one();
        assert_eq!(p.try_mul(&q), Err(Error::RingMismatch));
    }

    #[test]
    fn inverse_mod_seven_matches_brute_force() {
        let r = z(7);
        let brute = (0..7).find(|b| (3 * b) % 7 == 1).unwrap();
        assert_eq!(brute, 5);
        assert_eq!(r.from_i64(3).zmod_inverse().unwrap(), r.from_i64(brute));
    }

    #[test]
    fn inverse_edge_cases() {
        for m in [2u64, 4, 97, 1 << 40] {
            assert_eq!(z(m).one().zmod_inverse().unwrap(), z(m).one());
        }
        assert_eq!(z(4).from_i64(2).zmod_inverse(), Err(Error::NonUnit));
        assert!(RingDescriptor::Int.one().zmod_inverse().is_err());
    }

    #[test]
    fn descriptor_validation() {
        assert!(RingDescriptor::zmod(1).is_err());
        assert!(RingDescriptor::poly_int(["a", "a"]).is_err());
        assert!(RingDescriptor::poly_int([""]).is_err());
        assert!(serde_json::from_str::<RingDescriptor>(r#"{"type":"zmod","modulus":1}"#).is_err());
    }

    #[test]
    fn descriptor_json_forms() {
        let cases = [
            (RingDescriptor::Int, r#"{"type":"int"}"#),
            (z(97), r#"{"type":"zmod","modulus":97}"#),
            (RingDescriptor::poly_int(["a", "b"]).unwrap(), r#"{"type":"poly_int","vars":["a","b"]}"#),
        ];
        for (d, s) in cases {
            assert_eq!(serde_json::to_string(&d).unwrap(), s);
            assert_eq!(serde_json::from_str::<RingDescriptor>(s).unwrap(), d);
        }
    }

    #[test]
    fn element_json_forms() {
        let r = RingDescriptor::poly_int(["a", "b"]).unwrap();
        let e = &r.var(0).unwrap() - &r.from_i64(2);
        let v = e.to_json();
        assert_eq!(v.to_string(), r#"[{"coeff":"1","exps":[1,0]},{"coeff":"-2","exps":[0,0]}]"#);
        assert_eq!(r.elem_from_json(&v).unwrap(), e);
        assert_eq!(z(97).elem_from_json(&json!("-1")).unwrap(), z(97).from_i64(96));
        assert_eq!(z(97).from_i64(96).to_json(), json!("96"));
    }

    #[test]
    fn cli_ring_syntax() {
        assert_eq!("int".parse::<RingDescriptor>().unwrap(), RingDescriptor::Int);
        assert_eq!("zmod:97".parse::<RingDescriptor>().unwrap(), z(97));
        assert_eq!("poly:x,y".parse::<RingDescriptor>().unwrap(), RingDescriptor::poly_int(["x", "y"]).unwrap());
        assert!("zmod:1".parse::<RingDescriptor>().is_err());
        assert!("field".parse::<RingDescriptor>().is_err());
    }

    #[test]
    fn large_modulus_arithmetic() {
        let m = u64::MAX - 58; // prime
        let r = z(m);
        let a = r.from_i64(-1);
        assert_eq!(a.try_mul(&a).unwrap(), r.one());
        assert_eq!(a.try_add(&a).unwrap(), r.from_i64(-2));
    }
}
