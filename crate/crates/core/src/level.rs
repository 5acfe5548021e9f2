//! The upper level of a matrix, reduction modulo an integer, and the
//! principal and full congruence classes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::indexing::{all_pairs, rank_from_pair_count, Index2, RawPair};
use crate::linalg::SquareMatrix;
use crate::ring::{RingDescriptor, RingElem};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    /// The off-diagonal entry `g_{I,J}`.
    Entry { row: Index2, col: Index2 },
    /// `g_{I,I} − g_{Ĩ,Ĩ}` with `Ĩ` the successor of `I` in rank order.
    DiagDiff { first: Index2, next: Index2 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelGenerator {
    pub kind: GeneratorKind,
    pub value: RingElem,
}

impl LevelGenerator {
    pub fn to_json(&self) -> Value {
        match self.kind {
            GeneratorKind::Entry { row, col } => json!({
                "kind": "entry",
                "I": row,
                "J": col,
                "value": self.value.to_json(),
            }),
            GeneratorKind::DiagDiff { first, .. } => json!({
                "kind": "diagdiff",
                "I": first,
                "value": self.value.to_json(),
            }),
        }
    }

    pub fn from_json(v: &Value, n: usize, ring: &RingDescriptor) -> Result<LevelGenerator> {
        let pair = |key: &str| -> Result<Index2> {
            let raw: RawPair = serde_json::from_value(
                v.get(key).cloned().ok_or_else(|| Error::Parse(format!("generator without {key}")))?,
            )?;
            raw.resolve(n)
        };
        let value =
            ring.elem_from_json(v.get("value").ok_or_else(|| Error::Parse("generator without value".into()))?)?;
        let kind = match v.get("kind").and_then(Value::as_str) {
            Some("entry") => GeneratorKind::Entry { row: pair("I")?, col: pair("J")? },
            Some("diagdiff") => {
                let first = pair("I")?;
                let next = Index2::unrank(first.rank() + 1, n)?;
                GeneratorKind::DiagDiff { first, next }
            }
            other => return Err(Error::Parse(format!("unknown generator kind {other:?}"))),
        };
        Ok(LevelGenerator { kind, value })
    }
}

fn ambient(g: &SquareMatrix) -> Result<usize> {
    rank_from_pair_count(g.dim())
        .filter(|&n| n >= 3)
        .ok_or_else(|| Error::DimensionMismatch(format!("{} is not C(n,2) for n ≥ 3", g.dim())))
}

/// All off-diagonal entries (row-major) followed by the `N − 1` successive
/// diagonal differences: `N² − 1` generators of the upper level.
pub fn level_generators(g: &SquareMatrix) -> Result<Vec<LevelGenerator>> {
    let n = ambient(g)?;
    let pairs = all_pairs(n);
    let mut out = Vec::with_capacity(pairs.len() * pairs.len() - 1);
    for row in &pairs {
        for col in pairs.iter().filter(|c| *c != row) {
            out.push(LevelGenerator {
                kind: GeneratorKind::Entry { row: *row, col: *col },
                value: g.get(row.rank(), col.rank()).clone(),
            });
        }
    }
    for w in pairs.windows(2) {
        out.push(LevelGenerator {
            kind: GeneratorKind::DiagDiff { first: w[0], next: w[1] },
            value: g.get(w[0].rank(), w[0].rank()) - g.get(w[1].rank(), w[1].rank()),
        });
    }
    Ok(out)
}

/// An ideal given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSpec {
    pub ring: RingDescriptor,
    pub generators: Vec<RingElem>,
}

impl IdealSpec {
    pub fn new(ring: RingDescriptor, generators: Vec<RingElem>) -> Result<IdealSpec> {
        if generators.iter().any(|g| !g.belongs_to(&ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(IdealSpec { ring, generators })
    }

    /// The ideal generated by the level generators of `g`.
    pub fn level_of(g: &SquareMatrix) -> Result<IdealSpec> {
        let gens = level_generators(g)?.into_iter().map(|l| l.value).collect();
        IdealSpec::new(g.ring().clone(), gens)
    }

    /// The non-negative generator of the ideal, for `int` and `zmod` rings.
    pub fn principal_generator(&self) -> Result<BigInt> {
        let mut d = match &self.ring {
            RingDescriptor::Int => BigInt::zero(),
            RingDescriptor::Zmod { modulus } => BigInt::from(*modulus),
            RingDescriptor::PolyInt { .. } => return Err(Error::MembershipUndecidable),
        };
        for g in &self.generators {
            d = d.gcd(&g.to_bigint().expect("int or zmod"));
        }
        Ok(d)
    }
}

/// Whether `x` lies in the ideal. Decided by a gcd over `ℤ` and `ℤ/m`.
pub fn ideal_contains(ideal: &IdealSpec, x: &RingElem) -> Result<bool> {
    if !x.belongs_to(&ideal.ring) {
        return Err(Error::RingMismatch);
    }
    let d = ideal.principal_generator()?;
    let v = x.to_bigint().expect("int or zmod");
    Ok(if d.is_zero() { v.is_zero() } else { v.is_multiple_of(&d) })
}

/// Entrywise reduction into `ℤ/d`.
pub fn reduce_mod(g: &SquareMatrix, d: u64) -> Result<SquareMatrix> {
    if d < 2 {
        return Err(Error::Modulus(format!("modulus {d} < 2")));
    }
    match g.ring() {
        RingDescriptor::Int => {}
        RingDescriptor::Zmod { modulus } if modulus % d == 0 => {}
        RingDescriptor::Zmod { modulus } => return Err(Error::Modulus(format!("{d} does not divide {modulus}"))),
        RingDescriptor::PolyInt { .. } => return Err(Error::Modulus("reduction needs an int or zmod matrix".into())),
    }
    let target = RingDescriptor::zmod(d)?;
    Ok(g.map(&target, |e| target.from_bigint(e.to_bigint().expect("int or zmod"))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CongruenceClass {
    /// Identity modulo `d`.
    Principal,
    /// Scalar, but not identity, modulo `d`.
    Full,
    Neither,
}

impl CongruenceClass {
    pub fn as_str(self) -> &'static str {
        match self {
            CongruenceClass::Principal => "principal",
            CongruenceClass::Full => "full",
            CongruenceClass::Neither => "neither",
        }
    }

    /// Principal matrices are also in the full class.
    pub fn is_full(self) -> bool {
        self != CongruenceClass::Neither
    }
}

pub fn congruence_class(g: &SquareMatrix, d: u64) -> Result<CongruenceClass> {
    let r = reduce_mod(g, d)?;
    Ok(if r.is_identity() {
        CongruenceClass::Principal
    } else if r.is_scalar() {
        CongruenceClass::Full
    } else {
        CongruenceClass::Neither
    })
}
