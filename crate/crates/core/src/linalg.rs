//! Dense square matrices over a [`RingDescriptor`] and invertible matrices
//! carried together with their inverse.
//!
//! Nothing here inverts a matrix. Invertible elements are built from
//! generators whose inverses are known, and [`InvPair`] keeps both halves
//! in step.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::indexing::{pair_count, rank_from_pair_count};
use crate::ring::{Residue, RingDescriptor, RingElem};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquareMatrix {
    dim: usize,
    ring: RingDescriptor,
    entries: Vec<RingElem>,
}

impl SquareMatrix {
    pub fn identity(dim: usize, ring: &RingDescriptor) -> SquareMatrix {
        SquareMatrix::scalar(dim, &ring.one())
    }

    pub fn zero(dim: usize, ring: &RingDescriptor) -> SquareMatrix {
        SquareMatrix { dim, ring: ring.clone(), entries: vec![ring.zero(); dim * dim] }
    }

    pub fn scalar(dim: usize, c: &RingElem) -> SquareMatrix {
        let ring = c.descriptor();
        let mut m = SquareMatrix::zero(dim, &ring);
        for k in 0..dim {
            m.entries[k * dim + k] = c.clone();
        }
        m
    }

    pub fn from_rows(ring: &RingDescriptor, rows: Vec<Vec<RingElem>>) -> Result<SquareMatrix> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch(format!("row {r} has {} entries, expected {dim}", row.len())));
            }
            for e in row {
                if !e.belongs_to(ring) {
                    return Err(Error::RingMismatch);
                }
                entries.push(e);
            }
        }
        Ok(SquareMatrix { dim, ring: ring.clone(), entries })
    }

    /// Builds a matrix entry by entry. Panics if `f` returns an element of
    /// another ring.
    pub fn from_fn(dim: usize, ring: &RingDescriptor, mut f: impl FnMut(usize, usize) -> RingElem) -> SquareMatrix {
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                let e = f(r, c);
                assert!(e.belongs_to(ring), "entry ({r},{c}) is not in {ring}");
                entries.push(e);
            }
        }
        SquareMatrix { dim, ring: ring.clone(), entries }
    }

    /// The elementary transvection `e + ξ·e_{row,col}` (0-based positions).
    pub fn transvection(dim: usize, row: usize, col: usize, xi: &RingElem) -> Result<SquareMatrix> {
        if row >= dim || col >= dim || row == col {
            return Err(Error::BadIndex(format!("transvection at ({row},{col}) in dim {dim}")));
        }
        let mut m = SquareMatrix::identity(dim, &xi.descriptor());
        m.entries[row * dim + col] = xi.clone();
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn get(&self, r: usize, c: usize) -> &RingElem {
        &self.entries[r * self.dim + c]
    }

    pub fn entries(&self) -> &[RingElem] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[RingElem] {
        &self.entries[r * self.dim..(r + 1) * self.dim]
    }

    pub fn column(&self, c: usize) -> Vec<RingElem> {
        (0..self.dim).map(|r| self.get(r, c).clone()).collect()
    }

    /// A copy with one entry replaced.
    pub fn with_entry(&self, r: usize, c: usize, v: RingElem) -> Result<SquareMatrix> {
        if !v.belongs_to(&self.ring) {
            return Err(Error::RingMismatch);
        }
        let mut m = self.clone();
        m.entries[r * self.dim + c] = v;
        Ok(m)
    }

    /// Applies `f` entrywise, landing in `ring`.
    pub fn map(&self, ring: &RingDescriptor, f: impl Fn(&RingElem) -> RingElem) -> SquareMatrix {
        SquareMatrix::from_fn(self.dim, ring, |r, c| f(self.get(r, c)))
    }

    fn check_compatible(&self, other: &SquareMatrix) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!("{} vs {}", self.dim, other.dim)));
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn mul(&self, other: &SquareMatrix) -> Result<SquareMatrix> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &SquareMatrix) -> SquareMatrix {
        if let RingDescriptor::Zmod { modulus } = self.ring {
            return self.mul_zmod(other, modulus);
        }
        let d = self.dim;
        let mut entries = vec![self.ring.zero(); d * d];
        for r in 0..d {
            for k in 0..d {
                let a = &self.entries[r * d + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    entries[r * d + c].add_mul_assign(a, &other.entries[k * d + c]);
                }
            }
        }
        SquareMatrix { dim: d, ring: self.ring.clone(), entries }
    }

    fn mul_zmod(&self, other: &SquareMatrix, modulus: u64) -> SquareMatrix {
        let d = self.dim;
        let raw = |m: &SquareMatrix| -> Vec<u64> {
            m.entries
                .iter()
                .map(|e| match e {
                    RingElem::Zmod(r) => r.value,
                    _ => unreachable!("zmod matrix with non-residue entry"),
                })
                .collect()
        };
        let (a, b) = (raw(self), raw(other));
        let mut out = Vec::with_capacity(d * d);
        let small = modulus < (1 << 32) && d < (1 << 16);
        for r in 0..d {
            for c in 0..d {
                let value = if small {
                    // each product < 2^64; the row sum stays well inside u128
                    let mut acc: u128 = 0;
                    for k in 0..d {
                        acc += (a[r * d + k] * b[k * d + c]) as u128;
                    }
                    (acc % modulus as u128) as u64
                } else {
                    let mut acc: u128 = 0;
                    for k in 0..d {
                        acc += (a[r * d + k] as u128 * b[k * d + c] as u128) % modulus as u128;
                    }
                    (acc % modulus as u128) as u64
                };
                out.push(RingElem::Zmod(Residue { value, modulus }));
            }
        }
        SquareMatrix { dim: d, ring: self.ring.clone(), entries: out }
    }

    pub fn mat_eq(&self, other: &SquareMatrix) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.entries == other.entries)
    }

    pub fn is_identity(&self) -> bool {
        self.is_scalar_with(|d| d.is_one())
    }

    /// Whether the matrix is `c·e` for some `c`.
    pub fn is_scalar(&self) -> bool {
        let c = self.get(0, 0).clone();
        self.is_scalar_with(|d| *d == c)
    }

    fn is_scalar_with(&self, diag_ok: impl Fn(&RingElem) -> bool) -> bool {
        let d = self.dim;
        (0..d).all(|r| {
            (0..d).all(|c| {
                let e = self.get(r, c);
                if r == c {
                    diag_ok(e)
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn mul_vec(&self, v: &[RingElem]) -> Result<Vec<RingElem>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch(format!("vector of length {}", v.len())));
        }
        if v.iter().any(|e| !e.belongs_to(&self.ring)) {
            return Err(Error::RingMismatch);
        }
        Ok((0..self.dim)
            .map(|r| {
                let mut acc = self.ring.zero();
                for (a, x) in self.row(r).iter().zip(v) {
                    acc.add_mul_assign(a, x);
                }
                acc
            })
            .collect())
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[RingElem]) -> Result<Vec<RingElem>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch(format!("vector of length {}", v.len())));
        }
        if v.iter().any(|e| !e.belongs_to(&self.ring)) {
            return Err(Error::RingMismatch);
        }
        Ok((0..self.dim)
            .map(|c| {
                let mut acc = self.ring.zero();
                for (r, x) in v.iter().enumerate() {
                    acc.add_mul_assign(x, self.get(r, c));
                }
                acc
            })
            .collect())
    }

    /// `self ← t_{row,col}(ξ) · self`: adds `ξ`·(row `col`) to row `row`.
    pub(crate) fn left_transvection(&mut self, row: usize, col: usize, xi: &RingElem) {
        if xi.is_zero() {
            return;
        }
        let d = self.dim;
        for c in 0..d {
            let src = self.entries[col * d + c].clone();
            self.entries[row * d + c].add_mul_assign(xi, &src);
        }
    }

    /// `self ← self · t_{row,col}(ξ)`: adds `ξ`·(column `row`) to column `col`.
    pub(crate) fn right_transvection(&mut self, row: usize, col: usize, xi: &RingElem) {
        if xi.is_zero() {
            return;
        }
        let d = self.dim;
        for r in 0..d {
            let src = self.entries[r * d + row].clone();
            self.entries[r * d + col].add_mul_assign(&src, xi);
        }
    }

    /// JSON form. When `ambient_rank` is given the matrix is labelled with
    /// `"n"` (its size is then `C(n,2)`), otherwise with `"dim"`.
    pub fn to_json(&self, ambient_rank: Option<usize>) -> Value {
        let rows: Vec<Value> =
            (0..self.dim).map(|r| Value::Array(self.row(r).iter().map(RingElem::to_json).collect())).collect();
        let mut obj = Map::new();
        match ambient_rank {
            Some(n) => obj.insert("n".into(), json!(n)),
            None => obj.insert("dim".into(), json!(self.dim)),
        };
        obj.insert("ring".into(), serde_json::to_value(&self.ring).expect("descriptor serializes"));
        obj.insert("rows".into(), Value::Array(rows));
        Value::Object(obj)
    }

    pub fn from_json(v: &Value) -> Result<SquareMatrix> {
        let ring: RingDescriptor =
            serde_json::from_value(v.get("ring").cloned().ok_or_else(|| Error::Parse("matrix without ring".into()))?)?;
        let dim = match (v.get("n").and_then(Value::as_u64), v.get("dim").and_then(Value::as_u64)) {
            (Some(n), _) => pair_count(n as usize),
            (None, Some(d)) => d as usize,
            (None, None) => return Err(Error::Parse("matrix needs \"n\" or \"dim\"".into())),
        };
        let rows = v.get("rows").and_then(Value::as_array).ok_or_else(|| Error::Parse("matrix without rows".into()))?;
        if rows.len() != dim {
            return Err(Error::Parse(format!("expected {dim} rows, found {}", rows.len())));
        }
        let rows = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Parse("row must be an array".into()))?
                    .iter()
                    .map(|e| ring.elem_from_json(e))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SquareMatrix::from_rows(&ring, rows)
    }

    /// `n` if the size is `C(n, 2)` for some `n ≥ 3`.
    pub fn ambient_rank(&self) -> Option<usize> {
        rank_from_pair_count(self.dim).filter(|&n| n >= 3)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `ˣy = x·y·x⁻¹`
    Left,
    /// `yˣ = x⁻¹·y·x`
    Right,
}

/// An invertible matrix together with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvPair {
    fwd: SquareMatrix,
    bwd: SquareMatrix,
}

impl InvPair {
    /// Pairs a matrix with a claimed inverse, verifying both products.
    pub fn new(fwd: SquareMatrix, bwd: SquareMatrix) -> Result<InvPair> {
        fwd.check_compatible(&bwd)?;
        if !fwd.mul_unchecked(&bwd).is_identity() || !bwd.mul_unchecked(&fwd).is_identity() {
            return Err(Error::NotInverse);
        }
        Ok(InvPair { fwd, bwd })
    }

    pub fn identity(dim: usize, ring: &RingDescriptor) -> InvPair {
        let e = SquareMatrix::identity(dim, ring);
        InvPair { fwd: e.clone(), bwd: e }
    }

    pub fn transvection(dim: usize, row: usize, col: usize, xi: &RingElem) -> Result<InvPair> {
        Ok(InvPair {
            fwd: SquareMatrix::transvection(dim, row, col, xi)?,
            bwd: SquareMatrix::transvection(dim, row, col, &-xi)?,
        })
    }

    pub fn fwd(&self) -> &SquareMatrix {
        &self.fwd
    }

    pub fn bwd(&self) -> &SquareMatrix {
        &self.bwd
    }

    pub fn dim(&self) -> usize {
        self.fwd.dim
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.fwd.ring
    }

    pub fn into_parts(self) -> (SquareMatrix, SquareMatrix) {
        (self.fwd, self.bwd)
    }

    /// `(a·b, b⁻¹·a⁻¹)`.
    pub fn compose(&self, other: &InvPair) -> Result<InvPair> {
        self.fwd.check_compatible(&other.fwd)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &InvPair) -> InvPair {
        let p = InvPair { fwd: self.fwd.mul_unchecked(&other.fwd), bwd: other.bwd.mul_unchecked(&self.bwd) };
        debug_assert!(p.fwd.mul_unchecked(&p.bwd).is_identity());
        p
    }

    pub fn invert(&self) -> InvPair {
        InvPair { fwd: self.bwd.clone(), bwd: self.fwd.clone() }
    }

    /// `x·y·x⁻¹` (left) or `x⁻¹·y·x` (right).
    pub fn conjugate(y: &InvPair, x: &InvPair, side: Side) -> Result<InvPair> {
        y.fwd.check_compatible(&x.fwd)?;
        Ok(match side {
            Side::Left => x.compose_unchecked(y).compose_unchecked(&x.invert()),
            Side::Right => x.invert().compose_unchecked(y).compose_unchecked(x),
        })
    }

    /// The left-normed commutator `[x, y] = x·y·x⁻¹·y⁻¹`.
    pub fn commutator(x: &InvPair, y: &InvPair) -> Result<InvPair> {
        x.fwd.check_compatible(&y.fwd)?;
        Ok(x.compose_unchecked(y).compose_unchecked(&x.invert()).compose_unchecked(&y.invert()))
    }

    /// `self ← t·self` for the transvection `t = t_{row,col}(ξ)`.
    pub(crate) fn left_transvection(&mut self, row: usize, col: usize, xi: &RingElem) {
        self.fwd.left_transvection(row, col, xi);
        self.bwd.right_transvection(row, col, &-xi);
    }

    /// `self ← self·t` for the transvection `t = t_{row,col}(ξ)`.
    pub(crate) fn right_transvection(&mut self, row: usize, col: usize, xi: &RingElem) {
        self.fwd.right_transvection(row, col, xi);
        self.bwd.left_transvection(row, col, &-xi);
    }

    pub fn to_json(&self, ambient_rank: Option<usize>) -> Value {
        json!({
            "fwd": self.fwd.to_json(ambient_rank),
            "bwd": self.bwd.to_json(ambient_rank),
        })
    }

    pub fn from_json(v: &Value) -> Result<InvPair> {
        let fwd = SquareMatrix::from_json(v.get("fwd").ok_or_else(|| Error::Parse("pair without fwd".into()))?)?;
        let bwd = SquareMatrix::from_json(v.get("bwd").ok_or_else(|| Error::Parse("pair without bwd".into()))?)?;
        InvPair::new(fwd, bwd)
    }
}
