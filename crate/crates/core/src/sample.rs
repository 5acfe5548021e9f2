//! Seeded random generation of ring elements, words and matrices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exterior::cauchy_binet;
use crate::linalg::{InvPair, SquareMatrix};
use crate::ring::{RingDescriptor, RingElem};
use crate::words::{ElemWord, ExtLetter};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random residue for `zmod`, an integer in `[-9, 9]` for
/// `int`, and a small integer combination of variables for `poly`.
pub fn random_elem(rng: &mut impl Rng, ring: &RingDescriptor) -> RingElem {
    match ring {
        RingDescriptor::Zmod { modulus } => ring.from_bigint(rng.gen_range(0..*modulus).into()),
        RingDescriptor::Int => ring.from_i64(rng.gen_range(-9..=9)),
        RingDescriptor::PolyInt { vars } => {
            let mut e = ring.from_i64(rng.gen_range(-3..=3));
            for k in 0..vars.len() {
                let c = ring.from_i64(rng.gen_range(-2..=2));
                e = &e + &(&c * &ring.var(k).expect("index in range"));
            }
            e
        }
    }
}

fn random_pair(rng: &mut impl Rng, n: usize) -> (usize, usize) {
    let i = rng.gen_range(1..=n);
    let mut j = rng.gen_range(1..n);
    if j >= i {
        j += 1;
    }
    (i, j)
}

/// A word of `len` exterior transvections with random indices and
/// parameters.
pub fn random_elem_word(rng: &mut impl Rng, n: usize, len: usize, ring: &RingDescriptor) -> Result<ElemWord> {
    let letters = (0..len)
        .map(|_| {
            let (i, j) = random_pair(rng, n);
            ExtLetter::new(i, j, random_elem(rng, ring))
        })
        .collect();
    ElemWord::new(n, letters)
}

/// `x = t₁⋯t_len`, a product of random elementary transvections of `E_n`,
/// with its inverse.
pub fn random_transvection_product(
    rng: &mut impl Rng,
    n: usize,
    len: usize,
    ring: &RingDescriptor,
) -> (SquareMatrix, SquareMatrix) {
    let mut x = SquareMatrix::identity(n, ring);
    let mut x_inv = SquareMatrix::identity(n, ring);
    for _ in 0..len {
        let (i, j) = random_pair(rng, n);
        let xi = random_elem(rng, ring);
        x.right_transvection(i - 1, j - 1, &xi);
        x_inv.left_transvection(i - 1, j - 1, &-&xi);
    }
    (x, x_inv)
}

/// `(∧²x, ∧²x⁻¹)` for a random product `x` of `len` transvections.
pub fn random_wedge_pair(rng: &mut impl Rng, n: usize, len: usize, ring: &RingDescriptor) -> Result<InvPair> {
    let (x, x_inv) = random_transvection_product(rng, n, len, ring);
    InvPair::new(cauchy_binet(&x)?, cauchy_binet(&x_inv)?)
}
