//! Level generators, the ideal they span, and congruence classes; then the
//! commutator of a full-class matrix with elementary ones lands in the
//! principal class.

use exterior_rdu::exterior::cauchy_binet;
use exterior_rdu::level::{congruence_class, level_generators, IdealSpec};
use exterior_rdu::linalg::{InvPair, SquareMatrix};
use exterior_rdu::ring::RingDescriptor;
use exterior_rdu::sample::{random_wedge_pair, seeded};

fn main() -> exterior_rdu::Result<()> {
    let d = 5u64;
    let m = RingDescriptor::zmod(d * 101)?;
    let n = 4;

    let mut x = SquareMatrix::scalar(n, &m.from_i64(2));
    let mut x_inv = SquareMatrix::scalar(n, &m.from_i64(2).zmod_inverse()?);
    for (i, j, c) in [(0, 1, 3), (2, 3, 7), (3, 0, 1), (1, 2, 4)] {
        let xi = m.from_i64(d as i64 * c);
        x = x.mul(&SquareMatrix::transvection(n, i, j, &xi)?)?;
        x_inv = SquareMatrix::transvection(n, i, j, &-&xi)?.mul(&x_inv)?;
    }
    let g = InvPair::new(cauchy_binet(&x)?, cauchy_binet(&x_inv)?)?;

    let gens = level_generators(g.fwd())?;
    let nonzero = gens.iter().filter(|l| !l.value.is_zero()).count();
    println!("{} level generators, {nonzero} nonzero", gens.len());
    println!("level ideal generated by {}", IdealSpec::level_of(g.fwd())?.principal_generator()?);
    println!("class mod {d}: {}", congruence_class(g.fwd(), d)?.as_str());

    let mut rng = seeded(1);
    for _ in 0..3 {
        let e = random_wedge_pair(&mut rng, n, 12, &m)?;
        let c = InvPair::commutator(&g, &e)?;
        println!("[g, e] mod {d}: {}", congruence_class(c.fwd(), d)?.as_str());
    }
    Ok(())
}
