//! The bilinear membership test separates matrices of 2×2 minors from
//! nearby matrices that are not.

use exterior_rdu::exterior::cauchy_binet;
use exterior_rdu::linalg::SquareMatrix;
use exterior_rdu::pluecker::is_member;
use exterior_rdu::ring::RingDescriptor;
use exterior_rdu::sample::{random_elem, seeded};

fn main() -> exterior_rdu::Result<()> {
    let z = RingDescriptor::zmod(97)?;
    let mut rng = seeded(2024);
    for n in 4..=6 {
        let x = SquareMatrix::from_fn(n, &z, |_, _| random_elem(&mut rng, &z));
        let g = cauchy_binet(&x)?;
        let bumped = g.with_entry(0, 1, g.get(0, 1) + &z.one())?;
        println!("n = {n}: minors pass {}, one entry bumped passes {}", is_member(&g)?, is_member(&bumped)?);
    }

    let names: Vec<String> = (1..=4).flat_map(|a| (1..=4).map(move |b| format!("x{a}{b}"))).collect();
    let p = RingDescriptor::poly_int(names)?;
    let generic = SquareMatrix::from_fn(4, &p, |a, b| p.var(a * 4 + b).expect("16 variables"));
    println!("generic 4×4 source, 16 indeterminates: {}", is_member(&cauchy_binet(&generic)?)?);
    Ok(())
}
