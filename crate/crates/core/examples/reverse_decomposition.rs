//! Writes exterior transvections with parameters from the level of a random
//! `g` as products of elementary conjugates of `g`, one per case.

use exterior_rdu::indexing::Index2;
use exterior_rdu::rdu::{verify, Decomposer, GeneratorTarget};
use exterior_rdu::ring::RingDescriptor;
use exterior_rdu::sample::{random_wedge_pair, seeded};

fn main() -> exterior_rdu::Result<()> {
    let n = 5;
    let z = RingDescriptor::zmod(97)?;
    let g = random_wedge_pair(&mut seeded(42), n, 40, &z)?;
    let d = Decomposer::new(&g)?;
    let p = |a, b| Index2::new(a, b, n);

    let targets = [
        GeneratorTarget::entry(p(1, 3)?, p(1, 2)?, 2, 3),
        GeneratorTarget::entry(p(1, 2)?, p(3, 4)?, 4, 1),
        GeneratorTarget::diag(p(2, 4)?, p(4, 5)?, 1, 5),
        GeneratorTarget::diag(p(1, 2)?, p(3, 5)?, 3, 2),
    ];
    for t in &targets {
        let res = d.decompose(t)?;
        let ok = verify(&res.word, &g, t.k, t.l, &res.param)?;
        println!(
            "{:<8} ∧²t_{{{},{}}}({:>2}) from {:>2} conjugates, {} certificates, verified {ok}",
            res.case,
            t.k,
            t.l,
            res.param,
            res.word.len(),
            res.certificates.len()
        );
    }

    let res = d.decompose(&targets[0])?;
    println!("\nthe eight conjugates h⁻¹·g^ε·h of the first word:");
    for term in res.word.terms() {
        println!("  ε = {:+}, h = {}", term.eps.to_i64(), term.h);
    }
    Ok(())
}
