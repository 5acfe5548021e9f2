//! Any element of the level, not only a single generator, as one verified
//! word within the `8(N² − 1)` budget.

use exterior_rdu::indexing::pair_count;
use exterior_rdu::level::level_generators;
use exterior_rdu::rdu::{short_generators, Decomposer, GeneratorTarget};
use exterior_rdu::ring::RingDescriptor;
use exterior_rdu::sample::{random_elem, random_wedge_pair, seeded};

fn main() -> exterior_rdu::Result<()> {
    let z = RingDescriptor::zmod(97)?;
    let mut rng = seeded(7);
    for n in 4..=6 {
        let big_n = pair_count(n);
        let g = random_wedge_pair(&mut rng, n, 50, &z)?;
        let d = Decomposer::new(&g)?;
        let gens = level_generators(g.fwd())?;
        let mut one_by_one = 0;
        for gen in &gens {
            one_by_one += d.decompose(&GeneratorTarget::from_level(gen, 2, 3))?.word.len();
        }
        let combo: Vec<_> = gens.iter().map(|gen| (gen.kind, random_elem(&mut rng, &z))).collect();
        let lw = d.level_element(&combo, 2, 3)?;
        println!(
            "n = {n}: {} short generators; random level element in {} conjugates (budget {}, generator-by-generator {one_by_one})",
            short_generators(n).len(),
            lw.word.len(),
            8 * (big_n * big_n - 1)
        );
    }
    Ok(())
}
