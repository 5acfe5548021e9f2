//! Expands exterior transvections into elementary transvections of the big
//! group and checks each against the matrix of 2×2 minors.

use exterior_rdu::exterior::{cauchy_binet, elementary, ext_transvection};
use exterior_rdu::ring::RingDescriptor;
use exterior_rdu::words::ElemWord;

fn main() -> exterior_rdu::Result<()> {
    let r = RingDescriptor::poly_int(["xi"])?;
    let xi = r.var(0)?;

    for (i, j) in [(1, 3), (3, 1), (2, 5)] {
        let letters: Vec<String> = ext_transvection(i, j, &xi, 5)?.iter().map(|t| t.to_string()).collect();
        println!("∧²t_{{{i},{j}}}(xi) = {}", letters.join(" "));
    }

    let mut checked = 0;
    for n in 3..=6 {
        for i in 1..=n {
            for j in (1..=n).filter(|&j| j != i) {
                let word = ElemWord::letter(n, i, j, xi.clone())?.eval(&r)?;
                assert_eq!(word.fwd(), &cauchy_binet(&elementary(n, i, j, &xi)?)?);
                checked += 1;
            }
        }
    }
    println!("{checked} expansions agree with their minor matrices for n = 3..6");
    Ok(())
}
