//! Signed permutation words `P_{ij}` move an exterior transvection from one
//! index pair to another by conjugation.

use exterior_rdu::exterior::{monomial_route_target, p_element};
use exterior_rdu::linalg::{InvPair, Side};
use exterior_rdu::ring::RingDescriptor;
use exterior_rdu::words::ElemWord;

fn main() -> exterior_rdu::Result<()> {
    let n = 5;
    let r = RingDescriptor::poly_int(["xi"])?;
    let xi = r.var(0)?;
    let t = |i, j| ElemWord::letter(n, i, j, xi.clone())?.eval(&r);

    let p41 = p_element(4, 1, n, &r)?;
    println!("P_41 = {p41}");
    let moved = InvPair::conjugate(&t(1, 2)?, &p41.eval(&r)?, Side::Left)?;
    println!("P_41 · ∧²t_{{1,2}}(xi) · P_41⁻¹ = ∧²t_{{4,2}}(xi): {}", moved == t(4, 2)?);

    for (k, l) in [(2, 3), (5, 3), (2, 4), (3, 2), (4, 1)] {
        let route = monomial_route_target(k, l, n, &r)?;
        let moved = InvPair::conjugate(&t(2, 3)?, &route.eval(&r)?, Side::Left)?;
        println!("route to ({k},{l}): {:>2} letters, lands correctly: {}", route.len(), moved == t(k, l)?);
    }
    Ok(())
}
