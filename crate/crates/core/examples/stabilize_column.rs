//! Words of exterior transvections that fix a column: `T_{*,j}` fixes any
//! vector, while the three-letter `T_1` needs the Plücker relations.

use exterior_rdu::exterior::cauchy_binet;
use exterior_rdu::indexing::{all_pairs, pair_count};
use exterior_rdu::linalg::SquareMatrix;
use exterior_rdu::pluecker::{column_satisfies, ColumnVector};
use exterior_rdu::ring::RingDescriptor;
use exterior_rdu::stabilizer::{t_one, t_one_residual, t_one_word, t_star_col};

fn main() -> exterior_rdu::Result<()> {
    let n = 5;
    let names: Vec<String> = all_pairs(n).iter().map(|p| format!("w{}{}", p.first(), p.second())).collect();
    let r = RingDescriptor::poly_int(names)?;
    let w = ColumnVector::new(n, (0..pair_count(n)).map(|k| r.var(k)).collect::<Result<_, _>>()?)?;

    let t = t_star_col(5, &w)?;
    println!("T_{{*,5}}: {} exterior letters, expanded:", t.len());
    for letter in t.expand()? {
        println!("  {letter}");
    }
    let fixed = t.eval(&r)?.fwd().mul_vec(w.entries())? == w.entries();
    println!("fixes the generic column: {fixed}");

    println!("\nT_1 on a generic column leaves the residual");
    for (p, f) in all_pairs(n).iter().zip(t_one_residual(&w)?) {
        if !f.is_zero() {
            println!("  at {p}: {f}");
        }
    }

    let z = RingDescriptor::zmod(97)?;
    let x = SquareMatrix::from_fn(n, &z, |a, b| z.from_i64((7 * a + 3 * b * b + 1) as i64));
    let g = cauchy_binet(&x)?;
    let col = ColumnVector::from_column(&g, &all_pairs(n)[4])?;
    println!("\ncolumn 23 of a minor matrix satisfies the relations: {}", column_satisfies(&col));
    let word = t_one(&col)?;
    println!("T_1 = {word}");
    println!("fixes it: {}", word.eval(&z)?.fwd().mul_vec(col.entries())? == col.entries());
    let moved = t_one_word(&ColumnVector::new(n, (1..=10).map(|v| z.from_i64(v)).collect())?)?;
    println!("the same recipe on 1..10 gives {moved}");
    Ok(())
}
