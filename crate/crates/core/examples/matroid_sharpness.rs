//! Matroid complexes, where reg(I^(n)) = d(I)(n-1) + dim(R/I) + 1 holds with equality.

use symreg::cohomology::reg_symbolic;
use symreg::exactalg::FieldSpec;
use symreg::ideals::stanley_reisner;
use symreg::verify::{matroid_complexes, partition_matroid, uniform_matroid};

fn main() -> symreg::Result<()> {
    let field = FieldSpec::rationals();
    let examples = [uniform_matroid(2, 4), uniform_matroid(3, 5), partition_matroid(&[3, 2], &[2, 1])?];
    println!("{} uniform and partition matroids on [5]", matroid_complexes(5).len());

    for c in &examples {
        let d = stanley_reisner(c)?.max_gen_degree()? as i64;
        let s = c.dim().unwrap() + 1;
        println!("{:?}: matroid = {}, cone = {}, d = {d}, dim R/I = {s}", c.facet_lists(), c.is_matroid(), c.is_cone());
        for n in 1..=3u32 {
            let reg = reg_symbolic(c, n, field)?;
            println!("  n = {n}: reg = {reg}, formula = {}", d * (n as i64 - 1) + s + 1);
        }
    }
    Ok(())
}
