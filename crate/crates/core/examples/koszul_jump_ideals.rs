//! Jump ideals of the Koszul family over ℚ[x1..xg], their zero sets and the
//! minors-of-blockdiag variant.

use jumploci::freecomplex::koszul_family;
use jumploci::{Field, Rational};

fn main() -> jumploci::Result<()> {
    for g in 1..=3 {
        let k = koszul_family::<Rational>(g)?;
        println!("g = {g}, ranks {:?}", k.ranks());
        for i in 0..=g as i64 {
            for kk in 1..=k.rank(i) as i64 {
                let j = k.jump_ideal(i, kk)?;
                let alt = k.jump_ideal_alt(i, kk)?;
                println!(
                    "  J^{i}_{kk} = {j}   (blockdiag variant {alt}, linear: {})",
                    j.is_linear()
                );
            }
        }
        let origin = vec![Rational::from_i64(0); g];
        let dims: Vec<usize> = (0..=g as i64)
            .map(|i| k.fiber_cohomology_dim(&origin, i))
            .collect::<Result<_, _>>()?;
        println!("  fiber cohomology at the origin: {dims:?}");
    }
    Ok(())
}
