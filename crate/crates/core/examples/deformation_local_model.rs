//! The exterior-algebra model: cup data at a point, the quadratic cone, the
//! annihilator subspace, and the comparison of the jump ideal with its linear
//! ideal modulo powers of the maximal ideal.

use jumploci::deformation::{verify_thm_linear, AlgebraModel};
use jumploci::{Field, Rational};

fn main() -> jumploci::Result<()> {
    let g = 3;
    let model = AlgebraModel::<Rational>::exterior(g);
    let origin = vec![Rational::from_i64(0); g];
    for i in 0..=g as i64 {
        let cup = model.fiber_cup_data(&origin, i)?;
        let ann = cup.annihilator(i)?;
        let k = model.fiber_cohomology(&origin, i)?.dim();
        let v = verify_thm_linear(&model, &origin, i, k, 4)?;
        println!(
            "i = {i}: k = {k}, cone {}, annihilator ideal {}, equal mod m^n for n = 1..4: {:?}",
            cup.cone_ideal(),
            ann.ideal,
            v.equal_mod
        );
    }
    Ok(())
}
