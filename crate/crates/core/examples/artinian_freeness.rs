//! Specializing a family of complexes along a map Spec A → M and comparing
//! freeness of the cohomology over A with containment of the jump ideal in
//! the kernel of the comorphism.

use std::sync::Arc;

use jumploci::artinian::{verify_prop21, ArtinianAlgebra, MapSpec};
use jumploci::freecomplex::koszul_family;
use jumploci::{Polynomial, Rational};

fn main() -> jumploci::Result<()> {
    let a = Arc::new(ArtinianAlgebra::<Rational>::truncated(2));
    let k2 = koszul_family::<Rational>(2)?;
    let e = a.element_of(&Polynomial::parse(a.ring(), "e")?)?;
    for images in [vec![e.clone(), a.zero()], vec![a.zero(), a.zero()]] {
        let point = images.iter().map(|x| a.residue(x)).collect();
        let map = MapSpec::new(k2.ring(), &a, point, images)?;
        let v = verify_prop21(&k2, &map, 1, 2)?;
        let s = v.sides.expect("the origin lies on the stratum");
        println!(
            "kernel {}: jump ideal inside kernel {}, H^1 free of rank 2 {} (dim {})",
            s.kernel, s.side_i, s.side_ii, s.cohomology_dim
        );
    }
    Ok(())
}
