//! Images of matrices over an Artinian ring whose top minors vanish while a
//! smaller minor is a unit.

use jumploci::artinian::verify_lemma_image;
use jumploci::random::lemma_image_case;
use jumploci::Rational;

fn main() -> jumploci::Result<()> {
    for n in 0..5 {
        let c = lemma_image_case::<Rational>(42, n);
        let v = verify_lemma_image(&c.algebra, &c.sigma, c.c)?;
        println!(
            "case {n}: dim A = {}, c = {}, hypotheses {}, image (free, rank) = {:?}",
            c.algebra.dim(),
            c.c,
            v.precondition_holds(),
            v.image
        );
    }
    Ok(())
}
