//! Reduced Gröbner bases, normal forms, sums, intersections and elimination.

use jumploci::{Ideal, Polynomial, Rational, Ring};

fn main() -> jumploci::Result<()> {
    let r = Ring::new(&["x", "y"]);
    let i = Ideal::<Rational>::parse(&r, &["x^2", "x*y"])?;
    println!("I = {i}");
    let f = Polynomial::parse(&r, "x^2*y + y")?;
    println!("NF({f}) = {}", i.normal_form(&f)?);

    let meet = Ideal::<Rational>::parse(&r, &["x"])?.intersect(&Ideal::parse(&r, &["y"])?)?;
    println!("(x) ∩ (y) = {meet}");

    let rt = Ring::new(&["t", "x", "y"]);
    let curve = Ideal::<Rational>::parse(&rt, &["x - t", "y - t^2"])?.eliminate(&[0])?;
    println!("image of t ↦ (t, t²): {curve}");
    Ok(())
}
