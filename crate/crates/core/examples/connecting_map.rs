//! Connecting maps of the sequences 0 → m_j/m_{j+1} → A/m_{j+1} → A/m_j → 0,
//! compared with cup product against one row of derivatives and against the
//! full extension class.

use std::sync::Arc;

use jumploci::artinian::{ArtinianAlgebra, MapSpec};
use jumploci::deformation::{verify_boundary_formula, AlgebraModel};
use jumploci::linalg::Matrix;
use jumploci::{Polynomial, Rational, Ring};

fn show(m: &Matrix<Rational>) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    format!("[{}]", rows.join("; "))
}

fn main() -> jumploci::Result<()> {
    let model = AlgebraModel::<Rational>::exterior(1);
    let a = Arc::new(ArtinianAlgebra::<Rational>::truncated(3));
    let e = a.element_of(&Polynomial::parse(a.ring(), "e")?)?;
    let map = MapSpec::new(&Ring::numbered("x", 1), &a, vec![a.residue(&e)], vec![e])?;
    for j in 0..a.length() {
        let v = verify_boundary_formula(&model, &map, j, 1)?;
        println!(
            "j = {j}: connecting {}, single-row formula {} (agrees {}), extension class {} (agrees {})",
            show(&v.connecting),
            show(&v.formula),
            v.formula_holds,
            show(&v.extension),
            v.extension_holds
        );
    }
    Ok(())
}
