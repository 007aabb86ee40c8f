use crate::artinian::{module_cohomology, MapSpec};
use crate::error::Result;
use crate::field::Field;
use crate::linalg::{Matrix, Quotient, Subspace};

use super::{derivative_space, AlgebraModel};

/// Outcome of the freeness / annihilator comparison for the family `E_A`
/// induced by a map `Spec A → 𝔸^g` centred at a point `p` of the cone.
#[derive(Clone, Debug)]
pub struct PropMainVerdict<F> {
    pub i: i64,
    /// `k = dim H^i` of the fiber at `p`.
    pub k: usize,
    /// Length of the algebra.
    pub l: usize,
    pub sides: PropMainSides<F>,
}

#[derive(Clone, Debug)]
pub struct PropMainSides<F> {
    /// `H^i(E_A)` is free of rank `k`.
    pub side_i: bool,
    /// `D(E_A)` annihilates `H^{i−1}` and `H^i` of the fiber.
    pub side_ii: bool,
    pub cohomology_dim: usize,
    pub min_generators: usize,
    pub derivative: Subspace<F>,
    pub annihilator: Subspace<F>,
    /// `dim H^i(E_A) = (l+1)k`.
    pub shadow_dim: bool,
    /// `H^i(E_A) → H^i(E)` is onto.
    pub shadow_surjective: bool,
    /// At the origin only: every `ξα_μ` and `ζα_μ` is closed, the former form
    /// a basis of `H^i(E_A)` and the latter span `H^{i−1}(E_A)`.
    pub exact_iii: Option<bool>,
}

impl<F> PropMainVerdict<F> {
    pub fn equivalent(&self) -> bool {
        self.sides.side_i == self.sides.side_ii
    }
}

/// Compares freeness of `H^i(E_A)` with the annihilator condition on the
/// derivative space, and checks the dimension shadow of the explicit basis
/// description (exactly, at the origin).
pub fn verify_prop_main<F: Field>(
    model: &AlgebraModel<F>,
    map: &MapSpec<F>,
    i: i64,
) -> Result<PropMainVerdict<F>> {
    let point = map.point().to_vec();
    let family = model.family_over(&point, map)?;
    let alg = family.algebra().clone();
    let l = alg.length();
    let fiber = model.fiber_cohomology(&point, i)?;
    let k = fiber.dim();

    let h = module_cohomology(&family, i);
    let (free, min_generators) = h.is_free();
    let side_i = free && min_generators == k;

    let derivative = derivative_space(map);
    let annihilator = model.fiber_cup_data(&point, i)?.annihilator(i)?.subspace;
    let side_ii = annihilator.contains_subspace(&derivative);

    let space = family.cohomology_space(i);
    let shadow_dim = space.dim() == (l + 1) * k;
    let rank_i = model.rank(i);
    let residues: Vec<Vec<F>> = space
        .representatives()
        .iter()
        .map(|z| {
            fiber.coords(
                &(0..rank_i)
                    .map(|r| z[r * alg.dim()].clone())
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let shadow_surjective = Matrix::from_rows_with_cols(residues, k).rank() == k;

    let exact_iii = if point.iter().all(|x| x.is_zero()) {
        let closed_basis = |deg: i64, space: &Quotient<F>, want_basis: bool| -> bool {
            let d = family.diff(deg).expand(&alg);
            let n = model.rank(deg);
            let mut coords = Vec::new();
            for r in 0..n {
                for mu in 0..=l {
                    let alpha = alg.series().alpha(mu);
                    let mut v = vec![F::zero(); n * alg.dim()];
                    v[r * alg.dim()..(r + 1) * alg.dim()].clone_from_slice(&alpha);
                    if !d.mul_vec(&v).iter().all(|x| x.is_zero()) {
                        return false;
                    }
                    coords.push(space.coords(&v));
                }
            }
            let rank = Matrix::from_rows_with_cols(coords.clone(), space.dim()).rank();
            rank == space.dim() && (!want_basis || coords.len() == rank)
        };
        Some(
            closed_basis(i, &space, true)
                && closed_basis(i - 1, &family.cohomology_space(i - 1), false),
        )
    } else {
        None
    };

    Ok(PropMainVerdict {
        i,
        k,
        l,
        sides: PropMainSides {
            side_i,
            side_ii,
            cohomology_dim: h.dim(),
            min_generators,
            derivative,
            annihilator,
            shadow_dim,
            shadow_surjective,
            exact_iii,
        },
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::artinian::{verify_prop21, ArtinianAlgebra};
    use crate::field::Rational;
    use crate::poly::Ring;

    type Q = Rational;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    #[test]
    fn exterior_one_first_order() {
        let m = AlgebraModel::<Q>::exterior(1);
        let r = Ring::numbered("x", 1);
        let a = Arc::new(ArtinianAlgebra::<Q>::truncated(2));
        let s = MapSpec::new(&r, &a, vec![q(0)], vec![vec![q(0), q(1)]]).unwrap();
        let v = verify_prop_main(&m, &s, 0).unwrap();
        assert!(!v.sides.side_i && !v.sides.side_ii && v.equivalent());
        assert_eq!(v.sides.cohomology_dim, 1);
        assert_eq!(v.sides.exact_iii, Some(false));

        let s = MapSpec::constant(&r, &a, vec![q(0)]).unwrap();
        let v = verify_prop_main(&m, &s, 0).unwrap();
        assert!(v.sides.side_i && v.sides.side_ii);
        assert!(v.sides.shadow_dim && v.sides.shadow_surjective);
        assert_eq!(v.sides.exact_iii, Some(true));
    }

    #[test]
    fn exterior_two_first_order() {
        let m = AlgebraModel::<Q>::exterior(2);
        let r = Ring::numbered("x", 2);
        let a = Arc::new(ArtinianAlgebra::<Q>::truncated(2));
        let s = MapSpec::new(&r, &a, vec![q(0), q(0)], vec![vec![q(0), q(1)], a.zero()]).unwrap();
        let v = verify_prop_main(&m, &s, 1).unwrap();
        assert_eq!(v.k, 2);
        assert!(!v.sides.side_i && !v.sides.side_ii);
        assert_eq!(v.sides.cohomology_dim, 2);
        let p21 = verify_prop21(&m.family().unwrap(), &s, 1, 2).unwrap();
        assert_eq!(p21.sides.unwrap().side_ii, v.sides.side_i);
    }

    #[test]
    fn away_from_the_origin() {
        let m = AlgebraModel::<Q>::exterior(2);
        let r = Ring::numbered("x", 2);
        let a = Arc::new(ArtinianAlgebra::<Q>::truncated(3));
        let s = MapSpec::new(
            &r,
            &a,
            vec![q(1), q(0)],
            vec![vec![q(1), q(1), q(0)], vec![q(0), q(0), q(1)]],
        )
        .unwrap();
        let v = verify_prop_main(&m, &s, 1).unwrap();
        assert_eq!(v.k, 0);
        assert!(v.sides.side_i && v.sides.side_ii);
        assert_eq!(v.sides.exact_iii, None);
    }
}
