use std::sync::Arc;

use crate::error::Result;
use crate::field::Field;
use crate::freecomplex::FreeComplex;
use crate::ideal::Ideal;
use crate::minors::{self, Scalars};

use super::{
    image_module, module_cohomology, specialize_complex, AMatrix, ArtinianAlgebra, MapSpec,
};

/// Outcome of the schematic-image / free-cohomology comparison at a point
/// `P ∈ Σ^i_k \ Σ^i_{k+1}`.
#[derive(Clone, Debug)]
pub struct Prop21Verdict<F> {
    pub i: i64,
    pub k: usize,
    pub fiber_dim: usize,
    /// `None` when `dim H^i(F ⊗ k(P)) ≠ k`.
    pub sides: Option<Prop21Sides<F>>,
}

#[derive(Clone, Debug)]
pub struct Prop21Sides<F> {
    /// `J^i_k ⊆ ker s*`.
    pub side_i: bool,
    /// `H^i(s*F)` is free of rank `k`.
    pub side_ii: bool,
    pub jump_ideal: Ideal<F>,
    pub kernel: Ideal<F>,
    pub cohomology_dim: usize,
    pub min_generators: usize,
}

impl<F> Prop21Verdict<F> {
    pub fn precondition_holds(&self) -> bool {
        self.sides.is_some()
    }

    /// `None` when the precondition fails.
    pub fn equivalent(&self) -> Option<bool> {
        self.sides.as_ref().map(|s| s.side_i == s.side_ii)
    }
}

/// Compares "the schematic image of `s` lies in `V(J^i_k)`" with "`H^i(s*F)`
/// is free of rank `k`".
pub fn verify_prop21<F: Field>(
    complex: &FreeComplex<F>,
    map: &MapSpec<F>,
    i: i64,
    k: usize,
) -> Result<Prop21Verdict<F>> {
    let fiber_dim = complex.fiber_cohomology_dim(map.point(), i)?;
    if fiber_dim != k {
        return Ok(Prop21Verdict {
            i,
            k,
            fiber_dim,
            sides: None,
        });
    }
    let jump_ideal = complex.jump_ideal(i, k as i64)?;
    let kernel = map.comorphism_kernel()?;
    let side_i = kernel.contains(&jump_ideal)?;
    let h = module_cohomology(&specialize_complex(complex, map)?, i);
    let (free, min_generators) = h.is_free();
    Ok(Prop21Verdict {
        i,
        k,
        fiber_dim,
        sides: Some(Prop21Sides {
            side_i,
            side_ii: free && min_generators == k,
            jump_ideal,
            kernel,
            cohomology_dim: h.dim(),
            min_generators,
        }),
    })
}

/// Outcome of the image-freeness check for `σ` with `I_c(σ) = 0` and
/// `I_{c−1}(σ ⊗ k) = k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaImageVerdict {
    pub c: i64,
    pub top_minors_vanish: bool,
    pub residue_minors_unit: bool,
    /// `(free?, k₀)` of the image, when both hypotheses hold.
    pub image: Option<(bool, usize)>,
    pub image_dim: Option<usize>,
}

impl LemmaImageVerdict {
    pub fn precondition_holds(&self) -> bool {
        self.image.is_some()
    }

    /// `None` when a hypothesis fails.
    pub fn holds(&self) -> Option<bool> {
        let expected = (self.c - 1).max(0) as usize;
        self.image.map(|(free, k0)| free && k0 == expected)
    }
}

/// Checks that the image of `σ` is free of rank `c − 1` whenever the
/// hypotheses on its minors hold.
pub fn verify_lemma_image<F: Field>(
    algebra: &Arc<ArtinianAlgebra<F>>,
    sigma: &AMatrix<F>,
    c: i64,
) -> Result<LemmaImageVerdict> {
    let small = sigma.nrows().min(sigma.ncols()) as i64;
    let top_minors_vanish = if c <= 0 {
        false
    } else if c > small {
        true
    } else {
        minors::minors(algebra.as_ref(), sigma.rows(), c as usize)?.is_empty()
    };
    let residue = sigma.residue(algebra);
    let residue_minors_unit = if c - 1 <= 0 {
        true
    } else if c - 1 > small {
        false
    } else {
        !minors::minors(
            &Scalars::<F>::default(),
            &residue.to_rows(),
            (c - 1) as usize,
        )?
        .is_empty()
    };
    let (image, image_dim) = if top_minors_vanish && residue_minors_unit {
        let m = image_module(algebra, sigma);
        (Some(m.is_free()), Some(m.dim()))
    } else {
        (None, None)
    };
    Ok(LemmaImageVerdict {
        c,
        top_minors_vanish,
        residue_minors_unit,
        image,
        image_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::freecomplex::koszul_family;

    type Q = Rational;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    #[test]
    fn koszul_one_over_dual_numbers() {
        let a = Arc::new(ArtinianAlgebra::<Q>::truncated(2));
        let k1 = koszul_family::<Q>(1).unwrap();
        let s = MapSpec::new(k1.ring(), &a, vec![q(0)], vec![vec![q(0), q(1)]]).unwrap();
        let v = verify_prop21(&k1, &s, 0, 1).unwrap();
        let sides = v.sides.as_ref().unwrap();
        assert!(!sides.side_i && !sides.side_ii);
        assert_eq!(v.equivalent(), Some(true));

        let s = MapSpec::constant(k1.ring(), &a, vec![q(0)]).unwrap();
        let v = verify_prop21(&k1, &s, 0, 1).unwrap();
        let sides = v.sides.as_ref().unwrap();
        assert!(sides.side_i && sides.side_ii);
    }

    #[test]
    fn koszul_two_first_order() {
        let a = Arc::new(ArtinianAlgebra::<Q>::truncated(2));
        let k2 = koszul_family::<Q>(2).unwrap();
        let s = MapSpec::new(
            k2.ring(),
            &a,
            vec![q(0), q(0)],
            vec![vec![q(0), q(1)], a.zero()],
        )
        .unwrap();
        let v = verify_prop21(&k2, &s, 1, 2).unwrap();
        let sides = v.sides.as_ref().unwrap();
        assert!(!sides.side_i && !sides.side_ii);
        assert_eq!(sides.cohomology_dim, 2);
    }

    #[test]
    fn off_stratum_is_a_precondition_failure() {
        let a = Arc::new(ArtinianAlgebra::<Q>::truncated(2));
        let k1 = koszul_family::<Q>(1).unwrap();
        let s = MapSpec::constant(k1.ring(), &a, vec![q(1)]).unwrap();
        let v = verify_prop21(&k1, &s, 0, 1).unwrap();
        assert!(!v.precondition_holds());
        assert_eq!(v.fiber_dim, 0);
    }

    #[test]
    fn lemma_image_examples() {
        let a = Arc::new(ArtinianAlgebra::<Q>::truncated(2));
        let e = a.basis_element(1);
        let sigma = AMatrix::new(vec![vec![e.clone()]], 1);
        assert!(!verify_lemma_image(&a, &sigma, 1)
            .unwrap()
            .precondition_holds());
        let id = AMatrix::new(vec![vec![a.one()]], 1);
        let v = verify_lemma_image(&a, &id, 2).unwrap();
        assert_eq!(v.holds(), Some(true));
        assert_eq!(v.image, Some((true, 1)));
        let diag = AMatrix::new(vec![vec![a.one(), a.zero()], vec![a.zero(), e]], 2);
        let v2 = verify_lemma_image(&a, &diag, 2).unwrap();
        assert!(!v2.top_minors_vanish);
        let v3 = verify_lemma_image(&a, &diag, 3).unwrap();
        assert!(v3.top_minors_vanish && !v3.residue_minors_unit);
    }
}
