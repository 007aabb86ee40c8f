use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::poly::{Polynomial, Ring};

use super::{ArtinianAlgebra, Element};

/// A morphism `Spec A → 𝔸^q` given by the images `s*(x_ν) ∈ A`, whose
/// set-theoretic image is the point `P`.
#[derive(Clone, Debug)]
pub struct MapSpec<F> {
    source: Arc<Ring>,
    algebra: Arc<ArtinianAlgebra<F>>,
    point: Vec<F>,
    images: Vec<Element<F>>,
}

impl<F: Field> MapSpec<F> {
    /// The unit coordinate of every image must equal the matching coordinate
    /// of `point`, so that `s*(x_ν) − P_ν` lies in the maximal ideal.
    pub fn new(
        source: &Arc<Ring>,
        algebra: &Arc<ArtinianAlgebra<F>>,
        point: Vec<F>,
        images: Vec<Element<F>>,
    ) -> Result<Self> {
        let q = source.nvars();
        if point.len() != q || images.len() != q {
            return Err(Error::InvalidMap(format!(
                "{q} source variables but {} point coordinates and {} images",
                point.len(),
                images.len()
            )));
        }
        for (nu, (img, p)) in images.iter().zip(&point).enumerate() {
            if img.len() != algebra.dim() {
                return Err(Error::InvalidMap(format!(
                    "image {nu} has {} coordinates, the algebra has dimension {}",
                    img.len(),
                    algebra.dim()
                )));
            }
            if img[0] != *p {
                return Err(Error::InvalidMap(format!(
                    "image of {} has residue {} but the point coordinate is {p}",
                    source.vars()[nu],
                    img[0]
                )));
            }
        }
        Ok(MapSpec {
            source: source.clone(),
            algebra: algebra.clone(),
            point,
            images,
        })
    }

    /// `s*(x_ν) = P_ν + Σ_μ a^μ_ν α_μ` from coefficients `a[ν][μ−1]` in the
    /// composition-series basis.
    pub fn from_alpha_coefficients(
        source: &Arc<Ring>,
        algebra: &Arc<ArtinianAlgebra<F>>,
        point: Vec<F>,
        coefficients: &[Vec<F>],
    ) -> Result<Self> {
        let images = coefficients
            .iter()
            .zip(&point)
            .map(|(a, p)| {
                let mut c = vec![p.clone()];
                c.extend(a.iter().cloned());
                if c.len() != algebra.dim() {
                    return Err(Error::InvalidMap(
                        "coefficient count must equal the length of m".into(),
                    ));
                }
                Ok(algebra.series().from_alpha(&c))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, algebra, point, images)
    }

    /// The constant map to `point`.
    pub fn constant(
        source: &Arc<Ring>,
        algebra: &Arc<ArtinianAlgebra<F>>,
        point: Vec<F>,
    ) -> Result<Self> {
        let images = point.iter().map(|p| algebra.scalar(p.clone())).collect();
        Self::new(source, algebra, point, images)
    }

    pub fn source(&self) -> &Arc<Ring> {
        &self.source
    }

    pub fn algebra(&self) -> &Arc<ArtinianAlgebra<F>> {
        &self.algebra
    }

    pub fn point(&self) -> &[F] {
        &self.point
    }

    pub fn images(&self) -> &[Element<F>] {
        &self.images
    }

    /// `s*(f)`.
    pub fn pull_back(&self, f: &Polynomial<F>) -> Element<F> {
        self.algebra.eval_poly(f, &self.images)
    }

    /// The matrix `a^μ_ν` (rows `μ = 1..l`, columns `ν`) of the maximal-ideal
    /// parts of the images in the basis `α_1..α_l`.
    pub fn alpha_coefficients(&self) -> Vec<Vec<F>> {
        let series = self.algebra.series();
        let coords: Vec<Vec<F>> = self.images.iter().map(|a| series.to_alpha(a)).collect();
        (1..self.algebra.dim())
            .map(|mu| coords.iter().map(|c| c[mu].clone()).collect())
            .collect()
    }

    /// `J_A = ker(s*: R → A)`, by eliminating the algebra variables from
    /// `(x_ν − lift(s*(x_ν))) + J`.
    pub fn comorphism_kernel(&self) -> Result<Ideal<F>> {
        let q = self.source.nvars();
        let alg_ring = self.algebra.ring();
        let s = alg_ring.nvars();
        let mut names: Vec<String> = self.source.vars().to_vec();
        names.extend((0..s).map(|j| format!("__a{j}")));
        let joint = Ring::new(&names);
        let into_joint: Vec<usize> = (q..q + s).collect();
        let mut gens = Vec::new();
        for (nu, img) in self.images.iter().enumerate() {
            let lifted = self.algebra.lift(img).map_vars(&joint, &into_joint);
            gens.push(&Polynomial::var(&joint, nu) - &lifted);
        }
        for g in self.algebra.presentation().reduced_gb() {
            gens.push(g.map_vars(&joint, &into_joint));
        }
        let eliminated = Ideal::new(&joint, gens)?.eliminate(&into_joint)?;
        let back: Vec<usize> = (0..q + s).map(|v| if v < q { v } else { 0 }).collect();
        let kept = eliminated
            .reduced_gb()
            .iter()
            .map(|g| g.map_vars(&self.source, &back))
            .collect();
        Ideal::new(&self.source, kept)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type Q = Rational;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    #[test]
    fn kernels() {
        let a = Arc::new(ArtinianAlgebra::<Q>::truncated(2));
        let r = Ring::new(&["x"]);
        let s = MapSpec::new(&r, &a, vec![q(0)], vec![vec![q(0), q(1)]]).unwrap();
        assert_eq!(
            s.comorphism_kernel().unwrap(),
            Ideal::parse(&r, &["x^2"]).unwrap()
        );
        let s = MapSpec::constant(&r, &a, vec![q(0)]).unwrap();
        assert_eq!(
            s.comorphism_kernel().unwrap(),
            Ideal::parse(&r, &["x"]).unwrap()
        );
        let r2 = Ring::new(&["x1", "x2"]);
        let e = vec![q(0), q(1)];
        let s = MapSpec::new(&r2, &a, vec![q(0), q(0)], vec![e.clone(), e]).unwrap();
        assert_eq!(
            s.comorphism_kernel().unwrap(),
            Ideal::parse(&r2, &["x1 - x2", "x1^2"]).unwrap()
        );
    }

    #[test]
    fn kernel_at_a_shifted_point() {
        let a = Arc::new(ArtinianAlgebra::<Q>::truncated(3));
        let r = Ring::new(&["x"]);
        let s = MapSpec::new(&r, &a, vec![q(2)], vec![vec![q(2), q(1), q(0)]]).unwrap();
        assert_eq!(
            s.comorphism_kernel().unwrap(),
            Ideal::parse(&r, &["(x - 2)^3"]).unwrap()
        );
    }

    #[test]
    fn rejects_wrong_residue() {
        let a = Arc::new(ArtinianAlgebra::<Q>::truncated(2));
        let r = Ring::new(&["x"]);
        assert!(matches!(
            MapSpec::new(&r, &a, vec![q(0)], vec![vec![q(1), q(1)]]),
            Err(Error::InvalidMap(_))
        ));
    }

    #[test]
    fn alpha_coefficients_read_the_series() {
        let a = Arc::new(ArtinianAlgebra::<Q>::truncated(3));
        let r = Ring::new(&["x1", "x2"]);
        let s = MapSpec::new(
            &r,
            &a,
            vec![q(0), q(0)],
            vec![vec![q(0), q(1), q(0)], vec![q(0), q(0), q(1)]],
        )
        .unwrap();
        assert_eq!(
            s.alpha_coefficients(),
            vec![vec![q(1), q(0)], vec![q(0), q(1)]]
        );
    }
}
