use std::sync::Arc;

use crate::artinian::{AComplex, AMatrix, ArtinianAlgebra, MapSpec};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::freecomplex::{exterior_basis, wedge_matrix, FreeComplex, PolyMatrix};
use crate::linalg::{cohomology, Matrix, Quotient, Subspace};
use crate::poly::{Polynomial, Ring};

use super::CupData;

/// A graded module `M^0..M^n` with degree-one operators `b_ν : M^i → M^{i+1}`
/// such that `(Σ x_ν b_ν)² = 0` identically, i.e. `b_ν b_μ + b_μ b_ν = 0`.
///
/// `μ₂` on `H¹(End E) = ℚ^g` is the wedge product into `Λ²ℚ^g`.
#[derive(Clone, Debug)]
pub struct AlgebraModel<F> {
    ranks: Vec<usize>,
    /// `ops[ν][i] = b_ν : M^i → M^{i+1}`
    ops: Vec<Vec<Matrix<F>>>,
}

impl<F: Field> AlgebraModel<F> {
    pub fn new(ranks: Vec<usize>, ops: Vec<Vec<Matrix<F>>>) -> Result<Self> {
        let n = ranks.len();
        for (nu, b) in ops.iter().enumerate() {
            if b.len() + 1 != n.max(1) {
                return Err(Error::InvalidModel(format!(
                    "b_{} needs {} components",
                    nu + 1,
                    n.saturating_sub(1)
                )));
            }
            for (i, m) in b.iter().enumerate() {
                if m.nrows() != ranks[i + 1] || m.ncols() != ranks[i] {
                    return Err(Error::InvalidModel(format!(
                        "b_{} has the wrong shape in degree {i}",
                        nu + 1
                    )));
                }
            }
        }
        for nu in 0..ops.len() {
            for mu in nu..ops.len() {
                for i in 1..ops[nu].len() {
                    let mut s = ops[nu][i].mul(&ops[mu][i - 1]);
                    let t = ops[mu][i].mul(&ops[nu][i - 1]);
                    for r in 0..s.nrows() {
                        for c in 0..s.ncols() {
                            s[(r, c)] += &t[(r, c)];
                        }
                    }
                    if !s.is_zero() {
                        return Err(Error::InvalidModel(format!(
                            "b_{} b_{} + b_{} b_{} is nonzero in degree {}",
                            nu + 1,
                            mu + 1,
                            mu + 1,
                            nu + 1,
                            i - 1
                        )));
                    }
                }
            }
        }
        Ok(AlgebraModel { ranks, ops })
    }

    /// The exterior algebra `Λ^• ℚ^g` acting on itself by left wedge.
    pub fn exterior(g: usize) -> Self {
        let ranks = (0..=g).map(|i| exterior_basis(g, i).len()).collect();
        let ops = (0..g)
            .map(|nu| (0..g).map(|i| wedge_matrix(g, i, nu)).collect())
            .collect();
        AlgebraModel { ranks, ops }
    }

    /// Number of operators, the dimension `q` of the tangent space.
    pub fn g(&self) -> usize {
        self.ops.len()
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, i: i64) -> usize {
        if i < 0 || i as usize >= self.ranks.len() {
            0
        } else {
            self.ranks[i as usize]
        }
    }

    /// `b_ν` in degree `i`, zero outside the range.
    pub fn op(&self, nu: usize, i: i64) -> Matrix<F> {
        if i >= 0 && (i as usize) + 1 < self.ranks.len() {
            self.ops[nu][i as usize].clone()
        } else {
            Matrix::zeros(self.rank(i + 1), self.rank(i))
        }
    }

    /// `Σ p_ν b_ν` in degree `i`.
    pub fn differential_at(&self, point: &[F], i: i64) -> Matrix<F> {
        let mut d = Matrix::zeros(self.rank(i + 1), self.rank(i));
        for (nu, p) in point.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let b = self.op(nu, i);
            for r in 0..d.nrows() {
                for c in 0..d.ncols() {
                    let x = b[(r, c)].clone() * p;
                    d[(r, c)] += &x;
                }
            }
        }
        d
    }

    /// The family `Σ x_ν b_ν` over `ℚ[x1..xg]`.
    pub fn family(&self) -> Result<FreeComplex<F>> {
        let ring = Ring::numbered("x", self.g());
        let diffs = (0..self.ranks.len().saturating_sub(1))
            .map(|i| {
                let rows = (0..self.ranks[i + 1])
                    .map(|r| {
                        (0..self.ranks[i])
                            .map(|c| {
                                let mut p = Polynomial::zero(&ring);
                                for nu in 0..self.g() {
                                    let b = &self.ops[nu][i][(r, c)];
                                    if !b.is_zero() {
                                        p = p.add_scaled(&Polynomial::var(&ring, nu), b);
                                    }
                                }
                                p
                            })
                            .collect()
                    })
                    .collect();
                PolyMatrix::new(&ring, rows, self.ranks[i])
            })
            .collect::<Result<Vec<_>>>()?;
        FreeComplex::new(&ring, 0, self.ranks.clone(), diffs)
    }

    fn check_point(&self, point: &[F]) -> Result<()> {
        if point.len() != self.g() {
            return Err(Error::Structural(format!(
                "point has {} coordinates, the model has {} operators",
                point.len(),
                self.g()
            )));
        }
        for i in 0..self.ranks.len().saturating_sub(2) as i64 {
            let d2 = self
                .differential_at(point, i + 1)
                .mul(&self.differential_at(point, i));
            if !d2.is_zero() {
                return Err(Error::OffCone(format_point(point)));
            }
        }
        Ok(())
    }

    /// `H^i` of the fiber complex at `point`, with fixed echelon representatives.
    pub fn fiber_cohomology(&self, point: &[F], i: i64) -> Result<Quotient<F>> {
        self.check_point(point)?;
        Ok(cohomology(
            self.rank(i),
            Some(&self.differential_at(point, i - 1)),
            Some(&self.differential_at(point, i)),
        ))
    }

    /// Cup data of the fiber at `point` around degree `i`: the operators `b_ν`
    /// descend to maps `H^j → H^{j+1}` of the fiber cohomology.
    pub fn fiber_cup_data(&self, point: &[F], i: i64) -> Result<CupData<F>> {
        let h_prev = self.fiber_cohomology(point, i - 1)?;
        let h_i = self.fiber_cohomology(point, i)?;
        let h_next = self.fiber_cohomology(point, i + 1)?;
        let g = self.g();
        let induced = |src: &Quotient<F>, dst: &Quotient<F>, deg: i64| -> Vec<Vec<Vec<F>>> {
            (0..g)
                .map(|nu| {
                    let b = self.op(nu, deg);
                    src.representatives()
                        .iter()
                        .map(|z| dst.coords(&b.mul_vec(z)))
                        .collect()
                })
                .collect()
        };
        let pairs = exterior_basis(g, 2);
        let mu2 = (0..g)
            .map(|a| {
                (0..g)
                    .map(|b| {
                        pairs
                            .iter()
                            .map(
                                |pq| match (a.cmp(&b), pq[0] == a.min(b) && pq[1] == a.max(b)) {
                                    (std::cmp::Ordering::Less, true) => F::one(),
                                    (std::cmp::Ordering::Greater, true) => -F::one(),
                                    _ => F::zero(),
                                },
                            )
                            .collect()
                    })
                    .collect()
            })
            .collect();
        CupData::new(
            Some(i),
            g,
            h_prev.dim(),
            h_i.dim(),
            h_next.dim(),
            pairs.len(),
            mu2,
            induced(&h_prev, &h_i, i - 1),
            induced(&h_i, &h_next, i),
        )
    }

    /// The complex `M ⊗ A` with differential `Σ_ν s*(x_ν) b_ν`.
    pub fn family_over(&self, point: &[F], map: &MapSpec<F>) -> Result<AComplex<F>> {
        self.check_point(point)?;
        if map.point() != point {
            return Err(Error::InvalidMap(format!(
                "the map is centred at {} but the model point is {}",
                format_point(map.point()),
                format_point(point)
            )));
        }
        if map.source().nvars() != self.g() {
            return Err(Error::InvalidMap(format!(
                "the map has {} coordinates, the model has {} operators",
                map.source().nvars(),
                self.g()
            )));
        }
        let alg = map.algebra();
        let diffs = (0..self.ranks.len().saturating_sub(1))
            .map(|i| {
                let rows = (0..self.ranks[i + 1])
                    .map(|r| {
                        (0..self.ranks[i])
                            .map(|c| {
                                let mut e = alg.zero();
                                for (nu, img) in map.images().iter().enumerate() {
                                    let b = &self.ops[nu][i][(r, c)];
                                    if !b.is_zero() {
                                        for (x, y) in e.iter_mut().zip(img) {
                                            *x += &(y.clone() * b);
                                        }
                                    }
                                }
                                e
                            })
                            .collect()
                    })
                    .collect();
                AMatrix::new(rows, self.ranks[i])
            })
            .collect();
        AComplex::new(alg, 0, self.ranks.clone(), diffs)
    }
}

/// `D(E_A)`: the span of the rows `(a^μ_ν)_ν`, `μ = 1..l`.
pub fn derivative_space<F: Field>(map: &MapSpec<F>) -> Subspace<F> {
    Subspace::spanned_by(map.source().nvars(), &map.alpha_coefficients())
}

/// `D(E_A)` computed against an arbitrary basis `β_1..β_l` of the maximal
/// ideal, given in standard coordinates.
pub fn derivative_space_in_basis<F: Field>(
    map: &MapSpec<F>,
    m_basis: &[Vec<F>],
) -> Result<Subspace<F>> {
    let alg = map.algebra();
    let mut cols = vec![alg.one()];
    cols.extend(m_basis.iter().cloned());
    let change = Matrix::from_columns(alg.dim(), &cols);
    let inv = crate::artinian::invert(&change)
        .ok_or_else(|| Error::Precondition("the given vectors are not a basis of m".into()))?;
    let coords: Vec<Vec<F>> = map.images().iter().map(|a| inv.mul_vec(a)).collect();
    let rows: Vec<Vec<F>> = (1..alg.dim())
        .map(|mu| coords.iter().map(|c| c[mu].clone()).collect())
        .collect();
    Ok(Subspace::spanned_by(map.source().nvars(), &rows))
}

/// The restriction of `map` along `A → A/m_{l−1}`.
pub fn truncate_map<F: Field>(map: &MapSpec<F>) -> Result<MapSpec<F>> {
    let alg = map.algebra();
    let l = alg.length();
    if l == 0 {
        return Err(Error::Precondition(
            "the algebra is already the ground field".into(),
        ));
    }
    let socle = alg.lift(&alg.series().alpha(l));
    let mut gens = alg.presentation().reduced_gb().to_vec();
    gens.push(socle);
    let quotient = Arc::new(ArtinianAlgebra::new(crate::ideal::Ideal::new(
        alg.ring(),
        gens,
    )?)?);
    let images = map
        .images()
        .iter()
        .map(|a| quotient.element_of(&alg.lift(a)))
        .collect::<Result<Vec<_>>>()?;
    MapSpec::new(map.source(), &quotient, map.point().to_vec(), images)
}

pub(crate) fn format_point<F: Field>(p: &[F]) -> String {
    let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
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
    fn exterior_family_is_koszul() {
        for g in 1..=3 {
            let m = AlgebraModel::<Q>::exterior(g);
            assert_eq!(m.family().unwrap(), koszul_family(g).unwrap());
        }
    }

    #[test]
    fn square_zero_is_enforced() {
        let one = Matrix::<Q>::identity(1);
        assert!(matches!(
            AlgebraModel::new(vec![1, 1, 1], vec![vec![one.clone(), one]]),
            Err(Error::InvalidModel(_))
        ));
    }

    #[test]
    fn fiber_cup_data_at_origin_is_the_wedge() {
        let m = AlgebraModel::<Q>::exterior(2);
        let cup = m.fiber_cup_data(&[q(0), q(0)], 1).unwrap();
        assert_eq!((cup.dim_prev, cup.dim_i, cup.dim_next), (1, 2, 1));
        // ψ_1 · 1 = e1, ψ_2 · 1 = e2
        assert_eq!(cup.act_prev[0][0], vec![q(1), q(0)]);
        assert_eq!(cup.act_prev[1][0], vec![q(0), q(1)]);
        // e1 ∧ e2 = e12, e2 ∧ e1 = −e12
        assert_eq!(cup.act_i[0][1], vec![q(1)]);
        assert_eq!(cup.act_i[1][0], vec![q(-1)]);
        assert!(cup.cone_ideal().is_zero());
    }

    #[test]
    fn fiber_cup_data_away_from_origin_is_empty() {
        let m = AlgebraModel::<Q>::exterior(2);
        let cup = m.fiber_cup_data(&[q(1), q(0)], 1).unwrap();
        assert_eq!((cup.dim_prev, cup.dim_i, cup.dim_next), (0, 0, 0));
    }

    #[test]
    fn annihilators_of_the_exterior_model() {
        let m = AlgebraModel::<Q>::exterior(2);
        let o = [q(0), q(0)];
        let ring = Ring::numbered("x", 2);
        let max = crate::ideal::Ideal::parse(&ring, &["x1", "x2"]).unwrap();
        for i in 0..=1 {
            let ann = m.fiber_cup_data(&o, i).unwrap().annihilator(i).unwrap();
            assert_eq!(ann.subspace.dim(), 0);
            assert_eq!(ann.ideal, max);
        }
    }

    #[test]
    fn derivative_spaces() {
        let r = Ring::numbered("x", 2);
        let a = Arc::new(ArtinianAlgebra::<Q>::truncated(2));
        let s = MapSpec::new(
            &r,
            &a,
            vec![q(0), q(0)],
            vec![vec![q(0), q(2)], vec![q(0), q(3)]],
        )
        .unwrap();
        assert_eq!(
            derivative_space(&s),
            Subspace::spanned_by(2, &[vec![q(2), q(3)]])
        );
        let a3 = Arc::new(ArtinianAlgebra::<Q>::truncated(3));
        let s = MapSpec::new(
            &r,
            &a3,
            vec![q(0), q(0)],
            vec![vec![q(0), q(1), q(0)], vec![q(0), q(0), q(1)]],
        )
        .unwrap();
        assert_eq!(derivative_space(&s).dim(), 2);
        let s = MapSpec::constant(&r, &a3, vec![q(0), q(0)]).unwrap();
        assert_eq!(derivative_space(&s).dim(), 0);
    }

    #[test]
    fn family_over_dual_numbers() {
        let m = AlgebraModel::<Q>::exterior(2);
        let r = Ring::numbered("x", 2);
        let a = Arc::new(ArtinianAlgebra::<Q>::truncated(2));
        let s = MapSpec::new(&r, &a, vec![q(0), q(0)], vec![vec![q(0), q(1)], a.zero()]).unwrap();
        let c = m.family_over(&[q(0), q(0)], &s).unwrap();
        assert_eq!(
            c.diff(0).rows(),
            &[vec![a.basis_element(1)], vec![a.zero()]]
        );
        assert_eq!(c.diff(1).rows(), &[vec![a.zero(), a.basis_element(1)]]);
        assert!(m.family_over(&[q(1), q(0)], &s).is_err());
    }

    #[test]
    fn truncation_shrinks_the_derivative_space() {
        let r = Ring::numbered("x", 2);
        let a = Arc::new(ArtinianAlgebra::<Q>::truncated(3));
        let s = MapSpec::new(
            &r,
            &a,
            vec![q(0), q(0)],
            vec![vec![q(0), q(1), q(0)], vec![q(0), q(0), q(1)]],
        )
        .unwrap();
        let t = truncate_map(&s).unwrap();
        assert_eq!(t.algebra().dim(), 2);
        let d = derivative_space(&t);
        assert_eq!(d, Subspace::spanned_by(2, &[vec![q(1), q(0)]]));
        assert!(derivative_space(&s).contains_subspace(&d));
    }
}
