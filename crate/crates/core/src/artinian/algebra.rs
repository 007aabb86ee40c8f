use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::{Ideal, QuotientDim};
use crate::linalg::{axpy, is_zero_vec, Matrix, Subspace};
use crate::minors::Arithmetic;
use crate::poly::{Monomial, Polynomial, Ring};

/// Coordinates of an algebra element in the standard-monomial basis.
pub type Element<F> = Vec<F>;

/// A finite-dimensional local algebra `k[y]/J` with maximal ideal `(y)`,
/// stored as a multiplication table over the standard monomials of `J`.
///
/// Basis element 0 is the unit; the others span the maximal ideal.
#[derive(Clone, Debug)]
pub struct ArtinianAlgebra<F> {
    ideal: Ideal<F>,
    basis: Vec<Monomial>,
    table: Vec<Vec<Element<F>>>,
    series: CompositionSeries<F>,
}

impl<F: Field> ArtinianAlgebra<F> {
    pub fn new(ideal: Ideal<F>) -> Result<Self> {
        let ring = ideal.ring().clone();
        let basis = match ideal.quotient_dim() {
            QuotientDim::Infinite => return Err(Error::InfiniteDimensional),
            QuotientDim::Finite(0) => {
                return Err(Error::BadAlgebra(
                    "the presentation is the zero ring".into(),
                ))
            }
            QuotientDim::Finite(_) => ideal.standard_monomials().expect("finite quotient"),
        };
        let index: HashMap<&Monomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let dim = basis.len();
        let coords = |p: &Polynomial<F>| {
            let mut v = vec![F::zero(); dim];
            for (m, c) in ideal.normal_form(p).expect("same ring").terms() {
                v[index[m]] = c.clone();
            }
            v
        };
        let table = basis
            .iter()
            .map(|a| {
                basis
                    .iter()
                    .map(|b| coords(&Polynomial::monomial(&ring, a.mul(b), F::one())))
                    .collect()
            })
            .collect();
        let mut alg = ArtinianAlgebra {
            ideal,
            basis,
            table,
            series: CompositionSeries::trivial(),
        };
        alg.check_table()?;
        alg.check_local()?;
        alg.series = CompositionSeries::build(&alg)?;
        Ok(alg)
    }

    /// Builds `k[vars]/(relations)` from polynomial strings.
    pub fn parse(vars: &[&str], relations: &[&str]) -> Result<Self> {
        let ring = Ring::new(vars);
        Self::new(Ideal::parse(&ring, relations)?)
    }

    /// `k[ε]/(ε^n)`.
    pub fn truncated(n: u32) -> Self {
        Self::parse(&["e"], &[&format!("e^{n}")]).expect("truncated polynomial ring")
    }

    /// `k[y1..ys]/(y)^n`.
    pub fn fat_point(s: usize, n: u32) -> Self {
        let ring = Ring::numbered("y", s);
        Self::new(Ideal::origin_power(&ring, n)).expect("fat point")
    }

    /// The ground field itself.
    pub fn ground() -> Self {
        Self::truncated(1)
    }

    pub fn presentation(&self) -> &Ideal<F> {
        &self.ideal
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.ideal.ring()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Length of the maximal ideal, `l = dim − 1`.
    pub fn length(&self) -> usize {
        self.dim() - 1
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn series(&self) -> &CompositionSeries<F> {
        &self.series
    }

    pub fn zero(&self) -> Element<F> {
        vec![F::zero(); self.dim()]
    }

    pub fn one(&self) -> Element<F> {
        self.basis_element(0)
    }

    pub fn basis_element(&self, i: usize) -> Element<F> {
        let mut v = self.zero();
        v[i] = F::one();
        v
    }

    pub fn scalar(&self, c: F) -> Element<F> {
        let mut v = self.zero();
        v[0] = c;
        v
    }

    /// Product of basis elements `i` and `j`.
    pub fn table(&self, i: usize, j: usize) -> &Element<F> {
        &self.table[i][j]
    }

    pub fn mul(&self, a: &[F], b: &[F]) -> Element<F> {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    axpy(&mut out, &(x.clone() * y), &self.table[i][j]);
                }
            }
        }
        out
    }

    /// Image in the residue field.
    pub fn residue(&self, a: &[F]) -> F {
        a[0].clone()
    }

    /// Matrix of `b ↦ a·b` in the standard basis.
    pub fn mult_operator(&self, a: &[F]) -> Matrix<F> {
        let cols: Vec<Element<F>> = (0..self.dim())
            .map(|j| self.mul(a, &self.basis_element(j)))
            .collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// Class of a polynomial of the presentation ring.
    pub fn element_of(&self, p: &Polynomial<F>) -> Result<Element<F>> {
        let nf = self.ideal.normal_form(p)?;
        let mut v = self.zero();
        for (m, c) in nf.terms() {
            let i = self
                .basis
                .iter()
                .position(|b| b == m)
                .expect("normal form is standard");
            v[i] = c.clone();
        }
        Ok(v)
    }

    /// Lifts an element to a polynomial of the presentation ring.
    pub fn lift(&self, a: &[F]) -> Polynomial<F> {
        let terms = self
            .basis
            .iter()
            .zip(a)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Polynomial::from_terms(self.ring(), terms).expect("basis monomials match ring")
    }

    /// `p(images)` for a polynomial `p` of any ring with one image per variable.
    pub fn eval_poly(&self, p: &Polynomial<F>, images: &[Element<F>]) -> Element<F> {
        assert_eq!(images.len(), p.ring().nvars(), "one image per variable");
        let mut powers: Vec<Vec<Element<F>>> =
            images.iter().map(|a| vec![self.one(), a.clone()]).collect();
        let mut total = self.zero();
        for (m, c) in p.terms() {
            let mut term = self.scalar(c.clone());
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[v].len() <= e as usize {
                    let next = self.mul(powers[v].last().unwrap(), &images[v]);
                    powers[v].push(next);
                }
                term = self.mul(&term, &powers[v][e as usize]);
            }
            axpy(&mut total, &F::one(), &term);
        }
        total
    }

    fn check_table(&self) -> Result<()> {
        let n = self.dim();
        if self.table[0]
            .iter()
            .enumerate()
            .any(|(j, v)| *v != self.basis_element(j))
        {
            return Err(Error::BadAlgebra("basis element 0 is not the unit".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if self.table[i][j] != self.table[j][i] {
                    return Err(Error::BadAlgebra(format!("not commutative at ({i}, {j})")));
                }
                for k in 0..n {
                    let left = self.mul(&self.table[i][j], &self.basis_element(k));
                    let right = self.mul(&self.basis_element(i), &self.table[j][k]);
                    if left != right {
                        return Err(Error::BadAlgebra(format!(
                            "not associative at ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_local(&self) -> Result<()> {
        for v in 0..self.ring().nvars() {
            let y = self.element_of(&Polynomial::var(self.ring(), v))?;
            let mut p = y.clone();
            for _ in 1..=self.dim() {
                p = self.mul(&p, &y);
            }
            if !is_zero_vec(&p) {
                return Err(Error::NotLocal(self.ring().vars()[v].clone()));
            }
        }
        Ok(())
    }
}

impl<F: Field> Arithmetic for ArtinianAlgebra<F> {
    type Elem = Element<F>;
    fn zero(&self) -> Element<F> {
        ArtinianAlgebra::zero(self)
    }
    fn one(&self) -> Element<F> {
        ArtinianAlgebra::one(self)
    }
    fn is_zero(&self, a: &Element<F>) -> bool {
        is_zero_vec(a)
    }
    fn add(&self, a: &Element<F>, b: &Element<F>) -> Element<F> {
        a.iter().zip(b).map(|(x, y)| x.clone() + y).collect()
    }
    fn sub(&self, a: &Element<F>, b: &Element<F>) -> Element<F> {
        a.iter().zip(b).map(|(x, y)| x.clone() - y).collect()
    }
    fn mul(&self, a: &Element<F>, b: &Element<F>) -> Element<F> {
        ArtinianAlgebra::mul(self, a, b)
    }
}

/// `m = m_0 ⊃ m_1 ⊃ … ⊃ m_l = 0` with one-dimensional quotients, given by a
/// basis `α_1..α_l` of `m` with `m_j = span(α_{j+1}..α_l)`.
///
/// The chain refines the `m`-adic filtration; inside each layer the standard
/// monomials are taken in degree-then-input order.
#[derive(Clone, Debug)]
pub struct CompositionSeries<F> {
    alphas: Vec<Element<F>>,
    /// Columns `1, α_1, …, α_l` in standard coordinates.
    change: Matrix<F>,
    inverse: Matrix<F>,
}

impl<F: Field> CompositionSeries<F> {
    fn trivial() -> Self {
        CompositionSeries {
            alphas: Vec::new(),
            change: Matrix::identity(1),
            inverse: Matrix::identity(1),
        }
    }

    fn build(alg: &ArtinianAlgebra<F>) -> Result<Self> {
        let n = alg.dim();
        let max_basis: Vec<Element<F>> = (1..n).map(|i| alg.basis_element(i)).collect();
        let mut power = Subspace::spanned_by(n, &max_basis);
        let mut alphas = Vec::new();
        while power.dim() > 0 {
            let products: Vec<Element<F>> = power
                .basis()
                .iter()
                .flat_map(|a| max_basis.iter().map(move |b| (a, b)))
                .map(|(a, b)| alg.mul(a, b))
                .collect();
            let next = Subspace::spanned_by(n, &products);
            let mut chosen = next.clone();
            let candidates = (1..n)
                .map(|i| alg.basis_element(i))
                .chain(power.basis().iter().cloned());
            for v in candidates {
                if chosen.dim() == power.dim() {
                    break;
                }
                if power.contains(&v) && !chosen.contains(&v) {
                    chosen = chosen.sum(&Subspace::spanned_by(n, std::slice::from_ref(&v)));
                    alphas.push(v);
                }
            }
            power = next;
        }
        let mut cols = vec![alg.one()];
        cols.extend(alphas.iter().cloned());
        let change = Matrix::from_columns(n, &cols);
        let inverse =
            invert(&change).ok_or_else(|| Error::BadAlgebra("series basis is singular".into()))?;
        let series = CompositionSeries {
            alphas,
            change,
            inverse,
        };
        series.check_ideals(alg)?;
        Ok(series)
    }

    fn check_ideals(&self, alg: &ArtinianAlgebra<F>) -> Result<()> {
        let n = alg.dim();
        for j in 0..self.alphas.len() {
            let mj = self.ideal(j, n);
            for a in &self.alphas {
                for v in mj.basis() {
                    if !mj.contains(&alg.mul(a, v)) {
                        return Err(Error::BadAlgebra(format!("m_{j} is not an ideal")));
                    }
                }
            }
        }
        Ok(())
    }

    /// `l`, the number of steps.
    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }

    /// `α_1..α_l` in standard coordinates.
    pub fn alphas(&self) -> &[Element<F>] {
        &self.alphas
    }

    /// `α_μ` for `μ = 1..=l`; `α_0 = 1`.
    pub fn alpha(&self, mu: usize) -> Element<F> {
        self.change.column(mu)
    }

    /// `m_j` as a subspace of the algebra.
    pub fn ideal(&self, j: usize, dim: usize) -> Subspace<F> {
        Subspace::spanned_by(dim, &self.alphas[j.min(self.alphas.len())..])
    }

    /// Coordinates `(c_0, c_1..c_l)` of `a` in the basis `1, α_1..α_l`.
    pub fn to_alpha(&self, a: &[F]) -> Vec<F> {
        self.inverse.mul_vec(a)
    }

    pub fn from_alpha(&self, c: &[F]) -> Element<F> {
        self.change.mul_vec(c)
    }
}

/// Inverse of a square matrix, `None` when singular.
pub fn invert<F: Field>(m: &Matrix<F>) -> Option<Matrix<F>> {
    let n = m.nrows();
    if n == 0 {
        return Some(Matrix::zeros(0, 0));
    }
    let mut aug = Matrix::zeros(n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            aug[(r, c)] = m[(r, c)].clone();
        }
        aug[(r, n + r)] = F::one();
    }
    let (red, pivots) = aug.rref();
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    let mut inv = Matrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            inv[(r, c)] = red[(r, n + c)].clone();
        }
    }
    Some(inv)
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
    fn catalog_dimensions() {
        let a = ArtinianAlgebra::<Q>::truncated(2);
        assert_eq!(a.dim(), 2);
        assert_eq!(a.basis()[1].exponents(), &[1]);
        let b = ArtinianAlgebra::<Q>::parse(&["x", "y"], &["x^2", "x*y", "y^2"]).unwrap();
        assert_eq!(b.dim(), 3);
        assert_eq!(ArtinianAlgebra::<Q>::fat_point(2, 3).dim(), 6);
        assert_eq!(ArtinianAlgebra::<Q>::ground().dim(), 1);
    }

    #[test]
    fn rejects_bad_presentations() {
        assert_eq!(
            ArtinianAlgebra::<Q>::parse(&["y"], &["y^2 - y"]).unwrap_err(),
            Error::NotLocal("y".into())
        );
        assert_eq!(
            ArtinianAlgebra::<Q>::parse(&["x", "y"], &["x^2"]).unwrap_err(),
            Error::InfiniteDimensional
        );
        assert!(ArtinianAlgebra::<Q>::parse(&["x"], &["1"]).is_err());
    }

    #[test]
    fn multiplication() {
        let a = ArtinianAlgebra::<Q>::truncated(3);
        let e = a.basis_element(1);
        assert_eq!(a.mul(&e, &e), a.basis_element(2));
        assert_eq!(a.mul(&a.mul(&e, &e), &e), a.zero());
        let one_plus_e = vec![q(1), q(1), q(0)];
        assert_eq!(a.mul(&one_plus_e, &one_plus_e), vec![q(1), q(2), q(1)]);
    }

    #[test]
    fn composition_series_flags() {
        let a = ArtinianAlgebra::<Q>::truncated(3);
        let s = a.series();
        assert_eq!(s.alphas(), &[a.basis_element(1), a.basis_element(2)]);
        let b = ArtinianAlgebra::<Q>::parse(&["x", "y"], &["x^2", "x*y", "y^2"]).unwrap();
        let s = b.series();
        assert_eq!(s.len(), 2);
        assert_eq!(
            s.ideal(1, 3),
            Subspace::spanned_by(3, &[b.basis_element(2)])
        );
        assert!(ArtinianAlgebra::<Q>::ground().series().is_empty());
    }

    #[test]
    fn alpha_coordinates_roundtrip() {
        let a = ArtinianAlgebra::<Q>::fat_point(2, 3);
        let v: Vec<Q> = (0..a.dim() as i64).map(q).collect();
        let c = a.series().to_alpha(&v);
        assert_eq!(a.series().from_alpha(&c), v);
    }

    #[test]
    fn polynomial_evaluation() {
        let a = ArtinianAlgebra::<Q>::truncated(2);
        let r = Ring::new(&["x"]);
        let p = Polynomial::<Q>::parse(&r, "x^2 + 3*x + 1").unwrap();
        let img = vec![q(2), q(1)];
        // (2+e)^2 + 3(2+e) + 1 = 11 + 7e
        assert_eq!(a.eval_poly(&p, &[img]), vec![q(11), q(7)]);
    }
}
