use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::freecomplex::FreeComplex;
use crate::linalg::{cohomology, Matrix, Quotient, Subspace};
use crate::poly::same_ring;

use super::{ArtinianAlgebra, Element, MapSpec};

/// A matrix with entries in an Artinian algebra; columns index the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AMatrix<F> {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Element<F>>>,
}

impl<F: Field> AMatrix<F> {
    pub fn new(rows: Vec<Vec<Element<F>>>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        AMatrix {
            rows: rows.len(),
            cols,
            entries: rows,
        }
    }

    pub fn zeros(alg: &ArtinianAlgebra<F>, rows: usize, cols: usize) -> Self {
        Self::new(vec![vec![alg.zero(); cols]; rows], cols)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &Element<F> {
        &self.entries[r][c]
    }

    pub fn rows(&self) -> &[Vec<Element<F>>] {
        &self.entries
    }

    pub fn mul(&self, alg: &ArtinianAlgebra<F>, other: &AMatrix<F>) -> AMatrix<F> {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in matrix product"
        );
        let rows = (0..self.rows)
            .map(|r| {
                (0..other.cols)
                    .map(|c| {
                        let mut acc = alg.zero();
                        for k in 0..self.cols {
                            let p = alg.mul(&self.entries[r][k], &other.entries[k][c]);
                            for (x, y) in acc.iter_mut().zip(&p) {
                                *x += y;
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        AMatrix::new(rows, other.cols)
    }

    /// Field matrix of the underlying linear map; coordinate `(j, μ)` of
    /// `A^n` sits at index `j·dim A + μ`.
    pub fn expand(&self, alg: &ArtinianAlgebra<F>) -> Matrix<F> {
        let n = alg.dim();
        let mut m = Matrix::zeros(self.rows * n, self.cols * n);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let op = alg.mult_operator(&self.entries[r][c]);
                for i in 0..n {
                    for j in 0..n {
                        m[(r * n + i, c * n + j)] = op[(i, j)].clone();
                    }
                }
            }
        }
        m
    }

    /// Entry-wise image in the residue field.
    pub fn residue(&self, alg: &ArtinianAlgebra<F>) -> Matrix<F> {
        Matrix::from_rows_with_cols(
            self.entries
                .iter()
                .map(|row| row.iter().map(|a| alg.residue(a)).collect())
                .collect(),
            self.cols,
        )
    }
}

/// A bounded complex of free modules over an Artinian algebra.
#[derive(Clone, Debug)]
pub struct AComplex<F> {
    algebra: Arc<ArtinianAlgebra<F>>,
    lo: i64,
    ranks: Vec<usize>,
    diffs: Vec<AMatrix<F>>,
}

impl<F: Field> AComplex<F> {
    pub fn new(
        algebra: &Arc<ArtinianAlgebra<F>>,
        lo: i64,
        ranks: Vec<usize>,
        diffs: Vec<AMatrix<F>>,
    ) -> Result<Self> {
        if diffs.len() + 1 != ranks.len().max(1) {
            return Err(Error::Structural(
                "one differential between each pair of consecutive ranks".into(),
            ));
        }
        for (j, d) in diffs.iter().enumerate() {
            if d.nrows() != ranks[j + 1] || d.ncols() != ranks[j] {
                return Err(Error::Structural(format!(
                    "d^{} has the wrong shape",
                    lo + j as i64
                )));
            }
        }
        for j in 1..diffs.len() {
            let comp = diffs[j].mul(algebra, &diffs[j - 1]);
            for r in 0..comp.nrows() {
                for c in 0..comp.ncols() {
                    if comp.entry(r, c).iter().any(|x| !x.is_zero()) {
                        return Err(Error::NotAComplex {
                            degree: lo + j as i64 - 1,
                            row: r,
                            col: c,
                        });
                    }
                }
            }
        }
        Ok(AComplex {
            algebra: algebra.clone(),
            lo,
            ranks,
            diffs,
        })
    }

    pub fn algebra(&self) -> &Arc<ArtinianAlgebra<F>> {
        &self.algebra
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.ranks.len() as i64 - 1
    }

    pub fn rank(&self, i: i64) -> usize {
        if i < self.lo || i > self.hi() {
            0
        } else {
            self.ranks[(i - self.lo) as usize]
        }
    }

    /// `d^i`, a zero matrix of the right shape outside the range.
    pub fn diff(&self, i: i64) -> AMatrix<F> {
        if i >= self.lo && i < self.hi() {
            self.diffs[(i - self.lo) as usize].clone()
        } else {
            AMatrix::zeros(&self.algebra, self.rank(i + 1), self.rank(i))
        }
    }

    /// `H^i` as a vector space with fixed echelon representatives.
    pub fn cohomology_space(&self, i: i64) -> Quotient<F> {
        let dim = self.rank(i) * self.algebra.dim();
        let prev = self.diff(i - 1).expand(&self.algebra);
        let next = self.diff(i).expand(&self.algebra);
        cohomology(dim, Some(&prev), Some(&next))
    }
}

/// `s*(C) = C ⊗_R A`, evaluating each entry at the images of the map.
pub fn specialize_complex<F: Field>(
    complex: &FreeComplex<F>,
    map: &MapSpec<F>,
) -> Result<AComplex<F>> {
    if !same_ring(complex.ring(), map.source()) {
        return Err(Error::RingMismatch(format!(
            "complex over {} but the map starts from {}",
            complex.ring(),
            map.source()
        )));
    }
    let alg = map.algebra();
    let diffs = complex
        .diffs()
        .iter()
        .map(|d| {
            let rows = d
                .rows()
                .iter()
                .map(|row| row.iter().map(|p| map.pull_back(p)).collect())
                .collect();
            AMatrix::new(rows, d.ncols())
        })
        .collect();
    AComplex::new(alg, complex.lo(), complex.ranks().to_vec(), diffs)
}

/// A finite-dimensional module over an Artinian algebra: one action matrix
/// per standard basis element of the algebra.
#[derive(Clone, Debug)]
pub struct ArtinianModule<F> {
    algebra: Arc<ArtinianAlgebra<F>>,
    dim: usize,
    actions: Vec<Matrix<F>>,
}

impl<F: Field> ArtinianModule<F> {
    /// Checks that the unit acts as the identity and that the actions respect
    /// the multiplication table.
    pub fn new(
        algebra: &Arc<ArtinianAlgebra<F>>,
        dim: usize,
        actions: Vec<Matrix<F>>,
    ) -> Result<Self> {
        let n = algebra.dim();
        if actions.len() != n || actions.iter().any(|a| a.nrows() != dim || a.ncols() != dim) {
            return Err(Error::Structural(format!(
                "need {n} square action matrices of size {dim}"
            )));
        }
        if actions[0] != Matrix::identity(dim) {
            return Err(Error::Structural(
                "the unit does not act as the identity".into(),
            ));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = actions[i].mul(&actions[j]);
                let mut rhs = Matrix::zeros(dim, dim);
                for (k, c) in algebra.table(i, j).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for r in 0..dim {
                        for s in 0..dim {
                            let x = actions[k][(r, s)].clone() * c;
                            rhs[(r, s)] += &x;
                        }
                    }
                }
                if lhs != rhs {
                    return Err(Error::Structural(format!(
                        "actions of basis elements {i} and {j} do not compose like the algebra"
                    )));
                }
            }
        }
        Ok(ArtinianModule {
            algebra: algebra.clone(),
            dim,
            actions,
        })
    }

    /// `A^rank`.
    pub fn free(algebra: &Arc<ArtinianAlgebra<F>>, rank: usize) -> Self {
        let whole = Subspace::full(rank * algebra.dim());
        Self::subquotient(algebra, rank, &whole, &Subspace::zero(rank * algebra.dim()))
    }

    /// `Z / B` for `A`-stable subspaces `B ⊆ Z ⊆ A^rank`, with the action
    /// computed against the echelon complement of `B` in `Z`.
    pub fn subquotient(
        algebra: &Arc<ArtinianAlgebra<F>>,
        rank: usize,
        z: &Subspace<F>,
        b: &Subspace<F>,
    ) -> Self {
        let q = Quotient::new(z.basis(), b.clone());
        Self::from_quotient(algebra, rank, &q)
    }

    fn from_quotient(algebra: &Arc<ArtinianAlgebra<F>>, rank: usize, q: &Quotient<F>) -> Self {
        let n = algebra.dim();
        let reps = q.representatives();
        let actions = (0..n)
            .map(|a| {
                let op = AMatrix::new(
                    (0..rank)
                        .map(|r| {
                            (0..rank)
                                .map(|c| {
                                    if r == c {
                                        algebra.basis_element(a)
                                    } else {
                                        algebra.zero()
                                    }
                                })
                                .collect()
                        })
                        .collect(),
                    rank,
                )
                .expand(algebra);
                let cols: Vec<Vec<F>> = reps.iter().map(|v| q.coords(&op.mul_vec(v))).collect();
                Matrix::from_columns(q.dim(), &cols)
            })
            .collect();
        ArtinianModule {
            algebra: algebra.clone(),
            dim: q.dim(),
            actions,
        }
    }

    pub fn algebra(&self) -> &Arc<ArtinianAlgebra<F>> {
        &self.algebra
    }

    /// Dimension over the ground field.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, basis_element: usize) -> &Matrix<F> {
        &self.actions[basis_element]
    }

    /// `dim(mM)`.
    pub fn max_ideal_image_dim(&self) -> usize {
        let vecs: Vec<Vec<F>> = self.actions[1..]
            .iter()
            .flat_map(|a| (0..self.dim).map(move |c| a.column(c)))
            .collect();
        Subspace::spanned_by(self.dim, &vecs).dim()
    }

    /// `(free?, k₀)` with `k₀ = dim M/mM` the minimal number of generators.
    pub fn is_free(&self) -> (bool, usize) {
        let k0 = self.dim - self.max_ideal_image_dim();
        (self.dim == k0 * self.algebra.dim(), k0)
    }
}

/// `H^i` of a complex over `A` as an `A`-module.
pub fn module_cohomology<F: Field>(complex: &AComplex<F>, i: i64) -> ArtinianModule<F> {
    let q = complex.cohomology_space(i);
    ArtinianModule::from_quotient(complex.algebra(), complex.rank(i), &q)
}

/// The image of `σ : A^cols → A^rows` as a submodule of `A^rows`.
pub fn image_module<F: Field>(
    algebra: &Arc<ArtinianAlgebra<F>>,
    sigma: &AMatrix<F>,
) -> ArtinianModule<F> {
    let im = sigma.expand(algebra).column_space();
    let zero = Subspace::zero(sigma.nrows() * algebra.dim());
    ArtinianModule::subquotient(algebra, sigma.nrows(), &im, &zero)
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

    fn eps() -> Arc<ArtinianAlgebra<Q>> {
        Arc::new(ArtinianAlgebra::truncated(2))
    }

    fn times_e(a: &Arc<ArtinianAlgebra<Q>>) -> AComplex<Q> {
        let d = AMatrix::new(vec![vec![a.basis_element(1)]], 1);
        AComplex::new(a, 0, vec![1, 1], vec![d]).unwrap()
    }

    #[test]
    fn cohomology_of_multiplication_by_e() {
        let a = eps();
        let c = times_e(&a);
        let h0 = module_cohomology(&c, 0);
        assert_eq!(h0.dim(), 1);
        assert!(h0.action(1).is_zero());
        assert_eq!(h0.is_free(), (false, 1));
        let h1 = module_cohomology(&c, 1);
        assert_eq!(h1.dim(), 1);
        assert_eq!(h1.is_free(), (false, 1));
    }

    #[test]
    fn zero_differentials_give_free_cohomology() {
        let a = eps();
        let d = AMatrix::zeros(&a, 2, 1);
        let c = AComplex::new(&a, 0, vec![1, 2], vec![d]).unwrap();
        assert_eq!(module_cohomology(&c, 1).is_free(), (true, 2));
    }

    #[test]
    fn freeness_counts() {
        let a = eps();
        assert_eq!(ArtinianModule::free(&a, 1).is_free(), (true, 1));
        assert_eq!(ArtinianModule::free(&a, 3).is_free(), (true, 3));
        // A/(e)
        let quotient = ArtinianModule::subquotient(
            &a,
            1,
            &Subspace::full(2),
            &Subspace::spanned_by(2, &[vec![q(0), q(1)]]),
        );
        assert_eq!(quotient.is_free(), (false, 1));
        // A ⊕ (e) inside A^2
        let z = Subspace::spanned_by(
            4,
            &[
                vec![q(1), q(0), q(0), q(0)],
                vec![q(0), q(1), q(0), q(0)],
                vec![q(0), q(0), q(0), q(1)],
            ],
        );
        let m = ArtinianModule::subquotient(&a, 2, &z, &Subspace::zero(4));
        assert_eq!(m.is_free(), (false, 2));
    }

    #[test]
    fn module_axioms_are_checked() {
        let a = eps();
        let bad = vec![Matrix::identity(1), Matrix::identity(1)];
        assert!(ArtinianModule::new(&a, 1, bad).is_err());
        let good = vec![Matrix::identity(1), Matrix::zeros(1, 1)];
        assert!(ArtinianModule::new(&a, 1, good).is_ok());
    }

    #[test]
    fn specialization() {
        let a = eps();
        let k2 = koszul_family::<Q>(2).unwrap();
        let s = MapSpec::new(
            k2.ring(),
            &a,
            vec![q(0), q(0)],
            vec![vec![q(0), q(1)], a.zero()],
        )
        .unwrap();
        let c = specialize_complex(&k2, &s).unwrap();
        assert_eq!(
            c.diff(0).rows(),
            &[vec![a.basis_element(1)], vec![a.zero()]]
        );
        assert_eq!(c.diff(1).rows(), &[vec![a.zero(), a.basis_element(1)]]);
        let h1 = module_cohomology(&c, 1);
        assert_eq!(h1.dim(), 2);
        assert!(!h1.is_free().0);
        let k1 = koszul_family::<Q>(1).unwrap();
        assert!(specialize_complex(&k1, &s).is_err());
    }

    #[test]
    fn image_of_identity_is_free() {
        let a = eps();
        let sigma = AMatrix::new(vec![vec![a.one()]], 1);
        assert_eq!(image_module(&a, &sigma).is_free(), (true, 1));
    }
}
