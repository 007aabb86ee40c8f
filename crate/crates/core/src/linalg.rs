//! Dense exact linear algebra: row reduction, kernels, subspaces and
//! quotient coordinates.

use crate::field::Field;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(rows, cols)
    }

    /// Like [`Matrix::from_rows`] but keeps the column count for zero rows.
    pub fn from_rows_with_cols(rows: Vec<Vec<F>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        Matrix {
            rows: n,
            cols,
            data,
        }
    }

    /// The matrix whose columns are `columns`, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged matrix");
            for (r, x) in col.iter().enumerate() {
                m[(r, c)] = x.clone();
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in matrix product"
        );
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        let p = a.clone() * b;
                        out[(r, c)] += &p;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(
            self.cols,
            v.len(),
            "dimension mismatch in matrix-vector product"
        );
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m[(r, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = m[(lead, c)].inv();
            for x in &mut m.data[lead * m.cols..(lead + 1) * m.cols] {
                *x *= &inv;
            }
            for r in 0..m.rows {
                if r != lead && !m[(r, c)].is_zero() {
                    let f = m[(r, c)].clone();
                    m.sub_row_multiple(r, lead, &f);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Kernel basis: one vector per free column, ascending, with a 1 in that
    /// column and the pivot entries solved for.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut pivot_iter = pivots.iter().peekable();
        for free in 0..self.cols {
            if pivot_iter.peek() == Some(&&free) {
                pivot_iter.next();
                continue;
            }
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of the column space in RREF form.
    pub fn column_space(&self) -> Subspace<F> {
        Subspace::spanned_by(
            self.rows,
            &(0..self.cols).map(|c| self.column(c)).collect::<Vec<_>>(),
        )
    }

    /// `[[self, 0], [0, other]]`.
    pub fn block_diag(&self, other: &Matrix<F>) -> Matrix<F> {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)].clone();
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m[(self.rows + r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// `row[r] -= f · row[s]`
    fn sub_row_multiple(&mut self, r: usize, s: usize, f: &F) {
        for c in 0..self.cols {
            let x = self.data[s * self.cols + c].clone();
            if !x.is_zero() {
                let p = x * f;
                self.data[r * self.cols + c] -= &p;
            }
        }
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (r, c): (usize, usize)) -> &F {
        &self.data[r * self.cols + c]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        &mut self.data[r * self.cols + c]
    }
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    let mut s = F::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += &(x.clone() * y);
        }
    }
    s
}

pub fn is_zero_vec<F: Field>(v: &[F]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// `v += c · w`
pub fn axpy<F: Field>(v: &mut [F], c: &F, w: &[F]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in v.iter_mut().zip(w) {
        if !y.is_zero() {
            *x += &(c.clone() * y);
        }
    }
}

/// A subspace of `F^n` held as RREF rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F> {
    ambient: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::spanned_by(ambient, &Matrix::<F>::identity(ambient).to_rows())
    }

    pub fn spanned_by(ambient: usize, vectors: &[Vec<F>]) -> Self {
        let m = Matrix::from_rows_with_cols(vectors.to_vec(), ambient);
        let (r, pivots) = m.rref();
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient,
            rows,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// RREF basis rows.
    pub fn basis(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along the pivots; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if !c.is_zero() {
                axpy(&mut out, &-c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[F]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        let mut vs = self.rows.clone();
        vs.extend(other.rows.iter().cloned());
        Self::spanned_by(self.ambient, &vs)
    }
}

/// Coordinates on `Z / B` for subspaces `B ⊆ Z`.
///
/// The complement `C` is the RREF of the `Z` basis reduced modulo `B`, so its
/// pivots avoid those of `B`; the class of `z` has coordinates read off at
/// `C`'s pivots after reducing `z` by `B`.
#[derive(Clone, Debug)]
pub struct Quotient<F> {
    boundaries: Subspace<F>,
    complement: Subspace<F>,
}

impl<F: Field> Quotient<F> {
    pub fn new(cycles: &[Vec<F>], boundaries: Subspace<F>) -> Self {
        let residues: Vec<Vec<F>> = cycles.iter().map(|z| boundaries.reduce(z)).collect();
        let complement = Subspace::spanned_by(boundaries.ambient_dim(), &residues);
        Quotient {
            boundaries,
            complement,
        }
    }

    pub fn dim(&self) -> usize {
        self.complement.dim()
    }

    /// Fixed representatives of the basis classes.
    pub fn representatives(&self) -> &[Vec<F>] {
        self.complement.basis()
    }

    pub fn boundaries(&self) -> &Subspace<F> {
        &self.boundaries
    }

    /// Coordinates of the class of a cycle `z`.
    pub fn coords(&self, z: &[F]) -> Vec<F> {
        let r = self.boundaries.reduce(z);
        self.complement
            .pivots()
            .iter()
            .map(|&p| r[p].clone())
            .collect()
    }

    /// True when `z` lies in `B + span(representatives)`.
    pub fn is_cycle_class(&self, z: &[F]) -> bool {
        let r = self.boundaries.reduce(z);
        self.complement.contains(&r)
    }
}

/// `H = ker(next) / im(prev)` for a complex of vector spaces
/// `V_{-1} --prev--> V --next--> V_{+1}`. `None` stands for a zero map.
pub fn cohomology<F: Field>(
    dim: usize,
    prev: Option<&Matrix<F>>,
    next: Option<&Matrix<F>>,
) -> Quotient<F> {
    let cycles = match next {
        Some(d) if d.nrows() > 0 => d.nullspace(),
        _ => Matrix::<F>::identity(dim).to_rows(),
    };
    let boundaries = match prev {
        Some(d) => d.column_space(),
        None => Subspace::zero(dim),
    };
    Quotient::new(&cycles, boundaries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_rref() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let (r, p) = a.rref();
        assert_eq!(p, vec![0, 1]);
        assert_eq!(r.row(0), &[q(1), q(0), q(1)]);
        assert_eq!(r.row(1), &[q(0), q(1), q(1)]);
        assert_eq!(Matrix::<Rational>::zeros(2, 3).rank(), 0);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(is_zero_vec(&a.mul_vec(&ns[0])));
        assert_eq!(ns[0], vec![q(-1), q(-1), q(1)]);
    }

    #[test]
    fn subspace_membership() {
        let s = Subspace::spanned_by(3, &[vec![q(1), q(1), q(0)], vec![q(0), q(1), q(1)]]);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[q(1), q(0), q(-1)]));
        assert!(!s.contains(&[q(0), q(0), q(1)]));
    }

    #[test]
    fn quotient_coordinates() {
        // Z = F^3, B = span(e0): classes of e1, e2 are the basis
        let b = Subspace::spanned_by(3, &[vec![q(1), q(0), q(0)]]);
        let h = Quotient::new(&Matrix::<Rational>::identity(3).to_rows(), b);
        assert_eq!(h.dim(), 2);
        assert_eq!(h.coords(&[q(5), q(2), q(-1)]), vec![q(2), q(-1)]);
    }

    #[test]
    fn cohomology_of_a_short_complex() {
        // F --(1,0)^T--> F^2 --(0,1)--> F has zero cohomology in the middle
        let d0 = m(&[&[1], &[0]]);
        let d1 = m(&[&[0, 1]]);
        assert_eq!(cohomology(2, Some(&d0), Some(&d1)).dim(), 0);
        assert_eq!(cohomology(2, None, Some(&d1)).dim(), 1);
        assert_eq!(cohomology::<Rational>(2, None, None).dim(), 2);
    }
}
