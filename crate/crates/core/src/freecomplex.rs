//! Bounded complexes of free modules over a polynomial ring and their
//! cohomology jump ideals.
//!
//! A differential `d^i : F^i → F^{i+1}` is an `l_{i+1} × l_i` matrix whose
//! columns index the basis of the source.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::linalg::Matrix;
use crate::minors::{self, PolyArith};
use crate::poly::{same_ring, Polynomial, Ring};

/// A matrix of polynomials, stored by rows.
#[derive(Clone, Debug)]
pub struct PolyMatrix<F> {
    ring: Arc<Ring>,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Polynomial<F>>>,
}

impl<F: Field> PolyMatrix<F> {
    pub fn zeros(ring: &Arc<Ring>, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![vec![Polynomial::zero(ring); cols]; rows],
        }
    }

    /// `cols` is needed when `rows` is empty.
    pub fn new(ring: &Arc<Ring>, rows: Vec<Vec<Polynomial<F>>>, cols: usize) -> Result<Self> {
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Structural(format!(
                    "row {r} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            if let Some(p) = row.iter().find(|p| !same_ring(p.ring(), ring)) {
                return Err(Error::RingMismatch(format!("entry `{p}` is not in {ring}")));
            }
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows: rows.len(),
            cols,
            entries: rows,
        })
    }

    /// Parses a matrix given as rows of polynomial strings.
    pub fn parse(ring: &Arc<Ring>, rows: &[&[&str]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let entries = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| Polynomial::parse(ring, s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, entries, cols)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &Polynomial<F> {
        &self.entries[r][c]
    }

    pub fn rows(&self) -> &[Vec<Polynomial<F>>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Polynomial::is_zero)
    }

    pub fn mul(&self, other: &PolyMatrix<F>) -> PolyMatrix<F> {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in matrix product"
        );
        let mut out = PolyMatrix::zeros(&self.ring, self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    if !self.entries[r][k].is_zero() && !other.entries[k][c].is_zero() {
                        acc = &acc + &(&self.entries[r][k] * &other.entries[k][c]);
                    }
                }
                out.entries[r][c] = acc;
            }
        }
        out
    }

    pub fn eval(&self, point: &[F]) -> Matrix<F> {
        Matrix::from_rows_with_cols(
            self.entries
                .iter()
                .map(|row| row.iter().map(|p| p.eval(point)).collect())
                .collect(),
            self.cols,
        )
    }

    pub fn map_entries(&self, f: impl Fn(&Polynomial<F>) -> Polynomial<F>) -> PolyMatrix<F> {
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(&f).collect())
                .collect(),
        }
    }

    /// `[[self, 0], [0, other]]`.
    pub fn block_diag(&self, other: &PolyMatrix<F>) -> PolyMatrix<F> {
        let mut out = PolyMatrix::zeros(&self.ring, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.entries[r][c] = self.entries[r][c].clone();
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.entries[self.rows + r][self.cols + c] = other.entries[r][c].clone();
            }
        }
        out
    }
}

impl<F: Field> PartialEq for PolyMatrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

/// The ideal of `m × m` minors, with `I_m = (1)` for `m ≤ 0` and `I_m = (0)`
/// for `m > min(rows, cols)`.
pub fn minors_ideal<F: Field>(matrix: &PolyMatrix<F>, m: i64) -> Result<Ideal<F>> {
    let ring = matrix.ring();
    if m <= 0 {
        return Ok(Ideal::unit(ring));
    }
    let m = m as usize;
    if m > matrix.nrows().min(matrix.ncols()) {
        return Ok(Ideal::zero(ring));
    }
    let gens = minors::minors(&PolyArith::new(ring), matrix.rows(), m)?;
    Ideal::new(ring, gens)
}

/// A bounded complex `F^lo → … → F^hi` of free modules.
#[derive(Clone, Debug)]
pub struct FreeComplex<F> {
    ring: Arc<Ring>,
    lo: i64,
    ranks: Vec<usize>,
    diffs: Vec<PolyMatrix<F>>,
}

impl<F: Field> FreeComplex<F> {
    /// `diffs[j]` is `d^{lo+j}`; there is one fewer differential than ranks.
    pub fn new(
        ring: &Arc<Ring>,
        lo: i64,
        ranks: Vec<usize>,
        diffs: Vec<PolyMatrix<F>>,
    ) -> Result<Self> {
        if diffs.len() + 1 != ranks.len().max(1) {
            return Err(Error::Structural(format!(
                "{} ranks need {} differentials, got {}",
                ranks.len(),
                ranks.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (j, d) in diffs.iter().enumerate() {
            if !same_ring(d.ring(), ring) {
                return Err(Error::RingMismatch(format!(
                    "d^{} is over {}",
                    lo + j as i64,
                    d.ring()
                )));
            }
            if d.nrows() != ranks[j + 1] || d.ncols() != ranks[j] {
                return Err(Error::Structural(format!(
                    "d^{} is {}x{} but ranks require {}x{}",
                    lo + j as i64,
                    d.nrows(),
                    d.ncols(),
                    ranks[j + 1],
                    ranks[j]
                )));
            }
        }
        let c = FreeComplex {
            ring: ring.clone(),
            lo,
            ranks,
            diffs,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn empty(ring: &Arc<Ring>) -> Self {
        FreeComplex {
            ring: ring.clone(),
            lo: 0,
            ranks: Vec::new(),
            diffs: Vec::new(),
        }
    }

    /// Checks `d^{i+1} ∘ d^i = 0` entry by entry.
    pub fn validate(&self) -> Result<()> {
        for j in 1..self.diffs.len() {
            let comp = self.diffs[j].mul(&self.diffs[j - 1]);
            for r in 0..comp.nrows() {
                for c in 0..comp.ncols() {
                    if !comp.entry(r, c).is_zero() {
                        return Err(Error::NotAComplex {
                            degree: self.lo + j as i64 - 1,
                            row: r,
                            col: c,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.ranks.len() as i64 - 1
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `l_i`, zero outside the degree range.
    pub fn rank(&self, i: i64) -> usize {
        if i < self.lo || i > self.hi() {
            0
        } else {
            self.ranks[(i - self.lo) as usize]
        }
    }

    /// `d^i` as an `l_{i+1} × l_i` matrix; an empty or zero matrix outside the range.
    pub fn diff(&self, i: i64) -> PolyMatrix<F> {
        if i >= self.lo && i < self.hi() {
            self.diffs[(i - self.lo) as usize].clone()
        } else {
            PolyMatrix::zeros(&self.ring, self.rank(i + 1), self.rank(i))
        }
    }

    pub fn diffs(&self) -> &[PolyMatrix<F>] {
        &self.diffs
    }

    /// `J^i_k = ⋂_{a+b = l_i−k+2} (I_a(d^{i−1}) + I_b(d^i))`. Pairs with
    /// `a ≤ 0` or `b ≤ 0` contribute the unit ideal and are skipped.
    pub fn jump_ideal(&self, i: i64, k: i64) -> Result<Ideal<F>> {
        let total = self.rank(i) as i64 - k + 2;
        let before = self.diff(i - 1);
        let after = self.diff(i);
        let terms = (1..total)
            .into_par_iter()
            .map(|a| minors_ideal(&before, a)?.sum(&minors_ideal(&after, total - a)?))
            .collect::<Result<Vec<_>>>()?;
        let mut acc = Ideal::unit(&self.ring);
        for t in &terms {
            acc = acc.intersect(t)?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    /// `J̄^i_k = I_{l_i−k+1}(d^{i−1} ⊕ d^i)` with the block-diagonal assembly.
    pub fn jump_ideal_alt(&self, i: i64, k: i64) -> Result<Ideal<F>> {
        let block = self.diff(i - 1).block_diag(&self.diff(i));
        minors_ideal(&block, self.rank(i) as i64 - k + 1)
    }

    fn check_point(&self, point: &[F]) -> Result<()> {
        if point.len() != self.ring.nvars() {
            return Err(Error::Structural(format!(
                "point has {} coordinates, ring {} has {}",
                point.len(),
                self.ring,
                self.ring.nvars()
            )));
        }
        Ok(())
    }

    /// `dim H^i(F ⊗ k(P)) = l_i − rank d^{i−1}(P) − rank d^i(P)`.
    pub fn fiber_cohomology_dim(&self, point: &[F], i: i64) -> Result<usize> {
        self.check_point(point)?;
        let before = self.diff(i - 1).eval(point).rank();
        let after = self.diff(i).eval(point).rank();
        Ok(self.rank(i) - before - after)
    }

    /// Whether every generator of `J^i_k` vanishes at `point`.
    pub fn jump_locus_contains(&self, i: i64, k: i64, point: &[F]) -> Result<bool> {
        self.check_point(point)?;
        Ok(self
            .jump_ideal(i, k)?
            .reduced_gb()
            .iter()
            .all(|g| g.eval(point).is_zero()))
    }

    /// Substitutes `x_ν ↦ x_ν + P_ν`, recentring the family at `point`.
    pub fn translate(&self, point: &[F]) -> Result<FreeComplex<F>> {
        self.check_point(point)?;
        let images: Vec<Polynomial<F>> = (0..self.ring.nvars())
            .map(|v| {
                &Polynomial::var(&self.ring, v)
                    + &Polynomial::constant(&self.ring, point[v].clone())
            })
            .collect();
        let diffs = self
            .diffs
            .iter()
            .map(|d| d.map_entries(|p| p.substitute(&images)))
            .collect();
        FreeComplex::new(&self.ring, self.lo, self.ranks.clone(), diffs)
    }

    /// Adds the acyclic summand `R --1--> R` in degrees `i, i+1`, a homotopy
    /// equivalence that leaves every fiber cohomology unchanged.
    pub fn with_trivial_summand(&self, i: i64) -> Result<FreeComplex<F>> {
        let lo = self.lo.min(i);
        let hi = self.hi().max(i + 1);
        let ranks: Vec<usize> = (lo..=hi)
            .map(|d| self.rank(d) + usize::from(d == i || d == i + 1))
            .collect();
        let diffs = (lo..hi)
            .map(|d| {
                let old = self.diff(d);
                let mut rows: Vec<Vec<Polynomial<F>>> = old.rows().to_vec();
                let extra_col = usize::from(d == i || d == i + 1);
                let extra_row = usize::from(d + 1 == i || d + 1 == i + 1);
                for row in &mut rows {
                    row.extend(std::iter::repeat_n(Polynomial::zero(&self.ring), extra_col));
                }
                if extra_row == 1 {
                    let mut row = vec![Polynomial::zero(&self.ring); old.ncols() + extra_col];
                    if d == i {
                        *row.last_mut().unwrap() = Polynomial::one(&self.ring);
                    }
                    rows.push(row);
                }
                PolyMatrix::new(&self.ring, rows, old.ncols() + extra_col)
            })
            .collect::<Result<Vec<_>>>()?;
        FreeComplex::new(&self.ring, lo, ranks, diffs)
    }
}

impl<F: Field> PartialEq for FreeComplex<F> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring)
            && self.lo == other.lo
            && self.ranks == other.ranks
            && self.diffs == other.diffs
    }
}

/// Basis of `Λ^i` on `g` generators: sorted `i`-subsets in lexicographic order.
pub fn exterior_basis(g: usize, i: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, g: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in start..g {
            cur.push(v);
            rec(v + 1, g, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if i <= g {
        rec(0, g, i, &mut Vec::new(), &mut out);
    }
    out
}

/// Matrix of left multiplication `e_ν ∧ − : Λ^i → Λ^{i+1}`, with sign
/// `(−1)^{#{s ∈ S : s < ν}}` on `e_S`.
pub fn wedge_matrix<F: Field>(g: usize, i: usize, nu: usize) -> Matrix<F> {
    let src = exterior_basis(g, i);
    let dst = exterior_basis(g, i + 1);
    let mut m = Matrix::zeros(dst.len(), src.len());
    for (c, s) in src.iter().enumerate() {
        if s.contains(&nu) {
            continue;
        }
        let before = s.iter().filter(|&&x| x < nu).count();
        let mut t = s.clone();
        t.insert(before, nu);
        let r = dst.iter().position(|d| *d == t).expect("subset present");
        m[(r, c)] = if before % 2 == 0 { F::one() } else { -F::one() };
    }
    m
}

/// The Koszul complex `Λ^• ℚ^g ⊗ R` with differential `∧ Σ x_ν e_ν` over
/// `R = ℚ[x1..xg]`.
pub fn koszul_family<F: Field>(g: usize) -> Result<FreeComplex<F>> {
    if g < 1 {
        return Err(Error::OutOfRange("the Koszul family needs g >= 1".into()));
    }
    let ring = Ring::numbered("x", g);
    let ranks: Vec<usize> = (0..=g).map(|i| exterior_basis(g, i).len()).collect();
    let diffs = (0..g)
        .map(|i| {
            let mats: Vec<Matrix<F>> = (0..g).map(|nu| wedge_matrix(g, i, nu)).collect();
            let rows = (0..ranks[i + 1])
                .map(|r| {
                    (0..ranks[i])
                        .map(|c| {
                            let mut p = Polynomial::zero(&ring);
                            for (nu, m) in mats.iter().enumerate() {
                                if !m[(r, c)].is_zero() {
                                    p = &p + &Polynomial::var(&ring, nu).scale(&m[(r, c)]);
                                }
                            }
                            p
                        })
                        .collect()
                })
                .collect();
            PolyMatrix::new(&ring, rows, ranks[i])
        })
        .collect::<Result<Vec<_>>>()?;
    FreeComplex::new(&ring, 0, ranks, diffs)
}
