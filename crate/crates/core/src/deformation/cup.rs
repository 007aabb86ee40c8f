use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::linalg::{Matrix, Subspace};
use crate::poly::{Polynomial, Ring};

/// Cohomology-level structure constants around degree `i`.
///
/// - `mu2[a][b][c]`: coefficient of `η_c` in `μ₂(ψ_a, ψ_b) ∈ H²(End E)`.
/// - `act_prev[ν][z][c]`: coefficient of basis element `c` of `H^i` in
///   `ψ_ν · ζ_z` for `ζ_z` a basis element of `H^{i−1}`.
/// - `act_i[ν][x][c]`: the same for `H^i × H¹ → H^{i+1}`.
///
/// No symmetry is assumed on `μ₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CupData<F> {
    pub degree: Option<i64>,
    pub q: usize,
    pub dim_prev: usize,
    pub dim_i: usize,
    pub dim_next: usize,
    pub dim_h2: usize,
    pub mu2: Vec<Vec<Vec<F>>>,
    pub act_prev: Vec<Vec<Vec<F>>>,
    pub act_i: Vec<Vec<Vec<F>>>,
}

fn check_shape<F>(name: &str, t: &[Vec<Vec<F>>], a: usize, b: usize, c: usize) -> Result<()> {
    let ok = t.len() == a
        && t.iter()
            .all(|x| x.len() == b && x.iter().all(|y| y.len() == c));
    if ok {
        Ok(())
    } else {
        Err(Error::Structural(format!(
            "{name} must have shape {a}x{b}x{c}"
        )))
    }
}

impl<F: Field> CupData<F> {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        degree: Option<i64>,
        q: usize,
        dim_prev: usize,
        dim_i: usize,
        dim_next: usize,
        dim_h2: usize,
        mu2: Vec<Vec<Vec<F>>>,
        act_prev: Vec<Vec<Vec<F>>>,
        act_i: Vec<Vec<Vec<F>>>,
    ) -> Result<Self> {
        check_shape("mu2", &mu2, q, q, dim_h2)?;
        check_shape("act_prev", &act_prev, q, dim_prev, dim_i)?;
        check_shape("act_i", &act_i, q, dim_i, dim_next)?;
        Ok(CupData {
            degree,
            q,
            dim_prev,
            dim_i,
            dim_next,
            dim_h2,
            mu2,
            act_prev,
            act_i,
        })
    }

    /// `ℚ[x1..xq]`, coordinates on `H¹(End E)` in the basis `ψ`.
    pub fn coordinate_ring(&self) -> Arc<Ring> {
        Ring::numbered("x", self.q)
    }

    /// `μ₂(v, v)` for a point `v` of `H¹(End E)`.
    pub fn quadratic(&self, v: &[F]) -> Vec<F> {
        (0..self.dim_h2)
            .map(|c| {
                let mut s = F::zero();
                for a in 0..self.q {
                    for b in 0..self.q {
                        let t = &self.mu2[a][b][c];
                        if !t.is_zero() {
                            s += &(t.clone() * &v[a] * &v[b]);
                        }
                    }
                }
                s
            })
            .collect()
    }

    /// The quadratic cone: generated by the coordinates of `μ₂(v, v)` with
    /// `v = Σ x_ν ψ_ν`.
    pub fn cone_ideal(&self) -> Ideal<F> {
        let ring = self.coordinate_ring();
        let gens = (0..self.dim_h2)
            .map(|c| {
                let mut p = Polynomial::zero(&ring);
                for a in 0..self.q {
                    for b in 0..self.q {
                        let t = &self.mu2[a][b][c];
                        if !t.is_zero() {
                            let xy = &Polynomial::var(&ring, a) * &Polynomial::var(&ring, b);
                            p = p.add_scaled(&xy, t);
                        }
                    }
                }
                p
            })
            .collect();
        Ideal::new(&ring, gens).expect("same ring")
    }

    /// One row per scalar condition `⟨ψ(v) · basis element, coordinate⟩ = 0`.
    fn constraints(&self) -> Matrix<F> {
        let mut rows = Vec::new();
        for z in 0..self.dim_prev {
            for c in 0..self.dim_i {
                rows.push(
                    (0..self.q)
                        .map(|nu| self.act_prev[nu][z][c].clone())
                        .collect(),
                );
            }
        }
        for x in 0..self.dim_i {
            for c in 0..self.dim_next {
                rows.push((0..self.q).map(|nu| self.act_i[nu][x][c].clone()).collect());
            }
        }
        Matrix::from_rows_with_cols(rows, self.q)
    }

    /// The subspace `H` of `H¹(End E)` annihilating both `H^{i−1}` and `H^i`,
    /// together with its linear ideal.
    pub fn annihilator(&self, i: i64) -> Result<Annihilator<F>> {
        if let Some(d) = self.degree {
            if d != i {
                return Err(Error::OutOfRange(format!(
                    "cup data is centred at degree {d}, not {i}"
                )));
            }
        }
        let cons = self.constraints();
        let (rref, pivots) = cons.rref();
        let subspace = Subspace::spanned_by(self.q, &cons.nullspace());
        let ring = self.coordinate_ring();
        let forms = (0..pivots.len())
            .map(|r| {
                let mut p = Polynomial::zero(&ring);
                for (nu, c) in rref.row(r).iter().enumerate() {
                    if !c.is_zero() {
                        p = p.add_scaled(&Polynomial::var(&ring, nu), c);
                    }
                }
                p
            })
            .collect();
        Ok(Annihilator {
            subspace,
            ideal: Ideal::new(&ring, forms)?,
        })
    }
}

/// `H` as a subspace and as the ideal of linear forms vanishing on it.
#[derive(Clone, Debug)]
pub struct Annihilator<F> {
    pub subspace: Subspace<F>,
    pub ideal: Ideal<F>,
}
