use crate::artinian::{AComplex, ArtinianAlgebra, MapSpec};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{cohomology, Matrix, Quotient};

use super::AlgebraModel;

/// `d^i` of a complex over `A` as a linear map in the basis `r ⊗ α_h`, index
/// `r·dim A + h`.
fn alpha_differential<F: Field>(
    alg: &ArtinianAlgebra<F>,
    complex: &AComplex<F>,
    i: i64,
) -> Matrix<F> {
    let n = alg.dim();
    let series = alg.series();
    let d = complex.diff(i);
    let mut out = Matrix::zeros(d.nrows() * n, d.ncols() * n);
    for r in 0..d.nrows() {
        for c in 0..d.ncols() {
            let a = d.entry(r, c);
            for h in 0..n {
                let col = series.to_alpha(&alg.mul(a, &series.alpha(h)));
                for (t, x) in col.into_iter().enumerate() {
                    out[(r * n + t, c * n + h)] = x;
                }
            }
        }
    }
    out
}

/// Rows and columns with `α`-index `≤ j`: the differential of `E_j = E_A ⊗ A/m_j`.
fn truncate<F: Field>(d: &Matrix<F>, n: usize, j: usize) -> Matrix<F> {
    let keep = |len: usize| (0..len).filter(|x| x % n <= j).collect::<Vec<_>>();
    let (rows, cols) = (keep(d.nrows()), keep(d.ncols()));
    let mut out = Matrix::zeros(rows.len(), cols.len());
    for (a, &r) in rows.iter().enumerate() {
        for (b, &c) in cols.iter().enumerate() {
            out[(a, b)] = d[(r, c)].clone();
        }
    }
    out
}

/// The boundary map of `0 → E → E_{j+1} → E_j → 0` in degree `i − 1`.
#[derive(Clone, Debug)]
pub struct ConnectingMap<F> {
    pub j: usize,
    pub i: i64,
    /// `δ : H^{i−1}(E_j) → H^i(E)` in the echelon bases of both sides.
    pub delta: Matrix<F>,
    /// `H^{i−1}(E) → H^{i−1}(E_j) → H^i(E)`, `[ζ] ↦ δ[ζ ᾱ_j]`.
    pub composite: Matrix<F>,
}

/// Snake lemma on `E_{j+1}`: lift a cycle of `E_j` by zero in the `ᾱ_{j+1}`
/// slot, apply the differential and read off the `ᾱ_{j+1}` component.
pub fn connecting_map<F: Field>(
    model: &AlgebraModel<F>,
    map: &MapSpec<F>,
    j: usize,
    i: i64,
) -> Result<ConnectingMap<F>> {
    let alg = map.algebra().clone();
    let l = alg.length();
    if j >= l {
        return Err(Error::OutOfRange(format!("j = {j} must lie in 0..{l}")));
    }
    let point = map.point().to_vec();
    let family = model.family_over(&point, map)?;
    let n = alg.dim();
    let (r_prev, r_i) = (model.rank(i - 1), model.rank(i));
    let d_full = alpha_differential(&alg, &family, i - 1);
    let d_next = truncate(&d_full, n, j + 1);
    let fiber_i = model.fiber_cohomology(&point, i)?;
    let fiber_prev = model.fiber_cohomology(&point, i - 1)?;

    // Coordinates in E_{j+1} use stride j + 2, in E_j stride j + 1.
    let boundary = |z: &[F]| -> Result<Vec<F>> {
        let mut lift = vec![F::zero(); r_prev * (j + 2)];
        for r in 0..r_prev {
            lift[r * (j + 2)..r * (j + 2) + j + 1]
                .clone_from_slice(&z[r * (j + 1)..(r + 1) * (j + 1)]);
        }
        let image = d_next.mul_vec(&lift);
        let mut w = Vec::with_capacity(r_i);
        for r in 0..r_i {
            let block = &image[r * (j + 2)..(r + 1) * (j + 2)];
            if block[..=j].iter().any(|x| !x.is_zero()) {
                return Err(Error::Structural(
                    "the lifted class is not a cycle of E_j".into(),
                ));
            }
            w.push(block[j + 1].clone());
        }
        if !fiber_i.is_cycle_class(&w) {
            return Err(Error::Structural(
                "the boundary is not a cycle of the fiber".into(),
            ));
        }
        Ok(fiber_i.coords(&w))
    };

    let h_j: Quotient<F> = cohomology(
        r_prev * (j + 1),
        Some(&truncate(&alpha_differential(&alg, &family, i - 2), n, j)),
        Some(&truncate(&d_full, n, j)),
    );
    let delta_cols = h_j
        .representatives()
        .iter()
        .map(|z| boundary(z))
        .collect::<Result<Vec<_>>>()?;
    let composite_cols = fiber_prev
        .representatives()
        .iter()
        .map(|zeta| {
            let mut z = vec![F::zero(); r_prev * (j + 1)];
            for r in 0..r_prev {
                z[r * (j + 1) + j] = zeta[r].clone();
            }
            boundary(&z)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConnectingMap {
        j,
        i,
        delta: Matrix::from_columns(fiber_i.dim(), &delta_cols),
        composite: Matrix::from_columns(fiber_i.dim(), &composite_cols),
    })
}

/// The snake-lemma composite against two closed forms: cup with the single
/// derivative `Σ_ν a^{j+1}_ν ψ_ν`, and cup with `Σ_ν Σ_μ a^μ_ν c_μ ψ_ν`
/// where `c_μ` is the `α_{j+1}`-coefficient of `α_μ α_j`.
#[derive(Clone, Debug)]
pub struct BoundaryVerdict<F> {
    pub j: usize,
    pub i: i64,
    pub connecting: Matrix<F>,
    pub formula: Matrix<F>,
    pub extension: Matrix<F>,
    pub formula_holds: bool,
    pub extension_holds: bool,
}

pub fn verify_boundary_formula<F: Field>(
    model: &AlgebraModel<F>,
    map: &MapSpec<F>,
    j: usize,
    i: i64,
) -> Result<BoundaryVerdict<F>> {
    let cm = connecting_map(model, map, j, i)?;
    let alg = map.algebra();
    let series = alg.series();
    let point = map.point().to_vec();
    let fiber_i = model.fiber_cohomology(&point, i)?;
    let fiber_prev = model.fiber_cohomology(&point, i - 1)?;
    let a = map.alpha_coefficients();
    let alpha_j = series.alpha(j);
    let c: Vec<F> = (1..=alg.length())
        .map(|mu| series.to_alpha(&alg.mul(&series.alpha(mu), &alpha_j))[j + 1].clone())
        .collect();
    let g = model.g();
    let formula_coeffs: Vec<F> = a[j].clone();
    let extension_coeffs: Vec<F> = (0..g)
        .map(|nu| {
            let mut s = F::zero();
            for (mu, cm) in c.iter().enumerate() {
                s += &(a[mu][nu].clone() * cm);
            }
            s
        })
        .collect();
    let cup = |coeffs: &[F]| -> Matrix<F> {
        let cols: Vec<Vec<F>> = fiber_prev
            .representatives()
            .iter()
            .map(|zeta| {
                let mut v = vec![F::zero(); model.rank(i)];
                for (nu, x) in coeffs.iter().enumerate() {
                    if !x.is_zero() {
                        let bz = model.op(nu, i - 1).mul_vec(zeta);
                        for (t, y) in v.iter_mut().zip(bz) {
                            *t += &(y * x);
                        }
                    }
                }
                fiber_i.coords(&v)
            })
            .collect();
        Matrix::from_columns(fiber_i.dim(), &cols)
    };
    let formula = cup(&formula_coeffs);
    let extension = cup(&extension_coeffs);
    Ok(BoundaryVerdict {
        j,
        i,
        formula_holds: formula == cm.composite,
        extension_holds: extension == cm.composite,
        connecting: cm.composite,
        formula,
        extension,
    })
}
