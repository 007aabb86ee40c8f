//! Seeded case generators for the verification suites.
//!
//! All randomness comes from ChaCha8 seeded with the suite seed; case `n`
//! reads from stream `n`, so every case can be regenerated on its own and
//! suites are independent of evaluation order.

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::artinian::{AMatrix, ArtinianAlgebra, Element, MapSpec};
use crate::deformation::AlgebraModel;
use crate::error::Result;
use crate::field::{Field, Rational};
use crate::freecomplex::{FreeComplex, PolyMatrix};
use crate::linalg::Matrix;
use crate::poly::{Monomial, Polynomial, Ring};

pub type CaseRng = ChaCha8Rng;

/// The generator for case `index` of a suite run with `seed`.
pub fn case_rng(seed: u64, index: u64) -> CaseRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// An integer in `-bound..=bound`.
pub fn small_int<F: Field>(rng: &mut CaseRng, bound: i64) -> F {
    F::from_i64(rng.random_range(-bound..=bound))
}

/// A rational `p/q` with `|p| ≤ 5`, `1 ≤ q ≤ 3`.
pub fn small_rational<F: Field>(rng: &mut CaseRng) -> F {
    let p: i64 = rng.random_range(-5..=5);
    let q: i64 = rng.random_range(1..=3);
    F::from_rational(&Rational::new(p.into(), q.into()))
}

/// A point with rational coordinates, each zero with probability `3/10`.
pub fn random_point<F: Field>(rng: &mut CaseRng, n: usize) -> Vec<F> {
    (0..n)
        .map(|_| {
            if rng.random_bool(0.3) {
                F::zero()
            } else {
                small_rational(rng)
            }
        })
        .collect()
}

/// `ℚ[ε]/ε²`, `ℚ[ε]/ε³`, `ℚ[x,y]/(x²,xy,y²)`, `ℚ[x,y]/(x,y)³`.
pub fn algebra_catalog<F: Field>() -> Vec<Arc<ArtinianAlgebra<F>>> {
    vec![
        Arc::new(ArtinianAlgebra::truncated(2)),
        Arc::new(ArtinianAlgebra::truncated(3)),
        Arc::new(
            ArtinianAlgebra::parse(&["x", "y"], &["x^2", "x*y", "y^2"]).expect("catalog algebra"),
        ),
        Arc::new(
            ArtinianAlgebra::parse(&["x", "y"], &["x^3", "x^2*y", "x*y^2", "y^3"])
                .expect("catalog algebra"),
        ),
    ]
}

/// `P_ν + Σ_μ a^μ_ν α_μ` with sparse small coefficients; a coordinate's
/// whole `m`-part is zero with probability `3/10`.
pub fn random_images<F: Field>(
    rng: &mut CaseRng,
    alg: &ArtinianAlgebra<F>,
    point: &[F],
) -> Vec<Element<F>> {
    let l = alg.length();
    point
        .iter()
        .map(|p| {
            let mut c = vec![F::zero(); l + 1];
            c[0] = p.clone();
            if !rng.random_bool(0.3) {
                for x in c.iter_mut().skip(1) {
                    if !rng.random_bool(0.4) {
                        *x = small_int(rng, 2);
                    }
                }
            }
            alg.series().from_alpha(&c)
        })
        .collect()
}

pub fn random_map<F: Field>(
    rng: &mut CaseRng,
    source: &Arc<Ring>,
    alg: &Arc<ArtinianAlgebra<F>>,
    point: Vec<F>,
) -> Result<MapSpec<F>> {
    let images = random_images(rng, alg, &point);
    MapSpec::new(source, alg, point, images)
}

/// A scalar matrix `LU` with unit-diagonal triangular factors.
pub fn unimodular<F: Field>(rng: &mut CaseRng, n: usize) -> Matrix<F> {
    let mut lower = Matrix::identity(n);
    let mut upper = Matrix::identity(n);
    for r in 0..n {
        for c in 0..r {
            lower[(r, c)] = small_int(rng, 2);
            upper[(c, r)] = small_int(rng, 2);
        }
    }
    lower.mul(&upper)
}

/// A matrix over `A` whose residue is unimodular, hence invertible over `A`.
pub fn invertible_over<F: Field>(
    rng: &mut CaseRng,
    alg: &ArtinianAlgebra<F>,
    n: usize,
) -> AMatrix<F> {
    let scalar = unimodular::<F>(rng, n);
    let rows = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let mut coords = vec![F::zero(); alg.length() + 1];
                    coords[0] = scalar[(r, c)].clone();
                    for x in coords.iter_mut().skip(1) {
                        if rng.random_bool(0.5) {
                            *x = small_int(rng, 2);
                        }
                    }
                    alg.series().from_alpha(&coords)
                })
                .collect()
        })
        .collect();
    AMatrix::new(rows, n)
}

/// A complex over `ℚ[x,y]` in degrees `0..=2` together with a map centred at
/// a point of small integer coordinates and a pair `(i, k)`.
#[derive(Clone, Debug)]
pub struct Prop21Case<F> {
    pub complex: FreeComplex<F>,
    pub map: MapSpec<F>,
    pub i: i64,
    pub k: usize,
}

enum Block<F> {
    Free(usize),
    Map(usize, Polynomial<F>),
    Koszul(Polynomial<F>, Polynomial<F>),
}

/// A polynomial of degree `≤ 2` in `x, y` vanishing at `p` with probability `3/4`.
fn entry<F: Field>(rng: &mut CaseRng, ring: &Arc<Ring>, p: &[F]) -> Polynomial<F> {
    let shifted: Vec<Polynomial<F>> = (0..2)
        .map(|v| &Polynomial::var(ring, v) - &Polynomial::constant(ring, p[v].clone()))
        .collect();
    let mut f = Polynomial::zero(ring);
    for s in &shifted {
        f = f.add_scaled(s, &small_int(rng, 2));
    }
    if rng.random_bool(0.3) {
        let a = rng.random_range(0..2);
        let b = rng.random_range(0..2);
        f = f.add_scaled(&(&shifted[a] * &shifted[b]), &small_int(rng, 1));
    }
    if rng.random_bool(0.25) {
        f = f.add_scaled(
            &Polynomial::one(ring),
            &F::from_i64(rng.random_range(1..=2)),
        );
    }
    f
}

pub fn prop21_case<F: Field>(seed: u64, index: u64) -> Result<Prop21Case<F>> {
    let mut rng = case_rng(seed, index);
    let ring = Ring::new(&["x", "y"]);
    let point: Vec<F> = if rng.random_bool(0.6) {
        vec![F::zero(), F::zero()]
    } else {
        (0..2).map(|_| small_int(&mut rng, 1)).collect()
    };
    let mut ranks = [0usize; 3];
    let mut blocks = Vec::new();
    let count = rng.random_range(1..=3);
    for _ in 0..count {
        let block = match rng.random_range(0..3) {
            0 => Block::Koszul(
                entry(&mut rng, &ring, &point),
                entry(&mut rng, &ring, &point),
            ),
            1 => Block::Map(rng.random_range(0..2), entry(&mut rng, &ring, &point)),
            _ => Block::Free(rng.random_range(0..3)),
        };
        let need = match &block {
            Block::Koszul(..) => [1, 2, 1],
            Block::Map(0, _) => [1, 1, 0],
            Block::Map(_, _) => [0, 1, 1],
            Block::Free(a) => {
                let mut r = [0; 3];
                r[*a] = 1;
                r
            }
        };
        if (0..3).all(|d| ranks[d] + need[d] <= 3) {
            for d in 0..3 {
                ranks[d] += need[d];
            }
            blocks.push(block);
        }
    }
    let zero = Polynomial::zero(&ring);
    let mut diffs: Vec<Vec<Vec<Polynomial<F>>>> = (0..2)
        .map(|d| vec![vec![zero.clone(); ranks[d]]; ranks[d + 1]])
        .collect();
    let mut offset = [0usize; 3];
    for block in &blocks {
        match block {
            Block::Koszul(f, g) => {
                let (o0, o1, o2) = (offset[0], offset[1], offset[2]);
                diffs[0][o1][o0] = f.clone();
                diffs[0][o1 + 1][o0] = g.clone();
                diffs[1][o2][o1] = -g;
                diffs[1][o2][o1 + 1] = f.clone();
                offset[0] += 1;
                offset[1] += 2;
                offset[2] += 1;
            }
            Block::Map(a, f) => {
                diffs[*a][offset[a + 1]][offset[*a]] = f.clone();
                offset[*a] += 1;
                offset[a + 1] += 1;
            }
            Block::Free(a) => offset[*a] += 1,
        }
    }
    let bases: Vec<Matrix<F>> = ranks.iter().map(|&r| unimodular(&mut rng, r)).collect();
    let diffs = diffs
        .into_iter()
        .enumerate()
        .map(|(d, rows)| {
            let m = PolyMatrix::new(&ring, rows, ranks[d])?;
            let inv = crate::artinian::invert(&bases[d]).expect("unimodular");
            Ok(scalar_conj(&ring, &bases[d + 1], &m, &inv))
        })
        .collect::<Result<Vec<_>>>()?;
    let complex = FreeComplex::new(&ring, 0, ranks.to_vec(), diffs)?;
    let catalog = algebra_catalog::<F>();
    let alg = catalog[rng.random_range(0..catalog.len())].clone();
    let map = random_map(&mut rng, &ring, &alg, point.clone())?;
    let i = rng.random_range(0..3i64);
    let fiber = complex.fiber_cohomology_dim(&point, i)?;
    let k = if rng.random_bool(0.85) {
        fiber
    } else {
        rng.random_range(0..=3)
    };
    Ok(Prop21Case { complex, map, i, k })
}

/// `U · M · V` for scalar `U`, `V`.
fn scalar_conj<F: Field>(
    ring: &Arc<Ring>,
    u: &Matrix<F>,
    m: &PolyMatrix<F>,
    v: &Matrix<F>,
) -> PolyMatrix<F> {
    let rows = (0..u.nrows())
        .map(|r| {
            (0..v.ncols())
                .map(|c| {
                    let mut p = Polynomial::zero(ring);
                    for a in 0..m.nrows() {
                        if u[(r, a)].is_zero() {
                            continue;
                        }
                        for b in 0..m.ncols() {
                            let s = u[(r, a)].clone() * &v[(b, c)];
                            if !s.is_zero() {
                                p = p.add_scaled(m.entry(a, b), &s);
                            }
                        }
                    }
                    p
                })
                .collect()
        })
        .collect();
    PolyMatrix::new(ring, rows, v.ncols()).expect("shape preserved")
}

/// `σ = U · diag(I_{c−1}, 0) · V` with `U`, `V` invertible over `A`.
#[derive(Clone, Debug)]
pub struct LemmaImageCase<F> {
    pub algebra: Arc<ArtinianAlgebra<F>>,
    pub sigma: AMatrix<F>,
    pub c: i64,
}

pub fn lemma_image_case<F: Field>(seed: u64, index: u64) -> LemmaImageCase<F> {
    let mut rng = case_rng(seed, index);
    let catalog = algebra_catalog::<F>();
    let alg = catalog[rng.random_range(0..catalog.len())].clone();
    let rows = rng.random_range(1..=3);
    let cols = rng.random_range(1..=3);
    let c = rng.random_range(1..=rows.min(cols) + 1);
    let diag = AMatrix::new(
        (0..rows)
            .map(|r| {
                (0..cols)
                    .map(|s| {
                        if r == s && r + 1 < c {
                            alg.one()
                        } else {
                            alg.zero()
                        }
                    })
                    .collect()
            })
            .collect(),
        cols,
    );
    let u = invertible_over(&mut rng, &alg, rows);
    let v = invertible_over(&mut rng, &alg, cols);
    let sigma = u.mul(&alg, &diag).mul(&alg, &v);
    LemmaImageCase {
        algebra: alg,
        sigma,
        c: c as i64,
    }
}

/// An exterior model with a map from a catalog algebra, a degree `i` and a
/// step `j` of the composition series.
#[derive(Clone, Debug)]
pub struct ModelCase<F> {
    pub model: AlgebraModel<F>,
    pub map: MapSpec<F>,
    pub i: i64,
    pub j: usize,
}

/// `g` is drawn from `1..=3` unless given.
pub fn model_case<F: Field>(seed: u64, index: u64, g: Option<usize>) -> Result<ModelCase<F>> {
    let mut rng = case_rng(seed, index);
    let g = g.unwrap_or_else(|| rng.random_range(1..=3));
    let model = AlgebraModel::exterior(g);
    let point: Vec<F> = if rng.random_bool(0.8) {
        vec![F::zero(); g]
    } else {
        (0..g).map(|_| small_int(&mut rng, 2)).collect()
    };
    let catalog = algebra_catalog::<F>();
    let alg = catalog[rng.random_range(0..catalog.len())].clone();
    let map = random_map(&mut rng, &Ring::numbered("x", g), &alg, point)?;
    let i = rng.random_range(0..=g as i64);
    let j = rng.random_range(0..alg.length());
    Ok(ModelCase { model, map, i, j })
}

/// An exterior model with a point (the origin with probability `7/10`) and a
/// degree `i`; `k` is left to the caller.
pub fn thm_linear_case<F: Field>(
    seed: u64,
    index: u64,
    g: Option<usize>,
) -> (AlgebraModel<F>, Vec<F>, i64) {
    let mut rng = case_rng(seed, index);
    let g = g.unwrap_or_else(|| rng.random_range(1..=3));
    let point = if rng.random_bool(0.7) {
        vec![F::zero(); g]
    } else {
        (0..g).map(|_| small_int(&mut rng, 2)).collect()
    };
    let i = rng.random_range(0..=g as i64);
    (AlgebraModel::exterior(g), point, i)
}

/// Two or three generators in `ℚ[x,y,z]`, each with up to three terms of
/// degree `≤ 2`.
pub fn random_generators<F: Field>(rng: &mut CaseRng, ring: &Arc<Ring>) -> Vec<Polynomial<F>> {
    let n = ring.nvars();
    let count = rng.random_range(2..=3);
    (0..count)
        .map(|_| {
            let terms = (0..rng.random_range(1..=3))
                .map(|_| {
                    let e: Vec<u32> = (0..n).map(|_| rng.random_range(0..=1)).collect();
                    let mut e = e;
                    while e.iter().sum::<u32>() > 2 {
                        let v = rng.random_range(0..n);
                        e[v] = 0;
                    }
                    let mut c = small_int::<F>(rng, 3);
                    if c.is_zero() {
                        c = F::one();
                    }
                    (Monomial::new(e), c)
                })
                .collect();
            Polynomial::from_terms(ring, terms).expect("exponents fit the ring")
        })
        .filter(|p: &Polynomial<F>| !p.is_zero())
        .collect()
}

/// A uniformly random permutation of `0..n`.
pub fn permutation(rng: &mut CaseRng, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artinian::verify_lemma_image;

    type Q = Rational;

    #[test]
    fn streams_are_reproducible() {
        let a: Vec<u32> = (0..4).map(|_| case_rng(7, 3).random()).collect();
        let b: Vec<u32> = (0..4).map(|_| case_rng(7, 3).random()).collect();
        assert_eq!(a, b);
        let c: u64 = case_rng(7, 4).random();
        let d: u64 = case_rng(7, 3).random();
        assert_ne!(c, d);
    }

    #[test]
    fn catalog_dimensions() {
        let dims: Vec<usize> = algebra_catalog::<Q>().iter().map(|a| a.dim()).collect();
        assert_eq!(dims, vec![2, 3, 3, 6]);
    }

    #[test]
    fn prop21_cases_are_complexes() {
        for n in 0..10 {
            let case = prop21_case::<Q>(11, n).unwrap();
            assert!(case.complex.ranks().iter().all(|&r| r <= 3));
            assert_eq!(case.map.point().len(), 2);
        }
    }

    #[test]
    fn lemma_cases_satisfy_hypotheses() {
        for n in 0..10 {
            let case = lemma_image_case::<Q>(5, n);
            let v = verify_lemma_image(&case.algebra, &case.sigma, case.c).unwrap();
            assert!(v.precondition_holds(), "case {n}");
        }
    }

    #[test]
    fn model_cases_have_valid_steps() {
        for n in 0..10 {
            let case = model_case::<Q>(3, n, None).unwrap();
            assert!(case.j < case.map.algebra().length());
            assert!(case.i <= case.model.g() as i64);
        }
    }
}
