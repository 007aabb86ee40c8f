//! Minors by memoized Laplace expansion, over any commutative ring given by
//! an [`Arithmetic`] context.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Polynomial;

/// Largest matrix side accepted by [`minors`].
pub const MAX_SIDE: usize = 8;
/// Largest minor size accepted by [`minors`].
pub const MAX_MINOR: usize = 6;

/// Ring operations on `Elem`, carried by a context value (a polynomial ring, an
/// Artinian algebra, ...).
pub trait Arithmetic {
    type Elem: Clone;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
}

pub fn check_size(rows: usize, cols: usize, m: usize) -> Result<()> {
    if rows > MAX_SIDE || cols > MAX_SIDE {
        return Err(Error::SizeLimit(format!(
            "{rows}x{cols} matrix exceeds the {MAX_SIDE}x{MAX_SIDE} cap for minors"
        )));
    }
    if m > MAX_MINOR {
        return Err(Error::SizeLimit(format!(
            "{m}x{m} minors exceed the cap of {MAX_MINOR}"
        )));
    }
    Ok(())
}

/// All nonzero `m × m` minors of `matrix` (given as rows), in the order of
/// row subsets then column subsets, each ascending as bitmasks. Requires
/// `1 ≤ m ≤ min(rows, cols)`.
pub fn minors<A: Arithmetic>(ctx: &A, matrix: &[Vec<A::Elem>], m: usize) -> Result<Vec<A::Elem>> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    check_size(rows, cols, m)?;
    assert!(m >= 1 && m <= rows.min(cols), "minor size out of range");
    let mut memo = Memo {
        ctx,
        matrix,
        cache: HashMap::new(),
    };
    let row_sets = subsets(rows, m);
    let col_sets = subsets(cols, m);
    let mut out = Vec::new();
    for &r in &row_sets {
        for &c in &col_sets {
            let d = memo.det(r, c);
            if !ctx.is_zero(&d) {
                out.push(d);
            }
        }
    }
    Ok(out)
}

/// Determinant of a square matrix.
pub fn determinant<A: Arithmetic>(ctx: &A, matrix: &[Vec<A::Elem>]) -> A::Elem {
    let n = matrix.len();
    assert!(n <= 16, "determinant by expansion is limited to 16x16");
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    Memo {
        ctx,
        matrix,
        cache: HashMap::new(),
    }
    .det(full, full)
}

struct Memo<'a, A: Arithmetic> {
    ctx: &'a A,
    matrix: &'a [Vec<A::Elem>],
    cache: HashMap<(u32, u32), A::Elem>,
}

impl<A: Arithmetic> Memo<'_, A> {
    /// Laplace expansion along the first row of `rows`.
    fn det(&mut self, rows: u32, cols: u32) -> A::Elem {
        if rows == 0 {
            return self.ctx.one();
        }
        if let Some(d) = self.cache.get(&(rows, cols)) {
            return d.clone();
        }
        let r0 = rows.trailing_zeros() as usize;
        let rest = rows & (rows - 1);
        let mut acc = self.ctx.zero();
        let mut bits = cols;
        let mut pos = 0;
        while bits != 0 {
            let c = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let a = &self.matrix[r0][c];
            if !self.ctx.is_zero(a) {
                let sub = self.det(rest, cols & !(1 << c));
                let term = self.ctx.mul(a, &sub);
                acc = if pos % 2 == 0 {
                    self.ctx.add(&acc, &term)
                } else {
                    self.ctx.sub(&acc, &term)
                };
            }
            pos += 1;
        }
        self.cache.insert((rows, cols), acc.clone());
        acc
    }
}

/// Bitmasks of the `k`-subsets of `0..n`, ascending.
pub fn subsets(n: usize, k: usize) -> Vec<u32> {
    (0u32..(1 << n))
        .filter(|s| s.count_ones() as usize == k)
        .collect()
}

/// Arithmetic in a polynomial ring.
pub struct PolyArith<F> {
    pub ring: std::sync::Arc<crate::poly::Ring>,
    _field: std::marker::PhantomData<F>,
}

impl<F: Field> PolyArith<F> {
    pub fn new(ring: &std::sync::Arc<crate::poly::Ring>) -> Self {
        PolyArith {
            ring: ring.clone(),
            _field: std::marker::PhantomData,
        }
    }
}

impl<F: Field> Arithmetic for PolyArith<F> {
    type Elem = Polynomial<F>;
    fn zero(&self) -> Polynomial<F> {
        Polynomial::zero(&self.ring)
    }
    fn one(&self) -> Polynomial<F> {
        Polynomial::one(&self.ring)
    }
    fn is_zero(&self, a: &Polynomial<F>) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        a + b
    }
    fn sub(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        a - b
    }
    fn mul(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        a * b
    }
}

/// Arithmetic in the ground field itself.
pub struct Scalars<F>(std::marker::PhantomData<F>);

impl<F> Default for Scalars<F> {
    fn default() -> Self {
        Scalars(std::marker::PhantomData)
    }
}

impl<F: Field> Arithmetic for Scalars<F> {
    type Elem = F;
    fn zero(&self) -> F {
        F::zero()
    }
    fn one(&self) -> F {
        F::one()
    }
    fn is_zero(&self, a: &F) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &F, b: &F) -> F {
        a.clone() + b
    }
    fn sub(&self, a: &F, b: &F) -> F {
        a.clone() - b
    }
    fn mul(&self, a: &F, b: &F) -> F {
        a.clone() * b
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::poly::Ring;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn scalar_determinants() {
        let s = Scalars::<Rational>::default();
        let m = vec![
            vec![q(2), q(0), q(1)],
            vec![q(1), q(3), q(2)],
            vec![q(1), q(1), q(1)],
        ];
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(determinant(&s, &m), q(0));
        let m = vec![vec![q(1), q(2)], vec![q(3), q(4)]];
        assert_eq!(determinant(&s, &m), q(-2));
        assert_eq!(determinant(&s, &[]), q(1));
    }

    #[test]
    fn polynomial_minors() {
        let r = Ring::new(&["x", "y"]);
        let p = |s: &str| Polynomial::<Rational>::parse(&r, s).unwrap();
        let m = vec![vec![p("x"), p("y")], vec![p("y"), p("x")]];
        let ctx = PolyArith::new(&r);
        let two = minors(&ctx, &m, 2).unwrap();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].to_string(), "x^2 - y^2");
        assert_eq!(minors(&ctx, &m, 1).unwrap().len(), 4);
    }

    #[test]
    fn size_cap() {
        let s = Scalars::<Rational>::default();
        let big = vec![vec![q(1); 9]; 2];
        assert!(matches!(minors(&s, &big, 1), Err(Error::SizeLimit(_))));
        let m = vec![vec![q(1); 8]; 8];
        assert!(matches!(minors(&s, &m, 7), Err(Error::SizeLimit(_))));
    }
}
