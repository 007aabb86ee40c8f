//! Ideals with a frozen reduced Gröbner basis.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner;
use crate::poly::{same_ring, Monomial, MonomialOrder, Polynomial, Ring};

/// An ideal of a polynomial ring. The reduced Gröbner basis is computed once at
/// construction; the value is immutable afterwards.
#[derive(Clone, Debug)]
pub struct Ideal<F> {
    ring: Arc<Ring>,
    generators: Vec<Polynomial<F>>,
    gb: Vec<Polynomial<F>>,
}

/// Dimension of `R/I` over the ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientDim {
    Finite(usize),
    Infinite,
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial<F>>) -> Result<Self> {
        if let Some(bad) = generators.iter().find(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch(format!(
                "generator `{bad}` lives in {} but the ideal is in {ring}",
                bad.ring()
            )));
        }
        let gb = groebner::reduced_basis(ring, &generators);
        Ok(Ideal {
            ring: ring.clone(),
            generators,
            gb,
        })
    }

    /// Parses each generator with [`Polynomial::parse`].
    pub fn parse(ring: &Arc<Ring>, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| Polynomial::parse(ring, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
            gb: Vec::new(),
        }
    }

    pub fn unit(ring: &Arc<Ring>) -> Self {
        let one = Polynomial::one(ring);
        Ideal {
            ring: ring.clone(),
            generators: vec![one.clone()],
            gb: vec![one],
        }
    }

    /// `m^n` for the ideal `m` of the origin.
    pub fn origin_power(ring: &Arc<Ring>, n: u32) -> Self {
        let gens = monomials_of_degree(ring.nvars(), n)
            .into_iter()
            .map(|m| Polynomial::monomial(ring, m, F::one()))
            .collect();
        Self::new(ring, gens).expect("same ring")
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    /// The reduced Gröbner basis, ascending by leading monomial.
    pub fn reduced_gb(&self) -> &[Polynomial<F>] {
        &self.gb
    }

    pub fn is_zero(&self) -> bool {
        self.gb.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb.len() == 1 && self.gb[0].is_constant()
    }

    /// True when the reduced basis consists of affine-linear polynomials.
    pub fn is_linear(&self) -> bool {
        self.gb.iter().all(Polynomial::is_linear)
    }

    fn check(&self, other_ring: &Arc<Ring>) -> Result<()> {
        if same_ring(&self.ring, other_ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "{} vs {}",
                self.ring, other_ring
            )))
        }
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.check(f.ring())?;
        Ok(groebner::normal_form(f, &self.gb))
    }

    pub fn contains_poly(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// `other ⊆ self`: every generator of `other` reduces to zero.
    pub fn contains(&self, other: &Ideal<F>) -> Result<bool> {
        self.check(&other.ring)?;
        Ok(other
            .gb
            .iter()
            .all(|g| groebner::normal_form(g, &self.gb).is_zero()))
    }

    pub fn equals(&self, other: &Ideal<F>) -> Result<bool> {
        Ok(self.contains(other)? && other.contains(self)?)
    }

    /// `I + J`.
    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check(&other.ring)?;
        if self.is_unit() || other.is_zero() {
            return Ok(self.clone());
        }
        if other.is_unit() || self.is_zero() {
            return Ok(other.clone());
        }
        let mut gens = self.gb.clone();
        gens.extend(other.gb.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// `I ∩ J` by eliminating `t` from `t·I + (1 − t)·J`.
    pub fn intersect(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check(&other.ring)?;
        if self.is_zero() || other.is_unit() {
            return Ok(self.clone());
        }
        if other.is_zero() || self.is_unit() {
            return Ok(other.clone());
        }
        if self.contains(other)? {
            return Ok(other.clone());
        }
        if other.contains(self)? {
            return Ok(self.clone());
        }
        let n = self.ring.nvars();
        let mut vars = vec!["__t".to_string()];
        vars.extend(self.ring.vars().iter().cloned());
        let ext = Ring::with_order(&vars, MonomialOrder::Block(1));
        let shift: Vec<usize> = (1..=n).collect();
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens = Vec::new();
        for g in &self.gb {
            gens.push(&t * &g.map_vars(&ext, &shift));
        }
        for g in &other.gb {
            gens.push(&one_minus_t * &g.map_vars(&ext, &shift));
        }
        let gb = groebner::reduced_basis(&ext, &gens);
        let back: Vec<usize> = std::iter::once(0).chain(0..n).collect();
        let kept = gb
            .iter()
            .filter(|g| !g.involves_var(0))
            .map(|g| g.map_vars(&self.ring, &back))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// `I ∩ k[kept variables]`, returned as an ideal of the same ring.
    pub fn eliminate(&self, drop: &[usize]) -> Result<Ideal<F>> {
        let n = self.ring.nvars();
        if let Some(&bad) = drop.iter().find(|&&v| v >= n) {
            return Err(Error::OutOfRange(format!(
                "variable index {bad} in a ring with {n} variables"
            )));
        }
        if drop.is_empty() || self.is_zero() {
            return Ok(self.clone());
        }
        // new position of each old variable: dropped block first
        let mut order: Vec<usize> = drop.to_vec();
        order.sort_unstable();
        order.dedup();
        let split = order.len();
        order.extend((0..n).filter(|v| !drop.contains(v)));
        let mut to_new = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            to_new[old] = new;
        }
        let vars: Vec<String> = order.iter().map(|&v| self.ring.vars()[v].clone()).collect();
        let ext = Ring::with_order(&vars, MonomialOrder::Block(split));
        let gens: Vec<_> = self.gb.iter().map(|g| g.map_vars(&ext, &to_new)).collect();
        let gb = groebner::reduced_basis(&ext, &gens);
        let kept = gb
            .iter()
            .filter(|g| (0..split).all(|v| !g.involves_var(v)))
            .map(|g| g.map_vars(&self.ring, &order))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// Monomials outside the initial ideal, in degree-then-input order, or
    /// `None` when there are infinitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        let n = self.ring.nvars();
        if self.is_unit() {
            return Some(Vec::new());
        }
        let leads: Vec<&Monomial> = self
            .gb
            .iter()
            .filter_map(|g| g.leading_monomial())
            .collect();
        let mut bound = vec![None; n];
        for lm in &leads {
            if let Some(v) = lm.pure_power_var() {
                let e = lm.exponents()[v];
                bound[v] = Some(bound[v].map_or(e, |b: u32| b.min(e)));
            }
        }
        let bound: Vec<u32> = bound.into_iter().collect::<Option<Vec<_>>>()?;
        let mut out = Vec::new();
        let mut e = vec![0u32; n];
        loop {
            let m = Monomial::new(e.clone());
            if !leads.iter().any(|lm| lm.divides(&m)) {
                out.push(m);
            }
            // odometer over the box below the pure powers
            let mut v = 0;
            loop {
                if v == n {
                    sort_degree_then_input(&mut out);
                    return Some(out);
                }
                e[v] += 1;
                if e[v] < bound[v] {
                    break;
                }
                e[v] = 0;
                v += 1;
            }
        }
    }

    pub fn quotient_dim(&self) -> QuotientDim {
        match self.standard_monomials() {
            Some(s) => QuotientDim::Finite(s.len()),
            None => QuotientDim::Infinite,
        }
    }
}

/// Ascending degree; within a degree, lexicographically descending exponents
/// (so `x^2, x*y, y^2`).
pub fn sort_degree_then_input(monomials: &mut [Monomial]) {
    monomials.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| b.exponents().cmp(a.exponents()))
    });
}

pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u32>, left: usize, degree: u32, out: &mut Vec<Monomial>) {
        if left == 1 {
            prefix.push(degree);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=degree).rev() {
            prefix.push(e);
            rec(prefix, left - 1, degree - e, out);
            prefix.pop();
        }
    }
    if nvars == 0 {
        return if degree == 0 {
            vec![Monomial::one(0)]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), nvars, degree, &mut out);
    out
}

impl<F: Field> PartialEq for Ideal<F> {
    /// Equality of reduced bases, which is ideal equality.
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.gb == other.gb
    }
}

impl<F: Field> fmt::Display for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gb.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn xy() -> Arc<Ring> {
        Ring::new(&["x", "y"])
    }

    fn ideal(r: &Arc<Ring>, g: &[&str]) -> Ideal<Rational> {
        Ideal::parse(r, g).unwrap()
    }

    #[test]
    fn normal_forms() {
        let r = xy();
        let i = ideal(&r, &["x^2", "x*y"]);
        let f = Polynomial::parse(&r, "x^2*y + y").unwrap();
        assert_eq!(i.normal_form(&f).unwrap().to_string(), "y");
        assert!(i.normal_form(&Polynomial::zero(&r)).unwrap().is_zero());
        let j = ideal(&r, &["x - 1"]);
        assert_eq!(
            j.normal_form(&Polynomial::var(&r, 0)).unwrap().to_string(),
            "1"
        );
    }

    #[test]
    fn sums() {
        let r = xy();
        let s = ideal(&r, &["x"]).sum(&ideal(&r, &["y"])).unwrap();
        assert_eq!(s, ideal(&r, &["x", "y"]));
        let i = ideal(&r, &["x^2 + y"]);
        assert_eq!(i.sum(&Ideal::zero(&r)).unwrap(), i);
        let s = ideal(&r, &["x^2"]).sum(&ideal(&r, &["x^3"])).unwrap();
        assert!(s.equals(&ideal(&r, &["x^2"])).unwrap());
    }

    #[test]
    fn intersections() {
        let r = xy();
        let x = ideal(&r, &["x"]);
        let y = ideal(&r, &["y"]);
        assert_eq!(x.intersect(&y).unwrap(), ideal(&r, &["x*y"]));
        let i = ideal(&r, &["x^2 - y", "x*y^2"]);
        assert_eq!(i.intersect(&Ideal::unit(&r)).unwrap(), i);
        let m = ideal(&r, &["x", "y"]);
        assert_eq!(m.intersect(&m).unwrap(), m);
        // (x^2, y) ∩ (x, y^2) = (x^2, x*y, y^2)
        let a = ideal(&r, &["x^2", "y"])
            .intersect(&ideal(&r, &["x", "y^2"]))
            .unwrap();
        assert_eq!(a, ideal(&r, &["x^2", "x*y", "y^2"]));
    }

    #[test]
    fn containment() {
        let r = xy();
        assert!(ideal(&r, &["x"]).contains(&ideal(&r, &["x^2"])).unwrap());
        assert!(!ideal(&r, &["x^2"]).contains(&ideal(&r, &["x"])).unwrap());
        assert!(ideal(&r, &["x^2", "x*y", "y^2"])
            .contains(&ideal(&r, &["(x+y)^2"]))
            .unwrap());
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let r = xy();
        let s = Ring::new(&["u"]);
        let p = Polynomial::<Rational>::var(&s, 0);
        assert!(matches!(
            Ideal::new(&r, vec![p.clone()]),
            Err(Error::RingMismatch(_))
        ));
        assert!(ideal(&r, &["x"]).normal_form(&p).is_err());
        assert!(ideal(&r, &["x"]).contains(&Ideal::zero(&s)).is_err());
    }

    #[test]
    fn standard_monomial_counts() {
        let r = xy();
        let i = ideal(&r, &["x^2", "x*y", "y^2"]);
        let sm: Vec<Vec<u32>> = i
            .standard_monomials()
            .unwrap()
            .iter()
            .map(|m| m.exponents().to_vec())
            .collect();
        assert_eq!(sm, vec![vec![0, 0], vec![1, 0], vec![0, 1]]);
        assert_eq!(i.quotient_dim(), QuotientDim::Finite(3));
        assert_eq!(
            Ideal::<Rational>::unit(&r).quotient_dim(),
            QuotientDim::Finite(0)
        );
        assert_eq!(ideal(&r, &["x"]).quotient_dim(), QuotientDim::Infinite);
    }

    #[test]
    fn elimination() {
        let r = Ring::new(&["t", "x", "y"]);
        let i = ideal(&r, &["t*x", "(1 - t)*y"]).eliminate(&[0]).unwrap();
        assert_eq!(i, ideal(&r, &["x*y"]));
        let i = ideal(&r, &["x - t", "y - t^2"]).eliminate(&[0]).unwrap();
        assert_eq!(i, ideal(&r, &["y - x^2"]));
        assert!(Ideal::<Rational>::zero(&r)
            .eliminate(&[0])
            .unwrap()
            .is_zero());
        assert!(ideal(&r, &["x"]).eliminate(&[7]).is_err());
    }

    #[test]
    fn origin_powers() {
        let r = xy();
        let m2 = Ideal::<Rational>::origin_power(&r, 2);
        assert_eq!(m2, ideal(&r, &["x^2", "x*y", "y^2"]));
        assert!(Ideal::<Rational>::origin_power(&r, 0).is_unit());
    }
}
