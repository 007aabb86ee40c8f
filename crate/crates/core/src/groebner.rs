//! Buchberger's algorithm with the coprime and chain criteria, normal
//! selection strategy, and final interreduction to the reduced basis.

use std::collections::HashSet;
use std::sync::Arc;

use crate::field::Field;
use crate::poly::{Monomial, Polynomial, Ring};

/// Remainder of `f` under full multivariate division by `basis`.
pub fn normal_form<F: Field>(f: &Polynomial<F>, basis: &[Polynomial<F>]) -> Polynomial<F> {
    let ring = f.ring().clone();
    let mut p = f.clone();
    let mut rem = Vec::new();
    while let Some((m, c)) = p.leading_term() {
        let divisor = basis
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(m)));
        match divisor {
            Some(g) => {
                let (lm, lc) = g.leading_term().unwrap();
                let q = m.div(lm).unwrap();
                let coef = c.clone() * &lc.inv();
                p = p.add_scaled(&g.mul_term(&q, &F::one()), &(-coef));
            }
            None => rem.push(p.pop_leading().unwrap()),
        }
    }
    Polynomial::from_sorted_terms(&ring, rem)
}

fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>, lcm: &Monomial) -> Polynomial<F> {
    let (lf, cf) = f.leading_term().unwrap();
    let (lg, cg) = g.leading_term().unwrap();
    let a = f.mul_term(&lcm.div(lf).unwrap(), &cf.inv());
    let b = g.mul_term(&lcm.div(lg).unwrap(), &cg.inv());
    &a - &b
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// The reduced Gröbner basis of the ideal generated by `gens`, monic and
/// sorted ascending by leading monomial. The zero ideal gives an empty basis.
pub fn reduced_basis<F: Field>(ring: &Arc<Ring>, gens: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
    let mut basis: Vec<Polynomial<F>> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        if g.is_constant() {
            return vec![Polynomial::one(ring)];
        }
        basis.push(g.monic());
    }

    let mut queue: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            push_pair(&basis, &mut queue, &mut pending, i, j);
        }
    }

    while let Some(pair) = pop_smallest(ring, &mut queue) {
        pending.remove(&(pair.i, pair.j));
        let lm_i = basis[pair.i].leading_monomial().unwrap();
        let lm_j = basis[pair.j].leading_monomial().unwrap();
        if lm_i.is_coprime(lm_j) {
            continue;
        }
        if chain_criterion(&basis, &pending, &pair) {
            continue;
        }
        let s = s_polynomial(&basis[pair.i], &basis[pair.j], &pair.lcm);
        let r = normal_form(&s, &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return vec![Polynomial::one(ring)];
        }
        basis.push(r.monic());
        let n = basis.len() - 1;
        for i in 0..n {
            push_pair(&basis, &mut queue, &mut pending, i, n);
        }
    }

    interreduce(ring, basis)
}

fn push_pair<F: Field>(
    basis: &[Polynomial<F>],
    queue: &mut Vec<Pair>,
    pending: &mut HashSet<(usize, usize)>,
    i: usize,
    j: usize,
) {
    let lcm = basis[i]
        .leading_monomial()
        .unwrap()
        .lcm(basis[j].leading_monomial().unwrap());
    queue.push(Pair { i, j, lcm });
    pending.insert((i, j));
}

/// Normal strategy: smallest lcm first, ties broken by generator indices.
fn pop_smallest(ring: &Ring, queue: &mut Vec<Pair>) -> Option<Pair> {
    if queue.is_empty() {
        return None;
    }
    let mut best = 0;
    for k in 1..queue.len() {
        let ord = ring
            .cmp(&queue[k].lcm, &queue[best].lcm)
            .then_with(|| (queue[k].i, queue[k].j).cmp(&(queue[best].i, queue[best].j)));
        if ord.is_lt() {
            best = k;
        }
    }
    Some(queue.swap_remove(best))
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Skip (i, j) when some other leading monomial divides their lcm and both
/// pairs through it are already treated.
fn chain_criterion<F: Field>(
    basis: &[Polynomial<F>],
    pending: &HashSet<(usize, usize)>,
    pair: &Pair,
) -> bool {
    basis.iter().enumerate().any(|(k, g)| {
        k != pair.i
            && k != pair.j
            && g.leading_monomial().unwrap().divides(&pair.lcm)
            && !pending.contains(&key(pair.i, k))
            && !pending.contains(&key(pair.j, k))
    })
}

fn interreduce<F: Field>(ring: &Arc<Ring>, basis: Vec<Polynomial<F>>) -> Vec<Polynomial<F>> {
    // minimal basis: drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let lh = h.leading_monomial().unwrap();
            k != idx && lh.divides(lm) && (lh != lm || k < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<Polynomial<F>> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, h)| h.clone())
            .collect();
        reduced.push(normal_form(&minimal[idx], &others).monic());
    }
    reduced.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    reduced
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn polys(ring: &Arc<Ring>, src: &[&str]) -> Vec<Polynomial<Rational>> {
        src.iter()
            .map(|s| Polynomial::parse(ring, s).unwrap())
            .collect()
    }

    fn show(b: &[Polynomial<Rational>]) -> Vec<String> {
        b.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = Ring::new(&["x", "y"]);
        let gb = reduced_basis(&r, &polys(&r, &["x^2", "x*y"]));
        assert_eq!(show(&gb), ["x*y", "x^2"]);
    }

    #[test]
    fn unit_and_zero_ideals() {
        let r = Ring::new(&["x", "y"]);
        assert!(reduced_basis(&r, &polys(&r, &["0"])).is_empty());
        assert_eq!(show(&reduced_basis(&r, &polys(&r, &["x", "x - 1"]))), ["1"]);
    }

    #[test]
    fn division_example() {
        let r = Ring::new(&["x", "y"]);
        let gb = reduced_basis(&r, &polys(&r, &["x^2", "x*y"]));
        let f = Polynomial::parse(&r, "x^2*y + y").unwrap();
        assert_eq!(normal_form(&f, &gb).to_string(), "y");
    }

    #[test]
    fn twisted_cubic_textbook_basis() {
        // y - x^2, z - x^3 under degrevlex x > y > z
        let r = Ring::new(&["x", "y", "z"]);
        let gb = reduced_basis(&r, &polys(&r, &["y - x^2", "z - x^3"]));
        assert_eq!(show(&gb), ["y^2 - x*z", "x*y - z", "x^2 - y"]);
    }
}
