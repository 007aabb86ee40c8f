use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::Monomial;

/// Term orders supported by the engine.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic in the ring's variable order.
    DegRevLex,
    /// The first `n` variables form a block that dominates the rest;
    /// degrevlex inside each block.
    Block(usize),
}

/// A polynomial ring over the ground field: variable names plus a term order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
    order: MonomialOrder,
}

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Arc<Ring> {
        Self::with_order(vars, MonomialOrder::DegRevLex)
    }

    pub fn with_order<S: AsRef<str>>(vars: &[S], order: MonomialOrder) -> Arc<Ring> {
        Arc::new(Ring {
            vars: vars.iter().map(|v| v.as_ref().to_string()).collect(),
            order,
        })
    }

    /// `x1, ..., xn`.
    pub fn numbered(prefix: &str, n: usize) -> Arc<Ring> {
        let vars: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        Self::new(&vars)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.order {
            MonomialOrder::DegRevLex => degrevlex(a.exponents(), b.exponents()),
            MonomialOrder::Block(split) => {
                let (a1, a2) = a.exponents().split_at(split);
                let (b1, b2) = b.exponents().split_at(split);
                degrevlex(a1, b1).then_with(|| degrevlex(a2, b2))
            }
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.vars.join(","))
    }
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // smaller exponent in the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}
