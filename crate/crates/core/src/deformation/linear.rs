use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;

use super::model::format_point;
use super::AlgebraModel;

/// Comparison depth used when none is given.
pub const DEFAULT_DEPTH: u32 = 4;

/// `J^i_k` of the family recentred at `p` against the linear ideal of the
/// annihilator `H`, compared modulo `m₀ⁿ` for `n = 1..=depth`.
#[derive(Clone, Debug)]
pub struct ThmLinearVerdict<F> {
    pub i: i64,
    pub k: usize,
    pub depth: u32,
    pub jump_ideal: Ideal<F>,
    pub linear_ideal: Ideal<F>,
    /// Entry `n − 1` is the equality of `J + m₀ⁿ` and `L + m₀ⁿ`.
    pub equal_mod: Vec<bool>,
}

impl<F> ThmLinearVerdict<F> {
    /// Verified to the comparison depth, never beyond it.
    pub fn holds(&self) -> bool {
        self.equal_mod.iter().all(|&b| b)
    }

    /// Smallest `n` at which the truncations differ.
    pub fn first_difference(&self) -> Option<u32> {
        self.equal_mod
            .iter()
            .position(|&b| !b)
            .map(|n| n as u32 + 1)
    }
}

pub fn verify_thm_linear<F: Field>(
    model: &AlgebraModel<F>,
    point: &[F],
    i: i64,
    k: usize,
    depth: u32,
) -> Result<ThmLinearVerdict<F>> {
    let fiber_dim = model.fiber_cohomology(point, i)?.dim();
    if fiber_dim != k {
        return Err(Error::Precondition(format!(
            "dim H^{i} at {} is {fiber_dim}, not {k}",
            format_point(point)
        )));
    }
    let jump_ideal = model.family()?.translate(point)?.jump_ideal(i, k as i64)?;
    let linear_ideal = model.fiber_cup_data(point, i)?.annihilator(i)?.ideal;
    let ring = jump_ideal.ring().clone();
    let linear_ideal = Ideal::new(
        &ring,
        linear_ideal
            .generators()
            .iter()
            .map(|p| p.with_ring(&ring))
            .collect(),
    )?;
    let equal_mod = (1..=depth)
        .map(|n| {
            let m = Ideal::origin_power(&ring, n);
            jump_ideal.sum(&m)?.equals(&linear_ideal.sum(&m)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ThmLinearVerdict {
        i,
        k,
        depth,
        jump_ideal,
        linear_ideal,
        equal_mod,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type Q = Rational;

    fn zero(g: usize) -> Vec<Q> {
        vec![Q::from_integer(0.into()); g]
    }

    #[test]
    fn exterior_two_at_origin() {
        let m = AlgebraModel::<Q>::exterior(2);
        for (i, k) in [(0, 1), (1, 2), (2, 1)] {
            let v = verify_thm_linear(&m, &zero(2), i, k, DEFAULT_DEPTH).unwrap();
            assert!(v.holds(), "i={i} k={k}");
            assert_eq!(v.equal_mod.len(), 4);
        }
    }

    #[test]
    fn exterior_three_middle_degree() {
        let m = AlgebraModel::<Q>::exterior(3);
        let v = verify_thm_linear(&m, &zero(3), 1, 3, 2).unwrap();
        assert!(v.holds());
        assert_eq!(v.linear_ideal.reduced_gb().len(), 3);
    }

    #[test]
    fn precondition_is_checked() {
        let m = AlgebraModel::<Q>::exterior(2);
        assert!(matches!(
            verify_thm_linear(&m, &zero(2), 1, 1, 4),
            Err(Error::Precondition(_))
        ));
    }
}
