//! Integer-scaled view of an instance.
//!
//! Multiplying every fuel value by a positive constant scales all totals by
//! that constant; multiplying every rate does the inverse. Neither scaling
//! changes which order is best or whether an adjacent swap improves, so the
//! search can clear denominators once and work on integers: suffix sums
//! become integer additions and swap comparisons become integer products.
//! Totals are mapped back to the original scale at the boundary.

use std::cmp::Ordering;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};

use crate::model::Instance;
use crate::rational::Rational;

pub(crate) struct ScaledItems {
    fuel: Vec<BigInt>,
    rate: Vec<BigInt>,
    /// All fuels were multiplied by this (lcm of fuel denominators).
    fuel_scale: BigInt,
    /// All rates were multiplied by this (lcm of rate denominators).
    rate_scale: BigInt,
}

impl ScaledItems {
    pub fn new(inst: &Instance) -> ScaledItems {
        let fuel_scale = inst
            .items()
            .iter()
            .fold(BigInt::one(), |acc, a| acc.lcm(a.fuel().denom()));
        let rate_scale = inst
            .items()
            .iter()
            .fold(BigInt::one(), |acc, a| acc.lcm(a.rate().denom()));
        let fuel = inst
            .items()
            .iter()
            .map(|a| a.fuel().numer() * (&fuel_scale / a.fuel().denom()))
            .collect();
        let rate = inst
            .items()
            .iter()
            .map(|a| a.rate().numer() * (&rate_scale / a.rate().denom()))
            .collect();
        ScaledItems {
            fuel,
            rate,
            fuel_scale,
            rate_scale,
        }
    }

    pub fn len(&self) -> usize {
        self.fuel.len()
    }

    pub fn fuel(&self, idx: usize) -> &BigInt {
        &self.fuel[idx]
    }

    pub fn rate(&self, idx: usize) -> &BigInt {
        &self.rate[idx]
    }

    /// Leg flown by item `idx` when the suffix consumption including its own
    /// rate is `suffix_with_item`, in the scaled space.
    pub fn scaled_leg(&self, idx: usize, suffix_with_item: &BigInt) -> BigRational {
        BigRational::new(self.fuel[idx].clone(), suffix_with_item.clone())
    }

    /// Maps a scaled total back to the instance's own units.
    pub fn unscale_total(&self, scaled: &BigRational) -> Rational {
        Rational::from_ratio(
            scaled * BigRational::new(self.rate_scale.clone(), self.fuel_scale.clone()),
        )
    }

    /// Sign of the gain from keeping `lead` immediately before `trail` when
    /// the consumption sum strictly behind the pair is `suffix_after`:
    /// `Greater` means lead-first is strictly better, `Equal` an exact tie,
    /// `Less` that swapping strictly improves. Computed as the cross-
    /// multiplied comparison of the two-term difference, so no divisions.
    pub fn swap_delta_sign(&self, lead: usize, trail: usize, suffix_after: &BigInt) -> Ordering {
        let lhs = &self.fuel[trail] * &self.rate[lead] * (&self.rate[lead] + suffix_after);
        let rhs = &self.fuel[lead] * &self.rate[trail] * (&self.rate[trail] + suffix_after);
        lhs.cmp(&rhs)
    }

    /// Sum of scaled fuels over a set of item indices.
    pub fn fuel_sum(&self, indices: impl Iterator<Item = usize>) -> BigInt {
        indices.fold(BigInt::zero(), |acc, i| acc + &self.fuel[i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::adjacent_swap_delta;
    use crate::model::{evaluate, Permutation, ProblemKind};

    #[test]
    fn scaled_totals_match_direct_evaluation() {
        let inst = Instance::new(
            ProblemKind::Arp,
            vec![
                ("5/2".parse().unwrap(), "1/3".parse().unwrap()),
                ("7/3".parse().unwrap(), "2".parse().unwrap()),
                ("1/6".parse().unwrap(), "3/4".parse().unwrap()),
            ],
            "scaled",
        )
        .unwrap();
        let items = ScaledItems::new(&inst);
        let perm = Permutation::new(vec![3, 1, 2]).unwrap();

        // scaled pass, back to front
        let mut suffix = BigInt::zero();
        let mut total = BigRational::zero();
        for pos in (0..3).rev() {
            let idx = (perm.id_at(pos) - 1) as usize;
            suffix += items.rate(idx);
            total += items.scaled_leg(idx, &suffix);
        }
        let direct = evaluate(&inst, &perm).unwrap();
        assert_eq!(&items.unscale_total(&total), direct.total());
    }

    #[test]
    fn swap_sign_agrees_with_exact_delta() {
        let inst = Instance::from_ints(ProblemKind::Arp, &[(6, 2), (1, 1), (2, 1)], "t").unwrap();
        let items = ScaledItems::new(&inst);
        for lead in 0..3usize {
            for trail in 0..3usize {
                if lead == trail {
                    continue;
                }
                for r in [0i64, 1, 3, 7] {
                    let suffix = Rational::from_int(r);
                    let delta = adjacent_swap_delta(
                        inst.items()[lead].fuel(),
                        inst.items()[lead].rate(),
                        inst.items()[trail].fuel(),
                        inst.items()[trail].rate(),
                        &suffix,
                    )
                    .unwrap();
                    let sign = items.swap_delta_sign(lead, trail, &BigInt::from(r));
                    assert_eq!(sign, delta.cmp(&Rational::zero()));
                }
            }
        }
    }
}
