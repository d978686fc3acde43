//! Fleet model and exact objective evaluation.
//!
//! An [`Instance`] is a fleet of airplanes (or ground vehicles — the two
//! problems share one objective). A drop-out [`Permutation`] lists which
//! plane leaves first, second, and so on; the last entry is the plane that
//! flies farthest. [`evaluate`] computes the total flight of that last plane
//! exactly: during phase `i` the whole remaining fleet burns fuel at the sum
//! of its rates, so the phase contributes the dropping plane's fuel divided
//! by that suffix consumption sum.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Which framing an instance uses. The objective formula is identical; the
/// tag keeps files and reports faithful to the problem they came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProblemKind {
    /// Airplane refueling: fuel `v`, consumption rate `c` per plane.
    Arp,
    /// Vehicle exploration: fuel `a`, consumption rate `b` per vehicle.
    Nvep,
}

impl ProblemKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ProblemKind::Arp => "arp",
            ProblemKind::Nvep => "nvep",
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ProblemKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<ProblemKind> {
        match s {
            "arp" => Ok(ProblemKind::Arp),
            "nvep" => Ok(ProblemKind::Nvep),
            other => Err(Error::Parse(format!(
                "unknown instance kind '{other}' (expected 'arp' or 'nvep')"
            ))),
        }
    }
}

/// One airplane (or vehicle): how much fuel it carries and how fast it burns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Airplane {
    id: u32,
    fuel: Rational,
    rate: Rational,
}

impl Airplane {
    /// Positional identity, 1-based and stable for the instance's lifetime.
    pub fn id(&self) -> u32 {
        self.id
    }

    /// Tanks of fuel carried (strictly positive).
    pub fn fuel(&self) -> &Rational {
        &self.fuel
    }

    /// Tanks of fuel burned per kilometer (strictly positive).
    pub fn rate(&self) -> &Rational {
        &self.rate
    }
}

/// A non-empty fleet with ids `1..=n` in listed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    kind: ProblemKind,
    items: Vec<Airplane>,
    label: String,
}

impl Instance {
    /// Builds an instance from `(fuel, rate)` pairs, assigning ids in input
    /// order. Rejects empty fleets and non-positive values.
    pub fn new(
        kind: ProblemKind,
        values: Vec<(Rational, Rational)>,
        label: impl Into<String>,
    ) -> Result<Instance> {
        if values.is_empty() {
            return Err(Error::EmptyInstance);
        }
        let mut items = Vec::with_capacity(values.len());
        for (i, (fuel, rate)) in values.into_iter().enumerate() {
            if !fuel.is_positive() {
                return Err(Error::NonPositiveValue {
                    id: i + 1,
                    field: "fuel",
                });
            }
            if !rate.is_positive() {
                return Err(Error::NonPositiveValue {
                    id: i + 1,
                    field: "rate",
                });
            }
            items.push(Airplane {
                id: (i + 1) as u32,
                fuel,
                rate,
            });
        }
        Ok(Instance {
            kind,
            items,
            label: label.into(),
        })
    }

    /// Convenience constructor for integer test fleets.
    pub fn from_ints(kind: ProblemKind, values: &[(i64, i64)], label: &str) -> Result<Instance> {
        Instance::new(
            kind,
            values
                .iter()
                .map(|&(v, c)| (Rational::from_int(v), Rational::from_int(c)))
                .collect(),
            label,
        )
    }

    pub fn kind(&self) -> ProblemKind {
        self.kind
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn n(&self) -> usize {
        self.items.len()
    }

    pub fn items(&self) -> &[Airplane] {
        &self.items
    }

    /// The airplane with the given 1-based id.
    pub fn item(&self, id: u32) -> &Airplane {
        &self.items[(id - 1) as usize]
    }
}

/// A drop-out order: `order[0]` leaves first, the last entry flies farthest.
/// Always a bijection on `{1..=n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    order: Vec<u32>,
}

impl Permutation {
    pub fn new(order: Vec<u32>) -> Result<Permutation> {
        if order.is_empty() {
            return Err(Error::InvalidPermutation("empty order".into()));
        }
        let n = order.len();
        let mut seen = vec![false; n];
        for &id in &order {
            if id == 0 || id as usize > n {
                return Err(Error::InvalidPermutation(format!(
                    "id {id} out of range 1..={n}"
                )));
            }
            if seen[(id - 1) as usize] {
                return Err(Error::InvalidPermutation(format!("id {id} appears twice")));
            }
            seen[(id - 1) as usize] = true;
        }
        Ok(Permutation { order })
    }

    /// `1, 2, ..., n` in listed order.
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            order: (1..=n as u32).collect(),
        }
    }

    /// Internal constructor for orders already known to be bijections.
    pub(crate) fn from_order_unchecked(order: Vec<u32>) -> Permutation {
        debug_assert!(Permutation::new(order.clone()).is_ok());
        Permutation { order }
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    /// Id at 0-based position `pos` (position 0 drops out first).
    pub fn id_at(&self, pos: usize) -> u32 {
        self.order[pos]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.order
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, id) in self.order.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{id}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses the comma-separated 1-based form, e.g. `2,1,3`.
    fn from_str(s: &str) -> Result<Permutation> {
        let order = parse_id_list(s)?;
        Permutation::new(order)
    }
}

/// Parses `2,1,3` into raw ids without requiring a bijection. Useful for
/// certificate checking, where malformed orders must be rejected by the
/// verifier rather than the parser.
pub fn parse_id_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("invalid permutation entry '{}'", t.trim())))
        })
        .collect()
}

/// Exact evaluation of one drop-out order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    total: Rational,
    legs: Vec<Rational>,
    suffix_sums: Vec<Rational>,
}

impl Evaluation {
    /// Total flight of the last remaining airplane.
    pub fn total(&self) -> &Rational {
        &self.total
    }

    /// Extra distance flown during each phase; `legs[i]` is what the plane
    /// dropping at position `i` contributes.
    pub fn legs(&self) -> &[Rational] {
        &self.legs
    }

    /// Joint burn rate of the fleet during each phase: `suffix_sums[i]` sums
    /// the rates of every plane still flying at phase `i`. Strictly
    /// decreasing.
    pub fn suffix_sums(&self) -> &[Rational] {
        &self.suffix_sums
    }
}

fn check_perm(inst: &Instance, perm: &Permutation) -> Result<()> {
    if perm.n() != inst.n() {
        return Err(Error::InvalidPermutation(format!(
            "permutation has {} entries, instance has {}",
            perm.n(),
            inst.n()
        )));
    }
    Ok(())
}

/// Evaluates the total flight for `perm`: each phase contributes the
/// dropping plane's fuel divided by the suffix consumption sum of the planes
/// still airborne. Exact rational arithmetic throughout.
pub fn evaluate(inst: &Instance, perm: &Permutation) -> Result<Evaluation> {
    check_perm(inst, perm)?;
    let n = inst.n();
    let mut suffix_sums = vec![Rational::zero(); n];
    let mut acc = Rational::zero();
    for pos in (0..n).rev() {
        acc = acc + inst.item(perm.id_at(pos)).rate();
        suffix_sums[pos] = acc.clone();
    }
    let mut legs = Vec::with_capacity(n);
    let mut total = Rational::zero();
    for (pos, suffix) in suffix_sums.iter().enumerate() {
        let leg = inst.item(perm.id_at(pos)).fuel() / suffix;
        total = total + &leg;
        legs.push(leg);
    }
    Ok(Evaluation {
        total,
        legs,
        suffix_sums,
    })
}

/// The sequence of suffix consumption sums induced by `perm`, from the full
/// fleet's joint rate down to the last plane's own rate.
pub fn cumulative_consumption(inst: &Instance, perm: &Permutation) -> Result<Vec<Rational>> {
    Ok(evaluate(inst, perm)?.suffix_sums)
}

/// Traveled length of the last vehicle for a vehicle-exploration instance.
/// Identical in form to the airplane objective.
pub fn nvep_distance(inst: &Instance, perm: &Permutation) -> Result<Rational> {
    if inst.kind() != ProblemKind::Nvep {
        return Err(Error::WrongKind {
            expected: ProblemKind::Nvep.as_str(),
            got: inst.kind().as_str(),
        });
    }
    Ok(evaluate(inst, perm)?.total)
}

/// Maps a vehicle-exploration instance to an airplane instance with the same
/// numbers (fuel -> fuel, rate -> rate, ids and order preserved). Every
/// permutation's objective value is unchanged by the mapping.
pub fn reduce_nvep_to_arp(inst: &Instance) -> Result<Instance> {
    if inst.kind() != ProblemKind::Nvep {
        return Err(Error::WrongKind {
            expected: ProblemKind::Nvep.as_str(),
            got: inst.kind().as_str(),
        });
    }
    Ok(Instance {
        kind: ProblemKind::Arp,
        items: inst.items.clone(),
        label: inst.label.clone(),
    })
}

/// Certificate verifier: accepts iff `order` lists each airplane exactly
/// once and its evaluation reaches `threshold`. Malformed orders are
/// rejected (returns `false`), never an error; one evaluation, polynomial in
/// the fleet size.
pub fn verify_certificate(inst: &Instance, order: &[u32], threshold: &Rational) -> bool {
    let perm = match Permutation::new(order.to_vec()) {
        Ok(p) => p,
        Err(_) => return false,
    };
    match evaluate(inst, &perm) {
        Ok(ev) => ev.total() >= threshold,
        Err(_) => false,
    }
}
