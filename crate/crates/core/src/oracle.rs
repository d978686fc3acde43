//! Exhaustive ground truth.
//!
//! The oracle compares every one of the n! drop-out orders, with no pruning
//! by design; it exists to validate the sieve-based solver at desk scale.
//! Orders are generated by successive transpositions (Heap's algorithm on
//! the tail behind a fixed first element), so each step changes the order in
//! one swap and the evaluation can be updated incrementally. A full
//! re-evaluation mode recomputes every order from scratch through the public
//! evaluator for cross-checking the incremental arithmetic.

use std::cmp::Ordering;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;

use crate::enumeration::is_sequential_feasible;
use crate::error::{Error, Result};
use crate::model::{evaluate, Instance, Permutation};
use crate::rational::Rational;
use crate::scaled::ScaledItems;

/// Default size cap: 10! exact evaluations is the most a validation run
/// should do by accident.
pub const DEFAULT_SIZE_CAP: usize = 10;

#[derive(Clone, Debug)]
pub struct OracleConfig {
    /// Refuse instances larger than this.
    pub cap: usize,
    /// Concurrent workers over the fixed-first-element partitions.
    pub workers: usize,
    /// Re-evaluate every order from scratch instead of incrementally.
    pub full_reevaluation: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            cap: DEFAULT_SIZE_CAP,
            workers: 1,
            full_reevaluation: false,
        }
    }
}

/// What exhaustive evaluation found.
#[derive(Clone, Debug)]
pub struct OracleReport {
    /// Exact maximum over all n! orders.
    pub optimum: Rational,
    /// Every order attaining the maximum, in generation order.
    pub argmax_perms: Vec<Permutation>,
    /// Always n! for the instance size.
    pub permutations_evaluated: u64,
    /// Orders with no strictly improving adjacent swap.
    pub stable_count: u64,
}

/// Exhaustive solve with the default configuration.
pub fn brute_force_solve(inst: &Instance) -> Result<OracleReport> {
    brute_force_solve_with(inst, &OracleConfig::default())
}

/// Evaluates every drop-out order, returning the exact maximum, all argmax
/// orders, and the count of swap-stable orders seen along the way.
pub fn brute_force_solve_with(inst: &Instance, cfg: &OracleConfig) -> Result<OracleReport> {
    let merged = run_partitions(inst, cfg, true)?;
    Ok(OracleReport {
        optimum: merged.best.expect("instances are non-empty"),
        argmax_perms: merged.argmax,
        permutations_evaluated: merged.evaluated,
        stable_count: merged.stable,
    })
}

/// Counts swap-stable orders by exhaustive filter.
pub fn brute_force_count_stable(inst: &Instance) -> Result<u64> {
    brute_force_count_stable_with(inst, &OracleConfig::default())
}

pub fn brute_force_count_stable_with(inst: &Instance, cfg: &OracleConfig) -> Result<u64> {
    Ok(run_partitions(inst, cfg, false)?.stable)
}

struct PartitionOutcome {
    best: Option<Rational>,
    argmax: Vec<Permutation>,
    evaluated: u64,
    stable: u64,
}

fn run_partitions(inst: &Instance, cfg: &OracleConfig, want_best: bool) -> Result<PartitionOutcome> {
    let n = inst.n();
    if n > cfg.cap {
        return Err(Error::SizeCapExceeded { n, cap: cfg.cap });
    }
    let items = ScaledItems::new(inst);
    let run_one = |first: usize| -> PartitionOutcome {
        if cfg.full_reevaluation {
            run_partition_full(inst, first, want_best)
        } else {
            run_partition_incremental(inst, &items, first, want_best)
        }
    };
    let outcomes: Vec<PartitionOutcome> = if cfg.workers > 1 && n > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .map_err(|e| Error::InvalidParam(format!("worker pool: {e}")))?;
        use rayon::prelude::*;
        pool.install(|| (0..n).into_par_iter().map(run_one).collect())
    } else {
        (0..n).map(run_one).collect()
    };

    let mut merged = PartitionOutcome {
        best: None,
        argmax: Vec::new(),
        evaluated: 0,
        stable: 0,
    };
    for outcome in outcomes {
        merged.evaluated += outcome.evaluated;
        merged.stable += outcome.stable;
        let Some(branch_best) = outcome.best else {
            continue;
        };
        match &merged.best {
            Some(b) => match branch_best.cmp(b) {
                Ordering::Greater => {
                    merged.best = Some(branch_best);
                    merged.argmax = outcome.argmax;
                }
                Ordering::Equal => merged.argmax.extend(outcome.argmax),
                Ordering::Less => {}
            },
            None => {
                merged.best = Some(branch_best);
                merged.argmax = outcome.argmax;
            }
        }
    }
    Ok(merged)
}

/// Heap's algorithm over `order[start..]`; calls `visit` for the initial
/// arrangement and after every transposition, passing the swapped positions.
fn for_each_arrangement(
    order: &mut [usize],
    start: usize,
    mut visit: impl FnMut(Option<(usize, usize)>, &[usize]),
) {
    visit(None, order);
    let m = order.len() - start;
    let mut counters = vec![0usize; m];
    let mut i = 1;
    while i < m {
        if counters[i] < i {
            let (p, q) = if i % 2 == 0 {
                (start, start + i)
            } else {
                (start + counters[i], start + i)
            };
            order.swap(p, q);
            visit(Some((p, q)), order);
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
}

/// Incrementally maintained evaluation state over one partition.
struct IncrementalEval<'a> {
    items: &'a ScaledItems,
    /// Suffix consumption sums, `suffix[k] = Σ rate of order[k..]`, with a
    /// zero sentinel at index n.
    suffix: Vec<BigInt>,
    /// Per-position legs (scaled); maintained only when totals are wanted.
    terms: Vec<BigRational>,
    total: BigRational,
    want_total: bool,
}

impl<'a> IncrementalEval<'a> {
    fn new(items: &'a ScaledItems, order: &[usize], want_total: bool) -> Self {
        let n = order.len();
        let mut suffix = vec![BigInt::zero(); n + 1];
        for k in (0..n).rev() {
            suffix[k] = &suffix[k + 1] + items.rate(order[k]);
        }
        let mut terms = Vec::new();
        let mut total = BigRational::zero();
        if want_total {
            terms = (0..n)
                .map(|k| items.scaled_leg(order[k], &suffix[k]))
                .collect();
            total = terms.iter().sum();
        }
        IncrementalEval {
            items,
            suffix,
            terms,
            total,
            want_total,
        }
    }

    /// Applies the transposition of positions `p < q` that was just made to
    /// `order`. Only suffix sums strictly inside the window and the two
    /// swapped terms change.
    fn apply_swap(&mut self, order: &[usize], p: usize, q: usize) {
        // order already reflects the swap: order[p] = b, order[q] = a
        let a = order[q];
        let b = order[p];
        let rate_shift = self.items.rate(a) - self.items.rate(b);
        for k in p + 1..=q {
            self.suffix[k] += &rate_shift;
        }
        if self.want_total {
            #[allow(clippy::needless_range_loop)] // indexes three arrays in lockstep
            for k in p..=q {
                let new_term = self.items.scaled_leg(order[k], &self.suffix[k]);
                self.total += &new_term - &self.terms[k];
                self.terms[k] = new_term;
            }
        }
    }

    /// True when no adjacent swap strictly improves the current order.
    fn is_stable(&self, order: &[usize]) -> bool {
        let n = order.len();
        for k in 0..n.saturating_sub(1) {
            if self
                .items
                .swap_delta_sign(order[k], order[k + 1], &self.suffix[k + 2])
                == Ordering::Less
            {
                return false;
            }
        }
        true
    }
}

fn ids_of(order: &[usize]) -> Vec<u32> {
    order.iter().map(|&i| (i + 1) as u32).collect()
}

fn run_partition_incremental(
    inst: &Instance,
    items: &ScaledItems,
    first: usize,
    want_best: bool,
) -> PartitionOutcome {
    let n = inst.n();
    let mut order: Vec<usize> = std::iter::once(first)
        .chain((0..n).filter(|&i| i != first))
        .collect();
    let mut eval = IncrementalEval::new(items, &order, want_best);
    let mut out = PartitionOutcome {
        best: None,
        argmax: Vec::new(),
        evaluated: 0,
        stable: 0,
    };
    let mut best_scaled: Option<BigRational> = None;
    for_each_arrangement(&mut order, 1.min(n), |swapped, order| {
        if let Some((p, q)) = swapped {
            eval.apply_swap(order, p, q);
        }
        out.evaluated += 1;
        if eval.is_stable(order) {
            out.stable += 1;
        }
        if want_best {
            let better = match &best_scaled {
                Some(b) => eval.total.cmp(b),
                None => Ordering::Greater,
            };
            match better {
                Ordering::Greater => {
                    best_scaled = Some(eval.total.clone());
                    out.argmax.clear();
                    out.argmax
                        .push(Permutation::from_order_unchecked(ids_of(order)));
                }
                Ordering::Equal => out
                    .argmax
                    .push(Permutation::from_order_unchecked(ids_of(order))),
                Ordering::Less => {}
            }
        }
    });
    out.best = best_scaled.map(|b| items.unscale_total(&b));
    out
}

fn run_partition_full(inst: &Instance, first: usize, want_best: bool) -> PartitionOutcome {
    let n = inst.n();
    let mut order: Vec<usize> = std::iter::once(first)
        .chain((0..n).filter(|&i| i != first))
        .collect();
    let mut out = PartitionOutcome {
        best: None,
        argmax: Vec::new(),
        evaluated: 0,
        stable: 0,
    };
    for_each_arrangement(&mut order, 1.min(n), |_, order| {
        let perm = Permutation::from_order_unchecked(ids_of(order));
        let total = evaluate(inst, &perm)
            .expect("generated orders are valid")
            .total()
            .clone();
        out.evaluated += 1;
        if is_sequential_feasible(inst, &perm)
            .expect("generated orders are valid")
            .is_stable()
        {
            out.stable += 1;
        }
        if want_best {
            let better = match &out.best {
                Some(b) => total.cmp(b),
                None => Ordering::Greater,
            };
            match better {
                Ordering::Greater => {
                    out.best = Some(total);
                    out.argmax.clear();
                    out.argmax.push(perm);
                }
                Ordering::Equal => out.argmax.push(perm),
                Ordering::Less => {}
            }
        }
    });
    out
}
