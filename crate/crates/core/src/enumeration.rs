//! Sequential feasible solutions: swap-stable drop-out orders.
//!
//! A permutation is *sequential feasible* when no adjacent transposition
//! strictly increases the total flight. Every global maximizer is swap-stable
//! (an improving swap would contradict maximality), so enumerating the
//! swap-stable set and taking its maximum is an exact solver.
//!
//! The enumeration builds orders backward, choosing the farthest-flying
//! plane first. Swapping two adjacent planes only changes their own two
//! terms, and the comparison depends on the pair plus the consumption sum of
//! the planes strictly behind them — a quantity fixed by the *set* already
//! placed, not its order. So admitting a candidate in front of the current
//! front plane exactly when the pair comparison does not prefer the swap
//! sieves out precisely the swap-stable permutations, each checked pair
//! exactly once.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;

use crate::error::{Error, Result};
use crate::model::{evaluate, Instance, Permutation};
use crate::rational::Rational;
use crate::scaled::ScaledItems;

/// Largest fleet the enumerator accepts (the used-set is a bit mask).
pub const MAX_ENUMERATION_SIZE: usize = 128;

/// Certifies that a permutation is not swap-stable: swapping the planes at
/// `position` and `position + 1` (1-based) strictly increases the total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapWitness {
    pub position: usize,
    pub original_value: Rational,
    pub swapped_value: Rational,
}

/// Outcome of a stability check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stability {
    Stable,
    Improvable(SwapWitness),
}

impl Stability {
    pub fn is_stable(&self) -> bool {
        matches!(self, Stability::Stable)
    }
}

/// Gain from keeping `lead` immediately before `trail` when the consumption
/// sum strictly behind the pair is `suffix_after`: the exact difference
/// between lead-first and trail-first totals over the two-slot window.
/// Positive means lead-first is strictly better; the delta is antisymmetric
/// in the pair.
pub fn adjacent_swap_delta(
    lead_fuel: &Rational,
    lead_rate: &Rational,
    trail_fuel: &Rational,
    trail_rate: &Rational,
    suffix_after: &Rational,
) -> Result<Rational> {
    if !lead_rate.is_positive() || !trail_rate.is_positive() {
        return Err(Error::NonPositiveRate);
    }
    if suffix_after.is_negative() {
        return Err(Error::NegativeSuffix);
    }
    let r_trail = trail_rate + suffix_after;
    let r_lead = lead_rate + suffix_after;
    let r_both = lead_rate + &r_trail;
    Ok(trail_fuel * lead_rate / (&r_trail * &r_both) - lead_fuel * trail_rate / (&r_lead * r_both))
}

/// Checks swap-stability. Returns the witness for the first position whose
/// adjacent transposition strictly improves the total; ties do not
/// disqualify.
pub fn is_sequential_feasible(inst: &Instance, perm: &Permutation) -> Result<Stability> {
    let ev = evaluate(inst, perm)?;
    let n = inst.n();
    let zero = Rational::zero();
    for k in 0..n.saturating_sub(1) {
        let lead = inst.item(perm.id_at(k));
        let trail = inst.item(perm.id_at(k + 1));
        let suffix_after = if k + 2 < n {
            &ev.suffix_sums()[k + 2]
        } else {
            &zero
        };
        let delta = adjacent_swap_delta(
            lead.fuel(),
            lead.rate(),
            trail.fuel(),
            trail.rate(),
            suffix_after,
        )?;
        if delta.is_negative() {
            return Ok(Stability::Improvable(SwapWitness {
                position: k + 1,
                original_value: ev.total().clone(),
                swapped_value: ev.total() - &delta,
            }));
        }
    }
    Ok(Stability::Stable)
}

/// Search configuration shared by [`solve_with`] and [`count_qn_with`].
#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Concurrent workers over the top-level branch (choice of the
    /// farthest-flying plane). Results are bit-identical for any count.
    pub workers: usize,
    /// Prune branches whose admissible upper bound cannot beat the branch's
    /// incumbent. Only affects solving; counting never prunes. With pruning
    /// on, `q_n` in the report degrades to "stable leaves visited".
    /// Incumbents are kept per top-level branch so node counts stay
    /// independent of the worker count.
    pub prune: bool,
    /// Hard deadline; the search aborts with a timeout error past it.
    pub deadline: Option<Instant>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            workers: 1,
            prune: false,
            deadline: None,
        }
    }
}

impl SolverConfig {
    pub fn with_workers(workers: usize) -> Self {
        SolverConfig {
            workers,
            ..Default::default()
        }
    }

    pub fn with_budget(budget: Duration) -> Self {
        SolverConfig {
            deadline: Some(Instant::now() + budget),
            ..Default::default()
        }
    }
}

/// Result of an exact solve over the swap-stable set.
#[derive(Clone, Debug)]
pub struct SolveReport {
    /// Maximum total flight over all drop-out orders.
    pub optimum: Rational,
    /// Every enumerated permutation attaining the optimum, in visit order.
    pub optimal_perms: Vec<Permutation>,
    /// Number of swap-stable permutations (exact when pruning is off).
    pub q_n: u64,
    /// Partial placements explored by the sieve.
    pub nodes_expanded: u64,
    /// True when some admitted pair comparison was an exact tie; tied
    /// instances can exceed the general-position bound on `q_n`.
    pub ties_detected: bool,
    pub elapsed: Duration,
}

/// Counting-only result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub q_n: u64,
    pub nodes_expanded: u64,
    pub ties_detected: bool,
}

#[derive(Default)]
struct Stats {
    nodes: u64,
    leaves: u64,
    ties: bool,
}

trait LeafSink {
    /// Whether the traversal must maintain exact partial totals.
    const WANT_TOTAL: bool;
    fn on_leaf(&mut self, order: &[u32], scaled_total: Option<&BigRational>) -> Result<()>;
    /// Incumbent for pruning; `None` disables pruning structurally.
    fn best_scaled(&self) -> Option<&BigRational> {
        None
    }
}

/// Counts leaves only; never prunes, never touches totals.
#[derive(Default)]
struct CountSink;

impl LeafSink for CountSink {
    const WANT_TOTAL: bool = false;
    fn on_leaf(&mut self, _order: &[u32], _scaled_total: Option<&BigRational>) -> Result<()> {
        Ok(())
    }
}

/// Tracks the maximum total and every argmax permutation.
#[derive(Default)]
struct BestSink {
    best: Option<BigRational>,
    argmax: Vec<Permutation>,
}

impl LeafSink for BestSink {
    const WANT_TOTAL: bool = true;
    fn on_leaf(&mut self, order: &[u32], scaled_total: Option<&BigRational>) -> Result<()> {
        let total = scaled_total.expect("solver traversal maintains totals");
        match &self.best {
            Some(best) => match total.cmp(best) {
                Ordering::Greater => {
                    self.best = Some(total.clone());
                    self.argmax.clear();
                    self.argmax.push(Permutation::from_order_unchecked(order.to_vec()));
                }
                Ordering::Equal => {
                    self.argmax.push(Permutation::from_order_unchecked(order.to_vec()));
                }
                Ordering::Less => {}
            },
            None => {
                self.best = Some(total.clone());
                self.argmax.push(Permutation::from_order_unchecked(order.to_vec()));
            }
        }
        Ok(())
    }

    fn best_scaled(&self) -> Option<&BigRational> {
        self.best.as_ref()
    }
}

/// Forwards each stable permutation with its exact (unscaled) total.
struct VisitSink<'a, F> {
    items: &'a ScaledItems,
    visit: F,
}

impl<F: FnMut(&Permutation, &Rational)> LeafSink for VisitSink<'_, F> {
    const WANT_TOTAL: bool = true;
    fn on_leaf(&mut self, order: &[u32], scaled_total: Option<&BigRational>) -> Result<()> {
        let total = scaled_total.expect("visitor traversal maintains totals");
        let perm = Permutation::from_order_unchecked(order.to_vec());
        (self.visit)(&perm, &self.items.unscale_total(total));
        Ok(())
    }
}

struct SearchParams<'a> {
    items: &'a ScaledItems,
    prune: bool,
    deadline: Option<Instant>,
}

struct SearchState {
    used: u128,
    /// Order under construction, indexed by final position (filled back to
    /// front), entries are 1-based ids.
    slots: Vec<u32>,
    deadline_tick: u32,
}

/// Extends the partial order by one plane in front of `front`.
///
/// `suffix` is the scaled consumption sum of everything placed; `partial`
/// the scaled sum of their legs (when maintained); `rem_fuel` the scaled
/// fuel left unplaced (when pruning).
#[allow(clippy::too_many_arguments)]
fn extend<S: LeafSink>(
    params: &SearchParams<'_>,
    state: &mut SearchState,
    depth: usize,
    front: Option<usize>,
    suffix: &BigInt,
    partial: Option<&BigRational>,
    rem_fuel: &BigInt,
    stats: &mut Stats,
    sink: &mut S,
) -> Result<()> {
    let n = params.items.len();

    if let Some(deadline) = params.deadline {
        state.deadline_tick += 1;
        if state.deadline_tick >= 1024 {
            state.deadline_tick = 0;
            if Instant::now() >= deadline {
                return Err(Error::Timeout);
            }
        }
    }

    if params.prune {
        if let Some(best) = sink.best_scaled() {
            // Admissible bound: every unplaced plane flies at most its fuel
            // over the cheapest unplaced rate.
            let min_rate = (0..n)
                .filter(|i| state.used & (1 << i) == 0)
                .map(|i| params.items.rate(i))
                .min()
                .expect("internal node has unplaced planes");
            let partial = partial.expect("pruning requires totals");
            let bound = partial + BigRational::new(rem_fuel.clone(), min_rate.clone());
            if bound < *best {
                return Ok(());
            }
        }
    }

    let suffix_after_front = front.map(|y| suffix - params.items.rate(y));
    for x in 0..n {
        if state.used & (1 << x) != 0 {
            continue;
        }
        if let (Some(y), Some(r_after)) = (front, suffix_after_front.as_ref()) {
            match params.items.swap_delta_sign(x, y, r_after) {
                Ordering::Less => continue,
                Ordering::Equal => stats.ties = true,
                Ordering::Greater => {}
            }
        }
        stats.nodes += 1;
        state.used |= 1 << x;
        state.slots[n - 1 - depth] = (x + 1) as u32;
        let new_suffix = suffix + params.items.rate(x);
        let new_partial = if S::WANT_TOTAL {
            let leg = params.items.scaled_leg(x, &new_suffix);
            Some(match partial {
                Some(p) => p + leg,
                None => leg,
            })
        } else {
            None
        };
        let new_rem = if params.prune {
            rem_fuel - params.items.fuel(x)
        } else {
            BigInt::zero()
        };
        let step = if depth + 1 == n {
            stats.leaves += 1;
            sink.on_leaf(&state.slots, new_partial.as_ref())
        } else {
            extend(
                params,
                state,
                depth + 1,
                Some(x),
                &new_suffix,
                new_partial.as_ref(),
                &new_rem,
                stats,
                sink,
            )
        };
        state.used &= !(1 << x);
        step?;
    }
    Ok(())
}

/// Runs one top-level branch: the plane at the last position is fixed to
/// `top` and the sieve explores everything in front of it.
fn explore_branch<S: LeafSink>(
    params: &SearchParams<'_>,
    top: usize,
    sink: &mut S,
) -> Result<Stats> {
    if let Some(deadline) = params.deadline {
        if Instant::now() >= deadline {
            return Err(Error::Timeout);
        }
    }
    let n = params.items.len();
    let mut stats = Stats::default();
    let mut state = SearchState {
        used: 1 << top,
        slots: vec![0; n],
        deadline_tick: 0,
    };
    state.slots[n - 1] = (top + 1) as u32;
    stats.nodes += 1;
    let suffix = params.items.rate(top).clone();
    let partial = if S::WANT_TOTAL {
        Some(params.items.scaled_leg(top, &suffix))
    } else {
        None
    };
    let rem_fuel = if params.prune {
        params.items.fuel_sum((0..n).filter(|&i| i != top))
    } else {
        BigInt::zero()
    };
    if n == 1 {
        stats.leaves += 1;
        sink.on_leaf(&state.slots, partial.as_ref())?;
    } else {
        extend(
            params,
            &mut state,
            1,
            Some(top),
            &suffix,
            partial.as_ref(),
            &rem_fuel,
            &mut stats,
            sink,
        )?;
    }
    Ok(stats)
}

fn check_enumerable(inst: &Instance) -> Result<()> {
    if inst.n() > MAX_ENUMERATION_SIZE {
        return Err(Error::InvalidParam(format!(
            "fleet of {} exceeds the enumeration limit of {MAX_ENUMERATION_SIZE}",
            inst.n()
        )));
    }
    Ok(())
}

/// Runs every top-level branch with its own sink and merges in ascending-id
/// order, serially or on a worker pool; the merged outcome is identical
/// either way.
fn run_branches<S>(inst: &Instance, cfg: &SolverConfig) -> Result<(Vec<S>, Stats)>
where
    S: LeafSink + Default + Send,
{
    check_enumerable(inst)?;
    let items = ScaledItems::new(inst);
    let params = SearchParams {
        items: &items,
        prune: cfg.prune,
        deadline: cfg.deadline,
    };
    let n = inst.n();
    let run_one = |top: usize| -> Result<(Stats, S)> {
        let mut sink = S::default();
        let stats = explore_branch(&params, top, &mut sink)?;
        Ok((stats, sink))
    };
    let per_branch: Vec<(Stats, S)> = if cfg.workers > 1 && n > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .map_err(|e| Error::InvalidParam(format!("worker pool: {e}")))?;
        use rayon::prelude::*;
        pool.install(|| (0..n).into_par_iter().map(run_one).collect::<Result<_>>())?
    } else {
        (0..n).map(run_one).collect::<Result<_>>()?
    };
    let mut total = Stats::default();
    let mut sinks = Vec::with_capacity(n);
    for (stats, sink) in per_branch {
        total.nodes += stats.nodes;
        total.leaves += stats.leaves;
        total.ties |= stats.ties;
        sinks.push(sink);
    }
    Ok((sinks, total))
}

/// Exact solve with the default configuration.
pub fn solve(inst: &Instance) -> Result<SolveReport> {
    solve_with(inst, &SolverConfig::default())
}

/// Enumerates the swap-stable set and reports its maximum, which equals the
/// global maximum over all drop-out orders.
pub fn solve_with(inst: &Instance, cfg: &SolverConfig) -> Result<SolveReport> {
    let started = Instant::now();
    let (sinks, stats) = run_branches::<BestSink>(inst, cfg)?;
    let items = ScaledItems::new(inst);
    let mut best: Option<BigRational> = None;
    let mut argmax: Vec<Permutation> = Vec::new();
    for sink in sinks {
        let Some(branch_best) = sink.best else {
            continue;
        };
        match &best {
            Some(b) => match branch_best.cmp(b) {
                Ordering::Greater => {
                    best = Some(branch_best);
                    argmax = sink.argmax;
                }
                Ordering::Equal => argmax.extend(sink.argmax),
                Ordering::Less => {}
            },
            None => {
                best = Some(branch_best);
                argmax = sink.argmax;
            }
        }
    }
    let best = best.expect("non-empty instance always has a stable order");
    Ok(SolveReport {
        optimum: items.unscale_total(&best),
        optimal_perms: argmax,
        q_n: stats.leaves,
        nodes_expanded: stats.nodes,
        ties_detected: stats.ties,
        elapsed: started.elapsed(),
    })
}

/// Number of swap-stable permutations, without materializing them.
pub fn count_qn(inst: &Instance) -> Result<u64> {
    Ok(count_qn_with(inst, &SolverConfig::default())?.q_n)
}

/// Counting traversal; pruning never applies here, every leaf is seen.
pub fn count_qn_with(inst: &Instance, cfg: &SolverConfig) -> Result<CountReport> {
    let cfg = SolverConfig {
        prune: false,
        ..cfg.clone()
    };
    let (_, stats) = run_branches::<CountSink>(inst, &cfg)?;
    Ok(CountReport {
        q_n: stats.leaves,
        nodes_expanded: stats.nodes,
        ties_detected: stats.ties,
    })
}

/// Invokes `visit` once per swap-stable permutation with its exact total, in
/// deterministic order (backward construction, candidates in ascending id),
/// and returns the count.
pub fn enumerate_sequential_feasible(
    inst: &Instance,
    visit: impl FnMut(&Permutation, &Rational),
) -> Result<u64> {
    check_enumerable(inst)?;
    let items = ScaledItems::new(inst);
    let params = SearchParams {
        items: &items,
        prune: false,
        deadline: None,
    };
    let mut sink = VisitSink {
        items: &items,
        visit,
    };
    let mut stats = Stats::default();
    for top in 0..inst.n() {
        let branch = explore_branch(&params, top, &mut sink)?;
        stats.leaves += branch.leaves;
    }
    Ok(stats.leaves)
}
