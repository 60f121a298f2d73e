//! The signature-based engine: criteria, restricted reduction and the main
//! loop.
//!
//! The loop keeps a growing list of labeled polynomials. Critical pairs are
//! vetted at selection time by two criteria: the syzygy criterion discards
//! work whose signature is reachable by a trivial syzygy, and the rewritten
//! criterion discards work subsumed by a later-created element. Survivors
//! are reduced one way only: a reducer must have a strictly smaller
//! multiplied signature, so the reducee's signature never changes. Reduced
//! results join the basis even when their polynomial part is zero, because
//! dead signatures still feed the rewritten criterion.

use std::cmp::Ordering;
use std::time::Instant;

use crate::field::FieldElement;
use crate::monomial::Monomial;
use crate::pair::{make_pair, spoly_labeled, CriticalPair};
use crate::poly::Polynomial;
use crate::signature::{is_divisible, is_rewritable, LabeledPoly};
use crate::stats::RunStats;
use crate::trace::{emit, RejectReason, TraceEvent, TraceHandle};
use crate::EngineError;

/// Critical-pair selection strategies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Process all pairs of the largest generator index before any pair of
    /// a smaller index, mimicking an incremental basis construction;
    /// within an index, smallest lcm degree first, oldest pair on ties.
    #[default]
    Incremental,
    /// Globally smallest lcm degree first, oldest pair on ties.
    MinDegree,
}

/// Engine configuration.
#[derive(Debug, Clone)]
pub struct F5Config {
    pub strategy: Strategy,
    /// Apply the syzygy criterion to selected pairs.
    pub use_syzygy: bool,
    /// Apply the rewritten criterion to selected pairs.
    pub use_rewritten: bool,
    /// Skip the divisibility/rewritability vetting of reducers inside
    /// reduction (conditions on the reducer beyond the signature bound);
    /// correctness is unaffected, some redundant steps are allowed.
    pub relaxed_reduction: bool,
    /// Abort with a diagnostic when a selected pair's lcm degree exceeds
    /// this bound; the loop has no proven termination guarantee.
    pub degree_cap: Option<u32>,
}

impl Default for F5Config {
    fn default() -> Self {
        F5Config {
            strategy: Strategy::Incremental,
            use_syzygy: true,
            use_rewritten: true,
            relaxed_reduction: false,
            degree_cap: None,
        }
    }
}

impl F5Config {
    pub fn with_strategy(strategy: Strategy) -> Self {
        F5Config { strategy, ..F5Config::default() }
    }
}

/// Result of a signature-based run.
#[derive(Debug, Clone)]
pub struct F5Output {
    /// Nonzero polynomial parts of the final basis.
    pub basis: Vec<Polynomial>,
    /// The complete final state, including zero-polynomial members.
    pub labeled: Vec<LabeledPoly>,
    pub stats: RunStats,
}

/// True when either multiplied side of the pair is divisible by the basis.
pub fn syzygy_criterion(pair: &CriticalPair, basis: &[LabeledPoly]) -> bool {
    is_divisible(&pair.u.0, &pair.u.1, &pair.f, basis)
        || is_divisible(&pair.v.0, &pair.v.1, &pair.g, basis)
}

/// True when either multiplied side of the pair is rewritable by the basis.
pub fn rewritten_criterion(pair: &CriticalPair, basis: &[LabeledPoly]) -> bool {
    is_rewritable(&pair.u.0, &pair.u.1, &pair.f, basis)
        || is_rewritable(&pair.v.0, &pair.v.1, &pair.g, basis)
}

/// Finds a qualifying top-reducer for `f` in `basis`, returning its slot
/// and the cofactor `c·x^γ`. A reducer `g` qualifies when:
/// 1. `lpp(g)` divides `lpp(f)`,
/// 2. the multiplied signature `x^γ·sig(g)` is strictly smaller than
///    `sig(f)` (so the reduction cannot disturb the signature),
/// 3. unless `relaxed`, `c·x^γ·g` is not divisible by the basis, and
/// 4. unless `relaxed`, `c·x^γ·g` is not rewritable by the basis.
pub fn f5_reduce_step(
    f: &LabeledPoly,
    basis: &[LabeledPoly],
    relaxed: bool,
) -> Option<(usize, FieldElement, Monomial)> {
    let (fc, ft) = f.poly.lm().ok()?;
    let field = f.poly.field();
    let ord = f.poly.order();
    for (slot, g) in basis.iter().enumerate() {
        if g.poly.is_zero() {
            continue;
        }
        let glpp = g.poly.lpp().expect("nonzero");
        if !glpp.divides(ft).expect("uniform arity") {
            continue;
        }
        let gamma = ft.div(glpp).expect("divides");
        if f.sig.cmp_in(&g.sig.mul(&gamma), &ord) != Ordering::Greater {
            continue;
        }
        let c = field.div(fc, g.poly.lc().expect("nonzero")).expect("same field");
        if !relaxed
            && (is_divisible(&c, &gamma, g, basis) || is_rewritable(&c, &gamma, g, basis))
        {
            continue;
        }
        return Some((slot, c, gamma));
    }
    None
}

/// Reduces `f` to a fixpoint of [`f5_reduce_step`]. The signature and
/// creation ordinal are preserved; only the polynomial part changes.
pub fn f5_reduce(
    f: &LabeledPoly,
    basis: &[LabeledPoly],
    relaxed: bool,
    stats: &mut RunStats,
    trace: &mut TraceHandle,
) -> LabeledPoly {
    let sig_in = f.sig.clone();
    let mut cur = f.clone();
    while let Some((slot, c, gamma)) = f5_reduce_step(&cur, basis, relaxed) {
        let g = &basis[slot];
        let neg = cur.poly.field().neg(&c).expect("canonical");
        cur.poly = cur.poly.add_scaled(&neg, &gamma, &g.poly).expect("same ring");
        stats.reduction_steps += 1;
        emit(trace, TraceEvent::ReductionStep { target_gen: cur.gen, reducer_gen: g.gen });
    }
    assert_eq!(cur.sig, sig_in, "reduction must preserve the signature");
    assert_eq!(cur.gen, f.gen);
    cur
}

/// Removes and returns the pair the strategy picks.
pub fn select_pair(
    pairs: &mut Vec<CriticalPair>,
    strategy: Strategy,
) -> Result<CriticalPair, EngineError> {
    if pairs.is_empty() {
        return Err(EngineError::EmptyPairSet);
    }
    let pick = match strategy {
        Strategy::MinDegree => argmin(pairs.iter(), |p| (p.degree, p.seq)),
        Strategy::Incremental => {
            let j = pairs.iter().map(|p| p.min_index()).max().expect("nonempty");
            argmin(pairs.iter().filter(|p| p.min_index() == j), |p| (p.degree, p.seq))
        }
    };
    let at = pairs
        .iter()
        .position(|p| p.seq == pick)
        .expect("selected pair is present");
    Ok(pairs.swap_remove(at))
}

fn argmin<'a, I>(iter: I, key: impl Fn(&CriticalPair) -> (u32, u64)) -> u64
where
    I: Iterator<Item = &'a CriticalPair>,
{
    iter.min_by_key(|p| key(p)).expect("nonempty").seq
}

pub(crate) fn validate(inputs: &[Polynomial]) -> Result<(), EngineError> {
    if inputs.is_empty() {
        return Err(EngineError::Input("no generator polynomials".into()));
    }
    for (i, f) in inputs.iter().enumerate() {
        if f.is_zero() {
            return Err(EngineError::Input(format!("generator {} is zero", i + 1)));
        }
        if !f.same_ring(&inputs[0]) {
            return Err(EngineError::Input(format!(
                "generator {} belongs to a different ring",
                i + 1
            )));
        }
        if inputs[..i].contains(f) {
            return Err(EngineError::Input(format!("generator {} is a duplicate", i + 1)));
        }
    }
    Ok(())
}

fn enqueue(
    pair: CriticalPair,
    pairs: &mut Vec<CriticalPair>,
    next_seq: &mut u64,
    stats: &mut RunStats,
    trace: &mut TraceHandle,
) {
    if pair.is_signature_tie() {
        stats.rejected_sig_tie += 1;
        emit(trace, TraceEvent::PairRejected {
            f_gen: pair.f.gen,
            g_gen: pair.g.gen,
            reason: RejectReason::SignatureTie,
        });
        return;
    }
    let mut pair = pair;
    pair.seq = *next_seq;
    *next_seq += 1;
    stats.pairs_created += 1;
    pairs.push(pair);
}

/// Computes a Gröbner basis of the input ideal with the signature-based
/// loop. Inputs become generators 1..=m in order; the returned basis is the
/// list of nonzero polynomial parts, not interreduced.
pub fn f5b(
    inputs: &[Polynomial],
    cfg: &F5Config,
    mut trace: TraceHandle,
) -> Result<F5Output, EngineError> {
    validate(inputs)?;
    let start = Instant::now();
    let mut stats = RunStats::default();
    let arity = inputs[0].order().arity;

    let mut basis: Vec<LabeledPoly> = inputs
        .iter()
        .enumerate()
        .map(|(i, f)| {
            LabeledPoly::new(
                crate::signature::Signature::unit(arity, i + 1),
                f.clone(),
                (i + 1) as u64,
            )
        })
        .collect();
    for member in &basis {
        emit(&mut trace, TraceEvent::BasisInsert {
            gen: member.gen,
            sig: member.sig.clone(),
            poly: member.poly.clone(),
        });
    }

    let mut pairs: Vec<CriticalPair> = Vec::new();
    let mut next_seq = 0u64;
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let pair = make_pair(&basis[i], &basis[j]).expect("inputs are nonzero");
            enqueue(pair, &mut pairs, &mut next_seq, &mut stats, &mut trace);
        }
    }

    let mut next_gen = basis.len() as u64 + 1;
    while !pairs.is_empty() {
        let pair = select_pair(&mut pairs, cfg.strategy)?;
        if let Some(cap) = cfg.degree_cap {
            if pair.degree > cap {
                return Err(EngineError::DegreeCapExceeded { cap, degree: pair.degree });
            }
        }
        emit(&mut trace, TraceEvent::PairSelected {
            f_gen: pair.f.gen,
            g_gen: pair.g.gen,
            lcm: pair.lcm.clone(),
            degree: pair.degree,
        });
        if cfg.use_syzygy && syzygy_criterion(&pair, &basis) {
            stats.rejected_syzygy += 1;
            emit(&mut trace, TraceEvent::PairRejected {
                f_gen: pair.f.gen,
                g_gen: pair.g.gen,
                reason: RejectReason::Syzygy,
            });
            continue;
        }
        if cfg.use_rewritten && rewritten_criterion(&pair, &basis) {
            stats.rejected_rewritten += 1;
            emit(&mut trace, TraceEvent::PairRejected {
                f_gen: pair.f.gen,
                g_gen: pair.g.gen,
                reason: RejectReason::Rewritten,
            });
            continue;
        }
        let sp = spoly_labeled(&pair, next_gen).expect("ties are filtered at enqueue");
        next_gen += 1;
        let reduced = f5_reduce(&sp, &basis, cfg.relaxed_reduction, &mut stats, &mut trace);
        if reduced.poly.is_zero() {
            stats.zero_reductions += 1;
            emit(&mut trace, TraceEvent::ZeroReduction {
                gen: reduced.gen,
                sig: reduced.sig.clone(),
            });
        } else {
            for q in &basis {
                if q.poly.is_zero() {
                    continue;
                }
                let pair = make_pair(&reduced, q).expect("both sides nonzero");
                enqueue(pair, &mut pairs, &mut next_seq, &mut stats, &mut trace);
            }
            emit(&mut trace, TraceEvent::BasisInsert {
                gen: reduced.gen,
                sig: reduced.sig.clone(),
                poly: reduced.poly.clone(),
            });
        }
        debug_assert!(basis.iter().all(|b| b.gen < reduced.gen));
        basis.push(reduced);
    }

    let out: Vec<Polynomial> = basis
        .iter()
        .filter(|b| !b.poly.is_zero())
        .map(|b| b.poly.clone())
        .collect();
    stats.basis_size = out.len() as u64;
    stats.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(F5Output { basis: out, labeled: basis, stats })
}
