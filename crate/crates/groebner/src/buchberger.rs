//! Classic Buchberger engine, basis verification and the canonical reduced
//! form.
//!
//! This module is deliberately independent of the signature machinery in
//! the rest of the crate: pairs are selected by minimal lcm degree (oldest
//! first on ties), the coprime-leading-term skip is the only pruning, and
//! reduction is the full normal form. The price is many zero reductions;
//! the payoff is an oracle whose correctness does not depend on the code it
//! is used to check.

use std::time::Instant;

use crate::monomial::Monomial;
use crate::poly::{normal_form, normal_form_counting, spoly_plain, Polynomial};
use crate::stats::RunStats;
use crate::EngineError;

struct QueuedPair {
    i: usize,
    j: usize,
    degree: u32,
    seq: u64,
}

fn coprime(a: &Monomial, b: &Monomial) -> bool {
    a.exps().iter().zip(b.exps().iter()).all(|(x, y)| *x == 0 || *y == 0)
}

fn validate(inputs: &[Polynomial]) -> Result<(), EngineError> {
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

fn push_pairs(
    basis: &[Polynomial],
    new: usize,
    queue: &mut Vec<QueuedPair>,
    next_seq: &mut u64,
    stats: &mut RunStats,
) {
    let b = basis[new].lpp().expect("nonzero member");
    for k in 0..new {
        let a = basis[k].lpp().expect("nonzero member");
        let degree = a.lcm(b).expect("same arity").degree();
        queue.push(QueuedPair { i: k, j: new, degree, seq: *next_seq });
        *next_seq += 1;
        stats.pairs_created += 1;
    }
}

/// Computes a Gröbner basis of the input ideal by the textbook loop:
/// reduce every S-polynomial to normal form, keep the nonzero remainders.
/// Returns the basis (inputs first, in order) and the run counters.
pub fn buchberger(inputs: &[Polynomial]) -> Result<(Vec<Polynomial>, RunStats), EngineError> {
    validate(inputs)?;
    let start = Instant::now();
    let mut stats = RunStats::default();
    let mut basis: Vec<Polynomial> = inputs.to_vec();
    let mut queue: Vec<QueuedPair> = Vec::new();
    let mut next_seq = 0u64;
    for n in 1..basis.len() {
        push_pairs(&basis, n, &mut queue, &mut next_seq, &mut stats);
    }
    while !queue.is_empty() {
        let at = queue
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| (p.degree, p.seq))
            .map(|(at, _)| at)
            .expect("nonempty");
        let pair = queue.swap_remove(at);
        let f = &basis[pair.i];
        let g = &basis[pair.j];
        if coprime(f.lpp().expect("nonzero"), g.lpp().expect("nonzero")) {
            continue;
        }
        let s = spoly_plain(f, g).expect("nonzero members");
        let nf = normal_form_counting(&s, &basis, &mut stats.reduction_steps);
        if nf.is_zero() {
            stats.zero_reductions += 1;
            continue;
        }
        basis.push(nf);
        push_pairs(&basis, basis.len() - 1, &mut queue, &mut next_seq, &mut stats);
    }
    stats.basis_size = basis.len() as u64;
    stats.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok((basis, stats))
}

/// Buchberger's criterion: true iff every pairwise S-polynomial of the
/// nonzero members reduces to zero against the whole list.
pub fn is_groebner(basis: &[Polynomial]) -> bool {
    let members: Vec<&Polynomial> = basis.iter().filter(|f| !f.is_zero()).collect();
    for (a, f) in members.iter().enumerate() {
        for g in &members[a + 1..] {
            let s = spoly_plain(f, g).expect("nonzero members");
            if !normal_form(&s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Canonicalizes a Gröbner basis: drops zero members, removes members whose
/// leading power product is divisible by another member's, interreduces the
/// tails to a fixpoint, normalizes monic, and sorts descending by leading
/// power product. For a fixed ideal and order the result is unique, which
/// makes it the comparison form for cross-engine tests.
pub fn reduce_basis(basis: &[Polynomial]) -> Vec<Polynomial> {
    let mut work: Vec<Polynomial> = basis.iter().filter(|f| !f.is_zero()).cloned().collect();
    if work.is_empty() {
        return Vec::new();
    }
    let ord = work[0].order();
    // Ascending heads: a head can only be divisible by an earlier, smaller
    // one, so a single pass keeps exactly the minimal generators.
    work.sort_by(|a, b| {
        ord.cmp(a.lpp().expect("nonzero"), b.lpp().expect("nonzero")).expect("same arity")
    });
    let mut minimal: Vec<Polynomial> = Vec::new();
    'outer: for f in work {
        for g in &minimal {
            let divides = g
                .lpp()
                .expect("nonzero")
                .divides(f.lpp().expect("nonzero"))
                .expect("same arity");
            if divides {
                continue 'outer;
            }
        }
        minimal.push(f);
    }
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..minimal.len() {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let nf = normal_form(&minimal[i], &others);
            // Heads are pairwise non-divisible, so only tails can change.
            assert!(!nf.is_zero());
            if nf != minimal[i] {
                minimal[i] = nf;
                changed = true;
            }
        }
    }
    let mut out: Vec<Polynomial> = minimal
        .into_iter()
        .map(|f| f.monic().expect("nonzero"))
        .collect();
    out.sort_by(|a, b| {
        ord.cmp(b.lpp().expect("nonzero"), a.lpp().expect("nonzero")).expect("same arity")
    });
    out
}
