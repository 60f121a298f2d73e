//! Degree-by-degree matrix realization of the signature-based engine for
//! homogeneous inputs over prime fields.
//!
//! Each round collects the critical pairs of one lcm degree, turns their
//! sides into rows of a Macaulay-style matrix (after the same syzygy and
//! rewritten vetting the main engine applies), adds reducer rows on demand
//! for every monomial that appears without being a row head, and then
//! eliminates one way: a row may only be rewritten by rows of strictly
//! smaller signature. Rows whose head survives elimination are old
//! information; rows whose head changes are harvested as new basis
//! elements, and rows that vanish count as zero reductions.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::time::Instant;

use crate::field::{CoefficientField, FieldElement};
use crate::monomial::{Monomial, MonomialOrder};
use crate::pair::{make_pair, CriticalPair};
use crate::poly::Polynomial;
use crate::signature::{is_divisible, is_rewritable, LabeledPoly, Signature};
use crate::stats::RunStats;
use crate::trace::{emit, TraceEvent, TraceHandle};
use crate::EngineError;

/// One matrix row: a monomial multiple of a basis member.
#[derive(Debug, Clone)]
pub struct MatrixRow {
    /// The row's signature, `mult · sig` of the multiplied member.
    pub label: Signature,
    pub mult: Monomial,
    /// Creation ordinal of the multiplied member.
    pub gen: u64,
    pub coeffs: Vec<FieldElement>,
}

/// A degree-d coefficient matrix with signature-labeled rows.
#[derive(Debug, Clone)]
pub struct MacaulayMatrix {
    pub degree: u32,
    pub field: CoefficientField,
    pub order: MonomialOrder,
    /// Appearing degree-d monomials, descending under the active order.
    pub columns: Vec<Monomial>,
    /// Rows sorted ascending by label; labels are pairwise distinct.
    pub rows: Vec<MatrixRow>,
}

/// A single elimination step: `reducer` rewrote `reducee`.
#[derive(Debug, Clone)]
pub struct ReductionEvent {
    pub reducee: Signature,
    pub reducer: Signature,
    pub reducee_gen: u64,
    pub reducer_gen: u64,
}

/// The matrices of one degree round, kept for inspection and dumps.
#[derive(Debug, Clone)]
pub struct MatrixRound {
    pub degree: u32,
    pub pre: MacaulayMatrix,
    pub post: MacaulayMatrix,
    pub events: Vec<ReductionEvent>,
}

/// Engine configuration; the degree bound is mandatory because the
/// degree-by-degree loop has no internal stopping rule.
#[derive(Debug, Clone)]
pub struct MatrixConfig {
    pub max_degree: u32,
    pub use_syzygy: bool,
    pub use_rewritten: bool,
}

impl MatrixConfig {
    pub fn new(max_degree: u32) -> Self {
        MatrixConfig { max_degree, use_syzygy: true, use_rewritten: true }
    }
}

/// Result of a matrix run.
#[derive(Debug, Clone)]
pub struct MatrixOutput {
    /// Inputs plus all harvested nonzero polynomials.
    pub basis: Vec<Polynomial>,
    /// The complete final state, including zero-polynomial members.
    pub labeled: Vec<LabeledPoly>,
    pub stats: RunStats,
    pub rounds: Vec<MatrixRound>,
    /// True when some round harvested nothing with no pairs left pending.
    pub stabilized: bool,
}

fn head_col(coeffs: &[FieldElement]) -> Option<usize> {
    coeffs.iter().position(|c| !c.is_zero())
}

/// Assembles the degree-d matrix from the sides of the given pairs plus
/// demand-driven reducer rows. Sides are vetted by the criteria (rejections
/// are counted); reducer candidates are vetted silently and chosen as the
/// latest-created eligible multiple. One row per signature.
pub fn build_matrix(
    degree: u32,
    state: &[LabeledPoly],
    pairs: &[CriticalPair],
    cfg: &MatrixConfig,
    stats: &mut RunStats,
) -> Result<MacaulayMatrix, EngineError> {
    if state.is_empty() {
        return Err(EngineError::Input("empty matrix state".into()));
    }
    let field = state[0].poly.field();
    let ord = state[0].poly.order();
    let one = field.one();

    // Pair sides, deduplicated, vetted, one row per signature (latest
    // creation ordinal wins a signature collision).
    let mut seen: Vec<(Monomial, u64)> = Vec::new();
    let mut picked: Vec<(Monomial, usize)> = Vec::new();
    for pair in pairs {
        debug_assert_eq!(pair.degree, degree);
        let sides = [(&pair.u, &pair.f), (&pair.v, &pair.g)];
        for (cof, member) in sides {
            if seen.iter().any(|(m, g)| *g == member.gen && *m == cof.1) {
                continue;
            }
            seen.push((cof.1.clone(), member.gen));
            if cfg.use_syzygy && is_divisible(&cof.0, &cof.1, member, state) {
                stats.rejected_syzygy += 1;
                continue;
            }
            if cfg.use_rewritten && is_rewritable(&cof.0, &cof.1, member, state) {
                stats.rejected_rewritten += 1;
                continue;
            }
            let idx = state
                .iter()
                .position(|s| s.gen == member.gen)
                .expect("pair member present in the state");
            let sig = member.sig.mul(&cof.1);
            match picked
                .iter()
                .position(|(m, i)| state[*i].sig.mul(m) == sig)
            {
                Some(at) if state[picked[at].1].gen < member.gen => {
                    picked[at] = (cof.1.clone(), idx);
                }
                Some(_) => {}
                None => picked.push((cof.1.clone(), idx)),
            }
        }
    }

    // Reducer closure: every appearing monomial that is not a row head gets
    // the latest eligible multiple as a reducer row, transitively.
    let mut appearing: HashSet<Monomial> = HashSet::new();
    let mut heads: HashSet<Monomial> = HashSet::new();
    let mut queue: Vec<Monomial> = Vec::new();
    for (mult, idx) in &picked {
        let prod = state[*idx].poly.scale_mono(&one, mult).expect("same ring");
        heads.insert(prod.lpp().expect("nonzero").clone());
        for (_, m) in prod.terms() {
            if appearing.insert(m.clone()) {
                queue.push(m.clone());
            }
        }
    }
    while let Some(t) = queue.pop() {
        if heads.contains(&t) {
            continue;
        }
        let mut best: Option<(Monomial, usize)> = None;
        for (i, g) in state.iter().enumerate() {
            if g.poly.is_zero() {
                continue;
            }
            let lpp = g.poly.lpp().expect("nonzero");
            if !lpp.divides(&t).expect("uniform arity") {
                continue;
            }
            let mult = t.div(lpp).expect("divides");
            if cfg.use_syzygy && is_divisible(&one, &mult, g, state) {
                continue;
            }
            if cfg.use_rewritten && is_rewritable(&one, &mult, g, state) {
                continue;
            }
            let sig = g.sig.mul(&mult);
            if picked.iter().any(|(m, i2)| state[*i2].sig.mul(m) == sig) {
                continue;
            }
            match &best {
                Some((_, bi)) if state[*bi].gen >= g.gen => {}
                _ => best = Some((mult, i)),
            }
        }
        if let Some((mult, i)) = best {
            let prod = state[i].poly.scale_mono(&one, &mult).expect("same ring");
            for (_, m) in prod.terms() {
                if appearing.insert(m.clone()) {
                    queue.push(m.clone());
                }
            }
            heads.insert(t);
            picked.push((mult, i));
        }
    }

    let mut columns: Vec<Monomial> = appearing.into_iter().collect();
    columns.sort_by(|a, b| ord.cmp(b, a).expect("uniform arity"));
    let colidx: HashMap<Monomial, usize> =
        columns.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();

    let mut rows: Vec<MatrixRow> = picked
        .into_iter()
        .map(|(mult, idx)| {
            let prod = state[idx].poly.scale_mono(&one, &mult).expect("same ring");
            let mut coeffs = vec![field.zero(); columns.len()];
            for (c, m) in prod.terms() {
                coeffs[colidx[m]] = c.clone();
            }
            MatrixRow {
                label: state[idx].sig.mul(&mult),
                mult,
                gen: state[idx].gen,
                coeffs,
            }
        })
        .collect();
    rows.sort_by(|a, b| a.label.cmp_in(&b.label, &ord));
    for w in rows.windows(2) {
        assert_ne!(
            w[0].label.cmp_in(&w[1].label, &ord),
            Ordering::Equal,
            "row signatures must be pairwise distinct"
        );
    }
    Ok(MacaulayMatrix { degree, field, order: ord, columns, rows })
}

/// One-way elimination: rows are processed in ascending signature order; a
/// row whose head column already has a pivot is swept left to right by the
/// registered pivot rows (all of strictly smaller signature) and normalized
/// monic; a row whose head column is free keeps its content and registers
/// the pivot. Labels never change.
pub fn one_way_eliminate(m: &MacaulayMatrix) -> (MacaulayMatrix, Vec<ReductionEvent>) {
    let field = m.field;
    let ncols = m.columns.len();
    let mut out_rows: Vec<MatrixRow> = Vec::with_capacity(m.rows.len());
    let mut pivots: Vec<Option<usize>> = vec![None; ncols];
    let mut events: Vec<ReductionEvent> = Vec::new();
    for row in &m.rows {
        let mut coeffs = row.coeffs.clone();
        let touched = head_col(&coeffs).is_some_and(|h| pivots[h].is_some());
        if touched {
            let mut col = head_col(&coeffs).expect("nonzero");
            while col < ncols {
                if !coeffs[col].is_zero() {
                    if let Some(p) = pivots[col] {
                        let pivot = &out_rows[p];
                        assert_eq!(
                            pivot.label.cmp_in(&row.label, &m.order),
                            Ordering::Less,
                            "a reducer must have strictly smaller signature"
                        );
                        let c = field.div(&coeffs[col], &pivot.coeffs[col]).expect("pivot lc");
                        for k in col..ncols {
                            let delta = field.mul(&c, &pivot.coeffs[k]).expect("same field");
                            coeffs[k] = field.sub(&coeffs[k], &delta).expect("same field");
                        }
                        events.push(ReductionEvent {
                            reducee: row.label.clone(),
                            reducer: pivot.label.clone(),
                            reducee_gen: row.gen,
                            reducer_gen: pivot.gen,
                        });
                    }
                }
                col += 1;
            }
        }
        if let Some(h) = head_col(&coeffs) {
            if !coeffs[h].is_one() {
                let inv = field.inv(&coeffs[h]).expect("nonzero lc");
                for k in h..ncols {
                    coeffs[k] = field.mul(&coeffs[k], &inv).expect("same field");
                }
            }
            if pivots[h].is_none() {
                pivots[h] = Some(out_rows.len());
            }
        }
        out_rows.push(MatrixRow {
            label: row.label.clone(),
            mult: row.mult.clone(),
            gen: row.gen,
            coeffs,
        });
    }
    let post = MacaulayMatrix {
        degree: m.degree,
        field,
        order: m.order,
        columns: m.columns.clone(),
        rows: out_rows,
    };
    (post, events)
}

fn enqueue_pair(
    pair: CriticalPair,
    floor: u32,
    pairs: &mut Vec<CriticalPair>,
    next_seq: &mut u64,
    stats: &mut RunStats,
) {
    if pair.is_signature_tie() {
        stats.rejected_sig_tie += 1;
        return;
    }
    // Pairs at or below the current round degree are subsumed by rows the
    // round already processed and would never be selected again.
    if pair.degree <= floor {
        return;
    }
    let mut pair = pair;
    pair.seq = *next_seq;
    *next_seq += 1;
    stats.pairs_created += 1;
    pairs.push(pair);
}

/// Runs the degree-by-degree loop on homogeneous inputs over a prime field
/// up to `cfg.max_degree`, returning the harvested basis, the per-round
/// matrices, and whether the computation stabilized within the bound.
pub fn matrix_f5(
    inputs: &[Polynomial],
    cfg: &MatrixConfig,
    mut trace: TraceHandle,
) -> Result<MatrixOutput, EngineError> {
    crate::f5::validate(inputs)?;
    if !matches!(inputs[0].field(), CoefficientField::Prime(_)) {
        return Err(EngineError::UnsupportedField);
    }
    for (i, f) in inputs.iter().enumerate() {
        if !f.is_homogeneous() {
            return Err(EngineError::NotHomogeneous(i + 1));
        }
    }
    let start = Instant::now();
    let mut stats = RunStats::default();
    let field = inputs[0].field();
    let ord = inputs[0].order();
    let arity = ord.arity;

    let mut state: Vec<LabeledPoly> = inputs
        .iter()
        .enumerate()
        .map(|(i, f)| {
            LabeledPoly::new(Signature::unit(arity, i + 1), f.clone(), (i + 1) as u64)
        })
        .collect();
    for member in &state {
        emit(&mut trace, TraceEvent::BasisInsert {
            gen: member.gen,
            sig: member.sig.clone(),
            poly: member.poly.clone(),
        });
    }

    let mut pairs: Vec<CriticalPair> = Vec::new();
    let mut next_seq = 0u64;
    let mut next_gen = state.len() as u64 + 1;
    for i in 0..state.len() {
        for j in (i + 1)..state.len() {
            let pair = make_pair(&state[i], &state[j]).expect("inputs are nonzero");
            enqueue_pair(pair, 0, &mut pairs, &mut next_seq, &mut stats);
        }
    }

    let dmin = inputs
        .iter()
        .map(|f| f.degree().expect("nonzero"))
        .min()
        .expect("nonempty");
    let mut rounds: Vec<MatrixRound> = Vec::new();
    let mut stabilized = false;
    let mut d = dmin;
    while d <= cfg.max_degree {
        let (round_pairs, rest): (Vec<_>, Vec<_>) =
            pairs.into_iter().partition(|p| p.degree == d);
        pairs = rest;
        if round_pairs.is_empty() {
            if pairs.is_empty() {
                stabilized = true;
                break;
            }
            d += 1;
            continue;
        }
        let pre = build_matrix(d, &state, &round_pairs, cfg, &mut stats)?;
        if pre.rows.is_empty() {
            if pairs.is_empty() {
                stabilized = true;
                break;
            }
            d += 1;
            continue;
        }
        let (post, events) = one_way_eliminate(&pre);
        stats.reduction_steps += events.len() as u64;
        for e in &events {
            emit(&mut trace, TraceEvent::ReductionStep {
                target_gen: e.reducee_gen,
                reducer_gen: e.reducer_gen,
            });
        }
        let mut harvested_any = false;
        for (pre_row, post_row) in pre.rows.iter().zip(post.rows.iter()) {
            if head_col(&pre_row.coeffs) == head_col(&post_row.coeffs) {
                continue;
            }
            let gen = next_gen;
            next_gen += 1;
            let terms: Vec<(FieldElement, Monomial)> = post_row
                .coeffs
                .iter()
                .zip(post.columns.iter())
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, m)| (c.clone(), m.clone()))
                .collect();
            let poly = Polynomial::from_terms(field, ord, terms).expect("valid row terms");
            let lp = LabeledPoly::new(post_row.label.clone(), poly, gen);
            if lp.poly.is_zero() {
                stats.zero_reductions += 1;
                emit(&mut trace, TraceEvent::ZeroReduction {
                    gen: lp.gen,
                    sig: lp.sig.clone(),
                });
                state.push(lp);
            } else {
                harvested_any = true;
                emit(&mut trace, TraceEvent::BasisInsert {
                    gen: lp.gen,
                    sig: lp.sig.clone(),
                    poly: lp.poly.clone(),
                });
                for qi in 0..state.len() {
                    if state[qi].poly.is_zero() {
                        continue;
                    }
                    let pair = make_pair(&lp, &state[qi]).expect("both sides nonzero");
                    enqueue_pair(pair, d, &mut pairs, &mut next_seq, &mut stats);
                }
                state.push(lp);
            }
        }
        rounds.push(MatrixRound { degree: d, pre, post, events });
        if !harvested_any && pairs.is_empty() {
            stabilized = true;
            break;
        }
        d += 1;
    }

    let basis: Vec<Polynomial> = state
        .iter()
        .filter(|s| !s.poly.is_zero())
        .map(|s| s.poly.clone())
        .collect();
    stats.basis_size = basis.len() as u64;
    stats.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(MatrixOutput { basis, labeled: state, stats, rounds, stabilized })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::buchberger::{buchberger, reduce_basis};
    use crate::text::{parse_polynomial, render_monomial, render_polynomial, render_signature, Ring};

    fn ring() -> Ring {
        Ring::parse_header("x y z", "gf 23", "grevlex").unwrap()
    }

    /// The dense homogeneous quadric system; generator 3 is monic in x².
    fn quadrics(r: &Ring) -> Vec<Polynomial> {
        [
            "6*x^2 + 12*x*y + 4*y^2 + 14*x*z + 9*y*z + 7*z^2",
            "3*x^2 + 7*x*y + 8*y^2 + 22*x*z + 11*y*z + 22*z^2",
            "x^2 + 18*x*y + 19*y^2 + 8*x*z + 5*y*z + 7*z^2",
        ]
        .iter()
        .map(|s| parse_polynomial(r, s).unwrap())
        .collect()
    }

    fn residues(row: &MatrixRow) -> Vec<u64> {
        row.coeffs
            .iter()
            .map(|c| match c {
                FieldElement::Modular(v) => *v,
                FieldElement::Rational(_) => panic!("prime-field matrix expected"),
            })
            .collect()
    }

    fn labels(r: &Ring, m: &MacaulayMatrix) -> Vec<String> {
        m.rows.iter().map(|row| render_signature(r, &row.label)).collect()
    }

    #[test]
    fn degree_two_round_reproduces_the_golden_matrices() {
        let r = ring();
        let out = matrix_f5(&quadrics(&r), &MatrixConfig::new(2), None).unwrap();
        assert_eq!(out.rounds.len(), 1);
        let round = &out.rounds[0];
        assert_eq!(round.degree, 2);
        let cols: Vec<String> =
            round.pre.columns.iter().map(|m| render_monomial(&r, m)).collect();
        assert_eq!(cols, ["x^2", "x*y", "y^2", "x*z", "y*z", "z^2"]);
        assert_eq!(labels(&r, &round.pre), ["e3", "e2", "e1"]);
        assert_eq!(residues(&round.pre.rows[0]), [1, 18, 19, 8, 5, 7]);
        assert_eq!(residues(&round.pre.rows[1]), [3, 7, 8, 22, 11, 22]);
        assert_eq!(residues(&round.pre.rows[2]), [6, 12, 4, 14, 9, 7]);
        assert_eq!(residues(&round.post.rows[0]), [1, 18, 19, 8, 5, 7]);
        assert_eq!(residues(&round.post.rows[1]), [0, 1, 3, 2, 4, 22]);
        assert_eq!(residues(&round.post.rows[2]), [0, 0, 1, 12, 20, 18]);
        // Harvest: the e2 and e1 rows changed heads and join the state.
        let f4 = &out.labeled[3];
        let f5 = &out.labeled[4];
        assert_eq!(render_signature(&r, &f4.sig), "e2");
        assert_eq!(f4.gen, 4);
        assert_eq!(
            render_polynomial(&r, &f4.poly),
            "x*y + 3*y^2 + 2*x*z + 4*y*z + 22*z^2"
        );
        assert_eq!(render_signature(&r, &f5.sig), "e1");
        assert_eq!(f5.gen, 5);
        assert_eq!(
            render_polynomial(&r, &f5.poly),
            "y^2 + 12*x*z + 20*y*z + 18*z^2"
        );
        assert_eq!(out.stats.zero_reductions, 0);
        assert!(!out.stabilized);
    }

    #[test]
    fn degree_three_round_reproduces_the_golden_matrices() {
        let r = ring();
        let out = matrix_f5(&quadrics(&r), &MatrixConfig::new(3), None).unwrap();
        assert_eq!(out.rounds.len(), 2);
        let round = &out.rounds[1];
        assert_eq!(round.degree, 3);
        let cols: Vec<String> =
            round.pre.columns.iter().map(|m| render_monomial(&r, m)).collect();
        assert_eq!(
            cols,
            ["x^2*y", "x*y^2", "y^3", "x^2*z", "x*y*z", "y^2*z", "x*z^2", "y*z^2", "z^3"]
        );
        assert_eq!(
            labels(&r, &round.pre),
            ["z*e3", "y*e3", "z*e2", "y*e2", "x*e2", "z*e1", "y*e1", "x*e1"]
        );
        let pre: Vec<Vec<u64>> = round.pre.rows.iter().map(residues).collect();
        assert_eq!(
            pre,
            [
                vec![0, 0, 0, 1, 18, 19, 8, 5, 7],
                vec![1, 18, 19, 0, 8, 5, 0, 7, 0],
                vec![0, 0, 0, 0, 1, 3, 2, 4, 22],
                vec![0, 1, 3, 0, 2, 4, 0, 22, 0],
                vec![1, 3, 0, 2, 4, 0, 22, 0, 0],
                vec![0, 0, 0, 0, 0, 1, 12, 20, 18],
                vec![0, 0, 1, 0, 12, 20, 0, 18, 0],
                vec![0, 1, 0, 12, 20, 0, 18, 0, 0],
            ]
        );
        let post: Vec<Vec<u64>> = round.post.rows.iter().map(residues).collect();
        assert_eq!(
            post,
            [
                vec![0, 0, 0, 1, 18, 19, 8, 5, 7],
                vec![1, 18, 19, 0, 8, 5, 0, 7, 0],
                vec![0, 0, 0, 0, 1, 3, 2, 4, 22],
                vec![0, 1, 3, 0, 2, 4, 0, 22, 0],
                vec![0, 0, 1, 0, 0, 8, 1, 18, 15],
                vec![0, 0, 0, 0, 0, 1, 12, 20, 18],
                vec![0, 0, 0, 0, 0, 0, 1, 11, 13],
                vec![0, 0, 0, 0, 0, 0, 0, 1, 18],
            ]
        );
        // Harvests f6, f7, f8 with their signatures and ordinals.
        let sigs: Vec<String> = out.labeled[5..8]
            .iter()
            .map(|l| render_signature(&r, &l.sig))
            .collect();
        assert_eq!(sigs, ["x*e2", "y*e1", "x*e1"]);
        assert_eq!(
            render_polynomial(&r, &out.labeled[5].poly),
            "y^3 + 8*y^2*z + x*z^2 + 18*y*z^2 + 15*z^3"
        );
        assert_eq!(
            render_polynomial(&r, &out.labeled[6].poly),
            "x*z^2 + 11*y*z^2 + 13*z^3"
        );
        assert_eq!(
            render_polynomial(&r, &out.labeled[7].poly),
            "y*z^2 + 18*z^3"
        );
        assert_eq!(out.labeled[7].gen, 8);
    }

    #[test]
    fn reduction_events_respect_the_one_way_rule() {
        let r = ring();
        let out = matrix_f5(&quadrics(&r), &MatrixConfig::new(6), None).unwrap();
        let ord = r.order();
        let mut total = 0;
        for round in &out.rounds {
            for e in &round.events {
                assert_eq!(e.reducer.cmp_in(&e.reducee, &ord), Ordering::Less);
                total += 1;
            }
        }
        assert!(total > 0);
    }

    #[test]
    fn stabilizes_and_agrees_with_the_classic_engine() {
        let r = ring();
        let inputs = quadrics(&r);
        let out = matrix_f5(&inputs, &MatrixConfig::new(8), None).unwrap();
        assert!(out.stabilized);
        let (oracle, _) = buchberger(&inputs).unwrap();
        assert_eq!(reduce_basis(&out.basis), reduce_basis(&oracle));
    }

    #[test]
    fn single_input_returns_without_harvest() {
        let r = ring();
        let inputs = vec![parse_polynomial(&r, "x^2 + y*z").unwrap()];
        let out = matrix_f5(&inputs, &MatrixConfig::new(5), None).unwrap();
        assert_eq!(out.basis, inputs);
        assert!(out.rounds.is_empty());
        assert!(out.stabilized);
        assert_eq!(out.stats.pairs_created, 0);
    }

    #[test]
    fn low_degree_matrix_is_empty() {
        let r = ring();
        let inputs = quadrics(&r);
        let state: Vec<LabeledPoly> = inputs
            .iter()
            .enumerate()
            .map(|(i, f)| {
                LabeledPoly::new(Signature::unit(3, i + 1), f.clone(), (i + 1) as u64)
            })
            .collect();
        let mut stats = RunStats::default();
        let m = build_matrix(1, &state, &[], &MatrixConfig::new(1), &mut stats).unwrap();
        assert!(m.rows.is_empty());
        assert!(m.columns.is_empty());
    }

    #[test]
    fn one_row_matrix_eliminates_to_itself() {
        let r = ring();
        let state = [LabeledPoly::new(
            Signature::unit(3, 1),
            parse_polynomial(&r, "x^2 + 18*x*y + 19*y^2 + 8*x*z + 5*y*z + 7*z^2").unwrap(),
            1,
        )];
        // A single self-pair cannot exist; feed the row through the public
        // type directly.
        let pre = MacaulayMatrix {
            degree: 2,
            field: r.field(),
            order: r.order(),
            columns: state[0].poly.terms().iter().map(|(_, m)| m.clone()).collect(),
            rows: vec![MatrixRow {
                label: state[0].sig.clone(),
                mult: Monomial::one(3),
                gen: 1,
                coeffs: state[0].poly.terms().iter().map(|(c, _)| c.clone()).collect(),
            }],
        };
        let (post, events) = one_way_eliminate(&pre);
        assert!(events.is_empty());
        assert_eq!(residues(&post.rows[0]), residues(&pre.rows[0]));
    }

    #[test]
    fn rejects_unsupported_inputs() {
        let rq = Ring::parse_header("x y", "q", "grevlex").unwrap();
        let f = parse_polynomial(&rq, "x^2 + y^2").unwrap();
        assert!(matches!(
            matrix_f5(&[f], &MatrixConfig::new(3), None),
            Err(EngineError::UnsupportedField)
        ));
        let r = ring();
        let good = parse_polynomial(&r, "x^2 + y*z").unwrap();
        let bad = parse_polynomial(&r, "x^2 + y").unwrap();
        assert!(matches!(
            matrix_f5(&[good, bad], &MatrixConfig::new(3), None),
            Err(EngineError::NotHomogeneous(2))
        ));
    }
}
