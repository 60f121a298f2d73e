//! Loop events emitted by the engines, for streaming trace output and for
//! test assertions about the order of operations.

use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::signature::Signature;

/// Why a critical pair was discarded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectReason {
    Syzygy,
    Rewritten,
    /// Both sides multiply to the same signature; discarded at creation.
    SignatureTie,
}

/// One observable step of an engine run. Generators are identified by
/// their creation ordinals.
#[derive(Debug, Clone)]
pub enum TraceEvent {
    /// A pair left the queue for processing.
    PairSelected { f_gen: u64, g_gen: u64, lcm: Monomial, degree: u32 },
    /// A pair was discarded without producing an S-polynomial.
    PairRejected { f_gen: u64, g_gen: u64, reason: RejectReason },
    /// One top-reduction step applied to the working polynomial.
    ReductionStep { target_gen: u64, reducer_gen: u64 },
    /// A labeled polynomial joined the basis with a nonzero polynomial.
    BasisInsert { gen: u64, sig: Signature, poly: Polynomial },
    /// The working polynomial vanished; its label joins the basis anyway.
    ZeroReduction { gen: u64, sig: Signature },
}

/// Optional event sink handed to the engines.
pub type TraceHandle<'a> = Option<&'a mut dyn FnMut(TraceEvent)>;

pub(crate) fn emit(trace: &mut TraceHandle, event: TraceEvent) {
    if let Some(sink) = trace.as_deref_mut() {
        sink(event);
    }
}
