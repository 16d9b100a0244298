//! Checks whether a chain is a persistent 1-cycle for an interval.

use std::fmt;

use crate::filtration::{Chain, Filtration, Interval};
use crate::persistence::Reduction;

/// A clause of the persistent-cycle definition that a chain failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    /// The interval itself is malformed for this filtration.
    BadInterval,
    /// Some id is not an edge of the filtration.
    NotAOneChain,
    NotACycle,
    /// Some edge comes after the birth index.
    NotInBirthComplex,
    MissingBirthEdge,
    /// Already a boundary in `K_{d-1}`.
    BoundsBeforeDeath,
    /// Still not a boundary in `K_d`.
    DoesNotBoundAtDeath,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Clause::BadInterval => "interval does not fit the filtration",
            Clause::NotAOneChain => "not a 1-chain",
            Clause::NotACycle => "not a cycle",
            Clause::NotInBirthComplex => "not contained in K_b",
            Clause::MissingBirthEdge => "does not contain σ_b",
            Clause::BoundsBeforeDeath => "already a boundary in K_{d-1}",
            Clause::DoesNotBoundAtDeath => "not a boundary in K_d",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    /// Failed clauses in definition order; the first one is the reason.
    Reject(Vec<Clause>),
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }

    pub fn reason(&self) -> Option<Clause> {
        match self {
            Verdict::Accept => None,
            Verdict::Reject(c) => c.first().copied(),
        }
    }

    pub fn failed(&self) -> &[Clause] {
        match self {
            Verdict::Accept => &[],
            Verdict::Reject(c) => c,
        }
    }
}

/// Structural clauses are all evaluated and reported together; the boundary
/// clauses are only evaluated for cycles of `K_b` through `σ_b`.
pub fn verify_with(f: &Filtration, reduction: &Reduction, interval: &Interval, z: &Chain) -> Verdict {
    let b = interval.birth;
    let interval_ok = f.cell(b).is_ok_and(|c| c.is_edge())
        && interval
            .death
            .is_none_or(|d| d > b && f.cell(d).is_ok_and(|c| c.is_face()));
    if !interval_ok {
        return Verdict::Reject(vec![Clause::BadInterval]);
    }
    if !z.is_empty() && z.dim() != 1
        || z.ids().iter().any(|&e| !f.cell(e).is_ok_and(|c| c.is_edge()))
    {
        return Verdict::Reject(vec![Clause::NotAOneChain]);
    }

    let mut failed = Vec::new();
    let is_cycle = f.chain_boundary(z).is_ok_and(|bd| bd.is_empty());
    if !is_cycle {
        failed.push(Clause::NotACycle);
    }
    if z.max_id().is_some_and(|m| m > b) {
        failed.push(Clause::NotInBirthComplex);
    }
    if !z.contains(b) {
        failed.push(Clause::MissingBirthEdge);
    }
    if !failed.is_empty() {
        return Verdict::Reject(failed);
    }

    if let Some(d) = interval.death {
        // z is a cycle in K_b ⊆ K_{d-1}, so the normal form is well defined.
        if reduction.normal_form(d - 1, z.ids()).is_zero() {
            failed.push(Clause::BoundsBeforeDeath);
        }
        if !reduction.normal_form(d, z.ids()).is_zero() {
            failed.push(Clause::DoesNotBoundAtDeath);
        }
    }
    if failed.is_empty() {
        Verdict::Accept
    } else {
        Verdict::Reject(failed)
    }
}

/// One-shot verification; builds the reduction each call.
pub fn verify_persistent_cycle(f: &Filtration, interval: &Interval, z: &Chain) -> Verdict {
    verify_with(f, &Reduction::new(f), interval, z)
}
