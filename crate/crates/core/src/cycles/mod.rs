//! Persistent 1-cycles.
//!
//! Every positive edge `σ_g` gets a birth cycle `c_g`: the edge plus a
//! shortest path between its endpoints in the earlier 1-skeleton. A finite
//! interval `[b, d)` is represented by `Σ_{g∈G} c_g` where `G` contains `b`
//! and the classes of the `c_g` sum to zero in `H₁(K_d)`. Only births `g ≤ b`
//! whose classes are still alive at `d` can take part, so a single interval
//! needs at most that many shortest cycles.

mod oracle;
mod shortest;
mod solve;
mod verify;

use std::sync::OnceLock;

pub use oracle::{brute_force_minimal_cycle, brute_force_with, MAX_ORACLE_EDGES};
pub use shortest::shortest_cycle_at;
pub use solve::select_generators;
pub use verify::{verify_persistent_cycle, verify_with, Clause, Verdict};

use crate::error::{Error, Result};
use crate::filtration::{Chain, Filtration, Interval};
use crate::persistence::{Barcode, CellRole, Coordinates, Pairing, Reduction};

/// A barcode interval with its representative cycle.
#[derive(Debug, Clone, PartialEq)]
pub struct PersistentCycle {
    pub interval: Interval,
    /// Birth indices whose shortest cycles were summed; its maximum is the birth.
    pub generators: Vec<usize>,
    /// `Σ_{g∈G} c_g`.
    pub chain: Chain,
    /// The shortest cycles `c_g`, in the order of `generators`.
    pub components: Vec<Chain>,
}

impl PersistentCycle {
    fn assemble(interval: Interval, generators: Vec<usize>, components: Vec<Chain>) -> Self {
        let chain = components
            .iter()
            .fold(Chain::empty(1), |acc, c| acc.add(c));
        Self {
            interval,
            generators,
            chain,
            components,
        }
    }
}

/// A filtration with its reduction, barcode and a lazily filled cache of
/// shortest birth cycles. Immutable apart from the cache, and `Sync`.
#[derive(Debug)]
pub struct Analysis {
    filtration: Filtration,
    reduction: Reduction,
    barcode: Barcode,
    shortest: Vec<OnceLock<Chain>>,
}

impl Analysis {
    pub fn new(filtration: Filtration) -> Self {
        let reduction = Reduction::new(&filtration);
        let barcode = Barcode::from_pairing(&filtration, reduction.pairing());
        let shortest = (0..=filtration.len()).map(|_| OnceLock::new()).collect();
        Self {
            filtration,
            reduction,
            barcode,
            shortest,
        }
    }

    pub fn filtration(&self) -> &Filtration {
        &self.filtration
    }

    pub fn reduction(&self) -> &Reduction {
        &self.reduction
    }

    pub fn pairing(&self) -> &Pairing {
        self.reduction.pairing()
    }

    pub fn barcode(&self) -> &Barcode {
        &self.barcode
    }

    /// Cached [`shortest_cycle_at`].
    pub fn shortest_cycle(&self, i: usize) -> Result<&Chain> {
        let slot = self.shortest.get(i).ok_or(Error::UnknownCell(i))?;
        if let Some(c) = slot.get() {
            return Ok(c);
        }
        let c = shortest_cycle_at(&self.filtration, i)?;
        Ok(slot.get_or_init(|| c))
    }

    pub fn homology_coordinates(&self, d: usize, z: &Chain) -> Result<Coordinates> {
        self.reduction.homology_coordinates(&self.filtration, d, z)
    }

    pub fn verify(&self, interval: &Interval, z: &Chain) -> Verdict {
        verify_with(&self.filtration, &self.reduction, interval, z)
    }

    /// Solves for `G = {b} ∪ S` where `S ⊆ candidates` and the classes of
    /// `c_g, g ∈ G` sum to zero in `H₁(K_d)`.
    fn solve(&self, b: usize, d: usize, candidates: impl Iterator<Item = usize>) -> Result<PersistentCycle> {
        let interval = Interval::finite(b, d);
        let coords = |g: usize| -> Result<Coordinates> {
            Ok(self.reduction.normal_form(d, self.shortest_cycle(g)?.ids()))
        };
        let target = coords(b)?;
        let mut cands = Vec::new();
        for g in candidates {
            cands.push((g, coords(g)?));
        }
        let mut generators = select_generators(&target, &cands).ok_or_else(|| {
            Error::Internal(format!("no relation among birth cycles kills {interval}"))
        })?;
        generators.push(b);
        let components = generators
            .iter()
            .map(|&g| self.shortest_cycle(g).cloned())
            .collect::<Result<Vec<_>>>()?;
        Ok(PersistentCycle::assemble(interval, generators, components))
    }

    /// One persistent cycle per barcode interval, sorted by birth.
    ///
    /// Walks the filtration keeping the set of live birth cycles: each
    /// positive edge adds its shortest cycle, each negative 2-cell solves for
    /// the relation it creates among the live cycles and retires its partner.
    pub fn persistent_basis_all(&self) -> Result<Vec<PersistentCycle>> {
        let pairing = self.pairing();
        let mut live = std::collections::BTreeSet::new();
        let mut out = Vec::with_capacity(self.barcode.len());
        let mut birth_of = std::collections::HashMap::new();
        for (&b, &d) in &pairing.pairs {
            birth_of.insert(d, b);
        }
        for cell in self.filtration.cells() {
            let i = cell.id;
            match pairing.role(i) {
                Some(CellRole::Birth) => {
                    self.shortest_cycle(i)?;
                    live.insert(i);
                }
                Some(CellRole::Death) => {
                    let b = birth_of[&i];
                    if !live.remove(&b) {
                        return Err(Error::Internal(format!("birth {b} of cell {i} is not live")));
                    }
                    let interval = Interval::finite(b, i);
                    if self.barcode.contains(&interval) {
                        out.push(self.solve(b, i, live.range(..b).copied())?);
                    }
                }
                _ => {}
            }
        }
        for g in live {
            let c = self.shortest_cycle(g)?.clone();
            out.push(PersistentCycle::assemble(Interval::infinite(g), vec![g], vec![c]));
        }
        out.sort_by_key(|pc| pc.interval);
        Ok(out)
    }

    /// The persistent cycle of a single barcode interval, computing shortest
    /// cycles only for births `g ≤ b` that are still alive at `d`.
    pub fn persistent_cycle_for(&self, interval: &Interval) -> Result<PersistentCycle> {
        if !self.barcode.contains(interval) {
            return Err(Error::NotInBarcode(*interval));
        }
        let b = interval.birth;
        let Some(d) = interval.death else {
            let c = self.shortest_cycle(b)?.clone();
            return Ok(PersistentCycle::assemble(*interval, vec![b], vec![c]));
        };
        let candidates = eligible_births(self.pairing(), interval)
            .into_iter()
            .filter(|&g| g != b);
        self.solve(b, d, candidates)
    }
}

/// Birth indices eligible for `interval`: positive edges `g ≤ b` that are
/// never killed or killed at or after the death index.
pub fn eligible_births(pairing: &Pairing, interval: &Interval) -> Vec<usize> {
    let d = interval.death;
    (1..=interval.birth)
        .filter(|&g| match (pairing.death_of(g), d) {
            (None, _) => false,
            (Some(None), _) => true,
            (Some(Some(_)), None) => false,
            (Some(Some(dg)), Some(d)) => dg >= d,
        })
        .collect()
}

/// Persistent cycles for every barcode interval of `f`.
pub fn persistent_basis_all(f: &Filtration) -> Result<Vec<PersistentCycle>> {
    Analysis::new(f.clone()).persistent_basis_all()
}

/// Persistent cycle for one barcode interval of `f`.
pub fn persistent_cycle_for(f: &Filtration, interval: &Interval) -> Result<PersistentCycle> {
    Analysis::new(f.clone()).persistent_cycle_for(interval)
}
