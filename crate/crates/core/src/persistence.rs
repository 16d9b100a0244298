//! H1 pairing and barcode by Z2 boundary-matrix reduction.
//!
//! Edges are classified with a union-find pass over the 1-skeleton: an edge
//! joining two components is negative in dimension 0 and never carries H1.
//! The remaining edges are positive. The `∂₂` columns are then reduced left to
//! right over the positive-edge rows only (negative rows never become pivots,
//! so dropping them leaves the pivots unchanged). A nonzero reduced column
//! pairs its 2-cell with its lowest edge.
//!
//! The reduced columns double as a basis of the boundary space `B₁(K_d)` for
//! every `d`: the nonzero columns with id at most `d` have distinct lowest
//! rows. [`Reduction::homology_coordinates`] uses them to put a cycle into a
//! normal form that has no entry on any of those pivot rows. The surviving
//! entries are exactly the positive edges still alive at `d`, and the map
//! `[z] ↦ normal form` is an isomorphism `H₁(K_d) → Z2^{alive(d)}`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::filtration::{Chain, Filtration, Interval};
use crate::sparse::sym_diff_into;

const NONE: usize = 0;

/// What adding a cell does to the homology of the growing complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellRole {
    Vertex,
    /// Edge joining two components (negative in dimension 0).
    Merge,
    /// Edge creating an H1 class.
    Birth,
    /// 2-cell killing an H1 class.
    Death,
    /// 2-cell creating an H2 class.
    Void,
}

/// The positive / negative / neither trichotomy, with respect to H1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
    Neither,
}

impl CellRole {
    pub fn h1_sign(self) -> Sign {
        match self {
            CellRole::Birth => Sign::Positive,
            CellRole::Death => Sign::Negative,
            _ => Sign::Neither,
        }
    }
}

/// H1 persistence pairs in index terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    /// Positive edge id to the id of the 2-cell that kills it.
    pub pairs: BTreeMap<usize, usize>,
    /// Positive edges that are never killed.
    pub essential: Vec<usize>,
    roles: Vec<CellRole>,
}

impl Pairing {
    pub fn role(&self, id: usize) -> Option<CellRole> {
        id.checked_sub(1).and_then(|i| self.roles.get(i)).copied()
    }

    pub fn roles(&self) -> &[CellRole] {
        &self.roles
    }

    pub fn is_positive_edge(&self, id: usize) -> bool {
        self.role(id) == Some(CellRole::Birth)
    }

    /// Death of the class born at `edge`: `Some(None)` for essential
    /// classes, `None` when `edge` is not a positive edge.
    pub fn death_of(&self, edge: usize) -> Option<Option<usize>> {
        if !self.is_positive_edge(edge) {
            return None;
        }
        Some(self.pairs.get(&edge).copied())
    }

    /// Every index-level interval, sorted by birth.
    pub fn intervals(&self) -> Vec<Interval> {
        let mut out: Vec<Interval> = self
            .pairs
            .iter()
            .map(|(&b, &d)| Interval::finite(b, d))
            .chain(self.essential.iter().map(|&b| Interval::infinite(b)))
            .collect();
        out.sort();
        out
    }
}

/// Reduced `∂₂` together with the pairing it induces.
#[derive(Debug, Clone)]
pub struct Reduction {
    pairing: Pairing,
    /// Row (edge id) to the 2-cell whose reduced column has that lowest row.
    pivot_owner: Vec<usize>,
    /// Reduced column stored under its pivot row.
    columns: Vec<Vec<usize>>,
    len: usize,
}

impl Reduction {
    pub fn new(f: &Filtration) -> Self {
        let m = f.len();
        let mut roles = Vec::with_capacity(m);

        // Dimension 0: union-find in filtration order.
        let mut parent: Vec<usize> = (0..=m).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }

        let mut pivot_owner = vec![NONE; m + 1];
        let mut columns: Vec<Vec<usize>> = vec![Vec::new(); m + 1];
        let mut positive = vec![false; m + 1];
        let mut scratch = Vec::new();
        let mut pairs = BTreeMap::new();

        for cell in f.cells() {
            let role = match cell.dim {
                0 => CellRole::Vertex,
                1 => {
                    let ra = find(&mut parent, cell.boundary[0]);
                    let rb = find(&mut parent, cell.boundary[1]);
                    if ra != rb {
                        parent[ra.max(rb)] = ra.min(rb);
                        CellRole::Merge
                    } else {
                        positive[cell.id] = true;
                        CellRole::Birth
                    }
                }
                _ => {
                    let mut col: Vec<usize> = cell
                        .boundary
                        .iter()
                        .copied()
                        .filter(|&e| positive[e])
                        .collect();
                    col.sort_unstable();
                    while let Some(&low) = col.last() {
                        if pivot_owner[low] == NONE {
                            break;
                        }
                        sym_diff_into(&mut col, &columns[low], &mut scratch);
                    }
                    match col.last() {
                        Some(&low) => {
                            pivot_owner[low] = cell.id;
                            pairs.insert(low, cell.id);
                            columns[low] = col;
                            CellRole::Death
                        }
                        None => CellRole::Void,
                    }
                }
            };
            roles.push(role);
        }

        let essential = (1..=m)
            .filter(|&e| positive[e] && pivot_owner[e] == NONE)
            .collect();

        Self {
            pairing: Pairing {
                pairs,
                essential,
                roles,
            },
            pivot_owner,
            columns,
            len: m,
        }
    }

    pub fn pairing(&self) -> &Pairing {
        &self.pairing
    }

    pub fn into_pairing(self) -> Pairing {
        self.pairing
    }

    /// Number of cells of the filtration this reduction was built from.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Whether the positive edge `row` is still alive in `K_d`.
    fn alive_at(&self, row: usize, d: usize) -> bool {
        let owner = self.pivot_owner[row];
        owner == NONE || owner > d
    }

    /// Coordinates of `[z]` in `H₁(K_d)`, indexed by the positive edges alive
    /// at `d`. Zero exactly when `z` bounds in `K_d`.
    ///
    /// `z` must be a 1-cycle supported in `K_d`.
    pub fn homology_coordinates(&self, f: &Filtration, d: usize, z: &Chain) -> Result<Coordinates> {
        if d > self.len {
            return Err(Error::IndexOutOfRange {
                index: d,
                len: self.len,
            });
        }
        if z.is_empty() {
            return Ok(Coordinates(Vec::new()));
        }
        if z.dim() != 1 {
            return Err(Error::WrongDimension {
                expected: 1,
                found: z.dim(),
            });
        }
        let max = z.max_id().unwrap_or(0);
        if max > d {
            return Err(Error::SupportExceedsIndex { max, index: d });
        }
        if !f.chain_boundary(z)?.is_empty() {
            return Err(Error::NotACycle);
        }
        Ok(self.normal_form(d, z.ids()))
    }

    /// Eliminates every entry sitting on a pivot row owned by a column `≤ d`,
    /// scanning from the highest row down. Assumes `ids` is a cycle in `K_d`.
    pub(crate) fn normal_form(&self, d: usize, ids: &[usize]) -> Coordinates {
        let mut col: Vec<usize> = ids
            .iter()
            .copied()
            .filter(|&e| self.pairing.is_positive_edge(e))
            .collect();
        let mut scratch = Vec::new();
        // Entries at positions >= `settled` are final.
        let mut settled = col.len();
        loop {
            let next = col[..settled]
                .iter()
                .rposition(|&row| !self.alive_at(row, d));
            let Some(pos) = next else { break };
            let row = col[pos];
            sym_diff_into(&mut col, &self.columns[row], &mut scratch);
            // The added column cancels `row` and only touches rows below it.
            settled = col.partition_point(|&r| r < row);
        }
        debug_assert!(col.iter().all(|&r| self.alive_at(r, d)));
        Coordinates(col)
    }
}

/// Sparse Z2 coordinate vector: the alive positive edges with coefficient 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Coordinates(pub Vec<usize>);

impl Coordinates {
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn support(&self) -> &[usize] {
        &self.0
    }

    pub fn add(&self, other: &Coordinates) -> Coordinates {
        Coordinates(crate::sparse::sym_diff(&self.0, &other.0))
    }
}

/// The H1 barcode: intervals sorted by birth.
///
/// When the filtration carries values, intervals whose birth and death
/// cells have equal values have zero persistence and are left out.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Barcode {
    pub intervals: Vec<Interval>,
}

impl Barcode {
    pub fn from_pairing(f: &Filtration, pairing: &Pairing) -> Self {
        let value = |id: usize| f.cells()[id - 1].value;
        let intervals = pairing
            .intervals()
            .into_iter()
            .filter(|iv| match iv.death {
                Some(d) => match (value(iv.birth), value(d)) {
                    (Some(b), Some(d)) => b != d,
                    _ => true,
                },
                None => true,
            })
            .collect();
        Self { intervals }
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Position of `interval` in the birth-sorted list.
    pub fn index_of(&self, interval: &Interval) -> Option<usize> {
        self.intervals.binary_search(interval).ok()
    }

    pub fn contains(&self, interval: &Interval) -> bool {
        self.index_of(interval).is_some()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Interval> {
        self.intervals.iter()
    }
}

/// The H1 pairing of `f`.
pub fn compute_pairs(f: &Filtration) -> Pairing {
    Reduction::new(f).into_pairing()
}

/// The H1 barcode of `f`.
pub fn barcode_h1(f: &Filtration) -> Barcode {
    Barcode::from_pairing(f, Reduction::new(f).pairing())
}

/// One-shot coordinate query; builds the reduction each call.
pub fn homology_coordinates(f: &Filtration, d: usize, z: &Chain) -> Result<Coordinates> {
    Reduction::new(f).homology_coordinates(f, d, z)
}
