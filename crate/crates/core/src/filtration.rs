//! Cells, filtrations, Z2 chains and barcode intervals.
//!
//! A filtration is a sequence of cells `σ_1, …, σ_m` where every prefix
//! `K_i = {σ_1, …, σ_i}` is a complex. Cell ids are 1-based positions in the
//! sequence, so `K_0` is empty. Only dimensions 0, 1 and 2 are supported.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::sparse;

/// Highest cell dimension accepted by the validator.
pub const MAX_DIM: u8 = 2;

/// Edge weight used when none is specified.
pub const DEFAULT_EDGE_WEIGHT: f64 = 1.0;

/// One simplex or cube of a filtration.
#[derive(Debug, Clone, PartialEq)]
pub struct Cell {
    pub id: usize,
    pub dim: u8,
    /// Ids of the codimension-one faces.
    pub boundary: Vec<usize>,
    /// Length used for shortest cycles. Only meaningful for edges.
    pub weight: f64,
    /// Filtration value, when the filtration was built from a function.
    pub value: Option<f64>,
}

impl Cell {
    pub fn vertex(id: usize) -> Self {
        Self {
            id,
            dim: 0,
            boundary: Vec::new(),
            weight: 0.0,
            value: None,
        }
    }

    pub fn edge(id: usize, a: usize, b: usize, weight: f64) -> Self {
        Self {
            id,
            dim: 1,
            boundary: vec![a, b],
            weight,
            value: None,
        }
    }

    pub fn face(id: usize, edges: Vec<usize>) -> Self {
        Self {
            id,
            dim: 2,
            boundary: edges,
            weight: 0.0,
            value: None,
        }
    }

    pub fn with_value(mut self, value: f64) -> Self {
        self.value = Some(value);
        self
    }

    pub fn is_vertex(&self) -> bool {
        self.dim == 0
    }

    pub fn is_edge(&self) -> bool {
        self.dim == 1
    }

    pub fn is_face(&self) -> bool {
        self.dim == 2
    }
}

/// A well-formedness failure found by [`validate_cells`].
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    IdMismatch { position: usize, found: usize },
    DimensionTooHigh { cell: usize, dim: u8 },
    UnknownFace { cell: usize, face: usize },
    FaceAfterCoface { cell: usize, face: usize },
    WrongFaceDimension { cell: usize, face: usize, found: u8 },
    VertexWithBoundary { cell: usize },
    EdgeArity { cell: usize, count: usize },
    DegenerateEdge { cell: usize },
    TooFewFaces { cell: usize, count: usize },
    DuplicateFace { cell: usize, face: usize },
    OpenBoundary { cell: usize },
    BadWeight { cell: usize },
}

impl Violation {
    /// Id of the offending cell (or the position, for id mismatches).
    pub fn cell(&self) -> usize {
        match *self {
            Violation::IdMismatch { position, .. } => position,
            Violation::DimensionTooHigh { cell, .. }
            | Violation::UnknownFace { cell, .. }
            | Violation::FaceAfterCoface { cell, .. }
            | Violation::WrongFaceDimension { cell, .. }
            | Violation::VertexWithBoundary { cell }
            | Violation::EdgeArity { cell, .. }
            | Violation::DegenerateEdge { cell }
            | Violation::TooFewFaces { cell, .. }
            | Violation::DuplicateFace { cell, .. }
            | Violation::OpenBoundary { cell }
            | Violation::BadWeight { cell } => cell,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::IdMismatch { position, found } => {
                write!(f, "cell at position {position} has id {found}")
            }
            Violation::DimensionTooHigh { cell, dim } => {
                write!(f, "dimension {dim} too high at cell {cell}")
            }
            Violation::UnknownFace { cell, face } => {
                write!(f, "unknown face {face} at cell {cell}")
            }
            Violation::FaceAfterCoface { cell, face } => {
                write!(f, "face after coface at cell {cell} (face {face})")
            }
            Violation::WrongFaceDimension { cell, face, found } => {
                write!(f, "face {face} of cell {cell} has dimension {found}")
            }
            Violation::VertexWithBoundary { cell } => {
                write!(f, "vertex with boundary at cell {cell}")
            }
            Violation::EdgeArity { cell, count } => {
                write!(f, "edge with {count} endpoints at cell {cell}")
            }
            Violation::DegenerateEdge { cell } => write!(f, "degenerate edge at cell {cell}"),
            Violation::TooFewFaces { cell, count } => {
                write!(f, "2-cell with {count} edges at cell {cell}")
            }
            Violation::DuplicateFace { cell, face } => {
                write!(f, "duplicate face {face} at cell {cell}")
            }
            Violation::OpenBoundary { cell } => write!(f, "open boundary at cell {cell}"),
            Violation::BadWeight { cell } => {
                write!(f, "negative or non-finite weight at cell {cell}")
            }
        }
    }
}

/// Checks every filtration invariant and returns all violations found.
///
/// An empty result means the cells form a valid filtration.
pub fn validate_cells(cells: &[Cell]) -> Vec<Violation> {
    let mut out = Vec::new();
    let m = cells.len();
    for (pos, cell) in cells.iter().enumerate() {
        let position = pos + 1;
        if cell.id != position {
            out.push(Violation::IdMismatch {
                position,
                found: cell.id,
            });
        }
        let id = position;
        if cell.dim > MAX_DIM {
            out.push(Violation::DimensionTooHigh { cell: id, dim: cell.dim });
            continue;
        }
        if cell.dim == 1 && !(cell.weight.is_finite() && cell.weight >= 0.0) {
            out.push(Violation::BadWeight { cell: id });
        }

        let mut faces_ok = true;
        for &face in &cell.boundary {
            if face == 0 {
                out.push(Violation::UnknownFace { cell: id, face });
                faces_ok = false;
            } else if face >= id {
                out.push(Violation::FaceAfterCoface { cell: id, face });
                faces_ok = false;
            } else {
                let found = cells[face - 1].dim;
                if found + 1 != cell.dim {
                    out.push(Violation::WrongFaceDimension { cell: id, face, found });
                    faces_ok = false;
                }
            }
        }
        let mut sorted = cell.boundary.clone();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            // Repeated endpoints of an edge are reported as a degenerate edge.
            if w[0] == w[1] && cell.dim == 2 {
                out.push(Violation::DuplicateFace { cell: id, face: w[0] });
                faces_ok = false;
            }
        }

        match cell.dim {
            0 if !cell.boundary.is_empty() => {
                out.push(Violation::VertexWithBoundary { cell: id });
            }
            1 if cell.boundary.len() != 2 => {
                out.push(Violation::EdgeArity {
                    cell: id,
                    count: cell.boundary.len(),
                });
            }
            1 if faces_ok && cell.boundary[0] == cell.boundary[1] => {
                out.push(Violation::DegenerateEdge { cell: id });
            }
            2 if cell.boundary.len() < 3 => {
                out.push(Violation::TooFewFaces {
                    cell: id,
                    count: cell.boundary.len(),
                });
                if faces_ok && !closes(cells, &cell.boundary) {
                    out.push(Violation::OpenBoundary { cell: id });
                }
            }
            2 if faces_ok && !closes(cells, &cell.boundary) => {
                out.push(Violation::OpenBoundary { cell: id });
            }
            _ => {}
        }
    }
    debug_assert!(out.iter().all(|v| v.cell() <= m.max(1)));
    out
}

/// True when every vertex touched by `edges` has even incidence.
fn closes(cells: &[Cell], edges: &[usize]) -> bool {
    let mut parity: HashMap<usize, bool> = HashMap::new();
    for &e in edges {
        for &v in &cells[e - 1].boundary {
            *parity.entry(v).or_insert(false) ^= true;
        }
    }
    parity.values().all(|odd| !odd)
}

/// A validated, immutable filtration.
#[derive(Debug, Clone)]
pub struct Filtration {
    cells: Vec<Cell>,
    dim_counts: [usize; 3],
    /// For each vertex cell id, incident `(edge id, other endpoint)` in edge order.
    incidence: Vec<Vec<(usize, usize)>>,
    /// Dense 0-based index of each vertex, `usize::MAX` for other cells.
    vertex_index: Vec<usize>,
}

impl Filtration {
    /// Validates `cells` and builds the filtration.
    pub fn new(cells: Vec<Cell>) -> Result<Self> {
        let violations = validate_cells(&cells);
        if !violations.is_empty() {
            return Err(Error::InvalidFiltration(violations));
        }
        let m = cells.len();
        let mut dim_counts = [0usize; 3];
        let mut incidence = vec![Vec::new(); m + 1];
        let mut vertex_index = vec![usize::MAX; m + 1];
        for cell in &cells {
            match cell.dim {
                0 => vertex_index[cell.id] = dim_counts[0],
                1 => {
                    let (a, b) = (cell.boundary[0], cell.boundary[1]);
                    incidence[a].push((cell.id, b));
                    incidence[b].push((cell.id, a));
                }
                _ => {}
            }
            dim_counts[cell.dim as usize] += 1;
        }
        Ok(Self {
            cells,
            dim_counts,
            incidence,
            vertex_index,
        })
    }

    pub fn empty() -> Self {
        Self::new(Vec::new()).expect("empty filtration is valid")
    }

    /// Total number of cells `m`.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Number of cells of dimension `dim`.
    pub fn dim_count(&self, dim: u8) -> usize {
        self.dim_counts.get(dim as usize).copied().unwrap_or(0)
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, id: usize) -> Result<&Cell> {
        id.checked_sub(1)
            .and_then(|i| self.cells.get(i))
            .ok_or(Error::UnknownCell(id))
    }

    /// Whether any cell carries a filtration value.
    pub fn has_values(&self) -> bool {
        self.cells.iter().any(|c| c.value.is_some())
    }

    /// Endpoints of an edge.
    pub fn endpoints(&self, edge: usize) -> Result<(usize, usize)> {
        let cell = self.cell(edge)?;
        if !cell.is_edge() {
            return Err(Error::WrongDimension {
                expected: 1,
                found: cell.dim,
            });
        }
        Ok((cell.boundary[0], cell.boundary[1]))
    }

    /// Boundary of a single cell as a chain one dimension down.
    pub fn boundary(&self, id: usize) -> Result<Chain> {
        let cell = self.cell(id)?;
        if cell.dim == 0 {
            return Ok(Chain::empty(0));
        }
        Ok(Chain::from_ids(cell.dim - 1, cell.boundary.clone()))
    }

    /// Boundary of a chain (Z2 sum of the boundaries of its cells).
    pub fn chain_boundary(&self, chain: &Chain) -> Result<Chain> {
        let mut ids = Vec::new();
        for &id in chain.ids() {
            let cell = self.cell(id)?;
            if cell.dim != chain.dim() {
                return Err(Error::WrongDimension {
                    expected: chain.dim(),
                    found: cell.dim,
                });
            }
            ids.extend_from_slice(&cell.boundary);
        }
        Ok(Chain::from_ids(chain.dim().saturating_sub(1), ids))
    }

    /// Total weight of a 1-chain, summed in increasing id order.
    pub fn weight(&self, chain: &Chain) -> f64 {
        chain
            .ids()
            .iter()
            .map(|&id| self.cells[id - 1].weight)
            .sum()
    }

    /// The 1-skeleton of `K_i`.
    pub fn one_skeleton_at(&self, i: usize) -> Result<Skeleton<'_>> {
        if i > self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            });
        }
        Ok(Skeleton {
            filtration: self,
            limit: i,
        })
    }

    pub(crate) fn vertex_index(&self, vertex: usize) -> usize {
        self.vertex_index[vertex]
    }

    pub(crate) fn incident(&self, vertex: usize, limit: usize) -> &[(usize, usize)] {
        let all = &self.incidence[vertex];
        let end = all.partition_point(|&(e, _)| e <= limit);
        &all[..end]
    }
}

/// Read-only view of the vertices and edges with id at most `limit`.
#[derive(Debug, Clone, Copy)]
pub struct Skeleton<'a> {
    filtration: &'a Filtration,
    limit: usize,
}

impl<'a> Skeleton<'a> {
    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + 'a {
        self.filtration.cells[..self.limit]
            .iter()
            .filter(|c| c.is_vertex())
            .map(|c| c.id)
    }

    /// `(edge id, endpoint, endpoint, weight)` for every edge in the view.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize, f64)> + 'a {
        self.filtration.cells[..self.limit]
            .iter()
            .filter(|c| c.is_edge())
            .map(|c| (c.id, c.boundary[0], c.boundary[1], c.weight))
    }

    /// `(neighbor, edge id, weight)` for edges at `vertex` inside the view.
    pub fn neighbors(&self, vertex: usize) -> impl Iterator<Item = (usize, usize, f64)> + 'a {
        let f = self.filtration;
        let slice: &'a [(usize, usize)] = if vertex <= self.limit && vertex < f.incidence.len() {
            f.incident(vertex, self.limit)
        } else {
            &[]
        };
        slice
            .iter()
            .map(move |&(e, w)| (w, e, f.cells[e - 1].weight))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices().count()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }
}

/// Incremental construction of a filtration, assigning ids in order.
#[derive(Debug, Default, Clone)]
pub struct FiltrationBuilder {
    cells: Vec<Cell>,
}

impl FiltrationBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn next_id(&self) -> usize {
        self.cells.len() + 1
    }

    pub fn vertex(&mut self) -> usize {
        let id = self.next_id();
        self.cells.push(Cell::vertex(id));
        id
    }

    pub fn vertices(&mut self, n: usize) -> Vec<usize> {
        (0..n).map(|_| self.vertex()).collect()
    }

    pub fn edge(&mut self, a: usize, b: usize) -> usize {
        self.weighted_edge(a, b, DEFAULT_EDGE_WEIGHT)
    }

    pub fn weighted_edge(&mut self, a: usize, b: usize, weight: f64) -> usize {
        let id = self.next_id();
        self.cells.push(Cell::edge(id, a, b, weight));
        id
    }

    pub fn face(&mut self, edges: &[usize]) -> usize {
        let id = self.next_id();
        self.cells.push(Cell::face(id, edges.to_vec()));
        id
    }

    pub fn push(&mut self, mut cell: Cell) -> usize {
        let id = self.next_id();
        cell.id = id;
        self.cells.push(cell);
        id
    }

    pub fn build(self) -> Result<Filtration> {
        Filtration::new(self.cells)
    }
}

/// A Z2 chain: a set of cell ids of one dimension.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    dim: u8,
    ids: Vec<usize>,
}

impl Chain {
    pub fn empty(dim: u8) -> Self {
        Self {
            dim,
            ids: Vec::new(),
        }
    }

    /// Builds a chain from ids, cancelling repeats in pairs.
    pub fn from_ids(dim: u8, ids: impl IntoIterator<Item = usize>) -> Self {
        Self {
            dim,
            ids: sparse::normalize(ids.into_iter().collect()),
        }
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn ids(&self) -> &[usize] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.ids.binary_search(&id).is_ok()
    }

    pub fn max_id(&self) -> Option<usize> {
        self.ids.last().copied()
    }

    pub fn into_ids(self) -> Vec<usize> {
        self.ids
    }

    /// Z2 sum. Panics when both chains are non-empty and differ in dimension.
    pub fn add(&self, other: &Chain) -> Chain {
        let dim = self.check_dim(other);
        Chain {
            dim,
            ids: sparse::sym_diff(&self.ids, &other.ids),
        }
    }

    pub fn add_assign(&mut self, other: &Chain) {
        self.dim = self.check_dim(other);
        self.ids = sparse::sym_diff(&self.ids, &other.ids);
    }

    fn check_dim(&self, other: &Chain) -> u8 {
        if self.is_empty() {
            return other.dim;
        }
        if !other.is_empty() {
            assert_eq!(self.dim, other.dim, "adding chains of different dimension");
        }
        self.dim
    }
}

/// A barcode interval `[birth, death)` of H1; `death == None` is `+∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub birth: usize,
    pub death: Option<usize>,
}

impl Interval {
    pub fn finite(birth: usize, death: usize) -> Self {
        Self {
            birth,
            death: Some(death),
        }
    }

    pub fn infinite(birth: usize) -> Self {
        Self { birth, death: None }
    }

    pub fn is_finite(&self) -> bool {
        self.death.is_some()
    }

    /// Whether index `i` lies in `[birth, death)`.
    pub fn contains(&self, i: usize) -> bool {
        self.birth <= i && self.death.is_none_or(|d| i < d)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.death {
            Some(d) => write!(f, "[{},{})", self.birth, d),
            None => write!(f, "[{},inf)", self.birth),
        }
    }
}
