//! Test-only oracles and random instance generators.
//!
//! Everything here is written independently of the library's reduction,
//! coordinate and shortest-path code so it can be used to check them.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use pcycles_core::builders::{build_rips, PointCloud};
use pcycles_core::{Chain, Filtration, Interval, Pairing, PersistentCycle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_cloud(rng: &mut ChaCha8Rng, n: usize) -> PointCloud {
    let pts = (0..n)
        .map(|_| [rng.random::<f64>(), rng.random::<f64>(), rng.random::<f64>()])
        .collect();
    PointCloud::new(pts).unwrap()
}

/// A Rips filtration on `n` random points whose threshold is drawn from
/// `[lo, hi)` and halved until the filtration has at most `max_cells` cells.
pub fn random_rips(rng: &mut ChaCha8Rng, n: usize, lo: f64, hi: f64, max_cells: usize) -> (Filtration, f64) {
    let cloud = random_cloud(rng, n);
    let mut t = rng.random_range(lo..hi);
    loop {
        let f = build_rips(&cloud, t).unwrap();
        if f.len() <= max_cells {
            return (f, t);
        }
        t *= 0.9;
    }
}

/// Textbook reduction of the full boundary matrix (all dimensions, no
/// compression, no union-find). Returns H1 finite pairs and essential births.
pub fn naive_h1(f: &Filtration) -> (Vec<(usize, usize)>, Vec<usize>) {
    let m = f.len();
    let mut reduced: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m + 1];
    let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
    for cell in f.cells() {
        let mut col: BTreeSet<usize> = cell.boundary.iter().copied().collect();
        while let Some(&low) = col.iter().next_back() {
            match owner.get(&low) {
                Some(&j) => {
                    for &x in &reduced[j] {
                        if !col.remove(&x) {
                            col.insert(x);
                        }
                    }
                }
                None => break,
            }
        }
        if let Some(&low) = col.iter().next_back() {
            owner.insert(low, cell.id);
        }
        reduced[cell.id] = col;
    }
    let mut pairs = Vec::new();
    let mut essential = Vec::new();
    for cell in f.cells().iter().filter(|c| c.is_edge()) {
        if !reduced[cell.id].is_empty() {
            continue; // kills a component
        }
        match owner.get(&cell.id) {
            Some(&d) => pairs.push((cell.id, d)),
            None => essential.push(cell.id),
        }
    }
    (pairs, essential)
}

/// Index intervals of the naive pairing, dropping zero-persistence bars when
/// values exist.
pub fn naive_barcode(f: &Filtration) -> Vec<Interval> {
    let (pairs, essential) = naive_h1(f);
    let val = |i: usize| f.cells()[i - 1].value;
    let mut out: Vec<Interval> = pairs
        .into_iter()
        .filter(|&(b, d)| match (val(b), val(d)) {
            (Some(x), Some(y)) => x != y,
            _ => true,
        })
        .map(|(b, d)| Interval::finite(b, d))
        .chain(essential.into_iter().map(Interval::infinite))
        .collect();
    out.sort();
    out
}

/// Rank over Z2 of a set of sparse column vectors (dense bitset elimination).
pub fn rank(columns: &[Vec<usize>], rows: usize) -> usize {
    let words = rows / 64 + 1;
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for col in columns {
        let mut v = vec![0u64; words];
        for &r in col {
            v[r / 64] ^= 1 << (r % 64);
        }
        for (b, &p) in basis.iter().zip(&pivots) {
            if v[p / 64] >> (p % 64) & 1 == 1 {
                for (x, y) in v.iter_mut().zip(b) {
                    *x ^= y;
                }
            }
        }
        if let Some(p) = (0..rows).find(|&r| v[r / 64] >> (r % 64) & 1 == 1) {
            // Keep the basis fully reduced at the new pivot.
            for b in basis.iter_mut() {
                if b[p / 64] >> (p % 64) & 1 == 1 {
                    for (x, y) in b.iter_mut().zip(&v) {
                        *x ^= y;
                    }
                }
            }
            basis.push(v);
            pivots.push(p);
        }
    }
    basis.len()
}

/// dim H1(K_i) = (#edges − rank ∂1) − rank ∂2, restricted to `K_i`.
pub fn betti1(f: &Filtration, i: usize) -> usize {
    let cells = &f.cells()[..i];
    let d1: Vec<Vec<usize>> = cells.iter().filter(|c| c.is_edge()).map(|c| c.boundary.clone()).collect();
    let d2: Vec<Vec<usize>> = cells.iter().filter(|c| c.is_face()).map(|c| c.boundary.clone()).collect();
    let rows = f.len() + 1;
    d1.len() - rank(&d1, rows) - rank(&d2, rows)
}

/// Whether `z` is the boundary of some set of 2-cells of `K_d`, by trying
/// every subset.
pub fn bounds_by_enumeration(f: &Filtration, d: usize, z: &Chain) -> bool {
    let faces: Vec<&[usize]> = f.cells()[..d]
        .iter()
        .filter(|c| c.is_face())
        .map(|c| c.boundary.as_slice())
        .collect();
    assert!(faces.len() <= 20, "too many 2-cells to enumerate");
    let target: BTreeSet<usize> = z.ids().iter().copied().collect();
    (0u32..1 << faces.len()).any(|mask| {
        let mut acc = BTreeSet::new();
        for (k, face) in faces.iter().enumerate() {
            if mask >> k & 1 == 1 {
                for &e in *face {
                    if !acc.remove(&e) {
                        acc.insert(e);
                    }
                }
            }
        }
        acc == target
    })
}

/// Row-reduced span of the 2-cell boundaries of `K_d`.
pub struct BoundarySpace {
    words: usize,
    basis: Vec<(usize, Vec<u64>)>,
}

impl BoundarySpace {
    pub fn new(f: &Filtration, d: usize) -> Self {
        let mut space = Self {
            words: f.len() / 64 + 1,
            basis: Vec::new(),
        };
        for c in f.cells()[..d].iter().filter(|c| c.is_face()) {
            let v = space.reduce(&c.boundary);
            if let Some(p) = lowest(&v) {
                space.basis.push((p, v));
            }
        }
        space
    }

    fn reduce(&self, ids: &[usize]) -> Vec<u64> {
        let mut v = vec![0u64; self.words];
        for &r in ids {
            v[r / 64] ^= 1 << (r % 64);
        }
        // Basis vectors were inserted in order, each reduced by the earlier
        // ones, so one pass in insertion order suffices.
        for (p, b) in &self.basis {
            if v[p / 64] >> (p % 64) & 1 == 1 {
                for (x, y) in v.iter_mut().zip(b) {
                    *x ^= y;
                }
            }
        }
        v
    }

    pub fn contains(&self, z: &Chain) -> bool {
        lowest(&self.reduce(z.ids())).is_none()
    }
}

fn lowest(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
}

/// Whether `z` is a boundary in `K_d`.
pub fn bounds_by_rank(f: &Filtration, d: usize, z: &Chain) -> bool {
    BoundarySpace::new(f, d).contains(z)
}

/// Every generator is born no later than the interval and dies no earlier.
pub fn generators_respect_interval(pairing: &Pairing, pc: &PersistentCycle) -> bool {
    let iv = pc.interval;
    pc.generators.iter().max() == Some(&iv.birth)
        && pc.generators.iter().all(|&g| {
            g <= iv.birth
                && match (pairing.death_of(g), iv.death) {
                    (Some(None), _) => true,
                    (Some(Some(dg)), Some(d)) => dg >= d,
                    _ => false,
                }
        })
}

/// No non-empty proper subset of the components sums to a boundary at the
/// death index (`K_m` for essential bars). `None` when |G| is too large.
pub fn no_proper_subset_bounds(f: &Filtration, pc: &PersistentCycle) -> Option<bool> {
    let k = pc.components.len();
    if k > 12 {
        return None;
    }
    let space = BoundarySpace::new(f, pc.interval.death.unwrap_or(f.len()));
    Some((1u32..(1 << k) - 1).all(|mask| {
        let z = (0..k)
            .filter(|i| mask >> i & 1 == 1)
            .fold(Chain::empty(1), |acc, i| acc.add(&pc.components[i]));
        !space.contains(&z)
    }))
}

/// Vertex set of every cell, sorted.
pub fn vertex_sets(f: &Filtration) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::with_capacity(f.len());
    for cell in f.cells() {
        let mut vs: Vec<usize> = if cell.is_vertex() {
            vec![cell.id]
        } else {
            cell.boundary.iter().flat_map(|&b| out[b - 1].clone()).collect()
        };
        vs.sort_unstable();
        vs.dedup();
        out.push(vs);
    }
    out
}

/// Minimum weight over all cycles of `K_i` containing edge `i`, by trying
/// every subset of the earlier edges.
pub fn min_cycle_weight_through(f: &Filtration, i: usize) -> Option<f64> {
    let edges: Vec<usize> = f.cells()[..i - 1].iter().filter(|c| c.is_edge()).map(|c| c.id).collect();
    assert!(edges.len() <= 16);
    let mut best: Option<f64> = None;
    for mask in 0u32..1 << edges.len() {
        let mut ids = vec![i];
        ids.extend((0..edges.len()).filter(|k| mask >> k & 1 == 1).map(|k| edges[k]));
        let chain = Chain::from_ids(1, ids.clone());
        if f.chain_boundary(&chain).unwrap().is_empty() {
            let w = f.weight(&chain);
            if best.is_none_or(|b| w < b) {
                best = Some(w);
            }
        }
    }
    best
}

/// Fully general Z2 sum of chains.
pub fn sum(chains: &[&Chain]) -> Chain {
    chains.iter().fold(Chain::empty(1), |acc, c| acc.add(c))
}

/// Hand-built annulus: outer triangle a-b-c, inner triangle x-y-z, and the
/// six triangles between them. The inner hole is never filled.
pub fn annulus() -> Filtration {
    let mut b = pcycles_core::FiltrationBuilder::new();
    let v = b.vertices(6);
    let (a, bb, c, x, y, z) = (v[0], v[1], v[2], v[3], v[4], v[5]);
    let ab = b.edge(a, bb);
    let bc = b.edge(bb, c);
    let ca = b.edge(a, c);
    let xy = b.edge(x, y);
    let yz = b.edge(y, z);
    let zx = b.edge(x, z);
    let ax = b.edge(a, x);
    let ay = b.edge(a, y);
    let by = b.edge(bb, y);
    let bz = b.edge(bb, z);
    let cz = b.edge(c, z);
    let cx = b.edge(c, x);
    b.face(&[ax, xy, ay]);
    b.face(&[ab, by, ay]);
    b.face(&[by, yz, bz]);
    b.face(&[bc, cz, bz]);
    b.face(&[cz, zx, cx]);
    b.face(&[ca, cx, ax]);
    b.build().unwrap()
}
