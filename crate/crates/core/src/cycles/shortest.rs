//! Shortest cycle through a positive edge, by Dijkstra on the earlier skeleton.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::filtration::{Chain, Filtration};

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq)]
struct Entry {
    dist: f64,
    vertex: usize,
}

impl Eq for Entry {}

impl Ord for Entry {
    // Reversed: BinaryHeap is a max-heap, we pop the smallest (dist, vertex).
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `{i}` plus a shortest path between the endpoints of edge `i` in the
/// 1-skeleton of `K_{i-1}`.
///
/// Paths are grown from the smaller endpoint id. Ties are broken by popping
/// the smallest vertex id among equal distances and by preferring the
/// predecessor with the smallest `(vertex id, edge id)`.
pub fn shortest_cycle_at(f: &Filtration, i: usize) -> Result<Chain> {
    let (a, b) = f.endpoints(i)?;
    let (src, dst) = (a.min(b), a.max(b));
    let skeleton = f.one_skeleton_at(i - 1)?;

    let n = f.dim_count(0);
    let mut dist = vec![f64::INFINITY; n];
    let mut pred = vec![(NONE, NONE); n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();

    dist[f.vertex_index(src)] = 0.0;
    heap.push(Entry {
        dist: 0.0,
        vertex: src,
    });
    let mut reached = false;
    while let Some(Entry { dist: du, vertex: u }) = heap.pop() {
        let ui = f.vertex_index(u);
        if done[ui] || du > dist[ui] {
            continue;
        }
        done[ui] = true;
        if u == dst {
            reached = true;
            break;
        }
        for (w, edge, weight) in skeleton.neighbors(u) {
            let wi = f.vertex_index(w);
            if done[wi] {
                continue;
            }
            let nd = du + weight;
            if nd < dist[wi] {
                dist[wi] = nd;
                pred[wi] = (u, edge);
                heap.push(Entry { dist: nd, vertex: w });
            } else if nd == dist[wi] && (u, edge) < pred[wi] {
                pred[wi] = (u, edge);
            }
        }
    }
    if !reached {
        return Err(Error::NotPositiveEdge(i));
    }

    let mut ids = vec![i];
    let mut v = dst;
    while v != src {
        let (p, e) = pred[f.vertex_index(v)];
        ids.push(e);
        v = p;
    }
    Ok(Chain::from_ids(1, ids))
}
