//! Graphs, orientations, truncated distances and reception.
//!
//! A tower `v` broadcasting with strength `t` sends `t - d(v, w)` to every
//! `w` with `d(v, w) < t`, itself included (`d(v, v) = 0`). On a digraph the
//! distance is the length of the shortest directed path from `v` to `w`; pairs
//! with no such path are simply absent from every distance table.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::Bits;
use crate::error::{Error, Result};

/// Transmission strength `t` and required reception `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    pub t: u32,
    pub r: u32,
}

impl Params {
    pub fn new(t: u32, r: u32) -> Result<Self> {
        if t == 0 || r == 0 {
            return Err(Error::InvalidParams { t, r });
        }
        Ok(Params { t, r })
    }

    /// Like `new`, additionally rejecting `r > t`.
    pub fn feasible(t: u32, r: u32) -> Result<Self> {
        let p = Params::new(t, r)?;
        p.check_feasible()?;
        Ok(p)
    }

    pub fn check_feasible(self) -> Result<()> {
        if self.t == 0 || self.r == 0 {
            return Err(Error::InvalidParams { t: self.t, r: self.r });
        }
        if self.r > self.t {
            return Err(Error::InfeasibleParams { t: self.t, r: self.r });
        }
        Ok(())
    }
}

/// Undirected simple graph on vertices `0..n` with a canonical edge order.
///
/// Edge `i` is stored as `(u, v)` with `u < v`; the order is the insertion
/// order and doubles as the index space of orientation bit vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut edges = Vec::with_capacity(edge_list.len());
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edge_list {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::InvalidVertex { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::LoopEdge { vertex: a });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateEdge { u, v });
            }
            edges.push((u, v));
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.iter().position(|&e| e == key)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Orients every edge: bit 0 keeps `u -> v` (low id to high id), bit 1 reverses it.
    pub fn orient(&self, bits: &Bits) -> Result<Digraph> {
        if bits.len() != self.edges.len() {
            return Err(Error::LengthMismatch {
                expected: self.edges.len(),
                found: bits.len(),
            });
        }
        let arcs = self.edges.iter().enumerate().map(|(i, &(u, v))| {
            if bits.get(i) {
                (v, u)
            } else {
                (u, v)
            }
        });
        Ok(Digraph::from_arcs_unchecked(self.n, arcs))
    }

    /// Orientation given by the low `|E|` bits of `index`.
    pub fn orient_index(&self, index: u64) -> Digraph {
        let arcs = self.edges.iter().enumerate().map(|(i, &(u, v))| {
            if index >> i & 1 == 1 {
                (v, u)
            } else {
                (u, v)
            }
        });
        Digraph::from_arcs_unchecked(self.n, arcs)
    }

    /// Each edge replaced by two opposite arcs.
    pub fn doubly_directed(&self) -> Digraph {
        let arcs = self
            .edges
            .iter()
            .flat_map(|&(u, v)| [(u, v), (v, u)]);
        Digraph::from_arcs_unchecked(self.n, arcs)
    }
}

/// Simple digraph; antiparallel arcs are allowed, parallel arcs and loops are not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &(u, v) in arcs {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::InvalidVertex { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge { vertex: u });
            }
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateEdge { u, v });
            }
        }
        Ok(Self::from_arcs_unchecked(n, arcs.iter().copied()))
    }

    fn from_arcs_unchecked(n: usize, arcs: impl Iterator<Item = (usize, usize)>) -> Self {
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for (u, v) in arcs {
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        for list in out_adj.iter_mut().chain(in_adj.iter_mut()) {
            list.sort_unstable();
        }
        Digraph { n, out_adj, in_adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    #[inline]
    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn arc_count(&self) -> usize {
        self.out_adj.iter().map(Vec::len).sum()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_adj[u].binary_search(&v).is_ok()
    }

    /// All arcs sorted by tail then head.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, outs)| outs.iter().map(move |&v| (u, v)))
            .collect()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    pub fn transpose(&self) -> Digraph {
        Digraph {
            n: self.n,
            out_adj: self.in_adj.clone(),
            in_adj: self.out_adj.clone(),
        }
    }

    /// Directed distances below `horizon` from `source`, in BFS order.
    pub fn distances_from(&self, source: usize, horizon: u32) -> Vec<(usize, u32)> {
        truncated_bfs(source, horizon, |u| &self.out_adj[u], self.n)
    }

    /// Directed distances below `horizon` into `target`, i.e. `d(v, target)` for each listed `v`.
    pub fn distances_to(&self, target: usize, horizon: u32) -> Vec<(usize, u32)> {
        truncated_bfs(target, horizon, |u| &self.in_adj[u], self.n)
    }
}

fn truncated_bfs<'a>(
    source: usize,
    horizon: u32,
    next: impl Fn(usize) -> &'a [usize],
    n: usize,
) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    if horizon == 0 {
        return out;
    }
    let mut dist = vec![u32::MAX; n];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u];
        out.push((u, du));
        if du + 1 >= horizon {
            continue;
        }
        for &w in next(u) {
            if dist[w] == u32::MAX {
                dist[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
    out
}

/// For every source `u`, the pairs `(v, d(u,v))` with `d(u,v) < horizon`.
pub fn bounded_distances(d: &Digraph, horizon: u32) -> Vec<Vec<(usize, u32)>> {
    (0..d.n()).map(|u| d.distances_from(u, horizon)).collect()
}

/// Set of broadcasting vertices over a host graph on `n` vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TowerSet(Bits);

impl TowerSet {
    pub fn empty(n: usize) -> Self {
        TowerSet(Bits::zeros(n))
    }

    pub fn all(n: usize) -> Self {
        TowerSet(Bits::ones(n))
    }

    pub fn from_members(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut b = Bits::zeros(n);
        for v in members {
            if v >= n {
                return Err(Error::InvalidVertex { vertex: v, n });
            }
            b.set(v, true);
        }
        Ok(TowerSet(b))
    }

    pub(crate) fn from_mask(n: usize, mask: u64) -> Self {
        TowerSet(Bits::from_index(mask, n))
    }

    #[inline]
    pub fn host_size(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.0.count_ones()
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.0.get(v)
    }

    pub fn insert(&mut self, v: usize) {
        self.0.set(v, true);
    }

    pub fn remove(&mut self, v: usize) {
        self.0.set(v, false);
    }

    pub fn members(&self) -> Vec<usize> {
        self.0.iter_ones().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter_ones()
    }

    pub fn as_bits(&self) -> &Bits {
        &self.0
    }
}

impl core::fmt::Debug for TowerSet {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Per-vertex received signal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReceptionProfile(Vec<u32>);

impl ReceptionProfile {
    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, v: usize) -> u32 {
        self.0[v]
    }

    /// `None` for the empty graph.
    pub fn min(&self) -> Option<u32> {
        self.0.iter().copied().min()
    }

    /// Vertices receiving less than `r`.
    pub fn deficient(&self, r: u32) -> Vec<usize> {
        (0..self.0.len()).filter(|&v| self.0[v] < r).collect()
    }
}

fn check_host(towers: &TowerSet, n: usize) {
    assert_eq!(
        towers.host_size(),
        n,
        "tower set sized for {} vertices used on a graph with {n}",
        towers.host_size()
    );
}

/// Directed reception of every vertex under `towers` broadcasting with strength `t`.
pub fn reception(d: &Digraph, towers: &TowerSet, t: u32) -> ReceptionProfile {
    check_host(towers, d.n());
    let mut values = vec![0u32; d.n()];
    for v in towers.iter() {
        for (w, dist) in d.distances_from(v, t) {
            values[w] += t - dist;
        }
    }
    ReceptionProfile(values)
}

/// Undirected reception: signal travels both ways along every edge.
pub fn reception_undirected(g: &Graph, towers: &TowerSet, t: u32) -> ReceptionProfile {
    check_host(towers, g.n());
    let mut values = vec![0u32; g.n()];
    for v in towers.iter() {
        for (w, dist) in truncated_bfs(v, t, |u| g.neighbors(u), g.n()) {
            values[w] += t - dist;
        }
    }
    ReceptionProfile(values)
}

pub fn is_dominating(d: &Digraph, towers: &TowerSet, p: Params) -> bool {
    reception(d, towers, p.t).values().iter().all(|&x| x >= p.r)
}

pub fn is_dominating_undirected(g: &Graph, towers: &TowerSet, p: Params) -> bool {
    reception_undirected(g, towers, p.t)
        .values()
        .iter()
        .all(|&x| x >= p.r)
}
