//! Grid, star and path generators, their closed forms, and orientations that
//! preserve an undirected dominating set.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, Params, TowerSet};
use crate::interval::{DominationInterval, MAX_ENUMERATION_EDGES};

/// `m` rows by `n` columns; cell `(i, j)` is vertex `i * n + j`.
///
/// Horizontal edges come first in row-major order, then vertical edges in
/// row-major order.
pub fn grid(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidDims);
    }
    let mut edges = Vec::with_capacity(m * (n - 1) + n * (m - 1));
    for i in 0..m {
        for j in 0..n - 1 {
            edges.push((i * n + j, i * n + j + 1));
        }
    }
    for i in 0..m - 1 {
        for j in 0..n {
            edges.push((i * n + j, (i + 1) * n + j));
        }
    }
    Graph::new(m * n, &edges)
}

/// Star on `n` vertices: center 0, edge `k` joins 0 and `k + 1`.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidDims);
    }
    let edges: Vec<_> = (1..n).map(|l| (0, l)).collect();
    Graph::new(n, &edges)
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::new(n, &edges).expect("path edges are valid")
}

fn ceil_div(a: i64, b: i64) -> i64 {
    let q = a.div_euclid(b);
    if a.rem_euclid(b) != 0 {
        q + 1
    } else {
        q
    }
}

/// Known undirected `γ` of small grids:
///
/// | rows | (t,r) | γ                                   | n   |
/// |------|-------|-------------------------------------|-----|
/// | 3    | (2,2) | ⌈4n/3⌉                              | ≥ 3 |
/// | 4    | (2,2) | 2n − ⌈(n−6)/4⌉                      | ≥ 4 |
/// | 5    | (2,2) | 2n + ⌈(n+2)/7⌉                      | ≥ 5 |
/// | 3    | (3,1) | ⌈n/3⌉                               | ≥ 3 |
/// | 4    | (3,1) | ⌊(n+1)/7⌋ + ⌊(n+3)/7⌋ + ⌊(n+5)/7⌋ + 1 | ≥ 4 |
pub fn grid_formula_gamma(m: usize, n: usize, p: Params) -> Result<usize> {
    let ni = n as i64;
    let value = match ((p.t, p.r), m) {
        ((2, 2), 3) if n >= 3 => ceil_div(4 * ni, 3),
        ((2, 2), 4) if n >= 4 => 2 * ni - ceil_div(ni - 6, 4),
        ((2, 2), 5) if n >= 5 => 2 * ni + ceil_div(ni + 2, 7),
        ((3, 1), 3) if n >= 3 => ceil_div(ni, 3),
        ((3, 1), 4) if n >= 4 => (ni + 1) / 7 + (ni + 3) / 7 + (ni + 5) / 7 + 1,
        _ => return Err(Error::OutOfFormulaDomain),
    };
    Ok(value as usize)
}

/// Euler zigzag numbers (OEIS A000111) via the Seidel boustrophedon triangle.
pub fn zigzag(k: usize) -> BigUint {
    let mut row = vec![BigUint::one()];
    for i in 1..=k {
        let mut next = Vec::with_capacity(i + 1);
        next.push(BigUint::zero());
        for j in 1..=i {
            let v = &next[j - 1] + &row[i - j];
            next.push(v);
        }
        row = next;
    }
    row.pop().expect("row is never empty")
}

/// `⌊A000111(n+1) / A000111(n)⌋`.
pub fn zigzag_ratio_floor(n: usize) -> usize {
    (zigzag(n + 1) / zigzag(n))
        .to_usize()
        .expect("ratio of consecutive zigzag numbers is small")
}

/// Claimed lower endpoint of the contained (2,2) interval of `G_{m,n}`, `m ∈ {2,3,4}`.
pub fn grid_interval_lower(m: usize, n: usize) -> Result<usize> {
    let ni = n as i64;
    let v = match m {
        2 if n >= 1 => ni,
        3 if n >= 1 => ceil_div(4 * ni, 3),
        4 if n >= 1 => 2 * ni - ceil_div(ni - 6, 4),
        _ => return Err(Error::OutOfFormulaDomain),
    };
    Ok(v as usize)
}

/// Claimed upper endpoint of the contained (2,2) interval of `G_{m,n}`, `m ∈ {2,3,4}`.
pub fn grid_interval_upper(m: usize, n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::OutOfFormulaDomain);
    }
    let two_rows = (3 * n + 2) / 2;
    match m {
        2 => Ok(two_rows),
        3 => Ok(two_rows + (3 * n + 4) / 4),
        4 => Ok(two_rows + (3 * n + 4) / 4 + zigzag_ratio_floor(n)),
        _ => Err(Error::OutOfFormulaDomain),
    }
}

/// Closed-form directed interval of the star `S_n`, `n ≥ 3`.
pub fn star_interval(n: usize, p: Params) -> Result<DominationInterval> {
    p.check_feasible()?;
    if n < 3 {
        return Err(Error::OutOfFormulaDomain);
    }
    let (lo, hi) = match (p.t, p.r) {
        (1, 1) => (n, n),
        (2, 2) => (n - 1, n),
        (t, r) if t == r => (2, n),
        _ => (1, n - 1),
    };
    Ok(DominationInterval::from_attained((lo..=hi).collect()))
}

/// Orientation bits of `S_n^s`: leaves `1..=s` are sources, the rest sinks.
pub fn star_orientation_bits(n: usize, s: usize) -> Result<Bits> {
    if n < 2 {
        return Err(Error::InvalidDims);
    }
    if s > n - 1 {
        return Err(Error::OutOfRange { value: s, max: n - 1 });
    }
    Ok(Bits::from_members(n - 1, 0..s))
}

pub fn star_orientation(n: usize, s: usize) -> Result<Digraph> {
    let bits = star_orientation_bits(n, s)?;
    star(n)?.orient(&bits)
}

/// An orientation built from a tower set, with the edges whose direction was
/// decided by tie-break rather than by the construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreservingOrientation {
    pub bits: Bits,
    pub digraph: Digraph,
    pub flagged: Vec<usize>,
}

fn finish(g: &Graph, bits: Bits, flagged: Vec<usize>) -> PreservingOrientation {
    let digraph = g.orient(&bits).expect("bits sized from the graph");
    PreservingOrientation {
        bits,
        digraph,
        flagged,
    }
}

/// Towers become sources: tower–nontower edges point away from the tower.
/// Other edges run low id to high id; tower–tower edges are flagged.
pub fn orient_source_towers(g: &Graph, towers: &TowerSet) -> PreservingOrientation {
    let mut bits = Bits::zeros(g.edge_count());
    let mut flagged = Vec::new();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        match (towers.contains(u), towers.contains(v)) {
            (true, true) => flagged.push(i),
            (false, true) => bits.set(i, true),
            _ => {}
        }
    }
    finish(g, bits, flagged)
}

/// Pushes signal outward: towers are sources, then vertices adjacent to a
/// tower orient their remaining edges away from themselves. Edges between two
/// towers or between two tower neighbours are demanded both ways; they run
/// low id to high id and are flagged. Everything else runs low to high.
pub fn orient_outward(g: &Graph, towers: &TowerSet) -> PreservingOrientation {
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for v in towers.iter() {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let mut bits = Bits::zeros(g.edge_count());
    let mut flagged = Vec::new();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let (du, dv) = (dist[u], dist[v]);
        if du == dv && du <= 1 {
            flagged.push(i);
        } else if du <= 1 || dv <= 1 {
            // Away from whichever endpoint is closer to the towers.
            bits.set(i, dv < du);
        }
    }
    finish(g, bits, flagged)
}

/// Exhaustive search for an orientation maximizing the number of vertices
/// with in-degree at most one. Returns the first maximizer in index order.
pub fn max_low_indegree_orientation(g: &Graph) -> Result<(Bits, usize)> {
    let m = g.edge_count();
    if m > MAX_ENUMERATION_EDGES {
        return Err(Error::TooManyEdges {
            edges: m,
            limit: MAX_ENUMERATION_EDGES,
        });
    }
    let mut best = (0u64, 0usize);
    let mut indeg = vec![0u8; g.n()];
    for index in 0..1u64 << m {
        indeg.iter_mut().for_each(|x| *x = 0);
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            let head = if index >> i & 1 == 1 { u } else { v };
            indeg[head] += 1;
        }
        let count = indeg.iter().filter(|&&x| x <= 1).count();
        if count > best.1 || index == 0 {
            best = (index, count);
        }
    }
    Ok((Bits::from_index(best.0, m), best.1))
}

/// `max_low_indegree_orientation` on `G_{m,n}`, returning the digraph.
pub fn max_indegree_le1_orientation(m: usize, n: usize) -> Result<(Digraph, usize)> {
    let g = grid(m, n)?;
    let (bits, count) = max_low_indegree_orientation(&g)?;
    Ok((g.orient(&bits)?, count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_dominating;
    use crate::solver::{gamma, gamma_undirected};

    fn p(t: u32, r: u32) -> Params {
        Params::new(t, r).unwrap()
    }

    #[test]
    fn generator_shapes() {
        let g = grid(3, 5).unwrap();
        assert_eq!((g.n(), g.edge_count()), (15, 22));
        assert_eq!(grid(1, 2).unwrap(), path(2));
        let c4 = grid(2, 2).unwrap();
        assert!((0..4).all(|v| c4.degree(v) == 2));
        assert_eq!(grid(0, 3), Err(Error::InvalidDims));
        assert_eq!(star(3).unwrap().edges(), &[(0, 1), (0, 2)]);
        assert_eq!(star(2).unwrap(), path(2));
        assert_eq!(star(1), Err(Error::InvalidDims));
        assert_eq!(path(1).edge_count(), 0);
        assert_eq!(path(7).edge_count(), 6);
    }

    #[test]
    fn grid_edge_order() {
        let g = grid(2, 3).unwrap();
        assert_eq!(
            g.edges(),
            &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]
        );
    }

    #[test]
    fn formula_values() {
        assert_eq!(grid_formula_gamma(3, 6, p(2, 2)), Ok(8));
        assert_eq!(grid_formula_gamma(3, 6, p(3, 1)), Ok(2));
        assert_eq!(grid_formula_gamma(4, 6, p(3, 1)), Ok(4));
        assert_eq!(grid_formula_gamma(4, 4, p(2, 2)), Ok(8));
        assert_eq!(grid_formula_gamma(5, 5, p(2, 2)), Ok(11));
        assert_eq!(grid_formula_gamma(3, 2, p(2, 2)), Err(Error::OutOfFormulaDomain));
        assert_eq!(grid_formula_gamma(3, 5, p(3, 2)), Err(Error::OutOfFormulaDomain));
    }

    #[test]
    fn interval_endpoint_formulas() {
        assert_eq!(grid_interval_upper(2, 10), Ok(16));
        assert_eq!(grid_interval_upper(3, 10), Ok(24));
        assert_eq!(grid_interval_upper(4, 10), Ok(31));
        assert_eq!(grid_interval_upper(5, 10), Err(Error::OutOfFormulaDomain));
        assert_eq!(zigzag_ratio_floor(10), 7);
    }

    #[test]
    fn star_closed_forms() {
        let iv = star_interval(6, p(2, 2)).unwrap();
        assert_eq!((iv.min, iv.max, iv.full), (5, 6, true));
        let iv = star_interval(6, p(3, 3)).unwrap();
        assert_eq!((iv.min, iv.max), (2, 6));
        let iv = star_interval(6, p(3, 2)).unwrap();
        assert_eq!((iv.min, iv.max), (1, 5));
        assert_eq!(star_interval(2, p(2, 1)), Err(Error::OutOfFormulaDomain));
        assert_eq!(star_interval(5, p(1, 2)), Err(Error::InfeasibleParams { t: 1, r: 2 }));
    }

    #[test]
    fn star_orientations() {
        let left = star_orientation(9, 0).unwrap();
        assert!((1..9).all(|l| left.has_arc(0, l)));
        let right = star_orientation(9, 8).unwrap();
        assert_eq!(right, left.transpose());
        assert_ne!(star_orientation(5, 1).unwrap(), star_orientation(5, 2).unwrap());
        assert_eq!(star_orientation(5, 5), Err(Error::OutOfRange { value: 5, max: 4 }));
    }

    #[test]
    fn source_towers_preserve_gamma_on_grid() {
        let g = grid(3, 5).unwrap();
        let res = gamma_undirected(&g, p(2, 2)).unwrap();
        let o = orient_source_towers(&g, &res.witness);
        assert!(is_dominating(&o.digraph, &res.witness, p(2, 2)));
        assert_eq!(gamma(&o.digraph, p(2, 2)).unwrap().gamma, res.gamma);

        let all = orient_source_towers(&g, &TowerSet::all(15));
        assert_eq!(all.flagged.len(), 22);
        assert_eq!(all.bits, Bits::zeros(22));

        let s = star(5).unwrap();
        let center = orient_source_towers(&s, &TowerSet::from_members(5, [0]).unwrap());
        assert_eq!(center.digraph, star_orientation(5, 0).unwrap());
    }

    #[test]
    fn outward_preserves_gamma_on_grid() {
        let g = grid(3, 6).unwrap();
        let res = gamma_undirected(&g, p(3, 1)).unwrap();
        assert_eq!(res.gamma, 2);
        let o = orient_outward(&g, &res.witness);
        assert_eq!(gamma(&o.digraph, p(3, 1)).unwrap().gamma, 2);

        let all = orient_outward(&g, &TowerSet::all(18));
        assert_eq!(all.flagged.len(), g.edge_count());
    }

    #[test]
    fn outward_on_path() {
        let g = path(7);
        let o = orient_outward(&g, &TowerSet::from_members(7, [3]).unwrap());
        for (a, b) in [(3, 2), (3, 4), (2, 1), (4, 5)] {
            assert!(o.digraph.has_arc(a, b), "missing {a}->{b}");
        }
        assert!(o.flagged.is_empty());
    }

    #[test]
    fn low_indegree_counts() {
        assert_eq!(max_indegree_le1_orientation(2, 3).unwrap().1, 5);
        assert_eq!(max_indegree_le1_orientation(2, 4).unwrap().1, 7);
        let (d, c) = max_indegree_le1_orientation(1, 2).unwrap();
        assert_eq!((d.n(), c), (2, 2));
    }
}
