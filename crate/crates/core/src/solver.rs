//! Exact directed (t,r) broadcast domination numbers.
//!
//! The exact search is a branch and bound over set-multicover: every vertex
//! carries a deficit (`r` minus its current reception) and every candidate
//! tower covers the vertices of its out-ball with weight `t - d`. Vertex sets
//! are `u64` masks, so instances are limited to 64 vertices.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, Params, TowerSet};

/// Hard limit of the mask representation.
pub const MAX_VERTICES: usize = 64;
/// Guard for the subset-enumeration oracle.
pub const BRUTEFORCE_MAX_VERTICES: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaResult {
    pub gamma: usize,
    /// First optimum met in search order; minima are generally not unique.
    pub witness: TowerSet,
    pub nodes_explored: u64,
}

/// Out-balls and in-balls of radius `t - 1`, weighted by `t - d`.
struct Coverage {
    n: usize,
    r: i32,
    out_ball: Vec<Vec<(usize, i32)>>,
    in_ball: Vec<Vec<(usize, i32)>>,
    in_mask: Vec<u64>,
}

impl Coverage {
    fn new(d: &Digraph, p: Params) -> Self {
        let n = d.n();
        let t = p.t;
        let mut out_ball = vec![Vec::new(); n];
        let mut in_ball = vec![Vec::new(); n];
        let mut in_mask = vec![0u64; n];
        for (v, ball) in out_ball.iter_mut().enumerate() {
            for (w, dist) in d.distances_from(v, t) {
                let c = (t - dist) as i32;
                ball.push((w, c));
                in_ball[w].push((v, c));
                in_mask[w] |= 1 << v;
            }
        }
        for list in &mut in_ball {
            list.sort_unstable();
        }
        Coverage {
            n,
            r: p.r as i32,
            out_ball,
            in_ball,
            in_mask,
        }
    }

    fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn initial_need(&self) -> Vec<i32> {
        vec![self.r; self.n]
    }

    fn add(&self, v: usize, need: &mut [i32]) {
        for &(w, c) in &self.out_ball[v] {
            need[w] -= c;
        }
    }

    fn remove(&self, v: usize, need: &mut [i32]) {
        for &(w, c) in &self.out_ball[v] {
            need[w] += c;
        }
    }

    /// Total deficit reduction from adding `v`.
    fn gain(&self, v: usize, need: &[i32]) -> i32 {
        self.out_ball[v]
            .iter()
            .map(|&(w, c)| need[w].max(0).min(c))
            .sum()
    }

    fn dominates(&self, mask: u64) -> bool {
        let mut need = self.initial_need();
        for v in ones(mask) {
            self.add(v, &mut need);
        }
        need.iter().all(|&x| x <= 0)
    }
}

fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let v = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(v)
    })
}

fn check_size(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::TooLarge { size: n, limit });
    }
    Ok(())
}

fn greedy_mask(cov: &Coverage) -> u64 {
    let mut need = cov.initial_need();
    let mut chosen = 0u64;
    while need.iter().any(|&x| x > 0) {
        let mut best: Option<(i32, usize)> = None;
        for v in 0..cov.n {
            if chosen >> v & 1 == 1 {
                continue;
            }
            let g = cov.gain(v, &need);
            if g > 0 && best.is_none_or(|(bg, _)| g > bg) {
                best = Some((g, v));
            }
        }
        // A deficient vertex always gains from becoming a tower itself.
        let (_, v) = best.expect("deficient vertex without positive gain");
        chosen |= 1 << v;
        cov.add(v, &mut need);
    }
    chosen
}

/// Greedy dominating set: repeatedly adds the vertex with the largest total
/// deficit reduction, lowest id on ties.
pub fn greedy_upper_bound(d: &Digraph, p: Params) -> Result<TowerSet> {
    p.check_feasible()?;
    check_size(d.n(), MAX_VERTICES)?;
    let cov = Coverage::new(d, p);
    Ok(TowerSet::from_mask(d.n(), greedy_mask(&cov)))
}

struct Search<'a> {
    cov: &'a Coverage,
    full: u64,
    best_mask: u64,
    best_size: usize,
    nodes: u64,
}

impl Search<'_> {
    fn run(&mut self, chosen: u64, excluded: u64, size: usize, need: &mut [i32]) {
        self.nodes += 1;
        let cov = self.cov;
        let total: i32 = need.iter().map(|&x| x.max(0)).sum();
        if total == 0 {
            if size < self.best_size {
                self.best_size = size;
                self.best_mask = chosen;
            }
            return;
        }
        if size + 1 >= self.best_size {
            return;
        }
        let available = self.full & !chosen & !excluded;

        let max_gain = ones(available)
            .map(|v| cov.gain(v, need))
            .max()
            .unwrap_or(0);
        if max_gain == 0 {
            return;
        }
        let lb = (total + max_gain - 1) / max_gain;
        if size + lb as usize >= self.best_size {
            return;
        }

        // Branch on the deficient vertex with the fewest remaining candidates.
        let mut branch: Option<(u32, usize)> = None;
        for (w, &deficit) in need.iter().enumerate() {
            if deficit <= 0 {
                continue;
            }
            let cand = cov.in_mask[w] & available;
            let supply: i32 = cov.in_ball[w]
                .iter()
                .filter(|&&(v, _)| cand >> v & 1 == 1)
                .map(|&(_, c)| c)
                .sum();
            if supply < deficit {
                return;
            }
            let k = cand.count_ones();
            if branch.is_none_or(|(bk, _)| k < bk) {
                branch = Some((k, w));
            }
        }
        let (_, w) = branch.expect("positive deficit implies a deficient vertex");

        let mut excluded = excluded;
        for v in ones(cov.in_mask[w] & available) {
            cov.add(v, need);
            self.run(chosen | 1 << v, excluded, size + 1, need);
            cov.remove(v, need);
            excluded |= 1 << v;
            if size + 1 >= self.best_size {
                break;
            }
        }
    }
}

/// Exact `γ_{t,r}` of a digraph by branch and bound, seeded with the greedy set.
pub fn gamma(d: &Digraph, p: Params) -> Result<GammaResult> {
    p.check_feasible()?;
    check_size(d.n(), MAX_VERTICES)?;
    let cov = Coverage::new(d, p);
    let seed = greedy_mask(&cov);
    let mut search = Search {
        cov: &cov,
        full: cov.full_mask(),
        best_mask: seed,
        best_size: seed.count_ones() as usize,
        nodes: 0,
    };
    let mut need = cov.initial_need();
    search.run(0, 0, 0, &mut need);
    debug_assert!(cov.dominates(search.best_mask));
    Ok(GammaResult {
        gamma: search.best_size,
        witness: TowerSet::from_mask(d.n(), search.best_mask),
        nodes_explored: search.nodes,
    })
}

/// `γ_{t,r}` of an undirected graph, computed on its doubly-directed digraph.
pub fn gamma_undirected(g: &Graph, p: Params) -> Result<GammaResult> {
    gamma(&g.doubly_directed(), p)
}

/// Subset enumeration oracle: tries every `k`-subset in lexicographic order
/// for `k = 0, 1, 2, ...` and returns the first dominating one.
pub fn gamma_bruteforce(d: &Digraph, p: Params) -> Result<GammaResult> {
    p.check_feasible()?;
    check_size(d.n(), BRUTEFORCE_MAX_VERTICES)?;
    let n = d.n();
    let cov = Coverage::new(d, p);
    let mut checked = 0u64;
    for k in 0..=n {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            checked += 1;
            let mask = idx.iter().fold(0u64, |m, &v| m | 1 << v);
            if cov.dominates(mask) {
                return Ok(GammaResult {
                    gamma: k,
                    witness: TowerSet::from_mask(n, mask),
                    nodes_explored: checked,
                });
            }
            // Advance to the next k-combination in lexicographic order.
            let mut i = k;
            while i > 0 && idx[i - 1] == n - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    unreachable!("the full vertex set dominates whenever r <= t")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_dominating;

    fn p(t: u32, r: u32) -> Params {
        Params::new(t, r).unwrap()
    }

    fn source_star(n: usize) -> Digraph {
        let arcs: Vec<_> = (1..n).map(|l| (0, l)).collect();
        Digraph::from_arcs(n, &arcs).unwrap()
    }

    #[test]
    fn star_examples() {
        let s = source_star(9);
        let res = gamma(&s, p(2, 1)).unwrap();
        assert_eq!(res.gamma, 1);
        assert_eq!(res.witness.members(), vec![0]);

        let res = gamma(&s.transpose(), p(2, 1)).unwrap();
        assert_eq!(res.gamma, 8);
        assert_eq!(res.witness.members(), (1..9).collect::<Vec<_>>());
    }

    #[test]
    fn t1_needs_every_vertex() {
        let d = Digraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(gamma(&d, p(1, 1)).unwrap().gamma, 4);
        assert_eq!(greedy_upper_bound(&d, p(1, 1)).unwrap().size(), 4);
    }

    #[test]
    fn infeasible_and_too_large() {
        let d = source_star(3);
        assert_eq!(gamma(&d, p(2, 3)), Err(Error::InfeasibleParams { t: 2, r: 3 }));
        assert_eq!(gamma_bruteforce(&d, p(1, 2)), Err(Error::InfeasibleParams { t: 1, r: 2 }));
        let big = Digraph::from_arcs(26, &[]).unwrap();
        assert_eq!(
            gamma_bruteforce(&big, p(1, 1)),
            Err(Error::TooLarge { size: 26, limit: 25 })
        );
    }

    #[test]
    fn bruteforce_single_arc() {
        let d = Digraph::from_arcs(2, &[(0, 1)]).unwrap();
        let res = gamma_bruteforce(&d, p(2, 1)).unwrap();
        assert_eq!((res.gamma, res.witness.members()), (1, vec![0]));
        assert_eq!(gamma_bruteforce(&d, p(2, 2)).unwrap().gamma, 2);
    }

    #[test]
    fn greedy_star_and_grid() {
        let s = source_star(9);
        assert_eq!(greedy_upper_bound(&s, p(2, 1)).unwrap().members(), vec![0]);
        let g = crate::families::grid(3, 3).unwrap();
        let dd = g.doubly_directed();
        let greedy = greedy_upper_bound(&dd, p(2, 2)).unwrap();
        assert!(is_dominating(&dd, &greedy, p(2, 2)));
        assert!(greedy.size() >= 4);
        assert_eq!(gamma(&dd, p(2, 2)).unwrap().gamma, 4);
    }

    #[test]
    fn empty_digraph() {
        let d = Digraph::from_arcs(0, &[]).unwrap();
        assert_eq!(gamma(&d, p(2, 1)).unwrap().gamma, 0);
        assert_eq!(gamma_bruteforce(&d, p(2, 1)).unwrap().gamma, 0);
    }
}
