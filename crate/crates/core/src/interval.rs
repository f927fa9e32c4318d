//! Directed domination intervals over all orientations of a graph, arc-flip
//! walks between orientations, and randomized search for large single-flip
//! jumps.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::ops::Range;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::{Graph, Params};
use crate::solver::gamma;

/// Largest edge count whose `2^|E|` orientations are enumerated.
pub const MAX_ENUMERATION_EDGES: usize = 24;

/// The set `A_{t,r}(G)` of directed domination numbers over all orientations,
/// with its hull `[min, max]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationInterval {
    pub min: usize,
    pub max: usize,
    pub attained: BTreeSet<usize>,
    /// Every integer of `[min, max]` is attained.
    pub full: bool,
    /// First orientation (in index order) attaining each value, when kept.
    pub witnesses: BTreeMap<usize, Bits>,
}

impl DominationInterval {
    /// Panics on an empty set: every graph has at least one orientation.
    pub fn from_attained(attained: BTreeSet<usize>) -> Self {
        let min = *attained.first().expect("attained set is nonempty");
        let max = *attained.last().expect("attained set is nonempty");
        let full = attained.len() == max - min + 1;
        DominationInterval {
            min,
            max,
            attained,
            full,
            witnesses: BTreeMap::new(),
        }
    }

    pub fn is_full(&self) -> bool {
        is_full(&self.attained)
    }

    pub fn contains(&self, value: usize) -> bool {
        (self.min..=self.max).contains(&value)
    }
}

pub fn is_full(attained: &BTreeSet<usize>) -> bool {
    match (attained.first(), attained.last()) {
        (Some(&lo), Some(&hi)) => attained.len() == hi - lo + 1,
        _ => true,
    }
}

/// Returns `2^|E|` when the orientation space is small enough to enumerate.
pub fn orientation_count(g: &Graph) -> Result<u64> {
    let m = g.edge_count();
    if m > MAX_ENUMERATION_EDGES {
        return Err(Error::TooManyEdges {
            edges: m,
            limit: MAX_ENUMERATION_EDGES,
        });
    }
    Ok(1u64 << m)
}

/// Partial result over a slice of the orientation index space. Merging
/// partials in any grouping gives the same interval.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IntervalAccumulator {
    first_index: BTreeMap<usize, u64>,
}

impl IntervalAccumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, value: usize, index: u64) {
        self.first_index
            .entry(value)
            .and_modify(|i| *i = (*i).min(index))
            .or_insert(index);
    }

    pub fn merge(&mut self, other: IntervalAccumulator) {
        for (value, index) in other.first_index {
            self.record(value, index);
        }
    }

    pub fn finish(self, edge_count: usize, keep_witnesses: bool) -> DominationInterval {
        let attained = self.first_index.keys().copied().collect();
        let mut iv = DominationInterval::from_attained(attained);
        if keep_witnesses {
            iv.witnesses = self
                .first_index
                .into_iter()
                .map(|(value, index)| (value, Bits::from_index(index, edge_count)))
                .collect();
        }
        iv
    }
}

/// Solves every orientation whose index lies in `range`.
pub fn accumulate_range(g: &Graph, p: Params, range: Range<u64>) -> Result<IntervalAccumulator> {
    p.check_feasible()?;
    let total = orientation_count(g)?;
    let mut acc = IntervalAccumulator::new();
    for index in range.start..range.end.min(total) {
        let value = gamma(&g.orient_index(index), p)?.gamma;
        acc.record(value, index);
    }
    Ok(acc)
}

/// Enumerates all `2^|E|` orientations sequentially.
pub fn domination_interval(g: &Graph, p: Params, keep_witnesses: bool) -> Result<DominationInterval> {
    let total = orientation_count(g)?;
    Ok(accumulate_range(g, p, 0..total)?.finish(g.edge_count(), keep_witnesses))
}

/// `γ` of every orientation, indexed by orientation index.
pub fn gamma_table(g: &Graph, p: Params) -> Result<Vec<usize>> {
    p.check_feasible()?;
    let total = orientation_count(g)?;
    (0..total)
        .map(|index| Ok(gamma(&g.orient_index(index), p)?.gamma))
        .collect()
}

/// Largest `|Δγ|` over every orientation and every single arc flip.
pub fn max_single_flip_step(table: &[usize], edge_count: usize) -> usize {
    let mut worst = 0;
    for (index, &value) in table.iter().enumerate() {
        for e in 0..edge_count {
            let other = table[index ^ (1 << e)];
            worst = worst.max(value.abs_diff(other));
        }
    }
    worst
}

/// First orientation (in index order) with `γ = target`.
pub fn witness_orientation(g: &Graph, p: Params, target: usize) -> Result<Option<Bits>> {
    p.check_feasible()?;
    let total = orientation_count(g)?;
    for index in 0..total {
        if gamma(&g.orient_index(index), p)?.gamma == target {
            return Ok(Some(Bits::from_index(index, g.edge_count())));
        }
    }
    Ok(None)
}

/// Arc flips from one orientation to another and the `γ` seen along the way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkTrace {
    pub flip_sequence: Vec<usize>,
    /// One entry per visited orientation, starting orientation included.
    pub gamma_sequence: Vec<usize>,
}

impl WalkTrace {
    pub fn max_step(&self) -> usize {
        max_step(self)
    }
}

/// Flips the differing edges in ascending index order.
pub fn flip_walk(g: &Graph, from: &Bits, to: &Bits, p: Params) -> Result<WalkTrace> {
    p.check_feasible()?;
    for bits in [from, to] {
        if bits.len() != g.edge_count() {
            return Err(Error::LengthMismatch {
                expected: g.edge_count(),
                found: bits.len(),
            });
        }
    }
    let flips = from.diff_positions(to);
    let mut current = from.clone();
    let mut gammas = Vec::with_capacity(flips.len() + 1);
    gammas.push(gamma(&g.orient(&current)?, p)?.gamma);
    for &e in &flips {
        current.flip(e);
        gammas.push(gamma(&g.orient(&current)?, p)?.gamma);
    }
    Ok(WalkTrace {
        flip_sequence: flips,
        gamma_sequence: gammas,
    })
}

pub fn max_step(trace: &WalkTrace) -> usize {
    trace
        .gamma_sequence
        .windows(2)
        .map(|w| w[0].abs_diff(w[1]))
        .max()
        .unwrap_or(0)
}

/// A single arc flip changing `γ` by at least two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpCertificate {
    pub graph: Graph,
    pub bits: Bits,
    pub edge: usize,
    pub gamma_before: usize,
    pub gamma_after: usize,
}

impl JumpCertificate {
    pub fn delta(&self) -> i64 {
        self.gamma_after as i64 - self.gamma_before as i64
    }

    pub fn flipped_bits(&self) -> Bits {
        let mut b = self.bits.clone();
        b.flip(self.edge);
        b
    }
}

/// Connected random graph: uniform random labeled tree (Prüfer code) plus up
/// to `n / 4` extra edges, with vertex labels shuffled.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    if n < 2 {
        return Graph::new(n, &[]).expect("empty edge list");
    }
    let mut edges = Vec::with_capacity(n);
    if n == 2 {
        edges.push((0, 1));
    } else {
        let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        let mut degree = alloc::vec![1usize; n];
        for &c in &code {
            degree[c] += 1;
        }
        for &c in &code {
            let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
            edges.push((leaf, c));
            degree[leaf] -= 1;
            degree[c] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
    }
    let mut present: BTreeSet<(usize, usize)> =
        edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    let extra = rng.gen_range(0..=n / 4);
    for _ in 0..extra {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b && present.insert((a.min(b), a.max(b))) {
            edges.push((a, b));
        }
    }
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let relabeled: Vec<_> = edges.iter().map(|&(a, b)| (label[a], label[b])).collect();
    Graph::new(n, &relabeled).expect("sampled edges are simple")
}

/// Seeded search for single arc flips with `|Δγ| ≥ 2`.
///
/// Each trial samples a connected graph on `vertex_budget` vertices and a
/// uniformly random orientation, then tries flipping every arc.
pub fn jump_search(
    p: Params,
    vertex_budget: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<JumpCertificate>> {
    p.check_feasible()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = Vec::new();
    for _ in 0..trials {
        let g = random_connected_graph(&mut rng, vertex_budget);
        let m = g.edge_count();
        let bits = Bits::from_bools(&(0..m).map(|_| rng.gen::<bool>()).collect::<Vec<_>>());
        let before = gamma(&g.orient(&bits)?, p)?.gamma;
        let mut flipped = bits.clone();
        for e in 0..m {
            flipped.flip(e);
            let after = gamma(&g.orient(&flipped)?, p)?.gamma;
            flipped.flip(e);
            if before.abs_diff(after) >= 2 {
                found.push(JumpCertificate {
                    graph: g.clone(),
                    bits: bits.clone(),
                    edge: e,
                    gamma_before: before,
                    gamma_after: after,
                });
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{path, star, star_orientation_bits};
    use alloc::vec;

    fn p(t: u32, r: u32) -> Params {
        Params::new(t, r).unwrap()
    }

    #[test]
    fn star_intervals_by_enumeration() {
        let s5 = star(5).unwrap();
        let iv = domination_interval(&s5, p(2, 2), false).unwrap();
        assert_eq!((iv.min, iv.max, iv.full), (4, 5, true));
        let iv = domination_interval(&s5, p(3, 1), false).unwrap();
        assert_eq!((iv.min, iv.max, iv.full), (1, 4, true));
        let iv = domination_interval(&star(6).unwrap(), p(4, 4), false).unwrap();
        assert_eq!((iv.min, iv.max, iv.full), (2, 6, true));
        let iv = domination_interval(&path(2), p(2, 1), true).unwrap();
        assert_eq!((iv.min, iv.max), (1, 1));
        assert_eq!(iv.witnesses[&1], Bits::zeros(1));
    }

    #[test]
    fn fullness_predicate() {
        assert!(is_full(&[1, 2, 3, 4].into_iter().collect()));
        assert!(!is_full(&[1, 3].into_iter().collect()));
        let iv = DominationInterval::from_attained([1, 3].into_iter().collect());
        assert!(!iv.full && !iv.is_full());
    }

    #[test]
    fn accumulator_merge_is_partition_independent() {
        let g = star(5).unwrap();
        let whole = domination_interval(&g, p(2, 1), true).unwrap();
        let mut acc = accumulate_range(&g, p(2, 1), 11..16).unwrap();
        acc.merge(accumulate_range(&g, p(2, 1), 0..3).unwrap());
        acc.merge(accumulate_range(&g, p(2, 1), 3..11).unwrap());
        assert_eq!(acc.finish(4, true), whole);
    }

    #[test]
    fn too_many_edges() {
        let g = crate::families::grid(4, 5).unwrap();
        assert_eq!(
            domination_interval(&g, p(2, 2), false),
            Err(Error::TooManyEdges { edges: 31, limit: 24 })
        );
    }

    #[test]
    fn walks_on_stars() {
        let g = star(9).unwrap();
        let trace = flip_walk(&g, &Bits::zeros(8), &Bits::ones(8), p(2, 1)).unwrap();
        assert_eq!(trace.gamma_sequence.first(), Some(&1));
        assert_eq!(trace.gamma_sequence.last(), Some(&8));
        assert_eq!(trace.max_step(), 1);

        let same = flip_walk(&g, &Bits::zeros(8), &Bits::zeros(8), p(2, 1)).unwrap();
        assert_eq!(same.gamma_sequence.len(), 1);
        assert!(same.flip_sequence.is_empty());

        let s1 = star_orientation_bits(6, 1).unwrap();
        let s2 = star_orientation_bits(6, 2).unwrap();
        let trace = flip_walk(&star(6).unwrap(), &s1, &s2, p(3, 3)).unwrap();
        assert_eq!(trace.gamma_sequence, vec![2, 3]);
        // At t = r = 4 two source leaves already give every sink leaf 2 + 2.
        let trace = flip_walk(&star(6).unwrap(), &s1, &s2, p(4, 4)).unwrap();
        assert_eq!(trace.gamma_sequence, vec![2, 2]);

        assert_eq!(
            flip_walk(&g, &Bits::zeros(7), &Bits::zeros(8), p(2, 1)),
            Err(Error::LengthMismatch { expected: 8, found: 7 })
        );
    }

    #[test]
    fn witnesses_for_targets() {
        let s5 = star(5).unwrap();
        let w = witness_orientation(&s5, p(2, 1), 3).unwrap().unwrap();
        assert_eq!(gamma(&s5.orient(&w).unwrap(), p(2, 1)).unwrap().gamma, 3);
        assert_eq!(witness_orientation(&s5, p(2, 1), 5).unwrap(), None);
        assert_eq!(witness_orientation(&path(2), p(2, 1), 1).unwrap(), Some(Bits::zeros(1)));
    }

    #[test]
    fn sampler_is_connected_and_seeded() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..12 {
            let g = random_connected_graph(&mut rng, n);
            assert!(g.is_connected());
            assert!(g.edge_count() + 1 >= n);
        }
        let a = random_connected_graph(&mut ChaCha8Rng::seed_from_u64(3), 9);
        let b = random_connected_graph(&mut ChaCha8Rng::seed_from_u64(3), 9);
        assert_eq!(a, b);
    }

    #[test]
    fn no_jumps_for_r1_or_22() {
        assert!(jump_search(p(2, 1), 7, 20, 1).unwrap().is_empty());
        assert!(jump_search(p(2, 2), 7, 20, 1).unwrap().is_empty());
        assert_eq!(jump_search(p(2, 3), 7, 1, 1), Err(Error::InfeasibleParams { t: 2, r: 3 }));
    }
}
