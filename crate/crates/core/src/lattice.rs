//! Periodic orientations of the square lattice, realized on finite tori.
//!
//! A [`TorusPattern`] stores, per cell of a `pa × pb` period, whether the cell
//! is a tower and the direction of its east and north arcs. Tiling it onto an
//! `a × b` torus (with `a`, `b` multiples of the period) gives a finite
//! 4-regular digraph on which reception, domination and efficiency can be
//! checked exactly, free of boundary effects.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{reception, Digraph, Params, TowerSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusPattern {
    pub name: String,
    pa: usize,
    pb: usize,
    towers: Vec<bool>,
    /// `false`: arc leaves the cell eastward; `true`: arc enters from the east.
    east: Vec<bool>,
    /// `false`: arc leaves the cell northward; `true`: arc enters from the north.
    north: Vec<bool>,
}

impl TorusPattern {
    /// Cell grids are row-major, `pa` rows of `pb` entries.
    pub fn new(
        name: impl Into<String>,
        pa: usize,
        pb: usize,
        towers: Vec<bool>,
        east: Vec<bool>,
        north: Vec<bool>,
    ) -> Result<Self> {
        if pa == 0 || pb == 0 {
            return Err(Error::InvalidDims);
        }
        for v in [&towers, &east, &north] {
            if v.len() != pa * pb {
                return Err(Error::LengthMismatch {
                    expected: pa * pb,
                    found: v.len(),
                });
            }
        }
        Ok(TorusPattern {
            name: name.into(),
            pa,
            pb,
            towers,
            east,
            north,
        })
    }

    fn from_fn(
        name: &str,
        pa: usize,
        pb: usize,
        tower: impl Fn(usize, usize) -> bool,
        east: impl Fn(usize, usize) -> bool,
        north: impl Fn(usize, usize) -> bool,
    ) -> Self {
        let cells = |f: &dyn Fn(usize, usize) -> bool| -> Vec<bool> {
            (0..pa * pb).map(|k| f(k / pb, k % pb)).collect()
        };
        TorusPattern::new(name, pa, pb, cells(&tower), cells(&east), cells(&north))
            .expect("builtin pattern dimensions are consistent")
    }

    pub fn period(&self) -> (usize, usize) {
        (self.pa, self.pb)
    }

    pub fn is_tower(&self, i: usize, j: usize) -> bool {
        self.towers[(i % self.pa) * self.pb + j % self.pb]
    }

    pub fn east_bit(&self, i: usize, j: usize) -> bool {
        self.east[(i % self.pa) * self.pb + j % self.pb]
    }

    pub fn north_bit(&self, i: usize, j: usize) -> bool {
        self.north[(i % self.pa) * self.pb + j % self.pb]
    }

    pub fn tower_count(&self) -> usize {
        self.towers.iter().filter(|&&x| x).count()
    }

    pub fn density(&self) -> Ratio<u64> {
        Ratio::new(self.tower_count() as u64, (self.pa * self.pb) as u64)
    }

    /// Smallest torus this pattern can be tiled onto: each side the least
    /// multiple of the period that is at least 3.
    pub fn base_torus(&self) -> (usize, usize) {
        let up = |p: usize| p * 3usize.div_ceil(p);
        (up(self.pa), up(self.pb))
    }
}

/// Tower density in lowest terms.
pub fn density(pat: &TorusPattern) -> Ratio<u64> {
    pat.density()
}

/// The three periodic (2,2) patterns of densities 1/3, 1/2 and 2/3.
///
/// - `diag13`: towers on `(i + j) ≡ 0 (mod 3)`, every tower arc outward, the
///   arcs between non-towers pointing east/north.
/// - `checker12`: towers on even `i + j`; all arcs point east/north, so each
///   non-tower is fed by its west and south towers.
/// - `dense23`: towers on `(i + j) ≢ 0 (mod 3)`; all arcs point east/north,
///   so each non-tower is fed by its west and south towers.
pub fn builtin_patterns() -> Vec<TorusPattern> {
    let diag_east_north = |i: usize, j: usize| (i + j) % 3 == 2;
    alloc::vec![
        TorusPattern::from_fn(
            "diag13",
            3,
            3,
            |i, j| (i + j) % 3 == 0,
            diag_east_north,
            diag_east_north,
        ),
        TorusPattern::from_fn("checker12", 2, 2, |i, j| (i + j) % 2 == 0, |_, _| false, |_, _| false),
        TorusPattern::from_fn("dense23", 3, 3, |i, j| (i + j) % 3 != 0, |_, _| false, |_, _| false),
    ]
}

pub fn builtin_pattern(name: &str) -> Option<TorusPattern> {
    builtin_patterns().into_iter().find(|p| p.name == name)
}

/// The torus digraph on `a × b` cells (cell `(i, j)` is vertex `i * b + j`)
/// and its tiled tower set.
pub fn torus_digraph(pat: &TorusPattern, a: usize, b: usize) -> Result<(Digraph, TowerSet)> {
    for (size, period) in [(a, pat.pa), (b, pat.pb)] {
        if size == 0 || size % period != 0 {
            return Err(Error::NotAMultiple { size, period });
        }
        if size < 3 {
            return Err(Error::DegenerateTorus { size });
        }
    }
    let id = |i: usize, j: usize| (i % a) * b + j % b;
    let mut arcs = Vec::with_capacity(2 * a * b);
    for i in 0..a {
        for j in 0..b {
            let here = id(i, j);
            let east = id(i, j + 1);
            let north = id(i + 1, j);
            arcs.push(if pat.east_bit(i, j) { (east, here) } else { (here, east) });
            arcs.push(if pat.north_bit(i, j) { (north, here) } else { (here, north) });
        }
    }
    let d = Digraph::from_arcs(a * b, &arcs)?;
    let towers = TowerSet::from_members(
        a * b,
        (0..a * b).filter(|&k| pat.is_tower(k / b, k % b)),
    )?;
    Ok((d, towers))
}

/// Reading of the second efficiency clause for a vertex with exactly one
/// tower at distance `δ < t - r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EfficiencyClause {
    /// Reception must equal `t - δ`; an isolated tower is efficient.
    SelfConsistent,
    /// Reception must equal `r - δ`, as the definition is printed.
    Literal,
}

impl EfficiencyClause {
    pub fn as_str(self) -> &'static str {
        match self {
            EfficiencyClause::SelfConsistent => "self-consistent",
            EfficiencyClause::Literal => "literal",
        }
    }
}

impl fmt::Display for EfficiencyClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EfficiencyReport {
    pub pattern: String,
    pub torus: (usize, usize),
    pub dominating: bool,
    pub density: Ratio<u64>,
    pub strict_efficient: bool,
    pub nontower_exact: bool,
    pub clause_interpretation: EfficiencyClause,
    /// Cells `(i, j)` failing strict efficiency, with their reception.
    pub violations: Vec<((usize, usize), u32)>,
    pub min_reception: u32,
    pub max_reception: u32,
}

impl EfficiencyReport {
    /// The size-independent part of the report.
    pub fn verdict(&self) -> (bool, bool, bool, Ratio<u64>) {
        (
            self.dominating,
            self.strict_efficient,
            self.nontower_exact,
            self.density,
        )
    }
}

pub fn check(
    pat: &TorusPattern,
    p: Params,
    a: usize,
    b: usize,
    clause: EfficiencyClause,
) -> Result<EfficiencyReport> {
    p.check_feasible()?;
    let (d, towers) = torus_digraph(pat, a, b)?;
    let rec = reception(&d, &towers, p.t);
    let near_radius = p.t - p.r;
    let mut violations = Vec::new();
    let mut nontower_exact = true;
    for u in 0..d.n() {
        let got = rec.get(u);
        if !towers.contains(u) && got != p.r {
            nontower_exact = false;
        }
        let near: Vec<u32> = d
            .distances_to(u, near_radius)
            .into_iter()
            .filter(|&(v, _)| towers.contains(v))
            .map(|(_, dist)| dist)
            .collect();
        let ok = match near.as_slice() {
            [] => got == p.r,
            [delta] => {
                let want = match clause {
                    EfficiencyClause::SelfConsistent => p.t - delta,
                    EfficiencyClause::Literal => p.r.saturating_sub(*delta),
                };
                got == want
            }
            _ => false,
        };
        if !ok {
            violations.push(((u / b, u % b), got));
        }
    }
    let min_reception = rec.min().unwrap_or(0);
    Ok(EfficiencyReport {
        pattern: pat.name.clone(),
        torus: (a, b),
        dominating: min_reception >= p.r,
        density: pat.density(),
        strict_efficient: violations.is_empty(),
        nontower_exact,
        clause_interpretation: clause,
        violations,
        min_reception,
        max_reception: rec.values().iter().copied().max().unwrap_or(0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_dominating;
    use alloc::vec;

    fn p22() -> Params {
        Params::new(2, 2).unwrap()
    }

    #[test]
    fn builtin_densities() {
        let d: Vec<_> = builtin_patterns().iter().map(density).collect();
        assert_eq!(d, vec![Ratio::new(1, 3), Ratio::new(1, 2), Ratio::new(2, 3)]);
    }

    #[test]
    fn trivial_densities() {
        let all = TorusPattern::new("all", 1, 1, vec![true], vec![false], vec![false]).unwrap();
        assert_eq!(all.density(), Ratio::from_integer(1));
        let none = TorusPattern::new("none", 1, 1, vec![false], vec![false], vec![false]).unwrap();
        assert_eq!(none.density(), Ratio::from_integer(0));
    }

    #[test]
    fn torus_sizes() {
        let diag = builtin_pattern("diag13").unwrap();
        let (d, towers) = torus_digraph(&diag, 6, 6).unwrap();
        assert_eq!((d.n(), d.arc_count(), towers.size()), (36, 72, 12));
        let checker = builtin_pattern("checker12").unwrap();
        assert_eq!(torus_digraph(&checker, 4, 4).unwrap().1.size(), 8);
        assert_eq!(
            torus_digraph(&diag, 5, 6),
            Err(Error::NotAMultiple { size: 5, period: 3 })
        );
        assert_eq!(torus_digraph(&checker, 2, 4), Err(Error::DegenerateTorus { size: 2 }));
        assert_eq!(checker.base_torus(), (4, 4));
        assert_eq!(diag.base_torus(), (3, 3));
    }

    #[test]
    fn diag_and_checker_are_strictly_efficient() {
        for (name, size) in [("diag13", 6), ("checker12", 4)] {
            let pat = builtin_pattern(name).unwrap();
            let rep = check(&pat, p22(), size, size, EfficiencyClause::SelfConsistent).unwrap();
            assert!(rep.dominating && rep.strict_efficient && rep.nontower_exact, "{name}");
            assert_eq!((rep.min_reception, rep.max_reception), (2, 2));
        }
    }

    #[test]
    fn dense_is_nontower_exact_only() {
        let pat = builtin_pattern("dense23").unwrap();
        let rep = check(&pat, p22(), 6, 6, EfficiencyClause::SelfConsistent).unwrap();
        assert!(rep.dominating && rep.nontower_exact);
        assert!(!rep.strict_efficient);
        assert_eq!(rep.violations.len(), 12);
        assert!(rep.violations.iter().all(|&(_, r)| r == 4));
    }

    #[test]
    fn clause_matters_only_when_t_exceeds_r() {
        // A lone tower pattern at (3,1): towers receive t, the literal clause wants r.
        let pat = builtin_pattern("diag13").unwrap();
        let p31 = Params::new(3, 1).unwrap();
        let sc = check(&pat, p31, 3, 3, EfficiencyClause::SelfConsistent).unwrap();
        let lit = check(&pat, p31, 3, 3, EfficiencyClause::Literal).unwrap();
        assert!(lit.violations.len() > sc.violations.len());
        let a = check(&pat, p22(), 3, 3, EfficiencyClause::SelfConsistent).unwrap();
        let b = check(&pat, p22(), 3, 3, EfficiencyClause::Literal).unwrap();
        assert_eq!(a.verdict(), b.verdict());
    }

    #[test]
    fn dominating_flag_matches_graph_check() {
        for pat in builtin_patterns() {
            let (a, b) = pat.base_torus();
            let (d, towers) = torus_digraph(&pat, 2 * a, 2 * b).unwrap();
            let rep = check(&pat, p22(), 2 * a, 2 * b, EfficiencyClause::SelfConsistent).unwrap();
            assert_eq!(rep.dominating, is_dominating(&d, &towers, p22()));
        }
    }
}
