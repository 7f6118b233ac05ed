//! Resolving sets and metric dimension.
//!
//! A set `S` resolves the graph when every pair has a resolver in `S`, i.e.
//! `S` hits every resolving neighborhood `R(u, v)`. The exact search treats
//! this as a minimum hitting set problem over the neighborhoods.

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, VertexId};
use crate::resolving::{all_pairs, twin_pairs, Pair};

/// Default vertex cap for [`metric_dimension_exact`].
pub const DEFAULT_EXACT_CAP: usize = 20;

/// Hard limit of the exact search (vertex sets are `u64` bitmasks).
pub const EXACT_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolvingSetResult {
    pub set: Vec<VertexId>,
    pub is_resolving: bool,
    /// First pair (lexicographically) that no member of `set` resolves.
    pub witness: Option<Pair>,
}

pub fn is_resolving_set(dm: &DistanceMatrix, set: &[VertexId]) -> Result<ResolvingSetResult> {
    for &w in set {
        dm.check_vertex(w)?;
    }
    let witness = all_pairs(dm.vertex_count()).find(|p| {
        set.iter()
            .all(|&w| dm.get(w, p.u()) == dm.get(w, p.v()))
    });
    let mut set = set.to_vec();
    set.sort_unstable();
    set.dedup();
    Ok(ResolvingSetResult {
        set,
        is_resolving: witness.is_none(),
        witness,
    })
}

/// Pairs of which every resolving set must contain an endpoint: the twin
/// pairs, whose neighborhood is just the pair itself.
pub fn forced_pairs(dm: &DistanceMatrix) -> Vec<Pair> {
    twin_pairs(dm)
}

/// Minimum size of a resolving set of `g`, by exhaustive search.
pub fn metric_dimension_exact(g: &Graph, cap: usize) -> Result<usize> {
    metric_basis_exact(g, cap).map(|basis| basis.len())
}

/// A minimum resolving set of `g`. The graph must have at most
/// `min(cap, 64)` vertices.
pub fn metric_basis_exact(g: &Graph, cap: usize) -> Result<Vec<VertexId>> {
    let n = g.vertex_count();
    let cap = cap.min(EXACT_LIMIT);
    if n > cap {
        return Err(Error::ExactCapExceeded { n, cap });
    }
    let dm = DistanceMatrix::new(g)?;

    let mut sets: Vec<u64> = all_pairs(n)
        .map(|p| {
            let (ru, rv) = (dm.row(p.u()), dm.row(p.v()));
            (0..n)
                .filter(|&x| ru[x] != rv[x])
                .fold(0u64, |m, x| m | (1 << x))
        })
        .collect();
    sets.sort_unstable_by_key(|s| (s.count_ones(), *s));
    sets.dedup();

    let lower = forced_lower_bound(n, &forced_pairs(&dm)).max(1);
    let search = HittingSearch { sets: &sets };
    for size in lower..=n {
        if let Some(chosen) = search.find(0, 0, size) {
            return Ok((0..n).filter(|&x| chosen & (1 << x) != 0).collect());
        }
    }
    unreachable!("the full vertex set always resolves")
}

/// Twin pairs form equivalence classes; a resolving set omits at most one
/// vertex of each class.
fn forced_lower_bound(n: usize, forced: &[Pair]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for p in forced {
        let (a, b) = (root(&mut parent, p.u()), root(&mut parent, p.v()));
        if a != b {
            parent[a] = b;
        }
    }
    let mut class_size = vec![0usize; n];
    for x in 0..n {
        class_size[root(&mut parent, x)] += 1;
    }
    class_size.iter().filter(|&&s| s > 0).map(|s| s - 1).sum()
}

struct HittingSearch<'a> {
    /// Neighborhood bitmasks, smallest first.
    sets: &'a [u64],
}

impl HittingSearch<'_> {
    /// Depth-limited search for a hitting set that extends `chosen` with at
    /// most `budget` more vertices, none of them in `excluded`.
    fn find(&self, chosen: u64, excluded: u64, budget: usize) -> Option<u64> {
        let mut branch: Option<u64> = None;
        for &s in self.sets {
            if s & chosen != 0 {
                continue;
            }
            let open = s & !excluded;
            if open == 0 {
                return None;
            }
            if branch.is_none_or(|b| open.count_ones() < b.count_ones()) {
                branch = Some(open);
            }
        }
        let Some(mut candidates) = branch else {
            return Some(chosen);
        };
        if budget == 0 {
            return None;
        }
        let mut excluded = excluded;
        while candidates != 0 {
            let bit = candidates & candidates.wrapping_neg();
            candidates &= !bit;
            if let Some(found) = self.find(chosen | bit, excluded, budget - 1) {
                return Some(found);
            }
            excluded |= bit;
        }
        None
    }
}

/// Greedy upper bound: repeatedly add the vertex resolving the most pairs
/// still unresolved, ties going to the smallest id. Returned sorted.
pub fn greedy_resolving_set(g: &Graph) -> Result<Vec<VertexId>> {
    let dm = DistanceMatrix::new(g)?;
    let n = dm.vertex_count();
    let mut unresolved: Vec<Pair> = all_pairs(n).collect();
    let mut chosen = Vec::new();
    let mut taken = vec![false; n];
    while !unresolved.is_empty() {
        let mut best = (0usize, usize::MAX);
        for w in (0..n).filter(|&w| !taken[w]) {
            let row = dm.row(w);
            let count = unresolved
                .iter()
                .filter(|p| row[p.u()] != row[p.v()])
                .count();
            if count > best.0 {
                best = (count, w);
            }
        }
        let w = best.1;
        taken[w] = true;
        chosen.push(w);
        let row = dm.row(w);
        unresolved.retain(|p| row[p.u()] == row[p.v()]);
    }
    chosen.sort_unstable();
    debug_assert!(is_resolving_set(&dm, &chosen).is_ok_and(|r| r.is_resolving));
    Ok(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    fn gen(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    fn dm(s: &str) -> DistanceMatrix {
        DistanceMatrix::new(&gen(s)).unwrap()
    }

    #[test]
    fn verification() {
        assert!(is_resolving_set(&dm("path:4"), &[0]).unwrap().is_resolving);

        let r = is_resolving_set(&dm("complete:3"), &[0]).unwrap();
        assert!(!r.is_resolving);
        assert_eq!(r.witness, Some(Pair::new(1, 2).unwrap()));

        let pet = dm("petersen");
        for p in all_pairs(10) {
            assert!(!is_resolving_set(&pet, &[p.u(), p.v()]).unwrap().is_resolving);
        }
        assert!(is_resolving_set(&pet, &[10]).is_err());
    }

    #[test]
    fn exact_dimensions() {
        assert_eq!(metric_dimension_exact(&gen("path:8"), DEFAULT_EXACT_CAP), Ok(1));
        assert_eq!(metric_dimension_exact(&gen("complete:5"), DEFAULT_EXACT_CAP), Ok(4));
        assert_eq!(metric_dimension_exact(&gen("petersen"), DEFAULT_EXACT_CAP), Ok(3));
        assert_eq!(metric_dimension_exact(&gen("complete:2"), DEFAULT_EXACT_CAP), Ok(1));
        let basis = metric_basis_exact(&gen("cycle:7"), DEFAULT_EXACT_CAP).unwrap();
        assert_eq!(basis.len(), 2);
        assert!(is_resolving_set(&dm("cycle:7"), &basis).unwrap().is_resolving);
    }

    #[test]
    fn exact_cap() {
        assert_eq!(
            metric_dimension_exact(&gen("path:21"), DEFAULT_EXACT_CAP),
            Err(Error::ExactCapExceeded { n: 21, cap: 20 })
        );
        assert_eq!(
            metric_dimension_exact(&gen("path:65"), 100),
            Err(Error::ExactCapExceeded { n: 65, cap: 64 })
        );
    }

    #[test]
    fn greedy() {
        assert_eq!(greedy_resolving_set(&gen("cycle:6")).unwrap().len(), 2);
        assert_eq!(greedy_resolving_set(&gen("complete:4")).unwrap().len(), 3);
        assert_eq!(greedy_resolving_set(&gen("path:10")).unwrap(), vec![0]);
    }

    #[test]
    fn forced() {
        assert_eq!(forced_pairs(&dm("complete:4")).len(), 6);
        let f2: Vec<_> = forced_pairs(&dm("friendship:2"))
            .iter()
            .map(|p| (p.u(), p.v()))
            .collect();
        assert_eq!(f2, vec![(0, 1), (2, 3)]);
        assert!(forced_pairs(&dm("cycle:5")).is_empty());
        assert_eq!(forced_lower_bound(4, &forced_pairs(&dm("complete:4"))), 3);
        assert_eq!(forced_lower_bound(7, &forced_pairs(&dm("kpartite:3,4"))), 5);
    }
}
