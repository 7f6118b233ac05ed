//! Resolving neighborhoods, resolving shares and the resolving topological
//! index.
//!
//! A vertex `w` resolves a pair `(u, v)` when `d(u, w) != d(v, w)`. The
//! resolving neighborhood of a pair is the set of all its resolvers, and each
//! resolver receives an equal share `1 / |R(u, v)|` of that pair. The average
//! resolving share of `w` is the mean of its shares over the pairs it
//! resolves, and the index of a graph is the sum of those averages.
//!
//! The index kernel runs in two passes over the distance matrix:
//!
//! 1. for every pair, count its resolvers (one row comparison per pair);
//! 2. for every vertex, histogram the neighborhood sizes of the pairs it
//!    resolves.
//!
//! Both passes are `O(n^3)` row scans and parallel over rows. A vertex's
//! average share is then `sum_k hist[k] / k` over `sum_k hist[k]`, evaluated
//! exactly, so the result does not depend on how work was partitioned.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, DistancePartition, Graph, VertexId};
use crate::rational::Rational;

/// An unordered vertex pair stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    u: VertexId,
    v: VertexId,
}

impl Pair {
    pub fn new(a: VertexId, b: VertexId) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Self { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Self { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::DegeneratePair(a)),
        }
    }

    pub fn u(&self) -> VertexId {
        self.u
    }

    pub fn v(&self) -> VertexId {
        self.v
    }

    pub fn contains(&self, w: VertexId) -> bool {
        self.u == w || self.v == w
    }

    fn check(&self, dm: &DistanceMatrix) -> Result<()> {
        dm.check_vertex(self.v)
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// All `n choose 2` pairs in lexicographic order.
pub fn all_pairs(n: usize) -> impl Iterator<Item = Pair> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| Pair { u, v }))
}

#[inline]
fn resolves_rows(row_w: &[u16], p: Pair) -> bool {
    row_w[p.u] != row_w[p.v]
}

#[inline]
fn count_differences(a: &[u16], b: &[u16]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// True when `w` resolves `p`.
pub fn resolves(dm: &DistanceMatrix, w: VertexId, p: Pair) -> Result<bool> {
    dm.check_vertex(w)?;
    p.check(dm)?;
    Ok(resolves_rows(dm.row(w), p))
}

/// `R(u, v)`: every vertex at different distances from `u` and `v`, sorted.
/// Always contains `u` and `v`.
pub fn resolving_neighborhood(dm: &DistanceMatrix, p: Pair) -> Result<Vec<VertexId>> {
    p.check(dm)?;
    Ok(members(dm, p))
}

fn members(dm: &DistanceMatrix, p: Pair) -> Vec<VertexId> {
    dm.row(p.u)
        .iter()
        .zip(dm.row(p.v))
        .enumerate()
        .filter(|(_, (a, b))| a != b)
        .map(|(x, _)| x)
        .collect()
}

/// `|R(u, v)|` without materializing the set.
pub fn resolving_neighborhood_size(dm: &DistanceMatrix, p: Pair) -> Result<usize> {
    p.check(dm)?;
    Ok(count_differences(dm.row(p.u), dm.row(p.v)))
}

/// `r_w(u, v)`: `1 / |R(u, v)|` when `w` resolves the pair, otherwise zero.
pub fn resolving_share(dm: &DistanceMatrix, w: VertexId, p: Pair) -> Result<Rational> {
    if !resolves(dm, w, p)? {
        return Ok(Rational::zero());
    }
    let size = count_differences(dm.row(p.u), dm.row(p.v));
    Ok(Rational::new(BigInt::one(), BigInt::from(size)))
}

/// `R(w)`: the pairs resolved by `w`, in lexicographic order.
pub fn resolvent_neighborhood(dm: &DistanceMatrix, w: VertexId) -> Result<Vec<Pair>> {
    dm.check_vertex(w)?;
    let row = dm.row(w);
    Ok(all_pairs(dm.vertex_count())
        .filter(|&p| resolves_rows(row, p))
        .collect())
}

/// `ar_w(G)` computed for a single vertex.
pub fn average_resolving_share(dm: &DistanceMatrix, w: VertexId) -> Result<Rational> {
    dm.check_vertex(w)?;
    let n = dm.vertex_count();
    let row = dm.row(w);
    let mut hist = vec![0u64; n + 1];
    for p in all_pairs(n).filter(|&p| resolves_rows(row, p)) {
        hist[count_differences(dm.row(p.u), dm.row(p.v))] += 1;
    }
    Ok(average_from_histogram(&hist).0)
}

/// Pairs resolved by every vertex, i.e. `R(u, v) = V(G)`.
pub fn full_pairs(dm: &DistanceMatrix) -> Vec<Pair> {
    let n = dm.vertex_count();
    all_pairs(n)
        .filter(|p| count_differences(dm.row(p.u), dm.row(p.v)) == n)
        .collect()
}

/// Pairs equidistant from every vertex outside the pair, i.e.
/// `R(u, v) = {u, v}`.
pub fn twin_pairs(dm: &DistanceMatrix) -> Vec<Pair> {
    all_pairs(dm.vertex_count())
        .filter(|p| count_differences(dm.row(p.u), dm.row(p.v)) == 2)
        .collect()
}

/// Mean share from a histogram `hist[k]` = number of resolved pairs whose
/// neighborhood has size `k`. Returns the average and the number of pairs.
fn average_from_histogram(hist: &[u64]) -> (Rational, u64) {
    let count: u64 = hist.iter().sum();
    if count == 0 {
        return (Rational::zero(), 0);
    }
    let mut lcm = BigInt::one();
    for (k, _) in hist.iter().enumerate().filter(|(_, &c)| c > 0) {
        lcm = lcm.lcm(&BigInt::from(k));
    }
    let mut numer = BigInt::zero();
    for (k, &c) in hist.iter().enumerate().filter(|(_, &c)| c > 0) {
        numer += BigInt::from(c) * (&lcm / BigInt::from(k));
    }
    (Rational::new(numer, lcm * BigInt::from(count)), count)
}

/// One vertex's entry in a [`ShareReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexShare {
    pub vertex: VertexId,
    pub avg_share: Rational,
    /// `|R(w)|`.
    pub resolvent_count: u64,
}

/// Resolving neighborhood of a single pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairDetail {
    pub pair: Pair,
    pub members: Vec<VertexId>,
}

impl PairDetail {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Resolving index of a graph with its per-vertex decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShareReport {
    pub n: usize,
    pub index: Rational,
    pub per_vertex: Vec<VertexShare>,
    /// Present only when requested through [`IndexOptions::per_pair`].
    pub per_pair: Option<Vec<PairDetail>>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IndexOptions {
    /// Keep every pair's resolving neighborhood in the report.
    pub per_pair: bool,
    /// Worker threads; `None` uses the ambient rayon pool.
    pub threads: Option<usize>,
}

/// Resolving index of `g` with default options.
pub fn resolving_index(g: &Graph) -> Result<ShareReport> {
    resolving_index_with(g, &IndexOptions::default())
}

pub fn resolving_index_with(g: &Graph, opts: &IndexOptions) -> Result<ShareReport> {
    run_in_pool(opts.threads, || {
        let dm = DistanceMatrix::new(g)?;
        Ok(share_report(&dm, opts.per_pair))
    })
}

/// Runs `f` on a dedicated pool of `threads` workers, or inline when `None`.
pub fn run_in_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match threads {
        None => f(),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .expect("failed to build thread pool")
            .install(f),
    }
}

/// Builds the report from a precomputed distance matrix on the ambient pool.
pub fn share_report(dm: &DistanceMatrix, per_pair: bool) -> ShareReport {
    let n = dm.vertex_count();
    let sizes = pair_sizes(dm);
    let offsets: Vec<usize> = (0..n).map(|u| row_offset(n, u)).collect();

    let per_vertex: Vec<VertexShare> = (0..n)
        .into_par_iter()
        .map(|w| {
            let row = dm.row(w);
            let mut hist = vec![0u64; n + 1];
            for u in 0..n {
                let du = row[u];
                let sizes_u = &sizes[offsets[u]..offsets[u] + (n - u - 1)];
                for (&dv, &size) in row[u + 1..].iter().zip(sizes_u) {
                    if dv != du {
                        hist[size as usize] += 1;
                    }
                }
            }
            let (avg_share, resolvent_count) = average_from_histogram(&hist);
            VertexShare {
                vertex: w,
                avg_share,
                resolvent_count,
            }
        })
        .collect();

    let index = per_vertex
        .iter()
        .fold(Rational::zero(), |acc, s| acc + &s.avg_share);

    let per_pair = per_pair.then(|| {
        let pairs: Vec<Pair> = all_pairs(n).collect();
        pairs
            .into_par_iter()
            .map(|pair| PairDetail {
                pair,
                members: members(dm, pair),
            })
            .collect()
    });

    ShareReport {
        n,
        index,
        per_vertex,
        per_pair,
    }
}

/// Start of row `u` in the packed upper-triangular pair array.
#[inline]
fn row_offset(n: usize, u: usize) -> usize {
    u * n - u * (u + 1) / 2
}

/// `|R(p)|` for every pair in lexicographic order, packed row by row.
fn pair_sizes(dm: &DistanceMatrix) -> Vec<u16> {
    let n = dm.vertex_count();
    let mut sizes = vec![0u16; n * (n - 1) / 2];
    let mut rows: Vec<(usize, &mut [u16])> = Vec::with_capacity(n);
    let mut rest = sizes.as_mut_slice();
    for u in 0..n {
        let (head, tail) = rest.split_at_mut(n - u - 1);
        rows.push((u, head));
        rest = tail;
    }
    rows.into_par_iter().for_each(|(u, out)| {
        let row_u = dm.row(u);
        for (slot, v) in out.iter_mut().zip(u + 1..n) {
            *slot = count_differences(row_u, dm.row(v)) as u16;
        }
    });
    sizes
}

/// True iff both endpoints of `p` lie in one class of `partition`.
pub fn same_class(partition: &DistancePartition, p: Pair) -> bool {
    let cu = partition.class_of(p.u);
    cu.is_some() && cu == partition.class_of(p.v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use crate::rational::{integer, is_unit_fraction_or_zero, ratio};

    fn dm_of(spec: &str) -> DistanceMatrix {
        let g = spec.parse::<FamilySpec>().unwrap().generate().unwrap();
        DistanceMatrix::new(&g).unwrap()
    }

    fn pair(a: usize, b: usize) -> Pair {
        Pair::new(a, b).unwrap()
    }

    #[test]
    fn pair_is_canonical() {
        assert_eq!(pair(3, 1), pair(1, 3));
        assert_eq!(pair(3, 1).u(), 1);
        assert_eq!(Pair::new(2, 2), Err(Error::DegeneratePair(2)));
        assert_eq!(all_pairs(4).count(), 6);
        assert_eq!(all_pairs(3).collect::<Vec<_>>(), vec![pair(0, 1), pair(0, 2), pair(1, 2)]);
    }

    #[test]
    fn neighborhoods() {
        let pet = dm_of("petersen");
        // Vertex 0 = {1,2} and vertex 7 = {3,4} are disjoint, hence adjacent.
        assert_eq!(pet.get(0, 7), 1);
        assert_eq!(resolving_neighborhood(&pet, pair(0, 7)).unwrap().len(), 6);

        let k5 = dm_of("complete:5");
        for p in all_pairs(5) {
            assert_eq!(resolving_neighborhood(&k5, p).unwrap(), vec![p.u(), p.v()]);
        }

        let c4 = dm_of("cycle:4");
        assert_eq!(resolving_neighborhood(&c4, pair(0, 2)).unwrap(), vec![0, 2]);
        assert!(resolving_neighborhood(&c4, pair(0, 4)).is_err());
    }

    #[test]
    fn shares() {
        let pet = dm_of("petersen");
        for p in all_pairs(10) {
            for w in 0..10 {
                let s = resolving_share(&pet, w, p).unwrap();
                assert!(s.is_zero() || s == ratio(1, 6));
            }
        }

        let k3 = dm_of("complete:3");
        assert_eq!(resolving_share(&k3, 0, pair(0, 1)).unwrap(), ratio(1, 2));
        assert_eq!(resolving_share(&k3, 2, pair(0, 1)).unwrap(), integer(0));

        let p5 = dm_of("path:5");
        assert_eq!(resolving_share(&p5, 1, pair(0, 2)).unwrap(), integer(0));
        for w in [0, 2, 3, 4] {
            assert_eq!(resolving_share(&p5, w, pair(0, 2)).unwrap(), ratio(1, 4));
        }
        assert!(resolving_share(&p5, 5, pair(0, 2)).is_err());
    }

    #[test]
    fn resolvent_neighborhoods() {
        let p4 = dm_of("path:4");
        assert_eq!(resolvent_neighborhood(&p4, 0).unwrap().len(), 6);

        let w7 = dm_of("wheel:7");
        let center = 6;
        let r = resolvent_neighborhood(&w7, center).unwrap();
        assert_eq!(r.len(), 6);
        assert!(r.iter().all(|p| p.contains(center)));

        let c4 = dm_of("cycle:4");
        let r = resolvent_neighborhood(&c4, 0).unwrap();
        assert_eq!(r.len(), 5);
        assert!(!r.contains(&pair(1, 3)));
    }

    #[test]
    fn averages() {
        let pet = dm_of("petersen");
        for w in 0..10 {
            assert_eq!(average_resolving_share(&pet, w).unwrap(), ratio(1, 6));
        }
        let c5 = dm_of("cycle:5");
        for w in 0..5 {
            assert_eq!(average_resolving_share(&c5, w).unwrap(), ratio(1, 4));
        }
        let p4 = dm_of("path:4");
        assert_eq!(average_resolving_share(&p4, 0).unwrap(), ratio(5, 18));
        assert_eq!(average_resolving_share(&p4, 1).unwrap(), ratio(4, 15));
    }

    #[test]
    fn index_values() {
        let index = |spec: &str| share_report(&dm_of(spec), false).index;
        assert_eq!(index("petersen"), ratio(5, 3));
        assert_eq!(index("complete:5"), ratio(5, 2));
        assert_eq!(index("path:4"), ratio(49, 45));
        assert_eq!(index("friendship:2"), ratio(11, 8));
    }

    #[test]
    fn report_decomposition() {
        let dm = dm_of("path:4");
        let report = share_report(&dm, true);
        let sum = report
            .per_vertex
            .iter()
            .fold(Rational::zero(), |a, s| a + &s.avg_share);
        assert_eq!(sum, report.index);
        for (w, s) in report.per_vertex.iter().enumerate() {
            assert_eq!(s.vertex, w);
            assert!(s.resolvent_count >= 3);
            assert_eq!(s.avg_share, average_resolving_share(&dm, w).unwrap());
        }
        let detail = report.per_pair.unwrap();
        assert_eq!(detail.len(), 6);
        assert_eq!(detail[1].pair, pair(0, 2));
        assert_eq!(detail[1].members, vec![0, 2, 3]);
    }

    #[test]
    fn full_and_twin_pairs() {
        let p3 = dm_of("path:3");
        assert_eq!(full_pairs(&p3), vec![pair(0, 1), pair(1, 2)]);

        let star = DistanceMatrix::new(&Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()).unwrap();
        assert_eq!(full_pairs(&star), vec![pair(0, 1), pair(0, 2), pair(0, 3)]);

        assert!(full_pairs(&dm_of("petersen")).is_empty());

        assert_eq!(twin_pairs(&dm_of("complete:4")).len(), 6);
        assert_eq!(twin_pairs(&dm_of("friendship:3")), vec![pair(0, 1), pair(2, 3), pair(4, 5)]);
        assert!(twin_pairs(&dm_of("path:4")).is_empty());
    }

    #[test]
    fn shares_are_unit_fractions() {
        let dm = dm_of("kpartite:2,3");
        for p in all_pairs(5) {
            for w in 0..5 {
                assert!(is_unit_fraction_or_zero(&resolving_share(&dm, w, p).unwrap()));
            }
        }
    }

    #[test]
    fn same_class_matches_zero_share() {
        let dm = dm_of("cycle:6");
        for w in 0..6 {
            let part = DistancePartition::new(&dm, w).unwrap();
            for p in all_pairs(6).filter(|p| !p.contains(w)) {
                assert_eq!(same_class(&part, p), resolving_share(&dm, w, p).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn trivial_and_disconnected_rejected() {
        assert_eq!(resolving_index(&Graph::new(1, &[]).unwrap()), Err(Error::Trivial(1)));
        assert_eq!(
            resolving_index(&Graph::new(4, &[(0, 1), (2, 3)]).unwrap()),
            Err(Error::Disconnected)
        );
    }
}
