//! Test-only oracles and random graph sampling.
//!
//! Nothing here calls into the library's distance or share kernels: distances
//! come from Floyd-Warshall and the index is summed straight from the
//! definition.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use resolving_core::graph::{distance_partition, DistanceMatrix};
use resolving_core::resolving::{
    all_pairs, full_pairs, resolvent_neighborhood, resolving_share, share_report, twin_pairs,
};
use resolving_core::Graph;

/// Floyd-Warshall over the adjacency of `g`.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for &v in g.neighbors(u) {
            d[u][v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Resolving index straight from the definition: for every vertex, average
/// `1/|R(u,v)|` over the pairs it resolves, then sum.
pub fn naive_index(g: &Graph) -> (BigRational, Vec<BigRational>) {
    let d = floyd_warshall(g);
    let n = g.vertex_count();
    let mut per_vertex = Vec::with_capacity(n);
    for w in 0..n {
        let mut sum = BigRational::zero();
        let mut count = 0i64;
        for u in 0..n {
            for v in u + 1..n {
                if d[u][w] != d[v][w] {
                    let size = (0..n).filter(|&x| d[u][x] != d[v][x]).count();
                    sum += BigRational::new(BigInt::from(1), BigInt::from(size));
                    count += 1;
                }
            }
        }
        per_vertex.push(sum / BigRational::from_integer(BigInt::from(count)));
    }
    let index = per_vertex.iter().fold(BigRational::zero(), |a, b| a + b);
    (index, per_vertex)
}

/// Smallest resolving set size by plain enumeration of all subsets.
pub fn brute_metric_dimension(g: &Graph) -> usize {
    let d = floyd_warshall(g);
    let n = g.vertex_count();
    let resolves = |mask: u32| {
        (0..n).all(|u| {
            (u + 1..n).all(|v| (0..n).any(|w| mask & (1 << w) != 0 && d[u][w] != d[v][w]))
        })
    };
    (0..1u32 << n)
        .filter(|&m| resolves(m))
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap()
}

/// Every resolving set as a bitmask (small graphs only).
pub fn all_resolving_sets(g: &Graph) -> Vec<u32> {
    let d = floyd_warshall(g);
    let n = g.vertex_count();
    (0..1u32 << n)
        .filter(|&mask| {
            (0..n).all(|u| {
                (u + 1..n).all(|v| (0..n).any(|w| mask & (1 << w) != 0 && d[u][w] != d[v][w]))
            })
        })
        .collect()
}

/// Connected graph on `n` vertices: a random recursive tree plus each other
/// edge independently with probability `density`.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("valid random graph")
}

/// Deterministic corpus of `count` connected graphs with `2 <= n <= max_n`
/// and densities spread from tree-like to nearly complete.
pub fn corpus(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(2..=max_n);
            let density = match i % 4 {
                0 => 0.0,
                1 => rng.gen_range(0.02..0.2),
                2 => rng.gen_range(0.2..0.6),
                _ => rng.gen_range(0.6..1.0),
            };
            random_connected(&mut rng, n, density)
        })
        .collect()
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, &edges).unwrap()
}

fn unit(k: usize) -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(k))
}

/// Unit-sum property: shares of every pair add up to one, and all shares of
/// all vertices over their resolved pairs add up to `n choose 2`.
pub fn unit_sum_violations(g: &Graph) -> Vec<String> {
    let dm = DistanceMatrix::new(g).unwrap();
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut total = BigRational::zero();
    for p in all_pairs(n) {
        let sum = (0..n).fold(BigRational::zero(), |acc, w| acc + resolving_share(&dm, w, p).unwrap());
        if sum != unit(1) {
            out.push(format!("pair {p}: shares sum to {sum}"));
        }
        total += sum;
    }
    let mut by_vertex = BigRational::zero();
    for w in 0..n {
        for p in resolvent_neighborhood(&dm, w).unwrap() {
            by_vertex += resolving_share(&dm, w, p).unwrap();
        }
    }
    let pairs = BigRational::from_integer(BigInt::from(n * (n - 1) / 2));
    if total != pairs || by_vertex != pairs {
        out.push(format!("totals {total} / {by_vertex} != {pairs}"));
    }
    out
}

/// Structural statements about shares, neighborhoods and partitions. Returns
/// one message per violation.
pub fn structural_violations(g: &Graph) -> Vec<String> {
    let dm = DistanceMatrix::new(g).unwrap();
    let n = g.vertex_count();
    let half = unit(2);
    let twins = twin_pairs(&dm);
    let full = full_pairs(&dm);
    let partitions: Vec<_> = (0..n).map(|w| distance_partition(&dm, w).unwrap()).collect();
    let mut out = Vec::new();

    for p in all_pairs(n) {
        let shares: Vec<BigRational> = (0..n).map(|w| resolving_share(&dm, w, p).unwrap()).collect();
        for (w, share) in shares.iter().enumerate() {
            // Range of a share and positivity on the pair itself.
            if *share < BigRational::zero() || *share > half {
                out.push(format!("share out of [0, 1/2]: w={w} p={p}"));
            }
            if p.contains(w) && *share < unit(n) {
                out.push(format!("endpoint share below 1/n: w={w} p={p}"));
            }
            // Zero share off the pair <=> same distance class.
            if !p.contains(w) {
                let part = &partitions[w];
                let same = part.class_of(p.u()).is_some() && part.class_of(p.u()) == part.class_of(p.v());
                if same != share.is_zero() {
                    out.push(format!("zero share vs same class mismatch: w={w} p={p}"));
                }
            }
            // Share 1/2 <=> w in pair and pair is a twin pair.
            let is_half = *share == half;
            if is_half != (p.contains(w) && twins.contains(&p)) {
                out.push(format!("half share vs twin mismatch: w={w} p={p}"));
            }
        }
        // Full pair <=> every share is 1/n; full pairs have odd distance.
        let uniform = shares.iter().all(|s| *s == unit(n));
        if uniform != full.contains(&p) {
            out.push(format!("full pair vs uniform 1/n mismatch: p={p}"));
        }
        if full.contains(&p) && dm.get(p.u(), p.v()) % 2 == 0 {
            out.push(format!("full pair at even distance: p={p}"));
        }
        // Twin pair <=> equidistant from everything else.
        let equidistant = (0..n).filter(|&x| !p.contains(x)).all(|x| dm.get(p.u(), x) == dm.get(p.v(), x));
        if equidistant != twins.contains(&p) {
            out.push(format!("twin definition mismatch: p={p}"));
        }
    }

    if dm.diameter() == 2 && full.len() > n * n / 4 {
        out.push(format!("diameter 2 with {} full pairs > floor(n^2/4)", full.len()));
    }

    // Diameter one <=> every pair has share 1/2 on its endpoints, 0 elsewhere.
    let endpoint_halves = all_pairs(n).all(|p| {
        (0..n).all(|w| {
            let s = resolving_share(&dm, w, p).unwrap();
            if p.contains(w) { s == half } else { s.is_zero() }
        })
    });
    if (dm.diameter() == 1) != endpoint_halves {
        out.push(format!("diameter {} vs endpoint-halves {endpoint_halves}", dm.diameter()));
    }

    let report = share_report(&dm, false);
    for s in &report.per_vertex {
        if s.resolvent_count < (n - 1) as u64 {
            out.push(format!("vertex {} resolves only {} pairs", s.vertex, s.resolvent_count));
        }
    }
    out
}
