//! Named graph families with canonical vertex numbering.
//!
//! | family      | text form         | numbering                                        |
//! |-------------|-------------------|--------------------------------------------------|
//! | path        | `path:10`         | `0..n` in walk order                             |
//! | cycle       | `cycle:7`         | `0..n` in walk order                             |
//! | complete    | `complete:5`      | `0..n`                                           |
//! | k-partite   | `kpartite:2,3,4`  | parts in order, consecutive ids                  |
//! | wheel       | `wheel:9`         | rim `0..n-1`, center `n-1` (n vertices in total) |
//! | friendship  | `friendship:4`    | triangle `i` is `{2i, 2i+1}` + center `2n`       |
//! | petersen    | `petersen`        | 2-subsets of `{1..5}` in lexicographic order     |

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    CompleteMultipartite,
    Wheel,
    Friendship,
    Petersen,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 7] = [
        FamilyKind::Path,
        FamilyKind::Cycle,
        FamilyKind::Complete,
        FamilyKind::CompleteMultipartite,
        FamilyKind::Wheel,
        FamilyKind::Friendship,
        FamilyKind::Petersen,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteMultipartite => "kpartite",
            FamilyKind::Wheel => "wheel",
            FamilyKind::Friendship => "friendship",
            FamilyKind::Petersen => "petersen",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::FamilySpec(format!("unknown family {s:?}")))
    }
}

/// A named family member, e.g. `wheel:9`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    /// `n` vertices in total: a rim cycle on `n - 1` vertices plus a center.
    Wheel(usize),
    /// `n` triangles sharing one center vertex.
    Friendship(usize),
    Petersen,
}

impl FamilySpec {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Path(_) => FamilyKind::Path,
            FamilySpec::Cycle(_) => FamilyKind::Cycle,
            FamilySpec::Complete(_) => FamilyKind::Complete,
            FamilySpec::CompleteMultipartite(_) => FamilyKind::CompleteMultipartite,
            FamilySpec::Wheel(_) => FamilyKind::Wheel,
            FamilySpec::Friendship(_) => FamilyKind::Friendship,
            FamilySpec::Petersen => FamilyKind::Petersen,
        }
    }

    /// Builds a spec of `kind` from a single size parameter. Not valid for
    /// k-partite graphs, which take a list of part sizes.
    pub fn with_size(kind: FamilyKind, n: usize) -> Result<Self> {
        Ok(match kind {
            FamilyKind::Path => FamilySpec::Path(n),
            FamilyKind::Cycle => FamilySpec::Cycle(n),
            FamilyKind::Complete => FamilySpec::Complete(n),
            FamilyKind::Wheel => FamilySpec::Wheel(n),
            FamilyKind::Friendship => FamilySpec::Friendship(n),
            FamilyKind::Petersen => FamilySpec::Petersen,
            FamilyKind::CompleteMultipartite => {
                return Err(Error::FamilySpec(
                    "kpartite takes a list of part sizes, not a single size".into(),
                ))
            }
        })
    }

    /// Number of vertices of the generated graph.
    pub fn vertex_count(&self) -> usize {
        match self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Wheel(n) => *n,
            FamilySpec::CompleteMultipartite(parts) => parts.iter().sum(),
            FamilySpec::Friendship(n) => 2 * n + 1,
            FamilySpec::Petersen => 10,
        }
    }

    /// Checks the parameter bounds under which the family's closed form is
    /// stated.
    pub fn validate(&self) -> Result<()> {
        self.check(false)
    }

    fn check(&self, allow_unverified: bool) -> Result<()> {
        let fail = |msg: &str| Err(Error::FamilySpec(format!("{self}: {msg}")));
        match self {
            FamilySpec::Path(n) if *n < 2 => fail("path needs n >= 2"),
            FamilySpec::Cycle(n) if *n < 3 => fail("cycle needs n >= 3"),
            FamilySpec::Complete(n) if *n < 2 => fail("complete graph needs n >= 2"),
            FamilySpec::Wheel(n) if *n < 6 => {
                fail("wheel W_n needs n >= 6 (n counts the center)")
            }
            FamilySpec::Friendship(n) if *n < 2 => fail("friendship graph needs n >= 2"),
            FamilySpec::CompleteMultipartite(parts) => {
                if parts.len() < 2 {
                    fail("complete k-partite graph needs k >= 2 parts")
                } else if parts.contains(&0) {
                    fail("part sizes must be positive")
                } else if !allow_unverified && parts.iter().any(|&p| p < 2) {
                    fail("every part must have at least 2 vertices (use --allow-unverified to lift)")
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// Generates the graph after enforcing [`FamilySpec::validate`].
    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        self.build()
    }

    /// Like [`FamilySpec::generate`] but accepts k-partite parts of size 1.
    pub fn generate_unverified(&self) -> Result<Graph> {
        self.check(true)?;
        self.build()
    }

    fn build(&self) -> Result<Graph> {
        let n = self.vertex_count();
        let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
        match self {
            FamilySpec::Path(n) => edges.extend((1..*n).map(|i| (i - 1, i))),
            FamilySpec::Cycle(n) => edges.extend((0..*n).map(|i| (i, (i + 1) % n))),
            FamilySpec::Complete(n) => edges.extend(complete_edges(0..*n)),
            FamilySpec::CompleteMultipartite(parts) => {
                let mut part_of = Vec::with_capacity(n);
                for (i, &size) in parts.iter().enumerate() {
                    part_of.extend(std::iter::repeat_n(i, size));
                }
                edges.extend(complete_edges(0..n).filter(|&(u, v)| part_of[u] != part_of[v]));
            }
            FamilySpec::Wheel(n) => {
                let rim = n - 1;
                edges.extend((0..rim).map(|i| (i, (i + 1) % rim)));
                edges.extend((0..rim).map(|i| (i, rim)));
            }
            FamilySpec::Friendship(k) => {
                let center = 2 * k;
                for i in 0..*k {
                    edges.extend([(2 * i, 2 * i + 1), (2 * i, center), (2 * i + 1, center)]);
                }
            }
            FamilySpec::Petersen => {
                let subsets: Vec<(u8, u8)> = (1..=5u8)
                    .flat_map(|a| (a + 1..=5).map(move |b| (a, b)))
                    .collect();
                let disjoint = |x: (u8, u8), y: (u8, u8)| {
                    x.0 != y.0 && x.0 != y.1 && x.1 != y.0 && x.1 != y.1
                };
                edges.extend(
                    complete_edges(0..subsets.len())
                        .filter(|&(u, v)| disjoint(subsets[u], subsets[v])),
                );
            }
        }
        Graph::new(n, &edges)
    }
}

fn complete_edges(
    range: std::ops::Range<usize>,
) -> impl Iterator<Item = (VertexId, VertexId)> {
    let end = range.end;
    range.flat_map(move |u| (u + 1..end).map(move |v| (u, v)))
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Wheel(n)
            | FamilySpec::Friendship(n) => write!(f, "{}:{n}", self.kind()),
            FamilySpec::CompleteMultipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(usize::to_string).collect();
                write!(f, "kpartite:{}", parts.join(","))
            }
            FamilySpec::Petersen => f.write_str("petersen"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses the canonical text form. Bounds are not checked here.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, params) = match s.split_once(':') {
            Some((k, p)) => (k.trim(), Some(p.trim())),
            None => (s, None),
        };
        let kind: FamilyKind = kind.parse()?;
        let number = |text: &str| {
            text.trim()
                .parse::<usize>()
                .map_err(|_| Error::FamilySpec(format!("{s:?}: {text:?} is not a size")))
        };
        match (kind, params) {
            (FamilyKind::Petersen, None) => Ok(FamilySpec::Petersen),
            (FamilyKind::Petersen, Some(_)) => {
                Err(Error::FamilySpec("petersen takes no parameters".into()))
            }
            (FamilyKind::CompleteMultipartite, Some(p)) => p
                .split(',')
                .map(number)
                .collect::<Result<Vec<_>>>()
                .map(FamilySpec::CompleteMultipartite),
            (kind, Some(p)) => FamilySpec::with_size(kind, number(p)?),
            (kind, None) => Err(Error::FamilySpec(format!("{kind} needs a parameter, e.g. {kind}:5"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DistanceMatrix;

    fn gen(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in [
            "path:10",
            "cycle:7",
            "complete:5",
            "kpartite:2,3,4",
            "wheel:9",
            "friendship:4",
            "petersen",
        ] {
            assert_eq!(s.parse::<FamilySpec>().unwrap().to_string(), s);
        }
        assert!("hypercube:3".parse::<FamilySpec>().is_err());
        assert!("path".parse::<FamilySpec>().is_err());
        assert!("path:x".parse::<FamilySpec>().is_err());
        assert!("petersen:3".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn small_members() {
        assert_eq!(gen("path:3").edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);

        let pet = gen("petersen");
        assert_eq!((pet.vertex_count(), pet.edge_count()), (10, 15));
        assert!((0..10).all(|v| pet.degree(v) == 3));
        assert_eq!(DistanceMatrix::new(&pet).unwrap().diameter(), 2);

        let w7 = gen("wheel:7");
        assert_eq!(w7.vertex_count(), 7);
        assert_eq!(w7.neighbors(6), &[0, 1, 2, 3, 4, 5]);
        for i in 0..6 {
            assert!(w7.has_edge(i, (i + 1) % 6));
            assert_eq!(w7.degree(i), 3);
        }

        let f2 = gen("friendship:2");
        assert_eq!((f2.vertex_count(), f2.edge_count()), (5, 6));
        assert_eq!(f2.degree(4), 4);
        assert!(f2.has_edge(0, 1) && f2.has_edge(2, 3) && !f2.has_edge(1, 2));
    }

    #[test]
    fn edge_counts() {
        for n in 3..12 {
            assert_eq!(gen(&format!("path:{n}")).edge_count(), n - 1);
            assert_eq!(gen(&format!("cycle:{n}")).edge_count(), n);
            assert_eq!(gen(&format!("complete:{n}")).edge_count(), n * (n - 1) / 2);
            assert_eq!(gen(&format!("friendship:{n}")).edge_count(), 3 * n);
        }
        for n in 6..14 {
            assert_eq!(gen(&format!("wheel:{n}")).edge_count(), 2 * (n - 1));
        }
        let g = gen("kpartite:2,3,4");
        assert_eq!(g.edge_count(), 2 * 3 + 2 * 4 + 3 * 4);
        assert!(!g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(5, 8));
    }

    #[test]
    fn bounds() {
        for s in ["path:1", "cycle:2", "complete:1", "wheel:5", "friendship:1", "kpartite:3", "kpartite:2,1"] {
            assert!(s.parse::<FamilySpec>().unwrap().generate().is_err(), "{s}");
        }
        let star = "kpartite:1,3".parse::<FamilySpec>().unwrap();
        assert!(star.generate().is_err());
        assert_eq!(star.generate_unverified().unwrap().edge_count(), 3);
        assert!("kpartite:0,3".parse::<FamilySpec>().unwrap().generate_unverified().is_err());
    }
}
