//! Graph family generators and the `name(args)` spec syntax used by the CLI.

use crate::error::{Error, Result};
use crate::graph::Graph;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// How many Erdős–Rényi samples to draw before giving up on connectivity.
const RESAMPLE_LIMIT: usize = 100_000;

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// Path on `n` vertices.
    Path(usize),
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    /// Star with `m` leaves (center is vertex 0, order `m + 1`).
    Star(usize),
    /// Complete graph on `n` vertices.
    Complete(usize),
    /// Complete bipartite graph; sides `0..m` and `m..m+n`.
    CompleteBipartite(usize, usize),
    /// Erdős–Rényi G(n, p) resampled until connected.
    RandomConnected { n: usize, p: f64 },
    /// Uniform random labeled tree on `n` vertices.
    RandomTree { n: usize },
}

impl Family {
    pub fn is_random(&self) -> bool {
        matches!(
            self,
            Family::RandomConnected { .. } | Family::RandomTree { .. }
        )
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Star(_) => "star",
            Family::Complete(_) => "complete",
            Family::CompleteBipartite(..) => "complete_bipartite",
            Family::RandomConnected { .. } => "random_connected",
            Family::RandomTree { .. } => "random_tree",
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path({n})"),
            Family::Cycle(n) => write!(f, "cycle({n})"),
            Family::Star(m) => write!(f, "star({m})"),
            Family::Complete(n) => write!(f, "complete({n})"),
            Family::CompleteBipartite(m, n) => write!(f, "complete_bipartite({m},{n})"),
            Family::RandomConnected { n, p } => write!(f, "random_connected({n},{p})"),
            Family::RandomTree { n } => write!(f, "random_tree({n})"),
        }
    }
}

/// Parses specs like `path(5)`, `complete_bipartite(7,2)`,
/// `random_connected(10,0.4)`.
pub fn parse_family_spec(spec: &str) -> Result<Family> {
    let bad = |msg: &str| Error::FamilySpec(spec.to_string(), msg.to_string());
    let s = spec.trim();
    let open = s.find('(').ok_or_else(|| bad("expected name(args)"))?;
    if !s.ends_with(')') {
        return Err(bad("expected name(args)"));
    }
    let name = &s[..open];
    let args: Vec<&str> = {
        let inner = &s[open + 1..s.len() - 1];
        if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner.split(',').map(str::trim).collect()
        }
    };
    let usize_arg = |i: usize| -> Result<usize> {
        args.get(i)
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| bad("expected a nonnegative integer argument"))
    };
    let f64_arg = |i: usize| -> Result<f64> {
        args.get(i)
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| bad("expected a numeric argument"))
    };
    let arity = |k: usize| -> Result<()> {
        if args.len() == k {
            Ok(())
        } else {
            Err(bad(&format!("expected {k} argument(s)")))
        }
    };
    match name {
        "path" => {
            arity(1)?;
            Ok(Family::Path(usize_arg(0)?))
        }
        "cycle" => {
            arity(1)?;
            Ok(Family::Cycle(usize_arg(0)?))
        }
        "star" => {
            arity(1)?;
            Ok(Family::Star(usize_arg(0)?))
        }
        "complete" => {
            arity(1)?;
            Ok(Family::Complete(usize_arg(0)?))
        }
        "complete_bipartite" => {
            arity(2)?;
            Ok(Family::CompleteBipartite(usize_arg(0)?, usize_arg(1)?))
        }
        "random_connected" => {
            arity(2)?;
            Ok(Family::RandomConnected {
                n: usize_arg(0)?,
                p: f64_arg(1)?,
            })
        }
        "random_tree" => {
            arity(1)?;
            Ok(Family::RandomTree { n: usize_arg(0)? })
        }
        _ => Err(bad("unknown family")),
    }
}

/// Generates a member of `family`. Random families require `seed`;
/// deterministic families ignore it.
pub fn generate(family: &Family, seed: Option<u64>) -> Result<Graph> {
    match *family {
        Family::Path(n) => {
            positive(n, "path order")?;
            Graph::new(n, (1..n).map(|v| (v - 1, v)).collect())
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!(
                    "cycle order must be at least 3, got {n}"
                )));
            }
            let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            edges.push((0, n - 1));
            Graph::new(n, edges)
        }
        Family::Star(m) => {
            positive(m, "star leaf count")?;
            Graph::new(m + 1, (1..=m).map(|v| (0, v)).collect())
        }
        Family::Complete(n) => {
            positive(n, "complete graph order")?;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Graph::new(n, edges)
        }
        Family::CompleteBipartite(m, n) => {
            positive(m, "bipartite side size")?;
            positive(n, "bipartite side size")?;
            let mut edges = Vec::new();
            for u in 0..m {
                for v in m..m + n {
                    edges.push((u, v));
                }
            }
            Graph::new(m + n, edges)
        }
        Family::RandomConnected { n, p } => {
            positive(n, "graph order")?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParameter(format!(
                    "edge probability must lie in [0, 1], got {p}"
                )));
            }
            if n > 1 && p == 0.0 {
                return Err(Error::InvalidParameter(
                    "edge probability 0 cannot yield a connected graph of order > 1".into(),
                ));
            }
            let seed = require_seed(family, seed)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..RESAMPLE_LIMIT {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.random_bool(p) {
                            edges.push((u, v));
                        }
                    }
                }
                let g = Graph::new(n, edges)?;
                if g.is_connected() {
                    return Ok(g);
                }
            }
            Err(Error::ResampleLimit {
                attempts: RESAMPLE_LIMIT,
                n,
                p,
            })
        }
        Family::RandomTree { n } => {
            positive(n, "tree order")?;
            let seed = require_seed(family, seed)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            if n == 1 {
                return Graph::new(1, vec![]);
            }
            if n == 2 {
                return Graph::new(2, vec![(0, 1)]);
            }
            let prufer: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
            Graph::new(n, prufer_decode(n, &prufer))
        }
    }
}

fn positive(v: usize, what: &str) -> Result<()> {
    if v == 0 {
        Err(Error::InvalidParameter(format!("{what} must be positive")))
    } else {
        Ok(())
    }
}

fn require_seed(family: &Family, seed: Option<u64>) -> Result<u64> {
    seed.ok_or_else(|| Error::SeedRequired(family.name().to_string()))
}

/// Standard Prüfer sequence decoding; `seq` has length `n - 2`.
fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // Min-leaf selection keeps the decode deterministic.
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    for &v in seq {
        let leaf = *leaves.iter().next().expect("prufer decode invariant");
        leaves.remove(&leaf);
        edges.push((leaf.min(v), leaf.max(v)));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let mut it = leaves.iter();
    let (&a, &b) = (it.next().unwrap(), it.next().unwrap());
    edges.push((a.min(b), a.max(b)));
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_families() {
        let p = generate(&Family::Path(4), None).unwrap();
        assert_eq!(p.edges(), &[(0, 1), (1, 2), (2, 3)]);

        let c = generate(&Family::Cycle(5), None).unwrap();
        assert_eq!(c.size(), 5);
        assert!(c.is_connected());

        let s = generate(&Family::Star(5), None).unwrap();
        assert_eq!(s.order(), 6);
        assert_eq!(s.degree(0), 5);

        let k = generate(&Family::Complete(4), None).unwrap();
        assert_eq!(k.size(), 6);

        let b = generate(&Family::CompleteBipartite(7, 2), None).unwrap();
        assert_eq!((b.order(), b.size()), (9, 14));
    }

    #[test]
    fn star_minus_center_is_isolated_leaves() {
        let s = generate(&Family::Star(5), None).unwrap();
        let keep: Vec<usize> = (1..=5).collect();
        let (h, _) = s.induced_subgraph(&keep).unwrap();
        assert_eq!(h.components().len(), 5);
        assert_eq!(h.size(), 0);
    }

    #[test]
    fn random_families_are_seeded_and_connected() {
        let t1 = generate(&Family::RandomTree { n: 8 }, Some(1)).unwrap();
        let t2 = generate(&Family::RandomTree { n: 8 }, Some(1)).unwrap();
        assert_eq!(t1, t2);
        assert_eq!(t1.size(), 7);
        assert!(t1.is_connected());

        let g1 = generate(&Family::RandomConnected { n: 10, p: 0.3 }, Some(42)).unwrap();
        let g2 = generate(&Family::RandomConnected { n: 10, p: 0.3 }, Some(42)).unwrap();
        assert_eq!(g1, g2);
        assert!(g1.is_connected());

        assert!(matches!(
            generate(&Family::RandomTree { n: 5 }, None),
            Err(Error::SeedRequired(_))
        ));
    }

    #[test]
    fn random_trees_vary_with_seed() {
        let distinct: std::collections::HashSet<String> = (0..20)
            .map(|s| {
                generate(&Family::RandomTree { n: 7 }, Some(s))
                    .unwrap()
                    .to_edge_list()
            })
            .collect();
        assert!(distinct.len() > 1);
    }

    #[test]
    fn rejects_invalid_parameters() {
        assert!(generate(&Family::Cycle(2), None).is_err());
        assert!(generate(&Family::Path(0), None).is_err());
        assert!(generate(&Family::RandomConnected { n: 5, p: 1.5 }, Some(1)).is_err());
        assert!(generate(&Family::RandomConnected { n: 5, p: 0.0 }, Some(1)).is_err());
    }

    #[test]
    fn parses_specs() {
        assert_eq!(parse_family_spec("path(5)").unwrap(), Family::Path(5));
        assert_eq!(
            parse_family_spec("complete_bipartite(7, 2)").unwrap(),
            Family::CompleteBipartite(7, 2)
        );
        assert_eq!(
            parse_family_spec("random_connected(10,0.4)").unwrap(),
            Family::RandomConnected { n: 10, p: 0.4 }
        );
        assert!(parse_family_spec("wheel(5)").is_err());
        assert!(parse_family_spec("path").is_err());
        assert!(parse_family_spec("path(a)").is_err());
    }
}
