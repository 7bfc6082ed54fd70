use std::fmt;

use super::{Graph, GraphError};

/// A named graph family with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `P_n`, vertices in path order.
    Path { n: usize },
    /// `C_n`.
    Cycle { n: usize },
    /// `S_n`: center 0 joined to `n - 1` leaves.
    Star { n: usize },
    /// `K_n`.
    Complete { n: usize },
    /// `K_{p,q}` with parts `0..p` and `p..p+q`.
    CompleteBipartite { p: usize, q: usize },
    /// `P_{k,k-4}`: the path on `k` vertices with a pendant vertex attached
    /// at each position `3..=k-2` (1-based). `2k - 4` vertices.
    Caterpillar { k: usize },
    /// `C_{k,k}`: the cycle on `k` vertices with a pendant vertex on every
    /// cycle vertex. `2k` vertices.
    Sunlet { k: usize },
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Star { .. } => "star",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::CompleteBipartite { .. } => "complete_bipartite",
            FamilySpec::Caterpillar { .. } => "caterpillar",
            FamilySpec::Sunlet { .. } => "sunlet",
        }
    }

    /// Builds a spec from a family name and its integer parameters.
    pub fn from_parts(kind: &str, params: &[usize]) -> Result<Self, GraphError> {
        let kind = kind.to_ascii_lowercase().replace('-', "_");
        let arity = |family: &'static str, expected: usize| {
            if params.len() == expected {
                Ok(())
            } else {
                Err(GraphError::FamilyArity { family, expected, got: params.len() })
            }
        };
        let spec = match kind.as_str() {
            "path" => arity("path", 1).map(|_| FamilySpec::Path { n: params[0] }),
            "cycle" => arity("cycle", 1).map(|_| FamilySpec::Cycle { n: params[0] }),
            "star" => arity("star", 1).map(|_| FamilySpec::Star { n: params[0] }),
            "complete" => arity("complete", 1).map(|_| FamilySpec::Complete { n: params[0] }),
            "complete_bipartite" | "bipartite" => arity("complete_bipartite", 2)
                .map(|_| FamilySpec::CompleteBipartite { p: params[0], q: params[1] }),
            "caterpillar" => arity("caterpillar", 1).map(|_| FamilySpec::Caterpillar { k: params[0] }),
            "sunlet" => arity("sunlet", 1).map(|_| FamilySpec::Sunlet { k: params[0] }),
            _ => Err(GraphError::UnknownFamily(kind)),
        }?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let check = |param: &'static str, value: usize, min: usize, need: &'static str| {
            if value >= min {
                Ok(())
            } else {
                Err(GraphError::FamilyParam { family: self.name(), param, value: value as u64, need })
            }
        };
        match *self {
            FamilySpec::Path { n } | FamilySpec::Star { n } | FamilySpec::Complete { n } => {
                check("n", n, 1, "n >= 1")
            }
            FamilySpec::Cycle { n } => check("n", n, 3, "n >= 3"),
            FamilySpec::CompleteBipartite { p, q } => {
                check("p", p, 1, "p >= 1")?;
                check("q", q, 1, "q >= 1")
            }
            FamilySpec::Caterpillar { k } => check("k", k, 4, "k >= 4"),
            FamilySpec::Sunlet { k } => check("k", k, 3, "k >= 3"),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path { n } => write!(f, "P_{n}"),
            FamilySpec::Cycle { n } => write!(f, "C_{n}"),
            FamilySpec::Star { n } => write!(f, "S_{n}"),
            FamilySpec::Complete { n } => write!(f, "K_{n}"),
            FamilySpec::CompleteBipartite { p, q } => write!(f, "K_{{{p},{q}}}"),
            FamilySpec::Caterpillar { k } => write!(f, "P_{{{k},{}}}", k as i64 - 4),
            FamilySpec::Sunlet { k } => write!(f, "C_{{{k},{k}}}"),
        }
    }
}

/// Builds the graph a family spec names.
pub fn generate(spec: &FamilySpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    let (n, edges): (usize, Vec<(usize, usize)>) = match *spec {
        FamilySpec::Path { n } => (n, (1..n).map(|i| (i - 1, i)).collect()),
        FamilySpec::Cycle { n } => (n, (0..n).map(|i| (i, (i + 1) % n)).collect()),
        FamilySpec::Star { n } => (n, (1..n).map(|i| (0, i)).collect()),
        FamilySpec::Complete { n } => {
            (n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect())
        }
        FamilySpec::CompleteBipartite { p, q } => {
            (p + q, (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v))).collect())
        }
        FamilySpec::Caterpillar { k } => {
            let mut edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
            // 1-based positions 3..=k-2 are labels 2..=k-3
            edges.extend((2..k - 2).enumerate().map(|(j, pos)| (pos, k + j)));
            (2 * k - 4, edges)
        }
        FamilySpec::Sunlet { k } => {
            let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            edges.extend((0..k).map(|i| (i, k + i)));
            (2 * k, edges)
        }
    };
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    #[test]
    fn path5() {
        let g = generate(&FamilySpec::Path { n: 5 }).unwrap();
        assert_eq!((g.n(), g.m()), (5, 4));
        assert_eq!(g.degrees(), vec![1, 2, 2, 2, 1]);
    }

    #[test]
    fn sunlet4() {
        let g = generate(&FamilySpec::Sunlet { k: 4 }).unwrap();
        assert_eq!((g.n(), g.m()), (8, 8));
        assert_eq!(sorted_degrees(&g), vec![3, 3, 3, 3, 1, 1, 1, 1]);
    }

    #[test]
    fn caterpillar4_is_p4() {
        let g = generate(&FamilySpec::Caterpillar { k: 4 }).unwrap();
        assert_eq!(g, generate(&FamilySpec::Path { n: 4 }).unwrap());
    }

    #[test]
    fn caterpillar_sizes() {
        for k in 4..20 {
            let g = generate(&FamilySpec::Caterpillar { k }).unwrap();
            assert_eq!((g.n(), g.m()), (2 * k - 4, 2 * k - 5));
        }
        // P_{7,3}: pendants at positions 3, 4, 5
        let g = generate(&FamilySpec::Caterpillar { k: 7 }).unwrap();
        assert_eq!(g.degrees(), vec![1, 2, 3, 3, 3, 2, 1, 1, 1, 1]);
    }

    #[test]
    fn other_families() {
        let k5 = generate(&FamilySpec::Complete { n: 5 }).unwrap();
        assert_eq!(k5.m(), 10);
        let k23 = generate(&FamilySpec::CompleteBipartite { p: 2, q: 3 }).unwrap();
        assert_eq!((k23.n(), k23.m()), (5, 6));
        let s1 = generate(&FamilySpec::Star { n: 1 }).unwrap();
        assert_eq!((s1.n(), s1.m()), (1, 0));
    }

    #[test]
    fn out_of_range() {
        assert!(generate(&FamilySpec::Cycle { n: 2 }).is_err());
        assert!(generate(&FamilySpec::Caterpillar { k: 3 }).is_err());
        assert!(generate(&FamilySpec::Sunlet { k: 2 }).is_err());
        assert!(generate(&FamilySpec::Path { n: 0 }).is_err());
        assert!(generate(&FamilySpec::CompleteBipartite { p: 0, q: 2 }).is_err());
    }

    #[test]
    fn from_parts() {
        assert_eq!(FamilySpec::from_parts("cycle", &[6]), Ok(FamilySpec::Cycle { n: 6 }));
        assert_eq!(
            FamilySpec::from_parts("complete-bipartite", &[2, 3]),
            Ok(FamilySpec::CompleteBipartite { p: 2, q: 3 })
        );
        assert!(matches!(FamilySpec::from_parts("wheel", &[5]), Err(GraphError::UnknownFamily(_))));
        assert!(matches!(FamilySpec::from_parts("path", &[]), Err(GraphError::FamilyArity { .. })));
    }
}
