use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use super::Graph;

/// Length of a shortest cycle, or `Infinite` for a forest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Girth {
    Finite(u32),
    Infinite,
}

impl Girth {
    /// `g >= bound`; an acyclic graph satisfies every bound.
    pub fn at_least(self, bound: u32) -> bool {
        match self {
            Girth::Finite(g) => g >= bound,
            Girth::Infinite => true,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Girth::Finite(_))
    }
}

impl PartialOrd for Girth {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Girth {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use Girth::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => std::cmp::Ordering::Less,
            (Infinite, Finite(_)) => std::cmp::Ordering::Greater,
            (Infinite, Infinite) => std::cmp::Ordering::Equal,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Exact girth by a breadth-first search from every vertex, O(n(n+m)).
///
/// A non-tree edge `xy` met during the search rooted at `r` closes a closed
/// walk of length `dist(x) + dist(y) + 1` through `r`, which contains a cycle
/// no longer than that. The root on a shortest cycle attains the bound.
pub fn girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();

    for root in 0..n {
        dist.fill(usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            // nothing shorter can appear past this depth
            if 2 * dist[x] + 1 >= best {
                break;
            }
            for &y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    best = best.min(dist[x] + dist[y] + 1);
                }
            }
        }
    }

    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best as u32)
    }
}
