use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Girth, Graph};

/// Pair lists up to this size are shuffled whole; larger graphs sample pairs.
const SHUFFLE_LIMIT: usize = 1 << 20;

/// Seeded random graph with girth at least `min_girth`.
///
/// Candidate edges are drawn in a uniformly random order and inserted unless
/// they would close a cycle shorter than `min_girth`; `Girth::Infinite` asks
/// for a forest. Stops at `target_m` edges or when candidates run out, so the
/// result may have fewer edges than requested. Identical arguments give an
/// identical graph.
pub fn random_with_min_girth(n: usize, target_m: usize, min_girth: Girth, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut builder = Builder::new(n, min_girth);
    if n < 2 || target_m == 0 {
        return Graph::empty(n);
    }

    let pairs = n * (n - 1) / 2;
    if pairs <= SHUFFLE_LIMIT {
        let mut cand: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        cand.shuffle(&mut rng);
        for (u, v) in cand {
            if builder.m == target_m {
                break;
            }
            builder.try_add(u, v);
        }
    } else {
        let budget = 32 * target_m.max(1);
        for _ in 0..budget {
            if builder.m == target_m {
                break;
            }
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v {
                builder.try_add(u, v);
            }
        }
    }
    builder.finish()
}

struct Builder {
    adj: Vec<Vec<usize>>,
    m: usize,
    // longest distance between endpoints that still closes a short cycle
    max_forbidden: Option<usize>,
    dist: Vec<usize>,
    queue: VecDeque<usize>,
}

impl Builder {
    fn new(n: usize, min_girth: Girth) -> Self {
        let max_forbidden = match min_girth {
            Girth::Finite(g) if g <= 3 => Some(1),
            Girth::Finite(g) => Some(g as usize - 2),
            Girth::Infinite => None,
        };
        Builder { adj: vec![Vec::new(); n], m: 0, max_forbidden, dist: vec![usize::MAX; n], queue: VecDeque::new() }
    }

    fn try_add(&mut self, u: usize, v: usize) -> bool {
        if self.adj[u].contains(&v) {
            return false;
        }
        // a new edge uv closes a cycle of length dist(u, v) + 1
        let limit = self.max_forbidden.unwrap_or(usize::MAX);
        if limit > 1 && self.within(u, v, limit) {
            return false;
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.m += 1;
        true
    }

    /// Whether `v` is reachable from `u` in at most `limit` steps.
    fn within(&mut self, u: usize, v: usize, limit: usize) -> bool {
        let mut seen = vec![u];
        self.dist[u] = 0;
        self.queue.clear();
        self.queue.push_back(u);
        let mut found = false;
        'bfs: while let Some(x) = self.queue.pop_front() {
            if self.dist[x] >= limit {
                continue;
            }
            for &y in &self.adj[x] {
                if self.dist[y] == usize::MAX {
                    if y == v {
                        found = true;
                        break 'bfs;
                    }
                    self.dist[y] = self.dist[x] + 1;
                    seen.push(y);
                    self.queue.push_back(y);
                }
            }
        }
        for w in seen {
            self.dist[w] = usize::MAX;
        }
        found
    }

    fn finish(self) -> Graph {
        let n = self.adj.len();
        let edges = self
            .adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v)));
        Graph::from_edges(n, edges.collect::<Vec<_>>()).expect("builder only inserts simple edges")
    }
}
