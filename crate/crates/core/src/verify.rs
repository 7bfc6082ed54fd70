//! Seeded randomized checks of every closed form against direct computation.
//!
//! Graphs come from three pools: unconstrained, girth >= 4 and girth >= 5.
//! Each check runs only where its girth hypothesis holds. Failures are
//! collected rather than raised, so a run always reports every violation.

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::graph::{girth, random_with_min_girth, Girth, Graph};
use crate::invariants::neighbor_degree_sum;
use crate::matching::{
    count_matchings_oracle, count_matchings_recurrence, lemma_sums, p_formula, FormulaInputs, LemmaClosedForms,
};
use crate::Int;

/// Vertex-count ceiling for the identity suite.
pub const IDENTITY_N_MAX: usize = 14;

/// Largest `n_max` the formula suite accepts; the oracle is exponential.
pub const FORMULA_N_MAX: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    /// Edge-list text of the offending graph.
    pub graph: String,
    pub check: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialReport {
    pub seed: u64,
    /// Graphs drawn per pool.
    pub trials: usize,
    pub girth_class: String,
    pub failures: Vec<Failure>,
}

impl TrialReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data")
    }

    /// Combines reports from runs with the same seed and trial count.
    pub fn merge(reports: impl IntoIterator<Item = TrialReport>) -> TrialReport {
        let mut reports = reports.into_iter();
        let mut out = reports.next().expect("at least one report");
        for r in reports {
            debug_assert_eq!((r.seed, r.trials), (out.seed, out.trials));
            if r.girth_class != out.girth_class {
                out.girth_class = format!("{}; {}", out.girth_class, r.girth_class);
            }
            out.failures.extend(r.failures);
        }
        out.failures.sort();
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pool {
    Any,
    Girth4,
    Girth5,
}

impl Pool {
    pub const ALL: [Pool; 3] = [Pool::Any, Pool::Girth4, Pool::Girth5];

    pub fn min_girth(self) -> Girth {
        match self {
            Pool::Any => Girth::Finite(3),
            Pool::Girth4 => Girth::Finite(4),
            Pool::Girth5 => Girth::Finite(5),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Pool::Any => "any",
            Pool::Girth4 => "girth>=4",
            Pool::Girth5 => "girth>=5",
        }
    }

    /// Seeded sample: `n` uniform in `[4, n_max]`, target edge count uniform
    /// in `[n - 1, floor(1.4 n)]`, or up to `2n` for the unconstrained pool.
    pub fn sample(self, rng: &mut ChaCha8Rng, n_max: usize) -> Graph {
        let n = rng.gen_range(4..=n_max.max(4));
        let hi = match self {
            Pool::Any => (2 * n).min(n * (n - 1) / 2),
            _ => n * 14 / 10,
        };
        let m = rng.gen_range(n - 1..=hi);
        random_with_min_girth(n, m, self.min_girth(), rng.gen())
    }
}

fn class_label() -> String {
    Pool::ALL.map(Pool::label).join(",")
}

/// One generator per (suite, pool) so pools are reproducible on their own.
fn pool_rng(seed: u64, suite: u64, pool: Pool) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(suite * 8 + pool as u64);
    rng
}

struct Recorder<'a> {
    graph: &'a Graph,
    failures: &'a mut Vec<Failure>,
}

impl Recorder<'_> {
    fn check(&mut self, name: &str, expected: impl ToString, actual: impl ToString) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        if expected != actual {
            self.failures.push(Failure { graph: self.graph.to_edge_list(), check: name.into(), expected, actual });
        }
    }
}

/// Invariant identities and lemma closed forms against direct sums.
pub fn run_identity_suite(trials: usize, seed: u64) -> TrialReport {
    let mut failures = Vec::new();
    for pool in Pool::ALL {
        let mut rng = pool_rng(seed, 1, pool);
        for _ in 0..trials {
            let g = pool.sample(&mut rng, IDENTITY_N_MAX);
            identity_checks(&g, pool, &mut Recorder { graph: &g, failures: &mut failures });
        }
    }
    failures.sort();
    TrialReport { seed, trials, girth_class: class_label(), failures }
}

/// All identity checks whose hypotheses `g` meets.
pub fn identity_checks_for(g: &Graph) -> Vec<Failure> {
    let mut failures = Vec::new();
    identity_checks(g, Pool::Any, &mut Recorder { graph: g, failures: &mut failures });
    failures
}

fn identity_checks(g: &Graph, pool: Pool, rec: &mut Recorder<'_>) {
    let gi = girth(g);
    rec.check("generator_girth", format!("girth >= {}", pool.min_girth()), format!("girth >= {}", pool.min_girth().min(gi)));

    let x = FormulaInputs::<Int>::of(g);
    let (d, inc) = (&x.degree, &x.incidence);
    rec.check("em1_identity", x.em1_identity(), &d.em1);
    rec.check("beta_minus_alpha", x.beta_minus_alpha_identity(), &inc.beta - &inc.alpha);

    // sum of d(u) m_G(u) = M1, sum over edges of d(u) m_G(u) + d(v) m_G(v) = 2 M2
    let dm = |u: usize| -> Ratio<Int> {
        let du = Int::from(g.degree(u));
        match crate::invariants::average_neighbor_degree::<Int>(g, u) {
            Some(avg) => avg * Ratio::from_integer(du),
            None => Ratio::from_integer(Int::from(0)),
        }
    };
    let total: Ratio<Int> = (0..g.n()).map(dm).sum();
    rec.check("avg_neighbor_degree_m1", &d.m1, total);
    let per_edge: Ratio<Int> = g.edges().iter().map(|&(u, v)| dm(u) + dm(v)).sum();
    rec.check("avg_neighbor_degree_m2", &d.m2 * 2u32, per_edge);
    let nds: Int = (0..g.n()).map(|u| neighbor_degree_sum::<Int>(g, u)).sum();
    rec.check("neighbor_degree_sum_m1", &d.m1, nds);

    let direct = lemma_sums::<Int>(g);
    let closed = LemmaClosedForms::from_inputs(&x);
    for (i, (c, s)) in closed.mu.iter().zip(&direct.mu).enumerate() {
        rec.check(&format!("mu{}", i + 1), c, s);
    }
    if gi.at_least(4) {
        rec.check("gamma_identity", x.gamma_identity(), &inc.gamma);
        for (i, (c, s)) in closed.xi.iter().zip(&direct.xi).enumerate() {
            rec.check(&format!("xi{}", i + 1), c, s);
        }
        rec.check("varrho1", &closed.varrho1, &direct.varrho1);
    }
    if gi.at_least(5) {
        rec.check("eta1", &closed.eta1, &direct.eta1);
    }
}

/// Closed-form counts and the recurrence against the oracle.
///
/// `n_max` is clamped to `[4, FORMULA_N_MAX]`.
pub fn run_formula_vs_oracle(trials: usize, seed: u64, n_max: usize) -> TrialReport {
    let n_max = n_max.clamp(4, FORMULA_N_MAX);
    let mut failures = Vec::new();
    for pool in Pool::ALL {
        let mut rng = pool_rng(seed, 2, pool);
        for _ in 0..trials {
            let g = pool.sample(&mut rng, n_max);
            formula_checks(&g, &mut Recorder { graph: &g, failures: &mut failures });
        }
    }
    failures.sort();
    TrialReport { seed, trials, girth_class: class_label(), failures }
}

pub fn formula_checks_for(g: &Graph) -> Vec<Failure> {
    let mut failures = Vec::new();
    formula_checks(g, &mut Recorder { graph: g, failures: &mut failures });
    failures
}

fn formula_checks(g: &Graph, rec: &mut Recorder<'_>) {
    let gi = girth(g);
    let oracle: Vec<Int> = (0..=5).map(|k| count_matchings_oracle::<Int>(g, k).value).collect();
    for (k, expected) in oracle.iter().enumerate().skip(1) {
        let actual = match count_matchings_recurrence::<Int>(g, k) {
            Ok(c) => c.value.to_string(),
            Err(e) => e.to_string(),
        };
        rec.check(&format!("recurrence_k{k}"), expected, actual);
    }
    for (k, expected) in oracle.iter().enumerate().skip(2) {
        let bound = crate::matching::formula_girth_bound(k).unwrap();
        if !gi.at_least(bound) {
            continue;
        }
        let actual = match p_formula::<Int>(g, k, false) {
            Ok(c) => c.value.to_string(),
            Err(e) => e.to_string(),
        };
        rec.check(&format!("formula_k{k}"), expected, actual);
    }
}

/// Both suites with one seed, merged into a single report.
pub fn run_all(trials: usize, seed: u64, n_max: usize) -> TrialReport {
    TrialReport::merge([run_identity_suite(trials, seed), run_formula_vs_oracle(trials, seed, n_max)])
}
