//! Acceptance suite. Prints one `[PASS]` or `[FAIL]` line per criterion and
//! exits nonzero if any criterion fails. Run with
//! `cargo test -p kmatch-cli --test acceptance`.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use kmatch::families::{cycle_polynomial, family_count, FamilyCountQuery};
use kmatch::graph::{generate, girth, FamilySpec, Graph};
use kmatch::matching::{count_matchings_oracle, count_matchings_recurrence, p_formula};
use kmatch::verify::{run_identity_suite, Pool};
use kmatch::Int;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Outcome of one criterion: mismatch descriptions plus a summary of what ran.
struct Outcome {
    errors: Vec<String>,
    summary: String,
}

fn criterion(id: u32, title: &str, limit: Duration, body: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = body();
    let elapsed = start.elapsed();
    let in_time = elapsed <= limit;
    let ok = out.errors.is_empty() && in_time;
    println!(
        "[{}] {id} {title}: {} ({:.2}s, limit {}s)",
        if ok { "PASS" } else { "FAIL" },
        out.summary,
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    for e in out.errors.iter().take(10) {
        println!("       {e}");
    }
    if !in_time {
        println!("       time limit exceeded");
    }
    ok
}

fn sample(pool: Pool, count: usize, seed: u64, n_max: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| pool.sample(&mut rng, n_max)).collect()
}

/// Compare the closed form for each `k` against the oracle on every graph.
fn formula_vs_oracle(graphs: &[Graph], ks: &[usize]) -> Vec<String> {
    let mut errors = Vec::new();
    for g in graphs {
        for &k in ks {
            let oracle = count_matchings_oracle::<Int>(g, k).value;
            match p_formula::<Int>(g, k, false) {
                Ok(c) if c.value == oracle => {}
                Ok(c) => errors.push(format!("k={k}: formula {} oracle {oracle} on\n{g}", c.value)),
                Err(e) => errors.push(format!("k={k}: {e} on\n{g}")),
            }
        }
    }
    errors
}

fn max_n(graphs: &[Graph]) -> usize {
    graphs.iter().map(Graph::n).max().unwrap_or(0)
}

fn c1() -> Outcome {
    let graphs = sample(Pool::Any, 300, 101, 12);
    let with_triangles = graphs.iter().filter(|g| girth(g).is_finite() && !girth(g).at_least(4)).count();
    Outcome {
        errors: formula_vs_oracle(&graphs, &[2]),
        summary: format!("{} graphs, n <= {}, {with_triangles} with triangles", graphs.len(), max_n(&graphs)),
    }
}

fn c2() -> Outcome {
    let graphs = sample(Pool::Girth4, 200, 102, 14);
    let mut errors: Vec<String> =
        graphs.iter().filter(|g| !girth(g).at_least(4)).map(|g| format!("generator girth < 4:\n{g}")).collect();
    errors.extend(formula_vs_oracle(&graphs, &[3]));
    Outcome { errors, summary: format!("{} graphs, n <= {}, girth >= 4", graphs.len(), max_n(&graphs)) }
}

fn c3() -> Outcome {
    let graphs = sample(Pool::Girth5, 100, 103, 16);
    let mut errors: Vec<String> =
        graphs.iter().filter(|g| !girth(g).at_least(5)).map(|g| format!("generator girth < 5:\n{g}")).collect();
    errors.extend(formula_vs_oracle(&graphs, &[4, 5]));
    let nonzero = graphs.iter().filter(|g| count_matchings_oracle::<Int>(g, 5).value != Int::from(0)).count();
    Outcome {
        errors,
        summary: format!("{} graphs, n <= {}, girth >= 5, {nonzero} with p5 > 0", graphs.len(), max_n(&graphs)),
    }
}

fn c4() -> Outcome {
    let report = run_identity_suite(200, 104);
    let errors = report
        .failures
        .iter()
        .map(|f| format!("{}: expected {} got {} on\n{}", f.check, f.expected, f.actual, f.graph))
        .collect();
    Outcome { errors, summary: format!("{} trials per class ({})", report.trials, report.girth_class) }
}

fn c5() -> Outcome {
    let mut errors = Vec::new();
    let mut checked = 0;
    let query = |spec, k| family_count::<Int>(&FamilyCountQuery { spec, k }).map(|c| c.value);
    for n in 2..=20 {
        let spec = FamilySpec::Path { n };
        let g = generate(&spec).unwrap();
        for k in 0..=n / 2 + 1 {
            let oracle = count_matchings_oracle::<Int>(&g, k).value;
            if query(spec, k).as_ref() != Ok(&oracle) {
                errors.push(format!("{spec} k={k}: {:?} vs oracle {oracle}", query(spec, k)));
            }
            checked += 1;
        }
    }
    for n in 3..=20 {
        let spec = FamilySpec::Cycle { n };
        let g = generate(&spec).unwrap();
        for k in 1..=n / 2 + 1 {
            let oracle = count_matchings_oracle::<Int>(&g, k).value;
            if query(spec, k).as_ref() != Ok(&oracle) {
                errors.push(format!("{spec} k={k}: {:?} vs oracle {oracle}", query(spec, k)));
            }
            checked += 1;
            if (3..=6).contains(&k) && n > k {
                let poly = cycle_polynomial::<Int>(n, k);
                if poly.as_ref() != Ok(&oracle) {
                    errors.push(format!("cycle polynomial n={n} k={k}: {poly:?} vs oracle {oracle}"));
                }
                checked += 1;
            }
        }
    }
    Outcome { errors, summary: format!("{checked} table entries") }
}

fn c6() -> Outcome {
    let mut errors = Vec::new();
    let mut checked = 0;
    let mut run = |spec: FamilySpec, r: usize| {
        let formula = family_count::<Int>(&FamilyCountQuery { spec, k: r }).map(|c| c.value);
        let oracle = count_matchings_oracle::<Int>(&generate(&spec).unwrap(), r).value;
        if formula.as_ref() != Ok(&oracle) {
            errors.push(format!("{spec} r={r}: {formula:?} vs oracle {oracle}"));
        }
        checked += 1;
    };
    for r in 2..=5 {
        for k in r + 2..=12 {
            run(FamilySpec::Caterpillar { k }, r);
        }
    }
    for r in 3..=6 {
        for k in r + 1..=12 {
            run(FamilySpec::Sunlet { k }, r);
        }
    }
    Outcome { errors, summary: format!("{checked} (family, r) pairs up to k = 12") }
}

fn c7() -> Outcome {
    let mut errors = Vec::new();
    let mut checked = 0;
    let mut run = |spec: FamilySpec, expected: i64| {
        let g = generate(&spec).unwrap();
        let expected = Int::from(expected);
        let rec = count_matchings_recurrence::<Int>(&g, 2).map(|c| c.value);
        if rec.as_ref() != Ok(&expected) {
            errors.push(format!("{spec}: recurrence {rec:?}, expected {expected}"));
        }
        let formula = p_formula::<Int>(&g, 2, false).map(|c| c.value);
        if formula.as_ref() != Ok(&expected) {
            errors.push(format!("{spec}: formula {formula:?}, expected {expected}"));
        }
        checked += 1;
    };
    for n in 2..=20usize {
        let n_ = n as i64;
        run(FamilySpec::Path { n }, (n_ - 3) * (n_ - 2) / 2);
    }
    for n in 1..=20 {
        run(FamilySpec::Star { n }, 0);
    }
    for n in 3..=20usize {
        let n_ = n as i64;
        run(FamilySpec::Cycle { n }, n_ * (n_ - 3) / 2);
    }
    Outcome { errors, summary: format!("{checked} graphs, paths n >= 2, stars n >= 1, cycles n >= 3") }
}

fn c8() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_kmatch"))
            .args(["verify", "all", "--seed", "108"])
            .output()
            .expect("kmatch binary runs")
    };
    let (a, b) = (run(), run());
    let mut errors = Vec::new();
    if a.status.code() != Some(0) || b.status.code() != Some(0) {
        errors.push(format!("exit codes {:?} and {:?}", a.status.code(), b.status.code()));
    }
    if a.stdout != b.stdout {
        errors.push("stdout differs between runs".into());
    }
    if a.stdout.is_empty() {
        errors.push("empty report".into());
    }
    Outcome { errors, summary: format!("two runs, {} identical bytes", a.stdout.len()) }
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let results = [
        criterion(1, "p(G,2) closed form = oracle, any girth", secs(5), c1),
        criterion(2, "p(G,3) closed form = oracle, girth > 3", secs(10), c2),
        criterion(3, "p(G,4), p(G,5) closed forms = oracle, girth >= 5", secs(60), c3),
        criterion(4, "lemma and identity suite, zero failures", secs(60), c4),
        criterion(5, "path, cycle and cycle-polynomial tables = oracle", secs(5), c5),
        criterion(6, "caterpillar and sunlet closed forms = oracle", secs(30), c6),
        criterion(7, "base cases for p(G,2) via recurrence and formula", secs(5), c7),
        criterion(8, "verify all is byte-identical across runs", secs(60), c8),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
