use kmatch::invariants::{degree_invariants, incidence_invariants};
use kmatch::matching::{
    count_matchings_oracle, count_matchings_recurrence, formula_girth_bound, p_formula, p_formula_rational,
    MatchingError,
};
use kmatch::{Count, Degrees, Graph, Incidence, Int};
use serde_json::{json, Value};

use crate::{pretty, CliError, Method};

/// One count line in the report. Forced formula values may be fractions,
/// so values stay strings throughout.
struct Entry {
    k: usize,
    method: &'static str,
    value: String,
    girth_ok: bool,
}

impl Entry {
    fn from_count(c: &Count) -> Self {
        Entry { k: c.k, method: method_name(c.method), value: c.value.to_string(), girth_ok: c.girth_ok }
    }

    fn json(&self) -> Value {
        json!({ "k": self.k.to_string(), "method": self.method, "value": self.value, "girth_ok": self.girth_ok })
    }
}

fn method_name(m: kmatch::matching::Method) -> &'static str {
    match m {
        kmatch::matching::Method::Oracle => "oracle",
        kmatch::matching::Method::Recurrence => "recurrence",
        kmatch::matching::Method::Formula => "formula",
    }
}

pub fn build(g: &Graph, k_max: usize, method: Method, force: bool) -> Result<String, CliError> {
    let girth = g.girth();
    let degree: Degrees = degree_invariants(g);
    let incidence: Incidence = incidence_invariants(g);
    let wants = |m: Method| method == m || method == Method::All;

    let mut entries = Vec::new();
    let mut warnings = Vec::new();
    let mut p = Vec::new();
    let mut disagreements = Vec::new();

    for k in 0..=k_max {
        // entries that are inside their method's proven scope
        let mut trusted: Vec<Entry> = Vec::new();
        if wants(Method::Oracle) {
            trusted.push(Entry::from_count(&count_matchings_oracle::<Int>(g, k)));
        }
        if wants(Method::Recurrence) {
            let c: Count = count_matchings_recurrence(g, k).map_err(|e| CliError::Failed {
                output: String::new(),
                reason: format!("recurrence failed at k = {k}: {e}"),
            })?;
            trusted.push(Entry::from_count(&c));
        }
        if wants(Method::Formula) {
            match k {
                0 | 1 => {
                    let value = if k == 0 { "1".to_string() } else { g.m().to_string() };
                    trusted.push(Entry { k, method: "formula", value, girth_ok: true });
                }
                _ => match formula_girth_bound(k) {
                    None if method == Method::Formula => {
                        return Err(CliError::Usage(format!("no closed form for k = {k}; formulas cover k <= 5")))
                    }
                    None => warnings.push(format!("k = {k}: no closed form, formula skipped")),
                    Some(bound) if girth.at_least(bound) => match p_formula::<Int>(g, k, false) {
                        Ok(c) => trusted.push(Entry::from_count(&c)),
                        Err(e) => {
                            return Err(CliError::Failed { output: String::new(), reason: e.to_string() })
                        }
                    },
                    Some(bound) if force => {
                        let raw = p_formula_rational::<Int>(g, k).expect("k has a closed form");
                        warnings.push(format!(
                            "k = {k}: formula forced outside its hypothesis (girth {girth} < {bound}); value {raw} is not checked"
                        ));
                        entries.push(Entry { k, method: "formula", value: raw.to_string(), girth_ok: false });
                    }
                    Some(bound) => {
                        let err = MatchingError::Girth { k, required: bound, actual: girth };
                        if method == Method::Formula {
                            return Err(CliError::Precondition(format!("{err} (use --force to evaluate anyway)")));
                        }
                        warnings.push(format!("k = {k}: formula skipped, {err}"));
                    }
                },
            }
        }

        if let Some(first) = trusted.first() {
            p.push(first.value.clone());
            if trusted.iter().any(|e| e.value != first.value) {
                let values: serde_json::Map<String, Value> =
                    trusted.iter().map(|e| (e.method.to_string(), json!(e.value))).collect();
                disagreements.push(json!({ "k": k.to_string(), "values": values }));
            }
        }
        entries.extend(trusted);
    }

    let out = json!({
        "graph": { "n": g.n().to_string(), "m": g.m().to_string(), "girth": girth.to_string() },
        "invariants": {
            "degree": serde_json::to_value(&degree).expect("serializable"),
            "incidence": serde_json::to_value(&incidence).expect("serializable"),
        },
        "counts": entries.iter().map(Entry::json).collect::<Vec<_>>(),
        "p": p,
        "disagreements": disagreements,
        "warnings": warnings,
    });
    let output = pretty(&out);
    if disagreements.is_empty() {
        Ok(output)
    } else {
        Err(CliError::Failed { output, reason: format!("methods disagree at {} value(s) of k", disagreements.len()) })
    }
}
