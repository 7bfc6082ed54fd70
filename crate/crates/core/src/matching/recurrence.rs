use std::collections::HashMap;


use super::{MatchCount, MatchingError, Method};
use crate::graph::Graph;
use crate::scalar::ExactInt;

/// `p(G; k) = (1/k) * sum over edges uv of p(G - {u, v}; k - 1)`, bottoming
/// out at `p(G; 1) = m`.
///
/// Each `k`-matching is counted once per edge it contains, hence the exact
/// division by `k`; a remainder means the deletion step is broken.
/// Vertex-pair deletion relabels order-preservingly, so every order of
/// removing the same vertices produces the same graph and the memo collapses
/// those branches.
pub fn count_matchings_recurrence<T: ExactInt>(g: &Graph, k: usize) -> Result<MatchCount<T>, MatchingError> {
    let mut memo = HashMap::new();
    let value = eval(g, k, &mut memo)?;
    Ok(MatchCount::exact(k, value, Method::Recurrence))
}

fn eval<T: ExactInt>(g: &Graph, k: usize, memo: &mut HashMap<(Graph, usize), T>) -> Result<T, MatchingError> {
    match k {
        0 => return Ok(T::one()),
        1 => return Ok(T::of(g.m())),
        _ if k > g.n() / 2 => return Ok(T::zero()),
        _ => {}
    }
    if let Some(v) = memo.get(&(g.clone(), k)) {
        return Ok(v.clone());
    }
    let mut sum = T::zero();
    for &(u, v) in g.edges() {
        sum = sum + eval(&g.delete_vertex_pair(u, v)?, k - 1, memo)?;
    }
    let (value, rem) = sum.div_rem(&T::of(k));
    if !rem.is_zero() {
        return Err(MatchingError::InexactDivision { k, sum: sum.to_string() });
    }
    memo.insert((g.clone(), k), value.clone());
    Ok(value)
}
