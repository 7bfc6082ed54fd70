use super::{Graph, GraphError, Loc};

/// Parses the edge-list format: a header line `n m` followed by `m` lines
/// `u v`, labels in `0..n`. Fields are whitespace-separated; LF and CRLF line
/// endings are accepted and blank lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty());

    let (hl, header) = lines.next().ok_or(GraphError::Empty)?;
    let [n, m] = pair(hl, header)?;

    let mut edges = Vec::with_capacity(m);
    for (no, line) in lines {
        if edges.len() == m {
            return Err(GraphError::Malformed {
                at: Loc::Line(no),
                text: line.to_string(),
                reason: "more edge lines than the header declares",
            });
        }
        let [u, v] = pair(no, line)?;
        edges.push((Loc::Line(no), u, v));
    }
    if edges.len() != m {
        return Err(GraphError::EdgeCount { declared: m, found: edges.len() });
    }
    Graph::build(n, edges)
}

fn pair(no: usize, line: &str) -> Result<[usize; 2], GraphError> {
    let bad = |reason| GraphError::Malformed { at: Loc::Line(no), text: line.to_string(), reason };
    let mut fields = line.split_whitespace();
    let mut out = [0usize; 2];
    for slot in &mut out {
        let f = fields.next().ok_or_else(|| bad("expected two integers"))?;
        *slot = f.parse().map_err(|_| bad("not a non-negative integer"))?;
    }
    if fields.next().is_some() {
        return Err(bad("expected two integers"));
    }
    Ok(out)
}
