//! Literal parsing for weights and diagrams.
//!
//! Weights are comma-separated Dynkin labels (`2,1`). A single integer is
//! accepted as a level-one weight (`5` is `ϖ_5`) when the level is 1, and `0`
//! always means the trivial weight. Diagrams are comma-separated rows.

use rankdual::{level1_weight, Weight, YoungDiagram};

fn parse_items(kind: &str, literal: &str) -> Result<Vec<usize>, String> {
    if literal.trim().is_empty() {
        return Err(format!("empty {kind} literal"));
    }
    let mut offset = 0;
    let mut out = Vec::new();
    for (i, item) in literal.split(',').enumerate() {
        let value = item.trim().parse::<usize>().map_err(|_| {
            format!(
                "invalid {kind} literal '{literal}': item {} at column {} ('{}') is not a non-negative integer",
                i + 1,
                offset + 1,
                item.trim()
            )
        })?;
        out.push(value);
        offset += item.len() + 1;
    }
    Ok(out)
}

pub fn weight(literal: &str, rank: usize, level: usize) -> Result<Weight, String> {
    let items = parse_items("weight", literal)?;
    if items.len() == rank.saturating_sub(1) {
        return Weight::new(rank, items).map_err(|e| e.to_string());
    }
    match items[..] {
        [0] => Ok(Weight::zero(rank)),
        [i] if level == 1 => level1_weight(i, rank).map_err(|e| format!("invalid weight literal '{literal}': {e}")),
        _ => Err(format!(
            "invalid weight literal '{literal}': sl({rank}) needs {} comma-separated labels, got {}",
            rank.saturating_sub(1),
            items.len()
        )),
    }
}

pub fn diagram(literal: &str, rank: usize, level: usize) -> Result<YoungDiagram, String> {
    let rows = parse_items("diagram", literal)?;
    YoungDiagram::new(rank, level, rows).map_err(|e| format!("invalid diagram literal '{literal}': {e}"))
}
