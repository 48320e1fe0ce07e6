//! Edge lists: a header line `n m`, then `m` lines `u v` with 0-indexed
//! endpoints. Labels live in a separate file, one per line.

use super::Graph;
use crate::error::{Error, ParseError};

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.num_edges());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, Error> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| ParseError::new("empty edge list"))?;
    let nums = |lineno: usize, line: &str| -> Result<(usize, usize), ParseError> {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let bad = || {
            ParseError::new(format!(
                "line {}: expected two non-negative integers, got `{line}`",
                lineno + 1
            ))
        };
        if parts.len() != 2 {
            return Err(bad());
        }
        Ok((
            parts[0].parse().map_err(|_| bad())?,
            parts[1].parse().map_err(|_| bad())?,
        ))
    };
    let (n, m) = nums(0, header)?;
    let edges = lines
        .map(|(i, l)| nums(i, l))
        .collect::<Result<Vec<_>, _>>()?;
    if edges.len() != m {
        return Err(
            ParseError::new(format!("header promises {m} edges, found {}", edges.len())).into(),
        );
    }
    Graph::from_edges(n, &edges)
}

pub fn write_labels(g: &Graph) -> String {
    (0..g.n()).map(|v| g.label(v) + "\n").collect()
}

pub fn parse_labels(text: &str) -> Vec<String> {
    text.lines().map(str::to_string).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{construct_family, Family};

    #[test]
    fn round_trip() {
        let g = construct_family(Family::Odd, 5).unwrap();
        let text = write_edge_list(&g);
        assert!(text.starts_with("10 15\n"));
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back.edges(), g.edges());
        let labelled = back.with_labels(parse_labels(&write_labels(&g))).unwrap();
        assert_eq!(labelled, g);
    }

    #[test]
    fn malformed_input() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 x\n").is_err());
        assert!(parse_edge_list("3 1\n0 1 2\n").is_err());
        assert!(parse_edge_list("2 1\n0 2\n").is_err());
    }
}
