//! Plain-text graph files: `p <n> <m>` followed by `m` lines `e <u> <v>`
//! with 1-based endpoints. Blank lines and `c` comment lines are skipped.

use std::fmt::Write as _;
use std::path::Path;

use super::Graph;
use crate::error::{Error, Result};

impl Graph {
    pub fn to_edge_format(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p {} {}", self.vertex_count(), self.edge_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "e {} {}", u + 1, v + 1);
        }
        out
    }

    pub fn parse_edge_format(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let bad = |what: &str| Error::Parse(format!("line {}: {what}: {line:?}", lineno + 1));
            let mut it = line.split_whitespace();
            let tag = it.next().unwrap_or_default();
            let mut num = || -> Result<usize> {
                it.next()
                    .ok_or_else(|| bad("missing field"))?
                    .parse::<usize>()
                    .map_err(|_| bad("expected a nonnegative integer"))
            };
            match tag {
                "p" if header.is_none() => {
                    let n = num()?;
                    let m = num()?;
                    header = Some((n, m));
                }
                "p" => return Err(bad("second header")),
                "e" => {
                    let Some((n, _)) = header else {
                        return Err(bad("edge before header"));
                    };
                    let (u, v) = (num()?, num()?);
                    if u == 0 || v == 0 || u > n || v > n {
                        return Err(bad("endpoint outside 1..n"));
                    }
                    edges.push((u - 1, v - 1));
                }
                _ => return Err(bad("unknown line type")),
            }
            if it.next().is_some() {
                return Err(bad("trailing fields"));
            }
        }
        let (n, m) = header.ok_or_else(|| Error::Parse("missing `p <n> <m>` header".into()))?;
        if edges.len() != m {
            return Err(Error::Parse(format!("header announces {m} edges, found {}", edges.len())));
        }
        Graph::from_edges(n, &edges)
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse_edge_format(&std::fs::read_to_string(path)?)
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_edge_format())?;
        Ok(())
    }

    /// `{"n": .., "adjacency": [[..], ..]}` with 0-based indices.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.vertex_count(),
            "adjacency": (0..self.vertex_count()).map(|v| self.neighbors(v).to_vec()).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::build_projective_incidence;

    #[test]
    fn roundtrip() {
        let g = build_projective_incidence(3).unwrap();
        let text = g.to_edge_format();
        assert!(text.starts_with("p 26 52\n"));
        assert_eq!(Graph::parse_edge_format(&text).unwrap(), g);
    }

    #[test]
    fn rejects_bad_input() {
        for bad in [
            "e 1 2\n",
            "p 3 1\ne 1 4\n",
            "p 3 2\ne 1 2\n",
            "p 3 1\ne 1 1\n",
            "p 3 2\ne 1 2\ne 2 1\n",
            "p 3 1\nx 1 2\n",
            "p 3 1\ne 1 2 3\n",
            "",
        ] {
            assert!(Graph::parse_edge_format(bad).is_err(), "{bad:?}");
        }
        let ok = Graph::parse_edge_format("c triangle\np 3 3\ne 1 2\n\ne 2 3\ne 3 1\n").unwrap();
        assert_eq!(ok.edge_count(), 3);
    }
}
