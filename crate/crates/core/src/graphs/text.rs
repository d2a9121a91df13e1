//! Edge-list text format: first line `n`, then one `u v` per line with
//! `1 ≤ u < v ≤ n`, sorted. A blank line (or end of input) terminates.

use std::fmt::Write as _;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

impl Graph {
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{} {}", u + 1, v + 1);
        }
        out
    }

    pub fn from_text(s: &str) -> Result<Graph> {
        let mut lines = s.lines().map(str::trim).skip_while(|l| l.is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("missing vertex count".into()))?
            .parse()
            .map_err(|_| Error::Parse("first line must be the vertex count".into()))?;
        let mut edges = Vec::new();
        for line in lines {
            if line.is_empty() {
                break;
            }
            let mut it = line.split_whitespace().map(str::parse::<usize>);
            let (u, v) = match (it.next(), it.next(), it.next()) {
                (Some(Ok(u)), Some(Ok(v)), None) => (u, v),
                _ => return Err(Error::Parse(format!("bad edge line {line:?}"))),
            };
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::IndexOutOfRange {
                    what: "vertex",
                    index: if u == 0 || u > n { u } else { v },
                    max: n,
                });
            }
            if u >= v {
                return Err(Error::Parse(format!("edge {u} {v} must satisfy u < v")));
            }
            edges.push((u - 1, v - 1));
        }
        Graph::from_edges(n, &edges)
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Graph> {
        Graph::from_text(s)
    }
}
