//! Text forms of pebble configurations: a JSON object `{"vertex": count}`
//! or the shorthand `stack:VERTEX:t`, where `VERTEX` is a corner name or an
//! index.

use std::collections::BTreeMap;
use std::str::FromStr;

use crate::error::{GasketError, Result};
use crate::graph::{Adjacency, Corner, GasketGraph};
use crate::pebbling::simulator::PebbleConfiguration;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRef {
    Corner(Corner),
    Index(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConfigSpec {
    Stack { at: VertexRef, pebbles: u32 },
    Counts(BTreeMap<usize, u32>),
}

fn parse_err(msg: impl Into<String>) -> GasketError {
    GasketError::Parse(msg.into())
}

impl FromStr for VertexRef {
    type Err = GasketError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Ok(i) = s.parse::<usize>() {
            return Ok(VertexRef::Index(i));
        }
        s.parse::<Corner>().map(VertexRef::Corner)
    }
}

impl FromStr for ConfigSpec {
    type Err = GasketError;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some(rest) = text.strip_prefix("stack:") {
            let (at, pebbles) = rest
                .split_once(':')
                .ok_or_else(|| parse_err("expected stack:VERTEX:COUNT"))?;
            let pebbles = pebbles
                .trim()
                .parse::<u32>()
                .map_err(|e| parse_err(format!("bad pebble count {pebbles:?}: {e}")))?;
            return Ok(ConfigSpec::Stack {
                at: at.parse()?,
                pebbles,
            });
        }
        let raw: BTreeMap<String, u32> =
            serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
        let mut counts = BTreeMap::new();
        for (key, count) in raw {
            let v = key
                .trim()
                .parse::<usize>()
                .map_err(|_| parse_err(format!("vertex key {key:?} is not an index")))?;
            if counts.insert(v, count).is_some() {
                return Err(parse_err(format!("vertex {v} listed twice")));
            }
        }
        Ok(ConfigSpec::Counts(counts))
    }
}

impl ConfigSpec {
    /// Materialize against a concrete graph.
    pub fn resolve(&self, g: &GasketGraph) -> Result<PebbleConfiguration> {
        let n = g.vertex_count();
        let index = |r: VertexRef| match r {
            VertexRef::Corner(c) => Ok(g.corner(c)),
            VertexRef::Index(i) if i < n => Ok(i),
            VertexRef::Index(i) => Err(GasketError::VertexOutOfRange { index: i, count: n }),
        };
        match self {
            ConfigSpec::Stack { at, pebbles } => {
                Ok(PebbleConfiguration::stacked(n, index(*at)?, *pebbles))
            }
            ConfigSpec::Counts(counts) => {
                let mut c = PebbleConfiguration::empty(n);
                let mut total: u64 = 0;
                for (&v, &k) in counts {
                    index(VertexRef::Index(v))?;
                    total += k as u64;
                    if total > u32::MAX as u64 {
                        return Err(parse_err("total weight overflows"));
                    }
                    c.add(v, k);
                }
                Ok(c)
            }
        }
    }
}

/// Parse and resolve in one step.
pub fn parse_configuration(text: &str, g: &GasketGraph) -> Result<PebbleConfiguration> {
    text.parse::<ConfigSpec>()?.resolve(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    #[test]
    fn stack_shorthand() {
        let g = generate(2).unwrap();
        let c = parse_configuration("stack:L:17", &g).unwrap();
        assert_eq!(c.weight(), 17);
        assert_eq!(c.get(g.corner(Corner::L)), 17);
        let c = parse_configuration("stack:2:3", &g).unwrap();
        assert_eq!(c.get(2), 3);
        assert!(parse_configuration("stack:Q:3", &g).is_err());
        assert!(parse_configuration("stack:L", &g).is_err());
        assert!(parse_configuration("stack:L:-1", &g).is_err());
        assert!(parse_configuration("stack:9:1", &g).is_err());
    }

    #[test]
    fn json_counts() {
        let g = generate(2).unwrap();
        let c = parse_configuration(r#"{"0": 3, "5": 1}"#, &g).unwrap();
        assert_eq!(c.counts(), &[3, 0, 0, 0, 0, 1]);
        assert!(parse_configuration(r#"{"6": 1}"#, &g).is_err());
        assert!(parse_configuration(r#"{"x": 1}"#, &g).is_err());
        assert!(parse_configuration(r#"{"0": 1, "00": 2}"#, &g).is_err());
        assert!(parse_configuration("[1,2]", &g).is_err());
    }
}
