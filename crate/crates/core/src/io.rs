//! Serialization of [`GasketGraph`]: Graphviz DOT, JSON and a plain edge list.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{GasketError, Result};
use crate::graph::{Coord, GasketGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
    EdgeList,
}

impl FromStr for ExportFormat {
    type Err = GasketError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            "edgelist" => Ok(ExportFormat::EdgeList),
            other => Err(GasketError::Parse(format!("unknown format {other:?}"))),
        }
    }
}

impl fmt::Display for ExportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExportFormat::Dot => "dot",
            ExportFormat::Json => "json",
            ExportFormat::EdgeList => "edgelist",
        })
    }
}

/// On-disk JSON shape of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub level: u32,
    pub side: u32,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub vertices: Vec<[u32; 2]>,
    pub edges: Vec<[usize; 2]>,
    pub corners: Vec<usize>,
    pub middles: Vec<usize>,
}

impl From<&GasketGraph> for GraphDocument {
    fn from(g: &GasketGraph) -> Self {
        GraphDocument {
            level: g.level(),
            side: g.side(),
            vertex_count: g.coords().len(),
            edge_count: g.edge_count(),
            vertices: g.coords().iter().map(|p| [p.a, p.b]).collect(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            corners: g.corners().to_vec(),
            middles: g.middles().map(|m| m.to_vec()).unwrap_or_default(),
        }
    }
}

impl TryFrom<GraphDocument> for GasketGraph {
    type Error = GasketError;

    fn try_from(doc: GraphDocument) -> Result<Self> {
        let coords = doc
            .vertices
            .iter()
            .map(|&[a, b]| Coord::new(a, b))
            .collect();
        let edges = doc.edges.iter().map(|&[u, v]| (u, v)).collect();
        let g = GasketGraph::from_parts(doc.level, coords, edges)?;
        let mismatch =
            |field: &str| GasketError::Parse(format!("field {field:?} disagrees with the graph"));
        if doc.side != g.side() {
            return Err(mismatch("side"));
        }
        if doc.vertex_count != g.coords().len() {
            return Err(mismatch("vertex_count"));
        }
        if doc.edge_count != g.edge_count() {
            return Err(mismatch("edge_count"));
        }
        if doc.corners != g.corners() {
            return Err(mismatch("corners"));
        }
        if doc.middles != g.middles().map(|m| m.to_vec()).unwrap_or_default() {
            return Err(mismatch("middles"));
        }
        Ok(g)
    }
}

/// Write `g` to `sink` in the requested format. Output is deterministic.
pub fn export<W: Write>(g: &GasketGraph, format: ExportFormat, sink: &mut W) -> Result<()> {
    match format {
        ExportFormat::Dot => write_dot(g, sink)?,
        ExportFormat::Json => {
            serde_json::to_writer(&mut *sink, &GraphDocument::from(g))
                .map_err(|e| GasketError::Io(e.into()))?;
            sink.write_all(b"\n")?;
        }
        ExportFormat::EdgeList => {
            for &(u, v) in g.edges() {
                writeln!(sink, "{u} {v}")?;
            }
        }
    }
    sink.flush()?;
    Ok(())
}

pub fn export_to_string(g: &GasketGraph, format: ExportFormat) -> String {
    let mut buf = Vec::new();
    export(g, format, &mut buf).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("exporters emit UTF-8")
}

fn write_dot<W: Write>(g: &GasketGraph, sink: &mut W) -> std::io::Result<()> {
    writeln!(sink, "graph S{} {{", g.level())?;
    writeln!(sink, "  node [shape=circle, width=0.15, label=\"\"];")?;
    for (i, p) in g.coords().iter().enumerate() {
        writeln!(sink, "  {i} [pos=\"{},{}!\"];", p.a, p.b)?;
    }
    for &(u, v) in g.edges() {
        writeln!(sink, "  {u} -- {v};")?;
    }
    writeln!(sink, "}}")
}

/// Parse a graph previously written with [`ExportFormat::Json`].
pub fn from_json(text: &str) -> Result<GasketGraph> {
    let doc: GraphDocument =
        serde_json::from_str(text).map_err(|e| GasketError::Parse(e.to_string()))?;
    GasketGraph::try_from(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    #[test]
    fn edgelist_base() {
        let text = export_to_string(&generate(1).unwrap(), ExportFormat::EdgeList);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        for line in lines {
            let mut it = line.split_whitespace().map(|x| x.parse::<usize>().unwrap());
            let (u, v) = (it.next().unwrap(), it.next().unwrap());
            assert!(u < v);
        }
    }

    #[test]
    fn json_carries_counts() {
        let text = export_to_string(&generate(2).unwrap(), ExportFormat::Json);
        assert!(text.contains("\"vertex_count\":6"));
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["middles"].as_array().unwrap().len(), 3);
        assert_eq!(value["corners"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn json_round_trip() {
        for n in 1..=6 {
            let g = generate(n).unwrap();
            let back = from_json(&export_to_string(&g, ExportFormat::Json)).unwrap();
            assert_eq!(back, g, "level {n}");
        }
    }

    #[test]
    fn dot_has_positions() {
        let text = export_to_string(&generate(2).unwrap(), ExportFormat::Dot);
        assert!(text.starts_with("graph S2 {"));
        assert!(text.contains("0 [pos=\"0,2!\"];"));
        assert_eq!(text.matches(" -- ").count(), 9);
    }

    #[test]
    fn json_rejects_bad_documents() {
        assert!(from_json("{}").is_err());
        assert!(from_json("not json").is_err());
        let g = generate(2).unwrap();
        let mut doc = GraphDocument::from(&g);
        doc.edges.push([0, 99]);
        doc.edge_count += 1;
        let text = serde_json::to_string(&doc).unwrap();
        assert!(matches!(
            from_json(&text),
            Err(GasketError::VertexOutOfRange { .. })
        ));
        let mut doc = GraphDocument::from(&g);
        doc.corners.swap(0, 1);
        assert!(from_json(&serde_json::to_string(&doc).unwrap()).is_err());
    }

    #[test]
    fn unwritable_sink_reports_io_error() {
        struct Broken;
        impl Write for Broken {
            fn write(&mut self, _: &[u8]) -> std::io::Result<usize> {
                Err(std::io::Error::other("closed"))
            }
            fn flush(&mut self) -> std::io::Result<()> {
                Ok(())
            }
        }
        let g = generate(1).unwrap();
        for format in [
            ExportFormat::Dot,
            ExportFormat::Json,
            ExportFormat::EdgeList,
        ] {
            assert!(matches!(
                export(&g, format, &mut Broken),
                Err(GasketError::Io(_))
            ));
        }
    }
}
