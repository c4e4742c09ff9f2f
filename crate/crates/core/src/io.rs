//! Text formats.
//!
//! * DIMACS `.col`: `c` comment lines, one `p edge n m` header, then `e u v`
//!   lines with 1-based vertices.
//! * Coloring files: one `v c` line per vertex, 1-based vertex, 0-based color.
//! * List files: one `v: c1 c2 .. ck` line per vertex.
//!
//! Blank lines and lines starting with `c` or `#` are skipped by every reader.

use std::fmt::Write as _;

use crate::coloring::{Coloring, ListAssignment};
use crate::error::{ColoringError, GraphError};
use crate::graph::Graph;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c') && !l.starts_with('#'))
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize, GraphError> {
    let tok = tok.ok_or_else(|| GraphError::Parse { line, msg: format!("missing {what}") })?;
    tok.parse().map_err(|_| GraphError::Parse { line, msg: format!("bad {what} `{tok}`") })
}

pub fn graph_from_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut n = None;
    let mut edges = Vec::new();
    for (line, l) in content_lines(text) {
        let mut toks = l.split_whitespace();
        match toks.next() {
            Some("p") => {
                if n.is_some() {
                    return Err(GraphError::Parse { line, msg: "second header".into() });
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(GraphError::Parse {
                            line,
                            msg: format!("expected `p edge`, found {other:?}"),
                        })
                    }
                }
                n = Some(parse_num(toks.next(), line, "vertex count")?);
                parse_num(toks.next(), line, "edge count")?;
            }
            Some("e") => {
                let n = n.ok_or_else(|| GraphError::Parse { line, msg: "edge before header".into() })?;
                let u = parse_num(toks.next(), line, "endpoint")?;
                let v = parse_num(toks.next(), line, "endpoint")?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(GraphError::Parse {
                            line,
                            msg: format!("vertex {x} out of range 1..={n}"),
                        });
                    }
                }
                if u == v {
                    return Err(GraphError::Parse { line, msg: format!("loop at vertex {u}") });
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(GraphError::Parse { line, msg: format!("unrecognised line `{l}`") }),
        }
    }
    let n = n.ok_or(GraphError::Parse { line: 0, msg: "missing `p edge` header".into() })?;
    Graph::from_edges(n, edges)
}

pub fn graph_to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Reads a coloring of `n` vertices. Every vertex must appear exactly once.
/// The palette size is one more than the largest color present.
pub fn coloring_from_text(text: &str, n: usize) -> Result<Coloring, ColoringError> {
    let mut colors = vec![usize::MAX; n];
    for (line, l) in content_lines(text) {
        let err = |msg: String| ColoringError::Parse { line, msg };
        let mut toks = l.split_whitespace();
        let (Some(v), Some(c), None) = (toks.next(), toks.next(), toks.next()) else {
            return Err(err(format!("expected `vertex color`, found `{l}`")));
        };
        let v: usize = v.parse().map_err(|_| err(format!("bad vertex `{v}`")))?;
        let c: usize = c.parse().map_err(|_| err(format!("bad color `{c}`")))?;
        if v == 0 || v > n {
            return Err(err(format!("vertex {v} out of range 1..={n}")));
        }
        if colors[v - 1] != usize::MAX {
            return Err(err(format!("vertex {v} colored twice")));
        }
        colors[v - 1] = c;
    }
    if let Some(v) = colors.iter().position(|&c| c == usize::MAX) {
        return Err(ColoringError::Parse { line: 0, msg: format!("vertex {} missing", v + 1) });
    }
    Ok(Coloring::from_colors(colors))
}

pub fn coloring_to_text(f: &Coloring) -> String {
    let mut out = String::new();
    for (v, c) in f.colors().iter().enumerate() {
        writeln!(out, "{} {c}", v + 1).unwrap();
    }
    out
}

pub fn lists_from_text(text: &str, n: usize) -> Result<ListAssignment, ColoringError> {
    let mut lists: Vec<Option<Vec<usize>>> = vec![None; n];
    for (line, l) in content_lines(text) {
        let err = |msg: String| ColoringError::Parse { line, msg };
        let (head, rest) = l.split_once(':').ok_or_else(|| err("expected `v: colors`".into()))?;
        let v: usize = head.trim().parse().map_err(|_| err(format!("bad vertex `{head}`")))?;
        if v == 0 || v > n {
            return Err(err(format!("vertex {v} out of range 1..={n}")));
        }
        let list = rest
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| err(format!("bad color `{t}`"))))
            .collect::<Result<Vec<usize>, _>>()?;
        if lists[v - 1].replace(list).is_some() {
            return Err(err(format!("vertex {v} listed twice")));
        }
    }
    let lists = lists
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or(ColoringError::Parse { line: 0, msg: format!("vertex {} missing", v + 1) }))
        .collect::<Result<Vec<_>, _>>()?;
    let k = lists.first().map_or(0, Vec::len);
    ListAssignment::new(k, lists)
}

pub fn lists_to_text(l: &ListAssignment) -> String {
    let mut out = String::new();
    for (v, list) in l.lists().iter().enumerate() {
        write!(out, "{}:", v + 1).unwrap();
        for c in list {
            write!(out, " {c}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Shift trace: one `v from to` line per move, 1-based vertex.
pub fn trace_to_text(log: &crate::shift::ShiftLog) -> String {
    let mut out = String::new();
    for s in log.entries() {
        writeln!(out, "{} {} {}", s.vertex + 1, fmt_color(s.from), fmt_color(s.to)).unwrap();
    }
    out
}

fn fmt_color(c: usize) -> String {
    if c == crate::shift::DETACHED {
        "-".into()
    } else {
        c.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = graph_from_dimacs("p edge 2 1\ne 1 2\n").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn edgeless() {
        let g = graph_from_dimacs("p edge 3 0").unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 0));
    }

    #[test]
    fn duplicate_edges_deduplicated() {
        let g = graph_from_dimacs("p edge 2 2\ne 1 2\ne 2 1\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn errors_name_the_line() {
        let e = graph_from_dimacs("c hi\np edge 2 1\ne 1 3\n").unwrap_err();
        assert!(matches!(e, GraphError::Parse { line: 3, .. }), "{e:?}");
        let e = graph_from_dimacs("p edge 2 1\ne 2 2\n").unwrap_err();
        assert!(matches!(e, GraphError::Parse { line: 2, .. }));
        let e = graph_from_dimacs("p edgy 2 1\n").unwrap_err();
        assert!(matches!(e, GraphError::Parse { line: 1, .. }));
        assert!(graph_from_dimacs("e 1 2\n").is_err());
    }

    #[test]
    fn printing() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(graph_to_dimacs(&k2), "p edge 2 1\ne 1 2\n");
        assert_eq!(graph_to_dimacs(&Graph::empty(1)), "p edge 1 0\n");
    }

    #[test]
    fn random_tree_round_trip() {
        let g = crate::generators::random_tree(8, 1);
        assert_eq!(graph_from_dimacs(&graph_to_dimacs(&g)).unwrap(), g);
    }

    #[test]
    fn coloring_round_trip() {
        let f = Coloring::from_colors(vec![2, 0, 1, 0]);
        let back = coloring_from_text(&coloring_to_text(&f), 4).unwrap();
        assert_eq!(back, f);
        assert!(coloring_from_text("1 0\n1 1\n", 2).is_err());
        assert!(coloring_from_text("1 0\n", 2).is_err());
    }

    #[test]
    fn lists_round_trip() {
        let l = ListAssignment::new(2, vec![vec![1, 3], vec![0, 3]]).unwrap();
        let text = lists_to_text(&l);
        assert_eq!(text, "1: 1 3\n2: 0 3\n");
        assert_eq!(lists_from_text(&text, 2).unwrap(), l);
    }
}
