//! Text file formats for graphs, rooted trees, multiplication tables, and
//! permutation generating sets.
//!
//! Every format starts with a header token naming the object kind. Lines
//! whose first non-blank character is `#` are comments and blank lines are
//! skipped. Parse errors carry 1-based line numbers of the original file.
//!
//! ```text
//! graph            table           perm            rtree
//! n m              n               n g             n root
//! u v   (m lines)  row (n lines)   images (g rows) child parent (n-1 lines)
//! ```

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::{GenSet, Permutation};
use crate::table::TableGroup;
use crate::tree::RootedTree;

/// Any object the CLI can read from a file.
#[derive(Clone, Debug)]
pub enum ParsedInput {
    Graph(Graph),
    RootedTree(RootedTree),
    Table(TableGroup),
    Perm(GenSet),
}

impl ParsedInput {
    pub fn kind(&self) -> &'static str {
        match self {
            ParsedInput::Graph(_) => "graph",
            ParsedInput::RootedTree(_) => "rtree",
            ParsedInput::Table(_) => "table",
            ParsedInput::Perm(_) => "perm",
        }
    }
}

/// Content lines with their original 1-based line numbers.
struct Lines<'a> {
    items: Vec<(usize, &'a str)>,
    next: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        Lines { items, next: 0 }
    }

    fn next_line(&mut self) -> Result<(usize, &'a str)> {
        if self.next >= self.items.len() {
            let line = self.items.last().map(|(n, _)| *n).unwrap_or(0) + 1;
            return Err(Error::Parse {
                line,
                msg: "unexpected end of file".into(),
            });
        }
        let item = self.items[self.next];
        self.next += 1;
        Ok(item)
    }

    fn expect_done(&self) -> Result<()> {
        if self.next < self.items.len() {
            let (line, text) = self.items[self.next];
            return Err(Error::Parse {
                line,
                msg: format!("trailing content: {text}"),
            });
        }
        Ok(())
    }
}

fn parse_fields(line: usize, text: &str, expected: usize, what: &str) -> Result<Vec<usize>> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != expected {
        return Err(Error::Parse {
            line,
            msg: format!("expected {expected} {what}, found {}", fields.len()),
        });
    }
    fields
        .into_iter()
        .map(|f| {
            f.parse::<usize>().map_err(|_| Error::Parse {
                line,
                msg: format!("invalid integer: {f}"),
            })
        })
        .collect()
}

/// Parses any supported object, dispatching on the header token.
pub fn parse_str(text: &str) -> Result<ParsedInput> {
    let mut lines = Lines::new(text);
    let (line, header) = lines.next_line()?;
    match header {
        "graph" => parse_graph_body(&mut lines).map(ParsedInput::Graph),
        "rtree" => parse_rtree_body(&mut lines).map(ParsedInput::RootedTree),
        "table" => parse_table_body(&mut lines).map(ParsedInput::Table),
        "perm" => parse_perm_body(&mut lines).map(ParsedInput::Perm),
        other => Err(Error::Parse {
            line,
            msg: format!("unknown header: {other}"),
        }),
    }
}

/// Reads and parses a file.
pub fn parse_input(path: &Path) -> Result<ParsedInput> {
    let text = std::fs::read_to_string(path)?;
    parse_str(&text)
}

fn parse_graph_body(lines: &mut Lines<'_>) -> Result<Graph> {
    let (line, text) = lines.next_line()?;
    let header = parse_fields(line, text, 2, "values (n m)")?;
    let (n, m) = (header[0], header[1]);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, text) = lines.next_line()?;
        let pair = parse_fields(line, text, 2, "endpoints")?;
        if pair[0] >= n || pair[1] >= n || pair[0] == pair[1] {
            return Err(Error::Parse {
                line,
                msg: format!("invalid edge ({}, {}) for {n} vertices", pair[0], pair[1]),
            });
        }
        edges.push((pair[0], pair[1]));
    }
    lines.expect_done()?;
    Graph::new(n, &edges)
}

fn parse_rtree_body(lines: &mut Lines<'_>) -> Result<RootedTree> {
    let (line, text) = lines.next_line()?;
    let header = parse_fields(line, text, 2, "values (n root)")?;
    let (n, root) = (header[0], header[1]);
    if root >= n {
        return Err(Error::Parse {
            line,
            msg: format!("root {root} out of range for {n} vertices"),
        });
    }
    let mut parent = vec![usize::MAX; n];
    parent[root] = root;
    for _ in 0..n.saturating_sub(1) {
        let (line, text) = lines.next_line()?;
        let pair = parse_fields(line, text, 2, "values (child parent)")?;
        let (child, par) = (pair[0], pair[1]);
        if child >= n || par >= n {
            return Err(Error::Parse {
                line,
                msg: format!("vertex out of range in ({child}, {par})"),
            });
        }
        if child == root || parent[child] != usize::MAX {
            return Err(Error::Parse {
                line,
                msg: format!("vertex {child} assigned twice"),
            });
        }
        parent[child] = par;
    }
    lines.expect_done()?;
    RootedTree::from_parents(parent, root)
}

fn parse_table_body(lines: &mut Lines<'_>) -> Result<TableGroup> {
    let (line, text) = lines.next_line()?;
    let n = parse_fields(line, text, 1, "value (n)")?[0];
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, text) = lines.next_line()?;
        rows.push(parse_fields(line, text, n, "entries")?);
    }
    lines.expect_done()?;
    TableGroup::validate_table(&rows)
}

fn parse_perm_body(lines: &mut Lines<'_>) -> Result<GenSet> {
    let (line, text) = lines.next_line()?;
    let header = parse_fields(line, text, 2, "values (n g)")?;
    let (n, g) = (header[0], header[1]);
    let mut gens = Vec::with_capacity(g);
    for _ in 0..g {
        let (line, text) = lines.next_line()?;
        let images = parse_fields(line, text, n, "images")?;
        gens.push(Permutation::from_images(images).map_err(|e| Error::Parse {
            line,
            msg: e.to_string(),
        })?);
    }
    lines.expect_done()?;
    GenSet::new(n, gens)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("graph\n{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_rtree(t: &RootedTree) -> String {
    let mut out = format!("rtree\n{} {}\n", t.vertex_count(), t.root());
    for v in 0..t.vertex_count() {
        if v != t.root() {
            let _ = writeln!(out, "{v} {}", t.parent(v));
        }
    }
    out
}

pub fn write_table(t: &TableGroup) -> String {
    let mut out = format!("table\n{}\n", t.order());
    for i in 0..t.order() {
        let row: Vec<String> = t.row(i).iter().map(|e| e.to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

pub fn write_perm(gs: &GenSet) -> String {
    let mut out = format!("perm\n{} {}\n", gs.degree(), gs.gens().len());
    for g in gs.gens() {
        let images: Vec<String> = g.images().iter().map(|i| i.to_string()).collect();
        let _ = writeln!(out, "{}", images.join(" "));
    }
    out
}
