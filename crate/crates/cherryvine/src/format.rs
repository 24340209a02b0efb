//! Line-oriented text formats for structures and copula assignments.
//!
//! ```text
//! kind cherry-tree        # or junction-tree, vine
//! order 3                 # cherry-tree only
//! vertices 5
//! cluster a: 1 2 3
//! cluster b: 2 3 4
//! link a b
//! ```
//!
//! Vine files list `level <l>` blocks after the header. Level 1 holds
//! `edge <id> <id>` lines, higher levels hold `cluster` and `link` lines whose
//! names are local to the level.

use std::collections::BTreeMap;
use std::fmt::{self, Write};

use cherryvine_core::density::{CopulaAssignment, Family, PairCopula};
use cherryvine_core::{
    BaseTree, CherryTree, ClusterGraph, EdgeLabel, JunctionTree, TruncatedRVine, Vertex, VertexSet,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed text: unknown keyword, bad number, misplaced line.
    Syntax,
    /// Well-formed text describing an invalid structure.
    Semantic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ErrorKind,
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

fn syntax(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        kind: ErrorKind::Syntax,
        line,
        col,
        message: message.into(),
    }
}

fn semantic(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        kind: ErrorKind::Semantic,
        line,
        col,
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    JunctionTree(JunctionTree),
    CherryTree(CherryTree),
    Vine(TruncatedRVine),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::JunctionTree(_) => "junction-tree",
            Structure::CherryTree(_) => "cherry-tree",
            Structure::Vine(_) => "vine",
        }
    }
}

/// A whitespace token with its 1-based column.
#[derive(Debug, Clone, Copy)]
struct Tok<'a> {
    text: &'a str,
    col: usize,
}

fn tokens(line: &str) -> Vec<Tok<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Tok { text: &line[s..i], col: s + 1 });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Tok { text: &line[s..], col: s + 1 });
    }
    out
}

/// Lines with comments removed, paired with their 1-based numbers; blank
/// lines are dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("");
        (!l.trim().is_empty()).then_some((i + 1, l))
    })
}

fn parse_uint(line: usize, tok: Tok<'_>, what: &str) -> Result<usize, ParseError> {
    tok.text
        .parse::<usize>()
        .map_err(|_| syntax(line, tok.col, format!("expected {what}, found `{}`", tok.text)))
}

fn parse_vertex(line: usize, tok: Tok<'_>, d: usize) -> Result<Vertex, ParseError> {
    let v = parse_uint(line, tok, "a vertex id")?;
    if v == 0 || v > d {
        return Err(semantic(line, tok.col, format!("vertex {v} is outside 1..{d}")));
    }
    Ok(v as Vertex)
}

fn shift(t: Tok<'_>, by: usize) -> Tok<'_> {
    Tok {
        text: t.text,
        col: t.col + by,
    }
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

/// Clusters and links of one tree, in file order.
#[derive(Default)]
struct Block {
    start: usize,
    names: BTreeMap<String, usize>,
    clusters: Vec<VertexSet>,
    links: Vec<(usize, usize)>,
}

impl Block {
    fn new(start: usize) -> Self {
        Block {
            start,
            ..Block::default()
        }
    }

    fn cluster(&mut self, n: usize, raw: &str, toks: &[Tok<'_>], d: usize) -> Result<(), ParseError> {
        // everything after the keyword: `<name>: <id> ...`
        let kw = toks[0];
        let rest_col = toks.get(1).map_or(kw.col + kw.text.len() + 1, |t| t.col);
        let rest = &raw[rest_col - 1..];
        let Some(colon) = rest.find(':') else {
            return Err(syntax(n, rest_col, "expected `cluster <name>: <ids>`"));
        };
        let name = rest[..colon].trim();
        if !valid_name(name) {
            return Err(syntax(n, rest_col, format!("invalid cluster name `{name}`")));
        }
        let mut ids = Vec::new();
        let ids_col = rest_col + colon + 1;
        for t in tokens(&rest[colon + 1..]) {
            let t = Tok {
                text: t.text,
                col: t.col + ids_col - 1,
            };
            let v = parse_vertex(n, t, d)?;
            if ids.contains(&v) {
                return Err(semantic(n, t.col, format!("vertex {v} repeated in cluster `{name}`")));
            }
            ids.push(v);
        }
        if ids.is_empty() {
            return Err(semantic(n, ids_col, format!("cluster `{name}` is empty")));
        }
        if self.names.contains_key(name) {
            return Err(semantic(n, rest_col, format!("duplicate cluster name `{name}`")));
        }
        self.names.insert(name.to_string(), self.clusters.len());
        self.clusters.push(ids.into_iter().collect());
        Ok(())
    }

    fn link(&mut self, n: usize, toks: &[Tok<'_>]) -> Result<(), ParseError> {
        let [_, a, b] = toks else {
            return Err(syntax(n, toks[0].col, "expected `link <name> <name>`"));
        };
        let find = |t: &Tok<'_>| {
            self.names
                .get(t.text)
                .copied()
                .ok_or_else(|| semantic(n, t.col, format!("unknown cluster `{}`", t.text)))
        };
        let (x, y) = (find(a)?, find(b)?);
        if x == y {
            return Err(semantic(n, b.col, "a cluster cannot be linked to itself"));
        }
        self.links.push((x, y));
        Ok(())
    }

    fn graph(&self, d: usize) -> ClusterGraph {
        ClusterGraph::new(VertexSet::range(d), self.clusters.clone(), self.links.clone())
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Junction,
    Cherry,
    Vine,
}

/// Parses a structure file, checking every structural invariant.
pub fn parse(text: &str) -> Result<Structure, ParseError> {
    let mut kind: Option<(Kind, usize)> = None;
    let mut order: Option<usize> = None;
    let mut d: Option<usize> = None;
    let mut block: Option<Block> = None;
    // vine state
    let mut level: usize = 0;
    let mut base_edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut levels: Vec<CherryTree> = Vec::new();
    let mut last_line = 0;

    for (n, raw) in content_lines(text) {
        last_line = n;
        let toks = tokens(raw);
        let kw = toks[0];
        let arg = |i: usize| toks.get(i).copied();
        let expect_one = |what: &str| -> Result<Tok<'_>, ParseError> {
            match toks.as_slice() {
                [_, t] => Ok(*t),
                _ => Err(syntax(n, kw.col, format!("expected `{} <{what}>`", kw.text))),
            }
        };
        if kind.is_none() && kw.text != "kind" {
            return Err(syntax(n, kw.col, "the first line must be `kind <junction-tree|cherry-tree|vine>`"));
        }
        match kw.text {
            "kind" => {
                if kind.is_some() {
                    return Err(syntax(n, kw.col, "duplicate `kind` line"));
                }
                let t = expect_one("kind")?;
                let k = match t.text {
                    "junction-tree" => Kind::Junction,
                    "cherry-tree" => Kind::Cherry,
                    "vine" => Kind::Vine,
                    other => return Err(syntax(n, t.col, format!("unknown kind `{other}`"))),
                };
                kind = Some((k, n));
            }
            "order" => {
                if kind.map(|k| k.0) != Some(Kind::Cherry) {
                    return Err(syntax(n, kw.col, "`order` applies to cherry-tree files only"));
                }
                if order.is_some() || d.is_some() {
                    return Err(syntax(n, kw.col, "`order` must appear once, before `vertices`"));
                }
                let t = expect_one("k")?;
                let k = parse_uint(n, t, "an order")?;
                if k == 0 {
                    return Err(semantic(n, t.col, "order must be at least 1"));
                }
                order = Some(k);
            }
            "vertices" => {
                if d.is_some() {
                    return Err(syntax(n, kw.col, "duplicate `vertices` line"));
                }
                if kind.map(|k| k.0) == Some(Kind::Cherry) && order.is_none() {
                    return Err(syntax(n, kw.col, "cherry-tree files need `order` before `vertices`"));
                }
                let t = expect_one("d")?;
                let v = parse_uint(n, t, "a vertex count")?;
                if v == 0 {
                    return Err(semantic(n, t.col, "a structure needs at least one vertex"));
                }
                d = Some(v);
                if kind.map(|k| k.0) != Some(Kind::Vine) {
                    block = Some(Block::new(n));
                }
            }
            "level" => {
                if kind.map(|k| k.0) != Some(Kind::Vine) {
                    return Err(syntax(n, kw.col, "`level` applies to vine files only"));
                }
                let Some(dim) = d else {
                    return Err(syntax(n, kw.col, "`vertices` must come before the first level"));
                };
                let t = expect_one("l")?;
                let l = parse_uint(n, t, "a level number")?;
                if l != level + 1 {
                    return Err(semantic(n, t.col, format!("expected level {}, found {l}", level + 1)));
                }
                finish_level(level, &mut block, &mut base_edges, &mut levels, dim)?;
                level = l;
                if l >= 2 {
                    block = Some(Block::new(n));
                }
            }
            "edge" => {
                if level != 1 {
                    return Err(syntax(n, kw.col, "`edge` lines belong to level 1 of a vine"));
                }
                let dim = d.expect("levels follow `vertices`");
                let (Some(a), Some(b), None) = (arg(1), arg(2), arg(3)) else {
                    return Err(syntax(n, kw.col, "expected `edge <id> <id>`"));
                };
                base_edges.push((parse_vertex(n, a, dim)?, parse_vertex(n, b, dim)?));
            }
            "cluster" | "link" => {
                let Some(b) = block.as_mut() else {
                    let hint = if kind.map(|k| k.0) == Some(Kind::Vine) {
                        "clusters and links belong to a `level <l>` block with l >= 2"
                    } else {
                        "`vertices` must come before clusters and links"
                    };
                    return Err(syntax(n, kw.col, hint));
                };
                if kw.text == "cluster" {
                    b.cluster(n, raw, &toks, d.expect("blocks follow `vertices`"))?;
                } else {
                    b.link(n, &toks)?;
                }
            }
            other => return Err(syntax(n, kw.col, format!("unknown keyword `{other}`"))),
        }
    }

    let Some((kind, kind_line)) = kind else {
        return Err(syntax(last_line.max(1), 1, "empty file: expected a `kind` line"));
    };
    let Some(d) = d else {
        return Err(syntax(last_line, 1, "missing `vertices` line"));
    };
    let core_err = |line: usize, e: cherryvine_core::Error| semantic(line, 1, e.to_string());
    match kind {
        Kind::Junction | Kind::Cherry => {
            let b = block.expect("created by `vertices`");
            if b.clusters.is_empty() {
                return Err(semantic(b.start, 1, "no clusters"));
            }
            let jt = JunctionTree::new(b.graph(d)).map_err(|e| core_err(kind_line, e))?;
            if kind == Kind::Junction {
                Ok(Structure::JunctionTree(jt))
            } else {
                let k = order.expect("checked before `vertices`");
                cherryvine_core::validate_cherry(jt, k)
                    .map(Structure::CherryTree)
                    .map_err(|e| core_err(kind_line, e))
            }
        }
        Kind::Vine => {
            if level == 0 {
                return Err(semantic(last_line, 1, "a vine needs at least `level 1`"));
            }
            finish_level(level, &mut block, &mut base_edges, &mut levels, d)?;
            let base = BaseTree::new(VertexSet::range(d), base_edges).map_err(|e| core_err(kind_line, e))?;
            TruncatedRVine::new(base, levels)
                .map(Structure::Vine)
                .map_err(|e| core_err(kind_line, e))
        }
    }
}

fn finish_level(
    level: usize,
    block: &mut Option<Block>,
    _base: &mut [(Vertex, Vertex)],
    levels: &mut Vec<CherryTree>,
    d: usize,
) -> Result<(), ParseError> {
    if level < 2 {
        return Ok(());
    }
    let b = block.take().expect("levels >= 2 open a block");
    if b.clusters.is_empty() {
        return Err(semantic(b.start, 1, format!("level {level} has no clusters")));
    }
    let tree = CherryTree::from_graph(b.graph(d), level)
        .map_err(|e| semantic(b.start, 1, format!("level {level}: {e}")))?;
    levels.push(tree);
    Ok(())
}

/// Clusters sorted lexicographically, named `c1..cN`, with links as sorted
/// index pairs into that order.
fn canonical_tree(jt: &JunctionTree) -> (Vec<VertexSet>, Vec<(usize, usize)>) {
    let clusters = jt.sorted_clusters();
    let pos = |c: &VertexSet| clusters.binary_search(c).expect("same cluster set");
    let mut links: Vec<(usize, usize)> = jt
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (pos(&jt.clusters()[a]), pos(&jt.clusters()[b]));
            (x.min(y), x.max(y))
        })
        .collect();
    links.sort_unstable();
    (clusters, links)
}

fn write_tree(out: &mut String, jt: &JunctionTree) {
    let (clusters, links) = canonical_tree(jt);
    for (i, c) in clusters.iter().enumerate() {
        let ids: Vec<String> = c.iter().map(|v| v.to_string()).collect();
        writeln!(out, "cluster c{}: {}", i + 1, ids.join(" ")).unwrap();
    }
    for (a, b) in links {
        writeln!(out, "link c{} c{}", a + 1, b + 1).unwrap();
    }
}

/// Canonical text: clusters sorted and renamed `c1..cN`, links and base edges
/// sorted. `parse(format(s))` reproduces `s` up to that reordering, and
/// formatting is idempotent.
pub fn format(s: &Structure) -> String {
    let mut out = String::new();
    writeln!(out, "kind {}", s.kind()).unwrap();
    match s {
        Structure::JunctionTree(jt) => {
            writeln!(out, "vertices {}", jt.vertices().len()).unwrap();
            write_tree(&mut out, jt);
        }
        Structure::CherryTree(ct) => {
            writeln!(out, "order {}", ct.order()).unwrap();
            writeln!(out, "vertices {}", ct.vertices().len()).unwrap();
            write_tree(&mut out, ct);
        }
        Structure::Vine(v) => {
            writeln!(out, "vertices {}", v.dimension()).unwrap();
            out.push_str("level 1\n");
            let mut edges = v.base().edges().to_vec();
            edges.sort_unstable();
            for (a, b) in edges {
                writeln!(out, "edge {a} {b}").unwrap();
            }
            for level in v.levels() {
                writeln!(out, "level {}", level.order()).unwrap();
                write_tree(&mut out, level);
            }
        }
    }
    out
}

/// Parses an assignment file: one `pair <a> <b> | <S> : <family> [param]` line
/// per label, `S` a comma-separated list (possibly empty).
pub fn parse_assignment(text: &str) -> Result<CopulaAssignment, ParseError> {
    let mut out = CopulaAssignment::new();
    let mut seen: BTreeMap<EdgeLabel, usize> = BTreeMap::new();
    for (n, raw) in content_lines(text) {
        let toks = tokens(raw);
        let kw = toks[0];
        if kw.text != "pair" {
            return Err(syntax(n, kw.col, format!("expected `pair`, found `{}`", kw.text)));
        }
        let body_start = kw.col + kw.text.len() - 1;
        let body = &raw[body_start..];
        let (Some(bar), Some(colon)) = (body.find('|'), body.find(':')) else {
            return Err(syntax(n, kw.col, "expected `pair <a> <b> | <S> : <family> [param]`"));
        };
        if colon < bar {
            return Err(syntax(n, body_start + colon + 1, "`:` must follow the `|` conditioning list"));
        }
        let pair: Vec<Tok<'_>> = tokens(&body[..bar]).into_iter().map(|t| shift(t, body_start)).collect();
        let [a, b] = pair.as_slice() else {
            return Err(syntax(n, body_start + 1, "expected two conditioned vertices before `|`"));
        };
        let id = |t: &Tok<'_>| -> Result<Vertex, ParseError> {
            let v = parse_uint(n, *t, "a vertex id")?;
            if v == 0 {
                return Err(semantic(n, t.col, "vertex ids start at 1"));
            }
            Ok(v as Vertex)
        };
        let (a, b) = (id(a)?, id(b)?);
        let cond_text = &body[bar + 1..colon];
        let mut cond = Vec::new();
        let mut off = bar + 1;
        for part in cond_text.split(',') {
            let trimmed = part.trim();
            let col = body_start + off + part.len() - part.trim_start().len() + 1;
            off += part.len() + 1;
            if trimmed.is_empty() {
                if cond_text.trim().is_empty() {
                    break;
                }
                return Err(syntax(n, col, "empty entry in the conditioning list"));
            }
            cond.push(id(&Tok { text: trimmed, col })?);
        }
        let fam: Vec<Tok<'_>> = tokens(&body[colon + 1..])
            .into_iter()
            .map(|t| shift(t, body_start + colon + 1))
            .collect();
        let (family, param) = match fam.as_slice() {
            [f] => (*f, None),
            [f, p] => (*f, Some(*p)),
            _ => return Err(syntax(n, body_start + colon + 2, "expected `<family> [param]` after `:`")),
        };
        let fam_kind: Family = family
            .text
            .parse()
            .map_err(|_| syntax(n, family.col, format!("unknown family `{}`", family.text)))?;
        let value = match param {
            Some(p) => Some(
                p.text
                    .parse::<f64>()
                    .map_err(|_| syntax(n, p.col, format!("expected a number, found `{}`", p.text)))?,
            ),
            None => None,
        };
        let copula = PairCopula::new(fam_kind, value).map_err(|e| {
            let msg = match (fam_kind.has_parameter(), value) {
                (true, None) => format!("family `{fam_kind}` needs a parameter"),
                (false, Some(_)) => format!("family `{fam_kind}` takes no parameter"),
                _ => e.to_string(),
            };
            semantic(n, param.unwrap_or(family).col, msg)
        })?;
        let label = EdgeLabel::new(a, b, cond.into_iter().collect())
            .ok_or_else(|| semantic(n, body_start + 1, "conditioned vertices must differ and lie outside S"))?;
        if let Some(prev) = seen.insert(label.clone(), n) {
            return Err(semantic(n, kw.col, format!("{label} already assigned on line {prev}")));
        }
        out.insert(label, copula);
    }
    Ok(out)
}

/// Assignment text with one line per entry, in label order.
pub fn format_assignment(a: &CopulaAssignment) -> String {
    let mut out = String::new();
    for (l, c) in a.iter() {
        let (x, y) = l.conditioned();
        let s: Vec<String> = l.conditioning().iter().map(|v| v.to_string()).collect();
        writeln!(out, "pair {x} {y} | {} : {c}", s.join(",")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG3: &str = "kind cherry-tree\norder 3\nvertices 6\n\
        cluster a: 1 2 3\ncluster b: 2 3 4\ncluster c: 2 3 6\ncluster d: 3 4 5\n\
        link a b\nlink b c\nlink b d\n";

    #[test]
    fn parses_and_formats_canonically() {
        let s = parse(FIG3).unwrap();
        let Structure::CherryTree(ct) = &s else { panic!("expected a cherry-tree") };
        assert_eq!(ct.order(), 3);
        let text = format(&s);
        assert_eq!(
            text,
            "kind cherry-tree\norder 3\nvertices 6\ncluster c1: 1 2 3\ncluster c2: 2 3 4\n\
             cluster c3: 2 3 6\ncluster c4: 3 4 5\nlink c1 c2\nlink c2 c3\nlink c2 c4\n"
        );
        assert_eq!(format(&parse(&text).unwrap()), text);
    }

    #[test]
    fn comments_and_spacing() {
        let text = "# header\nkind junction-tree   # trailing\n\nvertices 3\ncluster x :3 1\ncluster y:  2 3\nlink x y\n";
        let Structure::JunctionTree(jt) = parse(text).unwrap() else { panic!() };
        assert_eq!(jt.clusters()[0], VertexSet::from([1, 3]));
    }

    fn err(text: &str) -> ParseError {
        parse(text).unwrap_err()
    }

    #[test]
    fn diagnostics() {
        let e = err("kind cherry-tree\norder 3\nvertices 4\ncluster a: 1 2 3\ncluster a: 2 3 4\n");
        assert_eq!((e.kind, e.line, e.col), (ErrorKind::Semantic, 5, 9));
        assert!(e.message.contains("duplicate cluster name"));

        let e = err("kind cherry-tree\norder 3\nvertices 4\ncluster a: 1 2 3\nlink a b\n");
        assert_eq!((e.kind, e.line, e.col), (ErrorKind::Semantic, 5, 8));

        let e = err("kind tree\n");
        assert_eq!((e.kind, e.line, e.col), (ErrorKind::Syntax, 1, 6));

        let e = err("vertices 3\n");
        assert_eq!(e.kind, ErrorKind::Syntax);

        let e = err("kind junction-tree\nvertices 3\ncluster a: 1 x\n");
        assert_eq!((e.kind, e.line, e.col), (ErrorKind::Syntax, 3, 14));

        let e = err("kind junction-tree\nvertices 3\ncluster a: 1 4\n");
        assert_eq!((e.kind, e.col), (ErrorKind::Semantic, 14));

        // {1,2,3} and {3,4,5} only share one vertex
        let e = err("kind cherry-tree\norder 3\nvertices 5\ncluster a: 1 2 3\ncluster b: 3 4 5\nlink a b\n");
        assert_eq!(e.kind, ErrorKind::Semantic);
        assert!(e.message.contains("separator"));

        let e = err("kind vine\nvertices 3\nlevel 2\n");
        assert_eq!(e.kind, ErrorKind::Semantic);
        let e = err("kind vine\nvertices 3\nlevel 1\ncluster a: 1 2\n");
        assert_eq!(e.kind, ErrorKind::Syntax);
        let e = err("kind junction-tree\nvertices 2\nbogus\n");
        assert_eq!((e.kind, e.line), (ErrorKind::Syntax, 3));
    }

    #[test]
    fn vine_files() {
        let text = "kind vine\nvertices 3\nlevel 1\nedge 2 1\nedge 2 3\nlevel 2\ncluster p: 1 2\ncluster q: 2 3\nlink p q\n";
        let s = parse(text).unwrap();
        let Structure::Vine(v) = &s else { panic!() };
        assert_eq!(v.truncation_level(), 2);
        let canon = format(&s);
        assert!(canon.contains("edge 1 2\nedge 2 3\nlevel 2\ncluster c1: 1 2\n"));
        assert_eq!(format(&parse(&canon).unwrap()), canon);
        let bad = "kind vine\nvertices 3\nlevel 1\nedge 1 2\nedge 2 3\nlevel 2\ncluster p: 1 2\ncluster q: 1 3\nlink p q\n";
        assert_eq!(err(bad).kind, ErrorKind::Semantic);
    }

    #[test]
    fn assignments() {
        let a = parse_assignment("pair 1 2 | : gaussian 0.5\npair 2 1|3: clayton 2\n# c\npair 1 3 | 2 , 4 : independence\n")
            .unwrap();
        assert_eq!(a.len(), 3);
        let text = format_assignment(&a);
        assert_eq!(parse_assignment(&text).unwrap(), a);
        assert!(text.contains("pair 1 2 | 3 : clayton 2\n"));

        let e = parse_assignment("pair 1 2 | : gaussian 1.5\n").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Semantic);
        let e = parse_assignment("pair 1 2 | : frank 1\n").unwrap_err();
        assert_eq!((e.kind, e.col), (ErrorKind::Syntax, 14));
        let e = parse_assignment("pair 1 2 | : gaussian\n").unwrap_err();
        assert!(e.message.contains("needs a parameter"));
        let e = parse_assignment("pair 1 2 | 1 : independence\n").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Semantic);
        let e = parse_assignment("pair 1 2 | : independence\npair 2 1 | : independence\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_assignment("pair 1 2 : gaussian 0.1\n").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Syntax);
    }
}
