//! Graph and vertex-set parsing.
//!
//! Graph files start with a `n m` header followed by `m` edge lines `u v`.
//! Anything after `#` on a line is ignored. Set specs are comma-separated
//! ids (`0,2,5`), `@path` with one id per line, or `-`/empty for `{}`.

use std::fs;
use std::path::Path;

use recon_core::{Graph, GraphBuilder, VertexSet};

use crate::CliError;

/// A parsed graph together with the non-fatal diagnostics it produced.
#[derive(Debug)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

fn input(msg: String) -> CliError {
    CliError::Input(msg)
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(head, _)| head).trim()
}

fn parse_id(tok: &str, at: &str) -> Result<usize, CliError> {
    tok.parse().map_err(|_| input(format!("{at}: expected a vertex id, found '{tok}'")))
}

pub fn read_graph(path: &Path) -> Result<ParsedGraph, CliError> {
    let text = fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    parse_graph(&text, &path.display().to_string())
}

pub fn parse_graph(text: &str, name: &str) -> Result<ParsedGraph, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| input(format!("{name}: missing `n m` header")))?;
    let at = format!("{name}:{hl}");
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = fields[..] else {
        return Err(input(format!("{at}: header must be `n m`, found '{header}'")));
    };
    let (n, m) = (parse_id(n, &at)?, parse_id(m, &at)?);

    let mut b = GraphBuilder::new(n);
    let mut warnings = Vec::new();
    let mut seen = 0;
    for (ln, line) in lines {
        let at = format!("{name}:{ln}");
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(input(format!("{at}: edge line must be `u v`, found '{line}'")));
        };
        let (u, v) = (parse_id(u, &at)?, parse_id(v, &at)?);
        if u == v {
            return Err(input(format!("{at}: self-loop on vertex {u}")));
        }
        if let Some(x) = [u, v].into_iter().find(|&x| x >= n) {
            return Err(input(format!("{at}: vertex {x} out of range for n = {n}")));
        }
        seen += 1;
        if !b.add_edge(u, v).map_err(|e| input(format!("{at}: {e}")))? {
            warnings.push(format!("{at}: duplicate edge {} {} ignored", u.min(v), u.max(v)));
        }
    }
    if seen != m {
        return Err(input(format!("{name}: header announces {m} edges but {seen} edge lines follow")));
    }
    Ok(ParsedGraph { graph: b.build(), warnings })
}

/// Parses a set spec against `g`. `label` names the set in diagnostics.
pub fn parse_set(spec: &str, g: &Graph, label: &str) -> Result<VertexSet, CliError> {
    let spec = spec.trim();
    let tokens: Vec<(String, String)> = if let Some(path) = spec.strip_prefix('@') {
        let text = fs::read_to_string(path).map_err(|e| input(format!("set {label}: {path}: {e}")))?;
        text.lines()
            .enumerate()
            .map(|(i, l)| (format!("{path}:{}", i + 1), strip_comment(l).to_string()))
            .filter(|(_, t)| !t.is_empty())
            .collect()
    } else if spec.is_empty() || spec == "-" {
        Vec::new()
    } else {
        spec.split(',').enumerate().map(|(i, t)| (format!("token {}", i + 1), t.trim().to_string())).collect()
    };

    let n = g.vertex_count();
    let mut ids: Vec<usize> = Vec::with_capacity(tokens.len());
    for (at, tok) in &tokens {
        let at = format!("set {label}, {at}");
        let v = parse_id(tok, &at)?;
        if v >= n {
            return Err(input(format!("{at}: vertex {v} out of range for n = {n}")));
        }
        if ids.contains(&v) {
            return Err(input(format!("{at}: duplicate vertex {v}")));
        }
        if let Some(&u) = ids.iter().find(|&&u| g.has_edge(u, v)) {
            return Err(input(format!("{at}: vertex {v} is adjacent to {u}, set is not independent")));
        }
        ids.push(v);
    }
    Ok(VertexSet::from_vec(ids))
}

/// Graph file text for `g`, as accepted by [`parse_graph`].
pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out += &format!("{u} {v}\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const C4: &str = "4 4\n0 1\n1 2\n2 3\n0 3\n";

    fn err(r: Result<impl std::fmt::Debug, CliError>) -> String {
        match r.unwrap_err() {
            CliError::Input(m) => m,
            e => panic!("expected an input error, got {e:?}"),
        }
    }

    #[test]
    fn parses_c4() {
        let p = parse_graph(C4, "c4").unwrap();
        assert_eq!(p.graph, Graph::cycle(4));
        assert!(p.warnings.is_empty());
        assert_eq!(parse_graph(&format_graph(&p.graph), "x").unwrap().graph, p.graph);
    }

    #[test]
    fn comments_and_reversed_edges() {
        let p = parse_graph("# C4\n4 4  # header\n\n1 0\n2 1\n3 2 # last two\n3 0\n", "g").unwrap();
        assert_eq!(p.graph, Graph::cycle(4));
    }

    #[test]
    fn duplicates_warn_and_dedupe() {
        let p = parse_graph("3 3\n0 1\n1 0\n1 2\n", "g").unwrap();
        assert_eq!(p.graph.edge_count(), 2);
        assert_eq!(p.warnings, vec!["g:3: duplicate edge 0 1 ignored".to_string()]);
    }

    #[test]
    fn rejects_bad_graphs() {
        assert_eq!(err(parse_graph("4 1\n3 3\n", "g")), "g:2: self-loop on vertex 3");
        assert_eq!(err(parse_graph("4 1\n0 4\n", "g")), "g:2: vertex 4 out of range for n = 4");
        assert!(err(parse_graph("4 2\n0 1\n", "g")).contains("announces 2 edges but 1"));
        assert!(err(parse_graph("4 1\n0 x\n", "g")).contains("found 'x'"));
        assert!(err(parse_graph("4\n", "g")).contains("header"));
        assert!(err(parse_graph("", "g")).contains("missing"));
        assert!(err(parse_graph("3 1\n0 1 2\n", "g")).starts_with("g:2:"));
    }

    #[test]
    fn set_specs() {
        let g = Graph::cycle(4);
        assert_eq!(parse_set("0,2", &g, "A").unwrap(), VertexSet::from([0, 2]));
        assert_eq!(parse_set(" 2 , 0 ", &g, "A").unwrap(), VertexSet::from([0, 2]));
        assert!(parse_set("", &g, "A").unwrap().is_empty());
        assert!(parse_set("-", &g, "A").unwrap().is_empty());
        assert_eq!(err(parse_set("0,0", &g, "A")), "set A, token 2: duplicate vertex 0");
        assert_eq!(err(parse_set("0,1", &g, "B")), "set B, token 2: vertex 1 is adjacent to 0, set is not independent");
        assert_eq!(err(parse_set("0,9", &g, "A")), "set A, token 2: vertex 9 out of range for n = 4");
        assert!(err(parse_set("0,,2", &g, "A")).contains("token 2"));
    }

    #[test]
    fn set_files_report_lines() {
        let dir = std::env::temp_dir().join(format!("recon-set-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("a.txt");
        fs::write(&path, "# tokens\n0\n\n1\n").unwrap();
        let spec = format!("@{}", path.display());
        let msg = err(parse_set(&spec, &Graph::cycle(4), "A"));
        assert!(msg.ends_with("a.txt:4: vertex 1 is adjacent to 0, set is not independent"), "{msg}");
        fs::write(&path, "0\n2\n").unwrap();
        assert_eq!(parse_set(&spec, &Graph::cycle(4), "A").unwrap(), VertexSet::from([0, 2]));
        fs::remove_dir_all(&dir).unwrap();
    }
}
