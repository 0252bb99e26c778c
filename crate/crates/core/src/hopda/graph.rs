//! Colored graphs, configuration graphs, ε-contraction and unfolding.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use super::pds::Npds;
use super::spec::HopdaSpec;
use crate::{Error, Result};

/// Directed graph with colored edges, at most one edge per color between an
/// ordered pair of vertices. Vertex 0 is the root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoredGraph {
    pub labels: Vec<String>,
    pub colors: Vec<String>,
    /// `(from, color, to)`.
    pub edges: BTreeSet<(usize, usize, usize)>,
}

impl ColoredGraph {
    pub fn new(colors: Vec<String>) -> Self {
        ColoredGraph {
            labels: Vec::new(),
            colors,
            edges: BTreeSet::new(),
        }
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> usize {
        self.labels.push(label.into());
        self.labels.len() - 1
    }

    pub fn add_edge(&mut self, from: usize, color: usize, to: usize) {
        self.edges.insert((from, color, to));
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn color(&self, name: &str) -> Option<usize> {
        self.colors.iter().position(|c| c == name)
    }

    pub fn out_edges(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.range((v, 0, 0)..(v + 1, 0, 0)).map(|&(_, c, t)| (c, t))
    }

    /// Edges as `(from label, color name, to label)`, sorted.
    pub fn labelled_edges(&self) -> Vec<(String, String, String)> {
        let mut v: Vec<_> = self
            .edges
            .iter()
            .map(|&(f, c, t)| (self.labels[f].clone(), self.colors[c].clone(), self.labels[t].clone()))
            .collect();
        v.sort();
        v
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "v{i} {l}");
        }
        for &(f, c, t) in &self.edges {
            let _ = writeln!(out, "v{f} -{}-> v{t}", self.colors[c]);
        }
        out
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph \"{name}\" {{\n");
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  v{i} [label=\"{}\"];", l.replace('"', "\\\""));
        }
        for &(f, c, t) in &self.edges {
            let _ = writeln!(out, "  v{f} -> v{t} [label=\"{}\"];", self.colors[c]);
        }
        out.push_str("}\n");
        out
    }
}

/// Configuration graph explored breadth-first from the initial configuration.
#[derive(Clone, Debug)]
pub struct ConfigGraph {
    pub graph: ColoredGraph,
    pub configs: Vec<(usize, Npds)>,
    /// Set when the budget stopped the exploration.
    pub partial: bool,
}

/// Color 0 is ε; color `i + 1` is input letter `i`.
pub const EPS: &str = "eps";

pub fn config_graph(h: &HopdaSpec, max_configs: usize) -> Result<ConfigGraph> {
    let mut colors = vec![EPS.to_string()];
    colors.extend(h.input.iter().cloned());
    let mut g = ColoredGraph::new(colors);
    let mut configs: Vec<(usize, Npds)> = Vec::new();
    let mut index: HashMap<(usize, Npds), usize> = HashMap::new();
    let start = (h.initial, h.initial_pds.clone());
    g.add_vertex(h.render_config(start.0, &start.1));
    index.insert(start.clone(), 0);
    configs.push(start);
    let mut partial = false;
    let mut next = 0;
    while next < configs.len() {
        let (s, p) = configs[next].clone();
        for (inp, t, q) in h.successors(s, &p)? {
            let key = (t, q);
            let id = match index.get(&key) {
                Some(&id) => id,
                None if configs.len() >= max_configs => {
                    partial = true;
                    continue;
                }
                None => {
                    let id = g.add_vertex(h.render_config(key.0, &key.1));
                    index.insert(key.clone(), id);
                    configs.push(key);
                    id
                }
            };
            g.add_edge(next, inp.map_or(0, |i| i + 1), id);
        }
        next += 1;
    }
    Ok(ConfigGraph {
        graph: g,
        configs,
        partial,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RunResult {
    Accepted,
    Rejected,
    BudgetExceeded,
}

/// Whether some run reads `word` and ends in an accepting state. Explores at
/// most `max_configs` distinct (configuration, position) pairs.
pub fn accepts(h: &HopdaSpec, word: &[&str], max_configs: usize) -> Result<RunResult> {
    let w: Vec<usize> = word
        .iter()
        .map(|a| {
            h.input
                .iter()
                .position(|b| b == a)
                .ok_or_else(|| Error::InvalidSymbol(a.to_string()))
        })
        .collect::<Result<_>>()?;
    let start = (h.initial, h.initial_pds.clone(), 0usize);
    let mut seen: HashSet<(usize, Npds, usize)> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut cut = false;
    while let Some((s, p, i)) = queue.pop_front() {
        if i == w.len() && h.accepting[s] {
            return Ok(RunResult::Accepted);
        }
        for (inp, t, q) in h.successors(s, &p)? {
            let j = match inp {
                None => i,
                Some(a) if i < w.len() && w[i] == a => i + 1,
                Some(_) => continue,
            };
            let key = (t, q, j);
            if seen.contains(&key) {
                continue;
            }
            if seen.len() >= max_configs {
                cut = true;
                continue;
            }
            seen.insert(key.clone());
            queue.push_back(key);
        }
    }
    Ok(if cut { RunResult::BudgetExceeded } else { RunResult::Rejected })
}

/// ε-contraction. Keeps the root and every vertex without an outgoing
/// `eps` edge; there is an `a`-edge from `u` to `v` when the original graph
/// has a path `eps* a eps*` from `u` to `v`. The `eps` color is dropped.
pub fn epsilon_contract(g: &ColoredGraph, eps: &str) -> Result<ColoredGraph> {
    let e = g
        .color(eps)
        .ok_or_else(|| Error::InvalidHopda(format!("no color `{eps}`")))?;
    let n = g.num_vertices();
    let normal: Vec<bool> = (0..n).map(|v| g.out_edges(v).all(|(c, _)| c != e)).collect();
    let closure = |v: usize| -> Vec<usize> {
        let mut seen = vec![v];
        let mut stack = vec![v];
        let mut mark = HashSet::from([v]);
        while let Some(u) = stack.pop() {
            for (c, t) in g.out_edges(u) {
                if c == e && mark.insert(t) {
                    seen.push(t);
                    stack.push(t);
                }
            }
        }
        seen
    };
    let colors: Vec<String> = g.colors.iter().filter(|c| c.as_str() != eps).cloned().collect();
    let recolor = |c: usize| if c < e { c } else { c - 1 };
    let mut out = ColoredGraph::new(colors);
    let mut new_id = vec![usize::MAX; n];
    for v in 0..n {
        if v == 0 || normal[v] {
            new_id[v] = out.add_vertex(g.labels[v].clone());
        }
    }
    for v in 0..n {
        if new_id[v] == usize::MAX {
            continue;
        }
        for w in closure(v) {
            for (c, x) in g.out_edges(w) {
                if c == e {
                    continue;
                }
                for y in closure(x) {
                    if normal[y] {
                        out.add_edge(new_id[v], recolor(c), new_id[y]);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The paths from `root` with at most `depth` edges. A path extended by an
/// `i`-colored edge of `g` gets an `i`-colored edge in the unfolding.
pub fn unfold(g: &ColoredGraph, root: usize, depth: usize) -> Result<ColoredGraph> {
    if root >= g.num_vertices() {
        return Err(Error::InvalidHopda(format!("no vertex {root}")));
    }
    let mut out = ColoredGraph::new(g.colors.clone());
    let mut paths: Vec<Vec<usize>> = vec![vec![root]];
    out.add_vertex(g.labels[root].clone());
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(vec![root], 0)]);
    let mut next = 0;
    while next < paths.len() {
        let p = paths[next].clone();
        if p.len() <= depth {
            let last = *p.last().expect("nonempty");
            for (c, t) in g.out_edges(last) {
                let mut q = p.clone();
                q.push(t);
                let id = match index.get(&q) {
                    Some(&id) => id,
                    None => {
                        let label: Vec<&str> = q.iter().map(|&v| g.labels[v].as_str()).collect();
                        let id = out.add_vertex(label.join("."));
                        index.insert(q.clone(), id);
                        paths.push(q);
                        id
                    }
                };
                out.add_edge(next, c, id);
            }
        }
        next += 1;
    }
    Ok(out)
}
