//! Edge-labeled Cayley digraphs, their undirected view, and DOT export.

use std::fmt::Write as _;

use crate::groups::{ElementId, FiniteGroup, GeneratingSequence};

/// Left-multiplication Cayley digraph: an edge `g -> s·g` labeled `s` for
/// every vertex `g` and every distinct entry `s` of the sequence.
#[derive(Clone, Debug)]
pub struct CayleyGraph {
    vertex_count: usize,
    labels: Vec<ElementId>,
    label_names: Vec<String>,
    label_orders: Vec<usize>,
    /// `succ[l][g] = labels[l] · g`
    succ: Vec<Vec<u32>>,
    vertex_names: Vec<String>,
    group: String,
    sequence: String,
}

impl CayleyGraph {
    /// Build `Γ(G, S)`. Repeated entries of `S` collapse to one label.
    pub fn build(group: &FiniteGroup, seq: &GeneratingSequence) -> Self {
        Self::from_elements(group, &seq.elements)
    }

    pub fn from_elements(group: &FiniteGroup, elements: &[ElementId]) -> Self {
        let mut labels: Vec<ElementId> = Vec::with_capacity(elements.len());
        for &e in elements {
            if !labels.contains(&e) {
                labels.push(e);
            }
        }
        let n = group.order();
        let succ = labels
            .iter()
            .map(|&s| (0..n).map(|g| group.mul(s, g) as u32).collect())
            .collect();
        let names: Vec<String> = elements.iter().map(|&e| group.name(e).to_string()).collect();
        CayleyGraph {
            vertex_count: n,
            label_names: labels.iter().map(|&s| group.name(s).to_string()).collect(),
            label_orders: labels.iter().map(|&s| group.element_order(s)).collect(),
            labels,
            succ,
            vertex_names: group.names().to_vec(),
            group: group.descriptor().to_string(),
            sequence: names.join(","),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn label_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[ElementId] {
        &self.labels
    }

    pub fn label_names(&self) -> &[String] {
        &self.label_names
    }

    pub fn label_orders(&self) -> &[usize] {
        &self.label_orders
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    /// The identity vertex.
    pub fn basepoint(&self) -> usize {
        0
    }

    pub fn group(&self) -> &str {
        &self.group
    }

    pub fn sequence(&self) -> &str {
        &self.sequence
    }

    /// Head of the edge leaving `g` with label index `label`.
    #[inline]
    pub fn succ(&self, label: usize, g: usize) -> usize {
        self.succ[label][g] as usize
    }

    pub fn successors(&self, label: usize) -> &[u32] {
        &self.succ[label]
    }

    pub fn edge_count(&self) -> usize {
        self.vertex_count * self.labels.len()
    }

    /// All edges `(tail, head, label index)`, grouped by label then tail.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..self.labels.len())
            .flat_map(move |l| (0..self.vertex_count).map(move |g| (g, self.succ(l, g), l)))
    }

    /// Every vertex reachable from the basepoint. Each label permutes the
    /// vertices, so following edges forwards reaches the same set as
    /// ignoring directions.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![self.basepoint()];
        seen[self.basepoint()] = true;
        let mut count = 1;
        while let Some(g) = stack.pop() {
            for l in 0..self.labels.len() {
                let h = self.succ(l, g);
                if !seen[h] {
                    seen[h] = true;
                    count += 1;
                    stack.push(h);
                }
            }
        }
        count == self.vertex_count
    }

    /// Cycles of the permutation `g -> s·g`, each starting at its smallest vertex.
    pub fn cycle_decomposition(&self, label: usize) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count];
        let mut cycles = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut g = start;
            while !seen[g] {
                seen[g] = true;
                cyc.push(g);
                g = self.succ(label, g);
            }
            cycles.push(cyc);
        }
        cycles
    }

    pub fn undirected_view(&self) -> UndirectedLabeledGraph {
        let mut edges = Vec::new();
        for l in 0..self.labels.len() {
            for g in 0..self.vertex_count {
                let h = self.succ(l, g);
                let involution = self.succ(l, h) == g && h != g;
                // an involution's edge pair g <-> h becomes one undirected edge
                if involution && h < g {
                    continue;
                }
                edges.push((g.min(h), g.max(h), l));
            }
        }
        UndirectedLabeledGraph::new(
            self.vertex_count,
            self.label_names.clone(),
            self.vertex_names.clone(),
            edges,
            format!("{} ({})", self.group, self.sequence),
        )
    }

    pub fn to_dot(&self, options: &DotOptions) -> String {
        if options.undirected {
            return self.undirected_view().to_dot(options);
        }
        let mut out = String::new();
        writeln!(out, "digraph cayley {{").unwrap();
        write_header(&mut out, &format!("{} ({})", self.group, self.sequence), options);
        write_nodes(&mut out, &self.vertex_names);
        for (g, h, l) in self.edges() {
            writeln!(
                out,
                "  v{g} -> v{h} [label=\"{}\", style={}];",
                escape(&self.label_names[l]),
                line_style(l)
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Options for [`CayleyGraph::to_dot`].
#[derive(Clone, Debug, Default)]
pub struct DotOptions {
    /// Emit the undirected view as a DOT `graph`.
    pub undirected: bool,
    /// Graph title; defaults to the group descriptor and sequence.
    pub title: Option<String>,
}

const LINE_STYLES: [&str; 4] = ["solid", "dashed", "dotted", "bold"];

fn line_style(label: usize) -> &'static str {
    LINE_STYLES[label % LINE_STYLES.len()]
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn write_header(out: &mut String, default_title: &str, options: &DotOptions) {
    let title = options.title.as_deref().unwrap_or(default_title);
    writeln!(out, "  label=\"{}\";", escape(title)).unwrap();
    writeln!(out, "  node [shape=ellipse];").unwrap();
}

fn write_nodes(out: &mut String, names: &[String]) {
    for (id, name) in names.iter().enumerate() {
        writeln!(out, "  v{id} [label=\"{}\"];", escape(name)).unwrap();
    }
}

/// Direction-forgetting view of a Cayley graph.
///
/// Involution labels contribute one edge per vertex pair; other labels one
/// edge per directed edge, so two labels joining the same pair give parallel
/// edges. Identity labels give one loop per vertex.
#[derive(Clone, Debug)]
pub struct UndirectedLabeledGraph {
    vertex_count: usize,
    label_names: Vec<String>,
    vertex_names: Vec<String>,
    /// `(u, v, label)` with `u <= v`, sorted
    edges: Vec<(usize, usize, usize)>,
    /// `adjacency[label][v]`: neighbors of `v` along `label`, loops listed once
    adjacency: Vec<Vec<Vec<usize>>>,
    title: String,
}

impl UndirectedLabeledGraph {
    pub fn new(
        vertex_count: usize,
        label_names: Vec<String>,
        vertex_names: Vec<String>,
        mut edges: Vec<(usize, usize, usize)>,
        title: String,
    ) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                std::mem::swap(&mut e.0, &mut e.1);
            }
        }
        edges.sort_unstable_by_key(|&(u, v, l)| (l, u, v));
        let mut adjacency = vec![vec![Vec::new(); vertex_count]; label_names.len()];
        for &(u, v, l) in &edges {
            adjacency[l][u].push(v);
            if u != v {
                adjacency[l][v].push(u);
            }
        }
        for row in adjacency.iter_mut().flatten() {
            row.sort_unstable();
        }
        UndirectedLabeledGraph {
            vertex_count,
            label_names,
            vertex_names,
            edges,
            adjacency,
            title,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn label_count(&self) -> usize {
        self.label_names.len()
    }

    pub fn label_names(&self) -> &[String] {
        &self.label_names
    }

    pub fn basepoint(&self) -> usize {
        0
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, label: usize, v: usize) -> &[usize] {
        &self.adjacency[label][v]
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(g) = stack.pop() {
            for l in 0..self.label_count() {
                for &h in &self.adjacency[l][g] {
                    if !seen[h] {
                        seen[h] = true;
                        count += 1;
                        stack.push(h);
                    }
                }
            }
        }
        count == self.vertex_count
    }

    /// Sorted sizes of the connected components of the `label` subgraph.
    pub fn label_component_sizes(&self, label: usize) -> Vec<usize> {
        let mut seen = vec![false; self.vertex_count];
        let mut sizes = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut size = 0;
            while let Some(g) = stack.pop() {
                size += 1;
                for &h in &self.adjacency[label][g] {
                    if !seen[h] {
                        seen[h] = true;
                        stack.push(h);
                    }
                }
            }
            sizes.push(size);
        }
        sizes.sort_unstable();
        sizes
    }

    pub fn to_dot(&self, options: &DotOptions) -> String {
        let mut out = String::new();
        writeln!(out, "graph cayley {{").unwrap();
        write_header(&mut out, &self.title, options);
        write_nodes(&mut out, &self.vertex_names);
        for &(u, v, l) in &self.edges {
            writeln!(
                out,
                "  v{u} -- v{v} [label=\"{}\", style={}];",
                escape(&self.label_names[l]),
                line_style(l)
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(desc: &str, seq: &str) -> CayleyGraph {
        let g = FiniteGroup::from_descriptor(desc).unwrap();
        CayleyGraph::build(&g, &g.parse_sequence(seq).unwrap())
    }

    #[test]
    fn figure_graphs() {
        for seq in ["a*x,x", "a^2,x"] {
            let gamma = graph("dicyclic:3", seq);
            assert_eq!(gamma.vertex_count(), 12);
            assert_eq!(gamma.label_count(), 2);
            assert_eq!(gamma.edge_count(), 24);
            assert!(gamma.is_connected());
        }
    }

    #[test]
    fn identity_label_gives_loops() {
        let gamma = graph("dicyclic:3", "e");
        assert!((0..12).all(|g| gamma.succ(0, g) == g));
        assert!(!gamma.is_connected());
        let u = gamma.undirected_view();
        assert_eq!(u.edge_count(), 12);
        assert!(u.edges().iter().all(|&(a, b, _)| a == b));
    }

    #[test]
    fn duplicates_collapse() {
        let gamma = graph("dicyclic:3", "x,x,a");
        assert_eq!(gamma.label_count(), 2);
        assert_eq!(gamma.label_names(), &["x".to_string(), "a".to_string()]);
    }

    #[test]
    fn connectivity() {
        assert!(!graph("dicyclic:3", "x").is_connected());
        assert!(graph("cyclic:5", "g").is_connected());
    }

    #[test]
    fn cycles_have_element_order_length() {
        let gamma = graph("dicyclic:3", "a^2,x");
        let c0 = gamma.cycle_decomposition(0);
        assert_eq!(c0.len(), 4);
        assert!(c0.iter().all(|c| c.len() == 3));
        let c1 = gamma.cycle_decomposition(1);
        assert_eq!(c1.len(), 3);
        assert!(c1.iter().all(|c| c.len() == 4));
    }

    #[test]
    fn undirected_edge_counts() {
        assert_eq!(graph("dicyclic:3", "a*x,x").undirected_view().edge_count(), 24);
        // D6 with two reflections: each label is an involution
        let d6 = graph("perm:3:(1,2);(1,2,3)", "(1,2),(1,3)");
        assert_eq!(d6.undirected_view().edge_count(), 6);
        // rotation of order 3 keeps one edge per directed edge
        let mixed = graph("perm:3:(1,2);(1,2,3)", "(1,2),(1,2,3)");
        assert_eq!(mixed.undirected_view().edge_count(), 3 + 6);
        assert_eq!(graph("cyclic:1", "g").undirected_view().edge_count(), 1);
    }

    #[test]
    fn dot_is_deterministic_and_styled() {
        let gamma = graph("dicyclic:3", "a*x,x");
        let dot = gamma.to_dot(&DotOptions::default());
        assert_eq!(dot, gamma.to_dot(&DotOptions::default()));
        assert_eq!(dot.matches("style=solid").count(), 12);
        assert_eq!(dot.matches("style=dashed").count(), 12);
        assert_eq!(dot.matches(" [label=\"").count(), 12 + 24);
        assert!(dot.starts_with("digraph cayley {"));
        let und = gamma.to_dot(&DotOptions {
            undirected: true,
            title: Some("DC12".into()),
        });
        assert!(und.starts_with("graph cayley {"));
        assert_eq!(und.matches(" -- ").count(), 24);
    }

    #[test]
    fn empty_label_set() {
        let g = FiniteGroup::cyclic(3).unwrap();
        let gamma = CayleyGraph::from_elements(&g, &[]);
        let dot = gamma.to_dot(&DotOptions::default());
        assert_eq!(dot.matches("->").count(), 0);
        assert_eq!(dot.matches("[label=").count(), 3);
    }
}
