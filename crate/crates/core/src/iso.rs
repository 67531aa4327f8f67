//! Isomorphism of labeled Cayley graphs up to a bijective relabeling.
//!
//! # Basepoint normalization
//!
//! A connected Cayley digraph is regular: for any two vertices there is
//! exactly one label-preserving automorphism carrying one to the other (right
//! multiplication). So if `Γ₁ ≅ Γ₂` by some `(f, σ)`, composing `f` with the
//! automorphism of `Γ₂` that moves `f(e₁)` to `e₂` gives an isomorphism fixing
//! the identity. Such an isomorphism satisfies `f(s·g) = σ(s)·f(g)`, so it is
//! determined by `σ` alone. The directed search therefore only tries each
//! order-compatible `σ` and propagates from the identity.
//!
//! Right multiplications also preserve the undirected view, so the undirected
//! search fixes the identity as well, but there each `s`-neighbor pair
//! `{s·g, s⁻¹·g}` can be matched in two ways and the search backtracks.

use serde::Serialize;

use crate::cayley::{CayleyGraph, UndirectedLabeledGraph};
use crate::error::{Error, Result};

const UNSET: usize = usize::MAX;

/// Largest vertex count [`brute_force_iso`] accepts.
pub const BRUTE_FORCE_LIMIT: usize = 16;

/// A vertex bijection together with a label bijection.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsoWitness {
    pub vertex_map: Vec<usize>,
    /// `label_map[i]` is the label index in the second graph for label `i` of the first.
    pub label_map: Vec<usize>,
}

#[derive(Serialize)]
struct WitnessJson<'a> {
    vertex_map: &'a [usize],
    label_map: Vec<(String, String)>,
}

fn is_bijection(map: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    map.len() == n
        && map.iter().all(|&v| {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
            true
        })
}

impl IsoWitness {
    pub fn identity(vertices: usize, labels: usize) -> Self {
        IsoWitness {
            vertex_map: (0..vertices).collect(),
            label_map: (0..labels).collect(),
        }
    }

    fn maps_are_bijections(&self, vertices: usize, labels: usize) -> bool {
        is_bijection(&self.vertex_map, vertices) && is_bijection(&self.label_map, labels)
    }

    /// Edge-by-edge check: `g -s-> h` in `a` iff `f(g) -σ(s)-> f(h)` in `b`.
    pub fn validate_directed(&self, a: &CayleyGraph, b: &CayleyGraph) -> bool {
        a.vertex_count() == b.vertex_count()
            && a.label_count() == b.label_count()
            && self.maps_are_bijections(a.vertex_count(), a.label_count())
            && a.edges().all(|(g, h, l)| {
                b.succ(self.label_map[l], self.vertex_map[g]) == self.vertex_map[h]
            })
    }

    /// The mapped edge multiset of `a` equals the edge multiset of `b`.
    pub fn validate_undirected(
        &self,
        a: &UndirectedLabeledGraph,
        b: &UndirectedLabeledGraph,
    ) -> bool {
        if a.vertex_count() != b.vertex_count()
            || a.label_count() != b.label_count()
            || a.edge_count() != b.edge_count()
            || !self.maps_are_bijections(a.vertex_count(), a.label_count())
        {
            return false;
        }
        let mut mapped: Vec<(usize, usize, usize)> = a
            .edges()
            .iter()
            .map(|&(u, v, l)| {
                let (x, y) = (self.vertex_map[u], self.vertex_map[v]);
                (self.label_map[l], x.min(y), x.max(y))
            })
            .collect();
        let mut target: Vec<(usize, usize, usize)> =
            b.edges().iter().map(|&(u, v, l)| (l, u, v)).collect();
        mapped.sort_unstable();
        target.sort_unstable();
        mapped == target
    }

    pub fn inverse(&self) -> IsoWitness {
        let invert = |m: &[usize]| {
            let mut out = vec![0; m.len()];
            for (i, &j) in m.iter().enumerate() {
                out[j] = i;
            }
            out
        };
        IsoWitness {
            vertex_map: invert(&self.vertex_map),
            label_map: invert(&self.label_map),
        }
    }

    /// `then ∘ self`: first apply `self`, then `then`.
    pub fn compose(&self, then: &IsoWitness) -> IsoWitness {
        IsoWitness {
            vertex_map: self.vertex_map.iter().map(|&v| then.vertex_map[v]).collect(),
            label_map: self.label_map.iter().map(|&l| then.label_map[l]).collect(),
        }
    }

    /// `{"vertex_map": [...], "label_map": [[name1, name2], ...]}`
    pub fn to_json(&self, label_names_a: &[String], label_names_b: &[String]) -> String {
        let json = WitnessJson {
            vertex_map: &self.vertex_map,
            label_map: self
                .label_map
                .iter()
                .enumerate()
                .map(|(i, &j)| (label_names_a[i].clone(), label_names_b[j].clone()))
                .collect(),
        };
        serde_json::to_string(&json).expect("witness serializes")
    }
}

/// Label bijections `σ` (as index vectors) in lexicographic order, keeping
/// only those where `compatible(i, σ(i))` holds for every `i`.
fn label_bijections(k: usize, compatible: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    fn rec(
        i: usize,
        k: usize,
        used: &mut [bool],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        ok: &dyn Fn(usize, usize) -> bool,
    ) {
        if i == k {
            out.push(cur.clone());
            return;
        }
        for j in 0..k {
            if !used[j] && ok(i, j) {
                used[j] = true;
                cur.push(j);
                rec(i + 1, k, used, cur, out, ok);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(0, k, &mut vec![false; k], &mut Vec::new(), &mut out, &compatible);
    out
}

fn require_connected(connected: bool, which: &str) -> Result<()> {
    if connected {
        Ok(())
    } else {
        Err(Error::ContractViolation(format!(
            "{which} graph is disconnected; only generating sequences can be compared"
        )))
    }
}

/// Propagate `f(s·g) = σ(s)·f(g)` from `f(root_a) = root_b`.
fn propagate(
    a: &CayleyGraph,
    b: &CayleyGraph,
    sigma: &[usize],
    root_a: usize,
    root_b: usize,
) -> Option<Vec<usize>> {
    let n = a.vertex_count();
    let mut f = vec![UNSET; n];
    let mut finv = vec![UNSET; n];
    f[root_a] = root_b;
    finv[root_b] = root_a;
    let mut queue = vec![root_a];
    let mut head = 0;
    while head < queue.len() {
        let g = queue[head];
        head += 1;
        for (l, &t) in sigma.iter().enumerate() {
            let v = a.succ(l, g);
            let w = b.succ(t, f[g]);
            if f[v] == UNSET {
                if finv[w] != UNSET {
                    return None;
                }
                f[v] = w;
                finv[w] = v;
                queue.push(v);
            } else if f[v] != w {
                return None;
            }
        }
    }
    (queue.len() == n).then_some(f)
}

/// Decide whether two connected Cayley digraphs are isomorphic up to
/// relabeling. Returns the witness for the first successful `σ` in
/// lexicographic order, or `None`.
pub fn directed_iso(a: &CayleyGraph, b: &CayleyGraph) -> Result<Option<IsoWitness>> {
    require_connected(a.is_connected(), "first")?;
    require_connected(b.is_connected(), "second")?;
    if a.vertex_count() != b.vertex_count() || a.label_count() != b.label_count() {
        return Ok(None);
    }
    let (oa, ob) = (a.label_orders(), b.label_orders());
    for sigma in label_bijections(a.label_count(), |i, j| oa[i] == ob[j]) {
        if let Some(f) = propagate(a, b, &sigma, a.basepoint(), b.basepoint()) {
            let w = IsoWitness {
                vertex_map: f,
                label_map: sigma,
            };
            if w.validate_directed(a, b) {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// All label-preserving automorphisms, one per image of the basepoint.
pub fn automorphisms(g: &CayleyGraph) -> Result<Vec<IsoWitness>> {
    require_connected(g.is_connected(), "input")?;
    let identity: Vec<usize> = (0..g.label_count()).collect();
    Ok((0..g.vertex_count())
        .filter_map(|t| propagate(g, g, &identity, g.basepoint(), t))
        .map(|f| IsoWitness {
            vertex_map: f,
            label_map: identity.clone(),
        })
        .filter(|w| w.validate_directed(g, g))
        .collect())
}

struct Search<'a> {
    a: &'a UndirectedLabeledGraph,
    b: &'a UndirectedLabeledGraph,
    sigma: &'a [usize],
}

#[derive(Clone)]
struct Partial {
    f: Vec<usize>,
    finv: Vec<usize>,
}

impl Partial {
    fn assign(&mut self, v: usize, w: usize) {
        self.f[v] = w;
        self.finv[w] = v;
    }
}

impl Search<'_> {
    /// Apply every forced assignment reachable from `queue`; false on conflict.
    fn propagate(&self, st: &mut Partial, mut queue: Vec<usize>) -> bool {
        while let Some(g) = queue.pop() {
            let h = st.f[g];
            for (l, &t) in self.sigma.iter().enumerate() {
                let n1 = self.a.neighbors(l, g);
                let n2 = self.b.neighbors(t, h);
                if n1.len() != n2.len() {
                    return false;
                }
                let mut avail: Vec<usize> = n2.to_vec();
                let mut unmapped: Vec<usize> = Vec::new();
                for &v in n1 {
                    if st.f[v] == UNSET {
                        unmapped.push(v);
                    } else if let Some(pos) = avail.iter().position(|&w| w == st.f[v]) {
                        avail.swap_remove(pos);
                    } else {
                        return false;
                    }
                }
                if avail.iter().any(|&w| st.finv[w] != UNSET) {
                    return false;
                }
                if unmapped.len() == 1 {
                    st.assign(unmapped[0], avail[0]);
                    queue.push(unmapped[0]);
                }
            }
        }
        true
    }

    /// Lowest assigned vertex with a label whose two neighbors are both unmapped.
    fn branch_point(&self, st: &Partial) -> Option<([usize; 2], [usize; 2])> {
        for g in 0..st.f.len() {
            if st.f[g] == UNSET {
                continue;
            }
            for (l, &t) in self.sigma.iter().enumerate() {
                let n1 = self.a.neighbors(l, g);
                if n1.len() == 2 && n1.iter().all(|&v| st.f[v] == UNSET) {
                    let n2 = self.b.neighbors(t, st.f[g]);
                    let mut v = [n1[0], n1[1]];
                    let mut w = [n2[0], n2[1]];
                    v.sort_unstable();
                    w.sort_unstable();
                    return Some((v, w));
                }
            }
        }
        None
    }

    fn solve(&self, mut st: Partial, queue: Vec<usize>) -> Option<Vec<usize>> {
        if !self.propagate(&mut st, queue) {
            return None;
        }
        match self.branch_point(&st) {
            None => st.f.iter().all(|&w| w != UNSET).then_some(st.f),
            Some((v, w)) => {
                for (x, y) in [(w[0], w[1]), (w[1], w[0])] {
                    let mut next = st.clone();
                    next.assign(v[0], x);
                    next.assign(v[1], y);
                    if let Some(f) = self.solve(next, vec![v[0], v[1]]) {
                        return Some(f);
                    }
                }
                None
            }
        }
    }
}

/// Decide whether two connected undirected labeled views are isomorphic up to
/// relabeling.
pub fn undirected_iso(
    a: &UndirectedLabeledGraph,
    b: &UndirectedLabeledGraph,
) -> Result<Option<IsoWitness>> {
    require_connected(a.is_connected(), "first")?;
    require_connected(b.is_connected(), "second")?;
    if a.vertex_count() != b.vertex_count()
        || a.label_count() != b.label_count()
        || a.edge_count() != b.edge_count()
    {
        return Ok(None);
    }
    let n = a.vertex_count();
    let sig_a: Vec<Vec<usize>> = (0..a.label_count()).map(|l| a.label_component_sizes(l)).collect();
    let sig_b: Vec<Vec<usize>> = (0..b.label_count()).map(|l| b.label_component_sizes(l)).collect();
    for sigma in label_bijections(a.label_count(), |i, j| sig_a[i] == sig_b[j]) {
        let search = Search {
            a,
            b,
            sigma: &sigma,
        };
        let mut st = Partial {
            f: vec![UNSET; n],
            finv: vec![UNSET; n],
        };
        st.assign(a.basepoint(), b.basepoint());
        if let Some(f) = search.solve(st, vec![a.basepoint()]) {
            let w = IsoWitness {
                vertex_map: f,
                label_map: sigma.clone(),
            };
            if w.validate_undirected(a, b) {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// Exhaustive search over all label bijections and all vertex bijections,
/// pruned only by edge consistency with already placed vertices. Test oracle
/// for [`directed_iso`]; refuses graphs above [`BRUTE_FORCE_LIMIT`] vertices.
pub fn brute_force_iso(a: &CayleyGraph, b: &CayleyGraph) -> Result<Option<IsoWitness>> {
    let n = a.vertex_count();
    if n > BRUTE_FORCE_LIMIT || b.vertex_count() > BRUTE_FORCE_LIMIT {
        return Err(Error::ScaleGuard(format!(
            "brute force is limited to {BRUTE_FORCE_LIMIT} vertices"
        )));
    }
    if n != b.vertex_count() || a.label_count() != b.label_count() {
        return Ok(None);
    }
    let k = a.label_count();
    // adjacency[u][v] = bitmask of labels on the edge u -> v
    let masks = |g: &CayleyGraph| {
        let mut m = vec![vec![0u32; n]; n];
        for (u, v, l) in g.edges() {
            m[u][v] |= 1 << l;
        }
        m
    };
    let (ma, mb) = (masks(a), masks(b));
    let order = visit_order(&ma);
    for sigma in label_bijections(k, |_, _| true) {
        let remap = |mask: u32| {
            (0..k)
                .filter(|&l| mask & (1 << l) != 0)
                .fold(0u32, |acc, l| acc | (1 << sigma[l]))
        };
        let mapped: Vec<Vec<u32>> = ma
            .iter()
            .map(|row| row.iter().map(|&m| remap(m)).collect())
            .collect();
        let mut f = vec![UNSET; n];
        let mut used = vec![false; n];
        if place(0, &order, &mapped, &mb, &mut f, &mut used) {
            let w = IsoWitness {
                vertex_map: f,
                label_map: sigma.clone(),
            };
            debug_assert!(w.validate_directed(a, b));
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Vertices in breadth-first order over the undirected adjacency, so each
/// placed vertex after the first (per component) touches an earlier one.
fn visit_order(m: &[Vec<u32>]) -> Vec<usize> {
    let n = m.len();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        order.push(start);
        let mut head = order.len() - 1;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for v in 0..n {
                if !seen[v] && (m[u][v] != 0 || m[v][u] != 0) {
                    seen[v] = true;
                    order.push(v);
                }
            }
        }
    }
    order
}

fn place(
    depth: usize,
    order: &[usize],
    ma: &[Vec<u32>],
    mb: &[Vec<u32>],
    f: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..mb.len() {
        if used[w] || ma[v][v] != mb[w][w] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            ma[u][v] == mb[f[u]][w] && ma[v][u] == mb[w][f[u]]
        });
        if !consistent {
            continue;
        }
        f[v] = w;
        used[w] = true;
        if place(depth + 1, order, ma, mb, f, used) {
            return true;
        }
        used[w] = false;
        f[v] = UNSET;
    }
    false
}
