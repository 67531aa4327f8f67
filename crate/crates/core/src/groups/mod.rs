//! Concrete finite groups.
//!
//! Every group is stored over dense element ids `0..order`, with `0` the
//! identity. The cyclic, dihedral and dicyclic families multiply by index
//! arithmetic on their normal forms; everything else (direct products,
//! permutation closures, coset-enumerated presentations) is backed by a
//! multiplication table or, for very large permutation groups, by composing
//! permutations on demand.

mod descriptor;
mod expr;
mod perm;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use perm::{parse_cycles, Permutation, DEFAULT_CLOSURE_CAP};

/// Dense element id. `0` is always the identity.
pub type ElementId = usize;

/// Largest order for which the multiplication table is materialized.
pub const TABLE_LIMIT: usize = 4096;

/// Largest order for which associativity is checked over all triples.
const EXHAUSTIVE_AXIOM_LIMIT: usize = 200;
const SAMPLED_TRIPLES: usize = 100_000;

#[derive(Clone, Debug)]
enum Law {
    Cyclic(usize),
    Dihedral(usize),
    Dicyclic(usize),
    Table(Arc<Vec<u32>>),
    /// Compose permutations and look the result up; used above `TABLE_LIMIT`.
    Compose,
}

#[derive(Clone, Debug)]
pub(crate) enum Kind {
    Cyclic,
    Dihedral { n: usize },
    Dicyclic { n: usize },
    Product(Box<FiniteGroup>, Box<FiniteGroup>),
    Permutation {
        degree: usize,
        perms: Arc<Vec<Permutation>>,
        index: Arc<HashMap<Permutation, u32>>,
    },
    Presented,
}

/// A finite group with a total multiplication on dense element ids.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    law: Law,
    inverses: Vec<u32>,
    names: Vec<String>,
    name_index: HashMap<String, ElementId>,
    generators: Vec<(String, ElementId)>,
    kind: Kind,
    descriptor: String,
}

/// Normal form `a^i x^j` of a dicyclic element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DicyclicElement {
    pub i: usize,
    pub j: usize,
    pub n: usize,
}

impl DicyclicElement {
    pub fn new(n: usize, i: i64, j: usize) -> Self {
        let m = 2 * n as i64;
        DicyclicElement {
            i: i.rem_euclid(m) as usize,
            j: j % 2,
            n,
        }
    }

    pub fn id(&self) -> ElementId {
        self.j * 2 * self.n + self.i
    }

    pub fn from_id(n: usize, id: ElementId) -> Self {
        DicyclicElement {
            i: id % (2 * n),
            j: id / (2 * n),
            n,
        }
    }

    /// True for elements of the cyclic subgroup `<a>`.
    pub fn in_cyclic_part(&self) -> bool {
        self.j == 0
    }
}

/// Multiset of element orders, kept sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrderMultiset(Vec<usize>);

impl OrderMultiset {
    pub fn new(mut orders: Vec<usize>) -> Self {
        orders.sort_unstable();
        OrderMultiset(orders)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<&[usize]> for OrderMultiset {
    fn from(v: &[usize]) -> Self {
        OrderMultiset::new(v.to_vec())
    }
}

impl fmt::Display for OrderMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|o| o.to_string()).collect();
        write!(f, "{{{{{}}}}}", parts.join(","))
    }
}

/// An ordered tuple of group elements.
///
/// Repeated entries are allowed here; the Cayley graph uses the underlying set
/// of the sequence as its label set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratingSequence {
    pub elements: Vec<ElementId>,
    pub group: String,
}

impl GeneratingSequence {
    pub fn new(group: &FiniteGroup, elements: Vec<ElementId>) -> Result<Self> {
        if let Some(&bad) = elements.iter().find(|&&e| e >= group.order()) {
            return Err(Error::InvalidParameter(format!(
                "element id {bad} out of range for group of order {}",
                group.order()
            )));
        }
        Ok(GeneratingSequence {
            elements,
            group: group.descriptor().to_string(),
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Entries in first-occurrence order with duplicates removed.
    pub fn label_set(&self) -> Vec<ElementId> {
        let mut out = Vec::with_capacity(self.elements.len());
        for &e in &self.elements {
            if !out.contains(&e) {
                out.push(e);
            }
        }
        out
    }

    pub fn has_duplicates(&self) -> bool {
        self.label_set().len() != self.elements.len()
    }

    /// Comma-separated element names; parses back with [`FiniteGroup::parse_sequence`].
    pub fn display(&self, group: &FiniteGroup) -> String {
        self.names(group).join(",")
    }

    pub fn names(&self, group: &FiniteGroup) -> Vec<String> {
        self.elements
            .iter()
            .map(|&e| group.name(e).to_string())
            .collect()
    }
}

fn power_name(base: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

fn normal_form_name(i: usize, j: usize) -> String {
    match (i, j) {
        (0, 0) => "e".to_string(),
        (_, 0) => power_name("a", i),
        (0, _) => "x".to_string(),
        _ => format!("{}*x", power_name("a", i)),
    }
}

impl FiniteGroup {
    fn assemble(
        order: usize,
        law: Law,
        names: Vec<String>,
        generators: Vec<(String, ElementId)>,
        kind: Kind,
        descriptor: String,
    ) -> Result<Self> {
        let mut name_index = HashMap::with_capacity(order);
        for (id, name) in names.iter().enumerate() {
            if name_index.insert(name.clone(), id).is_some() {
                return Err(Error::Axiom(format!("duplicate element name `{name}`")));
            }
        }
        let mut g = FiniteGroup {
            order,
            law,
            inverses: Vec::new(),
            names,
            name_index,
            generators,
            kind,
            descriptor,
        };
        g.inverses = g.compute_inverses()?;
        g.check_axioms()?;
        Ok(g)
    }

    /// Cyclic group of order `n`, generator `g`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter("cyclic(n) needs n >= 1".into()));
        }
        let names = (0..n)
            .map(|k| if k == 0 { "e".into() } else { power_name("g", k) })
            .collect();
        let gen = if n > 1 { 1 } else { 0 };
        Self::assemble(
            n,
            Law::Cyclic(n),
            names,
            vec![("g".into(), gen)],
            Kind::Cyclic,
            format!("cyclic:{n}"),
        )
    }

    /// Dihedral group of order `2n`: `<a, x | a^n = x^2 = e, xax = a^-1>`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter("dihedral(n) needs n >= 3".into()));
        }
        let names = (0..2 * n).map(|id| normal_form_name(id % n, id / n)).collect();
        Self::assemble(
            2 * n,
            Law::Dihedral(n),
            names,
            vec![("a".into(), 1), ("x".into(), n)],
            Kind::Dihedral { n },
            format!("dihedral:{n}"),
        )
    }

    /// Dicyclic group of order `4n`: `<a, x | a^2n = e, x^2 = a^n, x^-1 a x = a^-1>`.
    ///
    /// Element `a^i x^j` has id `j * 2n + i`.
    pub fn dicyclic(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter("dicyclic(n) needs n >= 2".into()));
        }
        let m = 2 * n;
        let names = (0..2 * m).map(|id| normal_form_name(id % m, id / m)).collect();
        Self::assemble(
            2 * m,
            Law::Dicyclic(n),
            names,
            vec![("a".into(), 1), ("x".into(), m)],
            Kind::Dicyclic { n },
            format!("dicyclic:{n}"),
        )
    }

    /// Direct product with componentwise multiplication. Element `(g, h)` has
    /// id `g * |H| + h` and display name `(g,h)`.
    pub fn direct_product(left: &FiniteGroup, right: &FiniteGroup) -> Result<Self> {
        let order = left
            .order
            .checked_mul(right.order)
            .filter(|&o| o <= TABLE_LIMIT)
            .ok_or_else(|| {
                Error::ScaleGuard(format!(
                    "direct product order exceeds the table limit {TABLE_LIMIT}"
                ))
            })?;
        let r = right.order;
        let mut table = vec![0u32; order * order];
        for a in 0..order {
            let (a1, a2) = (a / r, a % r);
            for b in 0..order {
                let (b1, b2) = (b / r, b % r);
                table[a * order + b] = (left.mul(a1, b1) * r + right.mul(a2, b2)) as u32;
            }
        }
        let names = (0..order)
            .map(|id| format!("({},{})", left.name(id / r), right.name(id % r)))
            .collect();
        Self::assemble(
            order,
            Law::Table(Arc::new(table)),
            names,
            Vec::new(),
            Kind::Product(Box::new(left.clone()), Box::new(right.clone())),
            format!("product:{},{}", bracket_if_needed(&left.descriptor), right.descriptor),
        )
    }

    /// Closure of permutations of `{1..degree}` under composition, found by
    /// breadth-first search from the identity. Names are cycle notation.
    pub fn from_permutations(degree: usize, generators: &[Permutation]) -> Result<Self> {
        Self::from_permutations_capped(degree, generators, DEFAULT_CLOSURE_CAP)
    }

    pub fn from_permutations_capped(
        degree: usize,
        generators: &[Permutation],
        cap: usize,
    ) -> Result<Self> {
        let perms = perm::closure(degree, generators, cap)?;
        let order = perms.len();
        let index: HashMap<Permutation, u32> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let law = if order <= TABLE_LIMIT {
            let mut table = vec![0u32; order * order];
            for a in 0..order {
                for b in 0..order {
                    table[a * order + b] = index[&perms[a].compose(&perms[b])];
                }
            }
            Law::Table(Arc::new(table))
        } else {
            Law::Compose
        };
        let names = perms.iter().map(|p| p.to_cycle_string()).collect();
        let gens_text: Vec<String> = generators.iter().map(|p| p.to_cycle_string()).collect();
        Self::assemble(
            order,
            law,
            names,
            Vec::new(),
            Kind::Permutation {
                degree,
                perms: Arc::new(perms),
                index: Arc::new(index),
            },
            format!("perm:{degree}:{}", gens_text.join(";")),
        )
    }

    /// Group given by an explicit multiplication table with identity at id 0.
    pub(crate) fn from_table(
        order: usize,
        table: Vec<u32>,
        names: Vec<String>,
        generators: Vec<(String, ElementId)>,
        descriptor: String,
    ) -> Result<Self> {
        if table.len() != order * order {
            return Err(Error::Axiom("table size does not match order".into()));
        }
        Self::assemble(
            order,
            Law::Table(Arc::new(table)),
            names,
            generators,
            Kind::Presented,
            descriptor,
        )
    }

    /// Parse a group descriptor such as `dicyclic:3` or `perm:4:(1,2);(1,2,3,4)`.
    pub fn from_descriptor(text: &str) -> Result<Self> {
        descriptor::parse(text)
    }

    /// Copy of this group whose multiplication is a stored table, when the
    /// order is at most [`TABLE_LIMIT`]; otherwise an unchanged clone.
    pub fn materialized(&self) -> Self {
        if matches!(self.law, Law::Table(_)) || self.order > TABLE_LIMIT {
            return self.clone();
        }
        let n = self.order;
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.mul(a, b) as u32;
            }
        }
        FiniteGroup {
            law: Law::Table(Arc::new(table)),
            ..self.clone()
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> ElementId {
        0
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn name(&self, g: ElementId) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element_by_name(&self, name: &str) -> Option<ElementId> {
        self.name_index.get(name).copied()
    }

    /// Named generators usable as identifiers in element expressions.
    pub fn generators(&self) -> &[(String, ElementId)] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<ElementId> {
        self.generators
            .iter()
            .find(|(n, _)| n == name)
            .map(|&(_, id)| id)
    }

    /// Dicyclic parameter `n` if this is `dicyclic:n`.
    pub fn dicyclic_parameter(&self) -> Option<usize> {
        match self.kind {
            Kind::Dicyclic { n } => Some(n),
            _ => None,
        }
    }

    pub(crate) fn kind(&self) -> &Kind {
        &self.kind
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        match &self.law {
            Law::Cyclic(n) => (a + b) % n,
            Law::Dihedral(n) => {
                let n = *n;
                let (i, j) = (a % n, a / n);
                let (k, l) = (b % n, b / n);
                let e = if j == 0 { (i + k) % n } else { (i + n - k) % n };
                e + ((j + l) % 2) * n
            }
            Law::Dicyclic(n) => {
                let n = *n;
                let m = 2 * n;
                let (i, j) = (a % m, a / m);
                let (k, l) = (b % m, b / m);
                match (j, l) {
                    (0, 0) => (i + k) % m,
                    (0, _) => m + (i + k) % m,
                    (_, 0) => m + (i + m - k) % m,
                    // (a^i x)(a^k x) = a^(i - k + n)
                    _ => (i + m - k + n) % m,
                }
            }
            Law::Table(t) => t[a * self.order + b] as usize,
            Law::Compose => match &self.kind {
                Kind::Permutation { perms, index, .. } => {
                    index[&perms[a].compose(&perms[b])] as usize
                }
                _ => unreachable!("compose law only backs permutation groups"),
            },
        }
    }

    #[inline]
    pub fn inv(&self, g: ElementId) -> ElementId {
        self.inverses[g] as usize
    }

    /// `g^k` for any integer `k`.
    pub fn pow(&self, g: ElementId, k: i64) -> ElementId {
        let base = if k < 0 { self.inv(g) } else { g };
        let mut e = k.unsigned_abs();
        let mut acc = self.identity();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    /// Least `k >= 1` with `g^k = e`.
    pub fn element_order(&self, g: ElementId) -> usize {
        let mut k = 1;
        let mut h = g;
        while h != self.identity() {
            h = self.mul(h, g);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order).map(|g| self.element_order(g)).collect()
    }

    /// Subgroup generated by `set`, sorted ascending.
    pub fn closure(&self, set: &[ElementId]) -> Vec<ElementId> {
        let seen = self.closure_mask(set);
        (0..self.order).filter(|&g| seen[g]).collect()
    }

    /// Size of the subgroup generated by `set`.
    pub fn closure_size(&self, set: &[ElementId]) -> usize {
        self.closure_mask(set).iter().filter(|&&b| b).count()
    }

    fn closure_mask(&self, set: &[ElementId]) -> Vec<bool> {
        let mut seen = vec![false; self.order];
        let mut queue = vec![self.identity()];
        seen[self.identity()] = true;
        let mut head = 0;
        while head < queue.len() {
            let h = queue[head];
            head += 1;
            for &s in set {
                let t = self.mul(s, h);
                if !seen[t] {
                    seen[t] = true;
                    queue.push(t);
                }
            }
        }
        seen
    }

    pub fn is_generating(&self, seq: &[ElementId]) -> bool {
        self.closure_size(seq) == self.order
    }

    /// Generating, and no sequence obtained by deleting one entry generates.
    pub fn is_minimal_generating(&self, seq: &[ElementId]) -> bool {
        if !self.is_generating(seq) {
            return false;
        }
        let mut rest = Vec::with_capacity(seq.len());
        (0..seq.len()).all(|skip| {
            rest.clear();
            rest.extend(
                seq.iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &e)| e),
            );
            !self.is_generating(&rest)
        })
    }

    pub fn order_multiset(&self, seq: &[ElementId]) -> OrderMultiset {
        OrderMultiset::new(seq.iter().map(|&g| self.element_order(g)).collect())
    }

    /// Parse an element expression such as `a^2*x` or `(1,2,3)`.
    pub fn parse_element(&self, text: &str) -> Result<ElementId> {
        expr::parse_element(self, text)
    }

    /// Parse a comma-separated list of element expressions.
    pub fn parse_sequence(&self, text: &str) -> Result<GeneratingSequence> {
        let elements = expr::parse_list(self, text)?;
        GeneratingSequence::new(self, elements)
    }

    fn compute_inverses(&self) -> Result<Vec<u32>> {
        let n = self.order;
        let inv: Vec<u32> = match (&self.law, &self.kind) {
            (Law::Cyclic(m), _) => (0..n).map(|g| ((m - g) % m) as u32).collect(),
            (Law::Dihedral(m), _) => (0..n)
                .map(|g| if g < *m { ((m - g) % m) as u32 } else { g as u32 })
                .collect(),
            (Law::Dicyclic(k), _) => {
                let m = 2 * k;
                (0..n)
                    .map(|g| {
                        if g < m {
                            ((m - g) % m) as u32
                        } else {
                            // (a^i x)^-1 = a^(i+n) x
                            (m + (g - m + k) % m) as u32
                        }
                    })
                    .collect()
            }
            (_, Kind::Permutation { perms, index, .. }) => {
                perms.iter().map(|p| index[&p.inverse()]).collect()
            }
            _ => {
                let mut inv = vec![u32::MAX; n];
                for a in 0..n {
                    if inv[a] != u32::MAX {
                        continue;
                    }
                    let b = (0..n).find(|&b| self.mul(a, b) == 0).ok_or_else(|| {
                        Error::Axiom(format!("element `{}` has no inverse", self.names[a]))
                    })?;
                    inv[a] = b as u32;
                    inv[b] = a as u32;
                }
                inv
            }
        };
        Ok(inv)
    }

    /// Identity, inverse and associativity checks: exhaustive up to order 200,
    /// sampled above.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.order;
        for g in 0..n {
            if self.mul(0, g) != g || self.mul(g, 0) != g {
                return Err(Error::Axiom(format!("identity fails on `{}`", self.names[g])));
            }
            let h = self.inv(g);
            if self.mul(g, h) != 0 || self.mul(h, g) != 0 {
                return Err(Error::Axiom(format!("inverse fails on `{}`", self.names[g])));
            }
        }
        let assoc = |a: usize, b: usize, c: usize| -> Result<()> {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(Error::Axiom(format!(
                    "associativity fails on ({}, {}, {})",
                    self.names[a], self.names[b], self.names[c]
                )));
            }
            Ok(())
        };
        if n <= EXHAUSTIVE_AXIOM_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        assoc(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            for _ in 0..SAMPLED_TRIPLES {
                assoc(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }
}

fn bracket_if_needed(descriptor: &str) -> String {
    if descriptor.contains(',') {
        format!("[{descriptor}]")
    } else {
        descriptor.to_string()
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.descriptor, self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dc(n: usize) -> FiniteGroup {
        FiniteGroup::dicyclic(n).unwrap()
    }

    fn el(n: usize, i: i64, j: usize) -> ElementId {
        DicyclicElement::new(n, i, j).id()
    }

    #[test]
    fn dicyclic_rules() {
        let g = dc(3);
        assert_eq!(g.order(), 12);
        // (a x)(a^2 x) = a^(1-2+3)
        assert_eq!(g.mul(el(3, 1, 1), el(3, 2, 1)), el(3, 2, 0));
        assert_eq!(g.inv(el(3, 1, 1)), el(3, 4, 1));
        assert_eq!(g.element_order(el(3, 1, 0)), 6);
        let x = el(3, 0, 1);
        let a = el(3, 1, 0);
        assert_eq!(g.mul(x, x), el(3, 3, 0));
        assert_eq!(g.mul(g.mul(g.inv(x), a), x), g.inv(a));
        assert_eq!(FiniteGroup::dicyclic(2).unwrap().order(), 8);
        assert!(FiniteGroup::dicyclic(1).is_err());
    }

    #[test]
    fn dicyclic_structure_holds_for_small_n() {
        for n in 2..=12 {
            let g = dc(n);
            let in_a = (0..g.order())
                .filter(|&id| DicyclicElement::from_id(n, id).in_cyclic_part())
                .count();
            assert_eq!(in_a, 2 * n);
            for k in 0..2 * n as i64 {
                assert_eq!(g.element_order(el(n, k, 1)), 4);
            }
            assert_eq!(g.element_order(g.generator("a").unwrap()), 2 * n);
        }
    }

    #[test]
    fn dihedral_and_cyclic() {
        assert_eq!(FiniteGroup::dihedral(3).unwrap().order(), 6);
        assert!(FiniteGroup::dihedral(2).is_err());
        let t = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(t.name(0), "e");
        assert!(FiniteGroup::cyclic(0).is_err());
    }

    #[test]
    fn product_order_and_element_order() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let v4 = FiniteGroup::direct_product(&z2, &z2).unwrap();
        let g = FiniteGroup::direct_product(&FiniteGroup::cyclic(3).unwrap(), &v4).unwrap();
        assert_eq!(g.order(), 12);
        let e = g.parse_element("(g,(g,e))").unwrap();
        assert_eq!(g.element_order(e), 6);
    }

    #[test]
    fn identity_order_is_one() {
        for g in [dc(3), FiniteGroup::dihedral(5).unwrap()] {
            assert_eq!(g.element_order(g.identity()), 1);
        }
    }

    #[test]
    fn generation_in_dc12() {
        let g = dc(3);
        assert!(g.is_generating(&[el(3, 1, 1), el(3, 2, 1)]));
        assert!(!g.is_generating(&[el(3, 0, 1), el(3, 3, 1)]));
        assert!(g.is_generating(&[el(3, 2, 0), el(3, 0, 1)]));
        let x = el(3, 0, 1);
        assert!(!g.is_generating(&[x, x]));
        assert!(g.is_minimal_generating(&[el(3, 1, 0), x]));
        assert!(!g.is_minimal_generating(&[el(3, 1, 0), x, el(3, 1, 1)]));
    }

    #[test]
    fn order_multisets_from_theorem() {
        let g = dc(3);
        let a = el(3, 1, 0);
        let a2 = el(3, 2, 0);
        let x = el(3, 0, 1);
        let ax = el(3, 1, 1);
        assert_eq!(g.order_multiset(&[a, x]).as_slice(), &[4, 6]);
        assert_eq!(g.order_multiset(&[a2, x]).as_slice(), &[3, 4]);
        assert_eq!(g.order_multiset(&[ax, x]).as_slice(), &[4, 4]);
        assert_eq!(g.order_multiset(&[x, a]), g.order_multiset(&[a, x]));
        assert_eq!(g.order_multiset(&[a, x]).to_string(), "{{4,6}}");
    }

    #[test]
    fn closure_is_idempotent_and_contains_input() {
        let g = dc(4);
        let s = [el(4, 2, 0), el(4, 1, 1)];
        let c = g.closure(&s);
        assert!(s.iter().all(|e| c.contains(e)));
        assert_eq!(g.closure(&c), c);
    }

    #[test]
    fn materialized_matches_closed_form() {
        let g = dc(5);
        let t = g.materialized();
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(g.mul(a, b), t.mul(a, b));
            }
        }
    }

    #[test]
    fn sampled_axiom_check_for_large_orders() {
        let g = dc(60);
        assert_eq!(g.order(), 240);
        assert!(g.check_axioms().is_ok());
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let g = dc(3);
        let a = g.generator("a").unwrap();
        assert_eq!(g.pow(a, -1), g.inv(a));
        assert_eq!(g.pow(a, 6), g.identity());
        assert_eq!(g.pow(a, 7), a);
    }
}
