//! HLT coset enumeration over the trivial subgroup.
//!
//! Cosets are scanned in ascending order and relators in declaration order.
//! Coincidences are processed immediately, merging cosets with a union-find
//! whose representative is always the smaller coset.

use std::collections::VecDeque;

use super::Presentation;
use crate::error::Result;
use crate::groups::FiniteGroup;

/// Coset cap used when the caller has no expected order.
pub const DEFAULT_MAX_COSETS: usize = 65_536;

const UNDEFINED: usize = usize::MAX;

/// Outcome of an enumeration: the group, or a signal that the cap was hit.
#[derive(Clone, Debug)]
pub enum Enumeration {
    Complete(FiniteGroup),
    Exceeded { cosets: usize },
}

impl Enumeration {
    pub fn group(self) -> Option<FiniteGroup> {
        match self {
            Enumeration::Complete(g) => Some(g),
            Enumeration::Exceeded { .. } => None,
        }
    }
}

/// Coset table with columns `2g` (generator `g`) and `2g + 1` (its inverse).
#[derive(Clone, Debug)]
pub struct CosetTable {
    columns: usize,
    rows: Vec<usize>,
    parent: Vec<usize>,
    max_cosets: usize,
}

struct Exceeded;

impl CosetTable {
    fn new(generators: usize, max_cosets: usize) -> Self {
        CosetTable {
            columns: 2 * generators,
            rows: vec![UNDEFINED; 2 * generators],
            parent: vec![0],
            max_cosets,
        }
    }

    pub fn allocated(&self) -> usize {
        self.parent.len()
    }

    pub fn is_live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    pub fn live_cosets(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.allocated()).filter(|&c| self.is_live(c))
    }

    /// `c · letter`, or `None` when undefined.
    pub fn get(&self, c: usize, col: usize) -> Option<usize> {
        let v = self.rows[c * self.columns + col];
        (v != UNDEFINED).then_some(v)
    }

    fn entry(&self, c: usize, col: usize) -> usize {
        self.rows[c * self.columns + col]
    }

    fn set(&mut self, c: usize, col: usize, d: usize) {
        self.rows[c * self.columns + col] = d;
    }

    fn define(&mut self, c: usize, col: usize) -> std::result::Result<(), Exceeded> {
        if self.allocated() >= self.max_cosets {
            return Err(Exceeded);
        }
        let d = self.allocated();
        self.parent.push(d);
        self.rows.extend(std::iter::repeat_n(UNDEFINED, self.columns));
        self.set(c, col, d);
        self.set(d, col ^ 1, c);
        Ok(())
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut k = c;
        while self.parent[k] != root {
            let next = self.parent[k];
            self.parent[k] = root;
            k = next;
        }
        root
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut VecDeque<usize>) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, drop) = (a.min(b), a.max(b));
        self.parent[drop] = keep;
        queue.push_back(drop);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = VecDeque::new();
        self.merge(a, b, &mut queue);
        while let Some(dead) = queue.pop_front() {
            for col in 0..self.columns {
                let target = self.entry(dead, col);
                if target == UNDEFINED {
                    continue;
                }
                if self.entry(target, col ^ 1) == dead {
                    self.set(target, col ^ 1, UNDEFINED);
                }
                let (r, s) = (self.rep(dead), self.rep(target));
                let rs = self.entry(r, col);
                let sr = self.entry(s, col ^ 1);
                if rs != UNDEFINED {
                    self.merge(s, rs, &mut queue);
                } else if sr != UNDEFINED {
                    self.merge(r, sr, &mut queue);
                } else {
                    self.set(r, col, s);
                    self.set(s, col ^ 1, r);
                }
            }
        }
    }

    /// Trace `word` from `c` in both directions, defining cosets to close the gap.
    fn scan_and_fill(&mut self, c: usize, word: &[usize]) -> std::result::Result<(), Exceeded> {
        if word.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, word.len() as isize - 1);
        loop {
            while (i as isize) <= j {
                let next = self.entry(f, word[i]);
                if next == UNDEFINED {
                    break;
                }
                f = next;
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize {
                let next = self.entry(b, word[j as usize] ^ 1);
                if next == UNDEFINED {
                    break;
                }
                b = next;
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                self.set(f, word[i], b);
                self.set(b, word[i] ^ 1, f);
                return Ok(());
            }
            self.define(f, word[i])?;
        }
    }

    /// Closed: no undefined entry on a live coset.
    pub fn is_closed(&self) -> bool {
        self.live_cosets()
            .all(|c| (0..self.columns).all(|col| self.get(c, col).is_some()))
    }

    /// Every relator traces from every live coset back to itself.
    pub fn relators_hold(&self, relators: &[Vec<usize>]) -> bool {
        self.live_cosets().all(|c| {
            relators.iter().all(|r| {
                let mut d = Some(c);
                for &col in r {
                    d = d.and_then(|d| self.get(d, col));
                }
                d == Some(c)
            })
        })
    }
}

/// Enumerate the cosets of the trivial subgroup of `⟨P⟩`.
///
/// On success the live cosets become the elements of a table-backed group;
/// coset 0 is the identity and the presentation's generators are registered
/// under their names, so element expressions like `u^3*v` parse directly.
pub fn todd_coxeter(pres: &Presentation, max_cosets: usize) -> Result<Enumeration> {
    let gens = pres.generator_names.len();
    let relators: Vec<Vec<usize>> = pres
        .relators
        .iter()
        .map(|r| r.cyclically_reduced_letters())
        .filter(|r| !r.is_empty())
        .collect();
    let mut table = CosetTable::new(gens, max_cosets.max(1));
    let mut c = 0;
    while c < table.allocated() {
        if table.is_live(c) {
            let mut ok = true;
            for r in &relators {
                if table.scan_and_fill(c, r).is_err() {
                    ok = false;
                    break;
                }
                if !table.is_live(c) {
                    break;
                }
            }
            if !ok {
                return Ok(Enumeration::Exceeded {
                    cosets: table.allocated(),
                });
            }
            if table.is_live(c) {
                for col in 0..table.columns {
                    if table.entry(c, col) == UNDEFINED && table.define(c, col).is_err() {
                        return Ok(Enumeration::Exceeded {
                            cosets: table.allocated(),
                        });
                    }
                }
            }
        }
        c += 1;
    }
    debug_assert!(table.is_closed());
    debug_assert!(table.relators_hold(&relators));
    Ok(Enumeration::Complete(realize(pres, &table)?))
}

/// Turn a closed table into a group. Elements are numbered in breadth-first
/// order from coset 0 and named by shortest words.
fn realize(pres: &Presentation, table: &CosetTable) -> Result<FiniteGroup> {
    let cols = table.columns;
    let mut number = vec![UNDEFINED; table.allocated()];
    let mut order_list = vec![0usize];
    // (parent element, column) of the BFS tree edge reaching each element
    let mut tree: Vec<Option<(usize, usize)>> = vec![None];
    number[0] = 0;
    let mut head = 0;
    while head < order_list.len() {
        let c = order_list[head];
        for col in 0..cols {
            let d = table.entry(c, col);
            if number[d] == UNDEFINED {
                number[d] = order_list.len();
                order_list.push(d);
                tree.push(Some((head, col)));
            }
        }
        head += 1;
    }
    let order = order_list.len();

    // right[h][g] = g · h: the action of element h's word on every coset
    let mut right: Vec<Vec<u32>> = Vec::with_capacity(order);
    right.push((0..order as u32).collect());
    for h in 1..order {
        let (p, col) = tree[h].expect("non-root has a tree edge");
        let prev = &right[p];
        let row: Vec<u32> = (0..order)
            .map(|g| number[table.entry(order_list[prev[g] as usize], col)] as u32)
            .collect();
        right.push(row);
    }
    let mut mul = vec![0u32; order * order];
    for g in 0..order {
        for h in 0..order {
            mul[g * order + h] = right[h][g];
        }
    }

    let mut words: Vec<Vec<(usize, i64)>> = vec![Vec::new(); order];
    for h in 1..order {
        let (p, col) = tree[h].unwrap();
        let mut w = words[p].clone();
        let (gen, step) = (col / 2, if col % 2 == 0 { 1 } else { -1 });
        match w.last_mut() {
            Some((g, e)) if *g == gen => *e += step,
            _ => w.push((gen, step)),
        }
        words[h] = w;
    }
    let names: Vec<String> = words
        .iter()
        .map(|w| {
            super::Word::from_pairs(w.iter().copied())
                .display(&pres.generator_names)
                .to_string()
        })
        .collect();
    let generators = pres
        .generator_names
        .iter()
        .enumerate()
        .map(|(i, name)| (name.clone(), number[table.entry(0, 2 * i)]))
        .collect();
    FiniteGroup::from_table(order, mul, names, generators, format!("fp:{}", pres.descriptor))
}
