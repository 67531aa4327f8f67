//! Partition generating sequences into equivalence classes of Cayley graphs.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cayley::{CayleyGraph, UndirectedLabeledGraph};
use crate::error::{Error, Result};
use crate::groups::{ElementId, FiniteGroup, GeneratingSequence, OrderMultiset};
use crate::iso::{directed_iso, undirected_iso};

/// Longest sequence length the enumerator accepts.
pub const MAX_LENGTH: usize = 4;
/// Default bound on the group order; `CAYLEY_CLASSIFY_MAX_ORDER` overrides it in the CLI.
pub const DEFAULT_MAX_ORDER: usize = 512;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Directed,
    Undirected,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Directed => "directed",
            Mode::Undirected => "undirected",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "directed" => Ok(Mode::Directed),
            "undirected" => Ok(Mode::Undirected),
            other => Err(Error::InvalidParameter(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    pub mode: Mode,
    pub minimal_only: bool,
    /// Worker threads for per-bucket comparisons; results do not depend on it.
    pub jobs: usize,
    /// Pre-assign whole orbits under the automorphisms `a -> a^t, x -> a^m x`
    /// of a dicyclic group. Ignored for other groups.
    pub orbit_collapse: bool,
    pub max_order: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            mode: Mode::Directed,
            minimal_only: true,
            jobs: 1,
            orbit_collapse: false,
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSummary {
    pub representative: Vec<String>,
    pub order_multiset: OrderMultiset,
    pub size: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub group: String,
    pub length: usize,
    pub mode: Mode,
    pub minimal_only: bool,
    pub classes: Vec<ClassSummary>,
    pub total: usize,
    #[serde(skip)]
    pub wall_time: Duration,
    #[serde(skip)]
    representatives: Vec<Vec<ElementId>>,
    #[serde(skip)]
    assignments: HashMap<Vec<ElementId>, usize>,
}

impl ClassificationReport {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Index of the class containing `seq`, if it was enumerated.
    pub fn class_of(&self, seq: &[ElementId]) -> Option<usize> {
        self.assignments.get(seq).copied()
    }

    pub fn representative_ids(&self, class: usize) -> &[ElementId] {
        &self.representatives[class]
    }

    /// Order multisets of all classes, with multiplicity, sorted.
    pub fn multiset_profile(&self) -> Vec<OrderMultiset> {
        let mut v: Vec<OrderMultiset> = self.classes.iter().map(|c| c.order_multiset.clone()).collect();
        v.sort();
        v
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Plain-text table built from the same fields as the JSON.
    pub fn to_table(&self) -> String {
        let mut out = format!(
            "group {}  length {}  mode {}  minimal {}\n",
            self.group, self.length, self.mode, self.minimal_only
        );
        for (i, c) in self.classes.iter().enumerate() {
            out.push_str(&format!(
                "{:>3}  ({})  {}  size {}\n",
                i + 1,
                c.representative.join(","),
                c.order_multiset,
                c.size
            ));
        }
        out.push_str(&format!("{} classes, {} sequences\n", self.classes.len(), self.total));
        out
    }
}

/// True iff the report's class count and multiset profile match `expected`.
pub fn classify_summary_equal(report: &ClassificationReport, expected: &[OrderMultiset]) -> bool {
    let mut exp = expected.to_vec();
    exp.sort();
    report.multiset_profile() == exp
}

fn check_length(length: usize) -> Result<()> {
    if (1..=MAX_LENGTH).contains(&length) {
        Ok(())
    } else {
        Err(Error::ScaleGuard(format!(
            "sequence length must be in 1..={MAX_LENGTH}, got {length}"
        )))
    }
}

fn enumerate_ids(group: &FiniteGroup, length: usize, minimal_only: bool) -> Vec<Vec<ElementId>> {
    let n = group.order();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(length);
    fn rec(
        group: &FiniteGroup,
        n: usize,
        length: usize,
        minimal_only: bool,
        cur: &mut Vec<ElementId>,
        out: &mut Vec<Vec<ElementId>>,
    ) {
        if cur.len() == length {
            let keep = if minimal_only {
                group.is_minimal_generating(cur)
            } else {
                group.is_generating(cur)
            };
            if keep {
                out.push(cur.clone());
            }
            return;
        }
        for g in 0..n {
            if !cur.contains(&g) {
                cur.push(g);
                rec(group, n, length, minimal_only, cur, out);
                cur.pop();
            }
        }
    }
    rec(group, n, length, minimal_only, &mut cur, &mut out);
    out
}

/// All ordered `length`-tuples of pairwise-distinct elements that generate
/// `group` (and are minimal, when asked), in lexicographic id order.
pub fn enumerate_generating_sequences(
    group: &FiniteGroup,
    length: usize,
    minimal_only: bool,
) -> Result<Vec<GeneratingSequence>> {
    check_length(length)?;
    let g = group.materialized();
    enumerate_ids(&g, length, minimal_only)
        .into_iter()
        .map(|s| GeneratingSequence::new(group, s))
        .collect()
}

enum Graph {
    Directed(CayleyGraph),
    Undirected(UndirectedLabeledGraph),
}

impl Graph {
    fn new(group: &FiniteGroup, seq: &[ElementId], mode: Mode) -> Self {
        let gamma = CayleyGraph::from_elements(group, seq);
        match mode {
            Mode::Directed => Graph::Directed(gamma),
            Mode::Undirected => Graph::Undirected(gamma.undirected_view()),
        }
    }

    fn equivalent(&self, other: &Graph) -> Result<bool> {
        Ok(match (self, other) {
            (Graph::Directed(a), Graph::Directed(b)) => directed_iso(a, b)?.is_some(),
            (Graph::Undirected(a), Graph::Undirected(b)) => undirected_iso(a, b)?.is_some(),
            _ => unreachable!("one mode per classification"),
        })
    }
}

/// The automorphisms `a^i x^j -> a^(t i + j m) x^j` for every unit `t` mod 2n
/// and every `m`.
type BucketClasses = Vec<(usize, Vec<usize>)>;
type ElementMap = Box<dyn Fn(ElementId) -> ElementId + Send + Sync>;

fn dicyclic_automorphisms(n: usize) -> Vec<ElementMap> {
    let m2 = 2 * n;
    let mut out: Vec<ElementMap> = Vec::new();
    for t in (1..m2).filter(|&t| gcd(t, m2) == 1) {
        for m in 0..m2 {
            out.push(Box::new(move |id: ElementId| {
                let (i, j) = (id % m2, id / m2);
                j * m2 + (t * i + j * m) % m2
            }));
        }
    }
    out
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Classes of one order-multiset bucket: `(representative index, member indices)`.
fn classify_bucket(
    group: &FiniteGroup,
    seqs: &[Vec<ElementId>],
    members: &[usize],
    mode: Mode,
    orbit: Option<&[ElementMap]>,
) -> Result<Vec<(usize, Vec<usize>)>> {
    let mut classes: Vec<(usize, Vec<usize>, Graph)> = Vec::new();
    let mut pre_assigned: HashMap<usize, usize> = HashMap::new();
    let position: HashMap<&[ElementId], usize> = match orbit {
        Some(_) => members.iter().map(|&i| (seqs[i].as_slice(), i)).collect(),
        None => HashMap::new(),
    };
    for &i in members {
        if let Some(&c) = pre_assigned.get(&i) {
            classes[c].1.push(i);
            continue;
        }
        let gamma = Graph::new(group, &seqs[i], mode);
        let mut found = None;
        for (c, (_, _, rep)) in classes.iter().enumerate() {
            if gamma.equivalent(rep)? {
                found = Some(c);
                break;
            }
        }
        let c = match found {
            Some(c) => {
                classes[c].1.push(i);
                c
            }
            None => {
                classes.push((i, vec![i], gamma));
                classes.len() - 1
            }
        };
        if let Some(autos) = orbit {
            for phi in autos {
                let image: Vec<ElementId> = seqs[i].iter().map(|&e| phi(e)).collect();
                if let Some(&j) = position.get(image.as_slice()) {
                    if j > i {
                        pre_assigned.entry(j).or_insert(c);
                    }
                }
            }
        }
    }
    Ok(classes.into_iter().map(|(r, m, _)| (r, m)).collect())
}

/// Partition the generating sequences of the given length into classes.
///
/// Sequences are bucketed by order multiset first (equivalent sequences share
/// it) and each sequence is compared only with the representatives already in
/// its bucket.
pub fn classify(
    group: &FiniteGroup,
    length: usize,
    options: &ClassifyOptions,
) -> Result<ClassificationReport> {
    let start = Instant::now();
    check_length(length)?;
    if group.order() > options.max_order {
        return Err(Error::ScaleGuard(format!(
            "group order {} exceeds the classification limit {}",
            group.order(),
            options.max_order
        )));
    }
    let g = group.materialized();
    let seqs = enumerate_ids(&g, length, options.minimal_only);
    let multisets: Vec<OrderMultiset> = seqs.iter().map(|s| g.order_multiset(s)).collect();
    let mut buckets: BTreeMap<&OrderMultiset, Vec<usize>> = BTreeMap::new();
    for (i, m) in multisets.iter().enumerate() {
        buckets.entry(m).or_default().push(i);
    }
    let autos = match (options.orbit_collapse, g.dicyclic_parameter()) {
        (true, Some(n)) => Some(dicyclic_automorphisms(n)),
        _ => None,
    };
    let bucket_list: Vec<&Vec<usize>> = buckets.values().collect();
    let run = |members: &&Vec<usize>| {
        classify_bucket(&g, &seqs, members, options.mode, autos.as_deref())
    };
    let per_bucket: Vec<Result<BucketClasses>> = if options.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
        pool.install(|| bucket_list.par_iter().map(run).collect())
    } else {
        bucket_list.iter().map(run).collect()
    };

    let mut classes = Vec::new();
    let mut representatives = Vec::new();
    let mut assignments = HashMap::with_capacity(seqs.len());
    // buckets iterate in multiset order and classes within a bucket in
    // first-seen order, which is the report order
    for bucket in per_bucket {
        for (rep, members) in bucket? {
            let idx = classes.len();
            for &m in &members {
                assignments.insert(seqs[m].clone(), idx);
            }
            classes.push(ClassSummary {
                representative: seqs[rep].iter().map(|&e| g.name(e).to_string()).collect(),
                order_multiset: multisets[rep].clone(),
                size: members.len(),
            });
            representatives.push(seqs[rep].clone());
        }
    }
    Ok(ClassificationReport {
        group: group.descriptor().to_string(),
        length,
        mode: options.mode,
        minimal_only: options.minimal_only,
        total: seqs.len(),
        classes,
        wall_time: start.elapsed(),
        representatives,
        assignments,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn om(v: &[usize]) -> OrderMultiset {
        OrderMultiset::from(v)
    }

    #[test]
    fn dc12_has_four_classes() {
        let g = FiniteGroup::dicyclic(3).unwrap();
        let r = classify(&g, 2, &ClassifyOptions::default()).unwrap();
        assert!(classify_summary_equal(
            &r,
            &[om(&[6, 4]), om(&[4, 4]), om(&[4, 4]), om(&[3, 4])]
        ));
        assert!(!classify_summary_equal(&r, &[om(&[6, 4]), om(&[4, 4])]));
        assert_eq!(r.classes.iter().map(|c| c.size).sum::<usize>(), r.total);
    }

    #[test]
    fn orbit_collapse_gives_same_profile() {
        let g = FiniteGroup::dicyclic(5).unwrap();
        let plain = classify(&g, 2, &ClassifyOptions::default()).unwrap();
        let collapsed = classify(
            &g,
            2,
            &ClassifyOptions {
                orbit_collapse: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(plain.to_json(), collapsed.to_json());
    }

    #[test]
    fn symmetric_group_s3() {
        let g = FiniteGroup::from_descriptor("perm:3:(1,2);(1,2,3)").unwrap();
        let r = classify(&g, 2, &ClassifyOptions::default()).unwrap();
        assert!(classify_summary_equal(&r, &[om(&[2, 3]), om(&[2, 2])]));
    }

    #[test]
    fn guards() {
        let g = FiniteGroup::dicyclic(3).unwrap();
        assert!(matches!(
            enumerate_generating_sequences(&g, 5, true),
            Err(Error::ScaleGuard(_))
        ));
        assert!(matches!(
            enumerate_generating_sequences(&g, 0, true),
            Err(Error::ScaleGuard(_))
        ));
        let opts = ClassifyOptions {
            max_order: 8,
            ..Default::default()
        };
        assert!(matches!(classify(&g, 2, &opts), Err(Error::ScaleGuard(_))));
    }

    #[test]
    fn length_one_minimal_iff_cyclic() {
        let c6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(enumerate_generating_sequences(&c6, 1, true).unwrap().len(), 2);
        let q8 = FiniteGroup::dicyclic(2).unwrap();
        assert!(enumerate_generating_sequences(&q8, 1, true).unwrap().is_empty());
    }

    #[test]
    fn empty_expected_matches_empty_report() {
        let g = FiniteGroup::dicyclic(4).unwrap();
        let r = classify(&g, 3, &ClassifyOptions::default()).unwrap();
        assert_eq!(r.class_count(), 0);
        assert!(classify_summary_equal(&r, &[]));
    }

    #[test]
    fn report_json_schema() {
        let g = FiniteGroup::dicyclic(2).unwrap();
        let r = classify(&g, 2, &ClassifyOptions::default()).unwrap();
        let json = r.to_json();
        let pos: Vec<usize> = ["\"group\"", "\"length\"", "\"mode\"", "\"minimal_only\"", "\"classes\"", "\"total\""]
            .iter()
            .map(|k| json.find(k).unwrap())
            .collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["mode"], "directed");
        assert!(v["classes"][0]["order_multiset"].is_array());
    }
}
