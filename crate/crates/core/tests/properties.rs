mod common;

use cayley_equiv::classify::enumerate_generating_sequences;
use cayley_equiv::groups::DicyclicElement;
use cayley_equiv::iso::automorphisms;
use cayley_equiv::presentation::{dicyclic_presentation, dihedral_presentation, DEFAULT_MAX_COSETS};
use cayley_equiv::theory::{generates_pair_ax, generates_pair_xx, order_constraint_ax};
use cayley_equiv::{
    brute_force_iso, directed_iso, parse_presentation, todd_coxeter, undirected_iso, CayleyGraph,
    FiniteGroup,
};
use common::*;
use proptest::prelude::*;

#[test]
fn builtin_groups_satisfy_axioms() {
    for d in small_groups() {
        group(&d).check_axioms().unwrap_or_else(|e| panic!("{d}: {e}"));
    }
    for n in 5..=12 {
        FiniteGroup::dicyclic(n).unwrap().check_axioms().unwrap();
    }
}

#[test]
fn dicyclic_matches_matrix_representation() {
    for n in 2..=9 {
        let g = FiniteGroup::dicyclic(n).unwrap();
        let m: Vec<Mat> = (0..g.order())
            .map(|id| {
                let e = DicyclicElement::from_id(n, id);
                dicyclic_matrix(n, e.i, e.j)
            })
            .collect();
        for p in 0..g.order() {
            for q in 0..g.order() {
                assert!(mat_close(&mat_mul(&m[p], &m[q]), &m[g.mul(p, q)]), "n={n} {p}*{q}");
            }
        }
    }
}

#[test]
fn dicyclic_structure() {
    for n in 2..=12 {
        let g = FiniteGroup::dicyclic(n).unwrap();
        let a = g.parse_element("a").unwrap();
        let x = g.parse_element("x").unwrap();
        assert_eq!(g.element_order(a), 2 * n);
        assert_eq!(g.mul(x, x), g.pow(a, n as i64));
        assert_eq!(g.mul(g.inv(x), g.mul(a, x)), g.inv(a));
        let cyclic_part = (0..g.order())
            .filter(|&id| DicyclicElement::from_id(n, id).in_cyclic_part())
            .count();
        assert_eq!(cyclic_part, 2 * n);
        for id in 0..g.order() {
            if !DicyclicElement::from_id(n, id).in_cyclic_part() {
                assert_eq!(g.element_order(id), 4);
            }
        }
    }
}

#[test]
fn dicyclic_generation_criteria_exhaustive() {
    for n in 2..=12usize {
        let g = FiniteGroup::dicyclic(n).unwrap();
        for k in 0..2 * n {
            for m in 0..2 * n {
                let ak = DicyclicElement::new(n, k as i64, 0).id();
                let akx = DicyclicElement::new(n, k as i64, 1).id();
                let amx = DicyclicElement::new(n, m as i64, 1).id();
                let xx = g.closure_size(&[akx, amx]) == g.order();
                assert_eq!(xx, generates_pair_xx(n, k as i64, m as i64), "n={n} k={k} m={m}");
                assert_eq!(xx, gcd(n, k.abs_diff(m)) == 1);
                let ax = g.closure_size(&[ak, amx]) == g.order();
                assert_eq!(ax, generates_pair_ax(n, k as i64, m as i64), "n={n} k={k} m={m}");
                if ax {
                    let o = g.element_order(ak);
                    assert!(o == 2 * n || (n % 2 == 1 && o == n));
                    assert_eq!(order_constraint_ax(n, k as i64), Some(o));
                } else {
                    assert_eq!(order_constraint_ax(n, k as i64), None);
                }
            }
        }
    }
}

#[test]
fn dihedral_three_matches_symmetric_three() {
    let d3 = FiniteGroup::dihedral(3).unwrap();
    let s3 = group("perm:3:(1,2,3),(1,2)");
    assert_eq!(s3.order(), 6);
    let w = directed_iso(&graph(&d3, "a,x"), &graph(&s3, "(1,2,3),(1,2)")).unwrap();
    assert!(w.is_some());
}

#[test]
fn todd_coxeter_matches_concrete_orders() {
    for n in 2..=8 {
        let tc = todd_coxeter(&dicyclic_presentation(n).unwrap(), DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(tc.group().unwrap().order(), 4 * n);
    }
    for n in 3..=8 {
        let tc = todd_coxeter(&dihedral_presentation(n).unwrap(), DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(tc.group().unwrap().order(), 2 * n);
    }
}

#[test]
fn automorphism_count_equals_order() {
    let mut descriptors = small_groups();
    descriptors.extend(
        ["dicyclic:5", "dicyclic:6", "dihedral:9", "dihedral:12", "perm:4:(1,2),(1,2,3,4)", "cyclic:24"]
            .map(String::from),
    );
    for d in descriptors {
        let g = group(&d);
        if g.order() > 24 {
            continue;
        }
        let seqs = enumerate_generating_sequences(&g, if g.order() == 1 { 1 } else { 2 }, false).unwrap();
        for s in seqs.iter().step_by(7) {
            let cg = CayleyGraph::build(&g, s);
            let autos = automorphisms(&cg).unwrap();
            assert_eq!(autos.len(), g.order(), "{d} {}", s.display(&g));
            assert!(autos.iter().all(|w| w.validate_directed(&cg, &cg)));
        }
    }
}

#[test]
fn dicyclic_automorphisms_induce_cayley_isomorphisms() {
    for n in 2..=6usize {
        let g = FiniteGroup::dicyclic(n).unwrap();
        let seqs = enumerate_generating_sequences(&g, 2, true).unwrap();
        for t in (1..2 * n).filter(|&t| gcd(t, 2 * n) == 1) {
            for m in 0..2 * n {
                // a^i x^j -> a^(ti) (a^m x)^j
                let image = |id: usize| {
                    let e = DicyclicElement::from_id(n, id);
                    let ai = DicyclicElement::new(n, (t * e.i) as i64, 0).id();
                    if e.j == 0 {
                        ai
                    } else {
                        g.mul(ai, DicyclicElement::new(n, m as i64, 1).id())
                    }
                };
                for s in seqs.iter().step_by(5) {
                    let mapped: Vec<usize> = s.elements.iter().map(|&e| image(e)).collect();
                    let w = directed_iso(&graph_ids(&g, &s.elements), &graph_ids(&g, &mapped)).unwrap();
                    assert!(w.is_some(), "n={n} t={t} m={m}");
                }
            }
        }
    }
}

#[test]
fn undirected_view_merges_parity_classes() {
    let g = FiniteGroup::dicyclic(3).unwrap();
    let a = graph(&g, "a*x,x").undirected_view();
    let b = graph(&g, "a^2*x,x").undirected_view();
    let w = undirected_iso(&a, &b).unwrap().unwrap();
    assert!(w.validate_undirected(&a, &b));
    assert!(directed_iso(&graph(&g, "a*x,x"), &graph(&g, "a^2*x,x")).unwrap().is_none());
}

fn dicyclic_pair() -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>)> {
    (2usize..=4).prop_flat_map(|n| {
        let o = 4 * n;
        (Just(n), prop::collection::vec(0..o, 2), prop::collection::vec(0..o, 2))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn closure_is_a_subgroup(n in 2usize..=9, picks in prop::collection::vec(0usize..1000, 1..4)) {
        let g = FiniteGroup::dicyclic(n).unwrap();
        let set: Vec<usize> = picks.iter().map(|p| p % g.order()).collect();
        let h = g.closure(&set);
        prop_assert!(set.iter().all(|s| h.contains(s)));
        prop_assert!(h.contains(&g.identity()));
        prop_assert_eq!(g.order() % h.len(), 0);
        for &p in &h {
            for &q in &h {
                prop_assert!(h.contains(&g.mul(p, q)));
            }
        }
    }

    #[test]
    fn connected_iff_generating(idx in 0usize..1000, picks in prop::collection::vec(0usize..1000, 1..4)) {
        let groups = small_groups();
        let g = group(&groups[idx % groups.len()]);
        let set: Vec<usize> = picks.iter().map(|p| p % g.order()).collect();
        let cg = graph_ids(&g, &set);
        prop_assert_eq!(cg.is_connected(), g.is_generating(&set));
    }

    #[test]
    fn cycle_lengths_are_element_orders(idx in 0usize..1000, picks in prop::collection::vec(0usize..1000, 1..4)) {
        let groups = small_groups();
        let g = group(&groups[idx % groups.len()]);
        let set: Vec<usize> = picks.iter().map(|p| p % g.order()).collect();
        let cg = graph_ids(&g, &set);
        for l in 0..cg.label_count() {
            let o = g.element_order(cg.labels()[l]);
            let cycles = cg.cycle_decomposition(l);
            prop_assert_eq!(cycles.len(), g.order() / o);
            prop_assert!(cycles.iter().all(|c| c.len() == o));
        }
    }

    #[test]
    fn directed_iso_agrees_with_brute_force((n, s, t) in dicyclic_pair()) {
        let g = FiniteGroup::dicyclic(n).unwrap();
        prop_assume!(g.is_generating(&s) && g.is_generating(&t));
        let (a, b) = (graph_ids(&g, &s), graph_ids(&g, &t));
        let fast = directed_iso(&a, &b).unwrap();
        let slow = brute_force_iso(&a, &b).unwrap();
        prop_assert_eq!(fast.is_some(), slow.is_some());
        if let Some(w) = fast {
            prop_assert!(w.validate_directed(&a, &b));
        }
        if let Some(w) = slow {
            prop_assert!(w.validate_directed(&a, &b));
        }
    }

    #[test]
    fn isomorphism_is_an_equivalence(n in 2usize..=5, s in prop::collection::vec(0usize..1000, 3)) {
        let g = FiniteGroup::dicyclic(n).unwrap();
        let seqs = enumerate_generating_sequences(&g, 2, false).unwrap();
        let pick = |i: usize| graph_ids(&g, &seqs[s[i] % seqs.len()].elements);
        let (a, b, c) = (pick(0), pick(1), pick(2));
        prop_assert!(directed_iso(&a, &a).unwrap().is_some());
        let ab = directed_iso(&a, &b).unwrap();
        let ba = directed_iso(&b, &a).unwrap();
        prop_assert_eq!(ab.is_some(), ba.is_some());
        if let Some(w) = &ab {
            prop_assert!(w.inverse().validate_directed(&b, &a));
            if let Some(v) = directed_iso(&b, &c).unwrap() {
                prop_assert!(w.compose(&v).validate_directed(&a, &c));
            }
        }
    }

    #[test]
    fn presentation_display_round_trips(
        exps in prop::collection::vec((0usize..3, -4i64..=4), 1..6),
        n in 2usize..9,
    ) {
        let word: Vec<String> = exps
            .iter()
            .filter(|(_, e)| *e != 0)
            .map(|(g, e)| format!("{}^{}", ["a", "b", "c"][*g], e))
            .collect();
        let rel = if word.is_empty() { "a".to_string() } else { word.join("*") };
        let text = format!("<a,b,c | a^{n}, {rel}, b*c=c*b>");
        let p = parse_presentation(&text).unwrap();
        let again = parse_presentation(&p.to_string()).unwrap();
        prop_assert_eq!(&p, &again);
        prop_assert_eq!(p.to_string(), again.to_string());
    }

    #[test]
    fn element_names_round_trip(idx in 0usize..1000) {
        let groups = small_groups();
        let g = group(&groups[idx % groups.len()]);
        for id in 0..g.order() {
            prop_assert_eq!(g.parse_element(g.name(id)).unwrap(), id);
        }
    }
}
