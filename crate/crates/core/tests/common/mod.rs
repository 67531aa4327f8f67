#![allow(dead_code)]

use cayley_equiv::{CayleyGraph, FiniteGroup};

pub fn group(desc: &str) -> FiniteGroup {
    FiniteGroup::from_descriptor(desc).unwrap()
}

pub fn graph(g: &FiniteGroup, seq: &str) -> CayleyGraph {
    CayleyGraph::build(g, &g.parse_sequence(seq).unwrap())
}

pub fn graph_ids(g: &FiniteGroup, seq: &[usize]) -> CayleyGraph {
    CayleyGraph::from_elements(g, seq)
}

/// Every group of order at most 16 the built-in families produce, one
/// descriptor per construction.
pub fn small_groups() -> Vec<String> {
    let mut v: Vec<String> = (1..=16).map(|n| format!("cyclic:{n}")).collect();
    v.extend((3..=8).map(|n| format!("dihedral:{n}")));
    v.extend((2..=4).map(|n| format!("dicyclic:{n}")));
    v.extend(
        [
            "product:cyclic:2,cyclic:2",
            "product:cyclic:2,cyclic:4",
            "product:cyclic:2,cyclic:6",
            "product:cyclic:2,cyclic:8",
            "product:cyclic:4,cyclic:4",
            "product:cyclic:2,product:cyclic:2,cyclic:2",
            "product:cyclic:2,product:cyclic:2,cyclic:4",
            "product:cyclic:2,dihedral:3",
            "product:cyclic:2,dihedral:4",
            "product:cyclic:2,dicyclic:2",
            "product:cyclic:2,product:cyclic:2,product:cyclic:2,cyclic:2",
            "perm:3:(1,2),(1,2,3)",
            "perm:4:(1,2,3),(2,3,4)",
        ]
        .map(String::from),
    );
    v
}

/// A 2x2 complex matrix `[[p, q], [r, s]]` as `(re, im)` pairs.
pub type Mat = [[(f64, f64); 2]; 2];

fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let mut m = [[(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            let (p, q) = (cmul(a[i][0], b[0][j]), cmul(a[i][1], b[1][j]));
            m[i][j] = (p.0 + q.0, p.1 + q.1);
        }
    }
    m
}

pub fn mat_close(a: &Mat, b: &Mat) -> bool {
    (0..2).all(|i| (0..2).all(|j| (a[i][j].0 - b[i][j].0).abs() < 1e-9 && (a[i][j].1 - b[i][j].1).abs() < 1e-9))
}

/// Faithful representation of `a^i x^j` in `DC_4n`: `a = diag(z, 1/z)` with
/// `z = exp(i pi / n)` and `x = [[0, -1], [1, 0]]`.
pub fn dicyclic_matrix(n: usize, i: usize, j: usize) -> Mat {
    let t = std::f64::consts::PI * i as f64 / n as f64;
    let a: Mat = [[(t.cos(), t.sin()), (0.0, 0.0)], [(0.0, 0.0), (t.cos(), -t.sin())]];
    if j == 0 {
        a
    } else {
        let x: Mat = [[(0.0, 0.0), (-1.0, 0.0)], [(1.0, 0.0), (0.0, 0.0)]];
        mat_mul(&a, &x)
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
