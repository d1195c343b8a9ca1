//! Dense degree-by-degree linear algebra, used to cross-check the Gröbner code.
//! Standard grading only.

use crate::linalg::{kernel, rank, Subspace, Vector};
use crate::ring::{Mono, Polynomial, RingRef};

fn vector(p: &Polynomial, basis: &[Mono]) -> Vector {
    p.coeff_vector(basis).expect("polynomial of the basis degree")
}

/// Span of `{m·g : deg(m·g) = e}` inside `S_e`.
pub fn degree_span(r: &RingRef, gens: &[Polynomial], e: i64) -> Subspace {
    let basis = r.monomials_of_degree(&[e]);
    let mut rows = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let dg = g.degree()[0];
        if dg > e {
            continue;
        }
        for m in r.monomials_of_degree(&[e - dg]) {
            rows.push(vector(&g.mul(&r.monomial(m)), &basis));
        }
    }
    Subspace::span(r.field(), basis.len(), rows)
}

pub fn member(r: &RingRef, gens: &[Polynomial], p: &Polynomial) -> bool {
    p.homogeneous_components()
        .iter()
        .all(|(d, c)| degree_span(r, gens, d[0]).contains(&vector(c, &r.monomials_of_degree(d))))
}

pub fn hilbert(r: &RingRef, gens: &[Polynomial], e: i64) -> usize {
    r.monomials_of_degree(&[e]).len() - degree_span(r, gens, e).dim()
}

pub fn is_syzygy(r: &RingRef, gens: &[Polynomial], s: &[Polynomial]) -> bool {
    s.iter().zip(gens).fold(r.zero(), |acc, (a, g)| acc.add(&a.mul(g))).is_zero()
}

/// Kernel dimension of `(c_i) ↦ Σ c_i g_i` on `⊕ S_{e − deg g_i}`, and the rank of
/// the degree-`e` part of the module generated by `syz`.
pub fn syzygy_check(r: &RingRef, gens: &[Polynomial], syz: &[Vec<Polynomial>], e: i64) -> Option<(usize, usize)> {
    let degs: Vec<i64> = gens.iter().map(|g| g.degree()[0]).collect();
    let blocks: Vec<Vec<Mono>> = degs.iter().map(|&d| if d <= e { r.monomials_of_degree(&[e - d]) } else { vec![] }).collect();
    let width: usize = blocks.iter().map(Vec::len).sum();
    if width == 0 {
        return None;
    }
    let target = r.monomials_of_degree(&[e]);
    let mut cols: Vec<Vector> = Vec::new();
    for (g, b) in gens.iter().zip(&blocks) {
        for m in b {
            cols.push(vector(&g.mul(&r.monomial(m.clone())), &target));
        }
    }
    let rows: Vec<Vector> = (0..target.len()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let kdim = kernel(r.field(), &rows, width).len();
    let mut span = Vec::new();
    for s in syz {
        let Some(sd) = s.iter().zip(&degs).find(|(a, _)| !a.is_zero()).map(|(a, &d)| a.degree()[0] + d) else { continue };
        if sd > e {
            continue;
        }
        for m in r.monomials_of_degree(&[e - sd]) {
            let mut v = Vec::with_capacity(width);
            for (a, b) in s.iter().zip(&blocks) {
                if !b.is_empty() {
                    v.extend(vector(&a.mul(&r.monomial(m.clone())), b));
                }
            }
            span.push(v);
        }
    }
    Some((kdim, rank(&span, width)))
}
