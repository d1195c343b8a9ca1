//! Dense per-degree linear algebra over ℚ, written separately from the library's
//! Gröbner and linear-algebra code so it can serve as an oracle.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use satlim::ring::{Polynomial, RingRef};
use satlim::scalar::Scalar;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn scalar(x: &Q) -> Scalar {
    Scalar::Q(x.clone())
}

/// All exponent vectors of total degree `e` in `n` variables.
pub fn monos(n: usize, e: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if e == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for k in (0..=e).rev() {
        for mut rest in monos(n - 1, e - k) {
            rest.insert(0, k);
            out.push(rest);
        }
    }
    out
}

pub fn coeffs(p: &Polynomial, basis: &[Vec<u32>]) -> Vec<Q> {
    let mut v = vec![Q::zero(); basis.len()];
    for (m, c) in p.terms() {
        let i = basis.iter().position(|b| b == m).expect("monomial outside basis");
        v[i] = c.as_rational().expect("rational coefficient").clone();
    }
    v
}

pub fn poly(ring: &RingRef, basis: &[Vec<u32>], v: &[Q]) -> Polynomial {
    ring.from_terms(basis.iter().cloned().zip(v.iter().map(scalar)).filter(|(_, c)| !c.is_zero()).collect())
}

/// Reduced row echelon form; returns the nonzero rows and pivot columns.
pub fn rref(mut rows: Vec<Vec<Q>>, ncols: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Q::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let s = rows[r][j].clone() * f.clone();
                    rows[i][j] = rows[i][j].clone() - s;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(rows: &[Vec<Q>], ncols: usize) -> usize {
    rref(rows.to_vec(), ncols).1.len()
}

pub fn kernel(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let (r, piv) = rref(rows.to_vec(), ncols);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !piv.contains(c)) {
        let mut v = vec![Q::zero(); ncols];
        v[free] = Q::one();
        for (row, &p) in r.iter().zip(&piv) {
            v[p] = -row[free].clone();
        }
        out.push(v);
    }
    out
}

pub fn in_span(rows: &[Vec<Q>], v: &[Q], ncols: usize) -> bool {
    let mut all = rows.to_vec();
    all.push(v.to_vec());
    rank(rows, ncols) == rank(&all, ncols)
}

fn total(m: &[u32]) -> u32 {
    m.iter().sum()
}

/// Rows `m·g` spanning the degree-`e` part of the ideal generated by homogeneous `gens`
/// (standard grading).
pub fn degree_span(n: usize, gens: &[Polynomial], e: u32) -> Vec<Vec<Q>> {
    let basis = monos(n, e);
    let mut rows = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let dg = total(&g.terms()[0].0);
        if dg > e {
            continue;
        }
        for m in monos(n, e - dg) {
            let mut v = vec![Q::zero(); basis.len()];
            for (u, c) in g.terms() {
                let w: Vec<u32> = u.iter().zip(&m).map(|(a, b)| a + b).collect();
                let i = basis.iter().position(|b| *b == w).unwrap();
                v[i] = v[i].clone() + c.as_rational().unwrap().clone();
            }
            rows.push(v);
        }
    }
    rows
}

pub fn hilbert(n: usize, gens: &[Polynomial], e: u32) -> usize {
    let nb = monos(n, e).len();
    nb - rank(&degree_span(n, gens, e), nb)
}

pub fn member(n: usize, gens: &[Polynomial], p: &Polynomial) -> bool {
    if p.is_zero() {
        return true;
    }
    let e = total(&p.terms()[0].0);
    let basis = monos(n, e);
    in_span(&degree_span(n, gens, e), &coeffs(p, &basis), basis.len())
}

/// Basis of the degree-`e` part of the ideal generated by `gens`.
pub fn degree_basis(ring: &RingRef, gens: &[Polynomial], e: u32) -> Vec<Polynomial> {
    let basis = monos(ring.nvars(), e);
    let (r, _) = rref(degree_span(ring.nvars(), gens, e), basis.len());
    r.iter().map(|v| poly(ring, &basis, v)).collect()
}

/// Evaluation functional of degree `e` at `point` under the monomial pairing.
pub fn evaluation(point: &[Q], e: u32) -> Vec<Q> {
    monos(point.len(), e)
        .iter()
        .map(|m| m.iter().zip(point).fold(Q::one(), |acc, (&k, p)| acc * num_traits::pow(p.clone(), k as usize)))
        .collect()
}

fn factorial_weight(m: &[u32]) -> Q {
    let mut w = Q::one();
    for &k in m {
        for j in 1..=k {
            w = w * q(j as i64);
        }
    }
    w
}

/// A dual polynomial read as a functional under the differentiation pairing.
pub fn differentiation_functional(f: &Polynomial, e: u32) -> Vec<Q> {
    let basis = monos(f.ring().nvars(), e);
    coeffs(f, &basis).into_iter().zip(&basis).map(|(c, m)| c * factorial_weight(m)).collect()
}

/// Forms of degree `e` in `ring` killed by every functional.
pub fn perp(ring: &RingRef, e: u32, functionals: &[Vec<Q>]) -> Vec<Polynomial> {
    let basis = monos(ring.nvars(), e);
    kernel(functionals, basis.len()).iter().map(|v| poly(ring, &basis, v)).collect()
}

/// Random invertible integer matrix with small entries.
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> Vec<Vec<i64>> {
    loop {
        let m: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let rows: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        if rank(&rows, n) == n {
            return m;
        }
    }
}

/// Images of the variables under `a_i ↦ Σ_j m[i][j] a_j`.
pub fn linear_images(ring: &RingRef, m: &[Vec<i64>]) -> Vec<Polynomial> {
    m.iter()
        .map(|row| {
            row.iter().enumerate().fold(ring.zero(), |acc, (j, &c)| acc.add(&ring.var(j).scale(&scalar(&q(c)))))
        })
        .collect()
}

/// A `(1,4,4,…)` ideal in four variables whose saturation is the four points
/// `[1:c:0:0]`, `c ∈ {0,1,−1,2}`, with `I_2^⊥ = (I^sat_2)^⊥ + ⟨x^extra⟩`.
/// Also returns whether `(I^sat)²_2 ⊆ I`, decided by dense membership.
pub fn four_points(ring: &RingRef, extra: &[u32]) -> (Vec<Polynomial>, bool) {
    let pts: Vec<Vec<Q>> = [0, 1, -1, 2].iter().map(|&c| vec![q(1), q(c), q(0), q(0)]).collect();
    let mut gens = Vec::new();
    let b2 = monos(4, 2);
    let mut f2: Vec<Vec<Q>> = pts.iter().map(|p| evaluation(p, 2)).collect();
    f2.push(b2.iter().map(|m| if m.as_slice() == extra { q(1) } else { q(0) }).collect());
    gens.extend(perp(ring, 2, &f2));
    for e in 3..=4 {
        let fe: Vec<Vec<Q>> = pts.iter().map(|p| evaluation(p, e)).collect();
        gens.extend(perp(ring, e, &fe));
    }
    let f1: Vec<Vec<Q>> = pts.iter().map(|p| evaluation(p, 1)).collect();
    let sat1 = perp(ring, 1, &f1);
    let holds = sat1.iter().all(|a| sat1.iter().all(|b| member(4, &gens, &a.mul(b))));
    (gens, holds)
}

/// A `(1,5,5,…)` ideal in five variables whose saturation is five points on the line
/// `a0 = a1 = a2 = 0`, built from a cubic `c` in the differentiation flavour:
/// `I^⊥_2 = 𝕜[x3,x4]_2 + S_1∘c`, `I^⊥_3 = 𝕜[x3,x4]_3 + ⟨c⟩`, `I_e = I^sat_e` for `e ≥ 4`.
/// Returns the generators and the two containments `(I^sat)²_3 ⊆ I`, `α_i α_j ∘ c = 0`.
pub fn five_points_on_line(ring: &RingRef, dual: &RingRef, c: &Polynomial) -> (Vec<Polynomial>, bool) {
    let line = |e: u32| -> Vec<Polynomial> {
        monos(2, e).iter().map(|m| dual.monomial(vec![0, 0, 0, m[0], m[1]])).collect()
    };
    let mut gens = Vec::new();
    let mut p2 = line(2);
    p2.extend((0..5).map(|i| c.derivative(i)));
    let mut p3 = line(3);
    p3.push(c.clone());
    for (e, piece) in [(2u32, p2), (3, p3), (4, line(4))] {
        let fs: Vec<Vec<Q>> = piece.iter().map(|f| differentiation_functional(f, e)).collect();
        gens.extend(perp(ring, e, &fs));
    }
    // f5 = ∏ (j·a3 − a4), vanishing at [0:0:0:1:j]
    let mut f5 = ring.one();
    for j in 0..5 {
        f5 = f5.mul(&ring.var(3).scale(&scalar(&q(j))).sub(&ring.var(4)));
    }
    gens.push(f5);
    let second_derivs_vanish = (0..3).all(|i| (0..3).all(|j| c.derivative(i).derivative(j).is_zero()));
    (gens, second_derivs_vanish)
}

/// A `(1,5,5,…)` ideal in five variables whose saturation is the four points
/// `[1:c:0:0:0]` plus `[0:0:1:0:0]`, with `I_2^⊥ = (I^sat_2)^⊥ + ⟨x^extra⟩`.
/// Also returns whether `I^sat_1 · J_1 ⊆ I` for the line `J = (a2, a3, a4)`.
pub fn four_on_line_plus_point(ring: &RingRef, extra: &[u32]) -> (Vec<Polynomial>, bool) {
    let mut pts: Vec<Vec<Q>> = [0, 1, -1, 2].iter().map(|&c| vec![q(1), q(c), q(0), q(0), q(0)]).collect();
    pts.push(vec![q(0), q(0), q(1), q(0), q(0)]);
    let mut gens = Vec::new();
    let b2 = monos(5, 2);
    let mut f2: Vec<Vec<Q>> = pts.iter().map(|p| evaluation(p, 2)).collect();
    f2.push(b2.iter().map(|m| if m.as_slice() == extra { q(1) } else { q(0) }).collect());
    gens.extend(perp(ring, 2, &f2));
    for e in 3..=4 {
        let fe: Vec<Vec<Q>> = pts.iter().map(|p| evaluation(p, e)).collect();
        gens.extend(perp(ring, e, &fe));
    }
    let f1: Vec<Vec<Q>> = pts.iter().map(|p| evaluation(p, 1)).collect();
    let sat1 = perp(ring, 1, &f1);
    let line1 = [ring.var(2), ring.var(3), ring.var(4)];
    let holds = sat1.iter().all(|a| line1.iter().all(|b| member(5, &gens, &a.mul(b))));
    (gens, holds)
}

/// Random homogeneous form of degree `e` with at most `terms` terms, small integer coefficients.
pub fn random_form<R: Rng>(rng: &mut R, ring: &RingRef, e: u32, terms: usize) -> Polynomial {
    let basis = monos(ring.nvars(), e);
    loop {
        let mut p = ring.zero();
        for _ in 0..terms {
            let m = basis[rng.gen_range(0..basis.len())].clone();
            let c = rng.gen_range(-3..=3i64);
            p = p.add(&ring.term(m, scalar(&q(c))));
        }
        if !p.is_zero() {
            return p;
        }
    }
}
