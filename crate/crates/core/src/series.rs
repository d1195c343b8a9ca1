//! Hilbert series numerators of monomial ideals and integer polynomial helpers.

use crate::ring::{mono_divides, Mono};

/// Integer polynomial in `t`, lowest degree first.
pub type IntPoly = Vec<i128>;

pub fn trim(mut p: IntPoly) -> IntPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn add(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut r = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        r[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        r[i] += x;
    }
    trim(r)
}

pub fn sub(a: &IntPoly, b: &IntPoly) -> IntPoly {
    add(a, &b.iter().map(|x| -x).collect())
}

pub fn mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    trim(r)
}

pub fn shift(a: &IntPoly, k: usize) -> IntPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0; k];
    r.extend(a.iter().cloned());
    r
}

/// `1 - t^w`.
pub fn one_minus(w: u32) -> IntPoly {
    let mut r = vec![0; w as usize + 1];
    r[0] = 1;
    r[w as usize] -= 1;
    r
}

/// Exact quotient by `1 - t^w`, `None` if it does not divide.
pub fn div_one_minus(a: &IntPoly, w: u32) -> Option<IntPoly> {
    let w = w as usize;
    let a = trim(a.clone());
    if a.is_empty() {
        return Some(Vec::new());
    }
    // q_i = a_i + q_{i-w}
    let n = a.len();
    if n <= w {
        return None;
    }
    let mut q = vec![0i128; n - w];
    for i in 0..n - w {
        q[i] = a[i] + if i >= w { q[i - w] } else { 0 };
    }
    let back = mul(&q, &one_minus(w as u32));
    if back == a {
        Some(q)
    } else {
        None
    }
}

fn minimalize(gens: &mut Vec<Mono>) {
    gens.sort();
    gens.dedup();
    let g = gens.clone();
    gens.retain(|m| !g.iter().any(|o| o != m && mono_divides(o, m)));
}

fn wdeg(m: &[u32], weights: &[u32]) -> usize {
    m.iter().zip(weights).map(|(&e, &w)| e as usize * w as usize).sum()
}

/// Numerator `N(t)` of the Hilbert series `N(t) / prod(1 - t^{w_i})` of `S/(gens)`.
pub fn numerator(gens: &[Mono], weights: &[u32]) -> IntPoly {
    let mut g = gens.to_vec();
    minimalize(&mut g);
    num_rec(g, weights)
}

fn num_rec(g: Vec<Mono>, weights: &[u32]) -> IntPoly {
    if g.is_empty() {
        return vec![1];
    }
    if g.iter().any(|m| m.iter().all(|&e| e == 0)) {
        return Vec::new();
    }
    let n = weights.len();
    // Pairwise coprime generators: a product formula.
    let mut support = vec![0usize; n];
    for m in &g {
        for (i, &e) in m.iter().enumerate() {
            if e > 0 {
                support[i] += 1;
            }
        }
    }
    if support.iter().all(|&c| c <= 1) {
        let mut r: IntPoly = vec![1];
        for m in &g {
            let mut f = vec![0i128; wdeg(m, weights) + 1];
            f[0] = 1;
            *f.last_mut().unwrap() -= 1;
            r = mul(&r, &f);
        }
        return r;
    }
    // Pivot on the most frequent shared variable.
    let x = (0..n).max_by_key(|&i| (support[i], std::cmp::Reverse(i))).unwrap();
    debug_assert!(support[x] >= 2);
    // Exponents from generators that are not pure powers of x, so x^e is not in the ideal.
    let mut exps: Vec<u32> = g
        .iter()
        .filter(|m| m[x] > 0 && m.iter().enumerate().any(|(i, &e)| i != x && e > 0))
        .map(|m| m[x])
        .collect();
    exps.sort();
    let e = exps[exps.len() / 2];
    let mut p = vec![0u32; n];
    p[x] = e;
    let mut plus = g.clone();
    plus.push(p.clone());
    minimalize(&mut plus);
    let mut colon: Vec<Mono> = g
        .iter()
        .map(|m| {
            let mut q = m.clone();
            q[x] = q[x].saturating_sub(e);
            q
        })
        .collect();
    minimalize(&mut colon);
    let a = num_rec(plus, weights);
    let b = num_rec(colon, weights);
    add(&a, &shift(&b, e as usize * weights[x] as usize))
}

/// Hilbert series data of a standard graded quotient: `h(t) / (1-t)^dim` with `h(1) != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardSeries {
    pub h: IntPoly,
    pub dim: usize,
}

impl StandardSeries {
    /// From a numerator over `(1-t)^n`.
    pub fn from_numerator(num: &IntPoly, n: usize) -> StandardSeries {
        let mut h = trim(num.clone());
        let mut dim = n;
        if h.is_empty() {
            return StandardSeries { h, dim: 0 };
        }
        while dim > 0 {
            match div_one_minus(&h, 1) {
                Some(q) => {
                    h = q;
                    dim -= 1;
                }
                None => break,
            }
        }
        StandardSeries { h, dim }
    }

    pub fn is_zero(&self) -> bool {
        self.h.is_empty()
    }

    /// Value of the Hilbert function in degree `e`.
    pub fn value(&self, e: i64) -> i128 {
        if e < 0 {
            return 0;
        }
        let mut s: i128 = 0;
        for (j, &c) in self.h.iter().enumerate() {
            let k = e - j as i64;
            if k < 0 {
                break;
            }
            s += c * binom_i(k + self.dim as i64 - 1, self.dim as i64 - 1);
        }
        s
    }

    /// Multiplicity (`h(1)`).
    pub fn degree(&self) -> i128 {
        self.h.iter().sum()
    }

    /// For dimension at most one: `(eventual value, first degree from which it is constant)`.
    pub fn eventual(&self) -> Option<(i128, i64)> {
        match self.dim {
            0 => Some((0, self.h.len() as i64)),
            1 => Some((self.degree(), self.h.len() as i64 - 1)),
            _ => None,
        }
    }
}

/// `C(n, k)` with `C(n, -1) = [n == -1]` so that dimension 0 works.
pub fn binom_i(n: i64, k: i64) -> i128 {
    if k < 0 {
        return if n == -1 { 1 } else { 0 };
    }
    if n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_of_plane_point_ideals() {
        // (x^2, xy, y^2) in k[x,y,z]: H = (1,3,3,3,...)
        let g = vec![vec![2, 0, 0], vec![1, 1, 0], vec![0, 2, 0]];
        let n = numerator(&g, &[1, 1, 1]);
        let s = StandardSeries::from_numerator(&n, 3);
        assert_eq!(s.dim, 1);
        assert_eq!((0..5).map(|e| s.value(e)).collect::<Vec<_>>(), vec![1, 3, 3, 3, 3]);
        assert_eq!(s.eventual(), Some((3, 1)));
    }

    #[test]
    fn division() {
        let a = mul(&one_minus(2), &vec![1, 2, 3]);
        assert_eq!(div_one_minus(&a, 2), Some(vec![1, 2, 3]));
        assert_eq!(div_one_minus(&vec![1, 1], 1), None);
    }

    #[test]
    fn artinian() {
        let g = vec![vec![2, 0], vec![0, 3]];
        let n = numerator(&g, &[1, 1]);
        let s = StandardSeries::from_numerator(&n, 2);
        assert_eq!(s.dim, 0);
        assert_eq!(s.h, vec![1, 2, 2, 1]);
        assert_eq!(s.eventual(), Some((0, 4)));
    }
}
