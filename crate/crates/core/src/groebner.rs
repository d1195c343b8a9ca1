//! Buchberger's algorithm, normal forms, lifting and syzygies.

use crate::ring::{mono_coprime, mono_div, mono_divides, mono_lcm, Mono, Polynomial, RingRef};
use crate::scalar::Scalar;
use std::collections::{BTreeMap, HashSet};

/// Reduced Gröbner basis with respect to the ring's monomial order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: RingRef,
    elems: Vec<Polynomial>,
}

/// Division of `p` by `basis`. Returns the remainder and, if asked, the quotients.
pub fn reduce(p: &Polynomial, basis: &[Polynomial], want_quotients: bool) -> (Polynomial, Option<Vec<Polynomial>>) {
    let ring = p.ring().clone();
    let mut work = p.clone();
    let mut rem: Vec<(Mono, Scalar)> = Vec::new();
    let mut quot: Vec<Vec<(Mono, Scalar)>> = vec![Vec::new(); if want_quotients { basis.len() } else { 0 }];
    while !work.is_zero() {
        let (m, c) = work.terms()[0].clone();
        match basis.iter().position(|g| !g.is_zero() && mono_divides(g.lm(), &m)) {
            Some(k) => {
                let g = &basis[k];
                let mm = mono_div(&m, g.lm());
                let cc = c.div(g.lc());
                work = work.sub_mul_term(&mm, &cc, g);
                if want_quotients {
                    quot[k].push((mm, cc));
                }
            }
            None => {
                rem.push((m, c));
                work = ring.from_terms(work.terms()[1..].to_vec());
            }
        }
    }
    let r = ring.from_terms(rem);
    let q = if want_quotients { Some(quot.into_iter().map(|t| ring.from_terms(t)).collect()) } else { None };
    (r, q)
}

struct Engine {
    ring: RingRef,
    g: Vec<Polynomial>,
    sugar: Vec<i64>,
    cof: Option<Vec<Vec<Polynomial>>>,
    ngens: usize,
}

impl Engine {
    fn reduce_tracked(&self, p: &Polynomial, c: &mut Option<Vec<Polynomial>>) -> Polynomial {
        let (r, q) = reduce(p, &self.g, c.is_some());
        if let (Some(cv), Some(q), Some(cof)) = (c.as_mut(), q, self.cof.as_ref()) {
            for (k, qk) in q.iter().enumerate() {
                if qk.is_zero() {
                    continue;
                }
                for (i, a) in cof[k].iter().enumerate() {
                    if !a.is_zero() {
                        cv[i] = cv[i].sub(&qk.mul(a));
                    }
                }
            }
        }
        r
    }

    fn push(&mut self, p: Polynomial, sugar: i64, c: Option<Vec<Polynomial>>) {
        let inv = p.lc().inv();
        let p = p.scale(&inv);
        if let (Some(cof), Some(c)) = (self.cof.as_mut(), c) {
            cof.push(c.iter().map(|x| x.scale(&inv)).collect());
        }
        self.g.push(p);
        self.sugar.push(sugar);
    }

    fn run(&mut self, gens: &[Polynomial]) {
        let ring = self.ring.clone();
        let w = |m: &[u32]| ring.weight(m);
        let mut pending: BTreeMap<(i64, i64, usize, usize), ()> = BTreeMap::new();
        let mut live: HashSet<(usize, usize)> = HashSet::new();
        let add_pairs = |eng: &Engine, k: usize, pending: &mut BTreeMap<(i64, i64, usize, usize), ()>, live: &mut HashSet<(usize, usize)>| {
            for i in 0..k {
                let l = mono_lcm(eng.g[i].lm(), eng.g[k].lm());
                let s = (eng.sugar[i] + w(&mono_div(&l, eng.g[i].lm())))
                    .max(eng.sugar[k] + w(&mono_div(&l, eng.g[k].lm())));
                pending.insert((s, w(&l), k, i), ());
                live.insert((i, k));
            }
        };
        for (idx, f) in gens.iter().enumerate() {
            let mut c = self.cof.as_ref().map(|_| {
                let mut v = vec![ring.zero(); self.ngens];
                v[idx] = ring.one();
                v
            });
            let r = self.reduce_tracked(f, &mut c);
            if r.is_zero() {
                continue;
            }
            let s = f.max_weight();
            self.push(r, s, c);
            let k = self.g.len() - 1;
            add_pairs(self, k, &mut pending, &mut live);
        }
        while let Some((&key, _)) = pending.iter().next() {
            pending.remove(&key);
            let (s, _, j, i) = key;
            live.remove(&(i, j));
            let (li, lj) = (self.g[i].lm().clone(), self.g[j].lm().clone());
            if mono_coprime(&li, &lj) {
                continue;
            }
            let l = mono_lcm(&li, &lj);
            let chain = (0..self.g.len()).any(|k| {
                k != i
                    && k != j
                    && mono_divides(self.g[k].lm(), &l)
                    && !live.contains(&(i.min(k), i.max(k)))
                    && !live.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }
            let one = ring.field().one();
            let mi = mono_div(&l, &li);
            let mj = mono_div(&l, &lj);
            let sp = self.g[i].mul_term(&mi, &one).sub(&self.g[j].mul_term(&mj, &one));
            let mut c = self.cof.as_ref().map(|cof| {
                let a = cof[i].iter().map(|x| x.mul_term(&mi, &one));
                let b = cof[j].iter().map(|x| x.mul_term(&mj, &one));
                a.zip(b).map(|(x, y)| x.sub(&y)).collect::<Vec<_>>()
            });
            let r = self.reduce_tracked(&sp, &mut c);
            if r.is_zero() {
                continue;
            }
            self.push(r, s, c);
            let k = self.g.len() - 1;
            add_pairs(self, k, &mut pending, &mut live);
        }
    }

    /// Drop redundant leading monomials, interreduce, sort by leading monomial.
    fn finish(&mut self) {
        let n = self.g.len();
        let mut keep = vec![true; n];
        for i in 0..n {
            for j in 0..n {
                if i != j && keep[j] && mono_divides(self.g[j].lm(), self.g[i].lm()) && (self.g[j].lm() != self.g[i].lm() || j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
        let idx: Vec<usize> = (0..n).filter(|&i| keep[i]).collect();
        let mut g: Vec<Polynomial> = idx.iter().map(|&i| self.g[i].clone()).collect();
        let mut cof: Option<Vec<Vec<Polynomial>>> = self.cof.as_ref().map(|c| idx.iter().map(|&i| c[i].clone()).collect());
        for k in 0..g.len() {
            let others: Vec<Polynomial> =
                g.iter().enumerate().map(|(l, p)| if l == k { self.ring.zero() } else { p.clone() }).collect();
            let lead = self.ring.term(g[k].lm().clone(), g[k].lc().clone());
            let tail = g[k].sub(&lead);
            let (r, q) = reduce(&tail, &others, cof.is_some());
            if let (Some(cf), Some(q)) = (cof.as_mut(), q) {
                let mut ck = cf[k].clone();
                for (l, ql) in q.iter().enumerate() {
                    if ql.is_zero() {
                        continue;
                    }
                    for (i, a) in cf[l].iter().enumerate() {
                        ck[i] = ck[i].sub(&ql.mul(a));
                    }
                }
                cf[k] = ck;
            }
            g[k] = lead.add(&r);
        }
        let mut order: Vec<usize> = (0..g.len()).collect();
        order.sort_by(|&a, &b| self.ring.cmp(g[a].lm(), g[b].lm()));
        self.g = order.iter().map(|&i| g[i].clone()).collect();
        self.cof = cof.map(|c| order.iter().map(|&i| c[i].clone()).collect());
    }
}

fn engine(gens: &[Polynomial], ring: &RingRef, track: bool) -> Engine {
    for g in gens {
        assert!(g.ring().same(ring), "generator from a different ring");
    }
    let mut e = Engine {
        ring: ring.clone(),
        g: Vec::new(),
        sugar: Vec::new(),
        cof: if track { Some(Vec::new()) } else { None },
        ngens: gens.len(),
    };
    e.run(gens);
    e.finish();
    e
}

impl GroebnerBasis {
    pub fn new(ring: &RingRef, gens: &[Polynomial]) -> GroebnerBasis {
        let e = engine(gens, ring, false);
        GroebnerBasis { ring: ring.clone(), elems: e.g }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elems
    }

    pub fn leading_monomials(&self) -> Vec<Mono> {
        self.elems.iter().map(|g| g.lm().clone()).collect()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        reduce(p, &self.elems, false).0
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elems.iter().any(|g| g.lm().iter().all(|&e| e == 0))
    }

    /// True when `m` lies outside the initial ideal.
    pub fn is_standard(&self, m: &[u32]) -> bool {
        !self.elems.iter().any(|g| mono_divides(g.lm(), m))
    }
}

/// Gröbner basis with the cofactors expressing each element in the input generators.
#[derive(Clone, Debug)]
pub struct TrackedBasis {
    pub gens: Vec<Polynomial>,
    pub basis: Vec<Polynomial>,
    /// `basis[k] = sum_i cofactors[k][i] * gens[i]`.
    pub cofactors: Vec<Vec<Polynomial>>,
}

impl TrackedBasis {
    pub fn new(ring: &RingRef, gens: &[Polynomial]) -> TrackedBasis {
        let e = engine(gens, ring, true);
        TrackedBasis { gens: gens.to_vec(), basis: e.g, cofactors: e.cof.unwrap() }
    }

    pub fn groebner(&self) -> GroebnerBasis {
        GroebnerBasis { ring: self.ring().clone(), elems: self.basis.clone() }
    }

    fn ring(&self) -> &RingRef {
        self.gens[0].ring()
    }

    /// Coefficients `c` with `f = sum c_i gens_i`, or `None` if `f` is not in the ideal.
    pub fn lift(&self, f: &Polynomial) -> Option<Vec<Polynomial>> {
        let ring = f.ring();
        let (r, q) = reduce(f, &self.basis, true);
        if !r.is_zero() {
            return None;
        }
        let q = q.unwrap();
        let mut c = vec![ring.zero(); self.gens.len()];
        for (k, qk) in q.iter().enumerate() {
            if qk.is_zero() {
                continue;
            }
            for (i, a) in self.cofactors[k].iter().enumerate() {
                if !a.is_zero() {
                    c[i] = c[i].add(&qk.mul(a));
                }
            }
        }
        Some(c)
    }

    /// Generators of the module of syzygies of `gens`.
    pub fn syzygies(&self) -> Vec<Vec<Polynomial>> {
        let ring = self.ring().clone();
        let m = self.gens.len();
        let s = self.basis.len();
        let one = ring.field().one();
        let mut out: Vec<Vec<Polynomial>> = Vec::new();
        let to_gens = |sigma: &[Polynomial]| -> Vec<Polynomial> {
            let mut t = vec![ring.zero(); m];
            for (k, sk) in sigma.iter().enumerate() {
                if sk.is_zero() {
                    continue;
                }
                for (i, a) in self.cofactors[k].iter().enumerate() {
                    if !a.is_zero() {
                        t[i] = t[i].add(&sk.mul(a));
                    }
                }
            }
            t
        };
        for a in 0..s {
            for b in (a + 1)..s {
                let (la, lb) = (self.basis[a].lm(), self.basis[b].lm());
                let l = mono_lcm(la, lb);
                let ma = mono_div(&l, la);
                let mb = mono_div(&l, lb);
                let sp = self.basis[a].mul_term(&ma, &one).sub(&self.basis[b].mul_term(&mb, &one));
                let (r, q) = reduce(&sp, &self.basis, true);
                debug_assert!(r.is_zero());
                let mut sigma: Vec<Polynomial> = q.unwrap().into_iter().map(|x| x.neg()).collect();
                sigma[a] = sigma[a].add(&ring.monomial(ma));
                sigma[b] = sigma[b].sub(&ring.monomial(mb));
                let t = to_gens(&sigma);
                if t.iter().any(|x| !x.is_zero()) {
                    out.push(t);
                }
            }
        }
        for j in 0..m {
            let (r, q) = reduce(&self.gens[j], &self.basis, true);
            debug_assert!(r.is_zero());
            let mut t = to_gens(&q.unwrap());
            for x in t.iter_mut() {
                *x = x.neg();
            }
            t[j] = t[j].add(&ring.one());
            if t.iter().any(|x| !x.is_zero()) {
                out.push(t);
            }
        }
        dedup_vectors(out)
    }
}

fn dedup_vectors(v: Vec<Vec<Polynomial>>) -> Vec<Vec<Polynomial>> {
    let mut seen: Vec<Vec<Polynomial>> = Vec::new();
    for x in v {
        let xm = normalize_vector(&x);
        if !seen.iter().any(|y| *y == xm) {
            seen.push(xm);
        }
    }
    seen
}

fn normalize_vector(v: &[Polynomial]) -> Vec<Polynomial> {
    match v.iter().find(|p| !p.is_zero()) {
        Some(p) => {
            let inv = p.lc().inv();
            v.iter().map(|x| x.scale(&inv)).collect()
        }
        None => v.to_vec(),
    }
}

/// Syzygies of a list of polynomials (zero entries allowed).
pub fn syzygies(ring: &RingRef, gens: &[Polynomial]) -> Vec<Vec<Polynomial>> {
    if gens.is_empty() {
        return Vec::new();
    }
    TrackedBasis::new(ring, gens).syzygies()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_list;
    use crate::ring::Ring;
    use crate::scalar::Field;

    #[test]
    fn twisted_cubic() {
        let r = Ring::standard(&["x", "y", "z", "w"], Field::Rational);
        let g = parse_list(&r, "x*z - y^2, y*w - z^2, x*w - y*z").unwrap();
        let gb = GroebnerBasis::new(&r, &g);
        assert_eq!(gb.elements().len(), 3);
        let p = parse_list(&r, "x*z^2 - y^2*z").unwrap();
        assert!(gb.contains(&p[0]));
        assert!(!gb.contains(&r.var(0)));
    }

    #[test]
    fn lift_and_syzygies() {
        let r = Ring::standard(&["x", "y", "z"], Field::Rational);
        let g = parse_list(&r, "x*y, y*z, x*z").unwrap();
        let tb = TrackedBasis::new(&r, &g);
        let f = parse_list(&r, "x^2*y + 3*x*y*z").unwrap().remove(0);
        let c = tb.lift(&f).unwrap();
        let mut s = r.zero();
        for (a, b) in c.iter().zip(&g) {
            s = s.add(&a.mul(b));
        }
        assert_eq!(s, f);
        for syz in tb.syzygies() {
            let mut s = r.zero();
            for (a, b) in syz.iter().zip(&g) {
                s = s.add(&a.mul(b));
            }
            assert!(s.is_zero());
        }
    }
}
