//! Homogeneous ideals and their basic operations.

use crate::groebner::{reduce, GroebnerBasis};
use crate::linalg::{kernel, Subspace};
use crate::ring::{mono_total, Degree, Mono, MonomialOrder, Polynomial, RingRef};
use crate::series::{self, IntPoly, StandardSeries};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::sync::OnceLock;
use thiserror::Error;

/// Candidate budget for searches over linear forms.
pub const SEARCH_BUDGET: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("generator {0} is not homogeneous")]
    NotHomogeneous(String),
    #[error("no transverse element found after {0} candidates")]
    NoTransverseElement(usize),
}

#[derive(Clone, Debug)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
    sat: OnceLock<Box<Ideal>>,
}

/// Minimal monomial generators of the irrelevant ideal: monomials whose
/// degree is positive in every coordinate.
pub fn irrelevant_generators(ring: &RingRef) -> Vec<Mono> {
    let n = ring.nvars();
    let r = ring.grading_rank();
    let mut masks: Vec<u64> = (1..(1u64 << n)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let covers = |m: u64| (0..r).all(|k| (0..n).any(|i| m >> i & 1 == 1 && ring.grading()[k][i] > 0));
    let mut found: Vec<u64> = Vec::new();
    for m in masks {
        if !found.iter().any(|f| f & m == *f) && covers(m) {
            found.push(m);
        }
    }
    found.into_iter().map(|m| (0..n).map(|i| (m >> i & 1) as u32).collect()).collect()
}

/// Linear forms supported on the given variables: a spiral over the
/// coefficients `0, 1, -1, 2, -2, ...`, then pseudorandom forms from a fixed seed.
pub struct FormSearch {
    ring: RingRef,
    vars: Vec<usize>,
    shell: usize,
    queue: std::collections::VecDeque<Vec<i64>>,
    emitted: usize,
    budget: usize,
    rng: ChaCha8Rng,
}

const SPIRAL_SHELLS: usize = 3;

fn spiral_value(i: usize) -> i64 {
    if i % 2 == 1 {
        i.div_ceil(2) as i64
    } else {
        -((i / 2) as i64)
    }
}

impl FormSearch {
    pub fn new(ring: &RingRef, vars: Vec<usize>, budget: usize) -> FormSearch {
        FormSearch {
            ring: ring.clone(),
            vars,
            shell: 0,
            queue: Default::default(),
            emitted: 0,
            budget,
            rng: ChaCha8Rng::seed_from_u64(0x5eed),
        }
    }

    /// Linear forms of the given degree (all variables of that degree).
    pub fn of_degree(ring: &RingRef, deg: &[i64], budget: usize) -> FormSearch {
        let vars = (0..ring.nvars()).filter(|&i| ring.var_degree(i) == deg).collect();
        FormSearch::new(ring, vars, budget)
    }

    fn form(&self, coeffs: &[i64]) -> Polynomial {
        let f = self.ring.field();
        let mut p = self.ring.zero();
        for (&v, &c) in self.vars.iter().zip(coeffs) {
            p = p.add(&self.ring.var(v).scale(&f.from_i64(c)));
        }
        p
    }

    /// Coefficient vectors whose largest spiral index is `2b - 1` or `2b`.
    fn fill_shell(&mut self, b: usize) {
        let k = self.vars.len();
        let top = 2 * b;
        let mut idx = vec![0usize; k];
        loop {
            if idx.iter().any(|&x| x + 1 >= top) {
                self.queue.push_back(idx.iter().map(|&i| spiral_value(i)).collect());
            }
            let mut i = k;
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                if idx[i] < top {
                    idx[i] += 1;
                    for x in idx.iter_mut().skip(i + 1) {
                        *x = 0;
                    }
                    break;
                }
            }
        }
    }
}

impl Iterator for FormSearch {
    type Item = Polynomial;

    fn next(&mut self) -> Option<Polynomial> {
        if self.emitted >= self.budget || self.vars.is_empty() {
            return None;
        }
        self.emitted += 1;
        while self.queue.is_empty() && self.shell < SPIRAL_SHELLS {
            self.shell += 1;
            self.fill_shell(self.shell);
        }
        if let Some(c) = self.queue.pop_front() {
            return Some(self.form(&c));
        }
        loop {
            let c: Vec<i64> = (0..self.vars.len()).map(|_| self.rng.gen_range(-100..=100)).collect();
            if c.iter().any(|&x| x != 0) {
                return Some(self.form(&c));
            }
        }
    }
}

impl Ideal {
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Result<Ideal, IdealError> {
        for g in &gens {
            assert!(g.ring().same(ring), "generator from a different ring");
            if !g.is_homogeneous() {
                return Err(IdealError::NotHomogeneous(g.to_string()));
            }
        }
        Ok(Ideal::from_homogeneous(ring, gens))
    }

    /// Caller guarantees homogeneity.
    pub fn from_homogeneous(ring: &RingRef, gens: Vec<Polynomial>) -> Ideal {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring: ring.clone(), gens, gb: OnceLock::new(), sat: OnceLock::new() }
    }

    pub fn zero(ring: &RingRef) -> Ideal {
        Ideal::from_homogeneous(ring, Vec::new())
    }

    pub fn unit(ring: &RingRef) -> Ideal {
        Ideal::from_homogeneous(ring, vec![ring.one()])
    }

    /// The ideal generated by the given monomials.
    pub fn monomial(ring: &RingRef, monos: &[Mono]) -> Ideal {
        Ideal::from_homogeneous(ring, monos.iter().map(|m| ring.monomial(m.clone())).collect())
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn gb(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| GroebnerBasis::new(&self.ring, &self.gens))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit_ideal()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        f.is_zero() || self.gb().contains(f)
    }

    pub fn contains_ideal(&self, o: &Ideal) -> bool {
        o.gens.iter().all(|g| self.contains(g))
    }

    pub fn equals(&self, o: &Ideal) -> bool {
        self.contains_ideal(o) && o.contains_ideal(self)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.gb().normal_form(f)
    }

    /// Generators homogeneous for the standard (total) degree.
    pub fn is_standard_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| {
            let d = mono_total(g.lm());
            g.terms().iter().all(|(m, _)| mono_total(m) == d)
        })
    }

    pub fn sum(&self, o: &Ideal) -> Ideal {
        let mut g = self.gens.clone();
        g.extend(o.gens.iter().cloned());
        Ideal::from_homogeneous(&self.ring, g)
    }

    pub fn add_gens(&self, extra: &[Polynomial]) -> Ideal {
        let mut g = self.gens.clone();
        g.extend(extra.iter().cloned());
        Ideal::from_homogeneous(&self.ring, g)
    }

    pub fn product(&self, o: &Ideal) -> Ideal {
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &o.gens {
                g.push(a.mul(b));
            }
        }
        Ideal::from_homogeneous(&self.ring, g)
    }

    pub fn power(&self, k: u32) -> Ideal {
        let mut r = Ideal::unit(&self.ring);
        for _ in 0..k {
            r = r.product(self).reduced_generators();
        }
        r
    }

    /// Same ideal, generated by its reduced Gröbner basis.
    pub fn reduced_generators(&self) -> Ideal {
        let g = self.gb().elements().to_vec();
        let i = Ideal::from_homogeneous(&self.ring, g);
        let _ = i.gb.set(self.gb().clone());
        i
    }

    /// Intersection via elimination of an auxiliary variable `t` from `tI + (1-t)J`.
    pub fn intersect(&self, o: &Ideal) -> Ideal {
        if self.is_zero() || o.is_zero() {
            return Ideal::zero(&self.ring);
        }
        let r = &self.ring;
        let er = r.with_elimination_vars(&["_t"], &[vec![0; r.grading_rank()]]);
        let n = r.nvars();
        let lift: Vec<usize> = (1..=n).collect();
        let t = er.var(0);
        let omt = er.one().sub(&t);
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(t.mul(&g.map_vars(&er, &lift)));
        }
        for g in &o.gens {
            gens.push(omt.mul(&g.map_vars(&er, &lift)));
        }
        let gb = GroebnerBasis::new(&er, &gens);
        let keep: Vec<Polynomial> = gb
            .elements()
            .iter()
            .filter(|p| p.lm()[0] == 0)
            .map(|p| r.from_terms(p.terms().iter().map(|(m, c)| (m[1..].to_vec(), c.clone())).collect()))
            .collect();
        Ideal::from_homogeneous(r, keep)
    }

    /// `I : f`.
    pub fn colon_poly(&self, f: &Polynomial) -> Ideal {
        if f.is_zero() {
            return Ideal::unit(&self.ring);
        }
        let fi = Ideal::from_homogeneous(&self.ring, vec![f.clone()]);
        let k = self.intersect(&fi);
        let gens = k
            .gens
            .iter()
            .map(|g| {
                let (r, q) = reduce(g, std::slice::from_ref(f), true);
                assert!(r.is_zero(), "intersection element not divisible");
                q.unwrap().remove(0)
            })
            .collect();
        Ideal::from_homogeneous(&self.ring, gens)
    }

    /// `I : J`.
    pub fn colon(&self, j: &Ideal) -> Ideal {
        let mut acc: Option<Ideal> = None;
        for g in &j.gens {
            let c = self.colon_poly(g);
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c),
            });
        }
        acc.unwrap_or_else(|| Ideal::unit(&self.ring))
    }

    /// `I : J^infinity` by iterated colon. Returns the ideal and the first `k`
    /// with `I : J^k = I : J^(k+1)`.
    pub fn colon_power_limit(&self, j: &Ideal) -> (Ideal, usize) {
        let mut cur = self.clone();
        let mut k = 0;
        loop {
            let next = cur.colon(j);
            if next.contains_ideal(&cur) && cur.contains_ideal(&next) {
                return (cur, k);
            }
            cur = next;
            k += 1;
        }
    }

    /// `I : l^infinity` for a linear form `l`, by a coordinate change putting
    /// `l` last and dividing grevlex basis elements by powers of it.
    /// Requires generators homogeneous for the standard degree.
    pub fn saturate_linear(&self, l: &Polynomial) -> Ideal {
        assert!(self.is_standard_homogeneous());
        let r = &self.ring;
        let n = r.nvars();
        let f = r.field();
        let coeffs: Vec<_> = (0..n)
            .map(|j| {
                let mut m = vec![0; n];
                m[j] = 1;
                l.coefficient(&m)
            })
            .collect();
        let i = (0..n).rev().find(|&j| !coeffs[j].is_zero()).expect("nonzero linear form");
        let mut perm: Vec<usize> = (0..n).filter(|&j| j != i).collect();
        perm.push(i);
        let rp = r.permuted(&perm).with_order(MonomialOrder::Grevlex);
        let pos = |j: usize| perm.iter().position(|&x| x == j).unwrap();
        let mut images = Vec::with_capacity(n);
        let ci_inv = coeffs[i].inv();
        for j in 0..n {
            if j != i {
                images.push(rp.var(pos(j)));
            } else {
                let mut p = rp.var(n - 1);
                for k in 0..n {
                    if k != i && !coeffs[k].is_zero() {
                        p = p.sub(&rp.var(pos(k)).scale(&coeffs[k]));
                    }
                }
                images.push(p.scale(&ci_inv));
            }
        }
        let moved: Vec<Polynomial> = self.gens.iter().map(|g| g.substitute(&images)).collect();
        let gb = GroebnerBasis::new(&rp, &moved);
        let stripped: Vec<Polynomial> = gb.elements().iter().map(|g| g.strip_var(n - 1)).collect();
        let mut back = Vec::with_capacity(n);
        for k in 0..n {
            if k == n - 1 {
                back.push(l.clone());
            } else {
                back.push(r.var(perm[k]));
            }
        }
        let _ = f;
        Ideal::from_homogeneous(r, stripped.iter().map(|g| g.substitute(&back)).collect())
    }

    pub fn saturate_var(&self, i: usize) -> Ideal {
        if self.is_standard_homogeneous() {
            self.saturate_linear(&self.ring.var(i))
        } else {
            let x = Ideal::from_homogeneous(&self.ring, vec![self.ring.var(i)]);
            self.colon_power_limit(&x).0
        }
    }

    /// `I : m^infinity` for a monomial `m`.
    pub fn saturate_monomial(&self, m: &[u32]) -> Ideal {
        let mut k = self.clone();
        for (i, &e) in m.iter().enumerate() {
            if e > 0 {
                k = k.saturate_var(i);
            }
        }
        k
    }

    /// Saturation computed generator by generator of the irrelevant ideal.
    pub fn saturate_by_generators(&self) -> Ideal {
        let mut acc: Option<Ideal> = None;
        for m in irrelevant_generators(&self.ring) {
            let c = self.saturate_monomial(&m);
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c),
            });
        }
        acc.unwrap().reduced_generators()
    }

    /// Saturation with respect to the irrelevant ideal (cached).
    pub fn saturate(&self) -> &Ideal {
        self.sat.get_or_init(|| Box::new(self.compute_saturation()))
    }

    fn compute_saturation(&self) -> Ideal {
        if self.is_zero() {
            return self.clone();
        }
        if self.is_unit() {
            return Ideal::unit(&self.ring);
        }
        let irr = irrelevant_generators(&self.ring);
        if irr.len() == 1 && mono_total(&irr[0]) == 1 {
            let i = irr[0].iter().position(|&e| e == 1).unwrap();
            return self.saturate_var(i).reduced_generators();
        }
        let n = self.ring.nvars();
        let d0 = self.ring.var_degree(0);
        let uniform = (0..n).all(|i| self.ring.var_degree(i) == d0) && d0.iter().all(|&x| x > 0);
        if uniform && self.is_standard_homogeneous() {
            let full = series::numerator(&self.gb().leading_monomials(), &self.ring.weights());
            for l in FormSearch::new(&self.ring, (0..n).collect(), 12) {
                let k = self.saturate_linear(&l).reduced_generators();
                let kn = series::numerator(&k.gb().leading_monomials(), &self.ring.weights());
                let mut diff = series::sub(&full, &kn);
                let mut ok = true;
                for &w in &self.ring.weights() {
                    match series::div_one_minus(&diff, w) {
                        Some(q) => diff = q,
                        None => {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok {
                    return k;
                }
            }
        }
        self.saturate_by_generators()
    }

    pub fn is_saturated(&self) -> bool {
        self.saturate().contains_ideal(self) && self.contains_ideal(self.saturate())
    }

    /// A minimal homogeneous generating set, chosen among the given generators.
    pub fn minimal_generators(&self) -> Vec<Polynomial> {
        let mut cands: Vec<Polynomial> = self.gens.iter().map(|g| g.monic()).collect();
        cands.sort_by(|a, b| a.max_weight().cmp(&b.max_weight()).then_with(|| self.ring.cmp(b.lm(), a.lm())));
        let mut kept: Vec<Polynomial> = Vec::new();
        let mut gb = GroebnerBasis::new(&self.ring, &kept);
        for g in cands {
            if !gb.contains(&g) {
                kept.push(g);
                gb = GroebnerBasis::new(&self.ring, &kept);
            }
        }
        kept
    }

    pub fn minimalized(&self) -> Ideal {
        let i = Ideal::from_homogeneous(&self.ring, self.minimal_generators());
        let _ = i.gb.set(self.gb().clone());
        i
    }

    /// Monomials of degree `d` and the subspace `I_d` in their coordinates.
    pub fn degree_part(&self, d: &[i64]) -> (Vec<Mono>, Subspace) {
        let monos = self.ring.monomials_of_degree(d);
        let f = self.ring.field();
        let gb = self.gb();
        let std: Vec<Mono> = monos.iter().filter(|m| gb.is_standard(m)).cloned().collect();
        if std.len() == monos.len() {
            return (monos.clone(), Subspace::zero(f, monos.len()));
        }
        let mut rows = vec![vec![f.zero(); monos.len()]; std.len()];
        for (j, m) in monos.iter().enumerate() {
            let nf = gb.normal_form(&self.ring.monomial(m.clone()));
            let v = nf.coeff_vector(&std).expect("normal form on standard monomials");
            for (i, x) in v.into_iter().enumerate() {
                rows[i][j] = x;
            }
        }
        let k = kernel(f, &rows, monos.len());
        (monos.clone(), Subspace::span(f, monos.len(), k))
    }

    /// Polynomials spanning `I_d`.
    pub fn degree_basis(&self, d: &[i64]) -> Vec<Polynomial> {
        let (monos, sp) = self.degree_part(d);
        sp.basis().iter().map(|v| self.ring.from_coeffs(&monos, v)).collect()
    }

    /// Standard monomials of degree `d` (a basis of `(S/I)_d`).
    pub fn standard_monomials(&self, d: &[i64]) -> Vec<Mono> {
        let gb = self.gb();
        self.ring.monomials_of_degree(d).into_iter().filter(|m| gb.is_standard(m)).collect()
    }

    /// `dim (S/I)_d`.
    pub fn quotient_dim(&self, d: &[i64]) -> usize {
        self.standard_monomials(d).len()
    }

    /// Hilbert series numerator over `prod (1 - t^{w_i})` for the coarsened grading.
    pub fn series_numerator(&self) -> IntPoly {
        series::numerator(&self.gb().leading_monomials(), &self.ring.weights())
    }

    /// Series of `S/I` for the standard grading.
    pub fn standard_series(&self) -> StandardSeries {
        assert!(self.ring.weights().iter().all(|&w| w == 1), "standard grading required");
        StandardSeries::from_numerator(&self.series_numerator(), self.ring.nvars())
    }

    /// Apply a substitution of the variables (e.g. a linear change of coordinates).
    pub fn substitute(&self, images: &[Polynomial]) -> Ideal {
        let r = images[0].ring().clone();
        Ideal::from_homogeneous(&r, self.gens.iter().map(|g| g.substitute(images)).collect())
    }

    /// True when `l` is a nonzerodivisor on `S/I`, from the Hilbert series identity
    /// `HS(S/(I+l)) = (1 - t^w) HS(S/I)`.
    pub fn is_nonzerodivisor(&self, l: &Polynomial) -> bool {
        let w = l.max_weight() as u32;
        let a = self.add_gens(std::slice::from_ref(l)).series_numerator();
        let b = series::mul(&series::one_minus(w), &self.series_numerator());
        a == b
    }

    /// First homogeneous linear form of degree `deg` in the search order that is a
    /// nonzerodivisor on `S/I`.
    pub fn transverse_linear_form(&self, deg: &[i64], budget: usize) -> Result<Polynomial, IdealError> {
        let mut tried = 0;
        for l in FormSearch::of_degree(&self.ring, deg, budget) {
            tried += 1;
            if self.is_nonzerodivisor(&l) {
                return Ok(l);
            }
        }
        Err(IdealError::NoTransverseElement(tried))
    }

    /// Transverse linear form of any degree lying in the irrelevant ideal.
    pub fn transverse_element(&self) -> Result<Polynomial, IdealError> {
        let r = &self.ring;
        let mut degs: Vec<Degree> = Vec::new();
        for i in 0..r.nvars() {
            let d = r.var_degree(i);
            if d.iter().all(|&x| x > 0) && !degs.contains(&d) {
                degs.push(d);
            }
        }
        let mut tried = 0;
        for d in degs {
            match self.transverse_linear_form(&d, SEARCH_BUDGET - tried) {
                Ok(l) => return Ok(l),
                Err(IdealError::NoTransverseElement(k)) => tried += k,
                Err(e) => return Err(e),
            }
        }
        Err(IdealError::NoTransverseElement(tried))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gens.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", g.join(", "))
    }
}
