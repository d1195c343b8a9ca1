//! Multigraded polynomial rings, monomial orders and polynomials.

use crate::scalar::{Field, Scalar};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Exponent vector.
pub type Mono = Vec<u32>;
/// Multidegree. Signed so that shifted degrees can go negative.
pub type Degree = Vec<i64>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("grading has {got} columns, expected {expected}")]
    GradingShape { expected: usize, got: usize },
    #[error("variable {0} has degree zero")]
    ZeroDegree(String),
    #[error("duplicate variable name {0}")]
    DuplicateName(String),
    #[error("ring has no variables")]
    Empty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Lex between the first `k` variables and the rest, grevlex inside each block.
    Block(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    grading: Vec<Vec<u32>>,
    field: Field,
    order: MonomialOrder,
    /// A degree-zero parameter variable (used for families over k[t]).
    param: Option<usize>,
}

pub type RingRef = Arc<Ring>;

fn monomial_cmp_grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&x| x as u64).sum();
    let db: u64 = b.iter().map(|&x| x as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

impl Ring {
    pub fn new(names: Vec<String>, grading: Vec<Vec<u32>>, field: Field) -> Result<RingRef, RingError> {
        let n = names.len();
        if n == 0 {
            return Err(RingError::Empty);
        }
        for row in &grading {
            if row.len() != n {
                return Err(RingError::GradingShape { expected: n, got: row.len() });
            }
        }
        for (i, name) in names.iter().enumerate() {
            if grading.iter().all(|row| row[i] == 0) {
                return Err(RingError::ZeroDegree(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(RingError::DuplicateName(name.clone()));
            }
        }
        Ok(Arc::new(Ring { names, grading, field, order: MonomialOrder::Grevlex, param: None }))
    }

    /// Standard graded ring on the given names.
    pub fn standard<S: AsRef<str>>(names: &[S], field: Field) -> RingRef {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let n = names.len();
        Ring::new(names, vec![vec![1; n]], field).expect("valid standard ring")
    }

    /// Standard graded ring with variables `prefix0 .. prefix{n-1}`.
    pub fn standard_n(prefix: &str, n: usize, field: Field) -> RingRef {
        let names: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
        Ring::standard(&names, field)
    }

    pub fn with_order(&self, order: MonomialOrder) -> RingRef {
        let mut r = self.clone();
        r.order = order;
        Arc::new(r)
    }

    /// Same ring with the variables renamed (grading and order kept).
    pub fn renamed(&self, names: Vec<String>) -> RingRef {
        assert_eq!(names.len(), self.names.len());
        let mut r = self.clone();
        r.names = names;
        Arc::new(r)
    }

    /// Variables reordered: new variable `k` is old variable `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> RingRef {
        let mut r = self.clone();
        r.names = perm.iter().map(|&i| self.names[i].clone()).collect();
        r.grading = self.grading.iter().map(|row| perm.iter().map(|&i| row[i]).collect()).collect();
        r.param = self.param.map(|p| perm.iter().position(|&i| i == p).unwrap());
        Arc::new(r)
    }

    /// Ring with extra variables of the given degrees prepended, block order
    /// eliminating them.
    pub fn with_elimination_vars(&self, names: &[&str], degrees: &[Vec<u32>]) -> RingRef {
        let mut r = self.clone();
        let k = names.len();
        let mut new_names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        new_names.extend(self.names.iter().cloned());
        for (row_i, row) in r.grading.iter_mut().enumerate() {
            let mut nr: Vec<u32> = degrees.iter().map(|d| d[row_i]).collect();
            nr.extend(row.iter().cloned());
            *row = nr;
        }
        r.names = new_names;
        r.order = MonomialOrder::Block(k);
        r.param = self.param.map(|p| p + k);
        Arc::new(r)
    }

    /// `self` with a degree-zero parameter appended as the last variable.
    pub fn with_parameter(&self, name: &str) -> RingRef {
        let mut r = self.clone();
        r.names.push(name.to_string());
        for row in r.grading.iter_mut() {
            row.push(0);
        }
        r.param = Some(r.names.len() - 1);
        Arc::new(r)
    }

    pub fn param(&self) -> Option<usize> {
        self.param
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn grading(&self) -> &[Vec<u32>] {
        &self.grading
    }

    pub fn grading_rank(&self) -> usize {
        self.grading.len()
    }

    pub fn is_standard(&self) -> bool {
        self.grading.len() == 1 && self.grading[0].iter().all(|&d| d == 1) && self.param.is_none()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Degree of variable `i`.
    pub fn var_degree(&self, i: usize) -> Degree {
        self.grading.iter().map(|row| row[i] as i64).collect()
    }

    /// Positive weight of each variable used to coarsen the grading to N.
    pub fn weights(&self) -> Vec<u32> {
        (0..self.nvars()).map(|i| self.grading.iter().map(|r| r[i]).sum()).collect()
    }

    pub fn degree(&self, m: &[u32]) -> Degree {
        self.grading
            .iter()
            .map(|row| row.iter().zip(m).map(|(&g, &e)| g as i64 * e as i64).sum())
            .collect()
    }

    pub fn weight(&self, m: &[u32]) -> i64 {
        self.weights().iter().zip(m).map(|(&w, &e)| w as i64 * e as i64).sum()
    }

    pub fn zero_degree(&self) -> Degree {
        vec![0; self.grading.len()]
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self.order {
            MonomialOrder::Grevlex => monomial_cmp_grevlex(a, b),
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Block(k) => match monomial_cmp_grevlex(&a[..k], &b[..k]) {
                Ordering::Equal => monomial_cmp_grevlex(&a[k..], &b[k..]),
                o => o,
            },
        }
    }

    /// All monomials of the given multidegree, in decreasing order.
    pub fn monomials_of_degree(&self, deg: &[i64]) -> Vec<Mono> {
        let n = self.nvars();
        let mut out = Vec::new();
        if deg.iter().any(|&d| d < 0) || self.param.is_some() {
            return out;
        }
        let mut cur = vec![0u32; n];
        let mut rem: Vec<i64> = deg.to_vec();
        self.enum_monos(0, &mut cur, &mut rem, &mut out);
        out.sort_by(|a, b| self.cmp(b, a));
        out
    }

    fn enum_monos(&self, i: usize, cur: &mut Mono, rem: &mut Vec<i64>, out: &mut Vec<Mono>) {
        let n = self.nvars();
        if i == n {
            if rem.iter().all(|&r| r == 0) {
                out.push(cur.clone());
            }
            return;
        }
        let col: Vec<i64> = self.grading.iter().map(|r| r[i] as i64).collect();
        let mut e = 0u32;
        loop {
            self.enum_monos(i + 1, cur, rem, out);
            if col.iter().zip(rem.iter()).any(|(&c, &r)| c > r) {
                break;
            }
            for (r, &c) in rem.iter_mut().zip(&col) {
                *r -= c;
            }
            e += 1;
            cur[i] = e;
        }
        for (r, &c) in rem.iter_mut().zip(&col) {
            *r += c * e as i64;
        }
        cur[i] = 0;
    }

    /// Monomials of standard degree `e` (ignores the grading).
    pub fn monomials_of_total_degree(&self, e: u32) -> Vec<Mono> {
        let n = self.nvars();
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        fn rec(i: usize, left: u32, cur: &mut Mono, out: &mut Vec<Mono>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(cur.clone());
                cur[i] = 0;
                return;
            }
            for k in (0..=left).rev() {
                cur[i] = k;
                rec(i + 1, left - k, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, e, &mut cur, &mut out);
        out.sort_by(|a, b| self.cmp(b, a));
        out
    }

    pub fn zero(self: &Arc<Self>) -> Polynomial {
        Polynomial { ring: self.clone(), terms: Vec::new() }
    }

    pub fn constant(self: &Arc<Self>, c: Scalar) -> Polynomial {
        self.term(vec![0; self.nvars()], c)
    }

    pub fn one(self: &Arc<Self>) -> Polynomial {
        self.constant(self.field.one())
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Polynomial {
        let mut m = vec![0; self.nvars()];
        m[i] = 1;
        self.term(m, self.field.one())
    }

    pub fn vars(self: &Arc<Self>) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    pub fn term(self: &Arc<Self>, m: Mono, c: Scalar) -> Polynomial {
        if c.is_zero() {
            return self.zero();
        }
        Polynomial { ring: self.clone(), terms: vec![(m, c)] }
    }

    pub fn monomial(self: &Arc<Self>, m: Mono) -> Polynomial {
        self.term(m, self.field.one())
    }

    pub fn from_terms(self: &Arc<Self>, terms: Vec<(Mono, Scalar)>) -> Polynomial {
        let mut map: BTreeMap<Mono, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), self.nvars());
            match map.get_mut(&m) {
                Some(v) => *v = v.add(&c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        let mut t: Vec<(Mono, Scalar)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        t.sort_by(|a, b| self.cmp(&b.0, &a.0));
        Polynomial { ring: self.clone(), terms: t }
    }

    /// Polynomial with the given coefficients on a list of monomials.
    pub fn from_coeffs(self: &Arc<Self>, basis: &[Mono], coeffs: &[Scalar]) -> Polynomial {
        self.from_terms(basis.iter().cloned().zip(coeffs.iter().cloned()).collect())
    }

    pub fn same(&self, other: &Ring) -> bool {
        std::ptr::eq(self, other) || self == other
    }
}

pub fn mono_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn mono_mul(a: &[u32], b: &[u32]) -> Mono {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_add(*y).expect("exponent overflow"))
        .collect()
}

pub fn mono_div(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn mono_lcm(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn mono_coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

pub fn mono_total(a: &[u32]) -> u32 {
    a.iter().sum()
}

/// Polynomial with terms sorted decreasingly in its ring's order.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Mono, Scalar)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same(&other.ring) && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl Polynomial {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Mono, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Mono, Scalar)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Mono {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &Scalar {
        &self.terms[0].1
    }

    pub fn coefficient(&self, m: &[u32]) -> Scalar {
        self.terms
            .iter()
            .find(|(t, _)| t.as_slice() == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    fn check(&self, o: &Polynomial) {
        assert!(self.ring.same(&o.ring), "polynomials from different rings");
    }

    fn merge(&self, o: &Polynomial, negate: bool) -> Polynomial {
        self.check(o);
        let r = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &o.terms[j];
            match r.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), if negate { cb.neg() } else { cb.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { ca.sub(cb) } else { ca.add(cb) };
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for (m, c) in &o.terms[j..] {
            out.push((m.clone(), if negate { c.neg() } else { c.clone() }));
        }
        Polynomial { ring: r.clone(), terms: out }
    }

    pub fn add(&self, o: &Polynomial) -> Polynomial {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &Polynomial) -> Polynomial {
        self.merge(o, true)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect(),
        }
    }

    /// `c * x^m * self`; order is preserved by monomial multiplication.
    pub fn mul_term(&self, m: &[u32], c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (mono_mul(t, m), a.mul(c))).collect(),
        }
    }

    /// `self - c * x^m * g` without building the intermediate product.
    pub fn sub_mul_term(&self, m: &[u32], c: &Scalar, g: &Polynomial) -> Polynomial {
        self.sub(&g.mul_term(m, c))
    }

    pub fn mul(&self, o: &Polynomial) -> Polynomial {
        self.check(o);
        let (a, b) = if self.len() < o.len() { (self, o) } else { (o, self) };
        let mut acc = self.ring.zero();
        for (m, c) in &a.terms {
            acc = acc.add(&b.mul_term(m, c));
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut r = self.ring.one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    pub fn monic(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().inv())
    }

    /// Multidegree if homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<Degree> {
        let d = self.ring.degree(&self.terms.first()?.0);
        if self.terms.iter().all(|(m, _)| self.ring.degree(m) == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Degree of the first term (for homogeneous input, the degree).
    pub fn degree(&self) -> Degree {
        self.ring.degree(&self.terms[0].0)
    }

    pub fn max_total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| mono_total(m)).max().unwrap_or(0)
    }

    pub fn max_weight(&self) -> i64 {
        self.terms.iter().map(|(m, _)| self.ring.weight(m)).max().unwrap_or(0)
    }

    /// Coefficients on the given monomial basis; `None` if a term falls outside it.
    pub fn coeff_vector(&self, basis: &[Mono]) -> Option<Vec<Scalar>> {
        let f = self.ring.field();
        let mut v = vec![f.zero(); basis.len()];
        let idx: std::collections::HashMap<&Mono, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        for (m, c) in &self.terms {
            v[*idx.get(m)?] = c.clone();
        }
        Some(v)
    }

    /// Re-express in another ring with the same number of variables.
    pub fn to_ring(&self, r: &RingRef) -> Polynomial {
        assert_eq!(r.nvars(), self.ring.nvars());
        r.from_terms(self.terms.clone())
    }

    /// Re-express with variable `i` sent to variable `map[i]` of `r`.
    pub fn map_vars(&self, r: &RingRef, map: &[usize]) -> Polynomial {
        r.from_terms(
            self.terms
                .iter()
                .map(|(m, c)| {
                    let mut nm = vec![0; r.nvars()];
                    for (i, &e) in m.iter().enumerate() {
                        nm[map[i]] += e;
                    }
                    (nm, c.clone())
                })
                .collect(),
        )
    }

    /// Substitute polynomials for the variables.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars());
        let target = images[0].ring().clone();
        let mut acc = target.zero();
        let mut cache: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![target.one(), p.clone()]).collect();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.iter().enumerate() {
                while cache[i].len() <= e as usize {
                    let next = cache[i].last().unwrap().mul(&images[i]);
                    cache[i].push(next);
                }
                if e > 0 {
                    t = t.mul(&cache[i][e as usize]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        let f = self.ring.field();
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m) {
                t = t.mul(&x.pow(e));
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Polynomial {
        let f = self.ring.field();
        self.ring.from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m[i] > 0)
                .map(|(m, c)| {
                    let mut nm = m.clone();
                    nm[i] -= 1;
                    (nm, c.mul(&f.from_i64(m[i] as i64)))
                })
                .collect(),
        )
    }

    /// Divide by the largest power of variable `i` dividing every term.
    pub fn strip_var(&self, i: usize) -> Polynomial {
        let k = self.terms.iter().map(|(m, _)| m[i]).min().unwrap_or(0);
        if k == 0 {
            return self.clone();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut nm = m.clone();
                    nm[i] -= k;
                    (nm, c.clone())
                })
                .collect(),
        }
    }

    /// Exact quotient by a monomial; `None` when some term is not divisible.
    pub fn div_monomial(&self, d: &[u32]) -> Option<Polynomial> {
        let mut t = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            if !mono_divides(d, m) {
                return None;
            }
            t.push((mono_div(m, d), c.clone()));
        }
        Some(Polynomial { ring: self.ring.clone(), terms: t })
    }

    /// Terms of multidegree `d`.
    pub fn part_of_degree(&self, d: &[i64]) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| self.ring.degree(m) == d).cloned().collect(),
        }
    }

    pub fn homogeneous_components(&self) -> Vec<(Degree, Polynomial)> {
        let mut map: BTreeMap<Degree, Vec<(Mono, Scalar)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            map.entry(self.ring.degree(m)).or_default().push((m.clone(), c.clone()));
        }
        map.into_iter()
            .map(|(d, t)| (d, Polynomial { ring: self.ring.clone(), terms: t }))
            .collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.names[i].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.names[i], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring3() -> RingRef {
        Ring::standard(&["a0", "a1", "a2"], Field::Rational)
    }

    #[test]
    fn grevlex_orders_by_degree_then_last_variable() {
        let r = ring3();
        assert_eq!(r.cmp(&[0, 0, 2], &[1, 0, 0]), Ordering::Greater);
        assert_eq!(r.cmp(&[1, 1, 0], &[1, 0, 1]), Ordering::Greater);
        assert_eq!(r.cmp(&[0, 2, 0], &[1, 0, 1]), Ordering::Greater);
    }

    #[test]
    fn monomial_count() {
        let r = ring3();
        assert_eq!(r.monomials_of_degree(&[3]).len(), 10);
        assert_eq!(r.monomials_of_total_degree(3).len(), 10);
        let bb = Ring::new(
            vec!["a0".into(), "a1".into(), "a2".into()],
            vec![vec![1, 1, 1], vec![0, 1, 0]],
            Field::Rational,
        )
        .unwrap();
        assert_eq!(bb.monomials_of_degree(&[2, 1]).len(), 2);
    }

    #[test]
    fn zero_degree_variable_rejected() {
        let e = Ring::new(vec!["x".into(), "y".into()], vec![vec![1, 0]], Field::Rational);
        assert_eq!(e.unwrap_err(), RingError::ZeroDegree("y".into()));
    }

    #[test]
    fn product_and_display() {
        let r = ring3();
        let a = r.var(0).sub(&r.var(2));
        let p = a.mul(&a);
        assert_eq!(p.to_string(), "a0^2 - 2*a0*a2 + a2^2");
    }
}
