//! One-parameter families over 𝕜[t] and their degreewise limits at `t = 0`.

use std::fmt;

use thiserror::Error;

use crate::apolarity::perp_degree;
use crate::ideal::Ideal;
use crate::linalg::{kernel, rank, rref, Subspace, Vector};
use crate::ring::{Mono, Polynomial, RingRef};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LimitError {
    #[error("t^d * G_{0} is not in the k[t]-span of the family")]
    MembershipFails(usize),
    #[error("limit forms are linearly dependent at t = 0")]
    DependentLimits,
    #[error("points {0} and {1} coincide for every t")]
    PointsCollideIdentically(usize, usize),
    #[error("element {0} is not homogeneous in the ring grading")]
    NotHomogeneous(usize),
    #[error("{0}")]
    Shape(String),
}

/// Polynomial in `t` over a field, lowest coefficient first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    c: Vec<Scalar>,
}

impl UniPoly {
    pub fn zero(field: Field) -> UniPoly {
        UniPoly { field, c: Vec::new() }
    }

    pub fn constant(c: Scalar) -> UniPoly {
        UniPoly::from_coeffs(c.field(), vec![c])
    }

    pub fn from_coeffs(field: Field, mut c: Vec<Scalar>) -> UniPoly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UniPoly { field, c }
    }

    /// `c·t^k`.
    pub fn monomial(c: Scalar, k: usize) -> UniPoly {
        let f = c.field();
        let mut v = vec![f.zero(); k];
        v.push(c);
        UniPoly::from_coeffs(f, v)
    }

    /// From a polynomial involving only variable `var`.
    pub fn from_polynomial(p: &Polynomial, var: usize) -> UniPoly {
        let f = p.ring().field();
        let mut u = UniPoly::zero(f);
        for (m, c) in p.terms() {
            assert!(m.iter().enumerate().all(|(i, &e)| i == var || e == 0), "univariate input expected");
            u = u.add(&UniPoly::monomial(c.clone(), m[var] as usize));
        }
        u
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Exponent of the lowest nonzero term.
    pub fn order(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.c.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.c.len().max(o.c.len());
        UniPoly::from_coeffs(self.field, (0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect())
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        self.add(&o.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> UniPoly {
        UniPoly::from_coeffs(self.field, self.c.iter().map(|x| x.mul(s)).collect())
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero(self.field);
        }
        let mut r = vec![self.field.zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                r[i + j] = r[i + j].add(&a.mul(b));
            }
        }
        UniPoly::from_coeffs(self.field, r)
    }

    /// Drop the `k` lowest coefficients (exact division by `t^k` when they vanish).
    pub fn shift_down(&self, k: usize) -> UniPoly {
        UniPoly::from_coeffs(self.field, self.c.iter().skip(k).cloned().collect())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.c.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.c[dd].inv();
        let mut r = self.clone();
        let mut q = UniPoly::zero(self.field);
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let m = UniPoly::monomial(r.c[rd].mul(&inv), rd - dd);
            r = r.sub(&m.mul(d));
            q = q.add(&m);
        }
        (q, r)
    }

    /// Interpolating polynomial through `(i, ys[i])`, `i = 0, 1, …`.
    pub fn interpolate(field: Field, ys: &[Scalar]) -> UniPoly {
        let xs: Vec<Scalar> = (0..ys.len()).map(|i| field.from_i64(i as i64)).collect();
        let mut acc = UniPoly::zero(field);
        for (j, y) in ys.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let mut basis = UniPoly::constant(field.one());
            let mut denom = field.one();
            for (k, xk) in xs.iter().enumerate() {
                if k != j {
                    basis = basis.mul(&UniPoly::from_coeffs(field, vec![xk.neg(), field.one()]));
                    denom = denom.mul(&xs[j].sub(xk));
                }
            }
            acc = acc.add(&basis.scale(&y.div(&denom)));
        }
        acc
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = if neg { c.neg() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// Vector over 𝕜[t].
pub type PVec = Vec<UniPoly>;

fn pvec_degree(v: &PVec) -> usize {
    v.iter().filter_map(|x| x.degree()).max().unwrap_or(0)
}

fn pvec_is_zero(v: &PVec) -> bool {
    v.iter().all(|x| x.is_zero())
}

fn pvec_at(v: &PVec, x: &Scalar) -> Vector {
    v.iter().map(|p| p.eval(x)).collect()
}

fn pvec_axpy(v: &PVec, a: &UniPoly, w: &PVec) -> PVec {
    v.iter().zip(w).map(|(x, y)| x.add(&a.mul(y))).collect()
}

/// Divide out the largest power of `t` dividing every entry.
fn remove_t_content(v: &PVec) -> PVec {
    let k = v.iter().filter_map(|x| x.order()).min().unwrap_or(0);
    v.iter().map(|x| x.shift_down(k)).collect()
}

/// A one-parameter family: elements of `S[t]` with `deg t = 0`.
#[derive(Clone, Debug)]
pub struct ParamFamily {
    base: RingRef,
    ring: RingRef,
    elements: Vec<Polynomial>,
}

impl ParamFamily {
    /// `base` with the parameter `t` appended as last variable.
    pub fn param_ring(base: &RingRef) -> RingRef {
        base.with_parameter("t")
    }

    pub fn new(base: &RingRef, elements: Vec<Polynomial>) -> Result<ParamFamily, LimitError> {
        let ring = match elements.first() {
            Some(p) => p.ring().clone(),
            None => ParamFamily::param_ring(base),
        };
        if ring.param() != Some(base.nvars()) {
            return Err(LimitError::Shape("family ring must be the base ring with t appended".into()));
        }
        for (i, e) in elements.iter().enumerate() {
            if !e.is_homogeneous() {
                return Err(LimitError::NotHomogeneous(i));
            }
        }
        Ok(ParamFamily { base: base.clone(), ring, elements })
    }

    pub fn base(&self) -> &RingRef {
        &self.base
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    /// Members at `t = λ`.
    pub fn specialize(&self, lambda: &Scalar) -> Vec<Polynomial> {
        self.elements.iter().map(|p| specialize(&self.base, p, lambda)).collect()
    }
}

/// `p(t = λ)` as an element of the base ring.
pub fn specialize(base: &RingRef, p: &Polynomial, lambda: &Scalar) -> Polynomial {
    let n = base.nvars();
    base.from_terms(p.terms().iter().map(|(m, c)| (m[..n].to_vec(), c.mul(&lambda.pow(m[n])))).collect())
}

/// Coordinates of `p ∈ S[t]` on the base monomials `monos`, as a vector over 𝕜[t].
pub fn to_pvec(base: &RingRef, p: &Polynomial, monos: &[Mono]) -> Option<PVec> {
    let n = base.nvars();
    let f = base.field();
    let idx: std::collections::HashMap<&[u32], usize> = monos.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let mut v = vec![UniPoly::zero(f); monos.len()];
    for (m, c) in p.terms() {
        let i = *idx.get(&m[..n])?;
        v[i] = v[i].add(&UniPoly::monomial(c.clone(), m[n] as usize));
    }
    Some(v)
}

/// Result of a degreewise limit.
#[derive(Clone, Debug)]
pub struct LimitSubspace {
    pub monos: Vec<Mono>,
    pub limit: Subspace,
    pub generic_rank: usize,
    /// Nonzero `f` such that the span has the generic rank at every `λ` with `f(λ) ≠ 0`.
    pub certificate: UniPoly,
}

impl LimitSubspace {
    pub fn basis(&self, ring: &RingRef) -> Vec<Polynomial> {
        self.limit.basis().iter().map(|v| ring.from_coeffs(&self.monos, v)).collect()
    }
}

fn sample_points(field: Field, count: usize) -> Vec<Scalar> {
    let cap = match field {
        Field::Rational => count,
        Field::Prime(p) => count.min(p as usize),
    };
    (0..cap).map(|i| field.from_i64(i as i64)).collect()
}

/// Determinant of a square scalar matrix.
fn det(field: Field, mut m: Vec<Vector>) -> Scalar {
    let n = m.len();
    let mut d = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else { return field.zero() };
        if p != c {
            m.swap(p, c);
            d = d.neg();
        }
        d = d.mul(&m[c][c]);
        let inv = m[c][c].inv();
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].mul(&inv);
            for k in c..n {
                let x = f.mul(&m[c][k]);
                m[i][k] = m[i][k].sub(&x);
            }
        }
    }
    d
}

/// `det` of the rows `vecs` restricted to `cols`, as a polynomial in `t`.
fn minor_polynomial(field: Field, vecs: &[PVec], cols: &[usize]) -> UniPoly {
    let bound: usize = vecs.iter().map(pvec_degree).sum();
    let ys: Vec<Scalar> = sample_points(field, bound + 1)
        .iter()
        .map(|x| det(field, vecs.iter().map(|v| cols.iter().map(|&c| v[c].eval(x)).collect()).collect()))
        .collect();
    UniPoly::interpolate(field, &ys)
}

/// A 𝕜(t)-basis among `vecs` and the point at which it was certified independent.
fn generic_basis(field: Field, vecs: &[PVec], ncols: usize) -> (Vec<PVec>, Scalar) {
    let vecs: Vec<PVec> = vecs.iter().filter(|v| !pvec_is_zero(v)).cloned().collect();
    let bound: usize = vecs.iter().map(pvec_degree).sum();
    let target = vecs.len().min(ncols);
    let mut best = (0usize, field.zero());
    for x in sample_points(field, bound + 1) {
        let r = rank(&vecs.iter().map(|v| pvec_at(v, &x)).collect::<Vec<_>>(), ncols);
        if r > best.0 {
            best = (r, x);
        }
        if best.0 == target {
            break;
        }
    }
    let x = best.1;
    let mut sp = Subspace::zero(field, ncols);
    let mut out = Vec::new();
    for v in vecs {
        let at = pvec_at(&v, &x);
        if !sp.contains(&at) {
            sp = sp.sum(&Subspace::span(field, ncols, vec![at]));
            out.push(v);
        }
    }
    (out, x)
}

/// Limit at `t = 0` of the span of `vecs` (t-saturation of the 𝕜[t]-module they generate).
pub fn limit_of_vectors(field: Field, vecs: &[PVec], ncols: usize) -> (Subspace, usize, UniPoly) {
    let (mut b, x) = generic_basis(field, vecs, ncols);
    let r = b.len();
    let certificate = if r == 0 {
        UniPoly::monomial(field.one(), 1)
    } else {
        let mut rows: Vec<Vector> = b.iter().map(|v| pvec_at(v, &x)).collect();
        let cols = rref(&mut rows, ncols);
        minor_polynomial(field, &b, &cols).mul(&UniPoly::monomial(field.one(), 1))
    };
    loop {
        for v in b.iter_mut() {
            *v = remove_t_content(v);
        }
        let zero = field.zero();
        // columns of this matrix are the vectors at t = 0
        let at0: Vec<Vector> = b.iter().map(|v| pvec_at(v, &zero)).collect();
        let rows: Vec<Vector> = (0..ncols).map(|k| at0.iter().map(|v| v[k].clone()).collect()).collect();
        let ker = kernel(field, &rows, b.len());
        let Some(c) = ker.into_iter().next() else {
            return (Subspace::span(field, ncols, at0), r, certificate);
        };
        let star = (0..b.len()).filter(|&i| !c[i].is_zero()).max_by_key(|&i| (pvec_degree(&b[i]), i)).unwrap();
        let mut comb = vec![UniPoly::zero(field); ncols];
        for (i, ci) in c.iter().enumerate() {
            if !ci.is_zero() {
                comb = pvec_axpy(&comb, &UniPoly::constant(ci.clone()), &b[i]);
            }
        }
        b[star] = comb;
    }
}

/// Limit of the span of the family elements of degree `deg`.
pub fn limit_subspace(fam: &ParamFamily, deg: &[i64]) -> LimitSubspace {
    let monos = fam.base.monomials_of_degree(deg);
    let vecs: Vec<PVec> = fam
        .elements
        .iter()
        .filter(|p| !p.is_zero() && p.degree() == deg)
        .map(|p| to_pvec(&fam.base, p, &monos).expect("degree piece"))
        .collect();
    let (limit, generic_rank, certificate) = limit_of_vectors(fam.base.field(), &vecs, monos.len());
    LimitSubspace { monos, limit, generic_rank, certificate }
}

/// Row echelon form over 𝕜[t] (Euclidean elimination per column).
pub fn hermite_rows(field: Field, rows: &[PVec], ncols: usize) -> Vec<(usize, PVec)> {
    let mut m: Vec<PVec> = rows.iter().filter(|v| !pvec_is_zero(v)).cloned().collect();
    let mut out = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        loop {
            let nz = (r..m.len()).filter(|&i| !m[i][c].is_zero()).min_by_key(|&i| (m[i][c].degree(), i));
            let Some(p) = nz else { break };
            m.swap(r, p);
            let mut clean = true;
            for i in r + 1..m.len() {
                if m[i][c].is_zero() {
                    continue;
                }
                let (q, rem) = m[i][c].div_rem(&m[r][c]);
                m[i] = pvec_axpy(&m[i], &q.scale(&field.from_i64(-1)), &m[r]);
                if !rem.is_zero() {
                    clean = false;
                }
            }
            if clean {
                out.push((c, m[r].clone()));
                r += 1;
                break;
            }
        }
    }
    out
}

/// Membership of `w` in the 𝕜[t]-row span of an echelon form.
pub fn in_module(field: Field, echelon: &[(usize, PVec)], w: &PVec) -> bool {
    let mut w = w.clone();
    let mut next = 0;
    for j in 0..w.len() {
        if next < echelon.len() && echelon[next].0 == j {
            let row = &echelon[next].1;
            let (q, rem) = w[j].div_rem(&row[j]);
            if !rem.is_zero() {
                return false;
            }
            w = pvec_axpy(&w, &q.scale(&field.from_i64(-1)), row);
            next += 1;
        } else if !w[j].is_zero() {
            return false;
        }
    }
    true
}

#[derive(Clone, Debug)]
pub struct LimitFormsReport {
    pub limit: Vec<Polynomial>,
    /// The `F_i` are independent at every `λ` with `certificate(λ) ≠ 0`.
    pub certificate: UniPoly,
}

/// Checks that `t^{d_i}·G_i` lies in the 𝕜[t]-span of `F` and that the `G_i(0)` are
/// independent; then the limit of `span F` is `span G(0)`.
pub fn verify_limit_forms(base: &RingRef, f: &[Polynomial], g: &[Polynomial], d: &[u32]) -> Result<LimitFormsReport, LimitError> {
    if f.len() != g.len() || g.len() != d.len() || f.is_empty() {
        return Err(LimitError::Shape("F, G and d must have the same positive length".into()));
    }
    let deg = f[0].degree();
    for (i, p) in f.iter().chain(g).enumerate() {
        if !p.is_homogeneous() || p.is_zero() || p.degree() != deg {
            return Err(LimitError::NotHomogeneous(i % f.len()));
        }
    }
    let field = base.field();
    let monos = base.monomials_of_degree(&deg);
    let fv: Vec<PVec> = f.iter().map(|p| to_pvec(base, p, &monos).unwrap()).collect();
    let gv: Vec<PVec> = g.iter().map(|p| to_pvec(base, p, &monos).unwrap()).collect();
    let ech = hermite_rows(field, &fv, monos.len());
    for (i, (v, &di)) in gv.iter().zip(d).enumerate() {
        let shifted: PVec = v.iter().map(|x| x.mul(&UniPoly::monomial(field.one(), di as usize))).collect();
        if !in_module(field, &ech, &shifted) {
            return Err(LimitError::MembershipFails(i));
        }
    }
    let zero = field.zero();
    let mut at0: Vec<Vector> = gv.iter().map(|v| pvec_at(v, &zero)).collect();
    let cols = rref(&mut at0, monos.len());
    if cols.len() < g.len() {
        return Err(LimitError::DependentLimits);
    }
    let certificate = minor_polynomial(field, &fv, &cols).mul(&UniPoly::monomial(field.one(), 1));
    let limit = g.iter().map(|p| specialize(base, p, &zero)).collect();
    Ok(LimitFormsReport { limit, certificate })
}

/// Degreewise limit ideal with per-degree bookkeeping.
#[derive(Clone, Debug)]
pub struct LimitIdeal {
    pub ideal: Ideal,
    pub bound: i64,
    /// `(limit dimension, generic rank)` of the degree-`e` piece, `e = 1..=bound`.
    pub ranks: Vec<(usize, usize)>,
    /// All generators occur in degrees `≤ bound − 1`.
    pub complete: bool,
}

fn assemble(base: &RingRef, pieces: Vec<(i64, Vec<Polynomial>)>, bound: i64, ranks: Vec<(usize, usize)>) -> LimitIdeal {
    let mut gens: Vec<Polynomial> = Vec::new();
    let mut top = 0;
    for (e, basis) in pieces {
        let have = Ideal::from_homogeneous(base, gens.clone());
        let (monos, mut sp) = have.degree_part(&[e]);
        for p in basis {
            let v = p.coeff_vector(&monos).expect("degree e");
            if !sp.contains(&v) {
                sp = sp.sum(&Subspace::span(base.field(), monos.len(), vec![v]));
                gens.push(p);
                top = e;
            }
        }
    }
    LimitIdeal { ideal: Ideal::from_homogeneous(base, gens), bound, ranks, complete: top < bound }
}

/// Limit of the ideals generated by a family, degrees `1..=bound` (ℕ-graded base).
pub fn limit_ideal_family(fam: &ParamFamily, bound: i64) -> LimitIdeal {
    let base = fam.base();
    let pr = fam.ring();
    let n = base.nvars();
    let mut pieces = Vec::new();
    let mut ranks = Vec::new();
    for e in 1..=bound {
        let monos = base.monomials_of_degree(&[e]);
        let mut vecs = Vec::new();
        for g in fam.elements().iter().filter(|g| !g.is_zero()) {
            let dg = g.degree()[0];
            if dg > e {
                continue;
            }
            for m in base.monomials_of_degree(&[e - dg]) {
                let mut pm = m.clone();
                pm.push(0);
                debug_assert_eq!(pm.len(), n + 1);
                let p = g.mul(&pr.monomial(pm));
                vecs.push(to_pvec(base, &p, &monos).expect("degree e"));
            }
        }
        let (limit, r, _) = limit_of_vectors(base.field(), &vecs, monos.len());
        ranks.push((limit.dim(), r));
        pieces.push((e, limit.basis().iter().map(|v| base.from_coeffs(&monos, v)).collect()));
    }
    assemble(base, pieces, bound, ranks)
}

/// Limit of the ideals of points with coordinates in 𝕜[t], degrees `1..=bound`.
pub fn limit_ideal_points(base: &RingRef, points: &[Vec<UniPoly>], bound: i64) -> Result<LimitIdeal, LimitError> {
    if !base.is_standard() {
        return Err(LimitError::Shape("point sets need a standard graded ring".into()));
    }
    let n = base.nvars();
    for (i, p) in points.iter().enumerate() {
        if p.len() != n {
            return Err(LimitError::Shape(format!("point {i} has {} coordinates, expected {n}", p.len())));
        }
        if p.iter().all(|x| x.is_zero()) {
            return Err(LimitError::Shape(format!("point {i} is identically zero")));
        }
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let prop = (0..n).all(|a| {
                (a + 1..n).all(|b| points[i][a].mul(&points[j][b]).sub(&points[i][b].mul(&points[j][a])).is_zero())
            });
            if prop {
                return Err(LimitError::PointsCollideIdentically(i, j));
            }
        }
    }
    let field = base.field();
    let mut pieces = Vec::new();
    let mut ranks = Vec::new();
    for e in 1..=bound {
        let monos = base.monomials_of_degree(&[e]);
        let vecs: Vec<PVec> = points
            .iter()
            .map(|p| {
                monos
                    .iter()
                    .map(|m| {
                        let mut acc = UniPoly::constant(field.one());
                        for (x, &k) in p.iter().zip(m) {
                            for _ in 0..k {
                                acc = acc.mul(x);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        let (limit, r, _) = limit_of_vectors(field, &vecs, monos.len());
        let dual: Vec<Polynomial> = limit.basis().iter().map(|v| base.from_coeffs(&monos, v)).collect();
        let ie = perp_degree(base, e, &dual);
        ranks.push((monos.len() - limit.dim(), monos.len() - r));
        pieces.push((e, ie));
    }
    Ok(assemble(base, pieces, bound, ranks))
}
