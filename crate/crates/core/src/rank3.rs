//! Cactus-rank certificates for ternary forms: middle generators, the square
//! criterion, the two special shapes and the wild-polynomial exclusion pipeline.
//!
//! Forms live in the dual ring; everything below is phrased for the contraction
//! action, so a form given for differentiation is converted first.

use serde::Serialize;
use thiserror::Error;

use crate::apolarity::{annihilator_degree, contract, Catalecticant, DualPolynomial};
use crate::groebner::reduce;
use crate::ideal::Ideal;
use crate::linalg::{kernel, solve_columns, Vector};
use crate::ring::{Mono, Polynomial, RingRef};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RankError {
    #[error("form must be nonzero and homogeneous of positive degree in three variables")]
    BadForm,
    #[error("the square of the linear form does not annihilate the form")]
    SquareDoesNotAnnihilate,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("linear solve failed: {0}")]
    LinearSolveFailed(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Checks {
    pub saturated: bool,
    pub one_dimensional: bool,
    pub degree_within_bound: bool,
    pub annihilates: bool,
}

impl Checks {
    pub fn all(&self) -> bool {
        self.saturated && self.one_dimensional && self.degree_within_bound && self.annihilates
    }
}

/// A saturated apolar ideal `Γ` bounding the cactus rank of `F` by `bound`.
#[derive(Clone, Debug, Serialize)]
pub struct RankCertificate {
    pub form: String,
    pub generators: Vec<String>,
    pub bound: i64,
    pub degree: Option<i128>,
    pub route: String,
    pub checks: Checks,
    #[serde(skip)]
    pub gamma: Ideal,
    #[serde(skip)]
    pub f: DualPolynomial,
}

/// Recomputes the four checks from scratch.
pub fn check_certificate(f: &DualPolynomial, gamma: &Ideal, bound: i64) -> (Checks, Option<i128>) {
    let annihilates = gamma.gens().iter().all(|g| contract(g, f).poly.is_zero());
    let ser = gamma.standard_series();
    let one_dimensional = ser.dim == 1;
    let degree = one_dimensional.then(|| ser.degree());
    let checks = Checks {
        saturated: gamma.is_saturated(),
        one_dimensional,
        degree_within_bound: degree.is_some_and(|x| x <= bound as i128),
        annihilates,
    };
    (checks, degree)
}

impl RankCertificate {
    pub fn new(f: &DualPolynomial, gamma: Ideal, bound: i64, route: &str) -> RankCertificate {
        let gamma = gamma.reduced_generators();
        let (checks, degree) = check_certificate(f, &gamma, bound);
        RankCertificate {
            form: f.poly.to_string(),
            generators: gamma.gens().iter().map(|g| g.to_string()).collect(),
            bound,
            degree,
            route: route.into(),
            checks,
            gamma,
            f: f.clone(),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.checks.all()
    }

    /// Independent re-run of the checks on the stored ideal.
    pub fn revalidate(&self) -> bool {
        check_certificate(&self.f, &self.gamma, self.bound).0.all()
    }
}

fn form_degree(s: &RingRef, f: &DualPolynomial) -> Result<i64, RankError> {
    match f.degree() {
        Some(d) if d > 0 && !f.poly.is_zero() && s.nvars() == 3 && f.ring().nvars() == 3 => Ok(d),
        _ => Err(RankError::BadForm),
    }
}

/// `⌈(d+1)/2⌉`.
pub fn middle_degree(d: i64) -> i64 {
    (d + 2) / 2
}

/// `H_{S/Ann(F)}` through catalecticant ranks, degrees `0..=d`.
pub fn apolar_hilbert(s: &RingRef, f: &DualPolynomial) -> Vec<usize> {
    let d = f.degree().unwrap_or(0);
    (0..=d).map(|e| Catalecticant::new(s, f, e).rank()).collect()
}

pub fn is_symmetric(h: &[usize]) -> bool {
    h.iter().eq(h.iter().rev())
}

pub fn is_unimodal(h: &[usize]) -> bool {
    let peak = h.iter().enumerate().max_by_key(|(_, &v)| v).map_or(0, |(i, _)| i);
    h[..=peak].windows(2).all(|w| w[0] <= w[1]) && h[peak..].windows(2).all(|w| w[0] >= w[1])
}

fn monos_in(s: &RingRef, vars: &[usize], e: i64) -> Vec<Mono> {
    s.monomials_of_degree(&[e])
        .into_iter()
        .filter(|m| m.iter().enumerate().all(|(i, &k)| k == 0 || vars.contains(&i)))
        .collect()
}

/// Matrix (as rows) of `θ ↦ (prefix·θ) ⌟ F` on `span(cols)`.
fn contraction_rows(s: &RingRef, f: &DualPolynomial, prefix: &Polynomial, cols: &[Mono]) -> (Vec<Vector>, Vec<Mono>) {
    let d = f.degree().unwrap_or(0);
    let pd = prefix.homogeneous_degree().map_or(0, |x| x[0]);
    let te = d - pd - cols.first().map_or(0, |m| m.iter().sum::<u32>() as i64);
    let target = if te >= 0 { f.ring().monomials_of_degree(&[te]) } else { Vec::new() };
    let field = s.field();
    let mut rows = vec![vec![field.zero(); cols.len()]; target.len()];
    for (j, m) in cols.iter().enumerate() {
        let g = contract(&prefix.mul(&s.monomial(m.clone())), f);
        if let Some(v) = g.poly.coeff_vector(&target) {
            for (i, x) in v.into_iter().enumerate() {
                rows[i][j] = x;
            }
        }
    }
    (rows, target)
}

/// Forms `θ ∈ span(cols)` with `(prefix·θ) ⌟ F = 0`.
fn kernel_forms(s: &RingRef, f: &DualPolynomial, prefix: &Polynomial, cols: &[Mono]) -> Vec<Polynomial> {
    let (rows, _) = contraction_rows(s, f, prefix, cols);
    kernel(s.field(), &rows, cols.len()).into_iter().map(|v| s.from_coeffs(cols, &v)).collect()
}

/// Some `θ ∈ span(cols)` with `(prefix·θ) ⌟ F = target`.
fn solve_form(s: &RingRef, f: &DualPolynomial, prefix: &Polynomial, cols: &[Mono], target: &Polynomial) -> Option<Polynomial> {
    let (rows, tmonos) = contraction_rows(s, f, prefix, cols);
    let b = target.coeff_vector(&tmonos)?;
    let columns: Vec<Vector> = (0..cols.len()).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
    solve_columns(s.field(), &columns, &b).map(|x| s.from_coeffs(cols, &x))
}

fn divisible_by_linear(p: &Polynomial, l: &Polynomial) -> bool {
    reduce(p, std::slice::from_ref(l), false).0.is_zero()
}

/// First echelon basis vector of `Ann(F)_e`, `e = ⌈(d+1)/2⌉`, outside `(ℓ)`.
pub fn middle_generator(s: &RingRef, f: &DualPolynomial, l: &Polynomial) -> Result<Polynomial, RankError> {
    let d = form_degree(s, f)?;
    let e = middle_degree(d);
    annihilator_degree(s, f, e)
        .into_iter()
        .find(|p| !divisible_by_linear(p, l))
        .ok_or_else(|| RankError::Internal(format!("Ann(F)_{e} ⊆ (ℓ); characteristic too small?")))
}

/// `Γ = (ℓ², σ)` with `σ` a middle generator; bound `2⌈(d+1)/2⌉`.
pub fn cactus_via_square(s: &RingRef, f: &DualPolynomial, l: &Polynomial) -> Result<RankCertificate, RankError> {
    let d = form_degree(s, f)?;
    let l2 = l.mul(l);
    if !contract(&l2, f).poly.is_zero() {
        return Err(RankError::SquareDoesNotAnnihilate);
    }
    let sigma = middle_generator(s, f, l)?;
    let gamma = Ideal::from_homogeneous(s, vec![l2, sigma]);
    Ok(RankCertificate::new(f, gamma, 2 * middle_degree(d), "square"))
}

fn third(vars: [usize; 2]) -> usize {
    3 - vars[0] - vars[1]
}

/// For `G` in the two variables `vars`: `(α_other, g)` with `g` a lowest-degree
/// annihilator in those variables. `None` for `G = 0`.
fn binary_ideal(s: &RingRef, g: &DualPolynomial, vars: [usize; 2]) -> Option<Ideal> {
    if g.poly.is_zero() {
        return None;
    }
    let d = g.degree()?;
    for e in 1..=d + 1 {
        if let Some(k) = kernel_forms(s, g, &s.one(), &monos_in(s, &vars, e)).into_iter().next() {
            return Some(Ideal::from_homogeneous(s, vec![s.var(third(vars)), k]));
        }
    }
    None
}

fn intersect_all(s: &RingRef, parts: Vec<Option<Ideal>>) -> Ideal {
    parts.into_iter().flatten().reduce(|a, b| a.intersect(&b)).unwrap_or_else(|| Ideal::unit(s))
}

/// Two coordinate variables carrying `F`, if there are such.
fn binary_support(f: &DualPolynomial) -> Option<[usize; 2]> {
    let used: Vec<usize> = (0..3).filter(|&i| f.poly.terms().iter().any(|(m, _)| m[i] > 0)).collect();
    match used.len() {
        1 => Some(if used[0] == 2 { [1, 2] } else { [used[0], used[0] + 1] }),
        2 => Some([used[0], used[1]]),
        _ => None,
    }
}

fn binary_certificate(s: &RingRef, f: &DualPolynomial, vars: [usize; 2]) -> Result<RankCertificate, RankError> {
    let d = form_degree(s, f)?;
    let gamma = binary_ideal(s, f, vars).ok_or_else(|| RankError::Internal("binary form without annihilator".into()))?;
    Ok(RankCertificate::new(f, gamma, middle_degree(d), "binary"))
}

enum Part {
    Mixed,
    G,
    H,
}

/// Splits `F = a·mixed + G + H` by a monomial classifier.
fn split(
    f: &DualPolynomial,
    classify: impl Fn(&[u32]) -> Option<Part>,
) -> Result<(crate::scalar::Scalar, DualPolynomial, DualPolynomial), RankError> {
    let r = f.ring().clone();
    let mut a = r.field().zero();
    let (mut g, mut h) = (Vec::new(), Vec::new());
    for (m, c) in f.poly.terms() {
        match classify(m) {
            Some(Part::Mixed) => a = c.clone(),
            Some(Part::G) => g.push((m.clone(), c.clone())),
            Some(Part::H) => h.push((m.clone(), c.clone())),
            None => return Err(RankError::ShapeMismatch(format!("unexpected monomial {}", r.monomial(m.clone())))),
        }
    }
    Ok((a, DualPolynomial::new(r.from_terms(g)), DualPolynomial::new(r.from_terms(h))))
}

/// `F = a·x0x1x2^{d−2} + G(x0,x2) + H(x1,x2)`, `d ≥ 4`: bound `d+3`.
pub fn special_case_3(s: &RingRef, f: &DualPolynomial) -> Result<RankCertificate, RankError> {
    let f = f.to_contraction();
    let d = form_degree(s, &f)?;
    if let Some(vars) = binary_support(&f) {
        return binary_certificate(s, &f, vars);
    }
    if d < 4 {
        return Err(RankError::ShapeMismatch("degree at least 4 required".into()));
    }
    let mixed = [1, 1, d as u32 - 2];
    let (a, g, h) = split(&f, |m| {
        if m == mixed {
            Some(Part::Mixed)
        } else if m[1] == 0 {
            Some(Part::G)
        } else if m[0] == 0 {
            Some(Part::H)
        } else {
            None
        }
    })?;
    if a.is_zero() {
        let gamma = intersect_all(s, vec![binary_ideal(s, &g, [0, 2]), binary_ideal(s, &h, [1, 2])]);
        return Ok(RankCertificate::new(&f, gamma, 2 * middle_degree(d), "a-zero"));
    }
    let (x0, x1, x2) = (s.var(0), s.var(1), s.var(2));
    let mut gens = vec![x0.pow(2).mul(&x1), x0.mul(&x1.pow(2))];
    let (p0, p1) = (x0.pow(2), x1.pow(2));
    if d % 2 == 1 {
        let k = (d - 1) / 2;
        let theta = kernel_forms(s, &f, &p0, &monos_in(s, &[0, 2], k)).into_iter().next();
        let eta = kernel_forms(s, &f, &p1, &monos_in(s, &[1, 2], k)).into_iter().next();
        let (Some(theta), Some(eta)) = (theta, eta) else {
            return Err(RankError::LinearSolveFailed("odd degree kernels are empty".into()));
        };
        gens.push(p0.mul(&theta));
        gens.push(p1.mul(&eta));
        return Ok(RankCertificate::new(&f, Ideal::from_homogeneous(s, gens), d + 3, "odd"));
    }
    let k = d / 2;
    let (c0, c1) = (monos_in(s, &[0, 2], k - 1), monos_in(s, &[1, 2], k - 1));
    let ker0 = kernel_forms(s, &f, &p0, &c0).into_iter().next();
    let ker1 = kernel_forms(s, &f, &p1, &c1).into_iter().next();
    if let (Some(theta), Some(eta)) = (&ker0, &ker1) {
        gens.push(p0.mul(theta));
        gens.push(p1.mul(eta));
        return Ok(RankCertificate::new(&f, Ideal::from_homogeneous(s, gens), d + 2, "even-kernels"));
    }
    let m = x0.mul(&x1).mul(&x2.pow(k as u32 - 1));
    let target = contract(&m, &f).poly;
    let solve = |p: &Polynomial, cols: &[Mono]| {
        solve_form(s, &f, p, cols, &target).ok_or_else(|| RankError::LinearSolveFailed("no θ with (α²θ) ⌟ F = α0α1α2^{k−1} ⌟ F".into()))
    };
    let pure = |p: &Polynomial| p.terms().len() == 1 && p.terms()[0].0[2] as i64 == k - 1;
    let (g1, g2, both_solved, pure_both) = match (ker0, ker1) {
        (None, Some(eta)) => {
            let theta = solve(&p0, &c0)?;
            (p0.mul(&theta).sub(&m), p1.mul(&eta), false, false)
        }
        (Some(theta), None) => {
            let eta = solve(&p1, &c1)?;
            (p0.mul(&theta), p1.mul(&eta).sub(&m), false, false)
        }
        _ => {
            let theta = solve(&p0, &c0)?;
            let eta = solve(&p1, &c1)?;
            let pure_both = pure(&theta) && pure(&eta);
            (p0.mul(&theta).sub(&m), p1.mul(&eta).sub(&m), true, pure_both)
        }
    };
    if both_solved && pure_both {
        gens.push(g1.sub(&g2));
        return Ok(RankCertificate::new(&f, Ideal::from_homogeneous(s, gens), d + 3, "even-residual"));
    }
    gens.push(g1);
    gens.push(g2);
    Ok(RankCertificate::new(&f, Ideal::from_homogeneous(s, gens), d + 2, "even-solved"))
}

/// `F = a·x0x2^{d−1} + G(x0,x1) + H(x1,x2)`: bound `d+3`.
pub fn special_case_4(s: &RingRef, f: &DualPolynomial) -> Result<RankCertificate, RankError> {
    let f = f.to_contraction();
    let d = form_degree(s, &f)?;
    if let Some(vars) = binary_support(&f) {
        return binary_certificate(s, &f, vars);
    }
    let mixed = [1, 0, d as u32 - 1];
    let (a, g, h) = split(&f, |m| {
        if m == mixed {
            Some(Part::Mixed)
        } else if m[2] == 0 {
            Some(Part::G)
        } else if m[0] == 0 {
            Some(Part::H)
        } else {
            None
        }
    })?;
    let e = middle_degree(d);
    if a.is_zero() {
        let gamma = intersect_all(s, vec![binary_ideal(s, &g, [0, 1]), binary_ideal(s, &h, [1, 2])]);
        return Ok(RankCertificate::new(&f, gamma, 2 * e, "a-zero"));
    }
    let rest = DualPolynomial::new(f.poly.sub(&g.poly));
    let (x0, x1, x2) = (s.var(0), s.var(1), s.var(2));
    let cols = monos_in(s, &[1, 2], e - 1);
    let third_gen = match kernel_forms(s, &rest, &x1, &cols).into_iter().next() {
        Some(theta) => x1.mul(&theta),
        None => {
            let m = x0.mul(&x2.pow(e as u32 - 1));
            let target = contract(&m, &rest).poly;
            let theta = solve_form(s, &rest, &x1, &cols, &target)
                .ok_or_else(|| RankError::LinearSolveFailed("no θ with (α1θ) ⌟ F = α0α2^{e−1} ⌟ F".into()))?;
            x1.mul(&theta).sub(&m)
        }
    };
    let gamma_rest = Ideal::from_homogeneous(s, vec![x0.pow(2), x0.mul(&x1), third_gen]);
    let (gamma, bound) = match binary_ideal(s, &g, [0, 1]) {
        Some(gg) => (gg.intersect(&gamma_rest), 2 * e + 1),
        None => (gamma_rest, e + 1),
    };
    Ok(RankCertificate::new(&f, gamma, bound, "mixed-line"))
}

/// Outcome of the wild-polynomial pipeline.
#[derive(Clone, Debug, Serialize)]
pub struct WildReport {
    pub degree: i64,
    pub assumed_border_rank: i64,
    pub hilbert: Vec<usize>,
    pub pattern: Option<String>,
    pub coordinates: Option<Vec<Vec<i64>>>,
    pub certificate: Option<RankCertificate>,
    pub conclusion: String,
}

/// `F(Mx)`, computed through the differentiation form where linear changes act naturally.
pub fn change_form(f: &DualPolynomial, m: &[Vec<i64>]) -> DualPolynomial {
    let r = f.ring().clone();
    let images = linear_images(&r, m, false);
    let d = f.to_differentiation().poly.substitute(&images);
    DualPolynomial::differentiation(d).to_contraction()
}

/// Variable images `a_i ↦ Σ_j m[i][j] a_j`, or the transpose.
pub fn linear_images(r: &RingRef, m: &[Vec<i64>], transpose: bool) -> Vec<Polynomial> {
    let field = r.field();
    (0..m.len())
        .map(|i| {
            (0..m.len()).fold(r.zero(), |acc, j| {
                let c = if transpose { m[j][i] } else { m[i][j] };
                acc.add(&r.var(j).scale(&field.from_i64(c)))
            })
        })
        .collect()
}

fn search_changes(extra: &[Vec<Vec<i64>>]) -> Vec<Vec<Vec<i64>>> {
    let perms = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
    let perm_matrix = |p: &[usize; 3]| -> Vec<Vec<i64>> {
        (0..3).map(|i| (0..3).map(|j| i64::from(p[i] == j)).collect()).collect()
    };
    let mul = |a: &Vec<Vec<i64>>, b: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
        (0..3).map(|i| (0..3).map(|j| (0..3).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
    };
    let mut out: Vec<Vec<Vec<i64>>> = vec![perm_matrix(&perms[0])];
    out.extend(extra.iter().cloned());
    out.extend(perms[1..].iter().map(perm_matrix));
    for c in [1, -1] {
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    continue;
                }
                let mut shear = perm_matrix(&perms[0]);
                shear[i][j] = c;
                for p in &perms {
                    out.push(mul(&shear, &perm_matrix(p)));
                }
            }
        }
    }
    out
}

fn annihilates(s: &RingRef, f: &DualPolynomial, monos: &[[u32; 3]]) -> bool {
    monos.iter().all(|m| contract(&s.monomial(m.to_vec()), f).poly.is_zero())
}

/// Tries each containment pattern in the given coordinates.
fn wild_in_coordinates(s: &RingRef, f: &DualPolynomial) -> Result<Option<(String, RankCertificate)>, RankError> {
    let d = form_degree(s, f)?;
    let x0 = s.var(0);
    if annihilates(s, f, &[[2, 0, 0]]) {
        return Ok(Some(("square".into(), cactus_via_square(s, f, &x0)?)));
    }
    let e = middle_degree(d);
    let with_middle = |pair: [[u32; 3]; 2], name: &str| -> Result<Option<(String, RankCertificate)>, RankError> {
        let monos: Vec<Polynomial> = pair.iter().map(|m| s.monomial(m.to_vec())).collect();
        let eta = reduce(&middle_generator(s, f, &x0)?, &monos, false).0;
        let mut gens = monos;
        gens.push(eta);
        Ok(Some((name.into(), RankCertificate::new(f, Ideal::from_homogeneous(s, gens), 2 * e + 1, name))))
    };
    if annihilates(s, f, &[[2, 1, 0], [2, 0, 1]]) {
        return with_middle([[2, 1, 0], [2, 0, 1]], "pattern-1");
    }
    if annihilates(s, f, &[[3, 0, 0], [2, 1, 0]]) {
        return with_middle([[3, 0, 0], [2, 1, 0]], "pattern-2");
    }
    if d >= 4 && annihilates(s, f, &[[2, 1, 0], [1, 2, 0]]) {
        return Ok(Some(("pattern-3".into(), special_case_3(s, f)?)));
    }
    if annihilates(s, f, &[[2, 0, 1], [1, 1, 1]]) {
        return Ok(Some(("pattern-4".into(), special_case_4(s, f)?)));
    }
    Ok(None)
}

/// Runs the exclusion pipeline over the identity, caller-supplied changes and a
/// fixed search of permutations and shears. Border rank is an input assumption.
pub fn exclude_wild(s: &RingRef, f: &DualPolynomial, assumed_br: i64, extra: &[Vec<Vec<i64>>]) -> Result<WildReport, RankError> {
    let f = f.to_contraction();
    let d = form_degree(s, &f)?;
    let hilbert = apolar_hilbert(s, &f);
    if !is_symmetric(&hilbert) {
        return Err(RankError::Internal(format!("apolar Hilbert function {hilbert:?} is not symmetric")));
    }
    let mut report = WildReport {
        degree: d,
        assumed_border_rank: assumed_br,
        hilbert,
        pattern: None,
        coordinates: None,
        certificate: None,
        conclusion: String::new(),
    };
    for m in search_changes(extra) {
        let moved = change_form(&f, &m);
        let Some((pattern, cert)) = wild_in_coordinates(s, &moved)? else { continue };
        if !cert.is_valid() || cert.degree.is_none_or(|x| x > (d + 3) as i128) {
            continue;
        }
        let gamma = cert.gamma.substitute(&linear_images(s, &m, true));
        let back = RankCertificate::new(&f, gamma, cert.bound, &format!("{}:{}", pattern, cert.route));
        if !back.is_valid() {
            return Err(RankError::Internal("certificate does not survive the change of coordinates".into()));
        }
        report.conclusion = if assumed_br <= d + 3 {
            format!(
                "cactus rank ≤ {}; with border rank ≤ d+3 = {} assumed, cactus, smoothable and border rank coincide, so F is not wild (the reduction to the four patterns rests on border apolarity and is not checked here)",
                back.degree.unwrap_or(0),
                d + 3
            )
        } else {
            format!("cactus rank ≤ {}; the assumed border rank exceeds d+3, so no conclusion about wildness", back.degree.unwrap_or(0))
        };
        report.pattern = Some(pattern);
        report.coordinates = Some(m);
        report.certificate = Some(back);
        return Ok(report);
    }
    report.conclusion = "NotApplicableInTheseCoordinates: no containment pattern holds after the searched changes".into();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apolarity::dual_ring;
    use crate::parse::parse_polynomial;
    use crate::ring::Ring;
    use crate::scalar::Field;

    fn setup() -> (RingRef, RingRef) {
        let s = Ring::standard(&["a0", "a1", "a2"], Field::Rational);
        let d = dual_ring(&s);
        (s, d)
    }

    fn form(d: &RingRef, t: &str) -> DualPolynomial {
        DualPolynomial::new(parse_polynomial(d, t).unwrap())
    }

    #[test]
    fn middle_generator_fermat() {
        let (s, d) = setup();
        let f = form(&d, "x0^6 + x1^6 + x2^6");
        let sigma = middle_generator(&s, &f, &s.var(0)).unwrap();
        assert!(contract(&sigma, &f).poly.is_zero());
        assert!(!divisible_by_linear(&sigma, &s.var(0)));
        assert_eq!(sigma.degree(), vec![4]);
    }

    #[test]
    fn square_route() {
        let (s, d) = setup();
        let c = cactus_via_square(&s, &form(&d, "x1^5 + x1^2*x2^3"), &s.var(0)).unwrap();
        assert!(c.is_valid(), "{c:?}");
        assert_eq!(c.bound, 6);
        assert_eq!(
            cactus_via_square(&s, &form(&d, "x0^2*x2"), &s.var(0)).unwrap_err(),
            RankError::SquareDoesNotAnnihilate
        );
    }

    #[test]
    fn special_three_and_four() {
        let (s, d) = setup();
        for t in ["x0*x1*x2^4 + x0^6 + x1^6", "x0*x1*x2^5 + x0^7 + x0*x2^6 + x1^3*x2^4", "x0*x1*x2^2 + x2^4"] {
            let c = special_case_3(&s, &form(&d, t)).unwrap();
            assert!(c.is_valid(), "{t}: {c:?}");
        }
        let c = special_case_3(&s, &form(&d, "x0^3")).unwrap();
        assert!(c.is_valid() && c.bound == 2);
        assert!(matches!(special_case_3(&s, &form(&d, "x0^2*x1*x2^2")), Err(RankError::ShapeMismatch(_))));
        for t in ["x0*x2^5 + x1^6", "x0*x2^4 + x0^5 + x1^2*x2^3 + x0*x1^4", "x1^6"] {
            let c = special_case_4(&s, &form(&d, t)).unwrap();
            assert!(c.is_valid(), "{t}: {c:?}");
            assert!(c.degree.unwrap() <= 9);
        }
    }

    #[test]
    fn wild_pipeline() {
        let (s, d) = setup();
        let rep = exclude_wild(&s, &form(&d, "x1*x0^5 + x1^3*x2^3 + x2^6"), 9, &[]).unwrap();
        assert!(rep.certificate.as_ref().is_some_and(|c| c.is_valid()), "{rep:?}");
        let rep = exclude_wild(&s, &form(&d, "x0^7 + x1^7 + x2^7 + (x0 + x1 + x2)^7 + (x0 - x1 + 2*x2)^7 + x0^3*x1^2*x2^2"), 10, &[]).unwrap();
        assert!(rep.certificate.is_none());
        assert!(rep.conclusion.starts_with("NotApplicable"));
    }

    #[test]
    fn change_of_coordinates_preserves_annihilators() {
        let (s, d) = setup();
        let f = form(&d, "x0^2*x1 + x2^3");
        let m = vec![vec![1, 1, 0], vec![0, 1, 0], vec![2, 0, 1]];
        let g = change_form(&f, &m);
        for sigma in annihilator_degree(&s, &g, 2) {
            let back = sigma.substitute(&linear_images(&s, &m, true));
            assert!(contract(&back, &f).poly.is_zero());
        }
    }
}
