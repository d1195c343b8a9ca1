//! Fiber obstruction dimensions, degree-zero Hom spaces and the obstruction verdict.

use serde::Serialize;
use thiserror::Error;

use crate::groebner::{syzygies, TrackedBasis};
use crate::hilbert::{classify_quotient, hilbert_function, jump_degree, HilbertError};
use crate::ideal::{Ideal, IdealError};
use crate::linalg::{kernel, rank, Subspace, Vector};
use crate::ring::{Degree, Mono, Polynomial, RingRef};
use crate::series;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ObstructionError {
    #[error("hypotheses not met: {0}")]
    HypothesesNotMet(String),
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ObFibMethod {
    GorensteinFormula,
    LineAndPointsFormula,
    CokernelHom,
}

impl ObFibMethod {
    pub fn name(&self) -> &'static str {
        match self {
            ObFibMethod::GorensteinFormula => "gorenstein_formula",
            ObFibMethod::LineAndPointsFormula => "line_and_points_formula",
            ObFibMethod::CokernelHom => "cokernel_hom",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ObFibReport {
    pub dimension: usize,
    pub method: ObFibMethod,
    /// Degree at which the formula was evaluated (`a` or `d − 2`).
    pub jump_degree: Option<i64>,
    pub vanishing: bool,
    /// Line ideal used by the line-and-points formula.
    #[serde(skip)]
    pub line: Option<Ideal>,
}

fn h_at(i: &Ideal, e: i64) -> i128 {
    i.standard_series().value(e)
}

/// `dim (Isat / (I + Isat²))_a`.
pub fn gorenstein_formula(i: &Ideal, a: i64) -> usize {
    let sat = i.saturate();
    let big = i.sum(&sat.product(sat));
    (h_at(&big, a) - h_at(sat, a)) as usize
}

/// `dim (Isat / (I + Isat·Jsat))_{d−2}`.
pub fn line_and_points_formula(i: &Ideal, jsat: &Ideal, d: i64) -> usize {
    let sat = i.saturate();
    let big = i.sum(&sat.product(jsat));
    (h_at(&big, d - 2) - h_at(sat, d - 2)) as usize
}

/// `d` when `S/J` has Hilbert function `(1,2,…,d,d,…)`.
fn line_degree(j: &Ideal) -> Option<i64> {
    let s = j.standard_series();
    (s.dim == 1 && s.h.iter().all(|&c| c == 1)).then_some(s.h.len() as i64)
}

/// Checks the Hilbert function pattern of the line-and-points case for `J ⊇ I`;
/// returns `(Jsat, d)`.
pub fn line_and_points_candidate(i: &Ideal, j: &Ideal) -> Option<(Ideal, i64)> {
    if !j.contains_ideal(i) || j.is_unit() {
        return None;
    }
    let jsat = j.saturate().clone();
    let d = line_degree(&jsat)?;
    let s = i.saturate().standard_series();
    if s.dim != 1 {
        return None;
    }
    let e = s.value(1) - 2;
    if e < 0 {
        return None;
    }
    let js = jsat.standard_series();
    let top = d + s.h.len() as i64 + 2;
    (1..=top).all(|k| s.value(k) == js.value(k) + e).then_some((jsat, d))
}

fn maximal_ideal(r: &RingRef) -> Ideal {
    Ideal::from_homogeneous(r, r.vars())
}

/// ObFib(I, Isat) for a standard graded `I` with one-dimensional `S/Isat`.
/// Tries the Gorenstein formula, then the line-and-points formula with
/// `J = I : S_+^k` (`k = 1, 2, 3`) or `line`, then the general cokernel route.
pub fn obfib_dimension(i: &Ideal, line: Option<&Ideal>) -> Result<ObFibReport, ObstructionError> {
    if !i.ring().is_standard() {
        return Err(ObstructionError::HypothesesNotMet("standard grading required; use obfib_cokernel_hom".into()));
    }
    let sat = i.saturate();
    let hf = hilbert_function(sat, 0);
    if hf.series().map(|s| s.dim) != Some(1) {
        return Err(ObstructionError::HypothesesNotMet("S/Isat is not one-dimensional".into()));
    }
    let class = classify_quotient(sat)?;
    if class.gorenstein == Some(true) {
        let a = jump_degree(&hf)?;
        let dimension = gorenstein_formula(i, a);
        return Ok(ObFibReport { dimension, method: ObFibMethod::GorensteinFormula, jump_degree: Some(a), vanishing: dimension == 0, line: None });
    }
    let mut cands: Vec<Ideal> = Vec::new();
    if let Some(j) = line {
        cands.push(j.clone());
    }
    let m = maximal_ideal(i.ring());
    let mut cur = i.clone();
    for _ in 0..3 {
        cur = cur.colon(&m);
        cands.push(cur.clone());
    }
    for j in cands {
        if let Some((jsat, d)) = line_and_points_candidate(i, &j) {
            let dimension = line_and_points_formula(i, &jsat, d);
            return Ok(ObFibReport {
                dimension,
                method: ObFibMethod::LineAndPointsFormula,
                jump_degree: Some(d - 2),
                vanishing: dimension == 0,
                line: Some(jsat),
            });
        }
    }
    let zero = i.ring().zero_degree();
    let dimension = obfib_cokernel_hom(i, &zero)?;
    Ok(ObFibReport { dimension, method: ObFibMethod::CokernelHom, jump_degree: None, vanishing: dimension == 0, line: None })
}

fn add_deg(a: &[i64], b: &[i64]) -> Degree {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn scale_deg(a: &[i64], k: i64) -> Degree {
    a.iter().map(|x| x * k).collect()
}

fn coords(j: &Ideal, p: &Polynomial, std: &[Mono]) -> Vector {
    j.normal_form(p).coeff_vector(std).expect("normal form of the right degree")
}

/// Degree-`δ` part of `Hom(Isat/I, C(I))` with `C(I) = (S/Isat)_ℓ / (S/Isat)`,
/// which is the degree-`δ` part of ObFib(I, Isat). Works for any grading.
pub fn obfib_cokernel_hom(i: &Ideal, delta: &[i64]) -> Result<usize, ObstructionError> {
    let r = i.ring().clone();
    let sat = i.saturate().clone();
    if sat.contains_ideal(i) && i.contains_ideal(&sat) {
        return Ok(0);
    }
    let l = sat.transverse_element()?;
    let dl = l.degree();
    let wl: i64 = dl.iter().sum();
    let art = sat.add_gens(std::slice::from_ref(&l));
    let mut num = art.series_numerator();
    for &w in &r.weights() {
        num = series::div_one_minus(&num, w)
            .ok_or_else(|| ObstructionError::HypothesesNotMet("S/(Isat + l) is not of finite length".into()))?;
    }
    let top = num.len() as i64 - 1;

    let h = sat.minimal_generators();
    let m = h.len();
    let mut all = h.clone();
    all.extend(i.gens().iter().cloned());
    let rels: Vec<Vec<Polynomial>> = syzygies(&r, &all)
        .into_iter()
        .map(|s| s[..m].to_vec())
        .filter(|s| s.iter().any(|x| !x.is_zero()))
        .collect();
    let rel_deg = |s: &[Polynomial]| -> Degree {
        let j = s.iter().position(|x| !x.is_zero()).unwrap();
        add_deg(&s[j].degree(), &h[j].degree())
    };
    let mut degs: Vec<Degree> = h.iter().map(|g| add_deg(&g.degree(), delta)).collect();
    degs.extend(rels.iter().map(|s| add_deg(&rel_deg(s), delta)));
    let min_w = degs.iter().map(|d| d.iter().sum::<i64>()).min().unwrap_or(0);
    let mut k = 0i64;
    while min_w + (k + 1) * wl <= top {
        k += 1;
    }
    let shift = scale_deg(&dl, k);
    let lk = l.pow(k as u32);

    let f = r.field();
    let std: Vec<Vec<Mono>> = h.iter().map(|g| sat.standard_monomials(&add_deg(&add_deg(&g.degree(), delta), &shift))).collect();
    let offsets: Vec<usize> = std.iter().scan(0, |acc, s| {
        let o = *acc;
        *acc += s.len();
        Some(o)
    }).collect();
    let nunk: usize = std.iter().map(|s| s.len()).sum();
    let mut rows: Vec<Vector> = Vec::new();
    for s in &rels {
        let base = add_deg(&rel_deg(s), delta);
        let tstd = sat.standard_monomials(&add_deg(&base, &shift));
        if tstd.is_empty() {
            continue;
        }
        let img: Vec<Vector> = sat
            .standard_monomials(&base)
            .into_iter()
            .map(|u| coords(&sat, &lk.mul(&r.monomial(u)), &tstd))
            .collect();
        let lsp = Subspace::span(f, tstd.len(), img);
        let mut block = vec![vec![f.zero(); nunk]; tstd.len()];
        for (j, a) in s.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (u_i, u) in std[j].iter().enumerate() {
                let v = lsp.reduce(&coords(&sat, &a.mul(&r.monomial(u.clone())), &tstd));
                for (row, x) in v.into_iter().enumerate() {
                    block[row][offsets[j] + u_i] = x;
                }
            }
        }
        rows.extend(block);
    }
    let w = nunk - rank(&rows, nunk);
    let trivial: usize = h.iter().map(|g| sat.quotient_dim(&add_deg(&g.degree(), delta))).sum();
    Ok(w - trivial)
}

/// A basis of `Hom_S(K, S/J)_δ`, homomorphisms given by the images of `gens`.
#[derive(Clone, Debug)]
pub struct Hom0Report {
    pub gens: Vec<Polynomial>,
    pub delta: Degree,
    pub basis: Vec<Vec<Polynomial>>,
    std: Vec<Vec<Mono>>,
}

impl Hom0Report {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    fn flatten(&self, images: &[Polynomial]) -> Vector {
        images.iter().zip(&self.std).flat_map(|(p, s)| p.coeff_vector(s).expect("standard image")).collect()
    }
}

/// `Hom_S(K, S/J)_δ` from the syzygies of the minimal generators of `K`.
pub fn hom0(k: &Ideal, j: &Ideal, delta: &[i64]) -> Hom0Report {
    let r = k.ring().clone();
    let f = r.field();
    let gens = k.minimal_generators();
    let std: Vec<Vec<Mono>> = gens.iter().map(|g| j.standard_monomials(&add_deg(&g.degree(), delta))).collect();
    let mut offsets = Vec::new();
    let mut nunk = 0;
    for s in &std {
        offsets.push(nunk);
        nunk += s.len();
    }
    let mut rows: Vec<Vector> = Vec::new();
    for s in syzygies(&r, &gens) {
        let p = s.iter().position(|x| !x.is_zero()).unwrap();
        let tdeg = add_deg(&add_deg(&s[p].degree(), &gens[p].degree()), delta);
        let tstd = j.standard_monomials(&tdeg);
        if tstd.is_empty() {
            continue;
        }
        let mut block = vec![vec![f.zero(); nunk]; tstd.len()];
        for (i, a) in s.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (ui, u) in std[i].iter().enumerate() {
                for (row, x) in coords(j, &a.mul(&r.monomial(u.clone())), &tstd).into_iter().enumerate() {
                    block[row][offsets[i] + ui] = x;
                }
            }
        }
        rows.extend(block);
    }
    let basis = kernel(f, &rows, nunk)
        .into_iter()
        .map(|v| std.iter().enumerate().map(|(i, s)| r.from_coeffs(s, &v[offsets[i]..offsets[i] + s.len()])).collect())
        .collect();
    Hom0Report { gens, delta: delta.to_vec(), basis, std }
}

/// Dimension of the cokernel of restriction `Hom(J, S/T)_δ → Hom(K, S/T)_δ` for `K ⊆ J`.
pub fn restriction_cokernel(j: &Ideal, k: &Ideal, t: &Ideal, delta: &[i64]) -> usize {
    let hj = hom0(j, t, delta);
    let hk = hom0(k, t, delta);
    let r = k.ring();
    let tb = TrackedBasis::new(r, &hj.gens);
    let lifts: Vec<Vec<Polynomial>> = hk
        .gens
        .iter()
        .map(|g| {
            let c = tb.lift(g).expect("K must be contained in J");
            c.iter().zip(&hj.gens).map(|(ci, gi)| ci.part_of_degree(&sub_deg(&g.degree(), &gi.degree()))).collect()
        })
        .collect();
    let images: Vec<Vector> = hj
        .basis
        .iter()
        .map(|phi| {
            let imgs: Vec<Polynomial> = lifts
                .iter()
                .map(|c| {
                    let mut acc = r.zero();
                    for (ci, pi) in c.iter().zip(phi) {
                        acc = acc.add(&ci.mul(pi));
                    }
                    t.normal_form(&acc)
                })
                .collect();
            hk.flatten(&imgs)
        })
        .collect();
    let n = hk.std.iter().map(|s| s.len()).sum();
    hk.dimension() - rank(&images, n)
}

fn sub_deg(a: &[i64], b: &[i64]) -> Degree {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Outcome {
    Saturated,
    Saturable,
    NotSaturable,
    EntirelyNonsaturable,
    Nonsaturable,
    Inconclusive,
}

/// Verdict with its route and the assumptions it rests on.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub verdict: Outcome,
    pub route: String,
    pub obfib_dim: Option<usize>,
    pub jump_degree: Option<i64>,
    pub assumptions: Vec<String>,
}

/// Why `[Isat]` counts as a smooth point, if it is recognized as one.
pub fn recognized_smooth(sat: &Ideal) -> Option<&'static str> {
    let n = sat.ring().nvars();
    if n <= 3 {
        return Some("at most three variables");
    }
    let c = classify_quotient(sat).ok()?;
    if c.complete_intersection {
        return Some("complete intersection");
    }
    if n == 4 && c.gorenstein == Some(true) {
        return Some("Gorenstein in four variables");
    }
    None
}

/// Obstruction-based verdict for `I`.
pub fn verdict(i: &Ideal, assert_smooth: bool) -> Result<Verdict, ObstructionError> {
    if i.is_saturated() {
        return Ok(Verdict { verdict: Outcome::Saturated, route: "saturated".into(), obfib_dim: None, jump_degree: None, assumptions: vec![] });
    }
    let rep = obfib_dimension(i, None)?;
    let mut assumptions = Vec::new();
    if rep.vanishing {
        return Ok(Verdict {
            verdict: Outcome::EntirelyNonsaturable,
            route: format!("obfib-vanishes:{}", rep.method.name()),
            obfib_dim: Some(0),
            jump_degree: rep.jump_degree,
            assumptions,
        });
    }
    let sat = i.saturate();
    let coker = restriction_cokernel(sat, i, sat, &i.ring().zero_degree());
    if coker == 0 {
        let smooth = match recognized_smooth(sat) {
            Some(why) => Some(format!("smooth: {why}")),
            None if assert_smooth => Some("smooth: asserted by caller".to_string()),
            None => None,
        };
        if let Some(s) = smooth {
            assumptions.push(s);
            return Ok(Verdict {
                verdict: Outcome::Nonsaturable,
                route: "tangent-surjective".into(),
                obfib_dim: Some(rep.dimension),
                jump_degree: rep.jump_degree,
                assumptions,
            });
        }
        assumptions.push("restriction map onto; smoothness of Isat not recognized".into());
    } else {
        assumptions.push(format!("restriction cokernel has dimension {coker}"));
    }
    Ok(Verdict { verdict: Outcome::Inconclusive, route: "obfib-nonzero".into(), obfib_dim: Some(rep.dimension), jump_degree: rep.jump_degree, assumptions })
}
