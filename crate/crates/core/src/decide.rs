//! Saturability decisions for Hilbert functions `(1,d,d,…)`, `d ≤ 5`, and the
//! sticky-ideal screen.

use serde::Serialize;
use thiserror::Error;

use crate::groebner::{reduce, syzygies, GroebnerBasis};
use crate::ideal::Ideal;
use crate::obstruction::{obfib_dimension, recognized_smooth, restriction_cokernel, ObstructionError, Outcome};
use crate::ring::{Polynomial, RingRef};
use crate::scalar::Field;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecideError {
    #[error("unsupported Hilbert function: {0}")]
    UnsupportedHilbertFunction(String),
    #[error("characteristic {0} is not supported, the case analysis needs characteristic zero")]
    WrongCharacteristic(u64),
    #[error("candidate {0} does not satisfy I ⊊ J ⊆ Isat")]
    CandidateNotBetween(String),
    #[error(transparent)]
    Obstruction(#[from] ObstructionError),
}

/// A containment `A ⊆ I` that was checked, with a witness outside `I` when it fails.
#[derive(Clone, Debug, Serialize)]
pub struct Containment {
    pub claim: String,
    pub holds: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Decision {
    pub verdict: Outcome,
    pub route: String,
    pub containments: Vec<Containment>,
    /// Set when ObFib(I, Isat) = 0 was verified, making the failure entire.
    pub entirely: bool,
    pub obfib_dim: Option<usize>,
    pub jump_degree: Option<i64>,
    pub line: Option<String>,
    pub assumptions: Vec<String>,
}

impl Decision {
    fn new(verdict: Outcome, route: &str) -> Decision {
        Decision {
            verdict,
            route: route.into(),
            containments: Vec::new(),
            entirely: false,
            obfib_dim: None,
            jump_degree: None,
            line: None,
            assumptions: Vec::new(),
        }
    }
}

/// Checks that the products `a·b` for `a ∈ A`, `b ∈ B` lie in `I`.
fn products_in(claim: &str, a: &[Polynomial], b: &[Polynomial], i: &Ideal) -> Containment {
    for x in a {
        for y in b {
            let p = x.mul(y);
            if !i.contains(&p) {
                return Containment { claim: claim.into(), holds: false, witness: Some(p.to_string()) };
            }
        }
    }
    Containment { claim: claim.into(), holds: true, witness: None }
}

/// Checks `(K)_e ⊆ I`.
fn degree_part_in(claim: &str, k: &Ideal, e: i64, i: &Ideal) -> Containment {
    for p in k.degree_basis(&[e]) {
        if !i.contains(&p) {
            return Containment { claim: claim.into(), holds: false, witness: Some(p.to_string()) };
        }
    }
    Containment { claim: claim.into(), holds: true, witness: None }
}

fn maximal_ideal(r: &RingRef) -> Ideal {
    Ideal::from_homogeneous(r, r.vars())
}

/// The line through the collinear part of a scheme with `H = (1,3,4,5,5,…)` in five
/// variables: the two quadrics left after removing `Isat_1` share the line's equation.
pub fn line_of_five_points(isat: &Ideal) -> Option<Ideal> {
    let r = isat.ring();
    let lin = isat.degree_basis(&[1]);
    let lgb = GroebnerBasis::new(r, &lin);
    let rest = Ideal::from_homogeneous(r, isat.degree_basis(&[2]).iter().map(|q| lgb.normal_form(q)).collect());
    let q = rest.reduced_generators().gens().to_vec();
    if q.len() != 2 || q.iter().any(|p| p.degree() != [2]) {
        return None;
    }
    for s in syzygies(r, &q) {
        if s[0].is_zero() || s[1].is_zero() || s[1].degree() != [1] {
            continue;
        }
        let (rem, quo) = reduce(&q[0], &[s[1].neg()], true);
        if !rem.is_zero() {
            continue;
        }
        let u = quo.unwrap().remove(0);
        if u.degree() != [1] {
            continue;
        }
        let mut g = lin.clone();
        g.push(u);
        let j = Ideal::from_homogeneous(r, g);
        if j.degree_basis(&[1]).len() == 3 {
            return Some(j.reduced_generators());
        }
    }
    None
}

fn standard_h(i: &Ideal) -> crate::series::StandardSeries {
    i.standard_series()
}

/// Saturability of `I` with `H_{S/I} = (1,d,d,…)`, `d ≤ 5`, `d` variables.
pub fn decide_saturable(i: &Ideal) -> Result<Decision, DecideError> {
    let r = i.ring().clone();
    if !r.is_standard() {
        return Err(DecideError::UnsupportedHilbertFunction("standard grading required".into()));
    }
    let s = standard_h(i);
    let n = r.nvars() as i128;
    let d = s.degree();
    let top = s.h.len() as i64 + 2;
    let shape_ok = s.dim == 1 && s.value(0) == 1 && (1..=top).all(|e| s.value(e) == d) && d == n;
    if !shape_ok || d > 5 {
        let shown: Vec<String> = (0..=top.min(8)).map(|e| s.value(e).to_string()).collect();
        return Err(DecideError::UnsupportedHilbertFunction(format!(
            "({},…) in {n} variables; need (1,d,d,…) with d = number of variables ≤ 5",
            shown.join(",")
        )));
    }
    if i.is_saturated() {
        return Ok(Decision::new(Outcome::Saturated, "saturated"));
    }
    if d <= 3 {
        return Ok(Decision::new(Outcome::Saturable, "at-most-three-points"));
    }
    if r.field() != Field::Rational {
        return Err(DecideError::WrongCharacteristic(r.field().characteristic()));
    }
    let sat = i.saturate().clone();
    let hs = standard_h(&sat);
    let hsat: Vec<i128> = (0..=4).map(|e| hs.value(e)).collect();
    let sq = sat.product(&sat);
    let with_obfib = |mut dec: Decision| -> Result<Decision, DecideError> {
        let rep = obfib_dimension(i, None)?;
        dec.obfib_dim = Some(rep.dimension);
        dec.jump_degree = rep.jump_degree;
        dec.entirely = dec.verdict == Outcome::NotSaturable && rep.vanishing;
        Ok(dec)
    };
    match (d, hsat[1], hsat[2]) {
        (4, 3, 4) => Ok(Decision::new(Outcome::Saturable, "unique-saturation-fiber")),
        (4, 2, 3) => {
            let c = degree_part_in("(Isat^2)_2 ⊆ I", &sq, 2, i);
            let mut dec = Decision::new(if c.holds { Outcome::Saturable } else { Outcome::NotSaturable }, "four-points-line");
            dec.containments.push(c);
            with_obfib(dec)
        }
        (5, _, 5) => Ok(Decision::new(Outcome::Saturable, "unique-saturation-fiber")),
        (5, 3, 4) => {
            let j = line_of_five_points(&sat)
                .ok_or_else(|| DecideError::UnsupportedHilbertFunction("could not isolate the line component".into()))?;
            let c = products_in("Isat_1 · J_1 ⊆ I", &sat.degree_basis(&[1]), &j.degree_basis(&[1]), i);
            let mut dec = Decision::new(if c.holds { Outcome::Saturable } else { Outcome::NotSaturable }, "five-points-line-and-point");
            dec.line = Some(j.to_string());
            dec.containments.push(c);
            with_obfib(dec)
        }
        (5, 2, 3) => {
            let c1 = degree_part_in("(Isat^2)_3 ⊆ I", &sq, 3, i);
            let m = maximal_ideal(&r);
            let colon2 = i.colon(&m).colon(&m);
            let c2 = products_in("(I : S_+^2)_1 · Isat_1 ⊆ I", &colon2.degree_basis(&[1]), &sat.degree_basis(&[1]), i);
            let ok = c1.holds && c2.holds;
            let mut dec = Decision::new(if ok { Outcome::Saturable } else { Outcome::NotSaturable }, "five-points-line");
            if c1.holds && !c2.holds {
                dec.assumptions.push("negative answer rests on an external count of components".into());
            }
            dec.containments.push(c1);
            dec.containments.push(c2);
            with_obfib(dec)
        }
        _ => Err(DecideError::UnsupportedHilbertFunction(format!("saturation has Hilbert function starting {hsat:?}"))),
    }
}

/// Outcome of screening one candidate `J`.
#[derive(Clone, Debug, Serialize)]
pub struct CandidateResult {
    pub candidate: String,
    pub sticky: bool,
    pub route: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct StickyReport {
    pub verdict: Outcome,
    pub results: Vec<CandidateResult>,
}

/// Candidates used by the automatic screen: `Isat`, then `I + (g)` for minimal
/// generators `g` of `Isat` outside `I`.
pub fn auto_candidates(i: &Ideal) -> Vec<Ideal> {
    let sat = i.saturate().clone();
    let mut out = vec![sat.clone()];
    for g in sat.minimal_generators() {
        if !i.contains(&g) {
            let j = i.add_gens(&[g]);
            if !j.equals(&sat) {
                out.push(j);
            }
        }
    }
    out
}

/// Tests candidates `J` for stickiness via ObFib(I, J) = 0 or tangent surjectivity
/// together with smoothness of `[J]`.
pub fn sticky_screen(i: &Ideal, candidates: &[Ideal], assert_smooth: bool) -> Result<StickyReport, DecideError> {
    let sat = i.saturate().clone();
    for j in candidates {
        if !j.contains_ideal(i) || i.contains_ideal(j) || !sat.contains_ideal(j) {
            return Err(DecideError::CandidateNotBetween(j.to_string()));
        }
    }
    let zero = i.ring().zero_degree();
    let mut results = Vec::new();
    for j in candidates {
        let is_sat = j.contains_ideal(&sat);
        if is_sat {
            if let Ok(rep) = obfib_dimension(i, None) {
                if rep.vanishing {
                    results.push(CandidateResult {
                        candidate: j.to_string(),
                        sticky: true,
                        route: format!("obfib-vanishes:{}", rep.method.name()),
                        detail: "ObFib(I, J) = 0".into(),
                    });
                    break;
                }
            }
        }
        let coker = restriction_cokernel(j, i, j, &zero);
        let smooth = if is_sat { recognized_smooth(&sat).map(str::to_string) } else { None }
            .or_else(|| assert_smooth.then(|| "asserted by caller".to_string()));
        let sticky = coker == 0 && smooth.is_some();
        let detail = match (&smooth, coker) {
            (Some(s), 0) => format!("restriction onto, smooth: {s}"),
            (None, 0) => "restriction onto, smoothness of J not established".into(),
            (_, c) => format!("restriction cokernel has dimension {c}"),
        };
        results.push(CandidateResult { candidate: j.to_string(), sticky, route: "tangent-surjective".into(), detail });
        if sticky {
            break;
        }
    }
    let found = results.iter().any(|r| r.sticky);
    Ok(StickyReport { verdict: if found { Outcome::Nonsaturable } else { Outcome::Inconclusive }, results })
}
