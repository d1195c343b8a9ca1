//! Macaulay inverse systems: contraction, catalecticants, apolar ideals and perps.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::ideal::Ideal;
use crate::linalg::{kernel, rank, Subspace, Vector};
use crate::ring::{mono_divides, mono_div, Mono, Polynomial, Ring, RingRef};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ApolarityError {
    #[error("contraction of the degree {0} piece leaves the degree {1} piece")]
    NotClosedUnderContraction(i64, i64),
    #[error("dual form is not homogeneous")]
    NotHomogeneous,
}

/// How `S` acts on the dual ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Semantics {
    #[default]
    Contraction,
    Differentiation,
}

/// Element of the dual ring `S*` with its action convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPolynomial {
    pub poly: Polynomial,
    pub semantics: Semantics,
}

/// Dual ring of `S`: same field and variable count, variables `x0, x1, …`.
pub fn dual_ring(s: &RingRef) -> RingRef {
    Ring::standard_n("x", s.nvars(), s.field())
}

fn falling(u: &[u32], m: &[u32], s: &RingRef) -> Scalar {
    let f = s.field();
    let mut c = f.one();
    for (&a, &b) in u.iter().zip(m) {
        for k in 0..b {
            c = c.mul(&f.from_i64((a - k) as i64));
        }
    }
    c
}

impl DualPolynomial {
    pub fn new(poly: Polynomial) -> DualPolynomial {
        DualPolynomial { poly, semantics: Semantics::Contraction }
    }

    pub fn differentiation(poly: Polynomial) -> DualPolynomial {
        DualPolynomial { poly, semantics: Semantics::Differentiation }
    }

    pub fn ring(&self) -> &RingRef {
        self.poly.ring()
    }

    pub fn degree(&self) -> Option<i64> {
        self.poly.homogeneous_degree().map(|d| d[0])
    }

    /// The same functional written for the differentiation action (`x^a ↦ x^a / a!`).
    pub fn to_differentiation(&self) -> DualPolynomial {
        match self.semantics {
            Semantics::Differentiation => self.clone(),
            Semantics::Contraction => {
                let r = self.ring().clone();
                let terms = self
                    .poly
                    .terms()
                    .iter()
                    .map(|(m, c)| (m.clone(), c.div(&falling(m, m, &r))))
                    .collect();
                DualPolynomial::differentiation(r.from_terms(terms))
            }
        }
    }

    /// The same functional written for the contraction action (`x^a ↦ a!·x^a`).
    pub fn to_contraction(&self) -> DualPolynomial {
        match self.semantics {
            Semantics::Contraction => self.clone(),
            Semantics::Differentiation => {
                let r = self.ring().clone();
                let terms = self
                    .poly
                    .terms()
                    .iter()
                    .map(|(m, c)| (m.clone(), c.mul(&falling(m, m, &r))))
                    .collect();
                DualPolynomial::new(r.from_terms(terms))
            }
        }
    }
}

/// `σ ⌟ F`, bilinear extension of the monomial rule.
pub fn contract(sigma: &Polynomial, f: &DualPolynomial) -> DualPolynomial {
    let r = f.ring();
    let mut terms = Vec::new();
    for (m, c) in sigma.terms() {
        for (u, d) in f.poly.terms() {
            if mono_divides(m, u) {
                let mut k = c.mul(d);
                if f.semantics == Semantics::Differentiation {
                    k = k.mul(&falling(u, m, r));
                }
                terms.push((mono_div(u, m), k));
            }
        }
    }
    DualPolynomial { poly: r.from_terms(terms), semantics: f.semantics }
}

/// Matrix of `S_e → S*_{d−e}`, `σ ↦ σ ⌟ F`, columns indexed by `cols`.
#[derive(Clone, Debug)]
pub struct Catalecticant {
    pub e: i64,
    pub rows: Vec<Mono>,
    pub cols: Vec<Mono>,
    pub matrix: Vec<Vector>,
}

impl Catalecticant {
    pub fn new(s: &RingRef, f: &DualPolynomial, e: i64) -> Catalecticant {
        let d = f.degree().expect("homogeneous dual form");
        let cols = s.monomials_of_degree(&[e]);
        let rows = f.ring().monomials_of_degree(&[d - e]);
        let field = s.field();
        let mut matrix = vec![vec![field.zero(); cols.len()]; rows.len()];
        for (j, m) in cols.iter().enumerate() {
            let g = contract(&s.monomial(m.clone()), f);
            if let Some(v) = g.poly.coeff_vector(&rows) {
                for (i, x) in v.into_iter().enumerate() {
                    matrix[i][j] = x;
                }
            }
        }
        Catalecticant { e, rows, cols, matrix }
    }

    pub fn rank(&self) -> usize {
        rank(&self.matrix, self.cols.len())
    }
}

/// Basis of `Ann(F)_e`.
pub fn annihilator_degree(s: &RingRef, f: &DualPolynomial, e: i64) -> Vec<Polynomial> {
    let c = Catalecticant::new(s, f, e);
    kernel(s.field(), &c.matrix, c.cols.len()).into_iter().map(|v| s.from_coeffs(&c.cols, &v)).collect()
}

/// Minimal generators of `Ann(F)` in degrees `≤ up_to`; all of `Ann(F)` once `up_to > deg F`.
pub fn annihilator(s: &RingRef, f: &DualPolynomial, up_to: i64) -> Result<Ideal, ApolarityError> {
    if f.degree().is_none() {
        return Err(ApolarityError::NotHomogeneous);
    }
    let mut gens: Vec<Polynomial> = Vec::new();
    for e in 1..=up_to {
        let k = annihilator_degree(s, f, e);
        add_new_generators(s, &mut gens, e, k);
    }
    Ok(Ideal::from_homogeneous(s, gens))
}

/// Append to `gens` those of `cands` (all of degree `e`) not in the ideal generated so far.
fn add_new_generators(s: &RingRef, gens: &mut Vec<Polynomial>, e: i64, cands: Vec<Polynomial>) {
    if cands.is_empty() {
        return;
    }
    let monos = s.monomials_of_degree(&[e]);
    let have = Ideal::from_homogeneous(s, gens.clone());
    let (_, mut sp) = have.degree_part(&[e]);
    for c in cands {
        let v = c.coeff_vector(&monos).expect("degree e");
        if !sp.contains(&v) {
            sp = sp.sum(&Subspace::span(s.field(), monos.len(), vec![v]));
            gens.push(c);
        }
    }
}

/// Perp of a degree-`e` subspace under the monomial pairing, written in `target`
/// (either `S` or its dual ring).
pub fn perp_degree(target: &RingRef, e: i64, vecs: &[Polynomial]) -> Vec<Polynomial> {
    let monos = target.monomials_of_degree(&[e]);
    let rows: Vec<Vector> = vecs.iter().map(|p| p.coeff_vector(&monos).expect("degree e data")).collect();
    let sp = Subspace::span(target.field(), monos.len(), rows).perp();
    sp.basis().iter().map(|v| target.from_coeffs(&monos, v)).collect()
}

/// The degree-`e` evaluation functional at `point`: `Σ_{|a|=e} p^a x^a`.
pub fn evaluation_form(dual: &RingRef, point: &[Scalar], e: i64) -> Polynomial {
    let terms = dual
        .monomials_of_degree(&[e])
        .into_iter()
        .map(|m| {
            let mut c = dual.field().one();
            for (p, &k) in point.iter().zip(&m) {
                c = c.mul(&p.pow(k));
            }
            (m, c)
        })
        .collect();
    dual.from_terms(terms)
}

/// Ideal with `I_e = (piece_e)^⊥` for `e ≤ top`, generated in degrees `≤ top`.
/// Missing degrees are taken to be all of `S*_e`.
pub fn ideal_from_dual(s: &RingRef, pieces: &BTreeMap<i64, Vec<Polynomial>>, top: i64) -> Result<Ideal, ApolarityError> {
    let dual = dual_ring(s);
    let span_of = |e: i64| -> Option<Subspace> {
        let monos = dual.monomials_of_degree(&[e]);
        pieces.get(&e).map(|v| {
            let rows = v.iter().map(|p| p.coeff_vector(&monos).expect("homogeneous piece")).collect();
            Subspace::span(s.field(), monos.len(), rows)
        })
    };
    for (&e, piece) in pieces {
        if e < 1 {
            continue;
        }
        let Some(below) = span_of(e - 1) else { continue };
        let monos = dual.monomials_of_degree(&[e - 1]);
        for f in piece {
            for x in s.vars() {
                let g = contract(&x, &DualPolynomial::new(f.clone()));
                if !below.contains(&g.poly.coeff_vector(&monos).expect("degree e-1")) {
                    return Err(ApolarityError::NotClosedUnderContraction(e, e - 1));
                }
            }
        }
    }
    let mut gens = Vec::new();
    for e in 1..=top {
        let ie = match pieces.get(&e) {
            Some(v) => perp_degree(s, e, v),
            None => Vec::new(),
        };
        add_new_generators(s, &mut gens, e, ie);
    }
    Ok(Ideal::from_homogeneous(s, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::hilbert_function;
    use crate::parse::parse_polynomial;
    use crate::scalar::Field;

    fn setup() -> (RingRef, RingRef) {
        let s = Ring::standard(&["a0", "a1", "a2"], Field::Rational);
        let d = dual_ring(&s);
        (s, d)
    }

    #[test]
    fn contraction_rules() {
        let (s, d) = setup();
        let f = |t: &str| DualPolynomial::new(parse_polynomial(&d, t).unwrap());
        let p = |t: &str| parse_polynomial(&s, t).unwrap();
        assert_eq!(contract(&p("a0"), &f("x0*x1")).poly, parse_polynomial(&d, "x1").unwrap());
        assert!(contract(&p("a0"), &f("x1^2")).poly.is_zero());
        assert_eq!(contract(&p("a0^2"), &f("x0^2*x2")).poly, parse_polynomial(&d, "x2").unwrap());
        let g = DualPolynomial::differentiation(parse_polynomial(&d, "x0^3").unwrap());
        assert_eq!(contract(&p("a0^2"), &g).poly, parse_polynomial(&d, "6*x0").unwrap());
    }

    #[test]
    fn power_of_variable() {
        let (s, d) = setup();
        let f = DualPolynomial::new(parse_polynomial(&d, "x0^4").unwrap());
        let ann = annihilator(&s, &f, 5).unwrap();
        let want = Ideal::new(&s, vec![s.var(1), s.var(2), s.var(0).pow(5)]).unwrap();
        assert!(ann.equals(&want));
        assert_eq!(ann.gens().len(), 3);
    }

    #[test]
    fn quartic_symmetry() {
        let (s, d) = setup();
        let f = DualPolynomial::differentiation(parse_polynomial(&d, "x0^4 + x1^4 + x2^4 + (x0+x1+x2)^4").unwrap());
        let ann = annihilator(&s, &f, 5).unwrap();
        assert_eq!(hilbert_function(&ann, 5).values(), &[1, 3, 4, 3, 1, 0]);
        for e in 0..=4 {
            assert_eq!(Catalecticant::new(&s, &f, e).rank(), Catalecticant::new(&s, &f, 4 - e).rank());
        }
    }

    #[test]
    fn perps() {
        let (s, d) = setup();
        let v = perp_degree(&d, 1, &[s.var(0), s.var(1)]);
        assert_eq!(v, vec![d.var(2)]);
        let back = perp_degree(&s, 1, &v);
        assert_eq!(back.len(), 2);
    }

    #[test]
    fn ideal_from_point_pieces() {
        let (s, d) = setup();
        let mut pieces = BTreeMap::new();
        for e in 1..=3 {
            pieces.insert(e, vec![d.var(0).pow(e as u32)]);
        }
        let i = ideal_from_dual(&s, &pieces, 3).unwrap();
        assert!(i.equals(&Ideal::new(&s, vec![s.var(1), s.var(2)]).unwrap()));
        pieces.insert(2, vec![d.var(1).pow(2)]);
        assert!(matches!(ideal_from_dual(&s, &pieces, 3), Err(ApolarityError::NotClosedUnderContraction(2, 1))));
    }
}
