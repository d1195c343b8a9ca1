//! Hilbert functions, jump degrees, Macaulay growth, Artinian reductions and
//! Gorenstein / complete-intersection tests.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::ideal::{Ideal, IdealError};
use crate::linalg::kernel;
use crate::ring::{Degree, Polynomial, Ring};
use crate::series::{binom_i, StandardSeries};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HilbertError {
    #[error("Hilbert function not known to stabilize within degree {bound}")]
    NotStabilized { bound: i64 },
    #[error("linear form {0} is not transverse")]
    NotTransverse(String),
    #[error("standard grading required")]
    NotStandardGraded,
    #[error("quotient is not Artinian")]
    NotArtinian,
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// An ℕ-graded Hilbert function: stored values, plus the closed form when known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFunction {
    values: Vec<i128>,
    series: Option<StandardSeries>,
    eventual: Option<(i128, i64)>,
}

impl HilbertFunction {
    /// A finite prefix with nothing known beyond it.
    pub fn prefix(values: Vec<i128>) -> HilbertFunction {
        HilbertFunction { values, series: None, eventual: None }
    }

    /// A prefix whose last value repeats forever.
    pub fn eventually_constant(values: Vec<i128>) -> HilbertFunction {
        let last = *values.last().expect("nonempty");
        let mut stab = values.len() as i64 - 1;
        while stab > 0 && values[stab as usize - 1] == last {
            stab -= 1;
        }
        HilbertFunction { values, series: None, eventual: Some((last, stab)) }
    }

    pub fn from_series(series: StandardSeries, bound: usize) -> HilbertFunction {
        let values = (0..=bound as i64).map(|e| series.value(e)).collect();
        let eventual = series.eventual();
        HilbertFunction { values, series: Some(series), eventual }
    }

    pub fn series(&self) -> Option<&StandardSeries> {
        self.series.as_ref()
    }

    pub fn values(&self) -> &[i128] {
        &self.values
    }

    /// `(eventual value, first degree from which it holds)` when certified.
    pub fn eventual(&self) -> Option<(i128, i64)> {
        self.eventual
    }

    pub fn value(&self, e: i64) -> Option<i128> {
        if e < 0 {
            return Some(0);
        }
        if let Some(s) = &self.series {
            return Some(s.value(e));
        }
        if (e as usize) < self.values.len() {
            return Some(self.values[e as usize]);
        }
        match self.eventual {
            Some((v, s)) if e >= s => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (upto, dots) = match self.eventual {
            Some((_, s)) => (s.max(0) + 1, true),
            None => (self.values.len() as i64 - 1, false),
        };
        let v: Vec<String> = (0..=upto).map(|e| self.value(e).unwrap_or(0).to_string()).collect();
        if dots {
            write!(f, "({},…)", v.join(","))
        } else {
            write!(f, "({})", v.join(","))
        }
    }
}

/// Hilbert function of `S/I` in degrees `0..=bound` for an ℕ-grading.
/// Standard gradings also carry the certified closed form.
pub fn hilbert_function(i: &Ideal, bound: usize) -> HilbertFunction {
    let r = i.ring();
    assert_eq!(r.grading_rank(), 1, "use hilbert_box for ℕ^r gradings");
    if r.is_standard() {
        return HilbertFunction::from_series(i.standard_series(), bound);
    }
    HilbertFunction::prefix((0..=bound as i64).map(|e| i.quotient_dim(&[e]) as i128).collect())
}

/// Values of `H_{S/I}` at every multidegree in the box `0 ≤ d ≤ upper`.
pub fn hilbert_box(i: &Ideal, upper: &[i64]) -> BTreeMap<Degree, usize> {
    let mut out = BTreeMap::new();
    let mut d = vec![0i64; upper.len()];
    loop {
        out.insert(d.clone(), i.quotient_dim(&d));
        let mut k = 0;
        loop {
            if k == d.len() {
                return out;
            }
            d[k] += 1;
            if d[k] <= upper[k] {
                break;
            }
            d[k] = 0;
            k += 1;
        }
    }
}

/// `H_{S/I}` at a partial degree: the first `deg.len()` coordinates are fixed and the
/// remaining ones summed over. The fixed rows must give every variable positive degree.
pub fn hilbert_value(i: &Ideal, deg: &[i64]) -> usize {
    let r = i.ring();
    if deg.len() == r.grading_rank() {
        return i.quotient_dim(deg);
    }
    let rows: Vec<Vec<u32>> = r.grading()[..deg.len()].to_vec();
    let coarse = Ring::new(r.names().to_vec(), rows, r.field()).expect("coarsened grading").with_order(r.order());
    let gens: Vec<Polynomial> = i.gens().iter().map(|g| g.to_ring(&coarse)).collect();
    Ideal::from_homogeneous(&coarse, gens).quotient_dim(deg)
}

/// Upper bound `h^<e>` on `H(e+1)` given `H(e) = h`.
pub fn macaulay_bound(h: i128, e: i64) -> i128 {
    if h <= 0 {
        return 0;
    }
    let mut rest = h;
    let mut out = 0i128;
    let mut i = e;
    while rest > 0 && i >= 1 {
        let mut k = i;
        while binom_i(k + 1, i) <= rest {
            k += 1;
        }
        rest -= binom_i(k, i);
        out += binom_i(k + 1, i + 1);
        i -= 1;
    }
    out
}

/// Macaulay growth check for a cyclic quotient; the second value is the first `e`
/// at which `H(e+1) > H(e)^<e>` (or `0` when `H(0) != 1`).
pub fn macaulay_admissible(h: &[i128]) -> (bool, Option<usize>) {
    if h.first() != Some(&1) || h.iter().any(|&x| x < 0) {
        return (false, Some(0));
    }
    for e in 1..h.len().saturating_sub(1) {
        if h[e + 1] > macaulay_bound(h[e], e as i64) {
            return (false, Some(e));
        }
    }
    (true, None)
}

/// Largest `a` with `H(a) != H(a+1)`, for an eventually constant function.
pub fn jump_degree(h: &HilbertFunction) -> Result<i64, HilbertError> {
    match h.eventual() {
        Some((_, s)) => Ok(s - 1),
        None => Err(HilbertError::NotStabilized { bound: h.values().len() as i64 - 1 }),
    }
}

/// `S/(Isat + (l))` and its Hilbert function, provided `l` is a nonzerodivisor.
pub fn artinian_reduction(isat: &Ideal, l: &Polynomial) -> Result<(Ideal, HilbertFunction), HilbertError> {
    if !isat.ring().is_standard() {
        return Err(HilbertError::NotStandardGraded);
    }
    if l.is_zero() || !l.is_homogeneous() || !isat.is_nonzerodivisor(l) {
        return Err(HilbertError::NotTransverse(l.to_string()));
    }
    let a = isat.add_gens(std::slice::from_ref(l));
    let s = a.standard_series();
    if s.dim != 0 {
        return Err(HilbertError::NotArtinian);
    }
    let top = s.h.len().saturating_sub(1);
    let hf = HilbertFunction::from_series(s, top);
    Ok((a, hf))
}

/// Socle dimensions of an Artinian standard graded quotient, by degree.
pub fn socle(a: &Ideal) -> Result<Vec<usize>, HilbertError> {
    let s = a.standard_series();
    if s.dim != 0 {
        return Err(HilbertError::NotArtinian);
    }
    let r = a.ring();
    let f = r.field();
    let vars = r.vars();
    let top = s.h.len() as i64 - 1;
    let mut out = Vec::new();
    for e in 0..=top {
        let src = a.standard_monomials(&[e]);
        let dst = a.standard_monomials(&[e + 1]);
        if dst.is_empty() {
            out.push(src.len());
            continue;
        }
        // rows: (variable, target coordinate); columns: source monomials
        let mut rows = vec![vec![f.zero(); src.len()]; dst.len() * vars.len()];
        for (j, m) in src.iter().enumerate() {
            for (vi, x) in vars.iter().enumerate() {
                let p = a.normal_form(&r.monomial(m.clone()).mul(x));
                let v = p.coeff_vector(&dst).expect("standard monomials");
                for (k, c) in v.into_iter().enumerate() {
                    rows[vi * dst.len() + k][j] = c;
                }
            }
        }
        out.push(kernel(f, &rows, src.len()).len());
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientClass {
    pub dimension: usize,
    pub degree: i128,
    pub complete_intersection: bool,
    /// Known for quotients of dimension at most one.
    pub gorenstein: Option<bool>,
    pub transverse: Option<Polynomial>,
}

/// Dimension, degree, complete intersection and Gorenstein flags of `S/Isat`.
pub fn classify_quotient(isat: &Ideal) -> Result<QuotientClass, HilbertError> {
    if !isat.ring().is_standard() {
        return Err(HilbertError::NotStandardGraded);
    }
    let s = isat.standard_series();
    let n = isat.ring().nvars();
    let mingens = isat.minimal_generators().len();
    let ci = !s.is_zero() && mingens == n - s.dim;
    let (gorenstein, transverse) = match s.dim {
        0 if !s.is_zero() => (Some(socle(isat)?.iter().sum::<usize>() == 1), None),
        1 => {
            let l = isat.transverse_element()?;
            let (a, _) = artinian_reduction(isat, &l)?;
            (Some(socle(&a)?.iter().sum::<usize>() == 1), Some(l))
        }
        _ => (None, None),
    };
    Ok(QuotientClass { dimension: s.dim, degree: s.degree(), complete_intersection: ci, gorenstein, transverse })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_list;
    use crate::ring::Ring;
    use crate::scalar::Field;

    fn ideal(vars: &[&str], s: &str) -> Ideal {
        let r = Ring::standard(vars, Field::Rational);
        Ideal::new(&r, parse_list(&r, s).unwrap()).unwrap()
    }

    #[test]
    fn nonvanishing_example_functions() {
        let i = ideal(&["a0", "a1", "a2"], "a0^2*a2, a0*a1^3, a0^2*a1^2, a0^3*a1, a0^5, a1^6");
        assert_eq!(hilbert_function(&i, 6).to_string(), "(1,3,6,9,9,…)");
        let s = i.saturate();
        assert_eq!(hilbert_function(s, 8).to_string(), "(1,3,5,7,8,9,9,…)");
        assert_eq!(jump_degree(&hilbert_function(s, 8)), Ok(4));
    }

    #[test]
    fn polynomial_ring_binomials() {
        let i = ideal(&["a0", "a1", "a2"], "0");
        let h = hilbert_function(&i, 3);
        assert_eq!(h.values(), &[1, 3, 6, 10]);
        assert_eq!(h.to_string(), "(1,3,6,10)");
        assert!(matches!(jump_degree(&h), Err(HilbertError::NotStabilized { .. })));
    }

    #[test]
    fn macaulay() {
        assert_eq!(macaulay_bound(2, 1), 3);
        assert_eq!(macaulay_bound(3, 2), 4);
        assert_eq!(macaulay_admissible(&[1, 2, 4]), (false, Some(1)));
        assert_eq!(macaulay_admissible(&[1, 3, 6, 10]), (true, None));
        assert_eq!(macaulay_admissible(&[1, 3, 3, 3, 3]), (true, None));
    }

    #[test]
    fn jumps() {
        assert_eq!(jump_degree(&HilbertFunction::eventually_constant(vec![1, 2, 3, 3])), Ok(1));
        assert_eq!(jump_degree(&HilbertFunction::eventually_constant(vec![1, 2, 3, 4, 5, 5])), Ok(3));
        assert_eq!(jump_degree(&HilbertFunction::eventually_constant(vec![1, 1])), Ok(-1));
    }

    #[test]
    fn reduction_of_three_points() {
        let i = ideal(&["a0", "a1", "a2"], "a1, a0^2*a2 - a0*a2^2");
        let r = i.ring().clone();
        let l = r.var(0).add(&r.var(2));
        let (_, h) = artinian_reduction(&i, &l).unwrap();
        assert_eq!(h.values(), &[1, 1, 1]);
        assert!(matches!(artinian_reduction(&i, &r.var(1)), Err(HilbertError::NotTransverse(_))));
        let c = classify_quotient(&i).unwrap();
        assert!(c.complete_intersection);
        assert_eq!(c.gorenstein, Some(true));
        assert_eq!((c.dimension, c.degree), (1, 3));
    }

    #[test]
    fn non_gorenstein_fat_scheme() {
        let i = ideal(&["a0", "a1", "a2"], "a0^2, a0*a1^3, a1^6");
        let c = classify_quotient(&i).unwrap();
        assert!(!c.complete_intersection);
        assert_eq!(c.gorenstein, Some(false));
        let l = c.transverse.unwrap();
        let (a, _) = artinian_reduction(&i, &l).unwrap();
        assert_eq!(socle(&a).unwrap().iter().sum::<usize>(), 2);
    }

    #[test]
    fn point_in_plane_line() {
        let i = ideal(&["a0", "a1"], "a0");
        let (_, h) = artinian_reduction(&i, &i.ring().var(1)).unwrap();
        assert_eq!(h.values(), &[1]);
    }
}
