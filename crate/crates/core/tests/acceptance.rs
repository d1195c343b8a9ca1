//! One line per acceptance criterion. Runs without the libtest harness so the
//! lines show up in a plain `cargo test` run.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use common::*;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use satlim::apolarity::{annihilator, dual_ring, ideal_from_dual, perp_degree, DualPolynomial};
use satlim::decide::decide_saturable;
use satlim::groebner::syzygies;
use satlim::hilbert::{hilbert_function, hilbert_value};
use satlim::ideal::Ideal;
use satlim::limits::{limit_ideal_points, verify_limit_forms, ParamFamily, UniPoly};
use satlim::obstruction::{hom0, obfib_cokernel_hom, obfib_dimension, restriction_cokernel, Outcome};
use satlim::parse::{parse_list, parse_polynomial};
use satlim::rank3::{apolar_hilbert, cactus_via_square, is_symmetric, is_unimodal, middle_degree, middle_generator, special_case_3, special_case_4, RankCertificate};
use satlim::ring::{Polynomial, Ring, RingRef};
use satlim::scalar::Field;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(t0: Instant, limit: Duration) -> Result<(), String> {
    ensure(t0.elapsed() < limit, format!("took {:?}, limit {:?}", t0.elapsed(), limit))
}

fn std3() -> RingRef {
    Ring::standard(&["a0", "a1", "a2"], Field::Rational)
}

fn ideal(r: &RingRef, s: &str) -> Ideal {
    Ideal::new(r, parse_list(r, s).unwrap()).unwrap()
}

/// Degree-`e` parts agree, by dense rank.
fn same_degree_part(n: usize, a: &[Polynomial], b: &[Polynomial], e: u32) -> bool {
    let nb = monos(n, e).len();
    let (sa, sb) = (degree_span(n, a, e), degree_span(n, b, e));
    let both: Vec<_> = sa.iter().chain(&sb).cloned().collect();
    let r = rank(&both, nb);
    rank(&sa, nb) == r && rank(&sb, nb) == r
}

fn values(i: &Ideal, upto: i64) -> Vec<i128> {
    let h = hilbert_function(i, upto as usize + 2);
    (0..=upto).map(|e| h.value(e).unwrap()).collect()
}

fn ac1() -> Check {
    let t0 = Instant::now();
    let s = std3();
    let f = s.field();
    let (one, zero, t) = (UniPoly::constant(f.one()), UniPoly::zero(f), UniPoly::monomial(f.one(), 1));
    let pts = vec![
        vec![one.clone(), zero.clone(), zero.clone()],
        vec![one.clone(), t, one.clone()],
        vec![zero.clone(), zero, one],
    ];
    let li = limit_ideal_points(&s, &pts, 4).map_err(|e| e.to_string())?;
    let want = ideal(&s, "a0^2*a2 - a0*a2^2, a0*a1, a1^2, a1*a2");
    for e in 0..=6 {
        ensure(same_degree_part(3, li.ideal.gens(), want.gens(), e), format!("limit differs in degree {e}"))?;
    }
    let sat = li.ideal.saturate();
    ensure(sat.equals(&ideal(&s, "a1, a0^2*a2 - a0*a2^2")), format!("saturation {sat}"))?;
    within(t0, Duration::from_secs(1))?;
    Ok(format!("limit = {}, saturation = {sat}, {:?}", li.ideal, t0.elapsed()))
}

fn ac2() -> Check {
    let t0 = Instant::now();
    let s = std3();
    let i = ideal(&s, "a0^2*a2, a0*a1^3, a0^2*a1^2, a0^3*a1, a0^5, a1^6");
    let hi = values(&i, 8);
    ensure(hi == [1, 3, 6, 9, 9, 9, 9, 9, 9], format!("H_S/I = {hi:?}"))?;
    let dense: Vec<i128> = (0..=8).map(|e| hilbert(3, i.gens(), e) as i128).collect();
    ensure(dense == hi, "dense oracle disagrees on H_S/I")?;
    let sat = i.saturate().clone();
    ensure(sat.equals(&ideal(&s, "a0^2, a0*a1^3, a1^6")), format!("saturation {sat}"))?;
    let hs = values(&sat, 8);
    ensure(hs == [1, 3, 5, 7, 8, 9, 9, 9, 9], format!("H_S/Isat = {hs:?}"))?;
    let coker = restriction_cokernel(&sat, &i, &sat, &[0]);
    ensure(coker == 1, format!("cokernel {coker}"))?;
    let i1 = ideal(&s, "a0*a1^2 + a0^2*a2, a0*a1^3, a0^2*a1^2, a0^3*a1, a0^5, a1^6");
    let sat1 = i1.saturate().clone();
    ensure(sat1.equals(&ideal(&s, "a0*a1^2 + a0^2*a2, a0^2*a1, a0^3, a1^6")), format!("saturation of I_1 {sat1}"))?;
    let h1 = values(&sat1, 8);
    ensure(h1 == [1, 3, 6, 7, 8, 9, 9, 9, 9], format!("H of saturated I_1 = {h1:?}"))?;
    within(t0, Duration::from_secs(10))?;
    Ok(format!("H = (1,3,6,9,9,…), Hsat = (1,3,5,7,8,9,9,…), coker 1, H(I_1 sat) = (1,3,6,7,8,9,9,…), {:?}", t0.elapsed()))
}

fn ac3() -> Check {
    let t0 = Instant::now();
    let names = ["a0", "a1", "a2"].map(String::from).to_vec();
    let r = Ring::new(names, vec![vec![1, 1, 1], vec![0, 1, 0]], Field::Rational).map_err(|e| e.to_string())?;
    let i = ideal(&r, "a0^3, a0*a1^2, a0^2*a2, a0*a1*a2, a0*a2^4, a2^6");
    let hom_want: BTreeMap<i64, usize> = [(6, 1), (5, 1), (4, 1), (3, 1), (2, 1), (1, 4), (0, 3), (-1, 2)].into();
    for k in -4..=8 {
        let ob = obfib_cokernel_hom(&i, &[0, k]).map_err(|e| e.to_string())?;
        ensure(ob == usize::from(k == -1), format!("ObFib_(0,{k}) = {ob}"))?;
        let h = hom0(&i, &i, &[0, k]).dimension();
        ensure(h == hom_want.get(&k).copied().unwrap_or(0), format!("Hom_(0,{k}) = {h}"))?;
    }
    let h = hilbert_value(&i.power(2), &[9]);
    ensure(h == 17, format!("H_S/I^2(9) = {h}"))?;
    within(t0, Duration::from_secs(30))?;
    Ok(format!("ObFib_(0,*) = ObFib_(0,-1) = 1, Hom table matches, H_S/I^2(9) = 17, {:?}", t0.elapsed()))
}

fn ac4() -> Check {
    let s = std3();
    let i = ideal(&s, "a0^2*a2 - a0*a2^2, a0*a1, a1^2, a1*a2");
    let ob = obfib_dimension(&i, None).map_err(|e| e.to_string())?;
    ensure(ob.dimension == 1, format!("ObFib = {}", ob.dimension))?;
    let d = decide_saturable(&i).map_err(|e| e.to_string())?;
    ensure(d.verdict == Outcome::Saturable, format!("verdict {:?}", d.verdict))?;
    Ok(format!("ObFib = 1 via {}, decide = Saturable", ob.method.name()))
}

fn ac5() -> Check {
    let r = Ring::standard_n("a", 4, Field::Rational);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut seen = Vec::new();
    for (extra, want_holds) in [([1u32, 0, 1, 0], true), ([0, 0, 2, 0], false)] {
        let (gens, holds) = four_points(&r, &extra);
        ensure(holds == want_holds, "oracle containment differs from construction")?;
        let want = if holds { Outcome::Saturable } else { Outcome::NotSaturable };
        let h: Vec<usize> = (0..=6).map(|e| hilbert(4, &gens, e)).collect();
        ensure(h == [1, 4, 4, 4, 4, 4, 4], format!("H = {h:?}"))?;
        let base = decide_saturable(&Ideal::new(&r, gens.clone()).unwrap()).map_err(|e| e.to_string())?;
        ensure(base.verdict == want, format!("verdict {:?}, expected {want:?}", base.verdict))?;
        for _ in 0..20 {
            let m = random_invertible(&mut rng, 4);
            let images = linear_images(&r, &m);
            let moved: Vec<Polynomial> = gens.iter().map(|g| g.substitute(&images)).collect();
            let d = decide_saturable(&Ideal::new(&r, moved).unwrap()).map_err(|e| e.to_string())?;
            ensure(d.verdict == want, format!("verdict {:?} after change {m:?}", d.verdict))?;
        }
        seen.push(format!("{want:?}"));
    }
    Ok(format!("instances give {} / {}, stable under 20 changes each", seen[0], seen[1]))
}

fn ac6() -> Check {
    let dual = Ring::standard_n("x", 5, Field::Rational);
    let s = Ring::standard_n("a", 5, Field::Rational);
    let p = |t: &str| parse_polynomial(&dual, t).unwrap();
    let mu: Vec<Polynomial> = ["x4 - x3", "x4 + x3", "x4 - 2*x3", "x4 + 2*x3", "x4"].iter().map(|t| p(t)).collect();
    let c1 = [qf(0, 1), qf(0, 1), qf(1, 8), qf(1, 8), qf(-2, 8)];
    let sq = mu.iter().zip(&c1).fold(dual.zero(), |acc, (m, c)| acc.add(&m.mul(m).scale(&scalar(c))));
    ensure(sq == p("x3^2"), format!("Σ c1 μ² = {sq}"))?;
    let w = mu.iter().zip(&c1).fold(q(0), |acc, (m, c)| {
        let dm = m.derivative(4).terms().first().map_or(q(0), |(_, k)| k.as_rational().unwrap().clone());
        acc + dm * c.clone() * c.clone()
    });
    ensure(w == qf(6, 64), format!("Σ ∂μ/∂x4 c1² = {w}"))?;

    // Σ λ_i μ_i³ = 0 holds with these weights; the family uses c1/λ so that Σ λ_i c1'_i μ_i² = x3².
    let lambda = [-4i64, -4, 1, 1, 6];
    let cubes = mu.iter().zip(&lambda).fold(dual.zero(), |acc, (m, &l)| acc.add(&m.pow(3).scale(&scalar(&q(l)))));
    ensure(cubes.is_zero(), "Σ λ μ³ ≠ 0")?;
    let pr = ParamFamily::param_ring(&dual);
    let tv = pr.var(5);
    let lift = |x: &Polynomial| x.map_vars(&pr, &[0, 1, 2, 3, 4]);
    let x = |i: usize| pr.var(i);
    let c3 = [1, 0, 0, 0, 0];
    let c4 = [0, 1, 0, 0, 0];
    let pts: Vec<Polynomial> = (0..5)
        .map(|i| {
            let c1p = c1[i].clone() / q(lambda[i]);
            let lin = x(0).scale(&scalar(&c1p)).mul(&tv);
            let quad = x(1).scale(&scalar(&q(c3[i]))).add(&x(2).scale(&scalar(&q(c4[i])))).mul(&tv.pow(2));
            lift(&mu[i]).add(&lin).add(&quad)
        })
        .collect();
    let lam = |i: usize| scalar(&q(lambda[i]));
    let hnum = (0..5).fold(pr.zero(), |acc, i| acc.add(&pts[i].pow(3).scale(&lam(i))));
    let div_t = |f: &Polynomial, k: u32, c: i64| -> Result<Polynomial, String> {
        let mut m = vec![0u32; 6];
        m[5] = k;
        f.div_monomial(&m).map(|g| g.scale(&scalar(&qf(1, c)))).ok_or_else(|| format!("not divisible by t^{k}"))
    };
    let mut report = Vec::new();
    for e in 1..=3u32 {
        let f: Vec<Polynomial> = pts.iter().map(|pt| pt.pow(e)).collect();
        let (g, d): (Vec<Polynomial>, Vec<u32>) = match e {
            3 => {
                let mut g = f[..4].to_vec();
                g.push(div_t(&hnum, 1, 3)?);
                (g, vec![0, 0, 0, 0, 1])
            }
            2 => {
                let mut g = f[..3].to_vec();
                g.push(div_t(&hnum.derivative(3), 1, 3)?);
                g.push(div_t(&hnum.derivative(4), 2, 6)?);
                (g, vec![0, 0, 0, 1, 2])
            }
            _ => {
                let mut g = f[..2].to_vec();
                g.push(div_t(&hnum.derivative(4).derivative(4), 2, 6)?);
                g.push(div_t(&hnum.derivative(4).derivative(3), 2, 6)?);
                g.push(div_t(&hnum.derivative(4).derivative(0), 2, 6)?);
                (g, vec![0, 0, 2, 2, 1])
            }
        };
        let rep = verify_limit_forms(&dual, &f, &g, &d).map_err(|err| format!("degree {e}: {err}"))?;
        if e == 3 {
            ensure(rep.limit[4] == p("x0*x3^2"), format!("lim H = {}", rep.limit[4]))?;
        }
        report.push((e, rep.limit));
    }

    let f = s.field();
    let coords: Vec<Vec<UniPoly>> = pts
        .iter()
        .map(|pt| (0..5).map(|v| UniPoly::from_polynomial(&pt.derivative(v), 5)).collect())
        .collect();
    let _ = f;
    let li = limit_ideal_points(&s, &coords, 5).map_err(|e| e.to_string())?;
    let h = values(&li.ideal, 4);
    ensure(h == [1, 5, 5, 5, 5], format!("H = {h:?}"))?;
    for (e, lim) in &report {
        for sigma in li.ideal.degree_basis(&[*e as i64]) {
            for g in lim {
                let k = satlim::apolarity::contract(&sigma, &DualPolynomial::differentiation(g.clone()));
                ensure(k.poly.is_zero(), format!("limit form {g} not orthogonal to the limit ideal in degree {e}"))?;
            }
        }
    }
    let verdict = decide_saturable(&li.ideal).map_err(|e| e.to_string())?.verdict;
    ensure(verdict == Outcome::Saturable, format!("decide on the limit gives {verdict:?}"))?;
    Ok("Σc1μ² = x3², Σ∂μ c1² = 6/64, degrees 1,2,3 certified, H = (1,5,5,5,5), decide = Saturable".into())
}

/// `σ ⌟ F` under the monomial contraction rule, computed from raw terms.
fn oracle_contract_zero(sigma: &Polynomial, f: &Polynomial) -> bool {
    let mut acc: BTreeMap<Vec<u32>, Q> = BTreeMap::new();
    for (m, c) in sigma.terms() {
        for (u, d) in f.terms() {
            if m.iter().zip(u).all(|(a, b)| a <= b) {
                let key: Vec<u32> = u.iter().zip(m).map(|(a, b)| a - b).collect();
                let v = acc.entry(key).or_insert_with(Q::zero);
                *v = v.clone() + c.as_rational().unwrap().clone() * d.as_rational().unwrap().clone();
            }
        }
    }
    acc.values().all(|v| v.is_zero())
}

/// `rank(σ ↦ σ ⌟ F)` on `S_e`, from raw terms.
fn oracle_apolar_hilbert(f: &Polynomial, d: u32) -> Vec<usize> {
    (0..=d)
        .map(|e| {
            let target = monos(3, d - e);
            let rows: Vec<Vec<Q>> = monos(3, e)
                .iter()
                .map(|m| {
                    let mut v = vec![Q::zero(); target.len()];
                    for (u, c) in f.terms() {
                        if m.iter().zip(u).all(|(a, b)| a <= b) {
                            let key: Vec<u32> = u.iter().zip(m).map(|(a, b)| a - b).collect();
                            let i = target.iter().position(|t| *t == key).unwrap();
                            v[i] = c.as_rational().unwrap().clone();
                        }
                    }
                    v
                })
                .collect();
            rank(&rows, target.len())
        })
        .collect()
}

fn certificate_ok(c: &RankCertificate, f: &Polynomial, d: i64) -> Result<(), String> {
    ensure(c.revalidate(), format!("{} certificate fails its checks: {:?}", c.route, c.checks))?;
    ensure(c.gamma.gens().iter().all(|g| oracle_contract_zero(g, f)), "generator does not annihilate F")?;
    ensure(c.bound <= d + 3 && c.degree.is_some_and(|x| x <= c.bound as i128), format!("bound {} degree {:?}", c.bound, c.degree))
}

fn ac7() -> Check {
    let t0 = Instant::now();
    let s = std3();
    let dual = dual_ring(&s);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut certs = 0;
    let only = |p: Polynomial, allowed: &dyn Fn(&[u32]) -> bool| -> Polynomial {
        dual.from_terms(p.into_terms().into_iter().filter(|(m, _)| allowed(m)).collect())
    };
    for k in 0..200 {
        let d = 3 + (k % 6) as u32;
        let nt = rng.gen_range(3..=8);
        let fp = random_form(&mut rng, &dual, d, nt);
        let f = DualPolynomial::new(fp.clone());
        let h = apolar_hilbert(&s, &f);
        ensure(h == oracle_apolar_hilbert(&fp, d), format!("catalecticant ranks disagree for {fp}"))?;
        let ann = annihilator(&s, &f, d as i64 + 1).map_err(|e| e.to_string())?;
        let hv: Vec<usize> = (0..=d as i64).map(|e| hilbert_function(&ann, d as usize + 1).value(e).unwrap() as usize).collect();
        ensure(hv == h, format!("H_S/Ann(F) = {hv:?} but catalecticants give {h:?}"))?;
        ensure(is_symmetric(&h) && is_unimodal(&h), format!("H = {h:?} for {fp}"))?;

        let l = random_form(&mut rng, &s, 1, 3);
        let sigma = middle_generator(&s, &f, &l).map_err(|e| format!("{fp}: {e}"))?;
        ensure(oracle_contract_zero(&sigma, &fp), "middle generator does not annihilate")?;
        ensure(!member(3, &[l.clone()], &sigma), "middle generator divisible by ℓ")?;

        let sq = only(random_form(&mut rng, &dual, d, 6), &|m| m[0] <= 1);
        if !sq.is_zero() {
            let c = cactus_via_square(&s, &DualPolynomial::new(sq.clone()), &s.var(0)).map_err(|e| e.to_string())?;
            certificate_ok(&c, &sq, d as i64)?;
            ensure(c.bound <= 2 * middle_degree(d as i64), "square bound")?;
            certs += 1;
        }
        let di = d as u32;
        let mixed3 = dual.term(vec![1, 1, di - 2], scalar(&q(rng.gen_range(-2..=2))));
        let sc3 = only(random_form(&mut rng, &dual, d, 6), &|m| m[0] == 0 || m[1] == 0).add(&mixed3);
        if d >= 4 && !sc3.is_zero() {
            let c = special_case_3(&s, &DualPolynomial::new(sc3.clone())).map_err(|e| format!("{sc3}: {e}"))?;
            certificate_ok(&c, &sc3, d as i64)?;
            certs += 1;
        }
        let mixed4 = dual.term(vec![1, 0, di - 1], scalar(&q(rng.gen_range(-2..=2))));
        let sc4 = only(random_form(&mut rng, &dual, d, 6), &|m| m[0] == 0 || m[2] == 0).add(&mixed4);
        if !sc4.is_zero() {
            let c = special_case_4(&s, &DualPolynomial::new(sc4.clone())).map_err(|e| format!("{sc4}: {e}"))?;
            certificate_ok(&c, &sc4, d as i64)?;
            certs += 1;
        }
    }
    within(t0, Duration::from_secs(300))?;
    Ok(format!("200 forms, {certs} certificates revalidated, {:?}", t0.elapsed()))
}

fn random_ideal(rng: &mut ChaCha8Rng, r: &RingRef) -> Vec<Polynomial> {
    let k = rng.gen_range(2..=4);
    (0..k)
        .map(|_| {
            let (e, t) = (rng.gen_range(1..=4), rng.gen_range(1..=3));
            random_form(rng, r, e, t)
        })
        .collect()
}

fn ac8() -> Check {
    let t0 = Instant::now();
    let r = std3();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut checks = [0usize; 4];
    // (a) membership
    for _ in 0..100 {
        let gens = random_ideal(&mut rng, &r);
        let i = Ideal::new(&r, gens.clone()).unwrap();
        for _ in 0..3 {
            let e = rng.gen_range(1..=8u32);
            let inside = gens.iter().filter(|g| g.degree()[0] as u32 <= e).fold(r.zero(), |acc, g| {
                acc.add(&g.mul(&random_form(&mut rng, &r, e - g.degree()[0] as u32, 2)))
            });
            let any = random_form(&mut rng, &r, e, 3);
            for p in [inside, any] {
                ensure(i.contains(&p) == member(3, &gens, &p), format!("membership of {p} in {i}"))?;
                checks[0] += 1;
            }
        }
    }
    // (b) Hilbert function
    for _ in 0..40 {
        let gens = random_ideal(&mut rng, &r);
        let i = Ideal::new(&r, gens.clone()).unwrap();
        let h = hilbert_function(&i, 10);
        for e in 0..=10u32 {
            ensure(h.value(e as i64) == Some(hilbert(3, &gens, e) as i128), format!("H({e}) of {i}"))?;
            checks[1] += 1;
        }
    }
    // (c) syzygies
    for _ in 0..20 {
        let gens = random_ideal(&mut rng, &r);
        let degs: Vec<u32> = gens.iter().map(|g| g.degree()[0] as u32).collect();
        let syz = syzygies(&r, &gens);
        for s in &syz {
            let sum = s.iter().zip(&gens).fold(r.zero(), |acc, (a, g)| acc.add(&a.mul(g)));
            ensure(sum.is_zero(), "returned syzygy is not one")?;
        }
        let top = degs.iter().max().unwrap() + 6;
        for e in 0..=top {
            let blocks: Vec<Vec<Vec<u32>>> = degs.iter().map(|&dg| if dg <= e { monos(3, e - dg) } else { vec![] }).collect();
            let width: usize = blocks.iter().map(Vec::len).sum();
            if width == 0 {
                continue;
            }
            // kernel of (c_i) ↦ Σ c_i g_i on ⊕ S_{e − deg g_i}
            let target = monos(3, e);
            let mut cols = Vec::new();
            for (g, b) in gens.iter().zip(&blocks) {
                for m in b {
                    cols.push(coeffs(&g.mul(&r.monomial(m.clone())), &target));
                }
            }
            let rows: Vec<Vec<Q>> = (0..target.len()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
            let kdim = kernel(&rows, width).len();
            // span of the syzygy module in that degree
            let mut span = Vec::new();
            for s in &syz {
                let Some(sd) = s.iter().zip(&degs).find(|(a, _)| !a.is_zero()).map(|(a, &dg)| a.degree()[0] as u32 + dg) else { continue };
                if sd > e {
                    continue;
                }
                for m in monos(3, e - sd) {
                    let mut v = Vec::new();
                    for (a, b) in s.iter().zip(&blocks) {
                        let am = a.mul(&r.monomial(m.clone()));
                        v.extend(if b.is_empty() { vec![] } else { coeffs(&am, b) });
                    }
                    span.push(v);
                }
            }
            ensure(rank(&span, width) == kdim, format!("syzygies incomplete in degree {e} for {gens:?}"))?;
            checks[2] += 1;
        }
    }
    // (d) double perp
    let dual = dual_ring(&r);
    for _ in 0..30 {
        let gens = random_ideal(&mut rng, &r);
        let top = 6;
        let mut pieces = BTreeMap::new();
        for e in 1..=top {
            let ie = degree_basis(&r, &gens, e as u32);
            let perp = perp_degree(&dual, e, &ie);
            let back = perp_degree(&r, e, &perp);
            ensure(same_degree_part(3, &back, &ie, e as u32), format!("(I^⊥)^⊥ ≠ I in degree {e}"))?;
            pieces.insert(e, perp);
        }
        let rebuilt = ideal_from_dual(&r, &pieces, top).map_err(|e| e.to_string())?;
        for e in 0..=top as u32 {
            ensure(same_degree_part(3, rebuilt.gens(), &gens, e), format!("ideal from dual differs in degree {e}"))?;
            checks[3] += 1;
        }
    }
    Ok(format!("{} membership, {} Hilbert, {} syzygy-degree, {} perp checks, 0 mismatches, {:?}", checks[0], checks[1], checks[2], checks[3], t0.elapsed()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("intro limit and its saturation", ac1),
        ("partially saturable example: Hilbert functions and cokernel", ac2),
        ("N^2-graded example: ObFib and Hom tables, H_S/I^2(9)", ac3),
        ("three points: ObFib and decision", ac4),
        ("four collinear points", ac5),
        ("five points worked instance", ac6),
        ("ternary forms: Hilbert symmetry, middle generators, certificates", ac7),
        ("oracle suites", ac8),
    ];
    let filter: Option<String> = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let mut failed = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let tag = format!("AC{}", k + 1);
        if filter.as_ref().is_some_and(|f| !tag.eq_ignore_ascii_case(f)) {
            continue;
        }
        match run() {
            Ok(detail) => println!("{tag} PASS  {title}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("{tag} FAIL  {title}: {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
