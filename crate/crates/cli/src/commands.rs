use std::fmt::Write;

use serde_json::{json, Value};

use satlim::apolarity::{annihilator, dual_ring, DualPolynomial};
use satlim::decide::{auto_candidates, decide_saturable, sticky_screen, DecideError};
use satlim::hilbert::{hilbert_function, hilbert_value};
use satlim::ideal::Ideal;
use satlim::limits::{limit_ideal_family, limit_ideal_points, verify_limit_forms, LimitIdeal, ParamFamily};
use satlim::obstruction::{hom0, obfib_cokernel_hom, obfib_dimension};
use satlim::parse::parse_list;
use satlim::problem::{Payload, Problem};
use satlim::rank3::{apolar_hilbert, cactus_via_square, exclude_wild, middle_generator, special_case_3, special_case_4, RankCertificate, RankError};
use satlim::replicate;
use satlim::{Polynomial, Ring, RingRef};

use crate::{Command, Rank3Op};

pub enum Fail {
    Input(String),
    NotApplicable(String),
    Internal(String),
}

impl Fail {
    pub fn code(&self) -> u8 {
        match self {
            Fail::NotApplicable(_) => 1,
            Fail::Input(_) => 2,
            Fail::Internal(_) => 3,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Fail::NotApplicable(_) => "not_applicable",
            Fail::Input(_) => "input_error",
            Fail::Internal(_) => "internal_error",
        }
    }

    pub fn message(&self) -> String {
        match self {
            Fail::Input(m) | Fail::NotApplicable(m) | Fail::Internal(m) => m.clone(),
        }
    }
}

pub struct Report {
    pub exit: u8,
    pub verdict: Option<String>,
    pub value: Value,
    pub certificates: Vec<Value>,
    pub assumptions: Vec<String>,
    pub text: String,
}

impl Report {
    fn value(value: Value, text: String) -> Report {
        Report { exit: 0, verdict: None, value, certificates: Vec::new(), assumptions: Vec::new(), text }
    }

    fn verdict(verdict: String, text: String) -> Report {
        Report { exit: 0, verdict: Some(verdict), value: Value::Null, certificates: Vec::new(), assumptions: Vec::new(), text }
    }
}

type Out = Result<Report, Fail>;

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn load(text: Option<&str>) -> Result<Problem, Fail> {
    Problem::parse(text.unwrap_or_default()).map_err(|e| Fail::Input(e.to_string()))
}

fn ideal_of(p: &Problem) -> Result<Ideal, Fail> {
    match &p.payload {
        Payload::Ideal(g) => Ideal::new(&p.ring, g.clone()).map_err(|e| Fail::Input(e.to_string())),
        _ => Err(Fail::Input("this command needs an `ideal:` file".into())),
    }
}

/// The form's ring is read as the dual ring; `S` gets variables `a0, a1, …`.
fn form_of(p: &Problem) -> Result<(RingRef, DualPolynomial), Fail> {
    let Payload::Form(f) = &p.payload else {
        return Err(Fail::Input("this command needs a `form:` file".into()));
    };
    if !p.ring.is_standard() {
        return Err(Fail::Input("forms need the standard grading".into()));
    }
    let s = Ring::standard_n("a", p.ring.nvars(), p.ring.field());
    let dual = dual_ring(&s);
    Ok((s, DualPolynomial::new(f.to_ring(&dual))))
}

/// A multidegree; `prefix` allows fewer entries than grading rows (a coarser degree).
fn degree_with(r: &RingRef, s: &str, prefix: bool) -> Result<Vec<i64>, Fail> {
    let d: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| Fail::Input(format!("bad degree `{s}`")))?;
    if d.len() > r.grading_rank() || (!prefix && d.len() < r.grading_rank()) {
        return Err(Fail::Input(format!("degree `{s}` has {} entries, the grading has {}", d.len(), r.grading_rank())));
    }
    Ok(d)
}

fn degree(r: &RingRef, s: &str) -> Result<Vec<i64>, Fail> {
    degree_with(r, s, false)
}

fn linear(s: &RingRef, text: &str) -> Result<Polynomial, Fail> {
    let v = parse_list(s, text).map_err(|e| Fail::Input(format!("linear form: {e}")))?;
    match v.as_slice() {
        [l] if l.is_homogeneous() && l.degree()[0] == 1 => Ok(l.clone()),
        _ => Err(Fail::Input(format!("`{text}` is not a linear form in {}", s.names().join(" ")))),
    }
}

fn rank_fail(e: RankError) -> Fail {
    match e {
        RankError::Internal(m) => Fail::Internal(m),
        RankError::BadForm => Fail::Input(e.to_string()),
        other => Fail::NotApplicable(other.to_string()),
    }
}

pub fn dispatch(cmd: &Command, text: Option<&str>) -> Out {
    match cmd {
        Command::Replicate { jobs, only } => return replicate_cmd(only, *jobs),
        Command::Rank3 { op } => return rank3(op, &load(text)?),
        _ => {}
    }
    let p = load(text)?;
    match cmd {
        Command::Saturate(_) => saturate(&ideal_of(&p)?),
        Command::Hilbert { power, at, bound, .. } => hilbert(&ideal_of(&p)?, *power, at.as_deref(), *bound),
        Command::Obfib { line, degree: deg, .. } => obfib(&ideal_of(&p)?, line.as_deref(), deg.as_deref()),
        Command::Hom0 { degree: deg, .. } => hom(&ideal_of(&p)?, deg),
        Command::Decide { screen, assert_smooth, .. } => decide(&ideal_of(&p)?, *screen, *assert_smooth),
        Command::Limit { degree_bound, .. } => limit(&p, *degree_bound),
        Command::VerifyLimitForms(_) => limit_forms(&p),
        Command::Replicate { .. } | Command::Rank3 { .. } => unreachable!(),
    }
}

fn saturate(i: &Ideal) -> Out {
    let sat = i.saturate();
    let already = sat.contains_ideal(i) && i.contains_ideal(sat);
    let text = format!("saturated: {}\nsaturation: {sat}\n", if already { "yes" } else { "no" });
    Ok(Report::value(json!({"saturated": already, "generators": strings(sat.gens())}), text))
}

fn hilbert(i: &Ideal, power: u32, at: Option<&str>, bound: usize) -> Out {
    let j = if power == 1 { i.clone() } else { i.power(power) };
    if let Some(at) = at {
        let d = degree_with(i.ring(), at, true)?;
        let v = hilbert_value(&j, &d);
        return Ok(Report::value(json!(v), format!("{v}\n")));
    }
    if i.ring().grading_rank() != 1 {
        return Err(Fail::Input("multigraded rings need --at".into()));
    }
    let h = hilbert_function(&j, bound);
    let eventual = h.eventual().map(|(v, from)| json!({"value": v.to_string(), "from": from}));
    let values: Vec<String> = h.values().iter().map(|v| v.to_string()).collect();
    Ok(Report::value(json!({"values": values, "eventual": eventual, "display": h.to_string()}), format!("{h}\n")))
}

fn obfib(i: &Ideal, line: Option<&str>, deg: Option<&str>) -> Out {
    if let Some(deg) = deg {
        let d = degree(i.ring(), deg)?;
        let v = obfib_cokernel_hom(i, &d).map_err(|e| Fail::NotApplicable(e.to_string()))?;
        return Ok(Report::value(json!(v), format!("{v}\n")));
    }
    let line = match line {
        Some(l) => Some(Ideal::new(i.ring(), parse_list(i.ring(), l).map_err(|e| Fail::Input(e.to_string()))?).map_err(|e| Fail::Input(e.to_string()))?),
        None => None,
    };
    let rep = obfib_dimension(i, line.as_ref()).map_err(|e| Fail::NotApplicable(e.to_string()))?;
    let mut text = format!("{}\nmethod: {}\n", rep.dimension, rep.method.name());
    if let Some(a) = rep.jump_degree {
        let _ = writeln!(text, "degree: {a}");
    }
    let mut r = Report::value(json!(rep.dimension), text);
    r.assumptions.push(format!("method: {}", rep.method.name()));
    Ok(r)
}

fn hom(i: &Ideal, deg: &str) -> Out {
    let d = degree(i.ring(), deg)?;
    let h = hom0(i, i, &d);
    let mut text = format!("{}\n", h.dimension());
    let basis: Vec<Vec<String>> = h.basis.iter().map(|b| strings(b)).collect();
    for b in &basis {
        let _ = writeln!(text, "  [{}]", b.join(", "));
    }
    Ok(Report::value(json!({"dimension": h.dimension(), "generators": strings(i.gens()), "basis": basis}), text))
}

fn decide(i: &Ideal, screen: bool, assert_smooth: bool) -> Out {
    let mut report = match decide_saturable(i) {
        Ok(d) => {
            let mut text = format!("{:?}\nroute: {}\n", d.verdict, d.route);
            if d.entirely {
                text.push_str("entirely: yes\n");
            }
            if let Some(l) = &d.line {
                let _ = writeln!(text, "line: {l}");
            }
            for c in &d.containments {
                let _ = writeln!(text, "{}: {}{}", c.claim, if c.holds { "holds" } else { "fails" }, c.witness.as_ref().map(|w| format!(" (witness {w})")).unwrap_or_default());
            }
            for a in &d.assumptions {
                let _ = writeln!(text, "assumption: {a}");
            }
            let mut r = Report::verdict(format!("{:?}", d.verdict), text);
            r.certificates = vec![serde_json::to_value(&d).expect("serializable")];
            r.assumptions = d.assumptions.clone();
            r
        }
        Err(e @ (DecideError::UnsupportedHilbertFunction(_) | DecideError::WrongCharacteristic(_))) if screen => {
            let mut r = Report::verdict(String::new(), String::new());
            r.assumptions.push(format!("case analysis not available: {e}"));
            r
        }
        Err(DecideError::Obstruction(e)) => return Err(Fail::NotApplicable(e.to_string())),
        Err(DecideError::CandidateNotBetween(m)) => return Err(Fail::Internal(m)),
        Err(e) => return Err(Fail::NotApplicable(e.to_string())),
    };
    if screen {
        let s = sticky_screen(i, &auto_candidates(i), assert_smooth).map_err(|e| Fail::NotApplicable(e.to_string()))?;
        if report.verdict.as_deref() == Some("") {
            report.verdict = Some(format!("{:?}", s.verdict));
            report.text = format!("{:?}\n", s.verdict);
            for a in &report.assumptions {
                let _ = writeln!(report.text, "assumption: {a}");
            }
        }
        for c in &s.results {
            let _ = writeln!(report.text, "candidate {}: {} ({}; {})", c.candidate, if c.sticky { "sticky" } else { "not shown sticky" }, c.route, c.detail);
        }
        report.certificates.push(serde_json::to_value(&s).expect("serializable"));
        if assert_smooth {
            report.assumptions.push("smoothness of [J] asserted by caller".into());
        }
    }
    Ok(report)
}

fn limit_report(li: &LimitIdeal) -> Out {
    let sat = li.ideal.saturate();
    let ranks: Vec<String> = li.ranks.iter().enumerate().map(|(k, (a, b))| format!("{}:{a}/{b}", k + 1)).collect();
    let text = format!(
        "limit: {}\nsaturation: {sat}\ncomplete through degree {}: {}\nranks: {}\n",
        li.ideal,
        li.bound,
        if li.complete { "yes" } else { "no" },
        ranks.join(" ")
    );
    let value = json!({
        "generators": strings(li.ideal.gens()),
        "saturation": strings(sat.gens()),
        "complete": li.complete,
        "ranks": li.ranks,
    });
    let mut r = Report::value(value, text);
    if !li.complete {
        r.assumptions.push(format!("generators may be missing above degree {}", li.bound));
    }
    Ok(r)
}

fn limit(p: &Problem, degree_bound: Option<i64>) -> Out {
    match &p.payload {
        Payload::Points { bound, points } => limit_report(&limit_ideal_points(&p.ring, points, degree_bound.unwrap_or(*bound)).map_err(|e| Fail::Input(e.to_string()))?),
        Payload::Family { bound, elements, .. } => {
            if p.ring.grading_rank() != 1 {
                return Err(Fail::Input("families need an ℕ-grading".into()));
            }
            let fam = ParamFamily::new(&p.ring, elements.clone()).map_err(|e| Fail::Input(e.to_string()))?;
            limit_report(&limit_ideal_family(&fam, degree_bound.unwrap_or(*bound)))
        }
        _ => Err(Fail::Input("`limit` needs a `family(e):` or `points(e):` file".into())),
    }
}

fn limit_forms(p: &Problem) -> Out {
    let Payload::Family { elements, limits, orders, .. } = &p.payload else {
        return Err(Fail::Input("`verify-limit-forms` needs a `family(e):` file with `limits:` and `orders:`".into()));
    };
    if limits.is_empty() {
        return Err(Fail::Input("no `limits:` given".into()));
    }
    let rep = verify_limit_forms(&p.ring, elements, limits, orders).map_err(|e| Fail::NotApplicable(e.to_string()))?;
    let mut text = String::from("verified\n");
    for g in &rep.limit {
        let _ = writeln!(text, "  {g}");
    }
    let _ = writeln!(text, "valid for t with {} ≠ 0", rep.certificate);
    let mut r = Report::verdict("verified".into(), text);
    r.certificates.push(json!({"limits": strings(&rep.limit), "general_parameter_condition": rep.certificate.to_string()}));
    Ok(r)
}

fn certificate(c: RankCertificate) -> Out {
    if !c.is_valid() {
        return Err(Fail::Internal(format!("certificate from {} failed its checks: {:?}", c.route, c.checks)));
    }
    let text = format!(
        "cactus rank ≤ {}\nroute: {}\ndegree: {}\nideal: ({})\n",
        c.bound,
        c.route,
        c.degree.map(|d| d.to_string()).unwrap_or_else(|| "?".into()),
        c.generators.join(", ")
    );
    let mut r = Report::value(json!(c.bound), text);
    r.certificates.push(serde_json::to_value(&c).expect("serializable"));
    Ok(r)
}

fn matrix(s: &str) -> Result<Vec<Vec<i64>>, Fail> {
    let m: Vec<Vec<i64>> = s
        .split(';')
        .map(|row| row.split_whitespace().map(str::parse).collect::<Result<Vec<i64>, _>>())
        .collect::<Result<_, _>>()
        .map_err(|_| Fail::Input(format!("bad matrix `{s}`")))?;
    if m.len() != 3 || m.iter().any(|r| r.len() != 3) {
        return Err(Fail::Input(format!("matrix `{s}` is not 3×3")));
    }
    Ok(m)
}

fn rank3(op: &Rank3Op, p: &Problem) -> Out {
    let (s, f) = form_of(p)?;
    match op {
        Rank3Op::Ann(_) => {
            let d = f.degree().ok_or_else(|| Fail::Input("zero form".into()))?;
            let ann = annihilator(&s, &f, d + 1).map_err(|e| Fail::Internal(e.to_string()))?;
            let gens = ann.minimal_generators();
            let h = apolar_hilbert(&s, &f);
            let hs: Vec<String> = h.iter().map(|x| x.to_string()).collect();
            let text = format!("H: ({})\nAnn(F): ({})\n", hs.join(","), strings(&gens).join(", "));
            Ok(Report::value(json!({"hilbert": h, "generators": strings(&gens)}), text))
        }
        Rank3Op::Middle { linear: l, .. } => {
            let l = linear(&s, l)?;
            let sigma = middle_generator(&s, &f, &l).map_err(rank_fail)?;
            Ok(Report::value(json!(sigma.to_string()), format!("{sigma}\n")))
        }
        Rank3Op::SquareCert { linear: l, .. } => certificate(cactus_via_square(&s, &f, &linear(&s, l)?).map_err(rank_fail)?),
        Rank3Op::Special3(_) => certificate(special_case_3(&s, &f).map_err(rank_fail)?),
        Rank3Op::Special4(_) => certificate(special_case_4(&s, &f).map_err(rank_fail)?),
        Rank3Op::ExcludeWild { border_rank, matrix: ms, .. } => {
            let extra: Vec<Vec<Vec<i64>>> = ms.iter().map(|m| matrix(m)).collect::<Result<_, _>>()?;
            let rep = exclude_wild(&s, &f, *border_rank, &extra).map_err(rank_fail)?;
            let mut text = format!("{}\n", rep.conclusion);
            if let Some(pat) = &rep.pattern {
                let _ = writeln!(text, "pattern: {pat}");
            }
            if let Some(c) = &rep.certificate {
                let _ = writeln!(text, "certificate: cactus rank ≤ {} via {}", c.bound, c.route);
            }
            let mut r = Report::verdict(if rep.certificate.is_some() { "excluded".into() } else { "not_excluded".into() }, text);
            r.exit = if rep.certificate.is_some() { 0 } else { 1 };
            r.assumptions.push(format!("border rank {} assumed, not computed", border_rank));
            r.certificates.push(serde_json::to_value(&rep).expect("serializable"));
            Ok(r)
        }
    }
}

fn replicate_cmd(only: &[String], jobs: usize) -> Out {
    let known = replicate::criterion_ids();
    if let Some(bad) = only.iter().find(|o| !known.iter().any(|k| k.eq_ignore_ascii_case(o))) {
        return Err(Fail::Input(format!("unknown criterion `{bad}`; known: {}", known.join(", "))));
    }
    let results = replicate::run(only, jobs);
    let mut text = String::new();
    for r in &results {
        let _ = writeln!(text, "{} {}  {}: {}", r.id, if r.passed { "PASS" } else { "FAIL" }, r.title, r.detail);
    }
    let passed = results.iter().filter(|r| r.passed).count();
    let _ = writeln!(text, "{passed}/{} passed", results.len());
    let all = passed == results.len();
    let mut rep = Report::verdict(if all { "pass".into() } else { "fail".into() }, text);
    rep.exit = if all { 0 } else { 3 };
    rep.certificates = results
        .iter()
        .map(|r| json!({"id": r.id, "title": r.title, "passed": r.passed, "detail": r.detail}))
        .collect();
    Ok(rep)
}
