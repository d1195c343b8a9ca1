mod common;

use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use satlim::decide::{auto_candidates, decide_saturable, sticky_screen, Decision};
use satlim::ideal::Ideal;
use satlim::obstruction::Outcome;
use satlim::parse::parse_polynomial;
use satlim::ring::{Polynomial, Ring, RingRef};
use satlim::scalar::Field;

fn decide(ring: &RingRef, gens: &[Polynomial]) -> Decision {
    let i = Ideal::new(ring, gens.to_vec()).unwrap();
    decide_saturable(&i).unwrap()
}

fn expect(holds: bool) -> Outcome {
    if holds {
        Outcome::Saturable
    } else {
        Outcome::NotSaturable
    }
}

fn invariant_under_changes(ring: &RingRef, gens: &[Polynomial], want: Outcome, trials: usize, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let m = random_invertible(&mut rng, ring.nvars());
        let images = linear_images(ring, &m);
        let moved: Vec<Polynomial> = gens.iter().map(|g| g.substitute(&images)).collect();
        assert_eq!(decide(ring, &moved).verdict, want, "change {m:?}");
    }
}

#[test]
fn four_collinear_points() {
    let r = Ring::standard_n("a", 4, Field::Rational);
    for (extra, want) in [([1, 0, 1, 0], true), ([0, 0, 2, 0], false)] {
        let (gens, holds) = four_points(&r, &extra);
        assert_eq!(holds, want);
        assert_eq!((0..=6).map(|e| hilbert(4, &gens, e)).collect::<Vec<_>>(), vec![1, 4, 4, 4, 4, 4, 4]);
        let d = decide(&r, &gens);
        assert_eq!(d.verdict, expect(holds));
        assert_eq!(d.containments.len(), 1);
        if !holds {
            assert!(d.entirely, "ObFib should vanish");
            assert!(d.containments[0].witness.is_some());
        }
        invariant_under_changes(&r, &gens, expect(holds), 5, 11);
    }
}

#[test]
fn four_points_sticky_screen() {
    let r = Ring::standard_n("a", 4, Field::Rational);
    let (gens, _) = four_points(&r, &[0, 0, 2, 0]);
    let i = Ideal::new(&r, gens).unwrap();
    let sat = i.saturate().clone();
    let rep = sticky_screen(&i, &[sat], false).unwrap();
    assert_eq!(rep.verdict, Outcome::Nonsaturable);
    assert!(rep.results[0].route.starts_with("obfib-vanishes"));
    assert!(!auto_candidates(&i).is_empty());
}

#[test]
fn five_points_line_cubic() {
    let r = Ring::standard_n("a", 5, Field::Rational);
    let dual = Ring::standard_n("x", 5, Field::Rational);
    for (c, want) in [("x0*x3^2 + x1*x4^2", true), ("x0^2*x3", false)] {
        let c = parse_polynomial(&dual, c).unwrap();
        let (gens, holds) = five_points_on_line(&r, &dual, &c);
        assert_eq!(holds, want);
        assert_eq!((0..=7).map(|e| hilbert(5, &gens, e)).collect::<Vec<_>>(), vec![1, 5, 5, 5, 5, 5, 5, 5]);
        let d = decide(&r, &gens);
        assert_eq!(d.route, "five-points-line");
        assert_eq!(d.verdict, expect(holds));
        assert_eq!(d.containments.len(), 2);
        if !holds {
            assert!(d.entirely);
        }
        invariant_under_changes(&r, &gens, expect(holds), 2, 5);
    }
}

#[test]
fn four_on_a_line_and_a_point() {
    let r = Ring::standard_n("a", 5, Field::Rational);
    for (extra, want) in [([1, 0, 1, 0, 0], true), ([0, 0, 1, 1, 0], false)] {
        let (gens, holds) = four_on_line_plus_point(&r, &extra);
        assert_eq!(holds, want);
        assert_eq!((0..=6).map(|e| hilbert(5, &gens, e)).collect::<Vec<_>>(), vec![1, 5, 5, 5, 5, 5, 5]);
        let d = decide(&r, &gens);
        assert_eq!(d.route, "five-points-line-and-point");
        assert_eq!(d.verdict, expect(holds));
        invariant_under_changes(&r, &gens, expect(holds), 2, 7);
    }
}

#[test]
fn prime_field_refused() {
    let r = Ring::standard_n("a", 4, Field::Rational);
    let (gens, _) = four_points(&r, &[1, 0, 1, 0]);
    let rp = Ring::standard_n("a", 4, Field::Prime(32003));
    let moved: Vec<Polynomial> = gens.iter().map(|g| parse_polynomial(&rp, &g.to_string()).unwrap()).collect();
    let i = Ideal::new(&rp, moved).unwrap();
    assert!(matches!(decide_saturable(&i), Err(satlim::decide::DecideError::WrongCharacteristic(32003))));
}
