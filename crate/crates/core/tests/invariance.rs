use combhopf::diagram::*;
use combhopf::invariant::*;
use combhopf::scalar::{Cyclo, Rational64};
use combhopf::triplet::HopfTriplet;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

fn triplets() -> &'static [HopfTriplet] {
    static T: OnceLock<Vec<HopfTriplet>> = OnceLock::new();
    T.get_or_init(|| ["trivial", "z2", "a8_t1", "h4_qt"].iter().map(|n| named_triplet(n).unwrap()).collect())
}

fn small_diagram(rng: &mut ChaCha8Rng) -> CombedDiagram {
    let d = random_diagram(rng, RandomSpec { curves_per_family: 1, crossings: 4, max_total: 2 });
    with_random_triangle(rng, &d).unwrap().0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn moves_preserve_bracket(seed in any::<u64>(), which in 0usize..4, kind in 0usize..8) {
        let t = &triplets()[which];
        let ev = Evaluator::new(t);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = small_diagram(&mut rng);
        let kind = MoveKind::ALL[kind];
        if let Some((m, what)) = random_move(&mut rng, &d, kind) {
            let b = ev.bracket(&d).unwrap().raw;
            let expected = if kind == MoveKind::Spiral {
                let k = if what.contains("+1") { 1 } else { -1 };
                &b * &t.q.pow(k).unwrap()
            } else {
                b
            };
            prop_assert_eq!(ev.bracket(&m).unwrap().raw, expected, "{}", what);
        }
    }

    #[test]
    fn bracket_is_multiplicative(seed in any::<u64>(), which in 0usize..4) {
        let t = &triplets()[which];
        let ev = Evaluator::new(t);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = RandomSpec { curves_per_family: 1, crossings: 3, max_total: 1 };
        let (x, y) = (random_diagram(&mut rng, spec), random_diagram(&mut rng, spec));
        let s = boundary_sum(&x, &y).unwrap();
        prop_assert_eq!(ev.bracket(&s).unwrap().raw, &ev.bracket(&x).unwrap().raw * &ev.bracket(&y).unwrap().raw);
    }

    #[test]
    fn involutory_brackets_ignore_combing(seed in any::<u64>(), shift in -3i64..=3) {
        let t = &triplets()[1];
        let ev = Evaluator::new(t);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = small_diagram(&mut rng);
        let b = ev.bracket(&d).unwrap().raw;
        for c in &d.curves {
            prop_assert_eq!(&ev.bracket(&spiral(&d, &c.id, shift).unwrap()).unwrap().raw, &b);
        }
    }

    #[test]
    fn two_wirings_agree(seed in any::<u64>(), which in 0usize..4) {
        let t = &triplets()[which];
        let ev = Evaluator::with_options(t, EvalOptions { check_alternate_wiring: true, ..EvalOptions::default() });
        let d = small_diagram(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(ev.bracket(&d).unwrap().alternate_agrees, Some(true));
    }

    #[test]
    fn rescaling_laws(seed in any::<u64>(), a in 1i64..5, b in 1i64..5, c in -3i64..-1) {
        let t = &triplets()[1];
        let mut d = builtin(["CP2", "S2xS2", "Tst1", "CP2bar"][(seed % 4) as usize]).unwrap();
        for _ in 0..(seed % 3) {
            d = stabilize(&d, 1 + (seed % 3) as u8).unwrap();
        }
        let r = rescale_check(t, &d, [Cyclo::from_int(a), Cyclo::from_int(b), Cyclo::from_int(c)]).unwrap();
        prop_assert!(r.bracket_ok && r.tau_ok == Some(true), "{:?}", r);
    }
}

#[test]
fn stabilization_preserves_tau() {
    let t = &triplets()[1];
    let ev = Evaluator::new(t);
    for name in ["CP2", "CP2bar", "S2xS2", "Tst2", "B4"] {
        let d = builtin(name).unwrap();
        let base = ev.tau(&d).unwrap().raw;
        for j in 1..=3 {
            assert_eq!(ev.tau(&stabilize(&d, j).unwrap()).unwrap().raw, base, "{name} j={j}");
        }
    }
}

#[test]
fn full_isotopy_cycle() {
    let ev = Evaluator::new(&triplets()[2]);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10 {
        let d = random_diagram(&mut rng, RandomSpec { curves_per_family: 1, crossings: 4, max_total: 2 });
        for c in d.curves.iter().filter(|c| !c.crossings.is_empty()) {
            let mut m = d.clone();
            for _ in 0..c.crossings.len() {
                m = isotopy_forward(&m, &c.id).unwrap();
            }
            assert_eq!(m.curve(&c.id).unwrap().crossings, c.crossings);
            assert_eq!(m.curve(&c.id).unwrap().total, c.total);
            // exponents move by even amounts, so signs come back
            for x in &d.crossings {
                let y = m.crossing(&x.id).unwrap();
                assert_eq!((y.exponent().unwrap() - x.exponent().unwrap()) % 2, 0);
                assert_eq!(y.sign, x.sign);
            }
            assert_eq!(ev.bracket(&m).unwrap().raw, ev.bracket(&d).unwrap().raw);
        }
    }
}

#[test]
fn crossing_exponent_examples() {
    let d = builtin("Tst2").unwrap();
    let p = d.crossing("p").unwrap();
    assert_eq!(crossing_exponent(p, "alpha").unwrap(), -1);
    assert_eq!(crossing_exponent(p, "beta").unwrap(), 1);
    assert_eq!(crossing_exponent(d.crossing("q").unwrap(), "kappa").unwrap(), 0);
    assert_eq!(p.partial_b, Rational64::new(3, 4));
}

#[test]
fn scan_a8_family() {
    let grid: Vec<Vec<_>> = (1..=3).map(|t| vec![combhopf::scalar::BigRational::from_integer(t.into())]).collect();
    let rows = scan_grid(ScanFamily::A8, &grid);
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.accepted() && !r.all_nonzero()));
    assert!(scan_grid(ScanFamily::A8, &[]).is_empty());
    assert!(ScanFamily::parse("nope").is_none());
}
