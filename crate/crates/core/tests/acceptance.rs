//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use combhopf::diagram::*;
use combhopf::hopf::examples::{a8, function_algebra, group_algebra, group_r_matrix, trivial_r_matrix};
use combhopf::hopf::{check_hopf_axioms, Hopf, HopfData};
use combhopf::invariant::*;
use combhopf::scalar::{parse_rational, BigRational, Cyclo};
use combhopf::tensor::DEFAULT_ELEMENT_BUDGET;
use combhopf::triplet::{
    assemble_triplet, build_a8, build_from_quasitriangular, check_triplet, CheckOptions, HopfTriplet, TripletError,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib(name: &str) -> CombedDiagram {
    builtin(name).expect("builtin diagram")
}

fn triplet(name: &str) -> HopfTriplet {
    named_triplet(name).expect("builtin triplet")
}

fn rational(s: &str) -> BigRational {
    parse_rational(s).expect("rational")
}

/// Builtins plus a few boundary sums and stabilizations, all genus <= 4.
fn library() -> Vec<(String, CombedDiagram)> {
    let mut out: Vec<(String, CombedDiagram)> = BUILTIN_NAMES.iter().map(|n| (n.to_string(), lib(n))).collect();
    let sums = [("CP2", "CP2bar"), ("CP2", "S2xS2"), ("S2xS2", "S2xS2"), ("CP2", "Tst2"), ("CP2bar", "CP2bar")];
    for (a, b) in sums {
        out.push((format!("{a}#{b}"), boundary_sum(&lib(a), &lib(b)).expect("boundary sum")));
    }
    for (n, j) in [("CP2", 1), ("S2xS2", 3), ("CP2bar", 2)] {
        out.push((format!("{n}+st{j}"), stabilize(&lib(n), j).expect("stabilize")));
    }
    out
}

fn mutate_each(h: &HopfData, positions: &[(usize, usize)]) -> Result<usize, String> {
    let mut count = 0;
    for &(which, i) in positions {
        let mut parts = [h.m().to_vec(), h.eta().to_vec(), h.delta().to_vec(), h.eps().to_vec(), h.s().to_vec()];
        parts[which][i] = &parts[which][i] + &Cyclo::from_int(1);
        let [m, eta, delta, eps, s] = parts;
        let bad = HopfData::new(h.basis().to_vec(), m, eta, delta, eps, s).map_err(|e| e.to_string())?;
        let rep = check_hopf_axioms(&bad);
        let witnessed = rep.failed().next().is_some() && rep.failed().all(|c| !c.witnesses.is_empty());
        ensure(witnessed, || format!("mutation of tensor {which} entry {i} undetected"))?;
        count += 1;
    }
    Ok(count)
}

fn c1_hopf_verification() -> Outcome {
    let start = Instant::now();
    let algebras = [("k[Z/2]", group_algebra(2)), ("k[Z/4]", group_algebra(4)), ("Fun(Z/2)", function_algebra(2)), ("A8", a8())];
    let mut mutations = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (name, h) in &algebras {
        ensure(check_hopf_axioms(h).all_passed(), || format!("{name} fails an axiom"))?;
        let d = h.dim();
        let sizes = [d * d * d, d, d * d * d, d, d * d];
        let mut all: Vec<(usize, usize)> = (0..5).flat_map(|w| (0..sizes[w]).map(move |i| (w, i))).collect();
        if all.len() > 300 {
            all.shuffle(&mut rng);
            all.truncate(300);
        }
        mutations += mutate_each(h, &all)?;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(5), || format!("took {t:?}"))?;
    Ok(format!("4 algebras pass; {mutations} mutations detected with witnesses in {t:.2?}"))
}

fn c2_integrals() -> Outcome {
    let algebras = [group_algebra(2), group_algebra(4), function_algebra(2), a8()];
    for (k, h) in algebras.into_iter().enumerate() {
        let h = Hopf::new(h).map_err(|e| format!("algebra {k}: {e}"))?;
        for (name, ok) in h.lemma_checks().map_err(|e| e.to_string())? {
            if name.starts_with("u_") && name.contains("(e_") {
                ensure(ok, || format!("algebra {k}: {name}"))?;
            }
        }
        if k == 3 {
            ensure(*h.q() == Cyclo::from_int(-1), || format!("A8 has q = {}", h.q()))?;
        }
    }
    Ok("integral spaces one-dimensional; u_R(e_L) = u_L(e_R) = 1, u_L(e_L) = 1/q; q(A8) = -1".into())
}

fn c3_balance() -> Outcome {
    let h = Hopf::new(a8()).map_err(|e| e.to_string())?;
    ensure(h.is_balanced() && !h.is_involutory(), || "A8 misclassified".into())?;
    for n in [2, 3, 4] {
        ensure(Hopf::new(group_algebra(n)).map_err(|e| e.to_string())?.is_involutory(), || format!("k[Z/{n}] not involutory"))?;
    }
    let mut checked = 0;
    for h in [h, Hopf::new(group_algebra(4)).map_err(|e| e.to_string())?] {
        for (name, ok) in h.lemma_checks().map_err(|e| e.to_string())? {
            if name.starts_with("S^2") || name.starts_with("u_") && name.contains("S^2") || name.starts_with("tilt") {
                ensure(ok, || format!("fails {name}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("A8 balanced, not involutory; {checked} eigenvalue and tilt identities hold"))
}

fn c4_triplet_conditions() -> Outcome {
    let mut notes = Vec::new();
    for t in ["1", "2", "5/7"] {
        let start = Instant::now();
        let tp = assemble_triplet(build_a8(&rational(t))).map_err(|r| format!("t = {t}: {} {}", r.condition, r.detail))?;
        ensure(tp.q == Cyclo::from_int(-1), || format!("t = {t}: q = {}", tp.q))?;
        let mut rejected = 0;
        for slot in 0..3 {
            for i in 0..8 {
                for j in 0..8 {
                    let mut c = build_a8(&rational(t));
                    let v = c.pairings[slot].get(i, j) + &Cyclo::from_int(1);
                    c.pairings[slot].set(i, j, v);
                    let (rep, _) = check_triplet(&c, CheckOptions::default());
                    ensure(!matches!(rep.triangle, Some(Err(TripletError::RotationDisagreement(_)))), || {
                        format!("t = {t}: triangle rotations disagree")
                    })?;
                    ensure(!rep.accepted(), || format!("t = {t}: perturbation ({slot},{i},{j}) accepted"))?;
                    rejected += 1;
                }
            }
        }
        let el = start.elapsed();
        ensure(el < Duration::from_secs(60), || format!("t = {t} took {el:?}"))?;
        notes.push(format!("t={t}: {rejected} perturbations rejected in {el:.1?}"));
    }
    Ok(notes.join("; "))
}

fn c5_quasitriangular() -> Outcome {
    let h2 = group_algebra(2);
    let h3 = group_algebra(3);
    let cases = [
        ("k[Z/2], R = 1 (x) 1", build_from_quasitriangular("z2_triv", &h2, &trivial_r_matrix(&h2))),
        ("k[Z/2], R_1", build_from_quasitriangular("z2_r1", &h2, &group_r_matrix(2, 1).map_err(|e| e.to_string())?)),
        ("k[Z/3], R_1", build_from_quasitriangular("z3_r1", &h3, &group_r_matrix(3, 1).map_err(|e| e.to_string())?)),
    ];
    let mut names = Vec::new();
    for (name, c) in cases {
        let c = c.map_err(|e| format!("{name}: {e}"))?;
        assemble_triplet(c).map_err(|r| format!("{name} rejected at {}", r.condition))?;
        names.push(name);
    }
    Ok(format!("accepted: {}", names.join(", ")))
}

fn c6_move_fuzz() -> Outcome {
    let start = Instant::now();
    let base = library();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut summary = Vec::new();
    for name in ["trivial", "z2", "a8_t1"] {
        let t = triplet(name);
        let ev = Evaluator::new(&t);
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        let fresh = |rng: &mut ChaCha8Rng| -> CombedDiagram {
            let d = base.iter().filter(|(_, d)| d.crossings.len() <= 8).collect::<Vec<_>>().choose(rng).expect("library").1.clone();
            if d.curves.is_empty() {
                return d;
            }
            with_random_triangle(rng, &d).map(|x| x.0).unwrap_or(d)
        };
        let mut d = fresh(&mut rng);
        let mut b = ev.bracket(&d).map_err(|e| e.to_string())?.raw;
        let mut attempts = 0;
        let mut skipped = 0;
        while MoveKind::ALL.iter().any(|k| counts.get(k.name()).copied().unwrap_or(0) < 100) {
            attempts += 1;
            ensure(attempts < 100_000, || format!("{name}: fuzz did not reach 100 applications: {counts:?}"))?;
            let kind = *MoveKind::ALL.choose(&mut rng).expect("kinds");
            let Some((m, what)) = random_move(&mut rng, &d, kind) else {
                d = fresh(&mut rng);
                b = ev.bracket(&d).map_err(|e| e.to_string())?.raw;
                continue;
            };
            if m.crossings.len() > 16 || m.curves.iter().any(|c| c.crossings.len() > 8) {
                skipped += 1;
                d = fresh(&mut rng);
                b = ev.bracket(&d).map_err(|e| e.to_string())?.raw;
                continue;
            }
            let bm = ev.bracket(&m).map_err(|e| format!("{what}: {e}"))?.raw;
            let expected = match kind {
                MoveKind::Spiral if what.contains("+1") => &b * &t.q,
                MoveKind::Spiral => &b * &t.q.inv().map_err(|e| e.to_string())?,
                _ => b.clone(),
            };
            ensure(bm == expected, || format!("{name}: {what} changed the bracket from {b} to {bm}"))?;
            *counts.entry(kind.name()).or_default() += 1;
            let big = m.crossings.len() > 12 || m.curves.iter().any(|c| c.crossings.len() > 6);
            if big || rng.gen_bool(0.05) {
                d = fresh(&mut rng);
                b = ev.bracket(&d).map_err(|e| e.to_string())?.raw;
            } else {
                d = m;
                b = bm;
            }
        }
        let total: usize = counts.values().sum();
        summary.push(format!("{name}: {total} ({skipped} oversized results skipped)"));
    }
    let el = start.elapsed();
    ensure(el < Duration::from_secs(600), || format!("took {el:?}"))?;
    Ok(format!("exact invariance, >= 100 per move kind; applications {} in {el:.1?}", summary.join(", ")))
}

fn c7_multiplicativity() -> Outcome {
    let t = triplet("z2");
    let ev = Evaluator::new(&t);
    let base = library();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut pairs = 0;
    for (i, (na, a)) in base.iter().enumerate().take(6) {
        for (nb, b) in base.iter().skip(i).take(3) {
            let s = boundary_sum(a, b).map_err(|e| e.to_string())?;
            let lhs = ev.bracket(&s).map_err(|e| e.to_string())?.raw;
            let rhs = &ev.bracket(a).map_err(|e| e.to_string())?.raw * &ev.bracket(b).map_err(|e| e.to_string())?.raw;
            ensure(lhs == rhs, || format!("bracket({na} # {nb}) = {lhs}, product {rhs}"))?;
            pairs += 1;
        }
    }
    for j in ["Tst1", "Tst2", "Tst3"] {
        let v = ev.tau(&lib(j)).map_err(|e| e.to_string())?.raw;
        ensure(v.is_one(), || format!("tau({j}) = {v}"))?;
    }
    let mut diagrams: Vec<CombedDiagram> = base.iter().map(|x| x.1.clone()).take(8).collect();
    for _ in 0..4 {
        diagrams.push(random_diagram(&mut rng, RandomSpec { curves_per_family: 1, crossings: 4, max_total: 2 }));
    }
    for d in &diagrams {
        let t0 = ev.tau(d).map_err(|e| e.to_string())?.raw;
        for j in 1..=3 {
            let tj = ev.tau(&stabilize(d, j).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?.raw;
            ensure(tj == t0, || format!("tau changes under stabilization {j}"))?;
        }
    }
    Ok(format!("{pairs} boundary-sum pairs; tau(Tst_j) = 1; stabilization invariance on {} diagrams", diagrams.len()))
}

fn accepted_triplets() -> Vec<HopfTriplet> {
    let mut out: Vec<HopfTriplet> =
        ["trivial", "z2", "z3", "z2_qt", "z3_qt", "h4_qt", "a8_t1"].iter().map(|n| triplet(n)).collect();
    for t in ["2", "5/7"] {
        out.push(assemble_triplet(build_a8(&rational(t))).expect("a8 accepted"));
    }
    out
}

fn c8_stabilization_crosscheck() -> Outcome {
    let mut rows = Vec::new();
    for t in accepted_triplets() {
        let ev = Evaluator::new(&t);
        let st = ev.stabilization_brackets().map_err(|e| format!("{}: {e}", t.name))?;
        for j in 1..=3u8 {
            let closed = ev.stabilization_closed_form(j).map_err(|e| e.to_string())?;
            let net = ev.bracket(&lib(&format!("Tst{j}"))).map_err(|e| e.to_string())?.raw;
            ensure(closed == net && net == st.values[j as usize - 1], || format!("{} Tst{j}: {net} vs {closed}", t.name))?;
        }
        let v = st.projective();
        rows.push(format!("{} ({}, {}, {})", t.name, v[0], v[1], v[2]));
    }
    Ok(rows.join("; "))
}

fn c9_semisimple() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut shifts = 0;
    let mut relations = Vec::new();
    for t in accepted_triplets().into_iter().filter(|t| t.involutory) {
        let ev = Evaluator::new(&t);
        for (_, d) in library().into_iter().filter(|(_, d)| d.crossings.len() <= 10) {
            let b = ev.bracket(&d).map_err(|e| e.to_string())?.raw;
            for _ in 0..3 {
                let mut s = d.clone();
                for c in &d.curves {
                    s = spiral(&s, &c.id, rng.gen_range(-4..=4)).map_err(|e| e.to_string())?;
                }
                ensure(ev.bracket(&s).map_err(|e| e.to_string())?.raw == b, || format!("{}: shifted bracket differs", t.name))?;
                shifts += 1;
            }
        }
        for name in ["CP2", "S2xS2"] {
            let r = closed_relation(&t, &lib(name)).map_err(|e| format!("{} {name}: {e}", t.name))?;
            ensure(r.holds, || format!("{} {name}: tau = {}, predicted {}", t.name, r.tau, r.predicted))?;
            relations.push(format!("{}/{name}", t.name));
        }
    }
    Ok(format!("{shifts} shifted evaluations unchanged; closed relation holds for {}", relations.join(", ")))
}

fn c10_vanishing() -> Outcome {
    let t = triplet("z2");
    let v = tau(&t, &lib("CP2")).map_err(|e| e.to_string())?;
    ensure(v.raw.is_zero(), || format!("tau(CP2) = {}", v.raw))?;
    Ok(format!("tau(CP2) = 0 for {}", t.name))
}

fn c11_homology() -> Outcome {
    let trivial = |d: &CombedDiagram| -> Result<bool, String> {
        let h = homology(d)?;
        Ok(h.h1.is_trivial() && h.h2.is_trivial() && h.h3.is_trivial() && euler_characteristic(&d.type_tuple) == 1)
    };
    for j in ["Tst1", "Tst2", "Tst3", "B4"] {
        ensure(trivial(&lib(j))?, || format!("{j} not acyclic"))?;
    }
    let mut d = lib("B4");
    let mut count = 0;
    for j in [1, 2, 3, 3, 1, 2, 2] {
        d = stabilize(&d, j).map_err(|e| e.to_string())?;
        ensure(trivial(&d)?, || format!("stabilization {} not acyclic", d.type_tuple))?;
        count += 1;
    }
    let cp2 = homology(&lib("CP2"))?;
    ensure(cp2.h1.is_trivial() && cp2.h2 == AbelianGroup { free_rank: 1, torsion: vec![] }, || format!("CP2: H2 = {}", cp2.h2))?;
    let s = homology(&lib("S2xS2"))?;
    ensure(s.h2 == AbelianGroup { free_rank: 2, torsion: vec![] }, || format!("S2xS2: H2 = {}", s.h2))?;
    Ok(format!("B4 diagrams acyclic with chi = 1 ({count} stabilizations); H2(CP2) = Z, H2(S2xS2) = Z^2"))
}

fn c12_rescaling() -> Outcome {
    let c = [Cyclo::from_int(2), Cyclo::from_int(3), Cyclo::from_int(5)];
    let mut n = 0;
    for name in ["z2", "a8_t1"] {
        let t = triplet(name);
        for (dn, d) in library().into_iter().filter(|(_, d)| d.crossings.len() <= 10) {
            let r = rescale_check(&t, &d, c.clone()).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("{name} {dn}: {r:?}"))?;
            ensure(name != "z2" || r.tau_ok == Some(true), || format!("{dn}: tau not checked"))?;
            n += 1;
        }
    }
    Ok(format!("bracket and tau scaling exact on {n} (triplet, diagram) pairs"))
}

fn c13_performance() -> Outcome {
    let t = triplet("a8_t1");
    let ev = Evaluator::new(&t);
    let mut worst = (Duration::ZERO, String::new(), 0usize);
    for (name, d) in library().into_iter().filter(|(_, d)| d.type_tuple.g <= 4) {
        let start = Instant::now();
        let b = ev.bracket(&d).map_err(|e| format!("{name}: {e}"))?;
        let el = start.elapsed();
        ensure(b.stats.max_intermediate <= DEFAULT_ELEMENT_BUDGET, || format!("{name} exceeded the budget"))?;
        ensure(el < Duration::from_secs(60), || format!("{name} took {el:?}"))?;
        if el > worst.0 {
            worst = (el, name, b.stats.max_intermediate);
        }
    }
    Ok(format!("slowest {} in {:.2?}, max intermediate {}", worst.1, worst.0, worst.2))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("1 hopf verification", c1_hopf_verification),
        ("2 integral laws", c2_integrals),
        ("3 balance classification", c3_balance),
        ("4 triplet conditions", c4_triplet_conditions),
        ("5 quasi-triangular builder", c5_quasitriangular),
        ("6 move-invariance fuzz", c6_move_fuzz),
        ("7 multiplicativity and normalization", c7_multiplicativity),
        ("8 stabilization cross-check", c8_stabilization_crosscheck),
        ("9 semisimple reduction", c9_semisimple),
        ("10 vanishing on CP2", c10_vanishing),
        ("11 homology", c11_homology),
        ("12 rescaling laws", c12_rescaling),
        ("13 performance", c13_performance),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(msg) => println!("PASS {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL {name}: {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
