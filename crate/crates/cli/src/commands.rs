//! Command implementations. Each returns a JSON report, a human summary and
//! a verdict.

use std::fmt::Write as _;
use std::time::Instant;

use combhopf::diagram::{
    homology, random_move, stabilize, with_random_triangle, CombedDiagram, CombingCount, MoveKind,
};
use combhopf::hopf::{check_hopf_axioms, Hopf};
use combhopf::invariant::{scan_point, EvalOptions, Evaluator, InvariantError, ScanFamily, ScanRow};
use combhopf::scalar::{parse_rational, BigRational, Cyclo};
use combhopf::triplet::{assemble_triplet, check_triplet, CheckOptions, HopfTriplet, TripletReport};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::formats::{AlgebraFile, DiagramFile, TripletFile};
use crate::resolve;
use crate::{Cli, CliError, Cmd, MovesCmd};

pub struct Report {
    pub json: Value,
    pub summary: String,
    pub pass: bool,
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.cmd {
        Cmd::CheckHopf { algebra } => check_hopf(algebra),
        Cmd::CheckTriplet { triplet } => check_triplet_cmd(triplet),
        Cmd::Integrals { algebra } => integrals(algebra),
        Cmd::Bracket { triplet, diagram, check_wiring } => evaluate(cli, triplet, diagram, *check_wiring, false),
        Cmd::Tau { triplet, diagram } => evaluate(cli, triplet, diagram, false, true),
        Cmd::StabBrackets { triplet } => stab_brackets(cli, triplet),
        Cmd::Homology { diagram } => homology_cmd(diagram),
        Cmd::Moves { cmd: MovesCmd::Fuzz { triplet, diagram, n } } => fuzz(cli, triplet, diagram, *n),
        Cmd::Scan { family, grid } => scan(family, grid),
        Cmd::Builtin { name, emit } => builtin_cmd(name, *emit),
    }
}

fn vector(v: &[Cyclo]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn verdict(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn check_hopf(arg: &str) -> Result<Report, CliError> {
    let (name, h) = resolve::algebra(arg)?;
    let rep = check_hopf_axioms(&h);
    let mut summary = format!("algebra {name} (dimension {})\n", h.dim());
    let mut checks = Vec::new();
    for c in &rep.checks {
        let _ = writeln!(summary, "  {:<26} {}", c.axiom.name(), verdict(c.passed()));
        if !c.passed() {
            let _ = writeln!(summary, "    {} failures, first witnesses {:?}", c.failures, c.witnesses);
        }
        checks.push(json!({"axiom": c.axiom.name(), "passed": c.passed(), "failures": c.failures, "witnesses": c.witnesses}));
    }
    let pass = rep.all_passed();
    Ok(Report {
        json: json!({"command": "check-hopf", "algebra": name, "dimension": h.dim(), "axioms": checks, "passed": pass}),
        summary,
        pass,
    })
}

fn triplet_conventions(t: &HopfTriplet) -> Value {
    json!({
        "phase_exponents": t.conventions.phase_exponents,
        "double_wirings": t.conventions.wirings.iter().map(|w| json!({"legs": w.legs, "exponent": w.exponent})).collect::<Vec<_>>(),
        "algebras": t.algebras.iter().map(|h| {
            let c = h.conventions();
            json!({"cointegral_side": c.cointegral_side.name(), "tilt_order": c.tilt_order.name()})
        }).collect::<Vec<_>>(),
        "crossing_wiring": "S^e on the cyclically first leg, then the pairing",
    })
}

fn report_json(rep: &TripletReport) -> Value {
    let pairings: Vec<Value> = rep
        .pairings
        .iter()
        .map(|p| match p {
            Some(p) => json!({"passed": p.passed(), "failures": p.failures.iter().map(|f| json!({"identity": f.identity, "witness": f.witness})).collect::<Vec<_>>()}),
            None => Value::Null,
        })
        .collect();
    let phase: Vec<Value> = rep
        .phase
        .iter()
        .map(|p| match p {
            Some(p) => json!({"passed": p.passed(), "exponent": p.exponent, "phases_inverse": p.phases_inverse, "witness": p.witness}),
            None => Value::Null,
        })
        .collect();
    let triangle = match &rep.triangle {
        Some(Ok(t)) => json!(t.iter().map(|r| json!({"passed": r.passed, "witness": r.witness})).collect::<Vec<_>>()),
        Some(Err(e)) => json!({"error": e.to_string()}),
        None => Value::Null,
    };
    json!({
        "algebras_ok": rep.algebras_ok(),
        "a": rep.condition_a(),
        "b": rep.condition_b(),
        "c": rep.condition_c(),
        "pairings": pairings,
        "phase": phase,
        "triangle": triangle,
        "rejection": rep.rejection().map(|(c, d)| json!({"condition": c, "detail": d})),
    })
}

fn check_triplet_cmd(arg: &str) -> Result<Report, CliError> {
    let cand = resolve::triplet_candidate(arg)?;
    let (rep, _) = check_triplet(&cand, CheckOptions::default());
    let mut summary = rep.to_string();
    let mut out = json!({"command": "check-triplet", "triplet": cand.name, "conditions": report_json(&rep)});
    let pass = match assemble_triplet(cand) {
        Ok(t) => {
            let _ = writeln!(summary, "  q = {}; balanced {}; involutory {}", t.q, t.balanced, t.involutory);
            out["q"] = json!(t.q.to_string());
            out["balanced"] = json!(t.balanced);
            out["involutory"] = json!(t.involutory);
            out["conventions"] = triplet_conventions(&t);
            true
        }
        Err(r) => {
            let _ = writeln!(summary, "  rejected at {}: {}", r.condition, r.detail);
            false
        }
    };
    out["accepted"] = json!(pass);
    Ok(Report { json: out, summary, pass })
}

fn integrals(arg: &str) -> Result<Report, CliError> {
    let (name, h) = resolve::algebra(arg)?;
    let h = match Hopf::new(h) {
        Ok(h) => h,
        Err(e) => {
            return Ok(Report {
                json: json!({"command": "integrals", "algebra": name, "error": e.to_string()}),
                summary: format!("algebra {name}: {e}\n"),
                pass: false,
            })
        }
    };
    let checks = h.lemma_checks().map_err(|e| CliError::Usage(e.to_string()))?;
    let pass = checks.iter().all(|c| c.1);
    let c = h.conventions();
    let mut summary = format!(
        "algebra {name}: q = {}, balanced {}, involutory {}\n  e_R = {}\n  u_R = {}\n  a = {}\n  alpha = {}\n",
        h.q(),
        h.is_balanced(),
        h.is_involutory(),
        vector(h.e_r()),
        vector(h.u_r()),
        vector(h.a()),
        vector(h.alpha())
    );
    for (n, ok) in &checks {
        let _ = writeln!(summary, "  {n:<28} {}", verdict(*ok));
    }
    for w in h.warnings() {
        let _ = writeln!(summary, "  warning: {w}");
    }
    let json = json!({
        "command": "integrals",
        "algebra": name,
        "q": h.q().to_string(),
        "balanced": h.is_balanced(),
        "involutory": h.is_involutory(),
        "e_R": vector(h.e_r()),
        "u_R": vector(h.u_r()),
        "e_L": vector(h.e_l()),
        "u_L": vector(h.u_l()),
        "a": vector(h.a()),
        "alpha": vector(h.alpha()),
        "conventions": {"cointegral_side": c.cointegral_side.name(), "tilt_order": c.tilt_order.name()},
        "checks": checks.iter().map(|(n, ok)| json!({"identity": n, "passed": ok})).collect::<Vec<_>>(),
        "warnings": h.warnings(),
        "passed": pass,
    });
    Ok(Report { json, summary, pass })
}

fn accepted(arg: &str) -> Result<Result<HopfTriplet, Report>, CliError> {
    let cand = resolve::triplet_candidate(arg)?;
    let name = cand.name.clone();
    Ok(assemble_triplet(cand).map_err(|r| Report {
        json: json!({"triplet": name, "accepted": false, "rejection": {"condition": r.condition, "detail": r.detail}}),
        summary: format!("triplet {name} rejected at {}: {}\n", r.condition, r.detail),
        pass: false,
    }))
}

fn options(cli: &Cli, check_wiring: bool) -> EvalOptions {
    EvalOptions { budget: cli.budget, check_alternate_wiring: check_wiring, ..EvalOptions::default() }
}

fn evaluate(cli: &Cli, targ: &str, darg: &str, check_wiring: bool, want_tau: bool) -> Result<Report, CliError> {
    let command = if want_tau { "tau" } else { "bracket" };
    let t = match accepted(targ)? {
        Ok(t) => t,
        Err(r) => return Ok(r),
    };
    let (dname, d) = resolve::diagram(darg)?;
    let ev = Evaluator::with_options(&t, options(cli, check_wiring));
    let start = Instant::now();
    let mut out = json!({"command": command, "diagram": dname, "triplet": t.name, "conventions": triplet_conventions(&t)});
    let br = match ev.bracket(&d) {
        Ok(b) => b,
        Err(e) => {
            out["error"] = json!(e.to_string());
            return Ok(Report { summary: format!("{command} of {dname} over {}: {e}\n", t.name), json: out, pass: false });
        }
    };
    let bracket_time = start.elapsed();
    let tau = ev.tau(&d);
    let total_time = start.elapsed();
    out["bracket"] = json!(br.value.to_string());
    out["bracket_raw"] = json!(br.raw.to_string());
    out["ambiguity"] = json!(br.value.ambiguity.name());
    out["plan"] = json!({"steps": br.stats.steps, "max_intermediate": br.stats.max_intermediate, "budget": cli.budget});
    if let Some(a) = br.alternate_agrees {
        out["wirings_agree"] = json!(a);
    }
    let tau_text = match &tau {
        Ok(v) => v.value.to_string(),
        Err(InvariantError::Undefined(_)) => "undefined".to_string(),
        Err(e) => format!("error: {e}"),
    };
    out["tau"] = json!(tau_text);
    if cli.timings {
        out["timings_ms"] = json!({"bracket": bracket_time.as_secs_f64() * 1e3, "total": total_time.as_secs_f64() * 1e3});
    }
    let pass = if want_tau { tau.is_ok() } else { br.alternate_agrees != Some(false) };
    let summary = if want_tau {
        format!("{tau_text}\n")
    } else {
        let mut s = format!("{}\n", br.value);
        if cli.verbose > 0 {
            let _ = writeln!(s, "  ambiguity {}; tau {tau_text}; plan {} steps, max intermediate {}", br.value.ambiguity.name(), br.stats.steps, br.stats.max_intermediate);
        }
        if br.alternate_agrees == Some(false) {
            s.push_str("  crossing wirings DISAGREE\n");
        }
        s
    };
    Ok(Report { json: out, summary, pass })
}

fn stab_brackets(cli: &Cli, targ: &str) -> Result<Report, CliError> {
    let t = match accepted(targ)? {
        Ok(t) => t,
        Err(r) => return Ok(r),
    };
    let ev = Evaluator::with_options(&t, options(cli, false));
    match ev.stabilization_brackets() {
        Ok(st) => {
            let p = st.projective();
            let mut summary = String::new();
            for j in 0..3 {
                let _ = writeln!(summary, "<T^st_{}> = {}{}", j + 1, p[j], if st.nonzero[j] { "" } else { "  (zero)" });
            }
            let _ = writeln!(summary, "tau {}", if st.all_nonzero() { "defined" } else { "undefined for this triplet" });
            Ok(Report {
                json: json!({
                    "command": "stab-brackets",
                    "triplet": t.name,
                    "values": p.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "raw": st.values.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "nonzero": st.nonzero,
                    "closed_form_agrees": true,
                    "tau_defined": st.all_nonzero(),
                    "conventions": triplet_conventions(&t),
                }),
                summary,
                pass: true,
            })
        }
        Err(e) => Ok(Report {
            json: json!({"command": "stab-brackets", "triplet": t.name, "error": e.to_string()}),
            summary: format!("{e}\n"),
            pass: false,
        }),
    }
}

fn homology_cmd(darg: &str) -> Result<Report, CliError> {
    let (dname, d) = resolve::diagram(darg)?;
    let chi = combhopf::diagram::euler_characteristic(&d.type_tuple);
    match homology(&d) {
        Ok(h) => {
            let combings = match h.combings {
                CombingCount::Finite(n) => json!(n),
                CombingCount::Infinite => json!("infinite"),
            };
            let summary = format!(
                "{dname} {}: H1 = {}, H2 = {}, H3 = {}, chi = {chi}, combing classes {}\n",
                d.type_tuple, h.h1, h.h2, h.h3, combings
            );
            Ok(Report {
                json: json!({
                    "command": "homology", "diagram": dname, "type": d.type_tuple.as_array(),
                    "h1": h.h1.to_string(), "h2": h.h2.to_string(), "h3": h.h3.to_string(),
                    "euler_characteristic": chi, "combing_classes": combings,
                }),
                summary,
                pass: true,
            })
        }
        Err(e) => Ok(Report {
            json: json!({"command": "homology", "diagram": dname, "error": e}),
            summary: format!("{dname}: {e}\n"),
            pass: false,
        }),
    }
}

struct FuzzCase {
    kind: &'static str,
    what: String,
    ok: bool,
    detail: Option<String>,
}

/// One randomized invariance check: a few setup steps (possibly a
/// stabilization), site preparation for the chosen kind, then the move.
fn fuzz_case(ev: &Evaluator, base: &CombedDiagram, seed: u64, i: usize) -> Option<FuzzCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i as u64);
    let mut d = base.clone();
    if rng.gen_bool(0.25) {
        d = stabilize(&d, rng.gen_range(1..=3)).ok()?;
    }
    for _ in 0..rng.gen_range(0..=2) {
        let k = MoveKind::ALL[rng.gen_range(0..MoveKind::ALL.len())];
        if let Some((m, _)) = random_move(&mut rng, &d, k) {
            d = m;
        }
    }
    for step in 0..MoveKind::ALL.len() {
        let kind = MoveKind::ALL[(i + step) % MoveKind::ALL.len()];
        let mut start = d.clone();
        match kind {
            MoveKind::ThreePoint => match with_random_triangle(&mut rng, &start) {
                Some((x, _)) => start = x,
                None => continue,
            },
            MoveKind::TwoPointRemove => match random_move(&mut rng, &start, MoveKind::TwoPointCreate) {
                Some((x, _)) => start = x,
                None => continue,
            },
            _ => {}
        }
        let Some((m, what)) = random_move(&mut rng, &start, kind) else { continue };
        let result = ev.bracket(&start).and_then(|b| ev.bracket(&m).map(|bm| (b.raw, bm.raw)));
        let (ok, detail) = match result {
            Ok((b, bm)) => {
                let q = &ev.triplet.q;
                let expected = match kind {
                    MoveKind::Spiral if what.contains("+1") => &b * q,
                    MoveKind::Spiral => &b * &q.inv().expect("q is a unit"),
                    _ => b.clone(),
                };
                (bm == expected, (bm != expected).then(|| format!("expected {expected}, got {bm}")))
            }
            Err(e) => (false, Some(e.to_string())),
        };
        return Some(FuzzCase { kind: kind.name(), what, ok, detail });
    }
    None
}

fn fuzz(cli: &Cli, targ: &str, darg: &str, n: usize) -> Result<Report, CliError> {
    let t = match accepted(targ)? {
        Ok(t) => t,
        Err(r) => return Ok(r),
    };
    let (dname, d) = resolve::diagram(darg)?;
    let rep = d.validate();
    if !rep.is_valid() {
        return Err(CliError::Usage(format!("{dname} is not a valid diagram: {rep}")));
    }
    let opts = options(cli, false);
    let cases: Vec<Option<FuzzCase>> = (0..n)
        .into_par_iter()
        .map(|i| fuzz_case(&Evaluator::with_options(&t, opts.clone()), &d, cli.seed, i))
        .collect();
    if cases.iter().any(Option::is_none) {
        return Err(CliError::Usage(format!("{dname} admits no moves")));
    }
    let cases: Vec<FuzzCase> = cases.into_iter().flatten().collect();
    let passed = cases.iter().filter(|c| c.ok).count();
    let mut per_kind = std::collections::BTreeMap::<&str, (usize, usize)>::new();
    for c in &cases {
        let e = per_kind.entry(c.kind).or_default();
        e.0 += usize::from(c.ok);
        e.1 += 1;
    }
    let mut summary = format!("{passed}/{n} invariance checks pass ({} over {dname}, seed {})\n", t.name, cli.seed);
    for (k, (p, total)) in &per_kind {
        let _ = writeln!(summary, "  {k:<18} {p}/{total}");
    }
    for c in cases.iter().filter(|c| !c.ok) {
        let _ = writeln!(summary, "  FAIL {}: {}", c.what, c.detail.as_deref().unwrap_or(""));
    }
    let json = json!({
        "command": "moves-fuzz",
        "triplet": t.name,
        "diagram": dname,
        "seed": cli.seed,
        "checks": n,
        "passed": passed,
        "per_kind": per_kind.iter().map(|(k, (p, tot))| (k.to_string(), json!({"passed": p, "total": tot}))).collect::<serde_json::Map<_, _>>(),
        "cases": cases.iter().map(|c| json!({"kind": c.kind, "move": c.what, "ok": c.ok, "detail": c.detail})).collect::<Vec<_>>(),
        "conventions": triplet_conventions(&t),
    });
    Ok(Report { json, summary, pass: passed == n })
}

/// Grid syntax: parameters separated by ';', each a comma list of rationals
/// or an inclusive integer range "a..b". The empty string is the empty grid.
pub fn parse_grid(spec: &str) -> Result<Vec<Vec<BigRational>>, CliError> {
    if spec.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut axes = Vec::new();
    for part in spec.split(';') {
        let part = part.trim();
        let axis: Vec<BigRational> = if let Some((a, b)) = part.split_once("..") {
            let bad = || CliError::Usage(format!("bad range '{part}'"));
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b.trim().parse().map_err(|_| bad())?;
            (a..=b).map(|v| BigRational::from_integer(v.into())).collect()
        } else {
            part.split(',').map(|x| parse_rational(x).map_err(|e| CliError::Usage(format!("grid: {e}")))).collect::<Result<_, _>>()?
        };
        axes.push(axis);
    }
    let mut grid: Vec<Vec<BigRational>> = vec![Vec::new()];
    for axis in axes {
        grid = grid.into_iter().flat_map(|p| axis.iter().map(move |v| [p.clone(), vec![v.clone()]].concat())).collect();
    }
    Ok(grid)
}

fn row_json(r: &ScanRow) -> Value {
    json!({
        "index": r.index,
        "params": r.params.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "triplet": r.name,
        "accepted": r.accepted(),
        "rejection": r.rejection.as_ref().map(|(c, d)| json!({"condition": c, "detail": d})),
        "stabilization_brackets": r.stabilization.as_ref().map(|s| s.projective().iter().map(ToString::to_string).collect::<Vec<_>>()),
        "all_nonzero": r.all_nonzero(),
        "error": r.error,
    })
}

fn scan(family: &str, grid: &str) -> Result<Report, CliError> {
    let names: Vec<&str> = ScanFamily::ALL.iter().map(|f| f.name()).collect();
    let fam = ScanFamily::parse(family)
        .ok_or_else(|| CliError::Usage(format!("unknown family '{family}'; families: {}", names.join(", "))))?;
    let grid = parse_grid(grid)?;
    if let Some(p) = grid.iter().find(|p| p.len() != fam.arity()) {
        return Err(CliError::Usage(format!("{} takes {} parameters per point, grid gives {}", fam.name(), fam.arity(), p.len())));
    }
    let rows: Vec<ScanRow> = grid.par_iter().enumerate().map(|(i, p)| scan_point(fam, i, p)).collect();
    let mut summary = format!("{} points in family {}\n", rows.len(), fam.name());
    for r in &rows {
        let params: Vec<String> = r.params.iter().map(ToString::to_string).collect();
        let status = match (&r.error, &r.rejection) {
            (Some(e), _) => format!("error: {e}"),
            (None, Some((c, _))) => format!("rejected at {c}"),
            (None, None) => {
                let s = r.stabilization.as_ref().map(|s| s.projective().map(|v| v.to_string()).join(", ")).unwrap_or_default();
                format!("accepted; stabilization brackets ({s}){}", if r.all_nonzero() { "; all nonzero" } else { "" })
            }
        };
        let _ = writeln!(summary, "  {:>3} [{}] {}: {status}", r.index, params.join(", "), r.name);
    }
    Ok(Report {
        json: json!({"command": "scan", "family": fam.name(), "rows": rows.iter().map(row_json).collect::<Vec<_>>()}),
        summary,
        pass: true,
    })
}

fn builtin_cmd(name: &str, emit: bool) -> Result<Report, CliError> {
    // triplet names shadow algebra names; "algebra:NAME" forces the algebra
    let (json, description) = if let Some(d) = combhopf::diagram::builtin(name) {
        let desc = format!("diagram {name} of type {}: {} curves, {} crossings", d.type_tuple, d.curves.len(), d.crossings.len());
        (serde_json::to_value(DiagramFile::from_diagram(&d)).expect("serializes"), desc)
    } else if let Some(c) = (!name.starts_with("algebra:")).then(|| resolve::triplet_candidate(name).ok()).flatten() {
        let desc = format!("triplet {} of dimensions {:?}", c.name, c.algebras.each_ref().map(|h| h.dim()));
        (serde_json::to_value(TripletFile::from_candidate(&c)).expect("serializes"), desc)
    } else {
        let short = name.strip_prefix("algebra:").unwrap_or(name);
        let h = resolve::builtin_algebra(short).ok_or_else(|| {
            CliError::Usage(format!(
                "no builtin '{name}'; diagrams: {}; triplets: {}; algebras: {}",
                combhopf::diagram::BUILTIN_NAMES.join(", "),
                resolve::triplet_names(),
                resolve::ALGEBRA_NAMES.join(", ")
            ))
        })?;
        let desc = format!("algebra {short} of dimension {}", h.dim());
        (serde_json::to_value(AlgebraFile::from_data(Some(short.to_string()), &h)).expect("serializes"), desc)
    };
    let summary = if emit { serde_json::to_string_pretty(&json).expect("serializes") + "\n" } else { description + "\n" };
    Ok(Report { json, summary, pass: true })
}
