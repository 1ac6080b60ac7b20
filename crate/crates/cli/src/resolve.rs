//! Arguments naming either a file or a builtin object.

use std::path::Path;

use combhopf::diagram::{builtin, CombedDiagram, BUILTIN_NAMES};
use combhopf::hopf::examples::{a8, function_algebra, group_algebra, sweedler, taft, trivial};
use combhopf::hopf::HopfData;
use combhopf::invariant::{named_triplet, TRIPLET_NAMES};
use combhopf::triplet::{build_a8, build_trivial, TripletCandidate};

use crate::formats::{read_json, AlgebraFile, DiagramFile, TripletFile};
use crate::CliError;

pub const ALGEBRA_NAMES: [&str; 6] = ["trivial", "a8", "sweedler", "z<n>", "fun<n>", "taft<n>"];

fn order(name: &str, prefix: &str) -> Option<usize> {
    let n: usize = name.strip_prefix(prefix)?.parse().ok()?;
    (1..=64).contains(&n).then_some(n)
}

pub fn builtin_algebra(name: &str) -> Option<HopfData> {
    match name {
        "trivial" => Some(trivial()),
        "a8" => Some(a8()),
        "sweedler" => Some(sweedler()),
        _ => {
            if let Some(n) = order(name, "taft") {
                Some(taft(n))
            } else if let Some(n) = order(name, "fun") {
                Some(function_algebra(n))
            } else {
                order(name, "z").map(group_algebra)
            }
        }
    }
}

fn is_file(arg: &str) -> bool {
    Path::new(arg).is_file()
}

pub fn algebra(arg: &str) -> Result<(String, HopfData), CliError> {
    if is_file(arg) {
        let f: AlgebraFile = read_json(Path::new(arg))?;
        let name = f.name.clone().unwrap_or_else(|| arg.to_string());
        return Ok((name, f.to_data()?));
    }
    builtin_algebra(arg)
        .map(|h| (arg.to_string(), h))
        .ok_or_else(|| CliError::Usage(format!("no file or builtin algebra '{arg}'; builtins: {}", ALGEBRA_NAMES.join(", "))))
}

/// The unchecked candidate behind a triplet argument.
pub fn triplet_candidate(arg: &str) -> Result<TripletCandidate, CliError> {
    if is_file(arg) {
        let f: TripletFile = read_json(Path::new(arg))?;
        return f.to_candidate();
    }
    if arg == "trivial" {
        return Ok(build_trivial());
    }
    if let Some(t) = arg.strip_prefix("a8_t") {
        let t = combhopf::scalar::parse_rational(t).map_err(|e| CliError::Usage(e.to_string()))?;
        return Ok(build_a8(&t));
    }
    // the remaining builtins pick parameters by running the checker
    let t = named_triplet(arg).map_err(CliError::Usage)?;
    Ok(TripletCandidate {
        name: t.name.clone(),
        algebras: t.algebras.clone().map(|h| h.data().clone()),
        pairings: t.pairings.clone(),
    })
}

pub fn diagram(arg: &str) -> Result<(String, CombedDiagram), CliError> {
    if is_file(arg) {
        let f: DiagramFile = read_json(Path::new(arg))?;
        return Ok((arg.to_string(), f.to_diagram()?));
    }
    builtin(arg)
        .map(|d| (arg.to_string(), d))
        .ok_or_else(|| CliError::Usage(format!("no file or builtin diagram '{arg}'; builtins: {}", BUILTIN_NAMES.join(", "))))
}

pub fn triplet_names() -> String {
    TRIPLET_NAMES.join(", ")
}
