//! Command implementations behind the `matred` binary.
//!
//! Each command returns its full stdout text and an exit status so the
//! binary, the browser demo and the tests share one rendering.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::dependence::{
    min_closure_subsets, reducts_by_definition, reducts_via_transversals, theta_from_matroid,
    verify_paper_theorems, TheoremReport,
};
use crate::error::Error;
use crate::hyperplanes::FlatLattice;
use crate::matroid::{Matroid, WeightVector};
use crate::subsets::{SetFamily, SubsetMask};

/// Greedy results are cross-checked against every base up to this size.
pub const GREEDY_CONFIRM_MAX: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    VerificationFailed = 1,
    InputError = 2,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub status: ExitStatus,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        CommandResult {
            status: ExitStatus::Success,
            stdout,
            stderr: String::new(),
        }
    }

    fn failed(stdout: String, stderr: impl Into<String>) -> Self {
        CommandResult {
            status: ExitStatus::VerificationFailed,
            stdout,
            stderr: stderr.into(),
        }
    }

    pub fn input_error(err: &Error) -> Self {
        Self::usage_error(err.to_string())
    }

    /// Exit status 2 with `message` on stderr.
    pub fn usage_error(message: impl std::fmt::Display) -> Self {
        CommandResult {
            status: ExitStatus::InputError,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

impl From<Error> for CommandResult {
    fn from(err: Error) -> Self {
        CommandResult::input_error(&err)
    }
}

/// Which route `reducts` uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReductMethod {
    /// Every route, compared against each other.
    #[default]
    All,
    /// Consistent subsets with the same closure.
    Def,
    /// Minimal subsets with the same closure.
    MinClosure,
    /// Bases of the restriction.
    Restriction,
    /// Minimal transversals of the differences with the hyperplanes.
    Transversal,
}

impl ReductMethod {
    pub const ROUTES: [ReductMethod; 4] = [
        ReductMethod::Def,
        ReductMethod::MinClosure,
        ReductMethod::Restriction,
        ReductMethod::Transversal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReductMethod::All => "all",
            ReductMethod::Def => "def",
            ReductMethod::MinClosure => "minclosure",
            ReductMethod::Restriction => "restriction",
            ReductMethod::Transversal => "transversal",
        }
    }
}

impl FromStr for ReductMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [ReductMethod::All]
            .into_iter()
            .chain(ReductMethod::ROUTES)
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method '{s}' (expected all, def, minclosure, restriction or transversal)"))
    }
}

fn check_set(matroid: &Matroid, set: SubsetMask) -> Result<(), Error> {
    if set.fits(matroid.universe_size()) {
        Ok(())
    } else {
        Err(Error::SetOutOfRange {
            set,
            n: matroid.universe_size(),
        })
    }
}

/// Prints the closure from the rank definition, then from the hyperplanes.
pub fn cmd_closure(matroid: &Matroid, set: SubsetMask) -> CommandResult {
    let lattice = match check_set(matroid, set).and_then(|_| FlatLattice::new(matroid)) {
        Ok(l) => l,
        Err(e) => return e.into(),
    };
    let direct = matroid.closure(set);
    let via = lattice.closure_via_hyperplanes(set);
    let stdout = format!("{direct}\n{via}\n");
    if direct == via {
        CommandResult::ok(stdout)
    } else {
        CommandResult::failed(stdout, format!("closure routes disagree on {set}\n"))
    }
}

pub fn cmd_flats(matroid: &Matroid) -> CommandResult {
    match FlatLattice::new(matroid) {
        Ok(l) => CommandResult::ok(format!("{}\n", l.flats())),
        Err(e) => e.into(),
    }
}

pub fn cmd_hyperplanes(matroid: &Matroid) -> CommandResult {
    match FlatLattice::new(matroid) {
        Ok(l) => CommandResult::ok(format!("{}\n", l.hyperplanes())),
        Err(e) => e.into(),
    }
}

pub fn cmd_bases(matroid: &Matroid) -> CommandResult {
    CommandResult::ok(format!("{}\n", matroid.bases()))
}

/// The reducts of `set` by one route.
pub fn reducts_by_route(matroid: &Matroid, set: SubsetMask, route: ReductMethod) -> Result<SetFamily, Error> {
    check_set(matroid, set)?;
    Ok(match route {
        ReductMethod::Def | ReductMethod::All => {
            reducts_by_definition(&theta_from_matroid(matroid), set)
        }
        ReductMethod::MinClosure => min_closure_subsets(matroid, set),
        ReductMethod::Restriction => matroid.restriction(set).bases(),
        ReductMethod::Transversal => {
            let lattice = FlatLattice::new(matroid)?;
            reducts_via_transversals(lattice.hyperplanes(), set)
        }
    })
}

/// Prints the reducts of `set`. With [`ReductMethod::All`] every route is
/// computed; on disagreement each route's family is listed and the status
/// is [`ExitStatus::VerificationFailed`].
pub fn cmd_reducts(matroid: &Matroid, set: SubsetMask, method: ReductMethod) -> CommandResult {
    if method != ReductMethod::All {
        return match reducts_by_route(matroid, set, method) {
            Ok(f) => CommandResult::ok(format!("{f}\n")),
            Err(e) => e.into(),
        };
    }
    let mut results = Vec::new();
    for route in ReductMethod::ROUTES {
        match reducts_by_route(matroid, set, route) {
            Ok(f) => results.push((route, f)),
            Err(e) => return e.into(),
        }
    }
    if results.iter().all(|(_, f)| *f == results[0].1) {
        return CommandResult::ok(format!("{}\n", results[0].1));
    }
    let mut stdout = String::new();
    for (route, f) in &results {
        let _ = writeln!(stdout, "{}={f}", route.name());
    }
    CommandResult::failed(stdout, format!("reduct routes disagree on {set}\n"))
}

/// One line per theorem check.
pub fn cmd_verify(matroid: &Matroid) -> CommandResult {
    match verify_paper_theorems(matroid) {
        Ok(reports) => verify_result(&reports),
        Err(e) => e.into(),
    }
}

/// Renders theorem reports; any failing report gives
/// [`ExitStatus::VerificationFailed`].
pub fn verify_result(reports: &[TheoremReport]) -> CommandResult {
    let mut stdout = String::new();
    for r in reports {
        let _ = writeln!(stdout, "{r}");
    }
    if reports.iter().all(|r| r.holds) {
        CommandResult::ok(stdout)
    } else {
        CommandResult::failed(stdout, "")
    }
}

/// Prints the greedy base and its weight; for small universes also whether
/// it matches the best base found by enumeration.
pub fn cmd_greedy(matroid: &Matroid, weights: &[f64]) -> CommandResult {
    let result = WeightVector::new(weights.to_vec())
        .and_then(|w| matroid.greedy_max_weight_base(&w).map(|g| (w, g)));
    let (w, greedy) = match result {
        Ok(r) => r,
        Err(e) => return e.into(),
    };
    let mut stdout = format!("{} weight={}", greedy.base, greedy.weight);
    if matroid.universe_size() > GREEDY_CONFIRM_MAX {
        stdout.push('\n');
        return CommandResult::ok(stdout);
    }
    let best = matroid
        .bases()
        .iter()
        .map(|b| w.total(b))
        .fold(f64::NEG_INFINITY, f64::max);
    let optimal = greedy.weight == best;
    let _ = writeln!(stdout, " optimal={}", if optimal { "yes" } else { "no" });
    if optimal {
        CommandResult::ok(stdout)
    } else {
        CommandResult::failed(stdout, format!("best base weight is {best}\n"))
    }
}
