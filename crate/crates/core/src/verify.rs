//! Verification suites over all increasing trees up to a size bound.
//!
//! Each suite runs one library check per tree and collects the verdicts into a
//! [`VerificationReport`]. Reports are deterministic: records come out in tree order and wall
//! times are only included on request.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::digraph::{increasing_trees, path_hypergraph, Digraph};
use crate::error::{Error, Result};
use crate::intreeval::{characterization_check, Sampling};
use crate::order::{macneille_completion, poset_isomorphic};
use crate::ornament::{aorn_poset, enumerate_ornamentations, jp, mp, orn_poset};
use crate::polytope::realization_check;
use crate::reorient::{areori_poset, biclosed_masks, quotient_check_unstarred, rbi_poset, Ambient};
use crate::sourcing::asour_poset;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub instance: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, checks: Vec<CheckRecord>) -> Self {
        VerificationReport {
            schema: SCHEMA_VERSION,
            suite: suite.into(),
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Semidistributive,
    MacNeille,
    Equivalences,
    Quotient,
    Intreeval,
    Realization,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Semidistributive,
        Suite::MacNeille,
        Suite::Equivalences,
        Suite::Quotient,
        Suite::Intreeval,
        Suite::Realization,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Semidistributive => "semidistributive",
            Suite::MacNeille => "macneille",
            Suite::Equivalences => "equivalences",
            Suite::Quotient => "quotient",
            Suite::Intreeval => "intreeval",
            Suite::Realization => "realization",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    /// Largest number of vertices.
    pub n: usize,
    /// Subhypergraph sampling for the intreeval suite.
    pub sampling: Option<Sampling>,
    pub timings: bool,
}

impl Options {
    pub fn new(n: usize) -> Self {
        Options { n, sampling: None, timings: false }
    }
}

/// Every increasing tree on `1..=n` vertices.
pub fn trees_up_to(n: usize) -> Vec<Digraph> {
    (1..=n).flat_map(increasing_trees).collect()
}

pub fn describe(t: &Digraph) -> String {
    let edges: Vec<String> = t.edges().into_iter().map(|(u, v)| format!("{u}{v}")).collect();
    format!("n={} {{{}}}", t.n(), edges.join(","))
}

/// `Ok(None)` on success, `Ok(Some(witness))` on failure.
type Outcome = Result<Option<String>>;

/// `Orn(T)` is a semidistributive lattice whose join and meet irreducibles are the `J_P` and
/// `M_P`, with `κ∨(M_P) = J_P` and `κ∧(J_P) = M_P`.
pub fn semidistributive_check(t: &Digraph) -> Outcome {
    let poset = orn_poset(t)?;
    let lattice = match poset.lattice() {
        Ok(l) => l,
        Err(e) => return Ok(Some(format!("not a lattice: {e}"))),
    };
    if !lattice.is_join_semidistributive()? || !lattice.is_meet_semidistributive()? {
        return Ok(Some("not semidistributive".into()));
    }
    let paths = path_hypergraph(t);
    let mut js = HashSet::new();
    let mut ms = HashSet::new();
    for &p in paths.hyperedges() {
        let (u, v) = (p.min().expect("path"), p.max().expect("path"));
        let (j, m) = (jp(t, u, v)?, mp(t, u, v)?);
        let (Some(ji), Some(mi)) = (poset.index_of(&j), poset.index_of(&m)) else {
            return Ok(Some(format!("J_P or M_P missing for {p}")));
        };
        if lattice.kappa_join(mi)? != ji || lattice.kappa_meet(ji)? != mi {
            return Ok(Some(format!("kappa maps disagree on {p}")));
        }
        js.insert(ji);
        ms.insert(mi);
    }
    if js != poset.join_irreducibles().into_iter().collect() {
        return Ok(Some("join irreducibles differ from J_P".into()));
    }
    if ms != poset.meet_irreducibles().into_iter().collect() {
        return Ok(Some("meet irreducibles differ from M_P".into()));
    }
    Ok(None)
}

/// The MacNeille completions of acyclic reorientations and of acyclic sourcings are the
/// biclosed reorientations and the ornamentations.
pub fn macneille_check(t: &Digraph) -> Outcome {
    let amb = Ambient::of(t)?;
    let areori = macneille_completion(&areori_poset(&amb)?)?;
    if poset_isomorphic(&areori.lattice, &rbi_poset(&amb)?).is_none() {
        return Ok(Some("completion of acyclic reorientations is not the biclosed lattice".into()));
    }
    let asour = macneille_completion(&asour_poset(&Arc::new(path_hypergraph(t)))?)?;
    if poset_isomorphic(&asour.lattice, &orn_poset(t)?).is_none() {
        return Ok(Some("completion of acyclic sourcings is not the ornamentation lattice".into()));
    }
    Ok(None)
}

/// The eight conditions characterizing starred trees, in order: induced alternating cycle in
/// the closure, converging-diverging five vertices in the closure, starred, cyclic biclosed
/// reorientation, cyclic ornamentation, and non-lattice acyclic reorientations, acyclic
/// sourcings and acyclic ornamentations.
pub fn starred_conditions(t: &Digraph) -> Result<[bool; 8]> {
    let tc = t.transitive_closure();
    let amb = Ambient::of(t)?;
    let h = Arc::new(path_hypergraph(t));
    Ok([
        tc.has_induced_alternating_cycle().is_some(),
        tc.converging_diverging_witness().is_some(),
        t.is_starred_tree()?,
        biclosed_masks(&amb)?.into_iter().any(|m| !amb.is_acyclic_mask(m)),
        aorn_poset(t)?.len() < enumerate_ornamentations(t)?.len(),
        !areori_poset(&amb)?.is_lattice(),
        !asour_poset(&h)?.is_lattice(),
        !aorn_poset(t)?.is_lattice(),
    ])
}

pub fn equivalences_check(t: &Digraph) -> Outcome {
    let c = starred_conditions(t)?;
    Ok(c.iter().any(|&x| x != c[0]).then(|| format!("{c:?}")))
}

/// For unstarred trees: `R ↦ orn{R}` preserves meets and joins, and every ornamentation is
/// acyclic.
pub fn quotient_check(t: &Digraph) -> Outcome {
    let r = quotient_check_unstarred(t)?;
    if let Some(f) = r.failures.first() {
        return Ok(Some(format!("{} failures, first: {f}", r.failures.len())));
    }
    let aorn: HashSet<_> = aorn_poset(t)?.keys().iter().cloned().collect();
    let orn: HashSet<_> = enumerate_ornamentations(t)?.into_iter().collect();
    Ok((aorn != orn).then(|| format!("{} acyclic of {} ornamentations", aorn.len(), orn.len())))
}

pub fn intreeval_check(t: &Digraph, sampling: Option<Sampling>) -> Outcome {
    let r = characterization_check(t, sampling)?;
    if let Some(d) = r.discrepancies.first() {
        return Ok(Some(format!("characterization fails on {:?}", d.hyperedges)));
    }
    Ok(r.join_failures.first().map(|f| format!("join formula: {f}")))
}

pub fn realization_outcome(t: &Digraph) -> Outcome {
    let r = realization_check(t)?;
    Ok((!r.passed()).then(|| format!("{r:?}")))
}

fn record(name: &str, t: &Digraph, timings: bool, f: impl FnOnce() -> Outcome) -> CheckRecord {
    let start = Instant::now();
    let outcome = f();
    let wall_ms = timings.then(|| start.elapsed().as_millis() as u64);
    let (passed, witness) = match outcome {
        Ok(None) => (true, None),
        Ok(Some(w)) => (false, Some(w)),
        Err(e) => (false, Some(format!("error: {e}"))),
    };
    CheckRecord { name: name.into(), instance: describe(t), passed, witness, wall_ms }
}

/// The quotient suite only applies to unstarred trees.
fn applicable(suite: Suite, t: &Digraph) -> bool {
    match suite {
        Suite::Quotient => !t.is_starred_tree().unwrap_or(true),
        _ => true,
    }
}

pub fn run_suite(suite: Suite, opts: &Options) -> Result<VerificationReport> {
    if opts.n > 7 {
        return Err(Error::SizeLimit { what: "verification tree size", bound: 7 });
    }
    let trees: Vec<Digraph> = trees_up_to(opts.n).into_iter().filter(|t| applicable(suite, t)).collect();
    let checks = trees
        .par_iter()
        .map(|t| {
            record(suite.name(), t, opts.timings, || match suite {
                Suite::Semidistributive => semidistributive_check(t),
                Suite::MacNeille => macneille_check(t),
                Suite::Equivalences => equivalences_check(t),
                Suite::Quotient => quotient_check(t),
                Suite::Intreeval => intreeval_check(t, opts.sampling),
                Suite::Realization => realization_outcome(t),
            })
        })
        .collect();
    Ok(VerificationReport::new(suite.name(), checks))
}

/// Every suite, concatenated into one report.
pub fn run_all(opts: &Options) -> Result<VerificationReport> {
    let mut checks = Vec::new();
    for s in Suite::ALL {
        checks.extend(run_suite(s, opts)?.checks);
    }
    Ok(VerificationReport::new("all", checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{diamond, path, x_tree};

    #[test]
    fn small_suites_pass() {
        let opts = Options::new(4);
        for s in Suite::ALL {
            let r = run_suite(s, &opts).unwrap();
            assert!(r.passed, "{s}: {:?}", r.failures().next());
            assert!(!r.checks.is_empty());
        }
    }

    #[test]
    fn conditions_on_fixtures() {
        assert_eq!(starred_conditions(&x_tree()).unwrap(), [true; 8]);
        assert_eq!(starred_conditions(&path(4)).unwrap(), [false; 8]);
        assert!(matches!(quotient_check(&x_tree()), Err(Error::Starred(..))));
        assert!(starred_conditions(&diamond()).is_err());
    }

    #[test]
    fn reports_are_deterministic() {
        let opts = Options::new(4);
        let a = run_suite(Suite::Equivalences, &opts).unwrap().to_json();
        let b = run_suite(Suite::Equivalences, &opts).unwrap().to_json();
        assert_eq!(a, b);
        assert!(a.contains("\"schema\": 1"));
        assert!(!a.contains("wall_ms"));
        let timed = run_suite(Suite::Equivalences, &Options { timings: true, ..opts }).unwrap();
        assert!(timed.checks.iter().all(|c| c.wall_ms.is_some()));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }
}
