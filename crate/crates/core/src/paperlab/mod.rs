//! The claim registry for the sphere-map counterexample, the canned
//! scenario it runs against, and the runner behind `fibercheck`.

mod claims;
pub mod scenario;

use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use crate::decompose::{minimal_primes, ComponentSet};
use crate::error::{Error, Result};
use crate::exactnum::{FieldConfig, QuadExt};
use crate::geometry::{preimage, AffineVariety, Point, PolyMap};
use crate::ideals::Ideal;
use crate::polyring::{substitute, Polynomial, VariableSet};
pub use claims::{compare_y_certificate, CertificateComparison};
pub use scenario::{mutate, Entry, Scenario};

type F = QuadExt;

/// The canned scenario text.
pub const SPHERE_MAP_SCENARIO: &str = include_str!("../../scenarios/sphere_map.scn");

/// Informational notes printed after the claim table; nothing here is checked.
pub const NOTES: &[&str] = &[
    "SKIP: normality of the closure of phi(X) is not tested; the counterexample needs it to fail, \
     but normality testing is out of scope.",
];

/// Typed view of a scenario with every object the claims use.
pub struct PaperScenario {
    pub scenario: Scenario,
    pub field: FieldConfig,
    pub x: AffineVariety<F>,
    pub a_presentation: Ideal<F>,
    pub phi: PolyMap<F>,
    pub circle: Ideal<F>,
    pub w: Ideal<F>,
    pub expected_components: Vec<Ideal<F>>,
    /// The isolated point `(-s/4, 0, 3/4)` singled out as `Z`.
    pub point_component: Ideal<F>,
    pub point_image: Ideal<F>,
    pub fibers: Vec<(Point<F>, Vec<Point<F>>)>,
    pub z_relation: (VariableSet, Polynomial<F>),
    pub w_def: (VariableSet, Polynomial<F>),
    pub y_relation: (VariableSet, Polynomial<F>),
    pub psi: PolyMap<F>,
    pub w_psi: Ideal<F>,
    pub proj: PolyMap<F>,
    pub w_proj: Ideal<F>,
    pub r_gap: i64,
    components: OnceLock<Result<ComponentSet<F>>>,
}

impl PaperScenario {
    pub fn canned() -> Self {
        Self::load(SPHERE_MAP_SCENARIO).expect("canned scenario is well formed")
    }

    pub fn load(text: &str) -> Result<Self> {
        let s = Scenario::parse(text)?;
        let poly = |name: &str| -> Result<(VariableSet, Polynomial<F>)> {
            let (v, p) = s.poly(name)?;
            Ok((v.clone(), p.clone()))
        };
        let mut fibers = Vec::new();
        for k in 1.. {
            let (Some(_), Some(_)) = (s.get(&format!("q{k}")), s.get(&format!("f{k}"))) else {
                break;
            };
            fibers.push((
                s.point(&format!("q{k}"))?.clone(),
                s.points(&format!("f{k}"))?.to_vec(),
            ));
        }
        Ok(Self {
            field: *s.field(),
            x: AffineVariety::new(s.ideal("X")?.clone())?,
            a_presentation: s.ideal("A")?.clone(),
            phi: s.map("phi")?.clone(),
            circle: s.ideal("circle")?.clone(),
            w: s.ideal("W")?.clone(),
            expected_components: ["Z_circle", "Z_plus", "Z_minus"]
                .iter()
                .map(|n| s.ideal(n).cloned())
                .collect::<Result<_>>()?,
            point_component: s.ideal("Z_minus")?.clone(),
            point_image: s.ideal("Z_image")?.clone(),
            fibers,
            z_relation: poly("z_relation")?,
            w_def: poly("w")?,
            y_relation: poly("y_relation")?,
            psi: s.map("psi")?.clone(),
            w_psi: s.ideal("W_psi")?.clone(),
            proj: s.map("proj")?.clone(),
            w_proj: s.ideal("W_proj")?.clone(),
            r_gap: s.int("r_gap")?,
            scenario: s,
            components: OnceLock::new(),
        })
    }

    /// Minimal primes of the preimage of `W`, computed once.
    pub fn preimage_components(&self) -> Result<&ComponentSet<F>> {
        self.components
            .get_or_init(|| minimal_primes(&preimage(&self.phi, &self.w)?, &self.field))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Rewrites a polynomial in symbols named after the target variables of
    /// `phi` (plus `w` and source variables) as a polynomial on the source.
    pub fn pull_back_symbols(
        &self,
        vars: &VariableSet,
        f: &Polynomial<F>,
    ) -> Result<Polynomial<F>> {
        let src = self.phi.source_vars();
        let mut assignment: HashMap<String, Polynomial<F>> = self
            .phi
            .target_vars()
            .names()
            .iter()
            .cloned()
            .zip(self.phi.components().iter().cloned())
            .collect();
        if vars.contains("w") && !src.contains("w") {
            let (wv, wp) = &self.w_def;
            let w = substitute(wp, wv, &assignment, src)?;
            assignment.insert("w".into(), w);
        }
        substitute(f, vars, &assignment, src)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skip => "SKIP",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub id: String,
    pub verdict: Verdict,
    pub details: String,
    pub elapsed: Duration,
}

/// What a checker returns; the runner adds the id and timing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub verdict: Verdict,
    pub details: String,
}

impl Check {
    pub fn from_bool(ok: bool, details: impl Into<String>) -> Self {
        Self {
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            details: details.into(),
        }
    }
}

pub type Checker = fn(&PaperScenario) -> Result<Check>;

pub struct Claim {
    pub id: &'static str,
    pub title: &'static str,
    pub description: &'static str,
    /// Verbatim quote the claim checks, or `CONTROL` for control cases.
    pub anchor: &'static str,
    pub check: Checker,
}

impl Claim {
    pub fn is_control(&self) -> bool {
        self.anchor.starts_with("CONTROL")
    }
}

pub struct Registry {
    claims: Vec<Claim>,
}

fn id_key(id: &str) -> (String, u64) {
    let digits = id.trim_start_matches(|c: char| !c.is_ascii_digit());
    (
        id[..id.len() - digits.len()].to_string(),
        digits.parse().unwrap_or(0),
    )
}

impl Registry {
    /// The twelve claims C1..C12.
    pub fn standard() -> Self {
        Self::new(claims::all())
    }

    pub fn empty() -> Self {
        Self { claims: Vec::new() }
    }

    pub fn new(mut claims: Vec<Claim>) -> Self {
        claims.sort_by_key(|c| id_key(c.id));
        let mut seen = std::collections::HashSet::new();
        for c in &claims {
            assert!(seen.insert(c.id), "duplicate claim id {}", c.id);
        }
        Self { claims }
    }

    pub fn claims(&self) -> &[Claim] {
        &self.claims
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.claims.iter().map(|c| c.id).collect()
    }

    pub fn get(&self, id: &str) -> Result<&Claim> {
        self.claims
            .iter()
            .find(|c| c.id.eq_ignore_ascii_case(id))
            .ok_or_else(|| Error::UnknownClaim {
                id: id.to_string(),
                valid: self.ids().join(", "),
            })
    }

    pub fn run_claim(&self, id: &str, s: &PaperScenario) -> Result<Report> {
        Ok(execute(self.get(id)?, s))
    }

    /// Runs every claim, concurrently, and reports them in id order.
    pub fn run_all(&self, s: &PaperScenario) -> Vec<Report> {
        std::thread::scope(|scope| {
            let handles: Vec<_> = self
                .claims
                .iter()
                .map(|c| scope.spawn(move || execute(c, s)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("claim checker panicked"))
                .collect()
        })
    }
}

fn execute(claim: &Claim, s: &PaperScenario) -> Report {
    let start = Instant::now();
    let check = (claim.check)(s).unwrap_or_else(|e| Check {
        verdict: Verdict::Fail,
        details: format!("error: {e}"),
    });
    Report {
        id: claim.id.to_string(),
        verdict: check.verdict,
        details: check.details,
        elapsed: start.elapsed(),
    }
}

pub fn all_pass(reports: &[Report]) -> bool {
    reports.iter().all(|r| r.verdict != Verdict::Fail)
}

/// Fixed-width table: id, verdict, elapsed milliseconds, title, details.
pub fn render_table(registry: &Registry, reports: &[Report]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<4} {:<4} {:>9}  CLAIM", "ID", "RES", "ms");
    for r in reports {
        let title = registry.get(&r.id).map(|c| c.title).unwrap_or("");
        let _ = writeln!(
            out,
            "{:<4} {:<4} {:>9.1}  {}",
            r.id,
            r.verdict,
            r.elapsed.as_secs_f64() * 1e3,
            title
        );
        for line in r.details.lines() {
            let _ = writeln!(out, "{:<21}{line}", "");
        }
    }
    let passed = reports
        .iter()
        .filter(|r| r.verdict == Verdict::Pass)
        .count();
    let _ = writeln!(out, "{passed}/{} claims pass", reports.len());
    out
}

/// One JSON object per line with keys `id`, `verdict`, `details`.
pub fn render_json(reports: &[Report]) -> String {
    reports
        .iter()
        .map(|r| {
            serde_json::json!({
                "id": r.id,
                "verdict": r.verdict.to_string(),
                "details": r.details,
            })
            .to_string()
                + "\n"
        })
        .collect()
}

/// A documented perturbation of one scenario record.
#[derive(Debug, Clone, Copy)]
pub struct Mutation {
    pub label: &'static str,
    pub record: &'static str,
    pub from: &'static str,
    pub to: &'static str,
}

impl Mutation {
    pub fn apply(&self, text: &str) -> Result<String> {
        mutate(text, self.record, self.from, self.to)
    }
}

pub const MUTATIONS: [Mutation; 5] = [
    Mutation {
        label: "circle height 1/4 -> 1/5",
        record: "circle",
        from: "z - 1/4",
        to: "z - 1/5",
    },
    Mutation {
        label: "W replaced by the origin (a, b, c)",
        record: "W",
        from: "64*a^2 + 256*b^2 - 3, 16*c - 3",
        to: "a, b, c",
    },
    Mutation {
        label: "sphere radius term 1/4 -> 1/5",
        record: "X",
        from: "- 1/4",
        to: "- 1/5",
    },
    Mutation {
        label: "second map component (1-3z)y -> (1-2z)y",
        record: "phi",
        from: "(1 - 3*z)*y",
        to: "(1 - 2*z)*y",
    },
    Mutation {
        label: "expected point s/4 -> s/5",
        record: "Z_plus",
        from: "x - s/4",
        to: "x - s/5",
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canned_scenario_loads() {
        let s = PaperScenario::canned();
        assert_eq!(s.field.to_string(), "qsqrt:3");
        assert_eq!(s.fibers.len(), 3);
        assert_eq!(s.expected_components.len(), 3);
        assert_eq!(s.r_gap, 1);
    }

    #[test]
    fn ids_sort_numerically() {
        let ids = Registry::standard().ids();
        assert_eq!(ids.len(), 12);
        assert_eq!(ids[0], "C1");
        assert_eq!(ids[9], "C10");
        assert_eq!(ids[11], "C12");
    }

    #[test]
    fn unknown_claim_lists_valid_ids() {
        let s = PaperScenario::canned();
        let err = Registry::standard().run_claim("C99", &s).unwrap_err();
        match err {
            Error::UnknownClaim { id, valid } => {
                assert_eq!(id, "C99");
                assert!(valid.starts_with("C1, C2"));
            }
            other => panic!("{other}"),
        }
    }

    #[test]
    fn empty_registry_passes_vacuously() {
        let s = PaperScenario::canned();
        let reports = Registry::empty().run_all(&s);
        assert!(reports.is_empty());
        assert!(all_pass(&reports));
    }

    #[test]
    fn every_mutation_applies() {
        for m in MUTATIONS {
            let text = m.apply(SPHERE_MAP_SCENARIO).unwrap();
            assert_ne!(text, SPHERE_MAP_SCENARIO);
            PaperScenario::load(&text).unwrap();
        }
    }

    #[test]
    fn json_lines() {
        let r = Report {
            id: "C1".into(),
            verdict: Verdict::Pass,
            details: "ok \"quoted\"".into(),
            elapsed: Duration::from_millis(3),
        };
        let line = render_json(&[r]);
        let v: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
        assert_eq!(v["id"], "C1");
        assert_eq!(v["verdict"], "PASS");
        assert_eq!(v["details"], "ok \"quoted\"");
        assert_eq!(v.as_object().unwrap().len(), 3);
    }
}
