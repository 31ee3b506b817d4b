//! Named verification suites run over `(n,k,r)` grids, with per-point
//! verdicts and SHA-256 hashes of the emitted artifacts.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::characters::{
    ch_nsym, ch_qt, compare_power_sum_variant, frobenius_formula, frobenius_from_ring, frobenius_recursion_check,
};
use crate::combinat::{good_monomials, good_monomials_by_staircase, permutations};
use crate::error::{Error, Result};
use crate::groebner::QuotientRing;
use crate::qt::QtPolynomial;
use crate::rings::{
    artin_basis, build_point_set, build_quotient, generator_lifts, gs_basis, hilbert_closed_form, huang_basis,
    huang_element, lifted_basis, lifted_rank, recursion_relations_check, reduced_words, sigma_bar_along,
    vanishing_check, vanishing_ideal, RingSpec,
};
use crate::schubert::{explicit_groebner_check, positivity_experiment, SchubertBasis};
use crate::tesler::{tesler_hilbert_verdict, TeslerIndexSet, DEFAULT_TESLER_BOUND};
use crate::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Hilbert,
    Stdmon,
    ExplicitGroebner,
    Frobenius,
    Recursion,
    Bases,
    HeckeGf,
    Tesler,
    SchubertLt,
    SchubertPositivity,
    PowerSumVariant,
    Pointset,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Hilbert,
        Suite::Stdmon,
        Suite::ExplicitGroebner,
        Suite::Frobenius,
        Suite::Recursion,
        Suite::Bases,
        Suite::HeckeGf,
        Suite::Tesler,
        Suite::SchubertLt,
        Suite::SchubertPositivity,
        Suite::PowerSumVariant,
        Suite::Pointset,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hilbert => "hilbert",
            Suite::Stdmon => "stdmon",
            Suite::ExplicitGroebner => "groebner37",
            Suite::Frobenius => "frobenius",
            Suite::Recursion => "recursion",
            Suite::Bases => "bases",
            Suite::HeckeGf => "hecke-gf",
            Suite::Tesler => "tesler",
            Suite::SchubertLt => "schubert-lt",
            Suite::SchubertPositivity => "schubert-positivity",
            Suite::PowerSumVariant => "conjecture51",
            Suite::Pointset => "pointset",
        }
    }

    /// Suites whose outcome is recorded, not judged.
    pub fn is_finding(self) -> bool {
        matches!(self, Suite::SchubertPositivity | Suite::PowerSumVariant)
    }

    /// `(nmax, kmax)` used when the caller gives none.
    pub fn default_bounds(self) -> (usize, usize) {
        match self {
            Suite::Hilbert | Suite::Stdmon | Suite::ExplicitGroebner => (5, 3),
            Suite::Frobenius | Suite::Recursion | Suite::HeckeGf => (4, 3),
            Suite::Bases | Suite::PowerSumVariant => (3, 2),
            Suite::Pointset => (4, 2),
            Suite::Tesler => (DEFAULT_TESLER_BOUND, DEFAULT_TESLER_BOUND - 1),
            Suite::SchubertLt => (4, 2),
            Suite::SchubertPositivity => (3, 3),
        }
    }

    /// Whether `(n,k,r)` belongs to this suite's grid at all. For the
    /// Tesler suite `nmax` bounds `n + k`.
    fn applies(self, n: usize, k: usize, r: usize, nmax: usize) -> bool {
        match self {
            Suite::ExplicitGroebner | Suite::Recursion => r < n && k > 0,
            Suite::Tesler => n + k <= nmax,
            Suite::SchubertPositivity => k > 0,
            _ => true,
        }
    }

    pub fn grid(self, nmax: usize, kmax: usize) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for n in 1..=nmax {
            for k in 0..=kmax {
                for r in 0..=n {
                    if self.applies(n, k, r, nmax) {
                        out.push((n, k, r));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Finding,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Finding => "finding",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PointResult {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub verdict: Verdict,
    pub detail: String,
    pub artifact: Option<Value>,
    pub elapsed_ms: u128,
}

impl PointResult {
    pub fn artifact_name(&self, suite: Suite) -> String {
        format!("{}_{}_{}_{}.json", suite.name(), self.n, self.k, self.r)
    }
}

/// The bytes written for an artifact; hashes are taken over exactly these.
pub fn artifact_bytes(value: &Value) -> Vec<u8> {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    s.push('\n');
    s.into_bytes()
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub suite: Suite,
    pub points: Vec<PointResult>,
}

impl VerificationReport {
    pub fn failures(&self) -> usize {
        self.points.iter().filter(|p| p.verdict == Verdict::Fail).count()
    }

    /// A suite passes iff no point fails; findings never fail it.
    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn status(&self) -> Verdict {
        if !self.passed() {
            Verdict::Fail
        } else if self.suite.is_finding() {
            Verdict::Finding
        } else {
            Verdict::Pass
        }
    }

    pub fn elapsed_ms(&self) -> u128 {
        self.points.iter().map(|p| p.elapsed_ms).sum()
    }

    /// `(file name, sha256)` for every point that produced an artifact.
    pub fn artifact_hashes(&self) -> Vec<(String, String)> {
        self.points
            .iter()
            .filter_map(|p| {
                let a = p.artifact.as_ref()?;
                Some((p.artifact_name(self.suite), sha256_hex(&artifact_bytes(a))))
            })
            .collect()
    }

    /// Timing is left out unless asked for, so that reports are
    /// byte-identical across runs.
    pub fn to_json(&self, with_timing: bool) -> Value {
        let points: Vec<Value> = self
            .points
            .iter()
            .map(|p| {
                let mut v = json!({
                    "n": p.n,
                    "k": p.k,
                    "r": p.r,
                    "verdict": p.verdict,
                    "detail": p.detail,
                });
                if with_timing {
                    v["elapsed_ms"] = json!(p.elapsed_ms as u64);
                }
                v
            })
            .collect();
        let artifacts: serde_json::Map<String, Value> = self
            .artifact_hashes()
            .into_iter()
            .map(|(name, h)| (name, Value::String(h)))
            .collect();
        let mut out = json!({
            "suite": self.suite.name(),
            "grid": self.points.iter().map(|p| [p.n, p.k, p.r]).collect::<Vec<_>>(),
            "status": self.status(),
            "failures": self.failures(),
            "points": points,
            "artifacts": artifacts,
        });
        if with_timing {
            out["elapsed_ms"] = json!(self.elapsed_ms() as u64);
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,n,k,r,verdict,detail\n");
        for p in &self.points {
            out.push_str(&format!(
                "{},{},{},{},{},\"{}\"\n",
                self.suite,
                p.n,
                p.k,
                p.r,
                p.verdict,
                p.detail.replace('"', "\"\"")
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in &self.points {
            out.push_str(&format!(
                "{} ({},{},{}) {}: {}\n",
                self.suite, p.n, p.k, p.r, p.verdict, p.detail
            ));
        }
        out.push_str(&format!(
            "{}: {} ({} points, {} failing)\n",
            self.suite,
            self.status(),
            self.points.len(),
            self.failures()
        ));
        out
    }
}

struct Outcome {
    ok: bool,
    detail: String,
    artifact: Option<Value>,
}

impl Outcome {
    fn check(ok: bool, detail: impl Into<String>) -> Outcome {
        Outcome {
            ok,
            detail: detail.into(),
            artifact: None,
        }
    }

    fn with(mut self, artifact: Value) -> Outcome {
        self.artifact = Some(artifact);
        self
    }
}

fn standard_set(ring: &QuotientRing) -> BTreeSet<Monomial> {
    ring.basis().monomials().iter().copied().collect()
}

fn run_hilbert(spec: &RingSpec) -> Result<Outcome> {
    let ring = build_quotient(spec)?;
    let closed = hilbert_closed_form(spec);
    let computed = ring.basis().hilbert_series();
    Ok(Outcome::check(closed == computed, format!("Hilb = {computed}")))
}

fn run_stdmon(spec: &RingSpec) -> Result<Outcome> {
    let ring = build_quotient(spec)?;
    let standard = standard_set(&ring);
    let (n, k, r) = (spec.n, spec.k, spec.r);
    let good: BTreeSet<Monomial> = good_monomials(n, k, r)?.into_iter().collect();
    let by_staircase: BTreeSet<Monomial> = good_monomials_by_staircase(n, k, r)?.into_iter().collect();
    let ok = standard == good && standard == by_staircase && standard.len() as u64 == spec.expected_dim();
    Ok(Outcome::check(ok, format!("{} standard monomials", standard.len())))
}

fn run_explicit_groebner(spec: &RingSpec) -> Result<Outcome> {
    let report = explicit_groebner_check(spec)?;
    let ok = report.is_groebner_basis() && report.minimal;
    let artifact = serde_json::to_value(&report).map_err(|e| Error::Domain(e.to_string()))?;
    Ok(Outcome::check(ok, format!("{} elements, minimal: {}", report.size, report.minimal)).with(artifact))
}

fn run_frobenius(spec: &RingSpec) -> Result<Outcome> {
    let ring = build_quotient(spec)?;
    let from_ring = frobenius_from_ring(&ring)?;
    let formula = frobenius_formula(spec.n, spec.k, spec.r)?;
    let ok = from_ring == formula && from_ring.has_nonnegative_coefficients();
    Ok(Outcome::check(ok, format!("{} irreducible constituents", from_ring.terms().count())).with(from_ring.to_json()))
}

fn run_recursion(spec: &RingSpec) -> Result<Outcome> {
    let (n, k, r) = (spec.n, spec.k, spec.r);
    let ring = build_quotient(spec)?;
    let relations = recursion_relations_check(&ring, n, k, r)?;
    let frob = frobenius_recursion_check(n, k, r)?;
    let d = |k: usize, r: usize| RingSpec::mixed_h(n, k, r).map(|s| s.expected_dim());
    let pascal = d(k, r)? == d(k, r + 1)? + d(k - 1, r)?;
    Ok(Outcome::check(
        relations.all_hold() && frob && pascal,
        format!(
            "relations: {}, characters: {frob}, dimensions: {pascal}",
            relations.all_hold()
        ),
    ))
}

fn run_bases(spec: &RingSpec) -> Result<Outcome> {
    let n = spec.n;
    let ring = build_quotient(spec)?;
    let dim = spec.expected_dim() as usize;
    let mut ranks = Vec::new();
    for seed in [artin_basis(n), gs_basis(n), huang_basis(n)?] {
        let family = lifted_basis(&seed, spec)?;
        ranks.push(lifted_rank(&family, &ring)?);
    }
    // σ̄ along every reduced word agrees
    let mut independent = true;
    for pi in permutations(n) {
        let base = huang_element(&pi)?;
        let seed = crate::rings::descent_monomial(&pi);
        for word in reduced_words(&pi)? {
            independent &= sigma_bar_along(&word, &seed)? == base;
        }
    }
    let ok = ranks.iter().all(|&rk| rk == dim) && independent;
    Ok(Outcome::check(
        ok,
        format!("ranks {ranks:?} of {dim}, reduced-word independent: {independent}"),
    ))
}

fn run_hecke(spec: &RingSpec) -> Result<Outcome> {
    let (n, k, r) = (spec.n, spec.k, spec.r);
    let qt = ch_qt(n, k, r)?;
    let nsym = ch_nsym(n, k, r)?;
    let from_schur = frobenius_formula(n, k, r)?.to_fundamental();
    let ok = qt.set_t(1) == from_schur
        && qt.total_at_one() == spec.expected_dim().into()
        && nsym.commutative_image() == qt.set_t(1);
    Ok(Outcome::check(ok, format!("{} fundamental terms", qt.terms().count())).with(qt.to_json()))
}

fn run_tesler(spec: &RingSpec) -> Result<Outcome> {
    let v = tesler_hilbert_verdict(spec.n, spec.k, spec.r, TeslerIndexSet::Cumulative)?;
    Ok(Outcome::check(
        v.equal,
        format!("{} compositions, sum = {}", v.compositions, v.tesler_sum),
    )
    .with(v.to_json()))
}

fn run_schubert_lt(spec: &RingSpec) -> Result<Outcome> {
    let (n, k, r) = (spec.n, spec.k, spec.r);
    let basis = SchubertBasis::new(n, k, r)?;
    let leads: BTreeSet<Monomial> = basis.leading_monomials()?.into_iter().collect();
    let good: BTreeSet<Monomial> = good_monomials(n, k, r)?.into_iter().collect();
    let ok = leads == good && basis.dim() == leads.len() && basis.change_of_basis_is_unitriangular();
    Ok(Outcome::check(ok, format!("{} Schubert polynomials", basis.dim())))
}

fn run_positivity(spec: &RingSpec) -> Result<Outcome> {
    let finding = positivity_experiment(spec.n, spec.k, spec.r)?;
    let detail = format!(
        "{} pairs, all nonnegative integers: {}",
        finding.pairs_checked, finding.all_nonnegative_integers
    );
    let summary = json!({
        "n": finding.n,
        "k": finding.k,
        "r": finding.r,
        "basis_size": finding.basis_size,
        "pairs_checked": finding.pairs_checked,
        "all_nonnegative_integers": finding.all_nonnegative_integers,
        "counterexamples": finding.counterexamples().map(|p| json!([p.left.to_string(), p.right.to_string()])).collect::<Vec<_>>(),
    });
    Ok(Outcome::check(true, detail).with(summary))
}

fn run_power_sum_variant(spec: &RingSpec) -> Result<Outcome> {
    let cmp = compare_power_sum_variant(spec.n, spec.k, spec.r)?;
    let detail = format!(
        "characters equal: {}, ideals equal: {}",
        cmp.characters_equal, cmp.ideals_equal
    );
    Ok(Outcome::check(true, detail).with(cmp.to_json()))
}

fn run_pointset(spec: &RingSpec) -> Result<Outcome> {
    let y = build_point_set(spec)?;
    let gb = vanishing_ideal(&y)?;
    let ring = QuotientRing::from_groebner(gb)?;
    let mut vanish = true;
    for f in generator_lifts(spec)? {
        vanish &= vanishing_check(&f, &y)?;
    }
    let ok = ring.dim() as u64 == spec.expected_dim() && y.len() as u64 == spec.expected_dim() && vanish;
    Ok(Outcome::check(
        ok,
        format!(
            "{} points, quotient dim {}, lifts vanish: {vanish}",
            y.len(),
            ring.dim()
        ),
    ))
}

fn run_point(suite: Suite, n: usize, k: usize, r: usize) -> PointResult {
    let start = Instant::now();
    let outcome = RingSpec::mixed_h(n, k, r).and_then(|spec| match suite {
        Suite::Hilbert => run_hilbert(&spec),
        Suite::Stdmon => run_stdmon(&spec),
        Suite::ExplicitGroebner => run_explicit_groebner(&spec),
        Suite::Frobenius => run_frobenius(&spec),
        Suite::Recursion => run_recursion(&spec),
        Suite::Bases => run_bases(&spec),
        Suite::HeckeGf => run_hecke(&spec),
        Suite::Tesler => run_tesler(&spec),
        Suite::SchubertLt => run_schubert_lt(&spec),
        Suite::SchubertPositivity => run_positivity(&spec),
        Suite::PowerSumVariant => run_power_sum_variant(&spec),
        Suite::Pointset => run_pointset(&spec),
    });
    let (verdict, detail, artifact) = match outcome {
        Ok(o) if o.ok && suite.is_finding() => (Verdict::Finding, o.detail, o.artifact),
        Ok(o) if o.ok => (Verdict::Pass, o.detail, o.artifact),
        Ok(o) => (Verdict::Fail, o.detail, o.artifact),
        Err(e) => (Verdict::Fail, format!("error: {e}"), None),
    };
    PointResult {
        n,
        k,
        r,
        verdict,
        detail,
        artifact,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Run `suite` on `grid` with at most `jobs` worker threads. Points are
/// independent (each builds its own quotient ring) and the report is sorted
/// by `(n,k,r)`.
pub fn run_suite(suite: Suite, grid: &[(usize, usize, usize)], jobs: usize) -> Result<VerificationReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Domain(e.to_string()))?;
    let mut points: Vec<PointResult> =
        pool.install(|| grid.par_iter().map(|&(n, k, r)| run_point(suite, n, k, r)).collect());
    points.sort_by_key(|p| (p.n, p.k, p.r));
    Ok(VerificationReport { suite, points })
}

/// `Hilb(R;q)` from the closed form and, optionally, from Buchberger.
pub fn hilbert_pair(spec: &RingSpec, from_groebner: bool) -> Result<(QtPolynomial, Option<QtPolynomial>)> {
    let closed = hilbert_closed_form(spec);
    let computed = if from_groebner {
        Some(build_quotient(spec)?.basis().hilbert_series())
    } else {
        None
    };
    Ok((closed, computed))
}
