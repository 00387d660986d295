//! Verification suites, element evaluation and multiplication tables for
//! the `superjordan` command.

pub mod eval;

use std::fmt;
use std::path::PathBuf;

use clap::ValueEnum;
use serde::Serialize;

use superjordan::bracket::{check_jordan_bracket, BracketSpec, kantor_double, AxiomForm, CurveCarrier, DBracket, GrassmannCarrier};
use superjordan::constructions::{
    check_embedding, check_w_extraction, embed_special, probe_vectors, ChengKac, JADelta, OpMatrix, VecElem,
    VectorType,
};
use superjordan::curve::{self, Derivation, Space};
use superjordan::identities::{
    check_grading, check_identity_1, check_identity_2, check_identity_3, check_identity_4, CheckConfig,
    CheckReport, CheckStatus,
};
use superjordan::structure::certificate::evaluate_associator_form;
use superjordan::structure::{
    d_ideal_saturate, derivation_ideal, find_certificate, noncyclic_probe, parity_degree_witness, replay,
    sample_witness_input, super_ideal_saturate, super_replay, CertStatus, ProbeResult, SaturationReport,
    SuperSeed,
};
use superjordan::superalg::SuperAlgebra;
use superjordan::{seeds, DerivationSpec, GammaEl, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    Jvec,
    Jadelta,
    Double,
    Ck,
    Gck,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Jordan,
    Bracket,
    Simplicity,
    Noncyclic,
    Embedding,
    Certificates,
    All,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

/// Suites that make sense for each construction, in run order.
pub fn applicable(c: Construction) -> &'static [Suite] {
    match c {
        Construction::Jvec => &[Suite::Jordan, Suite::Simplicity, Suite::Embedding],
        Construction::Jadelta | Construction::Gck => {
            &[Suite::Jordan, Suite::Simplicity, Suite::Noncyclic, Suite::Certificates]
        }
        Construction::Double => &[Suite::Jordan, Suite::Bracket, Suite::Simplicity],
        Construction::Ck => &[Suite::Jordan, Suite::Simplicity],
    }
}

pub const DEFAULT_PROBE_BOUND: usize = 16;
pub const DEFAULT_CERTIFICATE_BOUND: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteConfig {
    pub construction: Construction,
    pub suite: Suite,
    pub trials: usize,
    pub max_deg: usize,
    pub window: usize,
    pub max_window: usize,
    /// `None` picks 16 for probes and 8 for certificates.
    pub deg_bound: Option<usize>,
    pub seed: u64,
    #[serde(skip)]
    pub json_path: Option<PathBuf>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            construction: Construction::Jadelta,
            suite: Suite::Jordan,
            trials: 200,
            max_deg: 4,
            window: 24,
            max_window: 48,
            deg_bound: None,
            seed: 42,
            json_path: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), UsageError> {
        if self.trials == 0 {
            return Err(UsageError("--trials must be at least 1".into()));
        }
        if self.window > self.max_window {
            return Err(UsageError(format!(
                "--window {} exceeds --max-window {}",
                self.window, self.max_window
            )));
        }
        if self.suite != Suite::All && !applicable(self.construction).contains(&self.suite) {
            let names: Vec<String> = applicable(self.construction).iter().map(|s| s.to_string()).collect();
            return Err(UsageError(format!(
                "suite {} does not apply to {} (available: {}, all)",
                self.suite,
                self.construction,
                names.join(", ")
            )));
        }
        Ok(())
    }

    /// Identity checks split their own streams by identity name.
    fn check_config(&self) -> CheckConfig {
        CheckConfig::new(self.trials, self.max_deg, self.seed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn exit_code(self) -> u8 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Inconclusive => 2,
        }
    }

    /// `fail` dominates `inconclusive`, which dominates `pass`.
    pub fn combine(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
        verdicts.into_iter().fold(Verdict::Pass, |acc, v| match (acc, v) {
            (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
            (Verdict::Inconclusive, _) | (_, Verdict::Inconclusive) => Verdict::Inconclusive,
            _ => Verdict::Pass,
        })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Check {
    Identity {
        algebra: String,
        report: CheckReport,
    },
    Saturation {
        algebra: String,
        derivations: Vec<String>,
        replayed: bool,
        report: SaturationReport,
    },
    Probe {
        result: ProbeResult,
    },
    ParityWitness {
        trials: usize,
        failure: Option<String>,
    },
    #[serde(rename_all = "camelCase")]
    Certificate {
        target: String,
        deg_bound: usize,
        status: CertStatus,
        verified: bool,
        terms: Vec<String>,
        associator_form: Vec<String>,
        associator_value: Option<String>,
    },
}

impl Check {
    pub fn verdict(&self) -> Verdict {
        match self {
            Check::Identity { report, .. } => match report.status {
                CheckStatus::Counterexample => Verdict::Fail,
                _ => Verdict::Pass,
            },
            Check::Saturation { replayed, report, .. } => match (report.reached_one, replayed) {
                (true, true) => Verdict::Pass,
                (true, false) => Verdict::Fail,
                (false, _) => Verdict::Inconclusive,
            },
            Check::Probe { result } => {
                if result.infeasible() {
                    Verdict::Pass
                } else {
                    Verdict::Fail
                }
            }
            Check::ParityWitness { failure, .. } => {
                if failure.is_none() {
                    Verdict::Pass
                } else {
                    Verdict::Fail
                }
            }
            Check::Certificate {
                status,
                verified,
                target,
                associator_value,
                ..
            } => match status {
                CertStatus::NotFoundAtBound => Verdict::Inconclusive,
                CertStatus::Found => {
                    let form_ok = target != "1" || associator_value.as_deref() == Some("1");
                    if *verified && form_ok {
                        Verdict::Pass
                    } else {
                        Verdict::Fail
                    }
                }
            },
        }
    }

    /// Label shared by checks that are summarized as a count when they pass.
    fn group(&self) -> Option<String> {
        match self {
            Check::Saturation { algebra, derivations, .. } if derivations.is_empty() => {
                Some(format!("saturations reached the unit of {algebra}"))
            }
            Check::Saturation { algebra, derivations, .. } => Some(format!(
                "saturations reached 1 in {algebra} under {{{}}}",
                derivations.join(", ")
            )),
            Check::Probe { result } => Some(format!("probes infeasible at degree {}", result.deg_bound)),
            _ => None,
        }
    }

    pub fn summary(&self) -> String {
        match self {
            Check::Identity { algebra, report } => {
                let mut s = format!(
                    "{} on {algebra}: {} instances, {}",
                    report.identity,
                    report.trials,
                    wire_name(&report.status)
                );
                if let Some(w) = &report.witness {
                    let inputs: Vec<String> = w.inputs.iter().map(|(n, p, e)| format!("{n} ({p}) = {e}")).collect();
                    s += &format!("\n    {}\n    lhs = {}\n    rhs = {}", inputs.join(", "), w.lhs, w.rhs);
                }
                s
            }
            Check::Saturation { algebra, derivations, report, .. } => {
                let d = if derivations.is_empty() {
                    String::new()
                } else {
                    format!(" under {{{}}}", derivations.join(", "))
                };
                format!(
                    "saturation in {algebra}{d} from {}: window {}, span {}, {} steps",
                    report.seed,
                    report.window,
                    report.basis_dim,
                    report.trace.len()
                )
            }
            Check::Probe { result } => match &result.solution {
                None => format!("probe z = {} at degree {}: infeasible", result.z, result.deg_bound),
                Some((c, d)) => format!("probe z = {} at degree {}: solution c = {c}, d = {d}", result.z, result.deg_bound),
            },
            Check::ParityWitness { trials, failure } => match failure {
                None => format!("parity-degree witness on {trials} inputs"),
                Some(f) => format!("parity-degree witness failed: {f}"),
            },
            Check::Certificate {
                target,
                deg_bound,
                status,
                terms,
                associator_value,
                ..
            } => {
                let mut s = format!(
                    "certificate for {target} at degree {deg_bound}: {}, {} terms",
                    wire_name(status),
                    terms.len()
                );
                if let Some(v) = associator_value {
                    s += &format!(", associator form = {v}");
                }
                s
            }
        }
    }
}

/// The JSON spelling of a unit enum variant.
fn wire_name<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|j| j.as_str().map(str::to_string))
        .unwrap_or_default()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub suite: Suite,
    pub verdict: Verdict,
    #[serde(flatten)]
    pub check: Check,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RunReport {
    pub config: SuiteConfig,
    pub checks: Vec<CheckEntry>,
    pub overall: Verdict,
    /// Excluded from JSON so that reports of equal runs are byte-identical.
    #[serde(skip)]
    pub wall_time: std::time::Duration,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// Human-readable summary. Passing saturations and probes are counted
    /// per group; everything else gets its own line.
    pub fn render(&self) -> String {
        let mut out = format!(
            "construction {}, suite {}, trials {}, max degree {}, seed {}\n",
            self.config.construction, self.config.suite, self.config.trials, self.config.max_deg, self.config.seed
        );
        let mut k = 0;
        while k < self.checks.len() {
            let e = &self.checks[k];
            let group = e.check.group();
            if let (Some(g), Verdict::Pass) = (&group, e.verdict) {
                let n = self.checks[k..]
                    .iter()
                    .take_while(|c| c.verdict == Verdict::Pass && c.check.group().as_ref() == Some(g))
                    .count();
                out += &format!("[pass] {n} {g}\n");
                k += n;
                continue;
            }
            out += &format!("[{}] {}\n", e.verdict, e.check.summary());
            k += 1;
        }
        out += &format!("overall: {} ({:.2?})\n", self.overall, self.wall_time);
        out
    }
}

fn identity_checks<H: SuperAlgebra>(h: &H, cfg: &CheckConfig) -> Vec<Check> {
    [
        check_identity_1(h, cfg),
        check_identity_2(h, cfg),
        check_identity_3(h, cfg),
        check_identity_4(h, cfg),
        check_grading(h, cfg),
    ]
    .into_iter()
    .map(|report| Check::Identity {
        algebra: h.name(),
        report,
    })
    .collect()
}

fn jordan(cfg: &SuiteConfig) -> Vec<Check> {
    let c = cfg.check_config();
    match cfg.construction {
        Construction::Jvec => identity_checks(&VectorType::<Rational>::new(), &c),
        Construction::Jadelta => identity_checks(&JADelta::<Rational>::default(), &c),
        Construction::Ck => identity_checks(&ChengKac::<Rational>::ck(), &c),
        Construction::Gck => identity_checks(&ChengKac::<Rational>::gck(), &c),
        Construction::Double => {
            let mut out = identity_checks(&kantor_double(DBracket::new(CurveCarrier::<Rational>::new())), &c);
            out.extend(identity_checks(
                &kantor_double(DBracket::new(GrassmannCarrier::<Rational>::new())),
                &c,
            ));
            out
        }
    }
}

fn bracket(cfg: &SuiteConfig) -> Vec<Check> {
    let c = cfg.check_config();
    let curve = DBracket::new(CurveCarrier::<Rational>::new());
    let grassmann = DBracket::new(GrassmannCarrier::<Rational>::new());
    let mut out: Vec<Check> = check_jordan_bracket(&curve, &c, AxiomForm::Standard)
        .into_iter()
        .map(|report| Check::Identity {
            algebra: curve.name(),
            report,
        })
        .collect();
    out.extend(
        check_jordan_bracket(&grassmann, &c, AxiomForm::Standard)
            .into_iter()
            .map(|report| Check::Identity {
                algebra: grassmann.name(),
                report,
            }),
    );
    out
}

fn d_saturations(cfg: &SuiteConfig, space: Space, derivs: &[DerivationSpec], stream: u64) -> Vec<Check> {
    let ideal = derivation_ideal(space, derivs).expect("Γ and A are algebras");
    let mut rng = seeds::stream(cfg.seed, &[stream]);
    (0..cfg.trials)
        .map(|_| {
            let seed: GammaEl = curve::sample_nonzero(space, cfg.max_deg, &mut rng);
            let report = d_ideal_saturate(space, derivs, &seed, cfg.window, cfg.max_window).expect("valid seed");
            let replayed = report.reached_one && replay(&ideal, &seed, &report).unwrap_or(false);
            Check::Saturation {
                algebra: space.name().to_string(),
                derivations: derivs.iter().map(|d| d.name.clone()).collect(),
                replayed,
                report,
            }
        })
        .collect()
}

fn super_saturations(cfg: &SuiteConfig, stream: u64) -> Vec<Check> {
    let mut rng = seeds::stream(cfg.seed, &[stream]);
    (0..cfg.trials)
        .map(|_| {
            let (seed, algebra) = match cfg.construction {
                Construction::Gck => (SuperSeed::sample_gck(cfg.max_deg, &mut rng), "GCK(A,Δ)"),
                _ => (SuperSeed::sample_jadelta(cfg.max_deg, &mut rng), "J(A,Δ)"),
            };
            let report = super_ideal_saturate(&seed, cfg.window, cfg.max_window).expect("valid seed");
            let replayed = report.reached_one && super_replay(&seed, &report).unwrap_or(false);
            Check::Saturation {
                algebra: algebra.into(),
                derivations: Vec::new(),
                replayed,
                report,
            }
        })
        .collect()
}

fn simplicity(cfg: &SuiteConfig) -> Vec<Check> {
    match cfg.construction {
        Construction::Jvec | Construction::Ck | Construction::Double => {
            d_saturations(cfg, Space::Gamma, &[Derivation::d()], 3)
        }
        Construction::Jadelta | Construction::Gck => {
            let mut out = d_saturations(cfg, Space::A, &Derivation::delta(), 4);
            out.extend(super_saturations(cfg, 5));
            if cfg.construction == Construction::Gck {
                let alg = ChengKac::<Rational>::gck();
                out.push(Check::Identity {
                    algebra: alg.name(),
                    report: check_w_extraction(&alg, &cfg.check_config()),
                });
            }
            out
        }
    }
}

fn noncyclic(cfg: &SuiteConfig) -> Vec<Check> {
    let bound = cfg.deg_bound.unwrap_or(DEFAULT_PROBE_BOUND);
    let mut rng = seeds::stream(cfg.seed, &[7]);
    let mut out: Vec<Check> = (0..cfg.trials)
        .map(|_| {
            let z: GammaEl = curve::sample_nonzero(Space::M, cfg.max_deg, &mut rng);
            Check::Probe {
                result: noncyclic_probe(&z, bound).expect("z is a nonzero element of M"),
            }
        })
        .collect();
    let mut rng = seeds::stream(cfg.seed, &[8]);
    let failure = (0..cfg.trials).find_map(|_| {
        let (h1, e1, u) = sample_witness_input(cfg.max_deg, &mut rng);
        match parity_degree_witness(&h1, &e1, &u) {
            Ok(w) if w.distinct_mod4 => None,
            Ok(w) => Some(format!("h1 = {h1}, e1 = {e1}, u = {u}: {w:?}")),
            Err(e) => Some(format!("h1 = {h1}, e1 = {e1}, u = {u}: {e}")),
        }
    });
    out.push(Check::ParityWitness {
        trials: cfg.trials,
        failure,
    });
    out
}

fn embedding(cfg: &SuiteConfig) -> Vec<Check> {
    let c = cfg.check_config();
    let vectors = probe_vectors::<Rational>(10, c.seed);
    let one = embed_special(&VecElem::<Rational>::one());
    let id = OpMatrix::identity();
    let bad = vectors.iter().find(|v| one.apply(v) != id.apply(v));
    let unit = CheckReport {
        identity: "embed(1) is the identity".into(),
        trials: vectors.len(),
        status: if bad.is_some() {
            CheckStatus::Counterexample
        } else {
            CheckStatus::Pass
        },
        witness: None,
    };
    let algebra = VectorType::<Rational>::new().name();
    vec![
        Check::Identity {
            algebra: algebra.clone(),
            report: check_embedding::<Rational>(&c),
        },
        Check::Identity { algebra, report: unit },
    ]
}

fn certificates(cfg: &SuiteConfig) -> Vec<Check> {
    let bound = cfg.deg_bound.unwrap_or(DEFAULT_CERTIFICATE_BOUND);
    let target = GammaEl::one();
    let cert = find_certificate(&target, bound).expect("1 lies in A");
    let found = cert.status == CertStatus::Found;
    let form = cert.associator_form();
    vec![Check::Certificate {
        target: target.to_string(),
        deg_bound: bound,
        status: cert.status,
        verified: cert.verify(),
        terms: cert
            .terms
            .iter()
            .map(|t| format!("({})*{}({})*({})", t.left, t.deriv, t.argument, t.right))
            .collect(),
        associator_form: form.iter().map(|t| t.to_string()).collect(),
        associator_value: found.then(|| evaluate_associator_form(&form).to_string()),
    }]
}

/// Runs the configured suite. Deterministic in `cfg`; `json_path` is not
/// touched here.
pub fn run_suite(cfg: &SuiteConfig) -> Result<RunReport, UsageError> {
    cfg.validate()?;
    let start = std::time::Instant::now();
    let suites: Vec<Suite> = match cfg.suite {
        Suite::All => applicable(cfg.construction).to_vec(),
        s => vec![s],
    };
    let mut checks = Vec::new();
    for suite in suites {
        let found = match suite {
            Suite::Jordan => jordan(cfg),
            Suite::Bracket => bracket(cfg),
            Suite::Simplicity => simplicity(cfg),
            Suite::Noncyclic => noncyclic(cfg),
            Suite::Embedding => embedding(cfg),
            Suite::Certificates => certificates(cfg),
            Suite::All => unreachable!("expanded above"),
        };
        checks.extend(found.into_iter().map(|check| CheckEntry {
            suite,
            verdict: check.verdict(),
            check,
        }));
    }
    Ok(RunReport {
        config: cfg.clone(),
        overall: Verdict::combine(checks.iter().map(|c| c.verdict)),
        checks,
        wall_time: start.elapsed(),
    })
}
