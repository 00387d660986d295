//! Randomized exact verification of the Jordan superidentities.
//!
//! Operator identities are checked pointwise: `t R_a R_b` means `(t a) b`,
//! i.e. operators written left to right act in that order. Every parity
//! pattern of the inputs is covered with `trials` samples each; the first
//! failing instance (in pattern-then-trial order) is reported verbatim.

use rayon::prelude::*;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::seeds;
use crate::superalg::{sign_flip, Parity, SuperAlgebra};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckStatus {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "counterexample")]
    Counterexample,
    #[serde(rename = "vacuous-pass")]
    VacuousPass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// `(name, parity, element)` for each sampled input.
    pub inputs: Vec<(String, Parity, String)>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub identity: String,
    /// Number of evaluated instances over all parity patterns.
    pub trials: usize,
    pub status: CheckStatus,
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Counterexample
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckConfig {
    pub trials: usize,
    pub max_deg: usize,
    pub seed: u64,
}

impl CheckConfig {
    pub fn new(trials: usize, max_deg: usize, seed: u64) -> Self {
        Self {
            trials: trials.max(1),
            max_deg,
            seed,
        }
    }
}

/// Stable per-identity stream ids, so reports do not depend on call order.
fn stream_id(identity: &str) -> u64 {
    identity
        .bytes()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// Runs `eval` on every parity pattern of `names`, plus a test vector `t` of
/// random parity when `with_test_vector` is set. `eval` receives the
/// sampled inputs (with `t` last) and returns `(lhs, rhs)`.
pub fn run_check<H, F>(
    h: &H,
    identity: &str,
    names: &[&str],
    with_test_vector: bool,
    cfg: &CheckConfig,
    eval: F,
) -> CheckReport
where
    H: SuperAlgebra,
    F: Fn(&[H::Elem], &[Parity]) -> (H::Elem, H::Elem) + Sync,
{
    run_judged(h, identity, names, with_test_vector, cfg, |e, p| {
        let (lhs, rhs) = eval(e, p);
        (lhs != rhs).then(|| (h.describe(&lhs), h.describe(&rhs)))
    })
}

/// Like [`run_check`], but `judge` decides failure itself and returns the
/// witness sides as text.
pub fn run_judged<H, F>(
    h: &H,
    identity: &str,
    names: &[&str],
    with_test_vector: bool,
    cfg: &CheckConfig,
    judge: F,
) -> CheckReport
where
    H: SuperAlgebra,
    F: Fn(&[H::Elem], &[Parity]) -> Option<(String, String)> + Sync,
{
    run_patterns(h, identity, names, &Parity::patterns(names.len()), with_test_vector, cfg, judge)
}

/// Like [`run_judged`], restricted to the given parity patterns.
pub fn run_patterns<H, F>(
    h: &H,
    identity: &str,
    names: &[&str],
    patterns: &[Vec<Parity>],
    with_test_vector: bool,
    cfg: &CheckConfig,
    judge: F,
) -> CheckReport
where
    H: SuperAlgebra,
    F: Fn(&[H::Elem], &[Parity]) -> Option<(String, String)> + Sync,
{
    let trials = cfg.trials.max(1);
    let sid = stream_id(identity);
    let total = patterns.len() * trials;
    let first_failure = (0..total)
        .into_par_iter()
        .filter_map(|idx| {
            let (pi, trial) = (idx / trials, idx % trials);
            let mut rng = seeds::stream(cfg.seed, &[sid, pi as u64, trial as u64]);
            let mut parities = patterns[pi].clone();
            if with_test_vector {
                parities.push(if rng.gen::<bool>() { Parity::Odd } else { Parity::Even });
            }
            let inputs: Vec<H::Elem> = parities
                .iter()
                .map(|&p| h.sample(p, cfg.max_deg, &mut rng))
                .collect();
            judge(&inputs, &parities).map(|(lhs, rhs)| {
                let mut labels: Vec<String> = names.iter().map(|s| s.to_string()).collect();
                if with_test_vector {
                    labels.push("t".into());
                }
                Witness {
                    inputs: labels
                        .into_iter()
                        .zip(parities.iter().copied())
                        .zip(inputs.iter())
                        .map(|((n, p), e)| (n, p, h.describe(e)))
                        .collect(),
                    lhs,
                    rhs,
                }
            })
        })
        .find_first(|_| true);
    CheckReport {
        identity: identity.to_string(),
        trials: total,
        status: if first_failure.is_some() {
            CheckStatus::Counterexample
        } else {
            CheckStatus::Pass
        },
        witness: first_failure,
    }
}

/// `a b = (-1)^{p(a)p(b)} b a`
pub fn check_identity_1<H: SuperAlgebra>(h: &H, cfg: &CheckConfig) -> CheckReport {
    run_check(h, "supercommutativity", &["a", "b"], false, cfg, |e, p| {
        let lhs = h.mul(&e[0], &e[1]);
        let rhs = h.signed(&h.mul(&e[1], &e[0]), sign_flip(&[(p[0], p[1])]));
        (lhs, rhs)
    })
}

/// `R_{a^2} R_a = R_a R_{a^2}`, pointwise: `(t a^2) a = (t a) a^2`
pub fn check_identity_2<H: SuperAlgebra>(h: &H, cfg: &CheckConfig) -> CheckReport {
    run_check(h, "R_{a^2} R_a = R_a R_{a^2}", &["a"], true, cfg, |e, _| {
        let (a, t) = (&e[0], &e[1]);
        let a2 = h.mul(a, a);
        (h.mul(&h.mul(t, &a2), a), h.mul(&h.mul(t, a), &a2))
    })
}

/// Evaluates both sides of the linearized Jordan superidentity at `t`.
pub fn identity_3_sides<H: SuperAlgebra>(
    h: &H,
    a: &H::Elem,
    b: &H::Elem,
    c: &H::Elem,
    t: &H::Elem,
    p: [Parity; 3],
) -> (H::Elem, H::Elem) {
    let [pa, pb, pc] = p;
    let m = |x: &H::Elem, y: &H::Elem| h.mul(x, y);
    // t R_a R_b R_c + s1 t R_c R_b R_a + s2 t R_{(ac)b}
    let l1 = m(&m(&m(t, a), b), c);
    let l2 = h.signed(&m(&m(&m(t, c), b), a), sign_flip(&[(pa, pb), (pa, pc), (pb, pc)]));
    let l3 = h.signed(&m(t, &m(&m(a, c), b)), sign_flip(&[(pb, pc)]));
    // t R_a R_{bc} + s3 t R_b R_{ac} + s4 t R_c R_{ab}
    let r1 = m(&m(t, a), &m(b, c));
    let r2 = h.signed(&m(&m(t, b), &m(a, c)), sign_flip(&[(pa, pb)]));
    let r3 = h.signed(&m(&m(t, c), &m(a, b)), sign_flip(&[(pa, pc), (pb, pc)]));
    (h.add(&h.add(&l1, &l2), &l3), h.add(&h.add(&r1, &r2), &r3))
}

pub fn check_identity_3<H: SuperAlgebra>(h: &H, cfg: &CheckConfig) -> CheckReport {
    run_check(h, "linearized Jordan identity", &["a", "b", "c"], true, cfg, |e, p| {
        identity_3_sides(h, &e[0], &e[1], &e[2], &e[3], [p[0], p[1], p[2]])
    })
}

/// `(x, tz, y) = (-1)^{p(x)p(t)} t (x, z, y) + (-1)^{p(y)p(z)} (x, t, y) z`
pub fn check_identity_4<H: SuperAlgebra>(h: &H, cfg: &CheckConfig) -> CheckReport {
    run_check(h, "associator derivation rule", &["x", "t", "z", "y"], false, cfg, |e, p| {
        let (x, t, z, y) = (&e[0], &e[1], &e[2], &e[3]);
        let lhs = h.associator(x, &h.mul(t, z), y);
        let r1 = h.signed(&h.mul(t, &h.associator(x, z, y)), sign_flip(&[(p[0], p[1])]));
        let r2 = h.signed(&h.mul(&h.associator(x, t, y), z), sign_flip(&[(p[3], p[2])]));
        (lhs, h.add(&r1, &r2))
    })
}

/// Products of homogeneous elements land in the predicted component.
pub fn check_grading<H: SuperAlgebra>(h: &H, cfg: &CheckConfig) -> CheckReport {
    run_judged(h, "grading closure", &["a", "b"], false, cfg, |e, p| {
        let prod = h.mul(&e[0], &e[1]);
        let expected = p[0].xor(p[1]);
        match h.parity(&prod) {
            Some(q) if q == expected || prod == h.zero() => None,
            got => Some((
                format!("{} (parity {})", h.describe(&prod), got.map_or("mixed".into(), |q| q.to_string())),
                format!("parity {expected}"),
            )),
        }
    })
}

/// `1` is a two-sided unit on random elements of both parities.
pub fn check_unit<H: SuperAlgebra>(h: &H, cfg: &CheckConfig) -> CheckReport {
    let one = h.unit();
    run_judged(h, "unit", &["a"], false, cfg, |e, _| {
        let Some(one) = &one else {
            return Some(("no unit".into(), h.describe(&e[0])));
        };
        [h.mul(one, &e[0]), h.mul(&e[0], one)]
            .into_iter()
            .find(|v| v != &e[0])
            .map(|v| (h.describe(&v), h.describe(&e[0])))
    })
}

/// The four Jordan superidentity checks in order.
pub fn jordan_suite<H: SuperAlgebra>(h: &H, cfg: &CheckConfig) -> Vec<CheckReport> {
    vec![
        check_identity_1(h, cfg),
        check_identity_2(h, cfg),
        check_identity_3(h, cfg),
        check_identity_4(h, cfg),
    ]
}
