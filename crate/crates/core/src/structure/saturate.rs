//! Ideal saturation inside degree windows.
//!
//! Starting from a seed, the engine closes its linear span under a fixed list
//! of linear operations (multiplication by generators, derivations), skipping
//! every image that leaves the window. Only images that enlarge the span are
//! expanded further, so the work is bounded by the window dimension.

use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::constructions::{ChengKac, CkElem, CkVariant, JADelta, VecElem};
use crate::curve::{CurveElem, Derivation, Space};
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::superalg::{Parity, SuperAlgebra};
use crate::{GammaEl, Rational};

/// A vector space with a degree filtration and a list of linear operations.
pub trait SaturationSpace {
    type Elem: Clone + PartialEq + fmt::Display;

    /// Coordinates of `e` inside the window, or `None` if `e` does not fit.
    fn coords(&self, e: &Self::Elem, window: usize) -> Option<Vec<Rational>>;
    fn op_names(&self) -> Vec<String>;
    fn apply(&self, op: usize, e: &Self::Elem) -> Self::Elem;
    /// The element whose membership decides the run (the unit).
    fn target(&self) -> Self::Elem;
    fn combine(&self, terms: &[(Rational, Self::Elem)]) -> Self::Elem;
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    /// Index of the element this step starts from; `0` is the seed.
    pub parent: usize,
    pub op: String,
    pub element: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SaturationReport {
    pub reached_one: bool,
    pub window: usize,
    pub basis_dim: usize,
    pub seed: String,
    /// Elements `1, 2, ...` of the derivation; element `0` is the seed.
    pub trace: Vec<TraceStep>,
    /// `(element index, coefficient)` with `Σ coefficient * element = 1`.
    pub combination: Vec<(usize, String)>,
}

struct Gen<E> {
    parent: usize,
    op: usize,
    elem: E,
}

/// The closed span reached inside one window.
pub struct SpanState<E> {
    pub window: usize,
    gens: Vec<Gen<E>>,
    echelon: Echelon<Rational>,
    lambda: Option<Vec<Rational>>,
}

impl<E: Clone> SpanState<E> {
    /// The independent elements spanning the saturated subspace.
    pub fn basis(&self) -> Vec<E> {
        self.gens.iter().map(|g| g.elem.clone()).collect()
    }

    pub fn reached(&self) -> bool {
        self.lambda.is_some()
    }

    pub fn contains_coords(&self, v: &[Rational]) -> bool {
        self.echelon.contains(v)
    }
}

/// Saturates inside a single window. With `stop_at_target`, stops as soon as
/// the target lies in the span; otherwise runs to closure.
pub fn saturate_window<T: SaturationSpace>(
    space: &T,
    seed: &T::Elem,
    window: usize,
    stop_at_target: bool,
) -> SpanState<T::Elem> {
    let target = space.target();
    let target_coords = space.coords(&target, window);
    let mut state = SpanState {
        window,
        gens: Vec::new(),
        echelon: Echelon::new(0),
        lambda: None,
    };
    let Some(seed_coords) = space.coords(seed, window) else {
        return state;
    };
    state.echelon = Echelon::new(seed_coords.len());
    state.echelon.insert(&seed_coords);
    state.gens.push(Gen {
        parent: 0,
        op: usize::MAX,
        elem: seed.clone(),
    });
    let ops = space.op_names().len();
    let check = |state: &mut SpanState<T::Elem>| {
        if state.lambda.is_none() {
            if let Some(t) = &target_coords {
                state.lambda = state.echelon.express(t);
            }
        }
        stop_at_target && state.lambda.is_some()
    };
    if check(&mut state) {
        return state;
    }
    let mut next = 0;
    while next < state.gens.len() {
        for op in 0..ops {
            let img = space.apply(op, &state.gens[next].elem);
            let Some(c) = space.coords(&img, window) else {
                continue;
            };
            if state.echelon.insert(&c) {
                state.gens.push(Gen {
                    parent: next,
                    op,
                    elem: img,
                });
                if check(&mut state) {
                    return state;
                }
            }
        }
        next += 1;
    }
    check(&mut state);
    state
}

/// Runs [`saturate_window`] at `window, window + 4, ...` up to `max_window`.
pub fn saturate<T: SaturationSpace>(
    space: &T,
    seed: &T::Elem,
    window: usize,
    max_window: usize,
) -> SaturationReport {
    let mut w = window;
    loop {
        let state = saturate_window(space, seed, w, true);
        if state.reached() || w + 4 > max_window {
            return report(space, seed, &state);
        }
        w += 4;
    }
}

fn report<T: SaturationSpace>(space: &T, seed: &T::Elem, state: &SpanState<T::Elem>) -> SaturationReport {
    let names = space.op_names();
    let mut out = SaturationReport {
        reached_one: state.reached(),
        window: state.window,
        basis_dim: state.echelon.rank(),
        seed: seed.to_string(),
        trace: Vec::new(),
        combination: Vec::new(),
    };
    let Some(lambda) = &state.lambda else {
        return out;
    };
    // keep the elements used in the combination and their ancestors
    let mut keep = vec![false; state.gens.len()];
    for (i, l) in lambda.iter().enumerate() {
        let mut k = i;
        if l.is_zero() {
            continue;
        }
        while !keep[k] {
            keep[k] = true;
            if k == 0 {
                break;
            }
            k = state.gens[k].parent;
        }
    }
    keep[0] = true;
    let mut index = vec![usize::MAX; state.gens.len()];
    index[0] = 0;
    for (k, g) in state.gens.iter().enumerate().skip(1) {
        if keep[k] {
            index[k] = out.trace.len() + 1;
            out.trace.push(TraceStep {
                parent: index[g.parent],
                op: names[g.op].clone(),
                element: g.elem.to_string(),
            });
        }
    }
    out.combination = lambda
        .iter()
        .enumerate()
        .filter(|(_, l)| !l.is_zero())
        .map(|(k, l)| (index[k], l.to_string()))
        .collect();
    out
}

/// Replays a report: recomputes every step from the seed, compares it with
/// the recorded element and checks that the combination equals the target.
pub fn replay<T: SaturationSpace>(space: &T, seed: &T::Elem, rep: &SaturationReport) -> Result<bool> {
    if !rep.reached_one {
        return Ok(false);
    }
    let names = space.op_names();
    let mut elems = vec![seed.clone()];
    for (i, step) in rep.trace.iter().enumerate() {
        let op = names
            .iter()
            .position(|n| *n == step.op)
            .ok_or_else(|| Error::Invalid(format!("unknown operation {:?}", step.op)))?;
        let parent = elems
            .get(step.parent)
            .ok_or_else(|| Error::Invalid(format!("step {} has no parent {}", i + 1, step.parent)))?;
        let e = space.apply(op, parent);
        if e.to_string() != step.element {
            return Ok(false);
        }
        elems.push(e);
    }
    let mut terms = Vec::new();
    for (k, c) in &rep.combination {
        let c: Rational = c
            .parse()
            .map_err(|_| Error::Invalid(format!("bad coefficient {c:?}")))?;
        let e = elems
            .get(*k)
            .ok_or_else(|| Error::Invalid(format!("no element {k}")))?;
        terms.push((c, e.clone()));
    }
    Ok(space.combine(&terms) == space.target())
}

/// Coordinates `[p_0..p_w, q_0..q_{w-1}]` of an element of degree at most `w`.
pub fn gamma_coords(e: &GammaEl, w: usize) -> Option<Vec<Rational>> {
    if e.degree() > crate::poly::Degree::Finite(w) {
        return None;
    }
    let mut v = Vec::with_capacity(2 * w + 1);
    v.extend((0..=w).map(|i| e.p().coeff(i)));
    v.extend((0..w).map(|i| e.q().coeff(i)));
    Some(v)
}

/// Γ or A with multiplication by algebra generators and a set of derivations.
pub struct DerivationIdeal {
    space: Space,
    derivs: Vec<Derivation<Rational>>,
}

impl DerivationIdeal {
    fn generators(&self) -> Vec<(String, GammaEl)> {
        match self.space {
            Space::A => vec![("*y^2".into(), CurveElem::y_pow(2)), ("*x*y".into(), CurveElem::x_y_pow(1))],
            _ => vec![("*y".into(), CurveElem::y()), ("*x".into(), CurveElem::x())],
        }
    }
}

impl SaturationSpace for DerivationIdeal {
    type Elem = GammaEl;

    fn coords(&self, e: &GammaEl, window: usize) -> Option<Vec<Rational>> {
        gamma_coords(e, window)
    }
    fn op_names(&self) -> Vec<String> {
        self.generators()
            .into_iter()
            .map(|(n, _)| n)
            .chain(self.derivs.iter().map(|d| d.name.clone()))
            .collect()
    }
    fn apply(&self, op: usize, e: &GammaEl) -> GammaEl {
        let gens = self.generators();
        match gens.get(op) {
            Some((_, g)) => e * g,
            None => self.derivs[op - gens.len()].apply(e),
        }
    }
    fn target(&self) -> GammaEl {
        CurveElem::one()
    }
    fn combine(&self, terms: &[(Rational, GammaEl)]) -> GammaEl {
        terms
            .iter()
            .fold(CurveElem::zero(), |acc, (c, e)| &acc + &e.scale(c))
    }
}

/// The smallest ideal of `space` (Γ or A) containing `seed` and stable under
/// `derivs`, explored inside degree windows.
pub fn derivation_ideal(space: Space, derivs: &[Derivation<Rational>]) -> Result<DerivationIdeal> {
    if space == Space::M {
        return Err(Error::Invalid("M is not an algebra".into()));
    }
    Ok(DerivationIdeal {
        space,
        derivs: derivs.to_vec(),
    })
}

pub fn d_ideal_saturate(
    space: Space,
    derivs: &[Derivation<Rational>],
    seed: &GammaEl,
    window: usize,
    max_window: usize,
) -> Result<SaturationReport> {
    let ideal = derivation_ideal(space, derivs)?;
    if seed.is_zero() {
        return Err(Error::ZeroSeed);
    }
    if !seed.in_space(space) {
        return Err(Error::NotInSpace {
            element: seed.to_string(),
            space: space.name(),
        });
    }
    Ok(saturate(&ideal, seed, window, max_window.max(window)))
}

/// Ideal generation in `J(A, Δ)` by multiplication with `1, y^2, xy, bar(x), bar(y)`.
pub struct JADeltaIdeal {
    alg: JADelta<Rational>,
    gens: Vec<(String, VecElem<Rational>)>,
}

impl JADeltaIdeal {
    pub fn new() -> Self {
        let g = |s: &str| s.parse::<GammaEl>().expect("generator");
        Self {
            alg: JADelta::default(),
            gens: vec![
                ("*y^2".into(), VecElem::even(g("y^2"))),
                ("*x*y".into(), VecElem::even(g("x*y"))),
                ("*bar(x)".into(), VecElem::bar(g("x"))),
                ("*bar(y)".into(), VecElem::bar(g("y"))),
            ],
        }
    }
}

impl Default for JADeltaIdeal {
    fn default() -> Self {
        Self::new()
    }
}

impl SaturationSpace for JADeltaIdeal {
    type Elem = VecElem<Rational>;

    fn coords(&self, e: &VecElem<Rational>, window: usize) -> Option<Vec<Rational>> {
        let mut v = gamma_coords(&e.even, window)?;
        v.extend(gamma_coords(&e.odd, window)?);
        Some(v)
    }
    fn op_names(&self) -> Vec<String> {
        self.gens.iter().map(|(n, _)| n.clone()).collect()
    }
    fn apply(&self, op: usize, e: &VecElem<Rational>) -> VecElem<Rational> {
        self.alg.mul(e, &self.gens[op].1)
    }
    fn target(&self) -> VecElem<Rational> {
        VecElem::one()
    }
    fn combine(&self, terms: &[(Rational, VecElem<Rational>)]) -> VecElem<Rational> {
        terms.iter().fold(VecElem::zero(), |acc, (c, e)| acc.add(&e.scale(c)))
    }
}

/// Ideal generation in `GCK(A, Δ)`: the `J(A, Δ)` generators together with
/// `w_i`, `x_i bar(x)` and `x_i bar(y)`.
pub struct GckIdeal {
    alg: ChengKac<Rational>,
    gens: Vec<(String, CkElem<Rational>)>,
}

impl GckIdeal {
    pub fn new() -> Self {
        let g = |s: &str| s.parse::<GammaEl>().expect("generator");
        let mut gens = vec![
            ("*y^2".to_string(), CkElem::scalar_part(g("y^2"))),
            ("*x*y".into(), CkElem::scalar_part(g("x*y"))),
            ("*bar(x)".into(), CkElem::bar(g("x"))),
            ("*bar(y)".into(), CkElem::bar(g("y"))),
        ];
        for i in 1..=3 {
            gens.push((format!("*w{i}(1)"), CkElem::w(i, g("1"))));
        }
        for i in 1..=3 {
            gens.push((format!("*x{i}(x)"), CkElem::x(i, g("x"))));
            gens.push((format!("*x{i}(y)"), CkElem::x(i, g("y"))));
        }
        Self {
            alg: ChengKac::new(CkVariant::Gck),
            gens,
        }
    }
}

impl Default for GckIdeal {
    fn default() -> Self {
        Self::new()
    }
}

impl SaturationSpace for GckIdeal {
    type Elem = CkElem<Rational>;

    fn coords(&self, e: &CkElem<Rational>, window: usize) -> Option<Vec<Rational>> {
        let mut v = Vec::new();
        for s in [&e.a, &e.w[0], &e.w[1], &e.w[2], &e.b, &e.x[0], &e.x[1], &e.x[2]] {
            v.extend(gamma_coords(s, window)?);
        }
        Some(v)
    }
    fn op_names(&self) -> Vec<String> {
        self.gens.iter().map(|(n, _)| n.clone()).collect()
    }
    fn apply(&self, op: usize, e: &CkElem<Rational>) -> CkElem<Rational> {
        self.alg.mul(e, &self.gens[op].1)
    }
    fn target(&self) -> CkElem<Rational> {
        CkElem::scalar_part(CurveElem::one())
    }
    fn combine(&self, terms: &[(Rational, CkElem<Rational>)]) -> CkElem<Rational> {
        terms.iter().fold(CkElem::zero(), |acc, (c, e)| acc.add(&e.scale(c)))
    }
}

/// Seed of a super-ideal saturation.
#[derive(Debug, Clone, PartialEq)]
pub enum SuperSeed {
    JADelta(VecElem<Rational>),
    Gck(CkElem<Rational>),
}

impl fmt::Display for SuperSeed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuperSeed::JADelta(e) => write!(f, "{e}"),
            SuperSeed::Gck(e) => write!(f, "{e}"),
        }
    }
}

pub fn super_ideal_saturate(seed: &SuperSeed, window: usize, max_window: usize) -> Result<SaturationReport> {
    let max_window = max_window.max(window);
    match seed {
        SuperSeed::JADelta(e) => {
            if e.is_zero() {
                return Err(Error::ZeroSeed);
            }
            if e.parity().is_none() {
                return Err(Error::Inhomogeneous);
            }
            if !e.in_jadelta() {
                return Err(Error::NotInJAlgebra(e.to_string()));
            }
            Ok(saturate(&JADeltaIdeal::new(), e, window, max_window))
        }
        SuperSeed::Gck(e) => {
            if e.is_zero() {
                return Err(Error::ZeroSeed);
            }
            let alg = ChengKac::<Rational>::gck();
            if alg.parity(e).is_none() {
                return Err(Error::Inhomogeneous);
            }
            if let (false, Some(v)) = e.gck_project() {
                return Err(Error::NotInJAlgebra(format!("{e}: slot {} = {} not in {}", v.slot, v.element, v.required.name())));
            }
            Ok(saturate(&GckIdeal::new(), e, window, max_window))
        }
    }
}

/// Replays a report produced by [`super_ideal_saturate`].
pub fn super_replay(seed: &SuperSeed, rep: &SaturationReport) -> Result<bool> {
    match seed {
        SuperSeed::JADelta(e) => replay(&JADeltaIdeal::new(), e, rep),
        SuperSeed::Gck(e) => replay(&GckIdeal::new(), e, rep),
    }
}

impl SuperSeed {
    /// Random nonzero homogeneous element of `J(A, Δ)` of random parity.
    pub fn sample_jadelta<R: Rng + ?Sized>(max_deg: usize, rng: &mut R) -> Self {
        let alg = JADelta::<Rational>::default();
        SuperSeed::JADelta(sample_homogeneous(&alg, max_deg, rng))
    }

    /// Random nonzero homogeneous element of `GCK(A, Δ)` of random parity.
    pub fn sample_gck<R: Rng + ?Sized>(max_deg: usize, rng: &mut R) -> Self {
        let alg = ChengKac::<Rational>::gck();
        SuperSeed::Gck(sample_homogeneous(&alg, max_deg, rng))
    }
}

fn sample_homogeneous<H: SuperAlgebra, R: Rng + ?Sized>(alg: &H, max_deg: usize, rng: &mut R) -> H::Elem {
    let parity = if rng.gen::<bool>() { Parity::Odd } else { Parity::Even };
    // odd parts live in M, which needs degree at least 1
    let max_deg = max_deg.max(1);
    let mut seed = rng.gen::<u64>();
    loop {
        let mut sub = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let e = alg.sample(parity, max_deg, &mut sub);
        if e != alg.zero() {
            return e;
        }
        seed = seed.wrapping_add(1);
    }
}
