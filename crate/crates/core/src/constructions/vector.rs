//! `J(Γ, D) = Γ + bar(Γ)` and its subsuperalgebra `J(A, Δ) = A + bar(M)`.

use std::fmt;

use rand::RngCore;
use serde::{Deserialize, Serialize};

use crate::curve::{self, CurveElem, Derivation, Space};
use crate::error::{Error, Result};
use crate::identities::{run_patterns, CheckConfig, CheckReport};
use crate::scalar::Scalar;
use crate::superalg::{Parity, SuperAlgebra};

/// `a + bar(b)`: even component `a`, odd component `bar(b)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VecElem<S: Scalar> {
    pub even: CurveElem<S>,
    pub odd: CurveElem<S>,
}

impl<S: Scalar> VecElem<S> {
    pub fn new(even: CurveElem<S>, odd: CurveElem<S>) -> Self {
        Self { even, odd }
    }

    pub fn zero() -> Self {
        Self::new(CurveElem::zero(), CurveElem::zero())
    }

    pub fn one() -> Self {
        Self::even(CurveElem::one())
    }

    pub fn even(a: CurveElem<S>) -> Self {
        Self::new(a, CurveElem::zero())
    }

    /// `bar(b)`
    pub fn bar(b: CurveElem<S>) -> Self {
        Self::new(CurveElem::zero(), b)
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.even + &o.even, &self.odd + &o.odd)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.even, -&self.odd)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.even.scale(c), self.odd.scale(c))
    }

    pub fn parity(&self) -> Option<Parity> {
        match (self.even.is_zero(), self.odd.is_zero()) {
            (_, true) => Some(Parity::Even),
            (true, false) => Some(Parity::Odd),
            (false, false) => None,
        }
    }

    pub fn in_jadelta(&self) -> bool {
        self.even.in_space(Space::A) && self.odd.in_space(Space::M)
    }
}

impl<S: Scalar> fmt::Display for VecElem<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.even.is_zero(), self.odd.is_zero()) {
            (_, true) => write!(f, "{}", self.even),
            (true, false) => write!(f, "bar({})", self.odd),
            (false, false) => write!(f, "{} + bar({})", self.even, self.odd),
        }
    }
}

/// `a·b = ab`, `a·bar(b) = bar(a)·b = bar(ab)`, `bar(a)·bar(b) = D(a)b - aD(b)`.
pub fn jvec_mul<S: Scalar>(u: &VecElem<S>, v: &VecElem<S>) -> VecElem<S> {
    let mut even = &u.even * &v.even;
    if !u.odd.is_zero() && !v.odd.is_zero() {
        even = even + u.odd.derive() * &v.odd - &u.odd * v.odd.derive();
    }
    let odd = &u.even * &v.odd + &u.odd * &v.even;
    VecElem::new(even, odd)
}

/// The superalgebra of vector type `J(Γ, D)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct VectorType<S>(std::marker::PhantomData<S>);

impl<S> VectorType<S> {
    pub fn new() -> Self {
        Self(std::marker::PhantomData)
    }
}

macro_rules! vec_elem_linear_ops {
    () => {
        fn zero(&self) -> VecElem<S> {
            VecElem::zero()
        }
        fn unit(&self) -> Option<VecElem<S>> {
            Some(VecElem::one())
        }
        fn add(&self, a: &VecElem<S>, b: &VecElem<S>) -> VecElem<S> {
            a.add(b)
        }
        fn neg(&self, a: &VecElem<S>) -> VecElem<S> {
            a.neg()
        }
        fn scale(&self, a: &VecElem<S>, c: &S) -> VecElem<S> {
            a.scale(c)
        }
        fn parity(&self, a: &VecElem<S>) -> Option<Parity> {
            a.parity()
        }
        fn split(&self, a: &VecElem<S>) -> (VecElem<S>, VecElem<S>) {
            (VecElem::even(a.even.clone()), VecElem::bar(a.odd.clone()))
        }
    };
}

impl<S: Scalar> SuperAlgebra for VectorType<S> {
    type Scalar = S;
    type Elem = VecElem<S>;

    fn name(&self) -> String {
        "J(Γ,D)".into()
    }
    vec_elem_linear_ops!();
    fn mul(&self, a: &VecElem<S>, b: &VecElem<S>) -> VecElem<S> {
        jvec_mul(a, b)
    }
    fn sample(&self, parity: Parity, max_deg: usize, rng: &mut dyn RngCore) -> VecElem<S> {
        let g = curve::sample(Space::Gamma, max_deg, rng);
        match parity {
            Parity::Even => VecElem::even(g),
            Parity::Odd => VecElem::bar(g),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductPath {
    /// Compute inside `J(Γ, D)`.
    Direct,
    /// Decompose odd parts as `x a + y b` and use the structure constants
    /// `ax_i · bx_j = γ_ij ab + D_ij(a)b - aD_ji(b)`.
    StructureConstants,
}

/// `J(A, Δ)` with the odd product given by structure constants `γ_ij` and
/// the derivations `D11, D12 = D21, D22`.
#[derive(Debug, Clone)]
pub struct JADelta<S: Scalar> {
    gamma12: CurveElem<S>,
    gamma21: CurveElem<S>,
    path: ProductPath,
    d11: Derivation<S>,
    d12: Derivation<S>,
    d22: Derivation<S>,
}

impl<S: Scalar> Default for JADelta<S> {
    fn default() -> Self {
        Self::new(ProductPath::StructureConstants)
    }
}

impl<S: Scalar> JADelta<S> {
    /// `γ12 = 1 + y^4`; skew-symmetry of the odd product forces `γ21 = -γ12`.
    pub fn new(path: ProductPath) -> Self {
        let g: CurveElem<S> = CurveElem::from_poly(crate::poly::Polynomial::from_ints(&[1, 0, 0, 0, 1]));
        Self {
            gamma21: -&g,
            gamma12: g,
            path,
            d11: Derivation::d11(),
            d12: Derivation::d12(),
            d22: Derivation::d22(),
        }
    }

    /// Replaces `γ12` only (`γ21` is kept); used to check that corrupted
    /// structure constants are detected.
    pub fn with_gamma12(mut self, gamma12: CurveElem<S>) -> Self {
        self.gamma12 = gamma12;
        self
    }

    pub fn gamma12(&self) -> &CurveElem<S> {
        &self.gamma12
    }

    pub fn gamma21(&self) -> &CurveElem<S> {
        &self.gamma21
    }

    pub fn path(&self) -> ProductPath {
        self.path
    }

    /// Checked product along `path`.
    pub fn mul_checked(&self, u: &VecElem<S>, v: &VecElem<S>, path: ProductPath) -> Result<VecElem<S>> {
        for e in [u, v] {
            if !e.in_jadelta() {
                return Err(Error::NotInJAlgebra(e.to_string()));
            }
        }
        Ok(match path {
            ProductPath::Direct => jvec_mul(u, v),
            ProductPath::StructureConstants => self.structure_product(u, v),
        })
    }

    /// `ax_i · bx_j = γ_ij ab + D_ij(a) b - a D_ji(b)` for `i, j` in `{x, y}`.
    fn odd_structure(&self, i: usize, j: usize, a: &CurveElem<S>, b: &CurveElem<S>) -> CurveElem<S> {
        let d = |k: usize, l: usize| match (k, l) {
            (0, 0) => &self.d11,
            (1, 1) => &self.d22,
            _ => &self.d12,
        };
        let mut out = d(i, j).apply(a) * b - a * d(j, i).apply(b);
        let gamma = match (i, j) {
            (0, 1) => Some(&self.gamma12),
            (1, 0) => Some(&self.gamma21),
            _ => None,
        };
        if let Some(g) = gamma {
            out = out + g * &(a * b);
        }
        out
    }

    fn structure_product(&self, u: &VecElem<S>, v: &VecElem<S>) -> VecElem<S> {
        let mut even = &u.even * &v.even;
        if !u.odd.is_zero() && !v.odd.is_zero() {
            let (ua, ub) = module_parts(&u.odd);
            let (va, vb) = module_parts(&v.odd);
            let us = [ua, ub];
            let vs = [va, vb];
            for (i, a) in us.iter().enumerate() {
                for (j, b) in vs.iter().enumerate() {
                    if !a.is_zero() && !b.is_zero() {
                        even = even + self.odd_structure(i, j, a, b);
                    }
                }
            }
        }
        let odd = &u.even * &v.odd + &u.odd * &v.even;
        VecElem::new(even, odd)
    }
}

/// `(a, b)` with `m = x a + y b`, taken from the `M`-component of `m`.
fn module_parts<S: Scalar>(m: &CurveElem<S>) -> (CurveElem<S>, CurveElem<S>) {
    m.classify()
        .m_part
        .split_module()
        .expect("the M-component always splits")
}

impl<S: Scalar> SuperAlgebra for JADelta<S> {
    type Scalar = S;
    type Elem = VecElem<S>;

    fn name(&self) -> String {
        "J(A,Δ)".into()
    }
    vec_elem_linear_ops!();
    /// Inputs are assumed to lie in `J(A, Δ)`; use [`JADelta::mul_checked`]
    /// for validated products.
    fn mul(&self, a: &VecElem<S>, b: &VecElem<S>) -> VecElem<S> {
        match self.path {
            ProductPath::Direct => jvec_mul(a, b),
            ProductPath::StructureConstants => self.structure_product(a, b),
        }
    }
    fn sample(&self, parity: Parity, max_deg: usize, rng: &mut dyn RngCore) -> VecElem<S> {
        match parity {
            Parity::Even => VecElem::even(curve::sample(Space::A, max_deg, rng)),
            Parity::Odd => VecElem::bar(curve::sample(Space::M, max_deg, rng)),
        }
    }
}

/// Compares the structure-constant product with the product computed
/// inside `J(Γ, D)` on random pairs of odd elements of `J(A, Δ)`.
pub fn check_dual_path<S: Scalar>(alg: &JADelta<S>, cfg: &CheckConfig) -> CheckReport {
    let odd = vec![vec![Parity::Odd, Parity::Odd]];
    run_patterns(alg, "structure constants agree with J(Γ,D)", &["u", "v"], &odd, false, cfg, |e, _| {
        let direct = alg.mul_checked(&e[0], &e[1], ProductPath::Direct).ok()?;
        let structural = alg.mul_checked(&e[0], &e[1], ProductPath::StructureConstants).ok()?;
        (direct != structural).then(|| (structural.to_string(), direct.to_string()))
    })
}
