//! The Cheng–Kac superalgebra `CK(Γ, D)` and its subsuperalgebra `GCK(A, Δ)`.
//!
//! Even part `Γ + w1Γ + w2Γ + w3Γ`, odd part `bar(Γ) + x1 bar(Γ) + x2 bar(Γ) + x3 bar(Γ)`.
//! Products of an odd element by an even one on the right are defined by
//! supercommutativity: `o · e = e · o`.

use std::fmt;
use std::str::FromStr;

use rand::RngCore;

use crate::curve::{self, CurveElem, Space};
use crate::error::{Error, Result};
use crate::expr;
use crate::identities::{run_judged, run_patterns, CheckConfig, CheckReport};
use crate::scalar::Scalar;
use crate::superalg::{Parity, SuperAlgebra};

/// `a + Σ w_i a_i + bar(b) + Σ x_i bar(b_i)`
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CkElem<S: Scalar> {
    pub a: CurveElem<S>,
    pub w: [CurveElem<S>; 3],
    pub b: CurveElem<S>,
    pub x: [CurveElem<S>; 3],
}

fn map3<S: Scalar>(f: impl Fn(usize) -> CurveElem<S>) -> [CurveElem<S>; 3] {
    [f(0), f(1), f(2)]
}

impl<S: Scalar> CkElem<S> {
    pub fn zero() -> Self {
        Self {
            a: CurveElem::zero(),
            w: map3(|_| CurveElem::zero()),
            b: CurveElem::zero(),
            x: map3(|_| CurveElem::zero()),
        }
    }

    pub fn scalar_part(a: CurveElem<S>) -> Self {
        Self { a, ..Self::zero() }
    }

    /// `w_i a` for `i` in `1..=3`.
    pub fn w(i: usize, a: CurveElem<S>) -> Self {
        let mut e = Self::zero();
        e.w[i - 1] = a;
        e
    }

    /// `bar(b)`
    pub fn bar(b: CurveElem<S>) -> Self {
        Self { b, ..Self::zero() }
    }

    /// `x_i bar(b)` for `i` in `1..=3`.
    pub fn x(i: usize, b: CurveElem<S>) -> Self {
        let mut e = Self::zero();
        e.x[i - 1] = b;
        e
    }

    fn slots(&self) -> [&CurveElem<S>; 8] {
        [&self.a, &self.w[0], &self.w[1], &self.w[2], &self.b, &self.x[0], &self.x[1], &self.x[2]]
    }

    fn from_slots(s: [CurveElem<S>; 8]) -> Self {
        let [a, w1, w2, w3, b, x1, x2, x3] = s;
        Self {
            a,
            w: [w1, w2, w3],
            b,
            x: [x1, x2, x3],
        }
    }

    fn map(&self, f: impl Fn(&CurveElem<S>) -> CurveElem<S>) -> Self {
        let s = self.slots();
        Self::from_slots([f(s[0]), f(s[1]), f(s[2]), f(s[3]), f(s[4]), f(s[5]), f(s[6]), f(s[7])])
    }

    fn zip(&self, o: &Self, f: impl Fn(&CurveElem<S>, &CurveElem<S>) -> CurveElem<S>) -> Self {
        let (s, t) = (self.slots(), o.slots());
        Self::from_slots([
            f(s[0], t[0]),
            f(s[1], t[1]),
            f(s[2], t[2]),
            f(s[3], t[3]),
            f(s[4], t[4]),
            f(s[5], t[5]),
            f(s[6], t[6]),
            f(s[7], t[7]),
        ])
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a + b)
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a)
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|a| a.scale(c))
    }

    pub fn is_zero(&self) -> bool {
        self.slots().iter().all(|s| s.is_zero())
    }

    pub fn even_part(&self) -> Self {
        Self {
            a: self.a.clone(),
            w: self.w.clone(),
            ..Self::zero()
        }
    }

    pub fn odd_part(&self) -> Self {
        Self {
            b: self.b.clone(),
            x: self.x.clone(),
            ..Self::zero()
        }
    }

    /// Checks `GCK(A, Δ)` membership slot by slot; on failure returns the
    /// first offending slot name.
    pub fn gck_project(&self) -> (bool, Option<GckViolation<S>>) {
        let names = ["a", "w1", "w2", "w3", "bar", "x1", "x2", "x3"];
        for (k, s) in self.slots().iter().enumerate() {
            let space = if k < 4 { Space::A } else { Space::M };
            if !s.in_space(space) {
                return (
                    false,
                    Some(GckViolation {
                        slot: names[k],
                        element: (*s).clone(),
                        required: space,
                    }),
                );
            }
        }
        (true, None)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GckViolation<S: Scalar> {
    pub slot: &'static str,
    pub element: CurveElem<S>,
    pub required: Space,
}

impl<S: Scalar> fmt::Display for CkElem<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = ["", "w1", "w2", "w3", "bar", "x1", "x2", "x3"];
        let mut first = true;
        for (label, s) in labels.iter().zip(self.slots()) {
            if s.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if label.is_empty() {
                write!(f, "{s}")?;
            } else {
                write!(f, "{label}({s})")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<S: Scalar> CkElem<S> {
    /// Slot text form `a | w1:a1 | w2:a2 | w3:a3 | bar:b | x1:b1 | x2:b2 | x3:b3`;
    /// omitted slots are zero and the unlabelled slot is `a`.
    pub fn to_slot_string(&self) -> String {
        let labels = ["", "w1", "w2", "w3", "bar", "x1", "x2", "x3"];
        labels
            .iter()
            .zip(self.slots())
            .map(|(l, s)| if l.is_empty() { s.to_string() } else { format!("{l}:{s}") })
            .collect::<Vec<_>>()
            .join(" | ")
    }
}

impl<S: Scalar> FromStr for CkElem<S> {
    type Err = Error;

    fn from_str(src: &str) -> Result<Self> {
        let mut slots: [Option<CurveElem<S>>; 8] = Default::default();
        let mut offset = 0;
        for part in src.split('|') {
            let trimmed = part.trim_start();
            let lead = part.len() - trimmed.len();
            let (idx, body, body_off) = match trimmed.split_once(':') {
                Some((label, body)) => {
                    let idx = match label.trim() {
                        "w1" => 1,
                        "w2" => 2,
                        "w3" => 3,
                        "bar" => 4,
                        "x1" => 5,
                        "x2" => 6,
                        "x3" => 7,
                        other => {
                            return Err(Error::Parse {
                                pos: offset + lead,
                                msg: format!("unknown slot label {other:?}"),
                            })
                        }
                    };
                    (idx, body, offset + lead + label.len() + 1)
                }
                None => (0, trimmed, offset + lead),
            };
            if slots[idx].is_some() {
                return Err(Error::Parse {
                    pos: offset + lead,
                    msg: "slot given twice".into(),
                });
            }
            let value = CurveElem::eval_expr(&expr::parse(body).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::Parse {
                    pos: pos + body_off,
                    msg,
                },
                other => other,
            })?)?;
            slots[idx] = Some(value);
            offset += part.len() + 1;
        }
        Ok(Self::from_slots(slots.map(|s| s.unwrap_or_else(CurveElem::zero))))
    }
}

/// Signed cross table: `x_{i×j} = sign * x_k`, `sign = 0` on the diagonal.
pub type CrossTable = [[(i8, usize); 3]; 3];

/// `x_{1×2} = -x_{2×1} = x3`, `x_{1×3} = -x_{3×1} = x2`, `x_{2×3} = -x_{3×2} = -x1`.
pub const CROSS_TABLE: CrossTable = [
    [(0, 0), (1, 2), (1, 1)],
    [(-1, 2), (0, 0), (-1, 0)],
    [(-1, 1), (1, 0), (0, 0)],
];

/// `w_i a · w_i b = ε_i ab`
const W_SQUARES: [i64; 3] = [1, 1, -1];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CkVariant {
    /// The whole of `CK(Γ, D)`.
    Full,
    /// `GCK(A, Δ)`: sampling restricted to `A` in even slots and `M` in odd slots.
    Gck,
}

#[derive(Debug, Clone)]
pub struct ChengKac<S> {
    cross: CrossTable,
    variant: CkVariant,
    _scalar: std::marker::PhantomData<S>,
}

impl<S: Scalar> ChengKac<S> {
    pub fn new(variant: CkVariant) -> Self {
        Self {
            cross: CROSS_TABLE,
            variant,
            _scalar: std::marker::PhantomData,
        }
    }

    pub fn ck() -> Self {
        Self::new(CkVariant::Full)
    }

    pub fn gck() -> Self {
        Self::new(CkVariant::Gck)
    }

    /// Negates `x_{i×j}` (1-based) without touching `x_{j×i}`.
    pub fn with_flipped_cross(mut self, i: usize, j: usize) -> Self {
        self.cross[i - 1][j - 1].0 *= -1;
        self
    }

    pub fn cross(&self) -> &CrossTable {
        &self.cross
    }

    pub fn variant(&self) -> CkVariant {
        self.variant
    }

    /// Action of the even element `e` on the odd element `o` (either order).
    fn act(&self, e: &CkElem<S>, o: &CkElem<S>, out: &mut CkElem<S>) {
        if !o.b.is_zero() {
            // a · bar(b) = bar(ab)
            out.b = &out.b + &(&e.a * &o.b);
            // w_i a · bar(b) = x_i bar(D(a) b)
            for i in 0..3 {
                if !e.w[i].is_zero() {
                    out.x[i] = &out.x[i] + &(e.w[i].derive() * &o.b);
                }
            }
        }
        for j in 0..3 {
            if o.x[j].is_zero() {
                continue;
            }
            // a · x_j bar(b) = x_j bar(ab)
            out.x[j] = &out.x[j] + &(&e.a * &o.x[j]);
            // w_i a · x_j bar(b) = x_{i×j} bar(ab)
            for i in 0..3 {
                let (sign, k) = self.cross[i][j];
                if sign == 0 || e.w[i].is_zero() {
                    continue;
                }
                let prod = &e.w[i] * &o.x[j];
                out.x[k] = if sign > 0 { &out.x[k] + &prod } else { &out.x[k] - &prod };
            }
        }
    }

    pub fn product(&self, u: &CkElem<S>, v: &CkElem<S>) -> CkElem<S> {
        let mut out = CkElem::zero();
        // even · even
        out.a = &u.a * &v.a;
        for i in 0..3 {
            if !u.w[i].is_zero() && !v.w[i].is_zero() {
                let p = (&u.w[i] * &v.w[i]).scale(&S::from_i64(W_SQUARES[i]));
                out.a = &out.a + &p;
            }
            out.w[i] = &u.a * &v.w[i] + &u.w[i] * &v.a;
        }
        // even · odd and odd · even
        self.act(&u.even_part(), &v.odd_part(), &mut out);
        self.act(&v.even_part(), &u.odd_part(), &mut out);
        // odd · odd
        if !u.b.is_zero() && !v.b.is_zero() {
            out.a = &out.a + &(u.b.derive() * &v.b - &u.b * v.b.derive());
        }
        for i in 0..3 {
            // bar(a) · x_i bar(b) = -w_i(ab), x_i bar(a) · bar(b) = w_i(ab)
            out.w[i] = &out.w[i] - &(&u.b * &v.x[i]) + &u.x[i] * &v.b;
        }
        out
    }
}

impl<S: Scalar> SuperAlgebra for ChengKac<S> {
    type Scalar = S;
    type Elem = CkElem<S>;

    fn name(&self) -> String {
        let base = match self.variant {
            CkVariant::Full => "CK(Γ,D)",
            CkVariant::Gck => "GCK(A,Δ)",
        };
        if self.cross == CROSS_TABLE {
            base.into()
        } else {
            format!("{base} (modified cross table)")
        }
    }
    fn zero(&self) -> CkElem<S> {
        CkElem::zero()
    }
    fn unit(&self) -> Option<CkElem<S>> {
        Some(CkElem::scalar_part(CurveElem::one()))
    }
    fn add(&self, a: &CkElem<S>, b: &CkElem<S>) -> CkElem<S> {
        a.add(b)
    }
    fn neg(&self, a: &CkElem<S>) -> CkElem<S> {
        a.neg()
    }
    fn scale(&self, a: &CkElem<S>, c: &S) -> CkElem<S> {
        a.scale(c)
    }
    fn mul(&self, a: &CkElem<S>, b: &CkElem<S>) -> CkElem<S> {
        self.product(a, b)
    }
    fn split(&self, a: &CkElem<S>) -> (CkElem<S>, CkElem<S>) {
        (a.even_part(), a.odd_part())
    }
    fn sample(&self, parity: Parity, max_deg: usize, rng: &mut dyn RngCore) -> CkElem<S> {
        let (even_space, odd_space) = match self.variant {
            CkVariant::Full => (Space::Gamma, Space::Gamma),
            CkVariant::Gck => (Space::A, Space::M),
        };
        let mut s = |space| curve::sample(space, max_deg, rng);
        match parity {
            Parity::Even => CkElem {
                a: s(even_space),
                w: [s(even_space), s(even_space), s(even_space)],
                ..CkElem::zero()
            },
            Parity::Odd => CkElem {
                b: s(odd_space),
                x: [s(odd_space), s(odd_space), s(odd_space)],
                ..CkElem::zero()
            },
        }
    }
}

/// `w2 (w2 (w1 r)) = a1` for even `r = a + w1 a1 + w2 a2 + w3 a3`.
pub fn check_w_extraction<S: Scalar>(alg: &ChengKac<S>, cfg: &CheckConfig) -> CheckReport {
    let even = vec![vec![Parity::Even]];
    run_patterns(alg, "w2(w2(w1 r)) = a1", &["r"], &even, false, cfg, |e, _| {
        let r = &e[0];
        let w = |i| CkElem::w(i, CurveElem::one());
        let lhs = alg.product(&w(2), &alg.product(&w(2), &alg.product(&w(1), r)));
        let rhs = CkElem::scalar_part(r.w[0].clone());
        (lhs != rhs).then(|| (lhs.to_string(), rhs.to_string()))
    })
}

/// Products of `GCK(A, Δ)` elements stay inside `GCK(A, Δ)`.
pub fn check_gck_closure<S: Scalar>(cfg: &CheckConfig) -> CheckReport {
    let alg = ChengKac::<S>::gck();
    run_judged(&alg, "GCK(A,Δ) closed under products", &["u", "v"], false, cfg, |e, _| {
        let p = alg.product(&e[0], &e[1]);
        match p.gck_project() {
            (true, _) => None,
            (false, v) => Some((
                p.to_string(),
                v.map(|v| format!("slot {} = {} not in {}", v.slot, v.element, v.required.name()))
                    .unwrap_or_default(),
            )),
        }
    })
}
