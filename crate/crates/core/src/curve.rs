//! The coordinate algebra of the curve `x^2 + y^4 = 1`.
//!
//! Every element is stored in the canonical form `p(y) + x*q(y)`; products
//! are reduced with `x^2 = 1 - y^4` so no higher power of `x` ever appears.
//! The even subalgebra `A` (generated by `1, y^2, xy`) and the module
//! `M = xA + yA` are characterized by coefficient parity:
//!
//! * `A = F[y^2] + x*y*F[y^2]`: `p` has even support, `q` odd support;
//! * `M = y*F[y^2] + x*F[y^2]`: `p` has odd support, `q` even support.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::{self, Expr};
use crate::poly::{forward_owned_binop, write_term, Degree, Polynomial};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CurveElem<S> {
    p: Polynomial<S>,
    q: Polynomial<S>,
}

/// `1 - y^4`, the value of `x^2`.
pub fn x_squared<S: Scalar>() -> Polynomial<S> {
    Polynomial::from_ints(&[1, 0, 0, 0, -1])
}

impl<S: Scalar> CurveElem<S> {
    pub fn new(p: Polynomial<S>, q: Polynomial<S>) -> Self {
        Self { p, q }
    }

    pub fn zero() -> Self {
        Self::new(Polynomial::zero(), Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::new(Polynomial::constant(c), Polynomial::zero())
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(S::from_i64(c))
    }

    pub fn x() -> Self {
        Self::new(Polynomial::zero(), Polynomial::one())
    }

    pub fn y() -> Self {
        Self::new(Polynomial::y(), Polynomial::zero())
    }

    /// `y^k`
    pub fn y_pow(k: usize) -> Self {
        Self::new(Polynomial::monomial(S::one(), k), Polynomial::zero())
    }

    /// `x * y^k`
    pub fn x_y_pow(k: usize) -> Self {
        Self::new(Polynomial::zero(), Polynomial::monomial(S::one(), k))
    }

    pub fn from_poly(p: Polynomial<S>) -> Self {
        Self::new(p, Polynomial::zero())
    }

    /// The x-free part.
    pub fn p(&self) -> &Polynomial<S> {
        &self.p
    }

    /// The coefficient of `x`.
    pub fn q(&self) -> &Polynomial<S> {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.q.is_zero() && self.p == Polynomial::one()
    }

    /// Filtration degree with `x` of weight 1: `max(deg p, 1 + deg q)`.
    pub fn degree(&self) -> Degree {
        let dq = match self.q.degree() {
            Degree::NegInfinity => Degree::NegInfinity,
            Degree::Finite(d) => Degree::Finite(d + 1),
        };
        self.p.degree().max(dq)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.p.scale(c), self.q.scale(c))
    }

    /// `p - x*q`; the product with `self` lies in `F[y]`.
    pub fn conjugate(&self) -> Self {
        Self::new(self.p.clone(), -&self.q)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The curve derivation `D = 2y^3 d/dx - x d/dy`:
    /// `D(p + xq) = (2y^3 q - (1 - y^4) q') + x(-p')`.
    pub fn derive(&self) -> Self {
        let two_y3 = Polynomial::monomial(S::from_i64(2), 3);
        let p = &two_y3 * &self.q - x_squared::<S>() * self.q.derivative();
        Self::new(p, -self.p.derivative())
    }

    pub fn classify(&self) -> Membership<S> {
        let (p_even, p_odd) = self.p.parity_split();
        let (q_even, q_odd) = self.q.parity_split();
        let a_part = Self::new(p_even, q_odd);
        let m_part = Self::new(p_odd, q_even);
        Membership {
            in_a: m_part.is_zero(),
            in_m: a_part.is_zero(),
            a_part,
            m_part,
        }
    }

    pub fn in_space(&self, space: Space) -> bool {
        match space {
            Space::Gamma => true,
            Space::A => self.classify().in_a,
            Space::M => self.classify().in_m,
        }
    }

    /// For `m` in `M`, the canonical `(a, b)` in `A x A` with `m = x*a + y*b`:
    /// `a = q` and `b = p / y`.
    pub fn split_module(&self) -> Result<(Self, Self)> {
        if !self.in_space(Space::M) {
            return Err(Error::NotInSpace {
                element: self.to_string(),
                space: "M",
            });
        }
        let b = self.p.shift_down(1).expect("odd support has no constant term");
        Ok((Self::from_poly(self.q.clone()), Self::from_poly(b)))
    }

    pub(crate) fn eval_expr(e: &Expr) -> Result<Self> {
        match e {
            Expr::Int(n) => Ok(Self::constant(S::from_ratio(n, &1.into()))),
            Expr::Var { name, pos } => match name.as_str() {
                "x" => Ok(Self::x()),
                "y" => Ok(Self::y()),
                _ => Err(Error::Parse {
                    pos: *pos,
                    msg: format!("unknown symbol {name:?}"),
                }),
            },
            Expr::Call { name, pos, .. } => Err(Error::Parse {
                pos: *pos,
                msg: format!("unknown function {name:?}"),
            }),
            Expr::Neg(a) => Ok(-Self::eval_expr(a)?),
            Expr::Add(a, b) => Ok(Self::eval_expr(a)? + Self::eval_expr(b)?),
            Expr::Sub(a, b) => Ok(Self::eval_expr(a)? - Self::eval_expr(b)?),
            Expr::Mul(a, b) => Ok(Self::eval_expr(a)? * Self::eval_expr(b)?),
            Expr::Div { lhs, rhs, pos } => {
                let d = expr::const_int(rhs).filter(|d| d != &0.into()).ok_or(Error::Parse {
                    pos: *pos,
                    msg: "can only divide by a nonzero integer".into(),
                })?;
                Ok(Self::eval_expr(lhs)?.scale(&S::from_ratio(&1.into(), &d)))
            }
            Expr::Pow { base, exp, .. } => Ok(Self::eval_expr(base)?.pow(*exp)),
        }
    }
}

impl<S: Scalar> Add for &CurveElem<S> {
    type Output = CurveElem<S>;
    fn add(self, rhs: Self) -> CurveElem<S> {
        CurveElem::new(&self.p + &rhs.p, &self.q + &rhs.q)
    }
}

impl<S: Scalar> Sub for &CurveElem<S> {
    type Output = CurveElem<S>;
    fn sub(self, rhs: Self) -> CurveElem<S> {
        CurveElem::new(&self.p - &rhs.p, &self.q - &rhs.q)
    }
}

impl<S: Scalar> Mul for &CurveElem<S> {
    type Output = CurveElem<S>;
    /// `(p1 + x q1)(p2 + x q2) = (p1 p2 + (1 - y^4) q1 q2) + x(p1 q2 + q1 p2)`
    fn mul(self, rhs: Self) -> CurveElem<S> {
        let mut p = &self.p * &rhs.p;
        if !self.q.is_zero() && !rhs.q.is_zero() {
            let qq = &self.q * &rhs.q;
            p = p + &qq - qq.shift_up(4);
        }
        let q = &self.p * &rhs.q + &self.q * &rhs.p;
        CurveElem::new(p, q)
    }
}

impl<S: Scalar> Neg for &CurveElem<S> {
    type Output = CurveElem<S>;
    fn neg(self) -> CurveElem<S> {
        CurveElem::new(-&self.p, -&self.q)
    }
}

impl<S: Scalar> Neg for CurveElem<S> {
    type Output = CurveElem<S>;
    fn neg(self) -> CurveElem<S> {
        -&self
    }
}

forward_owned_binop!(CurveElem, Add, add);
forward_owned_binop!(CurveElem, Sub, sub);
forward_owned_binop!(CurveElem, Mul, mul);

impl<S: Scalar> Default for CurveElem<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> fmt::Display for CurveElem<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            return write!(f, "{}", self.p);
        }
        let has_p = !self.p.is_zero();
        if has_p {
            write!(f, "{}", self.p)?;
        }
        let mut terms = self.q.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero());
        let single = terms.next().filter(|_| terms.next().is_none());
        match single {
            Some((k, c)) => {
                match (has_p, c.is_negative()) {
                    (false, true) => f.write_str("-")?,
                    (false, false) => {}
                    (true, true) => f.write_str(" - ")?,
                    (true, false) => f.write_str(" + ")?,
                }
                let symbol = match k {
                    0 => "x".to_string(),
                    1 => "x*y".to_string(),
                    _ => format!("x*y^{k}"),
                };
                write_term(f, c, &symbol)
            }
            None => {
                if has_p {
                    f.write_str(" + ")?;
                }
                write!(f, "x*({})", self.q)
            }
        }
    }
}

impl<S: Scalar> fmt::Debug for CurveElem<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CurveElem({self})")
    }
}

impl<S: Scalar> FromStr for CurveElem<S> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::eval_expr(&expr::parse(s)?)
    }
}

/// Derivation `c * D` of the curve algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct Derivation<S> {
    pub coefficient: CurveElem<S>,
    pub name: String,
}

impl<S: Scalar> Derivation<S> {
    pub fn new(name: impl Into<String>, coefficient: CurveElem<S>) -> Self {
        Self {
            coefficient,
            name: name.into(),
        }
    }

    pub fn d() -> Self {
        Self::new("D", CurveElem::one())
    }

    /// `(1 - y^4) D`
    pub fn d11() -> Self {
        Self::new("D11", CurveElem::from_poly(x_squared()))
    }

    /// `x y D`
    pub fn d12() -> Self {
        Self::new("D12", CurveElem::x_y_pow(1))
    }

    /// `y^2 D`
    pub fn d22() -> Self {
        Self::new("D22", CurveElem::y_pow(2))
    }

    /// The set `{D11, D12, D22}`.
    pub fn delta() -> Vec<Self> {
        vec![Self::d11(), Self::d12(), Self::d22()]
    }

    pub fn apply(&self, u: &CurveElem<S>) -> CurveElem<S> {
        let du = u.derive();
        if self.coefficient.is_one() {
            du
        } else {
            &self.coefficient * &du
        }
    }
}

impl<S: Scalar> fmt::Debug for Derivation<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = ({})*D", self.name, self.coefficient)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Space {
    Gamma,
    A,
    M,
}

impl Space {
    pub fn name(self) -> &'static str {
        match self {
            Space::Gamma => "Γ",
            Space::A => "A",
            Space::M => "M",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Membership<S: Scalar> {
    pub in_a: bool,
    pub in_m: bool,
    pub a_part: CurveElem<S>,
    pub m_part: CurveElem<S>,
}

/// Ordered monomial basis of the subspace of filtration degree `<= max_deg`:
/// the x-free monomials by increasing degree, then the `x y^k` monomials.
pub fn enumerate_basis<S: Scalar>(space: Space, max_deg: usize) -> Vec<CurveElem<S>> {
    let (p_ok, q_ok): (fn(usize) -> bool, fn(usize) -> bool) = match space {
        Space::Gamma => (|_| true, |_| true),
        Space::A => (|k| k % 2 == 0, |k| k % 2 == 1),
        Space::M => (|k| k % 2 == 1, |k| k % 2 == 0),
    };
    let mut out: Vec<CurveElem<S>> = (0..=max_deg).filter(|&k| p_ok(k)).map(CurveElem::y_pow).collect();
    out.extend((0..max_deg).filter(|&k| q_ok(k)).map(CurveElem::x_y_pow));
    out
}

/// Random combination of `enumerate_basis(space, max_deg)` with integer
/// coefficients uniform in `[-3, 3]`.
pub fn sample<S: Scalar, R: Rng + ?Sized>(space: Space, max_deg: usize, rng: &mut R) -> CurveElem<S> {
    enumerate_basis::<S>(space, max_deg)
        .iter()
        .fold(CurveElem::zero(), |acc, b| {
            let c = rng.gen_range(-3i64..=3);
            if c == 0 {
                acc
            } else {
                acc + b.scale(&S::from_i64(c))
            }
        })
}

/// Like [`sample`] but resampled until nonzero. `M` has no nonzero element
/// of degree 0, so `max_deg` is raised to 1 there.
pub fn sample_nonzero<S: Scalar, R: Rng + ?Sized>(space: Space, max_deg: usize, rng: &mut R) -> CurveElem<S> {
    let max_deg = if space == Space::M { max_deg.max(1) } else { max_deg };
    loop {
        let s = sample(space, max_deg, rng);
        if !s.is_zero() {
            return s;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{GammaEl, Poly};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn g(s: &str) -> GammaEl {
        s.parse().unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(g("x") * g("x"), g("1 - y^4"));
        assert_eq!(g("y") * g("x"), GammaEl::new(Poly::zero(), "y".parse().unwrap()));
        assert_eq!(g("(1 + x)*(1 - x)"), g("y^4"));
        assert_eq!(g("x^3"), g("x - x*y^4"));
    }

    #[test]
    fn derivation_examples() {
        assert_eq!(g("y^2").derive(), GammaEl::new(Poly::zero(), "-2*y".parse().unwrap()));
        assert_eq!(g("x*y").derive(), g("3*y^4 - 1"));
        assert!(GammaEl::one().derive().is_zero());
        assert_eq!(g("x").derive(), g("2*y^3"));
        assert_eq!(g("y").derive(), g("-x"));
    }

    #[test]
    fn relation_is_killed() {
        // D(x*x) computed through the product equals D(1 - y^4)
        let xx = g("x") * g("x");
        assert_eq!(xx.derive(), g("1 - y^4").derive());
        let leibniz = g("x").derive() * g("x") + g("x") * g("x").derive();
        assert_eq!(leibniz, g("1 - y^4").derive());
        assert!((g("x^2 + y^4 - 1")).is_zero());
    }

    #[test]
    fn membership_examples() {
        let m = g("x").classify();
        assert!(m.in_m && !m.in_a);
        let m = g("y^3 + x*y^2").classify();
        assert!(m.a_part.is_zero());
        assert_eq!(m.m_part, g("y^3 + x*y^2"));
        let m = g("1 + y + x*y + x").classify();
        assert_eq!(m.a_part, g("1 + x*y"));
        assert_eq!(m.m_part, g("y + x"));
        assert!(!m.in_a && !m.in_m);
    }

    #[test]
    fn module_characterization_by_expansion() {
        // x(f + xy g) + y(h + xy k) has odd p and even q for f, g, h, k in F[y^2]
        let f = g("1 + 2*y^2");
        let gg = g("y^4 - 3");
        let h = g("5*y^2");
        let k = g("7 - y^2");
        let a = &f + &(g("x*y") * &gg);
        let b = &h + &(g("x*y") * &k);
        let m = g("x") * a + g("y") * b;
        assert!(m.classify().in_m);
        let (a2, b2) = m.split_module().unwrap();
        assert!(a2.in_space(Space::A) && b2.in_space(Space::A));
        assert_eq!(g("x") * a2 + g("y") * b2, m);
    }

    #[test]
    fn basis_examples() {
        let names = |v: Vec<GammaEl>| v.iter().map(|e| e.to_string()).collect::<Vec<_>>();
        assert_eq!(names(enumerate_basis(Space::A, 2)), ["1", "y^2", "x*y"]);
        assert_eq!(names(enumerate_basis(Space::M, 1)), ["y", "x"]);
        assert_eq!(names(enumerate_basis(Space::Gamma, 0)), ["1"]);
        assert_eq!(
            names(enumerate_basis(Space::A, 4)),
            ["1", "y^2", "y^4", "x*y", "x*y^3"]
        );
    }

    #[test]
    fn sampling_is_deterministic_and_in_space() {
        for space in [Space::Gamma, Space::A, Space::M] {
            let a: GammaEl = sample(space, 6, &mut ChaCha8Rng::seed_from_u64(9));
            let b: GammaEl = sample(space, 6, &mut ChaCha8Rng::seed_from_u64(9));
            assert_eq!(a, b);
            assert!(a.in_space(space));
            assert!(a.degree() <= Degree::Finite(6));
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(g("3*y^2 + x*(1 - y^4)").to_string(), "3*y^2 + x*(1 - y^4)");
        assert_eq!(g("x*y^3").to_string(), "x*y^3");
        assert_eq!(g("-x").to_string(), "-x");
        assert_eq!(g("1 - 2*x*y").to_string(), "1 - 2*x*y");
        assert_eq!(GammaEl::zero().to_string(), "0");
    }

    #[test]
    fn derivation_specs() {
        let u = g("y^2 + x*y^3");
        assert_eq!(Derivation::d11().apply(&u), g("1 - y^4") * u.derive());
        assert_eq!(Derivation::d12().apply(&u), g("x*y") * u.derive());
        assert_eq!(Derivation::d().apply(&u), u.derive());
    }
}
