//! Dense univariate polynomials in `y`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::expr::{self, Expr};
use crate::scalar::Scalar;

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which orders below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Polynomial with coefficient `coeffs[i]` on `y^i`. The highest stored
/// coefficient is always nonzero; zero is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Polynomial<S> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * y^k`
    pub fn monomial(c: S, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![S::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    pub fn y() -> Self {
        Self::monomial(S::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| S::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by `y^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![S::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divide by `y^k`, or `None` when some coefficient below `y^k` is nonzero.
    pub fn shift_down(&self, k: usize) -> Option<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(self.coeffs.iter().skip(k).cloned().collect()))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, at: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    /// Formal derivative with respect to `y`.
    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * S::from_i64(i as i64))
                .collect(),
        )
    }

    /// Split into even-degree and odd-degree parts.
    pub fn parity_split(&self) -> (Self, Self) {
        let mut even = Vec::with_capacity(self.coeffs.len());
        let mut odd = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % 2 == 0 {
                even.push(c.clone());
                odd.push(S::zero());
            } else {
                even.push(S::zero());
                odd.push(c.clone());
            }
        }
        (Self::from_coeffs(even), Self::from_coeffs(odd))
    }

    /// Only even powers of `y` occur (true for zero).
    pub fn has_even_support(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(|c| c.is_zero())
    }

    /// Only odd powers of `y` occur (true for zero).
    pub fn has_odd_support(&self) -> bool {
        self.coeffs.iter().step_by(2).all(|c| c.is_zero())
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?.clone();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![S::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * d.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn make_monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = S::one() / l.clone();
                self.scale(&inv)
            }
        }
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(a: &Self, b: &Self) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::GcdUndefined);
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        while !r1.is_zero() {
            let (_, r) = r0.div_rem(&r1)?;
            r0 = r1;
            r1 = r;
        }
        Ok(r0.make_monic())
    }

    pub(crate) fn eval_expr(e: &Expr) -> Result<Self> {
        match e {
            Expr::Int(n) => Ok(Self::constant(S::from_ratio(n, &1.into()))),
            Expr::Var { name, pos } => match name.as_str() {
                "y" => Ok(Self::y()),
                _ => Err(Error::Parse {
                    pos: *pos,
                    msg: format!("unknown symbol {name:?} in a polynomial in y"),
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

/// Writes `c` times the monomial `symbol` (empty for constants), without sign.
pub(crate) fn write_term<S: Scalar>(
    f: &mut fmt::Formatter<'_>,
    c: &S,
    symbol: &str,
) -> fmt::Result {
    let mag = c.abs();
    if symbol.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        f.write_str(symbol)
    } else {
        write!(f, "{mag}*{symbol}")
    }
}

impl<S: Scalar> fmt::Display for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let symbol = match i {
                0 => String::new(),
                1 => "y".to_string(),
                _ => format!("y^{i}"),
            };
            write_term(f, c, &symbol)?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<S: Scalar> FromStr for Polynomial<S> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::eval_expr(&expr::parse(s)?)
    }
}

impl<S: Scalar> Default for Polynomial<S> {
    fn default() -> Self {
        Self::zero()
    }
}

fn zip_with<S: Scalar>(a: &[S], b: &[S], op: impl Fn(S, S) -> S) -> Vec<S> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(S::zero);
            let y = b.get(i).cloned().unwrap_or_else(S::zero);
            op(x, y)
        })
        .collect()
}

impl<S: Scalar> Add for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn add(self, rhs: Self) -> Polynomial<S> {
        Polynomial::from_coeffs(zip_with(&self.coeffs, &rhs.coeffs, |a, b| a + b))
    }
}

impl<S: Scalar> Sub for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn sub(self, rhs: Self) -> Polynomial<S> {
        Polynomial::from_coeffs(zip_with(&self.coeffs, &rhs.coeffs, |a, b| a - b))
    }
}

impl<S: Scalar> Mul for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn mul(self, rhs: Self) -> Polynomial<S> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl<S: Scalar> Neg for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn neg(self) -> Polynomial<S> {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<S: Scalar> Neg for Polynomial<S> {
    type Output = Polynomial<S>;
    fn neg(self) -> Polynomial<S> {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($ty:ident, $tr:ident, $m:ident) => {
        impl<S: Scalar> $tr for $ty<S> {
            type Output = $ty<S>;
            fn $m(self, rhs: Self) -> $ty<S> {
                (&self).$m(&rhs)
            }
        }
        impl<S: Scalar> $tr<&$ty<S>> for $ty<S> {
            type Output = $ty<S>;
            fn $m(self, rhs: &$ty<S>) -> $ty<S> {
                (&self).$m(rhs)
            }
        }
        impl<S: Scalar> $tr<$ty<S>> for &$ty<S> {
            type Output = $ty<S>;
            fn $m(self, rhs: $ty<S>) -> $ty<S> {
                self.$m(&rhs)
            }
        }
    };
}
pub(crate) use forward_owned_binop;

forward_owned_binop!(Polynomial, Add, add);
forward_owned_binop!(Polynomial, Sub, sub);
forward_owned_binop!(Polynomial, Mul, mul);
