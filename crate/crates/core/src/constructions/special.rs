//! The speciality embedding of `J(Γ, D)` into 2×2 matrices over `End Γ`.
//!
//! Operators stay formal: sums of words in `R_c` (multiplication by `c`) and
//! `D`, evaluated exactly on elements. A word `[L1, L2, ..., Ln]` is the
//! composition `L1 ∘ L2 ∘ ... ∘ Ln`, so `Ln` acts first. Matrices act on
//! column vectors `(t1, t2)`.

use std::fmt;

use crate::curve::{self, enumerate_basis, CurveElem, Space};
use crate::error::{Error, Result};
use crate::identities::{run_judged, CheckConfig, CheckReport};
use crate::scalar::Scalar;
use crate::seeds;
use crate::superalg::{sign_flip, Parity};

use super::vector::{jvec_mul, VecElem, VectorType};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Letter<S: Scalar> {
    R(CurveElem<S>),
    D,
}

#[derive(Clone, PartialEq, Debug)]
pub struct OperatorExpr<S: Scalar> {
    terms: Vec<(S, Vec<Letter<S>>)>,
}

impl<S: Scalar> Default for OperatorExpr<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> OperatorExpr<S> {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn identity() -> Self {
        Self::word(S::one(), Vec::new())
    }

    /// `R_c`
    pub fn r(c: CurveElem<S>) -> Self {
        Self::word(S::one(), vec![Letter::R(c)])
    }

    pub fn d() -> Self {
        Self::word(S::one(), vec![Letter::D])
    }

    pub fn word(coef: S, letters: Vec<Letter<S>>) -> Self {
        Self { terms: vec![(coef, letters)] }.normalized()
    }

    pub fn terms(&self) -> &[(S, Vec<Letter<S>>)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Fuses adjacent multiplications, drops `R_1` and zero terms, and
    /// collects equal words.
    fn normalized(self) -> Self {
        let mut out: Vec<(S, Vec<Letter<S>>)> = Vec::new();
        'terms: for (coef, word) in self.terms {
            let mut fused: Vec<Letter<S>> = Vec::new();
            for l in word {
                match (fused.last_mut(), l) {
                    (Some(Letter::R(prev)), Letter::R(c)) => *prev = &*prev * &c,
                    (_, l) => fused.push(l),
                }
            }
            let mut coef = coef;
            let mut kept = Vec::with_capacity(fused.len());
            for l in fused {
                match l {
                    Letter::R(c) if c.is_zero() => continue 'terms,
                    Letter::R(c) if c.is_one() => {}
                    // pull pure scalars out of R into the coefficient
                    Letter::R(c) if c.q().is_zero() && c.p().degree() == crate::poly::Degree::Finite(0) => {
                        coef = coef * c.p().coeff(0);
                    }
                    l => kept.push(l),
                }
            }
            if coef.is_zero() {
                continue;
            }
            match out.iter_mut().find(|(_, w)| *w == kept) {
                Some((c, _)) => *c = c.clone() + coef,
                None => out.push((coef, kept)),
            }
        }
        out.retain(|(c, _)| !c.is_zero());
        Self { terms: out }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            terms: self.terms.iter().chain(&o.terms).cloned().collect(),
        }
        .normalized()
    }

    pub fn scale(&self, c: &S) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, w)| (k.clone() * c.clone(), w.clone())).collect(),
        }
        .normalized()
    }

    /// `self ∘ o`: apply `o` first.
    pub fn compose(&self, o: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (c1, w1) in &self.terms {
            for (c2, w2) in &o.terms {
                let mut w = w1.clone();
                w.extend(w2.iter().cloned());
                terms.push((c1.clone() * c2.clone(), w));
            }
        }
        Self { terms }.normalized()
    }

    pub fn apply(&self, t: &CurveElem<S>) -> CurveElem<S> {
        let mut acc = CurveElem::zero();
        for (coef, word) in &self.terms {
            let mut v = t.clone();
            for l in word.iter().rev() {
                v = match l {
                    Letter::R(c) => &v * c,
                    Letter::D => v.derive(),
                };
            }
            acc = &acc + &v.scale(coef);
        }
        acc
    }
}

impl<S: Scalar> fmt::Display for OperatorExpr<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (coef, word)) in self.terms.iter().enumerate() {
            let neg = coef.is_negative();
            let mag = coef.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = mag.is_one();
            if !unit || word.is_empty() {
                write!(f, "{mag}")?;
                if !word.is_empty() {
                    f.write_str("*")?;
                }
            }
            for l in word {
                match l {
                    Letter::R(c) => write!(f, "R[{c}]")?,
                    Letter::D => f.write_str("D")?,
                }
            }
        }
        Ok(())
    }
}

/// A 2×2 operator matrix; `parity` is `None` for inhomogeneous matrices.
#[derive(Clone, PartialEq, Debug)]
pub struct OpMatrix<S: Scalar> {
    pub entries: [[OperatorExpr<S>; 2]; 2],
    pub parity: Option<Parity>,
}

impl<S: Scalar> OpMatrix<S> {
    pub fn zero() -> Self {
        Self {
            entries: Default::default(),
            parity: Some(Parity::Even),
        }
    }

    pub fn identity() -> Self {
        Self {
            entries: [
                [OperatorExpr::identity(), OperatorExpr::zero()],
                [OperatorExpr::zero(), OperatorExpr::identity()],
            ],
            parity: Some(Parity::Even),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let e = |i: usize, j: usize| self.entries[i][j].add(&o.entries[i][j]);
        let parity = match (self.is_zero(), o.is_zero()) {
            (true, _) => o.parity,
            (_, true) => self.parity,
            _ if self.parity == o.parity => self.parity,
            _ => None,
        };
        Self {
            entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
            parity,
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        let e = |i: usize, j: usize| self.entries[i][j].scale(c);
        Self {
            entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
            parity: self.parity,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(OperatorExpr::is_zero)
    }

    /// Matrix product with composition of entries.
    pub fn mul(&self, o: &Self) -> Self {
        let e = |i: usize, k: usize| {
            self.entries[i][0]
                .compose(&o.entries[0][k])
                .add(&self.entries[i][1].compose(&o.entries[1][k]))
        };
        let parity = match (self.parity, o.parity) {
            (Some(p), Some(q)) => Some(p.xor(q)),
            _ => None,
        };
        Self {
            entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
            parity,
        }
    }

    pub fn apply(&self, v: &[CurveElem<S>; 2]) -> [CurveElem<S>; 2] {
        let row = |i: usize| &self.entries[i][0].apply(&v[0]) + &self.entries[i][1].apply(&v[1]);
        [row(0), row(1)]
    }
}

impl<S: Scalar> fmt::Display for OpMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entries;
        write!(f, "[{}, {}; {}, {}]", e[0][0], e[0][1], e[1][0], e[1][1])
    }
}

/// `a + bar(b) ↦ [R_a, 4 R_b D + 2 R_{D(b)}; -R_b, R_a]`
pub fn embed_special<S: Scalar>(u: &VecElem<S>) -> OpMatrix<S> {
    let (a, b) = (&u.even, &u.odd);
    let upper = OperatorExpr::word(S::from_i64(4), vec![Letter::R(b.clone()), Letter::D])
        .add(&OperatorExpr::r(b.derive()).scale(&S::from_i64(2)));
    OpMatrix {
        entries: [
            [OperatorExpr::r(a.clone()), upper],
            [OperatorExpr::r(b.clone()).scale(&-S::one()), OperatorExpr::r(a.clone())],
        ],
        parity: u.parity(),
    }
}

/// `P ∘ Q = (P*Q + (-1)^{p(P)p(Q)} Q*P) / 2` for homogeneous `P`, `Q`.
pub fn opmatrix_super_product<S: Scalar>(p: &OpMatrix<S>, q: &OpMatrix<S>) -> Result<OpMatrix<S>> {
    let (Some(pp), Some(pq)) = (p.parity, q.parity) else {
        return Err(Error::Inhomogeneous);
    };
    let swapped = q.mul(p);
    let swapped = if sign_flip(&[(pp, pq)]) {
        swapped.scale(&-S::one())
    } else {
        swapped
    };
    Ok(p.mul(q).add(&swapped).scale(&S::from_ratio(&1.into(), &2.into())))
}

/// Test vectors for pointwise operator comparison: every `(t, 0)` and
/// `(0, t)` with `t` a basis element of degree at most 8, then `random`
/// vectors with both entries sampled up to degree 8.
pub fn probe_vectors<S: Scalar>(random: usize, seed: u64) -> Vec<[CurveElem<S>; 2]> {
    let mut out = Vec::new();
    for t in enumerate_basis::<S>(Space::Gamma, 8) {
        out.push([t.clone(), CurveElem::zero()]);
        out.push([CurveElem::zero(), t]);
    }
    let mut rng = seeds::stream(seed, &[0xe3b]);
    for _ in 0..random {
        out.push([curve::sample(Space::Gamma, 8, &mut rng), curve::sample(Space::Gamma, 8, &mut rng)]);
    }
    out
}

/// `embed(u v) = embed(u) ∘ embed(v)` on homogeneous pairs of `J(Γ, D)`,
/// compared on [`probe_vectors`] with 10 random vectors.
pub fn check_embedding<S: Scalar>(cfg: &CheckConfig) -> CheckReport {
    let alg = VectorType::<S>::new();
    let vectors = probe_vectors::<S>(10, cfg.seed);
    run_judged(&alg, "embedding is a homomorphism", &["u", "v"], false, cfg, |e, _| {
        let lhs = embed_special(&jvec_mul(&e[0], &e[1]));
        let rhs = match opmatrix_super_product(&embed_special(&e[0]), &embed_special(&e[1])) {
            Ok(r) => r,
            Err(err) => return Some((lhs.to_string(), err.to_string())),
        };
        vectors.iter().find(|v| lhs.apply(v) != rhs.apply(v)).map(|v| {
            let (l, r) = (lhs.apply(v), rhs.apply(v));
            (format!("({}, {})", l[0], l[1]), format!("({}, {})", r[0], r[1]))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{GammaEl, Rational};

    fn g(s: &str) -> GammaEl {
        s.parse().unwrap()
    }

    fn vectors() -> Vec<[GammaEl; 2]> {
        let mut out = Vec::new();
        for t in enumerate_basis::<Rational>(Space::Gamma, 8) {
            out.push([t.clone(), GammaEl::zero()]);
            out.push([GammaEl::zero(), t]);
        }
        out
    }

    fn agree(p: &OpMatrix<Rational>, q: &OpMatrix<Rational>) -> bool {
        vectors().iter().all(|v| p.apply(v) == q.apply(v))
    }

    #[test]
    fn embed_examples() {
        let one = embed_special(&VecElem::one());
        assert!(agree(&one, &OpMatrix::identity()));
        let xb = embed_special(&VecElem::bar(g("x")));
        assert_eq!(xb.parity, Some(Parity::Odd));
        assert_eq!(xb.entries[0][1].to_string(), "4*R[x]D + 2*R[2*y^3]");
        assert_eq!(xb.entries[1][0].to_string(), "-R[x]");
        assert!(embed_special(&VecElem::<Rational>::zero()).is_zero());
        let mixed = embed_special(&VecElem::new(g("1"), g("x")));
        assert_eq!(mixed.parity, None);
        assert!(matches!(opmatrix_super_product(&mixed, &one), Err(Error::Inhomogeneous)));
    }

    #[test]
    fn odd_square_vanishes_and_gamma_product() {
        let xb = embed_special(&VecElem::bar(g("x")));
        let yb = embed_special(&VecElem::bar(g("y")));
        let sq = opmatrix_super_product(&xb, &xb).unwrap();
        assert!(vectors().iter().all(|v| sq.apply(v) == [GammaEl::zero(), GammaEl::zero()]));
        let prod = opmatrix_super_product(&xb, &yb).unwrap();
        assert!(agree(&prod, &embed_special(&VecElem::even(g("1 + y^4")))));
        let id = opmatrix_super_product(&OpMatrix::identity(), &yb).unwrap();
        assert!(agree(&id, &yb));
    }

    #[test]
    fn homomorphism_on_mixed_parities() {
        let even = VecElem::even(g("y^2 + x*y"));
        let odd = VecElem::bar(g("1 - x*y^3"));
        for (u, v) in [(&even, &odd), (&odd, &even), (&odd, &odd), (&even, &even)] {
            let lhs = embed_special(&jvec_mul(u, v));
            let rhs = opmatrix_super_product(&embed_special(u), &embed_special(v)).unwrap();
            assert!(agree(&lhs, &rhs), "{u} * {v}");
        }
    }
}
