//! Certificates for `A = A D11(A) + A D12(A) + A D22(A)` and their
//! associator form inside `J(A, Δ)`.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::constructions::{JADelta, VecElem};
use crate::curve::{enumerate_basis, CurveElem, Derivation, Space};
use crate::error::{Error, Result};
use crate::linalg::solve;
use crate::poly::Degree;
use crate::structure::saturate::gamma_coords;
use crate::superalg::SuperAlgebra;
use crate::{GammaEl, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DerivIndex {
    #[serde(rename = "11")]
    D11,
    #[serde(rename = "12")]
    D12,
    #[serde(rename = "22")]
    D22,
}

impl DerivIndex {
    pub const ALL: [DerivIndex; 3] = [DerivIndex::D11, DerivIndex::D12, DerivIndex::D22];

    pub fn derivation(self) -> Derivation<Rational> {
        match self {
            DerivIndex::D11 => Derivation::d11(),
            DerivIndex::D12 => Derivation::d12(),
            DerivIndex::D22 => Derivation::d22(),
        }
    }

    /// `(m1, m2)` with `(a, m1, m2) = D_ij(a)` in `J(A, Δ)`.
    pub fn odd_pair(self) -> (GammaEl, GammaEl) {
        let (x, y) = (CurveElem::x(), CurveElem::y());
        match self {
            DerivIndex::D11 => (x.clone(), x),
            DerivIndex::D12 => (x, y),
            DerivIndex::D22 => (y.clone(), y),
        }
    }
}

impl fmt::Display for DerivIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DerivIndex::D11 => "D11",
            DerivIndex::D12 => "D12",
            DerivIndex::D22 => "D22",
        })
    }
}

/// `left * D_deriv(argument) * right`
#[derive(Debug, Clone, PartialEq)]
pub struct CertTerm {
    pub left: GammaEl,
    pub deriv: DerivIndex,
    pub argument: GammaEl,
    pub right: GammaEl,
}

impl CertTerm {
    pub fn value(&self) -> GammaEl {
        &(&self.left * &self.deriv.derivation().apply(&self.argument)) * &self.right
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertStatus {
    Found,
    NotFoundAtBound,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub status: CertStatus,
    pub target: GammaEl,
    pub deg_bound: usize,
    pub terms: Vec<CertTerm>,
}

impl Certificate {
    /// `Σ left * D(argument) * right == target`, all factors in `A`.
    pub fn verify(&self) -> bool {
        self.status == CertStatus::Found
            && self.terms.iter().all(|t| {
                t.left.in_space(Space::A) && t.argument.in_space(Space::A) && t.right.in_space(Space::A)
            })
            && self
                .terms
                .iter()
                .fold(CurveElem::zero(), |acc, t| &acc + &t.value())
                == self.target
    }

    /// Rewrites every term as `(argument, m1, m2) * (left * right)` with
    /// `m1, m2 ∈ {bar(x), bar(y)}`.
    pub fn associator_form(&self) -> Vec<AssociatorTerm> {
        self.terms
            .iter()
            .map(|t| {
                let (m1, m2) = t.deriv.odd_pair();
                AssociatorTerm {
                    inner: t.argument.clone(),
                    m1,
                    m2,
                    outer: &t.left * &t.right,
                }
            })
            .collect()
    }
}

/// `(inner, bar(m1), bar(m2)) * outer` in `J(A, Δ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AssociatorTerm {
    pub inner: GammaEl,
    pub m1: GammaEl,
    pub m2: GammaEl,
    pub outer: GammaEl,
}

impl AssociatorTerm {
    pub fn value(&self, alg: &JADelta<Rational>) -> VecElem<Rational> {
        let assoc = alg.associator(
            &VecElem::even(self.inner.clone()),
            &VecElem::bar(self.m1.clone()),
            &VecElem::bar(self.m2.clone()),
        );
        alg.mul(&assoc, &VecElem::even(self.outer.clone()))
    }
}

impl fmt::Display for AssociatorTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, bar({}), bar({}))*({})", self.inner, self.m1, self.m2, self.outer)
    }
}

/// Evaluates an associator form in `J(A, Δ)`.
pub fn evaluate_associator_form(terms: &[AssociatorTerm]) -> VecElem<Rational> {
    let alg = JADelta::default();
    terms
        .iter()
        .fold(VecElem::zero(), |acc, t| acc.add(&t.value(&alg)))
}

/// Solves `target = Σ λ a_n D_j(b_m)` over `A`-basis elements `a_n`, `b_m` of
/// degree at most `deg_bound`, then groups terms by `(j, b_m)`.
pub fn find_certificate(target: &GammaEl, deg_bound: usize) -> Result<Certificate> {
    if !target.in_space(Space::A) {
        return Err(Error::NotInSpace {
            element: target.to_string(),
            space: Space::A.name(),
        });
    }
    let mut cert = Certificate {
        status: CertStatus::Found,
        target: target.clone(),
        deg_bound,
        terms: Vec::new(),
    };
    if target.is_zero() {
        return Ok(cert);
    }
    let basis = enumerate_basis::<Rational>(Space::A, deg_bound);
    let mut unknowns = Vec::new();
    for j in DerivIndex::ALL {
        let dj = j.derivation();
        for (m, b) in basis.iter().enumerate() {
            let db = dj.apply(b);
            if db.is_zero() {
                continue;
            }
            for (n, a) in basis.iter().enumerate() {
                unknowns.push((j, m, n, a * &db));
            }
        }
    }
    let w = unknowns
        .iter()
        .map(|u| &u.3)
        .chain([target])
        .filter_map(|e| match e.degree() {
            Degree::Finite(d) => Some(d),
            Degree::NegInfinity => None,
        })
        .max()
        .unwrap_or(0);
    let cols: Vec<Vec<Rational>> = unknowns
        .iter()
        .map(|u| gamma_coords(&u.3, w).expect("fits"))
        .collect();
    let Some(x) = solve(&cols, &gamma_coords(target, w).expect("fits")) else {
        cert.status = CertStatus::NotFoundAtBound;
        return Ok(cert);
    };
    for j in DerivIndex::ALL {
        for (m, b) in basis.iter().enumerate() {
            let left = unknowns
                .iter()
                .zip(&x)
                .filter(|((uj, um, _, _), c)| *uj == j && *um == m && !c.is_zero())
                .fold(CurveElem::zero(), |acc, ((_, _, n, _), c)| &acc + &basis[*n].scale(c));
            if !left.is_zero() {
                cert.terms.push(CertTerm {
                    left,
                    deriv: j,
                    argument: b.clone(),
                    right: CurveElem::one(),
                });
            }
        }
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GammaEl {
        s.parse().unwrap()
    }

    #[test]
    fn hand_certificate_verifies() {
        let cert = Certificate {
            status: CertStatus::Found,
            target: g("3*y^4 - 1"),
            deg_bound: 2,
            terms: vec![
                CertTerm {
                    left: g("1"),
                    deriv: DerivIndex::D11,
                    argument: g("x*y"),
                    right: g("1"),
                },
                CertTerm {
                    left: g("y^2"),
                    deriv: DerivIndex::D22,
                    argument: g("x*y"),
                    right: g("1"),
                },
            ],
        };
        assert!(cert.verify());
        let found = find_certificate(&g("3*y^4 - 1"), 4).unwrap();
        assert!(found.verify());
    }

    #[test]
    fn zero_target_is_empty() {
        let cert = find_certificate(&g("0"), 4).unwrap();
        assert!(cert.terms.is_empty());
        assert!(cert.verify());
    }

    #[test]
    fn associators_are_derivations() {
        let alg = JADelta::default();
        for a in ["y^2", "x*y", "1 - 3*y^4 + x*y^3"] {
            for j in DerivIndex::ALL {
                let (m1, m2) = j.odd_pair();
                let t = AssociatorTerm {
                    inner: g(a),
                    m1,
                    m2,
                    outer: g("1"),
                };
                assert_eq!(t.value(&alg), VecElem::even(j.derivation().apply(&g(a))), "{j} {a}");
            }
        }
    }

    #[test]
    fn target_outside_a_is_rejected() {
        assert!(find_certificate(&g("y"), 4).is_err());
    }
}
