//! Bounded evidence that `M` is not a cyclic `A`-module.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::curve::{enumerate_basis, CurveElem, Space};
use crate::error::{Error, Result};
use crate::linalg::solve;
use crate::poly::{Degree, Polynomial};
use crate::structure::saturate::gamma_coords;
use crate::{GammaEl, Poly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProbeStatus {
    Infeasible,
    Solution,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ProbeResult {
    pub status: ProbeStatus,
    pub z: String,
    /// `(c, d)` with `z c = x` and `z d = y`.
    pub solution: Option<(String, String)>,
    pub deg_bound: usize,
}

impl ProbeResult {
    pub fn infeasible(&self) -> bool {
        self.status == ProbeStatus::Infeasible
    }
}

/// Solves `z c = target` for `c` in `A` of degree at most `deg_bound`.
fn solve_multiplier(z: &GammaEl, target: &GammaEl, deg_bound: usize) -> Option<GammaEl> {
    let basis = enumerate_basis::<Rational>(Space::A, deg_bound);
    let images: Vec<GammaEl> = basis.iter().map(|b| z * b).collect();
    let w = images
        .iter()
        .chain([target])
        .map(|e| match e.degree() {
            Degree::Finite(d) => d,
            Degree::NegInfinity => 0,
        })
        .max()
        .unwrap_or(0);
    let cols: Vec<Vec<Rational>> = images.iter().map(|e| gamma_coords(e, w).expect("fits")).collect();
    let x = solve(&cols, &gamma_coords(target, w).expect("fits"))?;
    Some(
        basis
            .iter()
            .zip(x)
            .fold(CurveElem::zero(), |acc, (b, c)| &acc + &b.scale(&c)),
    )
}

/// Looks for `c, d ∈ A` of degree at most `deg_bound` with `z c = x` and
/// `z d = y`; any solution found is re-verified before it is reported.
pub fn noncyclic_probe(z: &GammaEl, deg_bound: usize) -> Result<ProbeResult> {
    if z.is_zero() || !z.in_space(Space::M) {
        return Err(Error::NotInModule(z.to_string()));
    }
    let found = solve_multiplier(z, &CurveElem::x(), deg_bound)
        .zip(solve_multiplier(z, &CurveElem::y(), deg_bound));
    let mut out = ProbeResult {
        status: ProbeStatus::Infeasible,
        z: z.to_string(),
        solution: None,
        deg_bound,
    };
    if let Some((c, d)) = found {
        verify_probe_solution(z, &c, &d).map_err(Error::Invalid)?;
        out.status = ProbeStatus::Solution;
        out.solution = Some((c.to_string(), d.to_string()));
    }
    Ok(out)
}

/// Checks a claimed generator witness: `c, d ∈ A`, `z c = x`, `z d = y`, and
/// the consequences `x d = y c` and `x (a c + b d) = x` for `z = x a + y b`.
pub fn verify_probe_solution(z: &GammaEl, c: &GammaEl, d: &GammaEl) -> std::result::Result<(), String> {
    if !c.in_space(Space::A) || !d.in_space(Space::A) {
        return Err(format!("multipliers not in A: c = {c}, d = {d}"));
    }
    let (x, y) = (CurveElem::x(), CurveElem::y());
    if z * c != x {
        return Err(format!("z*c = {} is not x", z * c));
    }
    if z * d != y {
        return Err(format!("z*d = {} is not y", z * d));
    }
    if &x * d != &y * c {
        return Err("x*d differs from y*c".into());
    }
    let (a, b) = z.split_module().map_err(|e| e.to_string())?;
    if &x * &(&a * c + &b * d) != x {
        return Err("x*(a*c + b*d) differs from x".into());
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ParityWitness {
    pub left: String,
    pub right: String,
    pub deg_left: Option<usize>,
    pub deg_right: usize,
    pub distinct_mod4: bool,
}

/// Compares `u (1 - y^4) h1^2` with `1 + u y^2 e1^2` for even `h1`, `e1`:
/// the left degree is `-∞` or `0 mod 4`, the right one is `0` or `2 mod 4`,
/// so the two can never agree.
pub fn parity_degree_witness(h1: &Poly, e1: &Poly, u: &Rational) -> Result<ParityWitness> {
    for p in [h1, e1] {
        if !p.has_even_support() {
            return Err(Error::OddSupport(p.to_string()));
        }
    }
    if num_traits::Zero::is_zero(u) {
        return Err(Error::ZeroScalar);
    }
    let one = Polynomial::one();
    let left = (&one - &Polynomial::monomial(Rational::from_integer(1), 4)) * h1 * h1;
    let left = left.scale(u);
    let right = &one + &(Polynomial::monomial(u.clone(), 2) * e1 * e1);
    let deg_left = match left.degree() {
        Degree::Finite(d) => Some(d),
        Degree::NegInfinity => None,
    };
    let Degree::Finite(deg_right) = right.degree() else {
        return Err(Error::Invalid("right side vanished".into()));
    };
    if deg_left.is_some_and(|d| d % 4 != 0) || (deg_right != 0 && deg_right % 4 != 2) {
        return Err(Error::Invalid(format!("unexpected degrees {deg_left:?}, {deg_right}")));
    }
    if left == right {
        return Err(Error::Invalid(format!("sides agree: {left}")));
    }
    // a constant right side is separated from the left by degree alone
    let distinct_mod4 = match deg_left {
        None => true,
        Some(l) => deg_right == 0 || l % 4 != deg_right % 4,
    } && deg_left != Some(deg_right);
    Ok(ParityWitness {
        left: left.to_string(),
        right: right.to_string(),
        deg_left,
        deg_right,
        distinct_mod4,
    })
}

/// Random `(h1, e1, u)`: `h1`, `e1` in `F[y^2]` of degree at most
/// `2 max_deg` with coefficients in `[-3, 3]`, `u = n/d` nonzero with
/// `|n| <= 5`, `1 <= d <= 5`.
pub fn sample_witness_input<R: Rng + ?Sized>(max_deg: usize, rng: &mut R) -> (Poly, Poly, Rational) {
    let even_poly = |rng: &mut R| {
        let mut coeffs = vec![0i64; 2 * max_deg + 1];
        for k in (0..=2 * max_deg).step_by(2) {
            coeffs[k] = rng.gen_range(-3..=3);
        }
        Polynomial::from_ints(&coeffs)
    };
    let h1 = even_poly(rng);
    let e1 = even_poly(rng);
    let n = loop {
        let n = rng.gen_range(-5i64..=5);
        if n != 0 {
            break n;
        }
    };
    (h1, e1, Rational::new(n, rng.gen_range(1..=5)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GammaEl {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn probe_examples() {
        assert!(noncyclic_probe(&g("x"), 12).unwrap().infeasible());
        assert!(noncyclic_probe(&g("x + y"), 12).unwrap().infeasible());
        assert!(matches!(noncyclic_probe(&g("1"), 12), Err(Error::NotInModule(_))));
        assert!(matches!(noncyclic_probe(&g("0"), 12), Err(Error::NotInModule(_))));
    }

    #[test]
    fn fake_solutions_are_rejected() {
        assert!(verify_probe_solution(&g("x"), &g("1"), &g("0")).is_err());
        assert!(verify_probe_solution(&g("x"), &g("y"), &g("1")).is_err());
        assert!(verify_probe_solution(&g("y"), &g("x*y"), &g("1")).is_err());
    }

    #[test]
    fn witness_examples() {
        let one = Rational::from_integer(1);
        let w = parity_degree_witness(&p("1"), &p("1"), &one).unwrap();
        assert_eq!((w.deg_left, w.deg_right, w.distinct_mod4), (Some(4), 2, true));
        let w = parity_degree_witness(&p("0"), &p("0"), &one).unwrap();
        assert_eq!((w.deg_left, w.deg_right, w.distinct_mod4), (None, 0, true));
        let w = parity_degree_witness(&p("y^2"), &p("y^4"), &Rational::from_integer(-2)).unwrap();
        assert_eq!((w.deg_left, w.deg_right, w.distinct_mod4), (Some(8), 10, true));
        assert!(matches!(parity_degree_witness(&p("y"), &p("1"), &one), Err(Error::OddSupport(_))));
        assert!(matches!(
            parity_degree_witness(&p("1"), &p("1"), &Rational::from_integer(0)),
            Err(Error::ZeroScalar)
        ));
    }
}
