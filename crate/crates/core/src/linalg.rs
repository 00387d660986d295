//! Exact linear algebra over [`Scalar`] fields: incremental row echelon
//! forms that remember how each row was built, and a dense linear solver.

use crate::scalar::Scalar;

#[derive(Debug, Clone)]
struct Row<S> {
    pivot: usize,
    v: Vec<S>,
    /// `v = Σ comb[i] * input_i`
    comb: Vec<S>,
}

/// Incremental echelon basis of a span of inserted vectors.
///
/// Each stored row has a unit pivot and zeros at the pivots of earlier rows,
/// so reducing against the rows in insertion order clears every pivot.
#[derive(Debug, Clone)]
pub struct Echelon<S> {
    dim: usize,
    rows: Vec<Row<S>>,
    inputs: usize,
}

impl<S: Scalar> Echelon<S> {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            rows: Vec::new(),
            inputs: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of vectors that were accepted by [`Echelon::insert`].
    pub fn inputs(&self) -> usize {
        self.inputs
    }

    /// Returns the residual of `v` and the row multipliers used.
    fn reduce(&self, mut v: Vec<S>) -> (Vec<S>, Vec<S>) {
        let mut used = vec![S::zero(); self.rows.len()];
        for (k, row) in self.rows.iter().enumerate() {
            let c = v[row.pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (x, r) in v.iter_mut().zip(&row.v).skip(row.pivot) {
                if !r.is_zero() {
                    *x = x.clone() - c.clone() * r.clone();
                }
            }
            used[k] = c;
        }
        (v, used)
    }

    pub fn contains(&self, v: &[S]) -> bool {
        self.reduce(v.to_vec()).0.iter().all(|x| x.is_zero())
    }

    /// Adds `v` if it is independent of the current span; returns whether it
    /// was added. Accepted vectors are numbered `0, 1, 2, ...`.
    pub fn insert(&mut self, v: &[S]) -> bool {
        assert_eq!(v.len(), self.dim);
        let (mut res, used) = self.reduce(v.to_vec());
        let Some(pivot) = res.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let mut comb = vec![S::zero(); self.inputs + 1];
        comb[self.inputs] = S::one();
        for (row, c) in self.rows.iter().zip(&used) {
            if c.is_zero() {
                continue;
            }
            for (x, r) in comb.iter_mut().zip(&row.comb) {
                *x = x.clone() - c.clone() * r.clone();
            }
        }
        let inv = S::one() / res[pivot].clone();
        for x in res.iter_mut().chain(comb.iter_mut()) {
            *x = x.clone() * inv.clone();
        }
        self.rows.push(Row { pivot, v: res, comb });
        self.inputs += 1;
        true
    }

    /// Coefficients `λ` with `v = Σ λ_i input_i`, if `v` lies in the span.
    pub fn express(&self, v: &[S]) -> Option<Vec<S>> {
        let (res, used) = self.reduce(v.to_vec());
        if res.iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut lambda = vec![S::zero(); self.inputs];
        for (row, c) in self.rows.iter().zip(&used) {
            if c.is_zero() {
                continue;
            }
            for (x, r) in lambda.iter_mut().zip(&row.comb) {
                *x = x.clone() + c.clone() * r.clone();
            }
        }
        Some(lambda)
    }
}

/// Solves `Σ_j x_j columns[j] = rhs` exactly; free variables are set to zero.
pub fn solve<S: Scalar>(columns: &[Vec<S>], rhs: &[S]) -> Option<Vec<S>> {
    let mut ech = Echelon::new(rhs.len());
    let mut kept = Vec::new();
    for (j, c) in columns.iter().enumerate() {
        if ech.insert(c) {
            kept.push(j);
        }
    }
    let lambda = ech.express(rhs)?;
    let mut x = vec![S::zero(); columns.len()];
    for (j, l) in kept.into_iter().zip(lambda) {
        x[j] = l;
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use proptest::prelude::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x)).collect()
    }

    #[test]
    fn span_and_expression() {
        let mut e = Echelon::new(3);
        assert!(e.insert(&q(&[1, 2, 0])));
        assert!(e.insert(&q(&[0, 1, 1])));
        assert!(!e.insert(&q(&[2, 5, 1])));
        assert_eq!(e.rank(), 2);
        let l = e.express(&q(&[1, 4, 2])).unwrap();
        assert_eq!(l, q(&[1, 2]));
        assert!(e.express(&q(&[0, 0, 1])).is_none());
    }

    #[test]
    fn solver() {
        let cols = vec![q(&[1, 0]), q(&[1, 0]), q(&[0, 2])];
        assert_eq!(solve(&cols, &q(&[3, 4])).unwrap(), q(&[3, 0, 2]));
        assert!(solve(&cols[..2], &q(&[0, 1])).is_none());
    }

    proptest! {
        #[test]
        fn expressions_reconstruct(rows in prop::collection::vec(prop::collection::vec(-3i64..4, 4), 1..7),
                                   mix in prop::collection::vec(-3i64..4, 7)) {
            let mut e = Echelon::new(4);
            let mut accepted = Vec::new();
            for r in &rows {
                if e.insert(&q(r)) {
                    accepted.push(q(r));
                }
            }
            let mut target = q(&[0, 0, 0, 0]);
            for (r, m) in rows.iter().zip(&mix) {
                for (t, x) in target.iter_mut().zip(q(r)) {
                    *t = t.clone() + x * Rational::from_integer(*m);
                }
            }
            let l = e.express(&target).expect("combination of inserted rows");
            let mut back = q(&[0, 0, 0, 0]);
            for (v, c) in accepted.iter().zip(&l) {
                for (b, x) in back.iter_mut().zip(v) {
                    *b = b.clone() + x.clone() * c.clone();
                }
            }
            prop_assert_eq!(back, target);
        }
    }
}
