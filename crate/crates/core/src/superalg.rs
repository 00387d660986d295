//! The contract every Z2-graded algebra in this crate implements.

use std::fmt;

use rand::RngCore;
use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub const BOTH: [Parity; 2] = [Parity::Even, Parity::Odd];

    pub fn bit(self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_bit(bit: u32) -> Self {
        if bit.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Parity of a product.
    pub fn xor(self, other: Parity) -> Parity {
        Parity::from_bit(self.bit() + other.bit())
    }

    /// All `2^k` parity patterns of length `k`, in binary counting order.
    pub fn patterns(k: usize) -> Vec<Vec<Parity>> {
        (0..1u32 << k)
            .map(|m| (0..k).map(|i| Parity::from_bit((m >> (k - 1 - i)) & 1)).collect())
            .collect()
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "0",
            Parity::Odd => "1",
        })
    }
}

/// `(-1)^(sum of products of parity bits)` as a boolean "negate" flag.
pub fn sign_flip(pairs: &[(Parity, Parity)]) -> bool {
    pairs.iter().map(|(a, b)| a.bit() * b.bit()).sum::<u32>() % 2 == 1
}

/// A Z2-graded algebra over `Self::Scalar`, given by its operations.
///
/// `parity` returns `None` for inhomogeneous elements; zero counts as even.
pub trait SuperAlgebra: Sync {
    type Scalar: Scalar;
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync;

    fn name(&self) -> String;
    fn zero(&self) -> Self::Elem;
    fn unit(&self) -> Option<Self::Elem>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: &Self::Scalar) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `(even part, odd part)`
    fn split(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem);
    fn sample(&self, parity: Parity, max_deg: usize, rng: &mut dyn RngCore) -> Self::Elem;

    fn parity(&self, a: &Self::Elem) -> Option<Parity> {
        let (even, odd) = self.split(a);
        let zero = self.zero();
        if odd == zero {
            Some(Parity::Even)
        } else if even == zero {
            Some(Parity::Odd)
        } else {
            None
        }
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn signed(&self, a: &Self::Elem, negate: bool) -> Self::Elem {
        if negate {
            self.neg(a)
        } else {
            a.clone()
        }
    }

    fn describe(&self, a: &Self::Elem) -> String {
        a.to_string()
    }

    /// `(x z) y - x (z y)`
    fn associator(&self, x: &Self::Elem, z: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.sub(&self.mul(&self.mul(x, z), y), &self.mul(x, &self.mul(z, y)))
    }
}
