//! The ring Z[α] with α = (1+√5)/2, stored in the basis {1, α}.
//!
//! With α² = α + 1 every quantity the Fibonomial bridge needs (α, β = 1 − α,
//! q = β/α = α − 2) has integer coordinates, so no denominators appear.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Ring;

/// Element `a + b·α` of Z[α].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Golden {
    pub a: BigInt,
    pub b: BigInt,
}

impl Golden {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Golden {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn integer(a: impl Into<BigInt>) -> Self {
        Golden::new(a, 0)
    }

    pub fn alpha() -> Self {
        Golden::new(0, 1)
    }

    /// β = 1 − α, the conjugate of α.
    pub fn beta() -> Self {
        Golden::new(1, -1)
    }

    /// q = β/α = α − 2.
    pub fn q() -> Self {
        Golden::new(-2, 1)
    }

    /// Galois conjugation α ↦ β: (a, b) ↦ (a + b, −b).
    pub fn conj(&self) -> Self {
        Golden {
            a: &self.a + &self.b,
            b: -&self.b,
        }
    }

    /// x·conj(x) = a² + ab − b², a rational integer.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    pub fn pow(&self, e: u64) -> Self {
        self.power(e)
    }

    /// Returns the integer value when the α-coordinate vanishes.
    pub fn as_integer(&self) -> Option<&BigInt> {
        if self.b.is_zero() {
            Some(&self.a)
        } else {
            None
        }
    }

    pub fn is_integer(&self) -> bool {
        self.b.is_zero()
    }
}

impl fmt::Display for Golden {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.b.is_negative() {
            write!(f, "{}-{}α", self.a, -&self.b)
        } else {
            write!(f, "{}+{}α", self.a, self.b)
        }
    }
}

impl<'a> Mul<&'a Golden> for &'a Golden {
    type Output = Golden;

    fn mul(self, rhs: &Golden) -> Golden {
        // (a+bα)(c+dα) = (ac+bd) + (ad+bc+bd)α
        let bd = &self.b * &rhs.b;
        Golden {
            a: &self.a * &rhs.a + &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a + bd,
        }
    }
}

impl<'a> Add<&'a Golden> for &'a Golden {
    type Output = Golden;

    fn add(self, rhs: &Golden) -> Golden {
        Golden {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl<'a> Sub<&'a Golden> for &'a Golden {
    type Output = Golden;

    fn sub(self, rhs: &Golden) -> Golden {
        Golden {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Neg for &Golden {
    type Output = Golden;

    fn neg(self) -> Golden {
        Golden {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<Golden> for Golden {
            type Output = Golden;
            fn $m(self, rhs: Golden) -> Golden {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Golden {
    type Output = Golden;
    fn neg(self) -> Golden {
        -&self
    }
}

impl Zero for Golden {
    fn zero() -> Self {
        Golden::integer(0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Golden {
    fn one() -> Self {
        Golden::integer(1)
    }
}

impl Ring for Golden {
    fn from_int(n: &BigInt) -> Self {
        Golden::integer(n.clone())
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    /// Units of Z[α] are exactly the elements of norm ±1.
    fn try_inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.abs().is_one() {
            let c = self.conj();
            Some(Golden {
                a: &c.a * &n,
                b: &c.b * &n,
            })
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> Golden {
        Golden::new(a, b)
    }

    #[test]
    fn golden_mul_examples() {
        assert_eq!(&Golden::alpha() * &Golden::beta(), g(-1, 0));
        assert_eq!(&Golden::alpha() * &Golden::alpha(), g(1, 1));
        // q·α = β
        assert_eq!(&g(-2, 1) * &g(0, 1), g(1, -1));
    }

    #[test]
    fn golden_conj_examples() {
        assert_eq!(Golden::alpha().conj(), g(1, -1));
        assert_eq!(g(3, 5).conj().conj(), g(3, 5));
        assert_eq!((&Golden::alpha() * &Golden::beta()).conj(), g(-1, 0));
    }

    #[test]
    fn golden_pow_examples() {
        assert_eq!(Golden::alpha().pow(0), g(1, 0));
        assert_eq!(Golden::alpha().pow(2), g(1, 1));
        // oracle: iterated multiplication
        let mut it = Golden::one();
        for _ in 0..5 {
            it = &it * &Golden::alpha();
        }
        assert_eq!(it, g(3, 5));
        assert_eq!(Golden::alpha().pow(5), it);
    }

    #[test]
    fn norm_is_multiplicative_and_rational() {
        let x = g(4, -7);
        let y = g(-3, 2);
        let p = &x * &x.conj();
        assert!(p.is_integer());
        assert_eq!(p.a, x.norm());
        assert_eq!((&x * &y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn units_invert() {
        for u in [Golden::alpha(), Golden::beta(), Golden::q(), g(-1, 0), g(2, 3)] {
            let inv = u.try_inv().expect("unit");
            assert_eq!(&u * &inv, Golden::one());
        }
        assert_eq!(g(2, 0).try_inv(), None);
    }

    #[test]
    fn display() {
        assert_eq!(g(3, 5).to_string(), "3+5α");
        assert_eq!(g(1, -1).to_string(), "1-1α");
        assert_eq!(g(-4, 0).to_string(), "-4");
    }
}
