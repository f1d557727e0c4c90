//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! `coeffs[i]` is the coefficient of `x^i`. The vector never ends in a zero;
//! the zero polynomial is the empty vector.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// Trailing zeros are stripped.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `a + b x`.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_i64s(&[a, b])
    }

    /// `(a + b x)^k` by the binomial theorem.
    pub fn linear_power(a: i64, b: i64, k: usize) -> Self {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        let mut coeffs = Vec::with_capacity(k + 1);
        let mut binom = BigInt::one();
        for i in 0..=k {
            coeffs.push(&binom * num_traits::pow(a.clone(), k - i) * num_traits::pow(b.clone(), i));
            binom = binom * (k - i) / (i + 1);
        }
        Self::from_coeffs(coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `p(-1)` as an alternating sum.
    pub fn eval_minus_one(&self) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .fold(
                BigInt::zero(),
                |acc, (i, c)| if i % 2 == 0 { acc + c } else { acc - c },
            )
    }

    /// Synthetic division by `x + 1`: returns `(quotient, remainder)` with
    /// `self = (x + 1) * quotient + remainder`.
    pub fn div_rem_x_plus_one(&self) -> (Self, BigInt) {
        if self.is_zero() {
            return (Self::zero(), BigInt::zero());
        }
        let d = self.coeffs.len() - 1;
        let mut quotient = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for i in (0..=d).rev() {
            let value = &self.coeffs[i] - &carry;
            if i == 0 {
                return (Self::from_coeffs(quotient), value);
            }
            quotient[i - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }

    /// Largest `k` with `(x + 1)^k` dividing `self`.
    pub fn multiplicity_of_minus_one(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut p = self.clone();
        let mut k = 0;
        loop {
            let (q, r) = p.div_rem_x_plus_one();
            if !r.is_zero() {
                return Ok(k);
            }
            p = q;
            k += 1;
        }
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for IntPolynomial {
    /// Ascending powers of `x`, e.g. `1 + 6x + 9x^2 + 2x^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = if f.alternate() { "t" } else { "x" };
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => f.write_str(var)?,
                (_, false) => write!(f, "{mag}{var}")?,
            }
            if i > 1 {
                write!(f, "^{i}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn arithmetic_examples() {
        let one_plus_x = p(&[1, 1]);
        assert_eq!(&one_plus_x * &one_plus_x, p(&[1, 2, 1]));
        assert_eq!(&one_plus_x + &IntPolynomial::zero(), one_plus_x);
        assert_eq!(one_plus_x.shift(1), p(&[0, 1, 1]));
        assert_eq!(IntPolynomial::zero().shift(3), IntPolynomial::zero());
        assert_eq!(&p(&[1, 2, 3]) - &p(&[1, 2, 3]), IntPolynomial::zero());
        assert_eq!(p(&[1, 0, 0]).degree(), Some(0));
        assert_eq!(IntPolynomial::zero().degree(), None);
    }

    #[test]
    fn linear_powers() {
        assert_eq!(IntPolynomial::linear_power(1, 1, 3), p(&[1, 3, 3, 1]));
        assert_eq!(IntPolynomial::linear_power(1, -1, 2), p(&[1, -2, 1]));
        assert_eq!(IntPolynomial::linear_power(1, 2, 0), IntPolynomial::one());
        assert_eq!(IntPolynomial::linear_power(1, 2, 2), p(&[1, 4, 4]));
    }

    #[test]
    fn minus_one_root() {
        // 1 + 4x + 3x^2 = (1 + x)(1 + 3x)
        let q = p(&[1, 4, 3]);
        assert_eq!(q.eval_minus_one(), BigInt::zero());
        assert_eq!(q.multiplicity_of_minus_one().unwrap(), 1);
        assert_eq!(q.div_rem_x_plus_one(), (p(&[1, 3]), BigInt::zero()));
        assert_eq!(p(&[1, 3, 3, 1]).multiplicity_of_minus_one().unwrap(), 3);
        assert_eq!(p(&[1, 6, 9, 2]).multiplicity_of_minus_one().unwrap(), 0);
        assert_eq!(
            IntPolynomial::zero().multiplicity_of_minus_one(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 6, 9, 2]).to_string(), "1 + 6x + 9x^2 + 2x^3");
        assert_eq!(format!("{:#}", p(&[1, 2, -1])), "1 + 2t - t^2");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn big_coefficients_stay_exact() {
        let big = IntPolynomial::linear_power(1, 1, 200);
        let expected: BigInt = "90548514656103281165404177077484163874504589675413336841320"
            .parse()
            .unwrap();
        assert_eq!(big.coeff(100), expected);
        assert_eq!(big.multiplicity_of_minus_one().unwrap(), 200);
    }

    fn poly_strategy() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-50i64..50, 0..8).prop_map(|c| IntPolynomial::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn division_reconstructs(q in poly_strategy()) {
            let (quot, rem) = q.div_rem_x_plus_one();
            let back = &(&quot * &IntPolynomial::linear(1, 1)) + &IntPolynomial::constant(rem.clone());
            prop_assert_eq!(back, q.clone());
            prop_assert_eq!(rem, q.eval_minus_one());
        }

        #[test]
        fn eval_is_a_ring_homomorphism(a in poly_strategy(), b in poly_strategy(), x in -5i64..5) {
            let x = BigInt::from(x);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
            prop_assert_eq!(a.eval(&BigInt::from(-1)), a.eval_minus_one());
        }
    }
}
