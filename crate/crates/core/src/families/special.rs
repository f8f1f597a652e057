use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{GaussianRational, Scalar};
use crate::error::Result;

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn binomial_q(n: i64, k: i64) -> GaussianRational {
    GaussianRational::real(binomial(n, k).into())
}

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`.
pub fn rising(a: &GaussianRational, k: usize) -> GaussianRational {
    let mut acc = GaussianRational::one();
    let mut x = a.clone();
    for _ in 0..k {
        acc = &acc * &x;
        x += &GaussianRational::one();
    }
    acc
}

/// Gaussian binomial `[n, m]_q` from the product formula with one exact division.
pub fn q_binomial<S: Scalar>(n: usize, m: usize, q: &S) -> Result<S> {
    if m > n {
        return Ok(S::zero());
    }
    let mut num = S::one();
    let mut den = S::one();
    for i in 0..m {
        num = num * &(S::one() - q.pow((n - i) as u32));
        den = den * &(S::one() - q.pow((i + 1) as u32));
    }
    num.try_div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ParamSym, Poly, Symbol};

    fn q_pascal(n: usize, m: usize, q: &Poly) -> Poly {
        if m == 0 || m == n {
            return Poly::one();
        }
        if m > n {
            return Poly::zero();
        }
        q_pascal(n - 1, m - 1, q) + q.pow(m as u32) * q_pascal(n - 1, m, q)
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(4, -1), BigInt::zero());
    }

    #[test]
    fn rising_factorials() {
        let a = GaussianRational::ratio(3, 2);
        assert_eq!(rising(&a, 0), GaussianRational::one());
        assert_eq!(rising(&a, 3), GaussianRational::ratio(105, 8));
    }

    #[test]
    fn q_binomial_matches_pascal_rule_and_value() {
        let t = Poly::symbol(Symbol::param(ParamSym::SqrtQ));
        let q = t.pow(2);
        for n in 0..=6 {
            for m in 0..=n + 1 {
                assert_eq!(q_binomial(n, m, &q).unwrap(), q_pascal(n, m, &q), "[{n},{m}]");
            }
        }
        let half = Poly::constant(GaussianRational::ratio(1, 2));
        assert_eq!(q_binomial(4, 2, &half).unwrap(), Poly::constant(GaussianRational::ratio(35, 16)));
    }
}
