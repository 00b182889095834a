//! Dense univariate polynomials over an exact field.
//!
//! The same dense representation is used for polynomials over the rationals
//! (Hilbert series, cyclotomic polynomials) and over a cyclotomic field
//! (trace series). Coefficients are abstracted behind [`Coeff`].

use num::BigRational;
use num::{One, Zero};
use std::fmt;

/// Exact field coefficient. Implemented for `BigRational` and `CycNum`.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Exact division; panics on division by zero.
    fn div(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// A polynomial in one variable, stored low degree first with no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Poly<C> {
    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// c * t^d
    pub fn monomial(c: C, d: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::zero(); d + 1];
        coeffs[d] = c;
        Poly { coeffs }
    }

    /// 1 - t^a
    pub fn one_minus_tpow(a: usize) -> Self {
        assert!(a > 0);
        let mut coeffs = vec![C::zero(); a + 1];
        coeffs[0] = C::one();
        coeffs[a] = C::one().neg();
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Largest power of t dividing the polynomial (0 for the zero polynomial).
    pub fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    pub fn coeff(&self, d: usize) -> C {
        self.coeffs.get(d).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&other.coeff(i)));
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).sub(&other.coeff(i)));
        }
        Poly::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::from_coeffs(out)
    }

    /// Multiply by t^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Euclidean division: self = q * div + r with deg r < deg div.
    pub fn divmod(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "polynomial division by zero");
        let dd = div.degree().unwrap();
        if self.degree().map_or(true, |d| d < dd) {
            return (Poly::zero(), self.clone());
        }
        let lead = div.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let dq = rem.len() - 1 - dd;
        let mut quot = vec![C::zero(); dq + 1];
        for i in (0..=dq).rev() {
            let c = rem[i + dd].clone();
            if c.is_zero() {
                continue;
            }
            let q = c.div(&lead);
            for (j, b) in div.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].sub(&q.mul(b));
            }
            quot[i] = q;
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Exact quotient; returns None when the division leaves a remainder.
    pub fn exact_div(&self, div: &Self) -> Option<Self> {
        let (q, r) = self.divmod(div);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Coefficient reversal: t^deg * p(1/t). Zero maps to zero.
    pub fn reverse(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly::from_coeffs(coeffs)
    }

    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        if let Some(lead) = a.leading().cloned() {
            a = a.scale(&C::one().div(&lead));
        }
        a
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// Render with the given variable symbol, low powers first: `1 - t^2 + 2*t^3`.
    pub fn display_with(&self, var: &str, fmt_coeff: impl Fn(&C) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = fmt_coeff(c);
            let (sign, mag) = match s.strip_prefix('-') {
                Some(rest) => ('-', rest.to_string()),
                None => ('+', s),
            };
            if out.is_empty() {
                if sign == '-' {
                    out.push('-');
                }
            } else {
                out.push_str(if sign == '-' { " - " } else { " + " });
            }
            let pow = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if pow.is_empty() {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&pow);
            } else {
                out.push_str(&format!("{mag}*{pow}"));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    fn q(n: i64) -> BigRational {
        BigRational::from_i64(n).unwrap()
    }

    fn poly(v: &[i64]) -> Poly<BigRational> {
        Poly::from_coeffs(v.iter().map(|&n| q(n)).collect())
    }

    #[test]
    fn divmod_roundtrip() {
        let a = poly(&[1, 0, -3, 2, 5]);
        let b = poly(&[2, 1]);
        let (quo, rem) = a.divmod(&b);
        assert_eq!(quo.mul(&b).add(&rem), a);
        assert!(rem.degree() < b.degree());
    }

    #[test]
    fn exact_div_detects_remainder() {
        let a = Poly::<BigRational>::one_minus_tpow(6);
        let b = Poly::one_minus_tpow(3);
        let c = Poly::one_minus_tpow(4);
        assert!(a.exact_div(&b).is_some());
        assert!(a.exact_div(&c).is_none());
    }

    #[test]
    fn gcd_of_cyclotomic_like_factors() {
        let a = Poly::<BigRational>::one_minus_tpow(4);
        let b = Poly::one_minus_tpow(6);
        // gcd(1-t^4, 1-t^6) = +-(1-t^2) up to normalization
        let g = Poly::gcd(&a, &b);
        let expect = poly(&[-1, 0, 1]).scale(&q(1)); // monic t^2 - 1
        assert_eq!(g, expect);
    }

    #[test]
    fn reverse_and_valuation() {
        let a = poly(&[0, 0, 1, 2]);
        assert_eq!(a.valuation(), 2);
        assert_eq!(a.reverse(), poly(&[2, 1]));
    }

    #[test]
    fn display_matches_expected_shape() {
        let a = poly(&[1, 0, 0, 0, 0, 0, -1, -1]);
        assert_eq!(a.display_with("t", |c| c.to_string()), "1 - t^6 - t^7");
    }
}
