use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Monomial, MultiPoly, Rational, Var};
use crate::error::{Error, Result};

/// Dense univariate polynomial over Q, lowest coefficient first.
///
/// This is the workhorse of the PID linear algebra; the variable it stands
/// for is tracked by the caller.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    c: Vec<Rational>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn x() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_coeffs(c: Vec<Rational>) -> Self {
        let mut p = UPoly { c };
        p.trim();
        p
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::from_coeffs(
            c.iter()
                .map(|&a| Rational::from_integer(a.into()))
                .collect(),
        )
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(|a| a.is_zero()) {
            self.c.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.c.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree with zero ranked above everything, for pivot selection.
    pub fn degree_key(&self) -> usize {
        self.degree().unwrap_or(usize::MAX)
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn lc(&self) -> Rational {
        self.c.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, k: &Rational) -> UPoly {
        if k.is_zero() {
            return UPoly::zero();
        }
        UPoly {
            c: self.c.iter().map(|a| a * k).collect(),
        }
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        self.scale(&(Rational::one() / self.lc()))
    }

    pub fn shift(&self, k: usize) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![Rational::zero(); k];
        c.extend(self.c.iter().cloned());
        UPoly { c }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let inv = Rational::one() / d.lc();
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = &r[k + dd] * &inv;
            if coef.is_zero() {
                continue;
            }
            for (i, di) in d.c.iter().enumerate() {
                r[k + i] -= &coef * di;
            }
            q[k] = coef;
        }
        (UPoly::from_coeffs(q), UPoly::from_coeffs(r))
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        self.divrem(d).1
    }

    pub fn divides(&self, other: &UPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: `(g, s, t)` with `s·self + t·other = g`, `g` monic.
    pub fn xgcd(&self, other: &UPoly) -> (UPoly, UPoly, UPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UPoly::one(), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let k = Rational::one() / r0.lc();
        (r0.scale(&k), s0.scale(&k), t0.scale(&k))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    /// `p(a·y + b)` as a polynomial in `y`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> UPoly {
        let lin = UPoly::from_coeffs(vec![b.clone(), a.clone()]);
        let mut acc = UPoly::zero();
        for c in self.c.iter().rev() {
            acc = &(&acc * &lin) + &UPoly::constant(c.clone());
        }
        acc
    }

    /// `p(-y)`.
    pub fn reflect(&self) -> UPoly {
        UPoly::from_coeffs(
            self.c
                .iter()
                .enumerate()
                .map(|(i, a)| if i % 2 == 1 { -a } else { a.clone() })
                .collect(),
        )
    }

    pub fn to_multi(&self, v: Var) -> MultiPoly {
        MultiPoly::from_terms(
            self.c
                .iter()
                .enumerate()
                .map(|(i, a)| (Monomial::var_pow(v, i as u32), a.clone())),
        )
    }

    /// Fails if `p` involves any variable other than `v`.
    pub fn from_multi(p: &MultiPoly, v: Var) -> Result<UPoly> {
        let mut c = Vec::new();
        for (m, a) in p.terms() {
            if m.total_degree() != m.exp(v) {
                return Err(Error::Format(format!(
                    "polynomial `{p}` is not univariate in {v}"
                )));
            }
            let e = m.exp(v) as usize;
            if c.len() <= e {
                c.resize(e + 1, Rational::zero());
            }
            c[e] = a.clone();
        }
        Ok(UPoly::from_coeffs(c))
    }

    /// Display using the given variable name.
    pub fn display_in(&self, v: Var) -> String {
        self.to_multi(v).to_string()
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({})", self.display_in(Var::D))
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.c.len().max(rhs.c.len());
        UPoly::from_coeffs(
            (0..n)
                .map(|i| match (self.c.get(i), rhs.c.get(i)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        self + &(-rhs)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly {
            c: self.c.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![Rational::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn division_and_gcd() {
        let a = UPoly::from_ints(&[-1, 0, 1]); // x^2 - 1
        let b = UPoly::from_ints(&[1, 1]); // x + 1
        let (q, r) = a.divrem(&b);
        assert_eq!(q, UPoly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(
            a.gcd(&UPoly::from_ints(&[-1, 1])),
            UPoly::from_ints(&[-1, 1])
        );
        let (g, s, t) = a.xgcd(&UPoly::from_ints(&[2, 1]));
        assert!(g.is_one());
        assert_eq!(&(&s * &a) + &(&t * &UPoly::from_ints(&[2, 1])), g);
    }

    #[test]
    fn composition() {
        let p = UPoly::from_ints(&[0, 0, 1]);
        assert_eq!(
            p.compose_affine(&rat(1), &rat(1)),
            UPoly::from_ints(&[1, 2, 1])
        );
        assert_eq!(
            UPoly::from_ints(&[1, 2, 3]).reflect(),
            UPoly::from_ints(&[1, -2, 3])
        );
        assert_eq!(p.eval(&rat(3)), rat(9));
    }
}
