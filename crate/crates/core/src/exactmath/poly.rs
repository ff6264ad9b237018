use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Number of variables in the fixed alphabet.
pub const NVARS: usize = 5;

/// The variable alphabet, listed in increasing term-order rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    D = 0,
    X = 1,
    Lambda = 2,
    Mu = 3,
    T = 4,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::D, Var::X, Var::Lambda, Var::Mu, Var::T];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Var {
        Var::ALL[i]
    }

    /// Printed name; `l` and `m` stand for λ and μ.
    pub fn name(self) -> &'static str {
        match self {
            Var::D => "D",
            Var::X => "x",
            Var::Lambda => "l",
            Var::Mu => "m",
            Var::T => "t",
        }
    }

    pub fn from_name(s: &str) -> Result<Var> {
        match s {
            "D" => Ok(Var::D),
            "x" => Ok(Var::X),
            "l" | "λ" => Ok(Var::Lambda),
            "m" | "μ" => Ok(Var::Mu),
            "t" => Ok(Var::T),
            _ => Err(Error::Format(format!("unknown variable `{s}`"))),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Dense exponent vector over the alphabet, ordered graded-lexicographically
/// with `D < x < l < m < t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        let mut m = [0; NVARS];
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    #[inline]
    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0.iter()) {
            *a += *b;
        }
        Monomial(m)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0.iter()) {
            *a -= *b;
        }
        Monomial(m)
    }

    pub fn with_exp(&self, v: Var, e: u32) -> Monomial {
        let mut m = self.0;
        m[v.index()] = e;
        Monomial(m)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                for i in (0..NVARS).rev() {
                    match self.0[i].cmp(&other.0[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact multivariate polynomial over Q in the variables `D, x, l, m, t`.
///
/// Terms are kept sparse; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v), Rational::one())
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        Self::monomial(Monomial::var_pow(v, e), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::ONE)
    }

    /// Returns the constant value when the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Degree in one variable; `None` for the zero polynomial.
    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    /// True when no term involves a variable outside `allowed`.
    pub fn only_vars(&self, allowed: &[Var]) -> bool {
        self.terms.keys().all(|m| {
            Var::ALL
                .iter()
                .all(|v| allowed.contains(v) || m.exp(*v) == 0)
        })
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// Splits `p = Σ cᵢ vⁱ` and returns `[c₀, …, c_d]` with every `cᵢ` free of `v`.
    pub fn coefficients_in(&self, v: Var) -> Vec<MultiPoly> {
        let Some(d) = self.degree_in(v) else {
            return Vec::new();
        };
        let mut out = vec![MultiPoly::zero(); d as usize + 1];
        for (m, c) in &self.terms {
            let e = m.exp(v);
            out[e as usize].add_term(m.with_exp(v, 0), c.clone());
        }
        out
    }

    /// Divided-power coefficients `n!·cₙ`, so that `p = Σ vⁿ/n! · (n!·cₙ)`.
    pub fn divided_power_coefficients(&self, v: Var) -> Vec<MultiPoly> {
        let mut fact = Rational::one();
        self.coefficients_in(v)
            .into_iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    fact *= Rational::from_integer(BigInt::from(n));
                }
                c.scale(&fact)
            })
            .collect()
    }

    /// The coefficient of `vⁿ` (free of `v`).
    pub fn coefficient_of(&self, v: Var, n: u32) -> MultiPoly {
        MultiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.exp(v) == n)
                .map(|(m, c)| (m.with_exp(v, 0), c.clone())),
        )
    }

    /// Rebuilds `Σ cᵢ vⁱ`.
    pub fn from_coefficients(v: Var, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            p += &c.mul_monomial(&Monomial::var_pow(v, i as u32));
        }
        p
    }

    /// Evaluates one variable at a rational value.
    pub fn eval_var(&self, v: Var, value: &Rational) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let mut k = c.clone();
            for _ in 0..e {
                k *= value;
            }
            p.add_term(m.with_exp(v, 0), k);
        }
        p
    }

    /// Exact division; `None` when `d` does not divide `self`.
    ///
    /// A single divisor is its own Gröbner basis, so the division algorithm
    /// leaves a zero remainder exactly when `d` divides `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let (lm, lc) = d.leading_term()?;
        let (lm, lc) = (*lm, lc.clone());
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return None;
            }
            let qm = m.div(&lm);
            let qc = c / &lc;
            let step = MultiPoly::monomial(qm, qc);
            rem -= &(&step * d);
            quot += &step;
        }
        Some(quot)
    }

    pub fn map_coefficients(&self, f: impl Fn(&Rational) -> Rational) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

fn fmt_monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for v in Var::ALL.iter().rev() {
        match m.exp(*v) {
            0 => {}
            1 => parts.push(v.name().to_string()),
            e => parts.push(format!("{}^{}", v.name(), e)),
        }
    }
    parts.join("*")
}

/// Canonical printing: terms in increasing graded-lex order, variables within
/// a term listed from the highest-ranked variable down.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mono = fmt_monomial(m);
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut r = self.clone();
        r += rhs;
        r
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut r = self.clone();
        r -= rhs;
        r
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                *acc.entry(m).or_insert_with(Rational::zero) += c;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MultiPoly { terms: acc }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::int(c)
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{parse_poly, rat};

    fn p(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn grlex_order_and_printing() {
        assert_eq!(p("x^2 + l*x").to_string(), "x^2 + l*x");
        assert_eq!(p("2*l + D").to_string(), "D + 2*l");
        assert_eq!(p("-1/2*D^2 + 3").to_string(), "3 - 1/2*D^2");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert!(Monomial::var(Var::T) > Monomial::var(Var::D));
        assert!(Monomial::var_pow(Var::D, 2) > Monomial::var(Var::T));
    }

    #[test]
    fn coefficient_split_examples() {
        let c = p("x^2 + l*x").coefficients_in(Var::Lambda);
        assert_eq!(c, vec![p("x^2"), p("x")]);
        assert!(MultiPoly::zero().coefficients_in(Var::Lambda).is_empty());
        let q = p("D + 2*l");
        assert_eq!(q.coefficients_in(Var::Lambda), vec![p("D"), p("2")]);
        assert_eq!(
            q.divided_power_coefficients(Var::Lambda),
            vec![p("D"), p("2")]
        );
        let r = p("l^3");
        assert_eq!(r.divided_power_coefficients(Var::Lambda)[3], p("6"));
    }

    #[test]
    fn exact_division() {
        let a = p("(x - D)*(x^2 + l)");
        assert_eq!(a.div_exact(&p("x - D")), Some(p("x^2 + l")));
        assert_eq!(p("x + 1").div_exact(&p("x")), None);
        assert_eq!(
            MultiPoly::zero().div_exact(&p("x")),
            Some(MultiPoly::zero())
        );
    }

    #[test]
    fn evaluation_and_constants() {
        let q = p("D*l + 2");
        assert_eq!(q.eval_var(Var::Lambda, &rat(3)), p("3*D + 2"));
        assert_eq!(
            p("5/3").as_constant(),
            Some(Rational::new(5.into(), 3.into()))
        );
        assert_eq!(p("D").as_constant(), None);
    }
}
