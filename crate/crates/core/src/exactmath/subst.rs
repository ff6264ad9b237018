use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{parse_poly, MultiPoly, Rational, Var, NVARS};
use crate::error::{Error, Result};

/// `c₀ + Σ cᵢ·vᵢ` over the variable alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Affine {
    pub constant: Rational,
    pub coeffs: [Rational; NVARS],
}

impl Affine {
    pub fn zero() -> Self {
        Affine {
            constant: Rational::zero(),
            coeffs: std::array::from_fn(|_| Rational::zero()),
        }
    }

    pub fn var(v: Var) -> Self {
        Self::zero().plus(v, 1)
    }

    /// Adds `c·v`.
    pub fn plus(mut self, v: Var, c: i64) -> Self {
        self.coeffs[v.index()] += Rational::from_integer(c.into());
        self
    }

    pub fn plus_constant(mut self, c: Rational) -> Self {
        self.constant += c;
        self
    }

    pub fn neg(&self) -> Self {
        Affine {
            constant: -&self.constant,
            coeffs: std::array::from_fn(|i| -&self.coeffs[i]),
        }
    }

    pub fn add(&self, other: &Affine) -> Self {
        Affine {
            constant: &self.constant + &other.constant,
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &other.coeffs[i]),
        }
    }

    pub fn to_poly(&self) -> MultiPoly {
        let mut p = MultiPoly::constant(self.constant.clone());
        for v in Var::ALL {
            p += &MultiPoly::var(v).scale(&self.coeffs[v.index()]);
        }
        p
    }

    /// Parses an affine expression such as `x + l` or `-D - l`.
    pub fn parse(s: &str) -> Result<Affine> {
        let p = parse_poly(s)?;
        Affine::from_poly(&p)
            .ok_or_else(|| Error::Format(format!("`{s}` is not an affine expression")))
    }

    pub fn from_poly(p: &MultiPoly) -> Option<Affine> {
        let mut a = Affine::zero();
        for (m, c) in p.terms() {
            match m.total_degree() {
                0 => a.constant = c.clone(),
                1 => {
                    let v = (0..NVARS).find(|&i| m.0[i] == 1)?;
                    a.coeffs[v] = c.clone();
                }
                _ => return None,
            }
        }
        Some(a)
    }

    fn is_identity_for(&self, v: Var) -> bool {
        self.constant.is_zero()
            && (0..NVARS).all(|i| {
                if i == v.index() {
                    self.coeffs[i].is_one()
                } else {
                    self.coeffs[i].is_zero()
                }
            })
    }
}

/// A simultaneous affine substitution `v ↦ Affine`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Substitution {
    map: BTreeMap<Var, Affine>,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, v: Var, a: Affine) -> Self {
        self.map.insert(v, a);
        self
    }

    /// Adds `name ↦ expr`, both given as text; unknown names are a format error.
    pub fn set(mut self, name: &str, expr: &str) -> Result<Self> {
        let v = Var::from_name(name)?;
        self.map.insert(v, Affine::parse(expr)?);
        Ok(self)
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Applies the substitution. Every variable is replaced simultaneously.
    pub fn apply(&self, p: &MultiPoly) -> MultiPoly {
        let active: Vec<(Var, MultiPoly)> = self
            .map
            .iter()
            .filter(|(v, a)| !a.is_identity_for(**v))
            .map(|(v, a)| (*v, a.to_poly()))
            .collect();
        if active.is_empty() || p.is_zero() {
            return p.clone();
        }
        // Powers of each image, built lazily.
        let mut powers: Vec<Vec<MultiPoly>> = vec![vec![MultiPoly::one()]; active.len()];
        let mut out = MultiPoly::zero();
        for (m, c) in p.terms() {
            let mut rest = *m;
            let mut term = MultiPoly::one();
            for (k, (v, img)) in active.iter().enumerate() {
                let e = m.exp(*v) as usize;
                rest = rest.with_exp(*v, 0);
                if e == 0 {
                    continue;
                }
                while powers[k].len() <= e {
                    let next = powers[k].last().unwrap() * img;
                    powers[k].push(next);
                }
                term = &term * &powers[k][e];
            }
            out += &term.mul_monomial(&rest).scale(c);
        }
        out
    }
}

/// Shorthand for applying a substitution.
pub fn substitute_affine(p: &MultiPoly, s: &Substitution) -> MultiPoly {
    s.apply(p)
}
