use std::fmt;
use std::sync::Arc;

use super::{Rational, UPoly, Var};
use crate::error::{Error, Result};

/// `Q(α) = Q[α]/(p)` for a monic irreducible `p`.
///
/// Irreducibility is the caller's contract; inversion reports an arithmetic
/// error if it meets a zero divisor.
#[derive(Debug, PartialEq, Eq)]
pub struct FieldContext {
    minpoly: UPoly,
}

impl FieldContext {
    pub fn new(minpoly: UPoly) -> Result<Arc<FieldContext>> {
        if minpoly.degree().unwrap_or(0) == 0 {
            return Err(Error::Arithmetic(
                "minimal polynomial must have positive degree".into(),
            ));
        }
        Ok(Arc::new(FieldContext {
            minpoly: minpoly.monic(),
        }))
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap()
    }

    pub fn minpoly(&self) -> &UPoly {
        &self.minpoly
    }
}

/// Element of `Q(α)` in the power basis `1, α, …, α^{n-1}`.
#[derive(Clone)]
pub struct ExtFieldElem {
    ctx: Arc<FieldContext>,
    rep: UPoly,
}

impl PartialEq for ExtFieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.same_context(other) && self.rep == other.rep
    }
}

impl Eq for ExtFieldElem {}

impl ExtFieldElem {
    pub fn from_poly(ctx: &Arc<FieldContext>, p: &UPoly) -> Self {
        ExtFieldElem {
            ctx: ctx.clone(),
            rep: p.rem(&ctx.minpoly),
        }
    }

    pub fn from_coords(ctx: &Arc<FieldContext>, coords: Vec<Rational>) -> Self {
        Self::from_poly(ctx, &UPoly::from_coeffs(coords))
    }

    pub fn rational(ctx: &Arc<FieldContext>, c: Rational) -> Self {
        Self::from_poly(ctx, &UPoly::constant(c))
    }

    pub fn zero(ctx: &Arc<FieldContext>) -> Self {
        Self::from_poly(ctx, &UPoly::zero())
    }

    pub fn one(ctx: &Arc<FieldContext>) -> Self {
        Self::from_poly(ctx, &UPoly::one())
    }

    /// The generator `α`.
    pub fn alpha(ctx: &Arc<FieldContext>) -> Self {
        Self::from_poly(ctx, &UPoly::x())
    }

    pub fn context(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    /// Exactly `n` coordinates.
    pub fn coords(&self) -> Vec<Rational> {
        (0..self.ctx.degree()).map(|i| self.rep.coeff(i)).collect()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.rep.is_constant() {
            Some(self.rep.coeff(0))
        } else {
            None
        }
    }

    fn same_context(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.same_context(other) {
            Ok(())
        } else {
            Err(Error::Context(format!(
                "elements of Q[a]/({}) and Q[a]/({})",
                self.ctx.minpoly.display_in(Var::X),
                other.ctx.minpoly.display_in(Var::X)
            )))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(ExtFieldElem {
            ctx: self.ctx.clone(),
            rep: &self.rep + &other.rep,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(ExtFieldElem {
            ctx: self.ctx.clone(),
            rep: &self.rep - &other.rep,
        })
    }

    pub fn neg(&self) -> Self {
        ExtFieldElem {
            ctx: self.ctx.clone(),
            rep: -&self.rep,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_poly(&self.ctx, &(&self.rep * &other.rep)))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        ExtFieldElem {
            ctx: self.ctx.clone(),
            rep: self.rep.scale(k),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ctx);
        for _ in 0..e {
            acc = acc.mul(self).unwrap();
        }
        acc
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Arithmetic("inverse of zero".into()));
        }
        let (g, s, _) = self.rep.xgcd(&self.ctx.minpoly);
        if !g.is_one() {
            return Err(Error::Arithmetic(format!(
                "{} is a zero divisor modulo {}",
                self.rep.display_in(Var::X),
                self.ctx.minpoly.display_in(Var::X)
            )));
        }
        Ok(Self::from_poly(&self.ctx, &s))
    }
}

impl fmt::Debug for ExtFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Printed as a polynomial in `a`.
impl fmt::Display for ExtFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.rep.display_in(Var::X);
        f.write_str(&s.replace('x', "a"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio};

    #[test]
    fn gaussian_rationals() {
        let ctx = FieldContext::new(UPoly::from_ints(&[1, 0, 1])).unwrap();
        let a = ExtFieldElem::alpha(&ctx);
        assert_eq!(a.mul(&a).unwrap(), ExtFieldElem::rational(&ctx, rat(-1)));
        let x = ExtFieldElem::one(&ctx).add(&a).unwrap();
        let inv = x.inv().unwrap();
        assert_eq!(inv.coords(), vec![ratio(1, 2), ratio(-1, 2)]);
        assert_eq!(x.mul(&inv).unwrap(), ExtFieldElem::one(&ctx));
    }

    #[test]
    fn errors() {
        let c1 = FieldContext::new(UPoly::from_ints(&[1, 0, 1])).unwrap();
        let c2 = FieldContext::new(UPoly::from_ints(&[-2, 0, 1])).unwrap();
        let a = ExtFieldElem::alpha(&c2);
        assert_eq!(a.mul(&a).unwrap().as_rational(), Some(rat(2)));
        assert!(matches!(
            ExtFieldElem::zero(&c1).inv(),
            Err(Error::Arithmetic(_))
        ));
        assert!(matches!(
            ExtFieldElem::alpha(&c1).add(&a),
            Err(Error::Context(_))
        ));
    }
}
