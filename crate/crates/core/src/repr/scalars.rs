use std::sync::Arc;

use super::{ConfRep, HModulePresentation};
use crate::confcore::ConfAlgebra;
use crate::error::{Error, Result};
use crate::exactmath::{ExtFieldElem, FieldContext, MultiPoly, Var};

/// A polynomial in `D, λ` over `Q(α)`, held as `Σ_l α^l·p_l` with rational
/// `p_l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtPoly {
    ctx: Arc<FieldContext>,
    parts: Vec<MultiPoly>,
}

impl ExtPoly {
    pub fn zero(ctx: &Arc<FieldContext>) -> Self {
        ExtPoly {
            ctx: ctx.clone(),
            parts: vec![MultiPoly::zero(); ctx.degree()],
        }
    }

    pub fn rational(ctx: &Arc<FieldContext>, p: MultiPoly) -> Self {
        let mut e = Self::zero(ctx);
        e.parts[0] = p;
        e
    }

    /// `Σ cₖ·pₖ`; every coefficient must live in `ctx`.
    pub fn from_terms(
        ctx: &Arc<FieldContext>,
        terms: &[(ExtFieldElem, MultiPoly)],
    ) -> Result<Self> {
        let mut e = Self::zero(ctx);
        for (c, p) in terms {
            if **c.context() != **ctx {
                return Err(Error::Context(format!(
                    "coefficient {c} does not belong to the field of the representation"
                )));
            }
            for (l, q) in c.coords().iter().enumerate() {
                e.parts[l] += &p.scale(q);
            }
        }
        Ok(e)
    }

    /// From power-basis parts; missing parts are zero.
    pub fn from_parts(ctx: &Arc<FieldContext>, mut parts: Vec<MultiPoly>) -> Result<Self> {
        if parts.len() > ctx.degree() {
            return Err(Error::Context(format!(
                "{} power-basis parts for a field of degree {}",
                parts.len(),
                ctx.degree()
            )));
        }
        parts.resize(ctx.degree(), MultiPoly::zero());
        Ok(ExtPoly {
            ctx: ctx.clone(),
            parts,
        })
    }

    pub fn context(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn add(&self, other: &ExtPoly) -> ExtPoly {
        ExtPoly {
            ctx: self.ctx.clone(),
            parts: self
                .parts
                .iter()
                .zip(&other.parts)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    /// `c·self`, reducing powers of `α`.
    pub fn mul_scalar(&self, c: &ExtFieldElem) -> ExtPoly {
        let alpha = ExtFieldElem::alpha(&self.ctx);
        let mut out = Self::zero(&self.ctx);
        for (l, p) in self.parts.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let shifted = c.mul(&alpha.pow(l as u32)).expect("same field");
            for (k, q) in shifted.coords().iter().enumerate() {
                out.parts[k] += &p.scale(q);
            }
        }
        out
    }

    /// The coefficient of the monomial `m` as an element of `Q(α)`.
    pub fn coeff(&self, m: &crate::exactmath::Monomial) -> ExtFieldElem {
        ExtFieldElem::from_coords(&self.ctx, self.parts.iter().map(|p| p.coeff(m)).collect())
    }

    pub fn parts(&self) -> &[MultiPoly] {
        &self.parts
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(MultiPoly::is_zero)
    }
}

/// A representation whose action polynomials have coefficients in `Q(α)`.
#[derive(Debug, Clone)]
pub struct ExtRep {
    pub algebra: ConfAlgebra,
    pub module: HModulePresentation,
    pub field: Arc<FieldContext>,
    /// `action[b][i]` lists `(j, φ_{b,i}^j)`.
    pub action: Vec<Vec<Vec<(usize, ExtPoly)>>>,
}

impl ExtRep {
    /// The representation over `Q(α)` itself, when every coefficient is
    /// rational.
    pub fn rational_part(&self) -> Option<ConfRep> {
        let r = self.module.rank();
        let mut dense = vec![vec![vec![MultiPoly::zero(); r]; r]; self.algebra.dim()];
        for (b, row) in self.action.iter().enumerate() {
            for (i, cell) in row.iter().enumerate() {
                for (j, p) in cell {
                    if p.parts[1..].iter().any(|q| !q.is_zero()) {
                        return None;
                    }
                    dense[b][i][*j] += &p.parts[0];
                }
            }
        }
        ConfRep::from_dense(self.algebra.clone(), false, self.module.clone(), dense).ok()
    }
}

/// Views `M` over `Q(α)` as a module over `Q` with generators `eᵢ^k = α^k eᵢ`,
/// `k < n`. The coefficient `f_{b,i,k}^{j,l}` is the `l`-th power-basis
/// coordinate of `α^k·φ_{b,i}^j`.
pub fn restrict_scalars(r: &ExtRep) -> Result<ConfRep> {
    let n = r.field.degree();
    let m = r.module.rank();
    let alpha = ExtFieldElem::alpha(&r.field);
    // powers[s] = coordinates of α^s, s < 2n − 1.
    let powers: Vec<Vec<_>> = (0..2 * n).map(|s| alpha.pow(s as u32).coords()).collect();
    let mut names = Vec::with_capacity(m * n);
    let mut rels = Vec::with_capacity(m * n);
    for (name, h) in r.module.names().iter().zip(r.module.relations()) {
        for k in 0..n {
            names.push(format!("{name}_{k}"));
            rels.push(h.clone());
        }
    }
    let module = HModulePresentation::new(names, rels)?;
    let mut dense = vec![vec![vec![MultiPoly::zero(); m * n]; m * n]; r.algebra.dim()];
    for (b, row) in r.action.iter().enumerate() {
        for (i, cell) in row.iter().enumerate() {
            for (j, p) in cell {
                if *p.ctx != *r.field {
                    return Err(Error::Context(format!(
                        "action entry for ({}, {}) lies over a different field",
                        r.algebra.basis()[b],
                        r.module.names()[i]
                    )));
                }
                for k in 0..n {
                    for (s, part) in p.parts.iter().enumerate() {
                        if part.is_zero() {
                            continue;
                        }
                        for (l, c) in powers[k + s].iter().enumerate() {
                            dense[b][i * n + k][j * n + l] += &part.scale(c);
                        }
                    }
                }
            }
        }
    }
    for p in dense.iter().flatten().flatten() {
        debug_assert!(p.only_vars(&[Var::D, Var::Lambda]));
    }
    ConfRep::from_dense(r.algebra.clone(), false, module, dense)
}
