use std::sync::Arc;

use super::central::{
    check_central_pbw, pbw_names, pbw_table, require_lie, CentralSource, ExtLieTable, LocalityBound,
};
use crate::confcore::{derived_series, ConfAlgebra};
use crate::error::{Error, Result};
use crate::exactmath::{ExtFieldElem, FieldContext, MultiPoly};
use crate::par::Exec;
use crate::repr::{restrict_scalars, ConfRep, ExtPoly, ExtRep, HModulePresentation};

fn require_pbw<S: CentralSource>(src: &S, bound: &LocalityBound, exec: Exec) -> Result<()> {
    let r = check_central_pbw(src, bound, None, exec)?;
    if !r.passed() {
        return Err(Error::Precondition(format!(
            "I(B, N) is not invariant under the central action: {r}"
        )));
    }
    Ok(())
}

/// The faithful module `Hu ⊕ H ⊗ (𝓛/I(B, N))` with `u` trivial and
/// `⟨x∘_n u⟩ = t^n ⊗ x`; rank `1 + Σ N(b)`.
pub fn central_pbw_rep(l: &ConfAlgebra, bound: &LocalityBound, exec: Exec) -> Result<ConfRep> {
    require_lie(l)?;
    require_pbw(l, bound, exec)?;
    let module = HModulePresentation::free(pbw_names(l.basis(), bound));
    let dense = pbw_table(l, bound)
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|cell| {
                    cell.into_iter()
                        .map(|mut parts| parts.swap_remove(0))
                        .collect()
                })
                .collect()
        })
        .collect();
    ConfRep::from_dense(l.clone(), false, module, dense)
}

/// `N(b_last) = K`, `N(bᵢ) = max_{j>i, a} N(b_j) + deg_D φ_{a,i}^j` where
/// `[a∘_λ bᵢ] = Σ_{j≥i} φ_{a,i}^j b_j`. Zero entries do not count; when no
/// entry above the diagonal is nonzero the bound is `K`.
pub fn solvable_bounds_for<S: CentralSource>(src: &S, k: u32) -> Result<LocalityBound> {
    if k == 0 {
        return Err(Error::Precondition("K must be positive".into()));
    }
    let n = src.dim();
    let names = src.names();
    for a in 0..n {
        for i in 0..n {
            for j in 0..i {
                if src.entry_d_degree(a, i, j).is_some() {
                    return Err(Error::Precondition(format!(
                        "basis is not triangular: [{}∘_λ {}] has a {} component",
                        names[a], names[i], names[j]
                    )));
                }
            }
        }
    }
    let mut bound = vec![k; n];
    for i in (0..n).rev() {
        let mut best: Option<u32> = None;
        for j in i + 1..n {
            for a in 0..n {
                if let Some(d) = src.entry_d_degree(a, i, j) {
                    best = Some(best.map_or(bound[j] + d, |b| b.max(bound[j] + d)));
                }
            }
        }
        bound[i] = best.unwrap_or(k);
    }
    Ok(LocalityBound(bound))
}

pub fn solvable_bounds(l: &ConfAlgebra, k: u32) -> Result<LocalityBound> {
    require_lie(l)?;
    solvable_bounds_for(l, k)
}

fn require_solvable(l: &ConfAlgebra) -> Result<()> {
    if !derived_series(l)?.is_solvable {
        return Err(Error::Precondition("the algebra is not solvable".into()));
    }
    Ok(())
}

/// Solvability, the triangular bounds, then the central-PBW module.
pub fn solvable_faithful_rep(l: &ConfAlgebra, k: u32, exec: Exec) -> Result<ConfRep> {
    require_lie(l)?;
    require_solvable(l)?;
    let bound = solvable_bounds(l, k)?;
    central_pbw_rep(l, &bound, exec)
}

/// A triangular basis over `Q(α)`: `vectors[i]` holds the coordinates of the
/// `i`-th new basis element in the basis of `L`.
#[derive(Debug, Clone)]
pub struct TriangularBasis {
    pub field: Arc<FieldContext>,
    pub names: Vec<String>,
    pub vectors: Vec<Vec<ExtFieldElem>>,
}

fn invert(m: &[Vec<ExtFieldElem>], ctx: &Arc<FieldContext>) -> Result<Vec<Vec<ExtFieldElem>>> {
    let n = m.len();
    let mut a: Vec<Vec<ExtFieldElem>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    ExtFieldElem::one(ctx)
                } else {
                    ExtFieldElem::zero(ctx)
                }
            }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n)
            .find(|&r| !a[r][c].is_zero())
            .ok_or_else(|| Error::Precondition("triangular basis vectors are dependent".into()))?;
        a.swap(c, p);
        let inv = a[c][c].inv()?;
        a[c] = a[c].iter().map(|x| x.mul(&inv)).collect::<Result<_>>()?;
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                a[r] = a[r]
                    .iter()
                    .zip(&a[c])
                    .map(|(x, y)| x.sub(&y.mul(&f)?))
                    .collect::<Result<_>>()?;
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// `L ⊗ Q(α)` in the basis `w`.
pub fn change_basis(l: &ConfAlgebra, w: &TriangularBasis) -> Result<ExtLieTable> {
    let n = l.dim();
    let ctx = &w.field;
    if w.vectors.len() != n || w.names.len() != n || w.vectors.iter().any(|v| v.len() != n) {
        return Err(Error::Dimension(format!(
            "a basis of L needs {n} vectors of length {n}"
        )));
    }
    for v in w.vectors.iter().flatten() {
        if **v.context() != **ctx {
            return Err(Error::Context(
                "basis coordinates lie over a different field".into(),
            ));
        }
    }
    let q = invert(&w.vectors, ctx)?;
    let mut table = vec![vec![vec![ExtPoly::zero(ctx); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for a in 0..n {
                for b in 0..n {
                    let pij = w.vectors[i][a].mul(&w.vectors[j][b])?;
                    if pij.is_zero() {
                        continue;
                    }
                    for (c, t) in &l.table()[a][b] {
                        for (k, qk) in q[*c].iter().enumerate() {
                            let coef = pij.mul(qk)?;
                            if coef.is_zero() {
                                continue;
                            }
                            let term = ExtPoly::from_terms(ctx, &[(coef, t.clone())])?;
                            table[i][j][k] = table[i][j][k].add(&term);
                        }
                    }
                }
            }
        }
    }
    Ok(ExtLieTable {
        field: ctx.clone(),
        names: w.names.clone(),
        table: table
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|c| c.into_iter().map(|p| p.parts().to_vec()).collect())
                    .collect()
            })
            .collect(),
    })
}

/// Output of [`solvable_faithful_rep_ext`].
#[derive(Debug, Clone)]
pub struct ExtPipeline {
    pub bound: LocalityBound,
    /// The representation of `L` over `Q(α)`.
    pub ext: ExtRep,
    /// Its restriction to `Q`.
    pub rational: ConfRep,
}

/// For a solvable `L` that becomes triangular only over `Q(α)`: build the
/// central-PBW module of `L ⊗ Q(α)` in the basis `w`, read the action of the
/// original basis `b_j = Σ_k Q_{jk} w_k`, then restrict scalars.
pub fn solvable_faithful_rep_ext(
    l: &ConfAlgebra,
    w: &TriangularBasis,
    k: u32,
    exec: Exec,
) -> Result<ExtPipeline> {
    require_lie(l)?;
    require_solvable(l)?;
    let ext_l = change_basis(l, w)?;
    let bound = solvable_bounds_for(&ext_l, k)?;
    require_pbw(&ext_l, &bound, exec)?;
    let ctx = &w.field;
    let wt = pbw_table(&ext_l, &bound);
    let q = invert(&w.vectors, ctx)?;
    let n = l.dim();
    let rank = wt.first().map_or(0, Vec::len);
    let as_ext = |parts: &Vec<MultiPoly>| ExtPoly::from_parts(ctx, parts.clone());
    let mut action = Vec::with_capacity(n);
    for qj in &q {
        let mut row = Vec::with_capacity(rank);
        for i in 0..rank {
            let mut cell = Vec::new();
            for jj in 0..rank {
                let mut acc = ExtPoly::zero(ctx);
                for (kk, c) in qj.iter().enumerate() {
                    if !c.is_zero() {
                        acc = acc.add(&as_ext(&wt[kk][i][jj])?.mul_scalar(c));
                    }
                }
                if !acc.is_zero() {
                    cell.push((jj, acc));
                }
            }
            row.push(cell);
        }
        action.push(row);
    }
    let ext = ExtRep {
        algebra: l.clone(),
        module: HModulePresentation::free(pbw_names(&w.names, &bound)),
        field: ctx.clone(),
        action,
    };
    let rational = restrict_scalars(&ext)?;
    Ok(ExtPipeline {
        bound,
        ext,
        rational,
    })
}
