use super::HModulePresentation;
use crate::confcore::{
    fmt_combination, opposite_algebra, table_product, ConfAlgebra, ConfElement, Kind, Table,
};
use crate::error::{Error, Result};
use crate::exactmath::{Affine, MultiPoly, Var};
use crate::par::Exec;
use crate::report::{CheckReport, Witness};

/// A conformal module: `b∘_λ eᵢ = Σ φ_{b,i}^j(D, λ) e_j`, extended
/// sesqui-linearly and read modulo the relations of the module.
///
/// A right representation of `C` is stored as a left representation of
/// `C^op`; `right` records that reading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfRep {
    algebra: ConfAlgebra,
    right: bool,
    module: HModulePresentation,
    action: Table,
}

/// Entries `(algebra symbol, generator, target, φ)`; repeats add up.
pub type ActionEntries = Vec<(String, String, String, MultiPoly)>;

fn dense_action(
    c: &ConfAlgebra,
    m: &HModulePresentation,
    entries: ActionEntries,
) -> Result<Vec<Vec<Vec<MultiPoly>>>> {
    let r = m.rank();
    let mut dense = vec![vec![vec![MultiPoly::zero(); r]; r]; c.dim()];
    for (b, i, j, g) in entries {
        if !g.only_vars(&[Var::D, Var::Lambda]) {
            return Err(Error::Format(format!(
                "action entry `{g}` for ({b}, {i}) must involve only D and l"
            )));
        }
        let (b, i, j) = (c.index_of(&b)?, m.index_of(&i)?, m.index_of(&j)?);
        dense[b][i][j] += &g;
    }
    Ok(dense)
}

fn sparse(dense: Vec<Vec<Vec<MultiPoly>>>) -> Table {
    dense
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|cell| {
                    cell.into_iter()
                        .enumerate()
                        .filter(|(_, p)| !p.is_zero())
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// Builds a left representation after checking it respects the torsion
/// relations: `b∘_λ(hᵢ(D)eᵢ) = hᵢ(D+λ)·φ_{b,i}` must vanish in `M`.
pub fn make_rep(
    c: &ConfAlgebra,
    module: HModulePresentation,
    action: ActionEntries,
) -> Result<ConfRep> {
    let dense = dense_action(c, &module, action)?;
    ConfRep::from_dense(c.clone(), false, module, dense)
}

/// A right representation of `C`, i.e. a left one of `C^op`.
pub fn make_right_rep(
    c: &ConfAlgebra,
    module: HModulePresentation,
    action: ActionEntries,
) -> Result<ConfRep> {
    let op = opposite_algebra(c)?;
    let dense = dense_action(&op, &module, action)?;
    ConfRep::from_dense(op, true, module, dense)
}

impl ConfRep {
    /// `dense[b][i][j] = φ_{b,i}^j`. Checks well-definedness.
    pub fn from_dense(
        algebra: ConfAlgebra,
        right: bool,
        module: HModulePresentation,
        dense: Vec<Vec<Vec<MultiPoly>>>,
    ) -> Result<Self> {
        let r = module.rank();
        if dense.len() != algebra.dim()
            || dense
                .iter()
                .any(|row| row.len() != r || row.iter().any(|c| c.len() != r))
        {
            return Err(Error::Dimension(format!(
                "action table must be {}×{r}×{r}",
                algebra.dim()
            )));
        }
        let rep = ConfRep {
            algebra,
            right,
            module,
            action: sparse(dense),
        };
        rep.check_well_defined()?;
        Ok(rep)
    }

    fn check_well_defined(&self) -> Result<()> {
        let n = self.algebra.dim();
        for i in 0..self.module.rank() {
            let h = self.module.relation(i);
            if h.is_zero() {
                continue;
            }
            let rel = ConfElement::term(self.module.rank(), i, h.to_multi(Var::D));
            for b in 0..n {
                let img = self.act(&ConfElement::basis(n, b), &rel.coords);
                if img.iter().any(|p| !p.is_zero()) {
                    return Err(Error::WellDefinedness {
                        element: self.algebra.basis()[b].clone(),
                        generator: self.module.names()[i].clone(),
                        residual: self.display_vec(&img),
                    });
                }
            }
        }
        Ok(())
    }

    /// The algebra that acts on the left (`C^op` for a right representation).
    pub fn algebra(&self) -> &ConfAlgebra {
        &self.algebra
    }

    pub fn is_right(&self) -> bool {
        self.right
    }

    pub fn module(&self) -> &HModulePresentation {
        &self.module
    }

    pub fn action_table(&self) -> &Table {
        &self.action
    }

    pub fn rank(&self) -> usize {
        self.module.rank()
    }

    /// `φ_{b,i}^j`.
    pub fn entry(&self, b: usize, i: usize, j: usize) -> MultiPoly {
        self.action[b][i]
            .iter()
            .filter(|(k, _)| *k == j)
            .fold(MultiPoly::zero(), |acc, (_, g)| acc + g.clone())
    }

    /// `(b, i, j, φ)` for every nonzero entry, in index order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, MultiPoly)> {
        let mut out = Vec::new();
        for (b, row) in self.action.iter().enumerate() {
            for (i, cell) in row.iter().enumerate() {
                let mut cell = cell.clone();
                cell.sort_by_key(|(j, _)| *j);
                out.extend(cell.into_iter().map(|(j, g)| (b, i, j, g)));
            }
        }
        out
    }

    /// `a∘_Λ u`, reduced in `M`; coordinates may carry parameters.
    pub fn act_at(&self, a: &ConfElement, u: &[MultiPoly], lam: &Affine) -> Vec<MultiPoly> {
        let v = table_product(&self.action, self.rank(), &a.coords, u, lam);
        self.module.reduce(&v)
    }

    /// `a∘_λ u`.
    pub fn act(&self, a: &ConfElement, u: &[MultiPoly]) -> Vec<MultiPoly> {
        self.act_at(a, u, &Affine::var(Var::Lambda))
    }

    /// `a∘_n u`.
    pub fn n_act(&self, a: &ConfElement, u: &[MultiPoly], n: u32) -> Result<Vec<MultiPoly>> {
        if a.dim() != self.algebra.dim() || u.len() != self.rank() {
            return Err(Error::Dimension(
                "element sizes do not match the representation".into(),
            ));
        }
        Ok(ConfElement {
            coords: self.act(a, u),
        }
        .divided_coefficient(Var::Lambda, n)
        .coords)
    }

    pub fn display_vec(&self, v: &[MultiPoly]) -> String {
        fmt_combination(v, self.module.names())
    }

    /// Parses `Σ f(D)·e` over the module generators.
    pub fn parse_vec(&self, s: &str) -> Result<Vec<MultiPoly>> {
        let e = ConfElement::parse(s, self.module.names())?;
        Ok(self.module.reduce(&e.coords))
    }
}

/// The module law on basis pairs and generators, in `M ⊗ Q[λ, μ]`:
/// associative `a∘_λ(b∘_μ u) = (a∘_λ b)∘_{λ+μ} u`, Lie
/// `a∘_λ(b∘_μ u) − b∘_μ(a∘_λ u) = [a∘_λ b]∘_{λ+μ} u`.
///
/// The algebra's own axioms are the caller's business.
pub fn check_rep(r: &ConfRep, exec: Exec) -> CheckReport {
    let n = r.algebra.dim();
    let m = r.rank();
    let lam = Affine::var(Var::Lambda);
    let mu = Affine::var(Var::Mu);
    let mut items = Vec::with_capacity(n * n * m);
    for a in 0..n {
        for b in 0..n {
            for i in 0..m {
                items.push((a, b, i));
            }
        }
    }
    let results = exec.map(items, |(a, b, i)| {
        let (ea, eb) = (ConfElement::basis(n, a), ConfElement::basis(n, b));
        let u = ConfElement::basis(m, i).coords;
        let mut lhs = r.act_at(&ea, &r.act_at(&eb, &u, &mu), &lam);
        if r.algebra.kind() == Kind::Lie {
            let other = r.act_at(&eb, &r.act_at(&ea, &u, &lam), &mu);
            for (x, y) in lhs.iter_mut().zip(other) {
                *x -= &y;
            }
        }
        let ab = r.algebra.product_at(&ea, &eb, &lam);
        let rhs = r.act_at(&ab, &u, &lam.add(&mu));
        let d: Vec<MultiPoly> = lhs
            .iter()
            .zip(&rhs)
            .map(|(x, y)| x.clone() - y.clone())
            .collect();
        if d.iter().all(MultiPoly::is_zero) {
            None
        } else {
            Some(Witness {
                location: format!(
                    "module law ({}, {}, {})",
                    r.algebra.basis()[a],
                    r.algebra.basis()[b],
                    r.module.names()[i]
                ),
                residual: r.display_vec(&d),
            })
        }
    });
    let mut report = CheckReport::new("module law");
    for w in results {
        report.record(w);
    }
    report
}

/// `C` acting on itself by its table (the adjoint action for Lie algebras).
pub fn regular_rep(c: &ConfAlgebra) -> ConfRep {
    let n = c.dim();
    let dense = (0..n)
        .map(|a| (0..n).map(|b| c.basis_product(a, b).coords).collect())
        .collect();
    ConfRep::from_dense(
        c.clone(),
        false,
        HModulePresentation::free(c.basis().to_vec()),
        dense,
    )
    .expect("free modules have no relations")
}

/// The zero action on `module`.
pub fn trivial_rep(c: &ConfAlgebra, module: HModulePresentation) -> ConfRep {
    let r = module.rank();
    ConfRep {
        algebra: c.clone(),
        right: false,
        module,
        action: vec![vec![Vec::new(); r]; c.dim()],
    }
}

/// Block action on `M₁ ⊕ M₂`.
pub fn direct_sum(r1: &ConfRep, r2: &ConfRep) -> Result<ConfRep> {
    if r1.algebra != r2.algebra || r1.right != r2.right {
        return Err(Error::Precondition(
            "direct sum of representations of different algebras".into(),
        ));
    }
    let off = r1.rank();
    let action = r1
        .action
        .iter()
        .zip(&r2.action)
        .map(|(x, y)| {
            let mut row = x.clone();
            row.extend(y.iter().map(|cell| {
                cell.iter()
                    .map(|(j, g)| (j + off, g.clone()))
                    .collect::<Vec<_>>()
            }));
            row
        })
        .collect();
    Ok(ConfRep {
        algebra: r1.algebra.clone(),
        right: r1.right,
        module: r1.module.direct_sum(&r2.module),
        action,
    })
}
