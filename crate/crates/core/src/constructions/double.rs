use crate::confcore::{fmt_combination, table_product, ConfAlgebra, ConfElement, Kind, Table};
use crate::error::{Error, Result};
use crate::exactmath::{factorial, rat, Affine, MultiPoly, Var};
use crate::hlinalg::SubmoduleBasis;
use crate::par::Exec;
use crate::report::{CheckReport, Witness};
use crate::repr::{annihilator, rep_kernel, ConfRep};

/// `⟨b∘_λ vᵢ⟩ ∈ M[λ]` on basis elements and generators of `V`, extended
/// sesqui-linearly: `⟨f(D)a∘_λ g(D)v⟩ = f(−λ)g(D+λ)⟨a∘_λ v⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    /// `table[b][i]` lists `(j, p)`: the coefficient of the `j`-th generator
    /// of `M`.
    table: Table,
    dims: (usize, usize, usize),
}

impl Pairing {
    /// `dense[b][i][j]`, polynomials in `D, λ`.
    pub fn from_lambda(dense: Vec<Vec<Vec<MultiPoly>>>, rank_m: usize) -> Result<Self> {
        let nb = dense.len();
        let nv = dense.first().map_or(0, Vec::len);
        let mut table = Vec::with_capacity(nb);
        for row in dense {
            if row.len() != nv {
                return Err(Error::Dimension("ragged pairing table".into()));
            }
            let mut trow = Vec::with_capacity(nv);
            for cell in row {
                if cell.len() != rank_m {
                    return Err(Error::Dimension(format!(
                        "pairing values need {rank_m} coordinates"
                    )));
                }
                if let Some(p) = cell.iter().find(|p| !p.only_vars(&[Var::D, Var::Lambda])) {
                    return Err(Error::Format(format!(
                        "pairing entry `{p}` must involve only D and l"
                    )));
                }
                trow.push(
                    cell.into_iter()
                        .enumerate()
                        .filter(|(_, p)| !p.is_zero())
                        .collect(),
                );
            }
            table.push(trow);
        }
        Ok(Pairing {
            table,
            dims: (nb, nv, rank_m),
        })
    }

    /// From n-products `⟨b∘_n vᵢ⟩ = w`, given as `(b, i, n, w)`; repeats add.
    pub fn from_n_products(
        dims: (usize, usize, usize),
        entries: &[(usize, usize, u32, Vec<MultiPoly>)],
    ) -> Result<Self> {
        let (nb, nv, nm) = dims;
        let mut dense = vec![vec![vec![MultiPoly::zero(); nm]; nv]; nb];
        for (b, i, n, w) in entries {
            if *b >= nb || *i >= nv || w.len() != nm {
                return Err(Error::Dimension(format!(
                    "pairing entry ({b}, {i}, {n}) out of range"
                )));
            }
            let l = MultiPoly::var_pow(Var::Lambda, *n).scale(&(rat(1) / factorial(*n)));
            for (j, p) in w.iter().enumerate() {
                dense[*b][*i][j] += &(&l * p);
            }
        }
        Self::from_lambda(dense, nm)
    }

    /// `⟨b∘_λ u⟩ = b` for `V = Hu` and `M` the adjoint module.
    pub fn canonical(l: &ConfAlgebra) -> Self {
        let n = l.dim();
        let dense = (0..n)
            .map(|b| vec![ConfElement::basis(n, b).coords])
            .collect();
        Self::from_lambda(dense, n).expect("square")
    }

    /// `(algebra rank, rank V, rank M)`.
    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn entry(&self, b: usize, i: usize) -> Vec<MultiPoly> {
        let mut out = vec![MultiPoly::zero(); self.dims.2];
        for (j, p) in &self.table[b][i] {
            out[*j] += p;
        }
        out
    }

    /// `⟨a∘_Λ v⟩`, reduced in `M`.
    pub fn pair_at(
        &self,
        m: &ConfRep,
        a: &ConfElement,
        v: &[MultiPoly],
        lam: &Affine,
    ) -> Vec<MultiPoly> {
        m.module()
            .reduce(&table_product(&self.table, self.dims.2, &a.coords, v, lam))
    }
}

fn require(l: &ConfAlgebra, v: &ConfRep, m: &ConfRep, p: &Pairing) -> Result<()> {
    if l.kind() != Kind::Lie {
        return Err(Error::Precondition(
            "the double construction needs a Lie algebra".into(),
        ));
    }
    if v.algebra() != l || m.algebra() != l || v.is_right() || m.is_right() {
        return Err(Error::Precondition(
            "V and M must be left modules over the same algebra".into(),
        ));
    }
    if p.dims != (l.dim(), v.rank(), m.rank()) {
        return Err(Error::Dimension(format!(
            "pairing of shape {:?} for ranks ({}, {}, {})",
            p.dims,
            l.dim(),
            v.rank(),
            m.rank()
        )));
    }
    Ok(())
}

/// The pairing kernel `{a : ⟨a∘_λ V⟩ = 0}`.
pub fn pairing_kernel(l: &ConfAlgebra, v: &ConfRep, m: &ConfRep, p: &Pairing) -> SubmoduleBasis {
    let n = l.dim();
    let lam = Affine::var(Var::Lambda);
    annihilator(n, |b| {
        let eb = ConfElement::basis(n, b);
        (0..v.rank())
            .flat_map(|i| p.pair_at(m, &eb, &ConfElement::basis(v.rank(), i).coords, &lam))
            .collect()
    })
}

/// The three conditions under which `a∘̂_λ v = a∘_λ v + λ⟨a∘_λ v⟩`,
/// `a∘̂_λ w = a∘_λ w` is a faithful module on `V ⊕ M`:
/// the pairing respects the relations of `V`; on basis pairs and generators
/// `λ⟨a∘_λ(b∘_μ v)⟩ + μ a∘_λ⟨b∘_μ v⟩ − μ⟨b∘_μ(a∘_λ v)⟩ − λ b∘_μ⟨a∘_λ v⟩
/// = (λ+μ)⟨[a∘_λ b]∘_{λ+μ} v⟩`; and the pairing kernel meets `Ker V ∩ Ker M`
/// in zero.
pub fn check_double_conditions(
    l: &ConfAlgebra,
    v: &ConfRep,
    m: &ConfRep,
    p: &Pairing,
    exec: Exec,
) -> Result<CheckReport> {
    require(l, v, m, p)?;
    let n = l.dim();
    let rv = v.rank();
    let lam = Affine::var(Var::Lambda);
    let mu = Affine::var(Var::Mu);
    let lm = lam.add(&mu);
    let mnames = m.module().names();
    let mut report = CheckReport::new("double construction");

    for i in 0..rv {
        let h = v.module().relation(i);
        if h.is_zero() {
            continue;
        }
        let rel = ConfElement::term(rv, i, h.to_multi(Var::D)).coords;
        for a in 0..n {
            let img = p.pair_at(m, &ConfElement::basis(n, a), &rel, &lam);
            report.record(img.iter().any(|q| !q.is_zero()).then(|| Witness {
                location: format!(
                    "pairing well-defined ({}, {})",
                    l.basis()[a],
                    v.module().names()[i]
                ),
                residual: fmt_combination(&img, mnames),
            }));
        }
    }

    let mut items = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for i in 0..rv {
                items.push((a, b, i));
            }
        }
    }
    let lpoly = MultiPoly::var(Var::Lambda);
    let mpoly = MultiPoly::var(Var::Mu);
    let results = exec.map(items, |(a, b, i)| {
        let (ea, eb) = (ConfElement::basis(n, a), ConfElement::basis(n, b));
        let u = ConfElement::basis(rv, i).coords;
        let t1 = p.pair_at(m, &ea, &v.act_at(&eb, &u, &mu), &lam);
        let t2 = m.act_at(&ea, &p.pair_at(m, &eb, &u, &mu), &lam);
        let t3 = p.pair_at(m, &eb, &v.act_at(&ea, &u, &lam), &mu);
        let t4 = m.act_at(&eb, &p.pair_at(m, &ea, &u, &lam), &mu);
        let ab = l.product_at(&ea, &eb, &lam);
        let rhs = p.pair_at(m, &ab, &u, &lm);
        let lmp = &lpoly + &mpoly;
        let d: Vec<MultiPoly> = (0..m.rank())
            .map(|j| {
                let lhs = &(&(&lpoly * &t1[j]) + &(&mpoly * &t2[j]))
                    - &(&(&mpoly * &t3[j]) + &(&lpoly * &t4[j]));
                &lhs - &(&lmp * &rhs[j])
            })
            .collect();
        let d = m.module().reduce(&d);
        d.iter().any(|q| !q.is_zero()).then(|| Witness {
            location: format!(
                "pairing compatibility ({}, {}, {})",
                l.basis()[a],
                l.basis()[b],
                v.module().names()[i]
            ),
            residual: fmt_combination(&d, mnames),
        })
    });
    for w in results {
        report.record(w);
    }

    let joint = pairing_kernel(l, v, m, p)
        .intersect(&rep_kernel(v))?
        .intersect(&rep_kernel(m))?;
    report.record(joint.generators().first().map(|g| Witness {
        location: "joint kernel".into(),
        residual: l.display(&ConfElement {
            coords: g.iter().map(|q| q.to_multi(Var::D)).collect(),
        }),
    }));
    Ok(report)
}

/// The module `V ⊕ M` with `a∘̂_λ v = a∘_λ v + λ⟨a∘_λ v⟩`.
pub fn double_rep(
    l: &ConfAlgebra,
    v: &ConfRep,
    m: &ConfRep,
    p: &Pairing,
    exec: Exec,
) -> Result<ConfRep> {
    let r = check_double_conditions(l, v, m, p, exec)?;
    if !r.passed() {
        return Err(Error::Precondition(format!("double construction: {r}")));
    }
    let (rv, rm) = (v.rank(), m.rank());
    let lam = MultiPoly::var(Var::Lambda);
    let mut dense = vec![vec![vec![MultiPoly::zero(); rv + rm]; rv + rm]; l.dim()];
    for (b, row) in dense.iter_mut().enumerate() {
        for i in 0..rv {
            for j in 0..rv {
                row[i][j] = v.entry(b, i, j);
            }
            for (j, q) in p.entry(b, i).iter().enumerate() {
                row[i][rv + j] = &lam * q;
            }
        }
        for i in 0..rm {
            for j in 0..rm {
                row[rv + i][rv + j] = m.entry(b, i, j);
            }
        }
    }
    ConfRep::from_dense(l.clone(), false, v.module().direct_sum(m.module()), dense)
}
