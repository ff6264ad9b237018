use std::collections::HashMap;

use super::ConfElement;
use crate::error::{Error, Result};
use crate::exactmath::{Affine, MultiPoly, Substitution, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Associative,
    Lie,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Associative => "associative",
            Kind::Lie => "lie",
        }
    }
}

/// `table[a][b]` lists `(c, g)` with `a∘_λ b = Σ g(D, λ) c`.
pub type Table = Vec<Vec<Vec<(usize, MultiPoly)>>>;

/// Sesqui-linear extension of a product table, evaluated at `λ = Λ`:
///
/// `(Σ f_a a) ∘_Λ (Σ g_b b) = Σ f_a(−Λ) · g_b(D+Λ) · T[a][b](D, Λ)`.
///
/// Coefficients may carry `λ`, `μ`, `x` as parameters; only `D` is moved.
/// The same routine serves module actions, with `left` over the algebra and
/// `right` over the module generators.
pub fn table_product(
    table: &Table,
    ntargets: usize,
    left: &[MultiPoly],
    right: &[MultiPoly],
    lam: &Affine,
) -> Vec<MultiPoly> {
    let mut out = vec![MultiPoly::zero(); ntargets];
    let neg = Substitution::new().with(Var::D, lam.neg());
    let shift = Substitution::new().with(Var::D, Affine::var(Var::D).add(lam));
    let at = Substitution::new().with(Var::Lambda, lam.clone());
    let rights: Vec<(usize, MultiPoly)> = right
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_zero())
        .map(|(j, g)| (j, shift.apply(g)))
        .collect();
    let mut cache: HashMap<(usize, usize, usize), MultiPoly> = HashMap::new();
    for (a, f) in left.iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        let f = neg.apply(f);
        for (b, g) in &rights {
            let fg = &f * g;
            for (k, (c, t)) in table[a][*b].iter().enumerate() {
                let t = cache.entry((a, *b, k)).or_insert_with(|| at.apply(t));
                out[*c] += &(&fg * &*t);
            }
        }
    }
    out
}

/// A finite conformal algebra on a free `H`-basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfAlgebra {
    kind: Kind,
    basis: Vec<String>,
    table: Table,
}

impl ConfAlgebra {
    /// Builds from entries `(a, b, c, g)` meaning `a∘_λ b ∋ g(D, λ)·c`;
    /// repeated entries add up.
    pub fn new(
        kind: Kind,
        basis: Vec<String>,
        entries: Vec<(String, String, String, MultiPoly)>,
    ) -> Result<Self> {
        let n = basis.len();
        for (i, b) in basis.iter().enumerate() {
            if basis[..i].contains(b) {
                return Err(Error::Basis(format!("duplicate basis symbol `{b}`")));
            }
        }
        let idx = |s: &str| {
            basis
                .iter()
                .position(|b| b == s)
                .ok_or_else(|| Error::Basis(format!("unknown basis symbol `{s}`")))
        };
        let mut dense = vec![vec![vec![MultiPoly::zero(); n]; n]; n];
        for (a, b, c, g) in entries {
            if !g.only_vars(&[Var::D, Var::Lambda]) {
                return Err(Error::Format(format!(
                    "table entry `{g}` for ({a}, {b}) must involve only D and l"
                )));
            }
            let (a, b, c) = (idx(&a)?, idx(&b)?, idx(&c)?);
            dense[a][b][c] += &g;
        }
        Ok(Self::from_dense(kind, basis, dense))
    }

    /// `dense[a][b][c]` is the coefficient of `c` in `a∘_λ b`.
    pub fn from_dense(kind: Kind, basis: Vec<String>, dense: Vec<Vec<Vec<MultiPoly>>>) -> Self {
        let table = dense
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
            .collect();
        ConfAlgebra { kind, basis, table }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn with_kind(&self, kind: Kind) -> Self {
        ConfAlgebra {
            kind,
            ..self.clone()
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn index_of(&self, sym: &str) -> Result<usize> {
        self.basis
            .iter()
            .position(|b| b == sym)
            .ok_or_else(|| Error::Basis(format!("unknown basis symbol `{sym}`")))
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    /// Coefficient of `c` in `a∘_λ b`.
    pub fn entry(&self, a: usize, b: usize, c: usize) -> MultiPoly {
        self.table[a][b]
            .iter()
            .find(|(k, _)| *k == c)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(MultiPoly::zero)
    }

    /// `a∘_λ b` as a dense list of coefficients.
    pub fn basis_product(&self, a: usize, b: usize) -> ConfElement {
        let mut e = ConfElement::zero(self.dim());
        for (c, p) in &self.table[a][b] {
            e.coords[*c] = p.clone();
        }
        e
    }

    /// All table entries `(a, b, c, g)` in index order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, MultiPoly)> {
        let mut out = Vec::new();
        for a in 0..self.dim() {
            for b in 0..self.dim() {
                for (c, g) in &self.table[a][b] {
                    out.push((a, b, *c, g.clone()));
                }
            }
        }
        out
    }

    pub fn max_d_degree(&self) -> u32 {
        self.entries()
            .iter()
            .filter_map(|(_, _, _, g)| g.degree_in(Var::D))
            .max()
            .unwrap_or(0)
    }

    pub fn element(&self, s: &str) -> Result<ConfElement> {
        ConfElement::parse(s, &self.basis)
    }

    pub fn display(&self, e: &ConfElement) -> String {
        e.display(&self.basis)
    }

    fn check_elem(&self, e: &ConfElement) -> Result<()> {
        if e.dim() != self.dim() {
            return Err(Error::Basis(format!(
                "element with {} coordinates in an algebra of rank {}",
                e.dim(),
                self.dim()
            )));
        }
        Ok(())
    }

    /// `a∘_Λ b` for any affine `Λ`; coordinates may carry parameters.
    pub fn product_at(&self, a: &ConfElement, b: &ConfElement, lam: &Affine) -> ConfElement {
        ConfElement {
            coords: table_product(&self.table, self.dim(), &a.coords, &b.coords, lam),
        }
    }

    /// `{a∘_Λ b} = (a∘_t b)|_{t ↦ −D−Λ}`, the scratch variable `t` keeping
    /// the substituted `D` outside the product.
    pub fn braced_at(&self, a: &ConfElement, b: &ConfElement, lam: &Affine) -> ConfElement {
        let p = self.product_at(a, b, &Affine::var(Var::T));
        let back = Substitution::new().with(Var::T, lam.neg().plus(Var::D, -1));
        p.map(|c| back.apply(c))
    }

    pub fn lambda_product(&self, a: &ConfElement, b: &ConfElement) -> Result<ConfElement> {
        self.check_elem(a)?;
        self.check_elem(b)?;
        Ok(self.product_at(a, b, &Affine::var(Var::Lambda)))
    }

    pub fn n_product(&self, a: &ConfElement, b: &ConfElement, n: u32) -> Result<ConfElement> {
        Ok(self
            .lambda_product(a, b)?
            .divided_coefficient(Var::Lambda, n))
    }

    /// `{a∘_λ b}` in λ-form.
    pub fn braced_lambda(&self, a: &ConfElement, b: &ConfElement) -> Result<ConfElement> {
        self.check_elem(a)?;
        self.check_elem(b)?;
        Ok(self.braced_at(a, b, &Affine::var(Var::Lambda)))
    }

    pub fn braced_product(&self, a: &ConfElement, b: &ConfElement, n: u32) -> Result<ConfElement> {
        Ok(self
            .braced_lambda(a, b)?
            .divided_coefficient(Var::Lambda, n))
    }

    /// `N(a, b) = 1 + deg_λ (a∘_λ b)`, or 0 when the product vanishes.
    pub fn locality(&self, a: &ConfElement, b: &ConfElement) -> Result<u32> {
        Ok(self
            .lambda_product(a, b)?
            .degree_in(Var::Lambda)
            .map_or(0, |d| d + 1))
    }
}
