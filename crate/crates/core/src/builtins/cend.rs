use std::collections::BTreeMap;
use std::fmt;

use crate::confcore::GrowthAmbient;
use crate::error::{Error, Result};
use crate::exactmath::{parse_poly, Affine, MultiPoly, Substitution, UPoly, Var};

/// An element of `Cend_n`, an `n×n` matrix over `Q[D, x]` (row-major).
///
/// λ-products of elements are again matrices, with `λ` as a parameter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatrixConfElem {
    n: usize,
    e: Vec<MultiPoly>,
}

impl MatrixConfElem {
    pub fn zero(n: usize) -> Self {
        MatrixConfElem {
            n,
            e: vec![MultiPoly::zero(); n * n],
        }
    }

    /// `1 ⊗ I_n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.e[i * n + i] = MultiPoly::one();
        }
        m
    }

    /// `f ⊗ e_ij`.
    pub fn unit(n: usize, i: usize, j: usize, f: MultiPoly) -> Self {
        let mut m = Self::zero(n);
        m.e[i * n + j] = f;
        m
    }

    pub fn scalar(f: MultiPoly) -> Self {
        MatrixConfElem { n: 1, e: vec![f] }
    }

    pub fn from_rows(rows: Vec<Vec<MultiPoly>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("matrix must be square".into()));
        }
        Ok(MatrixConfElem {
            n,
            e: rows.into_iter().flatten().collect(),
        })
    }

    pub fn parse(rows: &[&[&str]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| parse_poly(s)).collect())
                .collect::<Result<_>>()?,
        )
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.e[i * self.n + j]
    }

    pub fn entries(&self) -> &[MultiPoly] {
        &self.e
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|p| p.is_zero())
    }

    pub fn map(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> Self {
        MatrixConfElem {
            n: self.n,
            e: self.e.iter().map(f).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        MatrixConfElem {
            n: self.n,
            e: self.e.iter().zip(&o.e).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        MatrixConfElem {
            n: self.n,
            e: self.e.iter().zip(&o.e).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> Self {
        self.map(|a| a * p)
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.e.iter().filter_map(|p| p.degree_in(v)).max()
    }

    /// `n!·[λⁿ]` entrywise.
    pub fn divided_coefficient(&self, n: u32) -> Self {
        let k = crate::exactmath::factorial(n);
        self.map(|p| p.coefficient_of(Var::Lambda, n).scale(&k))
    }

    /// Plain matrix product of the entries (no substitution).
    pub fn matmul(&self, o: &Self) -> Result<Self> {
        check_sizes(self.n, o.n)?;
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..n {
                    out.e[i * n + k] += &(a * o.get(j, k));
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for MatrixConfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            return write!(f, "{}", self.e[0]);
        }
        f.write_str("[")?;
        for i in 0..self.n {
            if i > 0 {
                f.write_str("; ")?;
            }
            let r: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            f.write_str(&r.join(", "))?;
        }
        f.write_str("]")
    }
}

fn check_sizes(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::Dimension(format!("sizes {a} and {b} differ")));
    }
    Ok(())
}

fn lam() -> Affine {
    Affine::var(Var::Lambda)
}

/// `a∘_Λ b` entrywise `Σ_j a_ij(−Λ, x)·b_jk(D+Λ, x+Λ)`.
pub fn cend_product_at(
    a: &MatrixConfElem,
    b: &MatrixConfElem,
    l: &Affine,
) -> Result<MatrixConfElem> {
    let left = Substitution::new().with(Var::D, l.neg());
    let right = Substitution::new()
        .with(Var::D, Affine::var(Var::D).add(l))
        .with(Var::X, Affine::var(Var::X).add(l));
    a.map(|p| left.apply(p)).matmul(&b.map(|p| right.apply(p)))
}

pub fn cend_product(a: &MatrixConfElem, b: &MatrixConfElem) -> Result<MatrixConfElem> {
    cend_product_at(a, b, &lam())
}

pub fn cend_n_product(a: &MatrixConfElem, b: &MatrixConfElem, n: u32) -> Result<MatrixConfElem> {
    Ok(cend_product(a, b)?.divided_coefficient(n))
}

/// `{a∘_Λ b} = (a∘_t b)|_{t ↦ −D−Λ}`; `D` acts on left presentations by
/// multiplication.
pub fn cend_braced_at(
    a: &MatrixConfElem,
    b: &MatrixConfElem,
    l: &Affine,
) -> Result<MatrixConfElem> {
    let p = cend_product_at(a, b, &Affine::var(Var::T))?;
    let back = Substitution::new().with(Var::T, l.neg().plus(Var::D, -1));
    Ok(p.map(|c| back.apply(c)))
}

/// Action on `H ⊗ Qⁿ`: `(a∘_Λ v)_i = Σ_j a_ij(−Λ, D)·v_j(D+Λ)`.
pub fn cend_act_at(a: &MatrixConfElem, v: &[MultiPoly], l: &Affine) -> Result<Vec<MultiPoly>> {
    check_sizes(a.n, v.len())?;
    let left = Substitution::new()
        .with(Var::D, l.neg())
        .with(Var::X, Affine::var(Var::D));
    let right = Substitution::new().with(Var::D, Affine::var(Var::D).add(l));
    let n = a.n;
    let vs: Vec<MultiPoly> = v.iter().map(|p| right.apply(p)).collect();
    let mut out = vec![MultiPoly::zero(); n];
    for i in 0..n {
        for j in 0..n {
            let f = a.get(i, j);
            if !f.is_zero() && !vs[j].is_zero() {
                out[i] += &(&left.apply(f) * &vs[j]);
            }
        }
    }
    Ok(out)
}

pub fn cend_act(a: &MatrixConfElem, v: &[MultiPoly]) -> Result<Vec<MultiPoly>> {
    cend_act_at(a, v, &lam())
}

/// `τ(a)_λ = a_{−D−λ}` on presentations.
///
/// A right conformal endomorphism with presentation `r(D, x)` acts by
/// `h(D)u ↦ h(−λ)·r(−λ, D)u`, the same formula as on the left. In these
/// coordinates `τ` is `f(D, x) ↦ f(x − D, x)`, an involution.
pub fn tau_transpose(a: &MatrixConfElem) -> MatrixConfElem {
    let s = Substitution::new().with(Var::D, Affine::var(Var::X).plus(Var::D, -1));
    a.map(|p| s.apply(p))
}

/// Right composition `(X∘_Λ Y)_μ = Y_{Λ+μ} X_μ`, returned as a presentation:
/// `Y(D − Λ, x) · X(D, D − Λ)`.
pub fn cend_right_product_at(
    x: &MatrixConfElem,
    y: &MatrixConfElem,
    l: &Affine,
) -> Result<MatrixConfElem> {
    let sy = Substitution::new().with(Var::D, Affine::var(Var::D).add(&l.neg()));
    let sx = Substitution::new().with(Var::X, Affine::var(Var::D).add(&l.neg()));
    y.map(|p| sy.apply(p)).matmul(&x.map(|p| sx.apply(p)))
}

/// `{X∘_λ Y}` for right endomorphisms. `D` acts on right presentations as
/// multiplication by `x − D`, so `λ ↦ −(x − D) − λ`.
pub fn cend_right_braced(x: &MatrixConfElem, y: &MatrixConfElem) -> Result<MatrixConfElem> {
    let p = cend_right_product_at(x, y, &Affine::var(Var::T))?;
    let back = Substitution::new().with(
        Var::T,
        Affine::var(Var::D).plus(Var::X, -1).plus(Var::Lambda, -1),
    );
    Ok(p.map(|c| back.apply(c)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealSide {
    /// `P(x)·M_n(Q[D, x])`.
    Right,
    /// `M_n(Q[D, x])·P(x − D)`.
    Left,
}

/// `P(x)·A` for a right ideal, `A·P(x − D)` for a left ideal.
pub fn cend_ideal_element(
    side: IdealSide,
    p: &MatrixConfElem,
    a: &MatrixConfElem,
) -> Result<MatrixConfElem> {
    if p.e.iter().any(|q| !q.only_vars(&[Var::X])) {
        return Err(Error::Format(
            "ideal generator must be a matrix over Q[x]".into(),
        ));
    }
    match side {
        IdealSide::Right => p.matmul(a),
        IdealSide::Left => {
            let s = Substitution::new().with(Var::X, Affine::var(Var::X).plus(Var::D, -1));
            a.matmul(&p.map(|q| s.apply(q)))
        }
    }
}

/// `Cend_n` as a growth ambient; the coordinate of `x^k e_ij` is keyed by
/// `(k·n + i)·n + j`.
#[derive(Debug, Clone, Copy)]
pub struct Cend {
    pub n: usize,
}

impl GrowthAmbient for Cend {
    type Elem = MatrixConfElem;

    fn n_products(&self, a: &MatrixConfElem, b: &MatrixConfElem) -> Vec<MatrixConfElem> {
        let p = cend_product(a, b).expect("same size");
        let top = p.degree_in(Var::Lambda).map_or(0, |d| d + 1);
        (0..top)
            .map(|k| p.divided_coefficient(k))
            .filter(|m| !m.is_zero())
            .collect()
    }

    fn coords(&self, e: &MatrixConfElem) -> BTreeMap<usize, UPoly> {
        let n = self.n;
        let mut out: BTreeMap<usize, Vec<crate::exactmath::Rational>> = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                for (m, c) in e.get(i, j).terms() {
                    let key = (m.exp(Var::X) as usize * n + i) * n + j;
                    let d = m.exp(Var::D) as usize;
                    let v = out.entry(key).or_default();
                    if v.len() <= d {
                        v.resize(d + 1, crate::exactmath::rat(0));
                    }
                    v[d] += c;
                }
            }
        }
        out.into_iter()
            .map(|(k, v)| (k, UPoly::from_coeffs(v)))
            .filter(|(_, p)| !p.is_zero())
            .collect()
    }

    fn from_coords(&self, c: &BTreeMap<usize, UPoly>) -> MatrixConfElem {
        let n = self.n;
        let mut m = MatrixConfElem::zero(n);
        for (key, p) in c {
            let (k, ij) = (key / (n * n), key % (n * n));
            let xk = MultiPoly::var_pow(Var::X, k as u32);
            m.e[ij] += &(&p.to_multi(Var::D) * &xk);
        }
        m
    }
}

/// Shape predicate for the subalgebra `C₀ ⊂ Cend₂` of matrices
/// `(f(D), g(D, x); 0, f(D))`.
pub fn in_c0(a: &MatrixConfElem) -> bool {
    a.n == 2
        && a.get(1, 0).is_zero()
        && a.get(0, 0) == a.get(1, 1)
        && a.get(0, 0).only_vars(&[Var::D])
}

/// An element `a + u` of a split null extension `C ⊕ Mₙ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitNullElem {
    pub alg: MatrixConfElem,
    pub module: Vec<MultiPoly>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitNullBase {
    /// All of `Cend_n`.
    Full,
    /// The shape-defined subalgebra `C₀ ⊂ Cend₂`.
    C0,
}

/// `(a+u)∘_λ(b+w) = a∘_λ b + a_λ(w)`.
pub fn split_null_product(
    base: SplitNullBase,
    u: &SplitNullElem,
    w: &SplitNullElem,
) -> Result<SplitNullElem> {
    split_null_product_at(base, u, w, &lam())
}

pub fn split_null_product_at(
    base: SplitNullBase,
    u: &SplitNullElem,
    w: &SplitNullElem,
    l: &Affine,
) -> Result<SplitNullElem> {
    for e in [u, w] {
        if e.alg.n != e.module.len() {
            return Err(Error::Dimension(
                "algebra and module parts differ in size".into(),
            ));
        }
        if base == SplitNullBase::C0 && !in_c0(&e.alg) {
            return Err(Error::Membership(format!("{} is not in C0", e.alg)));
        }
    }
    Ok(SplitNullElem {
        alg: cend_product_at(&u.alg, &w.alg, l)?,
        module: cend_act_at(&u.alg, &w.module, l)?,
    })
}
