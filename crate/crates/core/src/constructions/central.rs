use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::confcore::{ConfAlgebra, ConfElement, Kind};
use crate::error::{Error, Result};
use crate::exactmath::{
    binomial, factorial, falling, rat, ExtFieldElem, FieldContext, Monomial, MultiPoly, Rational,
    Var,
};
use crate::par::Exec;
use crate::report::{CheckReport, Witness};

/// Coefficients of central elements: `Q` or a number field.
pub trait Scalar: Clone + PartialEq + fmt::Display + Send + Sync {
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn scale_q(&self, q: &Rational) -> Self;
    /// Power-basis coordinates.
    fn coords(&self) -> Vec<Rational>;
}

impl Scalar for Rational {
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn scale_q(&self, q: &Rational) -> Self {
        self * q
    }
    fn coords(&self) -> Vec<Rational> {
        vec![self.clone()]
    }
}

impl Scalar for ExtFieldElem {
    fn is_zero(&self) -> bool {
        ExtFieldElem::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o).expect("one field throughout")
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o).expect("one field throughout")
    }
    fn scale_q(&self, q: &Rational) -> Self {
        self.scale(q)
    }
    fn coords(&self) -> Vec<Rational> {
        ExtFieldElem::coords(self)
    }
}

/// `Σ c·t^m ⊗_H b` in `k[t] ⊗_H L`, kept reduced: `D` never appears since
/// `t^m ⊗ D·b = −m·t^{m−1} ⊗ b`.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralElement<K: Scalar = Rational> {
    terms: BTreeMap<(u32, usize), K>,
}

impl<K: Scalar> Default for CentralElement<K> {
    fn default() -> Self {
        CentralElement {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Scalar> CentralElement<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c·t^m ⊗ b`.
    pub fn term(m: u32, b: usize, c: K) -> Self {
        let mut e = Self::zero();
        e.add_term(m, b, c);
        e
    }

    pub fn add_term(&mut self, m: u32, b: usize, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&(m, b)) {
            Some(x) => {
                *x = x.plus(&c);
                if x.is_zero() {
                    self.terms.remove(&(m, b));
                }
            }
            None => {
                self.terms.insert((m, b), c);
            }
        }
    }

    /// Adds `c·t^p ⊗ D^r b`, lowering the `D`-power.
    pub fn add_reduced(&mut self, p: u32, r: u32, b: usize, c: &K) {
        if r > p {
            return;
        }
        let mut k = falling(p, r);
        if r % 2 == 1 {
            k = -k;
        }
        self.add_term(p - r, b, c.scale_q(&k));
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `((m, b), c)` in increasing `(m, b)`.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, usize), &K)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: u32, b: usize) -> Option<&K> {
        self.terms.get(&(m, b))
    }

    /// E.g. `-3 * t^2 (x) + t (y)`.
    pub fn display(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, ((m, b), c)) in self.terms.iter().enumerate() {
            let t = match m {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{m}"),
            };
            let mut s = c.to_string();
            let neg = s.starts_with('-') && !s[1..].contains([' ', '+', '-']);
            if neg {
                s.remove(0);
            }
            let simple = !s.contains([' ', '+', '-']);
            let coef = if s == "1" {
                String::new()
            } else if simple {
                format!("{s} * ")
            } else {
                format!("({s}) * ")
            };
            let body = format!("{coef}{t} ({})", names[*b]);
            match (i, neg) {
                (0, false) => out.push_str(&body),
                (0, true) => out.push_str(&format!("-{body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
                (_, true) => out.push_str(&format!(" - {body}")),
            }
        }
        out
    }
}

/// `x∘_n(t^m ⊗ a) = Σ_s C(n,s) t^{m+s} ⊗ [x∘_{n−s} a]`, where `bracket(a, k)`
/// lists `(d, r, c)` with `[x∘_k a] = Σ c·D^r d`.
fn apply<K: Scalar>(
    bracket: impl Fn(usize, u32) -> Vec<(usize, u32, K)>,
    n: u32,
    u: &CentralElement<K>,
) -> CentralElement<K> {
    let mut out = CentralElement::zero();
    for ((m, a), c) in u.terms() {
        for s in 0..=n {
            let cb = binomial(n, s);
            for (d, r, h) in bracket(*a, n - s) {
                out.add_reduced(m + s, r, d, &c.times(&h).scale_q(&cb));
            }
        }
    }
    out
}

/// Brackets of a finite Lie conformal algebra on a basis, with coefficients
/// in `K`.
pub trait CentralSource: Sync {
    type K: Scalar;
    fn dim(&self) -> usize;
    fn names(&self) -> &[String];
    fn one(&self) -> Self::K;
    /// `[x∘_k a] = Σ c·D^r d` as `(d, r, c)`.
    fn bracket(&self, x: usize, a: usize, k: u32) -> Vec<(usize, u32, Self::K)>;
    /// `1 + deg_λ [x∘_λ a]`, or 0.
    fn locality(&self, x: usize, a: usize) -> u32;
    /// `deg_D` of the coefficient of `d` in `[x∘_λ a]`; `None` if it is zero.
    fn entry_d_degree(&self, x: usize, a: usize, d: usize) -> Option<u32>;
}

fn split_rational(p: &MultiPoly, k: u32) -> Vec<(u32, Rational)> {
    let q = p.coefficient_of(Var::Lambda, k).scale(&factorial(k));
    q.coefficients_in(Var::D)
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(r, c)| (r as u32, c.constant_term()))
        .collect()
}

impl CentralSource for ConfAlgebra {
    type K = Rational;
    fn dim(&self) -> usize {
        ConfAlgebra::dim(self)
    }
    fn names(&self) -> &[String] {
        self.basis()
    }
    fn one(&self) -> Rational {
        rat(1)
    }
    fn bracket(&self, x: usize, a: usize, k: u32) -> Vec<(usize, u32, Rational)> {
        let mut out = Vec::new();
        for (d, p) in &self.table()[x][a] {
            for (r, c) in split_rational(p, k) {
                out.push((*d, r, c));
            }
        }
        out
    }
    fn locality(&self, x: usize, a: usize) -> u32 {
        self.table()[x][a]
            .iter()
            .filter_map(|(_, p)| p.degree_in(Var::Lambda))
            .max()
            .map_or(0, |d| d + 1)
    }
    fn entry_d_degree(&self, x: usize, a: usize, d: usize) -> Option<u32> {
        self.entry(x, a, d).degree_in(Var::D)
    }
}

/// A Lie conformal algebra over `Q(α)` on a basis, given by
/// `table[x][a][d] = Σ_l α^l·p_l(D, λ)`.
#[derive(Debug, Clone)]
pub struct ExtLieTable {
    pub field: Arc<FieldContext>,
    pub names: Vec<String>,
    /// Power-basis parts of each coefficient.
    pub table: Vec<Vec<Vec<Vec<MultiPoly>>>>,
}

impl CentralSource for ExtLieTable {
    type K = ExtFieldElem;
    fn dim(&self) -> usize {
        self.names.len()
    }
    fn names(&self) -> &[String] {
        &self.names
    }
    fn one(&self) -> ExtFieldElem {
        ExtFieldElem::one(&self.field)
    }
    fn bracket(&self, x: usize, a: usize, k: u32) -> Vec<(usize, u32, ExtFieldElem)> {
        let mut out = Vec::new();
        for (d, parts) in self.table[x][a].iter().enumerate() {
            let split: Vec<MultiPoly> = parts
                .iter()
                .map(|p| p.coefficient_of(Var::Lambda, k).scale(&factorial(k)))
                .collect();
            let deg = split.iter().filter_map(|p| p.degree_in(Var::D)).max();
            for r in 0..=deg.unwrap_or(0) {
                if deg.is_none() {
                    break;
                }
                let m = Monomial::var_pow(Var::D, r);
                let c = ExtFieldElem::from_coords(
                    &self.field,
                    split.iter().map(|p| p.coeff(&m)).collect(),
                );
                if !c.is_zero() {
                    out.push((d, r, c));
                }
            }
        }
        out
    }
    fn locality(&self, x: usize, a: usize) -> u32 {
        self.table[x][a]
            .iter()
            .flatten()
            .filter_map(|p| p.degree_in(Var::Lambda))
            .max()
            .map_or(0, |d| d + 1)
    }
    fn entry_d_degree(&self, x: usize, a: usize, d: usize) -> Option<u32> {
        self.table[x][a][d]
            .iter()
            .filter_map(|p| p.degree_in(Var::D))
            .max()
    }
}

fn max_d_degree<S: CentralSource>(src: &S) -> u32 {
    let n = src.dim();
    let mut best = 0;
    for x in 0..n {
        for a in 0..n {
            for d in 0..n {
                best = best.max(src.entry_d_degree(x, a, d).unwrap_or(0));
            }
        }
    }
    best
}

/// `x∘_n u` for `x` any element of `L`; the bracket `[x∘_k a]` is taken from
/// the n-products of `L`, so `D`-multiples of basis elements are handled by
/// the algebra itself.
pub fn central_action(
    l: &ConfAlgebra,
    x: &ConfElement,
    n: u32,
    u: &CentralElement,
) -> Result<CentralElement> {
    let dim = l.dim();
    if x.dim() != dim {
        return Err(Error::Basis(format!(
            "element of rank {} in an algebra of rank {dim}",
            x.dim()
        )));
    }
    if let Some(((_, b), _)) = u.terms().find(|((_, b), _)| *b >= dim) {
        return Err(Error::Basis(format!("basis index {b} out of range")));
    }
    let prod: Vec<ConfElement> = (0..dim)
        .map(|a| l.lambda_product(x, &ConfElement::basis(dim, a)))
        .collect::<Result<_>>()?;
    Ok(apply(
        |a, k| {
            let mut out = Vec::new();
            for (d, p) in prod[a].coords.iter().enumerate() {
                for (r, c) in split_rational(p, k) {
                    out.push((d, r, c));
                }
            }
            out
        },
        n,
        u,
    ))
}

/// `x∘_n u` for a basis element `x` of any [`CentralSource`].
pub fn central_action_basis<S: CentralSource>(
    src: &S,
    x: usize,
    n: u32,
    u: &CentralElement<S::K>,
) -> CentralElement<S::K> {
    apply(|a, k| src.bracket(x, a, k), n, u)
}

/// `N: B → Z₊`, in basis order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalityBound(pub Vec<u32>);

impl LocalityBound {
    pub fn uniform(dim: usize, k: u32) -> Self {
        LocalityBound(vec![k; dim])
    }

    /// `x=1,y=2`; symbols left out are an error.
    pub fn parse(names: &[String], s: &str) -> Result<Self> {
        let mut v: Vec<Option<u32>> = vec![None; names.len()];
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, val) = part
                .split_once('=')
                .ok_or_else(|| Error::Format(format!("expected `symbol=value`, got `{part}`")))?;
            let i = names
                .iter()
                .position(|n| n == k.trim())
                .ok_or_else(|| Error::Basis(format!("unknown basis symbol `{}`", k.trim())))?;
            v[i] = Some(
                val.trim()
                    .parse()
                    .map_err(|_| Error::Format(format!("bad bound `{}`", val.trim())))?,
            );
        }
        v.into_iter()
            .enumerate()
            .map(|(i, x)| {
                x.ok_or_else(|| Error::Format(format!("no bound given for `{}`", names[i])))
            })
            .collect::<Result<_>>()
            .map(LocalityBound)
    }

    pub fn display(&self, names: &[String]) -> String {
        names
            .iter()
            .zip(&self.0)
            .map(|(n, k)| format!("{n}={k}"))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

/// One instance of `x∘_n(t^m ⊗ b) ∉ I(B, N)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PbwViolation<K: Scalar = Rational> {
    pub x: usize,
    pub n: u32,
    pub m: u32,
    pub b: usize,
    /// The part of the image below the bound.
    pub residual: CentralElement<K>,
}

fn validate<S: CentralSource>(src: &S, bound: &LocalityBound) -> Result<()> {
    if bound.0.len() != src.dim() {
        return Err(Error::Dimension(format!(
            "{} bounds for {} basis elements",
            bound.0.len(),
            src.dim()
        )));
    }
    if let Some(i) = bound.0.iter().position(|&k| k == 0) {
        return Err(Error::Precondition(format!(
            "N({}) must be positive",
            src.names()[i]
        )));
    }
    Ok(())
}

/// Tests `x∘_n(t^m ⊗ b) ∈ I(B, N) = span{t^m ⊗ a : m ≥ N(a)}` for `x, b ∈ B`,
/// `N(b) ≤ m ≤ N(b) + window` (default window: max `D`-degree + 1), and all
/// `n` up to `N(x, b) + max D-degree + max N`, past which every term of the
/// image already lies in `I`. Results come in `(x, b, m, n)` order.
pub fn pbw_violations<S: CentralSource>(
    src: &S,
    bound: &LocalityBound,
    window: Option<u32>,
    exec: Exec,
) -> Result<(usize, Vec<PbwViolation<S::K>>)> {
    validate(src, bound)?;
    let n = src.dim();
    let maxd = max_d_degree(src);
    let window = window.unwrap_or(maxd + 1);
    let maxn = bound.0.iter().copied().max().unwrap_or(0);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |b| (x, b))).collect();
    let results = exec.map(pairs, |(x, b)| {
        let mut checked = 0;
        let mut found = Vec::new();
        let top = src.locality(x, b) + maxd + maxn;
        for m in bound.0[b]..=bound.0[b] + window {
            let u = CentralElement::term(m, b, src.one());
            for nn in 0..=top {
                checked += 1;
                let img = central_action_basis(src, x, nn, &u);
                let mut low = CentralElement::zero();
                for ((p, d), c) in img.terms() {
                    if *p < bound.0[*d] {
                        low.add_term(*p, *d, c.clone());
                    }
                }
                if !low.is_zero() {
                    found.push(PbwViolation {
                        x,
                        n: nn,
                        m,
                        b,
                        residual: low,
                    });
                }
            }
        }
        (checked, found)
    });
    let mut checked = 0;
    let mut all = Vec::new();
    for (c, f) in results {
        checked += c;
        all.extend(f);
    }
    Ok((checked, all))
}

/// The central PBW invariance test as a report; witnesses read
/// `central PBW (x, n, m, b)`.
pub fn check_central_pbw<S: CentralSource>(
    src: &S,
    bound: &LocalityBound,
    window: Option<u32>,
    exec: Exec,
) -> Result<CheckReport> {
    let (checked, violations) = pbw_violations(src, bound, window, exec)?;
    let names = src.names();
    let mut report = CheckReport::new("central PBW");
    report.checked = checked;
    for v in violations {
        report.witnesses.push(Witness {
            location: format!(
                "central PBW ({}, {}, {}, {})",
                names[v.x], v.n, v.m, names[v.b]
            ),
            residual: v.residual.display(names),
        });
    }
    Ok(report)
}

/// Generators of `V ⊕ M`: `u`, then `t^m ⊗ b` for `m < N(b)`, named `b_m`.
pub(crate) fn pbw_names(names: &[String], bound: &LocalityBound) -> Vec<String> {
    let mut u = "u".to_string();
    while names.iter().any(|n| n == &u) {
        u.push('\'');
    }
    let mut out = vec![u];
    for (b, &k) in names.iter().zip(&bound.0) {
        for m in 0..k {
            out.push(format!("{b}_{m}"));
        }
    }
    out
}

/// Action table of the central-PBW module, as power-basis parts:
/// `dense[x][i][j][l]`. `x∘_λ u = λ·Σ_{n<N(x)} λⁿ/n!·(t^n ⊗ x)` and
/// `x∘_λ(t^m ⊗ b) = Σ_n λⁿ/n!·(x∘_n(t^m ⊗ b) mod I)`.
pub(crate) fn pbw_table<S: CentralSource>(
    src: &S,
    bound: &LocalityBound,
) -> Vec<Vec<Vec<Vec<MultiPoly>>>> {
    let n = src.dim();
    let deg = src.one().coords().len();
    let mut offset = Vec::with_capacity(n);
    let mut acc = 1usize;
    for &k in &bound.0 {
        offset.push(acc);
        acc += k as usize;
    }
    let rank = acc;
    let maxd = max_d_degree(src);
    let maxn = bound.0.iter().copied().max().unwrap_or(0);
    let lam = |k: u32| MultiPoly::var_pow(Var::Lambda, k).scale(&(rat(1) / factorial(k)));
    let mut dense = vec![vec![vec![vec![MultiPoly::zero(); deg]; rank]; rank]; n];
    for x in 0..n {
        for k in 0..bound.0[x] {
            dense[x][0][offset[x] + k as usize][0] = &MultiPoly::var(Var::Lambda) * &lam(k);
        }
        for b in 0..n {
            let top = src.locality(x, b) + maxd + maxn;
            for m in 0..bound.0[b] {
                let u = CentralElement::term(m, b, src.one());
                for nn in 0..=top {
                    let img = central_action_basis(src, x, nn, &u);
                    for ((p, d), c) in img.terms() {
                        if *p >= bound.0[*d] {
                            continue;
                        }
                        let j = offset[*d] + *p as usize;
                        for (l, q) in c.coords().iter().enumerate() {
                            dense[x][offset[b] + m as usize][j][l] += &lam(nn).scale(q);
                        }
                    }
                }
            }
        }
    }
    dense
}

pub(crate) fn require_lie(l: &ConfAlgebra) -> Result<()> {
    if l.kind() != Kind::Lie {
        return Err(Error::Precondition(format!(
            "needs a Lie conformal algebra, got a {} one",
            l.kind().name()
        )));
    }
    Ok(())
}
