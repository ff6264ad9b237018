use std::collections::{BTreeMap, BTreeSet};

use crate::error::Result;
use crate::exactmath::{UPoly, Var};
use crate::hlinalg::SubmoduleBasis;
use crate::par::Exec;

use super::derived::{from_upoly, to_upoly};
use super::{ConfAlgebra, ConfElement};

/// An ambient conformal algebra with an enumerable `H`-basis.
///
/// Coordinates are sparse: key → coefficient in `Q[D]`.
pub trait GrowthAmbient: Sync {
    type Elem: Clone + Send + Sync;

    /// All nonzero n-products `a∘_n b`, `n ≥ 0`.
    fn n_products(&self, a: &Self::Elem, b: &Self::Elem) -> Vec<Self::Elem>;
    fn coords(&self, e: &Self::Elem) -> BTreeMap<usize, UPoly>;
    fn from_coords(&self, c: &BTreeMap<usize, UPoly>) -> Self::Elem;
}

impl GrowthAmbient for ConfAlgebra {
    type Elem = ConfElement;

    fn n_products(&self, a: &ConfElement, b: &ConfElement) -> Vec<ConfElement> {
        let p = self.product_at(a, b, &crate::exactmath::Affine::var(Var::Lambda));
        let top = p.degree_in(Var::Lambda).map_or(0, |d| d + 1);
        (0..top)
            .map(|k| p.divided_coefficient(Var::Lambda, k))
            .filter(|e| !e.is_zero())
            .collect()
    }

    fn coords(&self, e: &ConfElement) -> BTreeMap<usize, UPoly> {
        to_upoly(e)
            .into_iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .collect()
    }

    fn from_coords(&self, c: &BTreeMap<usize, UPoly>) -> ConfElement {
        let mut v = vec![UPoly::zero(); self.dim()];
        for (k, p) in c {
            v[*k] = p.clone();
        }
        from_upoly(&v)
    }
}

/// `H`-span of sparse vectors: returns the Hermite generators, back as sparse
/// vectors, and the rank.
fn span(vs: Vec<BTreeMap<usize, UPoly>>) -> Result<(Vec<BTreeMap<usize, UPoly>>, usize)> {
    let keys: Vec<usize> = vs
        .iter()
        .flat_map(|v| v.keys().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let pos: BTreeMap<usize, usize> = keys.iter().enumerate().map(|(i, k)| (*k, i)).collect();
    let dense: Vec<Vec<UPoly>> = vs
        .iter()
        .map(|v| {
            let mut row = vec![UPoly::zero(); keys.len()];
            for (k, p) in v {
                row[pos[k]] = p.clone();
            }
            row
        })
        .collect();
    let s = SubmoduleBasis::new(Var::D, keys.len(), dense)?;
    let gens = s
        .generators()
        .iter()
        .map(|g| {
            g.iter()
                .enumerate()
                .filter(|(_, p)| !p.is_zero())
                .map(|(i, p)| (keys[i], p.clone()))
                .collect()
        })
        .collect();
    Ok((gens, s.rank()))
}

/// Ranks of `V(1), …, V(n_max)` where `V(1)` is the `H`-span of the
/// generators and `V(n) = V(n−1) + Σ_{i+j=n} V(i)∘V(j)`.
///
/// Every monomial of length `n`, under any bracketing, splits at its outer
/// product into lengths `i + j = n`, so induction covers all bracketings.
pub fn growth_profile<A: GrowthAmbient>(
    amb: &A,
    generators: &[A::Elem],
    n_max: usize,
    exec: Exec,
) -> Result<Vec<usize>> {
    let mut levels: Vec<Vec<A::Elem>> = Vec::new();
    let mut ranks = Vec::new();
    for n in 1..=n_max {
        let mut vs: Vec<BTreeMap<usize, UPoly>> = Vec::new();
        if n == 1 {
            vs.extend(generators.iter().map(|g| amb.coords(g)));
        } else {
            vs.extend(levels[n - 2].iter().map(|g| amb.coords(g)));
            let mut pairs = Vec::new();
            for i in 1..n {
                for a in &levels[i - 1] {
                    for b in &levels[n - i - 1] {
                        pairs.push((a, b));
                    }
                }
            }
            let prods = exec.map(pairs, |(a, b)| {
                amb.n_products(a, b)
                    .iter()
                    .map(|e| amb.coords(e))
                    .collect::<Vec<_>>()
            });
            vs.extend(prods.into_iter().flatten());
        }
        let (gens, rank) = span(vs)?;
        levels.push(gens.iter().map(|g| amb.from_coords(g)).collect());
        ranks.push(rank);
    }
    Ok(ranks)
}
