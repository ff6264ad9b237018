use std::collections::BTreeMap;

use super::ConfRep;
use crate::confcore::ConfElement;
use crate::exactmath::{MultiPoly, UPoly, Var};
use crate::hlinalg::{syzygy_kernel, PolyMatrix, SubmoduleBasis};

/// `{Σ f_b(D)b : Σ f_b(−λ)·images(b) = 0}` for images in `Q[D, λ]` that are
/// already reduced.
///
/// The factor `f_b(−λ)` is free of `D`, so the condition splits exactly by
/// powers of `D` into a left-kernel problem over `Q[λ]`; a solution `g_b(λ)`
/// gives back `f_b(D) = g_b(−D)`.
pub(crate) fn annihilator(n: usize, images: impl Fn(usize) -> Vec<MultiPoly>) -> SubmoduleBasis {
    let mut cols: BTreeMap<(usize, usize), Vec<UPoly>> = BTreeMap::new();
    for b in 0..n {
        for (pos, p) in images(b).iter().enumerate() {
            for (k, c) in p.coefficients_in(Var::D).iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let c = UPoly::from_multi(c, Var::Lambda).expect("images involve only D and l");
                cols.entry((pos, k))
                    .or_insert_with(|| vec![UPoly::zero(); n])[b] = c;
            }
        }
    }
    if cols.is_empty() {
        return SubmoduleBasis::full(Var::D, n);
    }
    let cols: Vec<Vec<UPoly>> = cols.into_values().collect();
    let rows: Vec<Vec<UPoly>> = (0..n)
        .map(|b| cols.iter().map(|c| c[b].clone()).collect())
        .collect();
    let mat = PolyMatrix::from_rows(Var::Lambda, cols.len(), rows).expect("rectangular");
    let gens = syzygy_kernel(&mat)
        .generators()
        .iter()
        .map(|g| g.iter().map(UPoly::reflect).collect())
        .collect();
    SubmoduleBasis::new(Var::D, n, gens).expect("kernel rows have ambient length")
}

/// `Ker ρ` as a submodule of `C`: the action of `Σ f_b(D)b` on `eᵢ` is
/// `Σ f_b(−λ)φ̄_{b,i}^j(D, λ)` with `φ̄` reduced in `M`.
pub fn rep_kernel(r: &ConfRep) -> SubmoduleBasis {
    let n = r.algebra().dim();
    let m = r.rank();
    annihilator(n, |b| {
        let eb = ConfElement::basis(n, b);
        (0..m)
            .flat_map(|i| r.act(&eb, &ConfElement::basis(m, i).coords))
            .collect()
    })
}

/// Faithful iff the kernel is zero; otherwise a nonzero kernel element.
pub fn is_faithful(r: &ConfRep) -> (bool, Option<ConfElement>) {
    let k = rep_kernel(r);
    match k.generators().first() {
        None => (true, None),
        Some(g) => (
            false,
            Some(ConfElement {
                coords: g
                    .iter()
                    .map(|p| p.to_multi(Var::D))
                    .collect::<Vec<MultiPoly>>(),
            }),
        ),
    }
}
