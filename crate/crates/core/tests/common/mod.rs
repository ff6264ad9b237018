#![allow(dead_code)]

use confalg::confcore::ConfElement;
use confalg::exactmath::qlinalg::nullspace;
use confalg::exactmath::{rat, UPoly};
use confalg::exactmath::{Monomial, MultiPoly, Var};
use confalg::hlinalg::PolyMatrix;
use confalg::repr::ConfRep;

/// Kernel elements of bounded degree by plain linear algebra over Q: the
/// unknowns are the coefficients of `f_b(D)`, the equations the coefficients
/// of `D^k λ^l` in `Σ f_b(−λ)φ̄_{b,i}^j`.
pub fn brute_kernel(r: &ConfRep, deg: u32) -> Vec<ConfElement> {
    let n = r.algebra().dim();
    let m = r.rank();
    let per = deg as usize + 1;
    let mut cols: Vec<Vec<Vec<MultiPoly>>> = Vec::new();
    for b in 0..n {
        for k in 0..per {
            let f = ConfElement::term(n, b, MultiPoly::var_pow(Var::D, k as u32));
            cols.push(
                (0..m)
                    .map(|i| r.act(&f, &ConfElement::basis(m, i).coords))
                    .collect(),
            );
        }
    }
    let mut keys = std::collections::BTreeSet::new();
    for c in &cols {
        for v in c {
            for q in v {
                keys.extend(q.terms().map(|(mo, _)| *mo));
            }
        }
    }
    let mut rows = Vec::new();
    for i in 0..m {
        for j in 0..m {
            for key in &keys {
                rows.push(cols.iter().map(|c| c[i][j].coeff(key)).collect::<Vec<_>>());
            }
        }
    }
    nullspace(&rows, cols.len())
        .into_iter()
        .map(|v| {
            let coords = (0..n)
                .map(|b| {
                    MultiPoly::from_terms(
                        (0..per)
                            .map(|k| (Monomial::var_pow(Var::D, k as u32), v[b * per + k].clone())),
                    )
                })
                .collect();
            ConfElement { coords }
        })
        .collect()
}

/// `{v ∈ Q[D]^r : deg v ≤ 3, vᵀM = 0}` by linear algebra over `Q`.
pub fn brute_syzygies(m: &PolyMatrix) -> Vec<Vec<UPoly>> {
    let (r, c) = (m.nrows(), m.ncols());
    let per = 4;
    let maxdeg = (0..r)
        .flat_map(|i| (0..c).map(move |j| (i, j)))
        .filter_map(|(i, j)| m.get(i, j).degree())
        .max()
        .unwrap_or(0);
    let mut rows = Vec::new();
    for j in 0..c {
        for k in 0..=maxdeg + per {
            rows.push(
                (0..r)
                    .flat_map(|i| (0..per).map(move |e| (i, e)))
                    .map(|(i, e)| {
                        if k >= e {
                            m.get(i, j).coeff(k - e)
                        } else {
                            rat(0)
                        }
                    })
                    .collect::<Vec<_>>(),
            );
        }
    }
    nullspace(&rows, r * per)
        .into_iter()
        .map(|v| {
            (0..r)
                .map(|i| UPoly::from_coeffs(v[i * per..(i + 1) * per].to_vec()))
                .collect()
        })
        .collect()
}
