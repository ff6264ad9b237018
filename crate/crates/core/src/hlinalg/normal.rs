use num_traits::One;

use super::{PolyMatrix, SubmoduleBasis};
use crate::exactmath::{Rational, UPoly};

/// Least-degree nonzero entry among `rows` in column `c`; ties go to the
/// lowest row index.
fn pivot_row(m: &PolyMatrix, rows: std::ops::Range<usize>, c: usize) -> Option<usize> {
    rows.filter(|&i| !m.get(i, c).is_zero())
        .min_by_key(|&i| (m.get(i, c).degree_key(), i))
}

/// Row Hermite form: returns `(H, U)` with `U·M = H`, `U` unimodular, `H` in
/// echelon form with monic pivots and entries above each pivot reduced below
/// the pivot degree. `H` is canonical for the row module of `M`.
pub fn hermite_normal_form(m: &PolyMatrix) -> (PolyMatrix, PolyMatrix) {
    let mut h = m.clone();
    let mut u = PolyMatrix::identity(m.var, m.nrows());
    let mut r = 0;
    for c in 0..m.ncols() {
        if r == m.nrows() {
            break;
        }
        loop {
            let Some(p) = pivot_row(&h, r..m.nrows(), c) else {
                break;
            };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..m.nrows() {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let q = h.get(i, c).divrem(h.get(r, c)).0;
                h.row_axpy(i, r, &q);
                u.row_axpy(i, r, &q);
                if !h.get(i, c).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        let k = Rational::one() / h.get(r, c).lc();
        h.scale_row(r, &k);
        u.scale_row(r, &k);
        for i in 0..r {
            let q = h.get(i, c).divrem(h.get(r, c)).0;
            h.row_axpy(i, r, &q);
            u.row_axpy(i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

/// Smith form: returns `(S, U, V)` with `U·M·V = S` diagonal, monic diagonal
/// entries `d₁ | d₂ | …`, and `U`, `V` unimodular.
pub fn smith_normal_form(m: &PolyMatrix) -> (PolyMatrix, PolyMatrix, PolyMatrix) {
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut s = m.clone();
    let mut u = PolyMatrix::identity(m.var, rows);
    let mut v = PolyMatrix::identity(m.var, cols);
    for t in 0..rows.min(cols) {
        loop {
            // Least-degree entry of the trailing block, first in row-major order.
            let mut best: Option<(usize, usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let p = s.get(i, j);
                    if !p.is_zero() && best.is_none_or(|(d, _, _)| p.degree_key() < d) {
                        best = Some((p.degree_key(), i, j));
                    }
                }
            }
            let Some((_, pi, pj)) = best else {
                return (s, u, v);
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);
            let mut clean = true;
            for i in t + 1..rows {
                let q = s.get(i, t).divrem(s.get(t, t)).0;
                s.row_axpy(i, t, &q);
                u.row_axpy(i, t, &q);
                clean &= s.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                let q = s.get(t, j).divrem(s.get(t, t)).0;
                s.col_axpy(j, t, &q);
                v.col_axpy(j, t, &q);
                clean &= s.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            // Divisibility: fold an offending row into row t and go again.
            let bad =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !s.get(t, t).divides(s.get(i, j))));
            match bad {
                Some(i) => {
                    let minus_one = UPoly::constant(-Rational::one());
                    s.row_axpy(t, i, &minus_one);
                    u.row_axpy(t, i, &minus_one);
                }
                None => break,
            }
        }
        let k = Rational::one() / s.get(t, t).lc();
        s.scale_row(t, &k);
        u.scale_row(t, &k);
    }
    (s, u, v)
}

/// Generators of the left kernel `{v : vᵀ·M = 0}`, as a Hermite basis.
pub fn syzygy_kernel(m: &PolyMatrix) -> SubmoduleBasis {
    let (h, u) = hermite_normal_form(m);
    let gens: Vec<Vec<UPoly>> = (0..m.nrows())
        .filter(|&i| h.row(i).iter().all(|p| p.is_zero()))
        .map(|i| u.row(i).to_vec())
        .collect();
    SubmoduleBasis::new(m.var, m.nrows(), gens).expect("kernel rows have ambient length")
}
