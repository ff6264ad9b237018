use crate::confcore::{check_associativity, ConfAlgebra, ConfElement, Kind};
use crate::error::{Error, Result};
use crate::exactmath::{binomial, factorial, falling, rat, Monomial, MultiPoly, Var};
use crate::par::Exec;
use crate::repr::{ConfRep, HModulePresentation};

/// `M`: the largest `D`-degree among the n-product coefficients of the table.
pub fn table_degree_bound(c: &ConfAlgebra) -> Result<u32> {
    if c.kind() != Kind::Associative {
        return Err(Error::Precondition(format!(
            "the degree bound is defined for associative algebras, got a {} one",
            c.kind().name()
        )));
    }
    Ok(c.max_d_degree())
}

/// Output of [`adjoin_unit_rep`].
#[derive(Debug, Clone)]
pub struct AdjoinedUnit {
    pub rep: ConfRep,
    /// `M` of the table.
    pub degree_bound: u32,
    pub m_prime: u32,
    /// Set when `M′ ≤ M`: the module is still built but faithfulness is not
    /// guaranteed.
    pub warning: Option<String>,
}

/// The module generated by a formal unit `v` with `b∘_n v = 0` for `n ≥ M′`:
/// free on `v` and the classes `(b, n) = b∘_n v`, `n < M′`.
///
/// `c∘_k(b∘_n v) = Σ_s C(k,s)(c∘_{k−s}b)∘_{n+s} v`, then
/// `(D^r d)∘_j v = (−1)^r j!/(j−r)!·d∘_{j−r} v`.
pub fn adjoin_unit_rep(c: &ConfAlgebra, m_prime: Option<u32>, exec: Exec) -> Result<AdjoinedUnit> {
    let bound = table_degree_bound(c)?;
    let r = check_associativity(c, exec);
    if !r.passed() {
        return Err(Error::Precondition(format!(
            "input is not associative: {r}"
        )));
    }
    let mp = m_prime.unwrap_or(bound + 1);
    let warning = (mp <= bound)
        .then(|| format!("M' = {mp} does not exceed M = {bound}; faithfulness is not guaranteed"));
    let n = c.dim();
    let per = mp as usize;
    let rank = 1 + n * per;
    let idx = |b: usize, j: usize| 1 + b * per + j;
    let mut names = vec!["v".to_string()];
    for b in c.basis() {
        for j in 0..per {
            names.push(format!("{b}_{j}"));
        }
    }
    let module = HModulePresentation::free(names);
    let lam = MultiPoly::var(Var::Lambda);
    let lam_pow = |k: u32| lam.pow(k).scale(&(rat(1) / factorial(k)));
    let mut dense = vec![vec![vec![MultiPoly::zero(); rank]; rank]; n];
    for (cc, row) in dense.iter_mut().enumerate() {
        for j in 0..per {
            row[0][idx(cc, j)] = lam_pow(j as u32);
        }
    }
    let max_d = c.max_d_degree();
    for cc in 0..n {
        let ec = ConfElement::basis(n, cc);
        for b in 0..n {
            let eb = ConfElement::basis(n, b);
            let prod = c.lambda_product(&ec, &eb)?;
            let loc = prod.degree_in(Var::Lambda).map_or(0, |d| d + 1);
            if loc == 0 {
                continue;
            }
            let nprods: Vec<ConfElement> = (0..loc)
                .map(|m| prod.divided_coefficient(Var::Lambda, m))
                .collect();
            for nn in 0..mp {
                let mut out = vec![MultiPoly::zero(); rank];
                for k in 0..(loc + mp + max_d) {
                    let mut coef = vec![rat(0); rank];
                    for s in 0..=k {
                        if k - s >= loc {
                            continue;
                        }
                        let cb = binomial(k, s);
                        let j = nn + s;
                        for (d, h) in nprods[(k - s) as usize].coords.iter().enumerate() {
                            for (rr, hr) in h.coefficients_in(Var::D).iter().enumerate() {
                                let rr = rr as u32;
                                let hr = hr.constant_term();
                                if hr == rat(0) || rr > j || j - rr >= mp {
                                    continue;
                                }
                                let sign = if rr % 2 == 0 { rat(1) } else { rat(-1) };
                                coef[idx(d, (j - rr) as usize)] +=
                                    &cb * &hr * sign * falling(j, rr);
                            }
                        }
                    }
                    for (t, q) in coef.into_iter().enumerate() {
                        if q != rat(0) {
                            out[t] += &MultiPoly::monomial(
                                Monomial::var_pow(Var::Lambda, k),
                                q / factorial(k),
                            );
                        }
                    }
                }
                dense[cc][idx(b, nn as usize)] = out;
            }
        }
    }
    let rep = ConfRep::from_dense(c.clone(), false, module, dense)?;
    Ok(AdjoinedUnit {
        rep,
        degree_bound: bound,
        m_prime: mp,
        warning,
    })
}
