use std::collections::BTreeMap;

use super::{check_associativity, ConfAlgebra, ConfElement, Kind};
use crate::error::{Error, Result};
use crate::exactmath::qlinalg::{nullspace, solve};
use crate::exactmath::{Affine, MultiPoly, Rational, UPoly, Var};
use crate::hlinalg::SubmoduleBasis;
use crate::par::Exec;

fn require_associative(c: &ConfAlgebra, what: &str) -> Result<()> {
    if c.kind() != Kind::Associative {
        return Err(Error::Precondition(format!(
            "{what} needs an associative algebra, got a {} one",
            c.kind().name()
        )));
    }
    Ok(())
}

fn dense_from(
    c: &ConfAlgebra,
    f: impl Fn(usize, usize) -> ConfElement,
) -> Vec<Vec<Vec<MultiPoly>>> {
    (0..c.dim())
        .map(|a| (0..c.dim()).map(|b| f(a, b).coords).collect())
        .collect()
}

/// `C⁽⁻⁾` with `[a∘_λ b] = a∘_λ b − {b∘_λ a}`.
pub fn commutator_algebra(c: &ConfAlgebra, exec: Exec) -> Result<ConfAlgebra> {
    require_associative(c, "the commutator algebra")?;
    let r = check_associativity(c, exec);
    if !r.passed() {
        return Err(Error::Precondition(format!(
            "input is not associative: {r}"
        )));
    }
    let lam = Affine::var(Var::Lambda);
    let n = c.dim();
    let dense = dense_from(c, |a, b| {
        let (ea, eb) = (ConfElement::basis(n, a), ConfElement::basis(n, b));
        c.product_at(&ea, &eb, &lam)
            .sub(&c.braced_at(&eb, &ea, &lam))
    });
    Ok(ConfAlgebra::from_dense(
        Kind::Lie,
        c.basis().to_vec(),
        dense,
    ))
}

/// `C^op` with `a∘^op_λ b = {b∘_λ a}`.
pub fn opposite_algebra(c: &ConfAlgebra) -> Result<ConfAlgebra> {
    require_associative(c, "the opposite algebra")?;
    let lam = Affine::var(Var::Lambda);
    let n = c.dim();
    let dense = dense_from(c, |a, b| {
        c.braced_at(&ConfElement::basis(n, b), &ConfElement::basis(n, a), &lam)
    });
    Ok(ConfAlgebra::from_dense(
        Kind::Associative,
        c.basis().to_vec(),
        dense,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnitSearch {
    Found(ConfElement),
    /// Sound but incomplete: no unit of `D`-degree at most `bound` was found.
    NoneWithinBound {
        bound: u32,
    },
}

/// Searches `e = Σ f_b(D) b` with `deg f_b ≤ bound`.
///
/// The unit conditions on basis elements are linear in the coefficients of
/// the `f_b`; they are solved exactly over Q. The quadratic condition
/// `N(e, e) ≤ 1` is then tested on the particular solution and on the
/// particular solution shifted by each kernel vector.
pub fn find_unit(c: &ConfAlgebra, side: Side, bound: Option<u32>) -> Result<UnitSearch> {
    require_associative(c, "a unit search")?;
    let bound = bound.unwrap_or(c.max_d_degree() + 2);
    let n = c.dim();
    let per = bound as usize + 1;
    let unknowns = n * per;
    let unknown_elem =
        |u: usize| ConfElement::term(n, u / per, MultiPoly::var_pow(Var::D, (u % per) as u32));
    // Rows keyed by (side, x, target, D-exponent).
    let mut rows: BTreeMap<(u8, usize, usize, u32), Vec<Rational>> = BTreeMap::new();
    let mut rhs: BTreeMap<(u8, usize, usize, u32), Rational> = BTreeMap::new();
    let sides: &[u8] = match side {
        Side::Left => &[0],
        Side::Right => &[1],
        Side::TwoSided => &[0, 1],
    };
    for &s in sides {
        for x in 0..n {
            let ex = ConfElement::basis(n, x);
            rhs.insert((s, x, x, 0), Rational::from_integer(1.into()));
            rows.entry((s, x, x, 0))
                .or_insert_with(|| vec![Rational::from_integer(0.into()); unknowns]);
            for u in 0..unknowns {
                let e = unknown_elem(u);
                let v = if s == 0 {
                    c.n_product(&e, &ex, 0)?
                } else {
                    c.braced_product(&ex, &e, 0)?
                };
                for (t, p) in v.coords.iter().enumerate() {
                    for (m, a) in p.terms() {
                        rows.entry((s, x, t, m.exp(Var::D)))
                            .or_insert_with(|| vec![Rational::from_integer(0.into()); unknowns])
                            [u] += a;
                    }
                }
            }
        }
    }
    let keys: Vec<_> = rows.keys().cloned().collect();
    let m: Vec<Vec<Rational>> = keys.iter().map(|k| rows[k].clone()).collect();
    let b: Vec<Rational> = keys
        .iter()
        .map(|k| {
            rhs.get(k)
                .cloned()
                .unwrap_or_else(|| Rational::from_integer(0.into()))
        })
        .collect();
    let Some(p) = solve(&m, &b, unknowns) else {
        return Ok(UnitSearch::NoneWithinBound { bound });
    };
    let build = |coef: &[Rational]| {
        let mut e = ConfElement::zero(n);
        for (u, a) in coef.iter().enumerate() {
            e.coords[u / per] += &MultiPoly::var_pow(Var::D, (u % per) as u32).scale(a);
        }
        e
    };
    let mut candidates = vec![p.clone()];
    for k in nullspace(&m, unknowns) {
        candidates.push(p.iter().zip(&k).map(|(x, y)| x + y).collect());
        candidates.push(p.iter().zip(&k).map(|(x, y)| x - y).collect());
    }
    for cand in candidates {
        let e = build(&cand);
        if c.lambda_product(&e, &e)?
            .degree_in(Var::Lambda)
            .unwrap_or(0)
            == 0
        {
            return Ok(UnitSearch::Found(e));
        }
    }
    Ok(UnitSearch::NoneWithinBound { bound })
}

pub(crate) fn to_upoly(e: &ConfElement) -> Vec<UPoly> {
    e.coords
        .iter()
        .map(|p| UPoly::from_multi(p, Var::D).expect("element coordinates are polynomials in D"))
        .collect()
}

pub(crate) fn from_upoly(v: &[UPoly]) -> ConfElement {
    ConfElement {
        coords: v.iter().map(|p| p.to_multi(Var::D)).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedSeries {
    /// `L = L⁽⁰⁾ ⊇ L⁽¹⁾ ⊇ …`, stopping at zero or at the first repeat.
    pub terms: Vec<SubmoduleBasis>,
    pub is_solvable: bool,
}

/// `L⁽ᵏ⁺¹⁾` is the `H`-span of all n-products of generators of `L⁽ᵏ⁾`.
///
/// The span of generator products is already closed under the products
/// of its `H`-multiples, by sesqui-linearity.
pub fn derived_series(c: &ConfAlgebra) -> Result<DerivedSeries> {
    if c.kind() != Kind::Lie {
        return Err(Error::Precondition(
            "the derived series needs a Lie algebra".into(),
        ));
    }
    let n = c.dim();
    let mut cur = SubmoduleBasis::full(Var::D, n);
    let mut terms = vec![cur.clone()];
    while !cur.is_zero() {
        let gens: Vec<ConfElement> = cur.generators().iter().map(|g| from_upoly(g)).collect();
        let mut prods = Vec::new();
        for a in &gens {
            for b in &gens {
                let p = c.lambda_product(a, b)?;
                let top = p.degree_in(Var::Lambda).unwrap_or(0);
                for k in 0..=top {
                    let v = p.divided_coefficient(Var::Lambda, k);
                    if !v.is_zero() {
                        prods.push(to_upoly(&v));
                    }
                }
            }
        }
        let next = SubmoduleBasis::new(Var::D, n, prods)?;
        if next == cur {
            break;
        }
        terms.push(next.clone());
        cur = next;
    }
    Ok(DerivedSeries {
        is_solvable: cur.is_zero(),
        terms,
    })
}
