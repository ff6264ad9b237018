//! Named algebras used by tests, examples, and the command line.

use super::{current_algebra, differential_algebra, virasoro, OrdinaryAlgebra};
use crate::confcore::{ConfAlgebra, Kind};
use crate::exactmath::{rat, Rational};

fn names(s: &[&str]) -> Vec<String> {
    s.iter().map(|x| x.to_string()).collect()
}

fn ordinary(kind: Kind, n: &[&str], t: &[(usize, usize, usize, i64)]) -> OrdinaryAlgebra {
    OrdinaryAlgebra::new(
        kind,
        names(n),
        t.iter().map(|&(i, j, k, c)| (i, j, k, rat(c))).collect(),
        None,
    )
    .unwrap()
}

/// `Q` with `e·e = e`.
pub fn rationals() -> OrdinaryAlgebra {
    ordinary(Kind::Associative, &["e"], &[(0, 0, 0, 1)])
}

/// `Q[ε]/(ε²)` on the basis `u = 1, eps`.
pub fn dual_numbers() -> OrdinaryAlgebra {
    ordinary(
        Kind::Associative,
        &["u", "eps"],
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)],
    )
}

/// Matrix units `e_ij e_kl = δ_jk e_il`.
pub fn matrices(n: usize) -> OrdinaryAlgebra {
    let mut nm = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            nm.push(format!("e{i}{j}"));
        }
    }
    let idx = |i: usize, j: usize| i * n + j;
    let mut t = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                t.push((idx(i, j), idx(j, l), idx(i, l), rat(1)));
            }
        }
    }
    OrdinaryAlgebra::new(Kind::Associative, nm, t, None).unwrap()
}

pub fn sl2() -> OrdinaryAlgebra {
    // e, h, f
    ordinary(
        Kind::Lie,
        &["e", "h", "f"],
        &[
            (1, 0, 0, 2),
            (0, 1, 0, -2),
            (1, 2, 2, -2),
            (2, 1, 2, 2),
            (0, 2, 1, 1),
            (2, 0, 1, -1),
        ],
    )
}

pub fn gl2() -> OrdinaryAlgebra {
    matrices(2).commutator()
}

/// `[a, b] = b`.
pub fn solv2() -> OrdinaryAlgebra {
    ordinary(Kind::Lie, &["a", "b"], &[(0, 1, 1, 1), (1, 0, 1, -1)])
}

pub fn abelian2() -> OrdinaryAlgebra {
    ordinary(Kind::Lie, &["a", "b"], &[])
}

/// `Q[x]/(x³)` on `one, x, x2` with the given derivation rows.
pub fn truncated_x3(derivation: [[i64; 3]; 3]) -> OrdinaryAlgebra {
    let mut a = ordinary(
        Kind::Associative,
        &["one", "x", "x2"],
        &[
            (0, 0, 0, 1),
            (0, 1, 1, 1),
            (1, 0, 1, 1),
            (0, 2, 2, 1),
            (2, 0, 2, 1),
            (1, 1, 2, 1),
        ],
    );
    a.derivation = Some(
        derivation
            .iter()
            .map(|r| r.iter().map(|&c| rat(c)).collect())
            .collect(),
    );
    a
}

/// `d/dx` on `Q[x]/(x³)`. It does not descend to the quotient: it is not a
/// derivation there.
pub fn x3_d_dx() -> OrdinaryAlgebra {
    truncated_x3([[0, 0, 0], [1, 0, 0], [0, 2, 0]])
}

/// `x²·d/dx` on `Q[x]/(x³)`: `∂x = x²`, `∂x² = 0`.
pub fn x3_x2_d_dx() -> OrdinaryAlgebra {
    truncated_x3([[0, 0, 0], [0, 0, 1], [0, 0, 0]])
}

/// `M₂(Q[x]/(x²))` on `e_ij, xe_ij` with the given derivation.
fn m2_dual(derivation: Option<Vec<Vec<Rational>>>) -> OrdinaryAlgebra {
    let m = matrices(2);
    let d = dual_numbers();
    let mut nm = m.names.clone();
    nm.extend(m.names.iter().map(|s| format!("x{s}")));
    let mut t = Vec::new();
    for (p, q) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    for r in 0..2 {
                        let c = m.constant(i, j, k) * d.constant(p, q, r);
                        if c != rat(0) {
                            t.push((p * 4 + i, q * 4 + j, r * 4 + k, c));
                        }
                    }
                }
            }
        }
    }
    OrdinaryAlgebra::new(Kind::Associative, nm, t, derivation).unwrap()
}

/// `d/dx` on `M₂(Q[x]/(x²))`; again not a derivation of the quotient.
pub fn m2_dual_d_dx() -> OrdinaryAlgebra {
    let mut d = vec![vec![rat(0); 8]; 8];
    for i in 0..4 {
        d[4 + i][i] = rat(1);
    }
    m2_dual(Some(d))
}

/// `ad(e12)` on `M₂(Q[x]/(x²))`, a nilpotent inner derivation.
pub fn m2_dual_ad_e12() -> OrdinaryAlgebra {
    let a = m2_dual(None);
    let e12 = a.basis(1);
    let d = (0..8)
        .map(|i| {
            let b = a.basis(i);
            a.mul(&e12, &b)
                .iter()
                .zip(a.mul(&b, &e12))
                .map(|(x, y)| x - y)
                .collect()
        })
        .collect();
    m2_dual(Some(d))
}

/// The rank-2 Lie algebra `{x, y | [x∘_λ y] = λy}`.
pub fn solv_xy() -> ConfAlgebra {
    ConfAlgebra::new(
        Kind::Lie,
        names(&["x", "y"]),
        vec![
            (
                "x".into(),
                "y".into(),
                "y".into(),
                crate::exactmath::parse_poly("l").unwrap(),
            ),
            (
                "y".into(),
                "x".into(),
                "y".into(),
                crate::exactmath::parse_poly("D + l").unwrap(),
            ),
        ],
    )
    .unwrap()
}

/// The `H`-subalgebra of `Cend₁ ⊕ Hv` spanned by `one = 1` and `v`:
/// `one∘_λ one = one`, `one∘_λ v = v`, `v∘_λ − = 0`.
pub fn ex3_2() -> ConfAlgebra {
    current_algebra(&ordinary(
        Kind::Associative,
        &["one", "v"],
        &[(0, 0, 0, 1), (0, 1, 1, 1)],
    ))
    .unwrap()
}

/// Names accepted by [`table_algebra`].
pub const TABLE_NAMES: &[&str] = &[
    "curr_q",
    "curr_dual",
    "curr_m2",
    "curr_sl2",
    "curr_gl2",
    "curr_solv2",
    "abelian",
    "virasoro",
    "solv_xy",
    "ex3_2",
    "diff_x3",
    "diff_m2",
];

pub fn table_algebra(name: &str) -> Option<ConfAlgebra> {
    Some(match name {
        "curr_q" => current_algebra(&rationals()).unwrap(),
        "curr_dual" => current_algebra(&dual_numbers()).unwrap(),
        "curr_m2" => current_algebra(&matrices(2)).unwrap(),
        "curr_sl2" => current_algebra(&sl2()).unwrap(),
        "curr_gl2" => current_algebra(&gl2()).unwrap(),
        "curr_solv2" => current_algebra(&solv2()).unwrap(),
        "abelian" => current_algebra(&abelian2()).unwrap(),
        "virasoro" => virasoro(),
        "solv_xy" => solv_xy(),
        "ex3_2" => ex3_2(),
        "diff_x3" => differential_algebra(&x3_x2_d_dx()).unwrap(),
        "diff_m2" => differential_algebra(&m2_dual_ad_e12()).unwrap(),
        _ => return None,
    })
}

/// `weyl` is `Cend₁`; `cendN` is `Cend_N`.
pub fn cend_size(name: &str) -> Option<usize> {
    match name {
        "weyl" => Some(1),
        _ => name.strip_prefix("cend")?.parse().ok().filter(|&n| n > 0),
    }
}
