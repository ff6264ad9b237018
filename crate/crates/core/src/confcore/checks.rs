use super::{ConfAlgebra, ConfElement};
use crate::exactmath::{Affine, Var};
use crate::par::Exec;
use crate::report::{CheckReport, Witness};

fn lam() -> Affine {
    Affine::var(Var::Lambda)
}

fn mu() -> Affine {
    Affine::var(Var::Mu)
}

/// Compares two sides; a nonzero difference becomes a witness.
fn compare(
    c: &ConfAlgebra,
    location: String,
    lhs: ConfElement,
    rhs: ConfElement,
) -> Option<Witness> {
    let d = lhs.sub(&rhs);
    if d.is_zero() {
        None
    } else {
        Some(Witness {
            location,
            residual: c.display(&d),
        })
    }
}

fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut v = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for k in 0..n {
                v.push((a, b, k));
            }
        }
    }
    v
}

/// Runs `check` on every basis triple with `exec`, merging in triple order.
pub fn check_with<F>(c: &ConfAlgebra, name: &str, exec: Exec, check: F) -> CheckReport
where
    F: Fn(&ConfAlgebra, usize, usize, usize) -> Vec<Option<Witness>> + Sync + Send,
{
    let results = exec.map(triples(c.dim()), |(a, b, k)| check(c, a, b, k));
    let mut report = CheckReport::new(name);
    for r in results.into_iter().flatten() {
        report.record(r);
    }
    report
}

fn names(c: &ConfAlgebra, ix: &[usize]) -> String {
    let s: Vec<&str> = ix.iter().map(|&i| c.basis()[i].as_str()).collect();
    format!("({})", s.join(", "))
}

/// `a∘_λ(b∘_μ c) = (a∘_λ b)∘_{λ+μ} c` on all basis triples, in `Q[D, λ, μ]`.
pub fn check_associativity(c: &ConfAlgebra, exec: Exec) -> CheckReport {
    check_with(c, "associativity", exec, |c, a, b, k| {
        let n = c.dim();
        let (ea, eb, ek) = (
            ConfElement::basis(n, a),
            ConfElement::basis(n, b),
            ConfElement::basis(n, k),
        );
        let lhs = c.product_at(&ea, &c.product_at(&eb, &ek, &mu()), &lam());
        let rhs = c.product_at(&c.product_at(&ea, &eb, &lam()), &ek, &lam().add(&mu()));
        vec![compare(
            c,
            format!("associativity {}", names(c, &[a, b, k])),
            lhs,
            rhs,
        )]
    })
}

/// Skew-symmetry on pairs and Jacobi on triples.
pub fn check_lie(c: &ConfAlgebra, exec: Exec) -> CheckReport {
    check_with(c, "lie", exec, |c, a, b, k| {
        let n = c.dim();
        let (ea, eb, ek) = (
            ConfElement::basis(n, a),
            ConfElement::basis(n, b),
            ConfElement::basis(n, k),
        );
        let mut out = Vec::new();
        if k == 0 {
            let lhs = c.product_at(&ea, &eb, &lam());
            let rhs = c.braced_at(&eb, &ea, &lam()).neg();
            out.push(compare(
                c,
                format!("skew-symmetry {}", names(c, &[a, b])),
                lhs,
                rhs,
            ));
        }
        let lhs = c
            .product_at(&ea, &c.product_at(&eb, &ek, &mu()), &lam())
            .sub(&c.product_at(&eb, &c.product_at(&ea, &ek, &lam()), &mu()));
        let rhs = c.product_at(&c.product_at(&ea, &eb, &lam()), &ek, &lam().add(&mu()));
        out.push(compare(
            c,
            format!("jacobi {}", names(c, &[a, b, k])),
            lhs,
            rhs,
        ));
        out
    })
}

/// The four mixed braced/plain identities that hold in every associative
/// conformal algebra:
///
/// - `a∘_λ{b∘_μ c} = {(a∘_λ b)∘_μ c}`
/// - `{a∘_λ(b∘_μ c)} = {{a∘_μ b}∘_{λ−μ} c}`
/// - `{a∘_λ{b∘_μ c}} = {{a∘_{λ−μ} b}∘_μ c}`
/// - `{a∘_λ b}∘_μ c = a∘_{μ−λ}(b∘_λ c)`
pub fn check_identities(c: &ConfAlgebra, exec: Exec) -> CheckReport {
    check_with(c, "braced identities", exec, |c, a, b, k| {
        let n = c.dim();
        let (ea, eb, ek) = (
            ConfElement::basis(n, a),
            ConfElement::basis(n, b),
            ConfElement::basis(n, k),
        );
        let lmm = lam().add(&mu().neg());
        let mml = mu().add(&lam().neg());
        let t = names(c, &[a, b, k]);
        vec![
            compare(
                c,
                format!("a.{{b.c}} {t}"),
                c.product_at(&ea, &c.braced_at(&eb, &ek, &mu()), &lam()),
                c.braced_at(&c.product_at(&ea, &eb, &lam()), &ek, &mu()),
            ),
            compare(
                c,
                format!("{{a.(b.c)}} {t}"),
                c.braced_at(&ea, &c.product_at(&eb, &ek, &mu()), &lam()),
                c.braced_at(&c.braced_at(&ea, &eb, &mu()), &ek, &lmm),
            ),
            compare(
                c,
                format!("{{a.{{b.c}}}} {t}"),
                c.braced_at(&ea, &c.braced_at(&eb, &ek, &mu()), &lam()),
                c.braced_at(&c.braced_at(&ea, &eb, &lmm), &ek, &mu()),
            ),
            compare(
                c,
                format!("{{a.b}}.c {t}"),
                c.product_at(&c.braced_at(&ea, &eb, &lam()), &ek, &mu()),
                c.product_at(&ea, &c.product_at(&eb, &ek, &lam()), &mml),
            ),
        ]
    })
}
