use num_traits::Zero;

use crate::confcore::{ConfAlgebra, Kind};
use crate::error::{Error, Result};
use crate::exactmath::{factorial, MultiPoly, Rational, Var};
use crate::report::{CheckReport, Witness};

/// A finite-dimensional algebra by structure constants `e_i e_j = Σ c_ij^k e_k`,
/// with an optional derivation matrix whose row `i` is `∂(e_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinaryAlgebra {
    pub kind: Kind,
    pub names: Vec<String>,
    c: Vec<Vec<Vec<Rational>>>,
    pub derivation: Option<Vec<Vec<Rational>>>,
}

type Vector = Vec<Rational>;

fn zero_vec(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

fn fmt_vec(names: &[String], v: &[Rational]) -> String {
    let coords: Vec<MultiPoly> = v.iter().map(|c| MultiPoly::constant(c.clone())).collect();
    crate::confcore::ConfElement { coords }.display(names)
}

impl OrdinaryAlgebra {
    pub fn new(
        kind: Kind,
        names: Vec<String>,
        triples: Vec<(usize, usize, usize, Rational)>,
        derivation: Option<Vec<Vec<Rational>>>,
    ) -> Result<Self> {
        let n = names.len();
        let mut c = vec![vec![zero_vec(n); n]; n];
        for (i, j, k, a) in triples {
            if i >= n || j >= n || k >= n {
                return Err(Error::Basis(format!(
                    "structure constant ({i}, {j}, {k}) outside dimension {n}"
                )));
            }
            c[i][j][k] += a;
        }
        if let Some(d) = &derivation {
            if d.len() != n || d.iter().any(|r| r.len() != n) {
                return Err(Error::Dimension(format!("derivation must be {n}x{n}")));
            }
        }
        Ok(OrdinaryAlgebra {
            kind,
            names,
            c,
            derivation,
        })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[i][j][k]
    }

    pub fn basis(&self, i: usize) -> Vector {
        let mut v = zero_vec(self.dim());
        v[i] = Rational::from_integer(1.into());
        v
    }

    pub fn mul(&self, a: &[Rational], b: &[Rational]) -> Vector {
        let n = self.dim();
        let mut out = zero_vec(n);
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[j].is_zero() {
                    continue;
                }
                let ab = &a[i] * &b[j];
                for k in 0..n {
                    if !self.c[i][j][k].is_zero() {
                        out[k] += &ab * &self.c[i][j][k];
                    }
                }
            }
        }
        out
    }

    /// `∂(a)`; zero when no derivation is attached.
    pub fn derive(&self, a: &[Rational]) -> Vector {
        let n = self.dim();
        let mut out = zero_vec(n);
        if let Some(d) = &self.derivation {
            for i in 0..n {
                if a[i].is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[j] += &a[i] * &d[i][j];
                }
            }
        }
        out
    }

    fn add(a: &[Rational], b: &[Rational]) -> Vector {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn sub(a: &[Rational], b: &[Rational]) -> Vector {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    /// The ordinary identity matching `kind`, on basis tuples.
    pub fn check(&self) -> CheckReport {
        let n = self.dim();
        let mut r = CheckReport::new(format!("ordinary {}", self.kind.name()));
        let nm = |ix: &[usize]| {
            let s: Vec<&str> = ix.iter().map(|&i| self.names[i].as_str()).collect();
            format!("({})", s.join(", "))
        };
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (self.basis(i), self.basis(j));
                if self.kind == Kind::Lie {
                    let d = Self::add(&self.mul(&a, &b), &self.mul(&b, &a));
                    r.record(self.witness(format!("antisymmetry {}", nm(&[i, j])), &d));
                }
                for k in 0..n {
                    let c = self.basis(k);
                    let d = match self.kind {
                        Kind::Associative => Self::sub(
                            &self.mul(&self.mul(&a, &b), &c),
                            &self.mul(&a, &self.mul(&b, &c)),
                        ),
                        Kind::Lie => Self::add(
                            &Self::add(
                                &self.mul(&a, &self.mul(&b, &c)),
                                &self.mul(&b, &self.mul(&c, &a)),
                            ),
                            &self.mul(&c, &self.mul(&a, &b)),
                        ),
                    };
                    let what = match self.kind {
                        Kind::Associative => "associativity",
                        Kind::Lie => "jacobi",
                    };
                    r.record(self.witness(format!("{what} {}", nm(&[i, j, k])), &d));
                }
            }
        }
        r
    }

    /// `∂(ab) = ∂(a)b + a∂(b)` on basis pairs.
    pub fn check_derivation(&self) -> CheckReport {
        let n = self.dim();
        let mut r = CheckReport::new("derivation");
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (self.basis(i), self.basis(j));
                let lhs = self.derive(&self.mul(&a, &b));
                let rhs = Self::add(
                    &self.mul(&self.derive(&a), &b),
                    &self.mul(&a, &self.derive(&b)),
                );
                r.record(self.witness(
                    format!("leibniz ({}, {})", self.names[i], self.names[j]),
                    &Self::sub(&lhs, &rhs),
                ));
            }
        }
        r
    }

    fn witness(&self, location: String, d: &[Rational]) -> Option<Witness> {
        if d.iter().all(|x| x.is_zero()) {
            None
        } else {
            Some(Witness {
                location,
                residual: fmt_vec(&self.names, d),
            })
        }
    }

    /// `[a, b] = ab − ba` of an associative algebra.
    pub fn commutator(&self) -> OrdinaryAlgebra {
        let n = self.dim();
        let mut triples = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = &self.c[i][j][k] - &self.c[j][i][k];
                    if !v.is_zero() {
                        triples.push((i, j, k, v));
                    }
                }
            }
        }
        OrdinaryAlgebra::new(Kind::Lie, self.names.clone(), triples, None).unwrap()
    }

    /// Least `k ≤ dim` with `∂ᵏ = 0`, or `None`.
    pub fn nilpotency_index(&self) -> Option<usize> {
        let n = self.dim();
        let mut imgs: Vec<Vector> = (0..n).map(|i| self.basis(i)).collect();
        for k in 0..=n {
            if imgs.iter().all(|v| v.iter().all(|x| x.is_zero())) {
                return Some(k);
            }
            imgs = imgs.iter().map(|v| self.derive(v)).collect();
        }
        None
    }
}

fn require(a: &OrdinaryAlgebra) -> Result<()> {
    let r = a.check();
    if !r.passed() {
        return Err(Error::Precondition(format!(
            "the ordinary algebra fails its identity: {r}"
        )));
    }
    Ok(())
}

/// `Curr A = H ⊗ A` with `(f⊗a)∘_λ(g⊗b) = f(−λ)g(D+λ) ⊗ ab`.
pub fn current_algebra(a: &OrdinaryAlgebra) -> Result<ConfAlgebra> {
    require(a)?;
    let n = a.dim();
    let dense = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n)
                        .map(|k| MultiPoly::constant(a.c[i][j][k].clone()))
                        .collect()
                })
                .collect()
        })
        .collect();
    Ok(ConfAlgebra::from_dense(a.kind, a.names.clone(), dense))
}

/// `H ⊗ A` with `a∘_λ b = a·e^{λ∂}(b)` for an associative `A` with a locally
/// nilpotent derivation `∂`.
pub fn differential_algebra(a: &OrdinaryAlgebra) -> Result<ConfAlgebra> {
    if a.kind != Kind::Associative {
        return Err(Error::Precondition(
            "a differential conformal algebra needs an associative base".into(),
        ));
    }
    require(a)?;
    let d = a.check_derivation();
    if !d.passed() {
        return Err(Error::Precondition(format!("∂ is not a derivation: {d}")));
    }
    let n = a.dim();
    let Some(index) = a.nilpotency_index() else {
        return Err(Error::Precondition(format!(
            "∂ is not nilpotent: ∂^{n} ≠ 0"
        )));
    };
    let mut dense = vec![vec![vec![MultiPoly::zero(); n]; n]; n];
    for j in 0..n {
        let mut db = a.basis(j);
        for k in 0..index {
            let w = MultiPoly::var_pow(Var::Lambda, k as u32)
                .scale(&(Rational::from_integer(1.into()) / factorial(k as u32)));
            for (i, row) in dense.iter_mut().enumerate() {
                let p = a.mul(&a.basis(i), &db);
                for (t, c) in p.iter().enumerate() {
                    if !c.is_zero() {
                        row[j][t] += &w.scale(c);
                    }
                }
            }
            db = a.derive(&db);
        }
    }
    Ok(ConfAlgebra::from_dense(
        Kind::Associative,
        a.names.clone(),
        dense,
    ))
}

/// `[x∘_λ x] = (D + 2λ)x`.
pub fn virasoro() -> ConfAlgebra {
    let g = MultiPoly::var(Var::D)
        + MultiPoly::var(Var::Lambda).scale(&Rational::from_integer(2.into()));
    ConfAlgebra::from_dense(Kind::Lie, vec!["x".into()], vec![vec![vec![g]]])
}
