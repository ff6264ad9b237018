use crate::error::{Error, Result};
use crate::exactmath::{parse_expr, Expr, MultiPoly, Rational, Var};

/// `Σ f_b · b` over a fixed basis. Coordinates are polynomials in `D` for
/// algebra elements and in `D, λ` (or more) for λ-products.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConfElement {
    pub coords: Vec<MultiPoly>,
}

/// Value of a λ-product: a polynomial in λ with algebra coefficients.
pub type LambdaElem = ConfElement;

impl ConfElement {
    pub fn zero(dim: usize) -> Self {
        ConfElement {
            coords: vec![MultiPoly::zero(); dim],
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        Self::term(dim, i, MultiPoly::one())
    }

    pub fn term(dim: usize, i: usize, p: MultiPoly) -> Self {
        let mut e = Self::zero(dim);
        e.coords[i] = p;
        e
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, other: &ConfElement) -> ConfElement {
        ConfElement {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &ConfElement) -> ConfElement {
        ConfElement {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> ConfElement {
        ConfElement {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    /// Multiplies every coordinate by `p`.
    pub fn mul_poly(&self, p: &MultiPoly) -> ConfElement {
        ConfElement {
            coords: self.coords.iter().map(|a| a * p).collect(),
        }
    }

    pub fn scale(&self, k: &Rational) -> ConfElement {
        ConfElement {
            coords: self.coords.iter().map(|a| a.scale(k)).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> ConfElement {
        ConfElement {
            coords: self.coords.iter().map(f).collect(),
        }
    }

    /// Largest degree in `v` over all coordinates; `None` for zero.
    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.coords.iter().filter_map(|p| p.degree_in(v)).max()
    }

    /// `n!·[vⁿ]` coordinate-wise.
    pub fn divided_coefficient(&self, v: Var, n: u32) -> ConfElement {
        let k = crate::exactmath::factorial(n);
        self.map(|p| p.coefficient_of(v, n).scale(&k))
    }

    /// Canonical text such as `(D + 2*l)*x + y`.
    pub fn display(&self, names: &[String]) -> String {
        fmt_combination(&self.coords, names)
    }

    /// Parses a combination such as `D*x + 2*y`; basis symbols shadow
    /// variable names.
    pub fn parse(s: &str, names: &[String]) -> Result<ConfElement> {
        Self::from_expr(&parse_expr(s)?, names)
    }

    pub fn from_expr(e: &Expr, names: &[String]) -> Result<ConfElement> {
        match eval(e, names)? {
            Val::Vector(v) => Ok(ConfElement { coords: v }),
            Val::Scalar(p) if p.is_zero() => Ok(ConfElement::zero(names.len())),
            Val::Scalar(p) => Err(Error::Format(format!("`{p}` is a scalar, not an element"))),
        }
    }
}

enum Val {
    Scalar(MultiPoly),
    Vector(Vec<MultiPoly>),
}

fn eval(e: &Expr, names: &[String]) -> Result<Val> {
    let n = names.len();
    let lift = |v: Val| match v {
        Val::Vector(v) => Ok(v),
        Val::Scalar(p) if p.is_zero() => Ok(vec![MultiPoly::zero(); n]),
        Val::Scalar(p) => Err(Error::Format(format!(
            "cannot add scalar `{p}` to an element"
        ))),
    };
    Ok(match e {
        Expr::Num(c) => Val::Scalar(MultiPoly::constant(c.clone())),
        Expr::Ident(id) => match names.iter().position(|b| b == id) {
            Some(i) => Val::Vector(ConfElement::basis(n, i).coords),
            None => {
                Val::Scalar(MultiPoly::var(Var::from_name(id).map_err(|_| {
                    Error::Basis(format!("unknown basis symbol `{id}`"))
                })?))
            }
        },
        Expr::Neg(a) => match eval(a, names)? {
            Val::Scalar(p) => Val::Scalar(-p),
            Val::Vector(v) => Val::Vector(v.iter().map(|p| -p).collect()),
        },
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let sign = matches!(e, Expr::Sub(..));
            match (eval(a, names)?, eval(b, names)?) {
                (Val::Scalar(p), Val::Scalar(q)) => Val::Scalar(if sign { p - q } else { p + q }),
                (x, y) => {
                    let (x, y) = (lift(x)?, lift(y)?);
                    Val::Vector(
                        x.iter()
                            .zip(&y)
                            .map(|(p, q)| if sign { p - q } else { p + q })
                            .collect(),
                    )
                }
            }
        }
        Expr::Mul(a, b) => match (eval(a, names)?, eval(b, names)?) {
            (Val::Scalar(p), Val::Scalar(q)) => Val::Scalar(p * q),
            (Val::Scalar(p), Val::Vector(v)) | (Val::Vector(v), Val::Scalar(p)) => {
                Val::Vector(v.iter().map(|q| q * &p).collect())
            }
            (Val::Vector(_), Val::Vector(_)) => {
                return Err(Error::Format(
                    "product of two elements; use lprod/nprod".into(),
                ))
            }
        },
        Expr::Pow(a, k) => match eval(a, names)? {
            Val::Scalar(p) => Val::Scalar(p.pow(*k)),
            Val::Vector(_) if *k == 1 => eval(a, names)?,
            Val::Vector(_) => return Err(Error::Format("power of an element".into())),
        },
        Expr::Call(f, _) => {
            return Err(Error::Format(format!(
                "unexpected call `{f}` in an element"
            )))
        }
    })
}

/// Shared printer for `Σ coeff·symbol`.
pub(crate) fn fmt_combination(coords: &[MultiPoly], names: &[String]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (p, name) in coords.iter().zip(names) {
        if p.is_zero() {
            continue;
        }
        let s = if p.is_one() {
            name.clone()
        } else if (-p).is_one() {
            format!("-{name}")
        } else if p.len() == 1 {
            format!("{p}*{name}")
        } else {
            format!("({p})*{name}")
        };
        parts.push(s);
    }
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = parts[0].clone();
    for s in &parts[1..] {
        match s.strip_prefix('-') {
            Some(rest) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            None => {
                out.push_str(" + ");
                out.push_str(s);
            }
        }
    }
    out
}
