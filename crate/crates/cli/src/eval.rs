//! `eval`: `lprod(a, b)`, `nprod(a, b, n)`, `braced(a, b, n)`,
//! `act([R,] a, v)` and `central([L,] x, n, m, b)`.

use confalg::builtins::{cend_act, cend_braced_at, cend_n_product, cend_product, MatrixConfElem};
use confalg::confcore::{ConfAlgebra, ConfElement};
use confalg::constructions::{central_action, CentralElement};
use confalg::exactmath::{parse_expr, rat, Affine, Expr, MultiPoly, Var};
use confalg::repr::ConfRep;

use crate::defs::{DefinitionFile, Object};
use crate::CliError;

fn input(s: impl Into<String>) -> CliError {
    CliError::Input(s.into())
}

fn int_arg(e: &Expr, what: &str) -> Result<u32, CliError> {
    match e {
        Expr::Num(n) if n.is_integer() && *n >= rat(0) => n
            .to_integer()
            .try_into()
            .map_err(|_| input(format!("{what} out of range"))),
        _ => Err(input(format!("{what} must be a non-negative integer"))),
    }
}

fn ident_arg<'a>(e: &'a Expr, what: &str) -> Result<&'a str, CliError> {
    match e {
        Expr::Ident(s) => Ok(s),
        _ => Err(input(format!("{what} must be a name"))),
    }
}

/// A `Cend_n` element: `mat(a11, a12, …)` row by row, or a polynomial
/// meaning that multiple of the identity.
pub fn parse_matrix(n: usize, e: &Expr) -> Result<MatrixConfElem, CliError> {
    match e {
        Expr::Call(f, args) if f == "mat" => {
            if args.len() != n * n {
                return Err(input(format!(
                    "mat(...) needs {} entries for Cend_{n}",
                    n * n
                )));
            }
            let polys = args
                .iter()
                .map(|a| a.to_poly())
                .collect::<confalg::Result<Vec<_>>>()?;
            Ok(MatrixConfElem::from_rows(
                polys.chunks(n).map(|r| r.to_vec()).collect(),
            )?)
        }
        _ => {
            let p = e.to_poly()?;
            Ok(MatrixConfElem::identity(n).mul_poly(&p))
        }
    }
}

fn parse_vector(n: usize, e: &Expr) -> Result<Vec<MultiPoly>, CliError> {
    let v = match e {
        Expr::Call(f, args) if f == "vec" => args
            .iter()
            .map(|a| a.to_poly())
            .collect::<confalg::Result<Vec<_>>>()?,
        _ => vec![e.to_poly()?],
    };
    if v.len() != n {
        return Err(input(format!("vector needs {n} entries")));
    }
    Ok(v)
}

pub fn eval(defs: &DefinitionFile, object: &str, expression: &str) -> Result<String, CliError> {
    let e = parse_expr(expression)?;
    let (f, args) = match &e {
        Expr::Call(f, args) => (f.as_str(), args.as_slice()),
        _ => return Err(input("expected a call such as lprod(a, b)")),
    };
    // act(R, a, v) and central(L, x, n, m, b) name their object explicitly.
    let (obj, args) = match (f, args.len()) {
        ("act", 3) | ("central", 5) => (defs.resolve(ident_arg(&args[0], "object")?)?, &args[1..]),
        _ => (defs.resolve(object)?, args),
    };
    match obj {
        Object::Algebra(c) => eval_algebra(&c, f, args),
        Object::Cend(n) => eval_cend(n, f, args),
        Object::Rep(r) => eval_rep(&r, f, args),
        Object::Pairing(_) => Err(input("nothing to evaluate on a pairing")),
    }
}

fn arity(f: &str, args: &[Expr], n: usize) -> Result<(), CliError> {
    if args.len() == n {
        Ok(())
    } else {
        Err(input(format!(
            "{f} takes {n} arguments here, got {}",
            args.len()
        )))
    }
}

fn eval_algebra(c: &ConfAlgebra, f: &str, args: &[Expr]) -> Result<String, CliError> {
    let el = |e: &Expr| ConfElement::from_expr(e, c.basis());
    let out = match f {
        "lprod" => {
            arity(f, args, 2)?;
            c.lambda_product(&el(&args[0])?, &el(&args[1])?)?
        }
        "nprod" => {
            arity(f, args, 3)?;
            c.n_product(&el(&args[0])?, &el(&args[1])?, int_arg(&args[2], "n")?)?
        }
        "braced" => {
            arity(f, args, 3)?;
            c.braced_product(&el(&args[0])?, &el(&args[1])?, int_arg(&args[2], "n")?)?
        }
        "central" => {
            arity(f, args, 4)?;
            let x = el(&args[0])?;
            let n = int_arg(&args[1], "n")?;
            let m = int_arg(&args[2], "m")?;
            let b = c.index_of(ident_arg(&args[3], "b")?)?;
            let img = central_action(c, &x, n, &CentralElement::term(m, b, rat(1)))?;
            return Ok(img.display(c.basis()));
        }
        _ => return Err(input(format!("unknown function `{f}` for an algebra"))),
    };
    Ok(c.display(&out))
}

fn eval_cend(n: usize, f: &str, args: &[Expr]) -> Result<String, CliError> {
    let m = |e: &Expr| parse_matrix(n, e);
    let out = match f {
        "lprod" => {
            arity(f, args, 2)?;
            cend_product(&m(&args[0])?, &m(&args[1])?)?
        }
        "nprod" => {
            arity(f, args, 3)?;
            cend_n_product(&m(&args[0])?, &m(&args[1])?, int_arg(&args[2], "n")?)?
        }
        "braced" => {
            arity(f, args, 3)?;
            let k = int_arg(&args[2], "n")?;
            cend_braced_at(&m(&args[0])?, &m(&args[1])?, &Affine::var(Var::Lambda))?
                .divided_coefficient(k)
        }
        "act" => {
            arity(f, args, 2)?;
            let v = cend_act(&m(&args[0])?, &parse_vector(n, &args[1])?)?;
            let parts: Vec<String> = v.iter().map(|p| p.to_string()).collect();
            return Ok(if n == 1 {
                parts[0].clone()
            } else {
                format!("({})", parts.join(", "))
            });
        }
        _ => return Err(input(format!("unknown function `{f}` for Cend"))),
    };
    Ok(out.to_string())
}

fn eval_rep(r: &ConfRep, f: &str, args: &[Expr]) -> Result<String, CliError> {
    if f != "act" {
        return Err(input(format!(
            "unknown function `{f}` for a representation"
        )));
    }
    arity(f, args, 2)?;
    let a = ConfElement::from_expr(&args[0], r.algebra().basis())?;
    let v = ConfElement::from_expr(&args[1], r.module().names())?;
    Ok(r.display_vec(&r.act(&a, &r.module().reduce(&v.coords))))
}
