use std::time::Instant;

use serde_json::{json, Map, Value};

use confalg::builtins::{Cend, MatrixConfElem};
use confalg::confcore::{
    check_associativity, check_identities, check_lie, derived_series, find_unit, growth_profile,
    ConfAlgebra, ConfElement, Kind, Side, UnitSearch,
};
use confalg::constructions::{
    adjoin_unit_rep, central_pbw_rep, check_central_pbw, check_double_conditions, double_rep,
    solvable_bounds, solvable_faithful_rep, LocalityBound, Pairing,
};
use confalg::repr::{
    check_rep, regular_rep, rep_kernel, trivial_rep, ConfRep, HModulePresentation,
};
use confalg::{CheckReport, Exec};

use crate::cert::{digest, Certificate};
use crate::defs::{rep_file, DefinitionFile, Object};
use crate::{eval, BuildArgs, CheckArgs, Cli, CliError, Command, Method};

struct Ctx {
    defs: DefinitionFile,
    bytes: Option<Vec<u8>>,
    exec: Exec,
}

fn load(cli: &Cli) -> Result<Ctx, CliError> {
    let (defs, bytes) = match &cli.file {
        None => (
            DefinitionFile {
                version: crate::defs::VERSION,
                ..Default::default()
            },
            None,
        ),
        Some(p) => {
            let bytes =
                std::fs::read(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?;
            let text = String::from_utf8(bytes.clone())
                .map_err(|_| CliError::Input(format!("{}: not UTF-8", p.display())))?;
            (DefinitionFile::parse(&text)?, Some(bytes))
        }
    };
    Ok(Ctx {
        defs,
        bytes,
        exec: Exec::default(),
    })
}

/// Returns whether everything that was checked passed.
pub fn run(cli: &Cli) -> Result<bool, CliError> {
    let ctx = load(cli)?;
    match &cli.command {
        Command::Check(a) => emit(cli, check(&ctx, cli, a)?),
        Command::BuildRep(a) => emit(cli, build(&ctx, a)?),
        Command::Eval { object, expression } => {
            let out = eval::eval(&ctx.defs, object, expression)?;
            println!("{out}");
            Ok(true)
        }
        Command::Growth {
            object,
            generators,
            n,
        } => emit(cli, growth(&ctx, object, generators, *n)?),
    }
}

fn emit(cli: &Cli, c: Certificate) -> Result<bool, CliError> {
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&c).expect("certificate serializes")
        );
    } else {
        print!("{}", c.render_text());
    }
    Ok(c.passed)
}

fn certificate(
    ctx: &Ctx,
    command: &str,
    object: &str,
    parameters: Map<String, Value>,
) -> Certificate {
    Certificate {
        command: command.into(),
        object: object.into(),
        inputs_digest: digest(ctx.bytes.as_deref(), command, object, &parameters),
        parameters,
        results: Vec::new(),
        outputs: Map::new(),
        passed: true,
        timing_ms: 0,
    }
}

fn require_algebra(obj: Object, what: &str) -> Result<ConfAlgebra, CliError> {
    match obj {
        Object::Algebra(c) => Ok(c),
        _ => Err(CliError::Input(format!("{what} needs an algebra"))),
    }
}

fn parse_bound(c: &ConfAlgebra, s: &str) -> Result<LocalityBound, CliError> {
    match s.trim().parse::<u32>() {
        Ok(k) => Ok(LocalityBound::uniform(c.dim(), k)),
        Err(_) => Ok(LocalityBound::parse(c.basis(), s)?),
    }
}

fn check(ctx: &Ctx, cli: &Cli, a: &CheckArgs) -> Result<Certificate, CliError> {
    let start = Instant::now();
    let obj = ctx.defs.resolve(&a.object)?;
    let mut params = Map::new();
    let mode = if a.units {
        "units"
    } else if a.solvable {
        params.insert("K".into(), json!(a.k));
        "solvable"
    } else if let Some(n) = &a.central_pbw {
        params.insert("N".into(), json!(n));
        "central-pbw"
    } else {
        "axioms"
    };
    params.insert("mode".into(), json!(mode));
    if let Some(b) = cli.degree_bound {
        params.insert("degree_bound".into(), json!(b));
    }
    let mut cert = certificate(ctx, "check", &a.object, params);
    match mode {
        "axioms" => match obj {
            Object::Algebra(c) => match c.kind() {
                Kind::Lie => cert.push(&check_lie(&c, ctx.exec)),
                Kind::Associative => {
                    cert.push(&check_associativity(&c, ctx.exec));
                    cert.push(&check_identities(&c, ctx.exec));
                }
            },
            Object::Rep(r) => cert.push(&check_rep(&r, ctx.exec)),
            Object::Pairing(p) => cert.push(&check_double_conditions(
                &p.algebra, &p.v, &p.m, &p.pairing, ctx.exec,
            )?),
            Object::Cend(_) => {
                return Err(CliError::Input(
                    "Cend is associative by construction; nothing to check".into(),
                ))
            }
        },
        "units" => {
            let c = require_algebra(obj, "--units")?;
            let mut both = true;
            for (side, key) in [(Side::Left, "left_unit"), (Side::Right, "right_unit")] {
                match find_unit(&c, side, cli.degree_bound)? {
                    UnitSearch::Found(e) => cert.output(key, c.display(&e)),
                    UnitSearch::NoneWithinBound { bound } => {
                        both = false;
                        cert.output(key, format!("none with D-degree at most {bound}"));
                    }
                }
            }
            let mut r = CheckReport::new("two-sided unit");
            r.record((!both).then(|| confalg::Witness {
                location: "unit search".into(),
                residual: "no two-sided unit found".into(),
            }));
            cert.push(&r);
        }
        "solvable" => {
            let c = require_algebra(obj, "--solvable")?;
            let s = derived_series(&c)?;
            cert.output(
                "derived_series_ranks",
                s.terms.iter().map(|t| json!(t.rank())).collect::<Vec<_>>(),
            );
            let mut r = CheckReport::new("derived series");
            r.record((!s.is_solvable).then(|| confalg::Witness {
                location: "derived series".into(),
                residual: format!(
                    "stabilizes at rank {}",
                    s.terms.last().map_or(0, |t| t.rank())
                ),
            }));
            cert.push(&r);
            if s.is_solvable {
                match solvable_bounds(&c, a.k) {
                    Ok(b) => cert.output("locality_bound", b.display(c.basis())),
                    Err(e) => cert.output("locality_bound", e.to_string()),
                }
            }
        }
        _ => {
            let c = require_algebra(obj, "--central-pbw")?;
            let b = parse_bound(&c, a.central_pbw.as_deref().unwrap())?;
            cert.output("locality_bound", b.display(c.basis()));
            cert.push(&check_central_pbw(&c, &b, None, ctx.exec)?);
        }
    }
    cert.passed = cert.all_passed();
    cert.timing_ms = start.elapsed().as_millis() as u64;
    Ok(cert)
}

fn action_lines(r: &ConfRep) -> Vec<Value> {
    let n = r.algebra().dim();
    let names = r.algebra().basis();
    let gens = r.module().names();
    let mut out = Vec::new();
    for b in 0..n {
        for (i, g) in gens.iter().enumerate() {
            let img = r.act(
                &ConfElement::basis(n, b),
                &ConfElement::basis(r.rank(), i).coords,
            );
            if img.iter().any(|p| !p.is_zero()) {
                out.push(json!(format!(
                    "{}∘_λ {g} = {}",
                    names[b],
                    r.display_vec(&img)
                )));
            }
        }
    }
    out
}

fn build(ctx: &Ctx, a: &BuildArgs) -> Result<Certificate, CliError> {
    let start = Instant::now();
    let c = require_algebra(ctx.defs.resolve(&a.object)?, "build-rep")?;
    let mut params = Map::new();
    let method = match a.method {
        Method::AdjoinUnit => "adjoin-unit",
        Method::Double => "double",
        Method::CentralPbw => "central-pbw",
        Method::Solvable => "solvable",
    };
    params.insert("method".into(), json!(method));
    let mut warning = None;
    let rep = match a.method {
        Method::AdjoinUnit => {
            let u = adjoin_unit_rep(&c, a.m_prime, ctx.exec)?;
            params.insert("M".into(), json!(u.degree_bound));
            params.insert("Mprime".into(), json!(u.m_prime));
            warning = u.warning;
            u.rep
        }
        Method::Double => {
            let (v, m, p) = match &a.pairing {
                Some(name) => {
                    params.insert("pairing".into(), json!(name));
                    let p = ctx.defs.pairing(name)?;
                    if p.algebra != c {
                        return Err(CliError::Input(format!(
                            "pairing `{name}` is for another algebra"
                        )));
                    }
                    (p.v, p.m, p.pairing)
                }
                None => {
                    params.insert("pairing".into(), json!("canonical"));
                    let v = trivial_rep(&c, HModulePresentation::free(vec!["u".into()]));
                    (v, regular_rep(&c), Pairing::canonical(&c))
                }
            };
            double_rep(&c, &v, &m, &p, ctx.exec)?
        }
        Method::CentralPbw => {
            let n =
                a.n.as_deref()
                    .ok_or_else(|| CliError::Input("--N is required for central-pbw".into()))?;
            let b = parse_bound(&c, n)?;
            params.insert("N".into(), json!(b.display(c.basis())));
            central_pbw_rep(&c, &b, ctx.exec)?
        }
        Method::Solvable => {
            params.insert("K".into(), json!(a.k));
            let b = solvable_bounds(&c, a.k)?;
            params.insert("N".into(), json!(b.display(c.basis())));
            solvable_faithful_rep(&c, a.k, ctx.exec)?
        }
    };
    let mut cert = certificate(ctx, "build-rep", &a.object, params);
    cert.push(&check_rep(&rep, ctx.exec));
    let kernel = rep_kernel(&rep);
    cert.output("module", rep.module().to_string());
    cert.output("module_rank", rep.rank());
    cert.output("faithful", kernel.is_zero());
    cert.output(
        "kernel",
        kernel
            .generators()
            .iter()
            .map(|g| {
                let e = ConfElement {
                    coords: g
                        .iter()
                        .map(|p| p.to_multi(confalg::exactmath::Var::D))
                        .collect(),
                };
                json!(c.display(&e))
            })
            .collect::<Vec<_>>(),
    );
    cert.output("action", action_lines(&rep));
    if let Some(w) = warning {
        cert.output("warning", w);
    }
    if let Some(path) = &a.out {
        let name = format!("{}_{}", a.object, method.replace('-', "_"));
        let text =
            serde_json::to_string_pretty(&rep_file(&name, &rep)).expect("definition serializes");
        std::fs::write(path, text + "\n")
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        cert.output("representation", name);
    }
    cert.passed = cert.all_passed();
    cert.timing_ms = start.elapsed().as_millis() as u64;
    Ok(cert)
}

fn growth(
    ctx: &Ctx,
    object: &str,
    generators: &[String],
    n: usize,
) -> Result<Certificate, CliError> {
    let start = Instant::now();
    let mut params = Map::new();
    params.insert("generators".into(), json!(generators));
    params.insert("n".into(), json!(n));
    let mut cert = certificate(ctx, "growth", object, params);
    let ranks = match ctx.defs.resolve(object)? {
        Object::Algebra(c) => {
            let gens = generators
                .iter()
                .map(|g| ConfElement::parse(g, c.basis()))
                .collect::<confalg::Result<Vec<_>>>()?;
            growth_profile(&c, &gens, n, ctx.exec)?
        }
        Object::Cend(k) => {
            let gens = generators
                .iter()
                .map(|g| eval::parse_matrix(k, &confalg::exactmath::parse_expr(g)?))
                .collect::<Result<Vec<MatrixConfElem>, CliError>>()?;
            growth_profile(&Cend { n: k }, &gens, n, ctx.exec)?
        }
        _ => return Err(CliError::Input("growth needs an algebra or Cend".into())),
    };
    cert.output("ranks", ranks.iter().map(|r| json!(r)).collect::<Vec<_>>());
    cert.timing_ms = start.elapsed().as_millis() as u64;
    Ok(cert)
}
