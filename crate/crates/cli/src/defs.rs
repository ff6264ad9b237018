//! JSON definition files: algebras, modules, representations and pairings,
//! with polynomials written as strings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use confalg::builtins::{
    cend_size, current_algebra, differential_algebra, table_algebra, OrdinaryAlgebra,
};
use confalg::confcore::{ConfAlgebra, Kind};
use confalg::constructions::Pairing;
use confalg::exactmath::{parse_poly, MultiPoly, Rational, UPoly, Var};
use confalg::repr::{make_rep, make_right_rep, ConfRep, HModulePresentation};

use crate::CliError;

pub const VERSION: u32 = 1;

/// `[a, b, c, g]`: `g(D, l)·c` occurs in `a∘_λ b` (or `a∘_λ b` on a module,
/// or `⟨a∘_λ v⟩` for a pairing).
pub type Entry = [String; 4];

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DefinitionFile {
    pub version: u32,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub algebras: BTreeMap<String, AlgebraDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub modules: BTreeMap<String, ModuleDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub representations: BTreeMap<String, RepDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub pairings: BTreeMap<String, PairingDef>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraDef {
    Builtin {
        builtin: String,
    },
    Table {
        kind: String,
        basis: Vec<String>,
        #[serde(default)]
        table: Vec<Entry>,
    },
    /// The current algebra of an ordinary algebra, or its differential
    /// algebra when a derivation is given.
    Ordinary {
        ordinary: OrdinaryDef,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrdinaryDef {
    pub kind: String,
    pub basis: Vec<String>,
    /// `(i, j, k, c)`: `c·b_k` occurs in `b_i·b_j`; `c` is a rational literal.
    #[serde(default)]
    pub constants: Vec<(usize, usize, usize, String)>,
    /// Row `i` holds the coordinates of `∂b_i`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derivation: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDef {
    pub name: String,
    /// Monic `h(D)` with `h(D)·name = 0`; absent for a free generator.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDef {
    pub generators: Vec<GeneratorDef>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepDef {
    pub algebra: String,
    pub module: String,
    #[serde(default = "left")]
    pub side: String,
    #[serde(default)]
    pub action: Vec<Entry>,
}

fn left() -> String {
    "left".into()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairingDef {
    pub algebra: String,
    /// The representation whose generators are paired.
    pub v: String,
    /// The representation the pairing lands in.
    pub m: String,
    /// `[a, v_i, m_j, g]`: `g(D, l)·m_j` occurs in `⟨a∘_λ v_i⟩`.
    #[serde(default)]
    pub entries: Vec<Entry>,
}

/// A resolved object of a definition file or a builtin name.
pub enum Object {
    Algebra(ConfAlgebra),
    /// `Cend_n`; `weyl` is `n = 1`.
    Cend(usize),
    Rep(ConfRep),
    Pairing(ResolvedPairing),
}

pub struct ResolvedPairing {
    pub algebra: ConfAlgebra,
    pub v: ConfRep,
    pub m: ConfRep,
    pub pairing: Pairing,
}

fn poly(path: &str, s: &str) -> Result<MultiPoly, CliError> {
    parse_poly(s).map_err(|e| CliError::Input(format!("{path}: {e}")))
}

fn rational(path: &str, s: &str) -> Result<Rational, CliError> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| CliError::Input(format!("{path}: `{s}` is not a rational number")))
}

fn parse_kind(path: &str, s: &str) -> Result<Kind, CliError> {
    match s {
        "lie" => Ok(Kind::Lie),
        "associative" => Ok(Kind::Associative),
        k => Err(CliError::Input(format!("{path}: unknown kind `{k}`"))),
    }
}

fn at<T>(path: &str, r: confalg::Result<T>) -> Result<T, CliError> {
    r.map_err(|e| CliError::from_core(e).context(path))
}

impl DefinitionFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let f: DefinitionFile = serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("definition file: {e}")))?;
        if f.version != VERSION {
            return Err(CliError::Input(format!(
                "definition file: unsupported version {} (expected {VERSION})",
                f.version
            )));
        }
        Ok(f)
    }

    pub fn algebra(&self, name: &str) -> Result<ConfAlgebra, CliError> {
        let path = format!("algebras.{name}");
        match self.algebras.get(name) {
            None => table_algebra(name)
                .ok_or_else(|| CliError::Input(format!("unknown algebra `{name}`"))),
            Some(AlgebraDef::Builtin { builtin }) => table_algebra(builtin)
                .ok_or_else(|| CliError::Input(format!("{path}: unknown builtin `{builtin}`"))),
            Some(AlgebraDef::Ordinary { ordinary: o }) => {
                let path = format!("{path}.ordinary");
                let kind = parse_kind(&path, &o.kind)?;
                let mut constants = Vec::new();
                for (n, (i, j, k, c)) in o.constants.iter().enumerate() {
                    constants.push((*i, *j, *k, rational(&format!("{path}.constants[{n}]"), c)?));
                }
                let derivation = match &o.derivation {
                    None => None,
                    Some(rows) => Some(
                        rows.iter()
                            .enumerate()
                            .map(|(i, r)| {
                                r.iter()
                                    .map(|c| rational(&format!("{path}.derivation[{i}]"), c))
                                    .collect::<Result<Vec<_>, _>>()
                            })
                            .collect::<Result<Vec<_>, _>>()?,
                    ),
                };
                let has_derivation = derivation.is_some();
                let a = at(
                    &path,
                    OrdinaryAlgebra::new(kind, o.basis.clone(), constants, derivation),
                )?;
                if has_derivation {
                    at(&path, differential_algebra(&a))
                } else {
                    at(&path, current_algebra(&a))
                }
            }
            Some(AlgebraDef::Table { kind, basis, table }) => {
                let kind = parse_kind(&format!("{path}.kind"), kind)?;
                let mut entries = Vec::new();
                for (i, [a, b, c, g]) in table.iter().enumerate() {
                    let g = poly(&format!("{path}.table[{i}]"), g)?;
                    entries.push((a.clone(), b.clone(), c.clone(), g));
                }
                at(&path, ConfAlgebra::new(kind, basis.clone(), entries))
            }
        }
    }

    pub fn module(&self, name: &str) -> Result<HModulePresentation, CliError> {
        let path = format!("modules.{name}");
        let m = self
            .modules
            .get(name)
            .ok_or_else(|| CliError::Input(format!("unknown module `{name}`")))?;
        let mut names = Vec::new();
        let mut rels = Vec::new();
        for (i, g) in m.generators.iter().enumerate() {
            names.push(g.name.clone());
            rels.push(match &g.relation {
                None => UPoly::zero(),
                Some(s) => {
                    let gp = format!("{path}.generators[{i}].relation");
                    at(&gp, UPoly::from_multi(&poly(&gp, s)?, Var::D))?
                }
            });
        }
        at(&path, HModulePresentation::new(names, rels))
    }

    pub fn rep(&self, name: &str) -> Result<ConfRep, CliError> {
        let path = format!("representations.{name}");
        let r = self
            .representations
            .get(name)
            .ok_or_else(|| CliError::Input(format!("unknown representation `{name}`")))?;
        let c = self.algebra(&r.algebra)?;
        let m = self.module(&r.module)?;
        let mut action = Vec::new();
        for (i, [a, u, w, g]) in r.action.iter().enumerate() {
            action.push((
                a.clone(),
                u.clone(),
                w.clone(),
                poly(&format!("{path}.action[{i}]"), g)?,
            ));
        }
        match r.side.as_str() {
            "left" => at(&path, make_rep(&c, m, action)),
            "right" => at(&path, make_right_rep(&c, m, action)),
            s => Err(CliError::Input(format!(
                "{path}.side: expected `left` or `right`, got `{s}`"
            ))),
        }
    }

    pub fn pairing(&self, name: &str) -> Result<ResolvedPairing, CliError> {
        let path = format!("pairings.{name}");
        let p = self
            .pairings
            .get(name)
            .ok_or_else(|| CliError::Input(format!("unknown pairing `{name}`")))?;
        let algebra = self.algebra(&p.algebra)?;
        let v = self.rep(&p.v)?;
        let m = self.rep(&p.m)?;
        let n = algebra.dim();
        let mut dense = vec![vec![vec![MultiPoly::zero(); m.rank()]; v.rank()]; n];
        for (i, [a, vi, mj, g]) in p.entries.iter().enumerate() {
            let ep = format!("{path}.entries[{i}]");
            let a = at(&ep, algebra.index_of(a))?;
            let vi = at(&ep, v.module().index_of(vi))?;
            let mj = at(&ep, m.module().index_of(mj))?;
            dense[a][vi][mj] += &poly(&ep, g)?;
        }
        let pairing = at(&path, Pairing::from_lambda(dense, m.rank()))?;
        Ok(ResolvedPairing {
            algebra,
            v,
            m,
            pairing,
        })
    }

    /// Looks `name` up among the file's objects, then among the builtins.
    pub fn resolve(&self, name: &str) -> Result<Object, CliError> {
        if self.representations.contains_key(name) {
            return Ok(Object::Rep(self.rep(name)?));
        }
        if self.pairings.contains_key(name) {
            return Ok(Object::Pairing(self.pairing(name)?));
        }
        if self.algebras.contains_key(name) || table_algebra(name).is_some() {
            return Ok(Object::Algebra(self.algebra(name)?));
        }
        if let Some(n) = cend_size(name) {
            return Ok(Object::Cend(n));
        }
        Err(CliError::Input(format!("unknown object `{name}`")))
    }
}

pub fn algebra_def(c: &ConfAlgebra) -> AlgebraDef {
    let b = c.basis();
    AlgebraDef::Table {
        kind: c.kind().name().into(),
        basis: b.to_vec(),
        table: c
            .entries()
            .into_iter()
            .map(|(x, y, z, g)| [b[x].clone(), b[y].clone(), b[z].clone(), g.to_string()])
            .collect(),
    }
}

pub fn module_def(m: &HModulePresentation) -> ModuleDef {
    ModuleDef {
        generators: (0..m.rank())
            .map(|i| GeneratorDef {
                name: m.names()[i].clone(),
                relation: (!m.relation(i).is_zero()).then(|| m.relation(i).display_in(Var::D)),
            })
            .collect(),
    }
}

/// A self-contained definition file holding `r` under `name`.
///
/// A right representation is stored through the opposite algebra, so it is
/// written as a left representation of `C^op`.
pub fn rep_file(name: &str, r: &ConfRep) -> DefinitionFile {
    let c = r.algebra();
    let g = r.module().names();
    let alg = format!("{name}_algebra");
    let module = format!("{name}_module");
    let mut f = DefinitionFile {
        version: VERSION,
        ..Default::default()
    };
    f.algebras.insert(alg.clone(), algebra_def(c));
    f.modules.insert(module.clone(), module_def(r.module()));
    f.representations.insert(
        name.into(),
        RepDef {
            algebra: alg,
            module,
            side: "left".into(),
            action: r
                .entries()
                .into_iter()
                .map(|(b, i, j, p)| {
                    [
                        c.basis()[b].clone(),
                        g[i].clone(),
                        g[j].clone(),
                        p.to_string(),
                    ]
                })
                .collect(),
        },
    );
    f
}
