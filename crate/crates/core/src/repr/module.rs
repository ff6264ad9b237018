use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::{MultiPoly, UPoly, Var};

/// `M = ⊕ H/(hᵢ)·eᵢ`; `hᵢ = 0` marks a free summand.
///
/// Relations are stored monic, so coset representatives of `eᵢ`-coordinates
/// have `D`-degree below `deg hᵢ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HModulePresentation {
    names: Vec<String>,
    relations: Vec<UPoly>,
}

impl HModulePresentation {
    pub fn new(names: Vec<String>, relations: Vec<UPoly>) -> Result<Self> {
        if names.len() != relations.len() {
            return Err(Error::Dimension(format!(
                "{} generators but {} relations",
                names.len(),
                relations.len()
            )));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::Basis(format!("duplicate generator `{n}`")));
            }
        }
        Ok(HModulePresentation {
            names,
            relations: relations.iter().map(UPoly::monic).collect(),
        })
    }

    pub fn free(names: Vec<String>) -> Self {
        let n = names.len();
        Self::new(names, vec![UPoly::zero(); n]).expect("distinct names")
    }

    /// Parses relations written in `D`; an empty string or `0` is free.
    pub fn parse(spec: &[(&str, &str)]) -> Result<Self> {
        let mut names = Vec::new();
        let mut rels = Vec::new();
        for (n, h) in spec {
            names.push(n.to_string());
            let h = if h.trim().is_empty() {
                UPoly::zero()
            } else {
                UPoly::from_multi(&crate::exactmath::parse_poly(h)?, Var::D)?
            };
            rels.push(h);
        }
        Self::new(names, rels)
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relations(&self) -> &[UPoly] {
        &self.relations
    }

    pub fn relation(&self, i: usize) -> &UPoly {
        &self.relations[i]
    }

    pub fn is_free(&self) -> bool {
        self.relations.iter().all(UPoly::is_zero)
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Basis(format!("unknown module generator `{name}`")))
    }

    /// Canonical representative of one coordinate on summand `i`; other
    /// variables ride along as coefficients.
    pub fn reduce_coord(&self, i: usize, p: &MultiPoly) -> MultiPoly {
        reduce_mod(p, &self.relations[i])
    }

    pub fn reduce(&self, v: &[MultiPoly]) -> Vec<MultiPoly> {
        v.iter()
            .enumerate()
            .map(|(i, p)| self.reduce_coord(i, p))
            .collect()
    }

    /// Concatenation; clashing names on the right get a `'` appended.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut names = self.names.clone();
        for n in &other.names {
            let mut n = n.clone();
            while names.contains(&n) {
                n.push('\'');
            }
            names.push(n);
        }
        let mut relations = self.relations.clone();
        relations.extend(other.relations.iter().cloned());
        HModulePresentation { names, relations }
    }
}

/// `p mod h(D)` with the other variables treated as coefficients.
fn reduce_mod(p: &MultiPoly, h: &UPoly) -> MultiPoly {
    let Some(d) = h.degree() else {
        return p.clone();
    };
    let mut c = p.coefficients_in(Var::D);
    if c.len() <= d {
        return p.clone();
    }
    let h = h.monic();
    for k in (d..c.len()).rev() {
        if c[k].is_zero() {
            continue;
        }
        let top = c[k].clone();
        for (i, hi) in h.coeffs().iter().enumerate() {
            c[k - d + i] -= &top.scale(hi);
        }
    }
    c.truncate(d);
    MultiPoly::from_coefficients(Var::D, &c)
}

impl fmt::Display for HModulePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .names
            .iter()
            .zip(&self.relations)
            .map(|(n, h)| {
                if h.is_zero() {
                    format!("H·{n}")
                } else {
                    format!("H/({})·{n}", h.display_in(Var::D))
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::parse_poly;

    #[test]
    fn reduction_keeps_parameters() {
        let h = UPoly::from_ints(&[1, 0, 1]); // D² + 1
        let p = parse_poly("D^3 + l*D^2 + m").unwrap();
        assert_eq!(reduce_mod(&p, &h), parse_poly("-D - l + m").unwrap());
        let h = UPoly::from_ints(&[0, 2]); // 2D, stored as D
        assert_eq!(
            reduce_mod(&parse_poly("D + l").unwrap(), &h),
            parse_poly("l").unwrap()
        );
        assert_eq!(reduce_mod(&p, &UPoly::zero()), p);
    }

    #[test]
    fn sums_rename() {
        let m = HModulePresentation::parse(&[("u", ""), ("v", "D")]).unwrap();
        let s = m.direct_sum(&m);
        assert_eq!(s.names(), &["u", "v", "u'", "v'"]);
        assert_eq!(s.to_string(), "H·u ⊕ H/(D)·v ⊕ H·u' ⊕ H/(D)·v'");
    }
}
