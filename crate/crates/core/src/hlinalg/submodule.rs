use std::fmt;

use super::{hermite_normal_form, smith_normal_form, syzygy_kernel, PolyMatrix};
use crate::error::{Error, Result};
use crate::exactmath::{UPoly, Var};

/// Submodule of `Q[v]^n` held as its canonical Hermite basis (nonzero rows).
#[derive(Clone, PartialEq, Eq)]
pub struct SubmoduleBasis {
    var: Var,
    ambient: usize,
    gens: Vec<Vec<UPoly>>,
    pivots: Vec<usize>,
}

impl SubmoduleBasis {
    pub fn new(var: Var, ambient: usize, gens: Vec<Vec<UPoly>>) -> Result<Self> {
        let m = PolyMatrix::from_rows(var, ambient, gens)?;
        let (h, _) = hermite_normal_form(&m);
        let gens: Vec<Vec<UPoly>> = h
            .into_rows()
            .into_iter()
            .filter(|r| r.iter().any(|p| !p.is_zero()))
            .collect();
        let pivots = gens
            .iter()
            .map(|r| r.iter().position(|p| !p.is_zero()).unwrap())
            .collect();
        Ok(SubmoduleBasis {
            var,
            ambient,
            gens,
            pivots,
        })
    }

    pub fn zero(var: Var, ambient: usize) -> Self {
        SubmoduleBasis {
            var,
            ambient,
            gens: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(var: Var, ambient: usize) -> Self {
        Self::new(var, ambient, PolyMatrix::identity(var, ambient).into_rows()).unwrap()
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    /// Rank of the submodule (Hermite rows are independent).
    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[Vec<UPoly>] {
        &self.gens
    }

    /// Reduces `v` against the Hermite basis; the remainder is zero iff
    /// `v` is a member.
    pub fn reduce(&self, v: &[UPoly]) -> Result<Vec<UPoly>> {
        if v.len() != self.ambient {
            return Err(Error::Dimension(format!(
                "vector of length {} in a submodule of rank-{} ambient",
                v.len(),
                self.ambient
            )));
        }
        let mut v = v.to_vec();
        for (g, &c) in self.gens.iter().zip(&self.pivots) {
            let q = v[c].divrem(&g[c]).0;
            if q.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(g) {
                *x = &*x - &(&q * y);
            }
        }
        Ok(v)
    }

    pub fn contains(&self, v: &[UPoly]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(|p| p.is_zero()))
    }

    pub fn contains_module(&self, other: &SubmoduleBasis) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &SubmoduleBasis) -> Result<SubmoduleBasis> {
        self.check(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        SubmoduleBasis::new(self.var, self.ambient, gens)
    }

    /// `self ∩ other` via the kernel of the stacked generators.
    pub fn intersect(&self, other: &SubmoduleBasis) -> Result<SubmoduleBasis> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(SubmoduleBasis::zero(self.var, self.ambient));
        }
        let mut rows = self.gens.clone();
        rows.extend(other.gens.iter().cloned());
        let k = syzygy_kernel(&PolyMatrix::from_rows(self.var, self.ambient, rows)?);
        let a = PolyMatrix::from_rows(self.var, self.ambient, self.gens.clone())?;
        let gens = k
            .generators()
            .iter()
            .map(|w| a.left_apply(&w[..self.gens.len()]))
            .collect::<Result<Vec<_>>>()?;
        SubmoduleBasis::new(self.var, self.ambient, gens)
    }

    fn check(&self, other: &SubmoduleBasis) -> Result<()> {
        if self.ambient != other.ambient || self.var != other.var {
            return Err(Error::Dimension(format!(
                "submodules of Q[{}]^{} and Q[{}]^{}",
                self.var, self.ambient, other.var, other.ambient
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for SubmoduleBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SubmoduleBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("span{")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            let parts: Vec<String> = g.iter().map(|p| p.display_in(self.var)).collect();
            write!(f, "({})", parts.join(", "))?;
        }
        f.write_str("}")
    }
}

/// Structure of a finitely presented module `Q[v]^n / rows(R)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionDecomposition {
    pub free_rank: usize,
    /// Monic, nonconstant, each dividing the next.
    pub invariant_factors: Vec<UPoly>,
}

/// Decomposes the cokernel of the relation matrix (one relation per row).
pub fn torsion_decomposition(relations: &PolyMatrix) -> TorsionDecomposition {
    let (s, _, _) = smith_normal_form(relations);
    let diag: Vec<UPoly> = (0..s.nrows().min(s.ncols()))
        .map(|i| s.get(i, i).clone())
        .filter(|p| !p.is_zero())
        .collect();
    TorsionDecomposition {
        free_rank: relations.ncols() - diag.len(),
        invariant_factors: diag.into_iter().filter(|p| !p.is_constant()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(c: &[i64]) -> UPoly {
        UPoly::from_ints(c)
    }

    #[test]
    fn membership() {
        let s = SubmoduleBasis::new(Var::D, 2, vec![vec![d(&[0, 1]), d(&[])]]).unwrap();
        assert!(s.contains(&[d(&[0, 0, 1]), d(&[])]).unwrap());
        assert!(!s.contains(&[d(&[1]), d(&[])]).unwrap());
        let s = SubmoduleBasis::new(Var::D, 2, vec![vec![d(&[1]), d(&[0, 1])]]).unwrap();
        assert!(s.contains(&[d(&[0, 1]), d(&[0, 0, 1])]).unwrap());
        assert!(matches!(s.contains(&[d(&[1])]), Err(Error::Dimension(_))));
    }

    #[test]
    fn intersection() {
        let a = SubmoduleBasis::new(Var::D, 1, vec![vec![d(&[0, 1])]]).unwrap();
        let b = SubmoduleBasis::new(Var::D, 1, vec![vec![d(&[1, 1])]]).unwrap();
        let i = a.intersect(&b).unwrap();
        assert_eq!(i.generators(), &[vec![d(&[0, 1, 1])]]);
    }

    #[test]
    fn torsion_of_one_free_one_cyclic() {
        let r = PolyMatrix::from_rows(Var::D, 2, vec![vec![d(&[]), d(&[0, 1])]]).unwrap();
        let t = torsion_decomposition(&r);
        assert_eq!(t.free_rank, 1);
        assert_eq!(t.invariant_factors, vec![d(&[0, 1])]);
    }
}
