use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::{MultiPoly, Rational, UPoly, Var};

/// Dense matrix over `Q[v]` for one designated variable `v`.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    pub var: Var,
    rows: usize,
    cols: usize,
    e: Vec<Vec<UPoly>>,
}

impl PolyMatrix {
    pub fn zeros(var: Var, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            var,
            rows,
            cols,
            e: vec![vec![UPoly::zero(); cols]; rows],
        }
    }

    pub fn identity(var: Var, n: usize) -> Self {
        let mut m = Self::zeros(var, n, n);
        for i in 0..n {
            m.e[i][i] = UPoly::one();
        }
        m
    }

    /// Rows must all have length `cols`.
    pub fn from_rows(var: Var, cols: usize, rows: Vec<Vec<UPoly>>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Dimension(format!(
                "row of length {} in a matrix with {cols} columns",
                r.len()
            )));
        }
        Ok(PolyMatrix {
            var,
            rows: rows.len(),
            cols,
            e: rows,
        })
    }

    /// Builds from polynomials in the text grammar or `MultiPoly`; every entry
    /// must be univariate in `var`.
    pub fn from_multi(var: Var, rows: &[Vec<MultiPoly>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let e = rows
            .iter()
            .map(|r| r.iter().map(|p| UPoly::from_multi(p, var)).collect())
            .collect::<Result<Vec<Vec<UPoly>>>>()?;
        Self::from_rows(var, cols, e)
    }

    pub fn parse(var: Var, rows: &[&[&str]]) -> Result<Self> {
        let m = rows
            .iter()
            .map(|r| r.iter().map(|s| crate::exactmath::parse_poly(s)).collect())
            .collect::<Result<Vec<Vec<MultiPoly>>>>()?;
        Self::from_multi(var, &m)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &UPoly {
        &self.e[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: UPoly) {
        self.e[i][j] = p;
    }

    pub fn row(&self, i: usize) -> &[UPoly] {
        &self.e[i]
    }

    pub fn rows(&self) -> &[Vec<UPoly>] {
        &self.e
    }

    pub fn into_rows(self) -> Vec<Vec<UPoly>> {
        self.e
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().flatten().all(|p| p.is_zero())
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = Self::zeros(self.var, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.e[j][i] = self.e[i][j].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.var, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.e[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let p = &self.e[i][k] * &other.e[k][j];
                    out.e[i][j] = &out.e[i][j] + &p;
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[UPoly]) -> Result<Vec<UPoly>> {
        if v.len() != self.rows {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} rows",
                v.len(),
                self.rows
            )));
        }
        let mut out = vec![UPoly::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = &*o + &(vi * &self.e[i][j]);
            }
        }
        Ok(out)
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        self.e.swap(a, b);
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        for r in &mut self.e {
            r.swap(a, b);
        }
    }

    /// `row[dst] -= q · row[src]`.
    pub(crate) fn row_axpy(&mut self, dst: usize, src: usize, q: &UPoly) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let d = q * &self.e[src][j];
            self.e[dst][j] = &self.e[dst][j] - &d;
        }
    }

    /// `col[dst] -= q · col[src]`.
    pub(crate) fn col_axpy(&mut self, dst: usize, src: usize, q: &UPoly) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let d = q * &self.e[i][src];
            self.e[i][dst] = &self.e[i][dst] - &d;
        }
    }

    pub(crate) fn scale_row(&mut self, r: usize, k: &Rational) {
        for p in &mut self.e[r] {
            *p = p.scale(k);
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<UPoly> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(UPoly::one());
        }
        let mut a = self.e.clone();
        let mut sign = false;
        let mut prev = UPoly::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(p) => {
                        a.swap(k, p);
                        sign = !sign;
                    }
                    None => return Ok(UPoly::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.divrem(&prev).0;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if sign { -&d } else { d })
    }

    /// Unimodular: the determinant is a nonzero constant.
    pub fn is_unimodular(&self) -> bool {
        self.determinant()
            .map(|d| !d.is_zero() && d.is_constant())
            .unwrap_or(false)
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.e.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, p) in r.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                f.write_str(&p.display_in(self.var))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}
