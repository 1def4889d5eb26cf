use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::{Poly, Rat};

/// A dense matrix over `Q[t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, entries: vec![Poly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Poly::one());
        }
        m
    }

    /// Builds from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Poly>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimError(format!("row of length {} in a matrix with {cols} columns", r.len())));
            }
            entries.extend(r);
        }
        Ok(PolyMatrix { rows: n, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Poly) {
        self.entries[r * self.cols + c] = x;
    }

    pub fn column(&self, c: usize) -> Vec<Poly> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    pub fn max_degree(&self) -> usize {
        self.entries.iter().filter_map(Poly::degree).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimError(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = PolyMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let s = out.get(i, j) + &(a * b);
                        out.set(i, j, s);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Poly]) -> Result<Vec<Poly>> {
        if v.len() != self.cols {
            return Err(Error::DimError(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut s = Poly::zero();
                for (c, x) in v.iter().enumerate() {
                    s = &s + &(self.get(r, c) * x);
                }
                s
            })
            .collect())
    }

    /// Entry-wise value at `t = x`.
    pub fn eval(&self, x: &Rat) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|r| (0..self.cols).map(|c| self.get(r, c).eval(x)).collect()).collect()
    }

    fn column_axpy(&mut self, dst: usize, q: &Poly, src: usize) {
        for r in 0..self.rows {
            let s = self.get(r, src);
            if s.is_zero() {
                continue;
            }
            let v = self.get(r, dst) - &(q * s);
            self.set(r, dst, v);
        }
    }

    fn swap_columns(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    fn scale_column(&mut self, c: usize, k: &Rat) {
        for r in 0..self.rows {
            let v = self.get(r, c).scale(k);
            self.set(r, c, v);
        }
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for PolyMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|r| (0..self.cols).map(|c| self.get(r, c).to_string()).collect()).collect();
        rows.serialize(s)
    }
}

/// Column echelon form `H = M U` with `U` unimodular. Column `j < rank` has its
/// first nonzero entry, a monic polynomial, in row `pivots[j]`; pivot rows increase
/// and columns from `rank` on are zero.
pub struct ColumnEchelon {
    pub h: PolyMatrix,
    pub u: PolyMatrix,
    pub pivots: Vec<usize>,
}

pub fn column_echelon(m: &PolyMatrix) -> ColumnEchelon {
    let mut h = m.clone();
    let mut u = PolyMatrix::identity(m.cols);
    let mut pivots = Vec::new();
    let mut next = 0;
    for r in 0..m.rows {
        if next == m.cols {
            break;
        }
        loop {
            // Euclid on row r among the remaining columns
            let live: Vec<usize> = (next..m.cols).filter(|&c| !h.get(r, c).is_zero()).collect();
            let Some(&best) = live.iter().min_by_key(|&&c| h.get(r, c).degree()) else { break };
            h.swap_columns(next, best);
            u.swap_columns(next, best);
            if live.len() == 1 {
                let lead = h.get(r, next).leading().expect("nonzero").inv().expect("nonzero");
                h.scale_column(next, &lead);
                u.scale_column(next, &lead);
                pivots.push(r);
                next += 1;
                break;
            }
            let p = h.get(r, next).clone();
            for c in next + 1..m.cols {
                if h.get(r, c).is_zero() {
                    continue;
                }
                let (q, _) = h.get(r, c).div_rem(&p);
                h.column_axpy(c, &q, next);
                u.column_axpy(c, &q, next);
            }
        }
    }
    ColumnEchelon { h, u, pivots }
}

/// A basis of `{x : M x = 0}` over `Q[t]`, as the columns of the result.
pub fn poly_kernel(m: &PolyMatrix) -> PolyMatrix {
    let ech = column_echelon(m);
    let rank = ech.pivots.len();
    let mut k = PolyMatrix::zero(m.cols, m.cols - rank);
    for (j, c) in (rank..m.cols).enumerate() {
        for r in 0..m.cols {
            k.set(r, j, ech.u.get(r, c).clone());
        }
    }
    k
}

fn solve_echelon(ech: &ColumnEchelon, v: &[Poly]) -> bool {
    let mut res = v.to_vec();
    let mut j = 0;
    for r in 0..res.len() {
        if j < ech.pivots.len() && ech.pivots[j] == r {
            let Some(x) = res[r].exact_div(ech.h.get(r, j)) else { return false };
            for (rr, item) in res.iter_mut().enumerate().skip(r) {
                let h = ech.h.get(rr, j);
                if !h.is_zero() {
                    *item = &*item - &(&x * h);
                }
            }
            j += 1;
        } else if !res[r].is_zero() {
            return false;
        }
    }
    true
}

/// Whether `v = M x` has a solution over `Q[t]`.
pub fn membership(m: &PolyMatrix, v: &[Poly]) -> Result<bool> {
    if v.len() != m.rows {
        return Err(Error::DimError(format!("vector of length {} for {} rows", v.len(), m.rows)));
    }
    Ok(solve_echelon(&column_echelon(m), v))
}

/// Every column of `k` lies in the column span of `m`.
pub fn columns_in_image(m: &PolyMatrix, k: &PolyMatrix) -> Result<bool> {
    if k.rows != m.rows {
        return Err(Error::DimError(format!("{} rows against {}", k.rows, m.rows)));
    }
    let ech = column_echelon(m);
    Ok((0..k.cols).all(|c| solve_echelon(&ech, &k.column(c))))
}

/// `dim_Q` of the cokernel of `M`, or `None` when it is infinite.
pub fn cokernel_dim(m: &PolyMatrix) -> Option<u64> {
    let ech = column_echelon(m);
    if ech.pivots.len() < m.rows {
        return None;
    }
    Some((0..m.rows).map(|j| ech.h.get(ech.pivots[j], j).degree().unwrap_or(0) as u64).sum())
}
