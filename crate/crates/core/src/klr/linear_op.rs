//! Sparse square integer matrices.
//!
//! Every generator of a homogeneous module acts by a matrix with entries in
//! `{-1, 0, 1}`, and relations are integer identities between products and
//! sums of them, so checking them over `Z` checks them over every field.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::ops::{Add, Mul, Neg, Sub};

/// Stored column-major: keys are `(col, row)`, zero entries are never kept.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearOp {
    dim: usize,
    entries: BTreeMap<(usize, usize), i64>,
}

impl LinearOp {
    pub fn zero(dim: usize) -> Self {
        LinearOp {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        LinearOp {
            dim,
            entries: (0..dim).map(|i| ((i, i), 1)).collect(),
        }
    }

    /// Matrix with a single entry `value` at `(row, col)`.
    pub fn unit(dim: usize, row: usize, col: usize, value: i64) -> Self {
        let mut op = Self::zero(dim);
        op.set(row, col, value);
        op
    }

    pub fn from_triplets(
        dim: usize,
        triplets: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Self {
        let mut op = Self::zero(dim);
        for (r, c, v) in triplets {
            op.add_at(r, c, v);
        }
        op
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries.get(&(col, row)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        assert!(row < self.dim && col < self.dim, "index out of range");
        if value == 0 {
            self.entries.remove(&(col, row));
        } else {
            self.entries.insert((col, row), value);
        }
    }

    fn add_at(&mut self, row: usize, col: usize, value: i64) {
        let v = self.get(row, col) + value;
        self.set(row, col, v);
    }

    /// Entries of column `col` as `(row, value)`.
    pub fn column(&self, col: usize) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.entries
            .range((col, 0)..(col + 1, 0))
            .map(|(&(_, r), &v)| (r, v))
    }

    /// `(row, col, value)` sorted by row, then column.
    pub fn triplets(&self) -> Vec<(usize, usize, i64)> {
        let mut t: Vec<_> = self.entries.iter().map(|(&(c, r), &v)| (r, c, v)).collect();
        t.sort_unstable();
        t
    }

    pub fn scale(&self, s: i64) -> LinearOp {
        if s == 0 {
            return Self::zero(self.dim);
        }
        LinearOp {
            dim: self.dim,
            entries: self.entries.iter().map(|(&k, &v)| (k, v * s)).collect(),
        }
    }

    /// Writes `row,col,value` lines under a header.
    pub fn write_triplet_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "row,col,value")?;
        for (r, c, v) in self.triplets() {
            writeln!(out, "{r},{c},{v}")?;
        }
        Ok(())
    }

    fn check_dims(&self, other: &LinearOp) {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
    }
}

impl Mul for &LinearOp {
    type Output = LinearOp;

    fn mul(self, rhs: &LinearOp) -> LinearOp {
        self.check_dims(rhs);
        let mut out = LinearOp::zero(self.dim);
        // (AB)[i][j] = Σ_k A[i][k] B[k][j]
        for (&(j, k), &b) in &rhs.entries {
            for (i, a) in self.column(k) {
                out.add_at(i, j, a * b);
            }
        }
        out
    }
}

impl Add for &LinearOp {
    type Output = LinearOp;

    fn add(self, rhs: &LinearOp) -> LinearOp {
        self.check_dims(rhs);
        let mut out = self.clone();
        for (&(c, r), &v) in &rhs.entries {
            out.add_at(r, c, v);
        }
        out
    }
}

impl Sub for &LinearOp {
    type Output = LinearOp;

    fn sub(self, rhs: &LinearOp) -> LinearOp {
        self + &(-rhs)
    }
}

impl Neg for &LinearOp {
    type Output = LinearOp;

    fn neg(self) -> LinearOp {
        self.scale(-1)
    }
}

impl fmt::Debug for LinearOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim <= 8 {
            writeln!(f, "LinearOp({}x{})", self.dim, self.dim)?;
            for r in 0..self.dim {
                let row: Vec<String> = (0..self.dim)
                    .map(|c| format!("{:>2}", self.get(r, c)))
                    .collect();
                writeln!(f, "  [{}]", row.join(" "))?;
            }
            Ok(())
        } else {
            write!(f, "LinearOp({}x{}, nnz={})", self.dim, self.dim, self.nnz())
        }
    }
}
