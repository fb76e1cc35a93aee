//! Catalan's triangle `C(n, k)`, `0 <= k <= n`, over exact big integers.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// `C(n,k) = C(n,k-1) + C(n-1,k)` with `C(0,0) = 1`.
    Recursive,
    /// `(n+k)! (n-k+1) / (k! (n+1)!)`.
    Closed,
}

/// Rows `0..=max_n` built by the additive rule.
#[derive(Clone, Debug)]
pub struct CatalanTriangle {
    rows: Vec<Vec<BigUint>>,
}

impl CatalanTriangle {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![BigUint::one()]);
        for n in 1..=max_n {
            let mut row = Vec::with_capacity(n + 1);
            // first column copies the entry above, the last copies its left
            row.push(rows[n - 1][0].clone());
            for k in 1..n {
                let v = &row[k - 1] + &rows[n - 1][k];
                row.push(v);
            }
            let last = row[n - 1].clone();
            row.push(last);
            rows.push(row);
        }
        CatalanTriangle { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&BigUint> {
        self.rows.get(n).and_then(|r| r.get(k))
    }

    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n]
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, i| acc * i)
}

/// Closed form, evaluated as `((n+1)···(n+k)) · (n-k+1) / (k! · (n+1))` so
/// the common factor `n!` never gets built.
pub fn catalan_closed(n: usize, k: usize) -> BigUint {
    let mut num = BigUint::one();
    for i in (n + 1)..=(n + k) {
        num *= i as u64;
    }
    num *= (n + 1 - k) as u64;
    let den = factorial(k) * (n as u64 + 1);
    debug_assert!((&num % &den).is_zero());
    num / den
}

fn catalan_recursive(n: usize, k: usize) -> BigUint {
    // one row at a time; only the previous row is kept
    let mut prev = vec![BigUint::one()];
    for m in 1..=n {
        let mut row = Vec::with_capacity(m + 1);
        row.push(prev[0].clone());
        for j in 1..m {
            let v = &row[j - 1] + &prev[j];
            row.push(v);
        }
        let last = row[m - 1].clone();
        row.push(last);
        prev = row;
    }
    prev.swap_remove(k)
}

pub fn catalan(n: usize, k: usize, method: Method) -> Result<BigUint> {
    if k > n {
        return Err(Error::invalid(format!("C({n},{k}) requires k <= n")));
    }
    Ok(match method {
        Method::Recursive => catalan_recursive(n, k),
        Method::Closed => catalan_closed(n, k),
    })
}

/// The Catalan number `C_n = binom(2n, n) / (n+1)`.
pub fn catalan_number(n: usize) -> BigUint {
    catalan_closed(n, n)
}
