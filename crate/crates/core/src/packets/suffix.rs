use std::fmt;

use serde::{Deserialize, Serialize};

use crate::canonical::{check_suffix_params, suffix_params_all, suffix_word};
use crate::error::{Error, Result};
use crate::word::Word;

/// A suffix `s_{n j_1} s_{n-1 j_2} s_{n j_3} ..` of `D_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Suffix {
    n: usize,
    params: Vec<u8>,
}

impl Suffix {
    pub fn new(n: usize, params: Vec<u8>) -> Result<Self> {
        if n < 4 {
            return Err(Error::invalid("n must be ≥ 4 for type D"));
        }
        check_suffix_params(n, &params)?;
        Ok(Suffix { n, params })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    /// Reads a suffix from its word, e.g. `[4,2,1,3]`.
    pub fn from_word(n: usize, w: &[u8]) -> Result<Self> {
        let cf = crate::canonical::split(w, n)?;
        if cf.prefix_word().is_empty() {
            Self::new(n, cf.suffix_params().to_vec())
        } else {
            Err(Error::parse(
                0,
                format!("{} is not a suffix", Word::from(w)),
            ))
        }
    }

    /// All `2^{n-1}` suffixes of `D_n`, lexicographic in their parameters.
    pub fn all(n: usize) -> Result<Vec<Suffix>> {
        if n < 4 {
            return Err(Error::invalid("n must be ≥ 4 for type D"));
        }
        Ok(suffix_params_all(n)
            .into_iter()
            .map(|params| Suffix { n, params })
            .collect())
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn params(&self) -> &[u8] {
        &self.params
    }

    pub fn word(&self) -> Word {
        suffix_word(self.n, &self.params)
    }

    /// Index `k` of the packet holding this suffix's collection:
    /// `n` for the empty suffix, `j_1` for a single segment, `j_1 - 1` otherwise.
    pub fn packet_index(&self) -> usize {
        match self.params.len() {
            0 => self.n,
            1 => self.params[0] as usize,
            _ => self.params[0] as usize - 1,
        }
    }
}

impl fmt::Debug for Suffix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{}:{}", self.n, self.word())
    }
}

impl fmt::Display for Suffix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word())
    }
}

pub fn packet_index(s: &Suffix) -> usize {
    s.packet_index()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word;

    /// The five-case definition of the packets, read off the suffix word.
    fn packet_by_cases(s: &Suffix) -> usize {
        let n = s.rank();
        let w = s.word();
        let p = s.params();
        if p.is_empty() {
            n
        } else if w.len() == 1 {
            // [n]
            n - 1
        } else if p.len() == 1 && p[0] as usize == n - 2 {
            n - 2
        } else if p.len() >= 2 && p[0] == 1 {
            0
        } else if p.len() == 1 {
            // s_{nk}, 1 <= k <= n-3
            p[0] as usize
        } else {
            // s_{n,k+1} s_{n-1,j_2} .., l >= 2
            p[0] as usize - 1
        }
    }

    #[test]
    fn examples() {
        let s = Suffix::new(4, vec![1, 3]).unwrap();
        assert_eq!(s.word(), word![4, 2, 1, 3]);
        assert_eq!(s.packet_index(), 0);
        assert_eq!(Suffix::empty(4).unwrap().packet_index(), 4);
        let s = Suffix::new(4, vec![2, 3]).unwrap();
        assert_eq!(s.word(), word![4, 2, 3]);
        assert_eq!(s.packet_index(), 1);
        assert_eq!(Suffix::new(4, vec![3]).unwrap().word(), word![4]);
        assert_eq!(Suffix::new(4, vec![3]).unwrap().packet_index(), 3);
    }

    #[test]
    fn closed_rule_matches_case_split() {
        for n in 4..=10 {
            for s in Suffix::all(n).unwrap() {
                assert_eq!(s.packet_index(), packet_by_cases(&s), "{s:?}");
            }
        }
    }

    #[test]
    fn from_word() {
        let s = Suffix::from_word(4, &[4, 2, 1, 3]).unwrap();
        assert_eq!(s.params(), &[1, 3]);
        assert!(Suffix::from_word(4, &[1, 4]).is_err());
        assert!(Suffix::new(4, vec![3, 1]).is_err());
    }
}
