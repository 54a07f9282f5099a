//! Brute-force witness for the enumerators.
//!
//! Walks all `n^p` index tuples by decoding a plain counter in base `n` and
//! keeps the ones that pass the family's predicate. It shares no successor
//! or ranking code with [`crate::enumeration`].

use crate::enumeration::{Alphabet, Mode, Selection};
use crate::error::{LacError, Result};
use crate::natural::Natural;

/// Largest `n^p` the oracle agrees to walk.
pub const ORACLE_CAP: u64 = 10_000_000;

#[derive(Debug, Clone)]
pub struct OracleEnumeration {
    n: usize,
    p: usize,
    mode: Mode,
    next_code: u64,
    total: u64,
}

/// Every tuple of length `p` over `alphabet` that passes `mode`'s predicate,
/// in lexicographic order.
pub fn oracle_enumerate(alphabet: &Alphabet, p: usize, mode: Mode) -> Result<OracleEnumeration> {
    let n = alphabet.len();
    if mode == Mode::Permutation && p != n {
        return Err(LacError::PermutationLengthMismatch { n, p });
    }
    let total = (0..p).try_fold(1u64, |acc, _| {
        acc.checked_mul(n as u64).filter(|&t| t <= ORACLE_CAP)
    });
    let Some(total) = total else {
        return Err(LacError::CapExceeded {
            required: Natural::from(n).pow(p as u32),
            cap: ORACLE_CAP,
        });
    };
    Ok(OracleEnumeration {
        n,
        p,
        mode,
        next_code: 0,
        total,
    })
}

pub fn oracle_count(alphabet: &Alphabet, p: usize, mode: Mode) -> Result<Natural> {
    Ok(Natural::from(oracle_enumerate(alphabet, p, mode)?.count()))
}

fn passes(tuple: &[usize], mode: Mode) -> bool {
    match mode {
        Mode::List => true,
        Mode::Arrangement | Mode::Permutation => {
            (0..tuple.len()).all(|i| (i + 1..tuple.len()).all(|j| tuple[i] != tuple[j]))
        }
        Mode::Combination => (1..tuple.len()).all(|i| tuple[i - 1] < tuple[i]),
    }
}

impl Iterator for OracleEnumeration {
    type Item = Selection;

    fn next(&mut self) -> Option<Selection> {
        while self.next_code < self.total {
            let mut code = self.next_code;
            self.next_code += 1;
            let mut tuple = vec![0; self.p];
            for slot in tuple.iter_mut().rev() {
                *slot = (code % self.n as u64) as usize;
                code /= self.n as u64;
            }
            if passes(&tuple, self.mode) {
                return Some(Selection::new_unchecked(tuple, self.mode));
            }
        }
        None
    }
}
