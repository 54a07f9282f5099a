//! Closed-form counts for lists, arrangements, combinations and permutations.
//!
//! Every function here is exact. Nothing is computed through a fixed-width
//! fast path, and arrangements/combinations never form `n!` as an
//! intermediate.

use crate::enumeration::Mode;
use crate::error::{LacError, Result};
use crate::natural::Natural;

/// Number of objects `n` and selection length `p`. `p > n` is legal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LacParams {
    pub n: usize,
    pub p: usize,
}

impl LacParams {
    pub fn new(n: usize, p: usize) -> Self {
        LacParams { n, p }
    }
}

/// `n!`, with `0! = 1`.
pub fn factorial(n: usize) -> Natural {
    (2..=n as u64).map(Natural::from).product()
}

/// `n^p`. The empty selection makes `0^0 = 1`.
pub fn count_lists(params: LacParams) -> Natural {
    let exp = u32::try_from(params.p).expect("selection length exceeds u32::MAX");
    Natural::from(params.n).pow(exp)
}

/// Falling factorial `n (n-1) ... (n-p+1)`; zero when `p > n`.
pub fn count_arrangements(params: LacParams) -> Natural {
    let LacParams { n, p } = params;
    if p > n {
        return Natural::zero();
    }
    ((n - p + 1) as u64..=n as u64).map(Natural::from).product()
}

pub fn count_permutations(n: usize) -> Natural {
    count_arrangements(LacParams::new(n, n))
}

/// Binomial coefficient `n! / ((n-p)! p!)`; zero when `p > n`.
///
/// Evaluated as `acc = acc * (n - k + i) / i` for `i = 1..=k` with
/// `k = min(p, n - p)`. After step `i` the accumulator is `C(n - k + i, i)`,
/// so each division is exact; a non-zero remainder is a bug and panics.
pub fn count_combinations(params: LacParams) -> Natural {
    let LacParams { n, p } = params;
    if p > n {
        return Natural::zero();
    }
    let k = p.min(n - p);
    let mut acc = Natural::one();
    for i in 1..=k {
        let numer = acc * Natural::from(n - k + i);
        acc = numer
            .checked_exact_div(&Natural::from(i))
            .unwrap_or_else(|| panic!("inexact division at step {i} of C({n}, {p})"));
    }
    acc
}

/// Count of the family selected by `mode`. Permutation mode requires `p = n`.
pub fn count_mode(params: LacParams, mode: Mode) -> Result<Natural> {
    Ok(match mode {
        Mode::List => count_lists(params),
        Mode::Arrangement => count_arrangements(params),
        Mode::Combination => count_combinations(params),
        Mode::Permutation => {
            if params.p != params.n {
                return Err(LacError::PermutationLengthMismatch {
                    n: params.n,
                    p: params.p,
                });
            }
            count_permutations(params.n)
        }
    })
}
