//! Exact combinatorics for the four classic selection families: lists
//! (repetition and order), arrangements (order, no repetition), combinations
//! (neither) and permutations (arrangements of the whole set).
//!
//! The crate offers closed-form counting with arbitrary-precision integers,
//! lazy lexicographic enumeration, rank/unrank bijections, the grid/tensor
//! view where forbidden cells are blanked, and a brute-force oracle used to
//! certify the enumerators.

pub mod cli;
pub mod counting;
pub mod enumeration;
mod error;
mod natural;
pub mod oracle;
pub mod tensor;

pub use counting::{
    count_arrangements, count_combinations, count_lists, count_mode, count_permutations, factorial,
    LacParams,
};
pub use enumeration::{enumerate, rank, unrank, Alphabet, Enumeration, Mode, Selection};
pub use error::{LacError, Result};
pub use natural::Natural;
pub use oracle::{oracle_count, oracle_enumerate, OracleEnumeration};
pub use tensor::{build_tensor, render_matrix, LacTensor, DEFAULT_CELL_CAP};
