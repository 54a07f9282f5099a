//! The grid view: all `n^p` index tuples, with the cells the family forbids
//! left blank. For `p = 2` this is the familiar `n x n` matrix: full for
//! lists, hollow diagonal for arrangements, strict upper triangle for
//! combinations.

use crate::enumeration::{enumerate, Alphabet, Mode, Selection};
use crate::error::{LacError, Result};
use crate::natural::Natural;

/// Default materialization guard, in cells.
pub const DEFAULT_CELL_CAP: u64 = 1_000_000;

/// Immutable `p`-dimensional grid of side `n`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LacTensor {
    alphabet: Alphabet,
    p: usize,
    mode: Mode,
    cells: Vec<Option<Selection>>,
}

/// Materializes the tensor of `(alphabet, p, mode)` if `n^p <= cap`.
///
/// Filled cells are placed from the lexicographic stream, so reading the
/// filled cells row-major reproduces [`enumerate`].
pub fn build_tensor(alphabet: &Alphabet, p: usize, mode: Mode, cap: u64) -> Result<LacTensor> {
    let n = alphabet.len();
    let required = Natural::from(n).pow(u32::try_from(p).unwrap_or(u32::MAX));
    let size = match required.to_u64() {
        Some(size) if size <= cap => size as usize,
        _ => return Err(LacError::CapExceeded { required, cap }),
    };
    let mut cells = vec![None; size];
    for selection in enumerate(alphabet, p, mode)? {
        let offset = selection.indices().iter().fold(0, |acc, &i| acc * n + i);
        cells[offset] = Some(selection);
    }
    Ok(LacTensor {
        alphabet: alphabet.clone(),
        p,
        mode,
        cells,
    })
}

impl LacTensor {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn order(&self) -> usize {
        self.p
    }

    pub fn shape(&self) -> Vec<usize> {
        vec![self.alphabet.len(); self.p]
    }

    /// Cell at `index`; `None` for a blank cell or an out-of-shape index.
    pub fn get(&self, index: &[usize]) -> Option<&Selection> {
        let n = self.alphabet.len();
        if index.len() != self.p || index.iter().any(|&i| i >= n) {
            return None;
        }
        let offset = index.iter().fold(0, |acc, &i| acc * n + i);
        self.cells[offset].as_ref()
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> &[Option<Selection>] {
        &self.cells
    }

    pub fn filled(&self) -> impl Iterator<Item = &Selection> {
        self.cells.iter().flatten()
    }

    pub fn filled_count(&self) -> usize {
        self.filled().count()
    }
}

pub const BLANK: &str = "·";

/// Renders a `p = 2` tensor as `n` lines of space-separated cells, blanks
/// shown as `·`.
pub fn render_matrix(tensor: &LacTensor) -> Result<String> {
    let mut out = String::new();
    for row in matrix_rows(tensor)? {
        out.push_str(&row);
        out.push('\n');
    }
    Ok(out)
}

/// Same as [`render_matrix`], one string per row without newlines.
pub fn matrix_rows(tensor: &LacTensor) -> Result<Vec<String>> {
    Ok(matrix_cells(tensor)?
        .into_iter()
        .map(|row| row.join(" "))
        .collect())
}

pub fn matrix_cells(tensor: &LacTensor) -> Result<Vec<Vec<String>>> {
    if tensor.p != 2 {
        return Err(LacError::NotRenderable { p: tensor.p });
    }
    let n = tensor.alphabet.len();
    Ok(tensor
        .cells
        .chunks(n.max(1))
        .take(n)
        .map(|row| {
            row.iter()
                .map(|cell| match cell {
                    Some(s) => s.render(&tensor.alphabet),
                    None => BLANK.to_string(),
                })
                .collect()
        })
        .collect())
}
