//! Black/grey/white colouring of a weighted string and the structures
//! derived from it.

use std::ops::Range;

use crate::alphabet::Letter;
use crate::error::{Error, Result};
use crate::weighted::{Position, Threshold, WeightedString};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Colour {
    /// No letter is more probable than `1 - 1/z`.
    Black,
    /// One letter is more probable than `1 - 1/z` but not certain.
    Grey,
    /// One letter has probability exactly 1.
    White,
}

/// Colour and heavy letter of a single position.
pub fn classify(p: Position<'_>, t: Threshold) -> (Colour, Option<Letter>) {
    let (letter, prob) = p.most_probable();
    if prob >= 1.0 {
        (Colour::White, Some(letter))
    } else if prob > t.heavy_cutoff() {
        (Colour::Grey, Some(letter))
    } else {
        (Colour::Black, None)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    colours: Vec<Colour>,
    heavy: Vec<Option<Letter>>,
    black_positions: Vec<usize>,
    black_rank: Vec<Option<usize>>,
}

impl Colouring {
    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn colour(&self, i: usize) -> Colour {
        self.colours[i]
    }

    /// Heavy letter at a grey or white position.
    pub fn heavy(&self, i: usize) -> Option<Letter> {
        self.heavy[i]
    }

    /// Number of black positions (`l'`).
    pub fn black_count(&self) -> usize {
        self.black_positions.len()
    }

    pub fn black_positions(&self) -> &[usize] {
        &self.black_positions
    }

    /// Rank of position `i` among the black positions, left to right.
    pub fn black_rank(&self, i: usize) -> Option<usize> {
        self.black_rank[i]
    }

    /// Colouring from explicit colours, for callers that reason about
    /// layouts only. Heavy letters are left unset.
    pub fn from_colours(colours: Vec<Colour>) -> Self {
        let heavy = vec![None; colours.len()];
        Self::assemble(colours, heavy)
    }

    fn assemble(colours: Vec<Colour>, heavy: Vec<Option<Letter>>) -> Self {
        let mut black_positions = Vec::new();
        let mut black_rank = vec![None; colours.len()];
        for (i, c) in colours.iter().enumerate() {
            if *c == Colour::Black {
                black_rank[i] = Some(black_positions.len());
                black_positions.push(i);
            }
        }
        Colouring {
            colours,
            heavy,
            black_positions,
            black_rank,
        }
    }
}

/// Colours every position of `x` in `O(sigma * |x|)`.
pub fn colour_positions(x: &WeightedString, t: Threshold) -> Colouring {
    let (colours, heavy) = x.positions().map(|p| classify(p, t)).unzip();
    Colouring::assemble(colours, heavy)
}

/// Occurrence table of the black positions: row `r` marks the letters that
/// occur at the `r`-th black position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlackMatrix {
    sigma: usize,
    cells: Vec<bool>,
}

impl BlackMatrix {
    pub fn rows(&self) -> usize {
        self.cells.len() / self.sigma
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    /// Whether `letter` occurs at black position `row`. The sentinel and any
    /// other out-of-alphabet index never occur.
    #[inline]
    pub fn contains(&self, row: usize, letter: Letter) -> bool {
        let a = letter as usize;
        a < self.sigma && self.cells[row * self.sigma + a]
    }

    pub fn row(&self, row: usize) -> &[bool] {
        &self.cells[row * self.sigma..(row + 1) * self.sigma]
    }
}

pub fn build_black_matrix(x: &WeightedString, c: &Colouring) -> BlackMatrix {
    let sigma = x.sigma();
    let mut cells = vec![false; c.black_count() * sigma];
    for (row, &i) in c.black_positions().iter().enumerate() {
        for (letter, _) in x.position(i).iter() {
            cells[row * sigma + letter as usize] = true;
        }
    }
    BlackMatrix { sigma, cells }
}

/// Longest run of consecutive non-black positions as `(start, length)`,
/// leftmost on ties.
pub fn longest_clean_run(c: &Colouring) -> Result<(usize, usize)> {
    let mut best = (0, 0);
    let mut start = 0;
    for (i, colour) in c.colours().iter().enumerate() {
        if *colour == Colour::Black {
            start = i + 1;
        } else if i + 1 - start > best.1 {
            best = (start, i + 1 - start);
        }
    }
    if best.1 == 0 {
        return Err(Error::AllBlackOrTooMany);
    }
    Ok(best)
}

/// Heavy letters over a black-free range.
pub fn heavy_projection(c: &Colouring, range: Range<usize>) -> Result<Vec<Letter>> {
    range
        .map(|i| c.heavy(i).ok_or(Error::BlackInRange(i)))
        .collect()
}
