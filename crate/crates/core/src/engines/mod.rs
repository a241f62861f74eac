//! Exact search primitives over an abstract, instrumented text.
//!
//! Both engines read the text only through [`TextAccess`] so that the
//! classified view of a weighted text can be searched without being
//! materialized. Every read is charged to an [`InspectionCounter`].

mod multi;
mod skip;

pub use multi::MultiSearcher;
pub use skip::SkipSearcher;

use crate::alphabet::Letter;

/// Random access to the letters of a text.
///
/// Indices `>= sigma` denote the sentinel, which equals no pattern letter.
pub trait TextAccess {
    fn len(&self) -> usize;

    fn letter_at(&self, i: usize) -> Letter;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl TextAccess for [Letter] {
    fn len(&self) -> usize {
        <[Letter]>::len(self)
    }

    #[inline]
    fn letter_at(&self, i: usize) -> Letter {
        self[i]
    }
}

impl<T: TextAccess + ?Sized> TextAccess for &T {
    fn len(&self) -> usize {
        (**self).len()
    }

    #[inline]
    fn letter_at(&self, i: usize) -> Letter {
        (**self).letter_at(i)
    }
}

/// A contiguous slice `start..start + len` of another text.
#[derive(Debug, Clone, Copy)]
pub struct TextWindow<T> {
    inner: T,
    start: usize,
    len: usize,
}

impl<T: TextAccess> TextWindow<T> {
    pub fn new(inner: T, start: usize, len: usize) -> Self {
        assert!(start + len <= inner.len(), "window exceeds text");
        TextWindow { inner, start, len }
    }
}

impl<T: TextAccess> TextAccess for TextWindow<T> {
    fn len(&self) -> usize {
        self.len
    }

    #[inline]
    fn letter_at(&self, i: usize) -> Letter {
        debug_assert!(i < self.len);
        self.inner.letter_at(self.start + i)
    }
}

/// Work counters for one search.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct InspectionCounter {
    /// Text letters read, by the engines and by verification.
    pub chars_inspected: u64,
    /// Filter hits handed to verification.
    pub candidates: u64,
    /// Candidates that reached the full probability computation.
    pub full_verifications: u64,
}

impl InspectionCounter {
    pub fn merge(&mut self, other: &InspectionCounter) {
        self.chars_inspected += other.chars_inspected;
        self.candidates += other.candidates;
        self.full_verifications += other.full_verifications;
    }

    #[inline]
    pub(crate) fn read<T: TextAccess + ?Sized>(&mut self, text: &T, i: usize) -> Letter {
        self.chars_inspected += 1;
        text.letter_at(i)
    }
}

/// Smallest `q` with `sigma^q >= target`, clamped to `1..=max_q`, then
/// reduced until `radix^q` fits in `max_table`.
fn gram_length(sigma: usize, target: usize, max_q: usize, max_table: usize) -> usize {
    let mut q = 1;
    let mut span = sigma;
    while span < target && q < max_q {
        q += 1;
        span = span.saturating_mul(sigma);
    }
    let radix = sigma + 1;
    while q > 1 && radix.checked_pow(q as u32).is_none_or(|s| s > max_table) {
        q -= 1;
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gram_lengths() {
        assert_eq!(gram_length(4, 32, 8, 1 << 16), 3);
        assert_eq!(gram_length(4, 128, 8, 1 << 16), 4);
        assert_eq!(gram_length(4, 128, 2, 1 << 16), 2);
        assert_eq!(gram_length(20, 128, 8, 1 << 16), 2);
        assert_eq!(gram_length(200, 1 << 30, 8, 1 << 16), 2);
        assert_eq!(gram_length(300, 1 << 30, 8, 1 << 16), 1);
    }

    #[test]
    fn windows_offset_reads() {
        let text: Vec<Letter> = vec![0, 1, 2, 3, 0];
        let w = TextWindow::new(text.as_slice(), 2, 3);
        assert_eq!(w.len(), 3);
        assert_eq!(w.letter_at(0), 2);
        assert_eq!(w.letter_at(2), 0);
    }
}
