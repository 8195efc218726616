//! Dense matrices over GF(2).
//!
//! Rows are bit-packed into one `u64` per row, so a matrix may have at most
//! 64 columns. Column 0 is stored in the most significant used bit, which makes
//! a row word equal to the integer reading of the row with the leftmost entry
//! as the most significant bit (the convention used for labels and octal taps).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::Gf2Error;

/// Largest order accepted by [`enumerate_invertible`].
pub const MAX_ENUMERATION_ORDER: usize = 4;

/// A dense binary matrix with bit-packed rows.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    /// All-zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Result<Self, Gf2Error> {
        if rows == 0 || cols == 0 || cols > 64 {
            return Err(Gf2Error::BadShape { rows, cols });
        }
        Ok(Self {
            rows,
            cols,
            data: vec![0; rows],
        })
    }

    pub fn identity(n: usize) -> Result<Self, Gf2Error> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.set(i, i, true);
        }
        Ok(m)
    }

    /// Builds a matrix from row words; bit `cols - 1 - j` of a word is entry `j`.
    pub fn from_row_words(cols: usize, words: &[u64]) -> Result<Self, Gf2Error> {
        let mut m = Self::zeros(words.len(), cols)?;
        let mask = m.row_mask();
        for (i, &w) in words.iter().enumerate() {
            if w & !mask != 0 {
                return Err(Gf2Error::RowOutOfRange {
                    row: i,
                    value: w,
                    cols,
                });
            }
            m.data[i] = w;
        }
        Ok(m)
    }

    /// Builds a matrix from nested 0/1 values.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self, Gf2Error> {
        let cols = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        let mut m = Self::zeros(rows.len(), cols)?;
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Gf2Error::RaggedRows);
            }
            for (j, &v) in r.iter().enumerate() {
                match v {
                    0 => {}
                    1 => m.set(i, j, true),
                    _ => return Err(Gf2Error::NotBinary(v)),
                }
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    fn row_mask(&self) -> u64 {
        if self.cols == 64 {
            u64::MAX
        } else {
            (1u64 << self.cols) - 1
        }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        (self.data[r] >> (self.cols - 1 - c)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        let bit = 1u64 << (self.cols - 1 - c);
        if v {
            self.data[r] |= bit;
        } else {
            self.data[r] &= !bit;
        }
    }

    /// Row `r` as an integer, leftmost entry most significant.
    #[inline]
    pub fn row_word(&self, r: usize) -> u64 {
        self.data[r]
    }

    pub fn row_words(&self) -> &[u64] {
        &self.data
    }

    /// Column `c` as an integer, top entry most significant.
    pub fn col_word(&self, c: usize) -> u64 {
        (0..self.rows).fold(0u64, |acc, r| (acc << 1) | self.get(r, c) as u64)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows).expect("transpose shape");
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    t.set(c, r, true);
                }
            }
        }
        t
    }

    /// Row vector (as a word of `self.rows` bits) times this matrix.
    #[inline]
    pub fn left_mul_word(&self, v: u64) -> u64 {
        let mut acc = 0u64;
        let mut bits = v;
        while bits != 0 {
            let t = bits.trailing_zeros() as usize;
            acc ^= self.data[self.rows - 1 - t];
            bits &= bits - 1;
        }
        acc
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn has_distinct_rows(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.rows);
        self.data.iter().all(|w| seen.insert(*w))
    }

    /// Parses binary rows such as `"110/011/001"` (also `;`, `,` or whitespace separated).
    pub fn parse_binary_rows(s: &str) -> Result<Self, Gf2Error> {
        let rows: Vec<Vec<u8>> = s
            .split(|c: char| c == '/' || c == ';' || c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.chars()
                    .map(|ch| match ch {
                        '0' => Ok(0u8),
                        '1' => Ok(1u8),
                        other => Err(Gf2Error::Parse(format!("unexpected character {other:?}"))),
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        if rows.is_empty() {
            return Err(Gf2Error::Parse("empty matrix".into()));
        }
        Self::from_rows(&rows)
    }

    /// Formats as binary rows joined by `/`.
    pub fn to_binary_rows(&self) -> String {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| if self.get(r, c) { '1' } else { '0' })
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join("/")
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BitMatrix({}x{}: {})",
            self.rows,
            self.cols,
            self.to_binary_rows()
        )
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_binary_rows())
    }
}

impl FromStr for BitMatrix {
    type Err = Gf2Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_binary_rows(s)
    }
}

/// Matrix product over GF(2).
pub fn multiply(a: &BitMatrix, b: &BitMatrix) -> Result<BitMatrix, Gf2Error> {
    if a.cols != b.rows {
        return Err(Gf2Error::DimensionMismatch {
            left: (a.rows, a.cols),
            right: (b.rows, b.cols),
        });
    }
    let mut out = BitMatrix::zeros(a.rows, b.cols)?;
    for r in 0..a.rows {
        out.data[r] = b.left_mul_word(a.data[r]);
    }
    Ok(out)
}

/// Row rank over GF(2).
pub fn rank(a: &BitMatrix) -> usize {
    let mut rows = a.data.clone();
    let mut rank = 0;
    for bit in (0..a.cols).rev() {
        let mask = 1u64 << bit;
        if let Some(p) = (rank..rows.len()).find(|&i| rows[i] & mask != 0) {
            rows.swap(rank, p);
            let pivot = rows[rank];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && *row & mask != 0 {
                    *row ^= pivot;
                }
            }
            rank += 1;
        }
    }
    rank
}

/// Inverse of a square matrix by Gauss-Jordan elimination.
pub fn invert(a: &BitMatrix) -> Result<BitMatrix, Gf2Error> {
    if !a.is_square() {
        return Err(Gf2Error::NotSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    let n = a.rows;
    let mut left = a.data.clone();
    let mut right = BitMatrix::identity(n)?.data;
    for c in 0..n {
        let mask = 1u64 << (n - 1 - c);
        let p = (c..n)
            .find(|&i| left[i] & mask != 0)
            .ok_or(Gf2Error::Singular)?;
        left.swap(c, p);
        right.swap(c, p);
        for i in 0..n {
            if i != c && left[i] & mask != 0 {
                left[i] ^= left[c];
                right[i] ^= right[c];
            }
        }
    }
    BitMatrix::from_row_words(n, &right)
}

/// Number of invertible `m x m` binary matrices, `prod_{l=1..m} (2^m - 2^(l-1))`.
pub fn invertible_count(m: usize) -> BigUint {
    let full = BigUint::from(1u8) << m;
    (0..m).fold(BigUint::from(1u8), |acc, l| {
        acc * (&full - (BigUint::from(1u8) << l))
    })
}

/// Number of reduced column echelon labelings (modified Hadamard classes), `(2^m)! / |T_m|`.
pub fn class_count(m: usize) -> BigUint {
    let big_m = 1usize << m;
    let fact = (1..=big_m).fold(BigUint::from(1u8), |acc, i| acc * BigUint::from(i));
    fact / invertible_count(m)
}

/// All invertible `m x m` matrices in lexicographic order of their row-major bits.
pub fn enumerate_invertible(m: usize) -> Result<Vec<BitMatrix>, Gf2Error> {
    if m == 0 || m > MAX_ENUMERATION_ORDER {
        return Err(Gf2Error::UnsupportedOrder(m));
    }
    let mut out = Vec::new();
    let total_bits = m * m;
    let row_mask = (1u64 << m) - 1;
    let mut words = vec![0u64; m];
    for code in 0u64..(1u64 << total_bits) {
        for (r, w) in words.iter_mut().enumerate() {
            *w = (code >> ((m - 1 - r) * m)) & row_mask;
        }
        if full_rank_words(&words, m) {
            out.push(BitMatrix::from_row_words(m, &words)?);
        }
    }
    Ok(out)
}

fn full_rank_words(words: &[u64], cols: usize) -> bool {
    let mut rows = words.to_vec();
    let mut rank = 0;
    for bit in (0..cols).rev() {
        let mask = 1u64 << bit;
        if let Some(p) = (rank..rows.len()).find(|&i| rows[i] & mask != 0) {
            rows.swap(rank, p);
            let pivot = rows[rank];
            for row in rows.iter_mut().skip(rank + 1) {
                if *row & mask != 0 {
                    *row ^= pivot;
                }
            }
            rank += 1;
        } else {
            return false;
        }
    }
    rank == rows.len()
}

/// Unique factorization `L = echelon * transform`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RceFactorization {
    pub echelon: BitMatrix,
    pub transform: BitMatrix,
}

/// Checks both reduced column echelon conditions: pivot rows are zero outside
/// the pivot, and the pivot of column `l` lies below the pivot of column `l + 1`.
pub fn is_reduced_column_echelon(a: &BitMatrix) -> bool {
    let mut prev_pivot: Option<usize> = None;
    for c in (0..a.cols).rev() {
        let Some(p) = (0..a.rows).find(|&r| a.get(r, c)) else {
            return false;
        };
        if a.row_word(p).count_ones() != 1 {
            return false;
        }
        if let Some(q) = prev_pivot {
            if p <= q {
                return false;
            }
        }
        prev_pivot = Some(p);
    }
    true
}

/// Factorizes a labeling matrix (2^m distinct rows, m columns) as `L = L_R T`
/// with `L_R` in reduced column echelon form and `T` invertible.
pub fn rce_factorize(l: &BitMatrix) -> Result<RceFactorization, Gf2Error> {
    let m = l.cols;
    if m >= 64 || l.rows != 1usize << m {
        return Err(Gf2Error::NotALabeling(format!(
            "expected {} rows for {} columns, got {}",
            1u128 << m.min(64),
            m,
            l.rows
        )));
    }
    if !l.has_distinct_rows() {
        return Err(Gf2Error::NotALabeling("duplicate rows".into()));
    }
    if let Some(c) = (0..m).find(|&c| l.col_word(c) == 0) {
        return Err(Gf2Error::NotALabeling(format!("column {c} is zero")));
    }

    // Column operations applied to `work` are mirrored on `ops`, so that
    // work == l * ops throughout; the transform is ops^-1.
    let mut work = l.clone();
    let mut ops = BitMatrix::identity(m)?;
    let mut target = m;
    for r in 0..l.rows {
        if target == 0 {
            break;
        }
        let Some(j) = (0..target).find(|&c| work.get(r, c)) else {
            continue;
        };
        let t = target - 1;
        if j != t {
            swap_cols(&mut work, j, t);
            swap_cols(&mut ops, j, t);
        }
        for c in 0..m {
            if c != t && work.get(r, c) {
                add_col(&mut work, t, c);
                add_col(&mut ops, t, c);
            }
        }
        target -= 1;
    }
    debug_assert!(is_reduced_column_echelon(&work));
    Ok(RceFactorization {
        echelon: work,
        transform: invert(&ops)?,
    })
}

fn swap_cols(a: &mut BitMatrix, x: usize, y: usize) {
    for r in 0..a.rows {
        let (vx, vy) = (a.get(r, x), a.get(r, y));
        a.set(r, x, vy);
        a.set(r, y, vx);
    }
}

/// Column `dst` += column `src`.
fn add_col(a: &mut BitMatrix, src: usize, dst: usize) {
    for r in 0..a.rows {
        if a.get(r, src) {
            let v = a.get(r, dst);
            a.set(r, dst, !v);
        }
    }
}

/// The bidiagonal matrix `T` with `B_m = N_m T`.
pub fn gray_transform(m: usize) -> Result<BitMatrix, Gf2Error> {
    let mut t = BitMatrix::identity(m)?;
    for i in 0..m.saturating_sub(1) {
        t.set(i, i + 1, true);
    }
    Ok(t)
}
