//! Binary labelings, their modified Hadamard classes, and the MFLSA generator
//! of class representatives.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::constellation::{intra_distances, Constellation};
use crate::error::LabelingError;
use crate::gf2::{self, BitMatrix};

pub const MAX_ORDER: usize = 6;
/// Largest order for which the class representatives may be collected into memory.
pub const MAX_MATERIALIZED_ORDER: usize = 3;

/// A bijection between symbol indices and binary labels.
///
/// Row `q` of the matrix is the label of symbol `q`; the integer view reads each
/// row with the first column as the most significant bit.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Labeling {
    matrix: BitMatrix,
    integers: Vec<usize>,
}

impl Labeling {
    pub fn from_integers(values: &[usize]) -> Result<Self, LabelingError> {
        let size = values.len();
        if size < 2 || !size.is_power_of_two() {
            return Err(LabelingError::BadLength(size));
        }
        let m = size.trailing_zeros() as usize;
        if m > MAX_ORDER {
            return Err(LabelingError::UnsupportedOrder(m));
        }
        let mut seen = vec![false; size];
        for &v in values {
            if v >= size || std::mem::replace(&mut seen[v], true) {
                return Err(LabelingError::NotAPermutation(size));
            }
        }
        let words: Vec<u64> = values.iter().map(|&v| v as u64).collect();
        let matrix = BitMatrix::from_row_words(m, &words)?;
        Ok(Self {
            matrix,
            integers: values.to_vec(),
        })
    }

    pub fn from_matrix(matrix: BitMatrix) -> Result<Self, LabelingError> {
        let values: Vec<usize> = matrix.row_words().iter().map(|&w| w as usize).collect();
        if matrix.rows() != 1 << matrix.cols() {
            return Err(LabelingError::BadLength(matrix.rows()));
        }
        Self::from_integers(&values)
    }

    /// Number of label bits `m`.
    pub fn order(&self) -> usize {
        self.matrix.cols()
    }

    /// Number of symbols `M = 2^m`.
    pub fn size(&self) -> usize {
        self.integers.len()
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    /// Label (as an integer) of symbol `q`.
    pub fn integers(&self) -> &[usize] {
        &self.integers
    }

    /// Symbol index carrying each label: `inverse()[label] = q`.
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.size()];
        for (q, &label) in self.integers.iter().enumerate() {
            inv[label] = q;
        }
        inv
    }

    /// `L T` for an invertible `m x m` transform.
    pub fn transformed(&self, t: &BitMatrix) -> Result<Self, LabelingError> {
        Self::from_matrix(gf2::multiply(&self.matrix, t)?)
    }

    /// Labels listed in reverse symbol order.
    pub fn reversed(&self) -> Self {
        let mut v = self.integers.clone();
        v.reverse();
        Self::from_integers(&v).expect("reversal preserves validity")
    }

    /// Labels shifted circularly so that symbol `q` takes the label of symbol `q + shift`.
    pub fn rotated(&self, shift: usize) -> Self {
        let mut v = self.integers.clone();
        v.rotate_left(shift % self.size());
        Self::from_integers(&v).expect("rotation preserves validity")
    }

    pub fn is_reduced_column_echelon(&self) -> bool {
        gf2::is_reduced_column_echelon(&self.matrix)
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.integers.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Labeling[{self}]")
    }
}

impl FromStr for Labeling {
    type Err = LabelingError;

    /// Accepts `"0 1 2 4 7 6 5 3"`, `"[0,1,2,3]"` and similar.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let values = s
            .split(|c: char| c.is_whitespace() || c == ',' || c == '[' || c == ']')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|e| LabelingError::Parse(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_integers(&values)
    }
}

impl TryFrom<Vec<usize>> for Labeling {
    type Error = LabelingError;

    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Self::from_integers(&v)
    }
}

impl From<Labeling> for Vec<usize> {
    fn from(l: Labeling) -> Self {
        l.integers
    }
}

fn check_order(m: usize) -> Result<(), LabelingError> {
    if m == 0 || m > MAX_ORDER {
        Err(LabelingError::UnsupportedOrder(m))
    } else {
        Ok(())
    }
}

/// Natural binary code of order `m`.
pub fn nbc(m: usize) -> Result<Labeling, LabelingError> {
    check_order(m)?;
    Labeling::from_integers(&(0..1usize << m).collect::<Vec<_>>())
}

/// Binary reflected Gray code of order `m`.
pub fn brgc(m: usize) -> Result<Labeling, LabelingError> {
    check_order(m)?;
    nbc(m)?.transformed(&gf2::gray_transform(m)?)
}

/// Class representative (the reduced column echelon member) of a labeling's class.
pub fn class_representative(l: &Labeling) -> Labeling {
    let f = gf2::rce_factorize(l.matrix()).expect("labelings always factorize");
    Labeling::from_matrix(f.echelon).expect("echelon factor is a labeling")
}

/// True iff the minimum intra-subset distances strictly increase with the level.
pub fn is_set_partitioning(x: &Constellation, l: &Labeling) -> Result<bool, LabelingError> {
    let deltas = intra_distances(x, l)?;
    Ok(deltas.windows(2).all(|w| w[0] < w[1]))
}

/// Which labelings the generator yields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MflsaMode {
    /// One representative per modified Hadamard class.
    Full,
    /// Excludes reversed duplicates (all-zero label in the first half).
    Pam,
    /// Excludes rotated duplicates (all-zero label at the first symbol).
    Psk,
}

impl FromStr for MflsaMode {
    type Err = LabelingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "full" => Ok(Self::Full),
            "pam" => Ok(Self::Pam),
            "psk" => Ok(Self::Psk),
            other => Err(LabelingError::Parse(format!("unknown mode {other:?}"))),
        }
    }
}

impl fmt::Display for MflsaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Full => "full",
            Self::Pam => "pam",
            Self::Psk => "psk",
        })
    }
}

/// Streaming generator of reduced column echelon labelings (MFLSA).
#[derive(Clone, Debug)]
pub struct LabelingClassIter {
    mode: MflsaMode,
    order: usize,
    r: Vec<usize>,
    done: bool,
}

/// Starts the MFLSA for order `m` (2..=4). Order 4 yields over 10^9 labelings;
/// callers must cap it (e.g. with `take`).
pub fn mflsa(m: usize, mode: MflsaMode) -> Result<LabelingClassIter, LabelingError> {
    if !(2..=4).contains(&m) {
        return Err(LabelingError::UnsupportedOrder(m));
    }
    Ok(LabelingClassIter {
        mode,
        order: m,
        r: (0..1usize << m).collect(),
        done: false,
    })
}

/// Collects every representative; only allowed for `m <= 3`.
pub fn mflsa_all(m: usize, mode: MflsaMode) -> Result<Vec<Labeling>, LabelingError> {
    if m > MAX_MATERIALIZED_ORDER {
        return Err(LabelingError::UnsupportedOrder(m));
    }
    Ok(mflsa(m, mode)?.collect())
}

impl LabelingClassIter {
    pub fn mode(&self) -> MflsaMode {
        self.mode
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of labelings the full run yields.
    pub fn total(&self) -> num_bigint::BigUint {
        let all = gf2::class_count(self.order);
        match self.mode {
            MflsaMode::Full => all,
            MflsaMode::Pam => all / 2u32,
            MflsaMode::Psk => all >> self.order,
        }
    }

    /// Last position (1-based) the zero label may occupy while `index` is shifted.
    fn end(&self, index: usize) -> usize {
        let size = self.r.len();
        match self.mode {
            MflsaMode::Pam if index == 0 => size / 2,
            _ => size,
        }
    }

    fn advance(&mut self) {
        let size = self.r.len();
        let mut index = match self.mode {
            MflsaMode::Psk => 3,
            _ => 0,
        };
        if index >= size - 1 {
            self.done = true;
            return;
        }
        loop {
            let end = self.end(index);
            if self.r[end - 1] != index {
                break;
            }
            self.r[index..end].rotate_right(1);
            index += 1;
            while index.is_power_of_two() {
                index += 1;
            }
            if index == size - 1 {
                self.done = true;
                return;
            }
        }
        let pointer = self
            .r
            .iter()
            .position(|&v| v == index)
            .expect("index value present");
        self.r.swap(pointer, pointer + 1);
    }
}

impl Iterator for LabelingClassIter {
    type Item = Labeling;

    fn next(&mut self) -> Option<Labeling> {
        if self.done {
            return None;
        }
        let out = Labeling::from_integers(&self.r).expect("generator keeps a permutation");
        self.advance();
        Some(out)
    }
}
