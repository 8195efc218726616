//! Feedforward rate-k/m convolutional encoders: octal notation, encoding, trellis,
//! validity filters and enumeration of the encoder universe.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::EncoderError;
use crate::gf2::{self, BitMatrix};

pub const MAX_INPUTS: usize = 4;
pub const MAX_OUTPUTS: usize = 8;
pub const MAX_MEMORY: usize = 24;

/// Tap matrix of a feedforward encoder together with its register lengths.
///
/// The taps have `nu + k` rows grouped in one block per input. Block `p` has
/// `memories[p] + 1` rows, the first one acting on the current input bit and the
/// following ones on increasingly older bits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EncoderSpec {
    k: usize,
    m: usize,
    memories: Vec<usize>,
    taps: BitMatrix,
}

impl EncoderSpec {
    pub fn new(memories: &[usize], taps: BitMatrix) -> Result<Self, EncoderError> {
        let k = memories.len();
        let m = taps.cols();
        check_dims(k, m, memories.iter().sum())?;
        let expected_rows = memories.iter().sum::<usize>() + k;
        if taps.rows() != expected_rows {
            return Err(EncoderError::TapShape {
                rows: taps.rows(),
                cols: m,
                expected_rows,
                expected_cols: m,
            });
        }
        Ok(Self {
            k,
            m,
            memories: memories.to_vec(),
            taps,
        })
    }

    /// Builds an encoder from octal entries `entries[p][l]` and explicit register lengths.
    pub fn from_octal_entries(
        memories: &[usize],
        entries: &[Vec<u64>],
    ) -> Result<Self, EncoderError> {
        let k = memories.len();
        if entries.len() != k {
            return Err(EncoderError::Parse(format!(
                "expected {k} rows of generators, got {}",
                entries.len()
            )));
        }
        let m = entries[0].len();
        if entries.iter().any(|r| r.len() != m) {
            return Err(EncoderError::Parse(
                "generator rows have different lengths".into(),
            ));
        }
        check_dims(k, m, memories.iter().sum())?;
        let mut words = Vec::with_capacity(memories.iter().sum::<usize>() + k);
        for (p, row) in entries.iter().enumerate() {
            let width = memories[p] + 1;
            if let Some(&g) = row.iter().find(|&&g| g >> width != 0) {
                return Err(EncoderError::Parse(format!(
                    "generator {g:o} needs more than {width} bits for input {}",
                    p + 1
                )));
            }
            for t in 0..width {
                let shift = width - 1 - t;
                let word = row
                    .iter()
                    .fold(0u64, |acc, g| (acc << 1) | ((g >> shift) & 1));
                words.push(word);
            }
        }
        let taps = BitMatrix::from_row_words(m, &words)?;
        Self::new(memories, taps)
    }

    /// Parses octal notation such as `[13,4]` or `[1,1,1;2,31,0]` with explicit memories.
    pub fn parse_with_memories(s: &str, memories: &[usize]) -> Result<Self, EncoderError> {
        Self::from_octal_entries(memories, &parse_octal_entries(s)?)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn memories(&self) -> &[usize] {
        &self.memories
    }

    /// Total memory `nu`.
    pub fn nu(&self) -> usize {
        self.memories.iter().sum()
    }

    pub fn num_states(&self) -> usize {
        1 << self.nu()
    }

    pub fn taps(&self) -> &BitMatrix {
        &self.taps
    }

    fn row_offset(&self, p: usize) -> usize {
        self.memories[..p].iter().map(|v| v + 1).sum()
    }

    /// Octal entry connecting input `p` to output `l` (both 0-based).
    pub fn octal_entry(&self, p: usize, l: usize) -> u64 {
        let off = self.row_offset(p);
        (0..=self.memories[p]).fold(0u64, |acc, t| (acc << 1) | self.taps.get(off + t, l) as u64)
    }

    pub fn octal_entries(&self) -> Vec<Vec<u64>> {
        (0..self.k)
            .map(|p| (0..self.m).map(|l| self.octal_entry(p, l)).collect())
            .collect()
    }

    /// Encoder with taps `G T`.
    pub fn transformed(&self, t: &BitMatrix) -> Result<Self, EncoderError> {
        Self::new(&self.memories, gf2::multiply(&self.taps, t)?)
    }

    /// One step of the shift registers: returns `(next_state, output)`.
    ///
    /// States concatenate the registers of inputs `1..k`, newest bit first, with
    /// the first register in the most significant position. Input words carry
    /// input 1 in the most significant bit.
    pub fn step(&self, state: usize, input: usize) -> (usize, usize) {
        let nu = self.nu();
        let mut j = 0u64;
        let mut next = 0usize;
        let mut state_shift = nu;
        for p in 0..self.k {
            let np = self.memories[p];
            state_shift -= np;
            let reg = (state >> state_shift) & ((1 << np) - 1);
            let bit = (input >> (self.k - 1 - p)) & 1;
            let block = (bit << np) | reg;
            j = (j << (np + 1)) | block as u64;
            next = (next << np) | (block >> 1);
        }
        (next, self.taps.left_mul_word(j) as usize)
    }

    /// Encodes input words starting from the all-zero state.
    pub fn encode(&self, inputs: &[usize]) -> Vec<usize> {
        let mut state = 0;
        inputs
            .iter()
            .map(|&a| {
                let (next, out) = self.step(state, a);
                state = next;
                out
            })
            .collect()
    }

    pub fn trellis(&self) -> Trellis {
        let states = self.num_states();
        let inputs = 1usize << self.k;
        let mut next = Vec::with_capacity(states * inputs);
        let mut output = Vec::with_capacity(states * inputs);
        for s in 0..states {
            for a in 0..inputs {
                let (n, u) = self.step(s, a);
                next.push(n as u32);
                output.push(u as u16);
            }
        }
        Trellis {
            k: self.k,
            m: self.m,
            nu: self.nu(),
            next,
            output,
        }
    }

    /// Every register block has a nonzero newest and oldest tap row.
    pub fn is_canonical(&self) -> bool {
        (0..self.k).all(|p| {
            let off = self.row_offset(p);
            self.taps.row_word(off) != 0 && self.taps.row_word(off + self.memories[p]) != 0
        })
    }

    pub fn has_equally_likely_symbols(&self) -> bool {
        gf2::rank(&self.taps) == self.m
    }

    pub fn is_noncatastrophic(&self) -> bool {
        self.trellis().is_noncatastrophic()
    }

    /// Canonical, full-rank and noncatastrophic.
    pub fn is_valid(&self) -> bool {
        self.is_canonical() && self.has_equally_likely_symbols() && self.is_noncatastrophic()
    }
}

fn check_dims(k: usize, m: usize, nu: usize) -> Result<(), EncoderError> {
    if k == 0 || k > MAX_INPUTS || m == 0 || m > MAX_OUTPUTS || k > m || nu > MAX_MEMORY {
        return Err(EncoderError::Unsupported(format!("k={k}, m={m}, nu={nu}")));
    }
    Ok(())
}

/// Splits `[a,b;c,d]` into rows of octal values.
pub fn parse_octal_entries(s: &str) -> Result<Vec<Vec<u64>>, EncoderError> {
    let body = s.trim();
    let body = body.strip_prefix('[').unwrap_or(body);
    let body = body.strip_suffix(']').unwrap_or(body);
    let rows = body
        .split(';')
        .map(|row| {
            row.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    u64::from_str_radix(t, 8)
                        .map_err(|e| EncoderError::Parse(format!("{t:?}: {e}")))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    if rows.is_empty() || rows.iter().any(|r| r.is_empty()) {
        return Err(EncoderError::Parse(format!("empty generator in {s:?}")));
    }
    Ok(rows)
}

impl FromStr for EncoderSpec {
    type Err = EncoderError;

    /// Register lengths are inferred from the longest generator of each row.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let entries = parse_octal_entries(s)?;
        let memories: Vec<usize> = entries
            .iter()
            .map(|row| {
                let bits = row
                    .iter()
                    .map(|g| 64 - g.leading_zeros() as usize)
                    .max()
                    .unwrap_or(0);
                bits.saturating_sub(1)
            })
            .collect();
        Self::from_octal_entries(&memories, &entries)
    }
}

impl fmt::Display for EncoderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .octal_entries()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|g| format!("{g:o}"))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "[{}]", rows.join(";"))
    }
}

impl fmt::Debug for EncoderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EncoderSpec{self}{:?}", self.memories)
    }
}

#[derive(Serialize, Deserialize)]
struct EncoderRepr {
    octal: String,
    memories: Vec<usize>,
}

impl Serialize for EncoderSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        EncoderRepr {
            octal: self.to_string(),
            memories: self.memories.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for EncoderSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = EncoderRepr::deserialize(d)?;
        Self::parse_with_memories(&r.octal, &r.memories).map_err(serde::de::Error::custom)
    }
}

/// Complete branch table of an encoder.
#[derive(Clone, Debug)]
pub struct Trellis {
    k: usize,
    m: usize,
    nu: usize,
    next: Vec<u32>,
    output: Vec<u16>,
}

impl Trellis {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn num_states(&self) -> usize {
        1 << self.nu
    }

    pub fn num_inputs(&self) -> usize {
        1 << self.k
    }

    pub fn num_branches(&self) -> usize {
        self.next.len()
    }

    #[inline]
    pub fn next_state(&self, state: usize, input: usize) -> usize {
        self.next[(state << self.k) | input] as usize
    }

    #[inline]
    pub fn output(&self, state: usize, input: usize) -> usize {
        self.output[(state << self.k) | input] as usize
    }

    /// No cycle of zero-output branches other than the zero-input self-loop at state 0.
    pub fn is_noncatastrophic(&self) -> bool {
        let n = self.num_states();
        let inputs = self.num_inputs();
        let zero_edges =
            |s: usize| (0..inputs).filter(move |&a| !(s == 0 && a == 0) && self.output(s, a) == 0);
        // Kahn's algorithm on the zero-output subgraph: a leftover node lies on or
        // downstream of a cycle.
        let mut indegree = vec![0u32; n];
        for s in 0..n {
            for a in zero_edges(s) {
                indegree[self.next_state(s, a)] += 1;
            }
        }
        let mut queue: Vec<usize> = (0..n).filter(|&s| indegree[s] == 0).collect();
        let mut removed = 0;
        while let Some(s) = queue.pop() {
            removed += 1;
            for a in zero_edges(s) {
                let t = self.next_state(s, a);
                indegree[t] -= 1;
                if indegree[t] == 0 {
                    queue.push(t);
                }
            }
        }
        removed == n
    }
}

/// Ordered register splits `(nu_1, ..., nu_k)` with `sum = nu`, first register smallest first.
pub fn memory_splits(k: usize, nu: usize) -> Vec<Vec<usize>> {
    if k == 1 {
        return vec![vec![nu]];
    }
    let mut out = Vec::new();
    for first in 0..=nu {
        for mut rest in memory_splits(k - 1, nu - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Number of raw tap matrices for a split: `2^((nu + k) m)`.
pub fn raw_count(m: usize, memories: &[usize]) -> Result<u64, EncoderError> {
    let bits = (memories.iter().sum::<usize>() + memories.len()) * m;
    if bits >= 63 {
        return Err(EncoderError::Unsupported(format!(
            "{bits}-bit tap matrices"
        )));
    }
    Ok(1u64 << bits)
}

/// Streams the valid encoders of one split whose counter lies in a range.
///
/// The counter concatenates the octal entries row-major (input, then output),
/// so counting up visits tap matrices in lexicographic order of their entries.
#[derive(Clone, Debug)]
pub struct EncoderIter {
    m: usize,
    memories: Vec<usize>,
    counter: u64,
    end: u64,
}

impl EncoderIter {
    pub fn new(
        m: usize,
        memories: &[usize],
        range: std::ops::Range<u64>,
    ) -> Result<Self, EncoderError> {
        check_dims(memories.len(), m, memories.iter().sum())?;
        let total = raw_count(m, memories)?;
        Ok(Self {
            m,
            memories: memories.to_vec(),
            counter: range.start.min(total),
            end: range.end.min(total),
        })
    }

    /// Decodes a counter value into an encoder (no filtering).
    pub fn decode(m: usize, memories: &[usize], counter: u64) -> Result<EncoderSpec, EncoderError> {
        let mut entries = Vec::with_capacity(memories.len());
        let mut shift: usize = (memories.iter().sum::<usize>() + memories.len()) * m;
        for &np in memories {
            let width = np + 1;
            let row = (0..m)
                .map(|_| {
                    shift -= width;
                    (counter >> shift) & ((1 << width) - 1)
                })
                .collect();
            entries.push(row);
        }
        EncoderSpec::from_octal_entries(memories, &entries)
    }

    pub fn position(&self) -> u64 {
        self.counter
    }
}

impl Iterator for EncoderIter {
    /// Counter value and encoder.
    type Item = (u64, EncoderSpec);

    fn next(&mut self) -> Option<Self::Item> {
        while self.counter < self.end {
            let c = self.counter;
            self.counter += 1;
            let spec = Self::decode(self.m, &self.memories, c).expect("counter within range");
            if spec.is_valid() {
                return Some((c, spec));
            }
        }
        None
    }
}

/// All valid encoders for one split, in enumeration order.
pub fn enumerate_encoders(
    k: usize,
    m: usize,
    nu: usize,
    memories: &[usize],
) -> Result<EncoderIter, EncoderError> {
    if memories.len() != k || memories.iter().sum::<usize>() != nu {
        return Err(EncoderError::InconsistentMemory {
            split: memories.to_vec(),
            nu,
        });
    }
    EncoderIter::new(m, memories, 0..u64::MAX)
}

/// All valid encoders over every split, splits in [`memory_splits`] order.
pub fn enumerate_all(
    k: usize,
    m: usize,
    nu: usize,
) -> Result<impl Iterator<Item = EncoderSpec>, EncoderError> {
    let iters = memory_splits(k, nu)
        .into_iter()
        .map(|split| enumerate_encoders(k, m, nu, &split))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(iters.into_iter().flatten().map(|(_, spec)| spec))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enc(s: &str) -> EncoderSpec {
        s.parse().unwrap()
    }

    #[test]
    fn octal_round_trip() {
        for s in [
            "[13,4]",
            "[3,1]",
            "[1,1,1;2,31,0]",
            "[1,0,0;0,5,2]",
            "[13,17]",
        ] {
            assert_eq!(enc(s).to_string(), s);
        }
        let e = enc("[1,1,1;2,31,0]");
        assert_eq!(e.memories(), &[0, 4]);
        assert_eq!(e.taps().rows(), 6);
        assert_eq!(enc("[13,4]").memories(), &[3]);
        assert_eq!(enc(" [ 13 , 4 ] ").to_string(), "[13,4]");
        assert!("[8,1]".parse::<EncoderSpec>().is_err());
        assert!("[]".parse::<EncoderSpec>().is_err());
        assert!("[1,1;1]".parse::<EncoderSpec>().is_err());
        assert!(EncoderSpec::parse_with_memories("[7,1]", &[1]).is_err());
        let padded = EncoderSpec::parse_with_memories("[1,1,1;1,3,0]", &[0, 1]).unwrap();
        assert_eq!(padded.to_string(), "[1,1,1;1,3,0]");
    }

    #[test]
    fn encode_examples() {
        let e = enc("[13,4]");
        assert_eq!(e.encode(&[1, 0, 0, 0]), vec![0b10, 0b01, 0b10, 0b10]);
        assert_eq!(e.encode(&[0; 6]), vec![0; 6]);
        // Current-input tap is the most significant octal bit.
        assert_eq!(enc("[3,1]").encode(&[1, 0]), vec![0b10, 0b11]);
    }

    #[test]
    fn trellis_examples() {
        let t = enc("[3,1]").trellis();
        assert_eq!(t.next_state(0, 1), 1);
        assert_eq!(t.output(0, 1), 0b10);
        assert_eq!(t.num_branches(), 4);
        let t = EncoderSpec::parse_with_memories("[1,0;0,1]", &[0, 0])
            .unwrap()
            .trellis();
        assert_eq!(t.num_states(), 1);
        assert!((0..4).all(|a| t.next_state(0, a) == 0 && t.output(0, a) == a));
        let t = enc("[1,1,1;2,31,0]").trellis();
        assert_eq!(t.num_branches(), 16 * 4);
    }

    #[test]
    fn state_layout_two_inputs() {
        // Input 1 has 1 register bit, input 2 has 2; state bits = r1 | r2_new r2_old.
        let e = EncoderSpec::parse_with_memories("[3,0,0;0,7,0]", &[1, 2]).unwrap();
        let (s, _) = e.step(0, 0b10);
        assert_eq!(s, 0b100);
        let (s, _) = e.step(s, 0b01);
        assert_eq!(s, 0b010);
        let (s, _) = e.step(s, 0b00);
        assert_eq!(s, 0b001);
        let (s, _) = e.step(s, 0b00);
        assert_eq!(s, 0);
    }

    #[test]
    fn validity_examples() {
        assert!(enc("[13,17]").is_noncatastrophic());
        assert!(enc("[13,4]").is_noncatastrophic());
        assert!(!enc("[3,3]").is_noncatastrophic());
        assert!(enc("[1,0,0;0,5,2]").has_equally_likely_symbols());
        assert!(enc("[3,1]").has_equally_likely_symbols());
        assert!(!enc("[3,3]").has_equally_likely_symbols());
        assert!(!enc("[3,0]").is_valid());
        assert!(!EncoderSpec::parse_with_memories("[1,1]", &[1])
            .unwrap()
            .is_canonical());
        assert!(!EncoderSpec::parse_with_memories("[2,2]", &[1])
            .unwrap()
            .is_canonical());
        // Input 2 has no taps at all: two inputs give the same output.
        assert!(!enc("[1,1,1;0,0,0]").is_noncatastrophic());
    }

    #[test]
    fn gray_transform_example() {
        let t = gf2::gray_transform(2).unwrap();
        let tinv = gf2::invert(&t).unwrap();
        assert_eq!(enc("[13,17]").transformed(&tinv).unwrap(), enc("[13,4]"));
    }

    #[test]
    fn enumeration_contains_known() {
        let v: Vec<String> = enumerate_encoders(1, 2, 1, &[1])
            .unwrap()
            .map(|(_, e)| e.to_string())
            .collect();
        assert!(v.contains(&"[3,1]".to_string()));
        assert!(v
            .iter()
            .all(|s| s.parse::<EncoderSpec>().unwrap().is_valid()));
        let v: Vec<String> = enumerate_encoders(1, 2, 3, &[3])
            .unwrap()
            .map(|(_, e)| e.to_string())
            .collect();
        assert!(v.contains(&"[13,4]".to_string()) && v.contains(&"[13,17]".to_string()));
        let v: Vec<EncoderSpec> = enumerate_encoders(2, 3, 1, &[0, 1])
            .unwrap()
            .map(|(_, e)| e)
            .collect();
        assert!(v.contains(&EncoderSpec::parse_with_memories("[1,1,1;1,3,0]", &[0, 1]).unwrap()));
        assert!(enumerate_encoders(2, 3, 2, &[0, 1]).is_err());
        assert_eq!(
            memory_splits(2, 2),
            vec![vec![0, 2], vec![1, 1], vec![2, 0]]
        );
    }

    #[test]
    fn enumeration_is_ordered() {
        let counters: Vec<u64> = enumerate_encoders(1, 2, 2, &[2])
            .unwrap()
            .map(|(c, _)| c)
            .collect();
        assert!(counters.windows(2).all(|w| w[0] < w[1]));
        let entries: Vec<Vec<Vec<u64>>> = enumerate_encoders(1, 2, 2, &[2])
            .unwrap()
            .map(|(_, e)| e.octal_entries())
            .collect();
        assert!(entries.windows(2).all(|w| w[0] < w[1]));
        for (c, e) in enumerate_encoders(2, 3, 1, &[1, 0]).unwrap() {
            assert_eq!(EncoderIter::decode(3, &[1, 0], c).unwrap(), e);
        }
    }
}
