//! Exact truncated distance spectra of TCM encoders and their partial order.
//!
//! The enumeration runs best-first over pairs of encoder states. Every pair of
//! paths that leaves a common state and has not yet remerged is represented by
//! the pair of its current states; pairs reaching the same state pair at the
//! same accumulated distance share all continuations, so their masses are added.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::constellation::{squared_distance, Constellation};
use crate::dyadic::Dyadic;
use crate::encoder::{EncoderSpec, Trellis};
use crate::error::SpectrumError;
use crate::gf2::BitMatrix;
use crate::labeling::Labeling;

/// Number of spectral lines compared when ranking encoders.
pub const SEARCH_TERMS: usize = 5;
/// Number of spectral lines used for error bounds.
pub const BOUND_TERMS: usize = 20;
/// Event-length cap applied to catastrophic encoders.
pub const DEFAULT_MAX_EVENT_LENGTH: usize = 64;
/// Largest memory accepted by the enumeration.
pub const MAX_SPECTRUM_MEMORY: usize = 16;

const REL_TOL: f64 = 1e-9;

/// Two accumulated squared distances belong to the same spectral line.
pub fn same_distance(a: f64, b: f64) -> bool {
    (a - b).abs() <= REL_TOL * a.abs().max(b.abs()).max(1.0)
}

fn tol(d: f64) -> f64 {
    REL_TOL * d.abs().max(1.0)
}

/// A convolutional encoder, a labeling and a constellation.
#[derive(Clone, Debug)]
pub struct TcmEncoder {
    spec: EncoderSpec,
    labeling: Labeling,
    constellation: Constellation,
}

impl TcmEncoder {
    pub fn new(
        spec: EncoderSpec,
        labeling: Labeling,
        constellation: Constellation,
    ) -> Result<Self, SpectrumError> {
        if spec.m() != labeling.order() {
            return Err(SpectrumError::OutputMismatch {
                labeling: labeling.order(),
                encoder: spec.m(),
            });
        }
        if constellation.size() != labeling.size() {
            return Err(SpectrumError::SizeMismatch {
                constellation: constellation.size(),
                labeling: labeling.size(),
            });
        }
        Ok(Self {
            spec,
            labeling,
            constellation,
        })
    }

    pub fn spec(&self) -> &EncoderSpec {
        &self.spec
    }

    pub fn labeling(&self) -> &Labeling {
        &self.labeling
    }

    pub fn constellation(&self) -> &Constellation {
        &self.constellation
    }

    /// Symbol indices transmitted for a sequence of input words.
    pub fn symbols(&self, inputs: &[usize]) -> Vec<usize> {
        let inv = self.labeling.inverse();
        self.spec
            .encode(inputs)
            .into_iter()
            .map(|u| inv[u])
            .collect()
    }

    /// The equivalent encoder `[G T, L T]`.
    pub fn transformed(&self, t: &BitMatrix) -> Result<Self, SpectrumError> {
        let spec = self
            .spec
            .transformed(t)
            .map_err(|e| SpectrumError::Transform(e.to_string()))?;
        let labeling = self
            .labeling
            .transformed(t)
            .map_err(|e| SpectrumError::Transform(e.to_string()))?;
        Self::new(spec, labeling, self.constellation.clone())
    }

    /// Squared distance between the symbols carrying labels `u` and `v`, for all label pairs.
    pub fn label_distance_table(&self) -> Vec<f64> {
        let inv = self.labeling.inverse();
        let size = self.labeling.size();
        let mut t = vec![0.0; size * size];
        for u in 0..size {
            for v in 0..size {
                t[u * size + v] = squared_distance(
                    self.constellation.point(inv[u]),
                    self.constellation.point(inv[v]),
                );
            }
        }
        t
    }
}

/// One spectral line: distance, event multiplicity `A`, and `W = k B`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectrumLine {
    pub d2: f64,
    pub a: Dyadic,
    /// Input-weighted multiplicity; the bit multiplicity is `w / k`.
    pub w: Dyadic,
}

/// Truncated distance spectrum `{d^2, A, B}`.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceSpectrum {
    k: usize,
    lines: Vec<SpectrumLine>,
    truncation: usize,
    converged: bool,
    exact: bool,
    residual: f64,
    energy: f64,
}

impl DistanceSpectrum {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lines(&self) -> &[SpectrumLine] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// Requested number of lines.
    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// False when the event-length cap cut off part of the mass.
    pub fn converged(&self) -> bool {
        self.converged
    }

    /// False when some multiplicity lost low-order bits.
    pub fn exact(&self) -> bool {
        self.exact
    }

    /// Upper bound on the multiplicity mass discarded by the event-length cap.
    pub fn residual(&self) -> f64 {
        self.residual
    }

    /// Average symbol energy of the constellation used.
    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn d2(&self, i: usize) -> f64 {
        self.lines[i].d2
    }

    pub fn a(&self, i: usize) -> f64 {
        self.lines[i].a.to_f64()
    }

    pub fn b(&self, i: usize) -> f64 {
        self.lines[i].w.to_f64() / self.k as f64
    }

    /// Exact bit multiplicity as `numerator/denominator`.
    pub fn b_exact(&self, i: usize) -> String {
        let w = self.lines[i].w;
        let g = gcd(w.mantissa(), self.k as u128);
        let num = w.mantissa() / g;
        let den = (num_bigint::BigUint::from(1u8) << w.exponent()) * (self.k as u128 / g);
        if den == num_bigint::BigUint::from(1u8) {
            num.to_string()
        } else {
            format!("{num}/{den}")
        }
    }

    /// Copy keeping only the first `n` lines.
    pub fn truncated(&self, n: usize) -> Self {
        let mut s = self.clone();
        s.lines.truncate(n);
        s.truncation = s.truncation.min(n);
        s
    }

    /// Copy with every distance multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        let mut s = self.clone();
        for l in &mut s.lines {
            l.d2 *= factor;
        }
        s.energy *= factor;
        s
    }

    /// Spectrum from given lines, treated as converged and exact.
    pub fn from_lines(k: usize, lines: Vec<SpectrumLine>, energy: f64) -> Self {
        Self {
            k,
            truncation: lines.len(),
            lines,
            converged: true,
            exact: true,
            residual: 0.0,
            energy,
        }
    }

    /// Terms as `(d2, A, B)` floats.
    pub fn triples(&self) -> Vec<(f64, f64, f64)> {
        (0..self.len())
            .map(|i| (self.d2(i), self.a(i), self.b(i)))
            .collect()
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

#[derive(Serialize)]
struct TermRepr {
    d2: f64,
    #[serde(rename = "A")]
    a: f64,
    #[serde(rename = "B")]
    b: f64,
    #[serde(rename = "A_exact")]
    a_exact: String,
    #[serde(rename = "B_exact")]
    b_exact: String,
}

impl Serialize for DistanceSpectrum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = (0..self.len())
            .map(|i| TermRepr {
                d2: self.d2(i),
                a: self.a(i),
                b: self.b(i),
                a_exact: self.lines[i].a.to_string(),
                b_exact: self.b_exact(i),
            })
            .collect();
        let mut st = s.serialize_struct("DistanceSpectrum", 6)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("truncation", &self.truncation)?;
        st.serialize_field("converged", &self.converged)?;
        st.serialize_field("exact", &self.exact)?;
        st.serialize_field("residual", &self.residual)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// Outcome of comparing two spectra line by line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    /// The first spectrum is superior.
    Superior,
    /// The second spectrum is superior.
    Inferior,
    /// Neither is superior.
    Incomparable,
    /// All compared lines coincide.
    Equal,
}

/// Compares the common prefix of two line lists; `Equal` means undecided so far.
pub fn compare_lines(x: &[SpectrumLine], kx: usize, y: &[SpectrumLine], ky: usize) -> Dominance {
    for (p, q) in x.iter().zip(y) {
        if !same_distance(p.d2, q.d2) {
            return if p.d2 > q.d2 {
                Dominance::Superior
            } else {
                Dominance::Inferior
            };
        }
        let ca = p.a.cmp(&q.a);
        let cb = if kx == ky {
            p.w.cmp(&q.w)
        } else {
            p.w.cmp_scaled(ky as u64, &q.w, kx as u64)
        };
        match (ca, cb) {
            (Ordering::Equal, Ordering::Equal) => continue,
            (Ordering::Less, Ordering::Less) => return Dominance::Superior,
            (Ordering::Greater, Ordering::Greater) => return Dominance::Inferior,
            _ => return Dominance::Incomparable,
        }
    }
    Dominance::Equal
}

pub fn compare(a: &DistanceSpectrum, b: &DistanceSpectrum) -> Dominance {
    compare_lines(&a.lines, a.k, &b.lines, b.k)
}

/// True iff `a` has a superior spectrum to `b`.
pub fn is_superior(a: &DistanceSpectrum, b: &DistanceSpectrum) -> bool {
    compare(a, b) == Dominance::Superior
}

#[derive(Clone, Copy, Debug)]
pub struct SpectrumOptions {
    /// Number of distinct distances to compute.
    pub terms: usize,
    /// Event-length cap, used only for catastrophic encoders.
    pub max_event_length: usize,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        Self {
            terms: SEARCH_TERMS,
            max_event_length: DEFAULT_MAX_EVENT_LENGTH,
        }
    }
}

#[derive(Clone, Copy, Default)]
struct Mass {
    a: Dyadic,
    w: Dyadic,
}

/// Ordered key for nonnegative finite floats.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Key(u64);

impl Key {
    fn of(d: f64) -> Self {
        Key(d.max(0.0).to_bits())
    }

    fn value(self) -> f64 {
        f64::from_bits(self.0)
    }
}

fn cluster_key<V>(map: &BTreeMap<Key, V>, d: f64) -> Key {
    let t = tol(d);
    map.range(Key::of(d - t)..=Key::of(d + t))
        .next()
        .map(|(k, _)| *k)
        .unwrap_or(Key::of(d))
}

/// Produces spectral lines one at a time, in increasing distance.
pub struct SpectrumEnumerator {
    trellis: Trellis,
    k: usize,
    states: usize,
    labels: usize,
    sed: Vec<f64>,
    unit: f64,
    energy: f64,
    capped: bool,
    max_len: usize,
    terms: usize,
    emitted: usize,
    buckets: BTreeMap<Key, HashMap<u64, Mass>>,
    lines: BTreeMap<Key, Mass>,
    truncated: bool,
    exact: bool,
    floor: f64,
    below_floor: bool,
}

impl SpectrumEnumerator {
    pub fn new(enc: &TcmEncoder, opts: SpectrumOptions) -> Result<Self, SpectrumError> {
        if opts.terms == 0 {
            return Err(SpectrumError::ZeroTruncation);
        }
        let spec = enc.spec();
        if spec.nu() > MAX_SPECTRUM_MEMORY {
            return Err(SpectrumError::TooLarge(format!(
                "memory {} exceeds {MAX_SPECTRUM_MEMORY}",
                spec.nu()
            )));
        }
        let trellis = spec.trellis();
        let capped = !trellis.is_noncatastrophic();
        let raw = enc.label_distance_table();
        // Express distances in units of the smallest one when they are all integer
        // multiples of it, so that sums stay exact.
        let min = raw
            .iter()
            .copied()
            .filter(|&v| v > 0.0)
            .fold(f64::INFINITY, f64::min);
        let integral = raw.iter().all(|&v| {
            let r = v / min;
            (r - r.round()).abs() < 1e-9
        });
        let (sed, unit) = if integral && min.is_finite() {
            (raw.iter().map(|&v| (v / min).round()).collect(), min)
        } else {
            (raw, 1.0)
        };
        let mut e = Self {
            k: spec.k(),
            states: spec.num_states(),
            labels: enc.labeling().size(),
            trellis,
            sed,
            unit,
            energy: enc.constellation().average_energy(),
            capped,
            max_len: opts.max_event_length.clamp(1, 255),
            terms: opts.terms,
            emitted: 0,
            buckets: BTreeMap::new(),
            lines: BTreeMap::new(),
            truncated: false,
            exact: true,
            floor: 0.0,
            below_floor: false,
        };
        e.seed()?;
        Ok(e)
    }

    fn pair_key(&self, s: usize, t: usize, len: usize) -> u64 {
        let (lo, hi) = if s < t { (s, t) } else { (t, s) };
        (((lo * self.states + hi) as u64) << 8) | if self.capped { len as u64 } else { 0 }
    }

    fn unpack(&self, key: u64) -> (usize, usize, usize) {
        let idx = (key >> 8) as usize;
        (idx / self.states, idx % self.states, (key & 0xff) as usize)
    }

    fn add(&mut self, x: Dyadic, y: Dyadic) -> Dyadic {
        let (s, ok) = x.checked_add(y);
        self.exact &= ok;
        s
    }

    fn mul(&mut self, x: Dyadic, w: u32) -> Dyadic {
        let (s, ok) = x.checked_mul_int(w as u64);
        self.exact &= ok;
        s
    }

    fn seed(&mut self) -> Result<(), SpectrumError> {
        let inputs = self.trellis.num_inputs();
        // Both orderings of a branch pair map to the same unordered state pair.
        let base = Dyadic::new(2, (self.trellis.nu() + self.k) as u32);
        for s in 0..self.states {
            for a in 0..inputs {
                for b in a + 1..inputs {
                    let w = (a ^ b).count_ones();
                    let mass = Mass {
                        a: base,
                        w: self.mul(base, w),
                    };
                    if let Some((key, d, mass)) = self.transition(s, a, s, b, 0.0, 0, mass)? {
                        self.accumulate(key, d, mass);
                    }
                }
            }
        }
        Ok(())
    }

    fn cutoff(&self) -> f64 {
        let need = self.terms - self.emitted;
        if self.lines.len() >= need {
            let last = self
                .lines
                .keys()
                .nth(need - 1)
                .expect("enough lines")
                .value();
            last + tol(last)
        } else {
            f64::INFINITY
        }
    }

    /// Extends a pair of paths by one branch each; `mass` is already scaled for the new length.
    #[allow(clippy::too_many_arguments)]
    fn transition(
        &mut self,
        s: usize,
        a: usize,
        t: usize,
        b: usize,
        d: f64,
        len: usize,
        mass: Mass,
    ) -> Result<Option<(u64, f64, Mass)>, SpectrumError> {
        let ns = self.trellis.next_state(s, a);
        let nt = self.trellis.next_state(t, b);
        let step = self.sed[self.trellis.output(s, a) * self.labels + self.trellis.output(t, b)];
        let nd = d + step;
        if nd > self.cutoff() {
            return Ok(None);
        }
        if ns == nt {
            self.deposit(nd, mass)?;
            return Ok(None);
        }
        if self.capped && len + 1 >= self.max_len {
            self.truncated = true;
            return Ok(None);
        }
        let key = self.pair_key(ns, nt, len + 1);
        if step == 0.0 {
            return Ok(Some((key, nd, mass)));
        }
        self.accumulate(key, nd, mass);
        Ok(None)
    }

    fn accumulate(&mut self, key: u64, d: f64, mass: Mass) {
        let bk = cluster_key(&self.buckets, d);
        let entry = self.buckets.entry(bk).or_default().entry(key).or_default();
        let (na, ok1) = entry.a.checked_add(mass.a);
        let (nw, ok2) = entry.w.checked_add(mass.w);
        *entry = Mass { a: na, w: nw };
        self.exact &= ok1 && ok2;
    }

    fn deposit(&mut self, d: f64, mass: Mass) -> Result<(), SpectrumError> {
        if d <= tol(0.0) {
            return Err(SpectrumError::Degenerate);
        }
        let key = cluster_key(&self.lines, d);
        let cur = self.lines.get(&key).copied().unwrap_or_default();
        let merged = Mass {
            a: self.add(cur.a, mass.a),
            w: self.add(cur.w, mass.w),
        };
        self.lines.insert(key, merged);
        let need = self.terms - self.emitted;
        while self.lines.len() > need {
            self.lines.pop_last();
        }
        Ok(())
    }

    fn process_next_bucket(&mut self) -> Result<(), SpectrumError> {
        let Some((key, mut current)) = self.buckets.pop_first() else {
            return Ok(());
        };
        let d = key.value();
        if d > self.cutoff() {
            return Ok(());
        }
        let inputs = self.trellis.num_inputs();
        let k = self.k as u32;
        while !current.is_empty() {
            let mut zero: HashMap<u64, Mass> = HashMap::new();
            for (pk, mass) in current.drain() {
                let (s, t, len) = self.unpack(pk);
                for a in 0..inputs {
                    for b in 0..inputs {
                        let w = (a ^ b).count_ones();
                        let extra = self.mul(mass.a, w);
                        let nw = self.add(mass.w, extra);
                        let next = Mass {
                            a: mass.a.halve(k),
                            w: nw.halve(k),
                        };
                        if let Some((zk, _, zm)) = self.transition(s, a, t, b, d, len, next)? {
                            let e = zero.entry(zk).or_default();
                            let (na, ok1) = e.a.checked_add(zm.a);
                            let (nw, ok2) = e.w.checked_add(zm.w);
                            *e = Mass { a: na, w: nw };
                            self.exact &= ok1 && ok2;
                        }
                    }
                }
            }
            current = zero;
        }
        Ok(())
    }

    /// Stops the enumeration as soon as the first line is known to lie below `d2`.
    pub fn set_floor(&mut self, d2: f64) {
        self.floor = d2 / self.unit;
    }

    /// True once the first line was found below the floor; no further lines follow.
    pub fn below_floor(&self) -> bool {
        self.below_floor
    }

    /// Next spectral line, or `None` once the requested number has been produced.
    pub fn next_line(&mut self) -> Result<Option<SpectrumLine>, SpectrumError> {
        if self.emitted >= self.terms || self.below_floor {
            return Ok(None);
        }
        loop {
            if self.emitted == 0 {
                if let Some((&lk, _)) = self.lines.first_key_value() {
                    if lk.value() < self.floor - tol(self.floor) {
                        self.below_floor = true;
                        return Ok(None);
                    }
                }
            }
            if let Some((&lk, _)) = self.lines.first_key_value() {
                let l = lk.value();
                let open = self
                    .buckets
                    .first_key_value()
                    .is_some_and(|(bk, _)| bk.value() <= l + tol(l));
                if !open {
                    let (_, mass) = self.lines.pop_first().expect("line present");
                    self.emitted += 1;
                    return Ok(Some(SpectrumLine {
                        d2: l * self.unit,
                        a: mass.a,
                        w: mass.w,
                    }));
                }
            }
            if self.buckets.is_empty() {
                return Ok(None);
            }
            self.process_next_bucket()?;
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Collects the remaining lines into a spectrum.
    pub fn finish(
        mut self,
        mut lines: Vec<SpectrumLine>,
    ) -> Result<DistanceSpectrum, SpectrumError> {
        while let Some(l) = self.next_line()? {
            lines.push(l);
        }
        let residual = if self.truncated {
            let pairs = (self.states * (self.states - 1) / 2) as f64;
            (-((self.k * self.max_len) as f64)).exp2() * pairs
        } else {
            0.0
        };
        Ok(DistanceSpectrum {
            k: self.k,
            lines,
            truncation: self.terms,
            converged: !self.truncated,
            exact: self.exact,
            residual,
            energy: self.energy,
        })
    }
}

/// First `terms` lines of the distance spectrum.
pub fn distance_spectrum(
    enc: &TcmEncoder,
    terms: usize,
) -> Result<DistanceSpectrum, SpectrumError> {
    distance_spectrum_with(
        enc,
        SpectrumOptions {
            terms,
            ..SpectrumOptions::default()
        },
    )
}

pub fn distance_spectrum_with(
    enc: &TcmEncoder,
    opts: SpectrumOptions,
) -> Result<DistanceSpectrum, SpectrumError> {
    SpectrumEnumerator::new(enc, opts)?.finish(Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constellation::{mpam, mpsk};
    use crate::labeling::nbc;

    fn tcm(g: &str, l: &str, x: Constellation) -> TcmEncoder {
        TcmEncoder::new(g.parse().unwrap(), l.parse().unwrap(), x).unwrap()
    }

    fn assert_rows(s: &DistanceSpectrum, want: &[(f64, f64, f64)]) {
        assert_eq!(s.len(), want.len());
        for (i, &(d, a, b)) in want.iter().enumerate() {
            let (gd, ga, gb) = (s.d2(i), s.a(i), s.b(i));
            assert!(
                (gd - d).abs() < 0.005 && (ga - a).abs() < 0.005 && (gb - b).abs() < 0.005,
                "line {i}: got ({gd}, {ga}, {gb}), want ({d}, {a}, {b})"
            );
        }
    }

    #[test]
    fn small_pam_by_hand() {
        let s = distance_spectrum(&tcm("[3,1]", "0 1 2 3", mpam(4).unwrap()), 1).unwrap();
        assert_rows(&s, &[(4.0, 0.5, 0.5)]);
        assert_eq!(s.lines()[0].a, Dyadic::new(1, 1));
        assert!(s.converged() && s.exact());
    }

    #[test]
    // 3.14 is a printed multiplicity, not pi.
    #[allow(clippy::approx_constant)]
    fn reference_examples() {
        let s = distance_spectrum(&tcm("[13,4]", "0 1 2 3", mpam(4).unwrap()), 5).unwrap();
        assert_rows(
            &s,
            &[
                (8.0, 0.25, 0.5),
                (8.8, 1.0, 3.0),
                (9.6, 1.5625, 6.25),
                (10.4, 2.75, 9.75),
                (11.2, 3.14, 16.84),
            ],
        );
        let s = distance_spectrum(
            &tcm("[1,0,0;0,5,2]", "0 1 2 3 4 5 6 7", mpsk(8).unwrap()),
            3,
        )
        .unwrap();
        assert_rows(&s, &[(4.0, 1.0, 0.5), (4.59, 4.0, 4.0), (5.17, 8.0, 14.0)]);
        let enc = TcmEncoder::new(
            EncoderSpec::parse_with_memories("[1,1,1;1,3,0]", &[0, 1]).unwrap(),
            "1 2 4 0 6 5 3 7".parse().unwrap(),
            mpam(8).unwrap(),
        )
        .unwrap();
        let s = distance_spectrum(&enc, 2).unwrap();
        assert_rows(&s, &[(0.95, 1.13, 0.84), (1.14, 1.13, 1.69)]);
    }

    #[test]
    fn superiority() {
        let x = mpam(4).unwrap();
        let a = distance_spectrum(&tcm("[7,2]", "0 1 2 3", x.clone()), 5).unwrap();
        let b = distance_spectrum(&tcm("[5,2]", "0 1 2 3", x.clone()), 5).unwrap();
        assert!(same_distance(a.d2(0), 7.2) && same_distance(b.d2(0), 7.2));
        assert!(is_superior(&a, &b));
        assert!(!is_superior(&b, &a));
        assert!(!is_superior(&a, &a));
        let c = distance_spectrum(&tcm("[45,10]", "0 1 2 3", x.clone()), 5).unwrap();
        let d = distance_spectrum(&tcm("[55,4]", "0 1 2 3", x), 5).unwrap();
        assert!(!is_superior(&c, &d) && !is_superior(&d, &c));
    }

    #[test]
    fn catastrophic_is_capped() {
        let enc = tcm("[3,3]", "0 1 2 3", mpam(4).unwrap());
        let opts = SpectrumOptions {
            terms: 2,
            max_event_length: 20,
        };
        let s = distance_spectrum_with(&enc, opts).unwrap();
        assert!(!s.converged());
        assert!(s.residual() > 0.0);
        // Every diverged continuation has zero distance, so all events sit at one line.
        assert_eq!(s.len(), 1);
        assert!(same_distance(s.d2(0), 14.4));
    }

    #[test]
    fn mismatches_rejected() {
        let spec: EncoderSpec = "[3,1]".parse().unwrap();
        assert!(matches!(
            TcmEncoder::new(spec.clone(), nbc(3).unwrap(), mpsk(8).unwrap()),
            Err(SpectrumError::OutputMismatch { .. })
        ));
        assert!(matches!(
            TcmEncoder::new(spec, nbc(2).unwrap(), mpsk(8).unwrap()),
            Err(SpectrumError::SizeMismatch { .. })
        ));
        let enc = tcm("[3,1]", "0 1 2 3", mpam(4).unwrap());
        assert_eq!(
            distance_spectrum(&enc, 0),
            Err(SpectrumError::ZeroTruncation)
        );
    }
}
