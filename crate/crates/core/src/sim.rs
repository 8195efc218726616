//! Maximum-likelihood (Viterbi) decoding and Monte-Carlo error-rate estimation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{ber_bound, fer_bound, ChannelConfig};
use crate::encoder::Trellis;
use crate::error::ChannelError;
use crate::spectrum::{DistanceSpectrum, TcmEncoder};

/// Viterbi decoder for a fixed TCM encoder.
#[derive(Clone, Debug)]
pub struct ViterbiDecoder {
    trellis: Trellis,
    /// Points indexed by label, flattened.
    label_points: Vec<f64>,
    dim: usize,
    labels: usize,
}

impl ViterbiDecoder {
    pub fn new(enc: &TcmEncoder) -> Self {
        let inv = enc.labeling().inverse();
        let x = enc.constellation();
        let label_points = inv
            .iter()
            .flat_map(|&q| x.point(q).iter().copied())
            .collect();
        Self {
            trellis: enc.spec().trellis(),
            label_points,
            dim: x.dim(),
            labels: inv.len(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Input words of the path closest to `received` (flattened, `dim` values per
    /// symbol). The path starts in state 0. When `terminated`, the last `nu`
    /// input words are zero, which also returns it to state 0.
    ///
    /// Ties keep the lowest predecessor state, then the lowest input word.
    pub fn decode_flat(
        &self,
        received: &[f64],
        terminated: bool,
    ) -> Result<Vec<usize>, ChannelError> {
        if !received.len().is_multiple_of(self.dim) {
            return Err(ChannelError::DimensionMismatch {
                got: received.len() % self.dim,
                expected: self.dim,
            });
        }
        let steps = received.len() / self.dim;
        let states = self.trellis.num_states();
        let inputs = self.trellis.num_inputs();
        let mut metric = vec![f64::INFINITY; states];
        metric[0] = 0.0;
        let mut next_metric = vec![f64::INFINITY; states];
        let mut survivors = vec![0u32; steps * states];
        let mut branch = vec![0.0; self.labels];
        for n in 0..steps {
            let y = &received[n * self.dim..(n + 1) * self.dim];
            for (u, b) in branch.iter_mut().enumerate() {
                let p = &self.label_points[u * self.dim..(u + 1) * self.dim];
                *b = y.iter().zip(p).map(|(a, c)| (a - c) * (a - c)).sum();
            }
            next_metric.fill(f64::INFINITY);
            let row = &mut survivors[n * states..(n + 1) * states];
            // Registers without memory would otherwise leave flush inputs free.
            let allowed = if terminated && n + self.trellis.nu() >= steps {
                1
            } else {
                inputs
            };
            for s in 0..states {
                let m = metric[s];
                if m == f64::INFINITY {
                    continue;
                }
                for a in 0..allowed {
                    let t = self.trellis.next_state(s, a);
                    let cand = m + branch[self.trellis.output(s, a)];
                    if cand < next_metric[t] {
                        next_metric[t] = cand;
                        row[t] = ((s << self.trellis.k()) | a) as u32;
                    }
                }
            }
            std::mem::swap(&mut metric, &mut next_metric);
        }
        let mut state = if terminated {
            0
        } else {
            // Lowest index among the best final states.
            let best = metric.iter().copied().fold(f64::INFINITY, f64::min);
            metric.iter().position(|&m| m == best).unwrap_or(0)
        };
        let mut out = vec![0usize; steps];
        for n in (0..steps).rev() {
            let packed = survivors[n * states + state] as usize;
            out[n] = packed & (inputs - 1);
            state = packed >> self.trellis.k();
        }
        Ok(out)
    }

    /// Information words of a terminated frame: `received` holds the symbols of
    /// the frame followed by `nu` flush symbols.
    pub fn decode(&self, received: &[Vec<f64>]) -> Result<Vec<usize>, ChannelError> {
        if let Some(p) = received.iter().find(|p| p.len() != self.dim) {
            return Err(ChannelError::DimensionMismatch {
                got: p.len(),
                expected: self.dim,
            });
        }
        let nu = self.trellis.nu();
        if received.len() < nu {
            return Err(ChannelError::LengthMismatch {
                got: received.len(),
                expected: nu,
            });
        }
        let flat: Vec<f64> = received.iter().flatten().copied().collect();
        let mut words = self.decode_flat(&flat, true)?;
        words.truncate(received.len() - nu);
        Ok(words)
    }
}

/// ML decoding of one terminated frame (see [`ViterbiDecoder::decode`]).
pub fn viterbi_decode(enc: &TcmEncoder, received: &[Vec<f64>]) -> Result<Vec<usize>, ChannelError> {
    ViterbiDecoder::new(enc).decode(received)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimOptions {
    /// Stop once this many frames were in error.
    pub target_frame_errors: u64,
    /// Stop after this many frames regardless.
    pub max_frames: u64,
    pub seed: u64,
    /// Frames decoded per parallel batch; does not affect results.
    pub batch: u64,
}

impl Default for SimOptions {
    fn default() -> Self {
        Self {
            target_frame_errors: 100,
            max_frames: 1_000_000,
            seed: 1,
            batch: 256,
        }
    }
}

/// Simulated error rates with 3-sigma binomial half-widths.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorRates {
    pub ber: f64,
    pub ber_ci: f64,
    pub fer: f64,
    pub fer_ci: f64,
    pub frames: u64,
    pub frame_errors: u64,
    pub bit_errors: u64,
    pub bits: u64,
}

impl ErrorRates {
    fn from_counts(frames: u64, frame_errors: u64, bit_errors: u64, bits: u64) -> Self {
        let rate = |e: u64, n: u64| if n == 0 { 0.0 } else { e as f64 / n as f64 };
        let half = |p: f64, n: u64| {
            if n == 0 {
                0.0
            } else {
                3.0 * (p * (1.0 - p) / n as f64).sqrt()
            }
        };
        let ber = rate(bit_errors, bits);
        let fer = rate(frame_errors, frames);
        Self {
            ber,
            ber_ci: half(ber, bits),
            fer,
            fer_ci: half(fer, frames),
            frames,
            frame_errors,
            bit_errors,
            bits,
        }
    }
}

/// Standard normal pair by the Box-Muller transform.
fn gaussian_pair(rng: &mut ChaCha8Rng) -> (f64, f64) {
    // 1 - U lies in (0, 1], so the logarithm is finite.
    let u1: f64 = 1.0 - rng.gen::<f64>();
    let u2: f64 = rng.gen::<f64>();
    let r = (-2.0 * u1.ln()).sqrt();
    let (s, c) = (2.0 * std::f64::consts::PI * u2).sin_cos();
    (r * c, r * s)
}

/// Bit errors in one frame; the generator depends only on `(seed, frame)`.
fn run_frame(
    enc: &TcmEncoder,
    dec: &ViterbiDecoder,
    sigma: f64,
    ns: usize,
    seed: u64,
    frame: u64,
) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(frame);
    let k = enc.spec().k();
    let nu = enc.spec().nu();
    let mut words: Vec<usize> = (0..ns).map(|_| rng.gen_range(0..1usize << k)).collect();
    words.extend(std::iter::repeat_n(0, nu));
    let symbols = enc.symbols(&words);
    let dim = dec.dim();
    let mut received = Vec::with_capacity(symbols.len() * dim);
    let mut spare = None;
    for &q in &symbols {
        for &c in enc.constellation().point(q) {
            let z = match spare.take() {
                Some(z) => z,
                None => {
                    let (a, b) = gaussian_pair(&mut rng);
                    spare = Some(b);
                    a
                }
            };
            received.push(c + sigma * z);
        }
    }
    let decoded = dec.decode_flat(&received, true).expect("dimension matches");
    words[..ns]
        .iter()
        .zip(&decoded[..ns])
        .map(|(a, b)| (a ^ b).count_ones() as u64)
        .sum()
}

/// Monte-Carlo BER/FER of terminated frames of `N_s` information words.
///
/// Results depend only on the seed and options, not on the batch size or thread count.
pub fn simulate(enc: &TcmEncoder, ch: &ChannelConfig, opts: &SimOptions) -> ErrorRates {
    let dec = ViterbiDecoder::new(enc);
    let energy = enc.constellation().average_energy();
    let sigma = (ch.n0(energy) / 2.0).sqrt();
    let ns = ch.block_length();
    let k = enc.spec().k() as u64;
    let batch = opts.batch.max(1);
    let (mut frames, mut frame_errors, mut bit_errors) = (0u64, 0u64, 0u64);
    'outer: while frames < opts.max_frames && frame_errors < opts.target_frame_errors {
        let end = (frames + batch).min(opts.max_frames);
        let results: Vec<u64> = (frames..end)
            .into_par_iter()
            .map(|f| run_frame(enc, &dec, sigma, ns, opts.seed, f))
            .collect();
        for errs in results {
            frames += 1;
            bit_errors += errs;
            frame_errors += (errs > 0) as u64;
            if frame_errors >= opts.target_frame_errors {
                break 'outer;
            }
        }
    }
    ErrorRates::from_counts(frames, frame_errors, bit_errors, frames * ns as u64 * k)
}

/// One point of a bound/simulation sweep.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub esn0_db: f64,
    pub ber_bound: f64,
    pub fer_bound: f64,
    pub sim: Option<ErrorRates>,
}

pub const SWEEP_CSV_HEADER: &str =
    "esn0_db,ber_bound,fer_bound,ber_sim,ber_ci,fer_sim,fer_ci,frames";

impl SweepRow {
    pub fn csv_line(&self) -> String {
        let sim = match &self.sim {
            Some(r) => format!(
                "{:e},{:e},{:e},{:e},{}",
                r.ber, r.ber_ci, r.fer, r.fer_ci, r.frames
            ),
            None => ",,,,".to_string(),
        };
        format!(
            "{},{:e},{:e},{sim}",
            self.esn0_db, self.ber_bound, self.fer_bound
        )
    }
}

/// Bounds (and optionally simulations) over a list of SNRs in dB.
pub fn sweep(
    enc: &TcmEncoder,
    ds: &DistanceSpectrum,
    esn0_db: &[f64],
    block_length: usize,
    sim: Option<&SimOptions>,
) -> Result<Vec<SweepRow>, ChannelError> {
    esn0_db
        .iter()
        .map(|&db| {
            let ch = ChannelConfig::from_db(db, block_length)?;
            Ok(SweepRow {
                esn0_db: db,
                ber_bound: ber_bound(ds, &ch),
                fer_bound: fer_bound(ds, &ch),
                sim: sim.map(|o| simulate(enc, &ch, o)),
            })
        })
        .collect()
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut s = String::from(SWEEP_CSV_HEADER);
    s.push('\n');
    for r in rows {
        s.push_str(&r.csv_line());
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::q_function;
    use crate::constellation::{mpam, mpsk};
    use crate::encoder::EncoderSpec;

    fn tcm(g: &str, l: &str, x: crate::constellation::Constellation) -> TcmEncoder {
        TcmEncoder::new(g.parse().unwrap(), l.parse().unwrap(), x).unwrap()
    }

    #[test]
    fn noiseless_decoding() {
        let enc = tcm("[13,4]", "0 1 2 3", mpam(4).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut words: Vec<usize> = (0..40).map(|_| rng.gen_range(0..2)).collect();
        words.extend([0, 0, 0]);
        let rx: Vec<Vec<f64>> = enc
            .symbols(&words)
            .iter()
            .map(|&q| enc.constellation().point(q).to_vec())
            .collect();
        assert_eq!(viterbi_decode(&enc, &rx).unwrap(), words[..40].to_vec());
    }

    #[test]
    fn small_perturbation_corrected() {
        let enc = tcm("[1,0,0;0,5,2]", "0 1 2 3 4 5 6 7", mpsk(8).unwrap());
        let words = vec![3, 1, 2, 0, 2, 1, 0, 0];
        let mut rx: Vec<Vec<f64>> = enc
            .symbols(&words)
            .iter()
            .map(|&q| enc.constellation().point(q).to_vec())
            .collect();
        // Half the free distance is 1.0; move one symbol by 0.9 towards a neighbour.
        let q = enc.symbols(&words)[3];
        let nb = enc.constellation().point((q + 1) % 8).to_vec();
        let dir: Vec<f64> = nb.iter().zip(&rx[3]).map(|(a, b)| a - b).collect();
        let len = dir.iter().map(|v| v * v).sum::<f64>().sqrt();
        for (r, d) in rx[3].iter_mut().zip(&dir) {
            *r += 0.9 * d / len;
        }
        assert_eq!(viterbi_decode(&enc, &rx).unwrap(), words[..6].to_vec());
    }

    #[test]
    fn ties_pick_lowest_state() {
        // Memoryless 2PAM with the received point exactly between the symbols.
        let enc = TcmEncoder::new(
            EncoderSpec::parse_with_memories("[1]", &[0]).unwrap(),
            "0 1".parse().unwrap(),
            mpam(2).unwrap(),
        )
        .unwrap();
        assert_eq!(viterbi_decode(&enc, &[vec![0.0]]).unwrap(), vec![0]);
        assert!(viterbi_decode(&enc, &[vec![0.0, 1.0]]).is_err());
    }

    #[test]
    fn uncoded_matches_closed_form() {
        let enc = TcmEncoder::new(
            EncoderSpec::parse_with_memories("[1]", &[0]).unwrap(),
            "0 1".parse().unwrap(),
            mpam(2).unwrap(),
        )
        .unwrap();
        let ch = ChannelConfig::from_db(3.0, 100).unwrap();
        let r = simulate(
            &enc,
            &ch,
            &SimOptions {
                target_frame_errors: 1000,
                max_frames: 2000,
                seed: 3,
                batch: 64,
            },
        );
        let p = q_function((2.0 * ch.es_over_n0()).sqrt());
        assert!(
            (r.ber - p).abs() <= r.ber_ci,
            "ber {} vs {p} +- {}",
            r.ber,
            r.ber_ci
        );
    }

    #[test]
    fn reproducible_and_noiseless() {
        let enc = tcm("[13,4]", "0 1 2 3", mpam(4).unwrap());
        let ch = ChannelConfig::from_db(8.0, 50).unwrap();
        let a = simulate(
            &enc,
            &ch,
            &SimOptions {
                target_frame_errors: 20,
                max_frames: 400,
                seed: 9,
                batch: 16,
            },
        );
        let b = simulate(
            &enc,
            &ch,
            &SimOptions {
                target_frame_errors: 20,
                max_frames: 400,
                seed: 9,
                batch: 100,
            },
        );
        assert_eq!(a, b);
        let ch = ChannelConfig::new(1e12, 50).unwrap();
        let r = simulate(
            &enc,
            &ch,
            &SimOptions {
                target_frame_errors: 1,
                max_frames: 50,
                seed: 1,
                batch: 8,
            },
        );
        assert_eq!((r.ber, r.fer, r.frames), (0.0, 0.0, 50));
    }
}
