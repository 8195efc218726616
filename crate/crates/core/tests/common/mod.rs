#![allow(dead_code)]

use num_rational::Ratio;
use tcm_core::constellation::squared_distance;
use tcm_core::dyadic::Dyadic;
use tcm_core::spectrum::TcmEncoder;

/// Spectrum line from the path-pair oracle: distance in units, `A`, `W`.
#[derive(Clone, Debug, PartialEq)]
pub struct OracleLine {
    pub units: u64,
    pub a: Ratio<u128>,
    pub w: Ratio<u128>,
}

pub struct OracleSpectrum {
    /// Lines strictly below `open`, in increasing distance.
    pub lines: Vec<OracleLine>,
    /// Smallest distance of a path pair still unmerged at the length limit.
    pub open: u64,
}

/// Squared distances between labels as integer multiples of `unit`.
fn unit_table(enc: &TcmEncoder, unit: f64) -> Vec<u64> {
    let inv = enc.labeling().inverse();
    let x = enc.constellation();
    let n = inv.len();
    let mut t = vec![0; n * n];
    for u in 0..n {
        for v in 0..n {
            let r = squared_distance(x.point(inv[u]), x.point(inv[v])) / unit;
            assert!(
                (r - r.round()).abs() < 1e-9,
                "distances are not integer multiples of {unit}"
            );
            t[u * n + v] = r.round() as u64;
        }
    }
    t
}

/// Enumerates every ordered pair of paths that leave a common state with
/// different inputs, up to `max_len` branches and distance `max_units`.
pub fn brute_force_spectrum(
    enc: &TcmEncoder,
    unit: f64,
    max_units: u64,
    max_len: usize,
) -> OracleSpectrum {
    let spec = enc.spec();
    let table = unit_table(enc, unit);
    let labels = enc.labeling().size();
    let k = spec.k();
    let inputs = 1usize << k;
    let mut acc: std::collections::BTreeMap<u64, (Ratio<u128>, Ratio<u128>)> = Default::default();
    let mut open = u64::MAX;
    struct Walk<'a> {
        spec: &'a tcm_core::encoder::EncoderSpec,
        table: &'a [u64],
        labels: usize,
        inputs: usize,
        max_units: u64,
        max_len: usize,
        denom0: u128,
    }
    fn go(
        w: &Walk,
        s: usize,
        t: usize,
        d: u64,
        len: usize,
        weight: u32,
        acc: &mut std::collections::BTreeMap<u64, (Ratio<u128>, Ratio<u128>)>,
        open: &mut u64,
    ) {
        for a in 0..w.inputs {
            for b in 0..w.inputs {
                if len == 0 && a == b {
                    continue;
                }
                let (ns, ua) = w.spec.step(s, a);
                let (nt, ub) = w.spec.step(t, b);
                let nd = d + w.table[ua * w.labels + ub];
                if nd > w.max_units {
                    continue;
                }
                let nw = weight + (a ^ b).count_ones();
                let nlen = len + 1;
                if ns == nt {
                    let p = Ratio::new(1, w.denom0 << (nlen * w.inputs.trailing_zeros() as usize));
                    let e = acc
                        .entry(nd)
                        .or_insert((Ratio::from_integer(0), Ratio::from_integer(0)));
                    e.0 += p;
                    e.1 += p * nw as u128;
                } else if nlen >= w.max_len {
                    *open = (*open).min(nd);
                } else {
                    go(w, ns, nt, nd, nlen, nw, acc, open);
                }
            }
        }
    }
    let walk = Walk {
        spec,
        table: &table,
        labels,
        inputs,
        max_units,
        max_len,
        denom0: 1u128 << spec.nu(),
    };
    let _ = k;
    for s in 0..spec.num_states() {
        go(&walk, s, s, 0, 0, 0, &mut acc, &mut open);
    }
    let lines = acc
        .into_iter()
        .filter(|(d, _)| *d < open)
        .map(|(units, (a, w))| OracleLine { units, a, w })
        .collect();
    OracleSpectrum { lines, open }
}

pub fn dyadic_ratio(v: Dyadic) -> Ratio<u128> {
    Ratio::new(v.mantissa(), 1u128 << v.exponent())
}

/// Minimum-distance input sequence of `ns` words over all `2^(k ns)` candidates,
/// each followed by `nu` zero flush words.
pub fn exhaustive_ml(enc: &TcmEncoder, received: &[Vec<f64>], ns: usize) -> Vec<usize> {
    let k = enc.spec().k();
    let nu = enc.spec().nu();
    let x = enc.constellation();
    let inv = enc.labeling().inverse();
    let len = ns + nu;
    // cost[n][u]: squared distance from the n-th received point to the symbol labeled u.
    let cost: Vec<Vec<f64>> = received
        .iter()
        .map(|y| {
            inv.iter()
                .map(|&q| squared_distance(x.point(q), y))
                .collect()
        })
        .collect();
    // Label sequences of the single-bit inputs; by linearity any input's labels are XORs of these.
    let bits = k * ns;
    let basis: Vec<Vec<usize>> = (0..bits)
        .map(|b| {
            let mut words = vec![0; len];
            words[ns - 1 - b / k] = 1 << (b % k);
            enc.spec().encode(&words)
        })
        .collect();
    let mut labels = vec![0usize; len];
    let mut best = (f64::INFINITY, 0u64);
    // Visit all 2^(k ns) inputs in Gray-code order, flipping one input bit per step.
    for step in 0..1u64 << bits {
        if step > 0 {
            let flip = step.trailing_zeros() as usize;
            for (l, b) in labels.iter_mut().zip(&basis[flip]) {
                *l ^= b;
            }
        }
        let metric: f64 = labels.iter().zip(&cost).map(|(&u, c)| c[u]).sum();
        if metric < best.0 {
            best = (metric, step ^ (step >> 1));
        }
    }
    (0..ns)
        .map(|n| ((best.1 >> (k * (ns - 1 - n))) & ((1 << k) - 1)) as usize)
        .collect()
}

/// `Q(x)` by composite Simpson integration of the Gaussian density on a grid
/// scaled to the decay rate of the integrand.
pub fn q_integral(x: f64) -> f64 {
    // Q(x) = phi(x) * int_0^inf exp(-x s - s^2 / 2) ds
    let phi = (-x * x / 2.0).exp() / (2.0 * std::f64::consts::PI).sqrt();
    let rate = x.max(1.0);
    let len = 60.0 / rate + if x < 0.0 { -2.0 * x } else { 0.0 };
    let n = 400_000;
    let h = len / n as f64;
    let f = |s: f64| (-x * s - s * s / 2.0).exp();
    let mut sum = f(0.0) + f(len);
    for i in 1..n {
        let s = i as f64 * h;
        sum += if i % 2 == 1 { 4.0 } else { 2.0 } * f(s);
    }
    phi * sum * h / 3.0
}
