//! Union bounds on the error-event probability, BER and FER over the AWGN channel.

use serde::{Deserialize, Serialize};

use crate::error::ChannelError;
use crate::spectrum::DistanceSpectrum;

/// Gaussian tail probability `Q(x)`.
///
/// Values below the smallest subnormal double (around `x > 38.5`) flush to zero.
pub fn q_function(x: f64) -> f64 {
    0.5 * libm::erfc(x / std::f64::consts::SQRT_2)
}

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn linear_to_db(v: f64) -> f64 {
    10.0 * v.log10()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChannelConfig {
    es_over_n0: f64,
    block_length: usize,
}

impl ChannelConfig {
    pub fn new(es_over_n0: f64, block_length: usize) -> Result<Self, ChannelError> {
        if !(es_over_n0 > 0.0) || !es_over_n0.is_finite() {
            return Err(ChannelError::NonPositiveSnr(es_over_n0));
        }
        if block_length == 0 {
            return Err(ChannelError::ZeroBlockLength);
        }
        Ok(Self {
            es_over_n0,
            block_length,
        })
    }

    pub fn from_db(db: f64, block_length: usize) -> Result<Self, ChannelError> {
        Self::new(db_to_linear(db), block_length)
    }

    pub fn es_over_n0(&self) -> f64 {
        self.es_over_n0
    }

    pub fn es_over_n0_db(&self) -> f64 {
        linear_to_db(self.es_over_n0)
    }

    pub fn block_length(&self) -> usize {
        self.block_length
    }

    /// Noise spectral density for a given symbol energy.
    pub fn n0(&self, energy: f64) -> f64 {
        energy / self.es_over_n0
    }
}

/// `Q(sqrt(d^2 / (2 N0)))` with `N0 = E_s / (E_s/N0)`.
fn pep(d2: f64, energy: f64, ch: &ChannelConfig) -> f64 {
    q_function((d2 / (2.0 * ch.n0(energy))).sqrt())
}

fn weighted_sum(ds: &DistanceSpectrum, ch: &ChannelConfig, weight: impl Fn(usize) -> f64) -> f64 {
    (0..ds.len())
        .map(|i| weight(i) * pep(ds.d2(i), ds.energy(), ch))
        .sum()
}

/// Union bound on the error-event probability per time instant.
pub fn event_bound(ds: &DistanceSpectrum, ch: &ChannelConfig) -> f64 {
    weighted_sum(ds, ch, |i| ds.a(i))
}

pub fn ber_bound(ds: &DistanceSpectrum, ch: &ChannelConfig) -> f64 {
    weighted_sum(ds, ch, |i| ds.b(i))
}

/// `N_s` times the event bound; not clamped to 1.
pub fn fer_bound(ds: &DistanceSpectrum, ch: &ChannelConfig) -> f64 {
    ch.block_length() as f64 * event_bound(ds, ch)
}
