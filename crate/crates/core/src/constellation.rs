//! Real-valued signal constellations (MPAM, MPSK and user-supplied point sets).

use std::f64::consts::PI;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{ConstellationError, LabelingError};
use crate::labeling::Labeling;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Pam,
    Psk,
    Custom,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Pam => "pam",
            Self::Psk => "psk",
            Self::Custom => "custom",
        })
    }
}

impl FromStr for Family {
    type Err = ConstellationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "pam" => Ok(Self::Pam),
            "psk" => Ok(Self::Psk),
            "custom" => Ok(Self::Custom),
            other => Err(ConstellationError::Parse(format!(
                "unknown family {other:?}"
            ))),
        }
    }
}

/// Ordered set of `M` points in `R^N`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Constellation {
    family: Family,
    dim: usize,
    points: Vec<Vec<f64>>,
    /// Factor the input points were multiplied by to reach unit energy.
    scale: f64,
}

impl Constellation {
    /// Builds a constellation from raw points, keeping them as given.
    pub fn from_points_raw(
        family: Family,
        points: Vec<Vec<f64>>,
    ) -> Result<Self, ConstellationError> {
        let size = points.len();
        if size < 2 || !size.is_power_of_two() {
            return Err(ConstellationError::UnsupportedSize(size));
        }
        let dim = points[0].len();
        if dim == 0 || points.iter().any(|p| p.len() != dim) {
            return Err(ConstellationError::MixedDimensions);
        }
        if points.iter().flatten().any(|v| !v.is_finite()) {
            return Err(ConstellationError::Parse("non-finite coordinate".into()));
        }
        for i in 0..size {
            for j in i + 1..size {
                if squared_distance(&points[i], &points[j]) == 0.0 {
                    return Err(ConstellationError::DuplicatePoints);
                }
            }
        }
        Ok(Self {
            family,
            dim,
            points,
            scale: 1.0,
        })
    }

    /// Builds a constellation and rescales it to unit average energy.
    pub fn from_points(family: Family, points: Vec<Vec<f64>>) -> Result<Self, ConstellationError> {
        let raw = Self::from_points_raw(family, points)?;
        let energy = raw.average_energy();
        if energy == 0.0 {
            return Err(ConstellationError::ZeroEnergy);
        }
        Ok(raw.scaled(1.0 / energy.sqrt()))
    }

    /// Parses one point per line with whitespace-separated coordinates. Blank
    /// lines and lines starting with `#` are ignored. The result is normalized.
    pub fn parse_custom(text: &str) -> Result<Self, ConstellationError> {
        let mut points = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let point = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<f64>().map_err(|e| {
                        ConstellationError::Parse(format!("line {}: {t:?}: {e}", n + 1))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            points.push(point);
        }
        Self::from_points(Family::Custom, points)
    }

    pub fn load_custom(path: &Path) -> Result<Self, ConstellationError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConstellationError::Parse(format!("{}: {e}", path.display())))?;
        Self::parse_custom(&text)
    }

    /// Copy with every coordinate multiplied by `alpha`.
    pub fn scaled(&self, alpha: f64) -> Self {
        Self {
            family: self.family,
            dim: self.dim,
            points: self
                .points
                .iter()
                .map(|p| p.iter().map(|v| v * alpha).collect())
                .collect(),
            scale: self.scale * alpha,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn size(&self) -> usize {
        self.points.len()
    }

    /// Number of label bits `log2(M)`.
    pub fn order(&self) -> usize {
        self.points.len().trailing_zeros() as usize
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn point(&self, q: usize) -> &[f64] {
        &self.points[q]
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn average_energy(&self) -> f64 {
        self.points
            .iter()
            .map(|p| p.iter().map(|v| v * v).sum::<f64>())
            .sum::<f64>()
            / self.points.len() as f64
    }

    /// `M x M` table of squared Euclidean distances.
    pub fn squared_distance_table(&self) -> Vec<Vec<f64>> {
        self.points
            .iter()
            .map(|a| self.points.iter().map(|b| squared_distance(a, b)).collect())
            .collect()
    }

    /// Smallest nonzero squared distance between two points.
    pub fn min_squared_distance(&self) -> f64 {
        let mut best = f64::INFINITY;
        for i in 0..self.size() {
            for j in i + 1..self.size() {
                best = best.min(squared_distance(&self.points[i], &self.points[j]));
            }
        }
        best
    }

    /// Short name such as `8psk`, or `custom16`.
    pub fn name(&self) -> String {
        match self.family {
            Family::Custom => format!("custom{}", self.size()),
            f => format!("{}{f}", self.size()),
        }
    }
}

pub fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Unit-energy MPAM with ascending points `-(M+1-2q) * delta`, `delta^2 = 3/(M^2-1)`.
pub fn mpam(size: usize) -> Result<Constellation, ConstellationError> {
    if ![2, 4, 8, 16].contains(&size) {
        return Err(ConstellationError::UnsupportedSize(size));
    }
    let m = size as f64;
    let delta = (3.0 / (m * m - 1.0)).sqrt();
    let points = (1..=size)
        .map(|q| vec![-(m + 1.0 - 2.0 * q as f64) * delta])
        .collect();
    Ok(Constellation {
        family: Family::Pam,
        dim: 1,
        points,
        scale: 1.0,
    })
}

/// Unit-circle MPSK, counterclockwise from `(1, 0)`.
pub fn mpsk(size: usize) -> Result<Constellation, ConstellationError> {
    if ![4, 8, 16].contains(&size) {
        return Err(ConstellationError::UnsupportedSize(size));
    }
    let points = (0..size)
        .map(|q| {
            let phi = 2.0 * PI * q as f64 / size as f64;
            let (s, c) = phi.sin_cos();
            // Snap the values that should be exact (axes) to remove rounding noise.
            vec![snap(c), snap(s)]
        })
        .collect();
    Ok(Constellation {
        family: Family::Psk,
        dim: 2,
        points,
        scale: 1.0,
    })
}

fn snap(v: f64) -> f64 {
    if v.abs() < 1e-15 {
        0.0
    } else if (v.abs() - 1.0).abs() < 1e-15 {
        v.signum()
    } else {
        v
    }
}

/// Built-in constellation by family and size.
pub fn standard(family: Family, size: usize) -> Result<Constellation, ConstellationError> {
    match family {
        Family::Pam => mpam(size),
        Family::Psk => mpsk(size),
        Family::Custom => Err(ConstellationError::Parse(
            "custom constellations are loaded from a file".into(),
        )),
    }
}

/// Squared minimum intra-subset distances for levels `0..m`. Level `l` groups the
/// symbols whose labels agree in the last `l` bits.
pub fn intra_squared_distances(x: &Constellation, l: &Labeling) -> Result<Vec<f64>, LabelingError> {
    if x.size() != l.size() {
        return Err(LabelingError::SizeMismatch {
            constellation: x.size(),
            labeling: l.size(),
        });
    }
    let m = l.order();
    let labels = l.integers();
    let mut out = vec![f64::INFINITY; m];
    for i in 0..x.size() {
        for j in i + 1..x.size() {
            let d = squared_distance(x.point(i), x.point(j));
            // Number of trailing label bits the two symbols share.
            let shared = ((labels[i] ^ labels[j]).trailing_zeros() as usize).min(m);
            for slot in out.iter_mut().take(shared + 1) {
                *slot = slot.min(d);
            }
        }
    }
    Ok(out)
}

/// Minimum intra-subset Euclidean distances `delta_0..delta_{m-1}`.
pub fn intra_distances(x: &Constellation, l: &Labeling) -> Result<Vec<f64>, LabelingError> {
    Ok(intra_squared_distances(x, l)?
        .into_iter()
        .map(f64::sqrt)
        .collect())
}
