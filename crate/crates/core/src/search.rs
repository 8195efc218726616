//! Exhaustive joint search over labelings and encoders for optimal distance spectra.
//!
//! Candidates are ordered by labeling index, memory split and tap counter. The
//! search keeps the set of maximal spectra under the superiority order; among
//! identical spectra the first candidate in that order is kept.

use std::cmp::Ordering;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constellation::{standard, Constellation, Family};
use crate::encoder::{memory_splits, raw_count, EncoderIter, EncoderSpec};
use crate::error::{ReferenceError, SearchError, SpectrumError};
use crate::labeling::{mflsa_all, nbc, Labeling, MflsaMode};
use crate::reference::{ReferenceRow, ReferenceTable};
use crate::spectrum::{
    compare, compare_lines, same_distance, DistanceSpectrum, Dominance, SpectrumEnumerator,
    SpectrumLine, SpectrumOptions, TcmEncoder, SEARCH_TERMS,
};

/// Tap counters handled by one work unit.
pub const DEFAULT_CHUNK: u64 = 4096;
/// Largest number of tap counters per memory split.
pub const MAX_RAW_PER_SPLIT: u64 = 1 << 36;
/// Work units run between frontier merges; fixed so that results and counters
/// do not depend on the thread count.
const BATCH_TASKS: usize = 32;
/// Allowed deviation from two-decimal reference values, including half-way rounding.
pub const TABLE_TOLERANCE: f64 = 0.005 + 1e-9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchParams {
    pub k: usize,
    pub m: usize,
    pub nu: usize,
    pub family: Family,
    /// Spectral lines compared.
    pub terms: usize,
}

impl SearchParams {
    pub fn new(k: usize, m: usize, nu: usize, family: Family) -> Self {
        Self {
            k,
            m,
            nu,
            family,
            terms: SEARCH_TERMS,
        }
    }

    fn validate(&self) -> Result<(), SearchError> {
        if self.k == 0 || self.k >= self.m {
            return Err(SearchError::Unsupported(format!(
                "need 0 < k < m, got k={} m={}",
                self.k, self.m
            )));
        }
        if self.m > 3 {
            return Err(SearchError::Unsupported(format!(
                "labeling search limited to m <= 3, got {}",
                self.m
            )));
        }
        if self.nu == 0 {
            return Err(SearchError::Unsupported("memory must be positive".into()));
        }
        if self.terms == 0 {
            return Err(SearchError::Spectrum(SpectrumError::ZeroTruncation));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Worker threads; 0 uses the rayon default.
    pub threads: usize,
    pub chunk_size: u64,
    /// Checkpoint file, resumed from when it exists.
    pub checkpoint: Option<PathBuf>,
    pub checkpoint_interval: Duration,
    /// Replaces the generated labeling list.
    pub labelings: Option<Vec<Labeling>>,
    /// Restricts the memory splits.
    pub splits: Option<Vec<Vec<usize>>>,
    /// Replaces the standard constellation of the family.
    pub constellation: Option<Constellation>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            threads: 0,
            chunk_size: DEFAULT_CHUNK,
            checkpoint: None,
            checkpoint_interval: Duration::from_secs(60),
            labelings: None,
            splits: None,
            constellation: None,
        }
    }
}

/// Position of a candidate in the search order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Ordinal {
    pub labeling: usize,
    pub split: usize,
    pub counter: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    pub ordinal: Ordinal,
    pub labeling: Labeling,
    pub encoder: EncoderSpec,
    pub spectrum: DistanceSpectrum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// One spectrum is best in both the `A` and the `B` ordering.
    OdsFound,
    /// The `A`-best and `B`-best spectra differ.
    SplitOptimum,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub params: SearchParams,
    pub verdict: Verdict,
    pub best_ab: Option<Candidate>,
    pub best_a: Candidate,
    pub best_b: Candidate,
    /// Maximal spectra in search order.
    pub frontier: Vec<Candidate>,
    pub labelings: usize,
    pub splits: Vec<Vec<usize>>,
    pub raw_encoders: u64,
    /// Encoders passing the filters, all of which were ranked.
    pub candidates_examined: u64,
    /// Candidates discarded before their full spectrum was known.
    pub pruned: u64,
    /// Candidates rejected because two input sequences share a symbol sequence.
    pub degenerate: u64,
    pub runtime_secs: f64,
    pub resumed: bool,
}

/// Default labelings: all classes up to reversal (PAM) or rotation (PSK).
pub fn default_labelings(m: usize, family: Family) -> Result<Vec<Labeling>, SearchError> {
    if m == 1 {
        return Ok(vec![nbc(1)?]);
    }
    let mode = match family {
        Family::Pam => MflsaMode::Pam,
        Family::Psk => MflsaMode::Psk,
        Family::Custom => MflsaMode::Full,
    };
    Ok(mflsa_all(m, mode)?)
}

#[derive(Clone, Debug)]
struct Task {
    labeling: usize,
    split: usize,
    range: std::ops::Range<u64>,
}

#[derive(Default)]
struct Outcome {
    examined: u64,
    pruned: u64,
    degenerate: u64,
    frontier: Vec<Candidate>,
}

#[derive(Serialize, Deserialize)]
struct FrontierEntry {
    ordinal: Ordinal,
    encoder: EncoderSpec,
}

#[derive(Serialize, Deserialize)]
struct Checkpoint {
    params: SearchParams,
    labelings: Vec<Labeling>,
    splits: Vec<Vec<usize>>,
    chunk_size: u64,
    completed_tasks: usize,
    examined: u64,
    pruned: u64,
    degenerate: u64,
    elapsed_secs: f64,
    frontier: Vec<FrontierEntry>,
}

struct Context<'a> {
    params: &'a SearchParams,
    constellation: &'a Constellation,
    labelings: &'a [Labeling],
    splits: &'a [Vec<usize>],
}

fn dominated(refs: &[Candidate], k: usize, lines: &[SpectrumLine]) -> bool {
    refs.iter()
        .any(|r| compare_lines(r.spectrum.lines(), r.spectrum.k(), lines, k) == Dominance::Superior)
}

impl Context<'_> {
    /// Full spectrum of a candidate, or `None` once it is known not to be maximal.
    fn evaluate(
        &self,
        spec: &EncoderSpec,
        labeling: &Labeling,
        snapshot: &[Candidate],
        local: &[Candidate],
        best_d1: f64,
    ) -> Result<Option<DistanceSpectrum>, SpectrumError> {
        let enc = TcmEncoder::new(spec.clone(), labeling.clone(), self.constellation.clone())?;
        let opts = SpectrumOptions {
            terms: self.params.terms,
            ..SpectrumOptions::default()
        };
        let mut it = SpectrumEnumerator::new(&enc, opts)?;
        let k = it.k();
        it.set_floor(best_d1);
        let mut lines = Vec::with_capacity(self.params.terms);
        while let Some(line) = it.next_line()? {
            if lines.is_empty() && line.d2 < best_d1 && !same_distance(line.d2, best_d1) {
                return Ok(None);
            }
            lines.push(line);
            if dominated(snapshot, k, &lines) || dominated(local, k, &lines) {
                return Ok(None);
            }
        }
        if it.below_floor() {
            return Ok(None);
        }
        Ok(Some(it.finish(lines)?))
    }

    fn run(&self, task: &Task, snapshot: &[Candidate]) -> Result<Outcome, SearchError> {
        let labeling = &self.labelings[task.labeling];
        let split = &self.splits[task.split];
        let mut out = Outcome::default();
        let mut best_d1 = snapshot
            .iter()
            .filter(|c| !c.spectrum.is_empty())
            .map(|c| c.spectrum.d2(0))
            .fold(0.0, f64::max);
        for (counter, spec) in EncoderIter::new(self.params.m, split, task.range.clone())? {
            out.examined += 1;
            match self.evaluate(&spec, labeling, snapshot, &out.frontier, best_d1) {
                Ok(Some(spectrum)) => {
                    if !spectrum.is_empty() {
                        best_d1 = best_d1.max(spectrum.d2(0));
                    }
                    let ordinal = Ordinal {
                        labeling: task.labeling,
                        split: task.split,
                        counter,
                    };
                    insert(
                        &mut out.frontier,
                        Candidate {
                            ordinal,
                            labeling: labeling.clone(),
                            encoder: spec,
                            spectrum,
                        },
                    );
                }
                Ok(None) => out.pruned += 1,
                Err(SpectrumError::Degenerate) => out.degenerate += 1,
                Err(e) => return Err(e.into()),
            }
        }
        Ok(out)
    }
}

fn identical(a: &DistanceSpectrum, b: &DistanceSpectrum) -> bool {
    a.len() == b.len() && compare(a, b) == Dominance::Equal
}

/// Adds a candidate that follows every frontier member in search order.
fn insert(frontier: &mut Vec<Candidate>, c: Candidate) -> bool {
    if frontier.iter().any(|f| {
        compare(&f.spectrum, &c.spectrum) == Dominance::Superior
            || identical(&f.spectrum, &c.spectrum)
    }) {
        return false;
    }
    frontier.retain(|f| compare(&c.spectrum, &f.spectrum) != Dominance::Superior);
    frontier.push(c);
    true
}

/// Line-by-line order on `(-d^2, A)` or `(-d^2, B)`.
fn lex_cmp(x: &DistanceSpectrum, y: &DistanceSpectrum, use_a: bool) -> Ordering {
    for (p, q) in x.lines().iter().zip(y.lines()) {
        if !same_distance(p.d2, q.d2) {
            return q.d2.total_cmp(&p.d2);
        }
        let c = if use_a {
            p.a.cmp(&q.a)
        } else {
            p.w.cmp_scaled(y.k() as u64, &q.w, x.k() as u64)
        };
        if c != Ordering::Equal {
            return c;
        }
    }
    Ordering::Equal
}

/// Best candidate in the `A` ordering (`use_a`) or the `B` ordering, ties going
/// to the other ordering and then to search order.
pub fn best_by(frontier: &[Candidate], use_a: bool) -> Option<&Candidate> {
    frontier.iter().min_by(|x, y| {
        lex_cmp(&x.spectrum, &y.spectrum, use_a)
            .then_with(|| lex_cmp(&x.spectrum, &y.spectrum, !use_a))
            .then(x.ordinal.cmp(&y.ordinal))
    })
}

fn write_checkpoint(path: &Path, cp: &Checkpoint) -> Result<(), SearchError> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, serde_json::to_vec_pretty(cp)?)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Searches the standard labelings and constellation of `params.family`.
pub fn ods_search(
    params: &SearchParams,
    opts: &SearchOptions,
) -> Result<SearchResult, SearchError> {
    params.validate()?;
    let constellation = match &opts.constellation {
        Some(c) => c.clone(),
        None if params.family == Family::Custom => {
            return Err(SearchError::Unsupported(
                "custom family needs a constellation".into(),
            ))
        }
        None => standard(params.family, 1 << params.m)?,
    };
    if constellation.size() != 1 << params.m {
        return Err(SearchError::Unsupported(format!(
            "constellation has {} points, expected {}",
            constellation.size(),
            1usize << params.m
        )));
    }
    let labelings = match &opts.labelings {
        Some(l) => l.clone(),
        None => default_labelings(params.m, params.family)?,
    };
    if let Some(bad) = labelings.iter().find(|l| l.order() != params.m) {
        return Err(SearchError::Unsupported(format!(
            "labeling {bad} has order {}",
            bad.order()
        )));
    }
    let all_splits = memory_splits(params.k, params.nu);
    let splits = match &opts.splits {
        Some(s) => {
            if let Some(bad) = s.iter().find(|s| !all_splits.contains(s)) {
                return Err(SearchError::Unsupported(format!(
                    "split {bad:?} does not sum to {}",
                    params.nu
                )));
            }
            s.clone()
        }
        None => all_splits,
    };
    let chunk = opts.chunk_size.max(1);
    let mut raw_encoders = 0u64;
    let mut split_tasks = Vec::new();
    for (si, split) in splits.iter().enumerate() {
        let raw = raw_count(params.m, split)?;
        if raw > MAX_RAW_PER_SPLIT {
            return Err(SearchError::Unsupported(format!(
                "split {split:?} has {raw} tap matrices"
            )));
        }
        raw_encoders += raw;
        split_tasks.extend(
            (0..raw)
                .step_by(chunk as usize)
                .map(|s| (si, s..(s + chunk).min(raw))),
        );
    }
    raw_encoders *= labelings.len() as u64;
    let tasks: Vec<Task> = (0..labelings.len())
        .flat_map(|li| {
            split_tasks.iter().map(move |(si, r)| Task {
                labeling: li,
                split: *si,
                range: r.clone(),
            })
        })
        .collect();

    let ctx = Context {
        params,
        constellation: &constellation,
        labelings: &labelings,
        splits: &splits,
    };
    let mut cp = Checkpoint {
        params: params.clone(),
        labelings: labelings.clone(),
        splits: splits.clone(),
        chunk_size: chunk,
        completed_tasks: 0,
        examined: 0,
        pruned: 0,
        degenerate: 0,
        elapsed_secs: 0.0,
        frontier: Vec::new(),
    };
    let mut frontier: Vec<Candidate> = Vec::new();
    let mut resumed = false;
    if let Some(path) = opts.checkpoint.as_deref().filter(|p| p.exists()) {
        let saved: Checkpoint = serde_json::from_slice(&fs::read(path)?)?;
        if saved.params != cp.params
            || saved.labelings != cp.labelings
            || saved.splits != cp.splits
            || saved.chunk_size != chunk
            || saved.completed_tasks > tasks.len()
        {
            return Err(SearchError::CheckpointMismatch);
        }
        for e in &saved.frontier {
            let labeling = labelings
                .get(e.ordinal.labeling)
                .ok_or(SearchError::CheckpointMismatch)?;
            let enc = TcmEncoder::new(e.encoder.clone(), labeling.clone(), constellation.clone())?;
            let opts = SpectrumOptions {
                terms: params.terms,
                ..SpectrumOptions::default()
            };
            let spectrum = crate::spectrum::distance_spectrum_with(&enc, opts)?;
            frontier.push(Candidate {
                ordinal: e.ordinal,
                labeling: labeling.clone(),
                encoder: e.encoder.clone(),
                spectrum,
            });
        }
        cp = Checkpoint {
            frontier: Vec::new(),
            ..saved
        };
        resumed = true;
        log::info!("resuming at task {} of {}", cp.completed_tasks, tasks.len());
    }

    let mut pool = rayon::ThreadPoolBuilder::new();
    if opts.threads > 0 {
        pool = pool.num_threads(opts.threads);
    }
    let pool = pool
        .build()
        .map_err(|e| SearchError::Threads(e.to_string()))?;
    let start = Instant::now();
    let base_elapsed = cp.elapsed_secs;
    let mut last_write = Instant::now();

    let save =
        |cp: &mut Checkpoint, frontier: &[Candidate], path: &Path| -> Result<(), SearchError> {
            cp.elapsed_secs = base_elapsed + start.elapsed().as_secs_f64();
            cp.frontier = frontier
                .iter()
                .map(|c| FrontierEntry {
                    ordinal: c.ordinal,
                    encoder: c.encoder.clone(),
                })
                .collect();
            write_checkpoint(path, cp)
        };

    while cp.completed_tasks < tasks.len() {
        let end = (cp.completed_tasks + BATCH_TASKS).min(tasks.len());
        let snapshot = frontier.clone();
        let outcomes: Vec<Result<Outcome, SearchError>> = pool.install(|| {
            tasks[cp.completed_tasks..end]
                .par_iter()
                .map(|t| ctx.run(t, &snapshot))
                .collect()
        });
        for o in outcomes {
            let o = o?;
            cp.examined += o.examined;
            cp.pruned += o.pruned;
            cp.degenerate += o.degenerate;
            for c in o.frontier {
                if !insert(&mut frontier, c) {
                    cp.pruned += 1;
                }
            }
        }
        cp.completed_tasks = end;
        log::debug!("{end}/{} tasks, frontier {}", tasks.len(), frontier.len());
        if let Some(path) = &opts.checkpoint {
            if last_write.elapsed() >= opts.checkpoint_interval {
                save(&mut cp, &frontier, path)?;
                last_write = Instant::now();
            }
        }
    }
    if let Some(path) = &opts.checkpoint {
        save(&mut cp, &frontier, path)?;
    }

    frontier.sort_by_key(|c| c.ordinal);
    let (Some(best_a), Some(best_b)) = (
        best_by(&frontier, true).cloned(),
        best_by(&frontier, false).cloned(),
    ) else {
        return Err(SearchError::Unsupported("no admissible encoder".into()));
    };
    let verdict = if identical(&best_a.spectrum, &best_b.spectrum) {
        Verdict::OdsFound
    } else {
        Verdict::SplitOptimum
    };
    Ok(SearchResult {
        params: params.clone(),
        verdict,
        best_ab: (verdict == Verdict::OdsFound).then(|| best_a.clone()),
        best_a,
        best_b,
        frontier,
        labelings: labelings.len(),
        splits,
        raw_encoders,
        candidates_examined: cp.examined,
        pruned: cp.pruned,
        degenerate: cp.degenerate,
        runtime_secs: base_elapsed + start.elapsed().as_secs_f64(),
        resumed,
    })
}

/// One disagreement with a reference row.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Mismatch {
    pub role: String,
    pub field: String,
    pub expected: String,
    pub found: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verification {
    pub table: String,
    pub nu: usize,
    pub mismatches: Vec<Mismatch>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Differences between a spectrum and `(d2, A, B)` reference triples.
pub fn spectrum_mismatches(
    ds: &DistanceSpectrum,
    expected: &[[f64; 3]],
    tol: f64,
) -> Vec<Mismatch> {
    let mut out = Vec::new();
    if ds.len() < expected.len() {
        out.push(Mismatch {
            role: String::new(),
            field: "lines".into(),
            expected: expected.len().to_string(),
            found: ds.len().to_string(),
        });
    }
    for (i, e) in expected.iter().enumerate().take(ds.len()) {
        for (name, want, got) in [
            ("d2", e[0], ds.d2(i)),
            ("A", e[1], ds.a(i)),
            ("B", e[2], ds.b(i)),
        ] {
            if (want - got).abs() > tol {
                out.push(Mismatch {
                    role: String::new(),
                    field: format!("line {} {name}", i + 1),
                    expected: format!("{want}"),
                    found: format!("{got:.6}"),
                });
            }
        }
    }
    out
}

/// Equal up to the constellation symmetry: reversal for PAM, rotation for PSK.
pub fn equivalent_labelings(a: &Labeling, b: &Labeling, family: Family) -> bool {
    match family {
        Family::Pam => a == b || &a.reversed() == b,
        Family::Psk => (0..a.size()).any(|s| &a.rotated(s) == b),
        Family::Custom => a == b,
    }
}

fn check_row(
    role: &str,
    c: &Candidate,
    row: &ReferenceRow,
    family: Family,
) -> Result<Vec<Mismatch>, ReferenceError> {
    let mut out = Vec::new();
    let lab = row.labeling()?;
    if !equivalent_labelings(&c.labeling, &lab, family) {
        out.push(Mismatch {
            role: role.into(),
            field: "labeling".into(),
            expected: lab.to_string(),
            found: c.labeling.to_string(),
        });
    }
    let spec = row.encoder_spec()?;
    if spec != c.encoder {
        out.push(Mismatch {
            role: role.into(),
            field: "encoder".into(),
            expected: spec.to_string(),
            found: c.encoder.to_string(),
        });
    }
    out.extend(
        spectrum_mismatches(&c.spectrum, &row.spectrum, TABLE_TOLERANCE)
            .into_iter()
            .map(|mut m| {
                m.role = role.into();
                m
            }),
    );
    Ok(out)
}

/// Compares a search result with the reference rows for its memory.
pub fn verify(
    result: &SearchResult,
    table: &ReferenceTable,
) -> Result<Verification, ReferenceError> {
    let nu = result.params.nu;
    let mut v = Verification {
        table: table.id.clone(),
        nu,
        mismatches: Vec::new(),
    };
    let rows: Vec<&ReferenceRow> = table
        .rows_for(nu)
        .filter(|r| !r.is_classical_only())
        .collect();
    let (Some(a_row), Some(b_row)) = (
        rows.iter().find(|r| r.is_a()),
        rows.iter().find(|r| r.is_b()),
    ) else {
        return Err(ReferenceError::Format(format!(
            "table {} has no optimal rows for memory {nu}",
            table.id
        )));
    };
    let expected = if a_row.is_b() {
        Verdict::OdsFound
    } else {
        Verdict::SplitOptimum
    };
    if result.verdict != expected {
        v.mismatches.push(Mismatch {
            role: String::new(),
            field: "verdict".into(),
            expected: format!("{expected:?}"),
            found: format!("{:?}", result.verdict),
        });
    }
    let family = table.family;
    let a_role = if expected == Verdict::OdsFound {
        "AB"
    } else {
        "A"
    };
    v.mismatches
        .extend(check_row(a_role, &result.best_a, a_row, family)?);
    if expected == Verdict::SplitOptimum || result.verdict == Verdict::SplitOptimum {
        let b_role = if expected == Verdict::OdsFound {
            "AB"
        } else {
            "B"
        };
        v.mismatches
            .extend(check_row(b_role, &result.best_b, b_row, family)?);
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constellation::mpam;
    use crate::spectrum::distance_spectrum;

    fn cand(spec: &str, lab: &str, counter: u64) -> Candidate {
        let enc = TcmEncoder::new(
            spec.parse().unwrap(),
            lab.parse().unwrap(),
            mpam(4).unwrap(),
        )
        .unwrap();
        Candidate {
            ordinal: Ordinal {
                labeling: 0,
                split: 0,
                counter,
            },
            labeling: enc.labeling().clone(),
            encoder: enc.spec().clone(),
            spectrum: distance_spectrum(&enc, 5).unwrap(),
        }
    }

    #[test]
    fn frontier_keeps_maximal_and_first() {
        let mut f = Vec::new();
        assert!(insert(&mut f, cand("[5,2]", "0 1 2 3", 0)));
        assert!(insert(&mut f, cand("[7,2]", "0 1 2 3", 1)));
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].ordinal.counter, 1);
        assert!(!insert(&mut f, cand("[7,2]", "0 1 2 3", 2)));
        assert!(!insert(&mut f, cand("[5,2]", "0 1 2 3", 3)));
    }

    #[test]
    fn lex_orders() {
        let x = cand("[45,10]", "0 1 2 3", 0);
        let y = cand("[55,4]", "0 1 2 3", 1);
        let f = vec![x, y];
        assert_eq!(best_by(&f, true).unwrap().ordinal.counter, 1);
        assert_eq!(best_by(&f, false).unwrap().ordinal.counter, 0);
    }

    #[test]
    fn small_search_and_checkpoint() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cp.json");
        let params = SearchParams::new(1, 2, 2, Family::Pam);
        let opts = SearchOptions {
            checkpoint: Some(path.clone()),
            chunk_size: 16,
            ..SearchOptions::default()
        };
        let r = ods_search(&params, &opts).unwrap();
        assert!(path.exists());
        assert_eq!(r.verdict, Verdict::OdsFound);
        assert_eq!(r.best_ab.as_ref().unwrap().encoder.to_string(), "[7,2]");
        assert!((r.best_a.spectrum.d2(0) - 7.2).abs() < 1e-9);
        let again = ods_search(&params, &opts).unwrap();
        assert!(again.resumed);
        assert_eq!(again.best_a.encoder, r.best_a.encoder);
        assert_eq!(again.candidates_examined, r.candidates_examined);

        let other = SearchParams::new(1, 2, 3, Family::Pam);
        assert!(matches!(
            ods_search(&other, &opts),
            Err(SearchError::CheckpointMismatch)
        ));
    }

    #[test]
    fn rejects_bad_params() {
        let o = SearchOptions::default();
        assert!(ods_search(&SearchParams::new(2, 2, 1, Family::Pam), &o).is_err());
        assert!(ods_search(&SearchParams::new(1, 4, 1, Family::Pam), &o).is_err());
        assert!(ods_search(&SearchParams::new(1, 2, 0, Family::Pam), &o).is_err());
        assert!(ods_search(&SearchParams::new(1, 2, 1, Family::Custom), &o).is_err());
    }
}
