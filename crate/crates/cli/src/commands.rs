use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use tcm_core::constellation::{standard, Constellation, Family};
use tcm_core::encoder::EncoderSpec;
use tcm_core::gf2::rce_factorize;
use tcm_core::labeling::{mflsa, mflsa_all, nbc, Labeling, MflsaMode};
use tcm_core::reference::{ods_table, ods_table_for, ReferenceTable};
use tcm_core::search::{
    ods_search, spectrum_mismatches, verify, Candidate, Mismatch, SearchOptions, SearchParams,
    SearchResult, Verdict, DEFAULT_CHUNK, TABLE_TOLERANCE,
};
use tcm_core::sim::{sweep, sweep_csv, SimOptions};
use tcm_core::spectrum::{
    distance_spectrum_with, DistanceSpectrum, SpectrumOptions, TcmEncoder, DEFAULT_MAX_EVENT_LENGTH,
};

use crate::args::{
    FactorArgs, Format, LabelingsArgs, SearchArgs, SpectrumArgs, SweepArgs, SystemArgs, VerifyArgs,
};
use crate::config::{
    pick, Config, DEFAULT_BLOCK_LENGTH, DEFAULT_SEED, DEFAULT_SWEEP_TERMS, DEFAULT_TERMS,
};
use crate::error::CliError;
use crate::manifest::{RunManifest, Sink};

/// Outcome of a command that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success,
    Mismatch,
    NotConverged,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Self::Success => 0,
            Self::Mismatch => 2,
            Self::NotConverged => 3,
        }
    }
}

pub struct Context {
    pub config: Config,
    pub threads: Option<usize>,
    pub format: Option<Format>,
    pub output: Option<PathBuf>,
    pub manifest: RunManifest,
}

impl Context {
    fn format(&self, default: Format) -> Format {
        pick(self.format, &self.config.format, default)
    }

    fn sink(&self, format: Format) -> Result<Sink, CliError> {
        Sink::open(self.output.as_deref(), format)
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parses names such as `8psk` or `4PAM`.
pub fn parse_standard(name: &str) -> Result<Constellation, CliError> {
    let lower = name.trim().to_ascii_lowercase();
    let split = lower
        .find(|c: char| !c.is_ascii_digit())
        .unwrap_or(lower.len());
    let size: usize = lower[..split].parse().map_err(|_| {
        usage(format!(
            "constellation {name:?}: expected a size such as 8psk"
        ))
    })?;
    let family: Family = lower[split..].parse()?;
    if family == Family::Custom {
        return Err(usage(
            "custom constellations are read with --constellation-file",
        ));
    }
    Ok(standard(family, size)?)
}

fn load_custom(path: &Path, manifest: &mut RunManifest) -> Result<Constellation, CliError> {
    let bytes = manifest.read_input(path)?;
    let text = String::from_utf8(bytes).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok(Constellation::parse_custom(&text)?)
}

fn system(s: &SystemArgs, manifest: &mut RunManifest) -> Result<TcmEncoder, CliError> {
    let spec = match &s.memories {
        Some(mem) => EncoderSpec::parse_with_memories(&s.encoder, mem)?,
        None => s.encoder.parse()?,
    };
    let labeling: Labeling = s.labeling.parse()?;
    let x = match (&s.constellation, &s.constellation_file) {
        (Some(name), _) => parse_standard(name)?,
        (None, Some(path)) => load_custom(path, manifest)?,
        (None, None) => {
            return Err(usage(
                "one of --constellation or --constellation-file is required",
            ))
        }
    };
    Ok(TcmEncoder::new(spec, labeling, x)?)
}

fn spectrum_options(s: &SystemArgs, config: &Config, default_terms: usize) -> SpectrumOptions {
    SpectrumOptions {
        terms: pick(s.terms, &config.terms, default_terms),
        max_event_length: pick(
            s.max_event_length,
            &config.max_event_length,
            DEFAULT_MAX_EVENT_LENGTH,
        ),
    }
}

fn args_value<T: serde::Serialize>(args: &T) -> Value {
    serde_json::to_value(args).unwrap_or(Value::Null)
}

pub fn labelings(a: &LabelingsArgs, ctx: &mut Context) -> Result<Status, CliError> {
    let mode: MflsaMode = a.mode.parse()?;
    let format = ctx.format(Format::Text);
    ctx.manifest.arguments = args_value(a);
    ctx.manifest.settings = json!({ "format": format });
    let all: Box<dyn Iterator<Item = Labeling>> = if a.m == 1 {
        Box::new(std::iter::once(nbc(1)?))
    } else {
        Box::new(mflsa(a.m, mode)?)
    };
    let limit = a
        .limit
        .map_or(usize::MAX, |l| usize::try_from(l).unwrap_or(usize::MAX));
    let mut sink = ctx.sink(format)?;
    match format {
        Format::Text => {
            for l in all.take(limit) {
                sink.line(&l.to_string())?;
            }
        }
        Format::Csv => {
            sink.line("index,labeling")?;
            for (i, l) in all.take(limit).enumerate() {
                sink.line(&format!("{},{l}", i + 1))?;
            }
        }
        Format::Json => {
            let list: Vec<Vec<usize>> = all.take(limit).map(|l| l.integers().to_vec()).collect();
            sink.json(json!({ "m": a.m, "mode": mode, "count": list.len(), "labelings": list }))?;
        }
    }
    sink.finish()?;
    Ok(Status::Success)
}

pub fn factor(a: &FactorArgs, ctx: &mut Context) -> Result<Status, CliError> {
    let format = ctx.format(Format::Text);
    ctx.manifest.arguments = args_value(a);
    ctx.manifest.settings = json!({ "format": format });
    let labeling: Labeling = a.labeling.parse()?;
    let f = rce_factorize(labeling.matrix())?;
    let echelon = Labeling::from_matrix(f.echelon.clone())?;
    let m = labeling.order();
    // Position in the generation order, where the full list is small enough to build.
    let index = if (2..=3).contains(&m) {
        mflsa_all(m, MflsaMode::Full)?
            .iter()
            .position(|l| *l == echelon)
            .map(|i| i + 1)
    } else {
        None
    };
    let mut sink = ctx.sink(format)?;
    match format {
        Format::Text => {
            sink.line(&format!("labeling   {labeling}"))?;
            sink.line(&format!("echelon    {echelon}"))?;
            sink.line(&format!("transform  {}", f.transform.to_binary_rows()))?;
            if let Some(i) = index {
                sink.line(&format!("position   {i}"))?;
            }
        }
        Format::Csv => {
            sink.line("labeling,echelon,transform,position")?;
            let pos = index.map(|i| i.to_string()).unwrap_or_default();
            sink.line(&format!(
                "{labeling},{echelon},{},{pos}",
                f.transform.to_binary_rows()
            ))?;
        }
        Format::Json => {
            sink.json(json!({
                "labeling": labeling.integers(),
                "echelon": echelon.integers(),
                "transform": f.transform.to_binary_rows().split('/').collect::<Vec<_>>(),
                "position": index,
            }))?;
        }
    }
    sink.finish()?;
    Ok(Status::Success)
}

fn spectrum_rows(ds: &DistanceSpectrum) -> Vec<String> {
    let mut out = vec![format!(
        "{:>10}  {:>10}  {:>10}  {:>14}  {:>14}",
        "d2", "A", "B", "A exact", "B exact"
    )];
    for (i, line) in ds.lines().iter().enumerate() {
        out.push(format!(
            "{:>10.6}  {:>10.6}  {:>10.6}  {:>14}  {:>14}",
            ds.d2(i),
            ds.a(i),
            ds.b(i),
            line.a.to_string(),
            ds.b_exact(i)
        ));
    }
    out
}

fn spectrum_csv(ds: &DistanceSpectrum) -> Vec<String> {
    let mut out = vec!["d2,A,B,A_exact,B_exact".to_string()];
    for (i, line) in ds.lines().iter().enumerate() {
        out.push(format!(
            "{},{},{},{},{}",
            ds.d2(i),
            ds.a(i),
            ds.b(i),
            line.a,
            ds.b_exact(i)
        ));
    }
    out
}

fn system_value(enc: &TcmEncoder) -> Value {
    json!({
        "encoder": enc.spec(),
        "labeling": enc.labeling().integers(),
        "constellation": enc.constellation().name(),
    })
}

pub fn spectrum(a: &SpectrumArgs, ctx: &mut Context) -> Result<Status, CliError> {
    let format = ctx.format(Format::Text);
    let enc = system(&a.system, &mut ctx.manifest)?;
    let opts = spectrum_options(&a.system, &ctx.config, DEFAULT_TERMS);
    ctx.manifest.arguments = args_value(a);
    ctx.manifest.settings =
        json!({ "format": format, "terms": opts.terms, "max_event_length": opts.max_event_length });
    let ds = distance_spectrum_with(&enc, opts)?;
    let mut sink = ctx.sink(format)?;
    match format {
        Format::Text => {
            sink.line(&format!("encoder        {}", enc.spec()))?;
            sink.line(&format!("labeling       {}", enc.labeling()))?;
            sink.line(&format!("constellation  {}", enc.constellation().name()))?;
            if !ds.converged() {
                sink.line(&format!("not converged  residual {:e}", ds.residual()))?;
            }
            for l in spectrum_rows(&ds) {
                sink.line(&l)?;
            }
        }
        Format::Csv => {
            for l in spectrum_csv(&ds) {
                sink.line(&l)?;
            }
        }
        Format::Json => {
            let mut v = system_value(&enc);
            v["spectrum"] = serde_json::to_value(&ds)?;
            sink.json(v)?;
        }
    }
    sink.finish()?;
    Ok(if ds.converged() {
        Status::Success
    } else {
        Status::NotConverged
    })
}

/// Reported candidates with their marks: one `AB` row, or an `A` and a `B` row.
fn marked(r: &SearchResult) -> Vec<(&'static str, &Candidate)> {
    match (&r.verdict, &r.best_ab) {
        (Verdict::OdsFound, Some(c)) => vec![("AB", c)],
        _ => vec![("A", &r.best_a), ("B", &r.best_b)],
    }
}

fn search_text(r: &SearchResult) -> Vec<String> {
    let p = &r.params;
    let verdict = match r.verdict {
        Verdict::OdsFound => "ods_found",
        Verdict::SplitOptimum => "split_optimum",
    };
    let mut out = vec![
        format!(
            "# {}{} k={} m={} nu={}: {verdict}",
            1usize << p.m,
            p.family,
            p.k,
            p.m,
            p.nu
        ),
        format!(
            "# examined {}, pruned {}, degenerate {}, maximal spectra {}",
            r.candidates_examined,
            r.pruned,
            r.degenerate,
            r.frontier.len()
        ),
    ];
    let rows = marked(r);
    let lw = rows
        .iter()
        .map(|(_, c)| c.labeling.to_string().len())
        .max()
        .unwrap_or(0)
        .max(8);
    let gw = rows
        .iter()
        .map(|(_, c)| c.encoder.to_string().len())
        .max()
        .unwrap_or(0)
        .max(1);
    let mut header = format!(
        "{:<3} {:<lw$}  {:<gw$}  {:<4}",
        "nu", "labeling", "G", "mark"
    );
    for i in 1..=p.terms {
        header.push_str(&format!(
            "  {:>6} {:>6} {:>6}",
            format!("d2_{i}"),
            format!("A_{i}"),
            format!("B_{i}")
        ));
    }
    out.push(header);
    for (mark, c) in rows {
        let mut line = format!(
            "{:<3} {:<lw$}  {:<gw$}  {:<4}",
            p.nu,
            c.labeling.to_string(),
            c.encoder.to_string(),
            mark
        );
        for (d2, a, b) in c.spectrum.triples() {
            line.push_str(&format!("  {d2:>6.2} {a:>6.2} {b:>6.2}"));
        }
        out.push(line);
    }
    out
}

fn search_csv(r: &SearchResult) -> Vec<String> {
    let mut out = vec!["mark,nu,labeling,encoder,term,d2,A,B,A_exact,B_exact".to_string()];
    for (mark, c) in marked(r) {
        let ds = &c.spectrum;
        for (i, line) in ds.lines().iter().enumerate() {
            out.push(format!(
                "{mark},{},{},\"{}\",{},{},{},{},{},{}",
                r.params.nu,
                c.labeling,
                c.encoder,
                i + 1,
                ds.d2(i),
                ds.a(i),
                ds.b(i),
                line.a,
                ds.b_exact(i)
            ));
        }
    }
    out
}

fn mismatch_lines(prefix: &str, mismatches: &[Mismatch]) -> Vec<String> {
    mismatches
        .iter()
        .map(|m| {
            let role = if m.role.is_empty() {
                String::new()
            } else {
                format!("{} ", m.role)
            };
            format!(
                "{prefix}{role}{}: expected {}, found {}",
                m.field, m.expected, m.found
            )
        })
        .collect()
}

pub fn search(a: &SearchArgs, ctx: &mut Context) -> Result<Status, CliError> {
    let format = ctx.format(Format::Text);
    let family: Family = a.family.parse()?;
    let mut params = SearchParams::new(a.k, a.m, a.nu, family);
    params.terms = pick(a.terms, &ctx.config.terms, DEFAULT_TERMS);
    let mut opts = SearchOptions {
        threads: ctx.threads.unwrap_or(0),
        chunk_size: pick(a.chunk_size, &ctx.config.chunk_size, DEFAULT_CHUNK),
        checkpoint: a.checkpoint.clone(),
        checkpoint_interval: Duration::from_secs(pick(
            a.checkpoint_interval,
            &ctx.config.checkpoint_interval,
            60,
        )),
        ..SearchOptions::default()
    };
    match (family, &a.constellation_file) {
        (Family::Custom, Some(path)) => {
            opts.constellation = Some(load_custom(path, &mut ctx.manifest)?)
        }
        (Family::Custom, None) => {
            return Err(usage("the custom family needs --constellation-file"))
        }
        (_, Some(_)) => {
            return Err(usage(
                "--constellation-file applies to the custom family only",
            ))
        }
        _ => {}
    }
    if let Some(cp) = &a.checkpoint {
        match (cp.exists(), a.resume) {
            (true, false) => {
                return Err(usage(format!(
                    "checkpoint {} exists; pass --resume to continue from it",
                    cp.display()
                )))
            }
            (false, true) => return Err(usage(format!("no checkpoint at {}", cp.display()))),
            (true, true) => {
                ctx.manifest.read_input(cp)?;
            }
            (false, false) => {}
        }
    }
    ctx.manifest.arguments = args_value(a);
    ctx.manifest.settings = json!({
        "format": format,
        "threads": opts.threads,
        "terms": params.terms,
        "chunk_size": opts.chunk_size,
        "checkpoint_interval_secs": opts.checkpoint_interval.as_secs(),
    });
    let verification_table = if a.verify {
        Some(
            ods_table_for(a.k, a.m, family)?
                .ok_or_else(|| usage("no bundled table for this configuration"))?,
        )
    } else {
        None
    };

    let r = ods_search(&params, &opts)?;
    ctx.manifest.stats = json!({ "runtime_secs": r.runtime_secs, "resumed": r.resumed });
    let verification = verification_table.map(|t| verify(&r, &t)).transpose()?;

    let mut sink = ctx.sink(format)?;
    match format {
        Format::Text => {
            for l in search_text(&r) {
                sink.line(&l)?;
            }
            if let Some(v) = &verification {
                if v.passed() {
                    sink.line(&format!("# matches table {} at nu={}", v.table, v.nu))?;
                }
                for l in mismatch_lines("# mismatch: ", &v.mismatches) {
                    sink.line(&l)?;
                }
            }
        }
        Format::Csv => {
            for l in search_csv(&r) {
                sink.line(&l)?;
            }
        }
        Format::Json => {
            let mut v = serde_json::to_value(&r)?;
            // Timings vary between runs and live in the manifest instead.
            if let Value::Object(map) = &mut v {
                map.remove("runtime_secs");
                map.remove("resumed");
            }
            if let Some(ver) = &verification {
                v["verification"] = serde_json::to_value(ver)?;
            }
            sink.json(v)?;
        }
    }
    sink.finish()?;
    Ok(match verification {
        Some(v) if !v.passed() => Status::Mismatch,
        _ => Status::Success,
    })
}

/// `start:stop:step`, a comma list, or a single value.
pub fn parse_snr(s: &str) -> Result<Vec<f64>, CliError> {
    let num = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|_| usage(format!("SNR value {t:?}")))
    };
    let values = if let Some((start, rest)) = s.split_once(':') {
        let (stop, step) = rest.split_once(':').unwrap_or((rest, "1"));
        let (start, stop, step) = (num(start)?, num(stop)?, num(step)?);
        if !(step > 0.0) || stop < start {
            return Err(usage(format!(
                "SNR range {s:?} needs start <= stop and a positive step"
            )));
        }
        let n = ((stop - start) / step + 1e-9).floor() as usize;
        // Rounding keeps printed values such as 6.3 free of accumulated error.
        (0..=n)
            .map(|i| ((start + i as f64 * step) * 1e9).round() / 1e9)
            .collect()
    } else {
        s.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(num)
            .collect::<Result<Vec<_>, _>>()?
    };
    if values.is_empty() {
        return Err(usage("no SNR values"));
    }
    Ok(values)
}

pub fn sweep_cmd(a: &SweepArgs, ctx: &mut Context) -> Result<Status, CliError> {
    let format = ctx.format(Format::Csv);
    let enc = system(&a.system, &mut ctx.manifest)?;
    let opts = spectrum_options(&a.system, &ctx.config, DEFAULT_SWEEP_TERMS);
    let snrs = parse_snr(&a.snr)?;
    let block_length = pick(
        a.block_length,
        &ctx.config.block_length,
        DEFAULT_BLOCK_LENGTH,
    );
    let defaults = SimOptions::default();
    let sim = a.simulate.then(|| SimOptions {
        target_frame_errors: pick(
            a.frame_errors,
            &ctx.config.frame_errors,
            defaults.target_frame_errors,
        ),
        max_frames: pick(a.max_frames, &ctx.config.max_frames, defaults.max_frames),
        seed: pick(a.seed, &ctx.config.seed, DEFAULT_SEED),
        batch: defaults.batch,
    });
    ctx.manifest.arguments = args_value(a);
    ctx.manifest.seed = sim.map(|s| s.seed);
    ctx.manifest.settings = json!({
        "format": format,
        "terms": opts.terms,
        "max_event_length": opts.max_event_length,
        "block_length": block_length,
        "snr_db": snrs,
        "simulation": sim,
    });
    let start = Instant::now();
    let ds = distance_spectrum_with(&enc, opts)?;
    let rows = sweep(&enc, &ds, &snrs, block_length, sim.as_ref())?;
    ctx.manifest.stats = json!({ "runtime_secs": start.elapsed().as_secs_f64() });

    let mut sink = ctx.sink(format)?;
    match format {
        Format::Csv => {
            for l in sweep_csv(&rows).lines() {
                sink.line(l)?;
            }
        }
        Format::Text => {
            sink.line(&format!(
                "# {} {} {}, N_s={block_length}",
                enc.spec(),
                enc.labeling(),
                enc.constellation().name()
            ))?;
            sink.line(&format!(
                "{:>8}  {:>11}  {:>11}  {:>11}  {:>11}  {:>11}  {:>11}  {:>9}",
                "Es/N0",
                "BER bound",
                "FER bound",
                "BER sim",
                "BER ci",
                "FER sim",
                "FER ci",
                "frames"
            ))?;
            for r in &rows {
                let mut line = format!(
                    "{:>8.2}  {:>11.4e}  {:>11.4e}",
                    r.esn0_db, r.ber_bound, r.fer_bound
                );
                if let Some(s) = &r.sim {
                    line.push_str(&format!(
                        "  {:>11.4e}  {:>11.4e}  {:>11.4e}  {:>11.4e}  {:>9}",
                        s.ber, s.ber_ci, s.fer, s.fer_ci, s.frames
                    ));
                }
                sink.line(&line)?;
            }
        }
        Format::Json => {
            let mut v = system_value(&enc);
            v["block_length"] = json!(block_length);
            v["spectrum"] = serde_json::to_value(&ds)?;
            v["rows"] = serde_json::to_value(&rows)?;
            sink.json(v)?;
        }
    }
    sink.finish()?;
    Ok(if ds.converged() {
        Status::Success
    } else {
        Status::NotConverged
    })
}

pub fn verify_cmd(a: &VerifyArgs, ctx: &mut Context) -> Result<Status, CliError> {
    let format = ctx.format(Format::Text);
    let table = match (&a.table, &a.table_file) {
        (Some(id), _) => ods_table(id)?,
        (None, Some(path)) => {
            serde_json::from_slice::<ReferenceTable>(&ctx.manifest.read_input(path)?)?
        }
        (None, None) => return Err(usage("one of --table or --table-file is required")),
    };
    let available = table.memories();
    let memories = a.nu.clone().unwrap_or_else(|| available.clone());
    if let Some(nu) = memories.iter().find(|nu| !available.contains(nu)) {
        return Err(usage(format!("table {} has no rows for nu={nu}", table.id)));
    }
    ctx.manifest.arguments = args_value(a);
    ctx.manifest.settings = json!({ "format": format, "threads": ctx.threads.unwrap_or(0), "tolerance": TABLE_TOLERANCE });

    // (memory, description, JSON record, mismatches)
    let mut checks: Vec<(usize, String, Value, Vec<Mismatch>)> = Vec::new();
    if a.search {
        for &nu in &memories {
            let params = SearchParams::new(table.k, table.m, nu, table.family);
            let opts = SearchOptions {
                threads: ctx.threads.unwrap_or(0),
                ..SearchOptions::default()
            };
            let r = ods_search(&params, &opts)?;
            let v = verify(&r, &table)?;
            let rows = marked(&r);
            let what = rows
                .iter()
                .map(|(mark, c)| format!("{mark} {}", c.encoder))
                .collect::<Vec<_>>()
                .join(", ");
            let found: Vec<Value> = rows
                .iter()
                .map(|(mark, c)| json!({ "mark": mark, "labeling": c.labeling.integers(), "encoder": c.encoder.to_string() }))
                .collect();
            let record = json!({ "nu": nu, "found": found, "mismatches": v.mismatches });
            checks.push((nu, what, record, v.mismatches));
        }
    } else {
        let x = standard(table.family, 1 << table.m)?;
        for &nu in &memories {
            for row in table.rows_for(nu) {
                let enc = TcmEncoder::new(row.encoder_spec()?, row.labeling()?, x.clone())?;
                let opts = SpectrumOptions {
                    terms: row.spectrum.len(),
                    ..SpectrumOptions::default()
                };
                let ds = distance_spectrum_with(&enc, opts)?;
                let mismatches = spectrum_mismatches(&ds, &row.spectrum, TABLE_TOLERANCE);
                let record = json!({
                    "nu": nu,
                    "mark": row.marks,
                    "labeling": row.labeling,
                    "encoder": row.encoder,
                    "mismatches": mismatches,
                });
                checks.push((
                    nu,
                    format!("{} {}", row.marks, row.encoder),
                    record,
                    mismatches,
                ));
            }
        }
    }
    let passed = checks.iter().all(|c| c.3.is_empty());

    let mut sink = ctx.sink(format)?;
    match format {
        Format::Json => {
            let records: Vec<&Value> = checks.iter().map(|c| &c.2).collect();
            sink.json(json!({
                "table": table.id,
                "mode": if a.search { "search" } else { "spectra" },
                "passed": passed,
                "checks": records,
            }))?;
        }
        Format::Csv => {
            sink.line("nu,rows,role,field,expected,found")?;
            for (nu, what, _, mismatches) in &checks {
                for m in mismatches {
                    sink.line(&format!(
                        "{nu},\"{what}\",{},{},{},{}",
                        m.role, m.field, m.expected, m.found
                    ))?;
                }
            }
        }
        Format::Text => {
            for (nu, what, _, mismatches) in &checks {
                if mismatches.is_empty() {
                    sink.line(&format!("{} nu={nu} {what}: ok", table.id))?;
                } else {
                    sink.line(&format!("{} nu={nu} {what}: MISMATCH", table.id))?;
                    for l in mismatch_lines("  ", mismatches) {
                        sink.line(&l)?;
                    }
                }
            }
        }
    }
    sink.finish()?;
    Ok(if passed {
        Status::Success
    } else {
        Status::Mismatch
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snr_lists() {
        assert_eq!(parse_snr("6:8:0.5").unwrap(), [6.0, 6.5, 7.0, 7.5, 8.0]);
        assert_eq!(parse_snr("6.1:6.3:0.1").unwrap(), [6.1, 6.2, 6.3]);
        assert_eq!(parse_snr("5,7").unwrap(), [5.0, 7.0]);
        assert_eq!(parse_snr("9").unwrap(), [9.0]);
        assert!(parse_snr("8:6:1").is_err());
        assert!(parse_snr("6:8:0").is_err());
        assert!(parse_snr("x").is_err());
    }

    #[test]
    fn standard_names() {
        assert_eq!(parse_standard("8PSK").unwrap().name(), "8psk");
        assert_eq!(parse_standard("4pam").unwrap().size(), 4);
        assert!(parse_standard("pam").is_err());
        assert!(parse_standard("8custom").is_err());
        assert!(parse_standard("6psk").is_err());
    }
}
