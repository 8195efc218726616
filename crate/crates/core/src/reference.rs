//! Bundled reference data: class counts, the order-3 labeling classes, and
//! reference optimal-spectrum encoders for 4PAM, 8PAM and 8PSK.

use std::str::FromStr;

use num_bigint::BigUint;
use serde::Deserialize;

use crate::constellation::Family;
use crate::encoder::EncoderSpec;
use crate::error::ReferenceError;
use crate::labeling::Labeling;

const CLASS_COUNTS: &str = include_str!("../data/class_counts.txt");
const MFLSA_M3: &str = include_str!("../data/mflsa_m3.txt");
const ODS_TABLES: &str = include_str!("../data/ods_tables.json");

/// Printed class statistics for one order `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCountRow {
    pub m: usize,
    pub classes: String,
    pub class_size: String,
    pub labelings: String,
}

pub fn class_counts() -> Result<Vec<ClassCountRow>, ReferenceError> {
    CLASS_COUNTS
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            if f.len() != 4 {
                return Err(ReferenceError::Format(format!("class count line {l:?}")));
            }
            Ok(ClassCountRow {
                m: f[0]
                    .parse()
                    .map_err(|_| ReferenceError::Format(format!("order in {l:?}")))?,
                classes: f[1].to_string(),
                class_size: f[2].to_string(),
                labelings: f[3].to_string(),
            })
        })
        .collect()
}

/// True iff `value` equals a printed integer, or rounds to a printed
/// `d.ddde<exp>` value at the printed precision.
pub fn matches_printed(value: &BigUint, printed: &str) -> bool {
    printed_gap(value, printed) == Some(0)
}

/// Distance, in units of the last printed digit, between `value` rounded
/// half-up to the printed precision and the printed value. `None` when the
/// magnitudes differ or the text does not parse.
pub fn printed_gap(value: &BigUint, printed: &str) -> Option<u64> {
    let Some((mant, exp)) = printed.split_once('e') else {
        return BigUint::from_str(printed)
            .ok()
            .and_then(|p| (&p == value).then_some(0));
    };
    let exp = exp.parse::<usize>().ok()?;
    let decimals = mant.split_once('.').map_or(0, |(_, d)| d.len());
    let digits = value.to_string();
    if digits.len() != exp + 1 || decimals + 1 > digits.len() {
        return None;
    }
    // Round the leading decimals + 1 digits half-up.
    let lead: u64 = digits[..decimals + 1].parse().ok()?;
    let next = digits.as_bytes().get(decimals + 1).map_or(0, |b| b - b'0');
    let rounded = lead + (next >= 5) as u64;
    let printed_digits: u64 = mant.replace('.', "").parse().ok()?;
    Some(rounded.abs_diff(printed_digits))
}

/// The 240 order-3 class representatives in generation order, with a flag
/// marking labelings with optimal edge profile.
pub fn mflsa_m3() -> Result<Vec<(Labeling, bool)>, ReferenceError> {
    MFLSA_M3
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let marked = l.trim_end().ends_with('*');
            let l = Labeling::from_str(l.trim_end_matches(['*', ' ']))?;
            Ok((l, marked))
        })
        .collect()
}

#[derive(Clone, Debug, Deserialize)]
pub struct ReferenceRow {
    pub nu: usize,
    pub labeling: Vec<usize>,
    pub labeling_marks: String,
    pub encoder: String,
    /// Any of `U`, `A`, `B`: classical design, best A-spectrum, best B-spectrum.
    pub marks: String,
    /// `(d2, A, B)` triples.
    pub spectrum: Vec<[f64; 3]>,
}

impl ReferenceRow {
    pub fn encoder_spec(&self) -> Result<EncoderSpec, ReferenceError> {
        Ok(self.encoder.parse()?)
    }

    pub fn labeling(&self) -> Result<Labeling, ReferenceError> {
        Ok(Labeling::from_integers(&self.labeling)?)
    }

    pub fn is_a(&self) -> bool {
        self.marks.contains('A')
    }

    pub fn is_b(&self) -> bool {
        self.marks.contains('B')
    }

    /// Rows listing only the classical design.
    pub fn is_classical_only(&self) -> bool {
        !self.is_a() && !self.is_b()
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct ReferenceTable {
    pub id: String,
    pub k: usize,
    pub m: usize,
    pub family: Family,
    pub rows: Vec<ReferenceRow>,
}

impl ReferenceTable {
    pub fn rows_for(&self, nu: usize) -> impl Iterator<Item = &ReferenceRow> {
        self.rows.iter().filter(move |r| r.nu == nu)
    }

    pub fn memories(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.rows.iter().map(|r| r.nu).collect();
        v.dedup();
        v
    }
}

#[derive(Deserialize)]
struct TablesFile {
    tables: Vec<ReferenceTable>,
}

pub fn ods_tables() -> Result<Vec<ReferenceTable>, ReferenceError> {
    Ok(serde_json::from_str::<TablesFile>(ODS_TABLES)?.tables)
}

/// Table by identifier: `4pam`, `8pam` or `8psk`.
pub fn ods_table(id: &str) -> Result<ReferenceTable, ReferenceError> {
    ods_tables()?
        .into_iter()
        .find(|t| t.id == id)
        .ok_or_else(|| ReferenceError::Format(format!("no reference table {id:?}")))
}

/// Table matching a search configuration, if one is bundled.
pub fn ods_table_for(
    k: usize,
    m: usize,
    family: Family,
) -> Result<Option<ReferenceTable>, ReferenceError> {
    Ok(ods_tables()?
        .into_iter()
        .find(|t| t.k == k && t.m == m && t.family == family))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_data_loads() {
        assert_eq!(class_counts().unwrap().len(), 6);
        let l = mflsa_m3().unwrap();
        assert_eq!(l.len(), 240);
        assert!(l[0].1);
        let tables = ods_tables().unwrap();
        assert_eq!(tables.len(), 3);
        for t in &tables {
            for r in &t.rows {
                assert_eq!(r.spectrum.len(), 5);
                let spec = r.encoder_spec().unwrap();
                assert_eq!(spec.nu(), r.nu, "{}", r.encoder);
                assert_eq!(spec.k(), t.k);
                assert!(spec.is_valid(), "{} fails the encoder filters", r.encoder);
                assert_eq!(r.labeling().unwrap().order(), t.m);
            }
        }
        assert_eq!(ods_table("8psk").unwrap().rows_for(4).count(), 3);
        assert!(ods_table("16qam").is_err());
    }

    #[test]
    fn printed_values() {
        assert!(matches_printed(&BigUint::from(240u32), "240"));
        assert!(!matches_printed(&BigUint::from(241u32), "240"));
        assert!(matches_printed(&BigUint::from(1_037_836_800u64), "1.038e9"));
        assert!(matches_printed(&BigUint::from(9_999_360u64), "9.999e6"));
        assert!(!matches_printed(
            &BigUint::from(1_037_836_800u64),
            "1.037e9"
        ));
        assert!(!matches_printed(
            &BigUint::from(1_037_836_800u64),
            "1.038e8"
        ));
        assert_eq!(printed_gap(&BigUint::from(26_314u64), "2.632e4"), Some(1));
        assert_eq!(printed_gap(&BigUint::from(241u32), "240"), None);
    }
}
