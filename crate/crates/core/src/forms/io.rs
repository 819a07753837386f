//! JSON record format for complex-valued forms.
//!
//! A form is a flat JSON array of records
//! `{"degree": r, "dirs": [..], "k": [k0,k1,k2,k3], "re": .., "im": ..}`
//! sorted by `(degree, k, dirs)`. Floats are written in shortest round-trip
//! notation, so writing and re-reading is bit-exact.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::complex4::{DirectionSet, MultiIndex};
use crate::error::{Error, Result};
use crate::forms::InhomogeneousForm;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormRecord {
    pub degree: usize,
    pub dirs: Vec<usize>,
    pub k: [i64; 4],
    pub re: f64,
    pub im: f64,
}

/// Records in `(degree, k, dirs)` order.
pub fn to_records(w: &InhomogeneousForm) -> Vec<FormRecord> {
    let mut records: Vec<FormRecord> = w
        .iter()
        .map(|(cell, v)| FormRecord { degree: cell.degree(), dirs: cell.dirs.axes(), k: cell.k.0, re: v.re, im: v.im })
        .collect();
    records.sort_by(|a, b| (a.degree, a.k, &a.dirs).cmp(&(b.degree, b.k, &b.dirs)));
    records
}

/// Validates records and sums them into a form. Repeated cells add up.
pub fn from_records(records: &[FormRecord]) -> Result<InhomogeneousForm> {
    let mut out = InhomogeneousForm::zero();
    for (index, rec) in records.iter().enumerate() {
        let schema = |reason: String| Error::Schema { index, reason };
        if rec.degree > 4 {
            return Err(schema(format!("degree {} out of range", rec.degree)));
        }
        let dirs = DirectionSet::from_axes(&rec.dirs)
            .ok_or_else(|| schema(format!("invalid direction list {:?}", rec.dirs)))?;
        if rec.dirs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(schema(format!("direction list {:?} is not strictly increasing", rec.dirs)));
        }
        if dirs.degree() != rec.degree {
            return Err(schema(format!("{} directions for a degree-{} record", dirs.degree(), rec.degree)));
        }
        if !rec.re.is_finite() || !rec.im.is_finite() {
            return Err(schema("non-finite coefficient".into()));
        }
        out.add(MultiIndex(rec.k), dirs, Complex64::new(rec.re, rec.im));
    }
    Ok(out)
}

pub fn to_json(w: &InhomogeneousForm) -> String {
    serde_json::to_string_pretty(&to_records(w)).expect("records always serialize")
}

pub fn from_json(text: &str) -> Result<InhomogeneousForm> {
    let values: Vec<serde_json::Value> = serde_json::from_str(text)?;
    let mut records = Vec::with_capacity(values.len());
    for (index, v) in values.into_iter().enumerate() {
        let rec = serde_json::from_value(v).map_err(|e| Error::Schema { index, reason: e.to_string() })?;
        records.push(rec);
    }
    from_records(&records)
}

pub fn serialize_form(w: &InhomogeneousForm, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, to_json(w))?;
    Ok(())
}

pub fn parse_form(path: impl AsRef<Path>) -> Result<InhomogeneousForm> {
    from_json(&fs::read_to_string(path)?)
}
