//! One-row-per-ring invariant tables and their CSV form.

use std::fmt;
use std::io;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{
    build_graph_with, class_one_certificate, min_dominating_set_with, DominatingSearch, Length,
};
use crate::nilclean::NilCleanProfile;
use crate::ring::{build_ring, RingSpec};

/// A table cell: a value, or `skipped` when the ring or the search was
/// over a cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cell<T> {
    Value(T),
    Skipped,
}

impl<T> Cell<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Cell::Value(v) => Some(v),
            Cell::Skipped => None,
        }
    }
}

/// Plain-text cell contents.
pub trait CellText: Sized {
    fn to_text(&self) -> String;
    fn from_text(s: &str) -> Option<Self>;
}

impl CellText for usize {
    fn to_text(&self) -> String {
        self.to_string()
    }
    fn from_text(s: &str) -> Option<Self> {
        s.parse().ok()
    }
}

impl CellText for bool {
    fn to_text(&self) -> String {
        self.to_string()
    }
    fn from_text(s: &str) -> Option<Self> {
        s.parse().ok()
    }
}

impl CellText for Length {
    fn to_text(&self) -> String {
        self.to_plain()
    }
    fn from_text(s: &str) -> Option<Self> {
        Length::from_str(s).ok()
    }
}

impl<T: CellText> fmt::Display for Cell<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Value(v) => f.write_str(&v.to_text()),
            Cell::Skipped => f.write_str("skipped"),
        }
    }
}

impl<T: CellText> Serialize for Cell<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de, T: CellText> Deserialize<'de> for Cell<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        match text.as_str() {
            "skipped" => Ok(Cell::Skipped),
            t => T::from_text(t)
                .map(Cell::Value)
                .ok_or_else(|| serde::de::Error::custom(format!("bad cell {t:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub spec: String,
    pub order: Cell<usize>,
    pub idempotents: Cell<usize>,
    pub nilpotents: Cell<usize>,
    pub nilclean: Cell<usize>,
    pub nil_clean: Cell<bool>,
    pub weak_nil_clean: Cell<bool>,
    pub field: Cell<bool>,
    pub components: Cell<usize>,
    pub girth: Cell<Length>,
    pub diameter: Cell<Length>,
    pub bipartite: Cell<bool>,
    pub dominating_number: Cell<usize>,
    pub max_degree: Cell<usize>,
    pub chromatic_index: Cell<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanOptions {
    pub max_order: usize,
    pub dominating: DominatingSearch,
    pub coloring_budget: u64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            max_order: crate::harness::DEFAULT_MAX_ORDER,
            dominating: DominatingSearch::default(),
            coloring_budget: 2_000_000,
        }
    }
}

impl ScanRow {
    fn skipped(spec: String) -> Self {
        ScanRow {
            spec,
            order: Cell::Skipped,
            idempotents: Cell::Skipped,
            nilpotents: Cell::Skipped,
            nilclean: Cell::Skipped,
            nil_clean: Cell::Skipped,
            weak_nil_clean: Cell::Skipped,
            field: Cell::Skipped,
            components: Cell::Skipped,
            girth: Cell::Skipped,
            diameter: Cell::Skipped,
            bipartite: Cell::Skipped,
            dominating_number: Cell::Skipped,
            max_degree: Cell::Skipped,
            chromatic_index: Cell::Skipped,
        }
    }

    pub fn compute(spec: &RingSpec, options: &ScanOptions) -> Self {
        let name = spec.to_string();
        if spec
            .order_bound()
            .is_none_or(|o| o > options.max_order as u64)
        {
            return ScanRow::skipped(name);
        }
        let Ok(r) = build_ring(spec) else {
            return ScanRow::skipped(name);
        };
        let profile = NilCleanProfile::compute(&r);
        let g = build_graph_with(&r, &profile.nilclean);
        let dominating = min_dominating_set_with(&g, &options.dominating).map(|s| s.len());
        let certificate = class_one_certificate(&g, options.coloring_budget);
        ScanRow {
            spec: name,
            order: Cell::Value(r.order()),
            idempotents: Cell::Value(profile.idempotents.len()),
            nilpotents: Cell::Value(profile.nilpotents.len()),
            nilclean: Cell::Value(profile.nilclean.len()),
            nil_clean: Cell::Value(profile.is_nil_clean_ring),
            weak_nil_clean: Cell::Value(profile.is_weak_nil_clean_ring),
            field: Cell::Value(profile.is_field),
            components: Cell::Value(g.connected_components().len()),
            girth: Cell::Value(g.girth()),
            diameter: Cell::Value(g.diameter()),
            bipartite: Cell::Value(g.is_bipartite()),
            dominating_number: dominating.map_or(Cell::Skipped, Cell::Value),
            max_degree: Cell::Value(g.max_degree()),
            chromatic_index: certificate.map_or(Cell::Skipped, |c| Cell::Value(c.color_count)),
        }
    }
}

/// Rows for every spec, sorted by spec string.
pub fn scan(specs: &[RingSpec], options: &ScanOptions) -> Vec<ScanRow> {
    let mut rows: Vec<ScanRow> = specs
        .par_iter()
        .map(|s| ScanRow::compute(s, options))
        .collect();
    rows.sort_by(|a, b| a.spec.cmp(&b.spec));
    rows
}

fn csv_error(e: csv::Error) -> Error {
    Error::Parse {
        input: "csv".to_string(),
        reason: e.to_string(),
    }
}

pub fn write_csv<W: io::Write>(rows: &[ScanRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row).map_err(csv_error)?;
    }
    w.flush().map_err(|e| csv_error(e.into()))
}

pub fn read_csv<R: io::Read>(input: R) -> Result<Vec<ScanRow>> {
    csv::Reader::from_reader(input)
        .deserialize()
        .map(|r| r.map_err(csv_error))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn specs(list: &[&str]) -> Vec<RingSpec> {
        list.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn rows_and_round_trip() {
        let options = ScanOptions {
            max_order: 50,
            ..ScanOptions::default()
        };
        let rows = scan(
            &specs(&["Z8", "Z10", "GF(5,2)", "Z101", "M2(Z2)"]),
            &options,
        );
        let names: Vec<&str> = rows.iter().map(|r| r.spec.as_str()).collect();
        assert_eq!(names, ["GF(5,2)", "M2(Z2)", "Z10", "Z101", "Z8"]);
        let z8 = &rows[4];
        assert_eq!(z8.diameter, Cell::Value(Length::Finite(1)));
        assert_eq!(z8.dominating_number, Cell::Value(1));
        assert_eq!(rows[2].diameter, Cell::Value(Length::Finite(4)));
        assert_eq!(rows[0].girth, Cell::Value(Length::Finite(10)));
        assert_eq!(rows[0].diameter, Cell::Value(Length::Infinite));
        assert_eq!(rows[3], ScanRow::skipped("Z101".to_string()));

        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("spec,order,idempotents,"));
        assert!(text.contains("\"GF(5,2)\",25,2,1,2,false,false,true,3,10,inf,true,"));
        assert!(text.contains("Z101,skipped,"));
        assert_eq!(read_csv(buf.as_slice()).unwrap(), rows);
    }

    #[test]
    fn bad_cells_are_rejected() {
        let text = "spec,order,idempotents,nilpotents,nilclean,nil_clean,weak_nil_clean,field,components,girth,diameter,bipartite,dominating_number,max_degree,chromatic_index\nZ2,two,2,1,2,true,true,true,1,inf,1,true,1,1,1\n";
        assert!(read_csv(text.as_bytes()).is_err());
    }
}
