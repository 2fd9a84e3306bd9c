//! Degree table: one row per knot, with CSV, JSON and Markdown output and a diff against expected values.

use std::fmt::Write as _;

use serde::Serialize;

use crate::arith::{Catalog, KnotRecord, LexDegree};
use crate::enumerate::DegreeTriple;
use crate::planereduce::{degree_verdict, Bounds, DegreeReport, Rule, Status, VerdictOptions, Witness};
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct DiagramCell {
    pub diagram: String,
    pub word: String,
    pub base: String,
    pub cost: u32,
    pub b_lower: u32,
    pub provenance: Vec<Rule>,
    pub override_row: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LexCell {
    pub b: u32,
    pub b_upper: u32,
    pub c_lo: u32,
    pub c_hi: u32,
}

impl LexCell {
    /// `11` or `11/14` for a range.
    pub fn c_text(&self) -> String {
        if self.c_lo == self.c_hi {
            self.c_lo.to_string()
        } else {
            format!("{}/{}", self.c_lo, self.c_hi)
        }
    }

    pub fn b_text(&self) -> String {
        if self.b == self.b_upper {
            self.b.to_string()
        } else {
            format!("{}/{}", self.b, self.b_upper)
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub name: String,
    pub alpha: String,
    pub beta: String,
    pub crossing_number: u32,
    pub degc: DegreeTriple,
    pub diagrams: Vec<DiagramCell>,
    pub lex: LexCell,
    pub status: Status,
    pub starred: bool,
    pub witnesses: Vec<Witness>,
}

impl TableRow {
    pub fn from_report(k: &KnotRecord, r: &DegreeReport) -> TableRow {
        let diagrams = r
            .diagrams
            .iter()
            .map(|d| DiagramCell {
                diagram: d.diagram.to_text(),
                word: d.bound.word.to_text(),
                base: d.bound.trace.base.to_text(),
                cost: d.bound.trace.cost,
                b_lower: d.bound.value,
                provenance: d.bound.provenance(),
                override_row: d.bound.override_row.clone(),
            })
            .collect();
        TableRow {
            name: k.name.clone(),
            alpha: k.fraction.alpha().to_string(),
            beta: k.fraction.beta().to_string(),
            crossing_number: k.crossing_number,
            degc: r.degc,
            diagrams,
            lex: LexCell { b: r.b_lower, b_upper: r.b_upper, c_lo: r.c_lower, c_hi: r.c_upper },
            status: r.status,
            starred: r.starred(),
            witnesses: r.witnesses.clone(),
        }
    }
}

/// Rows for `names` in the given order; all catalog rows when `names` is empty.
pub fn build_table(names: &[String], catalog: &Catalog, bounds: &Bounds, opts: &VerdictOptions) -> Result<Vec<TableRow>> {
    let records: Vec<&KnotRecord> = if names.is_empty() {
        catalog.records.iter().collect()
    } else {
        names.iter().map(|n| catalog.get(n).ok_or_else(|| Error::UnknownKnot(n.clone()))).collect::<Result<_>>()?
    };
    records
        .into_iter()
        .map(|k| degree_verdict(k, bounds, opts).map(|r| TableRow::from_report(k, &r)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub name: String,
    pub column: String,
    pub expected: String,
    pub got: String,
}

/// Compares `degC` and the lexicographic degree with the expected columns of `expected`.
pub fn diff_expected(rows: &[TableRow], expected: &Catalog) -> Vec<Mismatch> {
    let mut out = Vec::new();
    let mut push = |name: &str, column: &str, e: String, g: String| {
        if e != g {
            out.push(Mismatch { name: name.into(), column: column.into(), expected: e, got: g });
        }
    };
    for row in rows {
        let Some(k) = expected.get(&row.name) else {
            push(&row.name, "name", "present".into(), "missing".into());
            continue;
        };
        if let Some(d) = k.expected_degc {
            push(&row.name, "degC_b", d.b.to_string(), row.degc.b.to_string());
            push(&row.name, "degC_c", d.c.to_string(), row.degc.c.to_string());
        }
        if let Some(LexDegree { b, c_lo, c_hi }) = k.expected_lex {
            push(&row.name, "lex_b", b.to_string(), row.lex.b_text());
            let e = LexCell { b, b_upper: b, c_lo, c_hi };
            push(&row.name, "lex_c", e.c_text(), row.lex.c_text());
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Markdown,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Format> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "md" | "markdown" => Ok(Format::Markdown),
            _ => Err(Error::Parse { line: 0, msg: format!("unknown format {s:?}") }),
        }
    }
}

fn diagrams_text(r: &TableRow) -> String {
    r.diagrams.iter().map(|d| format!("D({})", d.diagram)).collect::<Vec<_>>().join(" ")
}

fn bounds_text(r: &TableRow) -> String {
    r.diagrams
        .iter()
        .map(|d| {
            let rules: Vec<String> = d.provenance.iter().map(|p| format!("{p:?}").to_lowercase()).collect();
            format!("{}[{}]", d.b_lower, rules.join("+"))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn emit(rows: &[TableRow], format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(rows).map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["name", "alpha", "beta", "degC_b", "degC_c", "diagrams", "bounds", "lex_b", "lex_c", "starred"])?;
            for r in rows {
                w.write_record([
                    r.name.clone(),
                    r.alpha.clone(),
                    r.beta.clone(),
                    r.degc.b.to_string(),
                    r.degc.c.to_string(),
                    diagrams_text(r),
                    bounds_text(r),
                    r.lex.b_text(),
                    r.lex.c_text(),
                    r.starred.to_string(),
                ])?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
        Format::Markdown => {
            let mut s = String::from("| knot | alpha/beta | degC | diagrams | b bounds | lex |\n|---|---|---|---|---|---|\n");
            for r in rows {
                let lex = format!("(3,{},{})", r.lex.b_text(), r.lex.c_text());
                let lex = if r.starred { format!("**{lex}**") } else { lex };
                let _ = writeln!(
                    s,
                    "| {} | {}/{} | {} | {} | {} | {} |",
                    r.name,
                    r.alpha,
                    r.beta,
                    r.degc,
                    diagrams_text(r),
                    bounds_text(r),
                    lex
                );
            }
            Ok(s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(names: &[&str]) -> Vec<TableRow> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        build_table(&names, &Catalog::builtin(), &Bounds::builtin(), &VerdictOptions::default()).unwrap()
    }

    #[test]
    fn six_two_row() {
        let r = rows(&["6_2"]);
        assert_eq!((r[0].lex.b, r[0].lex.c_text()), (7, "11".to_string()));
        assert!(r[0].starred);
        let json = emit(&r, Format::Json).unwrap();
        assert!(json.contains("\"name\": \"6_2\""));
        let csv = emit(&r, Format::Csv).unwrap();
        assert!(csv.starts_with("name,alpha,beta,degC_b,degC_c,"));
        assert!(emit(&r, Format::Markdown).unwrap().contains("**(3,7,11)**"));
    }

    #[test]
    fn diff_detects_changes() {
        let r = rows(&["3_1", "6_2"]);
        let cat = Catalog::builtin();
        assert!(diff_expected(&r, &cat).is_empty());
        let mut bad = r.clone();
        bad[1].lex.c_hi = 14;
        let d = diff_expected(&bad, &cat);
        assert_eq!(d.len(), 1);
        assert_eq!((d[0].column.as_str(), d[0].got.as_str()), ("lex_c", "11/14"));
    }

    #[test]
    fn unknown_knot() {
        let names = vec!["9_99".to_string()];
        assert!(build_table(&names, &Catalog::builtin(), &Bounds::builtin(), &VerdictOptions::default()).is_err());
    }
}
