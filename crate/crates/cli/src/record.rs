//! The machine-readable output record and its three renderings.
//!
//! One record per classified variety. Field order is fixed by declaration;
//! absent fields are omitted in JSON and left empty in CSV. Exact rationals
//! are always serialized as `p/q` strings (`p` when the denominator is 1),
//! never as floats.

use horofano::chern::Ch2Report;
use horofano::pasquier::{Family, InvariantRecord, Table1Check};
use horofano::{ClassifiedVariety, Verdict};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct InvariantsOut {
    pub c1_x: i64,
    pub c1_y: i64,
    pub c1_z: i64,
    pub codim_y: i64,
    pub codim_z: i64,
    pub dim_x: i64,
    pub dim_y: i64,
    pub dim_z: i64,
}

impl From<&InvariantRecord> for InvariantsOut {
    fn from(rec: &InvariantRecord) -> Self {
        InvariantsOut {
            c1_x: rec.c1_x,
            c1_y: rec.c1_y,
            c1_z: rec.c1_z,
            codim_y: rec.codim_y,
            codim_z: rec.codim_z,
            dim_x: rec.dim_x,
            dim_y: rec.dim_y,
            dim_z: rec.dim_z,
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct OutputRecord {
    pub descriptor: String,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub two_fano: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ch2_sy: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ch2_sz: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<InvariantsOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tangent_stable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_polystable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rule: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<String>,
}

fn kind_of(variety: &ClassifiedVariety) -> &'static str {
    match variety {
        ClassifiedVariety::Homogeneous(_) => "homogeneous",
        ClassifiedVariety::Horospherical(_) => "horospherical",
        ClassifiedVariety::LinearSection(_) => "linear-section",
        ClassifiedVariety::WeightedCi(_) => "weighted-ci",
    }
}

impl OutputRecord {
    fn empty(descriptor: String, kind: &str) -> Self {
        OutputRecord {
            descriptor,
            kind: kind.to_string(),
            two_fano: None,
            ch2_sy: None,
            ch2_sz: None,
            invariants: None,
            tangent_stable: None,
            k_polystable: None,
            rule: None,
            checks: None,
        }
    }

    /// Record for the `invariants` command: the table row plus check status.
    pub fn for_invariants(family: Family, rec: &InvariantRecord, check: &Table1Check) -> Self {
        let mut out = Self::empty(family.to_string(), "horospherical");
        out.invariants = Some(rec.into());
        out.checks = Some(if check.all_pass() {
            "pass".to_string()
        } else {
            let failing: Vec<&str> = check
                .columns
                .iter()
                .filter(|c| !c.passed())
                .map(|c| c.column)
                .collect();
            format!("fail:{}", failing.join(","))
        });
        out
    }

    /// Record for `classify` and `enumerate`.
    pub fn for_verdict(
        variety: &ClassifiedVariety,
        verdict: &Verdict,
        ch2: Option<&Ch2Report>,
    ) -> Self {
        let mut out = Self::empty(variety.to_string(), kind_of(variety));
        out.two_fano = Some(verdict.two_fano);
        out.tangent_stable = verdict.tangent_stable;
        out.k_polystable = verdict.k_polystable;
        out.rule = Some(verdict.rule.clone());
        if let Some(report) = ch2 {
            out.ch2_sy = Some(report.ch2_dot_sy.to_string());
            out.ch2_sz = Some(report.ch2_dot_sz.to_string());
        }
        if let ClassifiedVariety::Horospherical(f) = variety {
            if let Ok(rec) = horofano::pasquier::invariants(*f) {
                out.invariants = Some((&rec).into());
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }

    /// Key-value rendering for a single record.
    pub fn render_table(&self) -> String {
        let mut lines: Vec<(&str, String)> = vec![
            ("descriptor", self.descriptor.clone()),
            ("kind", self.kind.clone()),
        ];
        if let Some(v) = self.two_fano {
            lines.push(("two_fano", v.to_string()));
        }
        if let Some(v) = &self.ch2_sy {
            lines.push(("ch2.S_Y", v.clone()));
        }
        if let Some(v) = &self.ch2_sz {
            lines.push(("ch2.S_Z", v.clone()));
        }
        if let Some(inv) = &self.invariants {
            lines.push(("c1(X)", inv.c1_x.to_string()));
            lines.push(("c1(Y)", inv.c1_y.to_string()));
            lines.push(("c1(Z)", inv.c1_z.to_string()));
            lines.push(("codim Y", inv.codim_y.to_string()));
            lines.push(("codim Z", inv.codim_z.to_string()));
            lines.push(("dim X", inv.dim_x.to_string()));
            lines.push(("dim Y", inv.dim_y.to_string()));
            lines.push(("dim Z", inv.dim_z.to_string()));
        }
        if let Some(v) = self.tangent_stable {
            lines.push(("tangent_stable", v.to_string()));
        }
        if let Some(v) = self.k_polystable {
            lines.push(("k_polystable", v.to_string()));
        }
        if let Some(v) = &self.rule {
            lines.push(("rule", v.clone()));
        }
        if let Some(v) = &self.checks {
            lines.push(("checks", v.clone()));
        }
        let width = lines.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (key, value) in lines {
            out.push_str(&format!("{key:<width$}  {value}\n"));
        }
        out
    }
}

const CSV_HEADER: [&str; 17] = [
    "descriptor",
    "kind",
    "two_fano",
    "ch2_sy",
    "ch2_sz",
    "c1_x",
    "c1_y",
    "c1_z",
    "codim_y",
    "codim_z",
    "dim_x",
    "dim_y",
    "dim_z",
    "tangent_stable",
    "k_polystable",
    "rule",
    "checks",
];

fn csv_row(r: &OutputRecord) -> Vec<String> {
    let opt = |v: &Option<String>| v.clone().unwrap_or_default();
    let opt_bool = |v: Option<bool>| v.map(|b| b.to_string()).unwrap_or_default();
    let inv = |f: fn(&InvariantsOut) -> i64| {
        r.invariants
            .as_ref()
            .map(|i| f(i).to_string())
            .unwrap_or_default()
    };
    vec![
        r.descriptor.clone(),
        r.kind.clone(),
        opt_bool(r.two_fano),
        opt(&r.ch2_sy),
        opt(&r.ch2_sz),
        inv(|i| i.c1_x),
        inv(|i| i.c1_y),
        inv(|i| i.c1_z),
        inv(|i| i.codim_y),
        inv(|i| i.codim_z),
        inv(|i| i.dim_x),
        inv(|i| i.dim_y),
        inv(|i| i.dim_z),
        opt_bool(r.tangent_stable),
        opt_bool(r.k_polystable),
        opt(&r.rule),
        opt(&r.checks),
    ]
}

/// CSV with the fixed header row; rationals stay `p/q` strings.
pub fn render_csv(records: &[OutputRecord]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(CSV_HEADER).expect("in-memory write");
    for r in records {
        writer.write_record(csv_row(r)).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

/// Aligned fixed-column table for sweeps.
pub fn render_aligned_table(records: &[OutputRecord]) -> String {
    let header = [
        "descriptor",
        "two_fano",
        "ch2_sy",
        "ch2_sz",
        "tangent_stable",
        "k_polystable",
        "rule",
    ];
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            vec![
                r.descriptor.clone(),
                r.two_fano.map(|b| b.to_string()).unwrap_or_default(),
                r.ch2_sy.clone().unwrap_or_default(),
                r.ch2_sz.clone().unwrap_or_default(),
                r.tangent_stable.map(|b| b.to_string()).unwrap_or_default(),
                r.k_polystable.map(|b| b.to_string()).unwrap_or_default(),
                r.rule.clone().unwrap_or_default(),
            ]
        })
        .collect();
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let render_row = |cells: &[String]| -> String {
        let mut line = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(&format!("{cell:<w$}"));
        }
        line.trim_end().to_string()
    };
    let header_cells: Vec<String> = header.iter().map(|s| s.to_string()).collect();
    let mut out = render_row(&header_cells);
    out.push('\n');
    for row in &rows {
        out.push_str(&render_row(row));
        out.push('\n');
    }
    out
}
