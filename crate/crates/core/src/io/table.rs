//! The reference table of m-stable numbers for `m < n ≤ n_max`.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::recursion::Engine;
use crate::symbol::IntersectionSymbol;
use crate::BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TableFormat {
    #[default]
    Tsv,
    Pretty,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tsv" => Ok(TableFormat::Tsv),
            "pretty" => Ok(TableFormat::Pretty),
            other => Err(Error::InvalidArgument(format!(
                "unknown table format {other:?}"
            ))),
        }
    }
}

/// All non-increasing exponent vectors of length `n` summing to `n`, in
/// descending lexicographic order.
pub fn top_exponent_vectors(n: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, cap: usize, prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            let mut v = prefix.clone();
            v.resize(n, 0);
            out.push(v);
            return;
        }
        for part in (1..=left.min(cap)).rev() {
            prefix.push(part);
            go(left - part, part, prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), n, &mut out);
    out
}

/// Exact value, multiplied by 24 when `scale24` is set. Never rounds.
pub fn format_value(value: &BigRational, scale24: bool) -> String {
    if scale24 {
        (value * BigRational::from_integer(BigInt::from(24))).to_string()
    } else {
        value.to_string()
    }
}

struct Group {
    label: String,
    columns: Vec<Vec<String>>,
}

fn cell(
    engine: &Engine,
    group_m: usize,
    merged: bool,
    n: usize,
    scale24: bool,
) -> Result<Vec<String>> {
    let mut entries = Vec::new();
    for d in top_exponent_vectors(n) {
        let sym = IntersectionSymbol::new(&d, group_m)?;
        let value = engine.value(&sym)?;
        if merged && n > 1 {
            let other = engine.value(&sym.at_level(1)?)?;
            if other != value {
                return Err(Error::Verification(format!(
                    "{} differs between m=0 ({value}) and m=1 ({other})",
                    sym.to_tau()
                )));
            }
        }
        entries.push(format!(
            "{} = {}",
            sym.to_tau(),
            format_value(&value, scale24)
        ));
    }
    Ok(entries)
}

fn groups(engine: &Engine, n_max: usize, scale24: bool) -> Result<Vec<Group>> {
    let mut out = Vec::new();
    // m = 0 and m = 1 share a row group; m = 1 is computed and compared.
    let levels = std::iter::once((0, true, "m=0/1".to_string()))
        .chain((2..n_max).map(|m| (m, false, format!("m={m}"))));
    for (m, merged, label) in levels {
        let mut columns = Vec::new();
        for n in 1..=n_max {
            columns.push(if n > m {
                cell(engine, m, merged, n, scale24)?
            } else {
                Vec::new()
            });
        }
        out.push(Group { label, columns });
    }
    Ok(out)
}

/// Renders the table: one row group per level (m=0 and m=1 merged),
/// one column per `n = 1..=n_max`, each cell listing every τ-word.
pub fn format_table(
    engine: &Engine,
    n_max: usize,
    scale24: bool,
    format: TableFormat,
) -> Result<String> {
    if n_max < 1 {
        return Err(Error::InvalidArgument("table needs n_max >= 1".into()));
    }
    let groups = groups(engine, n_max, scale24)?;
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["m".to_string()];
    header.extend((1..=n_max).map(|n| format!("n={n}")));
    rows.push(header);
    for g in &groups {
        let height = g.columns.iter().map(Vec::len).max().unwrap_or(0).max(1);
        for r in 0..height {
            let mut row = vec![if r == 0 {
                g.label.clone()
            } else {
                String::new()
            }];
            row.extend(
                g.columns
                    .iter()
                    .map(|c| c.get(r).cloned().unwrap_or_default()),
            );
            rows.push(row);
        }
    }
    let mut out = String::new();
    match format {
        TableFormat::Tsv => {
            for row in &rows {
                out.push_str(&row.join("\t"));
                out.push('\n');
            }
        }
        TableFormat::Pretty => {
            let widths: Vec<usize> = (0..=n_max)
                .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
                .collect();
            for (i, row) in rows.iter().enumerate() {
                let line: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(text, w)| format!("{text:<w$}"))
                    .collect();
                writeln!(out, "{}", line.join(" | ").trim_end()).unwrap();
                if i == 0 {
                    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
                    writeln!(out, "{}", rule.join("-+-")).unwrap();
                }
            }
        }
    }
    Ok(out)
}
