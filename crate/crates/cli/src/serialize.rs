//! Matrix output in table, JSON and CSV form, plus parsers for the latter two.

use std::fmt::Write as _;

use graded_o::{GradedMatrix, LaurentPoly, WeylGroup};
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub exp: i32,
    pub coef: i64,
}

/// A graded matrix whose labels are reduced words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledMatrix {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<LaurentPoly>>,
}

#[derive(Serialize, Deserialize)]
struct WireMatrix {
    rows: Vec<String>,
    cols: Vec<String>,
    entries: Vec<Vec<Vec<Term>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    eval: Option<WireEval>,
}

#[derive(Serialize, Deserialize)]
struct WireEval {
    v: i64,
    values: Vec<Vec<String>>,
}

impl LabeledMatrix {
    pub fn from_graded(group: &WeylGroup, m: &GradedMatrix) -> Self {
        Self {
            rows: m.rows.iter().map(|&w| group.word_string(w)).collect(),
            cols: m.cols.iter().map(|&w| group.word_string(w)).collect(),
            entries: m.entries.clone(),
        }
    }

    fn check_shape(&self) -> Result<(), CliError> {
        let ok = self.entries.len() == self.rows.len()
            && self.entries.iter().all(|r| r.len() == self.cols.len());
        if ok {
            Ok(())
        } else {
            Err(CliError::Parse(
                "matrix shape does not match its labels".into(),
            ))
        }
    }

    /// Entries at `v = n`, rendered as integers or fractions; `None` at `v = 0`
    /// when a negative power occurs.
    pub fn evaluate(&self, n: i64) -> Vec<Vec<String>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|p| render_value(p.eval(n))).collect())
            .collect()
    }
}

fn render_value(x: Option<Ratio<i128>>) -> String {
    match x {
        Some(r) if r.is_integer() => r.to_integer().to_string(),
        Some(r) => format!("{}/{}", r.numer(), r.denom()),
        None => "undefined".to_string(),
    }
}

fn terms(p: &LaurentPoly) -> Vec<Term> {
    p.terms().map(|(exp, coef)| Term { exp, coef }).collect()
}

pub fn to_json(m: &LabeledMatrix, eval_v: Option<i64>) -> String {
    let wire = WireMatrix {
        rows: m.rows.clone(),
        cols: m.cols.clone(),
        entries: m
            .entries
            .iter()
            .map(|r| r.iter().map(terms).collect())
            .collect(),
        eval: eval_v.map(|v| WireEval {
            v,
            values: m.evaluate(v),
        }),
    };
    serde_json::to_string(&wire).expect("matrix serializes")
}

pub fn from_json(s: &str) -> Result<LabeledMatrix, CliError> {
    let wire: WireMatrix = serde_json::from_str(s).map_err(|e| CliError::Parse(e.to_string()))?;
    let m = LabeledMatrix {
        rows: wire.rows,
        cols: wire.cols,
        entries: wire
            .entries
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|t| (t.exp, t.coef))))
                    .collect()
            })
            .collect(),
    };
    m.check_shape()?;
    Ok(m)
}

fn write_csv_block(header: &[String], rows: &[String], cells: &[Vec<String>]) -> String {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    let mut head = vec![String::new()];
    head.extend(header.iter().cloned());
    w.write_record(&head).expect("in-memory write");
    for (label, row) in rows.iter().zip(cells) {
        let mut rec = vec![label.clone()];
        rec.extend(row.iter().cloned());
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

/// First row holds the column labels after an empty corner cell; each
/// following row starts with its label.
pub fn to_csv(m: &LabeledMatrix, eval_v: Option<i64>) -> String {
    let cells: Vec<Vec<String>> = m
        .entries
        .iter()
        .map(|r| r.iter().map(|p| p.to_string()).collect())
        .collect();
    let mut out = write_csv_block(&m.cols, &m.rows, &cells);
    if let Some(v) = eval_v {
        let _ = writeln!(out, "\nv={v}");
        out.push_str(&write_csv_block(&m.cols, &m.rows, &m.evaluate(v)));
    }
    out
}

pub fn from_csv(s: &str) -> Result<LabeledMatrix, CliError> {
    let err = |e: csv::Error| CliError::Parse(e.to_string());
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(s.as_bytes());
    let mut records = r.records();
    let head = records
        .next()
        .ok_or_else(|| CliError::Parse("empty CSV".into()))?
        .map_err(err)?;
    let cols: Vec<String> = head.iter().skip(1).map(str::to_string).collect();
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for rec in records {
        let rec = rec.map_err(err)?;
        let mut fields = rec.iter();
        rows.push(fields.next().unwrap_or_default().to_string());
        entries.push(
            fields
                .map(|f| {
                    f.parse::<LaurentPoly>()
                        .map_err(|e| CliError::Parse(e.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    let m = LabeledMatrix {
        rows,
        cols,
        entries,
    };
    m.check_shape()?;
    Ok(m)
}

/// Aligned plain-text table.
pub fn to_table(rows: &[String], cols: &[String], cells: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = std::iter::once(rows.iter().map(String::len).max().unwrap_or(0))
        .chain(cols.iter().map(String::len))
        .collect();
    for row in cells {
        for (k, c) in row.iter().enumerate() {
            widths[k + 1] = widths[k + 1].max(c.len());
        }
    }
    let mut out = String::new();
    let line = |label: &str, fields: &[String], out: &mut String| {
        let _ = write!(out, "{label:<w$}", w = widths[0]);
        for (k, f) in fields.iter().enumerate() {
            let _ = write!(out, "  {f:>w$}", w = widths[k + 1]);
        }
        out.push('\n');
    };
    line("", cols, &mut out);
    for (label, row) in rows.iter().zip(cells) {
        line(label, row, &mut out);
    }
    out
}

pub fn matrix_table(m: &LabeledMatrix, eval_v: Option<i64>) -> String {
    if m.rows.is_empty() && m.cols.is_empty() {
        return "(empty matrix)\n".to_string();
    }
    let cells: Vec<Vec<String>> = m
        .entries
        .iter()
        .map(|r| r.iter().map(|p| p.to_string()).collect())
        .collect();
    let mut out = to_table(&m.rows, &m.cols, &cells);
    if let Some(v) = eval_v {
        let _ = writeln!(out, "\nat v = {v}:");
        out.push_str(&to_table(&m.rows, &m.cols, &m.evaluate(v)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> LabeledMatrix {
        LabeledMatrix {
            rows: vec!["e".into(), "1".into()],
            cols: vec!["e".into(), "1".into()],
            entries: vec![
                vec![LaurentPoly::one(), LaurentPoly::default()],
                vec![LaurentPoly::v_pow(1), LaurentPoly::one()],
            ],
        }
    }

    use num_traits::One;

    #[test]
    fn empty_matrix_json() {
        let m = LabeledMatrix {
            rows: vec![],
            cols: vec![],
            entries: vec![],
        };
        assert_eq!(to_json(&m, None), r#"{"rows":[],"cols":[],"entries":[]}"#);
        assert_eq!(from_json(&to_json(&m, None)).unwrap(), m);
        assert_eq!(from_csv(&to_csv(&m, None)).unwrap(), m);
    }

    #[test]
    fn one_by_one() {
        let m = LabeledMatrix {
            rows: vec!["e".into()],
            cols: vec!["e".into()],
            entries: vec![vec![LaurentPoly::one()]],
        };
        assert_eq!(
            to_json(&m, None),
            r#"{"rows":["e"],"cols":["e"],"entries":[[[{"exp":0,"coef":1}]]]}"#
        );
    }

    #[test]
    fn csv_uses_caret_notation() {
        let m = a1();
        let text = to_csv(&m, None);
        assert_eq!(text, ",e,1\ne,1,0\n1,v,1\n");
        assert_eq!(from_csv(&text).unwrap(), m);
    }

    #[test]
    fn evaluation() {
        assert_eq!(a1().evaluate(2), vec![vec!["1", "0"], vec!["2", "1"]]);
        let m = LabeledMatrix {
            rows: vec!["e".into()],
            cols: vec!["e".into()],
            entries: vec![vec![LaurentPoly::v_pow(-1)]],
        };
        assert_eq!(m.evaluate(2), vec![vec!["1/2"]]);
        assert_eq!(m.evaluate(0), vec![vec!["undefined"]]);
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        assert!(from_json(r#"{"rows":["e"],"cols":[],"entries":[]}"#).is_err());
    }
}
