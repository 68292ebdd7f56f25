//! Rendering of command results as an aligned table, CSV or JSON.

use crate::config::{Format, RunConfig};

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(f64),
    Int(i64),
    Bool(bool),
    Text(String),
    List(Vec<f64>),
    Null,
}

impl Value {
    fn render(&self, digits: usize) -> String {
        match self {
            Value::Num(x) => sig(*x, digits),
            Value::Int(i) => i.to_string(),
            Value::Bool(b) => b.to_string(),
            Value::Text(s) => s.clone(),
            Value::List(v) => v.iter().map(|x| sig(*x, digits)).collect::<Vec<_>>().join(","),
            Value::Null => String::new(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Value::Num(x) => json_number(*x),
            Value::Int(i) => (*i).into(),
            Value::Bool(b) => (*b).into(),
            Value::Text(s) => s.clone().into(),
            Value::List(v) => v.iter().map(|&x| json_number(x)).collect(),
            Value::Null => serde_json::Value::Null,
        }
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Num(x)
    }
}

impl From<usize> for Value {
    fn from(x: usize) -> Self {
        Value::Int(x as i64)
    }
}

impl From<bool> for Value {
    fn from(x: bool) -> Self {
        Value::Bool(x)
    }
}

impl From<&str> for Value {
    fn from(x: &str) -> Self {
        Value::Text(x.to_string())
    }
}

impl From<String> for Value {
    fn from(x: String) -> Self {
        Value::Text(x)
    }
}

impl<T: Into<Value>> From<Option<T>> for Value {
    fn from(x: Option<T>) -> Self {
        x.map_or(Value::Null, Into::into)
    }
}

/// Digits in CSV and JSON.
pub const MACHINE_DIGITS: usize = 15;
/// Digits in the human table.
pub const TABLE_DIGITS: usize = 6;

/// `x` with `digits` significant digits in the style of C's `%g`.
pub fn sig(x: f64, digits: usize) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let digits = digits.max(1);
    let e = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = e.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn json_number(x: f64) -> serde_json::Value {
    let rounded: f64 = sig(x, MACHINE_DIGITS).parse().unwrap_or(x);
    serde_json::Number::from_f64(rounded).map_or(serde_json::Value::Null, serde_json::Value::Number)
}

/// Result of one command: rows under fixed columns plus summary facts.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
    pub summary: Vec<(&'static str, Value)>,
}

impl Report {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Report { columns, rows: Vec::new(), summary: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

pub fn render(report: &Report, config: &RunConfig) -> String {
    match config.format {
        Format::Table => table(report),
        Format::Csv => csv_text(report),
        Format::Json => json_text(report, config),
    }
}

fn table(report: &Report) -> String {
    let mut out = String::new();
    if report.rows.len() == 1 {
        let width = report.columns.iter().map(|c| c.len()).max().unwrap_or(0);
        for (c, v) in report.columns.iter().zip(&report.rows[0]) {
            out.push_str(&format!("{c:<width$}  {}\n", v.render(TABLE_DIGITS)));
        }
    } else {
        let cells: Vec<Vec<String>> =
            report.rows.iter().map(|r| r.iter().map(|v| v.render(TABLE_DIGITS)).collect()).collect();
        let widths: Vec<usize> = report
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| cells.iter().map(|r| r[i].len()).chain([c.len()]).max().unwrap_or(0))
            .collect();
        let line = |items: Vec<&str>| {
            let mut s = items
                .iter()
                .zip(&widths)
                .map(|(t, w)| format!("{t:>w$}"))
                .collect::<Vec<_>>()
                .join("  ");
            s.truncate(s.trim_end().len());
            s.push('\n');
            s
        };
        out.push_str(&line(report.columns.clone()));
        for r in &cells {
            out.push_str(&line(r.iter().map(String::as_str).collect()));
        }
    }
    for (k, v) in &report.summary {
        out.push_str(&format!("# {k}: {}\n", v.render(TABLE_DIGITS)));
    }
    out
}

fn csv_text(report: &Report) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&report.columns).expect("write to memory");
    for r in &report.rows {
        w.write_record(r.iter().map(|v| v.render(MACHINE_DIGITS))).expect("write to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 output")
}

fn json_text(report: &Report, config: &RunConfig) -> String {
    use serde_json::{Map, Value as J};
    let object = |pairs: &[(&str, Value)]| -> J {
        J::Object(pairs.iter().map(|(k, v)| (k.to_string(), v.json())).collect::<Map<_, _>>())
    };
    let mut meta = Map::new();
    meta.insert("version".into(), env!("CARGO_PKG_VERSION").into());
    meta.insert("command".into(), config.command.as_str().into());
    meta.insert("config".into(), object(&config.echo()));
    meta.insert("summary".into(), object(&report.summary));
    let rows: Vec<J> = report
        .rows
        .iter()
        .map(|r| {
            let pairs: Vec<(&str, Value)> = report.columns.iter().copied().zip(r.iter().cloned()).collect();
            object(&pairs)
        })
        .collect();
    let mut top = Map::new();
    top.insert("meta".into(), J::Object(meta));
    top.insert("rows".into(), J::Array(rows));
    let mut s = serde_json::to_string_pretty(&J::Object(top)).expect("serializable");
    s.push('\n');
    s
}
