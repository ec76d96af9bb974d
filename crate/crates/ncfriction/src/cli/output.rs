//! Structured command output with CSV and JSON renderings.
//!
//! Every numeric value is formatted once, to 9 significant digits in
//! scientific notation, and both renderings are derived from that string,
//! so CSV and JSON always encode the same values and repeated runs are
//! byte-identical.

use serde_json::json;

/// One table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum CellValue {
    Num(f64),
    Text(String),
    Flag(bool),
}

impl CellValue {
    pub fn num(x: f64) -> Self {
        CellValue::Num(x)
    }

    pub fn text(s: impl Into<String>) -> Self {
        CellValue::Text(s.into())
    }
}

/// A named, unit-carrying value.
#[derive(Debug, Clone, PartialEq)]
pub struct Quantity {
    pub key: String,
    pub value: CellValue,
    pub unit: String,
}

impl Quantity {
    pub fn new(key: impl Into<String>, value: CellValue, unit: impl Into<String>) -> Self {
        Self {
            key: key.into(),
            value,
            unit: unit.into(),
        }
    }

    pub fn num(key: impl Into<String>, x: f64, unit: impl Into<String>) -> Self {
        Self::new(key, CellValue::Num(x), unit)
    }

    pub fn text(key: impl Into<String>, s: impl Into<String>) -> Self {
        Self::new(key, CellValue::Text(s.into()), "text")
    }
}

/// The full output of one command: shared context values, a column
/// specification (key + unit), data rows, and warnings.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Document {
    pub command: String,
    pub context: Vec<Quantity>,
    /// (key, unit) per column.
    pub columns: Vec<(String, String)>,
    pub rows: Vec<Vec<CellValue>>,
    pub warnings: Vec<String>,
}

impl Document {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            ..Self::default()
        }
    }

    pub fn warn(&mut self, message: impl Into<String>) {
        self.warnings.push(message.into());
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# command: {}\n", self.command));
        for q in &self.context {
            out.push_str(&format!(
                "# {} = {} [{}]\n",
                q.key,
                csv_cell(&q.value),
                q.unit
            ));
        }
        let header: Vec<String> = self
            .columns
            .iter()
            .map(|(key, unit)| format!("{key}[{unit}]"))
            .collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(csv_cell).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        for w in &self.warnings {
            out.push_str(&format!("# warning: {w}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let quantity_json = |q: &Quantity| {
            json!({
                "key": q.key,
                "value": json_cell(&q.value),
                "unit": q.unit,
            })
        };
        let doc = json!({
            "command": self.command,
            "context": self.context.iter().map(quantity_json).collect::<Vec<_>>(),
            "columns": self
                .columns
                .iter()
                .map(|(key, unit)| json!({"key": key, "unit": unit}))
                .collect::<Vec<_>>(),
            "rows": self
                .rows
                .iter()
                .map(|row| row.iter().map(json_cell).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "warnings": self.warnings,
        });
        let mut text = serde_json::to_string_pretty(&doc).expect("document serialization");
        text.push('\n');
        text
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// 9 significant digits, scientific, '.' decimal separator.
pub fn sig9(x: f64) -> String {
    format!("{x:.8e}")
}

/// The f64 actually encoded in the output: the formatted value reparsed,
/// identical between CSV and JSON.
fn canonical(x: f64) -> f64 {
    sig9(x).parse().expect("sig9 output is parseable")
}

fn csv_cell(v: &CellValue) -> String {
    match v {
        CellValue::Num(x) => sig9(*x),
        CellValue::Text(s) => {
            if s.contains(',') || s.contains('"') || s.contains('\n') {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.clone()
            }
        }
        CellValue::Flag(b) => b.to_string(),
    }
}

fn json_cell(v: &CellValue) -> serde_json::Value {
    match v {
        CellValue::Num(x) => {
            let c = canonical(*x);
            serde_json::Number::from_f64(c)
                .map(serde_json::Value::Number)
                .unwrap_or(serde_json::Value::Null)
        }
        CellValue::Text(s) => serde_json::Value::String(s.clone()),
        CellValue::Flag(b) => serde_json::Value::Bool(*b),
    }
}
