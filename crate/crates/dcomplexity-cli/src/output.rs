//! Rendering of command results as an aligned table, CSV or JSON. Counts
//! are serialized as decimal strings so arbitrary precision survives every
//! format.

use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

pub struct Report {
    command: String,
    no_header: bool,
    params: Vec<(String, String)>,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Report {
    pub fn new(command: &str, no_header: bool) -> Self {
        Report {
            command: command.to_string(),
            no_header,
            params: Vec::new(),
            header: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn param(&mut self, name: &str, value: impl ToString) {
        self.params.push((name.to_string(), value.to_string()));
    }

    pub fn result_row(&mut self, header: Vec<String>, rows: Vec<Vec<String>>) {
        self.header = header;
        self.rows = rows;
    }

    pub fn print(&self, format: Format) {
        print!("{}", self.render(format));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.render_table(),
            Format::Csv => self.render_csv(),
            Format::Json => self.render_json(),
        }
    }

    fn header_line(&self) -> String {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        format!(
            "# dcx {} {} at {}",
            self.command,
            params.join(" "),
            chrono::Utc::now().to_rfc3339()
        )
    }

    fn render_table(&self) -> String {
        let mut out = String::new();
        if !self.no_header {
            out.push_str(&self.header_line());
            out.push('\n');
        }
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                if i >= widths.len() {
                    widths.push(0);
                }
                widths[i] = widths[i].max(cell.len());
            }
        }
        let render = |cells: &[String]| -> String {
            cells
                .iter()
                .enumerate()
                .map(|(i, c)| format!("{:>width$}", c, width = widths[i]))
                .collect::<Vec<_>>()
                .join("  ")
        };
        out.push_str(&render(&self.header));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&render(row));
            out.push('\n');
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        if !self.no_header {
            out.push_str(&self.header_line());
            out.push('\n');
        }
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    fn render_json(&self) -> String {
        let mut params = Map::new();
        for (k, v) in &self.params {
            params.insert(k.clone(), Value::String(v.clone()));
        }
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (name, cell) in self.header.iter().zip(row) {
                    obj.insert(name.clone(), Value::String(cell.clone()));
                }
                Value::Object(obj)
            })
            .collect();
        let doc = json!({
            "command": self.command,
            "params": Value::Object(params),
            "results": rows,
        });
        let mut out = serde_json::to_string_pretty(&doc).expect("serializable");
        out.push('\n');
        out
    }
}
