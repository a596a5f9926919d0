//! Output rendering: every command produces key/value rows plus a JSON value,
//! and the chosen format decides how they hit stdout.

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
    Plain,
}

pub struct Output {
    pub json: serde_json::Value,
    pub rows: Vec<(String, String)>,
}

impl Output {
    pub fn new(json: serde_json::Value) -> Self {
        Output {
            json,
            rows: Vec::new(),
        }
    }

    pub fn row(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.rows.push((key.into(), value.to_string()));
        self
    }

    fn csv_quote(field: &str) -> String {
        if field.contains([',', '"', '\n']) {
            format!("\"{}\"", field.replace('"', "\"\""))
        } else {
            field.to_string()
        }
    }

    pub fn print(&self, format: Format) {
        match format {
            Format::Json => println!(
                "{}",
                serde_json::to_string_pretty(&self.json).expect("serializable")
            ),
            Format::Csv => {
                println!("key,value");
                for (k, v) in &self.rows {
                    println!("{},{}", Self::csv_quote(k), Self::csv_quote(v));
                }
            }
            Format::Markdown => {
                println!("| key | value |");
                println!("|---|---|");
                for (k, v) in &self.rows {
                    println!("| {k} | {v} |");
                }
            }
            Format::Plain => {
                for (k, v) in &self.rows {
                    println!("{k}: {v}");
                }
            }
        }
    }
}

/// Renders a fraction of indices as a compact display list like `[2, 3, 7]`.
pub fn index_list(indices: impl IntoIterator<Item = usize>) -> String {
    let parts: Vec<String> = indices.into_iter().map(|i| i.to_string()).collect();
    format!("[{}]", parts.join(", "))
}
