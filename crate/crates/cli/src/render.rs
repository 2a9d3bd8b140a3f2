use std::fmt::Write;

use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Tsv,
}

pub struct Table {
    pub title: Option<String>,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: impl Into<Option<String>>, headers: &[&str]) -> Self {
        Self {
            title: title.into(),
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    /// Two-column key/value table.
    pub fn kv(title: impl Into<Option<String>>, pairs: Vec<(&str, String)>) -> Self {
        let mut t = Self::new(title, &["field", "value"]);
        for (k, v) in pairs {
            t.row(vec![k.to_string(), v]);
        }
        t
    }
}

pub struct Rendered {
    pub json: Value,
    pub tables: Vec<Table>,
}

pub fn emit(out: &Rendered, format: Format) -> String {
    match format {
        Format::Json => {
            serde_json::to_string_pretty(&out.json).expect("JSON values serialize") + "\n"
        }
        Format::Tsv => {
            let mut s = String::new();
            for t in &out.tables {
                if let Some(title) = &t.title {
                    writeln!(s, "# {title}").unwrap();
                }
                writeln!(s, "{}", t.headers.join("\t")).unwrap();
                for r in &t.rows {
                    writeln!(s, "{}", r.join("\t")).unwrap();
                }
            }
            s
        }
        Format::Table => {
            let mut s = String::new();
            for (k, t) in out.tables.iter().enumerate() {
                if k > 0 {
                    s.push('\n');
                }
                if let Some(title) = &t.title {
                    writeln!(s, "{title}").unwrap();
                }
                let mut widths: Vec<usize> = t.headers.iter().map(|h| h.chars().count()).collect();
                for r in &t.rows {
                    for (w, c) in widths.iter_mut().zip(r) {
                        *w = (*w).max(c.chars().count());
                    }
                }
                let line = |cells: &[String]| {
                    cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, &w)| format!("{c:<w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                        .trim_end()
                        .to_string()
                };
                writeln!(s, "{}", line(&t.headers)).unwrap();
                writeln!(
                    s,
                    "{}",
                    widths
                        .iter()
                        .map(|&w| "-".repeat(w))
                        .collect::<Vec<_>>()
                        .join("  ")
                )
                .unwrap();
                for r in &t.rows {
                    writeln!(s, "{}", line(r)).unwrap();
                }
            }
            s
        }
    }
}
