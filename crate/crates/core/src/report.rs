//! Tabular reports rendered either as comma-separated machine output (full
//! precision) or as aligned text (scores to 4 decimals).

use std::fmt::Write as _;

use crate::stats::format_p_value;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(u64),
    Score(f64),
    PValue(f64),
}

impl Cell {
    fn machine(&self) -> String {
        match self {
            Cell::Text(s) => csv_escape(s),
            Cell::Int(v) => v.to_string(),
            Cell::Score(v) | Cell::PValue(v) => v.to_string(),
        }
    }

    fn display(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(v) => v.to_string(),
            Cell::Score(v) => format!("{v:.4}"),
            Cell::PValue(v) => format_p_value(*v),
        }
    }

    fn right_aligned(&self) -> bool {
        !matches!(self, Cell::Text(_))
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(title: impl Into<String>, headers: &[&str]) -> Self {
        Table {
            title: title.into(),
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn column(&self, header: &str) -> Option<usize> {
        self.headers.iter().position(|h| h == header)
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    pub tables: Vec<Table>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn table(&self, title: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.title == title)
    }

    /// One CSV block per table, preceded by a `# title` line and separated
    /// by blank lines. Notes follow as `# note:` lines.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (i, t) in self.tables.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let _ = writeln!(out, "# {}", t.title);
            let headers: Vec<String> = t.headers.iter().map(|h| csv_escape(h)).collect();
            let _ = writeln!(out, "{}", headers.join(","));
            for r in &t.rows {
                let cells: Vec<String> = r.iter().map(Cell::machine).collect();
                let _ = writeln!(out, "{}", cells.join(","));
            }
        }
        for n in &self.notes {
            let _ = writeln!(out, "# note: {n}");
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, t) in self.tables.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let _ = writeln!(out, "{}", t.title);
            let rendered: Vec<Vec<String>> = t.rows.iter().map(|r| r.iter().map(Cell::display).collect()).collect();
            let mut widths: Vec<usize> = t.headers.iter().map(|h| h.chars().count()).collect();
            for r in &rendered {
                for (w, c) in widths.iter_mut().zip(r) {
                    *w = (*w).max(c.chars().count());
                }
            }
            let header: Vec<String> = t
                .headers
                .iter()
                .zip(&widths)
                .map(|(h, &w)| format!("{h:<w$}"))
                .collect();
            let _ = writeln!(out, "{}", header.join("  ").trim_end());
            let rule: usize = widths.iter().sum::<usize>() + 2 * widths.len().saturating_sub(1);
            let _ = writeln!(out, "{}", "-".repeat(rule));
            for (cells, raw) in rendered.iter().zip(&t.rows) {
                let line: Vec<String> = cells
                    .iter()
                    .zip(raw)
                    .zip(&widths)
                    .map(|((c, cell), &w)| {
                        if cell.right_aligned() {
                            format!("{c:>w$}")
                        } else {
                            format!("{c:<w$}")
                        }
                    })
                    .collect();
                let _ = writeln!(out, "{}", line.join("  ").trim_end());
            }
        }
        if !self.notes.is_empty() {
            out.push('\n');
            for n in &self.notes {
                let _ = writeln!(out, "note: {n}");
            }
        }
        out
    }
}
