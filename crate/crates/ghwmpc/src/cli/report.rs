//! Rendering of command results as an aligned table or as line-oriented
//! key=value records. Output bytes depend only on inputs and flags.

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Kv,
}

/// A command result: shared metadata plus one row per record.
pub struct RunReport {
    pub meta: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl RunReport {
    pub fn new(meta: Vec<(String, String)>, columns: Vec<&str>) -> RunReport {
        RunReport {
            meta,
            columns: columns.into_iter().map(String::from).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Table => self.render_table(),
            OutputFormat::Kv => self.render_kv(),
        }
    }

    fn render_table(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.meta {
            out.push_str(&format!("{k}: {v}\n"));
        }
        if self.rows.is_empty() {
            return out;
        }
        if !self.meta.is_empty() {
            out.push('\n');
        }
        let mut widths: Vec<usize> = self.columns.iter().map(String::len).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let render_line = |cells: &[String]| -> String {
            let mut line = String::new();
            for (i, cell) in cells.iter().enumerate() {
                if i > 0 {
                    line.push_str("  ");
                }
                line.push_str(cell);
                let pad = widths[i] - cell.len();
                line.extend(std::iter::repeat_n(' ', pad));
            }
            line.trim_end().to_string() + "\n"
        };
        out.push_str(&render_line(&self.columns));
        for row in &self.rows {
            out.push_str(&render_line(row));
        }
        out
    }

    fn render_kv(&self) -> String {
        let mut records = Vec::new();
        if self.rows.is_empty() {
            let mut rec = String::new();
            for (k, v) in &self.meta {
                rec.push_str(&format!("{k}={v}\n"));
            }
            return rec;
        }
        for row in &self.rows {
            let mut rec = String::new();
            for (k, v) in &self.meta {
                rec.push_str(&format!("{k}={v}\n"));
            }
            for (col, cell) in self.columns.iter().zip(row) {
                rec.push_str(&format!("{col}={cell}\n"));
            }
            records.push(rec);
        }
        records.join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> RunReport {
        let mut rep = RunReport::new(
            vec![("method".into(), "h2-nested".into()), ("digest".into(), "abcd".into())],
            vec!["r", "value", "witness"],
        );
        rep.push_row(vec!["1".into(), "5".into(), "alpha=(1,0)".into()]);
        rep.push_row(vec!["2".into(), "8".into(), "alpha=(1,0)".into()]);
        rep
    }

    #[test]
    fn table_mode_aligns_columns_without_trailing_spaces() {
        let text = sample().render(OutputFormat::Table);
        assert_eq!(
            text,
            "method: h2-nested\ndigest: abcd\n\n\
             r  value  witness\n1  5      alpha=(1,0)\n2  8      alpha=(1,0)\n"
        );
        for line in text.lines() {
            assert_eq!(line, line.trim_end());
        }
    }

    #[test]
    fn kv_mode_repeats_metadata_per_record() {
        let text = sample().render(OutputFormat::Kv);
        assert_eq!(
            text,
            "method=h2-nested\ndigest=abcd\nr=1\nvalue=5\nwitness=alpha=(1,0)\n\n\
             method=h2-nested\ndigest=abcd\nr=2\nvalue=8\nwitness=alpha=(1,0)\n"
        );
    }

    #[test]
    fn empty_reports_render_just_the_metadata() {
        let rep = RunReport::new(vec![("status".into(), "ok".into())], vec!["r"]);
        assert_eq!(rep.render(OutputFormat::Table), "status: ok\n");
        assert_eq!(rep.render(OutputFormat::Kv), "status=ok\n");
    }
}
