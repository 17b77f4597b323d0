//! Plain-text table rendering. Numeric cells come in as already
//! rounded decimal strings; the only job here is alignment.

/// Renders rows as space-separated columns, each padded to its widest
/// cell, first row being the header. Cells are right-aligned, rows are
/// newline-terminated, trailing spaces trimmed.
pub fn table(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; columns];
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            for _ in cell.chars().count()..widths[i] {
                line.push(' ');
            }
            line.push_str(cell);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Renders a slice of display-able naturals as `[1, 2, 3]`.
pub fn bracket_list<T: std::fmt::Display>(items: &[T]) -> String {
    let inner: Vec<String> = items.iter().map(T::to_string).collect();
    format!("[{}]", inner.join(", "))
}
