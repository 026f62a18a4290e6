//! Output plumbing: 17-significant-digit float formatting, CSV/JSON writers,
//! and the stdout-or-file sink.
//!
//! Data files are written byte-deterministically: fixed column orders, fixed
//! key orders, LF line endings, and every double printed with
//! `{:.16e}` (17 significant digits, exact round-trip).

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

/// Round-trippable decimal form of a double, 17 significant digits.
/// Negative zero is folded onto zero so equal values print identically.
pub fn g17(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

pub fn sink(out: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

pub fn write_csv(
    w: &mut dyn Write,
    meta: &[(&str, String)],
    columns: &[&str],
    rows: impl Iterator<Item = Vec<f64>>,
) -> io::Result<()> {
    for (key, value) in meta {
        write!(w, "# {key} = {value}\n")?;
    }
    write!(w, "{}\n", columns.join(","))?;
    for row in rows {
        debug_assert_eq!(row.len(), columns.len());
        let cells: Vec<String> = row.iter().map(|&v| g17(v)).collect();
        write!(w, "{}\n", cells.join(","))?;
    }
    w.flush()
}

/// Minimal JSON emitter for the data files: one top-level object with
/// `meta` and `data` keys, floats in 17-digit e-notation (valid JSON).
pub struct JsonBuilder {
    buf: String,
}

impl JsonBuilder {
    pub fn new() -> Self {
        JsonBuilder { buf: String::new() }
    }

    pub fn raw(&mut self, s: &str) -> &mut Self {
        self.buf.push_str(s);
        self
    }

    pub fn string(&mut self, s: &str) -> &mut Self {
        self.buf.push('"');
        for c in s.chars() {
            match c {
                '"' => self.buf.push_str("\\\""),
                '\\' => self.buf.push_str("\\\\"),
                '\n' => self.buf.push_str("\\n"),
                c if (c as u32) < 0x20 => {
                    self.buf.push_str(&format!("\\u{:04x}", c as u32));
                }
                c => self.buf.push(c),
            }
        }
        self.buf.push('"');
        self
    }

    pub fn number(&mut self, x: f64) -> &mut Self {
        if x.is_finite() {
            self.buf.push_str(&g17(x));
        } else {
            // JSON has no Inf/NaN; should not occur in practice
            self.buf.push_str("null");
        }
        self
    }

    pub fn number_array(&mut self, xs: impl Iterator<Item = f64>) -> &mut Self {
        self.buf.push('[');
        for (i, x) in xs.enumerate() {
            if i > 0 {
                self.buf.push(',');
            }
            self.number(x);
        }
        self.buf.push(']');
        self
    }

    pub fn finish(self) -> String {
        self.buf
    }
}

/// Write a `{meta, data}` JSON object where meta is a flat map of numbers
/// and data is produced by the caller.
pub fn write_json_object(
    w: &mut dyn Write,
    meta: &[(&str, MetaValue)],
    data_body: String,
) -> io::Result<()> {
    let mut j = JsonBuilder::new();
    j.raw("{\"meta\":{");
    for (i, (key, value)) in meta.iter().enumerate() {
        if i > 0 {
            j.raw(",");
        }
        j.string(key).raw(":");
        match value {
            MetaValue::Number(x) => {
                j.number(*x);
            }
        }
    }
    j.raw("},\"data\":").raw(&data_body).raw("}\n");
    w.write_all(j.finish().as_bytes())?;
    w.flush()
}

pub enum MetaValue {
    Number(f64),
}
