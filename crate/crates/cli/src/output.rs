use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;

use crate::config::Format;

pub fn render<T: Serialize>(rows: &[T], format: Format) -> io::Result<Vec<u8>> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in rows {
                w.serialize(r).map_err(io::Error::other)?;
            }
            w.into_inner().map_err(|e| io::Error::other(e.to_string()))
        }
        Format::Json => {
            let mut buf = serde_json::to_vec_pretty(rows).map_err(io::Error::other)?;
            buf.push(b'\n');
            Ok(buf)
        }
    }
}

pub fn emit(bytes: &[u8], out: Option<&Path>) -> io::Result<()> {
    match out {
        Some(p) => std::fs::write(p, bytes),
        None => {
            let mut so = io::stdout().lock();
            so.write_all(bytes)?;
            so.flush()
        }
    }
}
