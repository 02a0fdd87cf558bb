//! Table writers. Floats go through the shortest round-trip formatting of
//! the csv and serde_json serializers.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use crate::args::{Format, SinkArgs};
use crate::error::{CliError, CliResult};

pub struct Sink {
    out: Box<dyn Write>,
    pub format: Format,
}

impl Sink {
    pub fn open(args: &SinkArgs) -> CliResult<Self> {
        let out: Box<dyn Write> = match &args.output {
            Some(path) => Box::new(BufWriter::new(create(path)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        Ok(Self {
            out,
            format: args.format,
        })
    }

    /// Writes one CSV table with a header row. `header` is used when `rows`
    /// is empty.
    pub fn csv_table<R: Serialize>(&mut self, header: &[&str], rows: &[R]) -> CliResult<()> {
        let mut w = csv::WriterBuilder::new()
            .has_headers(!rows.is_empty())
            .from_writer(&mut self.out);
        if rows.is_empty() {
            w.write_record(header).map_err(write_error)?;
        }
        for row in rows {
            w.serialize(row).map_err(write_error)?;
        }
        w.flush().map_err(|e| write_error(e.into()))
    }

    pub fn blank_line(&mut self) -> CliResult<()> {
        writeln!(self.out).map_err(|e| write_error(e.into()))
    }

    pub fn json<V: Serialize>(&mut self, value: &V) -> CliResult<()> {
        serde_json::to_writer_pretty(&mut self.out, value)
            .map_err(|e| CliError::usage(format!("cannot write output: {e}")))?;
        writeln!(self.out).map_err(|e| write_error(e.into()))
    }

    pub fn finish(mut self) -> CliResult<()> {
        self.out.flush().map_err(|e| write_error(e.into()))
    }
}

fn create(path: &Path) -> CliResult<File> {
    File::create(path)
        .map_err(|e| CliError::usage(format!("cannot create {}: {e}", path.display())))
}

fn write_error(e: csv::Error) -> CliError {
    CliError::usage(format!("cannot write output: {e}"))
}
