//! Record ingestion from CSV or JSON-lines sources.
//!
//! CSV needs a header naming the `T`, `I` and `F` columns (case-insensitive),
//! optionally with an `id` column. JSON-lines needs one object per line with
//! numeric keys `"t"`, `"i"`, `"f"` and an optional string `"id"`. Blank
//! JSON-lines are skipped. Line numbers in errors are 1-based and count the
//! header.

use std::collections::HashMap;
use std::fmt;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Read};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::types::{make_triple, NeutrosophicTriple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InputFormat {
    #[default]
    Csv,
    Jsonl,
}

impl InputFormat {
    /// Guesses from a file extension; anything other than `.jsonl`/`.ndjson` is CSV.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext)
                if ext.eq_ignore_ascii_case("jsonl") || ext.eq_ignore_ascii_case("ndjson") =>
            {
                InputFormat::Jsonl
            }
            _ => InputFormat::Csv,
        }
    }
}

impl FromStr for InputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(InputFormat::Csv),
            "jsonl" => Ok(InputFormat::Jsonl),
            other => Err(Error::InvalidParameter(format!(
                "unknown input format {other:?}"
            ))),
        }
    }
}

impl fmt::Display for InputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InputFormat::Csv => "csv",
            InputFormat::Jsonl => "jsonl",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Source {
    #[default]
    Stdin,
    File(PathBuf),
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Stdin => f.write_str("<stdin>"),
            Source::File(p) => write!(f, "{}", p.display()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    pub id: Option<String>,
    pub triple: NeutrosophicTriple,
    /// 1-based line of the record in its source.
    pub line: u64,
}

/// Validated records in input order. Ids, when present, are unique.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RecordBatch {
    pub records: Vec<Record>,
    pub source: Source,
}

impl RecordBatch {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Builds a batch from in-memory records, enforcing id uniqueness.
    pub fn from_records(records: Vec<Record>, source: Source) -> Result<Self> {
        check_unique_ids(&records)?;
        Ok(RecordBatch { records, source })
    }
}

/// Reads a batch from `path`, or standard input when `path` is `None` or `-`.
/// Without an explicit format, the file extension decides.
pub fn read_input(path: Option<&Path>, format: Option<InputFormat>) -> Result<RecordBatch> {
    match path {
        None => parse_input(
            io::stdin().lock(),
            format.unwrap_or_default(),
            Source::Stdin,
        ),
        Some(p) if p.as_os_str() == "-" => parse_input(
            io::stdin().lock(),
            format.unwrap_or_default(),
            Source::Stdin,
        ),
        Some(p) => {
            let file = File::open(p)?;
            let format = format.unwrap_or_else(|| InputFormat::from_path(p));
            parse_input(BufReader::new(file), format, Source::File(p.to_path_buf()))
        }
    }
}

pub fn parse_input<R: Read>(reader: R, format: InputFormat, source: Source) -> Result<RecordBatch> {
    let records = match format {
        InputFormat::Csv => parse_csv(reader)?,
        InputFormat::Jsonl => parse_jsonl(BufReader::new(reader))?,
    };
    RecordBatch::from_records(records, source)
}

fn parse_csv<R: Read>(reader: R) -> Result<Vec<Record>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);

    let headers = rdr.headers().map_err(|e| csv_error(e, 1))?.clone();
    let column = |name: &str| headers.iter().position(|h| h.eq_ignore_ascii_case(name));
    let (Some(t_col), Some(i_col), Some(f_col)) = (column("t"), column("i"), column("f")) else {
        return Err(Error::Parse {
            line: 1,
            reason: format!(
                "header must name columns T, I and F (optionally id), found {:?}",
                headers.iter().collect::<Vec<_>>()
            ),
        });
    };
    let id_col = column("id");

    let mut records = Vec::new();
    let mut row = csv::StringRecord::new();
    loop {
        match rdr.read_record(&mut row) {
            Ok(false) => break,
            Ok(true) => {}
            Err(e) => return Err(csv_error(e, 0)),
        }
        let line = row.position().map(|p| p.line()).unwrap_or(0);
        if row.len() != headers.len() {
            return Err(Error::Parse {
                line,
                reason: format!("expected {} fields, found {}", headers.len(), row.len()),
            });
        }
        let value = |col: usize, name: &str| -> Result<f64> {
            let raw = &row[col];
            raw.parse::<f64>().map_err(|_| Error::Parse {
                line,
                reason: format!("column {name}: {raw:?} is not a decimal number"),
            })
        };
        let (t, i, f) = (value(t_col, "T")?, value(i_col, "I")?, value(f_col, "F")?);
        let triple = make_triple(t, i, f).map_err(|e| Error::Record {
            line,
            source: Box::new(e),
        })?;
        let id = id_col.map(|c| row[c].to_string()).filter(|s| !s.is_empty());
        records.push(Record { id, triple, line });
    }
    Ok(records)
}

fn csv_error(e: csv::Error, fallback_line: u64) -> Error {
    let line = e.position().map(|p| p.line()).unwrap_or(fallback_line);
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        kind => Error::Parse {
            line,
            reason: format!("{kind:?}"),
        },
    }
}

#[derive(Debug, Deserialize)]
struct JsonRecord {
    t: f64,
    i: f64,
    f: f64,
    #[serde(default)]
    id: Option<String>,
}

fn parse_jsonl<R: BufRead>(reader: R) -> Result<Vec<Record>> {
    let mut records = Vec::new();
    for (idx, text) in reader.lines().enumerate() {
        let line = idx as u64 + 1;
        let text = text?;
        if text.trim().is_empty() {
            continue;
        }
        let raw: JsonRecord = serde_json::from_str(&text).map_err(|e| Error::Parse {
            line,
            reason: e.to_string(),
        })?;
        let triple = make_triple(raw.t, raw.i, raw.f).map_err(|e| Error::Record {
            line,
            source: Box::new(e),
        })?;
        records.push(Record {
            id: raw.id.filter(|s| !s.is_empty()),
            triple,
            line,
        });
    }
    Ok(records)
}

fn check_unique_ids(records: &[Record]) -> Result<()> {
    let mut seen: HashMap<&str, u64> = HashMap::new();
    for r in records {
        if let Some(id) = r.id.as_deref() {
            if seen.insert(id, r.line).is_some() {
                return Err(Error::DuplicateId {
                    line: r.line,
                    id: id.to_string(),
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn csv(text: &str) -> Result<RecordBatch> {
        parse_input(text.as_bytes(), InputFormat::Csv, Source::Stdin)
    }

    fn jsonl(text: &str) -> Result<RecordBatch> {
        parse_input(text.as_bytes(), InputFormat::Jsonl, Source::Stdin)
    }

    #[test]
    fn csv_with_id() {
        let b = csv("id,T,I,F\na,1,0,0\n").unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b.records[0].id.as_deref(), Some("a"));
        assert_eq!(b.records[0].triple.as_array(), [1.0, 0.0, 0.0]);
        assert_eq!(b.records[0].line, 2);
    }

    #[test]
    fn csv_without_id_and_with_spaces() {
        let b = csv("T, I, F\n0.6, 0.5, 0.4\n0.1,0.2,0.3\n").unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b.records[0].id, None);
        assert_eq!(b.records[1].triple.as_array(), [0.1, 0.2, 0.3]);
    }

    #[test]
    fn csv_out_of_range_reports_line() {
        let err = csv("id,T,I,F\na,1.5,0,0\n").unwrap_err();
        match &err {
            Error::Record { line: 2, source } => {
                assert!(matches!(**source, Error::OutOfRange { component: "T", .. }))
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(err.to_string().starts_with("line 2:"), "{err}");
    }

    #[test]
    fn csv_malformed_rows() {
        assert!(matches!(
            csv("id,T,I,F\na,x,0,0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            csv("id,T,I,F\na,0,0\nb,0,0,0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            csv("id,T,I,F\na,0,0,0\nb,0,0,0,0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            csv("a,b,c\n1,0,0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn duplicate_ids_rejected() {
        let err = csv("id,T,I,F\na,1,0,0\nb,0,0,0\na,0,1,0\n").unwrap_err();
        assert!(matches!(err, Error::DuplicateId { line: 4, ref id } if id == "a"));
    }

    #[test]
    fn jsonl_records() {
        let b =
            jsonl("{\"t\":0.6,\"i\":0.5,\"f\":0.4}\n\n{\"id\":\"x\",\"t\":1,\"i\":0,\"f\":0}\n")
                .unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b.records[0].triple.as_array(), [0.6, 0.5, 0.4]);
        assert_eq!(b.records[1].id.as_deref(), Some("x"));
        assert_eq!(b.records[1].line, 3);
    }

    #[test]
    fn jsonl_errors() {
        assert!(matches!(
            jsonl("{\"t\":0.6,\"i\":0.5}\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            jsonl("{\"t\":1}\nnot json\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            jsonl("{\"t\":0,\"i\":0,\"f\":0}\n{\"t\":0,\"i\":2,\"f\":0}\n"),
            Err(Error::Record { line: 2, .. })
        ));
    }

    #[test]
    fn format_from_extension() {
        assert_eq!(
            InputFormat::from_path(Path::new("a.jsonl")),
            InputFormat::Jsonl
        );
        assert_eq!(InputFormat::from_path(Path::new("a.csv")), InputFormat::Csv);
        assert_eq!("JSONL".parse::<InputFormat>().unwrap(), InputFormat::Jsonl);
        assert!("xml".parse::<InputFormat>().is_err());
    }
}
