use std::collections::HashMap;

use crate::ach::{AchMatrix, CellLabel, Evidence, Hypothesis};
use crate::error::{Error, Result};
use crate::framework::ArgumentId;

fn csv_error(row: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Csv {
        row,
        column,
        message: message.into(),
    }
}

/// Reads `id,uncertainty,<h1>,<h2>,...` followed by one row per piece of
/// evidence. Rows and columns in errors are 1-based.
///
/// ```
/// let m = argvoi::io::parse_ach_csv("id,uncertainty,h1\ne1,likely,II\n").unwrap();
/// assert_eq!(m.hypotheses().len(), 1);
/// assert_eq!(m.cell(0, 0), argvoi::CellLabel::II);
/// ```
pub fn parse_ach_csv(text: &str) -> Result<AchMatrix> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut records = reader.records();
    let header = match records.next() {
        Some(r) => r.map_err(|e| csv_error(1, 1, e.to_string()))?,
        None => return Err(csv_error(1, 1, "empty file")),
    };
    for (column, expected) in ["id", "uncertainty"].into_iter().enumerate() {
        if header.get(column) != Some(expected) {
            return Err(csv_error(1, column + 1, format!("expected `{expected}`")));
        }
    }
    let mut seen: HashMap<String, (usize, usize)> = HashMap::new();
    let mut claim = |id: &str, row: usize, column: usize| -> Result<ArgumentId> {
        let parsed = ArgumentId::new(id).map_err(|e| csv_error(row, column, e.to_string()))?;
        if let Some((r, c)) = seen.insert(id.to_string(), (row, column)) {
            return Err(csv_error(
                row,
                column,
                format!("duplicate id `{id}` (first at row {r}, column {c})"),
            ));
        }
        Ok(parsed)
    };
    let hypotheses = header
        .iter()
        .enumerate()
        .skip(2)
        .map(|(c, h)| {
            Ok(Hypothesis {
                id: claim(h, 1, c + 1)?,
                text: None,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if hypotheses.is_empty() {
        return Err(Error::NoHypotheses);
    }
    let width = header.len();
    let mut evidence = Vec::new();
    let mut rows = Vec::new();
    for (i, record) in records.enumerate() {
        let row = i + 2;
        let record = record.map_err(|e| csv_error(row, 1, e.to_string()))?;
        if record.len() == 1 && record.get(0) == Some("") {
            continue;
        }
        if record.len() != width {
            return Err(csv_error(
                row,
                record.len().min(width) + 1,
                format!("row has {} fields, header has {width}", record.len()),
            ));
        }
        let uncertainty = &record[1];
        if uncertainty.is_empty() {
            return Err(csv_error(row, 2, "missing uncertainty label"));
        }
        evidence.push(Evidence {
            id: claim(&record[0], row, 1)?,
            text: None,
            uncertainty: uncertainty.to_string(),
        });
        let cells = record
            .iter()
            .enumerate()
            .skip(2)
            .map(|(c, cell)| {
                cell.parse::<CellLabel>()
                    .map_err(|m| csv_error(row, c + 1, m))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(cells);
    }
    AchMatrix::new(hypotheses, evidence, rows)
}

/// Writes a matrix in the layout read by [`parse_ach_csv`].
pub fn render_ach_csv(matrix: &AchMatrix) -> String {
    let mut writer = csv::WriterBuilder::new().from_writer(Vec::new());
    let header = ["id", "uncertainty"]
        .into_iter()
        .chain(matrix.hypotheses().iter().map(|h| h.id.as_str()));
    writer.write_record(header).expect("writing to memory");
    for (i, e) in matrix.evidence().iter().enumerate() {
        let record = [e.id.as_str(), e.uncertainty.as_str()]
            .into_iter()
            .chain(matrix.row(i).iter().map(|l| l.name()));
        writer.write_record(record).expect("writing to memory");
    }
    String::from_utf8(writer.into_inner().expect("flushing to memory"))
        .expect("csv output is UTF-8")
}
