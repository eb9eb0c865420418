//! Canonical JSON documents and the CSV tables rendered from them.

use serde::Serialize;

use crate::characters::CharacterTable;
use crate::error::{Error, Result};
use crate::partitions::{dimension, Partition};
use crate::rational;
use crate::spectral::SpectrumTable;
use crate::verify::CriterionReport;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterRow {
    pub irrep: Partition,
    pub dimension: u128,
    pub values: Vec<i128>,
}

/// The character table as a serializable document; columns follow
/// `classes`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterTableDoc {
    pub n: usize,
    pub classes: Vec<Partition>,
    pub class_sizes: Vec<u128>,
    pub rows: Vec<CharacterRow>,
    pub orthogonality_ok: bool,
}

impl CharacterTableDoc {
    pub fn new(table: &CharacterTable) -> Self {
        let k = table.irreps.len();
        let nfact = table.class_sizes.iter().sum::<u128>() as i128;
        let orthogonality_ok = (0..k)
            .all(|a| (0..k).all(|b| table.orthogonality_sum(a, b) == if a == b { nfact } else { 0 }));
        CharacterTableDoc {
            n: table.n,
            classes: table.classes.clone(),
            class_sizes: table.class_sizes.clone(),
            rows: table
                .irreps
                .iter()
                .enumerate()
                .map(|(a, alpha)| CharacterRow {
                    irrep: alpha.clone(),
                    dimension: dimension(alpha),
                    values: table.row(a).to_vec(),
                })
                .collect(),
            orthogonality_ok,
        }
    }

    /// One row per irreducible character, one column per class; the
    /// second line holds the class sizes.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = writer();
        let mut header = vec!["irrep".to_string()];
        header.extend(self.classes.iter().map(Partition::to_string));
        w.write_record(&header).map_err(csv_err)?;
        let mut sizes = vec!["class_size".to_string()];
        sizes.extend(self.class_sizes.iter().map(u128::to_string));
        w.write_record(&sizes).map_err(csv_err)?;
        for row in &self.rows {
            let mut rec = vec![row.irrep.to_string()];
            rec.extend(row.values.iter().map(i128::to_string));
            w.write_record(&rec).map_err(csv_err)?;
        }
        finish(w)
    }
}

/// `partition,eigenvalue,multiplicity` rows.
pub fn spectrum_csv(table: &SpectrumTable) -> Result<String> {
    let mut w = writer();
    w.write_record(["partition", "eigenvalue", "multiplicity"]).map_err(csv_err)?;
    for e in &table.entries {
        w.write_record([
            e.partition.to_string(),
            rational::to_string(&e.eigenvalue),
            e.multiplicity.to_string(),
        ])
        .map_err(csv_err)?;
    }
    finish(w)
}

/// `id,name,status,checks,failed` rows.
pub fn criteria_csv(reports: &[CriterionReport]) -> Result<String> {
    let mut w = writer();
    w.write_record(["id", "name", "status", "checks", "failed"]).map_err(csv_err)?;
    for r in reports {
        w.write_record([
            r.id.to_string(),
            r.name.to_string(),
            if r.passed { "PASS" } else { "FAIL" }.to_string(),
            r.checks.to_string(),
            r.failed.to_string(),
        ])
        .map_err(csv_err)?;
    }
    finish(w)
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Serialization(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// Compact JSON on one line, newline-terminated.
pub fn json_line<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string(value).map_err(|e| Error::Serialization(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new())
}

fn csv_err(e: csv::Error) -> Error {
    Error::Serialization(e.to_string())
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::Serialization(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Serialization(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{cayley_spectrum, WeightedCayleySpec};

    #[test]
    fn s3_table_csv() {
        let doc = CharacterTableDoc::new(&CharacterTable::new(3));
        assert!(doc.orthogonality_ok);
        assert_eq!(
            doc.to_csv().unwrap(),
            "irrep,[3],\"[2,1]\",\"[1,1,1]\"\nclass_size,2,3,1\n[3],1,1,1\n\"[2,1]\",-1,0,2\n\"[1,1,1]\",1,-1,1\n"
        );
    }

    #[test]
    fn spectrum_rows() {
        let spec = WeightedCayleySpec::uniform_derangement(3).unwrap();
        let csv = spectrum_csv(&cayley_spectrum(&spec)).unwrap();
        assert_eq!(csv, "partition,eigenvalue,multiplicity\n[3],1,1\n\"[2,1]\",-1/2,4\n\"[1,1,1]\",1,1\n");
    }

    #[test]
    fn json_line_is_single_line() {
        let line = json_line(&vec![1, 2, 3]).unwrap();
        assert_eq!(line, "[1,2,3]\n");
    }
}
