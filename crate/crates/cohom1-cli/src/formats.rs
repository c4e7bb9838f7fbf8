//! File formats: the JSON subalgebra schema consumed by `classify`, and
//! the CSV / PLY point-cloud writers produced by `orbit`.
//!
//! Floats are serialized with Rust's shortest round-trip decimal notation,
//! so a written cloud re-parses to bit-identical coordinates.

use cohom1_core::{LieElement, MinkVector, SoMatrix, Subalgebra};
use serde::{Deserialize, Serialize};
use std::io::{self, Write};

/// One basis element: a square matrix (rows of the linear part, which must
/// satisfy the `so(n,1)` identity) and a translation vector.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BasisElementFile {
    pub matrix: Vec<Vec<f64>>,
    pub vector: Vec<f64>,
}

/// On-disk subalgebra description.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubalgebraFile {
    pub ambient_dim: usize,
    pub basis: Vec<BasisElementFile>,
}

impl SubalgebraFile {
    /// Snapshot of an in-memory subalgebra.
    pub fn from_subalgebra(h: &Subalgebra) -> Self {
        let d = h.ambient_dim();
        let basis = h
            .basis()
            .iter()
            .map(|b| BasisElementFile {
                matrix: (0..d)
                    .map(|i| (0..d).map(|j| b.linear.entry(i, j)).collect())
                    .collect(),
                vector: b.trans.coords().to_vec(),
            })
            .collect();
        SubalgebraFile { ambient_dim: d, basis }
    }

    /// Validates shapes and algebra membership, producing the subalgebra.
    /// Error strings name the offending basis index and field.
    pub fn into_subalgebra(self) -> Result<Subalgebra, String> {
        let d = self.ambient_dim;
        if d < 2 {
            return Err(format!("ambient_dim must be at least 2, got {d}"));
        }
        if self.basis.is_empty() {
            return Err(String::from("basis must not be empty"));
        }
        let mut elements = Vec::with_capacity(self.basis.len());
        for (k, b) in self.basis.iter().enumerate() {
            if b.matrix.len() != d || b.matrix.iter().any(|row| row.len() != d) {
                return Err(format!("basis[{k}].matrix must be {d} rows of {d} entries"));
            }
            if b.vector.len() != d {
                return Err(format!("basis[{k}].vector must have {d} entries"));
            }
            let rows: Vec<&[f64]> = b.matrix.iter().map(|r| r.as_slice()).collect();
            let linear = SoMatrix::from_rows(&rows)
                .map_err(|e| format!("basis[{k}].matrix: {e}"))?;
            let trans = MinkVector::new(b.vector.clone())
                .map_err(|e| format!("basis[{k}].vector: {e}"))?;
            let elem = LieElement::new(linear, trans)
                .map_err(|e| format!("basis[{k}]: {e}"))?;
            elements.push(elem);
        }
        Subalgebra::new(d, elements).map_err(|e| format!("basis: {e}"))
    }
}

/// Parses the JSON text of a `SubalgebraFile` and validates it.
pub fn parse_subalgebra(text: &str) -> Result<Subalgebra, String> {
    let file: SubalgebraFile =
        serde_json::from_str(text).map_err(|e| format!("invalid subalgebra file: {e}"))?;
    file.into_subalgebra()
}

/// CSV header `x1,...,x{n+1},label` for ambient dimension `dim`.
pub fn csv_header(dim: usize) -> String {
    let mut cols: Vec<String> = (1..=dim).map(|i| format!("x{i}")).collect();
    cols.push(String::from("label"));
    cols.join(",")
}

/// Writes a labeled point cloud as CSV. Labels use the orbit-label display
/// form, which never contains commas.
pub fn write_csv<W: Write>(
    out: &mut W,
    dim: usize,
    rows: &[(MinkVector, String)],
) -> io::Result<()> {
    writeln!(out, "{}", csv_header(dim))?;
    for (p, label) in rows {
        let mut cols: Vec<String> = p.coords().iter().map(|x| format!("{x}")).collect();
        cols.push(label.clone());
        writeln!(out, "{}", cols.join(","))?;
    }
    Ok(())
}

/// Parses a CSV point cloud back into coordinates and labels.
pub fn parse_csv(text: &str, dim: usize) -> Result<Vec<(MinkVector, String)>, String> {
    let mut lines = text.lines();
    let header = lines.next().ok_or("empty file")?;
    if header != csv_header(dim) {
        return Err(format!("unexpected header {header:?}"));
    }
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split(',').collect();
        if cols.len() != dim + 1 {
            return Err(format!("row {}: expected {} columns", i + 2, dim + 1));
        }
        let mut coords = Vec::with_capacity(dim);
        for c in &cols[..dim] {
            coords.push(c.parse::<f64>().map_err(|e| format!("row {}: {e}", i + 2))?);
        }
        let p = MinkVector::new(coords).map_err(|e| format!("row {}: {e}", i + 2))?;
        rows.push((p, cols[dim].to_string()));
    }
    Ok(rows)
}

fn ply_property_names(dim: usize) -> Vec<String> {
    match dim {
        2 => vec![String::from("x"), String::from("y")],
        3 => vec![String::from("x"), String::from("y"), String::from("z")],
        _ => (1..=dim).map(|i| format!("x{i}")).collect(),
    }
}

/// Writes the cloud as an ASCII PLY vertex list (no faces).
pub fn write_ply<W: Write>(
    out: &mut W,
    dim: usize,
    rows: &[(MinkVector, String)],
) -> io::Result<()> {
    writeln!(out, "ply")?;
    writeln!(out, "format ascii 1.0")?;
    writeln!(out, "comment orbit point cloud")?;
    writeln!(out, "element vertex {}", rows.len())?;
    for name in ply_property_names(dim) {
        writeln!(out, "property double {name}")?;
    }
    writeln!(out, "end_header")?;
    for (p, _) in rows {
        let cols: Vec<String> = p.coords().iter().map(|x| format!("{x}")).collect();
        writeln!(out, "{}", cols.join(" "))?;
    }
    Ok(())
}
