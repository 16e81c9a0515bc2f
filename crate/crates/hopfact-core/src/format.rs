//! On-disk formats: Hopf algebra structure-constant files, group Cayley-table
//! files, and subspace basis files. All are JSON documents with scalars
//! written as `"p/q"` (or `"p"` for integers); unspecified tensor entries
//! are zero and indices are 0-based.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar, Subspace};
use crate::groups::FiniteGroup;
use crate::hopf::HopfAlgebra;
use crate::products::MatchedPair;

/// A structure-constant quadruple `[i, j, k, coefficient]`.
pub type Quad = (usize, usize, usize, String);

/// A sparse vector entry `[i, coefficient]`.
pub type Entry = (usize, String);

/// Hopf algebra file: multiplication and comultiplication as quadruples
/// (`e_i·e_j = Σ c·e_k` and `Δe_i = Σ c·e_j⊗e_k` respectively), unit and
/// counit as sparse vectors, antipode as `[row, col, coefficient]` triples
/// of the matrix with `S(e_col) = Σ c·e_row`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HopfFile {
    pub dim: usize,
    pub field: String,
    pub mult: Vec<Quad>,
    pub comult: Vec<Quad>,
    pub unit: Vec<Entry>,
    pub counit: Vec<Entry>,
    pub antipode: Vec<(usize, usize, String)>,
}

impl HopfFile {
    pub fn from_algebra(h: &HopfAlgebra) -> Self {
        let mult = h
            .mult_entries()
            .map(|(i, j, k, c)| (i, j, k, c.to_string()))
            .collect();
        let comult = h
            .comult_entries()
            .map(|(i, j, k, c)| (i, j, k, c.to_string()))
            .collect();
        let unit = sparse_entries(h.unit_vec());
        let counit = sparse_entries(h.counit_vec());
        let mut antipode = Vec::new();
        for col in 0..h.dim() {
            for row in 0..h.dim() {
                let c = &h.antipode_matrix()[(row, col)];
                if !c.is_zero() {
                    antipode.push((row, col, c.to_string()));
                }
            }
        }
        HopfFile {
            dim: h.dim(),
            field: "Q".into(),
            mult,
            comult,
            unit,
            counit,
            antipode,
        }
    }

    pub fn to_algebra(&self) -> Result<HopfAlgebra> {
        if self.field != "Q" {
            return Err(Error::InvalidInput(format!(
                "unsupported field {:?}; only \"Q\" is supported",
                self.field
            )));
        }
        let n = self.dim;
        let parse = |s: &str, what: &str| -> Result<Scalar> {
            s.parse()
                .map_err(|e| Error::InvalidInput(format!("bad scalar in {what}: {e}")))
        };
        let mut mult = Vec::with_capacity(self.mult.len());
        for (i, j, k, c) in &self.mult {
            mult.push((*i, *j, *k, parse(c, "mult")?));
        }
        let mut comult = Vec::with_capacity(self.comult.len());
        for (i, j, k, c) in &self.comult {
            comult.push((*i, *j, *k, parse(c, "comult")?));
        }
        let mut unit = vec![Scalar::zero(); n];
        for (i, c) in &self.unit {
            if *i >= n {
                return Err(Error::InvalidInput(format!("unit index {i} out of range")));
            }
            unit[*i] = parse(c, "unit")?;
        }
        let mut counit = vec![Scalar::zero(); n];
        for (i, c) in &self.counit {
            if *i >= n {
                return Err(Error::InvalidInput(format!("counit index {i} out of range")));
            }
            counit[*i] = parse(c, "counit")?;
        }
        let mut antipode = Matrix::zeros(n, n);
        for (row, col, c) in &self.antipode {
            if *row >= n || *col >= n {
                return Err(Error::InvalidInput(format!(
                    "antipode index ({row},{col}) out of range"
                )));
            }
            antipode[(*row, *col)] = parse(c, "antipode")?;
        }
        HopfAlgebra::from_tensors(n, mult, unit, comult, counit, antipode)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s)
            .map_err(|e| Error::InvalidInput(format!("Hopf file parse error: {e}")))
    }
}

fn sparse_entries(v: &[Scalar]) -> Vec<Entry> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.to_string()))
        .collect()
}

/// Group file: the order, the 0-based Cayley table rows, optional names.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl GroupFile {
    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupFile {
            order: g.order(),
            table: g.table().to_vec(),
            names: g.names().map(|n| n.to_vec()),
        }
    }

    /// Strict validation: the declared order must match the table shape
    /// (errors carry the offending row/column), then the full group axioms
    /// are re-checked.
    pub fn to_group(&self) -> Result<FiniteGroup> {
        if self.table.len() != self.order {
            return Err(Error::InvalidInput(format!(
                "declared order {} but table has {} rows",
                self.order,
                self.table.len()
            )));
        }
        for (r, row) in self.table.iter().enumerate() {
            if row.len() != self.order {
                return Err(Error::InvalidInput(format!(
                    "table row {r} has {} entries, expected {}",
                    row.len(),
                    self.order
                )));
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= self.order {
                    return Err(Error::InvalidInput(format!(
                        "table entry at row {r}, column {c} is {v}, out of range"
                    )));
                }
            }
        }
        FiniteGroup::new(self.table.clone(), self.names.clone())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialization cannot fail")
    }

    /// Parse errors from malformed JSON carry line and column positions.
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| {
            Error::InvalidInput(format!(
                "group file parse error at line {}, column {}: {e}",
                e.line(),
                e.column()
            ))
        })
    }
}

/// Subspace file: a list of coordinate vectors (rows) relative to the
/// ambient basis; canonicalized to RREF on load.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubspaceFile {
    pub ambient_dim: usize,
    pub rows: Vec<Vec<String>>,
}

impl SubspaceFile {
    pub fn from_subspace(s: &Subspace) -> Self {
        SubspaceFile {
            ambient_dim: s.ambient_dim(),
            rows: s
                .basis_rows()
                .iter()
                .map(|r| r.iter().map(Scalar::to_string).collect())
                .collect(),
        }
    }

    pub fn to_subspace(&self) -> Result<Subspace> {
        let mut vectors = Vec::with_capacity(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            if row.len() != self.ambient_dim {
                return Err(Error::InvalidInput(format!(
                    "row {i} has {} coordinates, expected {}",
                    row.len(),
                    self.ambient_dim
                )));
            }
            let mut v = Vec::with_capacity(row.len());
            for s in row {
                v.push(
                    s.parse::<Scalar>()
                        .map_err(|e| Error::InvalidInput(format!("row {i}: {e}")))?,
                );
            }
            vectors.push(v);
        }
        Ok(Subspace::from_vectors(self.ambient_dim, &vectors))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s)
            .map_err(|e| Error::InvalidInput(format!("subspace file parse error: {e}")))
    }
}

/// Matched-pair serialization: the two component algebras plus the two
/// action tensors in quadruple format (`[l, a, out, coefficient]`).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatchedPairFile {
    pub a: HopfFile,
    pub l: HopfFile,
    pub act_r: Vec<Quad>,
    pub act_l: Vec<Quad>,
}

impl MatchedPairFile {
    pub fn from_matched_pair(mp: &MatchedPair) -> Self {
        let (p, q) = (mp.a.dim(), mp.l.dim());
        let mut act_r = Vec::new();
        let mut act_l = Vec::new();
        for i in 0..q {
            for j in 0..p {
                for (out, c) in mp.act_r_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        act_r.push((i, j, out, c.to_string()));
                    }
                }
                for (out, c) in mp.act_l_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        act_l.push((i, j, out, c.to_string()));
                    }
                }
            }
        }
        MatchedPairFile {
            a: HopfFile::from_algebra(&mp.a),
            l: HopfFile::from_algebra(&mp.l),
            act_r,
            act_l,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{group_algebra, symmetric3};

    #[test]
    fn hopf_file_roundtrip() {
        let h = group_algebra(&symmetric3());
        let file = HopfFile::from_algebra(&h);
        let json = file.to_json();
        let parsed = HopfFile::from_json(&json).unwrap();
        assert_eq!(parsed.to_algebra().unwrap(), h);
    }

    #[test]
    fn group_file_errors_carry_positions() {
        let bad = r#"{"order": 2, "table": [[0, 1], [1]]}"#;
        let err = GroupFile::from_json(bad).unwrap().to_group().unwrap_err();
        assert!(err.to_string().contains("row 1"));
        let malformed = "{\n \"order\": 2,,\n}";
        let err = GroupFile::from_json(malformed).unwrap_err();
        assert!(err.to_string().contains("line 2"));
    }

    #[test]
    fn rejects_wrong_field() {
        let h = group_algebra(&symmetric3());
        let mut file = HopfFile::from_algebra(&h);
        file.field = "R".into();
        assert!(file.to_algebra().is_err());
    }
}
