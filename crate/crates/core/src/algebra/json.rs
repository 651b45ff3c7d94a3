//! JSON file formats for algebras.
//!
//! SMA: `{"size": n, "leq": [[bool]], "neg": [int]}`.
//! Heterogeneous: `{"L": {"size", "leq"}, "D": {"size", "leq", "star"}, "e": [int], "h": [int]}`.

use serde::{Deserialize, Serialize};

use super::hetero::{check_hetero, HeteroAlgebra, HeteroReport};
use super::report::Report;
use super::sma::{check_sma, FiniteSma};
use super::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmaFile {
    pub size: usize,
    pub leq: Vec<Vec<bool>>,
    pub neg: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeFile {
    pub size: usize,
    pub leq: Vec<Vec<bool>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DmaFile {
    pub size: usize,
    pub leq: Vec<Vec<bool>>,
    pub star: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeteroFile {
    #[serde(rename = "L")]
    pub l: LatticeFile,
    #[serde(rename = "D")]
    pub d: DmaFile,
    pub e: Vec<usize>,
    pub h: Vec<usize>,
}

/// Either file kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraFile {
    Hetero(HeteroFile),
    Sma(SmaFile),
}

fn check_size(size: usize, leq: &[Vec<bool>], what: &str) -> Result<(), AlgebraError> {
    if leq.len() != size {
        return Err(AlgebraError::Malformed(format!(
            "{what}: size is {size} but leq has {} rows",
            leq.len()
        )));
    }
    Ok(())
}

impl SmaFile {
    pub fn from_sma(a: &FiniteSma) -> SmaFile {
        SmaFile {
            size: a.size(),
            leq: a.lattice().leq_table(),
            neg: a.neg_table().to_vec(),
        }
    }

    pub fn check(&self) -> Result<(Report, Option<FiniteSma>), AlgebraError> {
        check_size(self.size, &self.leq, "SMA")?;
        check_sma(&self.leq, &self.neg)
    }
}

impl HeteroFile {
    pub fn from_hetero(hh: &HeteroAlgebra) -> HeteroFile {
        HeteroFile {
            l: LatticeFile {
                size: hh.l().size(),
                leq: hh.l().leq_table(),
            },
            d: DmaFile {
                size: hh.d().size(),
                leq: hh.d().lattice().leq_table(),
                star: hh.d().star_table().to_vec(),
            },
            e: hh.e_table().to_vec(),
            h: hh.h_table().to_vec(),
        }
    }

    pub fn check(&self) -> Result<(HeteroReport, Option<HeteroAlgebra>), AlgebraError> {
        check_size(self.l.size, &self.l.leq, "L")?;
        check_size(self.d.size, &self.d.leq, "D")?;
        check_hetero(&self.l.leq, &self.d.leq, &self.d.star, &self.e, &self.h)
    }
}

pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile, AlgebraError> {
    serde_json::from_str(text).map_err(|e| AlgebraError::Malformed(format!("JSON: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::heterogenize;

    #[test]
    fn roundtrips() {
        let a = FiniteSma::three_chain(0);
        let f = SmaFile::from_sma(&a);
        let text = serde_json::to_string(&f).unwrap();
        let AlgebraFile::Sma(back) = parse_algebra_file(&text).unwrap() else {
            panic!("expected SMA file")
        };
        assert_eq!(back.check().unwrap().1.unwrap(), a);

        let hh = heterogenize(&a).unwrap();
        let text = serde_json::to_string(&HeteroFile::from_hetero(&hh)).unwrap();
        let AlgebraFile::Hetero(back) = parse_algebra_file(&text).unwrap() else {
            panic!("expected hetero file")
        };
        let hh2 = back.check().unwrap().1.unwrap();
        assert_eq!(hh2.e_table(), hh.e_table());
    }

    #[test]
    fn malformed() {
        assert!(parse_algebra_file("{\"size\": 2}").is_err());
        let f = SmaFile {
            size: 3,
            leq: vec![vec![true, true], vec![false, true]],
            neg: vec![1, 0],
        };
        assert!(f.check().is_err());
    }
}
