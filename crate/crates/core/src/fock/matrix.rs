use std::collections::BTreeMap;

use num_complex::Complex64;

use super::operator::ModeOperator;
use super::ModeSpec;
use crate::error::{Error, Result};

const MAX_DIM: u128 = 1 << 22;

/// Enumeration of the truncated Fock basis in mixed radix `N_max + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FockBasis {
    n_modes: usize,
    cap: u8,
    dim: usize,
}

impl FockBasis {
    pub fn new(spec: &ModeSpec) -> Result<FockBasis> {
        let radix = u128::from(spec.max_occupation()) + 1;
        let slots = 2 * spec.len() as u32;
        let dim = radix.checked_pow(slots).unwrap_or(u128::MAX);
        if dim > MAX_DIM {
            return Err(Error::SpaceTooLarge(dim));
        }
        Ok(FockBasis {
            n_modes: spec.len(),
            cap: spec.max_occupation(),
            dim: dim as usize,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn index(&self, occ: &[u8]) -> usize {
        let radix = usize::from(self.cap) + 1;
        occ.iter().rev().fold(0, |acc, &n| acc * radix + usize::from(n))
    }

    pub fn occupation(&self, mut index: usize) -> Vec<u8> {
        let radix = usize::from(self.cap) + 1;
        (0..2 * self.n_modes)
            .map(|_| {
                let n = (index % radix) as u8;
                index /= radix;
                n
            })
            .collect()
    }
}

/// Column-compressed complex matrix on the truncated space.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseMatrix {
    dim: usize,
    cols: Vec<Vec<(usize, Complex64)>>,
}

impl SparseMatrix {
    pub fn zeros(dim: usize) -> SparseMatrix {
        SparseMatrix {
            dim,
            cols: vec![Vec::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> SparseMatrix {
        SparseMatrix {
            dim,
            cols: (0..dim).map(|j| vec![(j, Complex64::new(1.0, 0.0))]).collect(),
        }
    }

    /// Matrix of `op` on the basis of `spec`.
    pub fn from_operator(op: &ModeOperator, spec: &ModeSpec) -> Result<SparseMatrix> {
        op.validate(spec)?;
        let basis = FockBasis::new(spec)?;
        let cols = (0..basis.dim())
            .map(|j| {
                let (image, _) = op.columns_on_basis(&basis.occupation(j), spec.max_occupation());
                let mut col: Vec<(usize, Complex64)> = image
                    .into_iter()
                    .map(|(occ, v)| (basis.index(&occ), v))
                    .collect();
                col.sort_by_key(|e| e.0);
                col
            })
            .collect();
        Ok(SparseMatrix {
            dim: basis.dim(),
            cols,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.cols[col]
            .iter()
            .find(|e| e.0 == row)
            .map(|e| e.1)
            .unwrap_or_default()
    }

    pub fn column(&self, col: usize) -> &[(usize, Complex64)] {
        &self.cols[col]
    }

    fn from_maps(dim: usize, maps: Vec<BTreeMap<usize, Complex64>>) -> SparseMatrix {
        SparseMatrix {
            dim,
            cols: maps.into_iter().map(|m| m.into_iter().collect()).collect(),
        }
    }

    fn combine(&self, other: &SparseMatrix, sign: f64) -> SparseMatrix {
        assert_eq!(self.dim, other.dim);
        let maps = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut m: BTreeMap<usize, Complex64> = a.iter().copied().collect();
                for (r, v) in b {
                    *m.entry(*r).or_default() += v * sign;
                }
                m
            })
            .collect();
        Self::from_maps(self.dim, maps)
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        self.combine(other, 1.0)
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        self.combine(other, -1.0)
    }

    pub fn scale(&self, c: Complex64) -> SparseMatrix {
        SparseMatrix {
            dim: self.dim,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(r, v)| (*r, v * c)).collect())
                .collect(),
        }
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.dim, other.dim);
        let maps = other
            .cols
            .iter()
            .map(|col| {
                let mut m = BTreeMap::new();
                for (k, v) in col {
                    for (r, a) in &self.cols[*k] {
                        *m.entry(*r).or_default() += a * v;
                    }
                }
                m
            })
            .collect();
        Self::from_maps(self.dim, maps)
    }

    /// `self·other − other·self`
    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn adjoint(&self) -> SparseMatrix {
        let mut maps: Vec<BTreeMap<usize, Complex64>> = vec![BTreeMap::new(); self.dim];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                maps[*r].insert(c, v.conj());
            }
        }
        Self::from_maps(self.dim, maps)
    }

    /// Induced 1-norm: largest column sum of absolute values.
    pub fn norm(&self) -> f64 {
        self.cols
            .iter()
            .map(|col| col.iter().map(|(_, v)| v.norm()).fold(0.0, |a, b| a + b))
            .fold(0.0, f64::max)
    }

    /// Induced 1-norm over the columns selected by `keep`.
    pub fn norm_on_columns<P: Fn(usize) -> bool>(&self, keep: P) -> f64 {
        self.cols
            .iter()
            .enumerate()
            .filter(|(j, _)| keep(*j))
            .map(|(_, col)| col.iter().map(|(_, v)| v.norm()).fold(0.0, |a, b| a + b))
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.cols
            .iter()
            .flat_map(|c| c.iter().map(|(_, v)| v.norm()))
            .fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.sub(&self.adjoint()).max_abs() <= tol
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![Complex64::default(); self.dim];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, a) in col {
                out[*r] += a * v[c];
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{Lattice, LatticeSpec};

    fn spec(labels: &[i64], n_max: u8) -> ModeSpec {
        let lat = Lattice::new(LatticeSpec {
            n_space: 8,
            ..LatticeSpec::default()
        })
        .unwrap();
        ModeSpec::subset(&lat, labels, n_max).unwrap()
    }

    #[test]
    fn basis_index_round_trip() {
        let basis = FockBasis::new(&spec(&[0, 1], 2)).unwrap();
        assert_eq!(basis.dim(), 81);
        for j in 0..basis.dim() {
            assert_eq!(basis.index(&basis.occupation(j)), j);
        }
    }

    #[test]
    fn refuses_huge_spaces() {
        let lat = Lattice::new(LatticeSpec::default()).unwrap();
        let big = ModeSpec::full(&lat, 1).unwrap();
        assert!(matches!(FockBasis::new(&big), Err(Error::SpaceTooLarge(_))));
    }

    #[test]
    fn creation_is_adjoint_of_annihilation() {
        let s = spec(&[0, 1], 2);
        let a = SparseMatrix::from_operator(&ModeOperator::a(1), &s).unwrap();
        let ad = SparseMatrix::from_operator(&ModeOperator::a_dag(1), &s).unwrap();
        assert_eq!(a.adjoint(), ad);
        let n = ad.mul(&a);
        assert!(n.is_hermitian(0.0));
        assert_eq!(SparseMatrix::identity(3).norm(), 1.0);
    }
}
