use std::collections::BTreeMap;

use num_complex::Complex64;

use super::ModeSpec;

/// Occupation tuple: particle counts for each mode, then antiparticle counts.
pub type Occupation = Vec<u8>;

/// Sparse state on the truncated Fock space.
#[derive(Debug, Clone, PartialEq)]
pub struct FockState {
    n_modes: usize,
    amplitudes: BTreeMap<Occupation, Complex64>,
}

/// Result of applying an operator, with the number of amplitude components
/// dropped because a creation would exceed the occupation cap.
#[derive(Debug, Clone, PartialEq)]
pub struct Applied {
    pub state: FockState,
    pub truncations: usize,
}

impl FockState {
    pub fn zero(n_modes: usize) -> FockState {
        FockState {
            n_modes,
            amplitudes: BTreeMap::new(),
        }
    }

    /// `|0⟩`
    pub fn vacuum(spec: &ModeSpec) -> FockState {
        Self::basis(vec![0; 2 * spec.len()])
    }

    /// Unit amplitude on a single occupation tuple.
    pub fn basis(occupation: Occupation) -> FockState {
        assert!(occupation.len().is_multiple_of(2), "occupation covers both sectors");
        let n_modes = occupation.len() / 2;
        FockState {
            n_modes,
            amplitudes: BTreeMap::from([(occupation, Complex64::new(1.0, 0.0))]),
        }
    }

    pub(crate) fn from_map(n_modes: usize, amplitudes: BTreeMap<Occupation, Complex64>) -> FockState {
        FockState {
            n_modes,
            amplitudes,
        }
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn amplitudes(&self) -> &BTreeMap<Occupation, Complex64> {
        &self.amplitudes
    }

    pub fn amplitude(&self, occupation: &[u8]) -> Complex64 {
        self.amplitudes
            .get(occupation)
            .copied()
            .unwrap_or_default()
    }

    /// Amplitude on the all-zeros tuple, i.e. `⟨0|self⟩`.
    pub fn vacuum_amplitude(&self) -> Complex64 {
        self.amplitude(&vec![0; 2 * self.n_modes])
    }

    /// `⟨self|other⟩`
    pub fn inner(&self, other: &FockState) -> Complex64 {
        self.amplitudes
            .iter()
            .filter_map(|(occ, a)| other.amplitudes.get(occ).map(|b| a.conj() * b))
            .sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.values().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// True when every amplitude is exactly zero.
    pub fn is_zero(&self) -> bool {
        self.amplitudes.values().all(|a| *a == Complex64::default())
    }

    pub fn scaled(&self, c: Complex64) -> FockState {
        FockState {
            n_modes: self.n_modes,
            amplitudes: self.amplitudes.iter().map(|(o, a)| (o.clone(), a * c)).collect(),
        }
    }

    pub fn plus(&self, other: &FockState) -> FockState {
        let mut amplitudes = self.amplitudes.clone();
        for (occ, a) in &other.amplitudes {
            *amplitudes.entry(occ.clone()).or_default() += a;
        }
        FockState {
            n_modes: self.n_modes,
            amplitudes,
        }
    }

    /// Largest total occupation carried with nonzero amplitude.
    pub fn max_total_occupation(&self) -> u32 {
        self.amplitudes
            .iter()
            .filter(|(_, a)| a.norm() > 0.0)
            .map(|(occ, _)| occ.iter().map(|&n| u32::from(n)).sum())
            .max()
            .unwrap_or(0)
    }
}
