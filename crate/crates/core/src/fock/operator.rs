use std::collections::BTreeMap;

use num_complex::Complex64;

use super::state::{Applied, FockState, Occupation};
use super::ModeSpec;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sector {
    Particle,
    Antiparticle,
}

/// One of `a(k)`, `a†(k)`, `b(k)`, `b†(k)`; `mode` is the position in the [`ModeSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ladder {
    pub sector: Sector,
    pub mode: usize,
    pub dagger: bool,
}

impl Ladder {
    pub fn adjoint(self) -> Ladder {
        Ladder {
            dagger: !self.dagger,
            ..self
        }
    }

    fn slot(self, n_modes: usize) -> usize {
        match self.sector {
            Sector::Particle => self.mode,
            Sector::Antiparticle => n_modes + self.mode,
        }
    }
}

/// Ladder factor with time dependence `e^{i·rate·t}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Factor {
    pub ladder: Ladder,
    pub rate: f64,
}

/// `coeff · e^{i t Σ rates} · f₁ f₂ … fₙ`, applied right to left.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub coeff: Complex64,
    pub time: f64,
    pub factors: Vec<Factor>,
}

impl Term {
    fn total_rate(&self) -> f64 {
        self.factors.iter().map(|f| f.rate).sum()
    }

    /// Coefficient with the time phase folded in.
    pub fn scalar(&self) -> Complex64 {
        self.coeff * Complex64::from_polar(1.0, self.total_rate() * self.time)
    }
}

enum Outcome {
    Amplitude(f64),
    Vanish,
    Truncated,
}

fn act(ladder: Ladder, occ: &mut [u8], n_modes: usize, cap: u8) -> Outcome {
    let slot = ladder.slot(n_modes);
    let n = occ[slot];
    if ladder.dagger {
        if n >= cap {
            return Outcome::Truncated;
        }
        occ[slot] = n + 1;
        Outcome::Amplitude(f64::from(n + 1).sqrt())
    } else {
        if n == 0 {
            return Outcome::Vanish;
        }
        occ[slot] = n - 1;
        Outcome::Amplitude(f64::from(n).sqrt())
    }
}

/// Sum of ladder products.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ModeOperator {
    pub terms: Vec<Term>,
}

impl ModeOperator {
    pub fn zero() -> ModeOperator {
        ModeOperator { terms: Vec::new() }
    }

    pub fn identity() -> ModeOperator {
        Self::scalar(Complex64::new(1.0, 0.0))
    }

    pub fn scalar(c: Complex64) -> ModeOperator {
        ModeOperator {
            terms: vec![Term {
                coeff: c,
                time: 0.0,
                factors: Vec::new(),
            }],
        }
    }

    pub fn ladder(sector: Sector, mode: usize, dagger: bool) -> ModeOperator {
        ModeOperator {
            terms: vec![Term {
                coeff: Complex64::new(1.0, 0.0),
                time: 0.0,
                factors: vec![Factor {
                    ladder: Ladder {
                        sector,
                        mode,
                        dagger,
                    },
                    rate: 0.0,
                }],
            }],
        }
    }

    pub fn a(mode: usize) -> ModeOperator {
        Self::ladder(Sector::Particle, mode, false)
    }

    pub fn a_dag(mode: usize) -> ModeOperator {
        Self::ladder(Sector::Particle, mode, true)
    }

    pub fn b(mode: usize) -> ModeOperator {
        Self::ladder(Sector::Antiparticle, mode, false)
    }

    pub fn b_dag(mode: usize) -> ModeOperator {
        Self::ladder(Sector::Antiparticle, mode, true)
    }

    /// Single-factor operator evolving as `e^{i·rate·t}`, evaluated at `time`.
    pub fn evolving(sector: Sector, mode: usize, dagger: bool, rate: f64, time: f64) -> ModeOperator {
        let mut op = Self::ladder(sector, mode, dagger);
        op.terms[0].factors[0].rate = rate;
        op.terms[0].time = time;
        op
    }

    pub fn scaled(mut self, c: Complex64) -> ModeOperator {
        for term in &mut self.terms {
            term.coeff *= c;
        }
        self
    }

    pub fn plus(mut self, other: ModeOperator) -> ModeOperator {
        self.terms.extend(other.terms);
        self
    }

    pub fn minus(self, other: ModeOperator) -> ModeOperator {
        self.plus(other.scaled(Complex64::new(-1.0, 0.0)))
    }

    /// Operator product `self · other`.
    ///
    /// Terms of the two operands must share one evaluation time unless one side
    /// carries no phase.
    pub fn times(&self, other: &ModeOperator) -> ModeOperator {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for left in &self.terms {
            for right in &other.terms {
                let scalar = left.scalar() * right.scalar();
                let mut factors = left.factors.clone();
                factors.extend(right.factors.iter().copied());
                let mut term = Term {
                    coeff: scalar,
                    time: 0.0,
                    factors,
                };
                // keep the phase symbolic when both sides agree on the time
                if left.time == right.time {
                    term.time = left.time;
                    term.coeff = left.coeff * right.coeff;
                } else {
                    for f in &mut term.factors {
                        f.rate = 0.0;
                    }
                }
                terms.push(term);
            }
        }
        ModeOperator { terms }
    }

    /// Hermitian adjoint: reversed factor order, conjugated coefficients and phases.
    pub fn adjoint(&self) -> ModeOperator {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff.conj(),
                time: t.time,
                factors: t
                    .factors
                    .iter()
                    .rev()
                    .map(|f| Factor {
                        ladder: f.ladder.adjoint(),
                        rate: -f.rate,
                    })
                    .collect(),
            })
            .collect();
        ModeOperator { terms }
    }

    /// Analytic `d/dt` of the phase annotations.
    pub fn time_derivative(&self) -> ModeOperator {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff * Complex64::new(0.0, t.total_rate()),
                ..t.clone()
            })
            .collect();
        ModeOperator { terms }
    }

    fn check_modes(&self, spec: &ModeSpec) -> Result<()> {
        for term in &self.terms {
            for f in &term.factors {
                if f.ladder.mode >= spec.len() {
                    return Err(Error::UnknownMode(f.ladder.mode as i64));
                }
            }
        }
        Ok(())
    }

    /// Action on a single basis tuple, accumulated into `out` with weight `weight`.
    fn act_on_basis(
        &self,
        occ: &[u8],
        weight: Complex64,
        cap: u8,
        out: &mut BTreeMap<Occupation, Complex64>,
    ) -> usize {
        let n_modes = occ.len() / 2;
        let mut truncations = 0;
        'terms: for term in &self.terms {
            let mut next = occ.to_vec();
            let mut amp = 1.0;
            for f in term.factors.iter().rev() {
                match act(f.ladder, &mut next, n_modes, cap) {
                    Outcome::Amplitude(x) => amp *= x,
                    Outcome::Vanish => continue 'terms,
                    Outcome::Truncated => {
                        truncations += 1;
                        continue 'terms;
                    }
                }
            }
            *out.entry(next).or_default() += weight * term.scalar() * amp;
        }
        truncations
    }

    /// Apply to a state. Annihilating the vacuum gives the zero state; creating
    /// past the occupation cap drops that component and counts a truncation.
    pub fn apply(&self, state: &FockState, spec: &ModeSpec) -> Result<Applied> {
        self.check_modes(spec)?;
        let cap = spec.max_occupation();
        let mut out = BTreeMap::new();
        let mut truncations = 0;
        for (occ, amp) in state.amplitudes() {
            truncations += self.act_on_basis(occ, *amp, cap, &mut out);
        }
        Ok(Applied {
            state: FockState::from_map(state.n_modes(), out),
            truncations,
        })
    }

    pub(crate) fn columns_on_basis(
        &self,
        occ: &[u8],
        cap: u8,
    ) -> (BTreeMap<Occupation, Complex64>, usize) {
        let mut out = BTreeMap::new();
        let trunc = self.act_on_basis(occ, Complex64::new(1.0, 0.0), cap, &mut out);
        (out, trunc)
    }

    pub(crate) fn validate(&self, spec: &ModeSpec) -> Result<()> {
        self.check_modes(spec)
    }
}
