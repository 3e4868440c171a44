use num_complex::Complex64;

use super::operator::{Factor, Ladder, ModeOperator, Sector, Term};
use super::state::FockState;
use super::ModeSpec;
use crate::error::{Error, Result};
use crate::propagators::SpacetimePoint;

fn single(sector: Sector, mode: usize, dagger: bool, coeff: Complex64, rate: f64, time: f64) -> Term {
    Term {
        coeff,
        time,
        factors: vec![Factor {
            ladder: Ladder {
                sector,
                mode,
                dagger,
            },
            rate,
        }],
    }
}

/// `Ψ(t, x) = Σₖ (2ωL)^{-1/2} [a(k) e^{i(kx−ωt)} + b†(k) e^{−i(kx−ωt)}]`
pub fn field(spec: &ModeSpec, t: f64, x: f64) -> ModeOperator {
    let mut terms = Vec::with_capacity(2 * spec.len());
    for pos in 0..spec.len() {
        let c = spec.normalization(pos);
        let (k, w) = (spec.momenta()[pos], spec.frequencies()[pos]);
        let spatial = Complex64::from_polar(c, k * x);
        terms.push(single(Sector::Particle, pos, false, spatial, -w, t));
        terms.push(single(Sector::Antiparticle, pos, true, spatial.conj(), w, t));
    }
    ModeOperator { terms }
}

/// `Ψ†(t, x)`, built as the adjoint of [`field`].
pub fn field_adjoint(spec: &ModeSpec, t: f64, x: f64) -> ModeOperator {
    field(spec, t, x).adjoint()
}

fn number_weighted(spec: &ModeSpec, weight: impl Fn(usize) -> f64) -> ModeOperator {
    let mut op = ModeOperator::zero();
    for pos in 0..spec.len() {
        let w = Complex64::new(weight(pos), 0.0);
        op = op
            .plus(ModeOperator::a_dag(pos).times(&ModeOperator::a(pos)).scaled(w))
            .plus(ModeOperator::b_dag(pos).times(&ModeOperator::b(pos)).scaled(w));
    }
    op
}

/// Normal-ordered energy `Σ ω (a†a + b†b)`.
pub fn hamiltonian(spec: &ModeSpec) -> ModeOperator {
    number_weighted(spec, |pos| spec.frequencies()[pos])
}

/// Total momentum `Σ k (a†a + b†b)`.
pub fn momentum_operator(spec: &ModeSpec) -> ModeOperator {
    number_weighted(spec, |pos| spec.momenta()[pos])
}

/// Offer state `b†(k)|0⟩ = |k̄⟩` for mode label `n`.
pub fn offer_state(spec: &ModeSpec, n: i64) -> Result<FockState> {
    let pos = spec.position(n)?;
    Ok(ModeOperator::b_dag(pos)
        .apply(&FockState::vacuum(spec), spec)?
        .state)
}

/// `⟨0| b(k) |state⟩`, the overlap of the confirmation `⟨k̄|` with `state`.
pub fn confirmation_inner(spec: &ModeSpec, n: i64, state: &FockState) -> Result<Complex64> {
    let pos = spec.position(n)?;
    Ok(ModeOperator::b(pos).apply(state, spec)?.state.vacuum_amplitude())
}

/// Advanced-frequency coefficient of mode `k` rewritten as an antiparticle
/// creator of the opposite momentum: `â_adv(k, t) = b̂†(−k) e^{+iωt}`.
pub fn advanced_coefficient(spec: &ModeSpec, n: i64, t: f64) -> Result<ModeOperator> {
    let pos = spec.position(n)?;
    let partner = spec.position(-n).map_err(|_| {
        Error::NotNegationClosed(format!("mode {n} has no partner {} in the mode set", -n))
    })?;
    let w = spec.frequencies()[pos];
    Ok(ModeOperator::evolving(Sector::Antiparticle, partner, true, w, t))
}

/// Time-ordered vacuum expectation value and the truncation count met on the way.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VevResult {
    pub value: Complex64,
    pub truncations: usize,
}

/// `⟨0|T Ψ(x) Ψ†(y)|0⟩` by explicit operator application.
///
/// For `x.t > y.t` this is `⟨0|Ψ(x)Ψ†(y)|0⟩` (particle modes); for `x.t < y.t`
/// it is `⟨0|Ψ†(y)Ψ(x)|0⟩` (antiparticle modes).
pub fn time_ordered_vev(spec: &ModeSpec, x: SpacetimePoint, y: SpacetimePoint) -> Result<VevResult> {
    if x.t == y.t {
        return Err(Error::EqualTimeOrdering(x.t));
    }
    let (first, second) = if x.t > y.t {
        (field_adjoint(spec, y.t, y.x), field(spec, x.t, x.x))
    } else {
        (field(spec, x.t, x.x), field_adjoint(spec, y.t, y.x))
    };
    let vac = FockState::vacuum(spec);
    let mid = first.apply(&vac, spec)?;
    let end = second.apply(&mid.state, spec)?;
    Ok(VevResult {
        value: end.state.vacuum_amplitude(),
        truncations: mid.truncations + end.truncations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{Lattice, LatticeSpec};
    use crate::propagators::{eval_kernel, KernelKind};

    const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

    fn lattice(n: usize) -> Lattice {
        Lattice::new(LatticeSpec {
            n_space: n,
            ..LatticeSpec::default()
        })
        .unwrap()
    }

    #[test]
    fn offer_and_confirmation() {
        let lat = lattice(8);
        let spec = ModeSpec::full(&lat, 1).unwrap();
        let kbar = offer_state(&spec, 2).unwrap();
        assert_eq!(kbar.norm_sqr(), 1.0);
        assert_eq!(confirmation_inner(&spec, 2, &kbar).unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(confirmation_inner(&spec, -2, &kbar).unwrap(), Complex64::default());
        let vac = FockState::vacuum(&spec);
        assert_eq!(confirmation_inner(&spec, 2, &vac).unwrap(), Complex64::default());
        assert!(confirmation_inner(&spec, 7, &vac).is_err());
    }

    #[test]
    fn vev_matches_feynman_kernel_both_orderings() {
        let lat = lattice(16);
        let spec = ModeSpec::full(&lat, 1).unwrap();
        let x = SpacetimePoint { t: 0.9, x: 3.1 };
        let y = SpacetimePoint { t: 0.2, x: 7.4 };
        for (p, q) in [(x, y), (y, x)] {
            let vev = time_ordered_vev(&spec, p, q).unwrap();
            let df = eval_kernel(&lat, KernelKind::Feynman, p.minus(&q, &lat)).unwrap();
            assert_eq!(vev.truncations, 0);
            assert!((vev.value - I * df).norm() < 1e-13, "{} vs {}", vev.value, I * df);
        }
    }

    #[test]
    fn vev_depends_only_on_separation() {
        let lat = lattice(16);
        let spec = ModeSpec::full(&lat, 1).unwrap();
        let x = SpacetimePoint { t: 1.0, x: 2.0 };
        let y = SpacetimePoint { t: 0.5, x: 1.0 };
        let shift = 3.3;
        let a = time_ordered_vev(&spec, x, y).unwrap().value;
        let b = time_ordered_vev(
            &spec,
            SpacetimePoint { t: x.t, x: x.x + shift },
            SpacetimePoint { t: y.t, x: y.x + shift },
        )
        .unwrap()
        .value;
        assert!((a - b).norm() < 1e-14);
    }

    #[test]
    fn equal_times_rejected() {
        let lat = lattice(8);
        let spec = ModeSpec::full(&lat, 1).unwrap();
        let p = SpacetimePoint { t: 0.4, x: 1.0 };
        assert!(matches!(
            time_ordered_vev(&spec, p, SpacetimePoint { t: 0.4, x: 2.0 }),
            Err(Error::EqualTimeOrdering(_))
        ));
    }
}
