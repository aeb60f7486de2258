//! Factoring a positive map `g₁: G₁ → G` through a fresh simplicial group `G₂` so that
//! `g₁ = g₂ ∘ g₁₂` and `ker g₁₂ = ker g₁`.
//!
//! Each kernel generator `z = Σ aᵢeᵢ` of the current map `g_H: H → G` is a relation
//! `Σ aᵢ g_H(eᵢ) = 0` among positive elements. A decomposition witness `(b, y)` for it gives
//! `H → ⊕ᵐ ℤ[Γ/Δ]`, `eᵢ ↦ Σⱼ bᵢⱼ fⱼ`, which kills `z`, followed by `fⱼ ↦ yⱼ`.

use crate::error::{Error, Result};
use crate::gamma_maps::{GammaHom, GammaLinearMap};
use crate::gamma_module::GammaModule;
use crate::ordered_simplicial::{GammaVector, SimplicialGroup};
use crate::sdp::SdpSource;

#[derive(Clone, Debug)]
pub struct ShenFactorization<T: GammaModule> {
    /// `G₂`
    pub middle: SimplicialGroup,
    /// `g₁₂: G₁ → G₂`
    pub into_middle: GammaLinearMap,
    /// `g₂: G₂ → G`
    pub out_of_middle: GammaHom<T>,
    /// Number of kernel generators processed.
    pub steps: usize,
}

/// Runs the factorization over every kernel generator of `g1` in order and verifies both
/// postconditions before returning.
pub fn shen_step<T: SdpSource + PartialEq>(g1: &GammaHom<T>) -> Result<ShenFactorization<T>> {
    let source = g1.source();
    let space = source.space();
    if !space.is_normal() {
        return Err(Error::DeltaNotNormal);
    }
    let target = g1.target();
    let delta = space.subgroup();
    if !target.space().subgroup().is_subset_of(delta) || !delta.is_subset_of(&target.stabilizer()) {
        return Err(Error::TargetLacksSdp);
    }
    if !g1.is_positive() {
        return Err(Error::NotPositiveMap(0));
    }

    let generators = g1.kernel();
    let mut middle = source.clone();
    let mut into_middle = GammaLinearMap::identity(source);
    let mut out_of_middle = g1.clone();
    for z in &generators {
        let relation = into_middle.apply(z)?.lifts();
        let witness = target.sdp_witness(&relation, out_of_middle.columns())?;
        let next = SimplicialGroup::new(space, witness.m());
        let collapse_columns = witness
            .b
            .iter()
            .map(|row| next.from_ring_coords(row))
            .collect::<Result<Vec<GammaVector>>>()?;
        let collapse = GammaLinearMap::new(&middle, &next, collapse_columns)?;
        into_middle = collapse.compose(&into_middle)?;
        out_of_middle = GammaHom::new(&next, target, witness.y)?;
        middle = next;
    }

    if out_of_middle.compose(&into_middle)? != *g1 {
        return Err(Error::InternalVerificationFailed("g₂ ∘ g₁₂ differs from g₁".into()));
    }
    if into_middle.kernel_lattice() != g1.kernel_lattice() {
        return Err(Error::InternalVerificationFailed("ker g₁₂ differs from ker g₁".into()));
    }
    Ok(ShenFactorization {
        middle,
        into_middle,
        out_of_middle,
        steps: generators.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_group::{CosetSpace, FiniteGroup, Subgroup};

    fn z2_regular(rank: usize) -> SimplicialGroup {
        let g = FiniteGroup::cyclic(2);
        SimplicialGroup::new(&CosetSpace::new(&Subgroup::trivial(&g)), rank)
    }

    #[test]
    fn multiplication_by_one_plus_x() {
        let g = z2_regular(1);
        let g1 = GammaLinearMap::new(&g, &g, vec![g.vector(&[&[1, 1]]).unwrap()]).unwrap();
        assert_eq!(g1.kernel(), vec![g.vector(&[&[1, -1]]).unwrap()]);
        let f = shen_step(&g1).unwrap();
        assert_eq!(f.middle, g);
        assert_eq!(f.into_middle.columns(), &[g.vector(&[&[1, 1]]).unwrap()]);
        assert_eq!(f.out_of_middle.columns(), &[g.basis(0).unwrap()]);
        assert_eq!(f.into_middle.kernel_lattice(), g1.kernel_lattice());
    }

    #[test]
    fn zero_and_identity_maps() {
        let g = z2_regular(1);
        let zero = GammaLinearMap::zero(&g, &g).unwrap();
        let f = shen_step(&zero).unwrap();
        assert!(f.into_middle.columns().iter().all(GammaVector::is_zero));
        assert_eq!(f.steps, 2);

        let identity = GammaLinearMap::identity(&z2_regular(2));
        let f = shen_step(&identity).unwrap();
        assert_eq!(f.steps, 0);
        assert_eq!(f.into_middle, identity);
    }

    #[test]
    fn preconditions() {
        let d3 = FiniteGroup::dihedral(3);
        let g = SimplicialGroup::new(&CosetSpace::generated(&d3, &[3]).unwrap(), 1);
        assert_eq!(
            shen_step(&GammaLinearMap::identity(&g)).unwrap_err(),
            Error::DeltaNotNormal
        );
        let g = z2_regular(1);
        let negative = GammaLinearMap::new(&g, &g, vec![g.vector(&[&[1, -1]]).unwrap()]).unwrap();
        assert_eq!(shen_step(&negative).unwrap_err(), Error::NotPositiveMap(0));
        let coarse = SimplicialGroup::new(
            &CosetSpace::new(&Subgroup::whole(&FiniteGroup::cyclic(2))),
            1,
        );
        let fine = z2_regular(1);
        let into_fine = GammaLinearMap::new(&coarse, &fine, vec![fine.vector(&[&[1, 1]]).unwrap()]).unwrap();
        assert_eq!(shen_step(&into_fine).unwrap_err(), Error::TargetLacksSdp);
    }
}
