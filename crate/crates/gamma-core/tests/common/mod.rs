//! Random instance generators shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use gamma_core::finite_group::{CosetSpace, FiniteGroup, Subgroup};
use gamma_core::gamma_maps::GammaLinearMap;
use gamma_core::group_ring::{CosetVector, GroupRingElt};
use gamma_core::ordered_simplicial::{GammaVector, SimplicialGroup};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every built-in group of order at most 8.
pub fn small_groups() -> Vec<Arc<FiniteGroup>> {
    let mut groups: Vec<Arc<FiniteGroup>> = (1..=8).map(FiniteGroup::cyclic).collect();
    groups.push(FiniteGroup::dihedral(3));
    groups.push(FiniteGroup::dihedral(4));
    groups.push(FiniteGroup::quaternion());
    let z2 = FiniteGroup::cyclic(2);
    groups.push(FiniteGroup::product(&z2, &z2));
    groups.push(FiniteGroup::product(&FiniteGroup::product(&z2, &z2), &z2));
    groups.push(FiniteGroup::product(&z2, &FiniteGroup::cyclic(4)));
    groups
}

/// A subgroup generated by up to two random elements.
pub fn random_space(rng: &mut ChaCha8Rng, group: &Arc<FiniteGroup>) -> Arc<CosetSpace> {
    let count = rng.gen_range(0..=2);
    let gens: Vec<usize> = (0..count).map(|_| rng.gen_range(0..group.order())).collect();
    CosetSpace::new(&Subgroup::closure(group, &gens).unwrap())
}

pub fn random_normal_space(rng: &mut ChaCha8Rng, group: &Arc<FiniteGroup>) -> Arc<CosetSpace> {
    loop {
        let space = random_space(rng, group);
        if space.is_normal() {
            return space;
        }
    }
}

pub fn any_space(rng: &mut ChaCha8Rng) -> Arc<CosetSpace> {
    let group = small_groups().choose(rng).unwrap().clone();
    random_space(rng, &group)
}

pub fn any_normal_space(rng: &mut ChaCha8Rng) -> Arc<CosetSpace> {
    let group = small_groups().choose(rng).unwrap().clone();
    random_normal_space(rng, &group)
}

pub fn coset_vector(rng: &mut ChaCha8Rng, space: &Arc<CosetSpace>, lo: i64, hi: i64) -> CosetVector {
    let coeffs: Vec<i64> = (0..space.len()).map(|_| rng.gen_range(lo..=hi)).collect();
    CosetVector::from_ints(space, &coeffs).unwrap()
}

pub fn vector(rng: &mut ChaCha8Rng, group: &SimplicialGroup, lo: i64, hi: i64) -> GammaVector {
    let coords = (0..group.rank()).map(|_| coset_vector(rng, group.space(), lo, hi)).collect();
    GammaVector::new(group, coords).unwrap()
}

pub fn positive_vector(rng: &mut ChaCha8Rng, group: &SimplicialGroup, hi: i64) -> GammaVector {
    vector(rng, group, 0, hi)
}

/// A positive vector with every coordinate nonzero, hence an order-unit.
pub fn order_unit(rng: &mut ChaCha8Rng, group: &SimplicialGroup, hi: i64) -> GammaVector {
    let space = group.space();
    let coords = (0..group.rank())
        .map(|_| {
            let mut c = coset_vector(rng, space, 0, hi);
            if c.is_zero() {
                c = CosetVector::coset(space, rng.gen_range(0..space.len()));
            }
            c
        })
        .collect();
    GammaVector::new(group, coords).unwrap()
}

pub fn ring_elt(rng: &mut ChaCha8Rng, group: &Arc<FiniteGroup>, lo: i64, hi: i64, terms: usize) -> GroupRingElt {
    let terms: Vec<(usize, i64)> =
        (0..terms).map(|_| (rng.gen_range(0..group.order()), rng.gen_range(lo..=hi))).collect();
    GroupRingElt::from_terms(group, terms).unwrap()
}

/// A random lift of `c` along `π`: each unit of weight lands on a random member of its coset.
pub fn random_lift(rng: &mut ChaCha8Rng, c: &CosetVector) -> GroupRingElt {
    let space = c.space();
    let mut terms = Vec::new();
    for (coset, k) in c.coeffs().iter().enumerate() {
        let members = space.coset_members(coset);
        let k: i64 = k.try_into().unwrap();
        for _ in 0..k {
            terms.push((*members.choose(rng).unwrap(), 1i64));
        }
    }
    GroupRingElt::from_terms(space.group(), terms).unwrap()
}

/// A positive map whose every row has a nonzero entry, so order-units go to order-units.
/// For non-normal `Δ` each entry is multiplied on the left by `Σ_{d∈Δ} d`, which makes the
/// image of a basis element `Δ`-fixed.
pub fn positive_map(
    rng: &mut ChaCha8Rng,
    source: &SimplicialGroup,
    target: &SimplicialGroup,
    hi: i64,
) -> GammaLinearMap {
    let gamma = source.space().group();
    let mut entries: Vec<Vec<GroupRingElt>> = (0..source.rank())
        .map(|_| (0..target.rank()).map(|_| ring_elt(rng, gamma, 0, hi, 2)).collect())
        .collect();
    if source.rank() > 0 {
        for row in 0..target.rank() {
            let col = rng.gen_range(0..source.rank());
            if entries[col][row].project(source.space()).unwrap().is_zero() {
                entries[col][row] = GroupRingElt::element(gamma, rng.gen_range(0..gamma.order()));
            }
        }
    }
    if !source.space().is_normal() {
        let sum = GroupRingElt::from_terms(gamma, source.space().subgroup().members().iter().map(|&d| (d, 1))).unwrap();
        for entry in entries.iter_mut().flatten() {
            *entry = &sum * &*entry;
        }
    }
    GammaLinearMap::from_ring_columns(source, target, &entries).unwrap()
}
