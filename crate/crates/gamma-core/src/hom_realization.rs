//! Realizing simplicial data by graded matricial rings and positive maps by block embeddings.
//!
//! A homomorphism is kept up to graded conjugacy: its `K₀` matrix plus a certificate saying
//! which target diagonal position receives each copy of each source diagonal slot.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::gamma_maps::GammaLinearMap;
use crate::graded_matricial::MatricialRingDesc;
use crate::group_ring::{same_space, GroupRingElt};
use crate::limits::{Tower, UnitMode};
use crate::ordered_simplicial::{GammaVector, SimplicialGroup};

/// Copy `copy` of coset `coset` in the matrix entry `(target_component, source_component)`,
/// applied to diagonal slot `source_slot`, lands at `target_position`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SlotAssignment {
    pub source_component: usize,
    pub source_slot: usize,
    pub target_component: usize,
    pub coset: usize,
    pub copy: usize,
    pub target_position: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomSpec {
    pub source: MatricialRingDesc,
    pub target: MatricialRingDesc,
    pub matrix: GammaLinearMap,
    pub unital: bool,
    pub certificate: Vec<SlotAssignment>,
}

/// A ring with `(K₀(ring), [ring]) ≅ (G, u)` through `basis_map`.
#[derive(Clone, Debug)]
pub struct Realization {
    pub ring: MatricialRingDesc,
    pub basis_map: GammaLinearMap,
}

#[derive(Clone, Debug)]
pub struct RingTower {
    pub rings: Vec<MatricialRingDesc>,
    pub specs: Vec<HomSpec>,
}

/// Builds the ring whose component `i` has one shift `γ⁻¹` for each unit of weight in the
/// support of `aᵢ`, grouped by left coset of `γ⁻¹` in order of first occurrence.
pub fn realize_simplicial(
    group: &SimplicialGroup,
    u: &GammaVector,
    a: &[GroupRingElt],
) -> Result<Realization> {
    group.cone_contains(u)?;
    if a.len() != group.rank() {
        return Err(Error::ShapeMismatch(format!("{} coefficients for rank {}", a.len(), group.rank())));
    }
    let space = group.space();
    let gamma = space.group();
    if a.iter().any(|ai| !crate::group_ring::same_group(ai.group(), gamma)) {
        return Err(Error::GroupMismatch);
    }
    if !a.iter().all(GroupRingElt::is_positive) {
        return Err(Error::NotPositive);
    }
    if a.iter().any(GroupRingElt::is_zero) {
        return Err(Error::NotOrderUnit);
    }
    for (ai, ui) in a.iter().zip(u.coords()) {
        if ai.project(space)? != *ui {
            return Err(Error::ClassMismatch);
        }
    }

    let components = a
        .iter()
        .map(|ai| {
            let mut groups: Vec<(usize, usize, usize)> = Vec::new();
            for (g, c) in ai.terms() {
                let count = c.to_usize().expect("coefficient fits in memory");
                let coset = space.coset_of(g);
                match groups.iter_mut().find(|(k, _, _)| *k == coset) {
                    Some(entry) => entry.2 += count,
                    None => groups.push((coset, g, count)),
                }
            }
            groups
                .into_iter()
                .flat_map(|(_, first, count)| std::iter::repeat_n(gamma.inv(first), count))
                .collect()
        })
        .collect();
    let ring = MatricialRingDesc::new(space, components)?;
    let basis_map = GammaLinearMap::identity(group);
    let k0 = ring.k0();
    if basis_map.apply(&k0.unit_class)? != *u {
        return Err(Error::InternalVerificationFailed("[R] does not map to u".into()));
    }
    Ok(Realization { ring, basis_map })
}

/// Realizes `(G, u)` with the canonical lifts of the coordinates of `u`.
pub fn realize_unit(group: &SimplicialGroup, u: &GammaVector) -> Result<Realization> {
    realize_simplicial(group, u, &u.lifts())
}

impl HomSpec {
    pub fn identity(ring: &MatricialRingDesc) -> Self {
        let certificate = ring
            .components()
            .iter()
            .enumerate()
            .flat_map(|(i, c)| {
                (0..c.size()).map(move |k| SlotAssignment {
                    source_component: i,
                    source_slot: k,
                    target_component: i,
                    coset: 0,
                    copy: 0,
                    target_position: k,
                })
            })
            .collect();
        HomSpec {
            source: ring.clone(),
            target: ring.clone(),
            matrix: GammaLinearMap::identity(&ring.k0_group()),
            unital: true,
            certificate,
        }
    }

    pub fn k0(&self) -> &GammaLinearMap {
        &self.matrix
    }

    /// Checks the certificate against the matrix and both rings.
    pub fn verify(&self) -> Result<()> {
        verify_certificate(&self.source, &self.target, &self.matrix, &self.certificate)?;
        let image = self.matrix.apply(&self.source.k0().unit_class)?;
        let target_unit = self.target.k0().unit_class;
        if self.unital != (image == target_unit) {
            return Err(Error::InternalVerificationFailed("unital flag disagrees with [R] ↦ [S]".into()));
        }
        Ok(())
    }
}

/// Cosets of the entry `(j, i)` of `matrix`, each repeated by multiplicity.
fn entry_cosets(matrix: &GammaLinearMap, j: usize, i: usize) -> Vec<usize> {
    matrix.columns()[i]
        .coord(j)
        .coeffs()
        .iter()
        .enumerate()
        .flat_map(|(c, n)| std::iter::repeat_n(c, n.to_usize().unwrap_or(0)))
        .collect()
}

fn check_matrix(source: &MatricialRingDesc, target: &MatricialRingDesc, matrix: &GammaLinearMap) -> Result<()> {
    if !same_space(source.space(), target.space()) {
        return Err(Error::DeltaMismatch);
    }
    if *matrix.source() != source.k0_group() || *matrix.target() != target.k0_group() {
        return Err(Error::ShapeMismatch("matrix does not run between the K₀ groups".into()));
    }
    if let Some(bad) = matrix.columns().iter().position(|c| c.coords().iter().any(|x| !x.is_positive())) {
        return Err(Error::NotPositiveMap(bad));
    }
    Ok(())
}

/// Finds a block embedding with `K₀` matrix `matrix`. Slot `k` of source component `i`
/// copied through coset `c` needs a target diagonal position `l` with `δₗ⁻¹Δ = γₖ⁻¹·c`;
/// positions within one coset are interchangeable, so a greedy fill is exact.
pub fn hom_realizable(
    source: &MatricialRingDesc,
    target: &MatricialRingDesc,
    matrix: &GammaLinearMap,
    unital: bool,
) -> Result<HomSpec> {
    check_matrix(source, target, matrix)?;
    let space = source.space();
    let image = matrix.apply(&source.k0().unit_class)?;
    let target_unit = target.k0().unit_class;
    if unital && image != target_unit {
        return Err(Error::UnitMismatch);
    }

    let mut certificate = Vec::new();
    for (j, tc) in target.components().iter().enumerate() {
        let mut free: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (l, &shift) in tc.shifts.iter().enumerate().rev() {
            free.entry(space.right_coset_of(shift)).or_default().push(l);
        }
        for (i, sc) in source.components().iter().enumerate() {
            let cosets = entry_cosets(matrix, j, i);
            for (k, &shift) in sc.shifts.iter().enumerate() {
                let mut copies: BTreeMap<usize, usize> = BTreeMap::new();
                for &c in &cosets {
                    let needed = space.act(space.group().inv(shift), c);
                    let position = free.get_mut(&needed).and_then(Vec::pop).ok_or_else(|| {
                        Error::NotRealizable(format!(
                            "target component {j} has too few positions in coset {}",
                            space.coset_name(needed)
                        ))
                    })?;
                    let copy = copies.entry(c).or_insert(0);
                    certificate.push(SlotAssignment {
                        source_component: i,
                        source_slot: k,
                        target_component: j,
                        coset: c,
                        copy: *copy,
                        target_position: position,
                    });
                    *copy += 1;
                }
            }
        }
    }
    certificate.sort();
    let spec = HomSpec {
        source: source.clone(),
        target: target.clone(),
        matrix: matrix.clone(),
        unital: image == target_unit,
        certificate,
    };
    spec.verify()?;
    Ok(spec)
}

/// Injectivity on target positions, coset compatibility of every assignment, and exact
/// coverage of every matrix entry for every source slot.
pub fn verify_certificate(
    source: &MatricialRingDesc,
    target: &MatricialRingDesc,
    matrix: &GammaLinearMap,
    certificate: &[SlotAssignment],
) -> Result<()> {
    check_matrix(source, target, matrix)?;
    let space = source.space();
    let gamma = space.group();
    let fail = |msg: String| Err(Error::NotRealizable(msg));
    let mut used = std::collections::BTreeSet::new();
    let mut covered: BTreeMap<(usize, usize, usize), Vec<usize>> = BTreeMap::new();
    for s in certificate {
        let Some(shift) = source.components().get(s.source_component).and_then(|c| c.shifts.get(s.source_slot)) else {
            return fail(format!("no source slot {:?}", (s.source_component, s.source_slot)));
        };
        let Some(position) = target.components().get(s.target_component).and_then(|c| c.shifts.get(s.target_position)) else {
            return fail(format!("no target position {:?}", (s.target_component, s.target_position)));
        };
        if s.coset >= space.len() {
            return fail(format!("coset {} out of range", s.coset));
        }
        if !used.insert((s.target_component, s.target_position)) {
            return fail(format!("target position {:?} used twice", (s.target_component, s.target_position)));
        }
        if space.right_coset_of(*position) != space.act(gamma.inv(*shift), s.coset) {
            return fail(format!("assignment {s:?} crosses cosets"));
        }
        covered
            .entry((s.target_component, s.source_component, s.source_slot))
            .or_default()
            .push(s.coset);
    }
    for (j, _) in target.components().iter().enumerate() {
        for (i, sc) in source.components().iter().enumerate() {
            let expected = entry_cosets(matrix, j, i);
            for k in 0..sc.size() {
                let mut got = covered.remove(&(j, i, k)).unwrap_or_default();
                got.sort_unstable();
                if got != expected {
                    return fail(format!("slot {k} of component {i} is not covered exactly in component {j}"));
                }
            }
        }
    }
    Ok(())
}

/// `h₂ ∘ h₁`, splicing the certificates path by path.
pub fn hom_compose(h2: &HomSpec, h1: &HomSpec) -> Result<HomSpec> {
    if h1.target != h2.source {
        return Err(Error::ShapeMismatch("specs do not compose".into()));
    }
    let matrix = h2.matrix.compose(&h1.matrix)?;
    let space = h1.source.space();
    let gamma = space.group();
    let mut onward: BTreeMap<(usize, usize), Vec<&SlotAssignment>> = BTreeMap::new();
    for s in &h2.certificate {
        onward.entry((s.source_component, s.source_slot)).or_default().push(s);
    }
    let mut copies: BTreeMap<(usize, usize, usize, usize), usize> = BTreeMap::new();
    let mut certificate = Vec::new();
    for first in &h1.certificate {
        let shift = h1.source.components()[first.source_component].shifts[first.source_slot];
        for second in onward
            .get(&(first.target_component, first.target_position))
            .into_iter()
            .flatten()
        {
            let landing = h2.target.components()[second.target_component].shifts[second.target_position];
            let coset = space.coset_of(gamma.mul(shift, gamma.inv(landing)));
            let key = (first.source_component, first.source_slot, second.target_component, coset);
            let copy = copies.entry(key).or_insert(0);
            certificate.push(SlotAssignment {
                source_component: first.source_component,
                source_slot: first.source_slot,
                target_component: second.target_component,
                coset,
                copy: *copy,
                target_position: second.target_position,
            });
            *copy += 1;
        }
    }
    certificate.sort();
    let spec = HomSpec {
        source: h1.source.clone(),
        target: h2.target.clone(),
        unital: h1.unital && h2.unital,
        matrix,
        certificate,
    };
    spec.verify()?;
    Ok(spec)
}

/// Realizes each level with canonical lifts and each connecting map as a block embedding,
/// then checks that every `K₀` square commutes.
pub fn realize_tower(tower: &Tower) -> Result<RingTower> {
    let units = tower.units().ok_or(Error::MissingUnits)?;
    let realizations = tower
        .groups()
        .iter()
        .zip(&units.units)
        .map(|(g, u)| realize_unit(g, u))
        .collect::<Result<Vec<_>>>()?;
    let unital = units.mode == UnitMode::Unit;
    let mut specs = Vec::with_capacity(tower.maps().len());
    for (k, map) in tower.maps().iter().enumerate() {
        let (lower, upper) = (&realizations[k], &realizations[k + 1]);
        let spec = hom_realizable(&lower.ring, &upper.ring, map, unital)?;
        let left = upper.basis_map.compose(&spec.matrix)?;
        let right = map.compose(&lower.basis_map)?;
        if left != right {
            return Err(Error::InternalVerificationFailed(format!("square {k} does not commute")));
        }
        specs.push(spec);
    }
    Ok(RingTower {
        rings: realizations.into_iter().map(|r| r.ring).collect(),
        specs,
    })
}
