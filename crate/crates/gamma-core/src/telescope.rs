//! Rebuilding the colimit of a finite tower by iterated Shen factorizations.
//!
//! Stage `n` takes `Hₙ = Mₙ₋₁ ⊕ Gₙ ⊕ ℤ[Γ/Δ]^k` mapping to the top level `G_L` of the
//! target: the previous middle group, the next target level through `g_{n,L}`, and one free
//! generator per positive probe living at level `n`. Factoring that map through `Mₙ` kills its
//! kernel in one step, so equality and positivity of lifted probes agree with the target.

use crate::error::{Error, Result};
use crate::gamma_maps::GammaLinearMap;
use crate::group_ring::CosetVector;
use crate::limits::{ColimitElt, Equality, Positivity, Tower};
use crate::ordered_simplicial::{GammaVector, SimplicialGroup};
use crate::shen::shen_step;

#[derive(Clone, Debug)]
pub struct Telescope {
    pub rebuilt: Tower,
    /// `fₙ: Hₙ → G_L`, compatible with the connecting maps.
    pub comparisons: Vec<GammaLinearMap>,
    /// Index of the first coordinate of the `Gₙ` summand inside `Hₙ`.
    offsets: Vec<usize>,
}

fn place(group: &SimplicialGroup, offset: usize, v: &GammaVector) -> Result<GammaVector> {
    let space = group.space();
    let mut coords: Vec<CosetVector> = (0..group.rank()).map(|_| CosetVector::zero(space)).collect();
    for (k, c) in v.coords().iter().enumerate() {
        *coords.get_mut(offset + k).ok_or(Error::IndexOutOfRange(offset + k))? = c.clone();
    }
    GammaVector::new(group, coords)
}

pub fn telescope(target: &Tower, positive_probes: &[ColimitElt]) -> Result<Telescope> {
    let last = target
        .last_level()
        .ok_or_else(|| Error::ShapeMismatch("the target tower must be finite".into()))?;
    let top = target.group_at(last).expect("last level exists");
    for p in positive_probes {
        if !top.cone_contains(&target.push(p, last)?)? {
            return Err(Error::NotInCone);
        }
    }
    let space = top.space();
    let mut groups: Vec<SimplicialGroup> = Vec::new();
    let mut maps: Vec<GammaLinearMap> = Vec::new();
    let mut comparisons = Vec::new();
    let mut offsets = Vec::new();
    let mut carried: Option<(GammaLinearMap, GammaLinearMap)> = None;
    for level in 0..=last {
        let mut columns: Vec<GammaVector> = Vec::new();
        if let Some((_, out)) = &carried {
            columns.extend(out.columns().iter().cloned());
        }
        offsets.push(columns.len());
        columns.extend(target.composite(level, last)?.columns().iter().cloned());
        for p in positive_probes.iter().filter(|p| p.level == level) {
            columns.push(target.push(p, last)?);
        }
        let stage = SimplicialGroup::new(space, columns.len());
        let f = GammaLinearMap::new(&stage, top, columns)?;
        if let Some((into, _)) = carried.take() {
            let previous = groups.last().expect("earlier stage");
            let embedded = into
                .columns()
                .iter()
                .map(|c| place(&stage, 0, c))
                .collect::<Result<Vec<_>>>()?;
            maps.push(GammaLinearMap::new(previous, &stage, embedded)?);
        }
        let factorization = shen_step(&f)?;
        groups.push(stage);
        comparisons.push(f);
        carried = Some((factorization.into_middle, factorization.out_of_middle));
    }
    let (into, out) = carried.expect("at least one level");
    groups.push(into.target().clone());
    maps.push(into);
    comparisons.push(out);

    let rebuilt = Tower::new(groups, maps, None, false)?;
    let telescope = Telescope { rebuilt, comparisons, offsets };
    telescope.check_compatible()?;
    Ok(telescope)
}

impl Telescope {
    /// `f_{n+1} ∘ hₙ = fₙ` at every level.
    fn check_compatible(&self) -> Result<()> {
        for (n, h) in self.rebuilt.maps().iter().enumerate() {
            if self.comparisons[n + 1].compose(h)? != self.comparisons[n] {
                return Err(Error::InternalVerificationFailed(format!("stage {n} does not commute")));
            }
        }
        Ok(())
    }

    /// The element of the rebuilt tower sitting in the `Gₙ` summand.
    pub fn lift(&self, p: &ColimitElt) -> Result<ColimitElt> {
        let offset = *self.offsets.get(p.level).ok_or(Error::IndexOutOfRange(p.level))?;
        let group = self.rebuilt.group_at(p.level).expect("level exists");
        self.rebuilt.element(p.level, place(group, offset, &p.value)?)
    }

    /// Compares equality of every probe pair and positivity of every probe in both colimits.
    pub fn agrees_on(&self, target: &Tower, probes: &[ColimitElt], horizon: usize) -> Result<bool> {
        let lifted = probes.iter().map(|p| self.lift(p)).collect::<Result<Vec<_>>>()?;
        let equal = |e: Equality| match e {
            Equality::Equal { .. } => Some(true),
            Equality::NotEqualUpTo { .. } => Some(false),
            Equality::Unknown(_) => None,
        };
        let positive = |e: Positivity| match e {
            Positivity::Positive { .. } => Some(true),
            Positivity::NotPositiveUpTo { .. } => Some(false),
            Positivity::Unknown(_) => None,
        };
        for (i, p) in probes.iter().enumerate() {
            let there = positive(target.colimit_positive(p, horizon)?);
            let here = positive(self.rebuilt.colimit_positive(&lifted[i], horizon)?);
            if there.is_none() || there != here {
                return Ok(false);
            }
            for (j, q) in probes.iter().enumerate().skip(i + 1) {
                let there = equal(target.colimit_eq(p, q, horizon)?);
                let here = equal(self.rebuilt.colimit_eq(&lifted[i], &lifted[j], horizon)?);
                if there.is_none() || there != here {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
