//! Sequential towers `G₀ → G₁ → …` of simplicial Γ-groups and queries about their colimit.
//!
//! A tower is a finite prefix; with `repeat_last` its final map (an endomorphism) is
//! applied forever. Colimit questions are answered up to an explicit horizon.

use crate::error::{Error, Result};
use crate::gamma_maps::GammaLinearMap;
use crate::group_ring::GroupRingElt;
use crate::lattice::IntVec;
use crate::ordered_simplicial::{GammaVector, SimplicialGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitMode {
    /// `g(uₙ) = uₙ₊₁`
    Unit,
    /// `g(uₙ) ≤ uₙ₊₁`
    Interval,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TowerUnits {
    pub mode: UnitMode,
    pub units: Vec<GammaVector>,
}

#[derive(Clone, Debug)]
pub struct Tower {
    groups: Vec<SimplicialGroup>,
    maps: Vec<GammaLinearMap>,
    units: Option<TowerUnits>,
    repeat_last: bool,
}

/// An element of the colimit, represented at some level.
#[derive(Clone, Debug, PartialEq)]
pub struct ColimitElt {
    pub level: usize,
    pub value: GammaVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnknownReason {
    /// A query element lives above the horizon.
    HorizonTooSmall { needed: usize },
    /// Images differ but the kernels had not visibly stabilized.
    KernelsNotStable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equality {
    Equal { level: usize },
    NotEqualUpTo { horizon: usize },
    Unknown(UnknownReason),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Positivity {
    Positive { level: usize },
    NotPositiveUpTo { horizon: usize },
    Unknown(UnknownReason),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntervalMembership {
    Inside { level: usize },
    NotInsideUpTo { horizon: usize },
    Unknown(UnknownReason),
}

impl Tower {
    pub fn new(
        groups: Vec<SimplicialGroup>,
        maps: Vec<GammaLinearMap>,
        units: Option<TowerUnits>,
        repeat_last: bool,
    ) -> Result<Self> {
        let Some(first) = groups.first() else {
            return Err(Error::ShapeMismatch("a tower needs at least one group".into()));
        };
        if groups.iter().any(|g| g.space() != first.space()) {
            return Err(Error::DeltaMismatch);
        }
        if maps.len() + 1 != groups.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} maps for {} groups",
                maps.len(),
                groups.len()
            )));
        }
        for (k, map) in maps.iter().enumerate() {
            if map.source().space() != first.space() || map.target().space() != first.space() {
                return Err(Error::DeltaMismatch);
            }
            if *map.source() != groups[k] || *map.target() != groups[k + 1] {
                return Err(Error::ShapeMismatch(format!("map {k} does not chain")));
            }
            if !map.is_positive() {
                return Err(Error::NotPositiveMap(k));
            }
        }
        if repeat_last {
            match maps.last() {
                Some(last) if last.source() == last.target() => {}
                _ => {
                    return Err(Error::ShapeMismatch(
                        "repeating needs a final endomorphism".into(),
                    ))
                }
            }
        }
        if let Some(spec) = &units {
            if spec.units.len() != groups.len() {
                return Err(Error::ShapeMismatch("one unit per level is required".into()));
            }
            for (group, u) in groups.iter().zip(&spec.units) {
                if !group.cone_contains(u)? || !group.is_order_unit(u)? {
                    return Err(Error::NotOrderUnit);
                }
            }
            for (k, map) in maps.iter().enumerate() {
                if !units_related(spec.mode, &map.apply(&spec.units[k])?, &spec.units[k + 1])? {
                    return Err(Error::UnitNotPreserved(k));
                }
            }
        }
        Ok(Tower {
            groups,
            maps,
            units,
            repeat_last,
        })
    }

    pub fn groups(&self) -> &[SimplicialGroup] {
        &self.groups
    }

    pub fn maps(&self) -> &[GammaLinearMap] {
        &self.maps
    }

    pub fn units(&self) -> Option<&TowerUnits> {
        self.units.as_ref()
    }

    pub fn repeats(&self) -> bool {
        self.repeat_last
    }

    /// Highest level, or `None` when the final map repeats forever.
    pub fn last_level(&self) -> Option<usize> {
        (!self.repeat_last).then(|| self.groups.len() - 1)
    }

    pub fn group_at(&self, level: usize) -> Option<&SimplicialGroup> {
        match self.groups.get(level) {
            Some(g) => Some(g),
            None if self.repeat_last => self.groups.last(),
            None => None,
        }
    }

    /// The connecting map from `level` to `level + 1`.
    pub fn map_at(&self, level: usize) -> Option<&GammaLinearMap> {
        match self.maps.get(level) {
            Some(m) => Some(m),
            None if self.repeat_last => self.maps.last(),
            None => None,
        }
    }

    /// The unit at `level`. Beyond the stored prefix, unit mode pushes the last unit forward;
    /// interval mode takes the componentwise maximum of that push and the last stored unit.
    pub fn unit_at(&self, level: usize) -> Result<GammaVector> {
        let spec = self.units.as_ref().ok_or(Error::MissingUnits)?;
        if let Some(u) = spec.units.get(level) {
            return Ok(u.clone());
        }
        if self.group_at(level).is_none() {
            return Err(Error::IndexOutOfRange(level));
        }
        let last_stored = spec.units.last().expect("one unit per level");
        let mut u = last_stored.clone();
        for k in spec.units.len() - 1..level {
            let pushed = self.map_at(k).expect("repeating tower").apply(&u)?;
            u = match spec.mode {
                UnitMode::Unit => pushed,
                UnitMode::Interval => pushed.max(last_stored)?,
            };
        }
        Ok(u)
    }

    /// `g_{from,to}`.
    pub fn composite(&self, from: usize, to: usize) -> Result<GammaLinearMap> {
        let start = self.group_at(from).ok_or(Error::IndexOutOfRange(from))?;
        self.group_at(to).ok_or(Error::IndexOutOfRange(to))?;
        if to < from {
            return Err(Error::ShapeMismatch("cannot push to a lower level".into()));
        }
        let mut map = GammaLinearMap::identity(start);
        for k in from..to {
            map = self.map_at(k).expect("level checked").compose(&map)?;
        }
        Ok(map)
    }

    pub fn push(&self, p: &ColimitElt, level: usize) -> Result<GammaVector> {
        if level < p.level {
            return Err(Error::ShapeMismatch("cannot push to a lower level".into()));
        }
        let group = self.group_at(p.level).ok_or(Error::IndexOutOfRange(p.level))?;
        if p.value.group() != group {
            return Err(Error::ShapeMismatch("element does not live at its level".into()));
        }
        self.group_at(level).ok_or(Error::IndexOutOfRange(level))?;
        let mut v = p.value.clone();
        for k in p.level..level {
            v = self.map_at(k).expect("level checked").apply(&v)?;
        }
        Ok(v)
    }

    pub fn element(&self, level: usize, value: GammaVector) -> Result<ColimitElt> {
        let p = ColimitElt { level, value };
        self.push(&p, level)?;
        Ok(p)
    }

    pub fn add(&self, p: &ColimitElt, q: &ColimitElt) -> Result<ColimitElt> {
        let level = p.level.max(q.level);
        let value = self.push(p, level)?.add(&self.push(q, level)?)?;
        Ok(ColimitElt { level, value })
    }

    pub fn sub(&self, p: &ColimitElt, q: &ColimitElt) -> Result<ColimitElt> {
        let level = p.level.max(q.level);
        let value = self.push(p, level)?.sub(&self.push(q, level)?)?;
        Ok(ColimitElt { level, value })
    }

    pub fn act(&self, a: &GroupRingElt, p: &ColimitElt) -> Result<ColimitElt> {
        Ok(ColimitElt {
            level: p.level,
            value: p.value.act(a)?,
        })
    }

    /// In unit mode: some `a ∈ ℤ⁺[Γ]` with `p ≤ a·u` where `u` is the common image of the units.
    pub fn dominating_multiple(&self, p: &ColimitElt) -> Result<GroupRingElt> {
        let u = self.unit_at(p.level)?;
        self.group_at(p.level)
            .ok_or(Error::IndexOutOfRange(p.level))?
            .dominating_multiple(&u, &p.value)
    }

    fn top_level(&self, horizon: usize) -> usize {
        match self.last_level() {
            Some(last) => horizon.min(last),
            None => horizon,
        }
    }

    fn kernel_at(&self, from: usize, to: usize) -> Result<Vec<IntVec>> {
        Ok(self.composite(from, to)?.kernel_lattice())
    }

    pub fn colimit_eq(&self, p: &ColimitElt, q: &ColimitElt, horizon: usize) -> Result<Equality> {
        let start = p.level.max(q.level);
        if horizon < start {
            return Ok(Equality::Unknown(UnknownReason::HorizonTooSmall { needed: start }));
        }
        let difference = self.sub(p, q)?;
        let top = self.top_level(horizon);
        let mut value = difference.value;
        let mut previous_kernel: Option<Vec<IntVec>> = None;
        let mut stabilized = false;
        for level in start..=top {
            if level > start {
                value = self.map_at(level - 1).expect("within tower").apply(&value)?;
            }
            if value.is_zero() {
                return Ok(Equality::Equal { level });
            }
            if level + 1 >= top {
                let kernel = self.kernel_at(start, level)?;
                stabilized = previous_kernel.as_ref() == Some(&kernel);
                previous_kernel = Some(kernel);
            }
        }
        if stabilized || self.last_level() == Some(top) {
            Ok(Equality::NotEqualUpTo { horizon: top })
        } else {
            Ok(Equality::Unknown(UnknownReason::KernelsNotStable))
        }
    }

    pub fn colimit_positive(&self, p: &ColimitElt, horizon: usize) -> Result<Positivity> {
        if horizon < p.level {
            return Ok(Positivity::Unknown(UnknownReason::HorizonTooSmall { needed: p.level }));
        }
        let top = self.top_level(horizon);
        let mut value = self.push(p, p.level)?;
        for level in p.level..=top {
            if level > p.level {
                value = self.map_at(level - 1).expect("within tower").apply(&value)?;
            }
            if value.coords().iter().all(|c| c.is_positive()) {
                return Ok(Positivity::Positive { level });
            }
        }
        Ok(Positivity::NotPositiveUpTo { horizon: top })
    }

    pub fn colimit_interval_contains(
        &self,
        p: &ColimitElt,
        horizon: usize,
    ) -> Result<IntervalMembership> {
        if self.units.is_none() {
            return Err(Error::MissingUnits);
        }
        if horizon < p.level {
            return Ok(IntervalMembership::Unknown(UnknownReason::HorizonTooSmall {
                needed: p.level,
            }));
        }
        let top = self.top_level(horizon);
        let mut value = self.push(p, p.level)?;
        for level in p.level..=top {
            if level > p.level {
                value = self.map_at(level - 1).expect("within tower").apply(&value)?;
            }
            let positive = value.coords().iter().all(|c| c.is_positive());
            if positive && value.le(&self.unit_at(level)?)? {
                return Ok(IntervalMembership::Inside { level });
            }
        }
        Ok(IntervalMembership::NotInsideUpTo { horizon: top })
    }
}

fn units_related(mode: UnitMode, pushed: &GammaVector, next: &GammaVector) -> Result<bool> {
    match mode {
        UnitMode::Unit => Ok(pushed == next),
        UnitMode::Interval => pushed.le(next),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_group::{CosetSpace, FiniteGroup, Subgroup};

    fn regular(order: usize) -> SimplicialGroup {
        let g = FiniteGroup::cyclic(order);
        SimplicialGroup::new(&CosetSpace::new(&Subgroup::trivial(&g)), 1)
    }

    fn times(g: &SimplicialGroup, coeffs: &[i64]) -> GammaLinearMap {
        GammaLinearMap::new(g, g, vec![g.vector(&[coeffs]).unwrap()]).unwrap()
    }

    #[test]
    fn doubling_tower() {
        let g = regular(1);
        let t = Tower::new(vec![g.clone(), g.clone()], vec![times(&g, &[2])], None, false).unwrap();
        let p = ColimitElt { level: 0, value: g.vector(&[&[1]]).unwrap() };
        let q = ColimitElt { level: 1, value: g.vector(&[&[2]]).unwrap() };
        assert_eq!(t.colimit_eq(&p, &q, 1).unwrap(), Equality::Equal { level: 1 });
        assert_eq!(
            t.colimit_eq(&p, &q, 0).unwrap(),
            Equality::Unknown(UnknownReason::HorizonTooSmall { needed: 1 })
        );
    }

    #[test]
    fn one_plus_x_tower() {
        let g = regular(2);
        let t = Tower::new(
            vec![g.clone(), g.clone()],
            vec![times(&g, &[1, 1])],
            Some(TowerUnits {
                mode: UnitMode::Interval,
                units: vec![g.vector(&[&[1, 0]]).unwrap(), g.vector(&[&[1, 1]]).unwrap()],
            }),
            true,
        )
        .unwrap();
        let p = ColimitElt { level: 0, value: g.vector(&[&[1, -1]]).unwrap() };
        let zero = ColimitElt { level: 0, value: g.zero_vector() };
        assert_eq!(t.colimit_eq(&p, &zero, 3).unwrap(), Equality::Equal { level: 1 });
        assert_eq!(t.colimit_positive(&p, 3).unwrap(), Positivity::Positive { level: 1 });
        assert_eq!(
            t.colimit_interval_contains(&p, 3).unwrap(),
            IntervalMembership::Inside { level: 1 }
        );
        // extrapolated interval units dominate the pushed units
        let u3 = t.unit_at(3).unwrap();
        let pushed = t.map_at(2).unwrap().apply(&t.unit_at(2).unwrap()).unwrap();
        assert!(pushed.le(&u3).unwrap());
    }

    #[test]
    fn identity_tower() {
        let g = regular(1);
        let id = GammaLinearMap::identity(&g);
        let t = Tower::new(vec![g.clone(), g.clone()], vec![id], None, true).unwrap();
        let one = ColimitElt { level: 0, value: g.vector(&[&[1]]).unwrap() };
        let two = ColimitElt { level: 0, value: g.vector(&[&[2]]).unwrap() };
        assert_eq!(t.colimit_eq(&one, &two, 1).unwrap(), Equality::NotEqualUpTo { horizon: 1 });
        let negative = ColimitElt { level: 0, value: g.vector(&[&[-1]]).unwrap() };
        assert_eq!(
            t.colimit_positive(&negative, 4).unwrap(),
            Positivity::NotPositiveUpTo { horizon: 4 }
        );
        assert_eq!(t.colimit_positive(&one, 0).unwrap(), Positivity::Positive { level: 0 });
        assert_eq!(t.colimit_interval_contains(&one, 1), Err(Error::MissingUnits));
    }

    #[test]
    fn validation() {
        let g = regular(2);
        let negative = times(&g, &[1, -1]);
        assert_eq!(
            Tower::new(vec![g.clone(), g.clone()], vec![negative], None, false).unwrap_err(),
            Error::NotPositiveMap(0)
        );
        let d3 = FiniteGroup::dihedral(3);
        let other = SimplicialGroup::new(&CosetSpace::generated(&d3, &[3]).unwrap(), 1);
        assert_eq!(
            Tower::new(vec![g.clone(), other], vec![], None, false).unwrap_err(),
            Error::DeltaMismatch
        );
        let broken_units = TowerUnits {
            mode: UnitMode::Unit,
            units: vec![g.vector(&[&[1, 0]]).unwrap(), g.vector(&[&[1, 0]]).unwrap()],
        };
        assert_eq!(
            Tower::new(vec![g.clone(), g.clone()], vec![times(&g, &[1, 1])], Some(broken_units), false)
                .unwrap_err(),
            Error::UnitNotPreserved(0)
        );
    }

    #[test]
    fn dominating_multiple_in_unit_mode() {
        let g = regular(2);
        let t = Tower::new(
            vec![g.clone(), g.clone()],
            vec![times(&g, &[1, 1])],
            Some(TowerUnits {
                mode: UnitMode::Unit,
                units: vec![g.vector(&[&[1, 0]]).unwrap(), g.vector(&[&[1, 1]]).unwrap()],
            }),
            false,
        )
        .unwrap();
        let p = ColimitElt { level: 0, value: g.vector(&[&[3, -2]]).unwrap() };
        let a = t.dominating_multiple(&p).unwrap();
        let dominated = p.value.le(&t.unit_at(0).unwrap().act(&a).unwrap()).unwrap();
        assert!(dominated);
    }
}
