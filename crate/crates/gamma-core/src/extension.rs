//! The ordered extension `H = G ⊕ ℤ[Γ/Δ]` of a simplicial group `G` with order-unit `u`.
//!
//! `(x, t) ≥ 0` when `t ≥ 0` and `x + t·u ≥ 0`; the unit of `H` is `(0, Δ)`. Because
//! `[0, u]` has top element `u` and positivity is monotone in `d`, testing `d = u` decides
//! the existential over `d ∈ [0, u]`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::finite_group::CosetSpace;
use crate::gamma_maps::GammaLinearMap;
use crate::gamma_module::GammaModule;
use crate::group_ring::{CosetVector, GroupRingElt};
use crate::lattice::IntVec;
use crate::limits::Tower;
use crate::ordered_simplicial::{GammaVector, SimplicialGroup};
use crate::sdp::{check_relation, verify_sdp_witness, SdpSource, SdpWitness, Verdict};

#[derive(Clone, Debug, PartialEq)]
pub struct ExtendedGroup {
    base: SimplicialGroup,
    unit: GammaVector,
}

#[derive(Clone, PartialEq)]
pub struct ExtElt {
    pub x: GammaVector,
    pub t: CosetVector,
}

impl fmt::Debug for ExtElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ExtElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.x, self.t)
    }
}

/// `ι⁻¹([0, (0,Δ)])` found by enumerating a box one step wider than `[0, u]`.
#[derive(Clone, Debug, PartialEq)]
pub struct IntervalPreimage {
    pub preimage: Vec<GammaVector>,
    pub equals_interval: bool,
}

impl ExtendedGroup {
    pub fn new(base: &SimplicialGroup, unit: &GammaVector) -> Result<Self> {
        if !base.space().is_normal() {
            return Err(Error::DeltaNotNormal);
        }
        if !base.is_order_unit(unit)? {
            return Err(Error::NotOrderUnit);
        }
        Ok(ExtendedGroup {
            base: base.clone(),
            unit: unit.clone(),
        })
    }

    pub fn base(&self) -> &SimplicialGroup {
        &self.base
    }

    pub fn unit(&self) -> &GammaVector {
        &self.unit
    }

    pub fn element(&self, x: GammaVector, t: CosetVector) -> Result<ExtElt> {
        let e = ExtElt { x, t };
        if !self.belongs(&e) {
            return Err(Error::ShapeMismatch("pair does not live in the extension".into()));
        }
        Ok(e)
    }

    /// `ι(x) = (x, 0)`.
    pub fn include(&self, x: &GammaVector) -> Result<ExtElt> {
        self.element(x.clone(), CosetVector::zero(self.base.space()))
    }

    /// `p(x, t) = t`.
    pub fn project(&self, e: &ExtElt) -> CosetVector {
        e.t.clone()
    }

    /// `(0, Δ)`.
    pub fn order_unit(&self) -> ExtElt {
        ExtElt {
            x: self.base.zero_vector(),
            t: CosetVector::coset(self.base.space(), 0),
        }
    }

    /// `t·u`, well defined because `Δ` is normal and acts trivially on `G`.
    fn unit_multiple(&self, t: &CosetVector) -> GammaVector {
        self.unit.act(&t.lift()).expect("same group")
    }

    pub fn cone_contains(&self, e: &ExtElt) -> Result<bool> {
        if !self.belongs(e) {
            return Err(Error::ShapeMismatch("pair does not live in the extension".into()));
        }
        Ok(self.in_cone(e))
    }

    /// Some `c ∈ ℤ⁺[Γ]` with `e ≤ c·(0,Δ)`: with `x ≤ b·u`, `c = lift(t⁺) + b` leaves
    /// `(−x, t⁻ + π(b))`, which is positive.
    pub fn dominating_multiple(&self, e: &ExtElt) -> Result<GroupRingElt> {
        if !self.belongs(e) {
            return Err(Error::ShapeMismatch("pair does not live in the extension".into()));
        }
        let b = self.base.dominating_multiple(&self.unit, &e.x)?;
        Ok(&e.t.positive_part().lift() + &b)
    }

    /// Whether `(0,Δ)` dominates every probe through [`Self::dominating_multiple`].
    pub fn order_unit_check(&self, probes: &[ExtElt]) -> Result<bool> {
        let unit = self.order_unit();
        for e in probes {
            let c = self.dominating_multiple(e)?;
            if !self.in_cone(&self.sub(&self.act(&c, &unit), e)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn interval_preimage(&self) -> Result<IntervalPreimage> {
        let widened = self.base.unflatten(
            &self.unit.flatten().iter().map(|k| k + 2).collect::<Vec<_>>(),
        );
        let shift = self.base.unflatten(&vec![BigInt::from(1); self.base.flat_dim()]);
        let unit = self.order_unit();
        let mut preimage = Vec::new();
        for v in self.base.interval(&widened)? {
            let x = v.sub(&shift)?;
            let ix = self.include(&x)?;
            if self.in_cone(&ix) && self.in_cone(&self.sub(&unit, &ix)) {
                preimage.push(x);
            }
        }
        let interval = self.base.interval(&self.unit)?;
        Ok(IntervalPreimage {
            equals_interval: preimage == interval,
            preimage,
        })
    }

    /// `(eⱼ, 0)` and `(−u, Δ)`: `(x, t) ≥ 0` is `Σ lift(zⱼ)(eⱼ,0) + lift(t)(−u,Δ)` with `z = x + t·u`.
    pub fn cone_generators(&self) -> Vec<ExtElt> {
        let space = self.base.space();
        let mut out: Vec<ExtElt> = self
            .base
            .basis_vectors()
            .into_iter()
            .map(|e| ExtElt { x: e, t: CosetVector::zero(space) })
            .collect();
        out.push(ExtElt {
            x: self.unit.neg(),
            t: CosetVector::coset(space, 0),
        });
        out
    }
}

impl GammaModule for ExtendedGroup {
    type Elt = ExtElt;

    fn space(&self) -> &Arc<CosetSpace> {
        self.base.space()
    }

    fn zero(&self) -> ExtElt {
        ExtElt {
            x: self.base.zero_vector(),
            t: CosetVector::zero(self.base.space()),
        }
    }

    fn belongs(&self, e: &ExtElt) -> bool {
        self.base.belongs(&e.x) && crate::group_ring::same_space(e.t.space(), self.base.space())
    }

    fn add(&self, p: &ExtElt, q: &ExtElt) -> ExtElt {
        ExtElt {
            x: self.base.add(&p.x, &q.x),
            t: &p.t + &q.t,
        }
    }

    fn neg(&self, e: &ExtElt) -> ExtElt {
        ExtElt { x: e.x.neg(), t: -&e.t }
    }

    fn act(&self, a: &GroupRingElt, e: &ExtElt) -> ExtElt {
        ExtElt {
            x: self.base.act(a, &e.x),
            t: a.act(&e.t).expect("same group"),
        }
    }

    fn in_cone(&self, e: &ExtElt) -> bool {
        e.t.is_positive() && self.base.in_cone(&self.base.add(&e.x, &self.unit_multiple(&e.t)))
    }

    fn flat_dim(&self) -> usize {
        self.base.flat_dim() + self.base.space().len()
    }

    fn flatten(&self, e: &ExtElt) -> IntVec {
        let mut v = e.x.flatten();
        v.extend(e.t.coeffs().iter().cloned());
        v
    }

    fn unflatten(&self, v: &[BigInt]) -> ExtElt {
        let split = self.base.flat_dim();
        ExtElt {
            x: self.base.unflatten(&v[..split]),
            t: CosetVector::new(self.base.space(), v[split..].to_vec()).expect("one entry per coset"),
        }
    }
}

impl SdpSource for ExtendedGroup {
    /// With `d = u` and `bᵢ = lift(tᵢ)`, `xᵢ + bᵢu ≥ 0` decomposes over the basis as
    /// `Σⱼ bᵢⱼ eⱼ`. Generators are `(eⱼ, 0)` and one extra `(−u, Δ)` carrying `bᵢ`, so
    /// `Xᵢ = Σⱼ bᵢⱼ(eⱼ,0) + bᵢ(−u,Δ)` and the extra column sums to `Σ π(aᵢbᵢ) = 0`.
    fn sdp_witness(&self, a: &[GroupRingElt], xs: &[ExtElt]) -> Result<SdpWitness<ExtElt>> {
        check_relation(self, a, xs)?;
        let space = self.base.space();
        let mut y: Vec<ExtElt> = self
            .base
            .basis_vectors()
            .into_iter()
            .map(|e| ExtElt { x: e, t: CosetVector::zero(space) })
            .collect();
        y.push(ExtElt {
            x: self.unit.neg(),
            t: CosetVector::coset(space, 0),
        });
        let b = xs
            .iter()
            .map(|e| {
                let bi = e.t.lift();
                let mut row = e.x.add(&self.unit_multiple(&e.t))?.lifts();
                row.push(bi);
                Ok(row)
            })
            .collect::<Result<Vec<_>>>()?;
        let witness = SdpWitness { b, y };
        match verify_sdp_witness(self, a, xs, &witness) {
            Verdict::Valid => Ok(witness),
            Verdict::Invalid(defect) => Err(Error::InternalVerificationFailed(defect.to_string())),
        }
    }
}

/// A tower of extensions with connecting maps `g ⊕ 1`.
#[derive(Clone, Debug)]
pub struct ExtendedTower {
    pub levels: Vec<ExtendedGroup>,
    pub maps: Vec<GammaLinearMap>,
}

impl ExtendedTower {
    /// `(g ⊕ 1)(x, t) = (g(x), t)` for the map leaving `level`.
    pub fn apply(&self, level: usize, e: &ExtElt) -> Result<ExtElt> {
        let map = self.maps.get(level).ok_or(Error::IndexOutOfRange(level))?;
        Ok(ExtElt {
            x: map.apply(&e.x)?,
            t: e.t.clone(),
        })
    }
}

/// Extends every level of a tower with units and checks `h∘ι = ι∘g`, `p∘h = p` and
/// positivity of `h` on the cone generators at every level.
pub fn extend_tower(tower: &Tower) -> Result<ExtendedTower> {
    let units = tower.units().ok_or(Error::MissingUnits)?;
    let levels = tower
        .groups()
        .iter()
        .zip(&units.units)
        .map(|(g, u)| ExtendedGroup::new(g, u))
        .collect::<Result<Vec<_>>>()?;
    let extended = ExtendedTower {
        levels,
        maps: tower.maps().to_vec(),
    };
    for (k, map) in extended.maps.iter().enumerate() {
        let (lower, upper) = (&extended.levels[k], &extended.levels[k + 1]);
        for x in lower.base.basis_vectors() {
            let h_ix = extended.apply(k, &lower.include(&x)?)?;
            if h_ix != upper.include(&map.apply(&x)?)? {
                return Err(Error::InternalVerificationFailed(format!("h∘ι ≠ ι∘g at level {k}")));
            }
        }
        for e in lower.cone_generators() {
            let he = extended.apply(k, &e)?;
            if upper.project(&he) != lower.project(&e) {
                return Err(Error::InternalVerificationFailed(format!("p∘h ≠ p at level {k}")));
            }
            if !upper.in_cone(&he) {
                return Err(Error::NotPositiveMap(k));
            }
        }
    }
    Ok(extended)
}
