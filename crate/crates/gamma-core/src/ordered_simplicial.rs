//! Simplicial Γ-groups `⊕ⁿ ℤ[Γ/Δ]` with the simplicial cone.
//!
//! An element `Σ aᵢxᵢ` is stored through its π-classes `π(aᵢ)`, which determine it.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::finite_group::{CosetSpace, Subgroup};
use crate::gamma_module::GammaModule;
use crate::group_ring::{same_space, CosetVector, GroupRingElt};
use crate::lattice::{self, IntVec};

/// `⊕ⁿ ℤ[Γ/Δ]` with standard basis `e_i = (0,…,Δ,…,0)`.
#[derive(Clone)]
pub struct SimplicialGroup {
    space: Arc<CosetSpace>,
    rank: usize,
}

impl PartialEq for SimplicialGroup {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && same_space(&self.space, &other.space)
    }
}

impl Eq for SimplicialGroup {}

impl fmt::Debug for SimplicialGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialGroup(rank {}, Δ = {:?})", self.rank, self.space.subgroup())
    }
}

/// An element of a [`SimplicialGroup`].
#[derive(Clone, PartialEq, Eq)]
pub struct GammaVector {
    group: SimplicialGroup,
    coords: Vec<CosetVector>,
}

impl fmt::Debug for GammaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GammaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The two complementary pieces cut out by a subset of basis indices.
#[derive(Clone, Debug)]
pub struct IdealDecomposition {
    pub ambient: SimplicialGroup,
    pub ideal: SimplicialGroup,
    pub ideal_indices: Vec<usize>,
    pub quotient: SimplicialGroup,
    pub quotient_indices: Vec<usize>,
}

impl IdealDecomposition {
    /// Inclusion of the ideal into the ambient group.
    pub fn embed(&self, v: &GammaVector) -> Result<GammaVector> {
        self.ideal.check(v)?;
        let mut coords: Vec<CosetVector> =
            (0..self.ambient.rank).map(|_| CosetVector::zero(&self.ambient.space)).collect();
        for (k, &i) in self.ideal_indices.iter().enumerate() {
            coords[i] = v.coords[k].clone();
        }
        GammaVector::new(&self.ambient, coords)
    }

    /// Quotient map onto the complementary coordinates.
    pub fn project(&self, v: &GammaVector) -> Result<GammaVector> {
        self.ambient.check(v)?;
        let coords = self.quotient_indices.iter().map(|&i| v.coords[i].clone()).collect();
        GammaVector::new(&self.quotient, coords)
    }
}

impl SimplicialGroup {
    pub fn new(space: &Arc<CosetSpace>, rank: usize) -> Self {
        SimplicialGroup {
            space: Arc::clone(space),
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn space(&self) -> &Arc<CosetSpace> {
        &self.space
    }

    pub fn basis(&self, i: usize) -> Result<GammaVector> {
        if i >= self.rank {
            return Err(Error::IndexOutOfRange(i));
        }
        let mut v = self.zero_vector();
        v.coords[i] = CosetVector::coset(&self.space, 0);
        Ok(v)
    }

    pub fn basis_vectors(&self) -> Vec<GammaVector> {
        (0..self.rank).map(|i| self.basis(i).expect("index below rank")).collect()
    }

    pub fn zero_vector(&self) -> GammaVector {
        GammaVector {
            group: self.clone(),
            coords: (0..self.rank).map(|_| CosetVector::zero(&self.space)).collect(),
        }
    }

    /// Builds a vector from per-coordinate coset coefficient lists.
    pub fn vector(&self, coords: &[&[i64]]) -> Result<GammaVector> {
        let coords = coords
            .iter()
            .map(|c| CosetVector::from_ints(&self.space, c))
            .collect::<Result<Vec<_>>>()?;
        GammaVector::new(self, coords)
    }

    /// `Σ π(aᵢ) eᵢ`.
    pub fn from_ring_coords(&self, coefficients: &[GroupRingElt]) -> Result<GammaVector> {
        let coords = coefficients
            .iter()
            .map(|a| a.project(&self.space))
            .collect::<Result<Vec<_>>>()?;
        GammaVector::new(self, coords)
    }

    pub(crate) fn check(&self, v: &GammaVector) -> Result<()> {
        if v.group == *self {
            Ok(())
        } else if same_space(&v.group.space, &self.space) {
            Err(Error::ShapeMismatch(format!(
                "vector of rank {} in a group of rank {}",
                v.group.rank, self.rank
            )))
        } else {
            Err(Error::GroupMismatch)
        }
    }

    /// Every coordinate is componentwise nonnegative.
    pub fn cone_contains(&self, v: &GammaVector) -> Result<bool> {
        self.check(v)?;
        Ok(v.coords.iter().all(CosetVector::is_positive))
    }

    /// A positive `u` is an order-unit exactly when every coordinate has a positive entry:
    /// then each Γ-translate of each basis element sits below a Γ-translate of `u`.
    pub fn is_order_unit(&self, u: &GammaVector) -> Result<bool> {
        if !self.cone_contains(u)? {
            return Err(Error::NotInCone);
        }
        Ok(u.coords.iter().all(CosetVector::has_positive_entry))
    }

    /// Some `a ∈ ℤ⁺[Γ]` with `x ≤ a·u`, for an order-unit `u`.
    pub fn dominating_multiple(&self, u: &GammaVector, x: &GammaVector) -> Result<GroupRingElt> {
        self.check(x)?;
        if !self.is_order_unit(u)? {
            return Err(Error::NotOrderUnit);
        }
        let group = self.space.group();
        let mut terms = Vec::new();
        for (i, (unit_coord, x_coord)) in u.coords.iter().zip(&x.coords).enumerate() {
            let anchor = unit_coord
                .coeffs()
                .iter()
                .position(Signed::is_positive)
                .ok_or(Error::IndexOutOfRange(i))?;
            let anchor_inv = group.inv(self.space.rep(anchor));
            for (target, k) in x_coord.coeffs().iter().enumerate() {
                if k.is_positive() {
                    // rep(target) · rep(anchor)^{-1} carries the anchor coset onto the target coset
                    terms.push((group.mul(self.space.rep(target), anchor_inv), k.clone()));
                }
            }
        }
        GroupRingElt::from_terms(group, terms)
    }

    /// The least interpolant: componentwise maximum of the lower set.
    pub fn interpolate(&self, lower: &[GammaVector], upper: &[GammaVector]) -> Result<GammaVector> {
        for v in lower.iter().chain(upper) {
            self.check(v)?;
        }
        for x in lower {
            for y in upper {
                if !x.le(y)? {
                    return Err(Error::PreorderViolated);
                }
            }
        }
        let mut candidates = lower.iter();
        let Some(first) = candidates.next() else {
            // no lower bounds: the componentwise minimum of the upper set, or zero
            let mut uppers = upper.iter();
            return Ok(match uppers.next() {
                Some(y) => uppers.try_fold(y.clone(), |acc, v| acc.min(v))?,
                None => self.zero_vector(),
            });
        };
        candidates.try_fold(first.clone(), |acc, v| acc.max(v))
    }

    /// Greedy refinement `z₁₁ = min(x₁, y₁)` applied per coset coordinate.
    pub fn riesz_refine(
        &self,
        x1: &GammaVector,
        x2: &GammaVector,
        y1: &GammaVector,
        y2: &GammaVector,
    ) -> Result<[[GammaVector; 2]; 2]> {
        for v in [x1, x2, y1, y2] {
            if !self.cone_contains(v)? {
                return Err(Error::NotInCone);
            }
        }
        if x1.add(x2)? != y1.add(y2)? {
            return Err(Error::SumMismatch);
        }
        let z11 = x1.min(y1)?;
        let z12 = x1.sub(&z11)?;
        let z21 = y1.sub(&z11)?;
        let z22 = x2.sub(&z21)?;
        Ok([[z11, z12], [z21, z22]])
    }

    pub fn ideal_from_subset(&self, subset: &[usize]) -> Result<IdealDecomposition> {
        let mut ideal_indices = subset.to_vec();
        ideal_indices.sort_unstable();
        ideal_indices.dedup();
        if let Some(&bad) = ideal_indices.iter().find(|&&i| i >= self.rank) {
            return Err(Error::IndexOutOfRange(bad));
        }
        let quotient_indices: Vec<usize> =
            (0..self.rank).filter(|i| ideal_indices.binary_search(i).is_err()).collect();
        Ok(IdealDecomposition {
            ambient: self.clone(),
            ideal: SimplicialGroup::new(&self.space, ideal_indices.len()),
            ideal_indices,
            quotient: SimplicialGroup::new(&self.space, quotient_indices.len()),
            quotient_indices,
        })
    }

    /// Whether the Γ-subgroup generated by `generators` is generated by a subset of the basis.
    pub fn is_gamma_ideal(&self, generators: &[GammaVector]) -> Result<bool> {
        for v in generators {
            self.check(v)?;
        }
        let ncols = self.flat_dim();
        let span = |vectors: &[GammaVector]| -> Vec<IntVec> {
            let translates: Vec<IntVec> = vectors
                .iter()
                .flat_map(|v| self.space.group().elements().map(move |g| v.translate(g).flatten()))
                .collect();
            lattice::hermite_normal_form(&translates, ncols)
        };
        let generated = span(generators);
        let mut spanned_basis = Vec::new();
        for i in 0..self.rank {
            let e = self.basis(i)?;
            if lattice::lattice_contains(&generated, &e.flatten()) {
                spanned_basis.push(e);
            }
        }
        Ok(span(&spanned_basis) == generated)
    }

    /// Elements acting trivially on the whole group.
    pub fn group_stabilizer(&self) -> Subgroup {
        if self.rank == 0 {
            Subgroup::whole(self.space.group())
        } else {
            self.space.action_kernel()
        }
    }

    /// All `v` with `0 ≤ v ≤ u`, in lexicographic order of flattened coordinates.
    pub fn interval(&self, u: &GammaVector) -> Result<Vec<GammaVector>> {
        if !self.cone_contains(u)? {
            return Err(Error::NotInCone);
        }
        let bounds = u.flatten();
        let mut out = Vec::new();
        let mut current: IntVec = vec![BigInt::zero(); bounds.len()];
        loop {
            out.push(self.unflatten(&current));
            let mut pos = bounds.len();
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                if current[pos] < bounds[pos] {
                    current[pos] += 1;
                    break;
                }
                current[pos] = BigInt::zero();
            }
        }
    }
}

impl GammaModule for SimplicialGroup {
    type Elt = GammaVector;

    fn space(&self) -> &Arc<CosetSpace> {
        &self.space
    }

    fn zero(&self) -> GammaVector {
        self.zero_vector()
    }

    fn belongs(&self, x: &GammaVector) -> bool {
        x.group == *self
    }

    fn add(&self, x: &GammaVector, y: &GammaVector) -> GammaVector {
        x.add(y).expect("operands from the same group")
    }

    fn neg(&self, x: &GammaVector) -> GammaVector {
        x.neg()
    }

    fn act(&self, a: &GroupRingElt, x: &GammaVector) -> GammaVector {
        x.act(a).expect("coefficient over the same group")
    }

    fn in_cone(&self, x: &GammaVector) -> bool {
        x.coords.iter().all(CosetVector::is_positive)
    }

    fn flat_dim(&self) -> usize {
        self.rank * self.space.len()
    }

    fn flatten(&self, x: &GammaVector) -> IntVec {
        x.flatten()
    }

    fn unflatten(&self, v: &[BigInt]) -> GammaVector {
        let width = self.space.len();
        let coords = (0..self.rank)
            .map(|i| {
                CosetVector::new(&self.space, v[i * width..(i + 1) * width].to_vec())
                    .expect("slice has one entry per coset")
            })
            .collect();
        GammaVector {
            group: self.clone(),
            coords,
        }
    }
}

impl GammaVector {
    pub fn new(group: &SimplicialGroup, coords: Vec<CosetVector>) -> Result<Self> {
        if coords.len() != group.rank {
            return Err(Error::ShapeMismatch(format!(
                "{} coordinates for rank {}",
                coords.len(),
                group.rank
            )));
        }
        if coords.iter().any(|c| !same_space(c.space(), &group.space)) {
            return Err(Error::GroupMismatch);
        }
        Ok(GammaVector {
            group: group.clone(),
            coords,
        })
    }

    pub fn group(&self) -> &SimplicialGroup {
        &self.group
    }

    pub fn coords(&self) -> &[CosetVector] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &CosetVector {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(CosetVector::is_zero)
    }

    /// Canonical lifts of the coordinates to `ℤ[Γ]`.
    pub fn lifts(&self) -> Vec<GroupRingElt> {
        self.coords.iter().map(CosetVector::lift).collect()
    }

    pub fn flatten(&self) -> IntVec {
        self.coords.iter().flat_map(|c| c.coeffs().iter().cloned()).collect()
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coords.iter().map(CosetVector::max_abs_coeff).max().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, CosetVector::checked_add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, CosetVector::checked_sub)
    }

    pub fn min(&self, other: &Self) -> Result<Self> {
        self.zip(other, CosetVector::min)
    }

    pub fn max(&self, other: &Self) -> Result<Self> {
        self.zip(other, CosetVector::max)
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c)
    }

    pub fn positive_part(&self) -> Self {
        self.map(CosetVector::positive_part)
    }

    pub fn negative_part(&self) -> Self {
        self.map(CosetVector::negative_part)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        self.map(|c| c.scale(factor))
    }

    pub fn translate(&self, g: usize) -> Self {
        self.map(|c| c.translate(g))
    }

    /// `a · v` for `a ∈ ℤ[Γ]`.
    pub fn act(&self, a: &GroupRingElt) -> Result<Self> {
        let coords = self.coords.iter().map(|c| a.act(c)).collect::<Result<Vec<_>>>()?;
        Ok(GammaVector {
            group: self.group.clone(),
            coords,
        })
    }

    /// `self ≤ other` in the simplicial order.
    pub fn le(&self, other: &Self) -> Result<bool> {
        self.group.check(other)?;
        for (a, b) in self.coords.iter().zip(&other.coords) {
            if !a.le(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn map(&self, f: impl Fn(&CosetVector) -> CosetVector) -> Self {
        GammaVector {
            group: self.group.clone(),
            coords: self.coords.iter().map(f).collect(),
        }
    }

    fn zip(
        &self,
        other: &Self,
        f: impl Fn(&CosetVector, &CosetVector) -> Result<CosetVector>,
    ) -> Result<Self> {
        self.group.check(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| f(a, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(GammaVector {
            group: self.group.clone(),
            coords,
        })
    }
}
