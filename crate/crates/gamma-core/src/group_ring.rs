//! The integral group ring `ℤ[Γ]`, the permutation module `ℤ[Γ/Δ]`, and the projection
//! `π: ℤ[Γ] → ℤ[Γ/Δ]` that sums coefficients over left cosets.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::finite_group::{CosetSpace, FiniteGroup};

pub(crate) fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub(crate) fn same_space(a: &Arc<CosetSpace>, b: &Arc<CosetSpace>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// An element `Σ k_g g` of `ℤ[Γ]`; zero coefficients are never stored.
#[derive(Clone)]
pub struct GroupRingElt {
    group: Arc<FiniteGroup>,
    coeffs: BTreeMap<usize, BigInt>,
}

impl PartialEq for GroupRingElt {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.coeffs == other.coeffs
    }
}

impl Eq for GroupRingElt {}

impl GroupRingElt {
    pub fn zero(group: &Arc<FiniteGroup>) -> Self {
        GroupRingElt {
            group: Arc::clone(group),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(group: &Arc<FiniteGroup>) -> Self {
        Self::element(group, group.identity())
    }

    /// The basis element `g`.
    pub fn element(group: &Arc<FiniteGroup>, g: usize) -> Self {
        Self::from_terms(group, [(g, BigInt::from(1))]).expect("caller passes an element index")
    }

    /// Sums repeated indices; drops zeros.
    pub fn from_terms<K: Into<BigInt>>(
        group: &Arc<FiniteGroup>,
        terms: impl IntoIterator<Item = (usize, K)>,
    ) -> Result<Self> {
        let mut coeffs: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (g, k) in terms {
            group.check_element(g)?;
            *coeffs.entry(g).or_default() += k.into();
        }
        coeffs.retain(|_, k| !k.is_zero());
        Ok(GroupRingElt {
            group: Arc::clone(group),
            coeffs,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn coeff(&self, g: usize) -> BigInt {
        self.coeffs.get(&g).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending element order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(&g, k)| (g, k))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Membership in `ℤ⁺[Γ]`.
    pub fn is_positive(&self) -> bool {
        self.coeffs.values().all(|k| !k.is_negative())
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.values().map(|k| k.abs()).max().unwrap_or_default()
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero(&self.group);
        }
        GroupRingElt {
            group: Arc::clone(&self.group),
            coeffs: self.coeffs.iter().map(|(&g, k)| (g, k * factor)).collect(),
        }
    }

    /// Coefficientwise `max(k, 0)`.
    pub fn positive_part(&self) -> Self {
        GroupRingElt {
            group: Arc::clone(&self.group),
            coeffs: self
                .coeffs
                .iter()
                .filter(|(_, k)| k.is_positive())
                .map(|(&g, k)| (g, k.clone()))
                .collect(),
        }
    }

    pub fn ring_add(&self, other: &Self) -> Result<Self> {
        self.ensure_same(other)?;
        let mut coeffs = self.coeffs.clone();
        for (&g, k) in &other.coeffs {
            *coeffs.entry(g).or_default() += k;
        }
        coeffs.retain(|_, k| !k.is_zero());
        Ok(GroupRingElt {
            group: Arc::clone(&self.group),
            coeffs,
        })
    }

    pub fn ring_sub(&self, other: &Self) -> Result<Self> {
        self.ring_add(&-other)
    }

    /// Convolution product.
    pub fn ring_mul(&self, other: &Self) -> Result<Self> {
        self.ensure_same(other)?;
        let mut coeffs: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (&g, k) in &self.coeffs {
            for (&h, l) in &other.coeffs {
                *coeffs.entry(self.group.mul(g, h)).or_default() += k * l;
            }
        }
        coeffs.retain(|_, k| !k.is_zero());
        Ok(GroupRingElt {
            group: Arc::clone(&self.group),
            coeffs,
        })
    }

    /// `π(a)`: coefficient sums over the left cosets of `space`.
    pub fn project(&self, space: &Arc<CosetSpace>) -> Result<CosetVector> {
        if !same_group(&self.group, space.group()) {
            return Err(Error::GroupMismatch);
        }
        let mut coeffs = vec![BigInt::zero(); space.len()];
        for (&g, k) in &self.coeffs {
            coeffs[space.coset_of(g)] += k;
        }
        Ok(CosetVector {
            space: Arc::clone(space),
            coeffs,
        })
    }

    /// Left action on `ℤ[Γ/Δ]`: `g · (cΔ) = (gc)Δ`, extended linearly.
    pub fn act(&self, v: &CosetVector) -> Result<CosetVector> {
        if !same_group(&self.group, v.space.group()) {
            return Err(Error::GroupMismatch);
        }
        let space = &v.space;
        let mut coeffs = vec![BigInt::zero(); space.len()];
        for (&g, k) in &self.coeffs {
            for (c, m) in v.coeffs.iter().enumerate() {
                if !m.is_zero() {
                    coeffs[space.act(g, c)] += k * m;
                }
            }
        }
        Ok(CosetVector {
            space: Arc::clone(space),
            coeffs,
        })
    }

    fn ensure_same(&self, other: &Self) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }
}

impl Neg for &GroupRingElt {
    type Output = GroupRingElt;

    fn neg(self) -> GroupRingElt {
        GroupRingElt {
            group: Arc::clone(&self.group),
            coeffs: self.coeffs.iter().map(|(&g, k)| (g, -k)).collect(),
        }
    }
}

/// Panics when the operands live over different groups; use the `ring_*` methods to get an error instead.
impl Add for &GroupRingElt {
    type Output = GroupRingElt;

    fn add(self, rhs: &GroupRingElt) -> GroupRingElt {
        self.ring_add(rhs).expect("group ring operands over the same group")
    }
}

impl Sub for &GroupRingElt {
    type Output = GroupRingElt;

    fn sub(self, rhs: &GroupRingElt) -> GroupRingElt {
        self.ring_sub(rhs).expect("group ring operands over the same group")
    }
}

impl Mul for &GroupRingElt {
    type Output = GroupRingElt;

    fn mul(self, rhs: &GroupRingElt) -> GroupRingElt {
        self.ring_mul(rhs).expect("group ring operands over the same group")
    }
}

impl fmt::Debug for GroupRingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GroupRingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .map(|(&g, k)| (self.group.name(g), k.clone()));
        write_linear_combination(f, terms, "1")
    }
}

/// An element of `ℤ[Γ/Δ]`, one coefficient per coset in representative order.
#[derive(Clone)]
pub struct CosetVector {
    space: Arc<CosetSpace>,
    coeffs: Vec<BigInt>,
}

impl PartialEq for CosetVector {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && same_space(&self.space, &other.space)
    }
}

impl Eq for CosetVector {}

impl CosetVector {
    pub fn zero(space: &Arc<CosetSpace>) -> Self {
        CosetVector {
            space: Arc::clone(space),
            coeffs: vec![BigInt::zero(); space.len()],
        }
    }

    /// Indicator of a single coset.
    pub fn coset(space: &Arc<CosetSpace>, coset: usize) -> Self {
        let mut v = Self::zero(space);
        v.coeffs[coset] = BigInt::from(1);
        v
    }

    pub fn new(space: &Arc<CosetSpace>, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != space.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} coefficients for {} cosets",
                coeffs.len(),
                space.len()
            )));
        }
        Ok(CosetVector {
            space: Arc::clone(space),
            coeffs,
        })
    }

    pub fn from_ints(space: &Arc<CosetSpace>, coeffs: &[i64]) -> Result<Self> {
        Self::new(space, coeffs.iter().map(|&k| BigInt::from(k)).collect())
    }

    pub fn space(&self) -> &Arc<CosetSpace> {
        &self.space
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, coset: usize) -> &BigInt {
        &self.coeffs[coset]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Membership in `ℤ⁺[Γ/Δ]`.
    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|k| !k.is_negative())
    }

    pub fn has_positive_entry(&self) -> bool {
        self.coeffs.iter().any(Signed::is_positive)
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.iter().map(|k| k.abs()).max().unwrap_or_default()
    }

    /// Canonical lift `Σ k_c rep(c)` using the coset representatives.
    pub fn lift(&self) -> GroupRingElt {
        GroupRingElt::from_terms(
            self.space.group(),
            self.coeffs
                .iter()
                .enumerate()
                .map(|(c, k)| (self.space.rep(c), k.clone())),
        )
        .expect("representatives are group elements")
    }

    /// Left translate by a single group element.
    pub fn translate(&self, g: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len()];
        for (c, k) in self.coeffs.iter().enumerate() {
            coeffs[self.space.act(g, c)] = k.clone();
        }
        CosetVector {
            space: Arc::clone(&self.space),
            coeffs,
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        self.map(|k| k * factor)
    }

    pub fn positive_part(&self) -> Self {
        self.map(|k| if k.is_positive() { k.clone() } else { BigInt::zero() })
    }

    pub fn negative_part(&self) -> Self {
        self.map(|k| if k.is_negative() { -k } else { BigInt::zero() })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    pub fn min(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a.min(b).clone())
    }

    pub fn max(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a.max(b).clone())
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &Self) -> Result<bool> {
        self.ensure_same(other)?;
        Ok(self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a <= b))
    }

    fn map(&self, f: impl Fn(&BigInt) -> BigInt) -> Self {
        CosetVector {
            space: Arc::clone(&self.space),
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Result<Self> {
        self.ensure_same(other)?;
        Ok(CosetVector {
            space: Arc::clone(&self.space),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect(),
        })
    }

    fn ensure_same(&self, other: &Self) -> Result<()> {
        if same_space(&self.space, &other.space) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }
}

impl Neg for &CosetVector {
    type Output = CosetVector;

    fn neg(self) -> CosetVector {
        self.map(|k| -k)
    }
}

impl Add for &CosetVector {
    type Output = CosetVector;

    fn add(self, rhs: &CosetVector) -> CosetVector {
        self.checked_add(rhs).expect("coset vectors over the same space")
    }
}

impl Sub for &CosetVector {
    type Output = CosetVector;

    fn sub(self, rhs: &CosetVector) -> CosetVector {
        self.checked_sub(rhs).expect("coset vectors over the same space")
    }
}

impl fmt::Debug for CosetVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CosetVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, k)| !k.is_zero())
            .map(|(c, k)| (self.space.coset_name(c), k.clone()));
        write_linear_combination(f, terms, "Δ")
    }
}

fn write_linear_combination(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, BigInt)>,
    unit_name: &str,
) -> fmt::Result {
    let mut first = true;
    for (name, k) in terms {
        let magnitude = k.abs();
        if first {
            if k.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if k.is_negative() { '-' } else { '+' })?;
        }
        first = false;
        let one = BigInt::from(1);
        match (magnitude == one, name == unit_name && unit_name == "1") {
            (true, _) => write!(f, "{name}")?,
            (false, true) => write!(f, "{magnitude}")?,
            (false, false) => write!(f, "{magnitude}{name}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
