//! Strong decomposition witnesses and unperforation witnesses.
//!
//! A witness for a relation `Σ aᵢxᵢ = 0` among positive elements is a family of positive
//! generators `yⱼ` and positive coefficients `bᵢⱼ` with `xᵢ = Σⱼ bᵢⱼyⱼ` and
//! `Σᵢ π(aᵢbᵢⱼ) = 0` for every `j`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::gamma_module::GammaModule;
use crate::group_ring::{CosetVector, GroupRingElt};
use crate::ordered_simplicial::{GammaVector, SimplicialGroup};

#[derive(Clone, Debug, PartialEq)]
pub struct SdpWitness<E> {
    /// `b[i][j]`, one row per relation term.
    pub b: Vec<Vec<GroupRingElt>>,
    pub y: Vec<E>,
}

impl<E> SdpWitness<E> {
    pub fn m(&self) -> usize {
        self.y.len()
    }
}

/// Why a proposed witness was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessDefect {
    Shape(String),
    NegativeCoefficient { row: usize, col: usize },
    GeneratorOutsideCone(usize),
    DecompositionFails(usize),
    RelationNonzero(usize),
    ProjectionNegative(usize),
}

impl fmt::Display for WitnessDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessDefect::Shape(why) => write!(f, "shape: {why}"),
            WitnessDefect::NegativeCoefficient { row, col } => {
                write!(f, "coefficient b[{row}][{col}] is not positive")
            }
            WitnessDefect::GeneratorOutsideCone(j) => write!(f, "generator y[{j}] is not positive"),
            WitnessDefect::DecompositionFails(i) => write!(f, "x[{i}] is not Σ b[{i}][j] y[j]"),
            WitnessDefect::RelationNonzero(j) => write!(f, "Σ π(a_i b[i][{j}]) is not zero"),
            WitnessDefect::ProjectionNegative(j) => write!(f, "π(a b[{j}]) is not positive"),
        }
    }
}

/// Outcome of a witness check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(WitnessDefect),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

impl From<std::result::Result<(), WitnessDefect>> for Verdict {
    fn from(outcome: std::result::Result<(), WitnessDefect>) -> Self {
        match outcome {
            Ok(()) => Verdict::Valid,
            Err(defect) => Verdict::Invalid(defect),
        }
    }
}

/// Groups that can produce decomposition witnesses for the subgroup carried by their space.
pub trait SdpSource: GammaModule {
    fn sdp_witness(
        &self,
        a: &[GroupRingElt],
        x: &[Self::Elt],
    ) -> Result<SdpWitness<Self::Elt>>;
}

/// Checks both defining identities of a decomposition witness exactly.
pub fn verify_sdp_witness<M: GammaModule>(
    module: &M,
    a: &[GroupRingElt],
    x: &[M::Elt],
    witness: &SdpWitness<M::Elt>,
) -> Verdict {
    check_sdp(module, a, x, witness).into()
}

fn check_sdp<M: GammaModule>(
    module: &M,
    a: &[GroupRingElt],
    x: &[M::Elt],
    witness: &SdpWitness<M::Elt>,
) -> std::result::Result<(), WitnessDefect> {
    let n = x.len();
    let m = witness.m();
    if a.len() != n || witness.b.len() != n {
        return Err(WitnessDefect::Shape(format!(
            "{} coefficients, {} elements, {} witness rows",
            a.len(),
            n,
            witness.b.len()
        )));
    }
    if m == 0 {
        return Err(WitnessDefect::Shape("no generators".into()));
    }
    if let Some(i) = witness.b.iter().position(|row| row.len() != m) {
        return Err(WitnessDefect::Shape(format!("row {i} has the wrong length")));
    }
    if witness.y.iter().chain(x).any(|v| !module.belongs(v)) {
        return Err(WitnessDefect::Shape("element outside the group".into()));
    }
    let group = module.group();
    if a.iter().chain(witness.b.iter().flatten()).any(|c| **c.group() != **group) {
        return Err(WitnessDefect::Shape("coefficient over another group".into()));
    }
    for (row, coefficients) in witness.b.iter().enumerate() {
        if let Some(col) = coefficients.iter().position(|b| !b.is_positive()) {
            return Err(WitnessDefect::NegativeCoefficient { row, col });
        }
    }
    if let Some(j) = witness.y.iter().position(|y| !module.in_cone(y)) {
        return Err(WitnessDefect::GeneratorOutsideCone(j));
    }
    for (i, (row, xi)) in witness.b.iter().zip(x).enumerate() {
        if module.combine(row, &witness.y) != *xi {
            return Err(WitnessDefect::DecompositionFails(i));
        }
    }
    let space = module.space();
    for j in 0..m {
        let total = a
            .iter()
            .zip(&witness.b)
            .fold(GroupRingElt::zero(group), |acc, (ai, row)| &acc + &(ai * &row[j]));
        if !total.project(space).expect("same group").is_zero() {
            return Err(WitnessDefect::RelationNonzero(j));
        }
    }
    Ok(())
}

impl SdpSource for SimplicialGroup {
    /// Generators are the basis elements and `bᵢⱼ` is the canonical lift of coordinate `j` of `xᵢ`.
    fn sdp_witness(&self, a: &[GroupRingElt], x: &[GammaVector]) -> Result<SdpWitness<GammaVector>> {
        check_relation(self, a, x)?;
        let group = self.space().group();
        let witness = if self.rank() == 0 {
            SdpWitness {
                b: vec![vec![GroupRingElt::zero(group)]; x.len()],
                y: vec![self.zero_vector()],
            }
        } else {
            SdpWitness {
                b: x.iter().map(GammaVector::lifts).collect(),
                y: self.basis_vectors(),
            }
        };
        match verify_sdp_witness(self, a, x, &witness) {
            Verdict::Valid => Ok(witness),
            Verdict::Invalid(defect) => Err(Error::InternalVerificationFailed(defect.to_string())),
        }
    }
}

/// Validates the hypotheses shared by every witness construction.
pub(crate) fn check_relation<M: GammaModule>(
    module: &M,
    a: &[GroupRingElt],
    x: &[M::Elt],
) -> Result<()> {
    if a.len() != x.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} coefficients for {} elements",
            a.len(),
            x.len()
        )));
    }
    if x.iter().any(|v| !module.belongs(v)) {
        return Err(Error::ShapeMismatch("element outside the group".into()));
    }
    if a.iter().any(|c| **c.group() != **module.group()) {
        return Err(Error::GroupMismatch);
    }
    if x.iter().any(|v| !module.in_cone(v)) {
        return Err(Error::NotInCone);
    }
    if !module.is_zero(&module.combine(a, x)) {
        return Err(Error::RelationNotZero);
    }
    Ok(())
}

/// Data showing that `x` is unperforated against `a`: `x = Σ bⱼyⱼ`, `yⱼ ≥ 0`, `π(a bⱼ) ≥ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct UnperfWitness {
    pub b: Vec<GroupRingElt>,
    pub y: Vec<GammaVector>,
}

impl UnperfWitness {
    pub fn m(&self) -> usize {
        self.y.len()
    }
}

/// Builds an unperforation witness for `a ≥ 0` and `x` with `a·x ≥ 0`.
///
/// When `x` is already positive the one-term witness `x = 1·x` is returned. Otherwise
/// `x = x⁺ − x⁻` is split and the relation `a·x⁺ − a·x⁻ − (a·x) = 0` is decomposed; the
/// differences `b₁ⱼ − b₂ⱼ` of the first two witness rows form the answer.
pub fn unperforation_witness(
    group: &SimplicialGroup,
    a: &GroupRingElt,
    x: &GammaVector,
) -> Result<UnperfWitness> {
    if !a.is_positive() {
        return Err(Error::NotPositive);
    }
    let ax = x.act(a)?;
    if !group.cone_contains(&ax)? {
        return Err(Error::ProductNotInCone);
    }
    let witness = if group.cone_contains(x)? {
        UnperfWitness {
            b: vec![GroupRingElt::one(a.group())],
            y: vec![x.clone()],
        }
    } else {
        let terms = [x.positive_part(), x.negative_part(), ax];
        let one = GroupRingElt::one(a.group());
        let coefficients = [a.clone(), -a, -&one];
        let split = group.sdp_witness(&coefficients, &terms)?;
        let b = split.b[0].iter().zip(&split.b[1]).map(|(p, q)| p - q).collect();
        UnperfWitness { b, y: split.y }
    };
    match verify_unperforation_witness(group, a, x, &witness) {
        Verdict::Valid => Ok(witness),
        Verdict::Invalid(defect) => Err(Error::InternalVerificationFailed(defect.to_string())),
    }
}

pub fn verify_unperforation_witness(
    group: &SimplicialGroup,
    a: &GroupRingElt,
    x: &GammaVector,
    witness: &UnperfWitness,
) -> Verdict {
    check_unperf(group, a, x, witness).into()
}

fn check_unperf(
    group: &SimplicialGroup,
    a: &GroupRingElt,
    x: &GammaVector,
    witness: &UnperfWitness,
) -> std::result::Result<(), WitnessDefect> {
    if witness.b.len() != witness.y.len() || witness.y.is_empty() {
        return Err(WitnessDefect::Shape("need as many coefficients as generators".into()));
    }
    if witness.y.iter().chain([x]).any(|v| !group.belongs(v)) {
        return Err(WitnessDefect::Shape("element outside the group".into()));
    }
    if let Some(j) = witness.y.iter().position(|y| !group.in_cone(y)) {
        return Err(WitnessDefect::GeneratorOutsideCone(j));
    }
    if group.combine(&witness.b, &witness.y) != *x {
        return Err(WitnessDefect::DecompositionFails(0));
    }
    for (j, bj) in witness.b.iter().enumerate() {
        let product = a.ring_mul(bj).map_err(|_| WitnessDefect::Shape("coefficient group".into()))?;
        if !product.project(group.space()).expect("same group").is_positive() {
            return Err(WitnessDefect::ProjectionNegative(j));
        }
    }
    Ok(())
}

/// Default bound for [`search_single_term_witness`]: the largest absolute coefficient
/// appearing in `a` or `x`, plus two.
pub fn single_term_search_bound(a: &GroupRingElt, x: &GammaVector) -> BigInt {
    a.max_abs_coeff().max(x.max_abs_coeff()) + 2
}

/// Exhaustive search for a one-term witness `x = b·y` with `y ≥ 0` and `π(ab) ≥ 0`, over
/// `b` with coefficients in `[-bound, bound]` and `y` with coefficients in `[0, bound]`.
/// Returns `None` when the box contains no witness.
pub fn search_single_term_witness(
    group: &SimplicialGroup,
    a: &GroupRingElt,
    x: &GammaVector,
    bound: &BigInt,
) -> Result<Option<UnperfWitness>> {
    group.check(x)?;
    let limit = bound
        .to_i64()
        .filter(|b| !b.is_negative())
        .ok_or_else(|| Error::ShapeMismatch("search bound must be a small nonnegative integer".into()))?;
    let gamma = group.space().group();
    let space = group.space();
    let order = gamma.order();
    let mut b_coeffs = vec![-limit; order];
    loop {
        let b = GroupRingElt::from_terms(gamma, b_coeffs.iter().enumerate().map(|(g, &k)| (g, k)))?;
        if (a * &b).project(space)?.is_positive() {
            let solved: Option<Vec<CosetVector>> = x
                .coords()
                .iter()
                .map(|target| solve_positive_preimage(&b, target, limit))
                .collect();
            if let Some(coords) = solved {
                let y = GammaVector::new(group, coords)?;
                return Ok(Some(UnperfWitness { b: vec![b], y: vec![y] }));
            }
        }
        if !advance(&mut b_coeffs, -limit, limit) {
            return Ok(None);
        }
    }
}

/// Some `y` with coefficients in `[0, limit]` and `b·y = target`.
fn solve_positive_preimage(b: &GroupRingElt, target: &CosetVector, limit: i64) -> Option<CosetVector> {
    let space = target.space();
    if space.is_empty() {
        return None;
    }
    let mut coeffs = vec![0i64; space.len()];
    loop {
        let candidate = CosetVector::from_ints(space, &coeffs).expect("one entry per coset");
        if b.act(&candidate).expect("same group") == *target {
            return Some(candidate);
        }
        if !advance(&mut coeffs, 0, limit) {
            return None;
        }
    }
}

/// Odometer step over `[low, high]^len`; false once every tuple has been produced.
fn advance(digits: &mut [i64], low: i64, high: i64) -> bool {
    for digit in digits.iter_mut().rev() {
        if *digit < high {
            *digit += 1;
            return true;
        }
        *digit = low;
    }
    false
}
