//! The interface shared by every ordered Γ-group the crate manipulates concretely.
//!
//! Each such group is a free abelian group of finite rank with a `ℤ[Γ]`-action and a
//! positive cone, so elements can be flattened to integer vectors for lattice work.

use std::fmt::Debug;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::finite_group::{CosetSpace, FiniteGroup, Subgroup};
use crate::group_ring::GroupRingElt;
use crate::lattice::IntVec;

pub trait GammaModule: Clone + Debug {
    type Elt: Clone + PartialEq + Debug;

    /// `Γ` together with the subgroup `Δ` whose projection `π` enters decomposition identities.
    fn space(&self) -> &Arc<CosetSpace>;

    fn group(&self) -> &Arc<FiniteGroup> {
        self.space().group()
    }

    fn zero(&self) -> Self::Elt;

    /// Whether `x` has the right shape to be an element of this group.
    fn belongs(&self, x: &Self::Elt) -> bool;

    fn add(&self, x: &Self::Elt, y: &Self::Elt) -> Self::Elt;

    fn neg(&self, x: &Self::Elt) -> Self::Elt;

    fn sub(&self, x: &Self::Elt, y: &Self::Elt) -> Self::Elt {
        self.add(x, &self.neg(y))
    }

    fn act(&self, a: &GroupRingElt, x: &Self::Elt) -> Self::Elt;

    fn in_cone(&self, x: &Self::Elt) -> bool;

    /// Rank of the underlying free abelian group.
    fn flat_dim(&self) -> usize;

    fn flatten(&self, x: &Self::Elt) -> IntVec;

    fn unflatten(&self, v: &[BigInt]) -> Self::Elt;

    /// `Σ a_i x_i`.
    fn combine(&self, coefficients: &[GroupRingElt], elements: &[Self::Elt]) -> Self::Elt {
        coefficients
            .iter()
            .zip(elements)
            .fold(self.zero(), |acc, (a, x)| self.add(&acc, &self.act(a, x)))
    }

    fn is_zero(&self, x: &Self::Elt) -> bool {
        *x == self.zero()
    }

    /// Elements of `Γ` acting trivially on the whole group.
    fn stabilizer(&self) -> Subgroup {
        let dim = self.flat_dim();
        let units: Vec<Self::Elt> = (0..dim)
            .map(|k| {
                let mut v = vec![BigInt::from(0); dim];
                v[k] = BigInt::from(1);
                self.unflatten(&v)
            })
            .collect();
        let group = self.group();
        let mask = group
            .elements()
            .map(|g| {
                let g = GroupRingElt::element(group, g);
                units.iter().all(|e| self.act(&g, e) == *e)
            })
            .collect();
        Subgroup::from_mask(group, mask)
    }
}
