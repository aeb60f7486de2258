//! Γ-equivariant homomorphisms out of simplicial Γ-groups, given by the images of the basis.

use std::fmt;

use crate::error::{Error, Result};
use crate::gamma_module::GammaModule;
use crate::group_ring::{same_group, GroupRingElt};
use crate::lattice::{self, IntVec};
use crate::ordered_simplicial::{GammaVector, SimplicialGroup};

/// A homomorphism from a simplicial Γ-group into any [`GammaModule`], determined by the
/// images of the basis elements. Each image must be fixed by the source stabilizer `Δ_s`.
#[derive(Clone)]
pub struct GammaHom<M: GammaModule> {
    source: SimplicialGroup,
    target: M,
    columns: Vec<M::Elt>,
}

/// Maps between simplicial Γ-groups.
pub type GammaLinearMap = GammaHom<SimplicialGroup>;

impl<M: GammaModule + PartialEq> PartialEq for GammaHom<M> {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.columns == other.columns
    }
}

impl<M: GammaModule> fmt::Debug for GammaHom<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GammaHom")
            .field("source_rank", &self.source.rank())
            .field("columns", &self.columns)
            .finish()
    }
}

impl<M: GammaModule> GammaHom<M> {
    pub fn new(source: &SimplicialGroup, target: &M, columns: Vec<M::Elt>) -> Result<Self> {
        if !same_group(source.space().group(), target.group()) {
            return Err(Error::GroupMismatch);
        }
        if columns.len() != source.rank() {
            return Err(Error::ShapeMismatch(format!(
                "{} columns for a source of rank {}",
                columns.len(),
                source.rank()
            )));
        }
        if let Some(bad) = columns.iter().position(|c| !target.belongs(c)) {
            return Err(Error::ShapeMismatch(format!("column {bad} is not in the target")));
        }
        let group = source.space().group();
        for (i, column) in columns.iter().enumerate() {
            for &delta in source.space().subgroup().members() {
                if target.act(&GroupRingElt::element(group, delta), column) != *column {
                    return Err(Error::NotEquivariant(i));
                }
            }
        }
        Ok(GammaHom {
            source: source.clone(),
            target: target.clone(),
            columns,
        })
    }

    pub fn zero(source: &SimplicialGroup, target: &M) -> Result<Self> {
        Self::new(source, target, vec![target.zero(); source.rank()])
    }

    pub fn source(&self) -> &SimplicialGroup {
        &self.source
    }

    pub fn target(&self) -> &M {
        &self.target
    }

    pub fn columns(&self) -> &[M::Elt] {
        &self.columns
    }

    /// Every basis image lies in the target cone.
    pub fn is_positive(&self) -> bool {
        self.columns.iter().all(|c| self.target.in_cone(c))
    }

    /// `Σᵢ lift(vᵢ) · columnᵢ` with canonical lifts.
    pub fn apply(&self, v: &GammaVector) -> Result<M::Elt> {
        if v.group() != &self.source {
            return Err(Error::ShapeMismatch("vector is not in the source".into()));
        }
        Ok(self.target.combine(&v.lifts(), &self.columns))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GammaLinearMap) -> Result<GammaHom<M>> {
        if inner.target != self.source {
            return Err(Error::ShapeMismatch("maps do not compose".into()));
        }
        let columns = inner
            .columns
            .iter()
            .map(|c| self.apply(c))
            .collect::<Result<Vec<_>>>()?;
        GammaHom::new(&inner.source, &self.target, columns)
    }

    /// Integer matrix of the underlying `ℤ`-linear map; the column for basis `i` and
    /// coset `c` is the flattened image of `rep(c)·eᵢ`.
    pub fn flat_matrix(&self) -> Vec<IntVec> {
        let space = self.source.space();
        let group = space.group();
        let images: Vec<IntVec> = self
            .columns
            .iter()
            .flat_map(|col| {
                space.reps().iter().map(move |&rep| {
                    self.target.flatten(&self.target.act(&GroupRingElt::element(group, rep), col))
                })
            })
            .collect();
        (0..self.target.flat_dim())
            .map(|row| images.iter().map(|image| image[row].clone()).collect())
            .collect()
    }

    /// Hermite basis of the flattened kernel.
    pub fn kernel_lattice(&self) -> Vec<IntVec> {
        lattice::kernel_basis(&self.flat_matrix(), self.source.flat_dim())
    }

    /// A `ℤ`-basis of the kernel, hence a `ℤ[Γ]`-generating set.
    pub fn kernel(&self) -> Vec<GammaVector> {
        self.kernel_lattice().iter().map(|v| self.source.unflatten(v)).collect()
    }
}

impl GammaLinearMap {
    pub fn identity(group: &SimplicialGroup) -> Self {
        GammaHom {
            source: group.clone(),
            target: group.clone(),
            columns: group.basis_vectors(),
        }
    }

    /// Builds a map from columns given as group-ring coordinates; column `i` is `Σⱼ π(entries[i][j]) fⱼ`.
    pub fn from_ring_columns(
        source: &SimplicialGroup,
        target: &SimplicialGroup,
        entries: &[Vec<GroupRingElt>],
    ) -> Result<Self> {
        let columns = entries
            .iter()
            .map(|col| target.from_ring_coords(col))
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, columns)
    }
}

impl<M: GammaModule> fmt::Display for GammaHom<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, col) in self.columns.iter().enumerate() {
            writeln!(f, "e{} ↦ {:?}", i + 1, col)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_group::{CosetSpace, FiniteGroup, Subgroup};

    fn z2_space(whole: bool) -> std::sync::Arc<CosetSpace> {
        let g = FiniteGroup::cyclic(2);
        if whole {
            CosetSpace::new(&Subgroup::whole(&g))
        } else {
            CosetSpace::new(&Subgroup::trivial(&g))
        }
    }

    #[test]
    fn equivariance_check() {
        let d3 = FiniteGroup::dihedral(3);
        let source = SimplicialGroup::new(&CosetSpace::generated(&d3, &[3]).unwrap(), 1);
        let target = SimplicialGroup::new(&CosetSpace::new(&Subgroup::trivial(&d3)), 1);
        let mut indicator = vec![0; 6];
        indicator[0] = 1;
        let bad = target.vector(&[&indicator]).unwrap();
        assert_eq!(
            GammaLinearMap::new(&source, &target, vec![bad]).unwrap_err(),
            Error::NotEquivariant(0)
        );
        indicator[3] = 1;
        let good = target.vector(&[&indicator]).unwrap();
        let map = GammaLinearMap::new(&source, &target, vec![good]).unwrap();
        assert!(map.is_positive());
    }

    #[test]
    fn apply_examples() {
        let g = SimplicialGroup::new(&z2_space(false), 1);
        let map = GammaLinearMap::new(&g, &g, vec![g.vector(&[&[2, 1]]).unwrap()]).unwrap();
        assert_eq!(map.apply(&g.basis(0).unwrap()).unwrap(), g.vector(&[&[2, 1]]).unwrap());
        let v = g.vector(&[&[3, -4]]).unwrap();
        assert_eq!(GammaLinearMap::identity(&g).apply(&v).unwrap(), v);
        let times_one_plus_x =
            GammaLinearMap::new(&g, &g, vec![g.vector(&[&[1, 1]]).unwrap()]).unwrap();
        assert!(times_one_plus_x.apply(&g.vector(&[&[1, -1]]).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn kernel_examples() {
        let source = SimplicialGroup::new(&z2_space(false), 1);
        let target = SimplicialGroup::new(&z2_space(true), 1);
        let augmentation = GammaLinearMap::new(&source, &target, vec![target.basis(0).unwrap()]).unwrap();
        assert_eq!(augmentation.kernel(), vec![source.vector(&[&[1, -1]]).unwrap()]);
        assert!(GammaLinearMap::identity(&source).kernel().is_empty());
        let zero = GammaLinearMap::zero(&source, &source).unwrap();
        assert_eq!(zero.kernel().len(), 2);
        let rank_one = SimplicialGroup::new(&z2_space(true), 1);
        let zero = GammaLinearMap::zero(&rank_one, &rank_one).unwrap();
        assert_eq!(zero.kernel(), vec![rank_one.basis(0).unwrap()]);
    }

    #[test]
    fn composition_matches_sequential_application() {
        let g = SimplicialGroup::new(&z2_space(false), 2);
        let f = GammaLinearMap::new(
            &g,
            &g,
            vec![g.vector(&[&[1, 0], &[0, 2]]).unwrap(), g.vector(&[&[0, 1], &[1, 1]]).unwrap()],
        )
        .unwrap();
        let h = GammaLinearMap::new(
            &g,
            &g,
            vec![g.vector(&[&[3, 0], &[1, 0]]).unwrap(), g.vector(&[&[0, 0], &[0, 1]]).unwrap()],
        )
        .unwrap();
        let v = g.vector(&[&[2, -1], &[5, 3]]).unwrap();
        let composed = h.compose(&f).unwrap();
        assert_eq!(composed.apply(&v).unwrap(), h.apply(&f.apply(&v).unwrap()).unwrap());
    }
}
