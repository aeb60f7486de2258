//! Graded matricial rings `⊕ᵢ M_{p(i)}(F[Δ])(γᵢ₁,…,γᵢₚ₍ᵢ₎)` described symbolically.
//!
//! The field `F` is never touched: supports, dimensions, `K₀` data and the isomorphism
//! question depend only on `Δ` and the shifts.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::finite_group::CosetSpace;
use crate::group_ring::{same_space, CosetVector};
use crate::ordered_simplicial::{GammaVector, SimplicialGroup};

/// One shifted matrix ring `M_p(F[Δ])(γ₁,…,γ_p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixComponent {
    pub shifts: Vec<usize>,
}

impl MatrixComponent {
    pub fn size(&self) -> usize {
        self.shifts.len()
    }
}

#[derive(Clone)]
pub struct MatricialRingDesc {
    space: Arc<CosetSpace>,
    components: Vec<MatrixComponent>,
}

impl PartialEq for MatricialRingDesc {
    fn eq(&self, other: &Self) -> bool {
        self.components == other.components && same_space(&self.space, &other.space)
    }
}

/// `(K₀(R), [R])` with the basis `γᵢ₁[e^i₁₁R]`.
#[derive(Clone, Debug, PartialEq)]
pub struct K0Data {
    pub group: SimplicialGroup,
    pub unit_class: GammaVector,
    pub basis_classes: Vec<GammaVector>,
}

impl MatricialRingDesc {
    pub fn new(space: &Arc<CosetSpace>, components: Vec<Vec<usize>>) -> Result<Self> {
        let group = space.group();
        for (i, shifts) in components.iter().enumerate() {
            if shifts.is_empty() {
                return Err(Error::ShapeMismatch(format!("component {i} has size 0")));
            }
            for &g in shifts {
                group.check_element(g)?;
            }
        }
        Ok(MatricialRingDesc {
            space: Arc::clone(space),
            components: components.into_iter().map(|shifts| MatrixComponent { shifts }).collect(),
        })
    }

    pub fn space(&self) -> &Arc<CosetSpace> {
        &self.space
    }

    pub fn components(&self) -> &[MatrixComponent] {
        &self.components
    }

    /// `Σ p(i)²`, the dimension over `F[Δ]`.
    pub fn matrix_entries(&self) -> usize {
        self.components.iter().map(|c| c.size() * c.size()).sum()
    }

    /// `dim_F R_δ`: entry `(k,l)` of component `i` meets degree `δ` exactly when
    /// `γᵢₖ δ γᵢₗ⁻¹ ∈ Δ`, and then in a one-dimensional piece.
    pub fn homog_dim(&self, delta: usize) -> Result<usize> {
        let group = self.space.group();
        group.check_element(delta)?;
        let sub = self.space.subgroup();
        Ok(self
            .components
            .iter()
            .map(|c| {
                c.shifts
                    .iter()
                    .flat_map(|&gk| c.shifts.iter().map(move |&gl| (gk, gl)))
                    .filter(|&(gk, gl)| sub.contains(group.mul(group.mul(gk, delta), group.inv(gl))))
                    .count()
            })
            .sum())
    }

    /// Class of `e^i_kk R`, namely `γᵢₖ⁻¹Δ` in coordinate `i`.
    pub fn diagonal_class(&self, component: usize, slot: usize) -> Result<GammaVector> {
        let shift = *self
            .components
            .get(component)
            .and_then(|c| c.shifts.get(slot))
            .ok_or(Error::IndexOutOfRange(component))?;
        let k0 = self.k0_group();
        let mut coords: Vec<CosetVector> = (0..k0.rank()).map(|_| CosetVector::zero(&self.space)).collect();
        coords[component] = CosetVector::coset(&self.space, self.space.right_coset_of(shift));
        GammaVector::new(&k0, coords)
    }

    pub fn k0_group(&self) -> SimplicialGroup {
        SimplicialGroup::new(&self.space, self.components.len())
    }

    /// Class of the projective `⊕ e^i_kk R` over the selected diagonal slots.
    pub fn projective_class(&self, selection: &[Vec<usize>]) -> Result<GammaVector> {
        self.check_selection(selection)?;
        let mut class = self.k0_group().zero_vector();
        for (i, slots) in selection.iter().enumerate() {
            for &k in slots {
                class = class.add(&self.diagonal_class(i, k)?)?;
            }
        }
        Ok(class)
    }

    /// The corner ring `eRe` for the idempotent `e = Σ e^i_kk` over the selected slots.
    pub fn corner(&self, selection: &[Vec<usize>]) -> Result<MatricialRingDesc> {
        self.check_selection(selection)?;
        let components = self
            .components
            .iter()
            .zip(selection)
            .filter(|(_, slots)| !slots.is_empty())
            .map(|(c, slots)| slots.iter().map(|&k| c.shifts[k]).collect())
            .collect();
        MatricialRingDesc::new(&self.space, components)
    }

    fn check_selection(&self, selection: &[Vec<usize>]) -> Result<()> {
        if selection.len() != self.components.len() {
            return Err(Error::ShapeMismatch("one slot list per component".into()));
        }
        for (c, slots) in self.components.iter().zip(selection) {
            if let Some(&bad) = slots.iter().find(|&&k| k >= c.size()) {
                return Err(Error::IndexOutOfRange(bad));
            }
        }
        Ok(())
    }

    pub fn k0(&self) -> K0Data {
        let group = self.k0_group();
        let coords = self
            .components
            .iter()
            .map(|c| {
                c.shifts.iter().fold(CosetVector::zero(&self.space), |acc, &g| {
                    &acc + &CosetVector::coset(&self.space, self.space.right_coset_of(g))
                })
            })
            .collect();
        let unit_class = GammaVector::new(&group, coords).expect("one coordinate per component");
        K0Data {
            basis_classes: group.basis_vectors(),
            group,
            unit_class,
        }
    }

    /// Size together with the sorted right cosets `Δγ` of the shifts.
    fn signature(&self, component: &MatrixComponent) -> Vec<usize> {
        let mut cosets: Vec<usize> =
            component.shifts.iter().map(|&g| self.space.right_coset_of(g)).collect();
        cosets.sort_unstable();
        cosets
    }

    /// Whether some bijection of components matches sizes and right-coset multisets.
    pub fn graded_iso(&self, other: &MatricialRingDesc) -> Result<bool> {
        if !same_space(&self.space, &other.space) {
            return Err(Error::DeltaMismatch);
        }
        let sorted = |ring: &MatricialRingDesc| {
            let mut sigs: Vec<Vec<usize>> =
                ring.components.iter().map(|c| ring.signature(c)).collect();
            sigs.sort();
            sigs
        };
        Ok(sorted(self) == sorted(other))
    }
}

impl fmt::Debug for MatricialRingDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MatricialRingDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let group = self.space.group();
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| {
                let shifts: Vec<String> = c.shifts.iter().map(|&g| group.name(g)).collect();
                format!("M{}(F[Δ])({})", c.size(), shifts.join(", "))
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_group::{FiniteGroup, Subgroup};

    fn z2_trivial() -> Arc<CosetSpace> {
        CosetSpace::new(&Subgroup::trivial(&FiniteGroup::cyclic(2)))
    }

    #[test]
    fn homogeneous_dimensions() {
        let r = MatricialRingDesc::new(&z2_trivial(), vec![vec![0, 0, 1]]).unwrap();
        assert_eq!(r.homog_dim(0).unwrap(), 5);
        assert_eq!(r.homog_dim(1).unwrap(), 4);
        let whole = CosetSpace::new(&Subgroup::whole(&FiniteGroup::cyclic(2)));
        let r = MatricialRingDesc::new(&whole, vec![vec![0, 1], vec![1]]).unwrap();
        assert_eq!(r.homog_dim(0).unwrap(), 5);
        assert_eq!(r.homog_dim(1).unwrap(), 5);
    }

    #[test]
    fn k0_examples() {
        let space = z2_trivial();
        let single = MatricialRingDesc::new(&space, vec![vec![0]]).unwrap().k0();
        assert_eq!(single.unit_class, single.group.basis(0).unwrap());
        let m3 = MatricialRingDesc::new(&space, vec![vec![0, 0, 1]]).unwrap().k0();
        assert_eq!(m3.unit_class, m3.group.vector(&[&[2, 1]]).unwrap());
        let two = MatricialRingDesc::new(&space, vec![vec![0, 0, 1], vec![1]]).unwrap().k0();
        assert_eq!(two.unit_class, two.group.vector(&[&[2, 1], &[0, 1]]).unwrap());
    }

    #[test]
    fn isomorphism_examples() {
        let space = z2_trivial();
        let r = MatricialRingDesc::new(&space, vec![vec![0, 1]]).unwrap();
        let s = MatricialRingDesc::new(&space, vec![vec![1, 0]]).unwrap();
        assert!(r.graded_iso(&s).unwrap());
        assert!(r.graded_iso(&r).unwrap());

        let d3 = FiniteGroup::dihedral(3);
        let space = CosetSpace::generated(&d3, &[3]).unwrap();
        let a = MatricialRingDesc::new(&space, vec![vec![1]]).unwrap();
        let a2 = MatricialRingDesc::new(&space, vec![vec![2]]).unwrap();
        assert!(!a.graded_iso(&a2).unwrap());
        let other = MatricialRingDesc::new(&z2_trivial(), vec![vec![0]]).unwrap();
        assert_eq!(a.graded_iso(&other).unwrap_err(), Error::DeltaMismatch);
    }

    #[test]
    fn corners_and_classes() {
        let r = MatricialRingDesc::new(&z2_trivial(), vec![vec![0, 0, 1]]).unwrap();
        let p = r.projective_class(&[vec![0]]).unwrap();
        let q = r.projective_class(&[vec![1]]).unwrap();
        assert_eq!(p, q);
        assert!(r.corner(&[vec![0]]).unwrap().graded_iso(&r.corner(&[vec![1]]).unwrap()).unwrap());
        let x = r.projective_class(&[vec![2]]).unwrap();
        assert_ne!(p, x);
        assert_eq!(r.projective_class(&[vec![0, 1, 2]]).unwrap(), r.k0().unit_class);
    }
}
