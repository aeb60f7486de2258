//! Finite groups given by multiplication tables, their subgroups and left coset spaces.
//!
//! Elements are plain indices `0..order`. Everything here is exhaustive, which is
//! fine for the small groups this crate targets.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A finite group stored extensionally.
#[derive(Clone)]
pub struct FiniteGroup {
    mul: Vec<Vec<usize>>,
    identity: usize,
    inv: Vec<usize>,
    names: Option<Vec<String>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.mul == other.mul
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {})", self.order())
    }
}

impl FiniteGroup {
    /// Validates a square multiplication table.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Arc<Self>> {
        let order = table.len();
        if order == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        for (row_idx, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::MalformedTable(format!(
                    "row {row_idx} has length {} instead of {order}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= order) {
                return Err(Error::ElementOutOfRange(bad));
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or(Error::NoIdentity)?;
        let mut inv = Vec::with_capacity(order);
        for g in 0..order {
            let h = (0..order)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or(Error::NoInverse(g))?;
            inv.push(h);
        }
        for a in 0..order {
            for b in 0..order {
                let ab = table[a][b];
                for c in 0..order {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(Arc::new(FiniteGroup {
            mul: table,
            identity,
            inv,
            names: None,
        }))
    }

    /// Same group with display names attached.
    pub fn with_names(group: &Arc<Self>, names: Vec<String>) -> Result<Arc<Self>> {
        if names.len() != group.order() {
            return Err(Error::MalformedTable(format!(
                "{} names for a group of order {}",
                names.len(),
                group.order()
            )));
        }
        let mut named = (**group).clone();
        named.names = Some(names);
        Ok(Arc::new(named))
    }

    /// Cyclic group with generator `x`; element `k` is `x^k`.
    pub fn cyclic(n: usize) -> Arc<Self> {
        assert!(n > 0, "cyclic group needs positive order");
        let table = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        let group = Self::from_table(table).expect("cyclic table is a group");
        let names = (0..n).map(|k| power_name("x", k)).collect();
        Self::with_names(&group, names).expect("name count matches")
    }

    /// Dihedral group `<a, b | a^n = b^2 = 1, ba = a^{-1}b>`; element `i + n*j` is `a^i b^j`.
    pub fn dihedral(n: usize) -> Arc<Self> {
        assert!(n > 0, "dihedral group needs positive n");
        let order = 2 * n;
        let decode = |g: usize| (g % n, g / n);
        let mut table = vec![vec![0; order]; order];
        for (g, row) in table.iter_mut().enumerate() {
            let (i, j) = decode(g);
            for (h, slot) in row.iter_mut().enumerate() {
                let (k, l) = decode(h);
                let rotated = if j == 0 { k } else { (n - k) % n };
                *slot = (i + rotated) % n + n * ((j + l) % 2);
            }
        }
        let group = Self::from_table(table).expect("dihedral table is a group");
        let names = (0..order)
            .map(|g| {
                let (i, j) = decode(g);
                match (i, j) {
                    (0, 0) => "1".to_string(),
                    (_, 0) => power_name("a", i),
                    (0, _) => "b".to_string(),
                    _ => format!("{}b", power_name("a", i)),
                }
            })
            .collect();
        Self::with_names(&group, names).expect("name count matches")
    }

    /// Quaternion group of order 8: elements `±1, ±i, ±j, ±k`.
    pub fn quaternion() -> Arc<Self> {
        // index = 2 * unit + sign, unit in {1, i, j, k}
        let unit_mul = |p: usize, q: usize| -> (usize, bool) {
            match (p, q) {
                (0, q) => (q, false),
                (p, 0) => (p, false),
                (p, q) if p == q => (0, true),
                (1, 2) => (3, false),
                (2, 3) => (1, false),
                (3, 1) => (2, false),
                (2, 1) => (3, true),
                (3, 2) => (1, true),
                (1, 3) => (2, true),
                _ => unreachable!(),
            }
        };
        let table = (0..8)
            .map(|g| {
                (0..8)
                    .map(|h| {
                        let (unit, flip) = unit_mul(g / 2, h / 2);
                        let sign = (g % 2) ^ (h % 2) ^ usize::from(flip);
                        2 * unit + sign
                    })
                    .collect()
            })
            .collect();
        let group = Self::from_table(table).expect("quaternion table is a group");
        let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        Self::with_names(&group, names).expect("name count matches")
    }

    /// Direct product; element `(g, h)` has index `g * |right| + h`.
    pub fn product(left: &Self, right: &Self) -> Arc<Self> {
        let (m, n) = (left.order(), right.order());
        let table = (0..m * n)
            .map(|x| {
                (0..m * n)
                    .map(|y| left.mul(x / n, y / n) * n + right.mul(x % n, y % n))
                    .collect()
            })
            .collect();
        let group = Self::from_table(table).expect("product of groups is a group");
        let names = (0..m * n)
            .map(|x| format!("({},{})", left.name(x / n), right.name(x % n)))
            .collect();
        Self::with_names(&group, names).expect("name count matches")
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `g h g^{-1}`
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, g: usize) -> String {
        match &self.names {
            Some(names) => names[g].clone(),
            None => format!("g{g}"),
        }
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn check_element(&self, g: usize) -> Result<()> {
        if g < self.order() {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange(g))
        }
    }
}

fn power_name(base: &str, k: usize) -> String {
    match k {
        0 => "1".to_string(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

/// A subgroup, kept as a sorted member list plus a membership mask.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.parent, &other.parent) || self.parent == other.parent)
            && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.members.iter().map(|&g| self.parent.name(g)).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

impl Subgroup {
    /// Smallest subgroup containing `gens`.
    pub fn closure(parent: &Arc<FiniteGroup>, gens: &[usize]) -> Result<Self> {
        for &g in gens {
            parent.check_element(g)?;
        }
        let mut mask = vec![false; parent.order()];
        mask[parent.identity()] = true;
        let mut frontier = vec![parent.identity()];
        while let Some(h) = frontier.pop() {
            for &g in gens {
                let next = parent.mul(h, g);
                if !mask[next] {
                    mask[next] = true;
                    frontier.push(next);
                }
            }
        }
        Ok(Self::from_mask(parent, mask))
    }

    pub fn trivial(parent: &Arc<FiniteGroup>) -> Self {
        Self::closure(parent, &[]).expect("no generators to check")
    }

    pub fn whole(parent: &Arc<FiniteGroup>) -> Self {
        Self::from_mask(parent, vec![true; parent.order()])
    }

    /// Caller guarantees the mask describes a subgroup.
    pub(crate) fn from_mask(parent: &Arc<FiniteGroup>, mask: Vec<bool>) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(g, &inside)| inside.then_some(g))
            .collect();
        Subgroup {
            parent: Arc::clone(parent),
            members,
            mask,
        }
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.mask.get(g).copied().unwrap_or(false)
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&g| other.contains(g))
    }

    pub fn is_normal(&self) -> bool {
        let group = &self.parent;
        group
            .elements()
            .all(|g| self.members.iter().all(|&d| self.contains(group.conjugate(g, d))))
    }

    /// Smallest normal subgroup containing this one.
    pub fn normal_closure(&self) -> Subgroup {
        let group = &self.parent;
        let conjugates: Vec<usize> = group
            .elements()
            .flat_map(|g| self.members.iter().map(move |&d| group.conjugate(g, d)))
            .collect();
        Subgroup::closure(group, &conjugates).expect("conjugates are in range")
    }
}

/// Left cosets `gΔ`. Coset 0 is `Δ` itself with representative the identity; the
/// others are ordered by, and represented by, their smallest element index.
#[derive(Clone)]
pub struct CosetSpace {
    sub: Subgroup,
    reps: Vec<usize>,
    elt_to_coset: Vec<usize>,
    action: Vec<Vec<usize>>,
    is_normal: bool,
}

impl PartialEq for CosetSpace {
    fn eq(&self, other: &Self) -> bool {
        self.sub == other.sub
    }
}

impl Eq for CosetSpace {}

impl fmt::Debug for CosetSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CosetSpace(Δ = {:?}, {} cosets)", self.sub, self.len())
    }
}

impl CosetSpace {
    pub fn new(sub: &Subgroup) -> Arc<Self> {
        let group = sub.parent();
        let mut elt_to_coset = vec![usize::MAX; group.order()];
        let mut reps = Vec::new();
        let mut open_coset = |rep: usize, elt_to_coset: &mut Vec<usize>| {
            let index = reps.len();
            reps.push(rep);
            for &d in sub.members() {
                elt_to_coset[group.mul(rep, d)] = index;
            }
        };
        open_coset(group.identity(), &mut elt_to_coset);
        for g in group.elements() {
            if elt_to_coset[g] == usize::MAX {
                open_coset(g, &mut elt_to_coset);
            }
        }
        let action = group
            .elements()
            .map(|g| reps.iter().map(|&r| elt_to_coset[group.mul(g, r)]).collect())
            .collect();
        Arc::new(CosetSpace {
            sub: sub.clone(),
            reps,
            elt_to_coset,
            action,
            is_normal: sub.is_normal(),
        })
    }

    /// Coset space of the subgroup generated by `gens`.
    pub fn generated(group: &Arc<FiniteGroup>, gens: &[usize]) -> Result<Arc<Self>> {
        Ok(Self::new(&Subgroup::closure(group, gens)?))
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.sub.parent()
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.sub
    }

    pub fn is_normal(&self) -> bool {
        self.is_normal
    }

    /// Number of cosets, the index `[Γ:Δ]`.
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn rep(&self, coset: usize) -> usize {
        self.reps[coset]
    }

    pub fn coset_of(&self, g: usize) -> usize {
        self.elt_to_coset[g]
    }

    /// Left translate: `g · (cΔ) = (g c)Δ`.
    pub fn act(&self, g: usize, coset: usize) -> usize {
        self.action[g][coset]
    }

    /// Index of the right coset `Δg`, identified with the left coset `g^{-1}Δ`.
    pub fn right_coset_of(&self, g: usize) -> usize {
        self.coset_of(self.group().inv(g))
    }

    pub fn coset_members(&self, coset: usize) -> Vec<usize> {
        let rep = self.reps[coset];
        let mut members: Vec<usize> = self
            .sub
            .members()
            .iter()
            .map(|&d| self.group().mul(rep, d))
            .collect();
        members.sort_unstable();
        members
    }

    /// Elements fixing every coset: the kernel of the action on `Γ/Δ`.
    pub fn action_kernel(&self) -> Subgroup {
        let mask = self
            .group()
            .elements()
            .map(|g| (0..self.len()).all(|c| self.act(g, c) == c))
            .collect();
        Subgroup::from_mask(self.group(), mask)
    }

    pub fn same_as(&self, other: &CosetSpace) -> bool {
        std::ptr::eq(self, other) || self == other
    }

    pub fn coset_name(&self, coset: usize) -> String {
        let rep = self.reps[coset];
        if rep == self.group().identity() {
            "Δ".to_string()
        } else {
            format!("{}Δ", self.group().name(rep))
        }
    }
}
