//! JSON problem files and certificates.
//!
//! Group elements are indices into the multiplication table. A `ℤ[Γ]` element is a dense list
//! of `|Γ|` integers, a `ℤ[Γ/Δ]` element a dense list over the cosets in canonical order
//! (coset `0` is `Δ`, the rest ordered by smallest member), and a simplicial vector a list of
//! those. Integers are JSON numbers, or strings when they do not fit in 64 bits.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::extension::{ExtElt, ExtendedGroup};
use crate::finite_group::{CosetSpace, FiniteGroup};
use crate::gamma_maps::GammaLinearMap;
use crate::graded_matricial::MatricialRingDesc;
use crate::group_ring::{CosetVector, GroupRingElt};
use crate::hom_realization::{HomSpec, SlotAssignment};
use crate::limits::{ColimitElt, Tower, TowerUnits, UnitMode};
use crate::ordered_simplicial::{GammaVector, SimplicialGroup};

/// An arbitrary-precision integer in JSON.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(k) => s.serialize_i64(k),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct IntVisitor;
        impl Visitor<'_> for IntVisitor {
            type Value = Int;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Int, E> {
                Ok(Int(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Int, E> {
                Ok(Int(v.into()))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Int, E> {
                v.trim().parse().map(Int).map_err(|_| E::custom(format!("not an integer: {v:?}")))
            }
        }
        d.deserialize_any(IntVisitor)
    }
}

pub type CosetDto = Vec<Int>;
pub type VectorDto = Vec<CosetDto>;
pub type RingEltDto = Vec<Int>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupDto {
    Builtin {
        builtin: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
    },
    Table {
        order: usize,
        mul: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
}

/// `Γ` and generators of `Δ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpaceDto {
    pub group: GroupDto,
    #[serde(default)]
    pub delta_gens: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentDto {
    pub size: usize,
    pub shifts: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairDto {
    pub x: VectorDto,
    pub t: CosetDto,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LevelEltDto {
    pub level: usize,
    pub value: VectorDto,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QueryDto {
    pub p: LevelEltDto,
    pub q: LevelEltDto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeDto {
    Unit,
    Interval,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupFile {
    #[serde(flatten)]
    pub space: SpaceDto,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimplicialFile {
    #[serde(flatten)]
    pub space: SpaceDto,
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<VectorDto>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<VectorDto>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationFile {
    #[serde(flatten)]
    pub space: SpaceDto,
    pub rank: usize,
    pub a: Vec<RingEltDto>,
    pub x: Vec<VectorDto>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TowerFile {
    #[serde(flatten)]
    pub space: SpaceDto,
    pub ranks: Vec<usize>,
    /// Columns of each connecting map.
    pub maps: Vec<Vec<VectorDto>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub units: Option<Vec<VectorDto>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<ModeDto>,
    #[serde(default)]
    pub repeat: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub queries: Vec<QueryDto>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RingFile {
    #[serde(flatten)]
    pub space: SpaceDto,
    pub components: Vec<ComponentDto>,
}

/// A positive Γ-map between simplicial groups, given by the images of the basis.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HomFile {
    #[serde(flatten)]
    pub space: SpaceDto,
    pub source_rank: usize,
    pub target_rank: usize,
    pub columns: Vec<VectorDto>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationOverPairs {
    pub a: Vec<RingEltDto>,
    pub x: Vec<PairDto>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtensionFile {
    #[serde(flatten)]
    pub space: SpaceDto,
    pub rank: usize,
    pub unit: VectorDto,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub probes: Vec<PairDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation: Option<RelationOverPairs>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ProblemFile {
    Group(GroupFile),
    Simplicial(SimplicialFile),
    Relation(RelationFile),
    Tower(TowerFile),
    Ring(RingFile),
    Hom(HomFile),
    Extension(ExtensionFile),
}

impl ProblemFile {
    pub fn kind(&self) -> &'static str {
        match self {
            ProblemFile::Group(_) => "group",
            ProblemFile::Simplicial(_) => "simplicial",
            ProblemFile::Relation(_) => "relation",
            ProblemFile::Tower(_) => "tower",
            ProblemFile::Ring(_) => "ring",
            ProblemFile::Hom(_) => "hom",
            ProblemFile::Extension(_) => "extension",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AssignmentDto {
    pub source_component: usize,
    pub source_slot: usize,
    pub target_component: usize,
    pub coset: usize,
    pub copy: usize,
    pub target_position: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpecDto {
    pub matrix: Vec<VectorDto>,
    pub unital: bool,
    pub assignments: Vec<AssignmentDto>,
}

/// Everything needed to re-check an emitted result without rerunning the construction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    SdpCertificate {
        #[serde(flatten)]
        space: SpaceDto,
        rank: usize,
        a: Vec<RingEltDto>,
        x: Vec<VectorDto>,
        b: Vec<Vec<RingEltDto>>,
        y: Vec<VectorDto>,
    },
    ExtSdpCertificate {
        #[serde(flatten)]
        space: SpaceDto,
        rank: usize,
        unit: VectorDto,
        a: Vec<RingEltDto>,
        x: Vec<PairDto>,
        b: Vec<Vec<RingEltDto>>,
        y: Vec<PairDto>,
    },
    UnperfCertificate {
        #[serde(flatten)]
        space: SpaceDto,
        rank: usize,
        a: RingEltDto,
        x: VectorDto,
        b: Vec<RingEltDto>,
        y: Vec<VectorDto>,
    },
    ShenCertificate {
        #[serde(flatten)]
        space: SpaceDto,
        source_rank: usize,
        target_rank: usize,
        columns: Vec<VectorDto>,
        middle_rank: usize,
        into_middle: Vec<VectorDto>,
        out_of_middle: Vec<VectorDto>,
    },
    RealizationCertificate {
        #[serde(flatten)]
        space: SpaceDto,
        rank: usize,
        unit: VectorDto,
        components: Vec<ComponentDto>,
    },
    RingTowerCertificate {
        #[serde(flatten)]
        space: SpaceDto,
        rings: Vec<Vec<ComponentDto>>,
        specs: Vec<SpecDto>,
    },
}

impl Certificate {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
    }
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

fn big(v: &[Int]) -> Vec<BigInt> {
    v.iter().map(|k| k.0.clone()).collect()
}

fn small(v: &[BigInt]) -> Vec<Int> {
    v.iter().cloned().map(Int).collect()
}

pub fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&k| Int(k.into())).collect()
}

impl GroupDto {
    pub fn build(&self) -> Result<Arc<FiniteGroup>> {
        match self {
            GroupDto::Builtin { builtin, n } => {
                let need = || n.filter(|&k| k >= 1).ok_or_else(|| schema(format!("builtin {builtin} needs n ≥ 1")));
                match builtin.as_str() {
                    "cyclic" => Ok(FiniteGroup::cyclic(need()?)),
                    "dihedral" => Ok(FiniteGroup::dihedral(need()?)),
                    "quaternion" => Ok(FiniteGroup::quaternion()),
                    "klein" => {
                        let z2 = FiniteGroup::cyclic(2);
                        Ok(FiniteGroup::product(&z2, &z2))
                    }
                    other => Err(schema(format!("unknown builtin group {other:?}"))),
                }
            }
            GroupDto::Table { order, mul, names } => {
                if mul.len() != *order {
                    return Err(schema(format!("table has {} rows for order {order}", mul.len())));
                }
                let g = FiniteGroup::from_table(mul.clone())?;
                match names {
                    Some(names) => FiniteGroup::with_names(&g, names.clone()),
                    None => Ok(g),
                }
            }
        }
    }

    pub fn describe(group: &FiniteGroup) -> Self {
        GroupDto::Table {
            order: group.order(),
            mul: group.table().to_vec(),
            names: group.names().map(<[String]>::to_vec),
        }
    }
}

impl SpaceDto {
    pub fn build(&self) -> Result<Arc<CosetSpace>> {
        let group = self.group.build()?;
        CosetSpace::generated(&group, &self.delta_gens)
    }

    pub fn describe(space: &CosetSpace) -> Self {
        SpaceDto {
            group: GroupDto::describe(space.group()),
            delta_gens: space.subgroup().members().to_vec(),
        }
    }
}

pub fn decode_coset(space: &Arc<CosetSpace>, v: &[Int]) -> Result<CosetVector> {
    CosetVector::new(space, big(v)).map_err(|_| schema(format!("a ℤ[Γ/Δ] entry needs {} coefficients", space.len())))
}

pub fn encode_coset(v: &CosetVector) -> CosetDto {
    small(v.coeffs())
}

pub fn decode_vector(group: &SimplicialGroup, v: &[CosetDto]) -> Result<GammaVector> {
    if v.len() != group.rank() {
        return Err(schema(format!("{} coordinates for rank {}", v.len(), group.rank())));
    }
    let coords = v.iter().map(|c| decode_coset(group.space(), c)).collect::<Result<Vec<_>>>()?;
    GammaVector::new(group, coords)
}

pub fn encode_vector(v: &GammaVector) -> VectorDto {
    v.coords().iter().map(encode_coset).collect()
}

pub fn decode_ring(group: &Arc<FiniteGroup>, v: &[Int]) -> Result<GroupRingElt> {
    if v.len() != group.order() {
        return Err(schema(format!("a ℤ[Γ] entry needs {} coefficients", group.order())));
    }
    GroupRingElt::from_terms(group, v.iter().enumerate().map(|(g, k)| (g, k.0.clone())))
}

pub fn encode_ring(a: &GroupRingElt) -> RingEltDto {
    (0..a.group().order()).map(|g| Int(a.coeff(g))).collect()
}

pub fn decode_pair(h: &ExtendedGroup, p: &PairDto) -> Result<ExtElt> {
    h.element(decode_vector(h.base(), &p.x)?, decode_coset(h.base().space(), &p.t)?)
}

pub fn encode_pair(e: &ExtElt) -> PairDto {
    PairDto {
        x: encode_vector(&e.x),
        t: encode_coset(&e.t),
    }
}

pub fn decode_map(source: &SimplicialGroup, target: &SimplicialGroup, columns: &[VectorDto]) -> Result<GammaLinearMap> {
    let columns = columns.iter().map(|c| decode_vector(target, c)).collect::<Result<Vec<_>>>()?;
    GammaLinearMap::new(source, target, columns)
}

pub fn encode_map(map: &GammaLinearMap) -> Vec<VectorDto> {
    map.columns().iter().map(encode_vector).collect()
}

pub fn decode_ring_desc(space: &Arc<CosetSpace>, components: &[ComponentDto]) -> Result<MatricialRingDesc> {
    for (i, c) in components.iter().enumerate() {
        if c.size != c.shifts.len() {
            return Err(schema(format!("component {i} declares size {} with {} shifts", c.size, c.shifts.len())));
        }
    }
    MatricialRingDesc::new(space, components.iter().map(|c| c.shifts.clone()).collect())
}

pub fn encode_ring_desc(ring: &MatricialRingDesc) -> Vec<ComponentDto> {
    ring.components()
        .iter()
        .map(|c| ComponentDto {
            size: c.size(),
            shifts: c.shifts.clone(),
        })
        .collect()
}

pub fn encode_spec(spec: &HomSpec) -> SpecDto {
    SpecDto {
        matrix: encode_map(&spec.matrix),
        unital: spec.unital,
        assignments: spec
            .certificate
            .iter()
            .map(|s| AssignmentDto {
                source_component: s.source_component,
                source_slot: s.source_slot,
                target_component: s.target_component,
                coset: s.coset,
                copy: s.copy,
                target_position: s.target_position,
            })
            .collect(),
    }
}

pub fn decode_spec(source: &MatricialRingDesc, target: &MatricialRingDesc, dto: &SpecDto) -> Result<HomSpec> {
    let matrix = decode_map(&source.k0_group(), &target.k0_group(), &dto.matrix)?;
    let certificate = dto
        .assignments
        .iter()
        .map(|s| SlotAssignment {
            source_component: s.source_component,
            source_slot: s.source_slot,
            target_component: s.target_component,
            coset: s.coset,
            copy: s.copy,
            target_position: s.target_position,
        })
        .collect();
    Ok(HomSpec {
        source: source.clone(),
        target: target.clone(),
        matrix,
        unital: dto.unital,
        certificate,
    })
}

impl TowerFile {
    pub fn build(&self) -> Result<Tower> {
        let space = self.space.build()?;
        let groups: Vec<SimplicialGroup> = self.ranks.iter().map(|&r| SimplicialGroup::new(&space, r)).collect();
        if self.maps.len() + 1 != groups.len() {
            return Err(schema(format!("{} maps for {} levels", self.maps.len(), groups.len())));
        }
        let maps = self
            .maps
            .iter()
            .enumerate()
            .map(|(k, cols)| decode_map(&groups[k], &groups[k + 1], cols))
            .collect::<Result<Vec<_>>>()?;
        let units = match &self.units {
            None => None,
            Some(units) => {
                if units.len() != groups.len() {
                    return Err(schema("one unit per level is required"));
                }
                let units = units
                    .iter()
                    .zip(&groups)
                    .map(|(u, g)| decode_vector(g, u))
                    .collect::<Result<Vec<_>>>()?;
                let mode = match self.mode.unwrap_or(ModeDto::Unit) {
                    ModeDto::Unit => UnitMode::Unit,
                    ModeDto::Interval => UnitMode::Interval,
                };
                Some(TowerUnits { mode, units })
            }
        };
        Tower::new(groups, maps, units, self.repeat)
    }

    pub fn describe(tower: &Tower) -> Self {
        let space = tower.groups()[0].space();
        TowerFile {
            space: SpaceDto::describe(space),
            ranks: tower.groups().iter().map(SimplicialGroup::rank).collect(),
            maps: tower.maps().iter().map(encode_map).collect(),
            units: tower.units().map(|u| u.units.iter().map(encode_vector).collect()),
            mode: tower.units().map(|u| match u.mode {
                UnitMode::Unit => ModeDto::Unit,
                UnitMode::Interval => ModeDto::Interval,
            }),
            repeat: tower.repeats(),
            queries: Vec::new(),
        }
    }
}

pub fn decode_level_elt(tower: &Tower, e: &LevelEltDto) -> Result<ColimitElt> {
    let group = tower.group_at(e.level).ok_or(Error::IndexOutOfRange(e.level))?;
    tower.element(e.level, decode_vector(group, &e.value)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers_round_trip() {
        let huge = Int("123456789012345678901234567890".parse().unwrap());
        let text = serde_json::to_string(&vec![Int(BigInt::from(-3)), huge.clone()]).unwrap();
        assert_eq!(text, r#"[-3,"123456789012345678901234567890"]"#);
        let back: Vec<Int> = serde_json::from_str(&text).unwrap();
        assert_eq!(back[1], huge);
    }

    #[test]
    fn problem_files_parse() {
        let text = r#"{"kind":"simplicial","group":{"builtin":"cyclic","n":2},"delta_gens":[],"rank":1,"unit":[[2,1]]}"#;
        let ProblemFile::Simplicial(file) = ProblemFile::parse(text).unwrap() else { panic!() };
        let space = file.space.build().unwrap();
        let g = SimplicialGroup::new(&space, file.rank);
        let u = decode_vector(&g, file.unit.as_ref().unwrap()).unwrap();
        assert_eq!(u, g.vector(&[&[2, 1]]).unwrap());
        assert_eq!(encode_vector(&u), vec![ints(&[2, 1])]);

        let table = r#"{"kind":"group","group":{"order":2,"mul":[[0,1],[1,0]],"names":["e","s"]}}"#;
        let ProblemFile::Group(file) = ProblemFile::parse(table).unwrap() else { panic!() };
        assert_eq!(file.space.build().unwrap().group().name(1), "s");
        assert!(matches!(ProblemFile::parse(r#"{"kind":"nope"}"#), Err(Error::Schema(_))));
    }

    #[test]
    fn towers_round_trip() {
        let text = r#"{"kind":"tower","group":{"builtin":"cyclic","n":2},"ranks":[1,1],
            "maps":[[[[1,1]]]],"units":[[[1,0]],[[1,1]]],"mode":"unit"}"#;
        let ProblemFile::Tower(file) = ProblemFile::parse(text).unwrap() else { panic!() };
        let tower = file.build().unwrap();
        let again = TowerFile::describe(&tower).build().unwrap();
        assert_eq!(again.maps(), tower.maps());
        assert_eq!(again.units(), tower.units());
    }
}
