//! JSON encodings survive a round trip through text.

mod common;

use gamma_core::graded_matricial::MatricialRingDesc;
use gamma_core::hom_realization::{hom_realizable, realize_unit};
use gamma_core::limits::{Tower, TowerUnits, UnitMode};
use gamma_core::ordered_simplicial::SimplicialGroup;
use gamma_core::schema::{
    decode_map, decode_ring, decode_ring_desc, decode_spec, decode_vector, encode_map, encode_ring, encode_ring_desc,
    encode_spec, encode_vector, ComponentDto, GroupDto, ProblemFile, SpaceDto, SpecDto, TowerFile, VectorDto,
};
use rand::Rng;
use serde::de::DeserializeOwned;
use serde::Serialize;

use common::*;

fn through_text<T: Serialize + DeserializeOwned>(value: &T) -> T {
    serde_json::from_str(&serde_json::to_string(value).unwrap()).unwrap()
}

#[test]
fn groups_and_spaces_round_trip() {
    let mut r = rng(3);
    for group in small_groups() {
        let dto = through_text(&GroupDto::describe(&group));
        assert_eq!(dto.build().unwrap().table(), group.table());
        let space = random_space(&mut r, &group);
        let back = through_text(&SpaceDto::describe(&space)).build().unwrap();
        assert!(back.same_as(&space));
    }
}

#[test]
fn elements_and_maps_round_trip() {
    let mut r = rng(4);
    for _ in 0..100 {
        let space = any_space(&mut r);
        let s = SimplicialGroup::new(&space, r.gen_range(1..=3));
        let t = SimplicialGroup::new(&space, r.gen_range(1..=3));
        let v = vector(&mut r, &s, -1000, 1000);
        let text: VectorDto = through_text(&encode_vector(&v));
        assert_eq!(decode_vector(&s, &text).unwrap(), v);
        let a = ring_elt(&mut r, space.group(), -5, 5, 4);
        assert_eq!(decode_ring(space.group(), &through_text(&encode_ring(&a))).unwrap(), a);
        let f = positive_map(&mut r, &s, &t, 3);
        assert_eq!(decode_map(&s, &t, &through_text(&encode_map(&f))).unwrap(), f);
    }
}

#[test]
fn rings_specs_and_towers_round_trip() {
    let mut r = rng(5);
    for _ in 0..50 {
        let space = any_space(&mut r);
        let s = SimplicialGroup::new(&space, r.gen_range(1..=2));
        let t = SimplicialGroup::new(&space, r.gen_range(1..=2));
        let source = realize_unit(&s, &order_unit(&mut r, &s, 2)).unwrap().ring;
        let m = positive_map(&mut r, &s, &t, 1);
        let unit = m.apply(&source.k0().unit_class).unwrap();
        let target = realize_unit(&t, &unit).unwrap().ring;
        let components: Vec<ComponentDto> = through_text(&encode_ring_desc(&target));
        let rebuilt: MatricialRingDesc = decode_ring_desc(&space, &components).unwrap();
        assert_eq!(rebuilt, target);

        let spec = hom_realizable(&source, &target, &m, true).unwrap();
        let dto: SpecDto = through_text(&encode_spec(&spec));
        let back = decode_spec(&source, &target, &dto).unwrap();
        assert_eq!(back.certificate, spec.certificate);
        back.verify().unwrap();

        let units = vec![source.k0().unit_class, unit];
        let tower = Tower::new(vec![s, t], vec![m], Some(TowerUnits { mode: UnitMode::Unit, units }), false).unwrap();
        let file = TowerFile::describe(&tower);
        let text = serde_json::to_string(&ProblemFile::Tower(file)).unwrap();
        let ProblemFile::Tower(file) = ProblemFile::parse(&text).unwrap() else { panic!("kind changed") };
        let back = file.build().unwrap();
        assert_eq!(back.maps(), tower.maps());
        assert_eq!(back.units(), tower.units());
    }
}
