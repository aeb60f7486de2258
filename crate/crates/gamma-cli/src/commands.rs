use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Value};

use gamma_core::extension::{extend_tower, ExtendedGroup};
use gamma_core::finite_group::{CosetSpace, FiniteGroup};
use gamma_core::gamma_maps::GammaLinearMap;
use gamma_core::graded_matricial::MatricialRingDesc;
use gamma_core::group_ring::GroupRingElt;
use gamma_core::hom_realization::{realize_tower, realize_unit};
use gamma_core::limits::Equality;
use gamma_core::ordered_simplicial::{GammaVector, SimplicialGroup};
use gamma_core::schema::{
    decode_level_elt, decode_map, decode_pair, decode_ring, decode_ring_desc, decode_spec, decode_vector, encode_map,
    encode_pair, encode_ring, encode_ring_desc, encode_spec, encode_vector, Certificate, ExtensionFile, Int,
    ProblemFile, VectorDto,
};
use gamma_core::sdp::{
    search_single_term_witness, single_term_search_bound, unperforation_witness, verify_sdp_witness,
    verify_unperforation_witness, SdpSource, SdpWitness, UnperfWitness, Verdict,
};
use gamma_core::shen::shen_step;
use gamma_core::{Error, Result};

use crate::{Cli, Command};

/// What a command found: a yes/no verdict, the report in both renderings, and an optional
/// certificate.
pub struct Outcome {
    pub verdict: bool,
    pub lines: Vec<String>,
    pub json: Value,
    pub cert: Option<Certificate>,
}

impl Outcome {
    fn new(verdict: bool, lines: Vec<String>, json: Value) -> Self {
        Outcome { verdict, lines, json, cert: None }
    }

    fn with_cert(mut self, cert: Certificate) -> Self {
        self.cert = Some(cert);
        self
    }
}

fn load(path: &Path) -> Result<ProblemFile> {
    let text = fs::read_to_string(path).map_err(|e| Error::Schema(format!("cannot read {}: {e}", path.display())))?;
    ProblemFile::parse(&text)
}

fn wrong_kind(command: &str, file: &ProblemFile) -> Error {
    Error::Schema(format!("{command} does not accept a {} file", file.kind()))
}

fn delta_names(space: &CosetSpace) -> String {
    format!("{:?}", space.subgroup())
}

fn show_all<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::CheckSimplicial { file } => check_simplicial(&load(file)?),
        Command::SdpWitness { file } => sdp(&load(file)?),
        Command::UnperfWitness { file } => unperf(&load(file)?),
        Command::Shen { file } => shen(&load(file)?),
        Command::Realize { file, unit } => realize(&load(file)?, unit.as_deref()),
        Command::RealizeTower { file } => tower_realization(&load(file)?),
        Command::K0 { file } => k0(&load(file)?),
        Command::GradedIso { left, right } => graded_iso(&load(left)?, &load(right)?),
        Command::Extend { file } => extend(&load(file)?),
        Command::ColimitEq { file } => colimit_eq(&load(file)?, cli.horizon),
        Command::Verify { file } => {
            let text = fs::read_to_string(file)
                .map_err(|e| Error::Schema(format!("cannot read {}: {e}", file.display())))?;
            verify(&Certificate::parse(&text)?)
        }
    }
}

fn space_report(space: &Arc<CosetSpace>) -> (Vec<String>, Value) {
    let group = space.group();
    let lines = vec![
        format!("|Γ| = {}", group.order()),
        format!("Δ = {}", delta_names(space)),
        format!("[Γ : Δ] = {}", space.len()),
        format!("Δ normal: {}", space.is_normal()),
        format!("normal closure of Δ: {:?}", space.subgroup().normal_closure()),
        format!("stabilizer of ℤ[Γ/Δ]: {:?}", space.action_kernel()),
    ];
    let json = json!({
        "order": group.order(),
        "delta": space.subgroup().members(),
        "index": space.len(),
        "normal": space.is_normal(),
        "normal_closure": space.subgroup().normal_closure().members(),
        "stabilizer": space.action_kernel().members(),
    });
    (lines, json)
}

fn check_simplicial(file: &ProblemFile) -> Result<Outcome> {
    match file {
        ProblemFile::Group(g) => {
            let (lines, json) = space_report(&g.space.build()?);
            Ok(Outcome::new(true, lines, json))
        }
        ProblemFile::Simplicial(s) => {
            let space = s.space.build()?;
            let group = SimplicialGroup::new(&space, s.rank);
            let (mut lines, mut json) = space_report(&space);
            lines.push(format!("rank = {}", s.rank));
            lines.push(format!("group stabilizer: {:?}", group.group_stabilizer()));
            json["rank"] = json!(s.rank);
            json["group_stabilizer"] = json!(group.group_stabilizer().members());
            let mut verdict = true;
            if let Some(u) = &s.unit {
                let u = decode_vector(&group, u)?;
                let positive = group.cone_contains(&u)?;
                let unit = positive && group.is_order_unit(&u)?;
                lines.push(format!("u = {u}: positive {positive}, order-unit {unit}"));
                json["unit"] = json!({ "positive": positive, "order_unit": unit });
                verdict = unit;
            }
            let mut memberships = Vec::new();
            for (k, x) in s.elements.iter().enumerate() {
                let x = decode_vector(&group, x)?;
                let inside = group.cone_contains(&x)?;
                lines.push(format!("x{k} = {x}: in cone {inside}"));
                memberships.push(inside);
            }
            json["in_cone"] = json!(memberships);
            Ok(Outcome::new(verdict, lines, json))
        }
        other => Err(wrong_kind("check-simplicial", other)),
    }
}

fn ring_elts(group: &Arc<FiniteGroup>, rows: &[Vec<Int>]) -> Result<Vec<GroupRingElt>> {
    rows.iter().map(|r| decode_ring(group, r)).collect()
}

fn witness_lines<E: std::fmt::Display>(b: &[Vec<GroupRingElt>], y: &[E]) -> Vec<String> {
    let mut lines = vec![format!("m = {}", y.len())];
    for (j, yj) in y.iter().enumerate() {
        lines.push(format!("y{j} = {yj}"));
    }
    for (i, row) in b.iter().enumerate() {
        lines.push(format!("b{i} = [{}]", show_all(row)));
    }
    lines
}

fn verdict_line(v: &Verdict) -> String {
    match v {
        Verdict::Valid => "witness verified".to_string(),
        Verdict::Invalid(d) => format!("witness rejected: {d}"),
    }
}

fn sdp(file: &ProblemFile) -> Result<Outcome> {
    match file {
        ProblemFile::Relation(r) => {
            let space = r.space.build()?;
            let group = SimplicialGroup::new(&space, r.rank);
            let a = ring_elts(space.group(), &r.a)?;
            let x = r.x.iter().map(|v| decode_vector(&group, v)).collect::<Result<Vec<_>>>()?;
            let w = group.sdp_witness(&a, &x)?;
            let verdict = verify_sdp_witness(&group, &a, &x, &w);
            let mut lines = witness_lines(&w.b, &w.y);
            lines.push(verdict_line(&verdict));
            let json = json!({
                "m": w.m(),
                "b": w.b.iter().map(|row| row.iter().map(encode_ring).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "y": w.y.iter().map(encode_vector).collect::<Vec<_>>(),
                "verified": verdict.is_valid(),
            });
            let cert = Certificate::SdpCertificate {
                space: r.space.clone(),
                rank: r.rank,
                a: r.a.clone(),
                x: r.x.clone(),
                b: w.b.iter().map(|row| row.iter().map(encode_ring).collect()).collect(),
                y: w.y.iter().map(encode_vector).collect(),
            };
            Ok(Outcome::new(verdict.is_valid(), lines, json).with_cert(cert))
        }
        ProblemFile::Extension(e) => {
            let relation = e.relation.as_ref().ok_or_else(|| Error::Schema("extension file has no relation".into()))?;
            let (h, _) = extension_of(e)?;
            let a = ring_elts(h.base().space().group(), &relation.a)?;
            let x = relation.x.iter().map(|p| decode_pair(&h, p)).collect::<Result<Vec<_>>>()?;
            let w = h.sdp_witness(&a, &x)?;
            let verdict = verify_sdp_witness(&h, &a, &x, &w);
            let mut lines = witness_lines(&w.b, &w.y);
            lines.push(verdict_line(&verdict));
            let json = json!({
                "m": w.m(),
                "b": w.b.iter().map(|row| row.iter().map(encode_ring).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "verified": verdict.is_valid(),
            });
            let cert = Certificate::ExtSdpCertificate {
                space: e.space.clone(),
                rank: e.rank,
                unit: e.unit.clone(),
                a: relation.a.clone(),
                x: relation.x.clone(),
                b: w.b.iter().map(|row| row.iter().map(encode_ring).collect()).collect(),
                y: w.y.iter().map(encode_pair).collect(),
            };
            Ok(Outcome::new(verdict.is_valid(), lines, json).with_cert(cert))
        }
        other => Err(wrong_kind("sdp-witness", other)),
    }
}

fn unperf(file: &ProblemFile) -> Result<Outcome> {
    let ProblemFile::Relation(r) = file else {
        return Err(wrong_kind("unperf-witness", file));
    };
    if r.a.len() != 1 || r.x.len() != 1 {
        return Err(Error::Schema("unperf-witness needs exactly one coefficient and one element".into()));
    }
    let space = r.space.build()?;
    let group = SimplicialGroup::new(&space, r.rank);
    let a = decode_ring(space.group(), &r.a[0])?;
    let x = decode_vector(&group, &r.x[0])?;
    let ax = x.act(&a)?;
    let mut lines = vec![
        format!("a·x = {ax}: in cone {}", group.cone_contains(&ax)?),
        format!("x in cone: {}", group.cone_contains(&x)?),
    ];
    let w = unperforation_witness(&group, &a, &x)?;
    let verdict = verify_unperforation_witness(&group, &a, &x, &w);
    lines.push(format!("m = {}", w.m()));
    for (j, (bj, yj)) in w.b.iter().zip(&w.y).enumerate() {
        lines.push(format!("b{j} = {bj}, y{j} = {yj}"));
    }
    lines.push(verdict_line(&verdict));
    let bound = single_term_search_bound(&a, &x);
    let single = search_single_term_witness(&group, &a, &x, &bound)?;
    lines.push(match &single {
        Some(s) => format!("one-term witness within bound {bound}: b = {}, y = {}", s.b[0], s.y[0]),
        None => format!("no one-term witness within bound {bound}"),
    });
    let json = json!({
        "m": w.m(),
        "b": w.b.iter().map(encode_ring).collect::<Vec<_>>(),
        "y": w.y.iter().map(encode_vector).collect::<Vec<_>>(),
        "verified": verdict.is_valid(),
        "search_bound": bound.to_string(),
        "one_term_found": single.is_some(),
    });
    let cert = Certificate::UnperfCertificate {
        space: r.space.clone(),
        rank: r.rank,
        a: r.a[0].clone(),
        x: r.x[0].clone(),
        b: w.b.iter().map(encode_ring).collect(),
        y: w.y.iter().map(encode_vector).collect(),
    };
    Ok(Outcome::new(verdict.is_valid(), lines, json).with_cert(cert))
}

fn shen(file: &ProblemFile) -> Result<Outcome> {
    let ProblemFile::Hom(h) = file else {
        return Err(wrong_kind("shen", file));
    };
    let space = h.space.build()?;
    let source = SimplicialGroup::new(&space, h.source_rank);
    let target = SimplicialGroup::new(&space, h.target_rank);
    let g1 = decode_map(&source, &target, &h.columns)?;
    let f = shen_step(&g1)?;
    let lines = vec![
        format!("kernel generators processed: {}", f.steps),
        format!("middle rank = {}", f.middle.rank()),
        format!("g12 columns: {}", show_all(f.into_middle.columns())),
        format!("g2 columns: {}", show_all(f.out_of_middle.columns())),
        "g2 ∘ g12 = g1 and ker g12 = ker g1 verified".to_string(),
    ];
    let json = json!({
        "steps": f.steps,
        "middle_rank": f.middle.rank(),
        "into_middle": encode_map(&f.into_middle),
        "out_of_middle": encode_map(&f.out_of_middle),
    });
    let cert = Certificate::ShenCertificate {
        space: h.space.clone(),
        source_rank: h.source_rank,
        target_rank: h.target_rank,
        columns: h.columns.clone(),
        middle_rank: f.middle.rank(),
        into_middle: encode_map(&f.into_middle),
        out_of_middle: encode_map(&f.out_of_middle),
    };
    Ok(Outcome::new(true, lines, json).with_cert(cert))
}

/// A unit given on the command line: a flat list is the single coordinate of a rank-one group.
fn parse_unit(text: &str, group: &SimplicialGroup) -> Result<GammaVector> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Schema(format!("--unit: {e}")))?;
    let nested = match &value {
        Value::Array(items) if items.iter().all(|v| !v.is_array()) => Value::Array(vec![value.clone()]),
        _ => value,
    };
    let dto: VectorDto = serde_json::from_value(nested).map_err(|e| Error::Schema(format!("--unit: {e}")))?;
    decode_vector(group, &dto)
}

fn realize(file: &ProblemFile, unit: Option<&str>) -> Result<Outcome> {
    let ProblemFile::Simplicial(s) = file else {
        return Err(wrong_kind("realize", file));
    };
    let space = s.space.build()?;
    let group = SimplicialGroup::new(&space, s.rank);
    let u = match (unit, &s.unit) {
        (Some(text), _) => parse_unit(text, &group)?,
        (None, Some(u)) => decode_vector(&group, u)?,
        (None, None) => return Err(Error::Schema("no unit given in the file or with --unit".into())),
    };
    let r = realize_unit(&group, &u)?;
    let k0 = r.ring.k0();
    let lines = vec![
        format!("R = {}", r.ring),
        format!("[R] = {}", k0.unit_class),
        "basis map carries [R] to u".to_string(),
    ];
    let json = json!({
        "components": serde_json::to_value(encode_ring_desc(&r.ring)).expect("serializable"),
        "unit_class": encode_vector(&k0.unit_class),
    });
    let cert = Certificate::RealizationCertificate {
        space: s.space.clone(),
        rank: s.rank,
        unit: encode_vector(&u),
        components: encode_ring_desc(&r.ring),
    };
    Ok(Outcome::new(true, lines, json).with_cert(cert))
}

fn tower_realization(file: &ProblemFile) -> Result<Outcome> {
    let ProblemFile::Tower(t) = file else {
        return Err(wrong_kind("realize-tower", file));
    };
    let tower = t.build()?;
    let rt = realize_tower(&tower)?;
    let mut lines = Vec::new();
    for (k, ring) in rt.rings.iter().enumerate() {
        lines.push(format!("R{k} = {ring}"));
    }
    for (k, spec) in rt.specs.iter().enumerate() {
        lines.push(format!(
            "φ{k}: K₀ matrix [{}], {}, {} slot assignments",
            show_all(spec.matrix.columns()),
            if spec.unital { "unital" } else { "non-unital" },
            spec.certificate.len()
        ));
    }
    lines.push("all K₀ squares commute".to_string());
    let rings: Vec<_> = rt.rings.iter().map(encode_ring_desc).collect();
    let specs: Vec<_> = rt.specs.iter().map(encode_spec).collect();
    let json = json!({
        "rings": serde_json::to_value(&rings).expect("serializable"),
        "specs": serde_json::to_value(&specs).expect("serializable"),
    });
    let cert = Certificate::RingTowerCertificate {
        space: t.space.clone(),
        rings,
        specs,
    };
    Ok(Outcome::new(true, lines, json).with_cert(cert))
}

fn ring_of(file: &ProblemFile) -> Result<MatricialRingDesc> {
    match file {
        ProblemFile::Ring(r) => decode_ring_desc(&r.space.build()?, &r.components),
        other => Err(wrong_kind("this command", other)),
    }
}

fn k0(file: &ProblemFile) -> Result<Outcome> {
    let ring = ring_of(file)?;
    let data = ring.k0();
    let lines = vec![
        format!("R = {ring}"),
        format!("rank = {}", data.group.rank()),
        format!("Δ = {}", delta_names(ring.space())),
        format!("[R] = {}", data.unit_class),
    ];
    let json = json!({
        "rank": data.group.rank(),
        "delta": ring.space().subgroup().members(),
        "unit_class": encode_vector(&data.unit_class),
    });
    Ok(Outcome::new(true, lines, json))
}

fn graded_iso(left: &ProblemFile, right: &ProblemFile) -> Result<Outcome> {
    let (r, s) = (ring_of(left)?, ring_of(right)?);
    let iso = r.graded_iso(&s)?;
    let lines = vec![format!("{r} ≅ {s}: {iso}")];
    Ok(Outcome::new(iso, lines, json!({ "isomorphic": iso })))
}

fn extension_of(e: &ExtensionFile) -> Result<(ExtendedGroup, SimplicialGroup)> {
    let space = e.space.build()?;
    let base = SimplicialGroup::new(&space, e.rank);
    let u = decode_vector(&base, &e.unit)?;
    Ok((ExtendedGroup::new(&base, &u)?, base))
}

fn extend(file: &ProblemFile) -> Result<Outcome> {
    match file {
        ProblemFile::Extension(e) => {
            let (h, _) = extension_of(e)?;
            let probes = e.probes.iter().map(|p| decode_pair(&h, p)).collect::<Result<Vec<_>>>()?;
            let dominated = h.order_unit_check(&probes)?;
            let preimage = h.interval_preimage()?;
            let mut lines = vec![
                format!("H = G ⊕ ℤ[Γ/Δ] with G of rank {}, u = {}", h.base().rank(), h.unit()),
                format!("(0, Δ) dominates {} probes: {dominated}", probes.len()),
                format!(
                    "ι⁻¹[0, (0, Δ)] has {} elements, equals [0, u]: {}",
                    preimage.preimage.len(),
                    preimage.equals_interval
                ),
            ];
            let mut json = json!({
                "dominated": dominated,
                "interval_preimage_size": preimage.preimage.len(),
                "interval_matches": preimage.equals_interval,
            });
            let mut verdict = dominated && preimage.equals_interval;
            let mut cert = None;
            if e.relation.is_some() {
                let witness = sdp(file)?;
                lines.extend(witness.lines);
                json["witness"] = witness.json;
                verdict &= witness.verdict;
                cert = witness.cert;
            }
            let mut outcome = Outcome::new(verdict, lines, json);
            outcome.cert = cert;
            Ok(outcome)
        }
        ProblemFile::Tower(t) => {
            let tower = t.build()?;
            let ext = extend_tower(&tower)?;
            let lines = vec![
                format!("extended {} levels", ext.levels.len()),
                "h∘ι = ι∘g, p∘h = p and positivity of h verified at every level".to_string(),
            ];
            Ok(Outcome::new(true, lines, json!({ "levels": ext.levels.len() })))
        }
        other => Err(wrong_kind("extend", other)),
    }
}

fn colimit_eq(file: &ProblemFile, horizon: Option<usize>) -> Result<Outcome> {
    let ProblemFile::Tower(t) = file else {
        return Err(wrong_kind("colimit-eq", file));
    };
    if t.queries.is_empty() {
        return Err(Error::Schema("tower file has no queries".into()));
    }
    let tower = t.build()?;
    let horizon = horizon.unwrap_or(tower.groups().len() - 1);
    let mut lines = Vec::new();
    let mut answers = Vec::new();
    let mut all_equal = true;
    for (k, query) in t.queries.iter().enumerate() {
        let p = decode_level_elt(&tower, &query.p)?;
        let q = decode_level_elt(&tower, &query.q)?;
        let answer = tower.colimit_eq(&p, &q, horizon)?;
        let text = match &answer {
            Equality::Equal { level } => format!("equal at level {level}"),
            Equality::NotEqualUpTo { horizon } => format!("not equal up to level {horizon}"),
            Equality::Unknown(reason) => format!("unknown: {reason:?}"),
        };
        all_equal &= matches!(answer, Equality::Equal { .. });
        lines.push(format!("query {k}: {text}"));
        answers.push(text);
    }
    Ok(Outcome::new(all_equal, lines, json!({ "horizon": horizon, "answers": answers })))
}

fn decode_b(group: &Arc<FiniteGroup>, b: &[Vec<Vec<Int>>]) -> Result<Vec<Vec<GroupRingElt>>> {
    b.iter().map(|row| ring_elts(group, row)).collect()
}

fn verify(cert: &Certificate) -> Result<Outcome> {
    let (valid, what) = match cert {
        Certificate::SdpCertificate { space, rank, a, x, b, y } => {
            let space = space.build()?;
            let group = SimplicialGroup::new(&space, *rank);
            let a = ring_elts(space.group(), a)?;
            let x = x.iter().map(|v| decode_vector(&group, v)).collect::<Result<Vec<_>>>()?;
            let y = y.iter().map(|v| decode_vector(&group, v)).collect::<Result<Vec<_>>>()?;
            let w = SdpWitness { b: decode_b(space.group(), b)?, y };
            (verify_sdp_witness(&group, &a, &x, &w), "decomposition witness")
        }
        Certificate::ExtSdpCertificate { space, rank, unit, a, x, b, y } => {
            let file = ExtensionFile {
                space: space.clone(),
                rank: *rank,
                unit: unit.clone(),
                probes: Vec::new(),
                relation: None,
            };
            let (h, _) = extension_of(&file)?;
            let gamma = h.base().space().group().clone();
            let a = ring_elts(&gamma, a)?;
            let x = x.iter().map(|p| decode_pair(&h, p)).collect::<Result<Vec<_>>>()?;
            let y = y.iter().map(|p| decode_pair(&h, p)).collect::<Result<Vec<_>>>()?;
            let w = SdpWitness { b: decode_b(&gamma, b)?, y };
            (verify_sdp_witness(&h, &a, &x, &w), "extension decomposition witness")
        }
        Certificate::UnperfCertificate { space, rank, a, x, b, y } => {
            let space = space.build()?;
            let group = SimplicialGroup::new(&space, *rank);
            let a = decode_ring(space.group(), a)?;
            let x = decode_vector(&group, x)?;
            let w = UnperfWitness {
                b: ring_elts(space.group(), b)?,
                y: y.iter().map(|v| decode_vector(&group, v)).collect::<Result<Vec<_>>>()?,
            };
            (verify_unperforation_witness(&group, &a, &x, &w), "unperforation witness")
        }
        Certificate::ShenCertificate { space, source_rank, target_rank, columns, middle_rank, into_middle, out_of_middle } => {
            let space = space.build()?;
            let source = SimplicialGroup::new(&space, *source_rank);
            let target = SimplicialGroup::new(&space, *target_rank);
            let middle = SimplicialGroup::new(&space, *middle_rank);
            let g1 = decode_map(&source, &target, columns)?;
            let g12 = decode_map(&source, &middle, into_middle)?;
            let g2 = decode_map(&middle, &target, out_of_middle)?;
            let ok = g12.is_positive()
                && g2.is_positive()
                && g2.compose(&g12)? == g1
                && g12.kernel_lattice() == g1.kernel_lattice();
            return Ok(report_check(ok, "factorization"));
        }
        Certificate::RealizationCertificate { space, rank, unit, components } => {
            let space = space.build()?;
            let group = SimplicialGroup::new(&space, *rank);
            let u = decode_vector(&group, unit)?;
            let ring = decode_ring_desc(&space, components)?;
            let basis_map = GammaLinearMap::identity(&group);
            let ok = ring.k0_group() == group && basis_map.apply(&ring.k0().unit_class)? == u;
            return Ok(report_check(ok, "realization"));
        }
        Certificate::RingTowerCertificate { space, rings, specs } => {
            let space: Arc<CosetSpace> = space.build()?;
            let rings = rings.iter().map(|r| decode_ring_desc(&space, r)).collect::<Result<Vec<_>>>()?;
            if specs.len() + 1 != rings.len() {
                return Ok(report_check(false, "ring tower"));
            }
            let ok = specs
                .iter()
                .enumerate()
                .map(|(k, s)| decode_spec(&rings[k], &rings[k + 1], s).map(|spec| spec.verify().is_ok()))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .all(|v| v);
            return Ok(report_check(ok, "ring tower"));
        }
    };
    let mut outcome = report_check(valid.is_valid(), what);
    outcome.lines.push(verdict_line(&valid));
    Ok(outcome)
}

fn report_check(ok: bool, what: &str) -> Outcome {
    let line = format!("{what} certificate {}", if ok { "verified" } else { "rejected" });
    Outcome::new(ok, vec![line], json!({ "valid": ok }))
}
