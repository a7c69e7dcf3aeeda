//! Export followed by import is the identity on canonical form.

mod common;

use qgraph::artifact::{ArtifactRecord, Kind};
use qgraph::payload;
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Parses the canonical text, decodes the typed payload and re-encodes it.
fn typed_round_trip<T: Serialize + DeserializeOwned>(r: &ArtifactRecord) -> ArtifactRecord {
    let text = r.to_canonical();
    let back = ArtifactRecord::parse(&text).unwrap();
    let typed: T = back.decode(r.kind).unwrap();
    let again = ArtifactRecord::new(r.kind, back.provenance.clone(), &typed).unwrap();
    assert_eq!(again.to_canonical(), text, "{} changed on round trip", r.kind);
    again
}

#[test]
fn every_kind_round_trips() {
    let c = common::chain();
    for o in c.all() {
        let r = &o.record;
        match r.kind {
            Kind::Alcove => typed_round_trip::<payload::Alcove>(r),
            Kind::FusionRing => typed_round_trip::<payload::FusionRing>(r),
            Kind::ModularData => typed_round_trip::<payload::Modular>(r),
            Kind::EmbeddingScan => typed_round_trip::<payload::EmbeddingScan>(r),
            Kind::Invariant => typed_round_trip::<payload::Invariant>(r),
            Kind::ToricFamily => typed_round_trip::<payload::Toric>(r),
            Kind::OcGraph => typed_round_trip::<payload::Oc>(r),
            Kind::GraphAlgebra => typed_round_trip::<payload::Algebra>(r),
            Kind::OcAlgebra => typed_round_trip::<payload::Realization>(r),
        };
    }
    let kinds: Vec<Kind> = c.all().iter().map(|o| o.record.kind).collect();
    assert_eq!(kinds, Kind::ALL);
}

#[test]
fn core_types_survive_the_payloads() {
    let c = common::chain();
    let fr: payload::FusionRing = c.fusion.record.decode(Kind::FusionRing).unwrap();
    assert_eq!(fr.matrices.len(), 35);
    let ring = fr.decode().unwrap();
    assert_eq!(payload::FusionRing::from(&ring), fr);

    let inv: payload::Invariant = c.invariant.record.decode(Kind::Invariant).unwrap();
    let m = inv.decode().unwrap();
    assert_eq!(m.trace(), 12);
    assert_eq!(payload::Invariant::new(&inv.name, inv.level, &ring.alcove, &m), inv);

    let t: payload::Toric = c.toric.record.decode(Kind::ToricFamily).unwrap();
    let fam = t.decode().unwrap();
    assert_eq!((fam.distinct(), fam.total()), (33, 48));
    assert_eq!(payload::Toric::new(t.level, &fam), t);

    let g: payload::Oc = c.oc_graph.record.decode(Kind::OcGraph).unwrap();
    let oc = g.decode().unwrap();
    assert!(oc.chiral_commute());
    assert_eq!(payload::Oc::new(g.level, &oc), g);

    let a: payload::Algebra = c.algebra.record.decode(Kind::GraphAlgebra).unwrap();
    let alg = a.decode().unwrap();
    assert!(alg.is_associative() && alg.doublet_product_mismatches().is_empty());
}

#[test]
fn provenance_links_the_chain() {
    let c = common::chain();
    let link = |child: &ArtifactRecord, parent: &ArtifactRecord| {
        assert_eq!(child.provenance.inputs, vec![parent.hash.clone()], "{} <- {}", child.kind, parent.kind);
    };
    link(&c.toric.record, &c.invariant.record);
    link(&c.oc_graph.record, &c.toric.record);
    link(&c.algebra.record, &c.oc_graph.record);
    link(&c.realization.record, &c.algebra.record);
    assert_eq!(c.oc_graph.record.provenance.parameters["conjugation_matches_realization"], true);
}

#[test]
fn wrong_kind_is_rejected() {
    let c = common::chain();
    assert!(c.toric.record.decode::<payload::Invariant>(Kind::Invariant).is_err());
}
