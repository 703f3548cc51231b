mod common;

use common::run;
use proptest::prelude::*;
use tileasm::frontend::{parse, ExpressionSpec};
use tileasm::manifest::{parse_manifest, write_manifest};
use tileasm::model::{binding_strength, frontier};
use tileasm::sim::{parse_trace, replay, write_trace};
use tileasm::xgrow::{emit_tiles, parse_tiles, structurally_equal};
use tileasm::{
    AddVariant, AdditionSpec, Assembly, CompileSpec, GlueId, MultiplicationSpec, PrimalitySpec, Sign,
    SignedExpressionSpec,
};

fn any_spec() -> impl Strategy<Value = CompileSpec> {
    let ops = prop::collection::vec(0..40u64, 2..=4);
    let pos_ops = prop::collection::vec(1..16u64, 2..=3);
    let terms = prop::collection::vec((prop::bool::ANY, 0..40u64), 1..=4).prop_map(|v| {
        v.into_iter().map(|(neg, x)| (if neg { Sign::Minus } else { Sign::Plus }, x)).collect::<Vec<_>>()
    });
    prop_oneof![
        (ops, 0..3usize).prop_map(|(inputs, v)| {
            let variant = [AddVariant::EightTile, AddVariant::SixTile, AddVariant::LType][v];
            CompileSpec::Add(AdditionSpec { inputs, variant })
        }),
        pos_ops.prop_map(|inputs| CompileSpec::Mul(MultiplicationSpec { inputs })),
        (terms, prop::option::of(2..20u64))
            .prop_map(|(terms, modulus)| CompileSpec::Signed(SignedExpressionSpec { terms, modulus })),
        (2..40u64).prop_map(|n| CompileSpec::Prime(PrimalitySpec { n })),
    ]
}

fn expression() -> impl Strategy<Value = ExpressionSpec> {
    let ops = prop::collection::vec(0..1000u64, 2..=6);
    let terms = prop::collection::vec((prop::bool::ANY, 0..1000u64), 1..=6).prop_map(|v| {
        v.into_iter().map(|(neg, x)| (if neg { Sign::Minus } else { Sign::Plus }, x)).collect::<Vec<_>>()
    });
    prop_oneof![
        ops.clone().prop_map(ExpressionSpec::Add),
        ops.prop_map(ExpressionSpec::Mul),
        (terms, prop::option::of(2..1000u64))
            .prop_filter("a plain sum prints as Add", |(t, m)| m.is_some() || t.iter().any(|&(s, _)| s == Sign::Minus))
            .prop_map(|(terms, modulus)| ExpressionSpec::Signed(SignedExpressionSpec { terms, modulus })),
        (0..1000u64).prop_map(ExpressionSpec::Prime),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn glue_strength_is_symmetric_and_name_bound(spec in any_spec()) {
        let c = tileasm::compile(&spec).unwrap();
        let sys = &c.system;
        prop_assert!(sys.validate().is_ok());
        let ids: Vec<GlueId> = (0..sys.glues.len()).map(GlueId).collect();
        for &a in &ids {
            for &b in &ids {
                prop_assert_eq!(sys.edge_strength(a, b), sys.edge_strength(b, a));
                if a != b {
                    prop_assert_eq!(sys.edge_strength(a, b), 0);
                }
            }
            prop_assert_eq!(sys.glue_by_name(&sys.glue(a).name).filter(|_| !a.is_null()), (!a.is_null()).then_some(a));
        }
    }

    #[test]
    fn every_step_meets_temperature_and_replays(spec in any_spec()) {
        let r = run(&spec);
        let sys = &r.compiled.system;
        let mut asm = sys.seed.clone();
        for &(pos, tile) in &r.report.trace {
            prop_assert!(binding_strength(sys, &asm, pos, tile).unwrap() >= sys.temperature);
            asm.place(pos, tile).unwrap();
        }
        prop_assert_eq!(&asm, &r.report.terminal);
        prop_assert!(frontier(sys, &asm).is_empty());
        let trace = parse_trace(&write_trace(&r.report.trace)).unwrap();
        prop_assert_eq!(replay(sys, &trace).unwrap(), r.report.terminal.clone());
        prop_assert!(r.report.terminal.is_connected());
    }

    #[test]
    fn result_cells_are_filled(spec in any_spec()) {
        let r = run(&spec);
        prop_assert!(!r.decoded.read_region.is_empty());
        for p in &r.decoded.read_region {
            prop_assert!(r.report.terminal.is_occupied(*p));
        }
    }

    #[test]
    fn manifest_round_trip(spec in any_spec()) {
        let c = tileasm::compile(&spec).unwrap();
        prop_assert_eq!(parse_manifest(&write_manifest(&c.system)).unwrap(), c.system);
    }

    #[test]
    fn xgrow_round_trip_and_stable_text(spec in any_spec()) {
        let c = tileasm::compile(&spec).unwrap();
        let (_, text) = emit_tiles(&c.system);
        let back = parse_tiles(&text).unwrap();
        prop_assert!(structurally_equal(&c.system, &back));
        let again = emit_tiles(&back).1;
        prop_assert_eq!(again, text);
    }

    #[test]
    fn xgrow_systems_grow_the_same(spec in any_spec()) {
        let r = run(&spec);
        let back = parse_tiles(&emit_tiles(&r.compiled.system).1).unwrap();
        let rep = tileasm::grow(&back, r.compiled.default_max_steps()).unwrap();
        let shape = |a: &Assembly| a.positions().collect::<Vec<_>>();
        prop_assert_eq!(shape(&rep.terminal), shape(&r.report.terminal));
    }

    #[test]
    fn canonical_text_parses_back(e in expression()) {
        prop_assert_eq!(parse(&e.to_string()).unwrap(), e);
    }
}

#[test]
fn twelve_plus_six_is_byte_stable() {
    let spec = CompileSpec::Add(AdditionSpec { inputs: vec![12, 6], variant: AddVariant::EightTile });
    let a = emit_tiles(&tileasm::compile(&spec).unwrap().system).1;
    let b = emit_tiles(&tileasm::compile(&spec).unwrap().system).1;
    assert_eq!(a, b);
    assert!(a.starts_with("% tileset add_8_tile_12,6\n"));
}
