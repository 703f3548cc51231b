mod common;

use common::run;
use tileasm::{
    compile, AddVariant, AdditionSpec, CompileSpec, Family, MultiplicationSpec, PrimalitySpec, Sign,
    SignedExpressionSpec,
};

fn add(inputs: &[u64], variant: AddVariant) -> CompileSpec {
    CompileSpec::Add(AdditionSpec { inputs: inputs.to_vec(), variant })
}

fn six_minus_twelve(modulus: Option<u64>) -> CompileSpec {
    let terms = vec![(Sign::Plus, 6), (Sign::Minus, 12), (Sign::Plus, 4), (Sign::Minus, 2)];
    CompileSpec::Signed(SignedExpressionSpec { terms, modulus })
}

#[test]
fn twelve_six_two_four() {
    let r = run(&add(&[12, 6, 2, 4], AddVariant::EightTile));
    assert_eq!(r.decoded.value, Some(24));
    assert_eq!(r.decoded.lines(), ["result=24"]);
}

#[test]
fn l_type_six_four_three_five() {
    assert_eq!(run(&add(&[6, 4, 3, 5], AddVariant::LType)).decoded.value, Some(18));
}

#[test]
fn five_four_three() {
    assert_eq!(run(&CompileSpec::Mul(MultiplicationSpec { inputs: vec![5, 4, 3] })).decoded.value, Some(60));
}

#[test]
fn six_minus_twelve_plus_four_minus_two() {
    let r = run(&six_minus_twelve(None));
    assert_eq!(r.decoded.value, Some(-4));
    assert_eq!(r.decoded.negative, Some(true));
    let mut cells = r.decoded.read_region.clone();
    cells.sort_by_key(|p| p.x);
    let row: String = cells
        .iter()
        .map(|&p| if r.compiled.layout.bit_of[&r.report.terminal.get(p).unwrap()] { '1' } else { '0' })
        .collect();
    assert_eq!(row, "0000100");
}

#[test]
fn same_expression_mod_three() {
    let r = run(&six_minus_twelve(Some(3)));
    assert_eq!(r.decoded.remainder, Some(1));
    assert_eq!(r.decoded.negative, Some(true));
    assert_eq!(r.decoded.lines(), ["remainder=1", "sign=-"]);
}

#[test]
fn five_is_prime_and_nine_is_not() {
    assert_eq!(run(&CompileSpec::Prime(PrimalitySpec { n: 5 })).decoded.prime, Some(true));
    assert_eq!(run(&CompileSpec::Prime(PrimalitySpec { n: 9 })).decoded.prime, Some(false));
}

#[test]
fn frame_and_input_usage_for_twelve_six_two_four() {
    let r = run(&add(&[12, 6, 2, 4], AddVariant::EightTile));
    let used = r.compiled.usage_counts(&r.report.terminal);
    assert_eq!(used[&Family::LeftFrame], 5);
    assert_eq!(used[&Family::Corner], 4);
    assert_eq!(used[&Family::RightFrame], 5);
    assert_eq!(used[&Family::TopFrame], 7);
    assert_eq!(used[&Family::Input], 21);
    // One summing row per addition.
    assert_eq!(used[&Family::Computational], 21);
}

#[test]
fn primality_families_are_fixed() {
    for n in [2, 5, 12, 63] {
        let types = compile(&CompileSpec::Prime(PrimalitySpec { n })).unwrap().type_counts();
        assert_eq!(types[&Family::Converter], 4);
        assert_eq!(types[&Family::CheckGreaterThanOne], 12);
        assert_eq!(types[&Family::CheckCompare], 24);
        assert_eq!(types[&Family::MoveRightToLeft], 4);
        assert_eq!(types[&Family::SubtractBMinusC], 16);
        assert_eq!(types[&Family::SubtractCMinusOne], 16);
    }
}

#[test]
fn signed_and_product_fixed_families() {
    let types = compile(&six_minus_twelve(None)).unwrap().type_counts();
    assert_eq!(types[&Family::ComputationalPlus], 8);
    assert_eq!(types[&Family::ComputationalMinus], 8);
    assert_eq!(types[&Family::TopFrame], 6);
    let types = compile(&CompileSpec::Mul(MultiplicationSpec { inputs: vec![5, 4, 3] })).unwrap().type_counts();
    assert_eq!(types[&Family::Seed], 1);
    assert_eq!(types[&Family::TopFrame], 6);
}

#[test]
fn rejected_inputs() {
    assert!(compile(&add(&[7], AddVariant::EightTile)).is_err());
    assert!(compile(&CompileSpec::Mul(MultiplicationSpec { inputs: vec![3, 0] })).is_err());
    assert!(compile(&CompileSpec::Prime(PrimalitySpec { n: 1 })).is_err());
    let bad_mod = CompileSpec::Signed(SignedExpressionSpec { terms: vec![(Sign::Plus, 3)], modulus: Some(0) });
    assert!(compile(&bad_mod).is_err());
}
