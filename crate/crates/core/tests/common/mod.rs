#![allow(dead_code)]

use tileasm::decode::DecodedResult;
use tileasm::{compile, decode, grow, CompileSpec, Compiled, SimulationReport};

pub struct Run {
    pub compiled: Compiled,
    pub report: SimulationReport,
    pub decoded: DecodedResult,
}

pub fn run(spec: &CompileSpec) -> Run {
    let compiled = compile(spec).unwrap_or_else(|e| panic!("compile {spec:?}: {e}"));
    let report = grow(&compiled.system, compiled.default_max_steps()).unwrap();
    assert!(report.halted, "{spec:?} did not halt");
    assert!(report.deterministic, "{spec:?} nondeterministic at {:?}", report.conflicts);
    let decoded = decode(&compiled, &report.terminal).unwrap_or_else(|e| panic!("decode {spec:?}: {e}"));
    Run { compiled, report, decoded }
}

/// Trial division by every candidate below n.
pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..n).all(|d| !n.is_multiple_of(d))
}

pub fn signed_value(terms: &[(tileasm::Sign, u64)]) -> i128 {
    terms
        .iter()
        .map(|&(s, v)| match s {
            tileasm::Sign::Plus => v as i128,
            tileasm::Sign::Minus => -(v as i128),
        })
        .sum()
}
