//! Compile integer arithmetic into temperature-2 tile assembly systems,
//! grow them to a terminal assembly and read the answer back.
//!
//! ```
//! use tileasm::{compile, decode, frontend, grow, AddVariant};
//!
//! let spec = frontend::parse("12+6+2+4").unwrap().to_compile_spec(AddVariant::EightTile);
//! let compiled = compile(&spec).unwrap();
//! let report = grow(&compiled.system, compiled.default_max_steps()).unwrap();
//! assert!(report.deterministic && report.halted);
//! assert_eq!(decode(&compiled, &report.terminal).unwrap().value, Some(24));
//! ```

pub mod compile;
pub mod decode;
pub mod frontend;
pub mod manifest;
pub mod model;
pub mod render;
pub mod sim;
pub mod xgrow;

pub use compile::{
    compile, AddVariant, AdditionSpec, CompileError, CompileSpec, Compiled, Family, Kind, MultiplicationSpec,
    PrimalitySpec, Sign, SignedExpressionSpec,
};
pub use decode::{decode, DecodeError, DecodedResult};
pub use model::{Assembly, Dir, Glue, GlueId, ModelError, Pos, TileId, TileSystem, TileSystemBuilder, TileType};
pub use sim::{grow, grow_with_order, FrontierOrder, SimError, SimulationReport};
