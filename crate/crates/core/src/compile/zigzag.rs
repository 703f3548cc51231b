//! Frame tiles for rows that alternate direction and whose count depends
//! on the data.
//!
//! A row starts at one side from a start tile sitting on a strength-2
//! `go` glue and ends at the other side with an end tile that binds
//! cooperatively to the link left by the start tile below it and to the
//! row's last signal. The end tile's north glue selects the next row, so
//! the next row starts on the side where this one ended.

use super::{Family, Kit, N};
use crate::model::{GlueId, TileId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Side {
    Left,
    Right,
}

impl Side {
    fn tag(self) -> char {
        match self {
            Side::Left => 'L',
            Side::Right => 'R',
        }
    }
}

pub(crate) fn link(kit: &mut Kit, side: Side) -> GlueId {
    kit.g(&format!("link{}", side.tag()), 1)
}

pub(crate) fn go(kit: &mut Kit, row: &str) -> GlueId {
    kit.g(&format!("go:{row}"), 2)
}

pub(crate) fn halt(kit: &mut Kit, what: &str) -> GlueId {
    kit.g(&format!("halt:{what}"), 2)
}

/// Edges of a tile that sits on `south`, takes `sig_in` from the side the
/// row started on and passes `sig_out` on.
pub(crate) fn row_edges(from: Side, north: GlueId, south: GlueId, sig_in: GlueId, sig_out: GlueId) -> [GlueId; 4] {
    match from {
        Side::Left => [north, sig_out, south, sig_in],
        Side::Right => [north, sig_in, south, sig_out],
    }
}

/// Start tile for `row`, placed on `side`, emitting `signal` inward.
pub(crate) fn start(kit: &mut Kit, family: Family, row: &str, side: Side, signal: GlueId) -> TileId {
    let (s, n) = (go(kit, row), link(kit, side));
    let edges = match side {
        Side::Left => [n, signal, s, N],
        Side::Right => [n, N, s, signal],
    };
    kit.tile(family, format!("{}start:{row}", side.tag()), edges, "gray")
}

/// End tile on `side` that accepts `signal` and exposes `north`.
pub(crate) fn end(kit: &mut Kit, family: Family, label: &str, side: Side, signal: GlueId, north: GlueId) -> TileId {
    let s = link(kit, side);
    let edges = match side {
        Side::Left => [north, signal, s, N],
        Side::Right => [north, N, s, signal],
    };
    kit.tile(family, format!("{}end:{label}", side.tag()), edges, "gray")
}
