//! Text formats: multivector literals, canonical/JSON serialization and scene files.

mod mv;
mod scene;
mod serialize;

pub use mv::{parse_mv, ParseError};
pub use scene::{parse_scene, Binding, Query, QueryOp, SceneDocument};
pub use serialize::{
    parse_mv_json, serialize_canonical, serialize_json, serialize_mv, serialize_rational, Style,
};
