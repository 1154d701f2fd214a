//! Stable JSON rendering for reports.
//!
//! Everything is routed through `serde_json::Value`, whose maps are ordered
//! by key, so the output is key-sorted and byte-stable for equal inputs.

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::groupoid::Groupoid;
use crate::morphisms::Mapping;

pub const DECISION_FORMAT: &str = "groupoid-twist/decision/1";
pub const SWEEP_FORMAT: &str = "groupoid-twist/sweep/1";

/// Pretty-printed, key-sorted, newline-terminated JSON.
pub fn to_stable_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("report types serialize infallibly");
    let mut out = serde_json::to_string_pretty(&value).expect("values serialize infallibly");
    out.push('\n');
    out
}

impl Serialize for Groupoid {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Groupoid", 2)?;
        s.serialize_field("order", &self.order())?;
        s.serialize_field("rows", &self.rows())?;
        s.end()
    }
}

impl Serialize for Mapping {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.image().serialize(serializer)
    }
}
