pub mod mixed;
pub mod normalize;
pub mod sweep;
pub mod verify;
pub mod volume;

use serde_json::{json, Value};
use trivol_core::rational::to_decimal_string;
use trivol_core::{Box3Bounds, OmegaBox, Rational};

use crate::io::rational_to_json;

/// Significant digits of the convenience decimal fields.
pub const DECIMAL_DIGITS: usize = 12;

fn rationals(rs: &[Rational]) -> Value {
    Value::Array(rs.iter().map(rational_to_json).collect())
}

pub(crate) fn bounds_json(b: &Box3Bounds) -> Value {
    json!({ "a": rationals(b.a()), "b": rationals(b.b()) })
}

/// 1-based, as printed to users.
pub(crate) fn perm_one_based(ob: &OmegaBox) -> [usize; 3] {
    ob.perm().map(|i| i + 1)
}

pub(crate) fn normalized_json(ob: &OmegaBox) -> Value {
    json!({
        "a": rationals(ob.bounds().a()),
        "b": rationals(ob.bounds().b()),
        "perm": perm_one_based(ob),
    })
}

pub(crate) fn decimal_json(r: &Rational) -> Value {
    let text = to_decimal_string(r, DECIMAL_DIGITS);
    text.parse::<f64>()
        .ok()
        .and_then(serde_json::Number::from_f64)
        .map_or(Value::String(text), Value::Number)
}

pub(crate) fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
