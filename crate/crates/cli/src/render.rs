//! Envelope and text helpers shared by the subcommands.

use cherncert::rational::format_rational;
use cherncert::{Convention, Rational};
use serde_json::{json, Value};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Wraps a payload; `serde_json::Map` keeps keys sorted, so output is canonical.
pub fn envelope(command: &str, dimension: usize, convention: Convention, payload: Value) -> String {
    let v = json!({
        "command": command,
        "dimension": dimension,
        "convention": convention.as_str(),
        "payload": payload,
        "toolVersion": TOOL_VERSION,
    });
    let mut s = serde_json::to_string_pretty(&v).expect("json values always serialize");
    s.push('\n');
    s
}

pub fn rat(r: &Rational) -> String {
    format_rational(r)
}

pub fn rats(rs: &[Rational]) -> Vec<String> {
    rs.iter().map(format_rational).collect()
}

pub fn rat_list(rs: &[Rational]) -> String {
    rats(rs).join(", ")
}
