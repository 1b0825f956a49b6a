use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Below this magnitude a real is eigensolver noise and prints as zero.
const ZERO_SNAP: f64 = 1e-12;

/// Rounds every non-integer number to 12 significant digits so that
/// reports are byte-stable across platforms.
pub fn round_reals(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().expect("f64 number");
            let mut r: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
            if r.abs() < ZERO_SNAP {
                r = 0.0;
            }
            *v = json!(r);
        }
        Value::Array(items) => items.iter_mut().for_each(round_reals),
        Value::Object(map) => map.values_mut().for_each(round_reals),
        _ => {}
    }
}

/// Hex SHA-256 of a canonical edge list.
pub fn digest(canonical: &str) -> String {
    Sha256::digest(canonical.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

pub fn report(command: &str, input_digest: Option<String>, mut payload: Value) -> String {
    round_reals(&mut payload);
    let mut out = Map::new();
    out.insert("command".into(), json!(command));
    out.insert("input_digest".into(), json!(input_digest));
    out.insert("payload".into(), payload);
    out.insert("version".into(), json!(VERSION));
    let mut text = serde_json::to_string_pretty(&Value::Object(out)).expect("JSON values serialize");
    text.push('\n');
    text
}

pub fn error_report(command: &str, code: &str, message: &str) -> String {
    let v = json!({
        "command": command,
        "error": { "code": code, "message": message },
        "version": VERSION,
    });
    serde_json::to_string_pretty(&v).expect("JSON values serialize")
}
