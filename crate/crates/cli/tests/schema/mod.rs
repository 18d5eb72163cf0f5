//! Minimal JSON Schema checker covering exactly the subset the shipped
//! schema file uses: $ref into $defs, oneOf, enum, const, type, properties,
//! required, additionalProperties (bool or schema), items, minimum.
//!
//! This is a test oracle for the published report schema, deliberately
//! independent of how the reports are produced.

use serde_json::Value;

pub struct Schema {
    root: Value,
}

impl Schema {
    pub fn load() -> Schema {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../schemas/report.schema.json");
        let text = std::fs::read_to_string(path).expect("schema file present in the repo");
        Schema { root: serde_json::from_str(&text).expect("schema file parses") }
    }

    pub fn validate(&self, value: &Value) -> Result<(), String> {
        self.check(&self.root, value, "$")
    }

    /// Validates against one named definition, e.g. `catalogEntry`.
    pub fn validate_def(&self, def: &str, value: &Value) -> Result<(), String> {
        let node = self
            .root
            .get("$defs")
            .and_then(|d| d.get(def))
            .unwrap_or_else(|| panic!("definition {def} exists"));
        self.check(node, value, "$")
    }

    fn resolve<'a>(&'a self, reference: &str) -> &'a Value {
        let mut node = &self.root;
        for step in reference.trim_start_matches("#/").split('/') {
            node = node.get(step).unwrap_or_else(|| panic!("dangling $ref {reference}"));
        }
        node
    }

    fn check(&self, schema: &Value, value: &Value, path: &str) -> Result<(), String> {
        if let Some(Value::String(reference)) = schema.get("$ref") {
            return self.check(self.resolve(reference), value, path);
        }
        if let Some(Value::Array(options)) = schema.get("oneOf") {
            let hits = options.iter().filter(|s| self.check(s, value, path).is_ok()).count();
            return if hits == 1 {
                Ok(())
            } else {
                Err(format!("{path}: matched {hits} of {} oneOf branches", options.len()))
            };
        }
        if let Some(expected) = schema.get("const") {
            if value != expected {
                return Err(format!("{path}: expected const {expected}"));
            }
        }
        if let Some(Value::Array(allowed)) = schema.get("enum") {
            if !allowed.contains(value) {
                return Err(format!("{path}: {value} not in enum"));
            }
        }
        if let Some(Value::String(ty)) = schema.get("type") {
            let ok = match ty.as_str() {
                "object" => value.is_object(),
                "array" => value.is_array(),
                "string" => value.is_string(),
                "integer" => value.is_i64() || value.is_u64(),
                "number" => value.is_number(),
                "boolean" => value.is_boolean(),
                "null" => value.is_null(),
                other => panic!("unsupported type {other}"),
            };
            if !ok {
                return Err(format!("{path}: expected type {ty}, got {value}"));
            }
        }
        if let Some(min) = schema.get("minimum").and_then(Value::as_i64) {
            if let Some(n) = value.as_i64() {
                if n < min {
                    return Err(format!("{path}: {n} below minimum {min}"));
                }
            }
        }
        if let Some(Value::Array(required)) = schema.get("required") {
            if let Some(obj) = value.as_object() {
                for key in required.iter().filter_map(Value::as_str) {
                    if !obj.contains_key(key) {
                        return Err(format!("{path}: missing required key {key:?}"));
                    }
                }
            }
        }
        if let Some(obj) = value.as_object() {
            let props = schema.get("properties").and_then(Value::as_object);
            for (key, member) in obj {
                let member_path = format!("{path}.{key}");
                if let Some(prop_schema) = props.and_then(|p| p.get(key)) {
                    self.check(prop_schema, member, &member_path)?;
                } else {
                    match schema.get("additionalProperties") {
                        Some(Value::Bool(false)) => {
                            return Err(format!("{path}: unexpected key {key:?}"))
                        }
                        Some(extra) if extra.is_object() => {
                            self.check(extra, member, &member_path)?
                        }
                        _ => {}
                    }
                }
            }
        }
        if let (Some(items), Some(array)) = (schema.get("items"), value.as_array()) {
            for (i, member) in array.iter().enumerate() {
                self.check(items, member, &format!("{path}[{i}]"))?;
            }
        }
        Ok(())
    }
}

#[test]
fn validator_distinguishes_good_from_bad() {
    let schema = Schema::load();
    let good: Value = serde_json::json!({
        "graph6": "Cl", "n": 4, "m": 4, "diameter": 2, "bipartite": true,
        "gt_edb_values": [1], "gt_db_values": "all", "gt_nedb": null,
        "gt_sedb_values": [1], "convention": "strict"
    });
    schema.validate_def("catalogEntry", &good).unwrap();
    schema.validate(&good).unwrap();

    let mut bad = good.clone();
    bad["convention"] = serde_json::json!("loose");
    assert!(schema.validate_def("catalogEntry", &bad).is_err());

    let mut extra = good;
    extra["surprise"] = serde_json::json!(1);
    assert!(schema.validate_def("catalogEntry", &extra).is_err());
}
