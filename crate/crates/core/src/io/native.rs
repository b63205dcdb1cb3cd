//! Explicit-distance text format.
//!
//! ```text
//! FORMAT: PWT-NATIVE
//! NAME: E2
//! LEGS: 2
//! ITEM_COUNT: 2
//! CAPACITY: 3
//! MIN_SPEED: 1
//! MAX_SPEED: 2
//! RENT: 1
//! DISTANCES
//! 1
//! 1
//! ITEMS
//! 1 2 1
//! 2 3 2
//! ```
//!
//! Item rows are `city profit weight` in original input order. Reals are
//! written in their shortest round-trip decimal form, so parsing a written
//! instance restores every field bit for bit.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::ParseError;
use crate::model::{Instance, ItemSpec, Vehicle};

pub const MAGIC: &str = "PWT-NATIVE";

pub fn write_native(instance: &Instance) -> String {
    let v = instance.vehicle();
    let items = instance.item_specs_in_input_order();
    let mut out = String::new();
    // writing to a String cannot fail
    let _ = writeln!(out, "FORMAT: {MAGIC}");
    let _ = writeln!(out, "NAME: {}", instance.name());
    let _ = writeln!(out, "LEGS: {}", instance.cities());
    let _ = writeln!(out, "ITEM_COUNT: {}", items.len());
    let _ = writeln!(out, "CAPACITY: {}", v.capacity);
    let _ = writeln!(out, "MIN_SPEED: {}", v.v_min);
    let _ = writeln!(out, "MAX_SPEED: {}", v.v_max);
    let _ = writeln!(out, "RENT: {}", v.rent);
    out.push_str("DISTANCES\n");
    for d in instance.distances() {
        let _ = writeln!(out, "{d}");
    }
    out.push_str("ITEMS\n");
    for it in &items {
        let _ = writeln!(out, "{} {} {}", it.city, it.profit, it.weight);
    }
    out
}

#[derive(PartialEq)]
enum Section {
    Header,
    Distances,
    Items,
}

fn field<T: FromStr>(token: &str, line: usize, what: &str) -> Result<T, ParseError> {
    token.parse().map_err(|_| ParseError::Line {
        line,
        message: format!("invalid {what} `{token}`"),
    })
}

fn header<'a>(
    keys: &HashMap<&str, (usize, &'a str)>,
    key: &'static str,
) -> Result<(usize, &'a str), ParseError> {
    keys.get(key).copied().ok_or(ParseError::MissingKey(key))
}

pub fn parse_native(text: &str) -> Result<Instance, ParseError> {
    let mut keys: HashMap<&str, (usize, &str)> = HashMap::new();
    let mut distances = Vec::new();
    let mut items = Vec::new();
    let mut section = Section::Header;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        match trimmed {
            "DISTANCES" => {
                section = Section::Distances;
                continue;
            }
            "ITEMS" => {
                section = Section::Items;
                continue;
            }
            _ => {}
        }
        match section {
            Section::Header => {
                let (key, value) = trimmed.split_once(':').ok_or_else(|| ParseError::Line {
                    line,
                    message: format!("expected `KEY: VALUE`, found `{trimmed}`"),
                })?;
                keys.insert(key.trim(), (line, value.trim()));
            }
            Section::Distances => distances.push(field::<f64>(trimmed, line, "distance")?),
            Section::Items => {
                let tokens: Vec<&str> = trimmed.split_whitespace().collect();
                if tokens.len() != 3 {
                    return Err(ParseError::Line {
                        line,
                        message: format!("expected `city profit weight`, found `{trimmed}`"),
                    });
                }
                items.push(ItemSpec {
                    city: field(tokens[0], line, "city")?,
                    profit: field(tokens[1], line, "profit")?,
                    weight: field(tokens[2], line, "weight")?,
                });
            }
        }
    }

    let (line, format) = header(&keys, "FORMAT")?;
    if format != MAGIC {
        return Err(ParseError::Line {
            line,
            message: format!("unknown format `{format}`"),
        });
    }
    let name = header(&keys, "NAME")?.1;
    let (line, legs) = header(&keys, "LEGS")?;
    let legs: usize = field(legs, line, "LEGS")?;
    if legs != distances.len() {
        return Err(ParseError::Format(format!(
            "LEGS says {legs}, DISTANCES has {}",
            distances.len()
        )));
    }
    let (line, count) = header(&keys, "ITEM_COUNT")?;
    let count: usize = field(count, line, "ITEM_COUNT")?;
    if count != items.len() {
        return Err(ParseError::Format(format!(
            "ITEM_COUNT says {count}, ITEMS has {}",
            items.len()
        )));
    }
    let parse_key = |key: &'static str| -> Result<f64, ParseError> {
        let (line, value) = header(&keys, key)?;
        field(value, line, key)
    };
    let (line, capacity) = header(&keys, "CAPACITY")?;
    let vehicle = Vehicle {
        capacity: field(capacity, line, "CAPACITY")?,
        v_min: parse_key("MIN_SPEED")?,
        v_max: parse_key("MAX_SPEED")?,
        rent: parse_key("RENT")?,
    };
    Ok(Instance::new(name, distances, vehicle, items)?)
}
