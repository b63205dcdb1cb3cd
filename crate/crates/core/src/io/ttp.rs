//! Reader for traveling-thief benchmark files (`CEIL_2D` coordinates).
//!
//! The route visits the nodes in index order (or in the order of an explicit
//! permutation). With a closed tour, the default, the vehicle returns to the
//! first node at the end, so a file with `N` nodes yields `N` legs and every
//! node can hold items. With an open tour the route stops at the last node,
//! which then cannot hold items.

use std::collections::HashMap;
use std::str::FromStr;

use crate::error::ParseError;
use crate::model::{Instance, ItemSpec, Vehicle};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TtpOptions {
    /// 1-based node permutation; identity when `None`.
    pub route: Option<Vec<usize>>,
    pub closed_tour: bool,
}

impl Default for TtpOptions {
    fn default() -> Self {
        TtpOptions {
            route: None,
            closed_tour: true,
        }
    }
}

/// `ceil` of the Euclidean distance, as in TSPLIB `CEIL_2D`.
pub fn ceil_distance(a: (f64, f64), b: (f64, f64)) -> f64 {
    ((a.0 - b.0).hypot(a.1 - b.1)).ceil()
}

fn field<T: FromStr>(token: &str, line: usize, what: &str) -> Result<T, ParseError> {
    token.parse().map_err(|_| ParseError::Line {
        line,
        message: format!("invalid {what} `{token}`"),
    })
}

pub fn looks_like_ttp(text: &str) -> bool {
    text.lines()
        .any(|l| l.trim_start().starts_with("NODE_COORD_SECTION"))
}

pub fn parse_ttp(text: &str, options: &TtpOptions) -> Result<Instance, ParseError> {
    enum Section {
        Header,
        Nodes,
        Items,
    }
    let mut keys: HashMap<String, (usize, String)> = HashMap::new();
    let mut coords: Vec<(usize, usize, f64, f64)> = Vec::new();
    // (line, index, profit, weight, node)
    let mut raw_items: Vec<(usize, f64, u64, usize)> = Vec::new();
    let mut section = Section::Header;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with("NODE_COORD_SECTION") {
            section = Section::Nodes;
            continue;
        }
        if trimmed.starts_with("ITEMS SECTION") {
            section = Section::Items;
            continue;
        }
        if trimmed == "EOF" {
            break;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match section {
            Section::Header => {
                let (key, value) = trimmed.split_once(':').ok_or_else(|| ParseError::Line {
                    line,
                    message: format!("expected `KEY: VALUE`, found `{trimmed}`"),
                })?;
                keys.insert(key.trim().to_string(), (line, value.trim().to_string()));
            }
            Section::Nodes => {
                if tokens.len() != 3 {
                    return Err(ParseError::Line {
                        line,
                        message: "expected `index x y`".into(),
                    });
                }
                coords.push((
                    line,
                    field(tokens[0], line, "node index")?,
                    field(tokens[1], line, "x coordinate")?,
                    field(tokens[2], line, "y coordinate")?,
                ));
            }
            Section::Items => {
                if tokens.len() != 4 {
                    return Err(ParseError::Line {
                        line,
                        message: "expected `index profit weight node`".into(),
                    });
                }
                let _: usize = field(tokens[0], line, "item index")?;
                raw_items.push((
                    line,
                    field(tokens[1], line, "profit")?,
                    field(tokens[2], line, "weight")?,
                    field(tokens[3], line, "assigned node")?,
                ));
            }
        }
    }

    let get = |key: &'static str| -> Result<(usize, &str), ParseError> {
        keys.get(key)
            .map(|(l, v)| (*l, v.as_str()))
            .ok_or(ParseError::MissingKey(key))
    };
    let name = get("PROBLEM NAME")?.1.to_string();
    let (line, dim) = get("DIMENSION")?;
    let dimension: usize = field(dim, line, "DIMENSION")?;
    let (line, count) = get("NUMBER OF ITEMS")?;
    let item_count: usize = field(count, line, "NUMBER OF ITEMS")?;
    let (line, cap) = get("CAPACITY OF KNAPSACK")?;
    let capacity: u64 = field(cap, line, "CAPACITY OF KNAPSACK")?;
    if capacity == 0 {
        return Err(ParseError::Line {
            line,
            message: "knapsack capacity must be at least 1".into(),
        });
    }
    let (line, v) = get("MIN SPEED")?;
    let v_min: f64 = field(v, line, "MIN SPEED")?;
    let (line, v) = get("MAX SPEED")?;
    let v_max: f64 = field(v, line, "MAX SPEED")?;
    let (line, r) = get("RENTING RATIO")?;
    let rent: f64 = field(r, line, "RENTING RATIO")?;
    if let Some((line, kind)) = keys.get("EDGE_WEIGHT_TYPE") {
        if kind != "CEIL_2D" {
            return Err(ParseError::Line {
                line: *line,
                message: format!("unsupported EDGE_WEIGHT_TYPE `{kind}`"),
            });
        }
    }

    if coords.len() != dimension {
        return Err(ParseError::Format(format!(
            "DIMENSION says {dimension}, found {} nodes",
            coords.len()
        )));
    }
    if raw_items.len() != item_count {
        return Err(ParseError::Format(format!(
            "NUMBER OF ITEMS says {item_count}, found {}",
            raw_items.len()
        )));
    }
    let mut position = vec![(0.0, 0.0); dimension + 1];
    let mut seen = vec![false; dimension + 1];
    for &(line, index, x, y) in &coords {
        if index == 0 || index > dimension || seen[index] {
            return Err(ParseError::Line {
                line,
                message: format!("node index {index} is out of range or repeated"),
            });
        }
        seen[index] = true;
        position[index] = (x, y);
    }

    let route: Vec<usize> = match &options.route {
        Some(route) => {
            let mut check = route.clone();
            check.sort_unstable();
            if check != (1..=dimension).collect::<Vec<_>>() {
                return Err(ParseError::Format(format!(
                    "route must be a permutation of 1..={dimension}"
                )));
            }
            route.clone()
        }
        None => (1..=dimension).collect(),
    };
    let mut city_of_node = vec![0; dimension + 1];
    for (pos, &node) in route.iter().enumerate() {
        city_of_node[node] = pos + 1;
    }
    let mut distances: Vec<f64> = route
        .windows(2)
        .map(|w| ceil_distance(position[w[0]], position[w[1]]))
        .collect();
    if options.closed_tour {
        distances.push(ceil_distance(
            position[route[dimension - 1]],
            position[route[0]],
        ));
    }
    let legs = distances.len();

    let mut items = Vec::with_capacity(raw_items.len());
    for &(line, profit, weight, node) in &raw_items {
        if node == 0 || node > dimension || city_of_node[node] > legs {
            return Err(ParseError::Line {
                line,
                message: format!(
                    "item assigned to node {node}, which cannot hold items on this route"
                ),
            });
        }
        items.push(ItemSpec {
            city: city_of_node[node],
            profit,
            weight,
        });
    }

    Ok(Instance::new(
        name,
        distances,
        Vehicle {
            v_min,
            v_max,
            capacity,
            rent,
        },
        items,
    )?)
}

/// Parses a whitespace-separated node permutation (1-based).
pub fn parse_route(text: &str) -> Result<Vec<usize>, ParseError> {
    text.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| ParseError::Format(format!("invalid node `{t}` in route")))
        })
        .collect()
}
