//! Line-oriented scenario files.
//!
//! Each record reads `name = kind : payload`; `#` starts a comment. Kinds:
//!
//! ```text
//! field  = field  : qsqrt:3
//! src    = vars   : x,y,z
//! f      = poly   : src | x^2 - z
//! X      = ideal  : src | x^2+y^2+z^2-z, z-1/4
//! phi    = map    : X -> tgt | (1-2*z)*x, (1-3*z)*y, (1-z)*z
//! q      = point  : tgt | -s/8, 0, 3/16
//! F      = points : src | -s/4, 0, 1/4 ; s/4, 0, 3/4
//! r      = int    : 1
//! ```
//!
//! Records may only refer to names defined above them. A `field` record, if
//! present, must precede every polynomial payload.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactnum::{FieldConfig, QuadExt};
use crate::geometry::{AffineVariety, Point, PolyMap};
use crate::ideals::Ideal;
use crate::polyring::{parse_poly, Polynomial, VariableSet};

type F = QuadExt;

#[derive(Clone)]
pub enum Entry {
    Field(FieldConfig),
    Vars(VariableSet),
    Poly {
        vars: VariableSet,
        poly: Polynomial<F>,
    },
    Ideal(Ideal<F>),
    Map(PolyMap<F>),
    Point {
        vars: VariableSet,
        point: Point<F>,
    },
    Points {
        vars: VariableSet,
        points: Vec<Point<F>>,
    },
    Int(i64),
}

impl Entry {
    fn kind(&self) -> &'static str {
        match self {
            Entry::Field(_) => "field",
            Entry::Vars(_) => "vars",
            Entry::Poly { .. } => "poly",
            Entry::Ideal(_) => "ideal",
            Entry::Map(_) => "map",
            Entry::Point { .. } => "point",
            Entry::Points { .. } => "points",
            Entry::Int(_) => "int",
        }
    }
}

/// Every named object of a scenario file, in definition order.
#[derive(Clone)]
pub struct Scenario {
    field: FieldConfig,
    names: Vec<String>,
    entries: HashMap<String, Entry>,
}

impl std::fmt::Debug for Scenario {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Scenario")
            .field("field", &self.field)
            .field("names", &self.names)
            .finish()
    }
}

/// Splits `text` into `name`, `kind` and `payload` for each record line,
/// keeping 1-based line numbers.
fn records(text: &str) -> Result<Vec<(usize, String, String, String)>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: &str| Error::Scenario {
            line,
            message: message.to_string(),
        };
        let (name, rest) = content
            .split_once('=')
            .ok_or_else(|| err("expected `name = kind : payload`"))?;
        let (kind, payload) = rest
            .split_once(':')
            .ok_or_else(|| err("expected `:` after the record kind"))?;
        let name = name.trim();
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(err("record names use letters, digits and `_`"));
        }
        out.push((
            line,
            name.to_string(),
            kind.trim().to_string(),
            payload.trim().to_string(),
        ));
    }
    Ok(out)
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Self> {
        let mut s = Scenario {
            field: FieldConfig::rationals(),
            names: Vec::new(),
            entries: HashMap::new(),
        };
        for (line, name, kind, payload) in records(text)? {
            let at = |e: Error| match e {
                Error::Scenario { .. } => e,
                other => Error::Scenario {
                    line,
                    message: other.to_string(),
                },
            };
            if s.entries.contains_key(&name) {
                return Err(Error::Scenario {
                    line,
                    message: format!("`{name}` is defined twice"),
                });
            }
            let entry = s.entry(&kind, &payload).map_err(at)?;
            if let Entry::Field(cfg) = &entry {
                if s.entries.values().any(|e| !matches!(e, Entry::Vars(_))) {
                    return Err(Error::Scenario {
                        line,
                        message: "the field must be set before any polynomial data".into(),
                    });
                }
                s.field = *cfg;
            }
            s.names.push(name.clone());
            s.entries.insert(name, entry);
        }
        Ok(s)
    }

    fn entry(&self, kind: &str, payload: &str) -> Result<Entry> {
        let cfg = &self.field;
        let with_vars = |payload: &str| -> Result<(VariableSet, String)> {
            let (vars, body) = payload
                .split_once('|')
                .ok_or_else(|| Error::InvalidArgument("expected `varset | ...`".into()))?;
            Ok((self.vars(vars.trim())?.clone(), body.trim().to_string()))
        };
        let list = |body: &str, sep: char| -> Vec<String> {
            body.split(sep)
                .map(str::trim)
                .filter(|p| !p.is_empty())
                .map(String::from)
                .collect()
        };
        Ok(match kind {
            "field" => Entry::Field(payload.parse()?),
            "vars" => Entry::Vars(VariableSet::parse(payload)?),
            "poly" => {
                let (vars, body) = with_vars(payload)?;
                let poly = parse_poly(&body, &vars, cfg)?;
                Entry::Poly { vars, poly }
            }
            "ideal" => {
                let (vars, body) = with_vars(payload)?;
                Entry::Ideal(Ideal::parse(&vars, &list(&body, ','), cfg)?)
            }
            "map" => {
                let (head, body) = payload.split_once('|').ok_or_else(|| {
                    Error::InvalidArgument("expected `source -> target | ...`".into())
                })?;
                let (src, tgt) = head
                    .split_once("->")
                    .ok_or_else(|| Error::InvalidArgument("expected `source -> target`".into()))?;
                let source = AffineVariety::new(self.ideal(src.trim())?.clone())?;
                let target = self.vars(tgt.trim())?.clone();
                Entry::Map(PolyMap::parse(source, target, &list(body, ','), cfg)?)
            }
            "point" => {
                let (vars, body) = with_vars(payload)?;
                let point = Point::parse(&body, cfg)?;
                check_arity(&vars, &point)?;
                Entry::Point { vars, point }
            }
            "points" => {
                let (vars, body) = with_vars(payload)?;
                let mut points = Vec::new();
                for p in list(&body, ';') {
                    let point = Point::parse(&p, cfg)?;
                    check_arity(&vars, &point)?;
                    points.push(point);
                }
                Entry::Points { vars, points }
            }
            "int" => {
                Entry::Int(payload.parse().map_err(|_| {
                    Error::InvalidArgument(format!("`{payload}` is not an integer"))
                })?)
            }
            other => {
                return Err(Error::InvalidArgument(format!(
                    "unknown record kind `{other}`"
                )))
            }
        })
    }

    pub fn field(&self) -> &FieldConfig {
        &self.field
    }

    /// Record names in definition order.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn get(&self, name: &str) -> Option<&Entry> {
        self.entries.get(name)
    }

    fn expect<'a, T>(
        &'a self,
        name: &str,
        kind: &str,
        pick: impl Fn(&'a Entry) -> Option<T>,
    ) -> Result<T> {
        let entry = self
            .entries
            .get(name)
            .ok_or_else(|| Error::MissingEntry(name.to_string()))?;
        pick(entry).ok_or_else(|| {
            Error::InvalidArgument(format!("`{name}` is a {}, expected a {kind}", entry.kind()))
        })
    }

    pub fn vars(&self, name: &str) -> Result<&VariableSet> {
        self.expect(name, "vars", |e| match e {
            Entry::Vars(v) => Some(v),
            _ => None,
        })
    }

    pub fn poly(&self, name: &str) -> Result<(&VariableSet, &Polynomial<F>)> {
        self.expect(name, "poly", |e| match e {
            Entry::Poly { vars, poly } => Some((vars, poly)),
            _ => None,
        })
    }

    pub fn ideal(&self, name: &str) -> Result<&Ideal<F>> {
        self.expect(name, "ideal", |e| match e {
            Entry::Ideal(i) => Some(i),
            _ => None,
        })
    }

    pub fn map(&self, name: &str) -> Result<&PolyMap<F>> {
        self.expect(name, "map", |e| match e {
            Entry::Map(m) => Some(m),
            _ => None,
        })
    }

    pub fn point(&self, name: &str) -> Result<&Point<F>> {
        self.expect(name, "point", |e| match e {
            Entry::Point { point, .. } => Some(point),
            _ => None,
        })
    }

    pub fn points(&self, name: &str) -> Result<&[Point<F>]> {
        self.expect(name, "points", |e| match e {
            Entry::Points { points, .. } => Some(points.as_slice()),
            _ => None,
        })
    }

    pub fn int(&self, name: &str) -> Result<i64> {
        self.expect(name, "int", |e| match e {
            Entry::Int(n) => Some(*n),
            _ => None,
        })
    }
}

fn check_arity(vars: &VariableSet, p: &Point<F>) -> Result<()> {
    if vars.len() != p.dim() {
        return Err(Error::VariableMismatch(format!(
            "point {p} does not match `{vars}`"
        )));
    }
    Ok(())
}

/// Rewrites the payload of record `name`, replacing `from` with `to`.
/// Fails if the record does not exist or does not contain `from`.
pub fn mutate(text: &str, name: &str, from: &str, to: &str) -> Result<String> {
    let mut hit = false;
    let lines: Vec<String> = text
        .lines()
        .map(|line| {
            let head = line.split('=').next().unwrap_or("").trim();
            if !hit && head == name && line.contains(from) {
                hit = true;
                let (lhs, rhs) = line.split_once(':').expect("record line");
                format!("{lhs}:{}", rhs.replacen(from, to, 1))
            } else {
                line.to_string()
            }
        })
        .collect();
    if !hit {
        return Err(Error::MissingEntry(format!("{name} containing `{from}`")));
    }
    Ok(lines.join("\n") + "\n")
}
