//! Sparse multivariate polynomials, monomial orders and the expression parser.

mod order;
mod parse;
mod poly;

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

pub use order::{BaseOrder, OrderSpec};
pub use parse::{parse_poly, parse_scalar, ParseError};
pub use poly::{substitute, Polynomial, PolynomialDisplay};

/// Ordered list of distinct variable names; position is precedence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableSet {
    names: Vec<String>,
}

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => chars.all(|c| c.is_ascii_digit()),
        _ => false,
    }
}

impl VariableSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref().trim();
            if !valid_identifier(n) {
                return Err(Error::InvalidArgument(format!(
                    "`{n}` is not a variable name (letter followed by digits)"
                )));
            }
            if n == "s" {
                return Err(Error::InvalidArgument(
                    "`s` is reserved for the extension generator".into(),
                ));
            }
            if !seen.insert(n.to_string()) {
                return Err(Error::InvalidArgument(format!("duplicate variable `{n}`")));
            }
            out.push(n.to_string());
        }
        Ok(Self { names: out })
    }

    /// Parses a comma separated list such as `x,y,z`.
    pub fn parse(list: &str) -> Result<Self> {
        let names: Vec<&str> = list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        Self::new(&names)
    }

    pub fn empty() -> Self {
        Self { names: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    /// `self` followed by `other`; the two sets must be disjoint.
    pub fn concat(&self, other: &VariableSet) -> Result<Self> {
        if let Some(clash) = other.names.iter().find(|n| self.contains(n)) {
            return Err(Error::VariableMismatch(format!(
                "variable `{clash}` appears on both sides"
            )));
        }
        let mut names = self.names.clone();
        names.extend(other.names.iter().cloned());
        Ok(Self { names })
    }

    /// The set with the given names removed (unknown names are ignored).
    pub fn without<S: AsRef<str>>(&self, drop: &[S]) -> Self {
        Self {
            names: self
                .names
                .iter()
                .filter(|n| !drop.iter().any(|d| d.as_ref() == n.as_str()))
                .cloned()
                .collect(),
        }
    }

    /// Appends a fresh variable whose name starts with `base`.
    pub fn with_fresh(&self, base: &str) -> (Self, String) {
        let mut name = base.to_string();
        let mut k = 1;
        while self.contains(&name) {
            name = format!("{base}{k}");
            k += 1;
        }
        let mut names = self.names.clone();
        names.push(name.clone());
        (Self { names }, name)
    }
}

impl fmt::Display for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(","))
    }
}

/// Exponent vector with a cached total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Self { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Self::new(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Self::new(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(a, b)| a - b)
                .collect(),
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `Some((i, e))` when the monomial is `x_i^e` with `e > 0`.
    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut nz = self.exps.iter().enumerate().filter(|(_, e)| **e > 0);
        let first = nz.next()?;
        nz.next().is_none().then_some((first.0, *first.1))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
    }

    pub fn permuted(&self, perm: &[usize], nvars: usize) -> Monomial {
        let mut exps = vec![0; nvars];
        for (i, e) in self.exps.iter().enumerate() {
            exps[perm[i]] = *e;
        }
        Monomial::new(exps)
    }

    pub fn render(&self, vars: &VariableSet) -> String {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, e)| match e {
                1 => vars.names()[i].clone(),
                e => format!("{}^{}", vars.names()[i], e),
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}
