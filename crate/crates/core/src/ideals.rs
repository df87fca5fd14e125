//! Ideals of a polynomial ring and the questions asked about them.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::exactnum::{FieldConfig, Scalar};
use crate::groebner::{buchberger, ReducedGB};
use crate::polyring::{parse_poly, OrderSpec, Polynomial, VariableSet};

type GbCache<F> = Arc<Mutex<HashMap<OrderSpec, Arc<ReducedGB<F>>>>>;

/// A finitely generated ideal with a per-order memo of reduced bases.
///
/// Clones share the memo; an `Ideal` is never mutated after construction,
/// so every cached basis belongs to the same ideal.
#[derive(Clone)]
pub struct Ideal<F> {
    vars: VariableSet,
    gens: Vec<Polynomial<F>>,
    cache: GbCache<F>,
}

impl<F: Scalar> Ideal<F> {
    pub fn new(vars: VariableSet, gens: Vec<Polynomial<F>>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.nvars() != vars.len()) {
            return Err(Error::VariableMismatch(format!(
                "generator with {} variables in ring over `{vars}`",
                g.nvars()
            )));
        }
        Ok(Self {
            vars,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Arc::default(),
        })
    }

    pub fn parse<S: AsRef<str>>(vars: &VariableSet, gens: &[S], cfg: &FieldConfig) -> Result<Self> {
        let polys = gens
            .iter()
            .map(|s| parse_poly(s.as_ref(), vars, cfg))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vars.clone(), polys)
    }

    pub fn zero(vars: VariableSet) -> Self {
        Self::new(vars, Vec::new()).expect("no generators")
    }

    pub fn unit(vars: VariableSet) -> Self {
        let one = Polynomial::one(vars.len());
        Self::new(vars, vec![one]).expect("arity matches")
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn gb(&self, order: &OrderSpec) -> Arc<ReducedGB<F>> {
        if let Some(gb) = self.cache.lock().expect("gb cache").get(order) {
            return gb.clone();
        }
        // Computed outside the lock; a racing writer produces the same basis.
        let gb = Arc::new(buchberger(&self.gens, self.nvars(), order));
        self.cache
            .lock()
            .expect("gb cache")
            .entry(*order)
            .or_insert(gb)
            .clone()
    }

    /// The reduced GrevLex basis, the default canonical form.
    pub fn basis(&self) -> Arc<ReducedGB<F>> {
        self.gb(&OrderSpec::GrevLex)
    }

    pub fn is_unit(&self) -> bool {
        self.basis().is_unit()
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = Polynomial<F>>) -> Result<Self> {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        Self::new(self.vars.clone(), gens)
    }

    /// The same ideal over a larger (or reordered) variable set.
    pub fn remap(&self, to: &VariableSet) -> Result<Self> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.remap(&self.vars, to))
            .collect::<Result<Vec<_>>>()?;
        Self::new(to.clone(), gens)
    }

    fn aligned(&self, other: &Self) -> Option<Self> {
        if other.vars == self.vars {
            Some(other.clone())
        } else {
            other.remap(&self.vars).ok()
        }
    }

    pub fn member(&self, f: &Polynomial<F>) -> bool {
        assert_eq!(
            f.nvars(),
            self.nvars(),
            "polynomial not over `{}`",
            self.vars
        );
        self.basis().contains(f)
    }

    /// `other ⊆ self`, generator by generator.
    pub fn contains_ideal(&self, other: &Self) -> bool {
        match self.aligned(other) {
            Some(o) => o.gens.iter().all(|g| self.member(g)),
            None => false,
        }
    }

    /// Exact equality: identical reduced GrevLex bases.
    pub fn ideal_equal(&self, other: &Self) -> bool {
        match self.aligned(other) {
            Some(o) => self.basis().elements() == o.basis().elements(),
            None => false,
        }
    }

    /// `I ∩ k[remaining variables]`, returned over the remaining variables
    /// in their original relative order.
    pub fn eliminate<S: AsRef<str>>(&self, front: &[S]) -> Result<Self> {
        for name in front {
            if !self.vars.contains(name.as_ref()) {
                return Err(Error::VariableMismatch(format!(
                    "cannot eliminate `{}`: not in `{}`",
                    name.as_ref(),
                    self.vars
                )));
            }
        }
        let rest = self.vars.without(front);
        let k = self.nvars() - rest.len();
        if k == 0 {
            return Ok(self.clone());
        }
        let front_names: Vec<&String> = self
            .vars
            .names()
            .iter()
            .filter(|n| !rest.contains(n))
            .collect();
        let mut names: Vec<String> = front_names.into_iter().cloned().collect();
        names.extend(rest.names().iter().cloned());
        let permuted = VariableSet::new(&names)?;
        let moved = self.remap(&permuted)?;
        let gb = moved.gb(&OrderSpec::elimination(k));
        let kept = gb
            .elements()
            .iter()
            .filter(|g| {
                g.terms()
                    .all(|(m, _)| m.exps()[..k].iter().all(|e| *e == 0))
            })
            .map(|g| g.remap(&permuted, &rest))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rest, kept)
    }

    /// Ring with a fresh variable `t` appended, plus this ideal and `1 - t f`.
    fn rabinowitsch(&self, f: &Polynomial<F>) -> Result<(Self, String)> {
        let (ext, t) = self.vars.with_fresh("t");
        let lifted = self.remap(&ext)?;
        let f = f.remap(&self.vars, &ext)?;
        let tf = &Polynomial::var(ext.len(), ext.len() - 1) * &f;
        let rel = &Polynomial::one(ext.len()) - &tf;
        Ok((lifted.with_generators([rel])?, t))
    }

    /// `I : f^∞`.
    pub fn saturate(&self, f: &Polynomial<F>) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (j, t) = self.rabinowitsch(f)?;
        j.eliminate(&[t])
    }

    pub fn radical_member(&self, f: &Polynomial<F>) -> bool {
        if f.is_zero() {
            return true;
        }
        let (j, _) = self
            .rabinowitsch(f)
            .expect("polynomial over the ideal's variables");
        j.is_unit()
    }

    /// Same zero set: each generator lies in the radical of the other ideal.
    pub fn radical_equal(&self, other: &Self) -> bool {
        let Some(o) = self.aligned(other) else {
            return false;
        };
        o.gens.iter().all(|g| self.radical_member(g))
            && self.gens.iter().all(|g| o.radical_member(g))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        let o = self
            .aligned(other)
            .ok_or_else(|| Error::VariableMismatch("intersection over different rings".into()))?;
        let (ext, t) = self.vars.with_fresh("t");
        let tv = Polynomial::var(ext.len(), ext.len() - 1);
        let one_minus_t = &Polynomial::one(ext.len()) - &tv;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(&tv * &g.remap(&self.vars, &ext)?);
        }
        for g in &o.gens {
            gens.push(&one_minus_t * &g.remap(&self.vars, &ext)?);
        }
        Self::new(ext, gens)?.eliminate(&[t])
    }

    /// Krull dimension from the leading monomials of the GrevLex basis:
    /// the largest variable subset containing the support of no leading
    /// monomial.
    pub fn krull_dim(&self) -> Result<usize> {
        let gb = self.basis();
        if gb.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let n = self.nvars();
        assert!(n < 64, "dimension search supports fewer than 64 variables");
        let masks: Vec<u64> = gb
            .leading_monomials()
            .iter()
            .map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i)))
            .collect();
        for size in (0..=n).rev() {
            let found = (0u64..(1u64 << n))
                .filter(|s| s.count_ones() as usize == size)
                .any(|s| masks.iter().all(|m| m & !s != 0));
            if found {
                return Ok(size);
            }
        }
        unreachable!("the empty set is independent for a proper ideal")
    }

    /// Finitely many points: every variable has a pure power among the
    /// leading monomials. The unit ideal counts as zero-dimensional.
    pub fn is_zero_dim(&self) -> bool {
        let gb = self.basis();
        if gb.is_unit() {
            return true;
        }
        let lms = gb.leading_monomials();
        (0..self.nvars()).all(|i| {
            lms.iter()
                .any(|m| m.pure_power().is_some_and(|(v, _)| v == i))
        })
    }

    pub fn display_basis(&self) -> String {
        let gb = self.basis();
        let parts: Vec<String> = gb
            .elements()
            .iter()
            .map(|g| g.display(&self.vars).to_string())
            .collect();
        format!("({})", parts.join(", "))
    }
}

impl<F: Scalar> fmt::Display for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|g| g.display(&self.vars).to_string())
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl<F: Scalar> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal[{}]{}", self.vars, self)
    }
}
