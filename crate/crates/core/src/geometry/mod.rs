//! Affine varieties, polynomial maps between them, and the morphism-level
//! computations: graphs, images, preimages, contractions, finiteness,
//! fibers and integral relations.

mod certificate;

use std::collections::HashMap;
use std::fmt;

use crate::decompose::squarefree_part;
use crate::error::{Error, Result};
use crate::exactnum::{solve_quadratic, FieldConfig, Scalar};
use crate::ideals::Ideal;
use crate::polyring::{parse_scalar, substitute, Monomial, OrderSpec, Polynomial, VariableSet};

pub use certificate::{integral_certificate, IntegralRelation};

/// A closed subset of affine space, given by any ideal that cuts it out.
#[derive(Clone)]
pub struct AffineVariety<F> {
    ideal: Ideal<F>,
}

impl<F: Scalar> AffineVariety<F> {
    pub fn new(ideal: Ideal<F>) -> Result<Self> {
        if ideal.is_unit() {
            return Err(Error::UnitIdeal);
        }
        Ok(Self { ideal })
    }

    /// All of affine space over `vars`.
    pub fn space(vars: VariableSet) -> Self {
        Self {
            ideal: Ideal::zero(vars),
        }
    }

    pub fn parse<S: AsRef<str>>(vars: &VariableSet, gens: &[S], cfg: &FieldConfig) -> Result<Self> {
        Self::new(Ideal::parse(vars, gens, cfg)?)
    }

    pub fn vars(&self) -> &VariableSet {
        self.ideal.vars()
    }

    pub fn ideal(&self) -> &Ideal<F> {
        &self.ideal
    }

    pub fn dim(&self) -> usize {
        self.ideal.krull_dim().expect("a variety is never empty")
    }

    /// Same point set.
    pub fn same_set(&self, other: &Self) -> bool {
        self.ideal.radical_equal(&other.ideal)
    }

    pub fn contains_point(&self, p: &Point<F>) -> bool {
        p.coords.len() == self.vars().len()
            && self
                .ideal
                .gens()
                .iter()
                .all(|g| g.eval(&p.coords).is_zero())
    }
}

impl<F: Scalar> fmt::Debug for AffineVariety<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V{:?}", self.ideal)
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point<F> {
    pub coords: Vec<F>,
}

impl<F: Scalar> Point<F> {
    pub fn new(coords: Vec<F>) -> Self {
        Self { coords }
    }

    /// Comma-separated field elements, e.g. `"-s/8, 0, 3/16"`.
    pub fn parse(text: &str, cfg: &FieldConfig) -> Result<Self> {
        let coords = text
            .split(',')
            .map(|c| parse_scalar(c.trim(), cfg))
            .collect::<Result<Vec<F>, _>>()?;
        Ok(Self::new(coords))
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// The maximal ideal `(x1 - p1, ..., xn - pn)`.
    pub fn ideal(&self, vars: &VariableSet) -> Result<Ideal<F>> {
        if vars.len() != self.coords.len() {
            return Err(Error::VariableMismatch(format!(
                "point with {} coordinates in ring over `{vars}`",
                self.coords.len()
            )));
        }
        let n = vars.len();
        let gens = self
            .coords
            .iter()
            .enumerate()
            .map(|(i, c)| &Polynomial::var(n, i) - &Polynomial::constant(n, c.clone()))
            .collect();
        Ideal::new(vars.clone(), gens)
    }
}

impl<F: Scalar> fmt::Display for Point<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl<F: Scalar> fmt::Debug for Point<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A polynomial map from a variety into affine space over `target_vars`.
#[derive(Clone)]
pub struct PolyMap<F> {
    source: AffineVariety<F>,
    target_vars: VariableSet,
    components: Vec<Polynomial<F>>,
}

impl<F: Scalar> PolyMap<F> {
    pub fn new(
        source: AffineVariety<F>,
        target_vars: VariableSet,
        components: Vec<Polynomial<F>>,
    ) -> Result<Self> {
        if components.len() != target_vars.len() {
            return Err(Error::VariableMismatch(format!(
                "{} components for target `{target_vars}`",
                components.len()
            )));
        }
        if components.iter().any(|c| c.nvars() != source.vars().len()) {
            return Err(Error::VariableMismatch(format!(
                "component not over the source variables `{}`",
                source.vars()
            )));
        }
        Ok(Self {
            source,
            target_vars,
            components,
        })
    }

    pub fn parse<S: AsRef<str>>(
        source: AffineVariety<F>,
        target_vars: VariableSet,
        components: &[S],
        cfg: &FieldConfig,
    ) -> Result<Self> {
        let comps = components
            .iter()
            .map(|c| crate::polyring::parse_poly(c.as_ref(), source.vars(), cfg))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(source, target_vars, comps)
    }

    pub fn source(&self) -> &AffineVariety<F> {
        &self.source
    }

    pub fn source_vars(&self) -> &VariableSet {
        self.source.vars()
    }

    pub fn target_vars(&self) -> &VariableSet {
        &self.target_vars
    }

    pub fn components(&self) -> &[Polynomial<F>] {
        &self.components
    }

    /// The same map with a different source variety over the same variables.
    pub fn restricted(&self, source: AffineVariety<F>) -> Result<Self> {
        Self::new(source, self.target_vars.clone(), self.components.clone())
    }

    pub fn apply(&self, p: &Point<F>) -> Point<F> {
        Point::new(self.components.iter().map(|c| c.eval(&p.coords)).collect())
    }

    fn joint_vars(&self) -> Result<VariableSet> {
        self.source_vars().concat(&self.target_vars)
    }

    /// `J` plus `t_j - φ_j` in the joint ring, source variables first.
    fn graph_with(&self, j: &Ideal<F>) -> Result<Ideal<F>> {
        let joint = self.joint_vars()?;
        let mut gens = Vec::new();
        for g in j.gens() {
            gens.push(g.remap(self.source_vars(), &joint)?);
        }
        let offset = self.source_vars().len();
        for (k, c) in self.components.iter().enumerate() {
            let t = Polynomial::var(joint.len(), offset + k);
            gens.push(&t - &c.remap(self.source_vars(), &joint)?);
        }
        Ideal::new(joint, gens)
    }

    fn check_source_ideal(&self, j: &Ideal<F>) -> Result<()> {
        if j.vars() != self.source_vars() {
            return Err(Error::VariableMismatch(format!(
                "ideal over `{}`, map source is over `{}`",
                j.vars(),
                self.source_vars()
            )));
        }
        Ok(())
    }
}

impl<F: Scalar> fmt::Debug for PolyMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .components
            .iter()
            .map(|c| c.display(self.source_vars()).to_string())
            .collect();
        write!(
            f,
            "{:?} -> [{}] ({})",
            self.source,
            self.target_vars,
            comps.join(", ")
        )
    }
}

#[derive(Clone)]
pub enum FiberKind<F> {
    Points(Vec<Point<F>>),
    Unsolved(Ideal<F>),
}

#[derive(Clone)]
pub struct FiberResult<F> {
    pub kind: FiberKind<F>,
    pub zero_dimensional: bool,
}

impl<F: Scalar> FiberResult<F> {
    pub fn points(&self) -> Option<&[Point<F>]> {
        match &self.kind {
            FiberKind::Points(p) => Some(p),
            FiberKind::Unsolved(_) => None,
        }
    }
}

impl<F: Scalar> fmt::Debug for FiberResult<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            FiberKind::Points(p) => write!(f, "Points{p:?}"),
            FiberKind::Unsolved(i) => write!(
                f,
                "Unsolved{i:?} zero_dimensional={}",
                self.zero_dimensional
            ),
        }
    }
}

/// Ideal of the graph of `φ` in the ring over source and target variables.
pub fn graph_ideal<F: Scalar>(phi: &PolyMap<F>) -> Result<Ideal<F>> {
    phi.graph_with(phi.source.ideal())
}

/// Closure of `φ(V(Z))`, for `Z` containing the source ideal.
pub fn image_closure<F: Scalar>(phi: &PolyMap<F>, z: &Ideal<F>) -> Result<Ideal<F>> {
    phi.check_source_ideal(z)?;
    let z = z.with_generators(phi.source.ideal().gens().iter().cloned())?;
    phi.graph_with(&z)?.eliminate(phi.source_vars().names())
}

/// `I_source + J∘φ`.
pub fn preimage<F: Scalar>(phi: &PolyMap<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    let j = if j.vars() == phi.target_vars() {
        j.clone()
    } else {
        j.remap(phi.target_vars())?
    };
    let assignment: HashMap<String, Polynomial<F>> = phi
        .target_vars
        .names()
        .iter()
        .cloned()
        .zip(phi.components.iter().cloned())
        .collect();
    let mut gens = phi.source.ideal().gens().to_vec();
    for g in j.gens() {
        gens.push(substitute(
            g,
            phi.target_vars(),
            &assignment,
            phi.source_vars(),
        )?);
    }
    Ideal::new(phi.source_vars().clone(), gens)
}

/// `λ⁻¹(J)` as an ideal of the target polynomial ring.
pub fn contract<F: Scalar>(phi: &PolyMap<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    image_closure(phi, j)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finiteness {
    pub finite: bool,
    /// Smallest pure-power leading exponent for each source variable that has one.
    pub witness: Vec<(String, u32)>,
}

/// Pure-power leading monomial test on the elimination-order basis of the graph.
pub fn is_finite<F: Scalar>(phi: &PolyMap<F>) -> Result<Finiteness> {
    let graph = graph_ideal(phi)?;
    let n = phi.source_vars().len();
    let gb = graph.gb(&OrderSpec::elimination(n));
    let lms = gb.leading_monomials();
    let mut witness = Vec::new();
    for (i, name) in phi.source_vars().names().iter().enumerate() {
        let best = lms
            .iter()
            .filter_map(|m| m.pure_power().filter(|(v, _)| *v == i).map(|(_, e)| e))
            .min();
        if let Some(e) = best {
            witness.push((name.clone(), e));
        }
    }
    Ok(Finiteness {
        finite: witness.len() == n,
        witness,
    })
}

/// The fiber over `q`, solved explicitly when it is a finite set reachable
/// by back-substitution through eliminants of degree at most 2.
pub fn fiber<F: Scalar>(
    phi: &PolyMap<F>,
    q: &Point<F>,
    cfg: &FieldConfig,
) -> Result<FiberResult<F>> {
    if q.dim() != phi.target_vars.len() {
        return Err(Error::VariableMismatch(format!(
            "point {q} has {} coordinates, target is `{}`",
            q.dim(),
            phi.target_vars
        )));
    }
    let n = phi.source_vars().len();
    let mut gens = phi.source.ideal().gens().to_vec();
    for (c, v) in phi.components.iter().zip(&q.coords) {
        gens.push(c - &Polynomial::constant(n, v.clone()));
    }
    let ideal = Ideal::new(phi.source_vars().clone(), gens)?;
    if ideal.is_unit() {
        return Ok(FiberResult {
            kind: FiberKind::Points(Vec::new()),
            zero_dimensional: true,
        });
    }
    if !ideal.is_zero_dim() {
        return Ok(FiberResult {
            kind: FiberKind::Unsolved(ideal),
            zero_dimensional: false,
        });
    }
    let mut points = Vec::new();
    let mut fixed = vec![None; n];
    if back_substitute(&ideal, n, &mut fixed, &mut points, cfg)? {
        points.sort();
        points.dedup();
        Ok(FiberResult {
            kind: FiberKind::Points(points),
            zero_dimensional: true,
        })
    } else {
        Ok(FiberResult {
            kind: FiberKind::Unsolved(ideal),
            zero_dimensional: true,
        })
    }
}

/// Solves for variables `k-1, k-2, ..., 0` in turn; later ones are already
/// fixed as linear generators. Returns false when some step is out of reach.
fn back_substitute<F: Scalar>(
    ideal: &Ideal<F>,
    k: usize,
    fixed: &mut Vec<Option<F>>,
    out: &mut Vec<Point<F>>,
    cfg: &FieldConfig,
) -> Result<bool> {
    let gb = ideal.gb(&OrderSpec::Lex);
    if gb.is_unit() {
        return Ok(true);
    }
    if k == 0 {
        out.push(Point::new(
            fixed.iter().map(|c| c.clone().expect("solved")).collect(),
        ));
        return Ok(true);
    }
    let v = k - 1;
    let Some(e) = gb
        .elements()
        .iter()
        .filter(|g| g.univariate_var() == Some(v))
        .min_by_key(|g| g.degree_in(v))
    else {
        return Ok(false);
    };
    let e = squarefree_part(e)?;
    let c = |d: u32| e.coeff(&Monomial::var(e.nvars(), v, d));
    let roots: Vec<F> = match e.degree_in(v) {
        1 => vec![-c(0) / c(1)],
        2 => {
            let roots = solve_quadratic(&c(2), &c(1), &c(0), cfg)?;
            if roots.is_empty() {
                // points exist, but not over this field
                return Ok(false);
            }
            roots.into_iter().map(|r| r.value).collect()
        }
        _ => return Ok(false),
    };
    let n = ideal.nvars();
    for r in roots {
        let lin = &Polynomial::var(n, v) - &Polynomial::constant(n, r.clone());
        let next = ideal.with_generators([lin])?;
        fixed[v] = Some(r);
        if !back_substitute(&next, v, fixed, out, cfg)? {
            return Ok(false);
        }
    }
    fixed[v] = None;
    Ok(true)
}

/// `f` vanishes on `V` in the ideal-theoretic sense: `f ∈ I(V)` as given.
pub fn verify_identity<F: Scalar>(f: &Polynomial<F>, v: &AffineVariety<F>) -> bool {
    f.nvars() == v.vars().len() && v.ideal.member(f)
}

/// Whether the image of `φ` is dense in `Y`.
pub fn is_dominant<F: Scalar>(phi: &PolyMap<F>, y: &AffineVariety<F>) -> Result<bool> {
    let img = image_closure(phi, phi.source.ideal())?;
    let target = if y.vars() == phi.target_vars() {
        y.ideal.clone()
    } else {
        y.ideal.remap(phi.target_vars())?
    };
    Ok(img.radical_equal(&target))
}

#[cfg(test)]
mod tests;
