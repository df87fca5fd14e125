//! Multivariate division and Buchberger's algorithm.
//!
//! Internally polynomials are kept as term vectors sorted in descending order
//! under the active monomial order, so that every reduction step is a linear
//! merge.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::polyring::{Monomial, OrderSpec, Polynomial};

type Terms<F> = Vec<(Monomial, F)>;

fn sorted<F: Scalar>(p: &Polynomial<F>, order: &OrderSpec) -> Terms<F> {
    p.sorted_terms(order)
        .into_iter()
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect()
}

fn unsorted<F: Scalar>(nvars: usize, t: Terms<F>) -> Polynomial<F> {
    Polynomial::from_terms(nvars, t)
}

/// `a - c * m * b`, both operands sorted descending.
fn sub_scaled<F: Scalar>(
    a: &[(Monomial, F)],
    c: &F,
    m: &Monomial,
    b: &[(Monomial, F)],
    order: &OrderSpec,
) -> Terms<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let mut bj: Option<(Monomial, F)> = b
        .first()
        .map(|(bm, bc)| (bm.mul(m), bc.clone() * c.clone()));
    loop {
        match (a.get(i), bj.as_ref()) {
            (None, None) => break,
            (Some(x), None) => {
                out.push(x.clone());
                i += 1;
                continue;
            }
            (None, Some(y)) => {
                out.push((y.0.clone(), -y.1.clone()));
            }
            (Some(x), Some(y)) => match order.cmp(&x.0, &y.0) {
                Ordering::Greater => {
                    out.push(x.clone());
                    i += 1;
                    continue;
                }
                Ordering::Less => out.push((y.0.clone(), -y.1.clone())),
                Ordering::Equal => {
                    let s = x.1.clone() - y.1.clone();
                    if !s.is_zero() {
                        out.push((x.0.clone(), s));
                    }
                    i += 1;
                }
            },
        }
        j += 1;
        bj = b.get(j).map(|(bm, bc)| (bm.mul(m), bc.clone() * c.clone()));
    }
    out
}

/// Outcome of dividing `f` by an ordered list of divisors:
/// `f = sum(cofactors[i] * divisors[i]) + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionResult<F> {
    pub remainder: Polynomial<F>,
    pub cofactors: Vec<Polynomial<F>>,
}

/// Multivariate division: leading terms are cancelled by the first divisor
/// whose leading monomial divides them, otherwise moved to the remainder.
pub fn reduce<F: Scalar>(
    f: &Polynomial<F>,
    divisors: &[Polynomial<F>],
    order: &OrderSpec,
) -> DivisionResult<F> {
    let n = f.nvars();
    let divs: Vec<Terms<F>> = divisors.iter().map(|g| sorted(g, order)).collect();
    let mut cofactors: Vec<Polynomial<F>> = divisors.iter().map(|_| Polynomial::zero(n)).collect();
    let mut p = sorted(f, order);
    let mut rem: Terms<F> = Vec::new();
    while let Some((lm, lc)) = p.first().cloned() {
        let hit = divs
            .iter()
            .enumerate()
            .find(|(_, g)| g.first().is_some_and(|(gm, _)| gm.divides(&lm)));
        match hit {
            Some((i, g)) => {
                let (gm, gc) = &g[0];
                let t = gm.quotient_of(&lm).expect("divides");
                let c = lc / gc.clone();
                cofactors[i].add_term(t.clone(), c.clone());
                p = sub_scaled(&p[1..], &c, &t, &g[1..], order);
            }
            None => {
                rem.push(p.remove(0));
            }
        }
    }
    DivisionResult {
        remainder: unsorted(n, rem),
        cofactors,
    }
}

/// Full reduction of sorted terms against a basis (no cofactors).
fn normal_form<F: Scalar>(p: Terms<F>, basis: &[Terms<F>], order: &OrderSpec) -> Terms<F> {
    let mut p = p;
    let mut rem = Vec::new();
    while let Some((lm, lc)) = p.first().cloned() {
        match basis
            .iter()
            .find(|g| g.first().is_some_and(|(gm, _)| gm.divides(&lm)))
        {
            Some(g) => {
                let (gm, gc) = &g[0];
                let t = gm.quotient_of(&lm).expect("divides");
                let c = lc / gc.clone();
                p = sub_scaled(&p[1..], &c, &t, &g[1..], order);
            }
            None => rem.push(p.remove(0)),
        }
    }
    rem
}

fn monic_terms<F: Scalar>(mut t: Terms<F>) -> Terms<F> {
    if let Some((_, lc)) = t.first() {
        let inv = lc.inv().expect("nonzero leading coefficient");
        for (_, c) in t.iter_mut() {
            *c = c.clone() * inv.clone();
        }
    }
    t
}

fn spoly_terms<F: Scalar>(f: &Terms<F>, g: &Terms<F>, order: &OrderSpec) -> Terms<F> {
    let (fm, fc) = &f[0];
    let (gm, gc) = &g[0];
    let l = fm.lcm(gm);
    let tf = fm.quotient_of(&l).expect("lcm");
    let tg = gm.quotient_of(&l).expect("lcm");
    let ff: Terms<F> = f[1..]
        .iter()
        .map(|(m, c)| (m.mul(&tf), c.clone() / fc.clone()))
        .collect();
    let gc_inv = F::one() / gc.clone();
    sub_scaled(&ff, &gc_inv, &tg, &g[1..], order)
}

/// The S-polynomial `(L/LT(f)) f - (L/LT(g)) g` with `L = lcm(LM f, LM g)`.
pub fn s_poly<F: Scalar>(
    f: &Polynomial<F>,
    g: &Polynomial<F>,
    order: &OrderSpec,
) -> Result<Polynomial<F>> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let s = spoly_terms(&sorted(f, order), &sorted(g, order), order);
    Ok(unsorted(f.nvars(), s))
}

/// A reduced Gröbner basis: monic, interreduced, sorted ascending by
/// leading monomial. The zero ideal has no elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedGB<F> {
    order: OrderSpec,
    nvars: usize,
    elements: Vec<Polynomial<F>>,
}

impl<F: Scalar> ReducedGB<F> {
    pub fn order(&self) -> &OrderSpec {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_term(&self.order).expect("nonzero").0)
            .collect()
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        reduce(f, &self.elements, &self.order).remainder
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.normal_form(f).is_zero()
    }
}

struct Engine<'a, F> {
    order: &'a OrderSpec,
    basis: Vec<Terms<F>>,
    pairs: Vec<(usize, usize)>,
    pending: HashSet<(usize, usize)>,
}

impl<F: Scalar> Engine<'_, F> {
    fn lm(&self, i: usize) -> &Monomial {
        &self.basis[i][0].0
    }

    fn push(&mut self, h: Terms<F>) {
        let k = self.basis.len();
        self.basis.push(monic_terms(h));
        for i in 0..k {
            self.pairs.push((i, k));
            self.pending.insert((i, k));
        }
    }

    fn key(i: usize, j: usize) -> (usize, usize) {
        (i.min(j), i.max(j))
    }

    /// Normal selection strategy: smallest lcm (by degree, then order).
    fn next_pair(&mut self) -> Option<(usize, usize)> {
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let la = self.lm(a.0).lcm(self.lm(a.1));
                let lb = self.lm(b.0).lcm(self.lm(b.1));
                la.degree()
                    .cmp(&lb.degree())
                    .then_with(|| order.cmp(&la, &lb))
                    .then_with(|| a.cmp(b))
            })
            .map(|(idx, _)| idx)?;
        let p = self.pairs.swap_remove(best);
        self.pending.remove(&p);
        Some(p)
    }

    fn chain_criterion(&self, i: usize, j: usize, lcm: &Monomial) -> bool {
        (0..self.basis.len()).any(|k| {
            k != i
                && k != j
                && self.lm(k).divides(lcm)
                && !self.pending.contains(&Self::key(i, k))
                && !self.pending.contains(&Self::key(j, k))
        })
    }

    fn run(&mut self) {
        while let Some((i, j)) = self.next_pair() {
            let (li, lj) = (self.lm(i), self.lm(j));
            if li.coprime(lj) {
                continue;
            }
            let lcm = li.lcm(lj);
            if self.chain_criterion(i, j, &lcm) {
                continue;
            }
            let s = spoly_terms(&self.basis[i], &self.basis[j], self.order);
            let h = normal_form(s, &self.basis, self.order);
            if h.is_empty() {
                continue;
            }
            let unit = h[0].0.is_one();
            self.push(h);
            if unit {
                return;
            }
        }
    }
}

/// Buchberger's algorithm with the coprime and chain criteria, returning
/// the reduced Gröbner basis of the ideal generated by `gens`.
///
/// All generators must have the same arity; `nvars` is used when `gens` is
/// empty or all zero.
pub fn buchberger<F: Scalar>(
    gens: &[Polynomial<F>],
    nvars: usize,
    order: &OrderSpec,
) -> ReducedGB<F> {
    let mut engine = Engine {
        order,
        basis: Vec::new(),
        pairs: Vec::new(),
        pending: HashSet::new(),
    };
    for g in gens {
        debug_assert_eq!(g.nvars(), nvars, "generator arity mismatch");
        let h = normal_form(sorted(g, order), &engine.basis, order);
        if !h.is_empty() {
            engine.push(h);
        }
    }
    if engine.basis.iter().any(|g| g[0].0.is_one()) {
        return unit_basis(nvars, order);
    }
    engine.run();
    if engine.basis.iter().any(|g| g[0].0.is_one()) {
        return unit_basis(nvars, order);
    }

    let basis = engine.basis;
    let minimal: Vec<Terms<F>> = basis
        .iter()
        .enumerate()
        .filter(|(i, g)| {
            !basis
                .iter()
                .enumerate()
                .any(|(j, h)| j != *i && h[0].0.divides(&g[0].0) && (h[0].0 != g[0].0 || j < *i))
        })
        .map(|(_, g)| g.clone())
        .collect();
    let mut reduced: Vec<Terms<F>> = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<Terms<F>> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, h)| h.clone())
            .collect();
        let head = g[0].clone();
        let tail = normal_form(g[1..].to_vec(), &others, order);
        let mut t = vec![head];
        t.extend(tail);
        reduced.push(t);
    }
    reduced.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    ReducedGB {
        order: *order,
        nvars,
        elements: reduced.into_iter().map(|t| unsorted(nvars, t)).collect(),
    }
}

fn unit_basis<F: Scalar>(nvars: usize, order: &OrderSpec) -> ReducedGB<F> {
    ReducedGB {
        order: *order,
        nvars,
        elements: vec![Polynomial::one(nvars)],
    }
}

/// True iff every S-polynomial of `gs` reduces to zero by division by `gs`.
pub fn is_groebner<F: Scalar>(gs: &[Polynomial<F>], order: &OrderSpec) -> bool {
    for i in 0..gs.len() {
        for j in i + 1..gs.len() {
            let s = match s_poly(&gs[i], &gs[j], order) {
                Ok(s) => s,
                Err(_) => return false,
            };
            if !reduce(&s, gs, order).remainder.is_zero() {
                return false;
            }
        }
    }
    true
}
