//! Irreducible components of the ideals met in the verification.
//!
//! There is no general primary decomposition here. Ideals are split on
//! elements that visibly factor, zero-dimensional pieces are split through
//! eliminants, and every leaf is marked certified only when its primality
//! is established by a rule that actually proves it.

mod univariate;

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::exactnum::{solve_quadratic, FieldConfig, Scalar};
use crate::ideals::Ideal;
use crate::polyring::{Monomial, OrderSpec, Polynomial};
use univariate::Dense;

/// Nesting limit for the splitting recursion.
const MAX_DEPTH: usize = 48;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnivariateFactorization<F> {
    /// Monic factors with multiplicities, by ascending degree.
    pub factors: Vec<(Polynomial<F>, u32)>,
    /// Every listed factor is known to be irreducible over the field.
    pub complete: bool,
}

#[derive(Clone)]
pub struct ComponentSet<F> {
    pub primes: Vec<Ideal<F>>,
    pub certified: bool,
}

fn require_univariate<F: Scalar>(p: &Polynomial<F>) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    match p.support().as_slice() {
        [] => Ok(0),
        [v] => Ok(*v),
        _ => Err(Error::InvalidArgument(
            "expected a univariate polynomial".into(),
        )),
    }
}

/// `p / gcd(p, p')`, made monic.
pub fn squarefree_part<F: Scalar>(p: &Polynomial<F>) -> Result<Polynomial<F>> {
    let v = require_univariate(p)?;
    if p.is_constant() {
        return Ok(Polynomial::one(p.nvars()));
    }
    let d = Dense::from_poly(p, v);
    let g = d.gcd(&d.derivative());
    Ok(d.divrem(&g).0.monic().to_poly(p.nvars(), v))
}

/// Splits a squarefree monic polynomial as far as the field allows.
/// The flag says whether every returned piece is known irreducible.
fn split_squarefree<F: Scalar>(p: &Dense<F>, cfg: &FieldConfig) -> (Vec<Dense<F>>, bool) {
    match p.degree() {
        0 => (Vec::new(), true),
        1 => (vec![p.monic()], true),
        2 => match solve_quadratic(&p.0[2], &p.0[1], &p.0[0], cfg) {
            Ok(roots) if roots.is_empty() => (vec![p.monic()], true),
            Ok(roots) => (
                roots
                    .into_iter()
                    .map(|r| Dense::new(vec![-r.value, F::one()]))
                    .collect(),
                true,
            ),
            Err(_) => (vec![p.monic()], false),
        },
        _ => {
            let Some(roots) = p.rational_roots() else {
                return (vec![p.monic()], false);
            };
            if roots.is_empty() {
                return (vec![p.monic()], false);
            }
            let mut rest = p.monic();
            let mut out = Vec::new();
            for r in roots {
                let lin = Dense::new(vec![-F::from_rational(r), F::one()]);
                rest = rest.divrem(&lin).0;
                out.push(lin);
            }
            let (more, complete) = split_squarefree(&rest, cfg);
            out.extend(more);
            (out, complete)
        }
    }
}

pub fn factor_univariate<F: Scalar>(
    p: &Polynomial<F>,
    cfg: &FieldConfig,
) -> Result<UnivariateFactorization<F>> {
    let v = require_univariate(p)?;
    let mut factors = Vec::new();
    let mut complete = true;
    if !p.is_constant() {
        for (a, mult) in Dense::from_poly(p, v).squarefree_decomposition() {
            let (pieces, ok) = split_squarefree(&a, cfg);
            complete &= ok;
            factors.extend(pieces.into_iter().map(|f| (f.to_poly(p.nvars(), v), mult)));
        }
    }
    factors.sort_by(|(a, ma), (b, mb)| cmp_polys(a, b).then(ma.cmp(mb)));
    Ok(UnivariateFactorization { factors, complete })
}

fn cmp_polys<F: Scalar>(a: &Polynomial<F>, b: &Polynomial<F>) -> Ordering {
    let order = OrderSpec::GrevLex;
    let ta = a.sorted_terms(&order);
    let tb = b.sorted_terms(&order);
    a.total_degree().cmp(&b.total_degree()).then_with(|| {
        for ((ma, ca), (mb, cb)) in ta.iter().zip(tb.iter()) {
            let o = order.cmp(ma, mb).then_with(|| ca.cmp(cb));
            if o != Ordering::Equal {
                return o;
            }
        }
        ta.len().cmp(&tb.len())
    })
}

/// Nontrivial factors of `g`, as distinct monic polynomials, or `None` when
/// none of the supported patterns applies.
fn try_factor<F: Scalar>(g: &Polynomial<F>, cfg: &FieldConfig) -> Option<Vec<Polynomial<F>>> {
    if g.is_constant() {
        return None;
    }
    let n = g.nvars();
    let order = OrderSpec::GrevLex;
    let finish = |fs: Vec<Polynomial<F>>| {
        let mut out: Vec<Polynomial<F>> = Vec::new();
        for f in fs {
            if f.is_constant() {
                continue;
            }
            let f = f.monic(&order);
            if !out.contains(&f) {
                out.push(f);
            }
        }
        out.sort_by(cmp_polys);
        // a lone factor equal to g up to scale is no split at all
        (out.len() != 1 || out[0] != g.monic(&order)).then_some(out)
    };

    // a variable dividing every term
    let content: Vec<u32> = (0..n)
        .map(|i| g.terms().map(|(m, _)| m.exps()[i]).min().unwrap_or(0))
        .collect();
    if content.iter().any(|e| *e > 0) {
        let m = Monomial::new(content.clone());
        let rest = Polynomial::from_terms(
            n,
            g.terms()
                .map(|(t, c)| (m.quotient_of(t).expect("divides"), c.clone())),
        );
        let mut fs: Vec<Polynomial<F>> = (0..n)
            .filter(|i| content[*i] > 0)
            .map(|i| Polynomial::var(n, i))
            .collect();
        fs.push(rest);
        return finish(fs);
    }

    if g.univariate_var().is_some() {
        let fac = factor_univariate(g, cfg).ok()?;
        let nontrivial = fac.factors.len() > 1 || fac.factors.iter().any(|(_, m)| *m > 1);
        return if nontrivial {
            finish(fac.factors.into_iter().map(|(f, _)| f).collect())
        } else {
            None
        };
    }

    if let Some(fs) = content_in_other_variable(g) {
        return finish(fs);
    }
    if let Some(fs) = difference_of_squares(g, cfg) {
        return finish(fs);
    }
    None
}

/// Writes `g` as a polynomial in some variable `v` whose coefficients all
/// depend on a single other variable `u`, and pulls out their gcd.
fn content_in_other_variable<F: Scalar>(g: &Polynomial<F>) -> Option<Vec<Polynomial<F>>> {
    let n = g.nvars();
    let support = g.support();
    if support.len() != 2 {
        return None;
    }
    for (v, u) in [(support[0], support[1]), (support[1], support[0])] {
        let deg = g.degree_in(v) as usize;
        let mut coeffs: Vec<Dense<F>> = Vec::with_capacity(deg + 1);
        for k in 0..=deg {
            let mut c = vec![F::zero(); g.degree_in(u) as usize + 1];
            for (m, a) in g.terms() {
                if m.exps()[v] as usize == k {
                    c[m.exps()[u] as usize] = a.clone();
                }
            }
            coeffs.push(Dense::new(c));
        }
        let mut gcd = Dense::new(Vec::new());
        for c in &coeffs {
            gcd = gcd.gcd(c);
        }
        if gcd.degree() == 0 {
            continue;
        }
        let mut rest = Polynomial::zero(n);
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let q = c.divrem(&gcd).0.to_poly(n, u);
            rest = rest + q.mul_term(&Monomial::var(n, v, k as u32), &F::one());
        }
        return Some(vec![gcd.to_poly(n, u), rest]);
    }
    None
}

/// `c1 m1^2 + c2 m2^2` with `-c2/c1` a square in the field.
fn difference_of_squares<F: Scalar>(
    g: &Polynomial<F>,
    cfg: &FieldConfig,
) -> Option<Vec<Polynomial<F>>> {
    let terms: Vec<(&Monomial, &F)> = g.terms().collect();
    let [(m1, c1), (m2, c2)] = terms.as_slice() else {
        return None;
    };
    let half = |m: &Monomial| -> Option<Monomial> {
        m.exps()
            .iter()
            .all(|e| e % 2 == 0)
            .then(|| Monomial::new(m.exps().iter().map(|e| e / 2).collect()))
    };
    let (h1, h2) = (half(m1)?, half(m2)?);
    let ratio = (-(*c2).clone() / (*c1).clone()).to_rational()?;
    let root = F::sqrt_rational(&ratio, cfg)?;
    let a = Polynomial::monomial(h1, F::one());
    let b = Polynomial::monomial(h2, root);
    Some(vec![&a - &b, &a + &b])
}

/// Generator of `I ∩ k[v]`, lifted back to the ring of `I`.
fn eliminant<F: Scalar>(i: &Ideal<F>, v: usize) -> Result<Polynomial<F>> {
    let others: Vec<String> = i
        .vars()
        .names()
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != v)
        .map(|(_, n)| n.clone())
        .collect();
    let e = i.eliminate(&others)?;
    let gb = e.basis();
    let g = gb
        .elements()
        .first()
        .cloned()
        .ok_or_else(|| Error::InvalidArgument("ideal is not zero-dimensional".into()))?;
    g.remap(e.vars(), i.vars())
}

/// Minimal polynomial of the linear form `l` modulo `I`, as dense
/// coefficients in a new variable.
fn eliminant_of_form<F: Scalar>(i: &Ideal<F>, l: &Polynomial<F>) -> Result<Dense<F>> {
    let (ext, u) = i.vars().with_fresh("u");
    let lifted = i.remap(&ext)?;
    let uv = Polynomial::var(ext.len(), ext.len() - 1);
    let j = lifted.with_generators([&uv - &l.remap(i.vars(), &ext)?])?;
    let names: Vec<&String> = i.vars().names().iter().collect();
    let e = j.eliminate(&names)?;
    let gb = e.basis();
    let g = gb
        .elements()
        .first()
        .ok_or_else(|| Error::InvalidArgument("ideal is not zero-dimensional".into()))?;
    debug_assert_eq!(e.vars().names(), [u]);
    Ok(Dense::from_poly(g, 0))
}

/// `e(l)` for a dense univariate `e` and a polynomial `l`.
fn compose<F: Scalar>(e: &Dense<F>, l: &Polynomial<F>) -> Polynomial<F> {
    let n = l.nvars();
    e.0.iter().rev().fold(Polynomial::zero(n), |acc, c| {
        &(&acc * l) + &Polynomial::constant(n, c.clone())
    })
}

/// Number of standard monomials of a zero-dimensional ideal.
fn vector_space_dim<F: Scalar>(i: &Ideal<F>) -> usize {
    let gb = i.basis();
    let lms = gb.leading_monomials();
    let n = i.nvars();
    let bounds: Vec<u32> = (0..n)
        .map(|v| {
            lms.iter()
                .filter_map(|m| m.pure_power().filter(|(w, _)| *w == v).map(|(_, e)| e))
                .min()
                .expect("zero-dimensional")
        })
        .collect();
    let mut count = 0;
    let mut exps = vec![0u32; n];
    loop {
        let m = Monomial::new(exps.clone());
        if !lms.iter().any(|l| l.divides(&m)) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == n {
                return count;
            }
            exps[k] += 1;
            if exps[k] < bounds[k] {
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}

/// Separating-form candidates `x1 + c x2 + c^2 x3 + ...`.
fn linear_forms<F: Scalar>(n: usize) -> impl Iterator<Item = Polynomial<F>> {
    (1..=6i64).map(move |c| {
        let mut l = Polynomial::zero(n);
        let mut w = 1i64;
        for i in 0..n {
            l = l + Polynomial::monomial(Monomial::var(n, i, 1), F::from_i64(w));
            w *= c;
        }
        l
    })
}

/// Absolute irreducibility of a polynomial of total degree at most 2.
fn quadric_irreducible<F: Scalar>(g: &Polynomial<F>) -> bool {
    if g.total_degree() == Some(1) {
        return true;
    }
    let vars = g.support();
    let k = vars.len();
    let two = F::from_i64(2);
    let mut q = vec![vec![F::zero(); k + 1]; k + 1];
    for (m, c) in g.terms() {
        let idx: Vec<usize> = vars
            .iter()
            .enumerate()
            .flat_map(|(pos, v)| std::iter::repeat_n(pos, m.exps()[*v] as usize))
            .collect();
        match idx.as_slice() {
            [] => q[k][k] = c.clone(),
            [i] => {
                q[*i][k] = c.clone() / two.clone();
                q[k][*i] = c.clone() / two.clone();
            }
            [i, j] if i == j => q[*i][*i] = c.clone(),
            [i, j] => {
                q[*i][*j] = c.clone() / two.clone();
                q[*j][*i] = c.clone() / two.clone();
            }
            _ => return false,
        }
    }
    // A quadric splits into linear factors over the closure iff rank <= 2.
    rank(q) >= 3
}

fn rank<F: Scalar>(mut m: Vec<Vec<F>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        let pivot_row = m[r][c..].to_vec();
        for row in &mut m[r + 1..] {
            let f = row[c].clone() * inv.clone();
            if f.is_zero() {
                continue;
            }
            for (v, p) in row[c..].iter_mut().zip(&pivot_row) {
                *v = v.clone() - p.clone() * f.clone();
            }
        }
        r += 1;
    }
    r
}

/// Linear equations plus at most one further generator that is irreducible
/// in the variables the linear equations leave free.
fn certified_hypersurface<F: Scalar>(i: &Ideal<F>, cfg: &FieldConfig) -> bool {
    let gb = i.basis();
    let nonlinear: Vec<&Polynomial<F>> = gb
        .elements()
        .iter()
        .filter(|g| g.total_degree() != Some(1))
        .collect();
    match nonlinear.as_slice() {
        [] => true,
        [g] => {
            // Reducedness keeps the linear leading variables out of `g`, so
            // the quotient ring is k[free variables]/(g).
            if g.univariate_var().is_some() {
                factor_univariate(g, cfg)
                    .is_ok_and(|f| f.complete && f.factors.len() == 1 && f.factors[0].1 == 1)
            } else {
                g.total_degree() == Some(2) && quadric_irreducible(g)
            }
        }
        _ => false,
    }
}

struct Splitter<'a, F> {
    cfg: &'a FieldConfig,
    leaves: Vec<(Ideal<F>, bool)>,
}

impl<F: Scalar> Splitter<'_, F> {
    fn branch(&mut self, i: &Ideal<F>, factors: &[Polynomial<F>], depth: usize) -> Result<()> {
        // Branch k only needs to drop what earlier branches already cover.
        for (k, f) in factors.iter().enumerate() {
            let mut j = i.with_generators([f.clone()])?;
            for earlier in &factors[..k] {
                if j.is_unit() {
                    break;
                }
                j = j.saturate(earlier)?;
            }
            self.split(&j, depth + 1)?;
        }
        Ok(())
    }

    fn split(&mut self, i: &Ideal<F>, depth: usize) -> Result<()> {
        if i.is_unit() {
            return Ok(());
        }
        let i = Ideal::new(i.vars().clone(), i.basis().elements().to_vec())?;
        if depth > MAX_DEPTH {
            self.leaves.push((i, false));
            return Ok(());
        }
        let gb = i.basis();
        for g in gb.elements() {
            if let Some(fs) = try_factor(g, self.cfg) {
                return self.branch(&i, &fs, depth);
            }
        }
        if !i.is_zero_dim() {
            let ok = certified_hypersurface(&i, self.cfg);
            self.leaves.push((i, ok));
            return Ok(());
        }

        let mut radical = Vec::new();
        for v in 0..i.nvars() {
            let e = eliminant(&i, v)?;
            if let Some(fs) = try_factor(&e, self.cfg) {
                return self.branch(&i, &fs, depth);
            }
            radical.push(squarefree_part(&e)?);
        }
        // Adding squarefree eliminants yields the radical in characteristic 0.
        let rad = i.with_generators(radical)?;
        if !rad.ideal_equal(&i) {
            return self.split(&rad, depth + 1);
        }
        let dim = vector_space_dim(&i);
        for l in linear_forms::<F>(i.nvars()) {
            let e = eliminant_of_form(&i, &l)?;
            let (pieces, complete) = split_squarefree(&e.monic(), self.cfg);
            if pieces.len() > 1 {
                let fs: Vec<Polynomial<F>> = pieces.iter().map(|p| compose(p, &l)).collect();
                return self.branch(&i, &fs, depth);
            }
            if e.degree() == dim {
                // k[x]/I is generated by l, and e is its irreducible minimal polynomial.
                self.leaves.push((i, complete));
                return Ok(());
            }
        }
        self.leaves.push((i, false));
        Ok(())
    }
}

/// Irreducible components of `V(I)` as prime ideals.
pub fn minimal_primes<F: Scalar>(i: &Ideal<F>, cfg: &FieldConfig) -> Result<ComponentSet<F>> {
    if i.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut s = Splitter {
        cfg,
        leaves: Vec::new(),
    };
    s.split(i, 0)?;

    let mut unique: Vec<(Ideal<F>, bool)> = Vec::new();
    for (p, ok) in s.leaves {
        match unique.iter_mut().find(|(q, _)| q.radical_equal(&p)) {
            Some(entry) => entry.1 |= ok,
            None => unique.push((p, ok)),
        }
    }
    // P is redundant when V(P) lies inside V(Q), i.e. Q ⊆ rad(P).
    let keep: Vec<bool> = (0..unique.len())
        .map(|a| {
            !(0..unique.len()).any(|b| {
                b != a
                    && unique[b]
                        .0
                        .gens()
                        .iter()
                        .all(|g| unique[a].0.radical_member(g))
            })
        })
        .collect();
    let mut kept: Vec<(Ideal<F>, bool)> = unique
        .into_iter()
        .zip(keep)
        .filter_map(|(e, k)| k.then_some(e))
        .collect();
    let certified = kept.iter().all(|(_, ok)| *ok);
    let mut keyed: Vec<(String, Ideal<F>)> = kept
        .drain(..)
        .map(|(p, _)| (p.display_basis(), p))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(ComponentSet {
        primes: keyed.into_iter().map(|(_, p)| p).collect(),
        certified,
    })
}

impl<F: Scalar> std::fmt::Debug for ComponentSet<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ComponentSet")
            .field("primes", &self.primes)
            .field("certified", &self.certified)
            .finish()
    }
}

impl<F: Scalar> ComponentSet<F> {
    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// Intersection of all components.
    pub fn intersection(&self) -> Result<Option<Ideal<F>>> {
        let mut it = self.primes.iter();
        let Some(first) = it.next() else {
            return Ok(None);
        };
        let mut acc = first.clone();
        for p in it {
            acc = acc.intersect(p)?;
        }
        Ok(Some(acc))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{QuadExt, Rational};
    use crate::polyring::{parse_poly, VariableSet};

    fn q() -> FieldConfig {
        FieldConfig::rationals()
    }

    fn q3() -> FieldConfig {
        FieldConfig::quadratic(3).unwrap()
    }

    fn p(vars: &str, s: &str) -> Polynomial<Rational> {
        parse_poly(s, &VariableSet::parse(vars).unwrap(), &q()).unwrap()
    }

    fn render<F: Scalar>(vars: &str, f: &UnivariateFactorization<F>) -> Vec<(String, u32)> {
        let v = VariableSet::parse(vars).unwrap();
        f.factors
            .iter()
            .map(|(g, m)| (g.display(&v).to_string(), *m))
            .collect()
    }

    #[test]
    fn squarefree() {
        assert_eq!(
            squarefree_part(&p("z", "(z-1/4)^2")).unwrap(),
            p("z", "z-1/4")
        );
        let two = p("z", "(z-1/4)*(z-3/4)");
        assert_eq!(squarefree_part(&two).unwrap(), two);
        assert_eq!(squarefree_part(&p("x", "x^4")).unwrap(), p("x", "x"));
        assert_eq!(squarefree_part(&p("x", "3*x^2")).unwrap(), p("x", "x"));
        assert!(squarefree_part(&p("x,y", "x*y")).is_err());
    }

    #[test]
    fn univariate_factoring() {
        let f = factor_univariate(&p("z", "z^2-z+3/16"), &q()).unwrap();
        assert!(f.complete);
        assert_eq!(
            render("z", &f),
            [("z - 3/4".into(), 1), ("z - 1/4".into(), 1)]
        );

        let v = VariableSet::parse("x").unwrap();
        let g: Polynomial<QuadExt> = parse_poly("x^2-3/16", &v, &q3()).unwrap();
        let f = factor_univariate(&g, &q3()).unwrap();
        assert!(f.complete);
        assert_eq!(
            render("x", &f),
            [("x - 1/4*s".into(), 1), ("x + 1/4*s".into(), 1)]
        );

        let f = factor_univariate(&p("x", "x^2-3/16"), &q()).unwrap();
        assert!(f.complete);
        assert_eq!(render("x", &f), [("x^2 - 3/16".into(), 1)]);

        let f = factor_univariate(&p("x", "(x-1)^2*(x^3-2)"), &q()).unwrap();
        assert!(!f.complete);
        assert_eq!(
            render("x", &f),
            [("x - 1".into(), 2), ("x^3 - 2".into(), 1)]
        );

        let f = factor_univariate(&p("x", "x^3-x"), &q()).unwrap();
        assert!(f.complete);
        assert_eq!(f.factors.len(), 3);
    }

    fn primes<F: Scalar>(vars: &str, gens: &[&str], cfg: &FieldConfig) -> (Vec<String>, bool) {
        let i: Ideal<F> = Ideal::parse(&VariableSet::parse(vars).unwrap(), gens, cfg).unwrap();
        let c = minimal_primes(&i, cfg).unwrap();
        (
            c.primes.iter().map(Ideal::display_basis).collect(),
            c.certified,
        )
    }

    #[test]
    fn coordinate_axes() {
        let (ps, ok) = primes::<Rational>("x,y", &["x*y"], &q());
        assert_eq!(ps, ["(x)", "(y)"]);
        assert!(ok);
    }

    #[test]
    fn three_lines_all_survive() {
        let (ps, ok) = primes::<Rational>("x,y,z", &["x*y", "x*z", "y*z"], &q());
        assert_eq!(ps, ["(y, x)", "(z, x)", "(z, y)"]);
        assert!(ok);
    }

    #[test]
    fn embedded_and_redundant_pieces_are_dropped() {
        let (ps, ok) = primes::<Rational>("x,y", &["x^2", "x*y"], &q());
        assert_eq!(ps, ["(x)"]);
        assert!(ok);
    }

    #[test]
    fn conjugate_points() {
        let (ps, ok) = primes::<QuadExt>("x,y,z", &["x^2-3/16", "y", "z-3/4"], &q3());
        assert_eq!(ps, ["(z - 3/4, y, x + 1/4*s)", "(z - 3/4, y, x - 1/4*s)"]);
        assert!(ok);
        // over Q the same ideal is a single closed point
        let (ps, ok) = primes::<Rational>("x,y,z", &["x^2-3/16", "y", "z-3/4"], &q());
        assert_eq!(ps, ["(z - 3/4, y, x^2 - 3/16)"]);
        assert!(ok);
    }

    #[test]
    fn points_that_need_a_separating_form() {
        // (x^2-2, y^2-2) over Q: two closed points x = y and x = -y
        let (ps, ok) = primes::<Rational>("x,y", &["x^2-2", "y^2-2"], &q());
        assert_eq!(ps.len(), 2);
        assert!(ok);
    }

    #[test]
    fn preimage_of_the_circle_image() {
        let (ps, ok) = primes::<QuadExt>(
            "x,y,z",
            &[
                "x^2+y^2+z^2-z",
                "64*((1-2*z)*x)^2+256*((1-3*z)*y)^2-3",
                "16*(1-z)*z-3",
            ],
            &q3(),
        );
        assert!(ok);
        assert_eq!(
            ps,
            [
                "(z - 1/4, x^2 + y^2 - 3/16)",
                "(z - 3/4, y, x + 1/4*s)",
                "(z - 3/4, y, x - 1/4*s)",
            ]
        );
    }

    #[test]
    fn quadric_rank_rule() {
        assert!(quadric_irreducible(&p("x,y", "x^2+y^2-3/16")));
        assert!(!quadric_irreducible(&p("x,y", "x^2+y^2")));
        assert!(!quadric_irreducible(&p("x,y", "x*y")));
        assert!(quadric_irreducible(&p("x,y", "x*y-1")));
    }

    #[test]
    fn unit_ideal_is_rejected() {
        let i: Ideal<Rational> =
            Ideal::parse(&VariableSet::parse("x").unwrap(), &["1"], &q()).unwrap();
        assert_eq!(minimal_primes(&i, &q()).unwrap_err(), Error::UnitIdeal);
    }
}
