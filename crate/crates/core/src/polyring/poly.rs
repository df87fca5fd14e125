use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Monomial, OrderSpec, VariableSet};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;

/// Sparse polynomial: a map from monomials to nonzero coefficients.
///
/// The polynomial does not own variable names; a [`VariableSet`] of the
/// matching length supplies them when rendering or remapping.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<F> {
    nvars: usize,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Scalar> Polynomial<F> {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i, 1), F::one())
    }

    pub fn monomial(m: Monomial, c: F) -> Self {
        let mut p = Self::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                let sum = e.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *e = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> F {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exps()[var]).max().unwrap_or(0)
    }

    /// Indices of variables that occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&i| self.terms.keys().any(|m| m.exps()[i] > 0))
            .collect()
    }

    /// The single variable the polynomial depends on, if it is univariate
    /// and nonconstant.
    pub fn univariate_var(&self) -> Option<usize> {
        match self.support().as_slice() {
            [v] => Some(*v),
            _ => None,
        }
    }

    /// Terms sorted in descending order.
    pub fn sorted_terms(&self, order: &OrderSpec) -> Vec<(&Monomial, &F)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn leading_term(&self, order: &OrderSpec) -> Result<(Monomial, F)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a.clone() * c.clone()))
                .collect(),
        }
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self, order: &OrderSpec) -> Self {
        match self.leading_term(order) {
            Ok((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
            Err(_) => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.nvars, "point arity mismatch");
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, e) in point.iter().zip(m.exps()) {
                for _ in 0..*e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exps()[i];
            if e > 0 {
                let mut exps = m.exps().to_vec();
                exps[i] -= 1;
                out.add_term(Monomial::new(exps), c.clone() * F::from_i64(e as i64));
            }
        }
        out
    }

    /// Re-expresses the polynomial over `to`, matching variables by name.
    pub fn remap(&self, from: &VariableSet, to: &VariableSet) -> Result<Self> {
        if from.len() != self.nvars {
            return Err(Error::VariableMismatch(format!(
                "polynomial has {} variables, set `{from}` has {}",
                self.nvars,
                from.len()
            )));
        }
        let mut perm = vec![usize::MAX; from.len()];
        for i in self.support() {
            let name = &from.names()[i];
            perm[i] = to.index_of(name).ok_or_else(|| {
                Error::VariableMismatch(format!("variable `{name}` not present in `{to}`"))
            })?;
        }
        Ok(Self {
            nvars: to.len(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut exps = vec![0; to.len()];
                    for (i, e) in m.exps().iter().enumerate() {
                        if *e > 0 {
                            exps[perm[i]] = *e;
                        }
                    }
                    (Monomial::new(exps), c.clone())
                })
                .collect(),
        })
    }

    pub fn display<'a>(&'a self, vars: &'a VariableSet) -> PolynomialDisplay<'a, F> {
        PolynomialDisplay {
            poly: self,
            vars,
            order: OrderSpec::GrevLex,
        }
    }

    /// Canonical rendering, terms descending under `order`.
    pub fn render(&self, vars: &VariableSet, order: &OrderSpec) -> String {
        PolynomialDisplay {
            poly: self,
            vars,
            order: *order,
        }
        .to_string()
    }
}

/// Substitutes polynomials (over `to`) for variables of `f` (over `from`).
///
/// Variables without an assignment are carried over by name and must exist
/// in `to`.
pub fn substitute<F: Scalar>(
    f: &Polynomial<F>,
    from: &VariableSet,
    assignment: &HashMap<String, Polynomial<F>>,
    to: &VariableSet,
) -> Result<Polynomial<F>> {
    if f.nvars() != from.len() {
        return Err(Error::VariableMismatch(format!(
            "polynomial arity {} does not match `{from}`",
            f.nvars()
        )));
    }
    let mut images = Vec::with_capacity(from.len());
    for name in from.names() {
        let img = match assignment.get(name) {
            Some(p) if p.nvars() == to.len() => p.clone(),
            Some(_) => {
                return Err(Error::VariableMismatch(format!(
                    "image of `{name}` is not over `{to}`"
                )))
            }
            None => match to.index_of(name) {
                Some(j) => Polynomial::var(to.len(), j),
                None if f.degree_in(from.index_of(name).unwrap()) == 0 => {
                    Polynomial::zero(to.len())
                }
                None => {
                    return Err(Error::VariableMismatch(format!(
                        "no image for `{name}` and it is not in `{to}`"
                    )))
                }
            },
        };
        images.push(img);
    }
    let mut powers: Vec<Vec<Polynomial<F>>> = images
        .iter()
        .map(|p| vec![Polynomial::one(to.len()), p.clone()])
        .collect();
    let mut out = Polynomial::zero(to.len());
    for (m, c) in f.terms() {
        let mut t = Polynomial::constant(to.len(), c.clone());
        for (i, e) in m.exps().iter().enumerate() {
            let e = *e as usize;
            if e == 0 {
                continue;
            }
            while powers[i].len() <= e {
                let next = &powers[i][powers[i].len() - 1] * &images[i];
                powers[i].push(next);
            }
            t = &t * &powers[i][e];
        }
        out = out + t;
    }
    Ok(out)
}

pub struct PolynomialDisplay<'a, F> {
    poly: &'a Polynomial<F>,
    vars: &'a VariableSet,
    order: OrderSpec,
}

impl<F: Scalar> fmt::Display for PolynomialDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.poly.sorted_terms(&self.order);
        if terms.is_empty() {
            return write!(f, "0");
        }
        let multi = terms.len() > 1;
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let parts = c.parts();
            match (k, parts.negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let body = if parts.compound && (multi || !m.is_one()) {
                format!("({})", parts.body)
            } else {
                parts.body
            };
            if m.is_one() {
                write!(f, "{body}")?;
            } else if parts.is_unit {
                write!(f, "{}", m.render(self.vars))?;
            } else {
                write!(f, "{body}*{}", m.render(self.vars))?;
            }
        }
        Ok(())
    }
}

impl<F: fmt::Debug> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(m, c)| (m.exps(), c)))
            .finish()
    }
}

impl<F: Scalar> Add for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn add(self, rhs: Self) -> Polynomial<F> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<F: Scalar> Add for Polynomial<F> {
    type Output = Polynomial<F>;

    fn add(mut self, rhs: Self) -> Polynomial<F> {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<F: Scalar> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn sub(self, rhs: Self) -> Polynomial<F> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<F: Scalar> Sub for Polynomial<F> {
    type Output = Polynomial<F>;

    fn sub(mut self, rhs: Self) -> Polynomial<F> {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl<F: Scalar> Neg for Polynomial<F> {
    type Output = Polynomial<F>;

    fn neg(self) -> Polynomial<F> {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<F: Scalar> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn mul(self, rhs: Self) -> Polynomial<F> {
        assert_eq!(self.nvars, rhs.nvars, "polynomial arity mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<F: Scalar> Mul for Polynomial<F> {
    type Output = Polynomial<F>;

    fn mul(self, rhs: Self) -> Polynomial<F> {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, FieldConfig, QuadExt, Rational};
    use crate::polyring::parse_poly;
    use proptest::prelude::*;

    fn xyz() -> VariableSet {
        VariableSet::parse("x,y,z").unwrap()
    }

    fn p(s: &str) -> Polynomial<Rational> {
        parse_poly(s, &xyz(), &FieldConfig::rationals()).unwrap()
    }

    #[test]
    fn leading_terms() {
        let v = VariableSet::parse("x,y").unwrap();
        let f = parse_poly::<Rational>("x^2+y^3", &v, &FieldConfig::rationals()).unwrap();
        assert_eq!(f.leading_term(&OrderSpec::Lex).unwrap().0.exps(), &[2, 0]);
        assert_eq!(
            f.leading_term(&OrderSpec::GrevLex).unwrap().0.exps(),
            &[0, 3]
        );
        assert_eq!(
            Polynomial::<Rational>::zero(2).leading_term(&OrderSpec::Lex),
            Err(Error::ZeroPolynomial)
        );

        // front block {x}, Lex on both blocks
        let v = VariableSet::parse("x,a").unwrap();
        let f = parse_poly::<Rational>("x*a+a^3", &v, &FieldConfig::rationals()).unwrap();
        let block = OrderSpec::Block {
            front_count: 1,
            front: super::super::BaseOrder::Lex,
            back: super::super::BaseOrder::Lex,
        };
        assert_eq!(f.leading_term(&block).unwrap().0.exps(), &[1, 1]);
    }

    #[test]
    fn substitution_realizes_the_ring_map() {
        let abc = VariableSet::parse("a,b,c").unwrap();
        let cfg = FieldConfig::rationals();
        let c = parse_poly::<Rational>("c", &abc, &cfg).unwrap();
        let mut asg = HashMap::new();
        asg.insert("c".to_string(), p("(1-z)*z"));
        assert_eq!(substitute(&c, &abc, &asg, &xyz()).unwrap(), p("z-z^2"));

        let f = parse_poly::<Rational>("a^2+b", &abc, &cfg).unwrap();
        assert_eq!(substitute(&f, &abc, &HashMap::new(), &abc).unwrap(), f);

        let joint = VariableSet::parse("x,y,z,c").unwrap();
        let g = parse_poly::<Rational>("z^2-z+c", &joint, &cfg).unwrap();
        assert!(substitute(&g, &joint, &asg, &xyz()).unwrap().is_zero());

        // `a` has no image and is not a target variable
        let h = parse_poly::<Rational>("a", &abc, &cfg).unwrap();
        assert!(substitute(&h, &abc, &asg, &xyz()).is_err());
    }

    #[test]
    fn rendering_round_trips() {
        let f = p("x^2+y^2+(z-1/2)^2-1/4");
        assert_eq!(f.display(&xyz()).to_string(), "x^2 + y^2 + z^2 - z");
        assert_eq!(p("0").display(&xyz()).to_string(), "0");
        assert_eq!(p("(1-2*z)*x").display(&xyz()).to_string(), "-2*x*z + x");
        let q3 = FieldConfig::quadratic(3).unwrap();
        let g = parse_poly::<QuadExt>("(3/4+s/4)*x - s*y + s/8", &xyz(), &q3).unwrap();
        let text = g.display(&xyz()).to_string();
        assert_eq!(text, "(3/4 + 1/4*s)*x - s*y + 1/8*s");
        assert_eq!(parse_poly::<QuadExt>(&text, &xyz(), &q3).unwrap(), g);
    }

    #[test]
    fn derivative_and_eval() {
        let f = p("x^3*y - 2*y + 5");
        assert_eq!(f.derivative(0), p("3*x^2*y"));
        assert_eq!(f.eval(&[rat(2, 1), rat(1, 2), rat(0, 1)]), rat(8, 1));
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial<Rational>> {
        prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -5i64..6, 1i64..4), 0..5).prop_map(
            |ts| {
                Polynomial::from_terms(
                    3,
                    ts.into_iter()
                        .map(|((a, b, c), n, d)| (Monomial::new(vec![a, b, c]), rat(n, d))),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
            prop_assert_eq!(&f * &g, &g * &f);
            if !f.is_zero() && !g.is_zero() {
                prop_assert_eq!(
                    (&f * &g).total_degree().unwrap(),
                    f.total_degree().unwrap() + g.total_degree().unwrap()
                );
            }
        }

        #[test]
        fn parse_render_round_trip(f in arb_poly()) {
            let text = f.display(&xyz()).to_string();
            let back = parse_poly::<Rational>(&text, &xyz(), &FieldConfig::rationals()).unwrap();
            prop_assert_eq!(back.display(&xyz()).to_string(), text);
            prop_assert_eq!(back, f);
        }
    }
}
