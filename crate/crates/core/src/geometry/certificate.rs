//! Monic integral relations found by an exact linear ansatz.

use std::collections::BTreeMap;

use super::{verify_identity, AffineVariety};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::polyring::{Monomial, Polynomial, VariableSet};

/// `T^n + p_1(h) T^(n-1) + ... + p_n(h)` with each `p_i` a polynomial in
/// symbols standing for the subring generators `h_1..h_m`.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegralRelation<F> {
    degree: u32,
    nsymbols: usize,
    coefficients: Vec<Polynomial<F>>,
}

impl<F: Scalar> IntegralRelation<F> {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `p_1, ..., p_n` over the symbol variables.
    pub fn coefficients(&self) -> &[Polynomial<F>] {
        &self.coefficients
    }

    /// The relation as a polynomial over `vars`, whose first variable plays
    /// `T` and the rest the symbols in generator order.
    pub fn polynomial(&self, vars: &VariableSet) -> Result<Polynomial<F>> {
        if vars.len() != self.nsymbols + 1 {
            return Err(Error::VariableMismatch(format!(
                "relation needs 1 + {} variables, got `{vars}`",
                self.nsymbols
            )));
        }
        let n = vars.len();
        let lift = |p: &Polynomial<F>| {
            Polynomial::from_terms(
                n,
                p.terms().map(|(m, c)| {
                    let mut e = vec![0];
                    e.extend_from_slice(m.exps());
                    (Monomial::new(e), c.clone())
                }),
            )
        };
        let t = Polynomial::var(n, 0);
        let mut out = t.pow(self.degree);
        for (i, p) in self.coefficients.iter().enumerate() {
            out = out + &lift(p) * &t.pow(self.degree - 1 - i as u32);
        }
        Ok(out)
    }

    /// The relation evaluated at `T = f`, `h_j = gens[j]`.
    pub fn expand(&self, f: &Polynomial<F>, gens: &[Polynomial<F>]) -> Polynomial<F> {
        let mut out = f.pow(self.degree);
        for (i, p) in self.coefficients.iter().enumerate() {
            let mut value = Polynomial::zero(f.nvars());
            for (m, c) in p.terms() {
                value = value + power_product(gens, m, f.nvars()).scale(c);
            }
            out = out + &value * &f.pow(self.degree - 1 - i as u32);
        }
        out
    }
}

impl<F: Scalar> std::fmt::Debug for IntegralRelation<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IntegralRelation")
            .field("degree", &self.degree)
            .field("coefficients", &self.coefficients)
            .finish()
    }
}

fn power_product<F: Scalar>(gens: &[Polynomial<F>], m: &Monomial, nvars: usize) -> Polynomial<F> {
    m.exps()
        .iter()
        .zip(gens)
        .fold(Polynomial::one(nvars), |acc, (e, g)| &acc * &g.pow(*e))
}

/// Exponent vectors in `m` variables of total degree at most `d`, by degree.
fn monomials_up_to(m: usize, d: u32) -> Vec<Monomial> {
    fn rec(m: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() == m {
            out.push(Monomial::new(prefix.clone()));
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(m, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, d, &mut Vec::new(), &mut out);
    out.sort_by_key(|mono| mono.degree());
    out
}

/// Solves `A x = b` exactly; free unknowns are set to zero.
fn solve<F: Scalar>(mut a: Vec<Vec<F>>, mut b: Vec<F>, ncols: usize) -> Option<Vec<F>> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        b.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        for v in &mut a[r][c..] {
            *v = v.clone() * inv.clone();
        }
        b[r] = b[r].clone() * inv;
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            let pivot_row = a[r][c..].to_vec();
            for (v, p) in a[i][c..].iter_mut().zip(pivot_row) {
                *v = v.clone() - p * f.clone();
            }
            let v = b[r].clone() * f;
            b[i] = b[i].clone() - v;
        }
        pivots.push(c);
        r += 1;
    }
    if b[r..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut x = vec![F::zero(); ncols];
    for (row, c) in pivots.into_iter().enumerate() {
        x[c] = b[row].clone();
    }
    Some(x)
}

/// Searches for a monic relation of `f` over `k[subring_gens]` modulo the
/// ideal of `v`, trying degrees `1..=pow_bound` in turn with coefficient
/// polynomials of total degree at most `deg_bound`.
pub fn integral_certificate<F: Scalar>(
    f: &Polynomial<F>,
    subring_gens: &[Polynomial<F>],
    v: &AffineVariety<F>,
    deg_bound: u32,
    pow_bound: u32,
) -> Result<Option<IntegralRelation<F>>> {
    let nv = v.vars().len();
    if f.nvars() != nv || subring_gens.iter().any(|g| g.nvars() != nv) {
        return Err(Error::VariableMismatch(format!(
            "certificate inputs must be over `{}`",
            v.vars()
        )));
    }
    if deg_bound == 0 || pow_bound == 0 {
        return Ok(None);
    }
    let gb = v.ideal().basis();
    let m = subring_gens.len();
    let monos = monomials_up_to(m, deg_bound);
    let products: Vec<Polynomial<F>> = monos
        .iter()
        .map(|mono| power_product(subring_gens, mono, nv))
        .collect();

    for n in 1..=pow_bound {
        // column (i, α) holds NF(h^α f^(n-i))
        let mut columns = Vec::new();
        for i in 1..=n {
            let fp = f.pow(n - i);
            for p in &products {
                columns.push(gb.normal_form(&(p * &fp)));
            }
        }
        let target = -gb.normal_form(&f.pow(n));
        let mut rows: BTreeMap<Monomial, usize> = BTreeMap::new();
        for col in columns.iter().chain(std::iter::once(&target)) {
            for (mono, _) in col.terms() {
                let next = rows.len();
                rows.entry(mono.clone()).or_insert(next);
            }
        }
        let mut a = vec![vec![F::zero(); columns.len()]; rows.len()];
        let mut b = vec![F::zero(); rows.len()];
        for (j, col) in columns.iter().enumerate() {
            for (mono, c) in col.terms() {
                a[rows[mono]][j] = c.clone();
            }
        }
        for (mono, c) in target.terms() {
            b[rows[mono]] = c.clone();
        }
        let Some(x) = solve(a, b, columns.len()) else {
            continue;
        };
        let coefficients = x
            .chunks(monos.len())
            .map(|chunk| {
                Polynomial::from_terms(m, monos.iter().cloned().zip(chunk.iter().cloned()))
            })
            .collect();
        let rel = IntegralRelation {
            degree: n,
            nsymbols: m,
            coefficients,
        };
        if verify_identity(&rel.expand(f, subring_gens), v) {
            return Ok(Some(rel));
        }
        return Err(Error::InvalidArgument(
            "linear solution failed the identity check".into(),
        ));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, Rational};

    #[test]
    fn enumerates_monomials() {
        assert_eq!(monomials_up_to(2, 2).len(), 6);
        assert_eq!(monomials_up_to(4, 2).len(), 15);
        assert_eq!(monomials_up_to(1, 3).len(), 4);
    }

    #[test]
    fn linear_solver() {
        // x + y = 3, x - y = 1
        let a = vec![vec![rat(1, 1), rat(1, 1)], vec![rat(1, 1), rat(-1, 1)]];
        let x = solve(a, vec![rat(3, 1), rat(1, 1)], 2).unwrap();
        assert_eq!(x, vec![rat(2, 1), rat(1, 1)]);
        // inconsistent
        let a: Vec<Vec<Rational>> = vec![vec![rat(1, 1)], vec![rat(2, 1)]];
        assert!(solve(a, vec![rat(1, 1), rat(1, 1)], 1).is_none());
        // underdetermined: free unknown is zero
        let a = vec![vec![rat(1, 1), rat(1, 1)]];
        assert_eq!(
            solve(a, vec![rat(4, 1)], 2).unwrap(),
            vec![rat(4, 1), rat(0, 1)]
        );
    }
}
