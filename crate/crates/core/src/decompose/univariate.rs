//! Dense univariate arithmetic used by factorization and splitting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::exactnum::{Rational, Scalar};
use crate::polyring::{Monomial, Polynomial};

/// Coefficients indexed by degree, with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Dense<F>(pub Vec<F>);

impl<F: Scalar> Dense<F> {
    pub fn new(mut c: Vec<F>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Dense(c)
    }

    pub fn from_poly(p: &Polynomial<F>, var: usize) -> Self {
        let mut c = vec![F::zero(); p.degree_in(var) as usize + 1];
        for (m, a) in p.terms() {
            c[m.exps()[var] as usize] = a.clone();
        }
        Self::new(c)
    }

    pub fn to_poly(&self, nvars: usize, var: usize) -> Polynomial<F> {
        Polynomial::from_terms(
            nvars,
            self.0
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::var(nvars, var, k as u32), c.clone())),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn lc(&self) -> F {
        self.0.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().inv().expect("nonzero");
        Dense(self.0.iter().map(|c| c.clone() * inv.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * F::from_i64(k as i64))
                .collect(),
        )
    }

    #[cfg(test)]
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Dense(Vec::new());
        }
        let mut c = vec![F::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(c)
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.0.clone();
        if r.len() < d.0.len() {
            return (Dense(Vec::new()), self.clone());
        }
        let dl = d.lc().inv().expect("nonzero");
        let mut q = vec![F::zero(); r.len() - d.0.len() + 1];
        for k in (0..q.len()).rev() {
            let c = r[k + d.0.len() - 1].clone() * dl.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.0.iter().enumerate() {
                r[k + j] = r[k + j].clone() - c.clone() * dc.clone();
            }
            q[k] = c;
        }
        (Self::new(q), Self::new(r))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &F) -> F {
        self.0
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Yun's square-free decomposition: monic `a_i` with `p ~ prod a_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, u32)> {
        let f = self.monic();
        let mut out = Vec::new();
        if f.degree() == 0 {
            return out;
        }
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.divrem(&a0).0;
        let mut c = fp.divrem(&a0).0;
        let mut d = sub(&c, &b.derivative());
        let mut i = 1;
        while b.degree() > 0 {
            let a = b.gcd(&d);
            if a.degree() > 0 {
                out.push((a.clone(), i));
            }
            b = b.divrem(&a).0;
            c = d.divrem(&a).0;
            d = sub(&c, &b.derivative());
            i += 1;
        }
        out
    }

    /// Rational roots of a polynomial with rational coefficients.
    pub fn rational_roots(&self) -> Option<Vec<Rational>> {
        let coeffs: Vec<Rational> = self
            .0
            .iter()
            .map(|c| c.to_rational())
            .collect::<Option<_>>()?;
        let lcm = coeffs
            .iter()
            .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
        let mut roots = Vec::new();
        let lowest = ints.iter().position(|c| !c.is_zero())?;
        if lowest > 0 {
            roots.push(Rational::zero());
        }
        let c0 = ints[lowest].abs().to_u64()?;
        let cn = ints.last()?.abs().to_u64()?;
        const LIMIT: u64 = 1_000_000_000_000;
        if c0 > LIMIT || cn > LIMIT {
            return None;
        }
        for p in divisors(c0) {
            for q in divisors(cn) {
                for sign in [1i64, -1] {
                    let cand = Rational::new(BigInt::from(p) * sign, BigInt::from(q));
                    if roots.contains(&cand) {
                        continue;
                    }
                    if self.eval(&F::from_rational(cand.clone())).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        Some(roots)
    }
}

fn sub<F: Scalar>(a: &Dense<F>, b: &Dense<F>) -> Dense<F> {
    let n = a.0.len().max(b.0.len());
    Dense::new(
        (0..n)
            .map(|k| {
                a.0.get(k).cloned().unwrap_or_else(F::zero)
                    - b.0.get(k).cloned().unwrap_or_else(F::zero)
            })
            .collect(),
    )
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1;
    while k * k <= n {
        if n.is_multiple_of(k) {
            small.push(k);
            if k * k != n {
                large.push(n / k);
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn d(c: &[(i64, i64)]) -> Dense<Rational> {
        Dense::new(c.iter().map(|(n, m)| rat(*n, *m)).collect())
    }

    #[test]
    fn gcd_and_division() {
        // (x-1)(x-2) and (x-1)(x+3)
        let a = d(&[(2, 1), (-3, 1), (1, 1)]);
        let b = d(&[(-3, 1), (2, 1), (1, 1)]);
        assert_eq!(a.gcd(&b), d(&[(-1, 1), (1, 1)]));
        let (q, r) = a.divrem(&d(&[(-1, 1), (1, 1)]));
        assert_eq!(q, d(&[(-2, 1), (1, 1)]));
        assert!(r.is_zero());
    }

    #[test]
    fn yun() {
        // (x-1)^2 (x+2)
        let p = d(&[(-1, 1), (1, 1)])
            .mul(&d(&[(-1, 1), (1, 1)]))
            .mul(&d(&[(2, 1), (1, 1)]));
        let sq = p.squarefree_decomposition();
        assert_eq!(
            sq,
            vec![(d(&[(2, 1), (1, 1)]), 1), (d(&[(-1, 1), (1, 1)]), 2)]
        );
        let x4 = d(&[(0, 1), (0, 1), (0, 1), (0, 1), (1, 1)]);
        assert_eq!(
            x4.squarefree_decomposition(),
            vec![(d(&[(0, 1), (1, 1)]), 4)]
        );
    }

    #[test]
    fn roots() {
        // 16 x^3 - 4x = 4x(2x-1)(2x+1)
        let p = d(&[(0, 1), (-4, 1), (0, 1), (16, 1)]);
        assert_eq!(
            p.rational_roots().unwrap(),
            vec![rat(-1, 2), rat(0, 1), rat(1, 2)]
        );
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }
}
