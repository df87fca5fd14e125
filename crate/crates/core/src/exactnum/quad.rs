use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{rational_sqrt, CoeffParts, FieldConfig, Rational, Scalar};
use crate::error::{Error, Result};

/// An element `rat + irr * sqrt(d)` of a real quadratic field.
///
/// The radicand travels with the value so that elements stay self-describing;
/// it is normalized to 0 whenever `irr = 0`, which makes the derived
/// equality and hashing componentwise on canonical forms. Mixing two
/// irrational values over different radicands is a logic error and panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    rat: Rational,
    irr: Rational,
    d: u64,
}

impl QuadExt {
    pub fn new(rat: Rational, irr: Rational, d: u64) -> Result<Self> {
        if !irr.is_zero() {
            FieldConfig::quadratic(d)?;
        }
        Ok(Self::canonical(rat, irr, d))
    }

    fn canonical(rat: Rational, irr: Rational, d: u64) -> Self {
        let d = if irr.is_zero() { 0 } else { d };
        Self { rat, irr, d }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rat
    }

    pub fn irrational_part(&self) -> &Rational {
        &self.irr
    }

    /// Radicand of an irrational value; `None` for elements of Q.
    pub fn radicand(&self) -> Option<u64> {
        (self.d != 0).then_some(self.d)
    }

    pub fn conjugate(&self) -> Self {
        Self::canonical(self.rat.clone(), -self.irr.clone(), self.d)
    }

    /// `rat^2 - d * irr^2`.
    pub fn norm(&self) -> Rational {
        &self.rat * &self.rat - Rational::from_integer(self.d.into()) * &self.irr * &self.irr
    }

    fn common_d(&self, other: &Self) -> u64 {
        match (self.d, other.d) {
            (0, d) | (d, 0) => d,
            (a, b) if a == b => a,
            (a, b) => panic!("mixing Q(sqrt {a}) and Q(sqrt {b}) elements"),
        }
    }

    fn signum(&self) -> Ordering {
        let rs = self.rat.cmp(&Rational::zero());
        let is = self.irr.cmp(&Rational::zero());
        match (rs, is) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (a, b) if a == b => a,
            // Opposite signs: compare rat^2 with d*irr^2.
            (rs, _) => {
                let lhs = &self.rat * &self.rat;
                let rhs = Rational::from_integer(self.d.into()) * &self.irr * &self.irr;
                match lhs.cmp(&rhs) {
                    Ordering::Greater => rs,
                    Ordering::Less => rs.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }
}

impl From<Rational> for QuadExt {
    fn from(r: Rational) -> Self {
        Self::canonical(r, Rational::zero(), 0)
    }
}

impl Zero for QuadExt {
    fn zero() -> Self {
        Rational::zero().into()
    }

    fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }
}

impl One for QuadExt {
    fn one() -> Self {
        Rational::one().into()
    }
}

impl Add for QuadExt {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let d = self.common_d(&rhs);
        Self::canonical(self.rat + rhs.rat, self.irr + rhs.irr, d)
    }
}

impl Sub for QuadExt {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        let d = self.common_d(&rhs);
        Self::canonical(self.rat - rhs.rat, self.irr - rhs.irr, d)
    }
}

impl Mul for QuadExt {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let d = self.common_d(&rhs);
        let dd = Rational::from_integer(d.into());
        let rat = &self.rat * &rhs.rat + dd * &self.irr * &rhs.irr;
        let irr = &self.rat * &rhs.irr + &self.irr * &rhs.rat;
        Self::canonical(rat, irr, d)
    }
}

impl Div for QuadExt {
    type Output = Self;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero")
    }
}

impl Neg for QuadExt {
    type Output = Self;

    fn neg(self) -> Self {
        Self::canonical(-self.rat, -self.irr, self.d)
    }
}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadExt {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).signum()
    }
}

impl Scalar for QuadExt {
    fn from_rational(r: Rational) -> Self {
        r.into()
    }

    fn to_rational(&self) -> Option<Rational> {
        self.irr.is_zero().then(|| self.rat.clone())
    }

    fn generator(cfg: &FieldConfig) -> Option<Self> {
        cfg.d()
            .map(|d| Self::canonical(Rational::zero(), Rational::one(), d))
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // (r + s√d)^-1 = (r - s√d) / (r^2 - d s^2)
        let n = self.norm();
        let conj = self.conjugate();
        Ok(Self::canonical(conj.rat / &n, conj.irr / &n, self.d))
    }

    fn sqrt_rational(r: &Rational, cfg: &FieldConfig) -> Option<Self> {
        if let Some(u) = rational_sqrt(r) {
            return Some(u.into());
        }
        let d = cfg.d()?;
        let v = rational_sqrt(&(r / Rational::from_integer(d.into())))?;
        Some(Self::canonical(Rational::zero(), v, d))
    }

    fn approx_f64(&self) -> f64 {
        let r = self.rat.to_f64().unwrap_or(f64::NAN);
        let i = self.irr.to_f64().unwrap_or(f64::NAN);
        r + i * (self.d as f64).sqrt()
    }

    fn parts(&self) -> CoeffParts {
        if self.irr.is_zero() {
            return self.rat.parts();
        }
        let irr_body = |q: &Rational| {
            if q.abs().is_one() {
                "s".to_string()
            } else {
                format!("{}*s", q.abs())
            }
        };
        if self.rat.is_zero() {
            return CoeffParts {
                negative: self.irr.is_negative(),
                body: irr_body(&self.irr),
                compound: false,
                is_unit: false,
            };
        }
        let sign = if self.irr.is_negative() { '-' } else { '+' };
        CoeffParts {
            negative: false,
            body: format!("{} {} {}", self.rat, sign, irr_body(&self.irr)),
            compound: true,
            is_unit: false,
        }
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.parts();
        if p.negative {
            write!(f, "-")?;
        }
        write!(f, "{}", p.body)
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d == 0 {
            write!(f, "{}", self.rat)
        } else {
            write!(f, "{} + {}*sqrt({})", self.rat, self.irr, self.d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use proptest::prelude::*;

    fn q(r: (i64, i64), s: (i64, i64)) -> QuadExt {
        QuadExt::new(rat(r.0, r.1), rat(s.0, s.1), 3).unwrap()
    }

    fn arb_quad() -> impl Strategy<Value = QuadExt> {
        (-20i64..20, 1i64..8, -20i64..20, 1i64..8).prop_map(|(a, b, c, d)| q((a, b), (c, d)))
    }

    #[test]
    fn rendering() {
        assert_eq!(q((0, 1), (1, 4)).to_string(), "1/4*s");
        assert_eq!(q((0, 1), (-1, 1)).to_string(), "-s");
        assert_eq!(q((3, 4), (-1, 4)).to_string(), "3/4 - 1/4*s");
        assert_eq!(q((-2, 1), (0, 1)).to_string(), "-2");
    }

    #[test]
    fn canonical_radicand() {
        let a = q((1, 2), (1, 1));
        let b = a.clone() - q((0, 1), (1, 1));
        assert_eq!(b.radicand(), None);
        assert_eq!(b, QuadExt::from(rat(1, 2)));
    }

    #[test]
    fn ordering_follows_real_embedding() {
        // 2 - sqrt3 > 0, 1 - sqrt3 < 0, 7/4 vs sqrt3
        assert!(q((2, 1), (-1, 1)) > QuadExt::zero());
        assert!(q((1, 1), (-1, 1)) < QuadExt::zero());
        assert!(QuadExt::from(rat(7, 4)) > q((0, 1), (1, 1)));
        assert!(QuadExt::from(rat(17, 10)) < q((0, 1), (1, 1)));
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_quad(), b in arb_quad(), c in arb_quad()) {
            prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
            prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
            if !a.is_zero() {
                prop_assert_eq!(a.clone() * a.inv().unwrap(), QuadExt::one());
            }
        }

        #[test]
        fn canonical_after_ops(a in arb_quad(), b in arb_quad()) {
            for v in [a.clone() + b.clone(), a.clone() * b.clone(), a - b] {
                prop_assert!(v.rational_part().denom() > &0.into());
                prop_assert!(v.irrational_part().denom() > &0.into());
                prop_assert_eq!(v.radicand().is_none(), v.irrational_part().is_zero());
            }
        }

        #[test]
        fn ordering_matches_floats(a in arb_quad(), b in arb_quad()) {
            let (fa, fb) = (a.approx_f64(), b.approx_f64());
            if (fa - fb).abs() > 1e-9 {
                prop_assert_eq!(a.cmp(&b), fa.partial_cmp(&fb).unwrap());
            }
        }

        #[test]
        fn sqrt_squares_back(n in 0i64..200, d in 1i64..50) {
            let cfg = FieldConfig::quadratic(3).unwrap();
            let r = rat(n, d);
            if let Some(t) = QuadExt::sqrt_rational(&r, &cfg) {
                prop_assert_eq!(t.clone() * t.clone(), QuadExt::from(r));
                prop_assert!(t >= QuadExt::zero());
            }
        }
    }
}
