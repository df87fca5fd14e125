use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::Monomial;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseOrder {
    Lex,
    GrevLex,
}

impl BaseOrder {
    fn cmp_slices(self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            BaseOrder::Lex => a.cmp(b),
            BaseOrder::GrevLex => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                da.cmp(&db).then_with(|| {
                    // Equal degree: the smaller exponent in the last
                    // differing variable wins.
                    for (x, y) in a.iter().zip(b).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }
}

/// A monomial order. `Block` compares the first `front_count` variables
/// first and breaks ties on the rest, which gives the elimination property
/// for the front block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum OrderSpec {
    Lex,
    #[default]
    GrevLex,
    Block {
        front_count: usize,
        front: BaseOrder,
        back: BaseOrder,
    },
}

impl OrderSpec {
    /// Lex on the first `k` variables, GrevLex on the rest.
    pub fn elimination(k: usize) -> Self {
        OrderSpec::Block {
            front_count: k,
            front: BaseOrder::Lex,
            back: BaseOrder::GrevLex,
        }
    }

    pub fn validate(&self, nvars: usize) -> Result<()> {
        match self {
            OrderSpec::Block { front_count, .. } if *front_count == 0 || *front_count >= nvars => {
                Err(Error::InvalidArgument(format!(
                    "block size {front_count} must be strictly between 0 and {nvars}"
                )))
            }
            _ => Ok(()),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exps(a.exps(), b.exps())
    }

    pub fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        match *self {
            OrderSpec::Lex => BaseOrder::Lex.cmp_slices(a, b),
            OrderSpec::GrevLex => BaseOrder::GrevLex.cmp_slices(a, b),
            OrderSpec::Block {
                front_count,
                front,
                back,
            } => {
                let k = front_count.min(a.len());
                front
                    .cmp_slices(&a[..k], &b[..k])
                    .then_with(|| back.cmp_slices(&a[k..], &b[k..]))
            }
        }
    }
}

impl FromStr for OrderSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "lex" => Ok(OrderSpec::Lex),
            "grevlex" => Ok(OrderSpec::GrevLex),
            other => {
                let k = other
                    .strip_prefix("block:")
                    .and_then(|k| k.parse::<usize>().ok())
                    .ok_or_else(|| {
                        Error::InvalidArgument(format!(
                            "order must be lex, grevlex or block:<k>, got `{other}`"
                        ))
                    })?;
                Ok(OrderSpec::elimination(k))
            }
        }
    }
}

impl fmt::Display for OrderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderSpec::Lex => write!(f, "lex"),
            OrderSpec::GrevLex => write!(f, "grevlex"),
            OrderSpec::Block { front_count, .. } => write!(f, "block:{front_count}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn orders() -> Vec<OrderSpec> {
        vec![
            OrderSpec::Lex,
            OrderSpec::GrevLex,
            OrderSpec::elimination(1),
            OrderSpec::elimination(2),
            OrderSpec::Block {
                front_count: 2,
                front: BaseOrder::GrevLex,
                back: BaseOrder::Lex,
            },
        ]
    }

    #[test]
    fn grevlex_reference_values() {
        // x^2 vs y^3 and the classic x*z^2 < y^3 ... grevlex tie-breaks.
        assert_eq!(
            OrderSpec::GrevLex.cmp(&m(&[2, 0]), &m(&[0, 3])),
            Ordering::Less
        );
        assert_eq!(
            OrderSpec::Lex.cmp(&m(&[2, 0]), &m(&[0, 3])),
            Ordering::Greater
        );
        // degree 3 in x,y,z: x^2y > xy^2 > y^3 > x^2z > xyz > y^2z > xz^2 > yz^2 > z^3
        let seq = [
            [2, 1, 0],
            [1, 2, 0],
            [0, 3, 0],
            [2, 0, 1],
            [1, 1, 1],
            [0, 2, 1],
            [1, 0, 2],
            [0, 1, 2],
            [0, 0, 3],
        ];
        for w in seq.windows(2) {
            assert_eq!(
                OrderSpec::GrevLex.cmp(&m(&w[0]), &m(&w[1])),
                Ordering::Greater
            );
        }
    }

    #[test]
    fn parse_and_validate() {
        assert_eq!(
            "block:2".parse::<OrderSpec>().unwrap(),
            OrderSpec::elimination(2)
        );
        assert!("block:x".parse::<OrderSpec>().is_err());
        assert!(OrderSpec::elimination(3).validate(3).is_err());
        assert!(OrderSpec::elimination(0).validate(3).is_err());
        assert!(OrderSpec::elimination(2).validate(3).is_ok());
    }

    fn arb_mono() -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u32..4, 4).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn order_axioms(a in arb_mono(), b in arb_mono(), c in arb_mono()) {
            for o in orders() {
                // totality and antisymmetry
                prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
                prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
                // transitivity
                if o.cmp(&a, &b) != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
                    prop_assert_ne!(o.cmp(&a, &c), Ordering::Greater);
                }
                // multiplicativity
                prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&c), &b.mul(&c)));
                // 1 is minimal
                prop_assert_ne!(o.cmp(&Monomial::one(4), &a), Ordering::Greater);
            }
        }

        #[test]
        fn block_elimination_property(a in arb_mono(), b in arb_mono(), k in 1usize..4) {
            let front_free = |m: &Monomial| m.exps()[..k].iter().all(|e| *e == 0);
            let o = OrderSpec::elimination(k);
            if !front_free(&a) && front_free(&b) {
                prop_assert_eq!(o.cmp(&a, &b), Ordering::Greater);
            }
        }
    }
}
