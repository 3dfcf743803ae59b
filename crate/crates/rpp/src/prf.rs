//! Unary primitive recursion over packed pairs, plus the numeric pairing
//! functions used as oracles throughout the test suite.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Integer square root, rounded down. Panics on negative input.
pub fn nat_sqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "nat_sqrt of negative {n}");
    n.sqrt()
}

/// Diagonal pairing: (x, y) goes to the index of (x, y) on the path
/// (0,0), (0,1), (1,0), (0,2), (1,1), (2,0), ... walking each
/// anti-diagonal from the y-axis down to the x-axis.
pub fn cantor_pair(x: &BigInt, y: &BigInt) -> BigInt {
    debug_assert!(!x.is_negative() && !y.is_negative());
    let d = x + y;
    (&d * (&d + 1u32)) / 2u32 + x
}

/// Inverse of [`cantor_pair`].
pub fn cantor_unpair(n: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(!n.is_negative());
    let i = (nat_sqrt(&(n * 8u32 + 1u32)) - 1u32) / 2u32;
    let x = n - &i * (&i + 1u32) / 2u32;
    let y = &i - &x;
    (x, y)
}

/// Square pairing: fills the plane in concentric L-shaped shells, so both
/// components of the preimage are at most sqrt of the code.
pub fn nat_mkpair(x: &BigInt, y: &BigInt) -> BigInt {
    debug_assert!(!x.is_negative() && !y.is_negative());
    if x < y {
        y * y + x
    } else {
        x * x + x + y
    }
}

/// Inverse of [`nat_mkpair`].
pub fn nat_unpair(p: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(!p.is_negative());
    let s = nat_sqrt(p);
    let d = p - &s * &s;
    if d < s {
        (d, s)
    } else {
        let y = &d - &s;
        (s, y)
    }
}

/// Unary primitive-recursive expressions. Every expression denotes a
/// function from one natural number to one natural number; multiple
/// arguments travel packed through [`nat_mkpair`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PrfExpr {
    /// Constantly 0.
    Zero,
    /// n + 1.
    Succ,
    /// First component of the unpacked argument.
    Left,
    /// Second component of the unpacked argument.
    Right,
    /// Pack the results of both subexpressions.
    Pair(Box<PrfExpr>, Box<PrfExpr>),
    /// Apply the second expression, then the first.
    Comp(Box<PrfExpr>, Box<PrfExpr>),
    /// Primitive recursion. The argument is read as a packed pair (u, v);
    /// the base expression seeds the accumulator from u, and the step
    /// expression folds v times over the packed triple (seed, (k, acc)).
    Prec(Box<PrfExpr>, Box<PrfExpr>),
}

impl PrfExpr {
    pub fn size(&self) -> usize {
        match self {
            PrfExpr::Zero | PrfExpr::Succ | PrfExpr::Left | PrfExpr::Right => 1,
            PrfExpr::Pair(f, g) | PrfExpr::Comp(f, g) | PrfExpr::Prec(f, g) => {
                1 + f.size() + g.size()
            }
        }
    }
}

pub fn pair(f: PrfExpr, g: PrfExpr) -> PrfExpr {
    PrfExpr::Pair(Box::new(f), Box::new(g))
}

pub fn comp(f: PrfExpr, g: PrfExpr) -> PrfExpr {
    PrfExpr::Comp(Box::new(f), Box::new(g))
}

pub fn prec(f: PrfExpr, g: PrfExpr) -> PrfExpr {
    PrfExpr::Prec(Box::new(f), Box::new(g))
}

/// Evaluate an expression at a natural number.
pub fn prf_eval(e: &PrfExpr, n: &BigInt) -> BigInt {
    debug_assert!(!n.is_negative(), "prf_eval at negative {n}");
    match e {
        PrfExpr::Zero => BigInt::zero(),
        PrfExpr::Succ => n + 1u32,
        PrfExpr::Left => nat_unpair(n).0,
        PrfExpr::Right => nat_unpair(n).1,
        PrfExpr::Pair(f, g) => nat_mkpair(&prf_eval(f, n), &prf_eval(g, n)),
        PrfExpr::Comp(f, g) => prf_eval(f, &prf_eval(g, n)),
        PrfExpr::Prec(f, g) => {
            let (u, v) = nat_unpair(n);
            let seed = prf_eval(f, &u);
            let mut acc = seed.clone();
            let mut k = BigInt::zero();
            while k < v {
                acc = prf_eval(g, &nat_mkpair(&seed, &nat_mkpair(&k, &acc)));
                k += BigInt::one();
            }
            acc
        }
    }
}

/// Addition of the two packed components, built from the constructors.
/// Handy as a nontrivial recursion in tests and examples.
pub fn prf_add() -> PrfExpr {
    prec(
        pair(PrfExpr::Left, PrfExpr::Right),
        comp(PrfExpr::Succ, comp(PrfExpr::Right, PrfExpr::Right)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn sqrt_rounds_down() {
        for (n, r) in [(0, 0), (1, 1), (2, 1), (3, 1), (4, 2), (8, 2), (9, 3), (99, 9), (100, 10)] {
            assert_eq!(nat_sqrt(&b(n)), b(r));
        }
    }

    #[test]
    fn cantor_pair_walks_the_diagonals() {
        let path = [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0), (0, 3)];
        for (n, (x, y)) in path.into_iter().enumerate() {
            assert_eq!(cantor_pair(&b(x), &b(y)), b(n as i64));
            assert_eq!(cantor_unpair(&b(n as i64)), (b(x), b(y)));
        }
        assert_eq!(cantor_pair(&b(3), &b(4)), b(31));
        assert_eq!(cantor_unpair(&b(31)), (b(3), b(4)));
    }

    #[test]
    fn cantor_roundtrips() {
        for n in 0..2000 {
            let (x, y) = cantor_unpair(&b(n));
            assert_eq!(cantor_pair(&x, &y), b(n));
        }
        for x in 0..60 {
            for y in 0..60 {
                let n = cantor_pair(&b(x), &b(y));
                assert_eq!(cantor_unpair(&n), (b(x), b(y)));
            }
        }
    }

    #[test]
    fn mkpair_shell_layout() {
        assert_eq!(nat_mkpair(&b(0), &b(0)), b(0));
        assert_eq!(nat_mkpair(&b(1), &b(0)), b(2));
        assert_eq!(nat_mkpair(&b(0), &b(1)), b(1));
        assert_eq!(nat_mkpair(&b(1), &b(1)), b(3));
        assert_eq!(nat_mkpair(&b(3), &b(2)), b(14));
        assert_eq!(nat_mkpair(&b(2), &b(3)), b(11));
        assert_eq!(nat_unpair(&b(14)), (b(3), b(2)));
        assert_eq!(nat_unpair(&b(11)), (b(2), b(3)));
    }

    #[test]
    fn mkpair_roundtrips() {
        for p in 0..2000 {
            let (x, y) = nat_unpair(&b(p));
            assert_eq!(nat_mkpair(&x, &y), b(p));
        }
        for x in 0..60 {
            for y in 0..60 {
                let p = nat_mkpair(&b(x), &b(y));
                assert_eq!(nat_unpair(&p), (b(x), b(y)));
            }
        }
    }

    #[test]
    fn mkpair_components_stay_small() {
        for p in 0..5000 {
            let (x, y) = nat_unpair(&b(p));
            let s = nat_sqrt(&b(p));
            assert!(x <= s && y <= s);
        }
    }

    #[test]
    fn prf_base_constructors() {
        assert_eq!(prf_eval(&PrfExpr::Zero, &b(17)), b(0));
        assert_eq!(prf_eval(&PrfExpr::Succ, &b(17)), b(18));
        let packed = nat_mkpair(&b(5), &b(9));
        assert_eq!(prf_eval(&PrfExpr::Left, &packed), b(5));
        assert_eq!(prf_eval(&PrfExpr::Right, &packed), b(9));
    }

    #[test]
    fn prf_pair_and_comp() {
        let e = pair(PrfExpr::Succ, PrfExpr::Zero);
        assert_eq!(prf_eval(&e, &b(4)), nat_mkpair(&b(5), &b(0)));
        let e = comp(PrfExpr::Succ, PrfExpr::Succ);
        assert_eq!(prf_eval(&e, &b(4)), b(6));
        // Pair(Left, Right) repacks what unpacking split: the identity.
        let e = pair(PrfExpr::Left, PrfExpr::Right);
        for n in 0..200 {
            assert_eq!(prf_eval(&e, &b(n)), b(n));
        }
    }

    #[test]
    fn prf_recursion_adds() {
        let add = prf_add();
        for a in 0..12 {
            for c in 0..12 {
                let n = nat_mkpair(&b(a), &b(c));
                assert_eq!(prf_eval(&add, &n), b(a + c), "add({a},{c})");
            }
        }
    }

    #[test]
    fn prf_recursion_sees_counter_and_seed() {
        // step picks the counter: result is the last counter value, i.e.
        // v-1 for v > 0, seed u for v = 0
        let last = prec(
            pair(PrfExpr::Left, PrfExpr::Right),
            comp(PrfExpr::Left, PrfExpr::Right),
        );
        let n = nat_mkpair(&b(7), &b(5));
        assert_eq!(prf_eval(&last, &n), b(4));
        let n = nat_mkpair(&b(7), &b(0));
        assert_eq!(prf_eval(&last, &n), b(7));
    }
}
