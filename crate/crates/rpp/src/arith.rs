//! Reversible arithmetic: pairing walks, division, square roots, and the
//! square packing used by the compiler.
//!
//! Everything here is assembled from [`step`](crate::combinators::step)
//! iterations plus rewiring, and each builder's contract is checked against
//! the numeric oracles in [`crate::prf`].

use crate::combinators::{add_wire, mul, rw, step, sub_wire};
use crate::term::{co, if_, it, pa, seq, Term};

/// Walks the pairing path: `n :: 0 :: 0 :: Z` becomes `n :: x :: y :: Z`
/// where `(x, y)` is the `n`-th point of the diagonal walk, i.e.
/// `cantor_pair(x, y) = n`.
pub fn cu_in() -> Term {
    it(step(&Term::Su))
}

/// Five wires `(x, y, s, i, p)`: from `x :: y :: 0 :: 0 :: 0` computes
/// `x :: y :: 0 :: 0 :: cantor_pair(x, y)` — the pair survives alongside
/// its code, ancillae return to zero.
pub fn cp_in() -> Term {
    // triangle body: i += 1, then p += i; iterating s times from (0, 0)
    // leaves i = s and p = 1 + 2 + … + s
    let triangle = it(co(Term::Su, it(Term::Su)));
    let front = rw(&[2, 3, 4], 5);
    seq([
        add_wire(0, 2, 5), // s = x
        add_wire(1, 2, 5), // s = x + y
        front.clone(),
        triangle,
        front.inverse(),
        add_wire(0, 4, 5), // p = s(s+1)/2 + x
        sub_wire(0, 3, 5), // i back to zero…
        sub_wire(1, 3, 5),
        sub_wire(0, 2, 5), // …and s too
        sub_wire(1, 2, 5),
    ])
}

/// `x :: y :: 0 :: 0 :: 0` becomes `cantor_pair(x, y) :: 0 :: 0 :: 0 :: 0`:
/// compute the code, then walk the pairing path backwards to consume the
/// original pair.
pub fn cp() -> Term {
    seq([
        cp_in(),
        rw(&[4, 0, 1], 5),
        it(step(&Term::Su).inverse()),
    ])
}

/// Inverse of [`cp`]: `n :: 0 :: 0 :: 0 :: 0` becomes
/// `x :: y :: 0 :: 0 :: 0` with `cantor_pair(x, y) = n`.
pub fn cu() -> Term {
    cp().inverse()
}

/// Five wires: `m :: n :: 0 :: 0 :: 0` becomes
/// `m :: n :: r :: (n - r) :: q` where `m = q(n+1) + r` and `0 <= r <= n`.
pub fn divmod() -> Term {
    // Each of the m steps advances the remainder wire and retreats its
    // complement; when the complement hits zero the jump resets the
    // remainder and bumps the quotient.
    seq([
        add_wire(1, 3, 5),
        it(pa(Term::Id(1), step(&pa(Term::Id(1), Term::Su)))),
    ])
}

/// Six wires: `n :: 0^5` becomes `n :: r :: (2s - r) :: 0 :: 0 :: s` where
/// `s = nat_sqrt(n)` and `r = n - s^2`.
pub fn sqrt() -> Term {
    // Walk rows of width 2s+1; each exhausted row bumps the row counter and
    // widens the next row by two.
    let widen = pa(co(Term::Su, Term::Su), Term::Su);
    seq([it(step(&widen)), rw(&[0, 1, 2, 4, 5, 3], 6)])
}

/// Five wires `(x, y, d, t, p)`: from `x :: y :: 0 :: 0 :: 0` computes
/// `x :: y :: 0 :: 0 :: nat_mkpair(x, y)`.
pub fn mkpair_in() -> Term {
    // d = x - y selects the branch: x >= y packs to x^2 + x + y,
    // x < y packs to y^2 + x. Wires inside the branch: (x, y, t, p).
    let ge = seq([
        add_wire(0, 2, 4), // t = x
        rw(&[0, 2, 3], 4),
        mul(), // p = x * t = x^2
        rw(&[0, 2, 3], 4).inverse(),
        add_wire(0, 3, 4),
        add_wire(1, 3, 4),
        sub_wire(0, 2, 4), // t back to zero
    ]);
    let lt = seq([
        add_wire(1, 2, 4), // t = y
        rw(&[1, 2, 3], 4),
        mul(), // p = y * t = y^2
        rw(&[1, 2, 3], 4).inverse(),
        add_wire(0, 3, 4),
        sub_wire(1, 2, 4),
    ]);
    let front = rw(&[2], 5);
    seq([
        add_wire(0, 2, 5),
        sub_wire(1, 2, 5),
        front.clone(),
        if_(ge.clone(), ge, lt),
        front.inverse(),
        add_wire(1, 2, 5), // d back to zero
        sub_wire(0, 2, 5),
    ])
}

/// Eight wires `(p, a, b, c, d, e, x, y)`: from `p :: 0^7` computes
/// `p :: 0^5 :: x :: y` where `(x, y) = nat_unpair(p)`.
pub fn unpair_in() -> Term {
    // sqrt leaves (p, r, 2s - r, 0, 0, s); the sign of r - s picks the
    // square's row or column, and running sqrt backwards cleans up.
    // Wires inside the branch: (p, r, 2s - r, 0, s, x, y).
    let row = seq([
        add_wire(4, 5, 7), // x = s
        add_wire(1, 6, 7), // y = r
        sub_wire(4, 6, 7), // y = r - s
    ]);
    let col = seq([
        add_wire(1, 5, 7), // x = r
        add_wire(4, 6, 7), // y = s
    ]);
    let front = rw(&[3], 8);
    seq([
        pa(sqrt(), Term::Id(2)),
        add_wire(1, 3, 8), // c = r
        sub_wire(5, 3, 8), // c = r - s
        front.clone(),
        if_(row.clone(), row, col),
        front.inverse(),
        add_wire(5, 3, 8), // c back to zero
        sub_wire(1, 3, 8),
        pa(sqrt(), Term::Id(2)).inverse(),
    ])
}

/// Eight wires: `x :: y :: 0^6` becomes `nat_mkpair(x, y) :: 0^7`.
pub fn mkpair_term() -> Term {
    seq([
        pa(mkpair_in(), Term::Id(3)),
        rw(&[4, 2, 3, 5, 6, 7, 0, 1], 8),
        unpair_in().inverse(),
    ])
}

/// Inverse of [`mkpair_term`]: `p :: 0^7` becomes `x :: y :: 0^6` with
/// `nat_mkpair(x, y) = p`.
pub fn unpair_term() -> Term {
    mkpair_term().inverse()
}
