//! The reversible term language: nine constructors, each denoting a
//! permutation of integer register lists.

use std::fmt;

/// A term of the reversible language.
///
/// Every term denotes a bijection on register lists of any length; the
/// first `arity` registers are the term's window, the rest pass through.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    /// Identity on `n` wires.
    Id(usize),
    /// Negate the first register.
    Ne,
    /// Increment the first register.
    Su,
    /// Decrement the first register.
    Pr,
    /// Swap the first two registers.
    Sw,
    /// Series composition: left first, then right.
    Co(Box<Term>, Box<Term>),
    /// Parallel composition: left on its own window, right below it.
    Pa(Box<Term>, Box<Term>),
    /// Iterate the body as many times as the (nonnegative) head value.
    It(Box<Term>),
    /// Select a branch by the sign of the head: positive, zero, negative.
    If(Box<Term>, Box<Term>, Box<Term>),
}

use Term::*;

impl Term {
    /// Number of registers the term can read or write.
    pub fn arity(&self) -> usize {
        match self {
            Id(n) => *n,
            Ne | Su | Pr => 1,
            Sw => 2,
            Co(f, g) => f.arity().max(g.arity()),
            Pa(f, g) => f.arity() + g.arity(),
            It(f) => 1 + f.arity(),
            If(f, g, h) => 1 + f.arity().max(g.arity()).max(h.arity()),
        }
    }

    /// The inverse permutation, built structurally.
    pub fn inverse(&self) -> Term {
        match self {
            Id(n) => Id(*n),
            Ne => Ne,
            Su => Pr,
            Pr => Su,
            Sw => Sw,
            Co(f, g) => Co(Box::new(g.inverse()), Box::new(f.inverse())),
            Pa(f, g) => Pa(Box::new(f.inverse()), Box::new(g.inverse())),
            It(f) => It(Box::new(f.inverse())),
            If(f, g, h) => If(
                Box::new(f.inverse()),
                Box::new(g.inverse()),
                Box::new(h.inverse()),
            ),
        }
    }

    /// Number of constructors in the term.
    pub fn size(&self) -> usize {
        match self {
            Id(_) | Ne | Su | Pr | Sw => 1,
            Co(f, g) | Pa(f, g) => 1 + f.size() + g.size(),
            It(f) => 1 + f.size(),
            If(f, g, h) => 1 + f.size() + g.size() + h.size(),
        }
    }
}

/// Series composition, `f` then `g`.
pub fn co(f: Term, g: Term) -> Term {
    Co(Box::new(f), Box::new(g))
}

/// Series composition of a whole pipeline, left to right.
pub fn seq(terms: impl IntoIterator<Item = Term>) -> Term {
    let mut it = terms.into_iter();
    let first = it.next().expect("seq of no terms");
    it.fold(first, co)
}

/// Parallel composition, `f` on top of `g`.
pub fn pa(f: Term, g: Term) -> Term {
    Pa(Box::new(f), Box::new(g))
}

/// Iteration of `f`, counted by the head register.
pub fn it(f: Term) -> Term {
    It(Box::new(f))
}

/// Sign dispatch on the head register: `f` above zero, `g` at zero, `h` below.
pub fn if_(f: Term, g: Term, h: Term) -> Term {
    If(Box::new(f), Box::new(g), Box::new(h))
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::syntax::print_term(self))
    }
}
