//! A reversible term language over integer registers.
//!
//! Terms built from nine constructors denote bijections on register lists;
//! [`eval`](eval::eval) runs them forwards, [`Term::inverse`](term::Term)
//! builds the exact reverse program, and the combinators in
//! [`combinators`] and [`arith`] assemble reversible arithmetic — pairing
//! codecs, Euclidean division, integer square roots — out of them.
//! [`compile`] translates unary primitive-recursive expressions into terms
//! that add their value into a register, and [`syntax`] gives everything a
//! text form.

pub mod arith;
pub mod cli;
pub mod combinators;
pub mod compile;
pub mod eval;
pub mod fast;
pub mod prf;
pub mod syntax;
pub mod term;

pub use compile::{check_encode, compile, EncodeReport, PairingMode};
pub use eval::{eval, regs, trace, Registers};
pub use fast::eval_fast;
pub use syntax::{parse_prf, parse_registers, parse_term, print_prf, print_registers, print_term, ParseError};
pub use term::Term;
