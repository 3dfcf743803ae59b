//! Compiling unary primitive recursion into reversible terms.
//!
//! `compile(e, mode)` produces a term `t` such that for every integer `z`
//! and natural `n`:
//!
//! ```text
//! eval(t, z :: n :: 0^(arity-2)) = (z + value(e, n)) :: n :: 0^(arity-2)
//! ```
//!
//! The compiled term adds the expression's value into the first register,
//! preserves the argument, and returns every ancilla to zero. Recursion
//! (`prec`) runs its loop under Bennett-style uncomputation: each round
//! packs the previous accumulator onto a history stack, and after the
//! answer is copied out the whole loop runs backwards to unwind it. The
//! [`PairingMode`] picks the codec for that internal stack — the square
//! packer keeps values small, the diagonal packer stresses wide ranges —
//! and has no effect on the function computed.

use crate::arith::{cp, mkpair_in, mkpair_term, unpair_in};
use crate::combinators::{add_wire, rw};
use crate::eval::Registers;
use crate::fast::eval_fast;
use crate::prf::{prf_eval, PrfExpr};
use crate::syntax::print_prf;
use crate::term::{it, pa, seq, Term};
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;

/// Which reversible codec packs the recursion history stack.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairingMode {
    /// Concentric-shell packing: stack codes stay near the square of the
    /// largest entry.
    Square,
    /// Anti-diagonal packing: stack codes grow quadratically in the sum of
    /// the entries.
    Cantor,
}

/// Conjugate by a rewiring so `t` acts on the named wires of a `width`-wide
/// register file, in the order given.
fn apply_at(t: Term, wires: &[usize], width: usize) -> Term {
    debug_assert_eq!(wires.len(), t.arity(), "wire list must match arity");
    debug_assert!(wires.iter().all(|&w| w < width));
    let conj = rw(wires, width);
    seq([
        conj.clone(),
        pa(t, Term::Id(width - wires.len())),
        conj.inverse(),
    ])
}

/// Compile an expression to a reversible term. See the module docs for the
/// calling convention.
pub fn compile(e: &PrfExpr, mode: PairingMode) -> Term {
    match e {
        // z += 0
        PrfExpr::Zero => Term::Id(2),
        // z += n + 1
        PrfExpr::Succ => seq([add_wire(1, 0, 2), Term::Su]),
        // z += left component of n
        PrfExpr::Left => {
            let un = pa(Term::Id(1), unpair_in());
            seq([un.clone(), add_wire(7, 0, 9), un.inverse()])
        }
        // z += right component of n
        PrfExpr::Right => {
            let un = pa(Term::Id(1), unpair_in());
            seq([un.clone(), add_wire(8, 0, 9), un.inverse()])
        }
        // z += F(G(n)): compute m = G(n) beside it, feed it to F, uncompute
        PrfExpr::Comp(f, g) => {
            let tf = compile(f, mode);
            let tg = compile(g, mode);
            let (af, ag) = (tf.arity(), tg.arity());
            let width = af.max(ag) + 1;
            let mut g_wires = vec![2, 1];
            g_wires.extend(3..=ag);
            let mut f_wires = vec![0, 2];
            f_wires.extend(3..=af);
            let g_phase = apply_at(tg, &g_wires, width);
            let f_phase = apply_at(tf, &f_wires, width);
            seq([g_phase.clone(), f_phase, g_phase.inverse()])
        }
        // z += pack(F(n), G(n)) with the square codec (that is the pairing
        // the expression language itself denotes)
        PrfExpr::Pair(f, g) => {
            let tf = compile(f, mode);
            let tg = compile(g, mode);
            let (af, ag) = (tf.arity(), tg.arity());
            let width = 7.max(af + 2).max(ag + 2);
            let mut f_wires = vec![2, 1];
            f_wires.extend(4..af + 2);
            let mut g_wires = vec![3, 1];
            g_wires.extend(4..ag + 2);
            let f_phase = apply_at(tf, &f_wires, width);
            let g_phase = apply_at(tg, &g_wires, width);
            let pack = apply_at(mkpair_in(), &[2, 3, 4, 5, 6], width);
            seq([
                f_phase.clone(),
                g_phase.clone(),
                pack.clone(),
                add_wire(6, 0, width),
                pack.inverse(),
                g_phase.inverse(),
                f_phase.inverse(),
            ])
        }
        PrfExpr::Prec(f, g) => compile_prec(f, g, mode),
    }
}

/// Wires: 0 z, 1 n, 2 u, 3 v, 4 seed, 5 y, 6 acc, 7 t, 8 stack, 9+ scratch.
///
/// Split n into (u, v), seed the accumulator with F(u), then iterate v
/// times: pack the loop argument pair(seed, pair(y, acc)), add G of it into
/// a fresh register, unpack, push the old accumulator onto the stack, swap
/// the new value in, and bump the counter. Copy the result into z, then run
/// every phase backwards.
fn compile_prec(f: &PrfExpr, g: &PrfExpr, mode: PairingMode) -> Term {
    let tf = compile(f, mode);
    let tg = compile(g, mode);
    let (af, ag) = (tf.arity(), tg.arity());
    let width = 15.max(ag + 13).max(af + 3);
    let body_width = width - 1;

    // body-local wires (after v moves to the front and drops away):
    // 0 z, 1 n, 2 u, 3 seed, 4 y, 5 acc, 6 t, 7 stack, 8+ scratch
    let pack_count = apply_at(mkpair_in(), &[4, 5, 8, 9, 10], body_width);
    let pack_arg = apply_at(mkpair_in(), &[3, 10, 11, 12, 13], body_width);
    let mut g_wires = vec![6, 13];
    g_wires.extend(14..ag + 12);
    let g_call = apply_at(tg, &g_wires, body_width);
    let push = match mode {
        PairingMode::Square => {
            apply_at(mkpair_term(), &[5, 7, 8, 9, 10, 11, 12, 13], body_width)
        }
        PairingMode::Cantor => apply_at(cp(), &[5, 7, 8, 9, 10], body_width),
    };
    let body = seq([
        pack_count.clone(),
        pack_arg.clone(),
        g_call,
        pack_arg.inverse(),
        pack_count.inverse(),
        push,
        apply_at(Term::Sw, &[5, 7], body_width),
        apply_at(Term::Sw, &[5, 6], body_width),
        apply_at(Term::Su, &[4], body_width),
    ]);

    let split_n = apply_at(unpair_in(), &[1, 4, 5, 6, 7, 8, 2, 3], width);
    let mut f_wires = vec![4, 2];
    f_wires.extend(5..af + 3);
    let seed = apply_at(tf, &f_wires, width);
    let seed_acc = add_wire(4, 6, width);
    let front = rw(&[3], width);
    let run = seq([front.clone(), it(body), front.inverse()]);

    seq([
        split_n.clone(),
        seed.clone(),
        seed_acc.clone(),
        run.clone(),
        add_wire(6, 0, width),
        run.inverse(),
        seed_acc.inverse(),
        seed.inverse(),
        split_n.inverse(),
    ])
}

/// One input where the compiled term disagreed with the expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodeFailure {
    pub z: BigInt,
    pub n: BigInt,
    pub expected: Registers,
    pub actual: Registers,
}

/// Outcome of sweeping a compiled term against its expression.
#[derive(Debug, Clone)]
pub struct EncodeReport {
    pub expression: String,
    pub term_arity: usize,
    pub samples_checked: usize,
    pub failures: Vec<EncodeFailure>,
}

impl fmt::Display for EncodeReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            out,
            "{} samples, {} failures",
            self.samples_checked,
            self.failures.len()
        )
    }
}

/// Run the compiled term on `z :: n :: 0 ...` for every `z` in `zs` and
/// `n` below `max_n`, comparing against the expression's value. Failures
/// come back sorted by `(z, n)`.
pub fn check_encode(e: &PrfExpr, t: &Term, max_n: u64, zs: &[BigInt]) -> EncodeReport {
    let arity = t.arity().max(2);
    let mut zs = zs.to_vec();
    zs.sort();
    zs.dedup();
    let mut failures = Vec::new();
    let mut samples = 0usize;
    for z in &zs {
        for n in 0..max_n {
            let n = BigInt::from(n);
            samples += 1;
            let mut input = vec![BigInt::zero(); arity];
            input[0] = z.clone();
            input[1] = n.clone();
            let mut expected = input.clone();
            expected[0] += prf_eval(e, &n);
            let actual = eval_fast(t, input);
            if actual != expected {
                failures.push(EncodeFailure {
                    z: z.clone(),
                    n,
                    expected,
                    actual,
                });
            }
        }
    }
    EncodeReport {
        expression: print_prf(e),
        term_arity: t.arity(),
        samples_checked: samples,
        failures,
    }
}
