//! Euclidean division and integer square roots, computed by reversible
//! counting: no subtraction loops, just iterated walks that never destroy
//! their inputs.

use num_bigint::BigInt;
use num_traits::Zero;
use rpp::arith::{divmod, sqrt};
use rpp::{eval, eval_fast, print_registers, regs};

fn main() {
    // divmod: m :: n :: 0 :: 0 :: 0  ->  m :: n :: r :: (n - r) :: q
    // with m = q * (n + 1) + r. The divisor is n + 1 so the term is total.
    let d = divmod();
    println!("dividing by 3 (n = 2):");
    for m in [7i64, 8, 9, 10] {
        let out = eval(&d, regs(&[m, 2, 0, 0, 0]));
        println!(
            "  {m} = {q} * 3 + {r}    registers {}",
            print_registers(&out),
            q = out[4],
            r = out[2],
        );
    }

    // sqrt: n :: 0^5  ->  n :: r :: m :: 0 :: 0 :: s with s^2 + r = n,
    // r <= 2s (m = 2s - r is the walk's leftover phase).
    let root = sqrt();
    println!("\ntruncated square roots:");
    for n in [0i64, 10, 16, 99] {
        let out = eval(&root, regs(&[n, 0, 0, 0, 0, 0]));
        println!("  sqrt({n}) = {s}, residue {r}", s = out[5], r = out[1]);
    }

    // Both are ordinary terms, so both run backwards: feeding the inverse a
    // quotient/remainder layout reconstructs the dividend layout.
    let back = d.inverse();
    let packed = eval(&d, regs(&[22, 6, 0, 0, 0]));
    assert_eq!(eval(&back, packed), regs(&[22, 6, 0, 0, 0]));
    println!("\ndividing and then un-dividing restores the input exactly");

    // The closed-form evaluator extracts roots of numbers with hundreds of
    // digits without stepping the walk.
    let big_n = BigInt::from(7u8).pow(300);
    let mut input = vec![big_n.clone()];
    input.resize(6, BigInt::zero());
    let out = eval_fast(&root, input);
    let s = &out[5];
    assert!(s * s <= big_n && (s + 1u8) * (s + 1u8) > big_n);
    println!("sqrt(7^300) has {} digits", s.to_string().len());
}
