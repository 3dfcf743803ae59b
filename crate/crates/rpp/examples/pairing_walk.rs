//! The diagonal pairing walk: a single iterated step visits every point of
//! the quarter-plane exactly once, which packs two registers into one.

use num_bigint::BigInt;
use num_traits::Zero;
use rpp::arith::{cp, cu, cu_in};
use rpp::prf::{cantor_pair, cantor_unpair};
use rpp::{eval, eval_fast, print_registers, print_term, regs};

fn main() {
    // cu_in walks n steps along the diagonals from (0, 0), leaving the
    // step count in place: n :: 0 :: 0  ->  n :: x :: y.
    let walk = cu_in();
    println!("walker: {}\n", print_term(&walk));
    println!("the first points of the walk:");
    for n in 0..8i64 {
        let out = eval(&walk, regs(&[n, 0, 0]));
        println!("  step {n} lands on ({}, {})", out[1], out[2]);
    }

    // cp and cu move the code into register 0 and clear the scratch space,
    // so they compose like any other term.
    let (pack, unpack) = (cp(), cu());
    let packed = eval(&pack, regs(&[3, 4, 0, 0, 0]));
    println!("\npack (3, 4)      : {}", print_registers(&packed));
    let unpacked = eval(&unpack, packed);
    println!("unpack again     : {}", print_registers(&unpacked));
    assert_eq!(unpacked, regs(&[3, 4, 0, 0, 0]));

    // The closed-form evaluator jumps the whole walk at once, so codes far
    // beyond anything a step-by-step run could reach stay instant.
    let n: BigInt = BigInt::from(10u8).pow(24);
    let mut input = vec![n.clone()];
    input.resize(5, BigInt::zero());
    let out = eval_fast(&unpack, input);
    let (x, y) = (out[0].clone(), out[1].clone());
    println!("\nunpack 10^24     : ({x}, {y})");
    assert_eq!(cantor_pair(&x, &y), n);
    assert_eq!(cantor_unpair(&n), (x, y));
    println!("matches the arithmetic oracle, round-trips exactly");
}
