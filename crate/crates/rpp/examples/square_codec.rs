//! The square-shell codec: an alternative one-register packing of two
//! numbers whose decoder needs only one square root, which keeps compiled
//! recursion shallow.

use num_bigint::BigInt;
use num_traits::Zero;
use rpp::arith::{mkpair_term, unpair_term};
use rpp::prf::{nat_mkpair, nat_unpair};
use rpp::{eval, eval_fast};

fn pad(front: &[i64], total: usize) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = front.iter().map(|&x| BigInt::from(x)).collect();
    v.resize(total, BigInt::zero());
    v
}

fn main() {
    // Codes fill concentric square shells: shell s holds the pairs whose
    // larger coordinate is s, so decoding is "take the root, then see
    // which side of the shell you are on".
    println!("the first few codes (x across, y down):");
    for y in 0..5i64 {
        let row: Vec<String> = (0..5i64)
            .map(|x| format!("{:>3}", nat_mkpair(&BigInt::from(x), &BigInt::from(y))))
            .collect();
        println!("  {}", row.join(" "));
    }

    // The packing term turns x :: y :: 0^6 into code :: 0^7; the unpacking
    // term is literally its inverse.
    let (pack, unpack) = (mkpair_term(), unpair_term());
    assert_eq!(unpack, pack.inverse());

    let packed = eval(&pack, pad(&[2, 3], 8));
    println!("\npack (2, 3)   : code {}", packed[0]);
    assert_eq!(packed, pad(&[11], 8));
    assert_eq!(eval(&unpack, packed), pad(&[2, 3], 8));
    println!("unpack again  : (2, 3)");

    // Decoding only ever takes one root, so huge codes cost nothing under
    // the closed-form evaluator.
    let code = BigInt::from(2u8).pow(400) + 12345u32;
    let mut input = vec![code.clone()];
    input.resize(8, BigInt::zero());
    let out = eval_fast(&unpack, input);
    let (x, y) = (out[0].clone(), out[1].clone());
    assert_eq!(nat_unpair(&code), (x.clone(), y.clone()));
    assert_eq!(nat_mkpair(&x, &y), code);
    println!(
        "a 121-digit code unpacks to components of {} and {} digits",
        x.to_string().len(),
        y.to_string().len()
    );
}
