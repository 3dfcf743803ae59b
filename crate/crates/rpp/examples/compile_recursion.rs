//! Compile unary recursive function definitions into reversible terms, run
//! them, and audit the encoding contract on a sweep of inputs.

use num_bigint::BigInt;
use num_traits::Zero;
use rpp::prf::{comp, nat_mkpair, pair, prec, prf_eval, PrfExpr};
use rpp::{check_encode, compile, eval_fast, print_prf, PairingMode};

fn main() {
    // Addition of the two halves of a packed pair, written with a single
    // primitive recursion: seed with the pair itself, then step by taking
    // the successor of the running total.
    let add = prec(
        pair(PrfExpr::Left, PrfExpr::Right),
        comp(PrfExpr::Succ, comp(PrfExpr::Right, PrfExpr::Right)),
    );
    println!("expression : {}", print_prf(&add));

    for mode in [PairingMode::Square, PairingMode::Cantor] {
        let t = compile(&add, mode);
        println!("\n{mode:?} codec: compiled arity {}, size {}", t.arity(), t.size());

        // A compiled term adds e(n) to register 0 and restores everything
        // else, so iterating it accumulates multiples.
        let n = nat_mkpair(&BigInt::from(30u8), &BigInt::from(12u8));
        let mut input = vec![BigInt::zero(), n.clone()];
        input.resize(t.arity(), BigInt::zero());
        let mut expected = input.clone();
        expected[0] = BigInt::from(42u8);
        assert_eq!(eval_fast(&t, input), expected);
        println!("  run at the code of (30, 12): adds 42 to register 0");
        assert_eq!(prf_eval(&add, &n), BigInt::from(42u8));

        // And because the term is a bijection, the audit also proves the
        // scratch registers come back clean for every sampled input.
        let zs = [BigInt::from(-2), BigInt::zero(), BigInt::from(9u8)];
        let report = check_encode(&add, &t, 40, &zs);
        println!("  audit: {report}");
        assert!(report.failures.is_empty());
    }

    // The same machinery handles any definition in the language; deeper
    // towers just compile to wider terms. Keep recursion depths modest,
    // though: the machine logs one stack pairing per loop turn, and that
    // history register roughly squares with every push.
    let succ_via_recursion = comp(
        prec(
            pair(PrfExpr::Left, PrfExpr::Right),
            comp(PrfExpr::Succ, comp(PrfExpr::Right, PrfExpr::Right)),
        ),
        pair(PrfExpr::Zero, PrfExpr::Succ),
    );
    let t = compile(&succ_via_recursion, PairingMode::Square);
    let report = check_encode(&succ_via_recursion, &t, 10, &[BigInt::zero()]);
    println!("\ncomposed recursion audit: {report}");
    assert!(report.failures.is_empty());
}
