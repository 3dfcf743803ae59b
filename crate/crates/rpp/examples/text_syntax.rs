//! The concrete syntax: a small infix language for terms, named built-ins,
//! and positioned parse diagnostics.

use rpp::{eval, parse_prf, parse_registers, parse_term, print_prf, print_registers, print_term};

fn main() {
    // `;` runs left to right and binds looser than `|`, which runs wires in
    // parallel. `It` and `If` take atoms, so parenthesize compound bodies.
    let src = "(Id 1 | Sw) ; It Su | Id 1 ; Id 1 | If Su (Id 1) Pr";
    let t = parse_term(src).unwrap();
    println!("source   : {src}");
    println!("canonical: {}", print_term(&t));
    println!("arity    : {}", t.arity());

    let input = parse_registers("2, 5, -3").unwrap();
    let out = eval(&t, input);
    println!("on 2,5,-3: {}", print_registers(&out));

    // Printed text parses back to the same tree, so terms can be stored
    // and shipped as strings.
    assert_eq!(parse_term(&print_term(&t)).unwrap(), t);

    // Named built-ins stand for the bundled algorithms and may be mixed
    // with raw syntax freely.
    for name in ["cp", "cu", "divmod", "sqrt", "mkpair", "unpair", "inc", "dec", "mul"] {
        let t = parse_term(name).unwrap();
        println!("built-in {name:<7} arity {:>2} size {:>5}", t.arity(), t.size());
    }
    let mixed = parse_term("cp ; Ne | Id 4").unwrap();
    println!("mixed    : arity {}", mixed.arity());

    // Parse failures carry line and column, what was found, and what would
    // have been accepted instead.
    for bad in ["It", "Su ;", "If Su Pr", "Id x", "Su & Ne"] {
        let err = parse_term(bad).unwrap_err();
        println!("  parse {bad:<9} -> {err}");
    }

    // The expression language reads the same in both directions as well.
    let e = parse_prf("prec(pair(left, right), comp(succ, comp(right, right)))").unwrap();
    assert_eq!(parse_prf(&print_prf(&e)).unwrap(), e);
    println!("expressions round-trip: {}", print_prf(&e));
    let err = parse_prf("pair(zero)").unwrap_err();
    println!("  parse pair(zero) -> {err}");
}
