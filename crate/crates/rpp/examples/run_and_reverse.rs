//! Every term is a bijection on register lists: run one forward, print a
//! step-by-step trace, then undo it with its mechanically derived inverse.

use rpp::term::{co, if_, it, pa, Term};
use rpp::{eval, print_registers, print_term, regs, trace};

fn main() {
    // Copy register 1 into register 0 (for non-negative sources), then
    // flip the sign of the copy — a tiny pipeline of three stages.
    let copy_then_flip = co(
        co(Term::Sw, co(it(Term::Su), Term::Sw)),
        pa(Term::Ne, Term::Id(1)),
    );
    println!("term        : {}", print_term(&copy_then_flip));
    println!("arity       : {}", copy_then_flip.arity());

    let input = regs(&[0, 7]);
    println!("input       : {}", print_registers(&input));
    for (stage, state) in trace(&copy_then_flip, input.clone()) {
        println!("  after {stage:<11}: {}", print_registers(&state));
    }

    let output = eval(&copy_then_flip, input.clone());
    println!("output      : {}", print_registers(&output));

    // The inverse swaps successor/predecessor and reverses compositions.
    let back = copy_then_flip.inverse();
    println!("inverse     : {}", print_term(&back));
    let restored = eval(&back, output);
    println!("restored    : {}", print_registers(&restored));
    assert_eq!(restored, input);

    // Sign dispatch is reversible too: the branch keyed by the head's sign
    // is undone by the branch-wise inverse, whatever the head was.
    let branchy = if_(Term::Su, Term::Id(1), co(Term::Ne, Term::Pr));
    let round = co(branchy.clone(), branchy.inverse());
    for head in [-3i64, 0, 5] {
        let x = regs(&[head, 9]);
        assert_eq!(eval(&round, x.clone()), x);
    }
    println!("sign-dispatched branches undo cleanly for negative, zero, and positive keys");
}
