//! Naive evaluator: a direct reading of the rewrite clauses, total on
//! register lists of any length.

use crate::term::Term;
use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{ToPrimitive, Zero};

/// Register file: an ordered list of arbitrary-precision integers.
pub type Registers = Vec<BigInt>;

/// Build a register list from machine integers.
pub fn regs(values: &[i64]) -> Registers {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

/// Apply a term to a register list.
///
/// Clauses are tried in order; a term whose pattern needs more registers
/// than the list holds leaves the list unchanged. The result always has
/// the same length as the input.
pub fn eval(t: &Term, mut x: Registers) -> Registers {
    match t {
        Term::Id(_) => x,
        Term::Ne => {
            if let Some(head) = x.first_mut() {
                let v = std::mem::take(head);
                *head = -v;
            }
            x
        }
        Term::Su => {
            if let Some(head) = x.first_mut() {
                *head += 1;
            }
            x
        }
        Term::Pr => {
            if let Some(head) = x.first_mut() {
                *head -= 1;
            }
            x
        }
        Term::Sw => {
            if x.len() >= 2 {
                x.swap(0, 1);
            }
            x
        }
        Term::Co(f, g) => eval(g, eval(f, x)),
        Term::Pa(f, g) => {
            let split = f.arity().min(x.len());
            let tail = x.split_off(split);
            let mut out = eval(f, x);
            out.extend(eval(g, tail));
            out
        }
        Term::It(f) => {
            if x.is_empty() {
                return x;
            }
            let mut tail = x.split_off(1);
            tail = iterate(f, tail, &x[0]);
            x.append(&mut tail);
            x
        }
        Term::If(f, g, h) => {
            if x.is_empty() {
                return x;
            }
            let branch = match x[0].sign() {
                Sign::Plus => f,
                Sign::NoSign => g,
                Sign::Minus => h,
            };
            let mut tail = x.split_off(1);
            tail = eval(branch, tail);
            x.append(&mut tail);
            x
        }
    }
}

/// Apply `eval(f, _)` to `tail` once per unit of `count`, when positive.
fn iterate(f: &Term, mut tail: Registers, count: &BigInt) -> Registers {
    if count.sign() != Sign::Plus {
        return tail;
    }
    let mut left: BigUint = count.magnitude().clone();
    while !left.is_zero() {
        let chunk = left.to_u64().unwrap_or(u64::MAX);
        for _ in 0..chunk {
            tail = eval(f, tail);
        }
        left -= chunk;
    }
    tail
}

/// Apply a term `k` times in a row.
pub fn power_apply(t: &Term, k: u64, mut x: Registers) -> Registers {
    for _ in 0..k {
        x = eval(t, x);
    }
    x
}

/// Evaluate while recording a snapshot after each stage of the top-level
/// series spine. The final snapshot equals `eval(t, x)`.
pub fn trace(t: &Term, x: Registers) -> Vec<(String, Registers)> {
    let mut out = Vec::new();
    trace_into(t, x, "", &mut out);
    out
}

fn trace_into(
    t: &Term,
    x: Registers,
    path: &str,
    out: &mut Vec<(String, Registers)>,
) -> Registers {
    match t {
        Term::Co(f, g) => {
            let x = trace_into(f, x, &join(path, "left"), out);
            trace_into(g, x, &join(path, "right"), out)
        }
        _ => {
            let r = eval(t, x);
            let label = if path.is_empty() { "root" } else { path };
            out.push((label.to_string(), r.clone()));
            r
        }
    }
}

fn join(path: &str, leg: &str) -> String {
    if path.is_empty() {
        leg.to_string()
    } else {
        format!("{path}.{leg}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::{co, if_, it, pa, Term::*};

    #[test]
    fn base_clauses() {
        assert_eq!(eval(&Id(3), regs(&[4, 5])), regs(&[4, 5]));
        assert_eq!(eval(&Ne, regs(&[4, 5])), regs(&[-4, 5]));
        assert_eq!(eval(&Su, regs(&[4, 5])), regs(&[5, 5]));
        assert_eq!(eval(&Pr, regs(&[4, 5])), regs(&[3, 5]));
        assert_eq!(eval(&Sw, regs(&[4, 5, 6])), regs(&[5, 4, 6]));
    }

    #[test]
    fn short_lists_fall_through() {
        assert_eq!(eval(&Su, regs(&[])), regs(&[]));
        assert_eq!(eval(&Sw, regs(&[9])), regs(&[9]));
        assert_eq!(eval(&it(Su), regs(&[])), regs(&[]));
        assert_eq!(eval(&if_(Su, Ne, Pr), regs(&[])), regs(&[]));
        // The iterated body sees an empty tail and leaves it alone.
        assert_eq!(eval(&it(Su), regs(&[5])), regs(&[5]));
    }

    #[test]
    fn series_and_parallel() {
        assert_eq!(eval(&co(Su, Ne), regs(&[1])), regs(&[-2]));
        assert_eq!(eval(&pa(Su, Ne), regs(&[1, 1])), regs(&[2, -1]));
        // Parallel splits at the left arity even when the list is short.
        assert_eq!(eval(&pa(Sw, Su), regs(&[1, 2])), regs(&[2, 1]));
        assert_eq!(eval(&pa(Su, Su), regs(&[1])), regs(&[2]));
    }

    #[test]
    fn iteration_counts_the_head() {
        assert_eq!(eval(&it(Su), regs(&[3, 10])), regs(&[3, 13]));
        assert_eq!(eval(&it(Su), regs(&[-3, 10])), regs(&[-3, 10]));
        assert_eq!(eval(&it(Pr), regs(&[4, 0])), regs(&[4, -4]));
    }

    #[test]
    fn selection_dispatches_on_sign() {
        let t = if_(Su, Ne, Pr);
        assert_eq!(eval(&t, regs(&[2, 7])), regs(&[2, 8]));
        assert_eq!(eval(&t, regs(&[0, 7])), regs(&[0, -7]));
        assert_eq!(eval(&t, regs(&[-2, 7])), regs(&[-2, 6]));
    }

    #[test]
    fn evaluation_preserves_length() {
        let t = co(pa(it(Su), Sw), if_(Ne, Id(2), Sw));
        for n in 0..6 {
            let x: Registers = (0..n).map(BigInt::from).collect();
            assert_eq!(eval(&t, x.clone()).len(), x.len());
        }
    }

    #[test]
    fn trace_walks_the_series_spine() {
        assert_eq!(eval(&Su, regs(&[1])), regs(&[2]));
        assert_eq!(trace(&Su, regs(&[1])), vec![("root".into(), regs(&[2]))]);
        assert_eq!(
            trace(&co(Su, Ne), regs(&[1])),
            vec![
                ("left".into(), regs(&[2])),
                ("right".into(), regs(&[-2])),
            ]
        );
        let t = co(co(Su, Su), Ne);
        let snaps = trace(&t, regs(&[0]));
        assert_eq!(
            snaps,
            vec![
                ("left.left".into(), regs(&[1])),
                ("left.right".into(), regs(&[2])),
                ("right".into(), regs(&[-2])),
            ]
        );
        assert_eq!(snaps.last().unwrap().1, eval(&t, regs(&[0])));
    }
}
