//! Derived term builders: rewirings, counters, signed iterators, and the
//! diagonal path step that drives the pairing walks.

use crate::term::{co, if_, it, pa, seq, Term};
use std::fmt;

/// A request to bring selected wires to the front.
///
/// `indices` lists distinct wire positions below `width`. The resulting
/// permutation puts those wires first, in the order given, and the remaining
/// wires after them in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewireSpec {
    indices: Vec<usize>,
    width: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RewireError {
    IndexOutOfRange { index: usize, width: usize },
    DuplicateIndex(usize),
}

impl fmt::Display for RewireError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RewireError::IndexOutOfRange { index, width } => {
                write!(f, "wire index {index} out of range for width {width}")
            }
            RewireError::DuplicateIndex(i) => write!(f, "wire index {i} listed twice"),
        }
    }
}

impl std::error::Error for RewireError {}

impl RewireSpec {
    pub fn new(indices: Vec<usize>, width: usize) -> Result<Self, RewireError> {
        let mut seen = vec![false; width];
        for &i in &indices {
            if i >= width {
                return Err(RewireError::IndexOutOfRange { index: i, width });
            }
            if seen[i] {
                return Err(RewireError::DuplicateIndex(i));
            }
            seen[i] = true;
        }
        Ok(RewireSpec { indices, width })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// The full permutation realized: position k of the result holds the
    /// input wire `self.permutation()[k]`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut order = self.indices.clone();
        order.extend((0..self.width).filter(|i| !self.indices.contains(i)));
        order
    }
}

/// Swap of the adjacent wires q and q+1, leaving wires below q alone.
fn swap_at(q: usize) -> Term {
    if q == 0 {
        Term::Sw
    } else {
        pa(Term::Id(q), Term::Sw)
    }
}

/// Compiles a rewiring to a chain of adjacent swaps (selection sort).
/// On any list of length >= width, the selected wires move to the front
/// in the given order and the rest follow in ascending order.
pub fn rewire(spec: &RewireSpec) -> Term {
    let target = spec.permutation();
    let mut order: Vec<usize> = (0..spec.width).collect();
    let mut swaps = Vec::new();
    for k in 0..spec.width {
        let p = order.iter().position(|&w| w == target[k]).unwrap();
        for q in (k..p).rev() {
            swaps.push(swap_at(q));
            order.swap(q, q + 1);
        }
    }
    if swaps.is_empty() {
        Term::Id(0)
    } else {
        seq(swaps)
    }
}

/// Rewire with indices known valid at the call site.
pub(crate) fn rw(indices: &[usize], width: usize) -> Term {
    rewire(&RewireSpec::new(indices.to_vec(), width).expect("valid rewire spec"))
}

/// Adds wire `src` (clamped below at 0) onto wire `dst`, preserving `src`.
pub fn add_wire(src: usize, dst: usize, width: usize) -> Term {
    wire_transfer(src, dst, width, it(Term::Su))
}

/// Subtracts wire `src` (clamped below at 0) from wire `dst`, preserving `src`.
pub fn sub_wire(src: usize, dst: usize, width: usize) -> Term {
    wire_transfer(src, dst, width, it(Term::Pr))
}

fn wire_transfer(src: usize, dst: usize, width: usize, action: Term) -> Term {
    assert!(src != dst && src < width && dst < width, "bad wire pair {src},{dst} at width {width}");
    let front = rw(&[src, dst], width);
    let back = front.inverse();
    seq([front, action, back])
}

/// Counter-controlled increment: eval(inc, n::x::X) adds n to x when n >= 0
/// and leaves everything alone when n < 0.
pub fn inc() -> Term {
    it(Term::Su)
}

/// Counter-controlled decrement, the inverse of [`inc`].
pub fn dec() -> Term {
    it(Term::Pr)
}

/// eval(mul, x::y::a::X) = x::y::(a + x*y)::X for x, y >= 0: iterate
/// "add y onto a" x times.
pub fn mul() -> Term {
    it(inc())
}

/// Iterate f on the tail |x| times, where x is the head:
/// (It f) ;; Ne ;; (It f) ;; Ne. Exactly one of the two It blocks fires.
pub fn itr(f: Term) -> Term {
    seq([it(f.clone()), Term::Ne, it(f), Term::Ne])
}

/// Signed iteration: f applied x times when x >= 0, its inverse -x times
/// when x < 0. (It f) ;; Ne ;; (It f^-1) ;; Ne.
pub fn for_srl(f: Term) -> Term {
    let back = f.inverse();
    seq([it(f), Term::Ne, it(back), Term::Ne])
}

/// One step of the diagonal path walk. For x, y >= 0 and any extras Z:
///
///   eval(step(jump), x::y::Z) = (x+1)::(y-1)::Z          when y > 0
///   eval(step(jump), x::0::Z) = 0::eval(jump, x::Z)      when y = 0
///
/// The jump block sees the head value followed by the extras, and its
/// output slides in behind the freed zero. Iterating the step from
/// (0, 0, ...) therefore sweeps the anti-diagonals of the quarter plane,
/// with the jump firing once per completed diagonal.
///
/// Inputs with negative head values are total but carry no contract.
pub fn step(jump: &Term) -> Term {
    let flag = co(Term::Ne, Term::Pr);
    let unflag_jump = co(flag.clone(), jump.clone());
    seq([
        // move: make the head strictly positive (x += y); jump: unchanged
        Term::Sw,
        it(Term::Su),
        Term::Sw,
        // hide the move branch's budget as a negative
        pa(Term::Id(1), Term::Ne),
        // jump only: flag the head as -x-1, a strict negative
        Term::Sw,
        if_(Term::Id(1), flag, Term::Id(1)),
        Term::Sw,
        // move only (head x+y > 0): rebuild y-wire to x, then bump to x+1
        it(Term::Su),
        if_(Term::Su, Term::Id(1), Term::Id(1)),
        // jump only (front zero): unflag back to x and apply the jump block
        Term::Sw,
        if_(Term::Id(1), unflag_jump, Term::Id(1)),
        // move: settle the pair to (x+1, y-1); jump: zero count, no-op
        it(Term::Pr),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::{eval, power_apply, regs};
    use crate::prf::cantor_pair;
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;

    #[test]
    fn rewire_brings_selected_wires_to_front() {
        let spec = RewireSpec::new(vec![1], 3).unwrap();
        assert_eq!(eval(&rewire(&spec), regs(&[10, 11, 12])), regs(&[11, 10, 12]));
        let spec = RewireSpec::new(vec![2, 0], 3).unwrap();
        assert_eq!(eval(&rewire(&spec), regs(&[10, 11, 12])), regs(&[12, 10, 11]));
    }

    #[test]
    fn rewire_of_full_ascending_selection_is_identity() {
        let spec = RewireSpec::new(vec![0, 1, 2, 3], 4).unwrap();
        let t = rewire(&spec);
        assert_eq!(eval(&t, regs(&[4, 5, 6, 7])), regs(&[4, 5, 6, 7]));
    }

    #[test]
    fn rewire_rejects_bad_specs() {
        assert!(matches!(
            RewireSpec::new(vec![3], 3),
            Err(RewireError::IndexOutOfRange { index: 3, width: 3 })
        ));
        assert!(matches!(
            RewireSpec::new(vec![1, 1], 3),
            Err(RewireError::DuplicateIndex(1))
        ));
    }

    #[test]
    fn rewire_width_bounds_arity() {
        for (indices, width) in [(vec![2usize, 0], 3usize), (vec![4, 1], 5), (vec![3], 6)] {
            let t = rewire(&RewireSpec::new(indices, width).unwrap());
            assert!(t.arity() <= width);
        }
    }

    #[test]
    fn rewire_then_inverse_permutation_restores_input() {
        // exhaustive over all selections from 3 wires, plus spot checks wider
        let wires = regs(&[20, 21, 22, 23, 24]);
        for width in 1..=4usize {
            for mask in 0..(1u32 << width) {
                let indices: Vec<usize> = (0..width).filter(|i| mask & (1 << i) != 0).collect();
                let spec = RewireSpec::new(indices, width).unwrap();
                let t = rewire(&spec);
                let forward = eval(&t, wires.clone());
                assert_eq!(eval(&t.inverse(), forward.clone()), wires);
                // the inverse permutation, expressed as a fresh rewire
                let perm = spec.permutation();
                let mut inv = vec![0usize; width];
                for (k, &w) in perm.iter().enumerate() {
                    inv[w] = k;
                }
                let undo = rewire(&RewireSpec::new(inv, width).unwrap());
                assert_eq!(eval(&undo, forward), wires);
            }
        }
    }

    #[test]
    fn permutation_lists_selected_then_rest() {
        let spec = RewireSpec::new(vec![2, 0], 4).unwrap();
        assert_eq!(spec.permutation(), vec![2, 0, 1, 3]);
    }

    #[test]
    fn add_and_sub_wire_move_values_across() {
        let t = add_wire(0, 2, 3);
        assert_eq!(eval(&t, regs(&[4, 9, 100])), regs(&[4, 9, 104]));
        let t = sub_wire(1, 0, 3);
        assert_eq!(eval(&t, regs(&[10, 3, 7])), regs(&[7, 3, 7]));
        // negative sources clamp to zero
        let t = add_wire(2, 1, 3);
        assert_eq!(eval(&t, regs(&[1, 2, -5])), regs(&[1, 2, -5]));
        // round-trips
        let t = seq([add_wire(0, 2, 4), sub_wire(0, 2, 4)]);
        assert_eq!(eval(&t, regs(&[4, 9, 100, -2])), regs(&[4, 9, 100, -2]));
    }

    #[test]
    fn inc_adds_the_counter() {
        assert_eq!(eval(&inc(), regs(&[3, 10])), regs(&[3, 13]));
        assert_eq!(eval(&inc(), regs(&[-4, 10])), regs(&[-4, 10]));
        assert_eq!(eval(&co(inc(), dec()), regs(&[5, 9])), regs(&[5, 9]));
        assert_eq!(inc().inverse(), dec());
    }

    #[test]
    fn mul_accumulates_products() {
        assert_eq!(eval(&mul(), regs(&[4, 3, 0])), regs(&[4, 3, 12]));
        assert_eq!(eval(&mul(), regs(&[0, 7, 5])), regs(&[0, 7, 5]));
        assert_eq!(eval(&mul(), regs(&[6, 9, 2])), regs(&[6, 9, 56]));
        assert_eq!(
            eval(&co(mul(), mul().inverse()), regs(&[4, 3, 0])),
            regs(&[4, 3, 0])
        );
    }

    #[test]
    fn itr_iterates_by_magnitude() {
        assert_eq!(eval(&itr(Term::Su), regs(&[-3, 0])), regs(&[-3, 3]));
        assert_eq!(eval(&itr(Term::Su), regs(&[3, 0])), regs(&[3, 3]));
        assert_eq!(eval(&itr(Term::Su), regs(&[0, 42])), regs(&[0, 42]));
    }

    #[test]
    fn for_srl_iterates_signed() {
        assert_eq!(eval(&for_srl(Term::Su), regs(&[3, 0])), regs(&[3, 3]));
        assert_eq!(eval(&for_srl(Term::Su), regs(&[-3, 0])), regs(&[-3, -3]));
        assert_eq!(eval(&for_srl(Term::Su), regs(&[0, 8])), regs(&[0, 8]));
    }

    #[test]
    fn iterator_closed_forms_match_power_apply() {
        let bodies = [
            Term::Su,
            co(Term::Su, Term::Su),
            pa(Term::Su, Term::Pr),
            it(Term::Su),
        ];
        for f in bodies {
            for x in -20i64..=20 {
                let tail = [7i64, -3, 2];
                let mut input = regs(&[x]);
                input.extend(regs(&tail));
                let got = eval(&itr(f.clone()), input.clone());
                let mut want = regs(&[x]);
                want.extend(power_apply(&f, x.unsigned_abs(), regs(&tail)));
                assert_eq!(got, want, "itr({f:?}) at {x}");

                let got = eval(&for_srl(f.clone()), input);
                let mut want = regs(&[x]);
                let inner = if x >= 0 { f.clone() } else { f.inverse() };
                want.extend(power_apply(&inner, x.unsigned_abs(), regs(&tail)));
                assert_eq!(got, want, "for_srl({f:?}) at {x}");
            }
        }
    }

    #[test]
    fn step_moves_along_the_diagonal() {
        let s = step(&Term::Su);
        assert_eq!(s.arity(), 2);
        assert_eq!(eval(&s, regs(&[2, 3])), regs(&[3, 2]));
        assert_eq!(eval(&s, regs(&[0, 1])), regs(&[1, 0]));
        assert_eq!(eval(&s, regs(&[4, 2, 7])), regs(&[5, 1, 7]));
    }

    #[test]
    fn step_jumps_at_the_axis() {
        let s = step(&Term::Su);
        assert_eq!(eval(&s, regs(&[2, 0])), regs(&[0, 3]));
        assert_eq!(eval(&s, regs(&[0, 0])), regs(&[0, 1]));
        // a wider jump block: preserve x, bump a trailing counter
        let s = step(&pa(Term::Id(1), Term::Su));
        assert_eq!(s.arity(), 3);
        assert_eq!(eval(&s, regs(&[4, 0, 1])), regs(&[0, 4, 2]));
        assert_eq!(eval(&s, regs(&[4, 2, 1])), regs(&[5, 1, 1]));
    }

    #[test]
    fn step_round_trips_everywhere() {
        // reversibility holds on all inputs, contract domain or not
        let s = step(&Term::Su);
        let both = co(s.clone(), s.inverse());
        for x in -6i64..=6 {
            for y in -6i64..=6 {
                assert_eq!(eval(&both, regs(&[x, y])), regs(&[x, y]));
            }
        }
    }

    #[test]
    fn iterated_step_walks_the_pairing_path() {
        let s = step(&Term::Su);
        for x in 0i64..=60 {
            for y in 0..=(60 - x) {
                let n = cantor_pair(&BigInt::from(x), &BigInt::from(y))
                    .to_u64()
                    .unwrap();
                assert_eq!(
                    power_apply(&s, n, regs(&[0, 0])),
                    regs(&[x, y]),
                    "path index {n}"
                );
            }
        }
    }
}
