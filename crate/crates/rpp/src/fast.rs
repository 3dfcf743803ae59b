//! Fast evaluation: identical results to [`eval`](crate::eval::eval), but
//! iteration bodies with recognized structure run in closed form instead of
//! step by step.
//!
//! Recognized shapes:
//! - affine bodies (no iteration or selection): matrix power by squaring;
//! - nested iteration: `k` rounds of `It g` equal `g` to the power
//!   `k * max(head, 0)`;
//! - parallel bodies: power each side independently;
//! - the pairing, division, and square-root walk steps built by
//!   [`step`](crate::combinators::step), forwards and backwards;
//! - the triangle accumulator `Su ; It Su` and its inverse.
//!
//! Anything else falls back to one application at a time (with cycle
//! detection once the count is very large, so bounded orbits stay cheap).

use crate::eval::{eval, Registers};
use crate::prf::{cantor_pair, cantor_unpair, nat_sqrt};
use crate::term::{co, it, pa, Term};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

/// Apply a term to a register list; same function as
/// [`eval`](crate::eval::eval), computed faster.
pub fn eval_fast(t: &Term, mut x: Registers) -> Registers {
    match t {
        Term::Id(_) | Term::Ne | Term::Su | Term::Pr | Term::Sw => eval(t, x),
        Term::Co(f, g) => eval_fast(g, eval_fast(f, x)),
        Term::Pa(f, g) => {
            let split = f.arity().min(x.len());
            let tail = x.split_off(split);
            let mut out = eval_fast(f, x);
            out.extend(eval_fast(g, tail));
            out
        }
        Term::It(f) => {
            if x.is_empty() {
                return x;
            }
            let tail = x.split_off(1);
            let count = if x[0].is_positive() {
                x[0].clone()
            } else {
                BigInt::zero()
            };
            let tail = power(f, &count, tail);
            x.extend(tail);
            x
        }
        Term::If(f, g, h) => {
            if x.is_empty() {
                return x;
            }
            let branch = match x[0].sign() {
                num_bigint::Sign::Plus => f,
                num_bigint::Sign::NoSign => g,
                num_bigint::Sign::Minus => h,
            };
            let tail = x.split_off(1);
            let tail = eval_fast(branch, tail);
            x.extend(tail);
            x
        }
    }
}

/// Apply `f` to the registers `k` times (`k >= 0`).
fn power(f: &Term, k: &BigInt, mut regs: Registers) -> Registers {
    if k.is_zero() || regs.is_empty() {
        return regs;
    }
    match f {
        Term::Id(_) => return regs,
        // (f | g)^k = f^k | g^k: the split point never moves because
        // every application preserves length.
        Term::Pa(a, b) => {
            let split = a.arity().min(regs.len());
            let tail = regs.split_off(split);
            let mut out = power(a, k, regs);
            out.extend(power(b, k, tail));
            return out;
        }
        // k rounds of `It g` leave the head alone and run g another
        // k * max(head, 0) times in total.
        Term::It(g) => {
            let tail = regs.split_off(1);
            let inner = if regs[0].is_positive() {
                k * &regs[0]
            } else {
                BigInt::zero()
            };
            let tail = power(g, &inner, tail);
            regs.extend(tail);
            return regs;
        }
        _ => {}
    }
    match classify(f) {
        Class::Affine(aff) if regs.len() >= aff.dim() => aff.pow(k).apply(regs),
        Class::Walk { kind, inverse } => walk_power(kind, inverse, f, k, regs),
        Class::Triangle { inverse } if regs.len() >= 2 => triangle_power(inverse, k, regs),
        _ => step_by_step(f, k, regs),
    }
}

#[derive(Clone)]
enum Class {
    Affine(Rc<Affine>),
    Walk { kind: WalkKind, inverse: bool },
    Triangle { inverse: bool },
    Opaque,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum WalkKind {
    /// Diagonal pairing walk: move (x, y) -> (x+1, y-1), at y = 0 jump to
    /// the next anti-diagonal (0, x+1).
    Diagonals,
    /// Fixed-width rows with a counter: at y = 0 jump to (0, x) and bump
    /// the third register.
    Rows,
    /// Rows widening by two with a counter: at y = 0 jump to (0, x+2) and
    /// bump the third register.
    Shells,
}

fn classify(f: &Term) -> Class {
    CLASS_CACHE.with(|cache| {
        if let Some(c) = cache.borrow().get(f) {
            return c.clone();
        }
        let c = compute_class(f);
        cache.borrow_mut().insert(f.clone(), c.clone());
        c
    })
}

fn compute_class(f: &Term) -> Class {
    if let Some(aff) = derive_affine(f) {
        return Class::Affine(Rc::new(aff));
    }
    TEMPLATES.with(|templates| {
        for (t, c) in templates {
            if t == f {
                return c.clone();
            }
        }
        Class::Opaque
    })
}

thread_local! {
    static CLASS_CACHE: RefCell<HashMap<Term, Class>> = RefCell::new(HashMap::new());
    static TEMPLATES: Vec<(Term, Class)> = build_templates();
}

fn build_templates() -> Vec<(Term, Class)> {
    use crate::combinators::step;
    use WalkKind::*;
    let mut out = Vec::new();
    let walks = [
        (step(&Term::Su), Diagonals),
        (step(&pa(Term::Id(1), Term::Su)), Rows),
        (step(&pa(co(Term::Su, Term::Su), Term::Su)), Shells),
    ];
    for (t, kind) in walks {
        out.push((t.inverse(), Class::Walk { kind, inverse: true }));
        out.push((t, Class::Walk { kind, inverse: false }));
    }
    let tri = co(Term::Su, it(Term::Su));
    out.push((tri.inverse(), Class::Triangle { inverse: true }));
    out.push((tri, Class::Triangle { inverse: false }));
    out
}

// ---------------------------------------------------------------------------
// Affine bodies: out[i] = sgn[i] * in[src[i]] + off[i], a signed
// permutation plus offsets. Closed under composition, so powers come from
// repeated squaring in O(dim * log k).

struct Affine {
    src: Vec<usize>,
    sgn: Vec<i8>,
    off: Vec<BigInt>,
}

impl Affine {
    fn dim(&self) -> usize {
        self.src.len()
    }

    fn identity(m: usize) -> Affine {
        Affine {
            src: (0..m).collect(),
            sgn: vec![1; m],
            off: vec![BigInt::zero(); m],
        }
    }

    fn padded(&self, m: usize) -> Affine {
        debug_assert!(m >= self.dim());
        let mut out = Affine::identity(m);
        out.src[..self.dim()].copy_from_slice(&self.src);
        out.sgn[..self.dim()].copy_from_slice(&self.sgn);
        out.off[..self.dim()].clone_from_slice(&self.off);
        out
    }

    /// `self` first, `then` second.
    fn and_then(&self, then: &Affine) -> Affine {
        let m = self.dim().max(then.dim());
        let f = self.padded(m);
        let t = then.padded(m);
        let mut out = Affine::identity(m);
        for i in 0..m {
            let j = t.src[i];
            out.src[i] = f.src[j];
            out.sgn[i] = t.sgn[i] * f.sgn[j];
            let carried = if t.sgn[i] >= 0 {
                f.off[j].clone()
            } else {
                -f.off[j].clone()
            };
            out.off[i] = carried + &t.off[i];
        }
        out
    }

    fn pow(&self, k: &BigInt) -> Affine {
        debug_assert!(!k.is_negative());
        let mut result = Affine::identity(self.dim());
        let mut base = self.padded(self.dim());
        let bits = k.magnitude().clone();
        let n = bits.bits();
        for i in 0..n {
            if bits.bit(i) {
                result = result.and_then(&base);
            }
            if i + 1 < n {
                base = base.and_then(&base);
            }
        }
        result
    }

    fn apply(&self, mut regs: Registers) -> Registers {
        let m = self.dim();
        debug_assert!(regs.len() >= m);
        let mut out = Vec::with_capacity(regs.len());
        for i in 0..m {
            let mut v = regs[self.src[i]].clone();
            if self.sgn[i] < 0 {
                v = -v;
            }
            v += &self.off[i];
            out.push(v);
        }
        out.extend(regs.drain(m..));
        out
    }
}

fn derive_affine(t: &Term) -> Option<Affine> {
    match t {
        Term::Id(n) => Some(Affine::identity(*n)),
        Term::Ne => Some(Affine {
            src: vec![0],
            sgn: vec![-1],
            off: vec![BigInt::zero()],
        }),
        Term::Su => Some(Affine {
            src: vec![0],
            sgn: vec![1],
            off: vec![BigInt::from(1)],
        }),
        Term::Pr => Some(Affine {
            src: vec![0],
            sgn: vec![1],
            off: vec![BigInt::from(-1)],
        }),
        Term::Sw => Some(Affine {
            src: vec![1, 0],
            sgn: vec![1, 1],
            off: vec![BigInt::zero(), BigInt::zero()],
        }),
        Term::Co(f, g) => {
            let f = derive_affine(f)?;
            let g = derive_affine(g)?;
            Some(f.and_then(&g))
        }
        Term::Pa(f, g) => {
            let f = derive_affine(f)?;
            let g = derive_affine(g)?;
            let (mf, mg) = (f.dim(), g.dim());
            let mut out = Affine::identity(mf + mg);
            out.src[..mf].copy_from_slice(&f.src);
            out.sgn[..mf].copy_from_slice(&f.sgn);
            out.off[..mf].clone_from_slice(&f.off);
            for i in 0..mg {
                out.src[mf + i] = mf + g.src[i];
                out.sgn[mf + i] = g.sgn[i];
                out.off[mf + i] = g.off[i].clone();
            }
            Some(out)
        }
        Term::It(_) | Term::If(..) => None,
    }
}

// ---------------------------------------------------------------------------
// Walk steps: all three recognized step instances move (x, y) one cell
// along a row; they differ in what the jump at the end of a row does.

fn walk_power(
    kind: WalkKind,
    inverse: bool,
    f: &Term,
    k: &BigInt,
    mut regs: Registers,
) -> Registers {
    let need = match kind {
        WalkKind::Diagonals => 2,
        WalkKind::Rows | WalkKind::Shells => 3,
    };
    if regs.len() < need || regs[0].is_negative() || regs[1].is_negative() {
        return step_by_step(f, k, regs);
    }
    let x = regs[0].clone();
    let y = regs[1].clone();
    let d = &x + &y;
    match kind {
        WalkKind::Diagonals => {
            let p = cantor_pair(&x, &y);
            let p = if inverse {
                if *k > p {
                    // the reverse walk would run off the origin
                    return step_by_step(f, k, regs);
                }
                p - k
            } else {
                p + k
            };
            let (nx, ny) = cantor_unpair(&p);
            regs[0] = nx;
            regs[1] = ny;
            regs
        }
        WalkKind::Rows => {
            // rows all have width d + 1; the third register counts jumps
            let t = if inverse { &x - k } else { &x + k };
            let (q, r) = t.div_mod_floor(&(&d + 1));
            regs[1] = &d - &r;
            regs[0] = r;
            regs[2] += q;
            regs
        }
        WalkKind::Shells => {
            // row c0 + m has width d + 2m + 1 and starts after m(d + m)
            // cells, so locate t = x ± k by an integer square root.
            let t = if inverse { &x - k } else { &x + k };
            let disc: BigInt = &d * &d + 4 * &t;
            if disc.is_negative() {
                return step_by_step(f, k, regs);
            }
            let mut m = (nat_sqrt(&disc) - &d).div_floor(&BigInt::from(2));
            while (&m + 1) * (&d + &m + 1) <= t {
                m += 1;
            }
            while &m * (&d + &m) > t {
                m -= 1;
            }
            let width: BigInt = &d + 2 * &m;
            if width.is_negative() {
                return step_by_step(f, k, regs);
            }
            let r = &t - &m * (&d + &m);
            regs[1] = &width - &r;
            regs[0] = r;
            regs[2] += m;
            regs
        }
    }
}

/// `T(n)`: sum of 1..=n for positive n, else 0.
fn triangle_sum(n: &BigInt) -> BigInt {
    if n.is_positive() {
        n * (n + 1) / 2
    } else {
        BigInt::zero()
    }
}

fn triangle_power(inverse: bool, k: &BigInt, mut regs: Registers) -> Registers {
    let i = regs[0].clone();
    if inverse {
        let gone = triangle_sum(&i) - triangle_sum(&(&i - k));
        regs[0] = &i - k;
        regs[1] -= gone;
    } else {
        let gained = triangle_sum(&(&i + k)) - triangle_sum(&i);
        regs[0] = &i + k;
        regs[1] += gained;
    }
    regs
}

/// One application at a time; for very large counts, remember visited
/// states so a bounded orbit collapses to its cycle length.
fn step_by_step(f: &Term, k: &BigInt, mut regs: Registers) -> Registers {
    if let Some(n) = k.to_u64() {
        if n <= 1 << 16 {
            for _ in 0..n {
                regs = eval_fast(f, regs);
            }
            return regs;
        }
    }
    let mut seen: HashMap<Registers, BigInt> = HashMap::new();
    let mut i = BigInt::zero();
    while &i < k {
        if seen.len() < 1 << 20 {
            if let Some(first) = seen.insert(regs.clone(), i.clone()) {
                let cycle = &i - &first;
                let mut rem = (k - &i) % &cycle;
                while rem.is_positive() {
                    regs = eval_fast(f, regs);
                    rem -= 1;
                }
                return regs;
            }
        }
        regs = eval_fast(f, regs);
        i += 1;
    }
    regs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith;
    use crate::combinators::step;
    use crate::eval::regs;
    use crate::prf::{nat_mkpair, nat_unpair};
    use crate::term::{if_, Term::*};

    fn big(s: &str) -> BigInt {
        s.parse().unwrap()
    }

    fn with_zeros(front: &[BigInt], total: usize) -> Registers {
        let mut v = front.to_vec();
        v.resize(total, BigInt::zero());
        v
    }

    #[test]
    fn matches_eval_on_mixed_terms_and_lists() {
        let terms = [
            Su,
            it(Su),
            it(step(&Su)),
            it(step(&Su).inverse()),
            it(pa(Id(1), step(&pa(Id(1), Su)))),
            it(step(&pa(co(Su, Su), Su))),
            it(step(&pa(co(Su, Su), Su)).inverse()),
            it(co(Su, it(Su))),
            it(co(Su, it(Su)).inverse()),
            it(it(Su)),
            it(co(Sw, Su)),
            it(if_(Su, Ne, Pr)),
            co(it(pa(Ne, Su)), pa(Sw, Sw)),
            arith::cp(),
            arith::divmod(),
            arith::sqrt(),
            arith::mkpair_in(),
        ];
        let lists: Vec<Registers> = vec![
            regs(&[]),
            regs(&[7]),
            regs(&[3, 4]),
            regs(&[-3, 4]),
            regs(&[5, -2, 8]),
            regs(&[12, 0, 0, 0, 0]),
            regs(&[9, 3, 1, 0, 0, 0]),
            regs(&[50, 2, -7, 1, 4, 0, 2, 9]),
        ];
        for t in &terms {
            for l in &lists {
                assert_eq!(
                    eval_fast(t, l.clone()),
                    eval(t, l.clone()),
                    "term {t} on {l:?}"
                );
            }
        }
    }

    #[test]
    fn diagonal_walk_runs_in_closed_form() {
        let n = big("1000000000000");
        let out = eval_fast(&it(step(&Su)), with_zeros(&[n.clone()], 3));
        let (x, y) = cantor_unpair(&n);
        assert_eq!(out, vec![n.clone(), x, y]);
        // and back
        let back = eval_fast(&it(step(&Su).inverse()), out);
        assert_eq!(back, with_zeros(&[n], 3));
    }

    #[test]
    fn coding_terms_handle_huge_values() {
        let x = big("123456789");
        let y = big("987654321");
        let p = cantor_pair(&x, &y);
        let out = eval_fast(&arith::cp(), with_zeros(&[x.clone(), y.clone()], 5));
        assert_eq!(out, with_zeros(&[p.clone()], 5));
        let back = eval_fast(&arith::cu(), out);
        assert_eq!(back, with_zeros(&[x, y], 5));
    }

    #[test]
    fn division_handles_huge_values() {
        let m = big("123456789012345678901");
        let n = BigInt::from(6);
        let out = eval_fast(&arith::divmod(), with_zeros(&[m.clone(), n.clone()], 5));
        let q: BigInt = &m / 7;
        let r: BigInt = &m % 7;
        assert_eq!(out, vec![m, n, r.clone(), BigInt::from(6) - r, q]);
    }

    #[test]
    fn square_root_handles_huge_values() {
        let n = big("999999999999999999999");
        let out = eval_fast(&arith::sqrt(), with_zeros(&[n.clone()], 6));
        let s = nat_sqrt(&n);
        let r = &n - &s * &s;
        let m = 2 * &s - &r;
        assert_eq!(out, vec![n.clone(), r, m, BigInt::zero(), BigInt::zero(), s]);
        let back = eval_fast(&arith::sqrt().inverse(), out);
        assert_eq!(back, with_zeros(&[n], 6));
    }

    #[test]
    fn square_codec_handles_huge_values() {
        let x = big("123456789");
        let y = big("400000004");
        let p = nat_mkpair(&x, &y);
        let out = eval_fast(
            &arith::mkpair_term(),
            with_zeros(&[x.clone(), y.clone()], 8),
        );
        assert_eq!(out, with_zeros(&[p.clone()], 8));
        assert_eq!(nat_unpair(&p), (x.clone(), y.clone()));
        let back = eval_fast(&arith::unpair_term(), out);
        assert_eq!(back, with_zeros(&[x, y], 8));
    }

    #[test]
    fn nested_iteration_multiplies_counts() {
        // It It Su: adds head * second to the third register
        let a = big("123456789");
        let b = big("1000000007");
        let out = eval_fast(
            &it(it(Su)),
            vec![a.clone(), b.clone(), BigInt::from(5)],
        );
        assert_eq!(out, vec![a.clone(), b.clone(), &a * &b + 5]);
    }

    #[test]
    fn affine_powers_match_iterated_application() {
        let bodies = [
            co(Su, Su),
            co(Sw, Su),
            pa(Ne, Pr),
            co(pa(Su, Sw), co(Sw, pa(Pr, Ne))),
        ];
        for body in &bodies {
            for head in [0i64, 1, 2, 7, 19] {
                let input = regs(&[head, 3, -2, 5]);
                assert_eq!(
                    eval_fast(&it(body.clone()), input.clone()),
                    eval(&it(body.clone()), input),
                    "body {body}, head {head}"
                );
            }
        }
    }

    #[test]
    fn opaque_bodies_with_huge_counts_use_cycle_detection() {
        // The body negates its second register each round: period 2. It
        // contains a selection, so no closed form applies.
        let body = if_(Ne, Ne, Ne);
        let k = big("1000000000000000001");
        let out = eval_fast(&it(body.clone()), vec![k.clone(), BigInt::from(1), BigInt::from(9)]);
        assert_eq!(out, vec![k, BigInt::from(1), BigInt::from(-9)]);
    }
}
