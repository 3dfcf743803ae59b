//! Command-line front end: evaluate, invert, and inspect terms, compile
//! recursion expressions, and sweep compiled terms against their values.
//!
//! Exit codes: 0 on success, 1 when a check finds failures, 2 on parse or
//! usage errors.

use crate::compile::{check_encode, compile, PairingMode};
use crate::eval::{eval, regs, trace, Registers};
use crate::fast::eval_fast;
use crate::prf::{cantor_pair, nat_mkpair, nat_unpair, prf_add, prf_eval};
use crate::syntax::{parse_prf, parse_registers, parse_term, print_registers, print_term};
use crate::term::co;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Parser)]
#[command(
    name = "rpp",
    version,
    about = "Reversible register programs: evaluate, invert, compile"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a term on a register list
    Eval {
        /// Term syntax, e.g. "Su ; It Su | Id 1"
        term: String,
        /// Comma- or whitespace-separated starting registers
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        input: String,
        /// Print a register snapshot after each top-level stage
        #[arg(long)]
        trace: bool,
        /// Use the closed-form evaluator
        #[arg(long)]
        fast: bool,
    },
    /// Print the inverse of a term
    Invert { term: String },
    /// Print how many registers a term touches
    Arity { term: String },
    /// Compile a recursion expression to a term
    Compile {
        /// Expression syntax: zero, succ, left, right, pair(F,G),
        /// comp(F,G), prec(F,G)
        expr: String,
        /// Codec for the recursion history stack
        #[arg(long, value_enum, default_value_t = Pairing::Square)]
        pairing: Pairing,
    },
    /// Compile an expression and sweep the term against its values
    CheckEncode {
        expr: String,
        /// Check all arguments below this bound
        #[arg(long, default_value_t = 50)]
        max_n: u64,
        /// Starting values for the result register
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        z: String,
        #[arg(long, value_enum, default_value_t = Pairing::Square)]
        pairing: Pairing,
    },
    /// Run a built-in sanity suite
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum Pairing {
    Square,
    Cantor,
}

impl From<Pairing> for PairingMode {
    fn from(p: Pairing) -> PairingMode {
        match p {
            Pairing::Square => PairingMode::Square,
            Pairing::Cantor => PairingMode::Cantor,
        }
    }
}

/// Entry point for the binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli.cmd) {
        Ok(clean) => {
            if clean {
                0
            } else {
                1
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn dispatch(cmd: Cmd) -> Result<bool, String> {
    match cmd {
        Cmd::Eval {
            term,
            input,
            trace: with_trace,
            fast,
        } => {
            let t = parse_term(&term).map_err(|e| e.to_string())?;
            let start = parse_registers(&input).map_err(|e| e.to_string())?;
            if with_trace {
                let snaps = trace(&t, start);
                for (label, state) in &snaps {
                    println!("{label}: {}", print_registers(state));
                }
                if let Some((_, last)) = snaps.last() {
                    println!("{}", print_registers(last));
                }
            } else {
                let out = if fast {
                    eval_fast(&t, start)
                } else {
                    eval(&t, start)
                };
                println!("{}", print_registers(&out));
            }
            Ok(true)
        }
        Cmd::Invert { term } => {
            let t = parse_term(&term).map_err(|e| e.to_string())?;
            println!("{}", print_term(&t.inverse()));
            Ok(true)
        }
        Cmd::Arity { term } => {
            let t = parse_term(&term).map_err(|e| e.to_string())?;
            println!("{}", t.arity());
            Ok(true)
        }
        Cmd::Compile { expr, pairing } => {
            let e = parse_prf(&expr).map_err(|e| e.to_string())?;
            println!("{}", print_term(&compile(&e, pairing.into())));
            Ok(true)
        }
        Cmd::CheckEncode {
            expr,
            max_n,
            z,
            pairing,
        } => {
            let e = parse_prf(&expr).map_err(|e| e.to_string())?;
            let zs = parse_registers(&z).map_err(|e| e.to_string())?;
            let zs = if zs.is_empty() {
                vec![BigInt::zero()]
            } else {
                zs
            };
            let t = compile(&e, pairing.into());
            let report = check_encode(&e, &t, max_n, &zs);
            println!("{report}");
            for f in &report.failures {
                println!(
                    "z={} n={}: expected {}, got {}",
                    f.z,
                    f.n,
                    print_registers(&f.expected),
                    print_registers(&f.actual)
                );
            }
            Ok(report.failures.is_empty())
        }
        Cmd::Selftest => Ok(selftest()),
    }
}

fn selftest() -> bool {
    let mut clean = true;
    let mut part = |name: &str, ok: bool| {
        println!("{} {name}", if ok { "ok" } else { "FAIL" });
        clean &= ok;
    };

    part("inversion round-trips", {
        let samples = [
            crate::combinators::step(&crate::term::Term::Su),
            crate::arith::divmod(),
            crate::arith::sqrt(),
            crate::arith::mkpair_term(),
        ];
        samples.iter().all(|t| {
            let round = co(t.clone(), t.inverse());
            let input: Registers = (-3..3 + t.arity() as i64).map(BigInt::from).collect();
            eval(&round, input.clone()) == input
        })
    });

    part("pairing walk matches the oracle", {
        (0..12i64).all(|x| {
            (0..12i64).all(|y| {
                let mut input = regs(&[x, y]);
                input.resize(5, BigInt::zero());
                let out = eval_fast(&crate::arith::cp(), input);
                out[0] == cantor_pair(&BigInt::from(x), &BigInt::from(y))
            })
        })
    });

    part("division matches the oracle", {
        (0..30i64).all(|m| {
            (0..5i64).all(|n| {
                let mut input = regs(&[m, n]);
                input.resize(5, BigInt::zero());
                let out = eval(&crate::arith::divmod(), input);
                out[4] == BigInt::from(m.div_euclid(n + 1))
                    && out[2] == BigInt::from(m.rem_euclid(n + 1))
            })
        })
    });

    part("square codec round-trips", {
        (0..80i64).all(|p| {
            let (x, y) = nat_unpair(&BigInt::from(p));
            nat_mkpair(&x, &y) == BigInt::from(p)
        })
    });

    part("compiled addition encodes", {
        let add = prf_add();
        [PairingMode::Square, PairingMode::Cantor]
            .into_iter()
            .all(|mode| {
                let t = compile(&add, mode);
                (0..3i64).all(|a| {
                    (0..3i64).all(|b| {
                        let n = nat_mkpair(&BigInt::from(a), &BigInt::from(b));
                        let mut input = vec![BigInt::zero(); t.arity()];
                        input[1] = n.clone();
                        let out = eval_fast(&t, input);
                        out[0] == BigInt::from(a + b)
                            && out[1] == n
                            && out[2..].iter().all(Zero::is_zero)
                    })
                })
            })
    });

    part("compiled bases sweep clean", {
        use crate::prf::PrfExpr::*;
        [Zero, Succ, Left, Right].into_iter().all(|e| {
            let t = compile(&e, PairingMode::Square);
            check_encode(&e, &t, 25, &regs(&[-1, 0, 2]))
                .failures
                .is_empty()
        })
    });

    part(
        "expression evaluator agrees with pairing identities",
        (0..40u32).all(|n| {
            let n = BigInt::from(n);
            prf_eval(&crate::prf::pair(crate::prf::PrfExpr::Left, crate::prf::PrfExpr::Right), &n)
                == n
        }),
    );

    println!("{}", if clean { "selftest passed" } else { "selftest FAILED" });
    clean
}
