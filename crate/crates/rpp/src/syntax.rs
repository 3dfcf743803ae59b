//! Text syntax for terms, recursion expressions, and register lists.
//!
//! Grammar: `|` (parallel) binds tighter than `;` (series), both
//! left-associative; `;;` and `||` are accepted aliases. Atoms are
//! `Id <nat>`, `Ne`, `Su`, `Pr`, `Sw`, `It <atom>`, `If <atom> <atom> <atom>`,
//! parenthesized terms, and built-in names that expand at parse time.

use crate::prf::PrfExpr;
use crate::term::Term;
use num_bigint::BigInt;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

const BUILTINS: &[&str] = &[
    "cp", "cu", "divmod", "sqrt", "mkpair", "unpair", "inc", "dec", "mul",
];

fn builtin(name: &str) -> Option<Term> {
    match name {
        "cp" => Some(crate::arith::cp()),
        "cu" => Some(crate::arith::cu()),
        "divmod" => Some(crate::arith::divmod()),
        "sqrt" => Some(crate::arith::sqrt()),
        "mkpair" => Some(crate::arith::mkpair_term()),
        "unpair" => Some(crate::arith::unpair_term()),
        "inc" => Some(crate::combinators::inc()),
        "dec" => Some(crate::combinators::dec()),
        "mul" => Some(crate::combinators::mul()),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Nat(String),
    Int(String),
    Semi,
    Pipe,
    LParen,
    RParen,
    Comma,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Nat(s) | Tok::Int(s) => format!("`{s}`"),
            Tok::Semi => "`;`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

fn lex(src: &str) -> Result<Lexer, ParseError> {
    let mut toks = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                bump(&mut chars);
            }
            ';' => {
                bump(&mut chars);
                if chars.peek() == Some(&';') {
                    bump(&mut chars);
                }
                toks.push((Tok::Semi, tl, tc));
            }
            '|' => {
                bump(&mut chars);
                if chars.peek() == Some(&'|') {
                    bump(&mut chars);
                }
                toks.push((Tok::Pipe, tl, tc));
            }
            '(' => {
                bump(&mut chars);
                toks.push((Tok::LParen, tl, tc));
            }
            ')' => {
                bump(&mut chars);
                toks.push((Tok::RParen, tl, tc));
            }
            ',' => {
                bump(&mut chars);
                toks.push((Tok::Comma, tl, tc));
            }
            '-' => {
                bump(&mut chars);
                let mut s = String::from("-");
                while matches!(chars.peek(), Some(d) if d.is_ascii_digit()) {
                    s.push(bump(&mut chars));
                }
                if s.len() == 1 {
                    return Err(ParseError {
                        line: tl,
                        column: tc,
                        message: "stray `-`".into(),
                        expected: vec!["digits after the minus sign".into()],
                    });
                }
                toks.push((Tok::Int(s), tl, tc));
            }
            d if d.is_ascii_digit() => {
                let mut s = String::new();
                while matches!(chars.peek(), Some(d) if d.is_ascii_digit()) {
                    s.push(bump(&mut chars));
                }
                toks.push((Tok::Nat(s), tl, tc));
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let mut s = String::new();
                while matches!(chars.peek(), Some(a) if a.is_ascii_alphanumeric() || *a == '_') {
                    s.push(bump(&mut chars));
                }
                toks.push((Tok::Ident(s), tl, tc));
            }
            other => {
                return Err(ParseError {
                    line: tl,
                    column: tc,
                    message: format!("unexpected character `{other}`"),
                    expected: vec![],
                });
            }
        }
    }
    toks.push((Tok::Eof, line, col));
    Ok(Lexer { toks, pos: 0 })
}

impl Lexer {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn here(&self) -> (usize, usize) {
        let (_, l, c) = &self.toks[self.pos];
        (*l, *c)
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, message: impl Into<String>, expected: &[&str]) -> ParseError {
        let (line, column) = self.here();
        ParseError {
            line,
            column,
            message: message.into(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }
}

pub fn parse_term(src: &str) -> Result<Term, ParseError> {
    let mut lx = lex(src)?;
    let t = parse_seq(&mut lx)?;
    match lx.peek() {
        Tok::Eof => Ok(t),
        other => Err(lx.err(
            format!("trailing input starting at {}", other.describe()),
            &["`;`", "`|`", "end of input"],
        )),
    }
}

fn parse_seq(lx: &mut Lexer) -> Result<Term, ParseError> {
    let mut left = parse_par(lx)?;
    while *lx.peek() == Tok::Semi {
        lx.next();
        let right = parse_par(lx)?;
        left = Term::Co(Box::new(left), Box::new(right));
    }
    Ok(left)
}

fn parse_par(lx: &mut Lexer) -> Result<Term, ParseError> {
    let mut left = parse_atom(lx)?;
    while *lx.peek() == Tok::Pipe {
        lx.next();
        let right = parse_atom(lx)?;
        left = Term::Pa(Box::new(left), Box::new(right));
    }
    Ok(left)
}

const ATOM_EXPECTED: &[&str] = &[
    "`Id <nat>`",
    "`Ne`",
    "`Su`",
    "`Pr`",
    "`Sw`",
    "`It <atom>`",
    "`If <atom> <atom> <atom>`",
    "`(`",
    "a built-in name",
];

fn parse_atom(lx: &mut Lexer) -> Result<Term, ParseError> {
    match lx.peek().clone() {
        Tok::Ident(name) => match name.as_str() {
            "Id" => {
                lx.next();
                match lx.peek().clone() {
                    Tok::Nat(digits) => {
                        let n: usize = digits.parse().map_err(|_| {
                            lx.err(format!("wire count `{digits}` too large"), &[])
                        })?;
                        lx.next();
                        Ok(Term::Id(n))
                    }
                    other => Err(lx.err(
                        format!("`Id` needs a wire count, found {}", other.describe()),
                        &["a natural number"],
                    )),
                }
            }
            "Ne" => {
                lx.next();
                Ok(Term::Ne)
            }
            "Su" => {
                lx.next();
                Ok(Term::Su)
            }
            "Pr" => {
                lx.next();
                Ok(Term::Pr)
            }
            "Sw" => {
                lx.next();
                Ok(Term::Sw)
            }
            "It" => {
                lx.next();
                let f = parse_atom(lx)?;
                Ok(Term::It(Box::new(f)))
            }
            "If" => {
                lx.next();
                let f = parse_atom(lx)?;
                let g = parse_atom(lx)?;
                let h = parse_atom(lx)?;
                Ok(Term::If(Box::new(f), Box::new(g), Box::new(h)))
            }
            _ => {
                if let Some(t) = builtin(&name) {
                    lx.next();
                    Ok(t)
                } else {
                    Err(lx.err(
                        format!(
                            "unknown name `{name}` (built-ins: {})",
                            BUILTINS.join(", ")
                        ),
                        ATOM_EXPECTED,
                    ))
                }
            }
        },
        Tok::LParen => {
            lx.next();
            let t = parse_seq(lx)?;
            match lx.peek() {
                Tok::RParen => {
                    lx.next();
                    Ok(t)
                }
                other => Err(lx.err(
                    format!("unclosed parenthesis, found {}", other.describe()),
                    &["`)`"],
                )),
            }
        }
        other => Err(lx.err(
            format!("expected a term atom, found {}", other.describe()),
            ATOM_EXPECTED,
        )),
    }
}

/// Canonical text form with minimal parentheses; reparsing yields the
/// identical tree.
pub fn print_term(t: &Term) -> String {
    let mut out = String::new();
    write_seq(t, &mut out);
    out
}

fn write_seq(t: &Term, out: &mut String) {
    if let Term::Co(f, g) = t {
        write_seq(f, out);
        out.push_str(" ; ");
        write_par(g, out);
    } else {
        write_par(t, out);
    }
}

fn write_par(t: &Term, out: &mut String) {
    match t {
        Term::Co(..) => {
            out.push('(');
            write_seq(t, out);
            out.push(')');
        }
        Term::Pa(f, g) => {
            write_par(f, out);
            out.push_str(" | ");
            write_atom(g, out);
        }
        _ => write_atom(t, out),
    }
}

fn write_atom(t: &Term, out: &mut String) {
    match t {
        Term::Id(n) => {
            out.push_str("Id ");
            out.push_str(&n.to_string());
        }
        Term::Ne => out.push_str("Ne"),
        Term::Su => out.push_str("Su"),
        Term::Pr => out.push_str("Pr"),
        Term::Sw => out.push_str("Sw"),
        Term::It(f) => {
            out.push_str("It ");
            write_atom(f, out);
        }
        Term::If(f, g, h) => {
            out.push_str("If ");
            write_atom(f, out);
            out.push(' ');
            write_atom(g, out);
            out.push(' ');
            write_atom(h, out);
        }
        Term::Co(..) | Term::Pa(..) => {
            out.push('(');
            write_seq(t, out);
            out.push(')');
        }
    }
}

pub fn parse_prf(src: &str) -> Result<PrfExpr, ParseError> {
    let mut lx = lex(src)?;
    let e = parse_prf_expr(&mut lx)?;
    match lx.peek() {
        Tok::Eof => Ok(e),
        other => Err(lx.err(
            format!("trailing input starting at {}", other.describe()),
            &["end of input"],
        )),
    }
}

const PRF_EXPECTED: &[&str] = &[
    "`zero`",
    "`succ`",
    "`left`",
    "`right`",
    "`pair(F, G)`",
    "`comp(F, G)`",
    "`prec(F, G)`",
];

fn parse_prf_expr(lx: &mut Lexer) -> Result<PrfExpr, ParseError> {
    match lx.peek().clone() {
        Tok::Ident(name) => match name.as_str() {
            "zero" => {
                lx.next();
                Ok(PrfExpr::Zero)
            }
            "succ" => {
                lx.next();
                Ok(PrfExpr::Succ)
            }
            "left" => {
                lx.next();
                Ok(PrfExpr::Left)
            }
            "right" => {
                lx.next();
                Ok(PrfExpr::Right)
            }
            "pair" | "comp" | "prec" => {
                lx.next();
                if *lx.peek() != Tok::LParen {
                    return Err(lx.err(format!("`{name}` takes two arguments"), &["`(`"]));
                }
                lx.next();
                let f = parse_prf_expr(lx)?;
                if *lx.peek() != Tok::Comma {
                    return Err(lx.err(
                        format!("`{name}` takes two arguments"),
                        &["`,`"],
                    ));
                }
                lx.next();
                let g = parse_prf_expr(lx)?;
                if *lx.peek() != Tok::RParen {
                    return Err(lx.err(
                        format!("unclosed `{name}(`"),
                        &["`)`"],
                    ));
                }
                lx.next();
                let (f, g) = (Box::new(f), Box::new(g));
                Ok(match name.as_str() {
                    "pair" => PrfExpr::Pair(f, g),
                    "comp" => PrfExpr::Comp(f, g),
                    _ => PrfExpr::Prec(f, g),
                })
            }
            _ => Err(lx.err(format!("unknown name `{name}`"), PRF_EXPECTED)),
        },
        other => Err(lx.err(
            format!("expected an expression, found {}", other.describe()),
            PRF_EXPECTED,
        )),
    }
}

pub fn print_prf(e: &PrfExpr) -> String {
    match e {
        PrfExpr::Zero => "zero".into(),
        PrfExpr::Succ => "succ".into(),
        PrfExpr::Left => "left".into(),
        PrfExpr::Right => "right".into(),
        PrfExpr::Pair(f, g) => format!("pair({}, {})", print_prf(f), print_prf(g)),
        PrfExpr::Comp(f, g) => format!("comp({}, {})", print_prf(f), print_prf(g)),
        PrfExpr::Prec(f, g) => format!("prec({}, {})", print_prf(f), print_prf(g)),
    }
}

/// Comma- or whitespace-separated decimal integers; empty input is the
/// empty list.
pub fn parse_registers(src: &str) -> Result<Vec<BigInt>, ParseError> {
    let mut lx = lex(src)?;
    let mut out = Vec::new();
    loop {
        match lx.peek().clone() {
            Tok::Eof => return Ok(out),
            Tok::Comma => {
                lx.next();
            }
            Tok::Nat(s) | Tok::Int(s) => {
                lx.next();
                out.push(s.parse::<BigInt>().expect("lexed integer"));
            }
            other => {
                return Err(lx.err(
                    format!("expected an integer, found {}", other.describe()),
                    &["a decimal integer"],
                ))
            }
        }
    }
}

pub fn print_registers(regs: &[BigInt]) -> String {
    regs.iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
