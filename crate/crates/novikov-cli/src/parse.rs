//! Expression grammar shared by `--expr` flags and `.gdn` relation lines.
//!
//! Loosest to tightest: `+`/`-`, then the circle product `o` (alias `∘`),
//! then `*`, then unary minus, then `^` with a natural exponent. Atoms are
//! rationals `p/q`, generators (`a` means `a[-1]`), bracketed variables
//! `a[i]` with `i >= -1`, derivations `D^t(...)` (plain `D(...)` is one
//! application), and parentheses. `o` and `D` are reserved words.

use novikov_core::{circle, ratio, DVar, GeneratorSet, Monomial, Polynomial};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

#[derive(Debug)]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.pos.line, self.pos.col, self.message
        )
    }
}

impl std::error::Error for ParseError {}

fn err<T>(pos: Pos, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        pos,
        message: message.into(),
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Ident(String),
    Int(i64),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Circle,
    Derivation,
    Equals,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Int(n) => format!("number `{n}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Circle => "`o`".into(),
            Tok::Derivation => "`D`".into(),
            Tok::Equals => "`=`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

struct Lexeme {
    tok: Tok,
    pos: Pos,
}

fn lex(text: &str, base_line: u32) -> Result<Vec<Lexeme>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut line = base_line;
    let mut col = 1u32;
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' | '\u{2212}' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '=' => Some(Tok::Equals),
            '\u{2218}' => Some(Tok::Circle),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Lexeme { tok, pos });
            i += 1;
            col += 1;
        } else if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            i += 1;
            col += 1;
        } else if c.is_ascii_digit() {
            let mut value: i64 = 0;
            while i < chars.len() {
                let Some(digit) = chars[i].to_digit(10) else { break };
                value = match value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(i64::from(digit)))
                {
                    Some(v) => v,
                    None => return err(pos, "number too large"),
                };
                i += 1;
                col += 1;
            }
            out.push(Lexeme {
                tok: Tok::Int(value),
                pos,
            });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut name = String::new();
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                name.push(chars[i]);
                i += 1;
                col += 1;
            }
            let tok = match name.as_str() {
                "o" => Tok::Circle,
                "D" => Tok::Derivation,
                _ => Tok::Ident(name),
            };
            out.push(Lexeme { tok, pos });
        } else {
            return err(pos, format!("unexpected character `{c}`"));
        }
    }
    out.push(Lexeme {
        tok: Tok::Eof,
        pos: Pos { line, col },
    });
    Ok(out)
}

/// Parsed expression tree; positions point at the token that produced each
/// node so evaluation errors can cite them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Ast {
    Rational { numer: i64, denom: i64, pos: Pos },
    Var { name: String, bracket: i32, pos: Pos },
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Circle(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
    Derive(u32, Box<Ast>),
}

struct Parser {
    toks: Vec<Lexeme>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].pos
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].tok.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: &Tok) -> Result<(), ParseError> {
        if self.peek() == want {
            self.bump();
            Ok(())
        } else {
            err(
                self.pos(),
                format!("expected {}, found {}", want.describe(), self.peek().describe()),
            )
        }
    }

    fn nat(&mut self, what: &str) -> Result<u32, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => u32::try_from(n).map_err(|_| ParseError {
                pos,
                message: format!("{what} out of range"),
            }),
            other => err(pos, format!("expected {what}, found {}", other.describe())),
        }
    }

    fn expr(&mut self) -> Result<Ast, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = Ast::Add(Box::new(acc), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    acc = Ast::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Ast, ParseError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Circle {
            self.bump();
            acc = Ast::Circle(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Ast, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = Ast::Mul(Box::new(acc), Box::new(self.unary()?));
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Ast, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Ast::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Ast, ParseError> {
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let exp = self.nat("exponent")?;
            return Ok(Ast::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ast, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(numer) => {
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let dpos = self.pos();
                    match self.bump() {
                        Tok::Int(0) => err(dpos, "zero denominator"),
                        Tok::Int(denom) => Ok(Ast::Rational { numer, denom, pos }),
                        other => err(
                            dpos,
                            format!("expected denominator, found {}", other.describe()),
                        ),
                    }
                } else {
                    Ok(Ast::Rational {
                        numer,
                        denom: 1,
                        pos,
                    })
                }
            }
            Tok::Ident(name) => {
                let bracket = if *self.peek() == Tok::LBracket {
                    self.bump();
                    let negative = if *self.peek() == Tok::Minus {
                        self.bump();
                        true
                    } else {
                        false
                    };
                    let bpos = self.pos();
                    let magnitude = match self.bump() {
                        Tok::Int(n) => n,
                        other => {
                            return err(
                                bpos,
                                format!("expected bracket index, found {}", other.describe()),
                            )
                        }
                    };
                    let value = if negative { -magnitude } else { magnitude };
                    if value < -1 {
                        return err(bpos, "bracket index must be at least -1");
                    }
                    let Ok(value) = i32::try_from(value) else {
                        return err(bpos, "bracket index out of range");
                    };
                    self.expect(&Tok::RBracket)?;
                    value
                } else {
                    -1
                };
                Ok(Ast::Var { name, bracket, pos })
            }
            Tok::Derivation => {
                let t = if *self.peek() == Tok::Caret {
                    self.bump();
                    self.nat("derivation order")?
                } else {
                    1
                };
                self.expect(&Tok::LParen)?;
                let inner = self.expr()?;
                self.expect(&Tok::RParen)?;
                Ok(Ast::Derive(t, Box::new(inner)))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(&Tok::RParen)?;
                Ok(inner)
            }
            other => err(pos, format!("expected an expression, found {}", other.describe())),
        }
    }
}

fn parser(text: &str, base_line: u32) -> Result<Parser, ParseError> {
    Ok(Parser {
        toks: lex(text, base_line)?,
        at: 0,
    })
}

/// Parses one expression; trailing input is an error.
pub fn parse_expr(text: &str) -> Result<Ast, ParseError> {
    parse_expr_at(text, 1)
}

pub fn parse_expr_at(text: &str, base_line: u32) -> Result<Ast, ParseError> {
    let mut p = parser(text, base_line)?;
    let ast = p.expr()?;
    match p.peek() {
        Tok::Eof => Ok(ast),
        other => err(p.pos(), format!("unexpected {}", other.describe())),
    }
}

/// Parses a relation line: either an expression or `lhs = rhs`, which
/// means `lhs - rhs`.
pub fn parse_relation(text: &str, base_line: u32) -> Result<Ast, ParseError> {
    let mut p = parser(text, base_line)?;
    let lhs = p.expr()?;
    match p.bump() {
        Tok::Eof => Ok(lhs),
        Tok::Equals => {
            let rhs = p.expr()?;
            match p.peek() {
                Tok::Eof => Ok(Ast::Sub(Box::new(lhs), Box::new(rhs))),
                other => err(p.pos(), format!("unexpected {}", other.describe())),
            }
        }
        other => err(p.toks[p.at - 1].pos, format!("unexpected {}", other.describe())),
    }
}

/// Evaluates the tree over the declared alphabet. Bare generators sit at
/// bracket `-1`.
pub fn eval(ast: &Ast, gens: &GeneratorSet) -> Result<Polynomial, ParseError> {
    match ast {
        Ast::Rational { numer, denom, pos: _ } => {
            Ok(Polynomial::from_terms([(Monomial::one(), ratio(*numer, *denom))]))
        }
        Ast::Var { name, bracket, pos } => match gens.index_of(name) {
            Some(g) => Ok(Polynomial::from_monomial(Monomial::var(DVar::new(
                g, *bracket,
            )))),
            None => err(*pos, format!("unknown generator `{name}`")),
        },
        Ast::Neg(inner) => Ok(eval(inner, gens)?.scale(&ratio(-1, 1))),
        Ast::Add(l, r) => Ok(&eval(l, gens)? + &eval(r, gens)?),
        Ast::Sub(l, r) => Ok(&eval(l, gens)? - &eval(r, gens)?),
        Ast::Mul(l, r) => Ok(&eval(l, gens)? * &eval(r, gens)?),
        Ast::Circle(l, r) => Ok(circle(&eval(l, gens)?, &eval(r, gens)?)),
        Ast::Pow(base, exp) => Ok(eval(base, gens)?.pow(*exp)),
        Ast::Derive(t, inner) => Ok(eval(inner, gens)?.derive(*t)),
    }
}

/// Reserved words can never be generator names; the grammar would not be
/// able to mention them.
pub fn reserved(name: &str) -> bool {
    matches!(name, "o" | "D")
}
