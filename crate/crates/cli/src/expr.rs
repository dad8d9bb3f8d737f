//! Element expressions: named generators, integer exponents, products, sums, and `#` pairs.
//!
//! ```text
//! sum    := term (('+' | '-') term)*
//! term   := power (('*' | '#')? power)*
//! power  := unary ('^' ['-'] int | '^{' ['-'] int '}')?
//! unary  := '-' unary | atom
//! atom   := name | int | '(' sum ')'
//! ```
//!
//! `|>` (or `▷`) and `⊗` (or `|`) split a whole input into two expressions.

use hopf_core::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Name(String),
    Int(i64),
    Plus,
    Minus,
    Star,
    Hash,
    Caret,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Act,
    Tensor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Name { name: String, pos: usize },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow { base: Box<Expr>, exp: i64, pos: usize },
}

fn perr(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

fn is_name_char(c: char) -> bool {
    c.is_alphabetic() || c == '∂' || c == '_'
}

/// Tokens with their byte offsets.
pub fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut it = src.char_indices().peekable();
    while let Some(&(i, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut end = i;
            while let Some(&(j, d)) = it.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = j + d.len_utf8();
                it.next();
            }
            let v = src[i..end].parse::<i64>().map_err(|_| perr(i, "integer out of range"))?;
            out.push((i, Tok::Int(v)));
            continue;
        }
        if is_name_char(c) {
            let mut end = i;
            while let Some(&(j, d)) = it.peek() {
                if !is_name_char(d) {
                    break;
                }
                end = j + d.len_utf8();
                it.next();
            }
            out.push((i, Tok::Name(src[i..end].to_string())));
            continue;
        }
        it.next();
        let t = match c {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '#' => Tok::Hash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            '▷' => Tok::Act,
            '⊗' => Tok::Tensor,
            '|' => {
                if it.peek().map(|&(_, d)| d) == Some('>') {
                    it.next();
                    Tok::Act
                } else {
                    Tok::Tensor
                }
            }
            other => return Err(perr(i, format!("unexpected character {other:?}"))),
        };
        out.push((i, t));
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    i: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.i).map(|(_, t)| t.clone());
        self.i += 1;
        t
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) | Some(Tok::Hash) => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                Some(Tok::Name(_)) | Some(Tok::Int(_)) | Some(Tok::LParen) => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        let braced = self.peek() == Some(&Tok::LBrace);
        if braced {
            self.bump();
        }
        let neg = self.peek() == Some(&Tok::Minus);
        if neg {
            self.bump();
        }
        let pos = self.pos();
        let v = match self.bump() {
            Some(Tok::Int(v)) => v,
            _ => return Err(perr(pos, "expected an integer exponent")),
        };
        if braced {
            let pos = self.pos();
            if self.bump() != Some(Tok::RBrace) {
                return Err(perr(pos, "expected '}'"));
            }
        }
        Ok(if neg { -v } else { v })
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.unary()?;
        if self.peek() == Some(&Tok::Caret) {
            let pos = self.pos();
            self.bump();
            let exp = self.exponent()?;
            return Ok(Expr::Pow { base: Box::new(base), exp, pos });
        }
        Ok(base)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(v)) => Ok(Expr::Int(v)),
            Some(Tok::Name(name)) => Ok(Expr::Name { name, pos }),
            Some(Tok::LParen) => {
                let e = self.sum()?;
                let pos = self.pos();
                if self.bump() != Some(Tok::RParen) {
                    return Err(perr(pos, "expected ')'"));
                }
                Ok(e)
            }
            Some(t) => Err(perr(pos, format!("unexpected {}", describe(&t)))),
            None => Err(perr(pos, "unexpected end of input")),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Hash => "'#'",
        Tok::Caret => "'^'",
        Tok::RParen => "')'",
        Tok::LBrace => "'{'",
        Tok::RBrace => "'}'",
        Tok::Act => "'|>'",
        Tok::Tensor => "'⊗'",
        Tok::LParen => "'('",
        Tok::Name(_) => "name",
        Tok::Int(_) => "integer",
    }
}

fn parse_tokens(toks: &[(usize, Tok)], end: usize) -> Result<Expr> {
    let mut p = Parser { toks, i: 0, end };
    let e = p.sum()?;
    if p.i < toks.len() {
        let (pos, t) = &toks[p.i];
        return Err(perr(*pos, format!("unexpected {}", describe(t))));
    }
    Ok(e)
}

/// A single expression.
pub fn parse(src: &str) -> Result<Expr> {
    parse_tokens(&lex(src)?, src.len())
}

/// Two expressions around a single top-level `sep` (`Tok::Act` or `Tok::Tensor`).
pub fn parse_pair(src: &str, sep: Tok) -> Result<(Expr, Expr)> {
    let toks = lex(src)?;
    let mut depth = 0i32;
    let mut at = None;
    for (k, (pos, t)) in toks.iter().enumerate() {
        match t {
            Tok::LParen => depth += 1,
            Tok::RParen => depth -= 1,
            t if *t == sep && depth == 0 => {
                if at.is_some() {
                    return Err(perr(*pos, format!("more than one {}", describe(&sep))));
                }
                at = Some(k);
            }
            _ => {}
        }
    }
    let k = at.ok_or_else(|| perr(src.len(), format!("expected {} between two elements", describe(&sep))))?;
    let split_pos = toks[k].0;
    let left = parse_tokens(&toks[..k], split_pos)?;
    let right = parse_tokens(&toks[k + 1..], src.len())?;
    Ok((left, right))
}

/// Every name mentioned in `e`.
pub fn names(e: &Expr, out: &mut Vec<String>) {
    match e {
        Expr::Int(_) => {}
        Expr::Name { name, .. } => out.push(name.clone()),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
            names(a, out);
            names(b, out);
        }
        Expr::Neg(a) => names(a, out),
        Expr::Pow { base, .. } => names(base, out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn name(n: &str, pos: usize) -> Box<Expr> {
        Box::new(Expr::Name { name: n.into(), pos })
    }

    #[test]
    fn juxtaposition_and_hash_are_products() {
        assert_eq!(parse("del z").unwrap(), Expr::Mul(name("del", 0), name("z", 4)));
        assert_eq!(parse("1 # 1").unwrap(), Expr::Mul(Box::new(Expr::Int(1)), Box::new(Expr::Int(1))));
    }

    #[test]
    fn exponents_bind_tighter_than_products() {
        let e = parse("k^-1 E^{2}").unwrap();
        assert_eq!(
            e,
            Expr::Mul(
                Box::new(Expr::Pow { base: name("k", 0), exp: -1, pos: 1 }),
                Box::new(Expr::Pow { base: name("E", 5), exp: 2, pos: 6 })
            )
        );
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse("z + * del"), Err(Error::Parse { pos: 4, msg: "unexpected '*'".into() }));
        assert_eq!(parse("(z"), Err(Error::Parse { pos: 2, msg: "expected ')'".into() }));
        assert!(matches!(parse("z $"), Err(Error::Parse { pos: 2, .. })));
    }

    #[test]
    fn pairs_split_at_top_level() {
        let (a, b) = parse_pair("E |> z", Tok::Act).unwrap();
        assert_eq!((a, b), (*name("E", 0), *name("z", 5)));
        assert!(parse_pair("(E |> z)", Tok::Act).is_err());
        assert!(parse_pair("z ⊗ del", Tok::Tensor).is_ok());
        assert!(parse_pair("z | del", Tok::Tensor).is_ok());
    }
}
