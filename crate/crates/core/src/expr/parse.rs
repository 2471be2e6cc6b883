//! Identity grammar.
//!
//! ```text
//! identity := expr "=" (expr | "_const")
//! expr     := operand (OP operand)?
//! operand  := "a" | "b" | "c" | "(" expr ")"
//! ```
//!
//! Operators are either words (`o1`) or runs of punctuation (`+`, `*`).
//! Chained infix without parentheses is rejected.

use super::{ExprError, Expression, Identity, Var};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    LParen,
    RParen,
    Eq,
    Word(String),
    Sym(String),
}

fn tokenize(text: &str) -> Vec<(usize, Tok)> {
    let mut out = Vec::new();
    let mut it = text.char_indices().peekable();
    while let Some(&(pos, ch)) = it.peek() {
        if ch.is_whitespace() {
            it.next();
        } else if ch == '(' || ch == ')' || ch == '=' {
            it.next();
            out.push((pos, if ch == '(' { Tok::LParen } else if ch == ')' { Tok::RParen } else { Tok::Eq }));
        } else if ch.is_alphanumeric() || ch == '_' {
            let mut w = String::new();
            while let Some(&(_, c)) = it.peek() {
                if c.is_alphanumeric() || c == '_' {
                    w.push(c);
                    it.next();
                } else {
                    break;
                }
            }
            out.push((pos, Tok::Word(w)));
        } else {
            let mut w = String::new();
            while let Some(&(_, c)) = it.peek() {
                if c.is_whitespace() || c.is_alphanumeric() || c == '_' || c == '(' || c == ')' || c == '=' {
                    break;
                }
                w.push(c);
                it.next();
            }
            out.push((pos, Tok::Sym(w)));
        }
    }
    out
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    alphabet: Option<&'a [&'a str]>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn err(&self, msg: &str) -> ExprError {
        ExprError::Parse { pos: self.pos(), msg: msg.to_string() }
    }

    fn is_op(&self, sym: &str) -> bool {
        self.alphabet.is_none_or(|a| a.contains(&sym))
    }

    fn operand(&mut self) -> Result<Expression, ExprError> {
        match self.peek().cloned() {
            Some(Tok::LParen) => {
                self.at += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.err("expected `)`"));
                }
                self.at += 1;
                Ok(e)
            }
            Some(Tok::Word(w)) => {
                let v = match w.as_str() {
                    "a" => Var::A,
                    "b" => Var::B,
                    "c" => Var::C,
                    _ if self.alphabet.is_some_and(|a| a.contains(&w.as_str())) => {
                        return Err(self.err(&format!("operator `{w}` where an operand was expected")))
                    }
                    _ => return Err(ExprError::UnboundVariable(w)),
                };
                self.at += 1;
                Ok(Expression::Leaf(v))
            }
            Some(_) => Err(self.err("expected a variable or `(`")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn operator(&mut self) -> Result<Option<String>, ExprError> {
        let sym = match self.peek() {
            Some(Tok::Word(w)) | Some(Tok::Sym(w)) => w.clone(),
            _ => return Ok(None),
        };
        if !self.is_op(&sym) {
            return Err(ExprError::UnknownSymbol(sym));
        }
        self.at += 1;
        Ok(Some(sym))
    }

    fn expr(&mut self) -> Result<Expression, ExprError> {
        let left = self.operand()?;
        let Some(op) = self.operator()? else { return Ok(left) };
        let right = self.operand()?;
        if matches!(self.peek(), Some(Tok::Word(_)) | Some(Tok::Sym(_))) {
            return Err(self.err("chained operators need parentheses"));
        }
        Ok(Expression::node(&op, left, right))
    }
}

fn parser<'a>(text: &str, alphabet: Option<&'a [&'a str]>) -> Parser<'a> {
    Parser { toks: tokenize(text), at: 0, end: text.len(), alphabet }
}

/// Parses a single expression. `alphabet = None` accepts any operator token.
pub fn parse_expression(text: &str, alphabet: Option<&[&str]>) -> Result<Expression, ExprError> {
    let mut p = parser(text, alphabet);
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

fn identity(text: &str, alphabet: Option<&[&str]>) -> Result<Identity, ExprError> {
    let mut p = parser(text, alphabet);
    let lhs = p.expr()?;
    if p.peek() != Some(&Tok::Eq) {
        return Err(p.err("expected `=`"));
    }
    p.at += 1;
    if p.peek() == Some(&Tok::Word("_const".to_string())) {
        p.at += 1;
        if p.peek().is_some() {
            return Err(p.err("unexpected trailing input"));
        }
        return Ok(Identity::ConstantTerm(lhs));
    }
    let rhs = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(Identity::Equation(lhs, rhs))
}

/// Parses an identity whose operators must come from `alphabet`.
pub fn parse_identity(text: &str, alphabet: &[&str]) -> Result<Identity, ExprError> {
    identity(text, Some(alphabet))
}

/// Parses an identity accepting any operator token.
pub fn parse_identity_any(text: &str) -> Result<Identity, ExprError> {
    identity(text, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    const OPS: &[&str] = &["+", "*"];

    #[test]
    fn distributivity() {
        let id = parse_identity("a*(b+c) = (a*b)+(a*c)", OPS).unwrap();
        let a = Expression::var(Var::A);
        let b = Expression::var(Var::B);
        let c = Expression::var(Var::C);
        let lhs = Expression::node("*", a.clone(), Expression::node("+", b.clone(), c.clone()));
        let rhs = Expression::node("+", Expression::node("*", a.clone(), b), Expression::node("*", a, c));
        assert_eq!(id, Identity::Equation(lhs, rhs));
    }

    #[test]
    fn constant_term() {
        let id = parse_identity("((a*b)+(a*c))+(b*c) = _const", OPS).unwrap();
        assert!(matches!(id, Identity::ConstantTerm(_)));
    }

    #[test]
    fn errors() {
        assert_eq!(parse_identity("a*(d+c) = a", OPS), Err(ExprError::UnboundVariable("d".into())));
        assert_eq!(parse_identity("a-b = a", OPS), Err(ExprError::UnknownSymbol("-".into())));
        assert!(matches!(parse_identity("a+b+c = a", OPS), Err(ExprError::Parse { .. })));
        assert!(matches!(parse_identity("(a+b = a", OPS), Err(ExprError::Parse { .. })));
        assert!(matches!(parse_identity("a+b", OPS), Err(ExprError::Parse { .. })));
        assert!(matches!(parse_identity("a = b = c", OPS), Err(ExprError::Parse { .. })));
    }

    #[test]
    fn word_operators() {
        let ops = ["o1", "o2"];
        let id = parse_identity("(a o1 b) o2 c = _const", &ops).unwrap();
        assert_eq!(id.to_string(), "(a o1 b) o2 c = _const");
        assert!(matches!(parse_identity("o1 o1 b = a", &ops), Err(ExprError::Parse { .. })));
    }

    #[test]
    fn redundant_parentheses() {
        let e = parse_expression("((a))", None).unwrap();
        assert_eq!(e, Expression::var(Var::A));
        assert_eq!(parse_expression("((a+b))*c", None).unwrap().to_string(), "((a+b)*c)");
    }
}
