use super::formula::Formula;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    Not,
    And,
    Or,
    Open,
    Close,
    True,
    False,
    Given,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '~' | '!' => Token::Not,
            '&' => Token::And,
            '|' => Token::Or,
            '(' => Token::Open,
            ')' => Token::Close,
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let word = &text[start..i];
                let tok = match word {
                    "TRUE" => Token::True,
                    "FALSE" => Token::False,
                    "given" => Token::Given,
                    _ => Token::Ident(word.to_string()),
                };
                out.push((start, tok));
                continue;
            }
            other => {
                return Err(Error::Syntax { offset: i, message: format!("unexpected character `{other}`") });
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { offset: self.offset(), message: message.into() })
    }

    fn or(&mut self) -> Result<Formula> {
        let mut f = self.and()?;
        while self.peek() == Some(&Token::Or) {
            self.pos += 1;
            f = f | self.and()?;
        }
        Ok(f)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut f = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            f = f & self.unary()?;
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.peek() {
            Some(Token::Not) => {
                self.pos += 1;
                Ok(!self.unary()?)
            }
            Some(Token::True) => {
                self.pos += 1;
                Ok(Formula::True)
            }
            Some(Token::False) => {
                self.pos += 1;
                Ok(Formula::False)
            }
            Some(Token::Ident(name)) => {
                let f = Formula::atom(name.clone());
                self.pos += 1;
                Ok(f)
            }
            Some(Token::Open) => {
                self.pos += 1;
                let f = self.or()?;
                if self.peek() != Some(&Token::Close) {
                    return self.error("expected `)`");
                }
                self.pos += 1;
                Ok(f)
            }
            Some(Token::Given) => self.error("`given` is only allowed between consequent and antecedent"),
            Some(_) => self.error("expected an atom, `TRUE`, `FALSE`, `~` or `(`"),
            None => self.error("unexpected end of input"),
        }
    }
}

fn parse_tokens(tokens: &[(usize, Token)], end: usize) -> Result<Formula> {
    let mut p = Parser { tokens, pos: 0, end };
    let f = p.or()?;
    if p.pos != tokens.len() {
        return p.error("unexpected trailing input");
    }
    Ok(f)
}

/// Parses a Boolean formula. Precedence is `~` over `&` over `|`; binary
/// operators associate to the left.
pub fn parse_formula(text: &str) -> Result<Formula> {
    parse_tokens(&tokenize(text)?, text.len())
}

/// Parses `E given H` or `E | H` into (consequent, antecedent).
///
/// With the bar form exactly one `|` may occur outside parentheses, so a
/// disjunctive consequent or antecedent must be parenthesized. Without any
/// separator the antecedent is `TRUE`.
pub fn parse_conditional(text: &str) -> Result<(Formula, Formula)> {
    let tokens = tokenize(text)?;
    let given: Vec<usize> =
        tokens.iter().enumerate().filter(|(_, (_, t))| *t == Token::Given).map(|(i, _)| i).collect();
    let split = match given.as_slice() {
        [i] => Some(*i),
        [] => {
            let mut depth = 0i32;
            let mut bars = Vec::new();
            for (i, (_, t)) in tokens.iter().enumerate() {
                match t {
                    Token::Open => depth += 1,
                    Token::Close => depth -= 1,
                    Token::Or if depth == 0 => bars.push(i),
                    _ => {}
                }
            }
            match bars.as_slice() {
                [] => None,
                [i] => Some(*i),
                [_, second, ..] => {
                    return Err(Error::Syntax {
                        offset: tokens[*second].0,
                        message: "ambiguous conditional bar; parenthesize disjunctions or use `given`".into(),
                    })
                }
            }
        }
        [_, second, ..] => {
            return Err(Error::Syntax { offset: tokens[*second].0, message: "more than one `given`".into() })
        }
    };
    match split {
        None => Ok((parse_tokens(&tokens, text.len())?, Formula::True)),
        Some(i) => {
            let at = tokens[i].0;
            let consequent = parse_tokens(&tokens[..i], at)?;
            let antecedent = parse_tokens(&tokens[i + 1..], text.len())?;
            Ok((consequent, antecedent))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: &str) -> Formula {
        Formula::atom(n)
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(parse_formula("A | B & ~C").unwrap(), a("A") | (a("B") & !a("C")));
        assert_eq!(parse_formula("A & B & C").unwrap(), (a("A") & a("B")) & a("C"));
        assert_eq!(parse_formula("~(A | TRUE)").unwrap(), !(a("A") | Formula::True));
        assert_eq!(parse_formula("!x_1").unwrap(), !a("x_1"));
    }

    #[test]
    fn reports_offsets() {
        match parse_formula("A & (B | ") {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 9),
            other => panic!("{other:?}"),
        }
        assert!(parse_formula("A B").is_err());
        assert!(parse_formula("A $ B").is_err());
        assert!(parse_formula("").is_err());
    }

    #[test]
    fn conditional_forms() {
        assert_eq!(parse_conditional("A given H").unwrap(), (a("A"), a("H")));
        assert_eq!(parse_conditional("A & B | (H | K)").unwrap(), (a("A") & a("B"), a("H") | a("K")));
        assert_eq!(parse_conditional("A | B given H").unwrap(), (a("A") | a("B"), a("H")));
        assert_eq!(parse_conditional("A").unwrap(), (a("A"), Formula::True));
        assert!(parse_conditional("A | B | H").is_err());
        assert!(parse_conditional("A given B given C").is_err());
    }
}
