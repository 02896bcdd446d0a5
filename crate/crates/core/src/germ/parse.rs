use crate::error::{Error, Result};
use crate::germ::poly::Polynomial;
use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(s) => format!("number '{s}'"),
        Tok::Ident(s) => format!("identifier '{s}'"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::End => "end of input".into(),
    }
}

fn syntax(column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { column, message: message.into() }
}

/// Tokens with 1-based character columns.
fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Num(chars[start..i].iter().collect()), col));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(syntax(col, format!("unexpected character '{c}'"))),
        };
        out.push((tok, col));
        i += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    vars: &'a [String],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn next(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if t.0 != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expr<C: Field>(&mut self) -> Result<Polynomial<C>> {
        let n = self.vars.len();
        let mut acc = Polynomial::zero(n);
        let mut negate = match self.peek() {
            Tok::Plus => {
                self.next();
                false
            }
            Tok::Minus => {
                self.next();
                true
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            negate = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => return Ok(acc),
            };
            self.next();
        }
    }

    fn term<C: Field>(&mut self) -> Result<Polynomial<C>> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.next();
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<Option<u32>> {
        if *self.peek() != Tok::Caret {
            return Ok(None);
        }
        self.next();
        match self.next() {
            (Tok::Num(s), col) => s
                .parse::<u32>()
                .map(Some)
                .map_err(|_| syntax(col, format!("exponent {s} is too large"))),
            (t, col) => Err(syntax(col, format!("expected an exponent, found {}", describe(&t)))),
        }
    }

    fn integer<C: Field>(digits: &str) -> C {
        let base = C::from_u32(1_000_000_000).expect("field has characteristic zero");
        let head = digits.len() % 9;
        let mut chunks = vec![&digits[..head]];
        chunks.extend((head..digits.len()).step_by(9).map(|i| &digits[i..i + 9]));
        chunks.into_iter().filter(|c| !c.is_empty()).fold(C::zero(), |acc, chunk| {
            let v: u32 = chunk.parse().expect("ASCII digits");
            acc * base.clone() + C::from_u32(v).expect("small integer")
        })
    }

    fn factor<C: Field>(&mut self) -> Result<Polynomial<C>> {
        let n = self.vars.len();
        match self.next() {
            (Tok::Num(digits), _) => {
                let mut value: C = Self::integer(&digits);
                if *self.peek() == Tok::Slash {
                    self.next();
                    let (t, dcol) = self.next();
                    let Tok::Num(den) = t else {
                        return Err(syntax(dcol, format!("expected a denominator, found {}", describe(&t))));
                    };
                    let den: C = Self::integer(&den);
                    if den.is_zero() {
                        return Err(syntax(dcol, "zero denominator"));
                    }
                    value = value / den;
                }
                Ok(Polynomial::constant(n, value))
            }
            (Tok::Ident(name), col) => {
                let i = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| syntax(col, format!("unknown variable '{name}'")))?;
                let x = Polynomial::variable(n, i);
                Ok(match self.exponent()? {
                    Some(k) => x.pow(k),
                    None => x,
                })
            }
            (Tok::LParen, _) => {
                let inner = self.expr()?;
                match self.next() {
                    (Tok::RParen, _) => {}
                    (t, col) => return Err(syntax(col, format!("expected ')', found {}", describe(&t)))),
                }
                Ok(match self.exponent()? {
                    Some(k) => inner.pow(k),
                    None => inner,
                })
            }
            (t, col) => Err(syntax(col, format!("expected a number, variable or '(', found {}", describe(&t)))),
        }
    }
}

/// Parses polynomial text over the given variables.
///
/// Grammar: sums and differences of products of rationals (`3`, `-1/2`),
/// variables with optional natural powers (`x^3`) and parenthesized
/// subexpressions (optionally raised to a power). A leading sign is
/// allowed. Whitespace is ignored.
pub fn parse_polynomial<C: Field>(text: &str, variables: &[String]) -> Result<Polynomial<C>> {
    let mut p = Parser { toks: tokenize(text)?, pos: 0, vars: variables };
    if *p.peek() == Tok::End {
        return Err(syntax(p.column(), "empty expression"));
    }
    let poly = p.expr()?;
    match p.next() {
        (Tok::End, _) => Ok(poly),
        (t, col) => Err(syntax(col, format!("unexpected {}", describe(&t)))),
    }
}
