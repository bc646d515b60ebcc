//! Multivector literals such as `e12 + 1/3 e20 - 1/2*e01`.

use thiserror::Error;

use crate::algebra::{Algebra, Space};
use crate::multivector::Multivector;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("line {line}, column {column}: generator e{index} does not exist in {space}")]
    UnknownGenerator { index: u32, space: Space, line: usize, column: usize },
    #[error("line {line}, column {column}: blade {blade} repeats a generator")]
    DuplicateGeneratorInBlade { blade: String, line: usize, column: usize },
    #[error("line {line}: unknown query operation {op:?}")]
    UnknownQueryOp { op: String, line: usize },
    #[error("line {line}: {name:?} is not bound before use")]
    UnboundName { name: String, line: usize },
    #[error("line {line}: {name:?} is already bound")]
    DuplicateName { name: String, line: usize },
    #[error("line {line}: {op} takes {expected} argument(s), got {found}")]
    ArityMismatch { op: String, expected: usize, found: usize, line: usize },
    #[error("line {line}: unknown space {name:?} (expected H1, H2 or H3)")]
    UnknownSpace { name: String, line: usize },
    #[error("scene has bindings or queries but no `space:` header")]
    MissingSpace,
    #[error("invalid JSON multivector: {0}")]
    Json(String),
}

impl ParseError {
    pub fn kind(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "SyntaxError",
            ParseError::UnknownGenerator { .. } => "UnknownGenerator",
            ParseError::DuplicateGeneratorInBlade { .. } => "DuplicateGeneratorInBlade",
            ParseError::UnknownQueryOp { .. } => "UnknownQueryOp",
            ParseError::UnboundName { .. } => "UnboundName",
            ParseError::DuplicateName { .. } => "DuplicateName",
            ParseError::ArityMismatch { .. } => "ArityMismatch",
            ParseError::UnknownSpace { .. } => "UnknownSpace",
            ParseError::MissingSpace => "MissingSpace",
            ParseError::Json(_) => "Json",
        }
    }
}

/// Parses a literal in the grammar
///
/// ```text
/// mv    := sign? term (sign term)*
/// term  := coef '*'? blade | coef | blade
/// blade := 'e' digit+
/// coef  := decimal | int '/' int
/// ```
///
/// Blade digits are generators in written order; `e320` in H3 is
/// `e3 e2 e0` and lands on the canonical `e320` blade, while `e012` lands on
/// `-e210`.
pub fn parse_mv(text: &str, alg: &'static Algebra) -> Result<Multivector, ParseError> {
    Parser::new(text, alg, 1, None).expression()
}

pub(crate) type Lookup<'a> = &'a dyn Fn(&str) -> Option<Multivector>;

/// Expression parser over a single line; `lookup` resolves binding names in scenes.
pub(crate) struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    alg: &'static Algebra,
    line: usize,
    column_offset: usize,
    lookup: Option<Lookup<'a>>,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(text: &str, alg: &'static Algebra, line: usize, lookup: Option<Lookup<'a>>) -> Self {
        Parser { chars: text.chars().collect(), pos: 0, alg, line, column_offset: 0, lookup }
    }

    pub(crate) fn with_column_offset(mut self, offset: usize) -> Self {
        self.column_offset = offset;
        self
    }

    fn column(&self, pos: usize) -> usize {
        self.column_offset + pos + 1
    }

    fn syntax(&self, pos: usize, message: impl Into<String>) -> ParseError {
        ParseError::Syntax { line: self.line, column: self.column(pos), message: message.into() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    pub(crate) fn expression(&mut self) -> Result<Multivector, ParseError> {
        let mut acc = Multivector::zero(self.alg);
        self.skip_ws();
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -1.0
            }
            Some('+') => {
                self.pos += 1;
                1.0
            }
            _ => 1.0,
        };
        loop {
            self.skip_ws();
            acc += self.term()? * sign;
            self.skip_ws();
            sign = match self.peek() {
                None => return Ok(acc),
                Some('+') => 1.0,
                Some('-') => -1.0,
                Some(c) => return Err(self.syntax(self.pos, format!("expected '+' or '-', found {c:?}"))),
            };
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Multivector, ParseError> {
        let start = self.pos;
        let coef = match self.peek() {
            Some(c) if c.is_ascii_digit() || c == '.' => Some(self.coefficient()?),
            _ => None,
        };
        let after_coef = self.pos;
        self.skip_ws();
        let star = self.peek() == Some('*');
        if star {
            if coef.is_none() {
                return Err(self.syntax(self.pos, "'*' must follow a coefficient"));
            }
            self.pos += 1;
            self.skip_ws();
        }
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let factor = self.atom()?;
                Ok(factor * coef.unwrap_or(1.0))
            }
            _ if star => Err(self.syntax(self.pos, "expected a blade after '*'")),
            _ => match coef {
                Some(k) => {
                    self.pos = after_coef;
                    Ok(Multivector::scalar(self.alg, k))
                }
                None => Err(match self.peek() {
                    None => self.syntax(start, "expected a term, found end of input"),
                    Some(c) => self.syntax(start, format!("expected a term, found {c:?}")),
                }),
            },
        }
    }

    fn digits(&mut self) -> usize {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.pos - start
    }

    fn slice(&self, from: usize, to: usize) -> String {
        self.chars[from..to].iter().collect()
    }

    fn coefficient(&mut self) -> Result<f64, ParseError> {
        let start = self.pos;
        let whole = self.digits();
        if self.peek() == Some('/') && whole > 0 {
            let num = self.slice(start, self.pos);
            self.pos += 1;
            let den_start = self.pos;
            if self.digits() == 0 {
                return Err(self.syntax(self.pos, "expected an integer denominator"));
            }
            let den = self.slice(den_start, self.pos);
            let (n, d): (f64, f64) = (num.parse().expect("digits"), den.parse().expect("digits"));
            if d == 0.0 {
                return Err(self.syntax(den_start, "zero denominator"));
            }
            return Ok(n / d);
        }
        if self.peek() == Some('.') {
            self.pos += 1;
            let frac = self.digits();
            if whole == 0 && frac == 0 {
                return Err(self.syntax(start, "a number needs at least one digit"));
            }
        }
        let text = self.slice(start, self.pos);
        text.parse::<f64>().map_err(|_| self.syntax(start, format!("invalid number {text:?}")))
    }

    /// A blade (`e` followed only by digits) or a bound name.
    fn atom(&mut self) -> Result<Multivector, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        let word = self.slice(start, self.pos);
        let rest = &word[1..];
        if word.starts_with('e') && !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
            return self.blade(&word, start);
        }
        match self.lookup {
            Some(lookup) => {
                lookup(&word).ok_or_else(|| ParseError::UnboundName { name: word.clone(), line: self.line })
            }
            None => Err(self.syntax(start, format!("{word:?} is not a blade"))),
        }
    }

    fn blade(&self, word: &str, start: usize) -> Result<Multivector, ParseError> {
        let d = self.alg.dim() as u32;
        let mut seen = 0u32;
        let mut value = Multivector::scalar(self.alg, 1.0);
        for (k, ch) in word[1..].chars().enumerate() {
            let g = ch.to_digit(10).expect("digits checked");
            if g > d {
                return Err(ParseError::UnknownGenerator {
                    index: g,
                    space: self.alg.space(),
                    line: self.line,
                    column: self.column(start + 1 + k),
                });
            }
            if seen & (1 << g) != 0 {
                return Err(ParseError::DuplicateGeneratorInBlade {
                    blade: word.to_string(),
                    line: self.line,
                    column: self.column(start),
                });
            }
            seen |= 1 << g;
            value = value * Multivector::blade(self.alg, &format!("e{g}"));
        }
        Ok(value)
    }
}
