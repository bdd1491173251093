// Copyright 2026 The qcond Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Text grammar for condition expressions.
//!
//! ```text
//! expr    := and ("OR" and)*
//! and     := unary ("AND" unary)*
//! unary   := "NOT" unary | "(" expr ")" | atom
//! atom    := term (("^" | "⊕") term)* "=" ("0" | "1")
//! term    := "q" INDEX | "0"
//! ```
//!
//! Keywords are case-insensitive and qubit indices are 1-based, e.g.
//! `(q1^q2=0) AND NOT (q3=1)`. The printer in `qcond-core` (`Display` for
//! `ConditionExpr`) produces text this grammar reads back to the same tree.

use std::fmt;

use qcond_core::{ConditionExpr, ConditionLabel, ParityCondition, QubitCount};

/// A syntax error and the 0-based character offset where it was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Character offset into the input.
    pub position: usize,
    /// What went wrong.
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at column {}: {}", self.position + 1, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Qubit(usize),
    Zero,
    One,
    Xor,
    Eq,
    And,
    Or,
    Not,
    Open,
    Close,
}

fn describe(t: Option<&Token>) -> String {
    match t {
        None => "end of input".into(),
        Some(Token::Qubit(q)) => format!("q{q}"),
        Some(Token::Zero) => "0".into(),
        Some(Token::One) => "1".into(),
        Some(Token::Xor) => "'^'".into(),
        Some(Token::Eq) => "'='".into(),
        Some(Token::And) => "AND".into(),
        Some(Token::Or) => "OR".into(),
        Some(Token::Not) => "NOT".into(),
        Some(Token::Open) => "'('".into(),
        Some(Token::Close) => "')'".into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |position, message: String| ParseError { position, message };
    while i < chars.len() {
        let start = i;
        let ch = chars[i];
        let simple = match ch {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '^' | '⊕' => Some(Token::Xor),
            '=' => Some(Token::Eq),
            '(' => Some(Token::Open),
            ')' => Some(Token::Close),
            '0' => Some(Token::Zero),
            '1' => Some(Token::One),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((start, t));
            i += 1;
            continue;
        }
        if ch.is_ascii_alphabetic() {
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            let upper = word.to_ascii_uppercase();
            let token = match upper.as_str() {
                "AND" => Token::And,
                "OR" => Token::Or,
                "NOT" => Token::Not,
                _ if upper.starts_with('Q') && upper.len() > 1 => {
                    let digits = &word[1..];
                    if !digits.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(err(start, format!("unknown word '{word}'")));
                    }
                    let q = digits
                        .parse::<usize>()
                        .map_err(|_| err(start, format!("bad qubit index '{word}'")))?;
                    Token::Qubit(q)
                }
                _ => return Err(err(start, format!("unknown word '{word}'"))),
            };
            out.push((start, token));
            continue;
        }
        return Err(err(start, format!("unexpected character '{ch}'")));
    }
    Ok(out)
}

struct Parser {
    n: QubitCount,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.offset(), message: message.into() })
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<ConditionExpr, ParseError> {
        let mut left = self.and()?;
        while self.peek() == Some(&Token::Or) {
            self.bump();
            left = left | self.and()?;
        }
        Ok(left)
    }

    fn and(&mut self) -> Result<ConditionExpr, ParseError> {
        let mut left = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.bump();
            left = left & self.unary()?;
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<ConditionExpr, ParseError> {
        match self.peek() {
            Some(Token::Not) => {
                self.bump();
                Ok(!self.unary()?)
            }
            Some(Token::Open) => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return self.error(format!("expected ')', found {}", describe(self.peek())));
                }
                self.bump();
                Ok(inner)
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<ConditionExpr, ParseError> {
        let mut qubits: Vec<usize> = Vec::new();
        let mut constant_zero = false;
        loop {
            let at = self.offset();
            match self.peek() {
                Some(Token::Qubit(q)) => {
                    let q = *q;
                    if q == 0 || q > self.n.get() as usize {
                        return self.error(format!("qubit q{q} outside q1..q{}", self.n));
                    }
                    if qubits.contains(&q) {
                        return self.error(format!("qubit q{q} repeated in one parity"));
                    }
                    qubits.push(q);
                }
                Some(Token::Zero) if qubits.is_empty() && !constant_zero => constant_zero = true,
                other => {
                    return Err(ParseError {
                        position: at,
                        message: format!("expected a qubit like q1, found {}", describe(other)),
                    })
                }
            }
            self.bump();
            if constant_zero || self.peek() != Some(&Token::Xor) {
                break;
            }
            self.bump();
        }
        if self.peek() != Some(&Token::Eq) {
            return self.error(format!("expected '=', found {}", describe(self.peek())));
        }
        self.bump();
        let rhs = match self.peek() {
            Some(Token::Zero) => false,
            Some(Token::One) => true,
            other => return self.error(format!("expected 0 or 1, found {}", describe(other))),
        };
        self.bump();
        let mask = ConditionLabel::from_qubits(self.n, &qubits).expect("indices checked");
        Ok(ParityCondition::new(mask, rhs).into())
    }
}

/// Parses a condition expression over an `n`-qubit register.
pub fn parse_condition_expr(text: &str, n: QubitCount) -> Result<ConditionExpr, ParseError> {
    let tokens = tokenize(text)?;
    let mut p = Parser { n, tokens, pos: 0, end: text.chars().count() };
    if p.peek().is_none() {
        return p.error("empty expression");
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.error(format!("unexpected {}", describe(p.peek())));
    }
    Ok(e)
}
