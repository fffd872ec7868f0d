//! Pauli-string Hamiltonian expressions such as `0.5*X0 + 0.5*X1 - Z0 Z1`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := sign? (decimal '*'?)? factor+
//! factor := ('X' | 'Y' | 'Z' | 'I') index
//! ```
//!
//! Indices are 0-based qubits. Factors in a term are tensor components, so an
//! index may appear at most once per term. A sign directly after `+` or `-`
//! must be glued to a coefficient, as in `X0 + -0.5 Z1`.

use num_complex::Complex;
use symqsl::matcore::{ComplexMatrix, HermitianMatrix};
use symqsl::pauli::{self, Pauli};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("qubit index {index} at byte {offset} is out of range for {n_qubits} qubits")]
    IndexOutOfRange { offset: usize, index: usize, n_qubits: usize },
    #[error("qubit index {index} repeated at byte {offset}")]
    DuplicateIndex { offset: usize, index: usize },
}

/// One product term `coeff · P_0 ⊗ … ⊗ P_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub coeff: f64,
    pub factors: Vec<(usize, Pauli)>,
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(&f) {
            self.bump();
        }
        &self.text[start..self.pos]
    }

    /// Unsigned decimal; `None` if no number starts here.
    fn number(&mut self) -> Result<Option<f64>, ParseError> {
        let start = self.pos;
        if self.take_while(|c| c.is_ascii_digit() || c == '.').is_empty() {
            return Ok(None);
        }
        if matches!(self.peek(), Some('e' | 'E')) {
            let save = self.pos;
            self.bump();
            if let Some('+' | '-') = self.peek() {
                self.bump();
            }
            if self.take_while(|c| c.is_ascii_digit()).is_empty() {
                self.pos = save;
            }
        }
        let literal = &self.text[start..self.pos];
        literal
            .parse::<f64>()
            .map(Some)
            .map_err(|_| ParseError::Syntax {
                offset: start,
                message: format!("invalid number `{literal}`"),
            })
    }
}

/// Parses `text` into product terms on `n_qubits` qubits.
pub fn parse_terms(text: &str, n_qubits: usize) -> Result<Vec<Term>, ParseError> {
    let mut cur = Cursor { text, pos: 0 };
    let mut terms = Vec::new();
    let mut sign = 1.0;
    loop {
        cur.skip_ws();
        let term_start = cur.pos;
        if let Some(c @ ('+' | '-' | '−')) = cur.peek() {
            cur.bump();
            if c != '+' {
                sign = -sign;
            }
            if terms.is_empty() {
                cur.skip_ws();
            } else if !cur.peek().is_some_and(|c| c.is_ascii_digit() || c == '.') {
                return Err(cur.error("a sign after an operator must start a coefficient"));
            }
        }
        let coeff = cur.number()?;
        cur.skip_ws();
        if coeff.is_some() && cur.peek() == Some('*') {
            cur.bump();
            cur.skip_ws();
        }
        let mut factors: Vec<(usize, Pauli)> = Vec::new();
        while let Some(p) = cur.peek().and_then(Pauli::from_char) {
            let offset = cur.pos;
            cur.bump();
            let digits = cur.take_while(|c| c.is_ascii_digit());
            if digits.is_empty() {
                return Err(cur.error("expected a qubit index after the Pauli letter"));
            }
            let index: usize = digits.parse().map_err(|_| ParseError::Syntax {
                offset,
                message: "qubit index too large".into(),
            })?;
            if index >= n_qubits {
                return Err(ParseError::IndexOutOfRange { offset, index, n_qubits });
            }
            if factors.iter().any(|&(q, _)| q == index) {
                return Err(ParseError::DuplicateIndex { offset, index });
            }
            factors.push((index, p));
            cur.skip_ws();
        }
        if factors.is_empty() {
            return Err(ParseError::Syntax {
                offset: cur.pos.max(term_start),
                message: if cur.peek().is_none() {
                    "expected a term".into()
                } else {
                    format!("unexpected `{}`", cur.peek().unwrap_or(' '))
                },
            });
        }
        let coeff = sign * coeff.unwrap_or(1.0);
        if !coeff.is_finite() {
            return Err(ParseError::Syntax {
                offset: term_start,
                message: "coefficient is not finite".into(),
            });
        }
        terms.push(Term { coeff, factors });
        cur.skip_ws();
        match cur.peek() {
            None => return Ok(terms),
            Some('+') => sign = 1.0,
            Some('-' | '−') => sign = -1.0,
            Some(c) => return Err(cur.error(format!("expected `+` or `-`, found `{c}`"))),
        }
        cur.bump();
    }
}

/// Dense `2^n × 2^n` Hermitian matrix of a Pauli expression.
pub fn parse_pauli_expression(text: &str, n_qubits: usize) -> Result<HermitianMatrix<f64>, ParseError> {
    let terms = parse_terms(text, n_qubits)?;
    let d = 1usize << n_qubits;
    let mut m = ComplexMatrix::<f64>::zeros(d, d);
    for t in &terms {
        pauli::add_string(&mut m, n_qubits, Complex::new(t.coeff, 0.0), &t.factors);
    }
    Ok(HermitianMatrix::new(m).expect("real combinations of Pauli strings are Hermitian"))
}
