//! Carter's names for conjugacy classes of exceptional Weyl groups.
//!
//! Grammar (ASCII, `~` for a tilde, `'` for a prime):
//!
//! ```text
//! label     := sum | "(" sum ")" primes
//! sum       := term ("+" term)*
//! term      := [multiplier] ["~"] SERIES [primes] "_" digits ["(a_" digits ")"]
//! SERIES    := A | B | C | D | E | F | G
//! primes    := "'"+
//! ```
//!
//! `A'_5` (prime on the series letter) and `(A_5)'` (prime on a bracketed
//! sum) are kept apart so that every label prints back exactly as it was read.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Series {
    A,
    ATilde,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    fn letter(self) -> char {
        match self {
            Series::A | Series::ATilde => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelComponent {
    pub multiplier: u32,
    pub series: Series,
    pub subscript: u32,
    /// `k` in a trailing `(a_k)`.
    pub qualifier: Option<u32>,
    /// Primes attached to the series letter, as in `A''_7`.
    pub primes: u8,
}

impl LabelComponent {
    pub fn new(multiplier: u32, series: Series, subscript: u32) -> Self {
        LabelComponent {
            multiplier,
            series,
            subscript,
            qualifier: None,
            primes: 0,
        }
    }

    pub fn with_qualifier(mut self, k: u32) -> Self {
        self.qualifier = Some(k);
        self
    }

    pub fn rank(&self) -> u32 {
        self.multiplier * self.subscript
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CarterLabel {
    components: Vec<LabelComponent>,
    /// Primes on a bracketed sum, as in `(A_3+A_1)''`; zero means unbracketed.
    outer_primes: u8,
}

impl CarterLabel {
    pub fn new(components: Vec<LabelComponent>, outer_primes: u8) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::BadInput("empty Carter label".into()));
        }
        Ok(CarterLabel {
            components,
            outer_primes,
        })
    }

    pub fn components(&self) -> &[LabelComponent] {
        &self.components
    }

    pub fn outer_primes(&self) -> u8 {
        self.outer_primes
    }

    /// Sum of multiplier times subscript; `A_0` contributes nothing.
    pub fn rank(&self) -> u32 {
        self.components.iter().map(LabelComponent::rank).sum()
    }
}

/// Free-function spelling of `text.parse::<CarterLabel>()`.
pub fn parse_carter_label(text: &str) -> Result<CarterLabel> {
    text.parse()
}

impl fmt::Display for LabelComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplier != 1 {
            write!(f, "{}", self.multiplier)?;
        }
        if self.series == Series::ATilde {
            f.write_str("~")?;
        }
        write!(f, "{}", self.series.letter())?;
        for _ in 0..self.primes {
            f.write_str("'")?;
        }
        write!(f, "_{}", self.subscript)?;
        if let Some(k) = self.qualifier {
            write!(f, "(a_{k})")?;
        }
        Ok(())
    }
}

impl fmt::Display for CarterLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrapped = self.outer_primes > 0;
        if wrapped {
            f.write_str("(")?;
        }
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{c}")?;
        }
        if wrapped {
            f.write_str(")")?;
            for _ in 0..self.outer_primes {
                f.write_str("'")?;
            }
        }
        Ok(())
    }
}

impl FromStr for CarterLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            text: s,
            bytes: s.as_bytes(),
            pos: 0,
        };
        let label = p.label()?;
        if p.pos != p.bytes.len() {
            return Err(p.error("trailing input"));
        }
        Ok(label)
    }
}

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            text: self.text.to_string(),
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", b as char)))
        }
    }

    fn number(&mut self) -> Option<u32> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        self.text[start..self.pos].parse().ok()
    }

    fn primes(&mut self) -> u8 {
        let mut n = 0;
        while self.eat(b'\'') {
            n += 1;
        }
        n
    }

    fn label(&mut self) -> Result<CarterLabel> {
        if self.eat(b'(') {
            let components = self.sum()?;
            self.expect(b')')?;
            let primes = self.primes();
            if primes == 0 {
                return Err(self.error("bracketed label needs a prime decoration"));
            }
            Ok(CarterLabel {
                components,
                outer_primes: primes,
            })
        } else {
            Ok(CarterLabel {
                components: self.sum()?,
                outer_primes: 0,
            })
        }
    }

    fn sum(&mut self) -> Result<Vec<LabelComponent>> {
        let mut out = vec![self.term()?];
        while self.eat(b'+') {
            out.push(self.term()?);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<LabelComponent> {
        let mult_pos = self.pos;
        let multiplier = match self.number() {
            Some(0) => {
                self.pos = mult_pos;
                return Err(self.error("multiplier must be positive"));
            }
            Some(m) => m,
            None => 1,
        };
        let tilde = self.eat(b'~');
        let series = match self.peek() {
            Some(b'A') => {
                if tilde {
                    Series::ATilde
                } else {
                    Series::A
                }
            }
            Some(b'B') => Series::B,
            Some(b'C') => Series::C,
            Some(b'D') => Series::D,
            Some(b'E') => Series::E,
            Some(b'F') => Series::F,
            Some(b'G') => Series::G,
            _ => return Err(self.error("expected a series letter")),
        };
        if tilde && series != Series::ATilde {
            return Err(self.error("only A carries a tilde"));
        }
        self.pos += 1;
        let primes = self.primes();
        self.expect(b'_')?;
        let subscript = self
            .number()
            .ok_or_else(|| self.error("expected a subscript"))?;
        let qualifier = if self.bytes[self.pos..].starts_with(b"(a_") {
            self.pos += 3;
            let k = self
                .number()
                .ok_or_else(|| self.error("expected a qualifier index"))?;
            self.expect(b')')?;
            Some(k)
        } else {
            None
        };
        Ok(LabelComponent {
            multiplier,
            series,
            subscript,
            qualifier,
            primes,
        })
    }
}
