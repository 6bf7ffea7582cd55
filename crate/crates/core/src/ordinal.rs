//! Ordinals below ε₀ in Cantor normal form.
//!
//! `ω^e₁·c₁ + ω^e₂·c₂ + … + ω^eₖ·cₖ` with `e₁ > e₂ > … > eₖ` and every `cᵢ ≥ 1`.
//! Exponents are themselves ordinals in Cantor normal form.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Ordinal {
    terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Term {
    exponent: Ordinal,
    coefficient: u64,
}

/// Cardinality of a representable ordinal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cardinality {
    Finite(u64),
    CountablyInfinite,
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinality::Finite(n) => write!(f, "finite {n}"),
            Cardinality::CountablyInfinite => f.write_str("countably infinite"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrdinalKind {
    Zero,
    Successor,
    Limit,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Ordinal::nat(1)
    }

    pub fn nat(n: u64) -> Self {
        if n == 0 {
            Ordinal::zero()
        } else {
            Ordinal { terms: vec![Term { exponent: Ordinal::zero(), coefficient: n }] }
        }
    }

    pub fn omega() -> Self {
        Ordinal::omega_pow(Ordinal::one())
    }

    /// `ω^e`.
    pub fn omega_pow(exponent: Ordinal) -> Self {
        Ordinal { terms: vec![Term { exponent, coefficient: 1 }] }
    }

    /// Builds `Σ ω^eᵢ·cᵢ` from `(eᵢ, cᵢ)` pairs, rejecting non-canonical input.
    pub fn from_terms(terms: Vec<(Ordinal, u64)>) -> Result<Self> {
        for (i, (e, c)) in terms.iter().enumerate() {
            if *c == 0 {
                return Err(Error::Precondition("ordinal coefficient must be positive".into()));
            }
            if i > 0 && terms[i - 1].0 <= *e {
                return Err(Error::Precondition("ordinal exponents must strictly decrease".into()));
            }
        }
        Ok(Ordinal { terms: terms.into_iter().map(|(exponent, coefficient)| Term { exponent, coefficient }).collect() })
    }

    /// `(exponent, coefficient)` pairs, leading term first.
    pub fn terms(&self) -> impl Iterator<Item = (&Ordinal, u64)> {
        self.terms.iter().map(|t| (&t.exponent, t.coefficient))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.as_nat().is_some()
    }

    pub fn as_nat(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.exponent.is_zero() => Some(t.coefficient),
            _ => None,
        }
    }

    pub fn successor(&self) -> Ordinal {
        self.clone() + Ordinal::one()
    }

    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|t| t.exponent.is_zero())
    }

    pub fn is_limit(&self) -> bool {
        self.terms.last().is_some_and(|t| !t.exponent.is_zero())
    }

    pub fn kind(&self) -> OrdinalKind {
        if self.is_zero() {
            OrdinalKind::Zero
        } else if self.is_successor() {
            OrdinalKind::Successor
        } else {
            OrdinalKind::Limit
        }
    }

    /// The predecessor of a successor ordinal.
    pub fn predecessor(&self) -> Option<Ordinal> {
        if !self.is_successor() {
            return None;
        }
        let mut terms = self.terms.clone();
        let last = terms.last_mut().expect("successor is nonzero");
        if last.coefficient == 1 {
            terms.pop();
        } else {
            last.coefficient -= 1;
        }
        Some(Ordinal { terms })
    }

    /// Splits `α = λ + k` with `λ` zero or a limit and `k` finite.
    pub fn split_finite_tail(&self) -> (Ordinal, u64) {
        if self.is_successor() {
            let mut terms = self.terms.clone();
            let k = terms.pop().expect("successor is nonzero").coefficient;
            (Ordinal { terms }, k)
        } else {
            (self.clone(), 0)
        }
    }

    pub fn cardinality(&self) -> Cardinality {
        match self.as_nat() {
            Some(n) => Cardinality::Finite(n),
            None => Cardinality::CountablyInfinite,
        }
    }

    /// Nesting depth of exponents: 0 for naturals, 1 for `ω^n`-style terms, and so on.
    pub fn depth(&self) -> usize {
        self.terms.iter().map(|t| if t.exponent.is_zero() { 0 } else { 1 + t.exponent.depth() }).max().unwrap_or(0)
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let ord = a.exponent.cmp(&b.exponent).then(a.coefficient.cmp(&b.coefficient));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Ordinal {
    type Output = Ordinal;

    /// Ordinal addition: terms of `self` below the leading exponent of `rhs` are absorbed.
    ///
    /// Panics if a coefficient overflows `u64`.
    fn add(self, rhs: Ordinal) -> Ordinal {
        let Some(lead) = rhs.terms.first() else {
            return self;
        };
        let mut terms: Vec<Term> = self.terms.into_iter().take_while(|t| t.exponent >= lead.exponent).collect();
        let merge = terms.last().is_some_and(|last| last.exponent == lead.exponent);
        let mut rest = rhs.terms.into_iter();
        if let Some(last) = terms.last_mut() {
            if merge {
                let first = rest.next().expect("rhs is nonzero");
                last.coefficient =
                    last.coefficient.checked_add(first.coefficient).expect("ordinal coefficient overflow");
            }
        }
        terms.extend(rest);
        Ordinal { terms }
    }
}

impl Add for &Ordinal {
    type Output = Ordinal;

    fn add(self, rhs: &Ordinal) -> Ordinal {
        self.clone() + rhs.clone()
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::nat(n)
    }
}

impl fmt::Display for Ordinal {
    /// `0`, `5`, `w`, `w*2+3`, `w^2*3+w+5`, `w^(w+1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            if t.exponent.is_zero() {
                write!(f, "{}", t.coefficient)?;
                continue;
            }
            f.write_str("w")?;
            if t.exponent != Ordinal::one() {
                match t.exponent.as_nat() {
                    Some(n) => write!(f, "^{n}")?,
                    None if t.exponent.terms.len() == 1 && t.exponent.terms[0].coefficient == 1 => {
                        write!(f, "^{}", t.exponent)?
                    }
                    None => write!(f, "^({})", t.exponent)?,
                }
            }
            if t.coefficient != 1 {
                write!(f, "*{}", t.coefficient)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Ordinal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s.trim().as_bytes(), pos: 0 };
        let o = p.ordinal()?;
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(o)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse { line: 1, message: format!("ordinal syntax: {what} at column {}", self.pos + 1) }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits = &self.src[start..self.pos];
        if digits.is_empty() {
            return Err(self.error("expected a number"));
        }
        if digits.len() > 1 && digits[0] == b'0' {
            return Err(self.error("leading zero"));
        }
        std::str::from_utf8(digits).expect("ascii digits").parse().map_err(|_| self.error("number too large"))
    }

    fn ordinal(&mut self) -> Result<Ordinal> {
        let mut terms = Vec::new();
        loop {
            terms.push(self.term()?);
            if !self.eat(b'+') {
                break;
            }
        }
        if terms.len() == 1 && terms[0].1 == 0 && terms[0].0.is_zero() {
            return Ok(Ordinal::zero());
        }
        if terms.iter().any(|(_, c)| *c == 0) {
            return Err(self.error("zero coefficient in a sum"));
        }
        for w in terms.windows(2) {
            if w[0].0 <= w[1].0 {
                return Err(self.error("exponents not strictly decreasing"));
            }
        }
        Ok(Ordinal { terms: terms.into_iter().map(|(exponent, coefficient)| Term { exponent, coefficient }).collect() })
    }

    fn term(&mut self) -> Result<(Ordinal, u64)> {
        if !self.eat(b'w') {
            return Ok((Ordinal::zero(), self.number()?));
        }
        let exponent = if self.eat(b'^') { self.exponent()? } else { Ordinal::one() };
        if exponent.is_zero() {
            return Err(self.error("w^0 is not canonical; write a natural number"));
        }
        let coefficient = if self.eat(b'*') { self.number()? } else { 1 };
        Ok((exponent, coefficient))
    }

    fn exponent(&mut self) -> Result<Ordinal> {
        if self.eat(b'(') {
            let e = self.ordinal()?;
            if !self.eat(b')') {
                return Err(self.error("expected ')'"));
            }
            Ok(e)
        } else if self.eat(b'w') {
            // a bare `w^w^...` tower binds to the right
            let e = if self.eat(b'^') { self.exponent()? } else { Ordinal::one() };
            if e.is_zero() {
                return Err(self.error("w^0 is not canonical; write a natural number"));
            }
            Ok(Ordinal::omega_pow(e))
        } else {
            Ok(Ordinal::nat(self.number()?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn comparison_examples() {
        assert_eq!(o("0").cmp(&o("0")), Ordering::Equal);
        assert!(o("w") > o("5"));
        assert!(o("w*2+1") > o("w*2"));
        assert!(o("w^2") > o("w*100+7"));
        assert!(o("w^w") > o("w^5*3"));
    }

    #[test]
    fn addition_examples() {
        let a = o("w^2*3+w+5");
        assert_eq!(a.clone() + Ordinal::zero(), a);
        assert_eq!(o("1") + o("w"), o("w"));
        assert_eq!(o("w+3") + o("w*2"), o("w*3"));
        assert_eq!(o("w") + o("1"), o("w+1"));
        assert_eq!(o("w^2+w*4") + o("w*3+2"), o("w^2+w*7+2"));
        assert_eq!(o("5") + o("7"), o("12"));
    }

    #[test]
    fn classification() {
        assert!(o("w").is_limit());
        assert!(o("w+1").is_successor());
        assert_eq!(o("0").kind(), OrdinalKind::Zero);
        assert!(!o("0").is_limit() && !o("0").is_successor());
        assert_eq!(o("w*2").successor(), o("w*2+1"));
        assert_eq!(o("w*2+1").predecessor(), Some(o("w*2")));
        assert_eq!(o("w+7").split_finite_tail(), (o("w"), 7));
    }

    #[test]
    fn cardinalities() {
        assert_eq!(o("7").cardinality(), Cardinality::Finite(7));
        assert_eq!(o("0").cardinality(), Cardinality::Finite(0));
        assert_eq!(o("w").cardinality(), Cardinality::CountablyInfinite);
        assert_eq!(o("w*2+3").cardinality(), Cardinality::CountablyInfinite);
    }

    #[test]
    fn syntax() {
        assert_eq!(o("w^2*3+w*1+5").to_string(), "w^2*3+w+5");
        assert_eq!(o("w^(w+1)*2").to_string(), "w^(w+1)*2");
        assert_eq!(o("w^w").to_string(), "w^w");
        assert_eq!(o("w^w^2").to_string(), "w^w^2");
        assert_eq!(o("w^(w*2)").to_string(), "w^(w*2)");
        assert_eq!(o("w^w^2"), Ordinal::omega_pow(Ordinal::omega_pow(Ordinal::nat(2))));
        for bad in ["", "w+w^2", "3+w", "w*0", "w^0", "007", "w+", "x", "5+3", "w^(2", "0+w"] {
            assert!(bad.parse::<Ordinal>().is_err(), "{bad:?} accepted");
        }
    }
}
