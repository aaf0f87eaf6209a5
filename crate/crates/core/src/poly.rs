//! Sparse polynomials over an exact coefficient field, generic in the
//! scalar via [`Coeff`]. The concrete instantiation used by the rest of
//! the crate is [`crate::Poly`] with arbitrary-precision rationals.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, NVARS};
use crate::scalar::Coeff;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Self::term(C::one(), m)
    }

    pub fn term(c: C, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn var(i: usize) -> Self {
        Self::from_monomial(Monomial::var(i))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    /// The graded-lex leading term, if any.
    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&C> {
        self.terms.get(m)
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.deg()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, c: C, m: Monomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing = existing.clone() + c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (*m, v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `images[i]` for `X{i}`.
    pub fn substitute(&self, images: &[Polynomial<C>; NVARS]) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut prod = Self::constant(c.clone());
            for i in 0..NVARS {
                let e = m.exp(i);
                if e > 0 {
                    prod = &prod * &images[i].pow(e);
                }
            }
            out = &out + &prod;
        }
        out
    }

    /// Divides every coefficient by the graded-lex leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some((_, lc)) => {
                let lc = lc.clone();
                Polynomial {
                    terms: self
                        .terms
                        .iter()
                        .map(|(m, v)| (*m, v.clone() / lc.clone()))
                        .collect(),
                }
            }
        }
    }

    /// Geometric partial sum `1 + g + ... + g^(x-1)`.
    pub fn geometric_sum(g: &Self, x: u32) -> Self {
        let mut acc = Self::zero();
        let mut p = Self::one();
        for _ in 0..x {
            acc = &acc + &p;
            p = &p * g;
        }
        acc
    }
}

impl<C: Coeff> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(c.clone(), *m);
        }
        out
    }
}

impl<C: Coeff> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(-c.clone(), *m);
        }
        out
    }
}

impl<C: Coeff> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl<C: Coeff> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(c1.clone() * c2.clone(), m1.mul(m2));
            }
        }
        out
    }
}

impl<C: Coeff> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Descending graded-lex, matching the canonical term order.
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Parses the same syntax `Display` emits, e.g. `X0^2*X1^2 - 1` or
/// `3/7*X1*X4^2 + X0`.
pub fn parse<C: Coeff>(input: &str) -> Result<Polynomial<C>> {
    let mut parser = Parser { chars: input.chars().collect(), pos: 0 };
    parser.parse_poly()
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&mut self) -> Option<char> {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn parse_poly<C: Coeff>(&mut self) -> Result<Polynomial<C>> {
        let mut out = Polynomial::zero();
        let mut sign = match self.peek() {
            Some('-') => {
                self.bump();
                true
            }
            Some('+') => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let term = self.parse_term::<C>()?;
            out = if sign { &out - &term } else { &out + &term };
            match self.peek() {
                None => return Ok(out),
                Some('+') => {
                    self.bump();
                    sign = false;
                }
                Some('-') => {
                    self.bump();
                    sign = true;
                }
                Some(c) => return Err(Error::Parse(format!("unexpected character {c:?}"))),
            }
        }
    }

    fn parse_term<C: Coeff>(&mut self) -> Result<Polynomial<C>> {
        let mut acc = Polynomial::<C>::one();
        loop {
            let factor = self.parse_factor::<C>()?;
            acc = &acc * &factor;
            if self.peek() == Some('*') {
                self.bump();
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_factor<C: Coeff>(&mut self) -> Result<Polynomial<C>> {
        match self.peek() {
            Some('X') | Some('x') => {
                self.bump();
                let idx = self.parse_uint()?;
                if idx as usize >= NVARS {
                    return Err(Error::Parse(format!("unknown variable X{idx}")));
                }
                let exp = if self.peek() == Some('^') {
                    self.bump();
                    self.parse_uint()?
                } else {
                    1
                };
                Ok(Polynomial::from_monomial(Monomial::var_pow(idx as usize, exp)))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.parse_uint()?;
                let num = C::from_u32(num).ok_or_else(|| Error::Parse("bad literal".into()))?;
                if self.peek() == Some('/') {
                    self.bump();
                    let den = self.parse_uint()?;
                    if den == 0 {
                        return Err(Error::Parse("zero denominator".into()));
                    }
                    let den =
                        C::from_u32(den).ok_or_else(|| Error::Parse("bad literal".into()))?;
                    Ok(Polynomial::constant(num / den))
                } else {
                    Ok(Polynomial::constant(num))
                }
            }
            other => Err(Error::Parse(format!(
                "expected a variable or number, got {other:?}"
            ))),
        }
    }

    fn parse_uint(&mut self) -> Result<u32> {
        let mut digits = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.bump();
            } else {
                break;
            }
        }
        digits
            .parse()
            .map_err(|_| Error::Parse("expected an integer".into()))
    }
}
