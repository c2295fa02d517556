//! Polynomial text format: sums of terms such as `3/2*x1*y3^2 - x2 + 7`,
//! with `x_i` in slot `i`, `y_i` in slot `n + i` and `t` in slot 0.

use binedge_core::poly::{Field, Fp, Monomial, MonomialOrder, Polynomial, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::CliError;

/// Fields whose elements can be read from a decimal fraction.
pub trait Coefficient: Field {
    fn from_ratio(num: &BigInt, den: &BigInt, params: Self::Params) -> Result<Self, CliError>;
}

impl Coefficient for Rational {
    fn from_ratio(num: &BigInt, den: &BigInt, _: ()) -> Result<Self, CliError> {
        if den.is_zero() {
            return Err(CliError::Parse("zero denominator".into()));
        }
        Ok(Rational::from_big(num_rational::BigRational::new(num.clone(), den.clone())))
    }
}

impl Coefficient for Fp {
    fn from_ratio(num: &BigInt, den: &BigInt, p: u32) -> Result<Self, CliError> {
        let reduce = |v: &BigInt| {
            let r = v % BigInt::from(p);
            let r = if r.is_negative() { r + BigInt::from(p) } else { r };
            Fp::new(r.to_i64().expect("residue below the modulus"), p)
        };
        reduce(num).div(&reduce(den)).map_err(|_| CliError::Parse(format!("denominator vanishes modulo {p}")))
    }
}

/// Parses `s` as a polynomial over `n` vertices (`2n` ring variables).
pub fn parse_polynomial<F: Coefficient>(
    s: &str,
    n: usize,
    order: MonomialOrder,
    params: F::Params,
) -> Result<Polynomial<F>, CliError> {
    let mut p = Parser { s: s.as_bytes(), pos: 0, n };
    let mut terms = Vec::new();
    p.skip_ws();
    if p.peek().is_none() {
        return Err(CliError::Parse("empty polynomial".into()));
    }
    let mut negative = p.eat(b'-');
    if !negative {
        p.eat(b'+');
    }
    loop {
        let (num, den, m) = p.term()?;
        let num = if negative { -num } else { num };
        terms.push((m, F::from_ratio(&num, &den, params)?));
        p.skip_ws();
        match p.peek() {
            None => break,
            Some(b'+') => negative = false,
            Some(b'-') => negative = true,
            Some(c) => return Err(p.error(&format!("unexpected {:?}", c as char))),
        }
        p.pos += 1;
    }
    Ok(Polynomial::from_terms(2 * n, order, params, terms)?)
}

/// Formats with the same conventions [`parse_polynomial`] reads.
pub fn format_polynomial<F: Field>(f: &Polynomial<F>, n: usize) -> String {
    f.display_xy(n).to_string()
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    n: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, what: &str) -> CliError {
        CliError::Parse(format!("{what} at offset {} in {:?}", self.pos, String::from_utf8_lossy(self.s)))
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    /// A product of an optional coefficient and variable powers.
    fn term(&mut self) -> Result<(BigInt, BigInt, Monomial), CliError> {
        let (mut num, mut den) = (BigInt::from(1), BigInt::from(1));
        let mut m = Monomial::ONE;
        let mut factors = 0;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    num *= self.digits().unwrap().parse::<BigInt>().unwrap();
                    if self.eat(b'/') {
                        self.skip_ws();
                        let d = self.digits().ok_or_else(|| self.error("expected a denominator"))?;
                        den *= d.parse::<BigInt>().unwrap();
                    }
                }
                Some(b'x' | b'y' | b't') => {
                    let slot = self.variable()?;
                    let e = if self.eat(b'^') {
                        self.skip_ws();
                        let d = self.digits().ok_or_else(|| self.error("expected an exponent"))?;
                        d.parse::<u8>().map_err(|_| self.error("exponent too large"))?
                    } else {
                        1
                    };
                    if e > 0 {
                        let combined = m.exp(slot) as u16 + e as u16;
                        if combined > u8::MAX as u16 {
                            return Err(self.error("exponent too large"));
                        }
                        m = m.mul(&Monomial::var_pow(slot, e));
                    }
                }
                _ => return Err(self.error("expected a coefficient or variable")),
            }
            factors += 1;
            if !self.eat(b'*') {
                break;
            }
        }
        debug_assert!(factors > 0);
        Ok((num, den, m))
    }

    fn variable(&mut self) -> Result<usize, CliError> {
        let kind = self.s[self.pos];
        self.pos += 1;
        if kind == b't' {
            return Ok(0);
        }
        let i: usize =
            self.digits().and_then(|d| d.parse().ok()).ok_or_else(|| self.error("expected a variable index"))?;
        if i == 0 || i > self.n {
            return Err(self.error(&format!("variable index {i} outside 1..={}", self.n)));
        }
        Ok(if kind == b'x' { i } else { self.n + i })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const LEX: MonomialOrder = MonomialOrder::LEX;

    #[test]
    fn parses_and_formats() {
        let f = parse_polynomial::<Rational>("x1*y2 - x2*y1", 2, LEX, ()).unwrap();
        assert_eq!(format_polynomial(&f, 2), "x1*y2 - x2*y1");
        let g = parse_polynomial::<Rational>(" -3/6 * x1^2*y1 + 2 + y1*x1^2 ", 1, LEX, ()).unwrap();
        assert_eq!(format_polynomial(&g, 1), "1/2*x1^2*y1 + 2");
        assert!(parse_polynomial::<Rational>("0", 3, LEX, ()).unwrap().is_zero());
        assert_eq!(format_polynomial(&parse_polynomial::<Rational>("x1 - x1", 1, LEX, ()).unwrap(), 1), "0");
    }

    #[test]
    fn prime_field_coefficients() {
        let f = parse_polynomial::<Fp>("1/2*x1 - 3", 1, LEX, 7).unwrap();
        assert_eq!(format_polynomial(&f, 1), "4*x1 + 4");
        assert!(parse_polynomial::<Fp>("1/7*x1", 1, LEX, 7).is_err());
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["", "x0", "x3", "x1 +", "2*", "x1^", "x1^300", "x1 y1", "1/0", "z1", "x1**y1"] {
            assert!(parse_polynomial::<Rational>(bad, 2, LEX, ()).is_err(), "{bad:?}");
        }
    }
}
