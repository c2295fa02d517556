use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::field::Field;
use super::monomial::{Monomial, MAX_VARS};
use super::order::MonomialOrder;
use crate::{Error, Result};

/// A sparse polynomial in the variables of slots `1..=nvars`, plus the
/// auxiliary variable `t` in slot 0.
///
/// Terms are kept strictly decreasing under the polynomial's order and never
/// carry a zero coefficient, so the first term is the leading term.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    nvars: usize,
    order: MonomialOrder,
    params: F::Params,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(nvars: usize, order: MonomialOrder, params: F::Params) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        Polynomial { nvars, order, params, terms: Vec::new() }
    }

    pub fn constant(c: F, nvars: usize, order: MonomialOrder) -> Self {
        Self::term(Monomial::ONE, c, nvars, order)
    }

    pub fn one(nvars: usize, order: MonomialOrder, params: F::Params) -> Self {
        Self::constant(F::one(params), nvars, order)
    }

    /// `c * m`; panics if `m` uses a slot beyond `nvars`.
    pub fn term(m: Monomial, c: F, nvars: usize, order: MonomialOrder) -> Self {
        let mut p = Self::zero(nvars, order, c.params());
        assert!(m.max_slot() <= nvars, "monomial {m:?} outside the ring");
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// The variable in `slot` (0 is `t`).
    pub fn var(slot: usize, nvars: usize, order: MonomialOrder, params: F::Params) -> Self {
        Self::term(Monomial::var(slot), F::one(params), nvars, order)
    }

    /// Collects terms in any order, merging repeated monomials.
    pub fn from_terms<I>(nvars: usize, order: MonomialOrder, params: F::Params, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, F)>,
    {
        if nvars > MAX_VARS {
            return Err(Error::InvalidParameter(format!("at most {MAX_VARS} variables are supported")));
        }
        let mut raw: Vec<(Monomial, F)> = Vec::new();
        for (m, c) in terms {
            if m.max_slot() > nvars {
                return Err(Error::ArityMismatch { left: m.max_slot(), right: nvars });
            }
            if c.params() != params {
                return Err(Error::InvalidParameter("coefficients from different fields".into()));
            }
            raw.push((m, c));
        }
        raw.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => out.push((m, c)),
            }
            if out.last().is_some_and(|(_, c)| c.is_zero()) {
                out.pop();
            }
        }
        Ok(Polynomial { nvars, order, params, terms: out })
    }

    /// Trusted constructor: `terms` must already be strictly decreasing with
    /// nonzero coefficients.
    pub(crate) fn from_sorted(
        nvars: usize,
        order: MonomialOrder,
        params: F::Params,
        terms: Vec<(Monomial, F)>,
    ) -> Self {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { nvars, order, params, terms }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    #[inline]
    pub fn params(&self) -> F::Params {
        self.params
    }

    /// Terms in decreasing order.
    #[inline]
    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    /// Number of terms; [`Polynomial::is_zero`] is the emptiness test.
    #[allow(clippy::len_without_is_empty)]
    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    #[inline]
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    #[inline]
    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Coefficient of `m` (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms
            .binary_search_by(|(tm, _)| self.order.cmp(m, tm))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| F::zero(self.params))
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// True if all terms have the same total degree. The zero polynomial is
    /// homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(o, _)| o.degree() == m.degree()),
        }
    }

    /// True if the auxiliary variable `t` occurs.
    pub fn contains_t(&self) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(0) > 0)
    }

    /// Union of the support masks of all terms.
    pub fn support_mask(&self) -> u32 {
        self.terms.iter().fold(0, |acc, (m, _)| acc | m.support_mask())
    }

    /// The same polynomial with its terms sorted for `order`.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        let mut p = self.clone();
        if order != self.order {
            p.order = order;
            p.terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        }
        p
    }

    /// The same polynomial viewed in a ring with more variables.
    pub fn with_nvars(&self, nvars: usize) -> Result<Self> {
        if nvars > MAX_VARS || self.terms.iter().any(|(m, _)| m.max_slot() > nvars) {
            return Err(Error::ArityMismatch { left: self.nvars, right: nvars });
        }
        let mut p = self.clone();
        p.nvars = nvars;
        Ok(p)
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (*m, c.neg())).collect();
        Polynomial { terms, ..self.shell() }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return self.shell();
        }
        let terms = self.terms.iter().map(|(m, d)| (*m, d.mul(c))).collect();
        Polynomial { terms, ..self.shell() }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return self.shell();
        }
        let terms = self.terms.iter().map(|(tm, d)| (tm.mul(m), d.mul(c))).collect();
        Polynomial { terms, ..self.shell() }
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => {
                let inv = lc.inv().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    pub(crate) fn make_monic(&mut self) {
        if let Some(lc) = self.leading_coeff() {
            if !lc.is_one() {
                let inv = lc.inv().expect("leading coefficient is nonzero");
                for (_, c) in self.terms.iter_mut() {
                    *c = c.mul(&inv);
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.add_scaled(&other.with_order(self.order), &F::one(self.params), &Monomial::ONE))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let minus_one = F::one(self.params).neg();
        Ok(self.add_scaled(&other.with_order(self.order), &minus_one, &Monomial::ONE))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let other = other.with_order(self.order);
        let (small, big) = if self.len() <= other.len() { (self, &other) } else { (&other, self) };
        let mut acc = self.shell();
        for (m, c) in small.terms.iter() {
            acc = acc.add_scaled(big, c, m);
        }
        Ok(acc)
    }

    /// `self + c * m * other`, by one merge. Both must share the order.
    pub(crate) fn add_scaled(&self, other: &Self, c: &F, m: &Monomial) -> Self {
        debug_assert_eq!(self.order, other.order);
        let order = self.order;
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let mut pending: Option<Monomial> = None;
        while i < self.terms.len() || j < other.terms.len() {
            let om = if j < other.terms.len() {
                Some(*pending.get_or_insert_with(|| other.terms[j].0.mul(m)))
            } else {
                None
            };
            let step = match (self.terms.get(i), om) {
                (Some((a, _)), Some(b)) => order.cmp(a, &b),
                (Some(_), None) => Ordering::Greater,
                (None, _) => Ordering::Less,
            };
            match step {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let v = other.terms[j].1.mul(c);
                    out.push((om.unwrap(), v));
                    j += 1;
                    pending = None;
                }
                Ordering::Equal => {
                    let v = self.terms[i].1.add(&other.terms[j].1.mul(c));
                    if !v.is_zero() {
                        out.push((self.terms[i].0, v));
                    }
                    i += 1;
                    j += 1;
                    pending = None;
                }
            }
        }
        Polynomial { terms: out, ..self.shell() }
    }

    /// Exact quotient `self / d`. Fails if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        self.check_compatible(d)?;
        let d = d.with_order(self.order);
        let (lm, lc) = match d.terms.first() {
            Some((m, c)) => (*m, c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        let lc_inv = lc.inv().expect("leading coefficient is nonzero");
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rest.terms.first().cloned() {
            let q = m.checked_div(&lm).ok_or_else(|| Error::Precondition("polynomial division is not exact".into()))?;
            let qc = c.mul(&lc_inv);
            rest = rest.add_scaled(&d, &qc.neg(), &q);
            quotient.push((q, qc));
        }
        Ok(Polynomial { terms: quotient, ..self.shell() })
    }

    /// Drops the auxiliary variable: `None` if `t` occurs.
    pub fn without_t(&self) -> Option<Self> {
        (!self.contains_t()).then(|| self.clone())
    }

    /// A zero polynomial in the same ring.
    pub(crate) fn shell(&self) -> Self {
        Polynomial { nvars: self.nvars, order: self.order, params: self.params, terms: Vec::new() }
    }

    pub(crate) fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch { left: self.nvars, right: other.nvars });
        }
        if self.params != other.params {
            return Err(Error::InvalidParameter("polynomials over different fields".into()));
        }
        Ok(())
    }

    /// Formats with `x_i` for slot `i <= n`, `y_i` for slot `n + i` and `t`
    /// for slot 0, as in `-2*x1*y3^2 + x3`.
    pub fn display_xy(&self, n: usize) -> impl fmt::Display + '_ {
        DisplayXy { p: self, n }
    }
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        if self.nvars != other.nvars || self.params != other.params || self.len() != other.len() {
            return false;
        }
        if self.order == other.order {
            self.terms == other.terms
        } else {
            self.terms == other.with_order(self.order).terms
        }
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c:?}*{m:?}")?;
        }
        Ok(())
    }
}

struct DisplayXy<'a, F: Field> {
    p: &'a Polynomial<F>,
    n: usize,
}

impl<F: Field> fmt::Display for DisplayXy<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.p.terms.iter().enumerate() {
            let negative = c.to_string_is_negative();
            let abs = if negative { c.neg() } else { c.clone() };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut first = true;
            if !abs.is_one() || m.is_one() {
                write!(f, "{abs}")?;
                first = false;
            }
            for s in 0..=self.p.nvars {
                let e = m.exp(s);
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                match s {
                    0 => f.write_str("t")?,
                    s if s <= self.n => write!(f, "x{s}")?,
                    s => write!(f, "y{}", s - self.n)?,
                }
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

// Coefficients print their own sign; this lets the term joiner use " - ".
trait DisplaySign {
    fn to_string_is_negative(&self) -> bool;
}

impl<F: Field> DisplaySign for F {
    fn to_string_is_negative(&self) -> bool {
        use core::fmt::Write;
        struct First(Option<char>);
        impl Write for First {
            fn write_str(&mut self, s: &str) -> fmt::Result {
                if self.0.is_none() {
                    self.0 = s.chars().next();
                }
                Ok(())
            }
        }
        let mut w = First(None);
        let _ = write!(w, "{self}");
        w.0 == Some('-')
    }
}
