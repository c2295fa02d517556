use core::cmp::Ordering;
use core::fmt;

use super::monomial::{Monomial, MAX_VARS};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    DegRevLex,
}

/// A monomial order on the ring variables, extended by the elimination
/// variable `t` in slot 0.
///
/// `t` is always compared first: under `Lex` it is simply the greatest
/// variable, under `DegRevLex` the result is the block order
/// `t > (degrevlex on the rest)`. Both are elimination orders for `t` and
/// coincide with the plain order on `t`-free monomials.
///
/// Variable precedence defaults to slot order, i.e.
/// `x_1 > ... > x_n > y_1 > ... > y_n` for graph ideals.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    /// `rank[p]` is the slot at precedence position `p` (position 0 is `t`).
    rank: [u8; MAX_VARS + 1],
    identity: bool,
}

impl MonomialOrder {
    pub const LEX: MonomialOrder = MonomialOrder::identity(OrderKind::Lex);
    pub const DEGREVLEX: MonomialOrder = MonomialOrder::identity(OrderKind::DegRevLex);

    const fn identity(kind: OrderKind) -> Self {
        let mut rank = [0u8; MAX_VARS + 1];
        let mut i = 0;
        while i <= MAX_VARS {
            rank[i] = i as u8;
            i += 1;
        }
        MonomialOrder { kind, rank, identity: true }
    }

    /// Order with variable precedence `precedence[0] > precedence[1] > ...`,
    /// given as slots `1..=m`. Slots not listed keep their relative order
    /// after the listed ones.
    pub fn with_precedence(kind: OrderKind, precedence: &[usize]) -> Result<Self> {
        let mut used = [false; MAX_VARS + 1];
        let mut rank = [0u8; MAX_VARS + 1];
        let mut p = 1;
        for &s in precedence {
            if s == 0 || s > MAX_VARS || used[s] {
                return Err(Error::InvalidParameter(alloc::format!(
                    "invalid or repeated slot {s} in variable precedence"
                )));
            }
            used[s] = true;
            rank[p] = s as u8;
            p += 1;
        }
        for (s, _) in used.iter().enumerate().skip(1).filter(|(_, u)| !**u) {
            rank[p] = s as u8;
            p += 1;
        }
        let identity = (0..=MAX_VARS).all(|i| rank[i] as usize == i);
        Ok(MonomialOrder { kind, rank, identity })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            OrderKind::Lex => "lex",
            OrderKind::DegRevLex => "degrevlex",
        }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match (self.kind, self.identity) {
            (OrderKind::Lex, true) => ea.cmp(eb),
            (OrderKind::Lex, false) => {
                for &s in self.rank.iter() {
                    match ea[s as usize].cmp(&eb[s as usize]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            (OrderKind::DegRevLex, _) => {
                ea[0].cmp(&eb[0]).then_with(|| a.xdegree().cmp(&b.xdegree())).then_with(|| {
                    for &s in self.rank[1..].iter().rev() {
                        match ea[s as usize].cmp(&eb[s as usize]) {
                            Ordering::Equal => continue,
                            o => return o.reverse(),
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }
}

impl Default for MonomialOrder {
    /// Lex with `x_1 > ... > x_n > y_1 > ... > y_n`.
    fn default() -> Self {
        MonomialOrder::LEX
    }
}

impl fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.identity {
            f.write_str(self.name())
        } else {
            write!(f, "{}{:?}", self.name(), &self.rank[1..])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Ordering::*;

    fn m(pairs: &[(usize, u8)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn lex_and_degrevlex() {
        let lex = MonomialOrder::LEX;
        let drl = MonomialOrder::DEGREVLEX;
        // x1 > x2^5 in lex, not in degrevlex
        assert_eq!(lex.cmp(&m(&[(1, 1)]), &m(&[(2, 5)])), Greater);
        assert_eq!(drl.cmp(&m(&[(1, 1)]), &m(&[(2, 5)])), Less);
        // x1 x3 < x2^2 in degrevlex
        assert_eq!(drl.cmp(&m(&[(1, 1), (3, 1)]), &m(&[(2, 2)])), Less);
        assert_eq!(lex.cmp(&m(&[(1, 1), (3, 1)]), &m(&[(2, 2)])), Greater);
        assert_eq!(lex.cmp(&m(&[(2, 1)]), &m(&[(2, 1)])), Equal);
    }

    #[test]
    fn t_is_eliminated_first() {
        for o in [MonomialOrder::LEX, MonomialOrder::DEGREVLEX] {
            assert_eq!(o.cmp(&m(&[(0, 1)]), &m(&[(1, 9)])), Greater);
            assert!(o.cmp(&m(&[(0, 1), (5, 1)]), &m(&[(0, 1), (4, 1)])).is_ne());
        }
    }

    #[test]
    fn precedence_permutation() {
        let o = MonomialOrder::with_precedence(OrderKind::Lex, &[3, 1]).unwrap();
        assert_eq!(o.cmp(&m(&[(3, 1)]), &m(&[(1, 4)])), Greater);
        assert_eq!(o.cmp(&m(&[(1, 1)]), &m(&[(2, 4)])), Greater);
        assert!(MonomialOrder::with_precedence(OrderKind::Lex, &[1, 1]).is_err());
        let id = MonomialOrder::with_precedence(OrderKind::Lex, &[1, 2]).unwrap();
        assert_eq!(id, MonomialOrder::LEX);
    }

    #[test]
    fn multiplicative() {
        let o = MonomialOrder::DEGREVLEX;
        let (a, b, c) = (m(&[(1, 1), (4, 2)]), m(&[(2, 3)]), m(&[(3, 1), (4, 1)]));
        assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&c), &b.mul(&c)));
    }
}
