use core::fmt;
use core::hash::{Hash, Hasher};

/// Number of ordinary variable slots (`1..=MAX_VARS`); slot 0 is reserved
/// for the auxiliary elimination variable `t`.
pub const MAX_VARS: usize = 31;

const SLOTS: usize = MAX_VARS + 1;

/// A power product. Slot 0 holds the exponent of the elimination variable
/// `t`; slots `1..=m` hold the ring variables. For a graph on `n` vertices
/// `x_i` is slot `i` and `y_i` is slot `n + i`.
///
/// Exponents are stored as `u8`; products overflowing 255 panic.
#[derive(Clone, Copy)]
pub struct Monomial {
    e: [u8; SLOTS],
    deg: u16,
    /// bit `s` set iff slot `s` has a positive exponent
    mask: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { e: [0; SLOTS], deg: 0, mask: 0 };

    pub fn var(slot: usize) -> Self {
        Self::var_pow(slot, 1)
    }

    pub fn var_pow(slot: usize, exp: u8) -> Self {
        assert!(slot < SLOTS, "variable slot {slot} out of range");
        let mut m = Monomial::ONE;
        m.e[slot] = exp;
        m.deg = exp as u16;
        m.mask = if exp > 0 { 1 << slot } else { 0 };
        m
    }

    /// Builds a monomial from `(slot, exponent)` pairs; repeated slots add up.
    pub fn from_pairs<I: IntoIterator<Item = (usize, u8)>>(pairs: I) -> Self {
        pairs.into_iter().fold(Monomial::ONE, |acc, (s, e)| acc.mul(&Monomial::var_pow(s, e)))
    }

    #[inline]
    pub fn exp(&self, slot: usize) -> u8 {
        self.e[slot]
    }

    #[inline]
    pub fn exponents(&self) -> &[u8; SLOTS] {
        &self.e
    }

    /// Total degree including `t`.
    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    /// Degree in the ring variables, ignoring `t`.
    #[inline]
    pub fn xdegree(&self) -> u32 {
        self.deg as u32 - self.e[0] as u32
    }

    #[inline]
    pub fn support_mask(&self) -> u32 {
        self.mask
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.mask == 0
    }

    /// True if every exponent is at most one.
    pub fn is_squarefree(&self) -> bool {
        self.deg as u32 == self.mask.count_ones()
    }

    /// Largest slot with a positive exponent (0 for the unit monomial).
    pub fn max_slot(&self) -> usize {
        if self.mask == 0 {
            0
        } else {
            31 - self.mask.leading_zeros() as usize
        }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.mask & !other.mask != 0 || self.deg > other.deg {
            return false;
        }
        self.e.iter().zip(other.e.iter()).all(|(a, b)| a <= b)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = [0u8; SLOTS];
        for (k, slot) in e.iter_mut().enumerate() {
            *slot = self.e[k].checked_add(other.e[k]).expect("monomial exponent overflow");
        }
        Monomial { e, deg: self.deg + other.deg, mask: self.mask | other.mask }
    }

    /// `self / other`; `other` must divide `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let mut e = [0u8; SLOTS];
        let mut mask = 0u32;
        for (k, slot) in e.iter_mut().enumerate() {
            *slot = self.e[k] - other.e[k];
            if *slot != 0 {
                mask |= 1 << k;
            }
        }
        Monomial { e, deg: self.deg - other.deg, mask }
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.div(other))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut e = [0u8; SLOTS];
        let mut deg = 0u16;
        for (k, slot) in e.iter_mut().enumerate() {
            *slot = self.e[k].max(other.e[k]);
            deg += *slot as u16;
        }
        Monomial { e, deg, mask: self.mask | other.mask }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut e = [0u8; SLOTS];
        let mut deg = 0u16;
        for (k, slot) in e.iter_mut().enumerate() {
            *slot = self.e[k].min(other.e[k]);
            deg += *slot as u16;
        }
        Monomial { e, deg, mask: self.mask & other.mask }
    }

    #[inline]
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.mask & other.mask == 0
    }
}

impl PartialEq for Monomial {
    #[inline]
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask && self.e == other.e
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.e.hash(state);
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for s in 0..SLOTS {
            if self.e[s] > 0 {
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                if s == 0 {
                    f.write_str("t")?;
                } else {
                    write!(f, "v{s}")?;
                }
                if self.e[s] > 1 {
                    write!(f, "^{}", self.e[s])?;
                }
            }
        }
        Ok(())
    }
}
