//! Nonnegative dyadic rationals `mant / 2^exp` with exact comparison.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mant: u128,
    exp: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { mant: 0, exp: 0 };

    /// `mant / 2^exp`, normalized.
    pub fn new(mant: u128, exp: u32) -> Self {
        Self { mant, exp }.normalized()
    }

    pub fn from_int(v: u128) -> Self {
        Self { mant: v, exp: 0 }
    }

    pub fn mantissa(&self) -> u128 {
        self.mant
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant == 0
    }

    fn normalized(mut self) -> Self {
        if self.mant == 0 {
            return Self::ZERO;
        }
        let tz = self.mant.trailing_zeros().min(self.exp);
        self.mant >>= tz;
        self.exp -= tz;
        self
    }

    /// Divides by `2^shift`.
    pub fn halve(self, shift: u32) -> Self {
        if self.mant == 0 {
            return self;
        }
        Self {
            mant: self.mant,
            exp: self.exp + shift,
        }
    }

    /// Sum; the flag is false when low-order bits had to be dropped.
    pub fn checked_add(self, other: Self) -> (Self, bool) {
        if self.mant == 0 {
            return (other, true);
        }
        if other.mant == 0 {
            return (self, true);
        }
        let (hi, lo) = if self.exp >= other.exp {
            (self, other)
        } else {
            (other, self)
        };
        let shift = hi.exp - lo.exp;
        let lo_bits = 128 - lo.mant.leading_zeros();
        if lo_bits + shift < 128 {
            let aligned = lo.mant << shift;
            if let Some(sum) = hi.mant.checked_add(aligned) {
                return (
                    Self {
                        mant: sum,
                        exp: hi.exp,
                    }
                    .normalized(),
                    true,
                );
            }
        }
        // Fall back to a coarser common exponent so both terms fit below 2^127.
        let hi_bits = 128 - hi.mant.leading_zeros();
        let drop = (lo_bits + shift)
            .saturating_sub(126)
            .max(hi_bits.saturating_sub(126))
            .min(hi.exp);
        let a = hi.mant >> drop;
        let b = if drop <= shift {
            lo.mant << (shift - drop)
        } else {
            lo.mant >> (drop - shift).min(127)
        };
        let exact = a << drop == hi.mant && (drop <= shift || b << (drop - shift) == lo.mant);
        match a.checked_add(b) {
            Some(sum) => (
                Self {
                    mant: sum,
                    exp: hi.exp - drop,
                }
                .normalized(),
                exact,
            ),
            None => (
                Self {
                    mant: u128::MAX,
                    exp: hi.exp - drop,
                },
                false,
            ),
        }
    }

    /// Product with a small integer; the flag is false on overflow (saturated).
    pub fn checked_mul_int(self, w: u64) -> (Self, bool) {
        match self.mant.checked_mul(w as u128) {
            Some(v) => (
                Self {
                    mant: v,
                    exp: self.exp,
                }
                .normalized(),
                true,
            ),
            None => {
                let s = 128 - (w as u128).leading_zeros();
                let v = (self.mant >> s).saturating_mul(w as u128);
                (
                    Self {
                        mant: v,
                        exp: self.exp.saturating_sub(s),
                    }
                    .normalized(),
                    false,
                )
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        let bits = 128 - self.mant.leading_zeros();
        if bits <= 53 {
            return self.mant as f64 * (-(self.exp as f64)).exp2();
        }
        // Round the mantissa to 64 bits first so the power-of-two scale stays exact.
        let drop = bits - 64;
        (self.mant >> drop) as u64 as f64 * (drop as f64 - self.exp as f64).exp2()
    }

    /// Exact `(numerator, denominator)` in lowest terms.
    pub fn to_fraction(&self) -> (BigUint, BigUint) {
        (BigUint::from(self.mant), BigUint::from(1u8) << self.exp)
    }

    /// Exact comparison of `self * a` with `other * b`.
    pub fn cmp_scaled(&self, a: u64, other: &Self, b: u64) -> Ordering {
        let l = (BigUint::from(self.mant) * a) << other.exp;
        let r = (BigUint::from(other.mant) * b) << self.exp;
        l.cmp(&r)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.exp == other.exp {
            return self.mant.cmp(&other.mant);
        }
        let (shift, swap) = if self.exp > other.exp {
            (self.exp - other.exp, false)
        } else {
            (other.exp - self.exp, true)
        };
        let (fine, coarse) = if swap { (other, self) } else { (self, other) };
        // Compare fine.mant with coarse.mant << shift without overflow.
        let ord = if coarse.mant == 0 {
            fine.mant.cmp(&0)
        } else if shift >= 128 || coarse.mant.leading_zeros() < shift {
            Ordering::Less
        } else {
            fine.mant.cmp(&(coarse.mant << shift))
        };
        if swap {
            ord.reverse()
        } else {
            ord
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    /// Exact form, `p` or `p/2^e` written out as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.mant)
        } else {
            let (n, d) = self.to_fraction();
            write!(f, "{n}/{d}")
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (~{})", self.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let q = Dyadic::new(1, 2);
        let h = Dyadic::new(2, 2);
        assert_eq!(h, Dyadic::new(1, 1));
        let (s, ok) = q.checked_add(h);
        assert!(ok);
        assert_eq!(s, Dyadic::new(3, 2));
        assert_eq!(s.to_string(), "3/4");
        assert_eq!(Dyadic::from_int(5).to_string(), "5");
        assert_eq!(q.halve(3), Dyadic::new(1, 5));
        assert_eq!(q.checked_mul_int(6).0, Dyadic::new(3, 1));
        assert_eq!(s.to_f64(), 0.75);
    }

    #[test]
    fn ordering() {
        assert!(Dyadic::new(1, 2) < Dyadic::new(1, 1));
        assert!(Dyadic::new(3, 2) > Dyadic::new(1, 1));
        assert!(Dyadic::new(1, 100) > Dyadic::ZERO);
        assert!(Dyadic::from_int(u128::MAX) > Dyadic::new(1, 120));
        assert_eq!(
            Dyadic::new(1, 3).cmp_scaled(3, &Dyadic::new(1, 2), 2),
            Ordering::Less
        );
        assert_eq!(
            Dyadic::new(2, 2).cmp_scaled(1, &Dyadic::new(1, 1), 1),
            Ordering::Equal
        );
    }

    #[test]
    fn wide_exponents() {
        let tiny = Dyadic::new(1, 126);
        let (s, ok) = Dyadic::from_int(1).checked_add(tiny);
        assert!(ok);
        assert_eq!(s.exponent(), 126);
        let (s, ok) = Dyadic::from_int(1 << 20).checked_add(Dyadic::new(1, 127));
        assert!(!ok);
        assert!(s >= Dyadic::from_int(1 << 20));
        assert!((Dyadic::new(3, 200).to_f64() - 3.0 * 2f64.powi(-200)).abs() < 1e-70);
        let big = Dyadic::new((1u128 << 100) + 1, 100);
        assert!((big.to_f64() - 1.0).abs() < 1e-15);
    }
}
