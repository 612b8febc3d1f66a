//! Tableau scalars: reduced `i64` fractions, promoted to big rationals only
//! when a result does not fit.

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone)]
pub(crate) enum Num {
    /// Numerator and positive denominator in lowest terms.
    Small(i64, i64),
    Big(Rational),
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

impl Num {
    pub fn zero() -> Self {
        Num::Small(0, 1)
    }

    /// `n / d` with `d != 0`, both already widened.
    fn from_wide(n: i128, d: i128) -> Self {
        let (n, d) = if d < 0 { (-n, -d) } else { (n, d) };
        let g = gcd(n.unsigned_abs(), d as u128) as i128;
        let (n, d) = if g > 1 { (n / g, d / g) } else { (n, d) };
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Num::Small(n, d),
            _ => Num::Big(Rational::new(BigInt::from(n), BigInt::from(d))),
        }
    }

    fn from_big(r: Rational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Num::Small(n, d),
            _ => Num::Big(r),
        }
    }

    pub fn from_rational(r: &Rational) -> Self {
        Num::from_big(r.clone())
    }

    pub fn to_rational(&self) -> Rational {
        match self {
            Num::Small(n, d) => Rational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Num::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Num::Small(n, _) => *n == 0,
            Num::Big(r) => r.is_zero(),
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Num::Small(n, _) => *n > 0,
            Num::Big(r) => r.is_positive(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Num::Small(n, _) => *n < 0,
            Num::Big(r) => r.is_negative(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Num::Small(1, 1))
    }
}

impl Add for &Num {
    type Output = Num;

    fn add(self, other: &Num) -> Num {
        match (self, other) {
            (Num::Small(a, b), Num::Small(c, d)) => {
                if b == d {
                    Num::from_wide(*a as i128 + *c as i128, *b as i128)
                } else {
                    Num::from_wide(*a as i128 * *d as i128 + *c as i128 * *b as i128, *b as i128 * *d as i128)
                }
            }
            _ => Num::from_big(self.to_rational() + other.to_rational()),
        }
    }
}

impl Sub for &Num {
    type Output = Num;

    fn sub(self, other: &Num) -> Num {
        self + &(-other)
    }
}

impl Mul for &Num {
    type Output = Num;

    fn mul(self, other: &Num) -> Num {
        match (self, other) {
            (Num::Small(a, b), Num::Small(c, d)) => {
                Num::from_wide(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Num::from_big(self.to_rational() * other.to_rational()),
        }
    }
}

impl Div for &Num {
    type Output = Num;

    fn div(self, other: &Num) -> Num {
        match (self, other) {
            (Num::Small(a, b), Num::Small(c, d)) => {
                assert!(*c != 0, "division by zero");
                Num::from_wide(*a as i128 * *d as i128, *b as i128 * *c as i128)
            }
            _ => Num::from_big(self.to_rational() / other.to_rational()),
        }
    }
}

impl Neg for &Num {
    type Output = Num;

    fn neg(self) -> Num {
        match self {
            Num::Small(n, d) => match n.checked_neg() {
                Some(m) => Num::Small(m, *d),
                None => Num::from_big(-self.to_rational()),
            },
            Num::Big(r) => Num::from_big(-r.clone()),
        }
    }
}

impl PartialEq for Num {
    fn eq(&self, other: &Num) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Num {}

impl PartialOrd for Num {
    fn partial_cmp(&self, other: &Num) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Num {
    fn cmp(&self, other: &Num) -> Ordering {
        match (self, other) {
            (Num::Small(a, b), Num::Small(c, d)) => (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128)),
            _ => self.to_rational().cmp(&other.to_rational()),
        }
    }
}
