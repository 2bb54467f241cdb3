//! Exact arithmetic in `Q(√d)`: numbers `a + b√d` with rational `a`, `b`.
//!
//! Only what the Colley closed form needs: ring operations, division,
//! integer powers and an exact sign. When `d` is a perfect square the
//! radical is folded into `a`, so `b` is always zero in that field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surd {
    a: Rational,
    b: Rational,
    d: BigInt,
}

/// Exact square root of `d` if it has one.
fn perfect_root(d: &BigInt) -> Option<BigInt> {
    let r = d.sqrt();
    (&r * &r == *d).then_some(r)
}

impl Surd {
    /// `a + b√d`; `d` must be positive.
    pub fn new(a: Rational, b: Rational, d: BigInt) -> Self {
        assert!(d.is_positive(), "radicand must be positive");
        match perfect_root(&d) {
            Some(root) => Surd {
                a: a + b * Rational::from_integer(root),
                b: Rational::zero(),
                d,
            },
            None => Surd { a, b, d },
        }
    }

    pub fn rational(a: Rational, d: &BigInt) -> Self {
        Surd::new(a, Rational::zero(), d.clone())
    }

    /// `√d` itself.
    pub fn root(d: &BigInt) -> Self {
        Surd::new(Rational::zero(), Rational::one(), d.clone())
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn radical_part(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conjugate(&self) -> Surd {
        Surd {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d.clone(),
        }
    }

    /// `a² - b²d`, a rational.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(self.d.clone())
    }

    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        // opposite signs: the larger magnitude wins
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * Rational::from_integer(self.d.clone());
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn pow(&self, exp: u32) -> Surd {
        let mut acc = Surd::rational(Rational::one(), &self.d);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        let d: f64 = num_traits::ToPrimitive::to_f64(&self.d).unwrap_or(f64::NAN);
        crate::rational::to_f64(&self.a) + crate::rational::to_f64(&self.b) * d.sqrt()
    }

    fn same_field(&self, other: &Surd) {
        assert_eq!(self.d, other.d, "operands live in different fields");
    }
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        (self.d == other.d).then(|| (self - other).signum())
    }
}

impl Add for &Surd {
    type Output = Surd;
    fn add(self, rhs: &Surd) -> Surd {
        self.same_field(rhs);
        Surd {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            d: self.d.clone(),
        }
    }
}

impl Sub for &Surd {
    type Output = Surd;
    fn sub(self, rhs: &Surd) -> Surd {
        self.same_field(rhs);
        Surd {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            d: self.d.clone(),
        }
    }
}

impl Mul for &Surd {
    type Output = Surd;
    fn mul(self, rhs: &Surd) -> Surd {
        self.same_field(rhs);
        let d = Rational::from_integer(self.d.clone());
        Surd {
            a: &self.a * &rhs.a + &self.b * &rhs.b * d,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            d: self.d.clone(),
        }
    }
}

impl Div for &Surd {
    type Output = Surd;
    fn div(self, rhs: &Surd) -> Surd {
        self.same_field(rhs);
        let norm = rhs.norm();
        assert!(!norm.is_zero(), "division by zero in Q(√d)");
        let num = self * &rhs.conjugate();
        Surd {
            a: num.a / &norm,
            b: num.b / &norm,
            d: self.d.clone(),
        }
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd {
            a: -self.a.clone(),
            b: -self.b.clone(),
            d: self.d.clone(),
        }
    }
}

impl Mul<&Rational> for &Surd {
    type Output = Surd;
    fn mul(self, rhs: &Rational) -> Surd {
        Surd {
            a: &self.a * rhs,
            b: &self.b * rhs,
            d: self.d.clone(),
        }
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + ({})√{}", self.a, self.b, self.d)
        }
    }
}
