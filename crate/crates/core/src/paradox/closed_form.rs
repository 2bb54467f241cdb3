//! Closed forms for Massey and Colley on `Z(n, k, l) = k·R⁺ₙ + l·S⁻ₙ`,
//! before and after deleting `Pn`.
//!
//! Massey ratings are affine in the player index. Colley ratings, written as
//! `r̃ = 2r - 1`, satisfy a three-term recurrence away from the ends, so
//! `r̃ᵢ = a·xⁱ + b·yⁱ` with `x`, `y` the roots of
//! `(k+l)λ² - 2(1+k+l)λ + (k+l) = 0`; the first and last rows fix `a`, `b`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::surd::Surd;
use super::ParadoxError;
use crate::rational::{format_rational, Rational};
use crate::tournament::TournamentError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ZMethod {
    Massey,
    Colley,
}

/// `rᵢ = alpha + beta·i`, and `alpha_prime + beta_prime·i` on `n - 1`
/// players after deletion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MasseyZForm {
    pub n: usize,
    pub alpha: Rational,
    pub beta: Rational,
    pub alpha_prime: Rational,
    pub beta_prime: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ColleyZForm {
    pub n: usize,
    pub x: Surd,
    pub y: Surd,
    pub alpha: Surd,
    pub beta: Surd,
    pub alpha_prime: Surd,
    pub beta_prime: Surd,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZClosedForm {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub massey: MasseyZForm,
    pub colley: ColleyZForm,
}

fn check(n: usize, k: usize, l: usize) -> Result<(), TournamentError> {
    if n < 3 {
        return Err(TournamentError::TooFewPlayers { min: 3, got: n });
    }
    if k == 0 && l == 0 {
        return Err(TournamentError::EmptyParameters);
    }
    Ok(())
}

fn q(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

impl MasseyZForm {
    pub fn rating(&self, i: usize) -> Rational {
        &self.alpha + &self.beta * q(i)
    }

    pub fn rating_after(&self, i: usize) -> Rational {
        &self.alpha_prime + &self.beta_prime * q(i)
    }

    pub fn ratings(&self) -> Vec<Rational> {
        (1..=self.n).map(|i| self.rating(i)).collect()
    }

    pub fn ratings_after(&self) -> Vec<Rational> {
        (1..self.n).map(|i| self.rating_after(i)).collect()
    }
}

pub fn massey_z_closed_form(n: usize, k: usize, l: usize) -> Result<MasseyZForm, TournamentError> {
    check(n, k, l)?;
    let two = q(2);
    let beta = -q(l) / q(l + k * n);
    let alpha = -&beta * q(n + 1) / &two;
    let beta_prime = (q(k) - q(l)) / q(k + l);
    let alpha_prime = -&beta_prime * q(n) / &two;
    Ok(MasseyZForm {
        n,
        alpha,
        beta,
        alpha_prime,
        beta_prime,
    })
}

impl ColleyZForm {
    fn r_tilde(a: &Surd, b: &Surd, x: &Surd, y: &Surd, i: usize) -> Surd {
        &(a * &x.pow(i as u32)) + &(b * &y.pow(i as u32))
    }

    /// `2rᵢ - 1` before deletion.
    pub fn r_tilde_before(&self, i: usize) -> Surd {
        Self::r_tilde(&self.alpha, &self.beta, &self.x, &self.y, i)
    }

    pub fn r_tilde_after(&self, i: usize) -> Surd {
        Self::r_tilde(&self.alpha_prime, &self.beta_prime, &self.x, &self.y, i)
    }

    fn to_rating(rt: Surd) -> Surd {
        let d = rt.radicand().clone();
        &(&rt + &Surd::rational(Rational::one(), &d)) * &Rational::new(1.into(), 2.into())
    }

    /// Colley ratings before deletion.
    pub fn ratings(&self) -> Vec<Surd> {
        (1..=self.n)
            .map(|i| Self::to_rating(self.r_tilde_before(i)))
            .collect()
    }

    pub fn ratings_after(&self) -> Vec<Surd> {
        (1..self.n)
            .map(|i| Self::to_rating(self.r_tilde_after(i)))
            .collect()
    }
}

/// Solves `row1(a, b) = c1`, `rowm(a, b) = cm` where each row is linear in
/// the coefficients of `xⁱ` and `yⁱ`.
fn boundary_solve(
    x: &Surd,
    y: &Surd,
    first: impl Fn(&Surd) -> Surd,
    last: impl Fn(&Surd) -> Surd,
    c1: &Rational,
    cm: &Rational,
) -> (Surd, Surd) {
    let d = x.radicand().clone();
    let (a11, a12) = (first(x), first(y));
    let (a21, a22) = (last(x), last(y));
    let c1 = Surd::rational(c1.clone(), &d);
    let cm = Surd::rational(cm.clone(), &d);
    let det = &(&a11 * &a22) - &(&a12 * &a21);
    let a = &(&(&c1 * &a22) - &(&a12 * &cm)) / &det;
    let b = &(&(&a11 * &cm) - &(&c1 * &a21)) / &det;
    (a, b)
}

pub fn colley_z_closed_form(n: usize, k: usize, l: usize) -> Result<ColleyZForm, TournamentError> {
    check(n, k, l)?;
    let s = k + l;
    let d = BigInt::from(2 * s + 1);
    let x = Surd::new(q(1 + s) / q(s), -Rational::one() / q(s), d.clone());
    let y = Surd::new(q(1 + s) / q(s), Rational::one() / q(s), d.clone());

    let lin = |terms: &[(Rational, &Surd)]| {
        terms
            .iter()
            .fold(Surd::rational(Rational::zero(), &d), |acc, (c, v)| {
                &acc + &(*v * c)
            })
    };
    let kq = q(k);
    let sqv = q(s);

    // before: P1 also meets Pn through the ring
    let m = n as u32;
    let edge = q(2 * k + l + 2);
    let first = |lam: &Surd| {
        lin(&[
            (edge.clone(), lam),
            (-sqv.clone(), &lam.pow(2)),
            (-kq.clone(), &lam.pow(m)),
        ])
    };
    let last = |lam: &Surd| {
        lin(&[
            (-kq.clone(), lam),
            (-sqv.clone(), &lam.pow(m - 1)),
            (edge.clone(), &lam.pow(m)),
        ])
    };
    let (alpha, beta) = boundary_solve(&x, &y, first, last, &q(l), &-q(l));

    // after: Pn is gone, the ring opens into k·S⁺
    let mp = m - 1;
    let end = q(s + 2);
    let first = |lam: &Surd| lin(&[(end.clone(), lam), (-sqv.clone(), &lam.pow(2))]);
    let last = |lam: &Surd| {
        lin(&[
            (-sqv.clone(), &lam.pow(mp - 1)),
            (end.clone(), &lam.pow(mp)),
        ])
    };
    let diff = q(l) - q(k);
    let (alpha_prime, beta_prime) = boundary_solve(&x, &y, first, last, &diff, &-diff.clone());

    Ok(ColleyZForm {
        n,
        x,
        y,
        alpha,
        beta,
        alpha_prime,
        beta_prime,
    })
}

pub fn z_closed_form(n: usize, k: usize, l: usize) -> Result<ZClosedForm, TournamentError> {
    Ok(ZClosedForm {
        n,
        k,
        l,
        massey: massey_z_closed_form(n, k, l)?,
        colley: colley_z_closed_form(n, k, l)?,
    })
}

fn strictly(values: &[Surd], want: Ordering) -> bool {
    values.windows(2).all(|w| (&w[1] - &w[0]).signum() == want)
}

/// Whether deleting `Pn` from `Z(n, k, l)` inverts the ranking, decided
/// from the closed forms alone: ratings strictly decreasing in the index
/// before deletion and strictly increasing after.
pub fn z_inversion_predicate(
    n: usize,
    k: usize,
    l: usize,
    method: ZMethod,
) -> Result<bool, ParadoxError> {
    Ok(match method {
        ZMethod::Massey => {
            let f = massey_z_closed_form(n, k, l)?;
            f.beta < Rational::zero() && f.beta_prime > Rational::zero()
        }
        ZMethod::Colley => {
            let f = colley_z_closed_form(n, k, l)?;
            strictly(&f.ratings(), Ordering::Less)
                && strictly(&f.ratings_after(), Ordering::Greater)
        }
    })
}

impl Serialize for MasseyZForm {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("MasseyZForm", 4)?;
        st.serialize_field("alpha", &format_rational(&self.alpha))?;
        st.serialize_field("beta", &format_rational(&self.beta))?;
        st.serialize_field("alpha_prime", &format_rational(&self.alpha_prime))?;
        st.serialize_field("beta_prime", &format_rational(&self.beta_prime))?;
        st.end()
    }
}
