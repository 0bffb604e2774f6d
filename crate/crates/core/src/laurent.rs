//! Integer Laurent polynomials in one variable.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// `Σ c_e x^e` with integer coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: i32) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(coeff, exp);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(c, e);
        }
        p
    }

    pub fn add_term(&mut self, coeff: i64, exp: i32) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(exp).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `x^shift`.
    pub fn shift(&self, shift: i32) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (e + shift, c)).collect() }
    }

    /// Substitutes `x -> x^factor` (a negative factor inverts the variable).
    pub fn rescale(&self, factor: i32) -> Self {
        LaurentPoly::from_terms(self.terms.iter().map(|(&e, &c)| (e * factor, c)))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = LaurentPoly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Evaluates with `x` replaced by `base`.
    pub fn eval(&self, base: Complex64) -> Complex64 {
        self.terms.iter().map(|(&e, &c)| base.powi(e) * c as f64).sum()
    }

    /// Renders in variable `var`, where stored exponents are `denominator` times the true ones.
    pub fn display_with(&self, var: &str, denominator: i32) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (&e, &c) in self.terms.iter().rev() {
            let mag = c.unsigned_abs();
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let g = gcd(e.unsigned_abs(), denominator.unsigned_abs()).max(1) as i32;
            let (num, den) = (e / g, denominator / g);
            let power = match (num, den) {
                (0, _) => String::new(),
                (1, 1) => var.to_string(),
                (n, 1) => format!("{var}^{n}"),
                (n, d) => format!("{var}^({n}/{d})"),
            };
            if power.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag == 1 {
                out.push_str(&power);
            } else {
                out.push_str(&format!("{mag}{power}"));
            }
        }
        out
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x", 1))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(c, e);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = LaurentPoly::from_terms([(1, 1), (-1, 1)]);
        let sq = &a * &a;
        assert_eq!(sq, LaurentPoly::from_terms([(2, 1), (0, 2), (-2, 1)]));
        assert!((&a - &a).is_zero());
        assert_eq!(LaurentPoly::monomial(0, 3), LaurentPoly::zero());
        assert_eq!(a.shift(2).min_exp(), Some(1));
        assert_eq!(a.rescale(-4), LaurentPoly::from_terms([(4, 1), (-4, 1)]));
        assert_eq!(a.pow(0), LaurentPoly::one());
    }

    #[test]
    fn evaluation() {
        let p = LaurentPoly::from_terms([(2, 3), (-1, -1)]);
        let v = p.eval(Complex64::new(2.0, 0.0));
        assert!((v.re - 11.5).abs() < 1e-12);
    }

    #[test]
    fn display() {
        let p = LaurentPoly::from_terms([(4, 1), (12, 1), (16, -1)]);
        assert_eq!(p.display_with("t", 4), "-t^4 + t^3 + t");
        let q = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
        assert_eq!(q.display_with("t", 4), "-t^(1/2) - t^(-1/2)");
        assert_eq!(LaurentPoly::from_terms([(0, 4), (1, -2)]).to_string(), "-2x + 4");
    }
}
