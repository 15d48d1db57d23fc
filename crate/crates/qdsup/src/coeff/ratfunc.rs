//! Rational functions `num / den` in `v, w`, kept in reduced canonical form.
//!
//! The denominator is a true polynomial (no negative exponents), is not
//! divisible by `v` or `w`, has deglex leading coefficient one, and shares no
//! factor with the numerator. Equality is therefore structural.

use std::fmt;

use num::{BigInt, BigRational, One, Zero};

use super::lpoly::LPoly;

#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: LPoly,
    den: LPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: LPoly::zero(),
            den: LPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: LPoly::one(),
            den: LPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc {
            num: LPoly::from_int(n),
            den: LPoly::one(),
        }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        RatFunc {
            num: LPoly::monomial((0, 0), BigRational::new(BigInt::from(n), BigInt::from(d))),
            den: LPoly::one(),
        }
    }

    pub fn monomial(e: (i32, i32)) -> Self {
        RatFunc {
            num: LPoly::monomial(e, BigRational::one()),
            den: LPoly::one(),
        }
    }

    pub fn from_parts(num: LPoly, den: LPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = RatFunc { num, den };
        r.reduce();
        r
    }

    pub fn num(&self) -> &LPoly {
        &self.num
    }

    pub fn den(&self) -> &LPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = LPoly::one();
            return;
        }
        // Push the denominator's Laurent unit (v^a w^b and its leading
        // rational) into the numerator, then cancel the polynomial gcd.
        let m = self.den.min_exp();
        if m != (0, 0) {
            self.den = self.den.shift((-m.0, -m.1));
            self.num = self.num.shift((-m.0, -m.1));
        }
        if self.den.num_terms() == 1 {
            // den is now a pure rational constant times 1
            let c = self.den.coeff((0, 0));
            self.num = self.num.scale(&c.recip());
            self.den = LPoly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.num_terms() > 1 || !g.coeff((0, 0)).is_one() {
            // Shift num so the division stays in polynomial range on the den side.
            if let Some(q) = self.den.exact_div(&g) {
                if let Some(p) = self.num.exact_div(&g) {
                    self.num = p;
                    self.den = q;
                }
            }
        }
        // Renormalize the reduced denominator: unit shift + monic lead.
        let m = self.den.min_exp();
        if m != (0, 0) {
            self.den = self.den.shift((-m.0, -m.1));
            self.num = self.num.shift((-m.0, -m.1));
        }
        let lc = self.den.lead_coeff_deglex().unwrap().clone();
        if !lc.is_one() {
            self.den = self.den.scale(&lc.recip());
            self.num = self.num.scale(&lc.recip());
        }
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFunc::from_parts(self.num.add(&o.num), self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        let (da, db) = if g.num_terms() == 1 && g.coeff((0, 0)).is_one() {
            (self.den.clone(), o.den.clone())
        } else {
            (
                self.den.exact_div(&g).expect("gcd divides"),
                o.den.exact_div(&g).expect("gcd divides"),
            )
        };
        // lcm = den_a * (den_b / g); num = n_a*(den_b/g) + n_b*(den_a/g)
        let num = self.num.mul(&db).add(&o.num.mul(&da));
        let den = self.den.mul(&db);
        RatFunc::from_parts(num, den)
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::from_parts(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return None;
        }
        Some(RatFunc::from_parts(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &RatFunc) -> Option<RatFunc> {
        Some(self.mul(&o.inv()?))
    }

    pub fn scale_ratio(&self, n: i64, d: i64) -> RatFunc {
        self.mul(&RatFunc::from_ratio(n, d))
    }

    /// Evaluate at rational `v0, w0`; `None` when the denominator vanishes.
    pub fn eval(&self, v0: &BigRational, w0: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(v0, w0)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(v0, w0)? / d)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.num_terms() == 1 && self.den.coeff((0, 0)).is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qm(e: (i32, i32)) -> RatFunc {
        RatFunc::monomial(e)
    }

    #[test]
    fn qnum_two_simplifies() {
        // (q^2 - q^-2)/(q - q^-1) = q + q^-1, with q = v^2.
        let num = qm((4, 0)).sub(&qm((-4, 0)));
        let den = qm((2, 0)).sub(&qm((-2, 0)));
        let got = num.div(&den).unwrap();
        let expect = qm((2, 0)).add(&qm((-2, 0)));
        assert_eq!(got, expect);
    }

    #[test]
    fn add_with_common_factor_cancels() {
        let a = RatFunc::from_parts(
            LPoly::one(),
            LPoly::monomial((2, 0), num::BigRational::one()).sub(&LPoly::one()),
        );
        let b = a.neg();
        assert!(a.add(&b).is_zero());
    }

    #[test]
    fn canonical_equality() {
        // (v^2-1)/(v^4-1) == 1/(v^2+1)
        let a = RatFunc::from_parts(
            LPoly::monomial((2, 0), num::BigRational::one()).sub(&LPoly::one()),
            LPoly::monomial((4, 0), num::BigRational::one()).sub(&LPoly::one()),
        );
        let b = RatFunc::from_parts(
            LPoly::one(),
            LPoly::monomial((2, 0), num::BigRational::one()).add(&LPoly::one()),
        );
        assert_eq!(a, b);
    }
}
