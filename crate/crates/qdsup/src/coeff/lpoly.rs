//! Sparse Laurent polynomials in two variables `v` and `w` over the rationals.
//!
//! The monomial `v^a w^b` stands for `q^{(a + b x)/2}`, so exponents are the
//! "doubled" integers of a [`HalfExponent`](super::HalfExponent).

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

/// Exponent pair `(a, b)` for the monomial `v^a w^b`.
pub type Exp = (i32, i32);

/// A sparse Laurent polynomial in `v, w` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LPoly {
    terms: BTreeMap<Exp, BigRational>,
}

impl LPoly {
    pub fn zero() -> Self {
        LPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial((0, 0), BigRational::one())
    }

    pub fn monomial(e: Exp, c: BigRational) -> Self {
        let mut t = BTreeMap::new();
        if !c.is_zero() {
            t.insert(e, c);
        }
        LPoly { terms: t }
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial((0, 0), BigRational::from_integer(BigInt::from(n)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Exp, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Exp) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    fn insert_add(&mut self, e: Exp, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &LPoly) -> LPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LPoly) -> LPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> LPoly {
        LPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &LPoly) -> LPoly {
        let mut out = LPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.insert_add((e1.0 + e2.0, e1.1 + e2.1), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> LPoly {
        if c.is_zero() {
            return LPoly::zero();
        }
        LPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    pub fn shift(&self, by: Exp) -> LPoly {
        LPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ((e.0 + by.0, e.1 + by.1), c.clone()))
                .collect(),
        }
    }

    /// Minimal exponents over all terms; `(0, 0)` for the zero polynomial.
    pub fn min_exp(&self) -> Exp {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(e) => *e,
            None => return (0, 0),
        };
        let mut m = first;
        for e in it {
            m.0 = m.0.min(e.0);
            m.1 = m.1.min(e.1);
        }
        m
    }

    /// Leading exponent under graded-lex order (total degree, then `v`-exponent).
    pub fn lead_exp_deglex(&self) -> Option<Exp> {
        self.terms
            .keys()
            .copied()
            .max_by_key(|e| (e.0 as i64 + e.1 as i64, e.0, e.1))
    }

    pub fn lead_coeff_deglex(&self) -> Option<&BigRational> {
        self.lead_exp_deglex().and_then(|e| self.terms.get(&e))
    }

    /// Exact division in the Laurent ring; `None` if the division is not exact.
    pub fn exact_div(&self, div: &LPoly) -> Option<LPoly> {
        assert!(!div.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(LPoly::zero());
        }
        // Work with the divisor's deglex leading term; exact division terminates
        // because the deglex-lead of the remainder strictly decreases.
        let dl = div.lead_exp_deglex().unwrap();
        let dc = div.terms.get(&dl).unwrap().clone();
        let mut rem = self.clone();
        let mut quo = LPoly::zero();
        while !rem.is_zero() {
            let rl = rem.lead_exp_deglex().unwrap();
            let rc = rem.terms.get(&rl).unwrap().clone();
            let qe = (rl.0 - dl.0, rl.1 - dl.1);
            let qc = rc / &dc;
            let t = LPoly::monomial(qe, qc);
            rem = rem.sub(&t.mul(div));
            quo = quo.add(&t);
            // Exactness guard: the new lead must strictly decrease in deglex.
            if let Some(nl) = rem.lead_exp_deglex() {
                let key = |e: Exp| (e.0 as i64 + e.1 as i64, e.0, e.1);
                if key(nl) >= key(rl) {
                    return None;
                }
            }
        }
        Some(quo)
    }

    /// Substitute rational values for `v` and `w`. `None` on 0^negative.
    pub fn eval(&self, v0: &BigRational, w0: &BigRational) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += c * rat_pow(v0, e.0)? * rat_pow(w0, e.1)?;
        }
        Some(acc)
    }

    /// Greatest common divisor, normalized to a primitive integer polynomial
    /// with positive leading coefficient and no `v`/`w` factor.
    pub fn gcd(&self, other: &LPoly) -> LPoly {
        if self.is_zero() {
            return other.normalized_assoc();
        }
        if other.is_zero() {
            return self.normalized_assoc();
        }
        // Fast path: either side a monomial -> gcd is 1 (after unit removal).
        if self.num_terms() == 1 || other.num_terms() == 1 {
            return LPoly::one();
        }
        let a = BiDense::from_lpoly(self);
        let b = BiDense::from_lpoly(other);
        let g = BiDense::gcd(a, b);
        g.to_lpoly()
    }

    /// The canonical associate used for denominators: shifted to kill the
    /// `v`/`w` content and scaled so the deglex leading coefficient is one.
    pub fn normalized_assoc(&self) -> LPoly {
        if self.is_zero() {
            return LPoly::zero();
        }
        let m = self.min_exp();
        let sh = self.shift((-m.0, -m.1));
        let lc = sh.lead_coeff_deglex().unwrap().clone();
        sh.scale(&lc.recip())
    }
}

pub(crate) fn rat_pow(b: &BigRational, e: i32) -> Option<BigRational> {
    if e == 0 {
        return Some(BigRational::one());
    }
    if b.is_zero() {
        return if e > 0 { Some(BigRational::zero()) } else { None };
    }
    let p = b.pow(e.abs());
    Some(if e > 0 { p } else { p.recip() })
}

impl fmt::Display for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_mag = mag.is_one();
            let has_var = *e != (0, 0);
            if !unit_mag || !has_var {
                write!(f, "{}", mag)?;
                if has_var {
                    write!(f, "*")?;
                }
            }
            if e.0 != 0 {
                write!(f, "v^{}", e.0)?;
                if e.1 != 0 {
                    write!(f, "*")?;
                }
            }
            if e.1 != 0 {
                write!(f, "w^{}", e.1)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// Dense integer representation used only inside gcd.
// ---------------------------------------------------------------------------

/// Univariate integer polynomial in `w`, dense, lowest degree first.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
struct UDense(Vec<BigInt>);

impl UDense {
    fn zero() -> Self {
        UDense(Vec::new())
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn trim(mut v: Vec<BigInt>) -> Self {
        while v.last().map_or(false, |c| c.is_zero()) {
            v.pop();
        }
        UDense(v)
    }
    fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
    fn lc(&self) -> &BigInt {
        self.0.last().expect("lc of zero polynomial")
    }
    fn neg(&self) -> Self {
        UDense(self.0.iter().map(|c| -c).collect())
    }
    fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let mut v = vec![BigInt::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in o.0.iter().enumerate() {
            v[i] += c;
        }
        Self::trim(v)
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Self::trim(v)
    }
    fn mul_scalar(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        UDense(self.0.iter().map(|c| c * s).collect())
    }
    fn shift_mul(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.0.iter().cloned());
        UDense(v)
    }
    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = num::integer::gcd(g, c.clone());
            if g.is_one() {
                break;
            }
        }
        g
    }
    fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        UDense(self.0.iter().map(|c| c / &g).collect())
    }
    /// Pseudo-remainder of `a` by `b`.
    fn prem(a: &Self, b: &Self) -> Self {
        let mut r = a.clone();
        let db = b.deg();
        let lb = b.lc().clone();
        while !r.is_zero() && r.deg() >= db {
            let dr = r.deg();
            let lr = r.lc().clone();
            // r = lb*r - lr*w^{dr-db}*b
            r = r.mul_scalar(&lb).sub(&b.mul_scalar(&lr).shift_mul(dr - db));
            if r.0.len() > dr {
                r.0.truncate(dr);
                r = Self::trim(r.0);
            }
        }
        r
    }
    fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.primitive();
        }
        if b.is_zero() {
            return a.primitive();
        }
        let ca = a.content().abs();
        let cb = b.content().abs();
        let cg = num::integer::gcd(ca, cb);
        let (mut f, mut g) = if a.deg() >= b.deg() {
            (a.primitive(), b.primitive())
        } else {
            (b.primitive(), a.primitive())
        };
        while !g.is_zero() {
            let r = Self::prem(&f, &g).primitive();
            f = g;
            g = r;
        }
        f.primitive().mul_scalar(&cg)
    }
}

/// Bivariate integer polynomial: coefficient of `v^i` is a `UDense` in `w`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
struct BiDense(Vec<UDense>);

impl BiDense {
    fn zero() -> Self {
        BiDense(Vec::new())
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn trim(mut v: Vec<UDense>) -> Self {
        while v.last().map_or(false, |c| c.is_zero()) {
            v.pop();
        }
        BiDense(v)
    }
    fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
    fn lc(&self) -> &UDense {
        self.0.last().expect("lc of zero polynomial")
    }
    fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let mut v = vec![UDense::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            v[i] = v[i].add(c);
        }
        for (i, c) in o.0.iter().enumerate() {
            v[i] = v[i].sub(c);
        }
        Self::trim(v)
    }
    fn mul_u(&self, s: &UDense) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        BiDense(self.0.iter().map(|c| c.mul(s)).collect())
    }
    fn shift_mul(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![UDense::zero(); k];
        v.extend(self.0.iter().cloned());
        BiDense(v)
    }
    fn content_w(&self) -> UDense {
        let mut g = UDense::zero();
        for c in &self.0 {
            g = UDense::gcd(&g, c);
            if g.deg() == 0 && !g.is_zero() && g.0[0].abs().is_one() {
                break;
            }
        }
        g
    }
    fn divexact_u(&self, s: &UDense) -> Self {
        // Exact division of every v-coefficient by the univariate s.
        BiDense(
            self.0
                .iter()
                .map(|c| {
                    if c.is_zero() {
                        UDense::zero()
                    } else {
                        udense_divexact(c, s)
                    }
                })
                .collect(),
        )
    }
    fn primitive_w(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content_w();
        self.divexact_u(&c)
    }
    fn prem(a: &Self, b: &Self) -> Self {
        let mut r = a.clone();
        let db = b.deg();
        let lb = b.lc().clone();
        while !r.is_zero() && r.deg() >= db {
            let dr = r.deg();
            let lr = r.lc().clone();
            r = r.mul_u(&lb).sub(&b.mul_u(&lr).shift_mul(dr - db));
            if r.0.len() > dr {
                r.0.truncate(dr);
                r = Self::trim(r.0);
            }
        }
        r
    }

    fn from_lpoly(p: &LPoly) -> Self {
        let m = p.min_exp();
        let sh = p.shift((-m.0, -m.1));
        // Clear rational denominators.
        let mut den = BigInt::one();
        for (_, c) in sh.iter() {
            den = num::integer::lcm(den, c.denom().clone());
        }
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for (e, c) in sh.iter() {
            let (i, j) = (e.0 as usize, e.1 as usize);
            if rows.len() <= i {
                rows.resize(i + 1, Vec::new());
            }
            if rows[i].len() <= j {
                rows[i].resize(j + 1, BigInt::zero());
            }
            rows[i][j] = c.numer() * (&den / c.denom());
        }
        BiDense::trim(rows.into_iter().map(UDense::trim).collect())
    }

    fn to_lpoly(&self) -> LPoly {
        let mut out = LPoly::zero();
        for (i, c) in self.0.iter().enumerate() {
            for (j, k) in c.0.iter().enumerate() {
                if !k.is_zero() {
                    out.insert_add(
                        (i as i32, j as i32),
                        BigRational::from_integer(k.clone()),
                    );
                }
            }
        }
        out
    }

    fn gcd(a: Self, b: Self) -> Self {
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        let ca = a.content_w();
        let cb = b.content_w();
        let cg = UDense::gcd(&ca, &cb);
        let (mut f, mut g) = if a.deg() >= b.deg() {
            (a.primitive_w(), b.primitive_w())
        } else {
            (b.primitive_w(), a.primitive_w())
        };
        while !g.is_zero() {
            let r = Self::prem(&f, &g).primitive_w();
            f = g;
            g = r;
        }
        f.primitive_w().mul_u(&cg)
    }
}

/// Exact univariate division over the rationals, mapped back to integers.
fn udense_divexact(a: &UDense, b: &UDense) -> UDense {
    assert!(!b.is_zero());
    let mut r: Vec<BigRational> = a.0.iter().map(|c| BigRational::from_integer(c.clone())).collect();
    let db = b.deg();
    let lb = BigRational::from_integer(b.lc().clone());
    let mut q = vec![BigRational::zero(); a.0.len().saturating_sub(db)];
    while r.iter().any(|c| !c.is_zero()) {
        let dr = r.iter().rposition(|c| !c.is_zero()).unwrap();
        assert!(dr >= db, "inexact univariate division");
        let qc = &r[dr] / &lb;
        q[dr - db] = qc.clone();
        for (j, bc) in b.0.iter().enumerate() {
            let sub = &qc * BigRational::from_integer(bc.clone());
            r[dr - db + j] -= sub;
        }
    }
    UDense::trim(
        q.into_iter()
            .map(|c| {
                assert!(c.denom().is_one(), "inexact univariate division");
                c.numer().clone()
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn mul_and_exact_div_round_trip() {
        // (v^2 - w^-2)(v^4 w^2 + 3)
        let a = LPoly::monomial((2, 0), r(1)).sub(&LPoly::monomial((0, -2), r(1)));
        let b = LPoly::monomial((4, 2), r(1)).add(&LPoly::from_int(3));
        let p = a.mul(&b);
        assert_eq!(p.exact_div(&a).unwrap(), b);
        assert_eq!(p.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn gcd_of_shared_factor() {
        // gcd((v^4-1)(w^4-1), (v^4-1)(v^2 w^2+1)) = v^4 - 1
        let f1 = LPoly::monomial((4, 0), r(1)).sub(&LPoly::from_int(1));
        let f2 = LPoly::monomial((0, 4), r(1)).sub(&LPoly::from_int(1));
        let f3 = LPoly::monomial((2, 2), r(1)).add(&LPoly::from_int(1));
        let g = f1.mul(&f2).gcd(&f1.mul(&f3));
        assert_eq!(g.normalized_assoc(), f1.normalized_assoc());
    }

    #[test]
    fn gcd_coprime_is_one() {
        let f1 = LPoly::monomial((2, 0), r(1)).sub(&LPoly::from_int(1));
        let f2 = LPoly::monomial((0, 2), r(1)).add(&LPoly::from_int(1));
        assert_eq!(f1.gcd(&f2), LPoly::one());
    }

    #[test]
    fn eval_monomials() {
        let p = LPoly::monomial((2, -2), r(6));
        let v0 = BigRational::new(BigInt::from(7), BigInt::from(5));
        let w0 = BigRational::new(BigInt::from(11), BigInt::from(9));
        let got = p.eval(&v0, &w0).unwrap();
        let expect = r(6) * v0.pow(2) * w0.pow(2).recip();
        assert_eq!(got, expect);
    }
}
