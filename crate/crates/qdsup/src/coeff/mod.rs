//! Exact arithmetic in the coefficient field.
//!
//! Scalars live in a rank-4 extension of the field of rational functions in
//! `v = q^{1/2}` and `w = q^{x/2}`: two formal square roots `sA` and `sB` are
//! adjoined with `sA^2 = [x]_q` and `sB^2 = -[x+1]_q`. The extension houses
//! the inverse square roots that normalize the reflection isomorphisms.
//!
//! Two coefficient models implement the same [`Coeff`] interface:
//! [`Sym`] computes with exact rational functions, [`Smp`] evaluates `v, w`
//! at a fixed rational sample while keeping `sA`, `sB` formal. The sampled
//! model is a fast probabilistic filter; only the symbolic model proves
//! identities.

mod lpoly;
mod ratfunc;

pub use lpoly::LPoly;
pub use ratfunc::RatFunc;

use std::fmt;
use std::sync::{Mutex, OnceLock};

use num::{BigInt, BigRational, One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// The exponent `(a + b·x)/2` of `q`, stored through its doubled integers.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct HalfExponent {
    /// Doubled coefficient of `1`.
    pub a: i32,
    /// Doubled coefficient of `x`.
    pub b: i32,
}

impl HalfExponent {
    pub const ZERO: HalfExponent = HalfExponent { a: 0, b: 0 };

    pub fn new(a: i32, b: i32) -> Self {
        HalfExponent { a, b }
    }

    /// The integer exponent `n` as a half exponent `2n/2`.
    pub fn from_int(n: i32) -> Self {
        HalfExponent { a: 2 * n, b: 0 }
    }

    /// `n·x` as a half exponent.
    pub fn from_x_mult(n: i32) -> Self {
        HalfExponent { a: 0, b: 2 * n }
    }

    pub fn add(self, o: Self) -> Self {
        HalfExponent {
            a: self.a + o.a,
            b: self.b + o.b,
        }
    }

    pub fn neg(self) -> Self {
        HalfExponent {
            a: -self.a,
            b: -self.b,
        }
    }

    pub fn scale(self, k: i32) -> Self {
        HalfExponent {
            a: self.a * k,
            b: self.b * k,
        }
    }

    /// Halve the represented exponent; errors when the result leaves the
    /// lattice `(Z + Z·x)/2`.
    pub fn halve(self) -> Result<Self> {
        if self.a % 2 != 0 || self.b % 2 != 0 {
            return Err(Error::ExponentLattice(self.a, self.b));
        }
        Ok(HalfExponent {
            a: self.a / 2,
            b: self.b / 2,
        })
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// True when the exponent lies in `Z + Z·x` (both doubled entries even).
    pub fn is_integral(self) -> bool {
        self.a % 2 == 0 && self.b % 2 == 0
    }
}

impl fmt::Display for HalfExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}x)/2", self.a, self.b)
    }
}

/// Index of the four basis elements `1, sA, sB, sA·sB`.
const B1: usize = 0;
const BA: usize = 1;
const BB: usize = 2;
const BAB: usize = 3;

/// Shared interface of the two coefficient models.
///
/// Constructors take a context (`()` symbolically; the sample handle when
/// sampled); ring operations are context free. All operations are pure, so
/// scalars may be shared across threads freely.
pub trait Coeff:
    Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + Sized + 'static
{
    type Ctx: Clone + Send + Sync + fmt::Debug;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_int(ctx: &Self::Ctx, n: i64) -> Self;
    fn from_ratio(ctx: &Self::Ctx, num: i64, den: i64) -> Self;
    /// `q^{(a+bx)/2}` for the given half exponent.
    fn qpow(ctx: &Self::Ctx, e: HalfExponent) -> Self;
    /// The adjoined square root `sA` with `sA^2 = [x]_q`.
    fn sqrt_a(ctx: &Self::Ctx) -> Self;
    /// The adjoined square root `sB` with `sB^2 = -[x+1]_q`.
    fn sqrt_b(ctx: &Self::Ctx) -> Self;

    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    fn is_zero(&self) -> bool;

    fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    fn is_one(&self, ctx: &Self::Ctx) -> bool {
        *self == Self::one(ctx)
    }

    /// `[u]_q = (q^u - q^{-u})/(q - q^{-1})`; `u` must lie in `Z + Z·x`.
    fn qnum(ctx: &Self::Ctx, u: HalfExponent) -> Self {
        debug_assert!(u.is_integral(), "q-number of non-integral exponent {u}");
        if u.is_zero() {
            return Self::zero(ctx);
        }
        let num = Self::qpow(ctx, u).sub(&Self::qpow(ctx, u.neg()));
        let den = Self::qpow(ctx, HalfExponent::from_int(1))
            .sub(&Self::qpow(ctx, HalfExponent::from_int(-1)));
        num.div(&den).expect("q - q^-1 is invertible")
    }

    /// Serialize following the documented four-component schema.
    fn to_json(&self) -> Value;
}

// ---------------------------------------------------------------------------
// Generic rank-4 extension arithmetic over a base field.
// ---------------------------------------------------------------------------

/// Base-field view used by the extension multiplication table.
trait ExtBase: Clone + PartialEq {
    fn b_zero() -> Self;
    fn b_is_zero(&self) -> bool;
    fn b_add(&self, o: &Self) -> Self;
    fn b_sub(&self, o: &Self) -> Self;
    fn b_mul(&self, o: &Self) -> Self;
    fn b_neg(&self) -> Self;
    fn b_inv(&self) -> Option<Self>;
}

impl ExtBase for RatFunc {
    fn b_zero() -> Self {
        RatFunc::zero()
    }
    fn b_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn b_add(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn b_sub(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn b_mul(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn b_neg(&self) -> Self {
        self.neg()
    }
    fn b_inv(&self) -> Option<Self> {
        self.inv()
    }
}

impl ExtBase for BigRational {
    fn b_zero() -> Self {
        BigRational::zero()
    }
    fn b_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn b_add(&self, o: &Self) -> Self {
        self + o
    }
    fn b_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn b_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn b_neg(&self) -> Self {
        -self.clone()
    }
    fn b_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Multiply two coordinate vectors given `P = sA^2` and `Q = sB^2`.
fn ext_mul<F: ExtBase>(a: &[F; 4], b: &[F; 4], p: &F, q: &F) -> [F; 4] {
    let pq = p.b_mul(q);
    let c0 = a[B1]
        .b_mul(&b[B1])
        .b_add(&p.b_mul(&a[BA].b_mul(&b[BA])))
        .b_add(&q.b_mul(&a[BB].b_mul(&b[BB])))
        .b_add(&pq.b_mul(&a[BAB].b_mul(&b[BAB])));
    let c1 = a[B1]
        .b_mul(&b[BA])
        .b_add(&a[BA].b_mul(&b[B1]))
        .b_add(&q.b_mul(&a[BB].b_mul(&b[BAB]).b_add(&a[BAB].b_mul(&b[BB]))));
    let c2 = a[B1]
        .b_mul(&b[BB])
        .b_add(&a[BB].b_mul(&b[B1]))
        .b_add(&p.b_mul(&a[BA].b_mul(&b[BAB]).b_add(&a[BAB].b_mul(&b[BA]))));
    let c3 = a[B1]
        .b_mul(&b[BAB])
        .b_add(&a[BAB].b_mul(&b[B1]))
        .b_add(&a[BA].b_mul(&b[BB]))
        .b_add(&a[BB].b_mul(&b[BA]));
    [c0, c1, c2, c3]
}

/// Inverse through the two quadratic norms; `None` for zero.
fn ext_inv<F: ExtBase>(a: &[F; 4], p: &F, q: &F) -> Option<[F; 4]> {
    // Conjugate over sB: (a0 + a1 sA) - (a2 + a3 sA) sB.
    let conj_b = [a[B1].clone(), a[BA].clone(), a[BB].b_neg(), a[BAB].b_neg()];
    let nb = ext_mul(a, &conj_b, p, q);
    debug_assert!(nb[BB].b_is_zero() && nb[BAB].b_is_zero());
    // nb = n0 + n1 sA; its inverse is (n0 - n1 sA)/(n0^2 - P n1^2).
    let disc = nb[B1]
        .b_mul(&nb[B1])
        .b_sub(&p.b_mul(&nb[BA].b_mul(&nb[BA])));
    let di = disc.b_inv()?;
    let inv_nb = [
        nb[B1].b_mul(&di),
        nb[BA].b_neg().b_mul(&di),
        F::b_zero(),
        F::b_zero(),
    ];
    Some(ext_mul(&conj_b, &inv_nb, p, q))
}

// ---------------------------------------------------------------------------
// Symbolic scalars.
// ---------------------------------------------------------------------------

/// Exact symbolic scalar: four rational-function coordinates on `1, sA, sB, sA·sB`.
#[derive(Clone, PartialEq, Eq)]
pub struct Sym {
    c: [RatFunc; 4],
}

fn sym_p() -> &'static RatFunc {
    static P: OnceLock<RatFunc> = OnceLock::new();
    P.get_or_init(|| {
        // [x]_q = (w^2 - w^-2)/(v^2 - v^-2)
        let num = RatFunc::monomial((0, 2)).sub(&RatFunc::monomial((0, -2)));
        let den = RatFunc::monomial((2, 0)).sub(&RatFunc::monomial((-2, 0)));
        num.div(&den).unwrap()
    })
}

fn sym_q() -> &'static RatFunc {
    static Q: OnceLock<RatFunc> = OnceLock::new();
    Q.get_or_init(|| {
        // -[x+1]_q = -(v^2 w^2 - v^-2 w^-2)/(v^2 - v^-2)
        let num = RatFunc::monomial((2, 2)).sub(&RatFunc::monomial((-2, -2)));
        let den = RatFunc::monomial((2, 0)).sub(&RatFunc::monomial((-2, 0)));
        num.div(&den).unwrap().neg()
    })
}

impl Sym {
    fn scalar(r: RatFunc) -> Self {
        Sym {
            c: [r, RatFunc::zero(), RatFunc::zero(), RatFunc::zero()],
        }
    }

    pub fn coords(&self) -> &[RatFunc; 4] {
        &self.c
    }

    /// The value of `sA^2 = [x]_q`.
    pub fn sa_squared() -> Sym {
        Sym::scalar(sym_p().clone())
    }

    /// The value of `sB^2 = -[x+1]_q`.
    pub fn sb_squared() -> Sym {
        Sym::scalar(sym_q().clone())
    }

    /// Evaluate into the sampled model; fails when a denominator vanishes.
    pub fn specialize(&self, ctx: &SmpCtx) -> Result<Smp> {
        let data = ctx.data();
        let mut c: [BigRational; 4] = Default::default();
        for (i, r) in self.c.iter().enumerate() {
            c[i] = r
                .eval(&data.v0, &data.w0)
                .ok_or_else(|| Error::BadSample(format!("{r}")))?;
        }
        Ok(Smp { slot: ctx.slot, c })
    }
}

fn ratfunc_to_json(r: &RatFunc) -> Value {
    let poly = |p: &LPoly| -> Value {
        Value::Array(
            p.iter()
                .map(|(e, c)| json!({"a": e.0, "b": e.1, "coeff": c.to_string()}))
                .collect(),
        )
    };
    json!({"num": poly(r.num()), "den": poly(r.den())})
}

impl Coeff for Sym {
    type Ctx = ();

    fn zero(_: &()) -> Self {
        Sym::scalar(RatFunc::zero())
    }
    fn one(_: &()) -> Self {
        Sym::scalar(RatFunc::one())
    }
    fn from_int(_: &(), n: i64) -> Self {
        Sym::scalar(RatFunc::from_int(n))
    }
    fn from_ratio(_: &(), n: i64, d: i64) -> Self {
        Sym::scalar(RatFunc::from_ratio(n, d))
    }
    fn qpow(_: &(), e: HalfExponent) -> Self {
        Sym::scalar(RatFunc::monomial((e.a, e.b)))
    }
    fn sqrt_a(_: &()) -> Self {
        Sym {
            c: [
                RatFunc::zero(),
                RatFunc::one(),
                RatFunc::zero(),
                RatFunc::zero(),
            ],
        }
    }
    fn sqrt_b(_: &()) -> Self {
        Sym {
            c: [
                RatFunc::zero(),
                RatFunc::zero(),
                RatFunc::one(),
                RatFunc::zero(),
            ],
        }
    }

    fn add(&self, o: &Self) -> Self {
        Sym {
            c: [
                self.c[0].add(&o.c[0]),
                self.c[1].add(&o.c[1]),
                self.c[2].add(&o.c[2]),
                self.c[3].add(&o.c[3]),
            ],
        }
    }
    fn sub(&self, o: &Self) -> Self {
        Sym {
            c: [
                self.c[0].sub(&o.c[0]),
                self.c[1].sub(&o.c[1]),
                self.c[2].sub(&o.c[2]),
                self.c[3].sub(&o.c[3]),
            ],
        }
    }
    fn mul(&self, o: &Self) -> Self {
        Sym {
            c: ext_mul(&self.c, &o.c, sym_p(), sym_q()),
        }
    }
    fn neg(&self) -> Self {
        Sym {
            c: [
                self.c[0].neg(),
                self.c[1].neg(),
                self.c[2].neg(),
                self.c[3].neg(),
            ],
        }
    }
    fn inv(&self) -> Result<Self> {
        ext_inv(&self.c, sym_p(), sym_q())
            .map(|c| Sym { c })
            .ok_or_else(|| Error::DivisionByZero(format!("{self}")))
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|r| r.is_zero())
    }

    fn to_json(&self) -> Value {
        Value::Array(self.c.iter().map(ratfunc_to_json).collect())
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        display_ext(f, &self.c, |r| r.is_zero(), |f, r| write!(f, "{r}"))
    }
}

impl fmt::Debug for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn display_ext<F>(
    f: &mut fmt::Formatter<'_>,
    c: &[F; 4],
    is_zero: impl Fn(&F) -> bool,
    show: impl Fn(&mut fmt::Formatter<'_>, &F) -> fmt::Result,
) -> fmt::Result {
    const NAMES: [&str; 4] = ["", "sA", "sB", "sA*sB"];
    let mut wrote = false;
    for i in 0..4 {
        if is_zero(&c[i]) {
            continue;
        }
        if wrote {
            write!(f, " + ")?;
        }
        if i == 0 {
            show(f, &c[i])?;
        } else {
            write!(f, "(")?;
            show(f, &c[i])?;
            write!(f, ")*{}", NAMES[i])?;
        }
        wrote = true;
    }
    if !wrote {
        write!(f, "0")?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Sampled scalars.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
struct SampleData {
    v0: BigRational,
    w0: BigRational,
    /// `[x]_q` at the sample.
    p: BigRational,
    /// `-[x+1]_q` at the sample.
    q: BigRational,
}

const MAX_SAMPLES: usize = 32;

fn sample_slots() -> &'static Mutex<Vec<SampleData>> {
    static SLOTS: OnceLock<Mutex<Vec<SampleData>>> = OnceLock::new();
    SLOTS.get_or_init(|| Mutex::new(Vec::new()))
}

/// Handle to a registered evaluation sample for the sampled model.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SmpCtx {
    slot: u8,
}

impl SmpCtx {
    /// Register the sample `(v0, w0)`. The preconditions of the fast mode are
    /// checked: `v0`, `w0` nonzero and `v0^2, w0^2, (v0 w0)^2` different from
    /// `±1`, so that no `q^{ku}` with `u` in `{1, x, x+1}` collapses to one.
    pub fn register(v0: BigRational, w0: BigRational) -> Result<SmpCtx> {
        let one = BigRational::one();
        for sq in [&v0 * &v0, &w0 * &w0, (&v0 * &w0) * (&v0 * &w0)] {
            if sq == one || sq == -one.clone() || sq.is_zero() {
                return Err(Error::BadSample(format!(
                    "sample ({v0}, {w0}) violates genericity"
                )));
            }
        }
        // [x]_q and -[x+1]_q evaluated at the sample.
        let qv = &v0 * &v0;
        let qx = &w0 * &w0;
        let qx1 = &qv * &qx;
        let den = &qv - qv.recip();
        let p = (&qx - qx.recip()) / &den;
        let q = -((&qx1 - qx1.recip()) / &den);
        let mut slots = sample_slots().lock().unwrap();
        for (i, d) in slots.iter().enumerate() {
            if d.v0 == v0 && d.w0 == w0 {
                return Ok(SmpCtx { slot: i as u8 });
            }
        }
        if slots.len() >= MAX_SAMPLES {
            return Err(Error::BadSample("sample registry full".into()));
        }
        slots.push(SampleData { v0, w0, p, q });
        Ok(SmpCtx {
            slot: (slots.len() - 1) as u8,
        })
    }

    pub fn from_ratios(v: (i64, i64), w: (i64, i64)) -> Result<SmpCtx> {
        SmpCtx::register(
            BigRational::new(BigInt::from(v.0), BigInt::from(v.1)),
            BigRational::new(BigInt::from(w.0), BigInt::from(w.1)),
        )
    }

    fn data(&self) -> SampleData {
        sample_slots().lock().unwrap()[self.slot as usize].clone()
    }
}

/// Sampled scalar: `v, w` evaluated at rationals, `sA, sB` still formal.
#[derive(Clone, PartialEq, Debug)]
pub struct Smp {
    slot: u8,
    c: [BigRational; 4],
}

impl Smp {
    fn scalar(slot: u8, r: BigRational) -> Self {
        let mut c: [BigRational; 4] = Default::default();
        c[0] = r;
        Smp { slot, c }
    }

    fn pq(&self) -> (BigRational, BigRational) {
        let d = sample_slots().lock().unwrap()[self.slot as usize].clone();
        (d.p, d.q)
    }
}

impl Coeff for Smp {
    type Ctx = SmpCtx;

    fn zero(ctx: &SmpCtx) -> Self {
        Smp::scalar(ctx.slot, BigRational::zero())
    }
    fn one(ctx: &SmpCtx) -> Self {
        Smp::scalar(ctx.slot, BigRational::one())
    }
    fn from_int(ctx: &SmpCtx, n: i64) -> Self {
        Smp::scalar(ctx.slot, BigRational::from_integer(BigInt::from(n)))
    }
    fn from_ratio(ctx: &SmpCtx, n: i64, d: i64) -> Self {
        Smp::scalar(
            ctx.slot,
            BigRational::new(BigInt::from(n), BigInt::from(d)),
        )
    }
    fn qpow(ctx: &SmpCtx, e: HalfExponent) -> Self {
        let d = ctx.data();
        let val = lpoly::rat_pow(&d.v0, e.a).unwrap() * lpoly::rat_pow(&d.w0, e.b).unwrap();
        Smp::scalar(ctx.slot, val)
    }
    fn sqrt_a(ctx: &SmpCtx) -> Self {
        let mut c: [BigRational; 4] = Default::default();
        c[BA] = BigRational::one();
        Smp { slot: ctx.slot, c }
    }
    fn sqrt_b(ctx: &SmpCtx) -> Self {
        let mut c: [BigRational; 4] = Default::default();
        c[BB] = BigRational::one();
        Smp { slot: ctx.slot, c }
    }

    fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.slot, o.slot, "mixed sample slots");
        Smp {
            slot: self.slot,
            c: [
                &self.c[0] + &o.c[0],
                &self.c[1] + &o.c[1],
                &self.c[2] + &o.c[2],
                &self.c[3] + &o.c[3],
            ],
        }
    }
    fn sub(&self, o: &Self) -> Self {
        debug_assert_eq!(self.slot, o.slot, "mixed sample slots");
        Smp {
            slot: self.slot,
            c: [
                &self.c[0] - &o.c[0],
                &self.c[1] - &o.c[1],
                &self.c[2] - &o.c[2],
                &self.c[3] - &o.c[3],
            ],
        }
    }
    fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.slot, o.slot, "mixed sample slots");
        let (p, q) = self.pq();
        Smp {
            slot: self.slot,
            c: ext_mul(&self.c, &o.c, &p, &q),
        }
    }
    fn neg(&self) -> Self {
        Smp {
            slot: self.slot,
            c: [
                -self.c[0].clone(),
                -self.c[1].clone(),
                -self.c[2].clone(),
                -self.c[3].clone(),
            ],
        }
    }
    fn inv(&self) -> Result<Self> {
        let (p, q) = self.pq();
        ext_inv(&self.c, &p, &q)
            .map(|c| Smp { slot: self.slot, c })
            .ok_or_else(|| Error::DivisionByZero(format!("{self}")))
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|r| r.is_zero())
    }

    fn to_json(&self) -> Value {
        Value::Array(self.c.iter().map(|r| json!(r.to_string())).collect())
    }
}

impl fmt::Display for Smp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        display_ext(f, &self.c, |r| r.is_zero(), |f, r| write!(f, "{r}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one() -> Sym {
        Sym::one(&())
    }

    #[test]
    fn sa_squares_to_qnum_x() {
        let sa = Sym::sqrt_a(&());
        let got = sa.mul(&sa);
        let expect = Sym::qnum(&(), HalfExponent::from_x_mult(1));
        assert_eq!(got, expect);
    }

    #[test]
    fn sb_squares_to_neg_qnum_x_plus_one() {
        let sb = Sym::sqrt_b(&());
        let got = sb.mul(&sb);
        let expect = Sym::qnum(&(), HalfExponent::new(2, 2)).neg();
        assert_eq!(got, expect);
    }

    #[test]
    fn mixed_square_matches_polynomial_oracle() {
        // (sA*sB)^2 expanded through the reduction rules must match the
        // term-by-term product of the two squares.
        let sab = Sym::sqrt_a(&()).mul(&Sym::sqrt_b(&()));
        let got = sab.mul(&sab);
        let oracle = Sym::sa_squared().mul(&Sym::sb_squared());
        assert_eq!(got, oracle);
    }

    #[test]
    fn extension_inverse_round_trips() {
        let s = Sym::qpow(&(), HalfExponent::new(1, -3))
            .add(&Sym::sqrt_a(&()))
            .add(&Sym::sqrt_b(&()).mul(&Sym::from_int(&(), 2)));
        let si = s.inv().unwrap();
        assert_eq!(s.mul(&si), one());
    }

    #[test]
    fn qnum_basics() {
        assert_eq!(Sym::qnum(&(), HalfExponent::from_int(1)), one());
        // [2]_q = q + q^-1
        let expect = Sym::qpow(&(), HalfExponent::from_int(1))
            .add(&Sym::qpow(&(), HalfExponent::from_int(-1)));
        assert_eq!(Sym::qnum(&(), HalfExponent::from_int(2)), expect);
        // [-x-1]_q = -[x+1]_q
        let a = Sym::qnum(&(), HalfExponent::new(-2, -2));
        let b = Sym::qnum(&(), HalfExponent::new(2, 2)).neg();
        assert_eq!(a, b);
    }

    #[test]
    fn specialize_monomial() {
        let ctx = SmpCtx::from_ratios((7, 5), (11, 9)).unwrap();
        let q = Sym::qpow(&(), HalfExponent::from_int(1));
        let got = q.specialize(&ctx).unwrap();
        let expect = Smp::from_ratio(&ctx, 49, 25);
        assert_eq!(got, expect);
    }

    #[test]
    fn specialize_qnum_x() {
        let ctx = SmpCtx::from_ratios((7, 5), (11, 9)).unwrap();
        let got = Sym::qnum(&(), HalfExponent::from_x_mult(1))
            .specialize(&ctx)
            .unwrap();
        // ((11/9)^2 - (9/11)^2) / ((7/5)^2 - (5/7)^2)
        let n = BigRational::new(121.into(), 81.into()) - BigRational::new(81.into(), 121.into());
        let d = BigRational::new(49.into(), 25.into()) - BigRational::new(25.into(), 49.into());
        assert_eq!(got, Smp::scalar(got.slot, n / d));
    }
}
