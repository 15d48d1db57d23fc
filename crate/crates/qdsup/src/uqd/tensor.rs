//! Tensor square of the presented algebra and the coproduct.
//!
//! The sign generator carries the super structure, so the coproduct is an
//! ordinary algebra map into the componentwise product: no Koszul sign twist
//! appears anywhere.

use std::collections::BTreeMap;

use crate::cartan::{parity_simple, DiagramId};
use crate::coeff::Coeff;
use crate::engine::Engine;
use crate::error::Result;

use super::{Elem, Gen, Monomial};

/// Finite combination of monomial pairs.
#[derive(Clone, PartialEq, Debug)]
pub struct Tensor2<S: Coeff> {
    pub d: DiagramId,
    pub terms: BTreeMap<(Monomial, Monomial), S>,
}

impl<S: Coeff> Tensor2<S> {
    pub fn zero(d: DiagramId) -> Self {
        Tensor2 {
            d,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(engine: &Engine<S>, d: DiagramId) -> Self {
        let mut t = Tensor2::zero(d);
        t.insert_add((Monomial::unit(), Monomial::unit()), engine.s1());
        t
    }

    /// `a (x) b` for two elements.
    pub fn of(a: &Elem<S>, b: &Elem<S>) -> Self {
        assert_eq!(a.d, b.d);
        let mut t = Tensor2::zero(a.d);
        for (m1, c1) in &a.terms {
            for (m2, c2) in &b.terms {
                t.insert_add((m1.clone(), m2.clone()), c1.mul(c2));
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert_add(&mut self, key: (Monomial, Monomial), c: S) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, o: &Tensor2<S>) -> Tensor2<S> {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.insert_add(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Tensor2<S>) -> Tensor2<S> {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.insert_add(k.clone(), c.neg());
        }
        out
    }

    /// Componentwise product.
    pub fn mul(&self, engine: &Engine<S>, o: &Tensor2<S>) -> Tensor2<S> {
        let mut out = Tensor2::zero(self.d);
        for ((a1, a2), c1) in &self.terms {
            for ((b1, b2), c2) in &o.terms {
                let left = Elem::single(self.d, a1.clone(), engine.s1())
                    .mul(engine, &Elem::single(self.d, b1.clone(), engine.s1()));
                let right = Elem::single(self.d, a2.clone(), engine.s1())
                    .mul(engine, &Elem::single(self.d, b2.clone(), engine.s1()));
                let c = c1.mul(c2);
                for (m1, k1) in &left.terms {
                    for (m2, k2) in &right.terms {
                        out.insert_add((m1.clone(), m2.clone()), c.mul(k1).mul(k2));
                    }
                }
            }
        }
        out
    }

    /// Reduce both legs to quotient normal form.
    pub fn normal_form(&self, engine: &Engine<S>) -> Result<Tensor2<S>> {
        let mut out = Tensor2::zero(self.d);
        for ((m1, m2), c) in &self.terms {
            let l = engine.normal_form(&Elem::single(self.d, m1.clone(), engine.s1()))?;
            let r = engine.normal_form(&Elem::single(self.d, m2.clone(), engine.s1()))?;
            for (n1, k1) in &l.terms {
                for (n2, k2) in &r.terms {
                    out.insert_add((n1.clone(), n2.clone()), c.mul(k1).mul(k2));
                }
            }
        }
        Ok(out)
    }
}

/// Coproduct image of a single generator.
fn delta_gen<S: Coeff>(engine: &Engine<S>, d: DiagramId, g: Gen) -> Tensor2<S> {
    let mut out = Tensor2::zero(d);
    match g {
        Gen::E(i) => {
            // E (x) 1 + K sigma^p (x) E
            let e = {
                let mut m = Monomial::unit();
                m.eword.push(i);
                m
            };
            out.insert_add((e.clone(), Monomial::unit()), engine.s1());
            let mut k = Monomial::unit();
            k.kw[i as usize] = 2;
            k.sigma = parity_simple(d, i) == 1;
            out.insert_add((k, e), engine.s1());
        }
        Gen::F(i) => {
            // F (x) K^{-1} + sigma^p (x) F
            let fm = {
                let mut m = Monomial::unit();
                m.fword.push(i);
                m
            };
            let mut kinv = Monomial::unit();
            kinv.kw[i as usize] = -2;
            out.insert_add((fm.clone(), kinv), engine.s1());
            let mut s = Monomial::unit();
            s.sigma = parity_simple(d, i) == 1;
            out.insert_add((s, fm), engine.s1());
        }
        Gen::Khalf(kw) => {
            let mut m = Monomial::unit();
            m.kw = kw;
            out.insert_add((m.clone(), m), engine.s1());
        }
        Gen::Sigma => {
            let mut m = Monomial::unit();
            m.sigma = true;
            out.insert_add((m.clone(), m), engine.s1());
        }
        Gen::KLambdaHalf(l) => {
            let mut m = Monomial::unit();
            m.klam = l;
            out.insert_add((m.clone(), m), engine.s1());
        }
    }
    out
}

/// The coproduct, extended as an algebra map.
pub fn coproduct<S: Coeff>(engine: &Engine<S>, a: &Elem<S>) -> Tensor2<S> {
    let d = a.d;
    let mut out = Tensor2::zero(d);
    for (m, c) in &a.terms {
        let mut acc = Tensor2::one(engine, d);
        for &i in &m.fword {
            acc = acc.mul(engine, &delta_gen(engine, d, Gen::F(i)));
        }
        if m.sigma {
            acc = acc.mul(engine, &delta_gen(engine, d, Gen::Sigma));
        }
        if m.kw != [0; 4] {
            acc = acc.mul(engine, &delta_gen(engine, d, Gen::Khalf(m.kw)));
        }
        if m.klam != 0 {
            acc = acc.mul(engine, &delta_gen(engine, d, Gen::KLambdaHalf(m.klam)));
        }
        for &i in &m.eword {
            acc = acc.mul(engine, &delta_gen(engine, d, Gen::E(i)));
        }
        for (k, v) in acc.terms {
            out.insert_add(k, v.mul(c));
        }
    }
    out
}

/// The counit: sign and Cartan monomials go to one, anything else to zero.
pub fn counit<S: Coeff>(engine: &Engine<S>, a: &Elem<S>) -> S {
    let mut acc = engine.s0();
    for (m, c) in &a.terms {
        if m.fword.is_empty() && m.eword.is_empty() {
            acc = acc.add(c);
        }
    }
    acc
}

/// Membership of the coproduct image in `I (x) A + A (x) I`: reduce both
/// legs and test for zero.
pub fn coproduct_in_ideal<S: Coeff>(engine: &Engine<S>, r: &Elem<S>) -> Result<bool> {
    let dd = coproduct(engine, r);
    Ok(dd.normal_form(engine)?.is_zero())
}
