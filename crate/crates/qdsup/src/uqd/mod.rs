//! The presented algebras attached to each Dynkin diagram: canonical
//! triangular normal forms, straightening multiplication, super/q-brackets,
//! the Chevalley involution, Serre generators, and graded ideal reduction.
//!
//! Elements are finite scalar combinations of monomials `F-word · sigma^s ·
//! Cartan monomial · E-word`. Multiplication straightens only across the
//! triangle: the sign generator and Cartan monomials move inward collecting
//! factors, and every E-letter left of an F-letter is rewritten through the
//! mixed commutation relation. E-words and F-words are never reordered
//! internally; all further collapsing happens in the quotient reduction.

pub mod ideal;
pub mod tensor;

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::cartan::{bilin, parity, parity_simple, DiagramId, Weight};
use crate::coeff::{Coeff, HalfExponent};
use crate::engine::Engine;
use crate::error::{Error, Result};

/// Canonical normal-form monomial of the triangular decomposition.
///
/// `kw` stores doubled Cartan exponents (entry `i` is the power of
/// `K_i^{1/2}`), and `klam` the doubled power of the grading character
/// `K_{Lambda_0}^{1/2}` of the smash extension (zero outside it).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    pub fword: Vec<u8>,
    pub sigma: bool,
    pub kw: [i32; 4],
    pub klam: i32,
    pub eword: Vec<u8>,
}

impl Monomial {
    pub fn unit() -> Monomial {
        Monomial::default()
    }

    pub fn is_unit(&self) -> bool {
        *self == Monomial::default()
    }

    /// Grading degree: sum of E-letter roots minus sum of F-letter roots.
    pub fn degree(&self, d: DiagramId) -> Weight {
        let mut coords = [0i32; 4];
        for &i in &self.eword {
            coords[i as usize] += 2;
        }
        for &i in &self.fword {
            coords[i as usize] -= 2;
        }
        Weight { d, coords }
    }
}

/// Weight of a one-sided letter word (doubled coordinates, always even).
pub fn word_weight(d: DiagramId, word: &[u8]) -> Weight {
    let mut coords = [0i32; 4];
    for &i in word {
        coords[i as usize] += 2;
    }
    Weight { d, coords }
}

fn word_parity(d: DiagramId, word: &[u8]) -> u8 {
    let mut p = 0u8;
    for &i in word {
        p ^= parity_simple(d, i);
    }
    p
}

/// Finite scalar-linear combination of normal-form monomials.
#[derive(Clone, PartialEq, Debug)]
pub struct Elem<S: Coeff> {
    pub d: DiagramId,
    pub terms: BTreeMap<Monomial, S>,
}

/// Generator selector for [`Elem::gen`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Gen {
    E(u8),
    F(u8),
    /// `K_mu^{1/2}`-type Cartan monomial for a (half-integral) weight given
    /// through doubled coordinates.
    Khalf([i32; 4]),
    Sigma,
    /// `K_{Lambda_0}` power with doubled exponent.
    KLambdaHalf(i32),
}

impl<S: Coeff> Elem<S> {
    pub fn zero(d: DiagramId) -> Elem<S> {
        Elem {
            d,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(engine: &Engine<S>, d: DiagramId) -> Elem<S> {
        Elem::single(d, Monomial::unit(), engine.s1())
    }

    pub fn single(d: DiagramId, m: Monomial, c: S) -> Elem<S> {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Elem { d, terms }
    }

    /// A single generator in canonical shape.
    pub fn gen(engine: &Engine<S>, d: DiagramId, g: Gen) -> Elem<S> {
        let mut m = Monomial::unit();
        match g {
            Gen::E(i) => m.eword.push(i),
            Gen::F(i) => m.fword.push(i),
            Gen::Khalf(kw) => m.kw = kw,
            Gen::Sigma => m.sigma = true,
            Gen::KLambdaHalf(l) => m.klam = l,
        }
        Elem::single(d, m, engine.s1())
    }

    /// `E_{i,d}` as an element.
    pub fn e(engine: &Engine<S>, d: DiagramId, i: u8) -> Elem<S> {
        Elem::gen(engine, d, Gen::E(i))
    }
    /// `F_{i,d}` as an element.
    pub fn f(engine: &Engine<S>, d: DiagramId, i: u8) -> Elem<S> {
        Elem::gen(engine, d, Gen::F(i))
    }
    /// `K_{i,d}^{n/2}` as an element.
    pub fn khalf_pow(engine: &Engine<S>, d: DiagramId, i: u8, n: i32) -> Elem<S> {
        let mut kw = [0i32; 4];
        kw[i as usize] = n;
        Elem::gen(engine, d, Gen::Khalf(kw))
    }
    /// `K_{mu,d}` for an integral weight `mu` (doubled coordinates).
    pub fn kweight(engine: &Engine<S>, d: DiagramId, mu: &Weight) -> Elem<S> {
        debug_assert_eq!(mu.d, d);
        Elem::gen(engine, d, Gen::Khalf(mu.coords))
    }
    pub fn sigma(engine: &Engine<S>, d: DiagramId) -> Elem<S> {
        Elem::gen(engine, d, Gen::Sigma)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn check(&self, o: &Elem<S>) -> Result<()> {
        if self.d != o.d {
            return Err(Error::DiagramMismatch {
                expected: self.d.0,
                got: o.d.0,
            });
        }
        Ok(())
    }

    pub(crate) fn insert_add(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    pub fn add(&self, o: &Elem<S>) -> Elem<S> {
        self.check(o).expect("diagram mismatch in add");
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Elem<S>) -> Elem<S> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Elem<S> {
        Elem {
            d: self.d,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Elem<S> {
        if c.is_zero() {
            return Elem::zero(self.d);
        }
        Elem {
            d: self.d,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.mul(c)))
                .collect(),
        }
    }

    /// Straightening product in the free presentation.
    pub fn mul(&self, engine: &Engine<S>, o: &Elem<S>) -> Elem<S> {
        self.check(o).expect("diagram mismatch in mul");
        let mut out = Elem::zero(self.d);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                rmul_monomial(engine, self.d, m1, &c1.mul(c2), m2, &mut out);
            }
        }
        out
    }

    /// The grading degree when homogeneous.
    pub fn degree(&self) -> Result<Weight> {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Ok(Weight::zero(self.d)),
            Some(m) => m.degree(self.d),
        };
        for m in it {
            if m.degree(self.d) != first {
                return Err(Error::NotHomogeneous(format!("{self}")));
            }
        }
        Ok(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree().is_ok()
    }

    /// Split into homogeneous components, keyed by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<Weight, Elem<S>> {
        let mut out: BTreeMap<Weight, Elem<S>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let w = m.degree(self.d);
            out.entry(w)
                .or_insert_with(|| Elem::zero(self.d))
                .insert_add(m.clone(), c.clone());
        }
        out
    }

    /// The component of one degree.
    pub fn component(&self, w: &Weight) -> Elem<S> {
        let mut out = Elem::zero(self.d);
        for (m, c) in &self.terms {
            if m.degree(self.d) == *w {
                out.insert_add(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                json!({
                    "f": m.fword.clone(),
                    "sigma": u8::from(m.sigma),
                    "k": m.kw.to_vec(),
                    "kLambda": m.klam,
                    "e": m.eword.clone(),
                    "coeff": c.to_json(),
                })
            })
            .collect();
        json!({"schema": "qdsup-elem/1", "d": self.d.0, "terms": terms})
    }
}

// ---------------------------------------------------------------------------
// Straightening.
// ---------------------------------------------------------------------------

/// `chi(mu)`: the coefficient of `alpha_0`, the grading character exponent.
fn chi_of_word(word: &[u8]) -> i32 {
    word.iter().filter(|&&i| i == 0).count() as i32
}

/// Multiply the canonical monomial `m1` (with coefficient `c`) by `m2` on the
/// right, accumulating into `out`.
fn rmul_monomial<S: Coeff>(
    engine: &Engine<S>,
    d: DiagramId,
    m1: &Monomial,
    c: &S,
    m2: &Monomial,
    out: &mut Elem<S>,
) {
    // Worklist of partially straightened terms.
    let mut acc: Vec<(Monomial, S)> = vec![(m1.clone(), c.clone())];
    for &b in &m2.fword {
        let mut next = Vec::with_capacity(acc.len());
        for (m, k) in acc {
            rmul_f(engine, d, m, k, b, &mut next);
        }
        acc = next;
    }
    if m2.sigma {
        for (m, k) in &mut acc {
            let p = word_parity(d, &m.eword);
            if p == 1 {
                *k = k.neg();
            }
            m.sigma ^= true;
        }
    }
    if m2.kw != [0; 4] || m2.klam != 0 {
        for (m, k) in &mut acc {
            // K_nu and the grading character cross the E-word leftwards.
            let wt_e = word_weight(d, &m.eword);
            let nu = Weight {
                d,
                coords: m2.kw,
            };
            let mut exp = bilin(d, &nu, &wt_e).expect("bilinear form").neg();
            exp = exp.add(HalfExponent::new(-m2.klam * chi_of_word(&m.eword), 0));
            if !exp.is_zero() {
                *k = k.mul(&engine.qp(exp));
            }
            for t in 0..4 {
                m.kw[t] += m2.kw[t];
            }
            m.klam += m2.klam;
        }
    }
    if !m2.eword.is_empty() {
        for (m, _) in &mut acc {
            m.eword.extend_from_slice(&m2.eword);
        }
    }
    for (m, k) in acc {
        out.insert_add(m, k);
    }
}

/// Multiply one canonical monomial by `F_b` on the right.
///
/// The F-letter crosses the E-word through `E_a F_b = (-1)^{p_a p_b} F_b E_a
/// + delta_{ab} (K_a - K_a^{-1})/(q - q^{-1})`, then the Cartan block and the
/// sign generator, and lands at the end of the F-word.
fn rmul_f<S: Coeff>(
    engine: &Engine<S>,
    d: DiagramId,
    m: Monomial,
    c: S,
    b: u8,
    out: &mut Vec<(Monomial, S)>,
) {
    let pb = parity_simple(d, b);
    let u = &m.eword;
    let n = u.len();
    // delta-terms: position t from the right; F_b has crossed u[t+1..].
    let mut sign_after = 0u8; // parity weight of crossed letters times p_b
    let qdiff_inv = {
        // 1/(q - q^{-1})
        let q = engine.qp(HalfExponent::from_int(1));
        let qi = engine.qp(HalfExponent::from_int(-1));
        q.sub(&qi).inv().expect("q - q^-1 invertible")
    };
    for t in (0..n).rev() {
        let a = u[t];
        if a == b {
            // coefficient so far: (-1)^{sign_after}
            let base = if sign_after == 1 { c.neg() } else { c.clone() };
            let prefix = &u[..t];
            let suffix = &u[t + 1..];
            let wt_prefix = word_weight(d, prefix);
            let alpha_b = Weight::simple(d, b);
            // + K_b term and - K_b^{-1} term, each crossing the prefix.
            for sgn in [1i32, -1i32] {
                let cross = bilin(d, &alpha_b, &wt_prefix)
                    .expect("bilinear form")
                    .scale(-sgn);
                let mut coeff = base.mul(&qdiff_inv);
                if sgn < 0 {
                    coeff = coeff.neg();
                }
                if !cross.is_zero() {
                    coeff = coeff.mul(&engine.qp(cross));
                }
                let mut mm = m.clone();
                mm.kw[b as usize] += 2 * sgn;
                mm.eword = prefix.iter().chain(suffix.iter()).copied().collect();
                out.push((mm, coeff));
            }
        }
        sign_after ^= parity_simple(d, a) & pb;
    }
    // Full crossing: F_b passes the whole E-word, the Cartan block, sigma.
    let mut coeff = if sign_after == 1 { c.neg() } else { c };
    let kwt = Weight { d, coords: m.kw };
    let alpha_b = Weight::simple(d, b);
    let mut exp = bilin(d, &kwt, &alpha_b).expect("bilinear form").neg();
    // K_{Lambda_0}^{klam/2} F_b picks q^{-(klam/2) chi(alpha_b)}.
    if b == 0 {
        exp = exp.add(HalfExponent::new(-m.klam, 0));
    }
    if !exp.is_zero() {
        coeff = coeff.mul(&engine.qp(exp));
    }
    if m.sigma && pb == 1 {
        coeff = coeff.neg();
    }
    let mut mm = m;
    mm.fword.push(b);
    out.push((mm, coeff));
}

// ---------------------------------------------------------------------------
// Brackets.
// ---------------------------------------------------------------------------

/// Which twist the bracket uses.
pub enum BracketTwist<S> {
    /// Plain super-bracket `[X, Y] = XY - (-1)^{p p'} YX`.
    Super,
    /// `q`-super-bracket with twist `q^{-(mu, lambda)}`.
    QForm,
    /// Arbitrary scalar twist.
    Scalar(S),
}

/// Generalized bracket `[a, b]_c = ab - (-1)^{p(mu) p(lambda)} c ba`, taken
/// termwise over homogeneous components of both arguments.
pub fn bracket<S: Coeff>(
    engine: &Engine<S>,
    a: &Elem<S>,
    b: &Elem<S>,
    twist: &BracketTwist<S>,
) -> Result<Elem<S>> {
    let d = a.d;
    if b.d != d {
        return Err(Error::DiagramMismatch {
            expected: d.0,
            got: b.d.0,
        });
    }
    let mut out = Elem::zero(d);
    for (mu, am) in a.homogeneous_components() {
        for (la, bm) in b.homogeneous_components() {
            let pm = parity(d, &mu)? as i32;
            let pl = parity(d, &la)? as i32;
            let fwd = am.mul(engine, &bm);
            let mut back = bm.mul(engine, &am);
            match twist {
                BracketTwist::Super => {}
                BracketTwist::QForm => {
                    let e = bilin(d, &mu, &la)?.neg();
                    if !e.is_zero() {
                        back = back.scale(&engine.qp(e));
                    }
                }
                BracketTwist::Scalar(c) => {
                    back = back.scale(c);
                }
            }
            if (pm * pl) % 2 == 1 {
                back = back.neg();
            }
            out = out.add(&fwd.sub(&back));
        }
    }
    Ok(out)
}

/// Super-bracket `[a, b]`.
pub fn sbracket<S: Coeff>(engine: &Engine<S>, a: &Elem<S>, b: &Elem<S>) -> Result<Elem<S>> {
    bracket(engine, a, b, &BracketTwist::Super)
}

/// `q`-super-bracket.
pub fn qbracket<S: Coeff>(engine: &Engine<S>, a: &Elem<S>, b: &Elem<S>) -> Result<Elem<S>> {
    bracket(engine, a, b, &BracketTwist::QForm)
}

/// Bracket with an explicit scalar twist.
pub fn bracket_a<S: Coeff>(
    engine: &Engine<S>,
    a: &Elem<S>,
    b: &Elem<S>,
    c: &S,
) -> Result<Elem<S>> {
    bracket(engine, a, b, &BracketTwist::Scalar(c.clone()))
}

// ---------------------------------------------------------------------------
// Serre generators.
// ---------------------------------------------------------------------------

/// Labeled Serre generators of the defining ideal: the E-side families and
/// their images under the Chevalley involution (the F side).
pub fn serre_generators<S: Coeff>(
    engine: &Engine<S>,
    d: DiagramId,
) -> std::sync::Arc<Vec<(String, Elem<S>)>> {
    if let Some(hit) = engine.serre_cache.get(&d.0) {
        return hit.clone();
    }
    let mut gens: Vec<(String, Elem<S>)> = Vec::new();
    for (label, g) in serre_e_generators(engine, d) {
        gens.push((label, g));
    }
    let psi = crate::lusztig::psi_map(engine, d);
    let e_side: Vec<(String, Elem<S>)> = gens.clone();
    for (label, g) in e_side {
        let img = crate::lusztig::apply_images(engine, &psi, &g).expect("involution image");
        gens.push((format!("psi({label})"), img));
    }
    let arc = std::sync::Arc::new(gens);
    engine.serre_cache.insert(d.0, arc.clone());
    arc
}

/// The E-side Serre generators only (pure E-words).
pub fn serre_e_generators<S: Coeff>(
    engine: &Engine<S>,
    d: DiagramId,
) -> Vec<(String, Elem<S>)> {
    let mut out = Vec::new();
    let e = |i: u8| Elem::e(engine, d, i);
    let form = |i: u8, j: u8| {
        bilin(d, &Weight::simple(d, i), &Weight::simple(d, j)).expect("form value")
    };
    // Squares of odd generators.
    for i in 0..4u8 {
        if parity_simple(d, i) == 1 {
            out.push((
                format!("Ur6[i={i},d={d}]"),
                e(i).mul(engine, &e(i)),
            ));
        }
    }
    // Orthogonal pairs.
    for i in 0..4u8 {
        for j in (i + 1)..4u8 {
            if form(i, j).is_zero() {
                out.push((
                    format!("Ur7[i={i},j={j},d={d}]"),
                    qbracket(engine, &e(i), &e(j)).expect("bracket"),
                ));
            }
        }
    }
    // Even generators against connected neighbors.
    for i in 0..4u8 {
        if parity_simple(d, i) != 0 {
            continue;
        }
        for j in 0..4u8 {
            if i == j || form(i, j).is_zero() {
                continue;
            }
            let inner = qbracket(engine, &e(i), &e(j)).expect("bracket");
            out.push((
                format!("Ur8[i={i},j={j},d={d}]"),
                qbracket(engine, &e(i), &inner).expect("bracket"),
            ));
        }
    }
    if d.0 == 4 {
        // Distinguished diagram: one relation per vertex triple.
        for i in 0..4u8 {
            for j in (i + 1)..4u8 {
                for k in (j + 1)..4u8 {
                    let br = |a: u8, b: u8, c: u8| {
                        let t = qbracket(engine, &e(a), &e(b)).expect("bracket");
                        qbracket(engine, &t, &e(c)).expect("bracket")
                    };
                    let lhs = br(i, j, k).scale(&engine.qn(form(i, k)));
                    let rhs = br(i, k, j).scale(&engine.qn(form(i, j)));
                    out.push((format!("Ur9[i={i},j={j},k={k},d={d}]"), lhs.sub(&rhs)));
                }
            }
        }
    } else {
        // One relation through the odd vertex of the diagram.
        let dv = d.0;
        let others: Vec<u8> = (0..4u8).filter(|&t| t != dv).collect();
        let (i, j, k) = (others[0], others[1], others[2]);
        let ad = |t: u8| {
            qbracket(engine, &e(dv), &e(t)).expect("bracket")
        };
        let pair = |a: &Elem<S>, b: &Elem<S>| qbracket(engine, a, b).expect("bracket");
        let coeff = |t: u8, u: u8| {
            let alpha_d = Weight::simple(d, dv);
            let wt = Weight::simple(d, t).add(&alpha_d).unwrap();
            let wu = Weight::simple(d, u).add(&alpha_d).unwrap();
            engine.qn(bilin(d, &wt, &wu).expect("form value"))
        };
        let lhs = pair(&pair(&ad(i), &ad(j)), &ad(k)).scale(&coeff(i, k));
        let rhs = pair(&pair(&ad(i), &ad(k)), &ad(j)).scale(&coeff(i, j));
        out.push((format!("Ur10[i={i},j={j},k={k},d={d}]"), lhs.sub(&rhs)));
    }
    out
}

// ---------------------------------------------------------------------------
// Normal form in the quotient.
// ---------------------------------------------------------------------------

impl<S: Coeff> Engine<S> {
    /// The canonical representative in the quotient: every monomial's E-word
    /// and F-word are rewritten modulo the respective one-sided ideals.
    pub fn normal_form(&self, a: &Elem<S>) -> Result<Elem<S>> {
        let rw = self.rewriter(a.d);
        let mut out = Elem::zero(a.d);
        for (m, c) in &a.terms {
            let enf = rw.reduce_word(self, &m.eword)?;
            let fnf = rw.reduce_word(self, &m.fword)?;
            for (ew, ec) in enf.iter() {
                for (fw, fc) in fnf.iter() {
                    let mut mm = m.clone();
                    mm.eword = ew.clone();
                    mm.fword = fw.clone();
                    out.insert_add(mm, c.mul(ec).mul(fc));
                }
            }
        }
        Ok(out)
    }

    /// Zero test in the quotient.
    pub fn is_zero_uq(&self, a: &Elem<S>) -> Result<bool> {
        Ok(self.normal_form(a)?.is_zero())
    }

    /// Product followed by quotient reduction.
    pub fn mul_nf(&self, a: &Elem<S>, b: &Elem<S>) -> Result<Elem<S>> {
        self.normal_form(&a.mul(self, b))
    }
}

// ---------------------------------------------------------------------------
// Display.
// ---------------------------------------------------------------------------

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for &i in &self.fword {
            if wrote {
                write!(f, " ")?;
            }
            write!(f, "F{i}")?;
            wrote = true;
        }
        if self.sigma {
            if wrote {
                write!(f, " ")?;
            }
            write!(f, "sig")?;
            wrote = true;
        }
        if self.kw != [0; 4] {
            if wrote {
                write!(f, " ")?;
            }
            write!(
                f,
                "K[{}/2,{}/2,{}/2,{}/2]",
                self.kw[0], self.kw[1], self.kw[2], self.kw[3]
            )?;
            wrote = true;
        }
        if self.klam != 0 {
            if wrote {
                write!(f, " ")?;
            }
            write!(f, "KL^{}/2", self.klam)?;
            wrote = true;
        }
        for &i in &self.eword {
            if wrote {
                write!(f, " ")?;
            }
            write!(f, "E{i}")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl<S: Coeff> fmt::Display for Elem<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 @{}", self.d);
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({c})·{m}")?;
            first = false;
        }
        write!(f, " @{}", self.d)
    }
}

#[cfg(test)]
mod tests;
