//! Reflection isomorphisms between the presented algebras, their inverses,
//! the diagram-symmetry relabelings, and composites along braid words.
//!
//! A map is stored as a finite table of generator images. Well-definedness on
//! the quotient is not assumed here; the verification suites check that every
//! defining relation is preserved before the maps are used semantically.

use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::cartan::{
    bilin, mval, n_act, parity_simple, DiagramId, KleinElement, Weight,
};
use crate::coeff::{Coeff, HalfExponent};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::uqd::{qbracket, Elem, Monomial};
use crate::weyl::GroupoidWord;

/// Image of one `K^{1/2}` generator: a coefficient times a Cartan monomial.
#[derive(Clone, PartialEq, Debug)]
pub struct KImage<S: Coeff> {
    pub coeff: S,
    /// Doubled exponents of the target Cartan monomial.
    pub kw: [i32; 4],
    /// Doubled exponent of the grading character.
    pub klam: i32,
}

/// A generator-image table defining an algebra map between two diagrams.
#[derive(Clone, PartialEq, Debug)]
pub struct GenImages<S: Coeff> {
    pub source: DiagramId,
    pub target: DiagramId,
    pub sigma_img: Elem<S>,
    pub khalf: [KImage<S>; 4],
    pub e_img: [Elem<S>; 4],
    pub f_img: [Elem<S>; 4],
}

impl<S: Coeff> GenImages<S> {
    /// The identity table at one diagram.
    pub fn identity(engine: &Engine<S>, d: DiagramId) -> Self {
        let khalf = std::array::from_fn(|i| {
            let mut kw = [0i32; 4];
            kw[i] = 1;
            KImage {
                coeff: engine.s1(),
                kw,
                klam: 0,
            }
        });
        GenImages {
            source: d,
            target: d,
            sigma_img: Elem::sigma(engine, d),
            khalf,
            e_img: std::array::from_fn(|i| Elem::e(engine, d, i as u8)),
            f_img: std::array::from_fn(|i| Elem::f(engine, d, i as u8)),
        }
    }

    pub fn to_json(&self) -> Value {
        let kimg = |k: &KImage<S>| json!({"coeff": k.coeff.to_json(), "k": k.kw.to_vec(), "kLambda": k.klam});
        json!({
            "schema": "qdsup-map/1",
            "source": self.source.0,
            "target": self.target.0,
            "images": {
                "sigma": self.sigma_img.to_json(),
                "Khalf": self.khalf.iter().map(kimg).collect::<Vec<_>>(),
                "E": self.e_img.iter().map(|e| e.to_json()).collect::<Vec<_>>(),
                "F": self.f_img.iter().map(|e| e.to_json()).collect::<Vec<_>>(),
            }
        })
    }
}

impl<S: Coeff> fmt::Display for GenImages<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "map {} -> {}", self.source, self.target)?;
        writeln!(f, "  sigma -> {}", self.sigma_img)?;
        for i in 0..4 {
            let k = &self.khalf[i];
            writeln!(
                f,
                "  K{i}^(1/2) -> ({})*K[{},{},{},{}]/2 KL^{}/2",
                k.coeff, k.kw[0], k.kw[1], k.kw[2], k.kw[3], k.klam
            )?;
        }
        for i in 0..4 {
            writeln!(f, "  E{i} -> {}", self.e_img[i])?;
        }
        for i in 0..4 {
            writeln!(f, "  F{i} -> {}", self.f_img[i])?;
        }
        Ok(())
    }
}

/// Apply a generator table to an element (termwise product of images).
pub fn apply_images<S: Coeff>(
    engine: &Engine<S>,
    map: &GenImages<S>,
    a: &Elem<S>,
) -> Result<Elem<S>> {
    if a.d != map.source {
        return Err(Error::DiagramMismatch {
            expected: map.source.0,
            got: a.d.0,
        });
    }
    let mut out = Elem::zero(map.target);
    for (m, c) in &a.terms {
        let mut acc = Elem::one(engine, map.target);
        for &i in &m.fword {
            acc = acc.mul(engine, &map.f_img[i as usize]);
        }
        if m.sigma {
            acc = acc.mul(engine, &map.sigma_img);
        }
        if m.kw != [0; 4] || m.klam != 0 {
            let k = kblock_image(engine, map, m.kw, m.klam)?;
            let mut km = Monomial::unit();
            km.kw = k.kw;
            km.klam = k.klam;
            acc = acc.mul(engine, &Elem::single(map.target, km, k.coeff));
        }
        for &i in &m.eword {
            acc = acc.mul(engine, &map.e_img[i as usize]);
        }
        out = out.add(&acc.scale(c));
    }
    Ok(out)
}

/// Image of a Cartan block (doubled exponents) under a table.
fn kblock_image<S: Coeff>(
    engine: &Engine<S>,
    map: &GenImages<S>,
    kw: [i32; 4],
    klam: i32,
) -> Result<KImage<S>> {
    let mut coeff = engine.s1();
    let mut okw = [0i32; 4];
    // The grading character is fixed by every map in this crate.
    let mut oklam = klam;
    for i in 0..4 {
        let e = kw[i];
        if e == 0 {
            continue;
        }
        let ki = &map.khalf[i];
        if !ki.coeff.is_one(&engine.ctx) {
            coeff = coeff.mul(&engine.spow(&ki.coeff, e)?);
        }
        for t in 0..4 {
            okw[t] += e * ki.kw[t];
        }
        oklam += e * ki.klam;
    }
    Ok(KImage {
        coeff,
        kw: okw,
        klam: oklam,
    })
}

/// Compose two tables: `(outer o inner)(g) = outer(inner(g))`.
pub fn compose_maps<S: Coeff>(
    engine: &Engine<S>,
    outer: &GenImages<S>,
    inner: &GenImages<S>,
) -> Result<GenImages<S>> {
    if inner.target != outer.source {
        return Err(Error::DiagramMismatch {
            expected: outer.source.0,
            got: inner.target.0,
        });
    }
    let khalf: [KImage<S>; 4] = std::array::from_fn(|i| {
        let k = &inner.khalf[i];
        let mut out = kblock_image(engine, outer, k.kw, k.klam).expect("Cartan image");
        out.coeff = out.coeff.mul(&k.coeff);
        out
    });
    Ok(GenImages {
        source: inner.source,
        target: outer.target,
        sigma_img: apply_images(engine, outer, &inner.sigma_img)?,
        khalf,
        e_img: std::array::from_fn(|i| {
            apply_images(engine, outer, &inner.e_img[i]).expect("E image")
        }),
        f_img: std::array::from_fn(|i| {
            apply_images(engine, outer, &inner.f_img[i]).expect("F image")
        }),
    })
}

// ---------------------------------------------------------------------------
// The standard maps.
// ---------------------------------------------------------------------------

/// The Chevalley-type involution as a generator table (same diagram).
pub fn psi_map<S: Coeff>(engine: &Engine<S>, d: DiagramId) -> GenImages<S> {
    let khalf = std::array::from_fn(|i| {
        let mut kw = [0i32; 4];
        kw[i] = -1;
        KImage {
            coeff: engine.s1(),
            kw,
            klam: 0,
        }
    });
    GenImages {
        source: d,
        target: d,
        sigma_img: Elem::sigma(engine, d),
        khalf,
        e_img: std::array::from_fn(|i| {
            let sgn = if parity_simple(d, i as u8) == 1 {
                engine.si(-1)
            } else {
                engine.s1()
            };
            Elem::f(engine, d, i as u8).scale(&sgn)
        }),
        f_img: std::array::from_fn(|i| Elem::e(engine, d, i as u8)),
    }
}

/// Apply the involution directly to an element.
pub fn psi_auto<S: Coeff>(engine: &Engine<S>, a: &Elem<S>) -> Elem<S> {
    apply_images(engine, &psi_map(engine, a.d), a).expect("involution image")
}

/// The value whose inverse square root normalizes the mixed reflection
/// images: `(-1)^{p_i p_j} [ (alpha_i, alpha_j) ]_q`.
pub fn r_norm_value<S: Coeff>(engine: &Engine<S>, d: DiagramId, i: u8, j: u8) -> S {
    let pp = (parity_simple(d, i) & parity_simple(d, j)) as i32;
    let form = bilin(d, &Weight::simple(d, i), &Weight::simple(d, j)).expect("form");
    engine.msign(pp).mul(&engine.qn(form))
}

/// The fixed square-root normalizer `r_{i,j;d}`; errors when the form
/// vanishes on the pair.
pub fn r_value<S: Coeff>(engine: &Engine<S>, d: DiagramId, i: u8, j: u8) -> Result<S> {
    let rho = r_norm_value(engine, d, i, j);
    if rho.is_zero() {
        return Err(Error::Usage(format!(
            "r value undefined: form vanishes on ({i},{j}) at d={d}"
        )));
    }
    if rho.is_one(&engine.ctx) {
        return Ok(engine.s1());
    }
    let qx = engine.qn(HalfExponent::from_x_mult(1));
    if rho == qx {
        return engine.sa().inv();
    }
    let qx1n = engine.qn(HalfExponent::new(2, 2)).neg();
    if rho == qx1n {
        return engine.sb().inv();
    }
    Err(Error::Usage(format!(
        "unexpected normalizer value at (i={i}, j={j}, d={d})"
    )))
}

/// The sign `(-1)^{delta_ij + p_i p_j}` as an integer in `{1, -1}`.
pub fn eps_sign(d: DiagramId, i: u8, j: u8) -> i32 {
    let e = u8::from(i == j) + (parity_simple(d, i) & parity_simple(d, j));
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The reflection isomorphism `T_{i,d}` (plus) or `T^-_{i,d}` (minus).
pub fn t_map<S: Coeff>(
    engine: &Engine<S>,
    i: u8,
    d: DiagramId,
    plus: bool,
) -> Arc<GenImages<S>> {
    if let Some(hit) = engine.tmaps.get(&(i, d.0, plus)) {
        return hit.clone();
    }
    let map = Arc::new(build_t_map(engine, i, d, plus));
    engine
        .tmaps
        .entry((i, d.0, plus))
        .or_insert_with(|| map.clone())
        .clone()
}

fn build_t_map<S: Coeff>(engine: &Engine<S>, i: u8, d: DiagramId, plus: bool) -> GenImages<S> {
    let dt = n_act(i, d);
    let alpha = |u: u8| Weight::simple(dt, u);
    let form_t = |u: u8, v: u8| bilin(dt, &alpha(u), &alpha(v)).expect("form");
    let khalf: [KImage<S>; 4] = std::array::from_fn(|jj| {
        let j = jj as u8;
        let mut kw = [0i32; 4];
        if j == i {
            kw[i as usize] = -1;
        } else {
            kw[j as usize] = 1;
            kw[i as usize] = mval(i, j, d).unwrap() as i32 - 2;
        }
        KImage {
            coeff: engine.s1(),
            kw,
            klam: 0,
        }
    });
    let e_img: [Elem<S>; 4] = std::array::from_fn(|jj| {
        let j = jj as u8;
        if j == i {
            let aii = form_t(i, i);
            let pi = parity_simple(dt, i) as i32;
            if plus {
                // (-1)^{p} q^{-(a,a)/2} F_i K_i
                let mut m = Monomial::unit();
                m.fword.push(i);
                m.kw[i as usize] = 2;
                let c = engine
                    .msign(pi)
                    .mul(&engine.qp(aii.halve().expect("even form").neg()));
                Elem::single(dt, m, c)
            } else {
                // q^{-(a,a)/2} K_i^{-1} F_i, straightened into canonical shape
                let c = engine.qp(aii.halve().expect("even form").neg());
                let kinv = Elem::single(
                    dt,
                    {
                        let mut km = Monomial::unit();
                        km.kw[i as usize] = -2;
                        km
                    },
                    engine.s1(),
                );
                kinv.mul(engine, &Elem::f(engine, dt, i)).scale(&c)
            }
        } else if form_t(i, j).is_zero() {
            Elem::e(engine, dt, j)
        } else {
            let r = r_value(engine, d, i, j).expect("r value");
            let c = r.mul(&engine.qp(form_t(i, j).halve().expect("even form")));
            let br = if plus {
                qbracket(engine, &Elem::e(engine, dt, j), &Elem::e(engine, dt, i)).unwrap()
            } else {
                qbracket(engine, &Elem::e(engine, dt, i), &Elem::e(engine, dt, j)).unwrap()
            };
            br.scale(&c)
        }
    });
    let f_img: [Elem<S>; 4] = std::array::from_fn(|jj| {
        let j = jj as u8;
        if j == i {
            let aii = form_t(i, i);
            let pi = parity_simple(dt, i) as i32;
            if plus {
                // q^{(a,a)/2} K_i^{-1} E_i
                let mut m = Monomial::unit();
                m.kw[i as usize] = -2;
                m.eword.push(i);
                let c = engine.qp(aii.halve().expect("even form"));
                Elem::single(dt, m, c)
            } else {
                // (-1)^{p} q^{(a,a)/2} E_i K_i
                let c = engine
                    .msign(pi)
                    .mul(&engine.qp(aii.halve().expect("even form")));
                let ei = Elem::e(engine, dt, i);
                let ki = Elem::single(dt, {
                    let mut km = Monomial::unit();
                    km.kw[i as usize] = 2;
                    km
                }, engine.s1());
                ei.mul(engine, &ki).scale(&c)
            }
        } else if form_t(i, j).is_zero() {
            Elem::f(engine, dt, j)
        } else {
            let r = r_value(engine, d, i, j).expect("r value");
            let c = r.mul(&engine.qp(form_t(i, j).halve().expect("even form")));
            let br = if plus {
                qbracket(engine, &Elem::f(engine, dt, j), &Elem::f(engine, dt, i)).unwrap()
            } else {
                qbracket(engine, &Elem::f(engine, dt, i), &Elem::f(engine, dt, j)).unwrap()
            };
            br.scale(&c)
        }
    });
    GenImages {
        source: d,
        target: dt,
        sigma_img: Elem::sigma(engine, dt),
        khalf,
        e_img,
        f_img,
    }
}

/// The diagram-symmetry relabeling map.
pub fn tau_map<S: Coeff>(engine: &Engine<S>, f: KleinElement, d: DiagramId) -> GenImages<S> {
    let dt = f.per(d);
    let khalf = std::array::from_fn(|i| {
        let mut kw = [0i32; 4];
        kw[f.act(i as u8) as usize] = 1;
        KImage {
            coeff: engine.s1(),
            kw,
            klam: 0,
        }
    });
    GenImages {
        source: d,
        target: dt,
        sigma_img: Elem::sigma(engine, dt),
        khalf,
        e_img: std::array::from_fn(|i| Elem::e(engine, dt, f.act(i as u8))),
        f_img: std::array::from_fn(|i| Elem::f(engine, dt, f.act(i as u8))),
    }
}

/// The composite map along a braid word (letters act first to last, then the
/// Klein prefix).
pub fn ct_map<S: Coeff>(engine: &Engine<S>, w: &GroupoidWord) -> Result<GenImages<S>> {
    let (f, letters, source) = match w {
        GroupoidWord::Zero => return Err(Error::ZeroWord),
        GroupoidWord::Word {
            f,
            letters,
            source,
        } => (f, letters, source),
    };
    let mut acc = GenImages::identity(engine, *source);
    let mut d = *source;
    for &i in letters {
        let t = t_map(engine, i, d, true);
        acc = compose_maps(engine, &t, &acc)?;
        d = n_act(i, d);
    }
    if *f != KleinElement::F0 {
        let t = tau_map(engine, *f, d);
        acc = compose_maps(engine, &t, &acc)?;
    }
    Ok(acc)
}

/// The inverse of the composite along a braid word: minus-variant reflections
/// composed in reverse order after undoing the Klein prefix.
pub fn ct_map_inverse<S: Coeff>(engine: &Engine<S>, w: &GroupoidWord) -> Result<GenImages<S>> {
    let (f, letters, source) = match w {
        GroupoidWord::Zero => return Err(Error::ZeroWord),
        GroupoidWord::Word {
            f,
            letters,
            source,
        } => (f, letters, source),
    };
    // Diagram chain of the forward word.
    let mut chain = Vec::with_capacity(letters.len() + 1);
    let mut d = *source;
    chain.push(d);
    for &i in letters {
        d = n_act(i, d);
        chain.push(d);
    }
    let target = f.per(d);
    let mut acc = GenImages::identity(engine, target);
    if *f != KleinElement::F0 {
        let t = tau_map(engine, *f, target);
        acc = compose_maps(engine, &t, &acc)?;
    }
    for (idx, &i) in letters.iter().enumerate().rev() {
        // T_{i, chain[idx]} maps chain[idx] -> chain[idx+1]; its inverse is
        // the minus variant at chain[idx+1].
        let t = t_map(engine, i, chain[idx + 1], false);
        acc = compose_maps(engine, &t, &acc)?;
    }
    Ok(acc)
}

/// Cached composite along the lattice word (`forward = true`) or its inverse.
pub fn omega_map<S: Coeff>(
    engine: &Engine<S>,
    i: u8,
    d: DiagramId,
    forward: bool,
) -> Result<Arc<GenImages<S>>> {
    if let Some(hit) = engine.omega_maps.get(&(i, d.0, forward)) {
        return Ok(hit.clone());
    }
    let w = crate::weyl::omega(i, d)?;
    let map = if forward {
        ct_map(engine, &w)?
    } else {
        ct_map_inverse(engine, &w)?
    };
    let arc = Arc::new(map);
    engine
        .omega_maps
        .entry((i, d.0, forward))
        .or_insert_with(|| arc.clone())
        .clone();
    Ok(arc)
}

/// Apply a cached map with quotient reduction.
pub fn apply_map_nf<S: Coeff>(
    engine: &Engine<S>,
    map: &GenImages<S>,
    a: &Elem<S>,
) -> Result<Elem<S>> {
    engine.normal_form(&apply_images(engine, map, a)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Sym;
    use crate::engine::EngineConfig;
    use crate::uqd::sbracket;

    fn eng() -> Engine<Sym> {
        Engine::symbolic(EngineConfig::default())
    }

    #[test]
    fn r_values_square_to_the_normalizer_inverse() {
        let e = eng();
        for d in DiagramId::ALL {
            for i in 0..4u8 {
                for j in 0..4u8 {
                    if i == j {
                        continue;
                    }
                    let rho = r_norm_value(&e, d, i, j);
                    if rho.is_zero() {
                        continue;
                    }
                    let r = r_value(&e, d, i, j).unwrap();
                    assert_eq!(r.mul(&r).mul(&rho), e.s1(), "r^2 rho != 1 at ({i},{j},{d})");
                    // transport invariance of the normalizer
                    let dt = n_act(i, d);
                    assert_eq!(rho, r_norm_value(&e, dt, i, j));
                    assert_eq!(rho, r_norm_value(&e, d, j, i));
                }
            }
        }
    }

    #[test]
    fn t_map_examples() {
        let e = eng();
        let d4 = DiagramId(4);
        let t = t_map(&e, 1, d4, true);
        // T(E_1) = -F_1 K_1 at the target diagram 1.
        let mut m = Monomial::unit();
        m.fword.push(1);
        m.kw[1] = 2;
        assert_eq!(t.e_img[1], Elem::single(DiagramId(1), m, e.si(-1)));
        // T(K_2^{1/2}) = K_2^{1/2} K_1^{1/2}
        assert_eq!(t.khalf[2].kw, [0, 1, 1, 0]);
        assert_eq!(t.khalf[1].kw, [0, -1, 0, 0]);
    }

    /// Mixed-bracket identities between single E.F brackets and the opposite
    /// generators, exact in the free presentation.
    #[test]
    fn bracket_lemma_holds_freely() {
        let e = eng();
        for d in DiagramId::ALL {
            for i in 0..4u8 {
                for j in 0..4u8 {
                    if i == j {
                        continue;
                    }
                    let al = |u: u8| Weight::simple(d, u);
                    let form = bilin(d, &al(i), &al(j)).unwrap();
                    let pp = (parity_simple(d, i) & parity_simple(d, j)) as i32;
                    let ei = Elem::e(&e, d, i);
                    let ej = Elem::e(&e, d, j);
                    let fi = Elem::f(&e, d, i);
                    let fj = Elem::f(&e, d, j);
                    let ki = |n: i32| Elem::khalf_pow(&e, d, i, 2 * n);
                    let kj = |n: i32| Elem::khalf_pow(&e, d, j, 2 * n);
                    // [ [[E_j, E_i]], F_i ] = -[(a_i,a_j)] K_i^{-1} E_j
                    let lhs = sbracket(&e, &qbracket(&e, &ej, &ei).unwrap(), &fi).unwrap();
                    let rhs = ki(-1).mul(&e, &ej).scale(&e.qn(form).neg());
                    assert!(lhs.sub(&rhs).is_zero(), "first identity at (i={i},j={j},d={d})");
                    // [ [[E_j, E_i]], F_j ] = (-1)^{pp} [(a_i,a_j)] E_i K_j
                    let lhs = sbracket(&e, &qbracket(&e, &ej, &ei).unwrap(), &fj).unwrap();
                    let rhs = ei
                        .mul(&e, &kj(1))
                        .scale(&e.msign(pp).mul(&e.qn(form)));
                    assert!(lhs.sub(&rhs).is_zero(), "second identity at (i={i},j={j},d={d})");
                    // [ E_i, [[F_j, F_i]] ] = (-1)^{pp} [(a_i,a_j)] K_i F_j
                    let lhs = sbracket(&e, &ei, &qbracket(&e, &fj, &fi).unwrap()).unwrap();
                    let rhs = ki(1)
                        .mul(&e, &fj)
                        .scale(&e.msign(pp).mul(&e.qn(form)));
                    assert!(lhs.sub(&rhs).is_zero(), "third identity at (i={i},j={j},d={d})");
                    // [ E_j, [[F_j, F_i]] ] = -[(a_i,a_j)] F_i K_j^{-1}
                    let lhs = sbracket(&e, &ej, &qbracket(&e, &fj, &fi).unwrap()).unwrap();
                    let rhs = fi.mul(&e, &kj(-1)).scale(&e.qn(form).neg());
                    assert!(lhs.sub(&rhs).is_zero(), "fourth identity at (i={i},j={j},d={d})");
                    // [ [[E_j,E_i]], [[F_j,F_i]] ] =
                    //   (-1)^{pp} q^{-(ai,aj)} [(ai,aj)] (K_i K_j - K_i^{-1}K_j^{-1})/(q-q^{-1})
                    let lhs = sbracket(
                        &e,
                        &qbracket(&e, &ej, &ei).unwrap(),
                        &qbracket(&e, &fj, &fi).unwrap(),
                    )
                    .unwrap();
                    let qd = e
                        .qp(HalfExponent::from_int(1))
                        .sub(&e.qp(HalfExponent::from_int(-1)));
                    let kk = ki(1).mul(&e, &kj(1)).sub(&ki(-1).mul(&e, &kj(-1)));
                    let rhs = kk.scale(
                        &e.msign(pp)
                            .mul(&e.qp(form.neg()))
                            .mul(&e.qn(form))
                            .mul(&qd.inv().unwrap()),
                    );
                    assert!(lhs.sub(&rhs).is_zero(), "fifth identity at (i={i},j={j},d={d})");
                }
            }
        }
    }

    /// One full well-definedness check: every defining relation of the source
    /// maps to zero in the target quotient.
    #[test]
    fn t_map_well_defined_one_case() {
        let e = eng();
        let d4 = DiagramId(4);
        let t = t_map(&e, 2, d4, true);
        let report = crate::suites::welldefined_violations(&e, &t).unwrap();
        assert!(report.is_empty(), "violations: {report:?}");
    }

    #[test]
    fn t_round_trip_and_involution_intertwining() {
        let e = eng();
        let d4 = DiagramId(4);
        for i in 0..4u8 {
            let fwd = t_map(&e, i, d4, true);
            let bwd = t_map(&e, i, n_act(i, d4), false);
            let comp = compose_maps(&e, &bwd, &fwd).unwrap();
            let id = GenImages::identity(&e, d4);
            for g in 0..4usize {
                assert!(
                    e.normal_form(&comp.e_img[g].sub(&id.e_img[g])).unwrap().is_zero(),
                    "round trip fails on E{g} via i={i}"
                );
                assert!(
                    e.normal_form(&comp.f_img[g].sub(&id.f_img[g])).unwrap().is_zero(),
                    "round trip fails on F{g} via i={i}"
                );
                assert_eq!(comp.khalf[g], id.khalf[g], "round trip fails on K{g}");
            }
            // Psi T = T Psi on generators.
            let psi_s = psi_map(&e, d4);
            let psi_t = psi_map(&e, n_act(i, d4));
            let a = compose_maps(&e, &psi_t, &fwd).unwrap();
            let b = compose_maps(&e, &fwd, &psi_s).unwrap();
            for g in 0..4usize {
                assert!(
                    e.normal_form(&a.e_img[g].sub(&b.e_img[g])).unwrap().is_zero(),
                    "intertwining fails on E{g} via i={i}"
                );
                assert!(
                    e.normal_form(&a.f_img[g].sub(&b.f_img[g])).unwrap().is_zero(),
                    "intertwining fails on F{g} via i={i}"
                );
            }
        }
    }
}
