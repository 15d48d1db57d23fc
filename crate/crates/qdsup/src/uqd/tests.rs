use super::*;
use crate::coeff::Sym;
use crate::engine::{Engine, EngineConfig};

fn eng() -> Engine<Sym> {
    Engine::symbolic(EngineConfig::default())
}

fn d4() -> DiagramId {
    DiagramId(4)
}

#[test]
fn sigma_squares_to_one() {
    let e = eng();
    let s = Elem::sigma(&e, d4());
    assert_eq!(s.mul(&e, &s), Elem::one(&e, d4()));
}

#[test]
fn one_is_neutral() {
    let e = eng();
    let a = Elem::e(&e, d4(), 1).mul(&e, &Elem::f(&e, d4(), 2));
    assert_eq!(Elem::one(&e, d4()).mul(&e, &a), a);
    assert_eq!(a.mul(&e, &Elem::one(&e, d4())), a);
}

#[test]
fn mixed_commutation_same_index() {
    // E_1 F_1 = -F_1 E_1 + (K_1 - K_1^{-1})/(q - q^{-1}) at the all-odd diagram.
    let e = eng();
    let prod = Elem::e(&e, d4(), 1).mul(&e, &Elem::f(&e, d4(), 1));
    let mut expect = Elem::zero(d4());
    let mut m = Monomial::unit();
    m.fword.push(1);
    m.eword.push(1);
    expect.insert_add(m, e.si(-1));
    let qd = e
        .qp(HalfExponent::from_int(1))
        .sub(&e.qp(HalfExponent::from_int(-1)));
    let mut kp = Monomial::unit();
    kp.kw[1] = 2;
    expect.insert_add(kp, qd.inv().unwrap());
    let mut km = Monomial::unit();
    km.kw[1] = -2;
    expect.insert_add(km, qd.inv().unwrap().neg());
    assert_eq!(prod, expect);
}

#[test]
fn mixed_commutation_distinct_indices() {
    // E_1 F_2 = -F_2 E_1 at the all-odd diagram (both odd, no delta term).
    let e = eng();
    let prod = Elem::e(&e, d4(), 1).mul(&e, &Elem::f(&e, d4(), 2));
    let mut m = Monomial::unit();
    m.fword.push(2);
    m.eword.push(1);
    assert_eq!(prod, Elem::single(d4(), m, e.si(-1)));
}

#[test]
fn cartan_straightening() {
    // E_2 * K_1^{1/2} = q^{-(a1,a2)/2} K_1^{1/2} E_2
    let e = eng();
    let prod = Elem::e(&e, d4(), 2).mul(&e, &Elem::khalf_pow(&e, d4(), 1, 1));
    let mut m = Monomial::unit();
    m.kw[1] = 1;
    m.eword.push(2);
    let c = e.qp(
        bilin(d4(), &Weight::simple(d4(), 1), &Weight::simple(d4(), 2))
            .unwrap()
            .halve()
            .unwrap()
            .neg(),
    );
    assert_eq!(prod, Elem::single(d4(), m, c));
}

#[test]
fn sigma_straightening() {
    // E_1 sigma = -sigma E_1 at the all-odd diagram.
    let e = eng();
    let prod = Elem::e(&e, d4(), 1).mul(&e, &Elem::sigma(&e, d4()));
    let mut m = Monomial::unit();
    m.sigma = true;
    m.eword.push(1);
    assert_eq!(prod, Elem::single(d4(), m, e.si(-1)));
}

#[test]
fn associativity_spot_checks() {
    let e = eng();
    let gens = [
        Elem::e(&e, d4(), 0),
        Elem::f(&e, d4(), 1),
        Elem::e(&e, d4(), 2),
        Elem::f(&e, d4(), 0),
        Elem::sigma(&e, d4()),
        Elem::khalf_pow(&e, d4(), 3, -1),
    ];
    for a in &gens {
        for b in &gens {
            for c in &gens {
                let l = a.mul(&e, b).mul(&e, c);
                let r = a.mul(&e, &b.mul(&e, c));
                assert_eq!(l, r, "associativity failed");
            }
        }
    }
}

#[test]
fn grading_additivity() {
    let e = eng();
    let a = Elem::e(&e, d4(), 1).mul(&e, &Elem::e(&e, d4(), 2));
    let b = Elem::f(&e, d4(), 3);
    let ab = a.mul(&e, &b);
    assert_eq!(
        ab.degree().unwrap(),
        a.degree().unwrap().add(&b.degree().unwrap()).unwrap()
    );
}

#[test]
fn qbracket_of_equal_odd_generators_doubles() {
    // p = 1 and (a1, a1) = 0 at the all-odd diagram: [[E1, E1]] = 2 E1^2.
    let e = eng();
    let e1 = Elem::e(&e, d4(), 1);
    let got = qbracket(&e, &e1, &e1).unwrap();
    let expect = e1.mul(&e, &e1).scale(&e.si(2));
    assert_eq!(got, expect);
}

#[test]
fn cartan_brackets_vanish() {
    let e = eng();
    let k1 = Elem::khalf_pow(&e, d4(), 1, 2);
    let k2 = Elem::khalf_pow(&e, d4(), 2, 2);
    assert!(sbracket(&e, &k1, &k2).unwrap().is_zero());
}

#[test]
fn involution_examples() {
    use crate::lusztig::psi_auto;
    let e = eng();
    // Psi(E_1) = -F_1 at the all-odd diagram.
    let got = psi_auto(&e, &Elem::e(&e, d4(), 1));
    assert_eq!(got, Elem::f(&e, d4(), 1).scale(&e.si(-1)));
    // Psi(1) = 1
    assert_eq!(psi_auto(&e, &Elem::one(&e, d4())), Elem::one(&e, d4()));
    // Psi^2(X) = sigma X sigma on a few elements.
    let s = Elem::sigma(&e, d4());
    for a in [
        Elem::e(&e, d4(), 1),
        Elem::f(&e, d4(), 0).mul(&e, &Elem::e(&e, d4(), 2)),
        Elem::e(&e, d4(), 3).mul(&e, &Elem::khalf_pow(&e, d4(), 0, 1)),
    ] {
        let twice = psi_auto(&e, &psi_auto(&e, &a));
        let conj = s.mul(&e, &a).mul(&e, &s);
        assert_eq!(twice, conj);
    }
}

#[test]
fn serre_ideal_smallest_cases() {
    let e = eng();
    // E_1^2 reduces to zero at the all-odd diagram.
    let sq = Elem::e(&e, d4(), 1).mul(&e, &Elem::e(&e, d4(), 1));
    assert!(e.is_zero_uq(&sq).unwrap());
    // At diagram 0 the bracket of two orthogonal even generators vanishes.
    let d0 = DiagramId(0);
    let br = qbracket(&e, &Elem::e(&e, d0, 1), &Elem::e(&e, d0, 2)).unwrap();
    assert!(e.is_zero_uq(&br).unwrap());
    // E_1 itself is already reduced.
    let e1 = Elem::e(&e, d4(), 1);
    assert_eq!(e.normal_form(&e1).unwrap(), e1);
}

#[test]
fn ideal_stability_under_multiplication() {
    let e = eng();
    for d in [DiagramId(0), DiagramId(4)] {
        let gens = serre_generators(&e, d);
        let g = &gens[0].1;
        for i in 0..4u8 {
            let left = Elem::e(&e, d, i).mul(&e, g);
            let right = g.mul(&e, &Elem::f(&e, d, i));
            assert!(e.is_zero_uq(&left).unwrap(), "gR not in ideal");
            assert!(e.is_zero_uq(&right).unwrap(), "Rg not in ideal");
        }
    }
}

#[test]
fn smash_character_commutation() {
    // K_Lambda^{1/2} X = q^{chi(mu)/2} X K_Lambda^{1/2} on generators.
    let e = eng();
    let kl = Elem::gen(&e, d4(), Gen::KLambdaHalf(1));
    // X = E_0: factor q^{1/2}
    let x = Elem::e(&e, d4(), 0);
    let lhs = kl.mul(&e, &x);
    let rhs = x.mul(&e, &kl).scale(&e.qp(HalfExponent::new(1, 0)));
    assert_eq!(lhs, rhs);
    // X = E_1: factor 1
    let x = Elem::e(&e, d4(), 1);
    assert_eq!(kl.mul(&e, &x), x.mul(&e, &kl));
}
