//! Static combinatorial data of the five Dynkin diagrams: simple roots,
//! symmetric bilinear forms, parities, the structure constants `m_{i,j;d}`,
//! the Klein four-group action, and the isotropic roots.

use std::fmt;

use crate::coeff::HalfExponent;
use crate::error::{Error, Result};

/// Label of one of the five Dynkin diagrams.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DiagramId(pub u8);

impl DiagramId {
    pub const ALL: [DiagramId; 5] = [
        DiagramId(0),
        DiagramId(1),
        DiagramId(2),
        DiagramId(3),
        DiagramId(4),
    ];

    /// The four diagrams `d != 0` used by the root-vector constructions.
    pub const NONZERO: [DiagramId; 4] = [DiagramId(1), DiagramId(2), DiagramId(3), DiagramId(4)];

    pub fn new(d: u8) -> Result<DiagramId> {
        if d <= 4 {
            Ok(DiagramId(d))
        } else {
            Err(Error::OutOfDomain(d as i64, "diagram label must be 0..=4"))
        }
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for DiagramId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Vertex indices of a diagram.
pub const VERTICES: [u8; 4] = [0, 1, 2, 3];

/// The reflection permutation `n_i = (i 4)` acting on diagram labels.
pub fn n_act(i: u8, d: DiagramId) -> DiagramId {
    debug_assert!(i <= 3);
    if d.0 == i {
        DiagramId(4)
    } else if d.0 == 4 {
        DiagramId(i)
    } else {
        d
    }
}

/// Element of the Klein four-group of diagram symmetries.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum KleinElement {
    F0,
    F1,
    F2,
    F3,
}

impl KleinElement {
    pub const ALL: [KleinElement; 4] = [
        KleinElement::F0,
        KleinElement::F1,
        KleinElement::F2,
        KleinElement::F3,
    ];

    pub fn from_index(k: u8) -> Result<KleinElement> {
        Self::ALL
            .get(k as usize)
            .copied()
            .ok_or(Error::OutOfDomain(k as i64, "Klein index must be 0..=3"))
    }

    fn idx(self) -> usize {
        self as usize
    }

    /// Action on vertex indices: `f1 = (01)(23)`, `f2 = (02)(13)`, `f3 = (03)(12)`.
    pub fn act(self, i: u8) -> u8 {
        const TABLE: [[u8; 4]; 4] = [
            [0, 1, 2, 3],
            [1, 0, 3, 2],
            [2, 3, 0, 1],
            [3, 2, 1, 0],
        ];
        TABLE[self.idx()][i as usize]
    }

    /// Group multiplication; the Klein group is abelian with `f*f = id`.
    pub fn compose(self, other: KleinElement) -> KleinElement {
        // f_a f_b = f_{a xor b} in the {0,1,2,3} labeling of the table above.
        const XOR: [[u8; 4]; 4] = [
            [0, 1, 2, 3],
            [1, 0, 3, 2],
            [2, 3, 0, 1],
            [3, 2, 1, 0],
        ];
        KleinElement::ALL[XOR[self.idx()][other.idx()] as usize]
    }

    /// Induced permutation of diagram labels: moves `{0,1,2,3}` like the
    /// vertices and fixes the distinguished diagram `4`.
    pub fn per(self, d: DiagramId) -> DiagramId {
        if d.0 == 4 {
            d
        } else {
            DiagramId(self.act(d.0))
        }
    }
}

impl fmt::Display for KleinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{}", self.idx())
    }
}

/// Element of `(1/2) Z Pi_d`, stored through doubled integer coordinates over
/// the simple roots of diagram `d`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight {
    pub d: DiagramId,
    /// Doubled coordinates: `coords[i]` is twice the coefficient of `alpha_i`.
    pub coords: [i32; 4],
}

impl Weight {
    pub fn zero(d: DiagramId) -> Weight {
        Weight { d, coords: [0; 4] }
    }

    /// The simple root `alpha_{i,d}`.
    pub fn simple(d: DiagramId, i: u8) -> Weight {
        let mut coords = [0; 4];
        coords[i as usize] = 2;
        Weight { d, coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords == [0; 4]
    }

    /// All doubled coordinates even, i.e. the weight lies in `Z Pi_d`.
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c % 2 == 0)
    }

    pub fn add(&self, o: &Weight) -> Result<Weight> {
        self.check(o)?;
        let mut coords = self.coords;
        for k in 0..4 {
            coords[k] += o.coords[k];
        }
        Ok(Weight { d: self.d, coords })
    }

    pub fn sub(&self, o: &Weight) -> Result<Weight> {
        self.check(o)?;
        let mut coords = self.coords;
        for k in 0..4 {
            coords[k] -= o.coords[k];
        }
        Ok(Weight { d: self.d, coords })
    }

    pub fn neg(&self) -> Weight {
        let mut coords = self.coords;
        for c in &mut coords {
            *c = -*c;
        }
        Weight { d: self.d, coords }
    }

    pub fn scale(&self, k: i32) -> Weight {
        let mut coords = self.coords;
        for c in &mut coords {
            *c *= k;
        }
        Weight { d: self.d, coords }
    }

    /// Twice the height (the sum of the doubled coordinates).
    pub fn doubled_height(&self) -> i32 {
        self.coords.iter().sum()
    }

    fn check(&self, o: &Weight) -> Result<()> {
        if self.d != o.d {
            return Err(Error::DiagramMismatch {
                expected: self.d.0,
                got: o.d.0,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}/2, {}/2, {}/2, {}/2]@{}",
            self.coords[0], self.coords[1], self.coords[2], self.coords[3], self.d
        )
    }
}

/// `(p, r)` meaning the value `p + r x`.
type FormValue = (i32, i32);

/// Generator table of the symmetric bilinear form at the distinguished
/// all-odd diagram `d = 4`.
const FORM4: [[FormValue; 4]; 4] = [
    [(0, 0), (0, -1), (1, 1), (-1, 0)],
    [(0, -1), (0, 0), (-1, 0), (1, 1)],
    [(1, 1), (-1, 0), (0, 0), (0, -1)],
    [(-1, 0), (1, 1), (0, -1), (0, 0)],
];

/// Generator table at `d = 0`.
const FORM0: [[FormValue; 4]; 4] = [
    [(0, 0), (0, 1), (-1, -1), (1, 0)],
    [(0, 1), (0, -2), (0, 0), (0, 0)],
    [(-1, -1), (0, 0), (2, 2), (0, 0)],
    [(1, 0), (0, 0), (0, 0), (-2, 0)],
];

/// Form value on two simple roots, as the pair `(p, r)` for `p + r x`.
pub fn form_on_simples(d: DiagramId, i: u8, j: u8) -> FormValue {
    let (i, j) = (i as usize, j as usize);
    match d.0 {
        4 => FORM4[i][j],
        0 => FORM0[i][j],
        _ => {
            // Transport rule through the Klein element f_d.
            let f = KleinElement::ALL[d.0 as usize];
            FORM0[f.act(i as u8) as usize][f.act(j as u8) as usize]
        }
    }
}

/// Symmetric bilinear form on two weights of diagram `d`, as a half exponent.
pub fn bilin(d: DiagramId, mu: &Weight, la: &Weight) -> Result<HalfExponent> {
    if mu.d != d || la.d != d {
        return Err(Error::DiagramMismatch {
            expected: d.0,
            got: if mu.d != d { mu.d.0 } else { la.d.0 },
        });
    }
    // Quarter units: value = sum_{ij} (m_i l_j / 4) (p_ij + r_ij x).
    let mut qa: i64 = 0;
    let mut qb: i64 = 0;
    for i in 0..4 {
        if mu.coords[i] == 0 {
            continue;
        }
        for j in 0..4 {
            if la.coords[j] == 0 {
                continue;
            }
            let (p, r) = form_on_simples(d, i as u8, j as u8);
            let m = mu.coords[i] as i64 * la.coords[j] as i64;
            qa += m * p as i64;
            qb += m * r as i64;
        }
    }
    // (a + b x)/2 with a = qa/2, b = qb/2.
    if qa % 2 != 0 || qb % 2 != 0 {
        return Err(Error::ExponentLattice(qa as i32, qb as i32));
    }
    Ok(HalfExponent::new((qa / 2) as i32, (qb / 2) as i32))
}

/// Parity of a simple root: odd exactly when the form vanishes on it.
pub fn parity_simple(d: DiagramId, i: u8) -> u8 {
    let (p, r) = form_on_simples(d, i, i);
    u8::from(p == 0 && r == 0)
}

/// Parity of an integral weight, extended additively modulo 2.
pub fn parity(d: DiagramId, mu: &Weight) -> Result<u8> {
    if mu.d != d {
        return Err(Error::DiagramMismatch {
            expected: d.0,
            got: mu.d.0,
        });
    }
    if !mu.is_integral() {
        return Err(Error::Usage(format!(
            "parity is defined on Z Pi_d only, got {mu}"
        )));
    }
    let mut p = 0i32;
    for i in 0..4 {
        p += (mu.coords[i] / 2) * parity_simple(d, i as u8) as i32;
    }
    Ok((p.rem_euclid(2)) as u8)
}

/// Structure constant `m_{i,j;d}`: 2 when `i != d != j` away from the
/// distinguished diagram, otherwise 3.
pub fn mval(i: u8, j: u8, d: DiagramId) -> Result<u8> {
    if i == j {
        return Err(Error::Usage(format!("m_{{i,j;d}} needs i != j, got i = j = {i}")));
    }
    if d.0 != 4 && i != d.0 && j != d.0 {
        Ok(2)
    } else {
        Ok(3)
    }
}

/// The isotropic root `delta_d`.
pub fn iso_root(d: DiagramId) -> Weight {
    let mut coords = [2i32; 4];
    if d.0 != 4 {
        coords[d.0 as usize] += 2;
    }
    Weight { d, coords }
}

/// Documentation-level Cartan data of the finite-dimensional algebra:
/// `A` and the symmetrizing diagonal `D`, entries as `(p, r)` for `p + r x`
/// over a denominator marker. `D` has entries `-1, 1, -1/x`; to stay in
/// integer pairs the triple `(num_p, num_r, divides_by_x)` is recorded.
pub const CARTAN_A: [[FormValue; 3]; 3] = [
    [(2, 0), (-1, 0), (0, 0)],
    [(1, 0), (0, 0), (0, 1)],
    [(0, 0), (-1, 0), (2, 0)],
];

/// Entries of `D^{-1}`: `(-1, 1, -x)` as multipliers applied to the rows of `A`.
pub const CARTAN_D_INV: [FormValue; 3] = [(-1, 0), (1, 0), (0, -1)];

/// Check that `D^{-1} A` is symmetric; used by the self-check suite.
pub fn cartan_data_symmetric() -> bool {
    // (p + r x)(p' + r' x) with x^2 terms tracked separately.
    let mul = |(p, r): FormValue, (p2, r2): FormValue| -> (i32, i32, i32) {
        (p * p2, p * r2 + r * p2, r * r2)
    };
    let mut m = [[(0, 0, 0); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = mul(CARTAN_D_INV[i], CARTAN_A[i][j]);
        }
    }
    (0..3).all(|i| (0..3).all(|j| m[i][j] == m[j][i]))
}

/// Export of all generator tables as JSON for inspection.
pub fn tables_json() -> serde_json::Value {
    use serde_json::json;
    let mut diagrams = Vec::new();
    for d in DiagramId::ALL {
        let mut form = Vec::new();
        for i in 0..4u8 {
            let row: Vec<_> = (0..4u8)
                .map(|j| {
                    let (p, r) = form_on_simples(d, i, j);
                    json!({"const": p, "x": r})
                })
                .collect();
            form.push(serde_json::Value::Array(row));
        }
        let parities: Vec<_> = (0..4u8).map(|i| parity_simple(d, i)).collect();
        let delta = iso_root(d);
        diagrams.push(json!({
            "d": d.0,
            "form": form,
            "parity": parities,
            "delta_doubled": delta.coords.to_vec(),
        }));
    }
    json!({"schema": "qdsup-cartan/1", "diagrams": diagrams})
}

#[cfg(test)]
mod tests {
    use super::*;

    fn al(d: u8, i: u8) -> Weight {
        Weight::simple(DiagramId(d), i)
    }

    #[test]
    fn form_examples_at_d4_and_d0() {
        let d4 = DiagramId(4);
        // (alpha_0, alpha_1) = -x
        assert_eq!(
            bilin(d4, &al(4, 0), &al(4, 1)).unwrap(),
            HalfExponent::from_x_mult(-1)
        );
        // (alpha_1, alpha_1) at d = 0 is -2x
        assert_eq!(
            bilin(DiagramId(0), &al(0, 1), &al(0, 1)).unwrap(),
            HalfExponent::from_x_mult(-2)
        );
        // transport: (alpha_3, alpha_3) at d = 2 maps through f2 = (02)(13) to
        // (alpha_1, alpha_1) at d = 0.
        assert_eq!(
            bilin(DiagramId(2), &al(2, 3), &al(2, 3)).unwrap(),
            HalfExponent::from_x_mult(-2)
        );
    }

    #[test]
    fn form_symmetry_everywhere() {
        for d in DiagramId::ALL {
            for i in 0..4u8 {
                for j in 0..4u8 {
                    assert_eq!(form_on_simples(d, i, j), form_on_simples(d, j, i));
                }
            }
        }
    }

    #[test]
    fn lemma_m_matches_form_vanishing() {
        for d in DiagramId::ALL {
            for i in 0..4u8 {
                for j in 0..4u8 {
                    if i == j {
                        continue;
                    }
                    let m = mval(i, j, d).unwrap();
                    let vanish = form_on_simples(d, i, j) == (0, 0);
                    assert_eq!(m == 2, vanish, "d={d} i={i} j={j}");
                    assert_eq!(m, mval(j, i, d).unwrap());
                    assert_eq!(m, mval(i, j, n_act(i, d)).unwrap());
                }
            }
        }
    }

    #[test]
    fn parities() {
        assert_eq!(parity(DiagramId(4), &al(4, 2)).unwrap(), 1);
        assert_eq!(parity(DiagramId(0), &al(0, 1)).unwrap(), 0);
        let s = al(4, 1).add(&al(4, 2)).unwrap();
        assert_eq!(parity(DiagramId(4), &s).unwrap(), 0);
        // Only the vertex matching the diagram label is odd away from 4.
        for d in [1u8, 2, 3] {
            for i in 0..4u8 {
                assert_eq!(parity_simple(DiagramId(d), i), u8::from(i == d));
            }
        }
    }

    #[test]
    fn iso_root_is_radical() {
        assert_eq!(iso_root(DiagramId(4)).coords, [2, 2, 2, 2]);
        assert_eq!(iso_root(DiagramId(1)).coords, [2, 4, 2, 2]);
        for d in DiagramId::ALL {
            let delta = iso_root(d);
            for i in 0..4u8 {
                let v = bilin(d, &delta, &Weight::simple(d, i)).unwrap();
                assert!(v.is_zero(), "delta_{d} not orthogonal to alpha_{i}");
            }
        }
    }

    #[test]
    fn klein_action() {
        use KleinElement::*;
        assert_eq!(F1.act(0), 1);
        assert_eq!(F2.per(DiagramId(4)), DiagramId(4));
        assert_eq!(F1.per(DiagramId(0)), DiagramId(1));
        for f in KleinElement::ALL {
            assert_eq!(f.compose(f), F0);
            for g in KleinElement::ALL {
                assert_eq!(f.compose(g), g.compose(f));
                // per is a homomorphism
                for d in DiagramId::ALL {
                    assert_eq!(f.per(g.per(d)), f.compose(g).per(d));
                }
            }
        }
        for i in 0..4u8 {
            assert_eq!(F3.act(F3.act(i)), i);
        }
    }

    #[test]
    fn transport_consistency() {
        for d in [1u8, 2, 3] {
            let f = KleinElement::ALL[d as usize];
            for i in 0..4u8 {
                for j in 0..4u8 {
                    assert_eq!(
                        form_on_simples(DiagramId(d), i, j),
                        form_on_simples(DiagramId(0), f.act(i), f.act(j))
                    );
                }
            }
        }
    }

    #[test]
    fn documented_cartan_matrix_is_symmetrizable() {
        assert!(cartan_data_symmetric());
    }

    #[test]
    fn bilin_rejects_mismatched_diagrams() {
        let err = bilin(DiagramId(4), &al(4, 0), &al(3, 0));
        assert!(err.is_err());
    }
}
