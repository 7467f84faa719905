use crate::isometry::{Direction, LatticeIsometry};
use crate::root::Root;
use crate::{anticanonical, DivisorClass, LatticeError};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BasisLabel {
    E8,
    E7,
    D5,
    D6,
    A1x3,
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BasisLabel::E8 => "E8",
            BasisLabel::E7 => "E7",
            BasisLabel::D5 => "D5",
            BasisLabel::D6 => "D6",
            BasisLabel::A1x3 => "A1x3",
        };
        write!(f, "{s}")
    }
}

impl FromStr for BasisLabel {
    type Err = LatticeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "E8" => Ok(BasisLabel::E8),
            "E7" => Ok(BasisLabel::E7),
            "D5" => Ok(BasisLabel::D5),
            "D6" => Ok(BasisLabel::D6),
            "A1x3" => Ok(BasisLabel::A1x3),
            other => Err(LatticeError::UnknownLabel(other.into())),
        }
    }
}

/// A diagram automorphism: a named lattice isometry permuting the basis
/// roots, with the induced permutation recorded (`iso(root[i]) =
/// root[perm[i]]`).
#[derive(Clone, PartialEq, Debug)]
pub struct DiagramAutomorphism {
    pub name: String,
    pub iso: LatticeIsometry,
    pub root_permutation: Vec<usize>,
}

/// An ordered affine root basis together with the expansion of
/// `δ = −K` in the basis, its diagram automorphism generators, and the
/// expected Gram matrix of the configuration.
#[derive(Clone, Debug)]
pub struct RootBasis {
    pub label: BasisLabel,
    pub roots: Vec<Root>,
    pub delta_coeffs: Vec<i64>,
    pub automorphisms: Vec<DiagramAutomorphism>,
    pub expected_gram: Vec<Vec<i64>>,
}

impl RootBasis {
    pub fn rank(&self) -> usize {
        self.roots.len()
    }

    /// The isometry of reflection in basis root `i`.
    pub fn reflection(&self, i: usize) -> LatticeIsometry {
        let mut images = [DivisorClass::ZERO; 10];
        for (j, img) in images.iter_mut().enumerate() {
            *img = crate::root::reflect(&self.roots[i], &DivisorClass::basis(j))
                .expect("basis roots carry valid splits");
        }
        LatticeIsometry::from_images(&images, Direction::Pushforward)
            .expect("reflections are isometries")
    }

    /// Gram matrix of the stored roots.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        self.roots
            .iter()
            .map(|a| self.roots.iter().map(|b| a.class.intersect(&b.class)).collect())
            .collect()
    }

    /// Verifies the Dynkin pattern and the δ-expansion.
    pub fn verify(&self) -> Result<(), LatticeError> {
        if self.gram() != self.expected_gram {
            return Err(LatticeError::BadSplit(format!(
                "{} basis does not match its diagram",
                self.label
            )));
        }
        let mut delta = DivisorClass::ZERO;
        for (c, r) in self.delta_coeffs.iter().zip(self.roots.iter()) {
            delta = delta + r.class.scaled(*c);
        }
        if delta != anticanonical() {
            return Err(LatticeError::BadSplit(format!(
                "{} delta expansion does not equal -K",
                self.label
            )));
        }
        for r in &self.roots {
            r.validate()?;
        }
        for a in &self.automorphisms {
            a.iso.validate()?;
            for (i, &pi) in a.root_permutation.iter().enumerate() {
                if a.iso.apply(&self.roots[i].class) != self.roots[pi].class {
                    return Err(LatticeError::BadSplit(format!(
                        "{}: automorphism {} does not permute roots as recorded",
                        self.label, a.name
                    )));
                }
            }
        }
        Ok(())
    }

    /// The finite group generated by the stored diagram automorphisms,
    /// as (generator word, isometry) pairs; the identity has the empty word.
    pub fn automorphism_closure(&self) -> Vec<(Vec<usize>, LatticeIsometry)> {
        let id = LatticeIsometry::identity(Direction::Pushforward);
        let mut out: Vec<(Vec<usize>, LatticeIsometry)> = vec![(vec![], id)];
        let mut frontier = vec![0usize];
        while let Some(fi) = frontier.pop() {
            let (word, iso) = out[fi].clone();
            for (gi, g) in self.automorphisms.iter().enumerate() {
                let next = iso.compose(&g.iso);
                if out.iter().all(|(_, m)| *m != next) {
                    let mut w = word.clone();
                    w.push(gi);
                    out.push((w, next));
                    frontier.push(out.len() - 1);
                }
            }
            if out.len() > 64 {
                break;
            }
        }
        out
    }
}

/// JSON schema: `{"label": str, "roots": [[10 ints]], "delta": [ints]}`.
impl Serialize for RootBasis {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RootBasis", 3)?;
        st.serialize_field("label", &self.label.to_string())?;
        let roots: Vec<[i64; 10]> = self.roots.iter().map(|r| r.class.0).collect();
        st.serialize_field("roots", &roots)?;
        st.serialize_field("delta", &self.delta_coeffs)?;
        st.end()
    }
}

fn d(dx: i64, dy: i64, m: [i64; 8]) -> DivisorClass {
    DivisorClass::new(dx, dy, m)
}

fn e(i: usize) -> DivisorClass {
    DivisorClass::e(i)
}

fn hx() -> DivisorClass {
    DivisorClass::hx()
}

fn hy() -> DivisorClass {
    DivisorClass::hy()
}

fn simple(c: DivisorClass) -> Root {
    Root::simple(c).expect("tabulated root is valid")
}

/// Isometry permuting the ten basis classes; `perm[j]` is the index of the
/// image of basis class `j`.
fn permutation_iso(perm: [usize; 10]) -> LatticeIsometry {
    let mut images = [DivisorClass::ZERO; 10];
    for (j, img) in images.iter_mut().enumerate() {
        *img = DivisorClass::basis(perm[j]);
    }
    LatticeIsometry::from_images(&images, Direction::Pushforward)
        .expect("basis permutations preserving the form are isometries")
}

/// Indices: 0 = Hx, 1 = Hy, 2.. = E1..E8.
const ID10: [usize; 10] = [0, 1, 2, 3, 4, 5, 6, 7, 8, 9];

fn perm_cycles(cycles: &[&[usize]]) -> [usize; 10] {
    let mut p = ID10;
    for cyc in cycles {
        for w in 0..cyc.len() {
            p[cyc[w]] = cyc[(w + 1) % cyc.len()];
        }
    }
    p
}

fn gram_from_edges(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0i64; n]; n];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = -2;
    }
    for &(a, b) in edges {
        g[a][b] = 1;
        g[b][a] = 1;
    }
    g
}

/// The tabulated affine root bases.
pub fn root_basis(label: BasisLabel) -> RootBasis {
    let basis = match label {
        BasisLabel::E8 => {
            let roots = vec![
                simple(e(1) - e(2)),
                simple(hx() - hy()),
                simple(hy() - e(1) - e(2)),
                simple(e(2) - e(3)),
                simple(e(3) - e(4)),
                simple(e(4) - e(5)),
                simple(e(5) - e(6)),
                simple(e(6) - e(7)),
                simple(e(7) - e(8)),
            ];
            RootBasis {
                label,
                roots,
                delta_coeffs: vec![3, 2, 4, 6, 5, 4, 3, 2, 1],
                automorphisms: vec![],
                expected_gram: gram_from_edges(
                    9,
                    &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (0, 3)],
                ),
            }
        }
        BasisLabel::E7 => {
            let roots = vec![
                simple(hx() - hy()),
                simple(e(6) - e(8)),
                simple(e(3) - e(6)),
                simple(e(1) - e(3)),
                simple(hy() - e(1) - e(2)),
                simple(e(2) - e(4)),
                simple(e(4) - e(5)),
                simple(e(5) - e(7)),
            ];
            let sigma = DiagramAutomorphism {
                name: "sigma".into(),
                iso: permutation_iso(perm_cycles(&[&[2, 3], &[4, 5], &[6, 7], &[8, 9]])),
                root_permutation: vec![0, 7, 6, 5, 4, 3, 2, 1],
            };
            RootBasis {
                label,
                roots,
                delta_coeffs: vec![2, 1, 2, 3, 4, 3, 2, 1],
                automorphisms: vec![sigma],
                expected_gram: gram_from_edges(
                    8,
                    &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (0, 4)],
                ),
            }
        }
        BasisLabel::D5 => {
            let roots = vec![
                simple(e(1) - e(2)),
                simple(e(5) - e(6)),
                simple(hy() - e(1) - e(5)),
                simple(hx() - e(3) - e(7)),
                simple(e(3) - e(4)),
                simple(e(7) - e(8)),
            ];
            // (α0 α5 α1 α4)(α2 α3) on roots; on classes: Hx↔Hy,
            // E1→E7→E5→E3→E1 and E2→E8→E6→E4→E2.
            let sigma = DiagramAutomorphism {
                name: "sigma".into(),
                iso: permutation_iso(perm_cycles(&[&[0, 1], &[2, 8, 6, 4], &[3, 9, 7, 5]])),
                root_permutation: vec![5, 4, 3, 2, 0, 1],
            };
            RootBasis {
                label,
                roots,
                delta_coeffs: vec![1, 1, 2, 2, 1, 1],
                automorphisms: vec![sigma],
                expected_gram: gram_from_edges(6, &[(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)]),
            }
        }
        BasisLabel::D6 => {
            let roots = vec![
                simple(e(1) - e(2)),
                simple(e(5) - e(6)),
                simple(hy() - e(1) - e(5)),
                simple(hx() - hy()),
                simple(hy() - e(3) - e(7)),
                simple(e(3) - e(4)),
                simple(e(7) - e(8)),
            ];
            // σ1 = (β0 β5 β1 β6)(β2 β4): E1→E3→E5→E7→E1, E2→E4→E6→E8→E2.
            let sigma1 = DiagramAutomorphism {
                name: "sigma1".into(),
                iso: permutation_iso(perm_cycles(&[&[2, 4, 6, 8], &[3, 5, 7, 9]])),
                root_permutation: vec![5, 6, 4, 3, 2, 1, 0],
            };
            // σ2 = (β0 β1): E1↔E5, E2↔E6 with the rest fixed. (The full
            // eight-point swap would coincide with σ1² and break the
            // dihedral relations σ2² = (σ2σ1)² = e.)
            let sigma2 = DiagramAutomorphism {
                name: "sigma2".into(),
                iso: permutation_iso(perm_cycles(&[&[2, 6], &[3, 7]])),
                root_permutation: vec![1, 0, 2, 3, 4, 5, 6],
            };
            RootBasis {
                label,
                roots,
                delta_coeffs: vec![1, 1, 2, 2, 2, 1, 1],
                automorphisms: vec![sigma1, sigma2],
                expected_gram: gram_from_edges(
                    7,
                    &[(0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6)],
                ),
            }
        }
        BasisLabel::A1x3 => {
            let b01 = Root::composite(
                d(0, 2, [-1, -1, 0, 0, -1, -1, 0, 0]),
                (hy() - e(1) - e(2), hy() - e(5) - e(6)),
            )
            .unwrap();
            let b11 = Root::composite(
                d(2, 0, [0, 0, -1, -1, 0, 0, -1, -1]),
                (hx() - e(3) - e(4), hx() - e(7) - e(8)),
            )
            .unwrap();
            let b02 = Root::composite(
                d(0, 0, [1, -1, -1, 1, 0, 0, 0, 0]),
                (e(1) - e(2), e(4) - e(3)),
            )
            .unwrap();
            let b12 = Root::composite(
                d(2, 2, [-2, 0, 0, -2, -1, -1, -1, -1]),
                (
                    d(1, 1, [-1, 0, 0, -1, -1, 0, -1, 0]),
                    d(1, 1, [-1, 0, 0, -1, 0, -1, 0, -1]),
                ),
            )
            .unwrap();
            let b03 = Root::composite(
                d(0, 0, [0, 0, 0, 0, 1, -1, -1, 1]),
                (e(5) - e(6), e(8) - e(7)),
            )
            .unwrap();
            let b13 = Root::composite(
                d(2, 2, [-1, -1, -1, -1, -2, 0, 0, -2]),
                (
                    d(1, 1, [-1, 0, -1, 0, -1, 0, 0, -1]),
                    d(1, 1, [0, -1, 0, -1, -1, 0, 0, -1]),
                ),
            )
            .unwrap();
            // σ = (Hx Hy)(E1 E4)(E2 E3)(E5 E8)(E6 E7). On the roots it swaps
            // the first pair and fixes the classes of the other two pairs
            // (they are symmetric under the point swaps).
            let sigma = DiagramAutomorphism {
                name: "sigma".into(),
                iso: permutation_iso(perm_cycles(&[&[0, 1], &[2, 5], &[3, 4], &[6, 9], &[7, 8]])),
                root_permutation: vec![1, 0, 2, 3, 4, 5],
            };
            let mut expected_gram = vec![vec![0i64; 6]; 6];
            for i in 0..6 {
                expected_gram[i][i] = -4;
            }
            for pair in 0..3 {
                expected_gram[2 * pair][2 * pair + 1] = 4;
                expected_gram[2 * pair + 1][2 * pair] = 4;
            }
            RootBasis {
                label,
                roots: vec![b01, b11, b02, b12, b03, b13],
                delta_coeffs: vec![1, 1, 0, 0, 0, 0],
                automorphisms: vec![sigma],
                expected_gram,
            }
        }
    };
    debug_assert!(basis.verify().is_ok(), "{:?}", basis.verify());
    basis
}

pub fn root_basis_by_name(name: &str) -> Result<RootBasis, LatticeError> {
    Ok(root_basis(BasisLabel::from_str(name)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_bases_verify() {
        for label in [
            BasisLabel::E8,
            BasisLabel::E7,
            BasisLabel::D5,
            BasisLabel::D6,
            BasisLabel::A1x3,
        ] {
            let b = root_basis(label);
            b.verify().unwrap_or_else(|e| panic!("{label}: {e}"));
        }
    }

    #[test]
    fn e8_first_and_last_roots() {
        let b = root_basis(BasisLabel::E8);
        assert_eq!(b.roots[0].class, e(1) - e(2));
        assert_eq!(b.roots[1].class, hx() - hy());
        assert_eq!(b.roots[8].class, e(7) - e(8));
    }

    #[test]
    fn d6_fourth_root_and_expansion() {
        // β4 = Hy − E3 − E7 expands as α0+α2+2α3+α4+α5+α6+α7 in the
        // nine-root basis (solved exactly; the printed source has a typo
        // α1 for α0 here, caught by this check).
        let d6 = root_basis(BasisLabel::D6);
        let beta4 = d6.roots[4].class;
        assert_eq!(beta4, hy() - e(3) - e(7));
        let e8 = root_basis(BasisLabel::E8);
        // Solve beta4 = Σ c_i α_i over the rationals.
        use numeric::linalg::Mat;
        use numeric::rat::Rat;
        use numeric::Field;
        let rows: Vec<Vec<Rat>> = (0..10)
            .map(|coord| {
                e8.roots
                    .iter()
                    .map(|r| Rat::from_int(r.class.0[coord]))
                    .collect()
            })
            .collect();
        let m = Mat::from_rows(rows);
        let b: Vec<Rat> = (0..10).map(|c| Rat::from_int(beta4.0[c])).collect();
        let sol = m.solve_least(&b).expect("beta4 lies in the root span");
        let expect = [1, 0, 1, 2, 1, 1, 1, 1, 0].map(Rat::from_int);
        assert_eq!(sol, expect.to_vec());
        let _ = Rat::zero();
    }

    #[test]
    fn a1x3_second_root() {
        let b = root_basis(BasisLabel::A1x3);
        // β0² = E1 − E2 − E3 + E4
        assert_eq!(b.roots[2].class, d(0, 0, [1, -1, -1, 1, 0, 0, 0, 0]));
    }

    #[test]
    fn d6_automorphism_orders() {
        let b = root_basis(BasisLabel::D6);
        let closure = b.automorphism_closure();
        // Aut(D6 affine diagram) here is the dihedral group of order 8.
        assert_eq!(closure.len(), 8);
        let s1 = &b.automorphisms[0].iso;
        let s2 = &b.automorphisms[1].iso;
        let id = LatticeIsometry::identity(Direction::Pushforward);
        assert_eq!(s1.pow(4), id);
        assert_eq!(s2.pow(2), id);
        assert_eq!(s2.compose(s1).pow(2), id);
    }

    #[test]
    fn basis_serialization_schema() {
        let b = root_basis(BasisLabel::D5);
        let js = serde_json::to_value(&b).unwrap();
        assert_eq!(js["label"], "D5");
        assert_eq!(js["roots"].as_array().unwrap().len(), 6);
        assert_eq!(js["delta"], serde_json::json!([1, 1, 2, 2, 1, 1]));
    }
}
