use crate::basis::RootBasis;
use crate::isometry::{Direction, LatticeIsometry};
use crate::{anticanonical, DivisorClass, LatticeError};
use numeric::linalg::Mat;
use numeric::rat::Rat;

/// Result of testing whether an isometry acts on a root basis as a
/// translation `α_i ↦ α_i + c_i·δ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TranslationClass {
    NotTranslation,
    /// The isometry itself translates; carries the coefficient vector.
    Translation(Vec<i64>),
    /// The smallest power `p > 1` within the search bound translates.
    TranslationAfterPower(u32, Vec<i64>),
}

/// Detects translation behaviour of `m` on the roots of `basis`, searching
/// powers up to `bound` (the workloads here only ever need 2 and 4).
pub fn classify_translation(
    m: &LatticeIsometry,
    basis: &RootBasis,
    bound: u32,
) -> TranslationClass {
    for p in 1..=bound.max(1) {
        let mp = m.pow(p);
        if let Some(v) = translation_vector(&mp, basis) {
            return if p == 1 {
                TranslationClass::Translation(v)
            } else {
                TranslationClass::TranslationAfterPower(p, v)
            };
        }
    }
    TranslationClass::NotTranslation
}

fn translation_vector(m: &LatticeIsometry, basis: &RootBasis) -> Option<Vec<i64>> {
    let delta = anticanonical();
    let mut out = Vec::with_capacity(basis.roots.len());
    for r in &basis.roots {
        let diff = m.apply(&r.class) - r.class;
        let c = diff.as_anticanonical_multiple()?;
        out.push(c);
    }
    debug_assert_eq!(m.apply(&delta), delta);
    Some(out)
}

/// One letter of a word in the extended affine Weyl group of a basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Letter {
    /// Reflection in basis root `i`.
    Reflection(usize),
    /// Product of diagram automorphism generators, applied left to right
    /// as a matrix product (empty = identity).
    Automorphism(Vec<usize>),
}

impl std::fmt::Display for Letter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Letter::Reflection(i) => write!(f, "w{i}"),
            Letter::Automorphism(gs) if gs.is_empty() => write!(f, "id"),
            Letter::Automorphism(gs) => {
                for g in gs {
                    write!(f, "s{g}")?;
                }
                Ok(())
            }
        }
    }
}

/// A word over reflections and diagram automorphisms of one basis.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    /// Matrix of the word: the product of the letters' isometries in the
    /// written order (the leftmost letter is the outermost map).
    pub fn compose(&self, basis: &RootBasis) -> LatticeIsometry {
        let mut acc = LatticeIsometry::identity(Direction::Pushforward);
        for letter in &self.0 {
            let m = match letter {
                Letter::Reflection(i) => basis.reflection(*i),
                Letter::Automorphism(gs) => {
                    let mut a = LatticeIsometry::identity(Direction::Pushforward);
                    for &g in gs {
                        a = a.compose(&basis.automorphisms[g].iso);
                    }
                    a
                }
            };
            acc = acc.compose(&m);
        }
        acc
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "id");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A strictly dominant vector for the basis: `λ•α_i > 0` for every basis
/// root, with pairwise distinct pairings to keep the greedy walk
/// deterministic. Solved exactly; scaled to integers.
fn dominant_vector(basis: &RootBasis) -> DivisorClass {
    let n = basis.roots.len();
    // Primary attempt: pairings = 2, 3, 5, ... (distinct primes).
    let primes = [2i64, 3, 5, 7, 11, 13, 17, 19, 23];
    let mut targets: Vec<i64> = primes[..n].to_vec();
    if solve_dominant(basis, &targets).is_none() {
        // Dependent bases (three A1 pairs): pair sums must agree with λ•δ.
        // Use pair targets (a, L−a) for distinct a.
        let l = 24;
        let a = [5i64, 7, 11];
        targets = (0..n)
            .map(|i| if i % 2 == 0 { a[i / 2] } else { l - a[i / 2] })
            .collect();
    }
    let sol = solve_dominant(basis, &targets).expect("dominant vector exists");
    sol
}

fn solve_dominant(basis: &RootBasis, targets: &[i64]) -> Option<DivisorClass> {
    // Rows: functional λ ↦ λ•α_i, i.e. the Gram-paired coordinate vector.
    let rows: Vec<Vec<Rat>> = basis
        .roots
        .iter()
        .map(|r| {
            (0..10)
                .map(|j| Rat::from_int(DivisorClass::basis(j).intersect(&r.class)))
                .collect()
        })
        .collect();
    let m = Mat::from_rows(rows);
    let b: Vec<Rat> = targets.iter().map(|&t| Rat::from_int(t)).collect();
    let sol = m.solve_least(&b)?;
    // Clear denominators.
    let mut lcm = numeric::rug::Integer::from(1);
    for v in &sol {
        lcm = lcm.lcm(&v.0.denom().clone());
    }
    let mut coeffs = [0i64; 10];
    for (i, v) in sol.iter().enumerate() {
        let scaled = v.0.clone() * numeric::rug::Rational::from((lcm.clone(), 1));
        coeffs[i] = scaled.numer().to_i64()?;
    }
    Some(DivisorClass(coeffs))
}

/// Greedy decomposition of an isometry of the extended affine Weyl group of
/// `basis` into a word of simple reflections followed by one diagram
/// automorphism. The output recomposes to `m` exactly; it need not match
/// any particular printed word (decompositions are not unique).
///
/// The walk acts on a strictly dominant vector: while some pairing
/// `x•α_i` is negative the reflection `w_i` with the smallest such `i` is
/// applied; the residual isometry must then be a diagram automorphism.
pub fn decompose_word(m: &LatticeIsometry, basis: &RootBasis) -> Result<Word, LatticeError> {
    m.validate()?;
    // Precondition: m stabilizes the rational span of the basis roots.
    if !stabilizes_span(m, basis) {
        return Err(LatticeError::DoesNotStabilize);
    }
    let lambda = dominant_vector(basis);
    let mut x = m.apply(&lambda);
    let mut reversal: Vec<usize> = Vec::new();
    let mut steps = 0usize;
    loop {
        let mut applied = false;
        for (i, r) in basis.roots.iter().enumerate() {
            if x.intersect(&r.class) < 0 {
                x = crate::root::reflect(r, &x).expect("basis roots valid");
                reversal.push(i);
                applied = true;
                break;
            }
        }
        if !applied {
            break;
        }
        steps += 1;
        if steps > 200_000 {
            return Err(LatticeError::ReductionDiverged);
        }
    }
    // T = w_{i_k} ∘ … ∘ w_{i_1} ∘ m maps λ to a dominant point; if m lies in
    // the extended group, T is one of the diagram automorphisms.
    let mut t = m.clone();
    for &i in &reversal {
        t = basis.reflection(i).compose(&t);
    }
    let closure = basis.automorphism_closure();
    let hit = closure.into_iter().find(|(_, iso)| *iso == t);
    let (auto_word, _) = hit.ok_or(LatticeError::NotInExtendedGroup)?;
    // m = w_{i_1} … w_{i_k} · σ.
    let mut letters: Vec<Letter> = reversal.into_iter().map(Letter::Reflection).collect();
    if !auto_word.is_empty() {
        letters.push(Letter::Automorphism(auto_word));
    }
    let word = Word(letters);
    debug_assert_eq!(&word.compose(basis), m);
    Ok(word)
}

fn stabilizes_span(m: &LatticeIsometry, basis: &RootBasis) -> bool {
    // Each image of a basis root must be a rational combination of roots.
    let rows: Vec<Vec<Rat>> = (0..10)
        .map(|coord| {
            basis
                .roots
                .iter()
                .map(|r| Rat::from_int(r.class.0[coord]))
                .collect()
        })
        .collect();
    let mat = Mat::from_rows(rows);
    for r in &basis.roots {
        let img = m.apply(&r.class);
        let b: Vec<Rat> = (0..10).map(|c| Rat::from_int(img.0[c])).collect();
        if mat.solve_least(&b).is_none() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{root_basis, BasisLabel};

    #[test]
    fn identity_classifies_and_decomposes() {
        for label in [BasisLabel::E8, BasisLabel::D5, BasisLabel::D6, BasisLabel::A1x3] {
            let b = root_basis(label);
            let id = LatticeIsometry::identity(Direction::Pushforward);
            assert_eq!(
                classify_translation(&id, &b, 8),
                TranslationClass::Translation(vec![0; b.rank()])
            );
            let w = decompose_word(&id, &b).unwrap();
            assert!(w.is_empty(), "{label}: {w}");
        }
    }

    #[test]
    fn single_reflection_roundtrip() {
        let b = root_basis(BasisLabel::E8);
        for i in 0..b.rank() {
            let m = b.reflection(i);
            let w = decompose_word(&m, &b).unwrap();
            assert_eq!(w.compose(&b), m);
            assert_eq!(w.len(), 1);
        }
    }

    #[test]
    fn dominant_vector_strict() {
        for label in [
            BasisLabel::E8,
            BasisLabel::E7,
            BasisLabel::D5,
            BasisLabel::D6,
            BasisLabel::A1x3,
        ] {
            let b = root_basis(label);
            let lam = super::dominant_vector(&b);
            for r in &b.roots {
                assert!(lam.intersect(&r.class) > 0, "{label}");
            }
        }
    }
}
