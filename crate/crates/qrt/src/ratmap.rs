use crate::types::{BiForm, P1Value, ProjPoint};
use numeric::{Field, Qi};
use picard_lattice::DivisorClass;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// One irreducible factor of a map coordinate, with its multiplicity and
/// (when known) the divisor class of its zero set.
#[derive(Clone, Debug)]
pub struct FactorTerm<F: Field> {
    pub form: BiForm<F>,
    pub mult: usize,
    pub class: Option<DivisorClass>,
}

impl<F: Field> FactorTerm<F> {
    pub fn new(form: BiForm<F>, mult: usize) -> Self {
        FactorTerm { form, mult, class: None }
    }

    pub fn with_class(form: BiForm<F>, mult: usize, class: DivisorClass) -> Self {
        FactorTerm { form, mult, class: Some(class) }
    }
}

/// One output coordinate of a rational map in factored form:
/// `constant · Π num_i^{m_i} / Π den_j^{m_j}`. A `None` constant is an
/// unsolved symbolic normalization.
#[derive(Clone, Debug)]
pub struct FactoredCoordinate<F: Field> {
    pub constant: Option<F>,
    pub numerator: Vec<FactorTerm<F>>,
    pub denominator: Vec<FactorTerm<F>>,
}

impl<F: Field> FactoredCoordinate<F> {
    pub fn bidegree_numerator(&self) -> (usize, usize) {
        sum_bidegree(&self.numerator)
    }

    pub fn bidegree_denominator(&self) -> (usize, usize) {
        sum_bidegree(&self.denominator)
    }

    /// Expand to a single (numerator, denominator) pair of forms.
    pub fn expanded(&self) -> (BiForm<F>, BiForm<F>) {
        (expand(&self.numerator, self.constant.as_ref()), expand(&self.denominator, None))
    }

    /// Evaluate at a projective point, returning the image in `P¹`.
    /// Both parts vanishing is an indeterminacy.
    pub fn eval(&self, pt: &ProjPoint<F>) -> Option<P1Value<F>> {
        let (num, den) = self.expanded();
        let nv = num.eval_point(pt);
        let dv = den.eval_point(pt);
        let scale = nv.approx_mag().max(dv.approx_mag()).max(1e-30);
        let nz = nv.is_negligible(scale);
        let dz = dv.is_negligible(scale);
        if nz && dz {
            return None;
        }
        if dz {
            return Some(P1Value::Infinity);
        }
        Some(P1Value::Finite(nv / dv))
    }

    /// The total class bookkeeping `Σ mult·class` over numerator factors,
    /// when every factor carries a class.
    pub fn numerator_class_sum(&self) -> Option<DivisorClass> {
        class_sum(&self.numerator)
    }

    pub fn denominator_class_sum(&self) -> Option<DivisorClass> {
        class_sum(&self.denominator)
    }
}

fn class_sum<F: Field>(terms: &[FactorTerm<F>]) -> Option<DivisorClass> {
    let mut acc = DivisorClass::ZERO;
    for t in terms {
        acc = acc + (t.class?).scaled(t.mult as i64);
    }
    Some(acc)
}

fn sum_bidegree<F: Field>(terms: &[FactorTerm<F>]) -> (usize, usize) {
    terms.iter().fold((0, 0), |(ax, ay), t| {
        (ax + t.mult * t.form.bidegree.0, ay + t.mult * t.form.bidegree.1)
    })
}

fn expand<F: Field>(terms: &[FactorTerm<F>], constant: Option<&F>) -> BiForm<F> {
    let mut poly = numeric::BiPoly::constant(constant.cloned().unwrap_or_else(F::one));
    let mut bd = (0usize, 0usize);
    for t in terms {
        for _ in 0..t.mult {
            poly = poly * t.form.poly.clone();
            bd.0 += t.form.bidegree.0;
            bd.1 += t.form.bidegree.1;
        }
    }
    BiForm::new(poly, bd)
}

/// A rational self-map of `P¹×P¹` with both coordinates stored as products
/// of irreducible factors.
#[derive(Clone, Debug)]
pub struct FactoredRationalMap<F: Field> {
    pub x: FactoredCoordinate<F>,
    pub y: FactoredCoordinate<F>,
}

impl<F: Field> FactoredRationalMap<F> {
    /// Apply the map. `None` marks an indeterminacy point.
    pub fn apply(&self, pt: &ProjPoint<F>) -> Option<ProjPoint<F>> {
        let xv = self.x.eval(pt)?;
        let yv = self.y.eval(pt)?;
        Some(ProjPoint::from_values(xv, yv))
    }

    /// Equality as reduced rational maps: cross-multiplied numerators and
    /// denominators agree up to one common scalar per coordinate.
    pub fn same_map_as(&self, other: &FactoredRationalMap<F>) -> bool {
        coordinate_eq(&self.x, &other.x) && coordinate_eq(&self.y, &other.y)
    }
}

fn coordinate_eq<F: Field>(a: &FactoredCoordinate<F>, b: &FactoredCoordinate<F>) -> bool {
    let (na, da) = a.expanded();
    let (nb, db) = b.expanded();
    // na/da = nb/db  ⟺  na·db = λ·nb·da for a scalar λ.
    let lhs = na.poly * db.poly;
    let rhs = nb.poly * da.poly;
    proportional(&lhs, &rhs)
}

pub(crate) fn proportional<F: Field>(a: &numeric::BiPoly<F>, b: &numeric::BiPoly<F>) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    let (ax, ay) = a.bidegree();
    if (ax, ay) != b.bidegree() {
        return false;
    }
    // λ from the leading graded-lex coefficients; verify a = λ·b.
    let na = a.graded_lex_normalize();
    let nb = b.graded_lex_normalize();
    let scale = na
        .coeffs
        .iter()
        .flatten()
        .chain(nb.coeffs.iter().flatten())
        .map(|c| c.approx_mag())
        .fold(1e-30, f64::max);
    let diff = na - nb;
    diff.coeffs.iter().flatten().all(|c| c.is_negligible(scale))
}

/// JSON form: factors as coefficient arrays with exact strings; unsolved
/// constants appear as `"symbolic:C1"` / `"symbolic:C2"`.
impl Serialize for FactoredRationalMap<Qi> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("FactoredRationalMap", 2)?;
        st.serialize_field("x", &CoordRepr::new(&self.x, "C1"))?;
        st.serialize_field("y", &CoordRepr::new(&self.y, "C2"))?;
        st.end()
    }
}

#[derive(Serialize)]
struct CoordRepr {
    constant: String,
    numerator: Vec<TermRepr>,
    denominator: Vec<TermRepr>,
}

#[derive(Serialize)]
struct TermRepr {
    coeffs: Vec<Vec<String>>,
    bidegree: (usize, usize),
    mult: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    class: Option<[i64; 10]>,
}

impl CoordRepr {
    fn new(c: &FactoredCoordinate<Qi>, name: &str) -> Self {
        let conv = |terms: &[FactorTerm<Qi>]| {
            terms
                .iter()
                .map(|t| TermRepr {
                    coeffs: t
                        .form
                        .poly
                        .coeffs
                        .iter()
                        .map(|row| row.iter().map(|c| c.to_string()).collect())
                        .collect(),
                    bidegree: t.form.bidegree,
                    mult: t.mult,
                    class: t.class.map(|c| c.0),
                })
                .collect()
        };
        CoordRepr {
            constant: match &c.constant {
                Some(v) => v.to_string(),
                None => format!("symbolic:{name}"),
            },
            numerator: conv(&c.numerator),
            denominator: conv(&c.denominator),
        }
    }
}
