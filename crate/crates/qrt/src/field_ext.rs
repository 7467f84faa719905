use numeric::factor::qi_roots;
use numeric::poly::UniPoly;
use numeric::roots::durand_kerner;
use numeric::{BigC, Field, Qi};

/// Root-finding and square-root capabilities layered over [`Field`]; the
/// exact instantiation refuses roots outside `ℚ(i)` while the floating one
/// always answers.
pub trait PencilField: Field {
    /// All roots with multiplicities, or `None` when some root lies outside
    /// the field.
    fn poly_roots(p: &UniPoly<Self>) -> Option<Vec<(Self, usize)>>;
    fn sqrt(&self) -> Option<Self>;
}

impl PencilField for Qi {
    fn poly_roots(p: &UniPoly<Qi>) -> Option<Vec<(Qi, usize)>> {
        let (roots, rest) = qi_roots(p);
        if rest.degree().is_some_and(|d| d > 0) {
            return None;
        }
        Some(roots)
    }

    fn sqrt(&self) -> Option<Qi> {
        self.sqrt_exact()
    }
}

impl PencilField for BigC {
    fn poly_roots(p: &UniPoly<BigC>) -> Option<Vec<(BigC, usize)>> {
        let d = p.degree()?;
        if d == 0 {
            return Some(vec![]);
        }
        let prec = p
            .coeffs
            .iter()
            .map(|c| c.prec())
            .max()
            .unwrap_or(128)
            .max(128);
        let raw = durand_kerner(p, prec);
        // Cluster nearby roots into multiplicities.
        let scale = raw.iter().map(|r| r.approx_mag()).fold(1.0, f64::max);
        let tol = scale * 2f64.powi(-((prec / 3) as i32));
        let mut clusters: Vec<(BigC, usize)> = Vec::new();
        'outer: for r in raw {
            for (c, m) in clusters.iter_mut() {
                if (r.clone() - c.clone()).approx_mag() < tol.max(1e-290) {
                    *m += 1;
                    continue 'outer;
                }
            }
            clusters.push((r, 1));
        }
        Some(clusters)
    }

    fn sqrt(&self) -> Option<BigC> {
        Some(BigC::sqrt(self))
    }
}
