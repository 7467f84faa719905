use crate::field::Field;

/// Dense row-major matrix over a field.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<F: Field> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<F>,
}

impl<F: Field> Mat<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows_data: Vec<Vec<F>>) -> Self {
        let rows = rows_data.len();
        let cols = rows_data.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows * cols);
        for r in rows_data {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        Mat { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    fn scale_mag(&self) -> f64 {
        self.data
            .iter()
            .map(|v| v.approx_mag())
            .fold(0.0, f64::max)
            .max(1e-300)
    }

    pub fn mul_mat(&self, rhs: &Mat<F>) -> Mat<F> {
        assert_eq!(self.cols, rhs.rows);
        let mut out: Mat<F> = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k).clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a.clone() * rhs.get(k, j).clone());
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for j in 0..self.cols {
                    acc = acc + self.get(i, j).clone() * v[j].clone();
                }
                acc
            })
            .collect()
    }

    /// Row echelon reduction with full column pivoting disabled (plain partial
    /// pivoting by magnitude). Returns pivot columns; mutates in place.
    fn row_reduce(&mut self, scale: f64) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r >= self.rows {
                break;
            }
            // Best pivot by magnitude.
            let mut best = r;
            let mut best_mag = self.get(r, c).approx_mag();
            for rr in (r + 1)..self.rows {
                let m = self.get(rr, c).approx_mag();
                if m > best_mag {
                    best = rr;
                    best_mag = m;
                }
            }
            if self.get(best, c).is_negligible(scale) {
                continue;
            }
            if best != r {
                for j in 0..self.cols {
                    let a = self.get(r, j).clone();
                    let b = self.get(best, j).clone();
                    self.set(r, j, b);
                    self.set(best, j, a);
                }
            }
            let inv = self.get(r, c).inv();
            for j in c..self.cols {
                let v = self.get(r, j).clone() * inv.clone();
                self.set(r, j, v);
            }
            for rr in 0..self.rows {
                if rr == r || self.get(rr, c).is_zero() {
                    continue;
                }
                let f = self.get(rr, c).clone();
                for j in c..self.cols {
                    let v = self.get(rr, j).clone() - f.clone() * self.get(r, j).clone();
                    self.set(rr, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let s = self.scale_mag();
        m.row_reduce(s).len()
    }

    /// Basis of the right null space.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let mut m = self.clone();
        let s = self.scale_mag();
        let pivots = m.row_reduce(s);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &fc in &free {
            let mut v = vec![F::zero(); self.cols];
            v[fc] = F::one();
            for (pi, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.get(pi, fc).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `self · x = b` for square or overdetermined consistent systems.
    /// Free variables are set to zero; returns `None` when inconsistent.
    pub fn solve_least(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let s = aug.scale_mag();
        let pivots = aug.row_reduce(s);
        // Inconsistent iff a pivot lands in the rhs column.
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (pi, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(pi, self.cols).clone();
        }
        // Verify for floating fields (residual must be negligible).
        if !F::EXACT {
            let r = self.mul_vec(&x);
            let sc = self.scale_mag() * b.iter().map(|v| v.approx_mag()).fold(1.0, f64::max);
            for (ri, bi) in r.iter().zip(b.iter()) {
                if !(ri.clone() - bi.clone()).is_negligible(sc) {
                    return None;
                }
            }
        }
        Some(x)
    }

    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let s = self.scale_mag();
        let mut det = F::one();
        for c in 0..n {
            let mut best = c;
            let mut best_mag = m.get(c, c).approx_mag();
            for r in (c + 1)..n {
                let mag = m.get(r, c).approx_mag();
                if mag > best_mag {
                    best = r;
                    best_mag = mag;
                }
            }
            if m.get(best, c).is_negligible(s) {
                return F::zero();
            }
            if best != c {
                for j in 0..n {
                    let a = m.get(c, j).clone();
                    let b = m.get(best, j).clone();
                    m.set(c, j, b);
                    m.set(best, j, a);
                }
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det = det * piv.clone();
            let inv = piv.inv();
            for r in (c + 1)..n {
                if m.get(r, c).is_zero() {
                    continue;
                }
                let f = m.get(r, c).clone() * inv.clone();
                for j in c..n {
                    let v = m.get(r, j).clone() - f.clone() * m.get(c, j).clone();
                    m.set(r, j, v);
                }
            }
        }
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::Qi;

    fn qi(n: i64) -> Qi {
        Qi::from_int(n)
    }

    #[test]
    fn det_and_solve() {
        let m = Mat::from_rows(vec![
            vec![qi(2), qi(1)],
            vec![qi(1), qi(3)],
        ]);
        assert_eq!(m.det(), qi(5));
        let x = m.solve_least(&[qi(4), qi(7)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![qi(4), qi(7)]);
    }

    #[test]
    fn nullspace_dim() {
        // x + y + z = 0 has a 2-dim null space.
        let m = Mat::from_rows(vec![vec![qi(1), qi(1), qi(1)]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let r = m.mul_vec(v);
            assert!(r[0].is_zero());
        }
    }

    #[test]
    fn inconsistent_solve() {
        let m = Mat::from_rows(vec![vec![qi(1)], vec![qi(1)]]);
        assert!(m.solve_least(&[qi(1), qi(2)]).is_none());
    }
}
