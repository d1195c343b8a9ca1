//! Exact dense linear algebra over a `Field`.

use crate::scalar::{Field, Scalar};

pub type Vector = Vec<Scalar>;

/// Reduce `rows` to reduced row echelon form in place. Returns pivot columns.
pub fn rref(rows: &mut Vec<Vector>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        if !inv.is_one() {
            for x in rows[r].iter_mut().skip(c) {
                *x = x.mul(&inv);
            }
        }
        let prow = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for k in c..ncols {
                if !prow[k].is_zero() {
                    row[k] = row[k].sub(&f.mul(&prow[k]));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vector], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of `{x : A x = 0}` where `A` has the given rows.
pub fn kernel(field: Field, rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let mut is_pivot = vec![None; ncols];
    for (i, &p) in pivots.iter().enumerate() {
        is_pivot[p] = Some(i);
    }
    let mut out = Vec::new();
    for free in 0..ncols {
        if is_pivot[free].is_some() {
            continue;
        }
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = m[i][free].neg();
        }
        out.push(v);
    }
    out
}

/// Solve `A x = b` for one solution, `None` if inconsistent.
/// `cols` are the columns of `A`.
pub fn solve_columns(field: Field, cols: &[Vector], b: &Vector) -> Option<Vector> {
    let n = cols.len();
    let m = b.len();
    let mut rows: Vec<Vector> = (0..m)
        .map(|i| {
            let mut r: Vector = cols.iter().map(|c| c[i].clone()).collect();
            r.push(b[i].clone());
            r
        })
        .collect();
    let pivots = rref(&mut rows, n + 1);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![field.zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = rows[i][n].clone();
    }
    Some(x)
}

/// Subspace of `field^ambient`, stored as an RREF basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { field, ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![field.zero(); ambient];
                v[i] = field.one();
                v
            })
            .collect();
        Subspace { field, ambient, basis, pivots: (0..ambient).collect() }
    }

    pub fn span(field: Field, ambient: usize, vecs: Vec<Vector>) -> Subspace {
        let mut b = vecs;
        for v in &b {
            assert_eq!(v.len(), ambient);
        }
        let pivots = rref(&mut b, ambient);
        Subspace { field, ambient, basis: b, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating the pivot coordinates.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut w = v.clone();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for k in p..self.ambient {
                if !row[k].is_zero() {
                    w[k] = w[k].sub(&f.mul(&row[k]));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains_space(&self, o: &Subspace) -> bool {
        o.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        let mut v = self.basis.clone();
        v.extend(o.basis.iter().cloned());
        Subspace::span(self.field, self.ambient, v)
    }

    /// Orthogonal complement for the standard bilinear form.
    pub fn perp(&self) -> Subspace {
        Subspace::span(self.field, self.ambient, kernel(self.field, &self.basis, self.ambient))
    }

    pub fn intersect(&self, o: &Subspace) -> Subspace {
        self.perp().sum(&o.perp()).perp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(f: Field, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| f.from_i64(x)).collect()
    }

    #[test]
    fn kernel_dimension() {
        let f = Field::Rational;
        let rows = vec![v(f, &[1, 2, 3]), v(f, &[2, 4, 6])];
        let k = kernel(f, &rows, 3);
        assert_eq!(k.len(), 2);
        for x in &k {
            let s = x[0].add(&x[1].mul(&f.from_i64(2))).add(&x[2].mul(&f.from_i64(3)));
            assert!(s.is_zero());
        }
    }

    #[test]
    fn subspace_ops() {
        let f = Field::Prime(101);
        let a = Subspace::span(f, 3, vec![v(f, &[1, 0, 0]), v(f, &[0, 1, 0])]);
        let b = Subspace::span(f, 3, vec![v(f, &[0, 1, 0]), v(f, &[0, 0, 1])]);
        assert_eq!(a.intersect(&b).dim(), 1);
        assert_eq!(a.sum(&b).dim(), 3);
        assert!(a.perp().contains(&v(f, &[0, 0, 5])));
    }

    #[test]
    fn solve() {
        let f = Field::Rational;
        let cols = vec![v(f, &[1, 1]), v(f, &[1, -1])];
        let x = solve_columns(f, &cols, &v(f, &[3, 1])).unwrap();
        assert_eq!(x, v(f, &[2, 1]));
        let cols = vec![v(f, &[1, 1])];
        assert!(solve_columns(f, &cols, &v(f, &[1, 0])).is_none());
    }
}
