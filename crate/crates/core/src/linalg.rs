//! Dense exact linear algebra over `Q`: row reduction, affine solution
//! spaces, minimum-norm solutions, and characteristic polynomials.

use num_traits::{One, Zero};

use crate::rational::{qi, Q};

pub type Matrix = Vec<Vec<Q>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect()
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner)
                        .filter(|&k| !row[k].is_zero() && !b[k][j].is_zero())
                        .map(|k| &row[k] * &b[k][j])
                        .sum()
                })
                .collect()
        })
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let cols = a.first().map_or(0, |r| r.len());
    (0..cols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_vec(a: &Matrix, x: &[Q]) -> Vec<Q> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(r, v)| r * v).sum())
        .collect()
}

pub fn dot(x: &[Q], y: &[Q]) -> Q {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut w = m.clone();
    rref(&mut w).len()
}

/// The solution set `{x0 + N z}` of `A x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vec<Q>,
    /// Null-space basis vectors (columns of `N`).
    pub kernel: Vec<Vec<Q>>,
    /// Independent rows `R x = c` equivalent to the original system.
    pub rows: Matrix,
    pub rhs: Vec<Q>,
}

/// Solves `A x = b`; `None` if inconsistent.
pub fn solve_affine(a: &Matrix, b: &[Q]) -> Option<AffineSolution> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, v)| {
            let mut r = row.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let rank = pivots.len();
    let mut particular = vec![Q::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = aug[r][cols].clone();
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let kernel = free
        .iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -aug[r][f].clone();
            }
            v
        })
        .collect();
    let rows = aug[..rank].iter().map(|r| r[..cols].to_vec()).collect();
    let rhs = aug[..rank].iter().map(|r| r[cols].clone()).collect();
    Some(AffineSolution {
        particular,
        kernel,
        rows,
        rhs,
    })
}

/// Solves a square non-singular system; `None` if singular.
pub fn solve_square(a: &Matrix, b: &[Q]) -> Option<Vec<Q>> {
    let sol = solve_affine(a, b)?;
    sol.kernel.is_empty().then_some(sol.particular)
}

impl AffineSolution {
    /// The unique solution lying in the row space, i.e. of least Euclidean
    /// norm: `x = Rᵀ y` with `R Rᵀ y = c`.
    pub fn min_norm(&self) -> Vec<Q> {
        if self.rows.is_empty() {
            return vec![Q::zero(); self.particular.len()];
        }
        let rt = transpose(&self.rows);
        let gram = mul(&self.rows, &rt);
        let y = solve_square(&gram, &self.rhs).expect("independent rows give an invertible Gram matrix");
        mat_vec(&rt, &y)
    }

    pub fn point(&self, base: &[Q], z: &[Q]) -> Vec<Q> {
        let mut x = base.to_vec();
        for (k, coef) in self.kernel.iter().zip(z) {
            for (xi, ki) in x.iter_mut().zip(k) {
                *xi += coef * ki;
            }
        }
        x
    }
}

/// Characteristic polynomial `det(xI - A)` by Faddeev–LeVerrier;
/// coefficients from `x^n` (always 1) down to the constant term.
pub fn charpoly(a: &Matrix) -> Vec<Q> {
    let n = a.len();
    let mut coeffs = vec![Q::one()];
    let mut m = vec![vec![Q::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = mul(a, &m);
        let prev = coeffs.last().unwrap().clone();
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &prev;
        }
        let am = mul(a, &next);
        let trace: Q = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs.push(-trace / qi(k as i64));
        m = next;
    }
    coeffs
}

/// Evaluates a polynomial given by descending coefficients.
pub fn poly_eval(coeffs: &[Q], x: &Q) -> Q {
    coeffs.iter().fold(Q::zero(), |acc, c| acc * x + c)
}

/// Multiplicity of `root` in the polynomial (descending coefficients).
pub fn root_multiplicity(coeffs: &[Q], root: &Q) -> usize {
    let mut p = coeffs.to_vec();
    let mut mult = 0;
    while p.len() > 1 && poly_eval(&p, root).is_zero() {
        // synthetic division by (x - root)
        let mut q = Vec::with_capacity(p.len() - 1);
        let mut acc = Q::zero();
        for c in &p[..p.len() - 1] {
            acc = acc * root + c;
            q.push(acc.clone());
        }
        p = q;
        mult += 1;
    }
    mult
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&v| qi(v)).collect()).collect()
    }

    #[test]
    fn rref_and_rank() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a), 2);
    }

    #[test]
    fn min_norm_on_a_line() {
        // 3x + 6y = 1 -> (1/15, 2/15)
        let a = m(&[&[3, 6]]);
        let sol = solve_affine(&a, &[qi(1)]).unwrap();
        assert_eq!(sol.min_norm(), vec![q(1, 15), q(2, 15)]);
        assert_eq!(sol.kernel.len(), 1);
    }

    #[test]
    fn inconsistent_system() {
        let a = m(&[&[1, 1], &[1, 1]]);
        assert!(solve_affine(&a, &[qi(1), qi(2)]).is_none());
    }

    #[test]
    fn charpoly_of_small_matrices() {
        // [[2,1],[1,2]] -> x^2 - 4x + 3
        let a = m(&[&[2, 1], &[1, 2]]);
        assert_eq!(charpoly(&a), vec![qi(1), qi(-4), qi(3)]);
        let k4 = m(&[&[0, 1, 1, 1], &[1, 0, 1, 1], &[1, 1, 0, 1], &[1, 1, 1, 0]]);
        let p = charpoly(&k4);
        assert_eq!(root_multiplicity(&p, &qi(-1)), 3);
        assert_eq!(root_multiplicity(&p, &qi(3)), 1);
    }
}
