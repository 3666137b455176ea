//! Dense linear algebra over `F_q`. Matrices are row-major; a linear map is
//! stored with the image of basis vector `j` in column `j`.

use crate::arith::Fq;

pub type Matrix = Vec<Vec<u64>>;

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![0; cols]; rows]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

pub fn mat_mul(f: &Fq, a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = zeros(n, m);
    for i in 0..n {
        for l in 0..k {
            let x = a[i][l];
            if x == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] = f.add(out[i][j], f.mul(x, b[l][j]));
            }
        }
    }
    out
}

pub fn mat_vec(f: &Fq, a: &Matrix, v: &[u64]) -> Vec<u64> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
        })
        .collect()
}

pub fn mat_pow(f: &Fq, a: &Matrix, mut e: u64) -> Matrix {
    let mut base = a.clone();
    let mut acc = identity(a.len());
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul(f, &acc, &base);
        }
        base = mat_mul(f, &base, &base);
        e >>= 1;
    }
    acc
}

pub fn mat_add(f: &Fq, a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(&s, &t)| f.add(s, t)).collect())
        .collect()
}

pub fn mat_scale(f: &Fq, c: u64, a: &Matrix) -> Matrix {
    a.iter()
        .map(|row| row.iter().map(|&x| f.mul(c, x)).collect())
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| (0..rows).map(|i| a[i][j]).collect())
        .collect()
}

pub fn vec_add(f: &Fq, a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
}

pub fn vec_scale(f: &Fq, c: u64, a: &[u64]) -> Vec<u64> {
    a.iter().map(|&x| f.mul(c, x)).collect()
}

/// Reduced row echelon form; returns the reduced matrix and pivot columns.
pub fn rref(f: &Fq, a: &Matrix) -> (Matrix, Vec<usize>) {
    let mut m = a.clone();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = f.inv(m[r][c]).expect("pivot is nonzero");
        m[r] = vec_scale(f, inv, &m[r]);
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let factor = f.neg(m[i][c]);
                let scaled = vec_scale(f, factor, &m[r]);
                m[i] = vec_add(f, &m[i], &scaled);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

pub fn rank(f: &Fq, a: &Matrix) -> usize {
    rref(f, a).1.len()
}

/// Basis of the column space, each vector with leading coordinate 1.
pub fn column_space(f: &Fq, a: &Matrix) -> Vec<Vec<u64>> {
    let (m, pivots) = rref(f, &transpose(a));
    m.into_iter().take(pivots.len()).collect()
}

/// Coordinates of `target` in the span of `basis`, if it lies there.
pub fn solve_in_span(f: &Fq, basis: &[Vec<u64>], target: &[u64]) -> Option<Vec<u64>> {
    let n = target.len();
    let k = basis.len();
    let augmented: Matrix = (0..n)
        .map(|i| {
            let mut row: Vec<u64> = basis.iter().map(|b| b[i]).collect();
            row.push(target[i]);
            row
        })
        .collect();
    let (m, pivots) = rref(f, &augmented);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![0; k];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = m[row][k];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_solve_over_f7() {
        let f = Fq::new(7).unwrap();
        let a = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank(&f, &a), 2);
        let basis = vec![vec![1, 0, 2], vec![0, 1, 1]];
        let target = vec![3, 5, 4]; // 3*b0 + 5*b1 = (3, 5, 6 + 5 = 11 = 4)
        assert_eq!(solve_in_span(&f, &basis, &target), Some(vec![3, 5]));
        assert_eq!(solve_in_span(&f, &basis, &[0, 0, 1]), None);
    }

    #[test]
    fn column_space_is_normalized() {
        let f = Fq::new(5).unwrap();
        let a = vec![vec![2, 4], vec![3, 2]];
        let cs = column_space(&f, &a);
        assert_eq!(cs.len(), 2);
        let rank_one = vec![vec![2, 4], vec![4, 3]];
        let cs = column_space(&f, &rank_one);
        assert_eq!(cs, vec![vec![1, 2]]);
    }

    #[test]
    fn power_of_permutation() {
        let f = Fq::new(3).unwrap();
        let shift = vec![vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]];
        assert_eq!(mat_pow(&f, &shift, 3), identity(3));
        assert_ne!(mat_pow(&f, &shift, 2), identity(3));
    }
}
