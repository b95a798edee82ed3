//! Small exact linear algebra: null spaces and dense determinants.

use num_traits::{One, Zero};

use super::rational::Rational;
use super::ring::Ring;

/// Basis of `{ v : A v = 0 }` for a dense rational matrix given by rows.
/// Each basis vector has a 1 in its free pivot-less column.
pub fn null_space(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| {
        let mut r = r.clone();
        r.resize(ncols, Rational::zero());
        r
    }).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = Rational::one() / &m[row][col];
        for v in m[row].iter_mut() {
            *v *= &inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..ncols {
                    let d = &f * &m[row][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rational::zero(); ncols];
            v[fc] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][fc].clone();
            }
            v
        })
        .collect()
}

/// Determinant by cofactor expansion along the first row. Exponential cost;
/// intended for cross-checking banded routines on small matrices.
pub fn dense_determinant<T: Ring>(m: &[Vec<T>], unit: &T) -> T {
    let n = m.len();
    if n == 0 {
        return unit.one_like();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = unit.zero_like();
    for j in 0..n {
        if m[0][j].is_zero_elem() {
            continue;
        }
        let minor: Vec<Vec<T>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = m[0][j].clone() * dense_determinant(&minor, unit);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    #[test]
    fn null_space_of_rank_one() {
        let rows = vec![vec![int(1), int(2), int(3)], vec![int(2), int(4), int(6)]];
        let ns = null_space(&rows, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &rows {
                let dot: Rational = r.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn determinant_of_three_by_three() {
        let m = vec![
            vec![int(2), int(0), int(1)],
            vec![int(1), int(3), int(2)],
            vec![int(1), int(1), int(2)],
        ];
        assert_eq!(dense_determinant(&m, &int(1)), int(6));
        let m = vec![vec![rat(1, 2), int(1)], vec![int(3), int(4)]];
        assert_eq!(dense_determinant(&m, &int(1)), int(-1));
    }
}
