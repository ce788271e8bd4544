//! Small dense linear algebra over the rational-function field, used to
//! solve the polynomial-coefficient systems produced by the summation
//! algorithms. Entries stay normalized, so elimination is exact.

use crate::poly::RatFunc;

/// Solve `M x = rhs`; returns one solution (free variables set to zero) or
/// `None` when inconsistent.
pub fn solve_linear(mut m: Vec<Vec<RatFunc>>, mut rhs: Vec<RatFunc>) -> Option<Vec<RatFunc>> {
    let rows = m.len();
    if rows == 0 {
        return Some(Vec::new());
    }
    let cols = m[0].len();
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0usize;
    for col in 0..cols {
        let pivot_row = (row..rows).find(|&r| !m[r][col].is_zero());
        let pr = match pivot_row {
            None => continue,
            Some(pr) => pr,
        };
        m.swap(row, pr);
        rhs.swap(row, pr);
        let inv = m[row][col].recip();
        for c in col..cols {
            m[row][c] = m[row][c].mul(&inv);
        }
        rhs[row] = rhs[row].mul(&inv);
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..cols {
                    let t = m[row][c].mul(&factor);
                    m[r][c] = m[r][c].sub(&t);
                }
                let t = rhs[row].mul(&factor);
                rhs[r] = rhs[r].sub(&t);
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    // Inconsistent if a zero row has nonzero rhs.
    for r in row..rows {
        if !rhs[r].is_zero() {
            return None;
        }
    }
    // With free variables at zero, each pivot variable reads off its row.
    let mut x = vec![RatFunc::zero(); cols];
    for (r, &col) in pivot_col_of_row.iter().enumerate() {
        x[col] = rhs[r].clone();
    }
    Some(x)
}

/// Basis of the null space of `M x = 0`.
pub fn null_space(mut m: Vec<Vec<RatFunc>>) -> Vec<Vec<RatFunc>> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0usize;
    for col in 0..cols {
        let pivot_row = (row..rows).find(|&r| !m[r][col].is_zero());
        let pr = match pivot_row {
            None => continue,
            Some(pr) => pr,
        };
        m.swap(row, pr);
        let inv = m[row][col].recip();
        for c in col..cols {
            m[row][c] = m[row][c].mul(&inv);
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..cols {
                    let t = m[row][c].mul(&factor);
                    m[r][c] = m[r][c].sub(&t);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut v = vec![RatFunc::zero(); cols];
        v[fc] = RatFunc::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = m[r][fc].neg();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{MultiPoly, Var};

    fn rf(n: i64) -> RatFunc {
        RatFunc::from_int(n)
    }

    #[test]
    fn solve_2x2() {
        // x + y = 3; x - y = 1 -> x = 2, y = 1
        let m = vec![vec![rf(1), rf(1)], vec![rf(1), rf(-1)]];
        let sol = solve_linear(m, vec![rf(3), rf(1)]).unwrap();
        assert_eq!(sol, vec![rf(2), rf(1)]);
    }

    #[test]
    fn solve_inconsistent() {
        let m = vec![vec![rf(1), rf(1)], vec![rf(2), rf(2)]];
        assert!(solve_linear(m, vec![rf(1), rf(3)]).is_none());
    }

    #[test]
    fn null_space_simple() {
        // x + y + z = 0 over Q(k): nullity 2
        let k = RatFunc::from_poly(MultiPoly::var(Var::K));
        let m = vec![vec![RatFunc::one(), k.clone(), RatFunc::one()]];
        let basis = null_space(m);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            let s = v[0].add(&k.mul(&v[1])).add(&v[2]);
            assert!(s.is_zero());
        }
    }
}
