//! Exact rank computation for dense rational matrices.
//!
//! Rows are scaled to integers, then eliminated fraction-free with content
//! stripping after every update, so all arithmetic stays in BigInt.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

/// Rank of a dense matrix given as rows of rationals.
pub(crate) fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let int_rows: Vec<Vec<BigInt>> = rows.iter().map(|r| scale_row(r)).collect();
    integer_rank(int_rows)
}

fn scale_row(row: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in row {
        if !c.is_zero() {
            lcm = lcm.lcm(c.denom());
        }
    }
    let mut out: Vec<BigInt> = row.iter().map(|c| (c * &lcm).to_integer()).collect();
    strip_content(&mut out);
    out
}

fn strip_content(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for c in row.iter() {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for c in row.iter_mut() {
        *c = &*c / &g;
    }
}

pub(crate) fn integer_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        // smallest nonzero pivot keeps the cross-multiplications tame
        let piv = (row..rows)
            .filter(|&r| !m[r][col].is_zero())
            .min_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()));
        let Some(piv) = piv else { continue };
        m.swap(row, piv);
        let pivot = m[row][col].clone();
        for r in row + 1..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let g = pivot.gcd(&m[r][col]);
            let fa = &pivot / &g;
            let fb = &m[r][col] / &g;
            for c in col..cols {
                let v = &fa * &m[r][c] - &fb * &m[row][c];
                m[r][c] = v;
            }
            strip_content(&mut m[r][col..]);
        }
        rank += 1;
        row += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from_i64(n).unwrap(), BigInt::from_i64(d).unwrap())
    }

    #[test]
    fn ranks() {
        assert_eq!(rational_rank(&[]), 0);
        assert_eq!(rational_rank(&[vec![q(0, 1), q(0, 1)]]), 0);
        assert_eq!(
            rational_rank(&[vec![q(1, 2), q(1, 3)], vec![q(3, 1), q(2, 1)]]),
            1
        );
        assert_eq!(
            rational_rank(&[vec![q(1, 1), q(0, 1)], vec![q(1, 1), q(1, 1)]]),
            2
        );
        // 3x3 with a dependent third row
        let rows = vec![
            vec![q(2, 1), q(4, 1), q(6, 1)],
            vec![q(1, 1), q(0, 1), q(1, 1)],
            vec![q(3, 1), q(4, 1), q(7, 1)],
        ];
        assert_eq!(rational_rank(&rows), 2);
    }
}
