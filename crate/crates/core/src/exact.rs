//! Exact matrix rank over the rationals and over GF(2).
//!
//! Integer matrices are reduced with fraction-free row operations and content
//! normalization. The `i64` path is tried first; on overflow the same
//! elimination is repeated over arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Rank over ℚ of an integer matrix given as rows.
pub fn rank_integer(rows: &[Vec<i64>]) -> usize {
    match rank_i64(rows.to_vec()) {
        Some(r) => r,
        None => rank_bigint(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        ),
    }
}

/// Rank over ℚ of a rational matrix given as rows.
pub fn rank_rational(rows: &[Vec<BigRational>]) -> usize {
    let scaled = rows
        .iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect::<Vec<BigInt>>()
        })
        .collect();
    rank_bigint(scaled)
}

fn rank_i64(mut m: Vec<Vec<i64>>) -> Option<usize> {
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let pivot = (rank..m.len())
            .filter(|&r| m[r][col] != 0)
            .min_by_key(|&r| m[r][col].unsigned_abs());
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        let pv = m[rank][col];
        for r in rank + 1..m.len() {
            let a = m[r][col];
            if a == 0 {
                continue;
            }
            let g = pv.gcd(&a);
            let (fp, fa) = (pv / g, a / g);
            let mut content = 0i64;
            for c in col..ncols {
                let v = m[r][c]
                    .checked_mul(fp)?
                    .checked_sub(m[rank][c].checked_mul(fa)?)?;
                m[r][c] = v;
                content = content.gcd(&v);
            }
            if content > 1 {
                for c in col..ncols {
                    m[r][c] /= content;
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn rank_bigint(mut m: Vec<Vec<BigInt>>) -> usize {
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let pivot = (rank..m.len())
            .filter(|&r| !m[r][col].is_zero())
            .min_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()));
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        let pv = m[rank][col].clone();
        for r in rank + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let g = pv.gcd(&m[r][col]);
            let fp = &pv / &g;
            let fa = &m[r][col] / &g;
            let mut content = BigInt::zero();
            for c in col..ncols {
                let v = &m[r][c] * &fp - &m[rank][c] * &fa;
                content = content.gcd(&v);
                m[r][c] = v;
            }
            if content > BigInt::from(1) {
                for c in col..ncols {
                    m[r][c] = &m[r][c] / &content;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over GF(2); each row is a bitset packed into `u64` words.
pub fn rank_gf2(mut rows: Vec<Vec<u64>>) -> usize {
    let words = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..words * 64 {
        let (w, b) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & b != 0) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][w] & b != 0 {
                for k in w..words {
                    let x = rows[rank][k];
                    rows[r][k] ^= x;
                }
            }
        }
        rank += 1;
    }
    rank
}
