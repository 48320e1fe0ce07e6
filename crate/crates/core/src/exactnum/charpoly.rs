//! Characteristic polynomials of integer matrices.
//!
//! Computed exactly by reducing to Hessenberg form modulo word-sized primes
//! and recombining with the Chinese remainder theorem. The number of primes
//! comes from an a-priori coefficient bound, so the result is never a guess.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::IntPolynomial;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes just below 2^31, descending.
fn primes() -> impl Iterator<Item = u64> {
    (1u64..(1 << 31))
        .rev()
        .filter(|&n| n % 2 == 1 && is_prime(n))
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Characteristic polynomial `det(xI - A)` of a square matrix modulo `p`,
/// lowest degree first.
fn charpoly_mod(a: &[Vec<i64>], p: u64) -> Vec<u64> {
    let n = a.len();
    let mut h: Vec<Vec<u64>> = a
        .iter()
        .map(|row| row.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect())
        .collect();
    // similarity reduction to upper Hessenberg form
    for m in 1..n.saturating_sub(1) {
        let Some(piv) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if piv != m {
            h.swap(piv, m);
            for row in h.iter_mut() {
                row.swap(piv, m);
            }
        }
        let inv = pow_mod(h[m][m - 1], p - 2, p);
        for i in m + 1..n {
            let f = h[i][m - 1] * inv % p;
            if f == 0 {
                continue;
            }
            let pivot = h[m].clone();
            for (x, y) in h[i].iter_mut().zip(&pivot) {
                *x = (*x + p - f * y % p) % p;
            }
            for row in h.iter_mut() {
                let t = f * row[i] % p;
                row[m] = (row[m] + t) % p;
            }
        }
    }
    // Hessenberg recurrence: c_k = charpoly of leading k x k block
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        // c_k = (x - h[k-1][k-1]) c_{k-1} - sum_{i<k-1} h[i][k-1] * prod sub * c_i
        let prev = &polys[k - 1];
        let mut ck = vec![0u64; k + 1];
        for (i, &c) in prev.iter().enumerate() {
            ck[i + 1] = (ck[i + 1] + c) % p;
            ck[i] = (ck[i] + p - c * h[k - 1][k - 1] % p) % p;
        }
        let mut prod = 1u64;
        for i in (0..k - 1).rev() {
            prod = prod * h[i + 1][i] % p;
            let coef = prod * h[i][k - 1] % p;
            if coef == 0 {
                continue;
            }
            for (j, &c) in polys[i].iter().enumerate() {
                ck[j] = (ck[j] + p - coef * c % p) % p;
            }
        }
        polys.push(ck);
    }
    polys.pop().unwrap()
}

/// Exact characteristic polynomial `det(xI - A)` of an integer matrix.
pub fn integer_charpoly(a: &[Vec<i64>]) -> IntPolynomial {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return IntPolynomial::one();
    }
    // the coefficient of x^(n-j) is a signed sum of j x j principal minors;
    // by Hadamard each is at most the product of its rows' 2-norms, so every
    // coefficient is bounded by prod_i (1 + |row_i|_2)
    let mut bound = BigInt::one();
    for row in a {
        let sq: BigInt = row.iter().map(|&v| BigInt::from(v) * BigInt::from(v)).sum();
        let mut r = sq.sqrt();
        if &r * &r < sq {
            r += 1;
        }
        bound *= r + 1;
    }
    let needed = BigInt::from(2) * bound + BigInt::one();

    let mut modulus = BigInt::one();
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    for p in primes() {
        let cp = charpoly_mod(a, p);
        let pb = BigInt::from(p);
        // Garner step: acc := acc + modulus * ((c - acc) * modulus^-1 mod p)
        let minv = pow_mod((&modulus % &pb).try_into().unwrap(), p - 2, p);
        for (x, &c) in acc.iter_mut().zip(&cp) {
            let cur: u64 = x.mod_floor(&pb).try_into().unwrap();
            let diff = (c + p - cur) % p;
            let t = diff * minv % p;
            *x += &modulus * BigInt::from(t);
        }
        modulus *= pb;
        if modulus >= needed {
            break;
        }
    }
    let half = &modulus / 2;
    let coeffs = acc
        .into_iter()
        .map(|x| {
            let x = x.mod_floor(&modulus);
            if x > half {
                x - &modulus
            } else {
                x
            }
        })
        .collect();
    let out = IntPolynomial::new(coeffs);
    debug_assert!(out.leading().is_positive());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_k4() {
        let a: Vec<Vec<i64>> = (0..4)
            .map(|i| (0..4).map(|j| i64::from(i != j)).collect())
            .collect();
        // (x - 3)(x + 1)^3
        let expect = &IntPolynomial::from_roots(&[3]) * &IntPolynomial::from_roots(&[-1, -1, -1]);
        assert_eq!(integer_charpoly(&a), expect);
    }

    #[test]
    fn small_dense_matches_cofactor_expansion() {
        let a = vec![vec![2, -1, 0], vec![3, 5, 7], vec![-4, 1, 1]];
        // det(xI - A) = x^3 - tr x^2 + (sum of principal 2-minors) x - det
        let tr = 8;
        let m2 = (2 * 5 + 3) + 2 + (5 - 7);
        let det = 2 * (5 - 7) + (3 + 28);
        assert_eq!(
            integer_charpoly(&a),
            IntPolynomial::from_i64(&[-det, m2, -tr, 1])
        );
    }
}
