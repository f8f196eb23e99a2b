//! Arithmetic and linear algebra over a prime field `F_p`, `p < 2^31`.

pub(crate) fn is_prime(n: u64) -> bool {
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

/// Least prime `p ≡ 1 (mod m)` with `p > lower`.
pub(crate) fn prime_one_mod(m: u64, lower: u64) -> u64 {
    let mut p = (lower / m + 1) * m + 1;
    while !is_prime(p) {
        p += m;
    }
    p
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Least generator of `F_p^×`.
pub(crate) fn primitive_root(p: u64) -> u64 {
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&f| pow_mod(g, (p - 1) / f, p) != 1))
        .unwrap_or(1)
}

/// Row-reduces `rows` in place; returns the pivot column of each surviving row.
pub(crate) fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, piv);
        let s = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * s % p;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            let f = row[c];
            if i != r && f != 0 {
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{y : A y = 0}` for a square matrix `A`.
pub(crate) fn nullspace(a: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut m = a.to_vec();
    let pivots = rref(&mut m, p);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut y = vec![0; n];
            y[f] = 1;
            for (row, &pc) in m.iter().zip(&pivots) {
                y[pc] = (p - row[f]) % p;
            }
            y
        })
        .collect()
}

/// Characteristic polynomial `det(xI - A)`, coefficients from the constant term upward.
pub(crate) fn charpoly(a: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = a.len();
    let mut h = a.to_vec();
    // similarity reduction to upper Hessenberg form
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| h[i][j] != 0) else { continue };
        if i != j + 1 {
            h.swap(i, j + 1);
            for row in h.iter_mut() {
                row.swap(i, j + 1);
            }
        }
        let inv = inv_mod(h[j + 1][j], p);
        for k in j + 2..n {
            let u = h[k][j] * inv % p;
            if u == 0 {
                continue;
            }
            for c in 0..n {
                h[k][c] = (h[k][c] + p - u * h[j + 1][c] % p) % p;
            }
            for row in h.iter_mut() {
                row[j + 1] = (row[j + 1] + u * row[k]) % p;
            }
        }
    }
    // p_{m+1} = (x - h_mm) p_m - Σ_{i<m} h_im (Π_{l=i+1..m} h_{l,l-1}) p_i
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        let mut next = vec![0u64; m + 2];
        for (d, &c) in polys[m].iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = (next[d] + p - h[m][m] * c % p) % p;
        }
        let mut prod = 1u64;
        for i in (0..m).rev() {
            prod = prod * h[i + 1][i] % p;
            let coeff = h[i][m] * prod % p;
            if coeff == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = (next[d] + p - coeff * c % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

pub(crate) fn eval_poly(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_roots() {
        assert_eq!(prime_one_mod(1020, 2000), 3061);
        let g = primitive_root(3061);
        let mut seen = std::collections::HashSet::new();
        let mut x = 1;
        for _ in 0..3060 {
            x = x * g % 3061;
            seen.insert(x);
        }
        assert_eq!(seen.len(), 3060);
    }

    #[test]
    fn charpoly_matches_determinant_expansion() {
        let p = 101;
        // companion matrix of x^3 - 2x^2 + 5x - 7
        let a = vec![vec![0, 0, 7], vec![1, 0, 101 - 5], vec![0, 1, 2]];
        assert_eq!(charpoly(&a, p), vec![101 - 7, 5, 101 - 2, 1]);
        // a dense 3×3 checked against trace / determinant
        let b = vec![vec![3, 1, 4], vec![1, 5, 9], vec![2, 6, 5]];
        let cp = charpoly(&b, p);
        let trace = 13;
        let det = (3 * (25 - 54) - (5 - 18) + 4 * (6 - 10)) as i64;
        assert_eq!(cp[3], 1);
        assert_eq!(cp[2], (p - trace) % p);
        assert_eq!(cp[0], ((-det).rem_euclid(p as i64)) as u64);
    }

    #[test]
    fn nullspace_of_projection() {
        let p = 7;
        let a = vec![vec![1, 1, 0], vec![0, 0, 0], vec![0, 0, 1]];
        let ns = nullspace(&a, p);
        assert_eq!(ns, vec![vec![6, 1, 0]]);
    }
}
