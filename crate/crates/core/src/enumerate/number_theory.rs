//! Totients and coprime pair counts.

use num_integer::Integer;

/// `φ(0..=limit)` by a linear sieve; index 0 holds 0.
pub fn totient_sieve(limit: usize) -> Vec<u64> {
    let mut phi = vec![0u64; limit + 1];
    if limit >= 1 {
        phi[1] = 1;
    }
    let mut primes: Vec<usize> = Vec::new();
    let mut composite = vec![false; limit + 1];
    for i in 2..=limit {
        if !composite[i] {
            primes.push(i);
            phi[i] = (i - 1) as u64;
        }
        for &p in &primes {
            let ip = i * p;
            if ip > limit {
                break;
            }
            composite[ip] = true;
            if i % p == 0 {
                phi[ip] = phi[i] * p as u64;
                break;
            }
            phi[ip] = phi[i] * (p - 1) as u64;
        }
    }
    phi
}

/// Ordered pairs of positive coprime integers with `a·b < m`.
pub fn coprime_pair_count(m: u64) -> u64 {
    let mut total = 0;
    for a in 1..m {
        let bmax = (m - 1) / a;
        if bmax == 0 {
            break;
        }
        total += (1..=bmax).filter(|b| a.gcd(b) == 1).count() as u64;
    }
    total
}

/// `pp(m)` for every `m ≤ limit` in one pass: a product `t` contributes
/// `2^ω(t)` ordered coprime factorizations.
pub fn coprime_pair_table(limit: usize) -> Vec<u64> {
    let mut distinct = vec![0u32; limit];
    for p in 2..limit {
        if distinct[p] == 0 {
            let mut q = p;
            while q < limit {
                distinct[q] += 1;
                q += p;
            }
        }
    }
    let mut table = vec![0u64; limit + 1];
    for m in 2..=limit {
        table[m] = table[m - 1] + (1u64 << distinct[m - 1]);
    }
    table
}

/// `C(n, k)` with checked arithmetic.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc.checked_mul(n as u128 - i)? / (i + 1);
    }
    u64::try_from(acc).ok()
}
