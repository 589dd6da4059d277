use num_rational::Rational64;

use super::{NumTheoryError, RFType};

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    // This base set decides primality for all n < 2^64.
    'base: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mod_mul(x, x, n);
            if x == n - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

fn mod_mul(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn mod_pow(mut base: u64, mut exp: u64, n: u64) -> u64 {
    let mut acc = 1u64 % n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, n);
        }
        base = mod_mul(base, base, n);
        exp >>= 1;
    }
    acc
}

/// Legendre symbol (r/p) by Euler's criterion: +1 iff r is a quadratic
/// residue mod the odd prime p.
pub fn legendre(r: i64, p: u64) -> Result<i32, NumTheoryError> {
    if p == 2 || !is_prime(p) {
        return Err(NumTheoryError::NotOddPrime(p));
    }
    let reduced = r.rem_euclid(p as i64) as u64;
    if reduced == 0 {
        return Err(NumTheoryError::NotCoprime { r, p });
    }
    let e = mod_pow(reduced, (p - 1) / 2, p);
    Ok(if e == 1 { 1 } else { -1 })
}

/// p-adic Hilbert symbol (a, b)_p for nonzero rationals.
///
/// A rational argument u/w has the same symbol as the integer u*w (they
/// differ by the square w^2), so both arguments reduce to integers first.
/// For odd p, with a = p^alpha u and b = p^beta v (u, v coprime to p):
///   (a, b)_p = (-1/p)^(alpha beta) * (u/p)^beta * (v/p)^alpha,
/// which is the closed form of factoring out p-powers and applying the
/// multiplicativity, unit, and Legendre-reduction rules. For p = 2 the
/// standard dyadic formula applies:
///   (a, b)_2 = (-1)^(eps(u) eps(v) + alpha omega(v) + beta omega(u)),
/// with eps(u) = (u-1)/2 and omega(u) = (u^2-1)/8 taken mod 2.
pub fn hilbert(a: Rational64, b: Rational64, p: u64) -> Result<i32, NumTheoryError> {
    if a.numer() == &0 || b.numer() == &0 {
        return Err(NumTheoryError::ZeroArgument);
    }
    if !is_prime(p) {
        return Err(NumTheoryError::NotPrime(p));
    }
    let to_int = |x: Rational64| x.numer() * x.denom();
    hilbert_int(to_int(a), to_int(b), p)
}

fn hilbert_int(a: i64, b: i64, p: u64) -> Result<i32, NumTheoryError> {
    let (alpha, u) = strip_p(a, p);
    let (beta, v) = strip_p(b, p);
    if p == 2 {
        let eps = |x: i64| x.rem_euclid(4) / 2; // (x-1)/2 mod 2 for odd x
        let omega = |x: i64| i64::from(matches!(x.rem_euclid(8), 3 | 5)); // (x^2-1)/8 mod 2
        let exponent = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
        return Ok(if exponent % 2 == 0 { 1 } else { -1 });
    }
    let mut sign = 1i32;
    if (alpha * beta) % 2 == 1 {
        // (-1/p): +1 iff p = 1 mod 4.
        sign *= legendre(-1, p)?;
    }
    if beta % 2 == 1 {
        sign *= legendre(u, p)?;
    }
    if alpha % 2 == 1 {
        sign *= legendre(v, p)?;
    }
    Ok(sign)
}

/// Splits x = p^k * u with u coprime to p, keeping u's sign.
fn strip_p(mut x: i64, p: u64) -> (i64, i64) {
    let p = p as i64;
    let mut k = 0;
    while x % p == 0 {
        x /= p;
        k += 1;
    }
    (k, x)
}

/// S_p of a rational-family type: the product of (s_i, s_j)_p over all
/// position pairs i < j.
pub fn s_p(t: &RFType, p: u64) -> Result<i32, NumTheoryError> {
    if !is_prime(p) {
        return Err(NumTheoryError::NotPrime(p));
    }
    let entries = t.entries();
    let mut acc = 1i32;
    for (i, &si) in entries.iter().enumerate() {
        for &sj in &entries[i + 1..] {
            acc *= hilbert_int(si as i64, sj as i64, p)?;
        }
    }
    Ok(acc)
}

/// The primes that can contribute a factor other than +1 to some S_p of
/// this type: 2 together with the odd primes dividing some entry. For any
/// prime outside this set every pair is coprime to p, so each factor is +1.
pub fn relevant_primes(t: &RFType) -> Vec<u64> {
    let mut primes = vec![2u64];
    for &e in t.entries() {
        let mut n = e;
        while n % 2 == 0 {
            n /= 2;
        }
        let mut d = 3u64;
        while d * d <= n {
            if n % d == 0 {
                if !primes.contains(&d) {
                    primes.push(d);
                }
                while n % d == 0 {
                    n /= d;
                }
            }
            d += 2;
        }
        if n > 1 && !primes.contains(&n) {
            primes.push(n);
        }
    }
    primes.sort_unstable();
    primes
}
