//! Small integer-arithmetic helpers: primality, totient, 2-valuation.
//!
//! Everything here operates at desk scale (dimensions and moduli far below
//! 2^32), so trial division is the honest tool.

pub use num_integer::gcd;

/// Primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut f = 3;
    while f * f <= n {
        if n % f == 0 {
            return false;
        }
        f += 2;
    }
    true
}

/// Euler totient φ(n) by factorization through trial division.
pub fn totient(n: u64) -> u64 {
    let mut n = n;
    let mut phi = n;
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            phi -= phi / f;
            while n % f == 0 {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// 2-valuation: the exponent of 2 in n. `two_valuation(0)` is undefined and
/// returns `u32::MAX` as a sentinel (0 is divisible by every power of 2).
pub fn two_valuation(n: i64) -> u32 {
    if n == 0 {
        return u32::MAX;
    }
    n.trailing_zeros()
}

/// Decompose n as p^e with p prime, if possible.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut m = n;
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            return if m == 1 { Some((p, e)) } else { None };
        }
        p += 1;
    }
    Some((n, 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(!is_prime(1));
        assert!(!is_prime(121));
    }

    #[test]
    fn totients() {
        assert_eq!(totient(9), 6);
        assert_eq!(totient(15), 8);
        assert_eq!(totient(5), 4);
        assert_eq!(totient(1), 1);
    }

    #[test]
    fn valuations() {
        assert_eq!(two_valuation(2), 1);
        assert_eq!(two_valuation(8), 3);
        assert_eq!(two_valuation(-12), 2);
        assert_eq!(two_valuation(7), 0);
        assert_eq!(two_valuation(0), u32::MAX);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(15), None);
        assert_eq!(prime_power(1), None);
    }
}
