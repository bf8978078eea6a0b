//! Arbitrary-precision helpers: CRT and prime search.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

/// Solves `x ≡ a1 (mod n1)`, `x ≡ a2 (mod n2)`. Returns the least
/// nonnegative solution and `lcm(n1, n2)`, or `None` when
/// `gcd(n1, n2) ∤ a2 - a1`.
pub fn crt_pair(a1: &BigUint, n1: &BigUint, a2: &BigUint, n2: &BigUint) -> Option<(BigUint, BigUint)> {
    let n1i = BigInt::from(n1.clone());
    let n2i = BigInt::from(n2.clone());
    let eg = n1i.extended_gcd(&n2i);
    let g = eg.gcd;
    let diff = BigInt::from(a2.clone()) - BigInt::from(a1.clone());
    if !diff.is_multiple_of(&g) {
        return None;
    }
    let lcm = (&n1i / &g) * &n2i;
    let step = (&n2i / &g).max(BigInt::one());
    // x = a1 + n1 * ((diff / g) * inv(n1/g mod n2/g) mod n2/g)
    let k = ((diff / &g) * eg.x).mod_floor(&step);
    let x = (BigInt::from(a1.clone()) + n1i * k).mod_floor(&lcm);
    Some((to_biguint(x), to_biguint(lcm)))
}

fn to_biguint(x: BigInt) -> BigUint {
    debug_assert!(x.sign() != Sign::Minus);
    x.into_parts().1
}

/// Folds [`crt_pair`] over a list of congruences.
pub fn crt<'a, I>(congruences: I) -> Option<(BigUint, BigUint)>
where
    I: IntoIterator<Item = (&'a BigUint, &'a BigUint)>,
{
    let mut acc = (BigUint::zero(), BigUint::one());
    for (a, n) in congruences {
        acc = crt_pair(&acc.0, &acc.1, &(a % n), n)?;
    }
    Some(acc)
}

const SMALL_PRIMES: [u32; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Miller–Rabin with the first 25 primes as bases. Exact below
/// 3.3·10^24; above that a composite passes with probability at most
/// 4^-25.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u8);
    if *n < two {
        return false;
    }
    for &p in &SMALL_PRIMES {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - 1u8;
    let s = n_minus_1.trailing_zeros().expect("n - 1 is nonzero");
    let d = &n_minus_1 >> s;
    'bases: for &b in &SMALL_PRIMES {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Smallest (probable) prime strictly greater than `n`.
pub fn next_prime_after(n: &BigUint) -> BigUint {
    let mut c = n + 1u8;
    while !is_probable_prime(&c) {
        c += 1u8;
    }
    c
}
