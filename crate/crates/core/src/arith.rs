//! Small integer helpers: factorisation, gcd, the first primes.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Prime factorisation by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}

/// `Some((p, e))` when `n = p^e` with `e >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

pub fn first_primes(r: usize) -> Vec<u64> {
    let mut primes = Vec::with_capacity(r);
    let mut candidate = 2u64;
    while primes.len() < r {
        if is_prime(candidate) {
            primes.push(candidate);
        }
        candidate += 1;
    }
    primes
}

/// All partitions of `n` into positive parts, each partition non-increasing.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// True when every group of order `n` is abelian: `n` is cube-free and no
/// `p^a || n` (or a lower power of `p`) is congruent to 1 modulo another prime divisor.
pub fn is_abelian_number(n: u64) -> bool {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e >= 3) {
        return false;
    }
    for &(p, a) in &f {
        for &(q, _) in &f {
            if p == q {
                continue;
            }
            let mut pk = 1u64;
            for _ in 0..a {
                pk *= p;
                if pk % q == 1 {
                    return false;
                }
            }
        }
    }
    true
}
