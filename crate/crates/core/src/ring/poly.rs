//! Dense polynomials over Z_p, coefficients stored constant term first.

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Remainder of `a` modulo the monic polynomial `m`.
pub fn rem_monic(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let deg_m = m.len() - 1;
    debug_assert_eq!(m[deg_m], 1);
    let p64 = p as u64;
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64 % p64).collect();
    while r.len() > deg_m {
        let lead = r.pop().unwrap();
        if lead == 0 {
            continue;
        }
        let shift = r.len() - deg_m;
        for (i, &mc) in m[..deg_m].iter().enumerate() {
            let sub = lead * mc as u64 % p64;
            r[shift + i] = (r[shift + i] + p64 - sub) % p64;
        }
    }
    trim(r.into_iter().map(|c| c as u32).collect())
}

/// Product of two polynomials reduced modulo the monic `m`.
pub fn mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let p64 = p as u64;
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p64;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
    rem_monic(&prod, m, p)
}

/// Coefficient vector for `value` read as base-p digits, constant term least significant.
pub fn from_digits(mut value: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((value % p as u64) as u32);
        value /= p as u64;
    }
    out
}

/// Exhaustive trial division by every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let f = trim(f.to_vec());
    if f.len() < 2 {
        return false;
    }
    let deg = f.len() - 1;
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut g = from_digits(low, p, d);
            g.push(1);
            if rem_monic(&f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible of degree `k`, ordering candidates by their
/// lower coefficients read as a base-p number.
pub fn default_irreducible(p: u32, k: u32) -> Vec<u32> {
    let count = (p as u64).pow(k);
    (0..count)
        .map(|low| {
            let mut f = from_digits(low, p, k as usize);
            f.push(1);
            f
        })
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial of every degree exists over a prime field")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let small: Vec<u32> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn x2_x_1_over_z5_has_no_roots() {
        let f = [1, 1, 1];
        for x in 0..5u32 {
            assert_ne!((x * x + x + 1) % 5, 0);
        }
        assert!(is_irreducible(&f, 5));
    }

    #[test]
    fn x2_x_1_over_z3_is_reducible() {
        // (x - 1)^2 = x^2 + x + 1 over Z3
        assert!(!is_irreducible(&[1, 1, 1], 3));
    }

    #[test]
    fn defaults() {
        assert_eq!(default_irreducible(5, 2), vec![2, 0, 1]);
        assert_eq!(default_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(default_irreducible(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(default_irreducible(3, 2), vec![1, 0, 1]);
        assert_eq!(default_irreducible(7, 1), vec![0, 1]);
    }

    #[test]
    fn quartic_without_roots_can_still_factor() {
        // (x^2 + x + 1)^2 = x^4 + x^2 + 1 over Z2
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
    }
}
