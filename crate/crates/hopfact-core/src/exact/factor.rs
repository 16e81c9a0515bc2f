//! Factorization of univariate polynomials over the rationals.
//!
//! Pipeline: Yun square-free decomposition over Q, then for each square-free
//! part a Zassenhaus round over Z — Berlekamp factorization modulo a good
//! prime, Hensel lifting past the Landau–Mignotte bound, and subset
//! recombination. Output is a deterministically ordered list of monic
//! irreducible factors with multiplicities.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{poly_order, Polynomial};
use super::scalar::Scalar;

/// Monic irreducible factors of `p` with multiplicities, sorted by degree and
/// then by coefficients. The product of the factor powers equals `p` up to
/// its leading coefficient.
pub fn factor_poly(p: &Polynomial) -> Vec<(Polynomial, u32)> {
    assert!(!p.is_zero(), "cannot factor the zero polynomial");
    if p.degree() == 0 {
        return Vec::new();
    }
    let monic = p.monic();
    let mut out = Vec::new();
    for (part, mult) in yun_squarefree(&monic) {
        for irr in factor_squarefree(&part) {
            out.push((irr, mult));
        }
    }
    out.sort_by(|(a, _), (b, _)| poly_order(a, b));
    out
}

/// Yun's square-free decomposition of a monic polynomial in characteristic 0.
fn yun_squarefree(f: &Polynomial) -> Vec<(Polynomial, u32)> {
    let df = f.derivative();
    let g = f.gcd(&df);
    if g.degree() == 0 {
        return vec![(f.clone(), 1)];
    }
    let mut parts = Vec::new();
    let mut c = f.div_rem(&g).0;
    let mut d = &df.div_rem(&g).0 - &c.derivative();
    let mut i = 1u32;
    while c.degree() > 0 {
        let p = c.gcd(&d);
        if p.degree() > 0 {
            parts.push((p.clone(), i));
        }
        c = c.div_rem(&p).0;
        d = &d.div_rem(&p).0 - &c.derivative();
        i += 1;
    }
    parts
}

/// Factor a monic square-free rational polynomial into monic irreducibles.
fn factor_squarefree(f: &Polynomial) -> Vec<Polynomial> {
    if f.degree() <= 1 {
        return vec![f.clone()];
    }
    // Clear denominators: primitive integer polynomial.
    let fz = to_primitive_integer(f);
    let lc = fz.last().unwrap().clone();
    if lc.is_one() {
        factor_monic_integer(&fz)
            .into_iter()
            .map(|z| z_to_rational(&z).monic())
            .collect()
    } else {
        // Monicize: g(y) = lc^(n-1) f(y/lc) is monic; pull factors back.
        let g = monicize(&fz);
        factor_monic_integer(&g)
            .into_iter()
            .map(|h| {
                // h(y) irreducible factor of g; f-side factor is the
                // primitive part of h(lc·x).
                let hx = substitute_scaled(&h, &lc);
                z_to_rational(&primitive_part(&hx)).monic()
            })
            .collect()
    }
}

/// Factor a monic square-free integer polynomial into monic irreducible
/// integer polynomials (Zassenhaus).
fn factor_monic_integer(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let (p, modular) = berlekamp_mod_good_prime(f);
    if modular.len() == 1 {
        // Irreducible mod p with the same degree: irreducible over Z.
        return vec![f.to_vec()];
    }
    // Hensel lift past twice the factor coefficient bound.
    let bound = mignotte_bound(f);
    let mut big_p = BigInt::from(p);
    let mut k = 1u32;
    let target = BigInt::from(2) * &bound + 1;
    while big_p <= target {
        big_p *= BigInt::from(p);
        k += 1;
    }
    let lifted = hensel_lift_factors(f, &modular, p, k);
    recombine(f, lifted, &big_p)
}

/// Pick a prime not dividing the leading coefficient for which `f` stays
/// square-free, then Berlekamp-factor `f mod p` into monic factors. Several
/// good primes are tried and the one giving the fewest modular factors wins,
/// which keeps the recombination subset scan small.
fn berlekamp_mod_good_prime(f: &[BigInt]) -> (u64, Vec<Vec<u64>>) {
    const PRIMES: &[u64] = &[
        3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
        97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
        191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281,
        283, 293, 307, 311, 313, 317, 331, 337, 347, 349, 353, 359, 367, 373, 379, 383, 389, 397,
        401, 409, 419, 421, 431, 433, 439, 443, 449, 457, 461, 463, 467, 479, 487, 491, 499, 503,
        509, 521, 523, 541,
    ];
    let mut best: Option<(u64, Vec<Vec<u64>>)> = None;
    let mut tried = 0;
    for &p in PRIMES {
        if (f.last().unwrap() % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = reduce_mod(f, p);
        let dfp = fp_derivative(&fp, p);
        if fp_gcd(&fp, &dfp, p).len() != 1 {
            continue;
        }
        let monic = fp_monic(&fp, p);
        let factors = berlekamp(&monic, p);
        if factors.len() == 1 {
            return (p, factors); // irreducible mod p: cannot do better
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
        tried += 1;
        if tried == 4 {
            break;
        }
    }
    best.expect("a square-free polynomial has good primes below 541")
}

// ---------------------------------------------------------------------------
// F_p[x] arithmetic. Polynomials are Vec<u64>, lowest degree first, trimmed.
// ---------------------------------------------------------------------------

fn fp_trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn reduce_mod(f: &[BigInt], p: u64) -> Vec<u64> {
    let bp = BigInt::from(p);
    fp_trim(
        f.iter()
            .map(|c| {
                let r = c.mod_floor(&bp);
                r.to_u64_digits().1.first().copied().unwrap_or(0)
            })
            .collect(),
    )
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn fp_add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + y) % p;
    }
    fp_trim(out)
}

fn fp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    fp_trim(out)
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    fp_trim(out)
}

fn fp_scale(a: &[u64], c: u64, p: u64) -> Vec<u64> {
    fp_trim(a.iter().map(|&x| mulmod(x, c, p)).collect())
}

fn fp_divrem(a: &[u64], d: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(!d.is_empty());
    let mut r = a.to_vec();
    let dd = d.len() - 1;
    let lead_inv = inv_mod(*d.last().unwrap(), p);
    if r.len() <= dd {
        return (vec![], fp_trim(r));
    }
    let mut q = vec![0u64; r.len() - dd];
    while r.len() > dd {
        let factor = mulmod(*r.last().unwrap(), lead_inv, p);
        let k = r.len() - 1 - dd;
        if factor != 0 {
            q[k] = factor;
            for (i, &c) in d.iter().enumerate() {
                r[k + i] = (r[k + i] + p - mulmod(c, factor, p)) % p;
            }
        }
        r.pop();
        while r.last() == Some(&0) && r.len() > dd {
            r.pop();
        }
    }
    (fp_trim(q), fp_trim(r))
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        let r = fp_divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    fp_monic(&a, p)
}

fn fp_monic(a: &[u64], p: u64) -> Vec<u64> {
    match a.last() {
        None => vec![],
        Some(1) => a.to_vec(),
        Some(&lc) => fp_scale(a, inv_mod(lc, p), p),
    }
}

fn fp_derivative(a: &[u64], p: u64) -> Vec<u64> {
    if a.len() <= 1 {
        return vec![];
    }
    fp_trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulmod(c, (i as u64) % p, p))
            .collect(),
    )
}

/// x^e mod f over F_p.
fn fp_xpow_mod(e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut base = fp_divrem(&[0, 1], f, p).1;
    let mut exp = e;
    while exp > 0 {
        if exp & 1 == 1 {
            result = fp_divrem(&fp_mul(&result, &base, p), f, p).1;
        }
        base = fp_divrem(&fp_mul(&base, &base, p), f, p).1;
        exp >>= 1;
    }
    result
}

/// Berlekamp factorization of a monic square-free polynomial over F_p into
/// monic irreducible factors. Fully deterministic.
fn berlekamp(f: &[u64], p: u64) -> Vec<Vec<u64>> {
    let n = f.len() - 1;
    // Frobenius matrix: row i = x^(i*p) mod f.
    let xp = fp_xpow_mod(p, f, p);
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut cur = vec![1u64];
    for _ in 0..n {
        let mut padded = cur.clone();
        padded.resize(n, 0);
        rows.push(padded);
        cur = fp_divrem(&fp_mul(&cur, &xp, p), f, p).1;
    }
    // Kernel of (Q - I) acting on row vectors: v·Q = v.
    // Transpose Q - I and compute its null space.
    let mut m = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let q = rows[i][j];
            let delta = u64::from(i == j);
            m[j][i] = (q + p - delta) % p;
        }
    }
    let kernel = fp_nullspace(m, p);
    let r = kernel.len();
    let mut factors = vec![f.to_vec()];
    for v in &kernel {
        if factors.len() == r {
            break;
        }
        if v.iter().skip(1).all(|&c| c == 0) {
            continue; // constant vector splits nothing
        }
        let vpoly = fp_trim(v.clone());
        let mut next = Vec::new();
        for g in factors {
            if g.len() - 1 <= 1 {
                next.push(g);
                continue;
            }
            let mut pieces = vec![g];
            for s in 0..p {
                if pieces.iter().all(|g| g.len() - 1 <= 1) {
                    break;
                }
                let shifted = fp_sub(&vpoly, &[s], p);
                let mut split_out = Vec::new();
                for g in pieces {
                    let d = fp_gcd(&g, &shifted, p);
                    if d.len() > 1 && d.len() < g.len() {
                        let q = fp_divrem(&g, &d, p).0;
                        split_out.push(d);
                        split_out.push(fp_monic(&q, p));
                    } else {
                        split_out.push(g);
                    }
                }
                pieces = split_out;
            }
            next.extend(pieces);
        }
        factors = next;
    }
    factors.sort();
    factors
}

/// Null space basis over F_p (vectors of fixed length n).
fn fp_nullspace(mut m: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let rows = m.len();
    let n = if rows == 0 { 0 } else { m[0].len() };
    let mut pivot_of_col = vec![usize::MAX; n];
    let mut rank = 0;
    for col in 0..n {
        let Some(src) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, src);
        let inv = inv_mod(m[rank][col], p);
        for j in 0..n {
            m[rank][j] = mulmod(m[rank][j], inv, p);
        }
        for r in 0..rows {
            if r != rank && m[r][col] != 0 {
                let factor = m[r][col];
                for j in 0..n {
                    m[r][j] = (m[r][j] + p - mulmod(factor, m[rank][j], p)) % p;
                }
            }
        }
        pivot_of_col[col] = rank;
        rank += 1;
    }
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_of_col[free] != usize::MAX {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free] = 1;
        for col in 0..n {
            let r = pivot_of_col[col];
            if r != usize::MAX {
                v[col] = (p - m[r][free]) % p;
            }
        }
        basis.push(v);
    }
    basis
}

// ---------------------------------------------------------------------------
// Hensel lifting (monic case) and recombination.
// ---------------------------------------------------------------------------

/// Lift `f ≡ ∏ factors (mod p)` to mod p^k; `f` monic, factors monic and
/// pairwise coprime mod p.
fn hensel_lift_factors(f: &[BigInt], factors: &[Vec<u64>], p: u64, k: u32) -> Vec<Vec<BigInt>> {
    let modulus = BigInt::from(p).pow(k);
    let f_mod: Vec<BigInt> = f.iter().map(|c| c.mod_floor(&modulus)).collect();
    if factors.len() == 1 {
        return vec![f_mod];
    }
    let g0 = factors[0].clone();
    let rest = &factors[1..];
    let mut h0 = vec![1u64];
    for h in rest {
        h0 = fp_mul(&h0, h, p);
    }
    let (g_lifted, h_lifted) = hensel_pair(&f_mod, &g0, &h0, p, k);
    let mut out = vec![g_lifted];
    out.extend(hensel_lift_factors(&bigint_trim(h_lifted), rest, p, k));
    out
}

fn bigint_trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

/// Linear Hensel lift of a monic coprime pair from mod p to mod p^k.
fn hensel_pair(
    f: &[BigInt],
    g0: &[u64],
    h0: &[u64],
    p: u64,
    k: u32,
) -> (Vec<BigInt>, Vec<BigInt>) {
    // Bezout: s·g0 + t·h0 = 1 in F_p[x].
    let (s, t) = fp_bezout(g0, h0, p);
    let bp = BigInt::from(p);
    let mut g: Vec<BigInt> = g0.iter().map(|&c| BigInt::from(c)).collect();
    let mut h: Vec<BigInt> = h0.iter().map(|&c| BigInt::from(c)).collect();
    let mut pk = bp.clone();
    for _ in 1..k {
        let next = &pk * &bp;
        // e = (f - g h) / p^i, reduced mod p.
        let prod = z_mul(&g, &h);
        let diff = z_sub(f, &prod);
        let e_mod: Vec<u64> = reduce_mod(
            &bigint_trim(diff.iter().map(|c| c / &pk).collect()),
            p,
        );
        if !e_mod.is_empty() {
            // δg = t·e mod g0, δh = s·e + q·h0 where q is the quotient.
            let te = fp_mul(&t, &e_mod, p);
            let (q, dg) = fp_divrem(&te, g0, p);
            let dh = fp_add(&fp_mul(&s, &e_mod, p), &fp_mul(&q, h0, p), p);
            debug_assert!(dh.len() < h0.len(), "Hensel correction too large");
            for (i, &c) in dg.iter().enumerate() {
                g[i] = (&g[i] + BigInt::from(c) * &pk).mod_floor(&next);
            }
            for (i, &c) in dh.iter().enumerate() {
                h[i] = (&h[i] + BigInt::from(c) * &pk).mod_floor(&next);
            }
        }
        pk = next;
    }
    (g, h)
}

/// Extended Euclid in F_p[x]: returns (s, t) with s·a + t·b = 1 for coprime a, b.
fn fp_bezout(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], vec![]);
    let (mut t0, mut t1) = (vec![], vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let s = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    assert_eq!(r0.len(), 1, "fp_bezout: inputs not coprime");
    let inv = inv_mod(r0[0], p);
    (fp_scale(&s0, inv, p), fp_scale(&t0, inv, p))
}

fn z_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn z_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigInt::zero);
        *o = x - y;
    }
    out
}

/// Landau–Mignotte style bound: any monic factor of monic `f` has coefficients
/// bounded by binom(n, n/2) · ||f||_1.
fn mignotte_bound(f: &[BigInt]) -> BigInt {
    let n = (f.len() - 1) as u64;
    let norm1: BigInt = f.iter().map(|c| c.abs()).sum();
    binomial(n, n / 2) * norm1
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Map a residue mod `m` into the symmetric range (-m/2, m/2].
fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Subset recombination of lifted modular factors into true integer factors.
fn recombine(f: &[BigInt], lifted: Vec<Vec<BigInt>>, modulus: &BigInt) -> Vec<Vec<BigInt>> {
    let mut remaining = f.to_vec();
    let mut pool: Vec<Vec<BigInt>> = lifted;
    let mut found = Vec::new();
    let mut card = 1usize;
    'outer: while 2 * card <= pool.len() {
        // Enumerate subsets of the current pool with exactly `card` elements
        // in ascending bitmask order; restart after every extraction.
        let r = pool.len();
        assert!(r < 63, "recombination pool too large");
        let last = ((1u64 << card) - 1) << (r - card);
        let mut mask = (1u64 << card) - 1;
        loop {
            let mut cand = vec![BigInt::one()];
            for (i, h) in pool.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    cand = z_mul(&cand, h);
                    for c in &mut cand {
                        *c = c.mod_floor(modulus);
                    }
                }
            }
            let cand: Vec<BigInt> = cand.iter().map(|c| symmetric(c, modulus)).collect();
            // Quick test on the constant term before the full division.
            let skip = !remaining[0].is_zero()
                && !cand[0].is_zero()
                && !remaining[0].is_multiple_of(&cand[0]);
            if !skip {
                let cand_q = z_to_rational(&cand);
                let rem_q = z_to_rational(&remaining);
                let (quot, rem) = rem_q.div_rem(&cand_q);
                if rem.is_zero() {
                    found.push(cand);
                    remaining = to_primitive_integer(&quot.monic());
                    pool = pool
                        .into_iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 0)
                        .map(|(_, h)| h)
                        .collect();
                    continue 'outer;
                }
            }
            if mask == last {
                break;
            }
            mask = next_same_popcount(mask);
        }
        card += 1;
    }
    if remaining.len() > 1 {
        found.push(remaining);
    }
    found
}

/// Gosper's hack: the next larger integer with the same number of set bits.
fn next_same_popcount(mask: u64) -> u64 {
    let c = mask & mask.wrapping_neg();
    let r = mask + c;
    r | (((mask ^ r) >> 2) / c)
}

// ---------------------------------------------------------------------------
// Conversions between Q[x] and Z[x].
// ---------------------------------------------------------------------------

/// Clear denominators and divide by the content; leading coefficient positive.
fn to_primitive_integer(f: &Polynomial) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in f.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    primitive_part(&ints)
}

fn primitive_part(f: &[BigInt]) -> Vec<BigInt> {
    let mut content = BigInt::zero();
    for c in f {
        content = content.gcd(c);
    }
    if content.is_zero() {
        return f.to_vec();
    }
    if f.last().unwrap().is_negative() {
        content = -content;
    }
    f.iter().map(|c| c / &content).collect()
}

fn z_to_rational(f: &[BigInt]) -> Polynomial {
    Polynomial::new(f.iter().map(|c| Scalar::from_bigint(c.clone())).collect())
}

/// g(y) = lc^(n-1) · f(y/lc): monic integer polynomial with the same splitting.
fn monicize(f: &[BigInt]) -> Vec<BigInt> {
    let n = f.len() - 1;
    let lc = f.last().unwrap().clone();
    let mut out = Vec::with_capacity(f.len());
    // Coefficient of y^i picks up lc^(n-1-i).
    for (i, c) in f.iter().enumerate() {
        if i == n {
            out.push(BigInt::one());
        } else {
            out.push(c * lc.pow((n - 1 - i) as u32));
        }
    }
    out
}

/// h(lc·x) as an integer polynomial.
fn substitute_scaled(h: &[BigInt], lc: &BigInt) -> Vec<BigInt> {
    h.iter()
        .enumerate()
        .map(|(i, c)| c * lc.pow(i as u32))
        .collect()
}
