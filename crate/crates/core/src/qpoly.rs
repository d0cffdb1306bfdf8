//! Arithmetic in small finite fields `F_q`, monic irreducible polynomials,
//! the conjugation `φ*(z) = φ(0)^{-1} z^n φ(z^{-1})`, and the counts
//! `N*(q;d)` (self-conjugate irreducibles) and `M*(q;d)` (conjugate pairs).
//!
//! Fields are table-driven: an element is an index `0..q` encoding a
//! polynomial over `F_p` in base `p`, so `0` and `1` are always the additive
//! and multiplicative identities. Irreducible enumeration uses a product
//! sieve (mark every `g·h` with `g` irreducible of degree ≤ d/2), which keeps
//! full enumeration practical up to `q^d ≈ 2^26`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QpolyError {
    #[error("q = {0} is not a supported prime power (need p^k with q <= {MAX_Q})")]
    UnsupportedField(u64),
    #[error("polynomial has zero constant term; the conjugation is undefined")]
    ZeroConstantTerm,
    #[error("enumeration space q^d = {q}^{d} exceeds the sieve budget")]
    SieveBudgetExceeded { q: u64, d: u32 },
}

const MAX_Q: u64 = 256;
const MAX_SIEVE: u64 = 1 << 26;

/// A finite field `F_q`, `q = p^k`, with dense addition/multiplication tables.
#[derive(Debug)]
pub struct FqField {
    q: u64,
    p: u64,
    k: u32,
    add: Vec<u16>,
    mul: Vec<u16>,
    inv: Vec<u16>,
    neg: Vec<u16>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Split q into (p, k) with q = p^k, p prime.
fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut m = q;
            let mut k = 0;
            while m % p == 0 {
                m /= p;
                k += 1;
            }
            return if m == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

impl FqField {
    pub fn new(q: u64) -> Result<FqField, QpolyError> {
        let (p, k) = prime_power(q).ok_or(QpolyError::UnsupportedField(q))?;
        if q > MAX_Q || !is_prime(p) {
            return Err(QpolyError::UnsupportedField(q));
        }
        let modulus = find_prime_field_irreducible(p, k);
        let qs = q as usize;
        let mut add = vec![0u16; qs * qs];
        let mut mul = vec![0u16; qs * qs];
        let mut neg = vec![0u16; qs];
        for a in 0..q {
            for b in 0..q {
                add[(a * q + b) as usize] = add_base_p(a, b, p) as u16;
                mul[(a * q + b) as usize] = mul_mod_poly(a, b, p, k, &modulus) as u16;
            }
            neg[a as usize] = neg_base_p(a, p) as u16;
        }
        let mut inv = vec![0u16; qs];
        for a in 1..q {
            for b in 1..q {
                if mul[(a * q + b) as usize] == 1 {
                    inv[a as usize] = b as u16;
                    break;
                }
            }
        }
        Ok(FqField { q, p, k, add, mul, inv, neg })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn inv(&self, a: u16) -> u16 {
        debug_assert!(a != 0);
        self.inv[a as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = u16> {
        0..self.q as u16
    }
}

/// Digit-wise addition of base-p encodings.
fn add_base_p(a: u64, b: u64, p: u64) -> u64 {
    let mut out = 0;
    let mut mult = 1;
    let (mut a, mut b) = (a, b);
    while a > 0 || b > 0 {
        out += ((a % p + b % p) % p) * mult;
        a /= p;
        b /= p;
        mult *= p;
    }
    out
}

fn neg_base_p(a: u64, p: u64) -> u64 {
    let mut out = 0;
    let mut mult = 1;
    let mut a = a;
    while a > 0 {
        out += ((p - a % p) % p) * mult;
        a /= p;
        mult *= p;
    }
    out
}

/// Multiply base-p digit polynomials and reduce mod the degree-k modulus.
fn mul_mod_poly(a: u64, b: u64, p: u64, k: u32, modulus: &[u64]) -> u64 {
    let digits = |mut v: u64| {
        let mut d = Vec::new();
        while v > 0 {
            d.push(v % p);
            v /= p;
        }
        d
    };
    let da = digits(a);
    let db = digits(b);
    let mut prod = vec![0u64; da.len() + db.len()];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // reduce modulo the monic modulus of degree k
    for i in (k as usize..prod.len()).rev() {
        let c = prod[i];
        if c != 0 {
            prod[i] = 0;
            for (j, &m) in modulus.iter().enumerate().take(k as usize) {
                let idx = i - k as usize + j;
                prod[idx] = (prod[idx] + (p - m % p) * c) % p;
            }
        }
    }
    let mut out = 0;
    for i in (0..k as usize).rev() {
        out = out * p + prod.get(i).copied().unwrap_or(0);
    }
    out
}

/// Lexicographically first monic irreducible of degree k over F_p
/// (lower coefficients only; the leading 1 is implicit).
fn find_prime_field_irreducible(p: u64, k: u32) -> Vec<u64> {
    if k == 1 {
        return vec![0];
    }
    let total = p.pow(k);
    'cand: for idx in 0..total {
        let mut coeffs = Vec::with_capacity(k as usize);
        let mut v = idx;
        for _ in 0..k {
            coeffs.push(v % p);
            v /= p;
        }
        if coeffs[0] == 0 {
            continue;
        }
        // trial division over F_p by every monic of degree 1..=k/2
        for e in 1..=k / 2 {
            let dn = p.pow(e);
            for di in 0..dn {
                let mut dv = Vec::with_capacity(e as usize + 1);
                let mut w = di;
                for _ in 0..e {
                    dv.push(w % p);
                    w /= p;
                }
                dv.push(1);
                let mut full = coeffs.clone();
                full.push(1);
                if prime_poly_rem_is_zero(&full, &dv, p) {
                    continue 'cand;
                }
            }
        }
        return coeffs;
    }
    unreachable!("an irreducible of degree {k} over F_{p} exists");
}

fn prime_poly_rem_is_zero(num: &[u64], den: &[u64], p: u64) -> bool {
    let mut r: Vec<u64> = num.to_vec();
    let dd = den.len() - 1;
    while r.len() > dd {
        let lead = *r.last().unwrap();
        if lead != 0 {
            let shift = r.len() - 1 - dd;
            for (j, &m) in den.iter().enumerate() {
                r[shift + j] = (r[shift + j] + (p - (m * lead) % p)) % p;
            }
        }
        r.pop();
    }
    r.iter().all(|&c| c == 0)
}

/// A monic polynomial of degree ≥ 1 over a fixed `F_q`, stored low-to-high.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyOverFq {
    coeffs: Vec<u16>,
}

impl Ord for PolyOverFq {
    /// Degree first, then lexicographic on the coefficient vector.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.coeffs.len(), &self.coeffs).cmp(&(other.coeffs.len(), &other.coeffs))
    }
}

impl PartialOrd for PolyOverFq {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl PolyOverFq {
    /// Coefficients low-to-high; the last entry must be 1.
    pub fn new(coeffs: Vec<u16>) -> PolyOverFq {
        assert!(coeffs.len() >= 2, "degree must be at least 1");
        assert_eq!(*coeffs.last().unwrap(), 1, "polynomial must be monic");
        PolyOverFq { coeffs }
    }

    /// The polynomial `z`.
    pub fn z() -> PolyOverFq {
        PolyOverFq { coeffs: vec![0, 1] }
    }

    /// The polynomial `z - 1` (equal to `z + 1` in characteristic 2).
    pub fn z_minus_one(field: &FqField) -> PolyOverFq {
        PolyOverFq { coeffs: vec![field.neg(1), 1] }
    }

    pub fn degree(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeffs(&self) -> &[u16] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> u16 {
        self.coeffs[0]
    }

    pub fn is_z(&self) -> bool {
        self.coeffs == [0, 1]
    }

    pub fn is_z_minus_one(&self, field: &FqField) -> bool {
        *self == PolyOverFq::z_minus_one(field)
    }

    pub fn eval(&self, field: &FqField, x: u16) -> u16 {
        let mut acc = 0u16;
        for &c in self.coeffs.iter().rev() {
            acc = field.add(field.mul(acc, x), c);
        }
        acc
    }

    /// `φ*(z) = φ(0)^{-1} z^n φ(z^{-1})`: reverse the coefficients and
    /// normalize to monic.
    pub fn star(&self, field: &FqField) -> Result<PolyOverFq, QpolyError> {
        let c0 = self.coeffs[0];
        if c0 == 0 {
            return Err(QpolyError::ZeroConstantTerm);
        }
        let c0inv = field.inv(c0);
        let coeffs: Vec<u16> = self
            .coeffs
            .iter()
            .rev()
            .map(|&c| field.mul(c0inv, c))
            .collect();
        Ok(PolyOverFq { coeffs })
    }

    pub fn is_self_conjugate(&self, field: &FqField) -> bool {
        self.star(field).map_or(false, |s| s == *self)
    }

    /// Parse the display format, e.g. `z^3+z+1` or `2z^2+3`.
    pub fn parse(s: &str, field: &FqField) -> Option<PolyOverFq> {
        let mut coeffs: Vec<u16> = Vec::new();
        for term in s.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return None;
            }
            let (coeff_str, exp) = match term.find('z') {
                Some(pos) => {
                    let rest = &term[pos + 1..];
                    let exp = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')?.parse::<usize>().ok()?
                    };
                    (&term[..pos], exp)
                }
                None => (term, 0),
            };
            let c: u64 = if coeff_str.is_empty() {
                1
            } else {
                coeff_str.parse().ok()?
            };
            if c >= field.q() {
                return None;
            }
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, 0);
            }
            coeffs[exp] = field.add(coeffs[exp], c as u16);
        }
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
            coeffs.pop();
        }
        if coeffs.len() < 2 || *coeffs.last().unwrap() != 1 {
            return None;
        }
        Some(PolyOverFq { coeffs })
    }
}

impl std::fmt::Display for PolyOverFq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (e, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (e, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "z")?,
                (1, c) => write!(f, "{c}z")?,
                (e, 1) => write!(f, "z^{e}")?,
                (e, c) => write!(f, "{c}z^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn poly_from_index(mut idx: u64, d: u32, q: u64) -> PolyOverFq {
    let mut coeffs = Vec::with_capacity(d as usize + 1);
    for _ in 0..d {
        coeffs.push((idx % q) as u16);
        idx /= q;
    }
    coeffs.push(1);
    PolyOverFq { coeffs }
}

type IrredCache = Mutex<HashMap<(u64, u32), Arc<Vec<PolyOverFq>>>>;

fn irred_cache() -> &'static IrredCache {
    static CACHE: OnceLock<IrredCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All monic irreducibles of degree `d` over the field, in index
/// (lexicographic coefficient) order. Results are cached per `(q, d)`.
pub fn irreducibles(field: &FqField, d: u32) -> Result<Arc<Vec<PolyOverFq>>, QpolyError> {
    assert!(d >= 1);
    if let Some(hit) = irred_cache().lock().unwrap().get(&(field.q(), d)) {
        return Ok(hit.clone());
    }
    let q = field.q();
    let total = q
        .checked_pow(d)
        .filter(|&t| t <= MAX_SIEVE)
        .ok_or(QpolyError::SieveBudgetExceeded { q, d })?;

    // Mark every monic product g·h with g irreducible of degree e <= d/2 and
    // h monic of degree d-e; the unmarked polynomials are the irreducibles.
    let mut reducible = vec![false; total as usize];
    let mut h = vec![0u16; d as usize + 1];
    let mut prod = vec![0u16; d as usize + 1];
    for e in 1..=d / 2 {
        let smalls = irreducibles(field, e)?;
        let cofactor_count = q.pow(d - e);
        let hd = (d - e) as usize;
        for g in smalls.iter() {
            h[..hd].fill(0);
            h[hd] = 1;
            for hi in 0..cofactor_count {
                prod.fill(0);
                for (i, &x) in g.coeffs().iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in h[..=hd].iter().enumerate() {
                        prod[i + j] = field.add(prod[i + j], field.mul(x, y));
                    }
                }
                let mut idx = 0u64;
                for i in (0..d as usize).rev() {
                    idx = idx * q + prod[i] as u64;
                }
                reducible[idx as usize] = true;
                if hi + 1 < cofactor_count {
                    // odometer increment of h's lower coefficients
                    for slot in h[..hd].iter_mut() {
                        *slot += 1;
                        if (*slot as u64) < q {
                            break;
                        }
                        *slot = 0;
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    for idx in 0..total {
        if !reducible[idx as usize] {
            out.push(poly_from_index(idx, d, q));
        }
    }
    let arc = Arc::new(out);
    irred_cache()
        .lock()
        .unwrap()
        .insert((field.q(), d), arc.clone());
    Ok(arc)
}

/// Self-conjugate irreducibles of degree `d` (z itself excluded: the
/// conjugation is undefined at zero constant term).
pub fn self_conjugate_irreducibles(
    field: &FqField,
    d: u32,
) -> Result<Vec<PolyOverFq>, QpolyError> {
    Ok(irreducibles(field, d)?
        .iter()
        .filter(|p| p.constant_term() != 0 && p.is_self_conjugate(field))
        .cloned()
        .collect())
}

/// Unordered conjugate pairs `{φ, φ*}` of degree `d`, the lexicographically
/// smaller member first.
pub fn conjugate_pairs(field: &FqField, d: u32) -> Result<Vec<(PolyOverFq, PolyOverFq)>, QpolyError> {
    let mut out = Vec::new();
    for p in irreducibles(field, d)?.iter() {
        if p.constant_term() == 0 {
            continue;
        }
        let s = p.star(field)?;
        if s != *p && *p < s {
            out.push((p.clone(), s));
        }
    }
    Ok(out)
}

/// `N*(q;d)` by enumeration. `exclude_z_minus_one` drops the degree-1
/// self-conjugate polynomial(s) `z ∓ 1`.
pub fn n_star(field: &FqField, d: u32, exclude_z_minus_one: bool) -> Result<u64, QpolyError> {
    let mut polys = self_conjugate_irreducibles(field, d)?;
    if exclude_z_minus_one && d == 1 {
        // drops z - 1 and z + 1 (one polynomial in characteristic 2)
        polys.retain(|p| !p.is_z_minus_one(field) && p.coeffs() != [1, 1]);
    }
    Ok(polys.len() as u64)
}

/// `M*(q;d)` by enumeration.
pub fn m_star(field: &FqField, d: u32) -> Result<u64, QpolyError> {
    Ok(conjugate_pairs(field, d)?.len() as u64)
}

/// Number of monic irreducibles of degree `d` over `F_q`, by the necklace
/// formula `(1/d) Σ_{e|d} μ(e) q^{d/e}`.
pub fn irreducible_count(q: u64, d: u32) -> u64 {
    let mut total: i64 = 0;
    for e in 1..=d {
        if d % e == 0 {
            if let Some(mu) = moebius(e) {
                total += mu * q.pow(d / e) as i64;
            }
        }
    }
    (total / d as i64) as u64
}

fn moebius(n: u32) -> Option<i64> {
    let mut n = n;
    let mut mu = 1i64;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return None;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    Some(mu)
}

/// `N*(q;d)` in closed form. Self-conjugate irreducibles other than `z ∓ 1`
/// have even degree `2e`; their roots are exactly the elements of order
/// dividing `q^e + 1` (other than `±1`) of degree `2e`, which yields the
/// recursion `Σ_{f | e, e/f odd} 2f·N*(q;2f) = q^e - [q odd]`.
pub fn n_star_count(q: u64, d: u32, exclude_z_minus_one: bool) -> u64 {
    if d == 1 {
        let fixed_linears = if q % 2 == 0 { 1 } else { 2 };
        return if exclude_z_minus_one { 0 } else { fixed_linears };
    }
    if d % 2 == 1 {
        return 0;
    }
    n_star_even_half(q, d / 2)
}

fn n_star_even_half(q: u64, e: u32) -> u64 {
    let mut total = q.pow(e) - if q % 2 == 1 { 1 } else { 0 };
    for f in 1..e {
        if e % f == 0 && (e / f) % 2 == 1 {
            total -= 2 * f as u64 * n_star_even_half(q, f);
        }
    }
    total / (2 * e as u64)
}

/// `M*(q;d)` in closed form: pairs are the non-self-conjugate irreducibles
/// with nonzero constant term, halved.
pub fn m_star_count(q: u64, d: u32) -> u64 {
    let z_excluded = if d == 1 { 1 } else { 0 };
    (irreducible_count(q, d) - n_star_count(q, d, false) - z_excluded) / 2
}
