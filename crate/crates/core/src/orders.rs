//! Exact orders of the classical groups the formulas divide by, the
//! `A`/`B` factors attached to rational-canonical-form data, and unipotent
//! centralizer orders in `GL_n(q)`.
//!
//! For a conjugate pair `{φ, φ*}` the factor `B(φ,λ)` involves
//! `|GL_m(q^{deg φ})|^{1/2}`; only the pair product `B(φ,λ)·B(φ*,λ)` is
//! exposed, which is always rational.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::partitions::Partition;
use crate::qpoly::{FqField, PolyOverFq};
use crate::{ipow, qpow, Rat, Sign};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrdersError {
    #[error("symplectic/orthogonal groups need even dimension, got {0}")]
    BadDimension(u32),
    #[error("B(φ,λ) for φ ≠ φ* is irrational; request the pair product instead")]
    HalfPowerExposure,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupFamily {
    Gl,
    U,
    Sp,
    OPlus,
    OMinus,
    OmegaPlus,
    OmegaMinus,
}

/// A group in one of the classical families, at a fixed dimension and `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupKind {
    pub family: GroupFamily,
    pub dim: u32,
    pub q: u64,
}

impl GroupKind {
    pub fn order(&self) -> Result<BigInt, OrdersError> {
        group_order(self.family, self.dim, self.q)
    }
}

pub fn group_order(family: GroupFamily, dim: u32, q: u64) -> Result<BigInt, OrdersError> {
    match family {
        GroupFamily::Gl => Ok(gl_order(dim, q)),
        GroupFamily::U => Ok(u_order(dim, q)),
        GroupFamily::Sp | GroupFamily::OPlus | GroupFamily::OMinus
        | GroupFamily::OmegaPlus | GroupFamily::OmegaMinus => {
            if dim % 2 != 0 {
                return Err(OrdersError::BadDimension(dim));
            }
            Ok(match family {
                GroupFamily::Sp => sp_order(dim, q),
                GroupFamily::OPlus => o_order(Sign::Plus, dim, q),
                GroupFamily::OMinus => o_order(Sign::Minus, dim, q),
                GroupFamily::OmegaPlus => omega_order(Sign::Plus, dim, q),
                GroupFamily::OmegaMinus => omega_order(Sign::Minus, dim, q),
                GroupFamily::Gl | GroupFamily::U => unreachable!(),
            })
        }
    }
}

/// `|GL_n(q)| = q^{n²}(1-1/q)⋯(1-1/q^n) = Π_{i<n}(q^n - q^i)`; `|GL_0| = 1`.
pub fn gl_order(n: u32, q: u64) -> BigInt {
    let qn = ipow(q, n as u64);
    let mut acc = BigInt::one();
    for i in 0..n {
        acc *= &qn - ipow(q, i as u64);
    }
    acc
}

/// `|U_n(q)| = (-1)^n |GL_n(-q)| = q^{n(n-1)/2} Π_{i=1..n}(q^i - (-1)^i)`.
pub fn u_order(n: u32, q: u64) -> BigInt {
    let mut acc = ipow(q, n as u64 * n.saturating_sub(1) as u64 / 2);
    for i in 1..=n {
        let term = ipow(q, i as u64) - if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        acc *= term;
    }
    acc
}

/// `|Sp_{2n}(q)| = q^{n²} Π_{i=1..n}(q^{2i} - 1)`; `|Sp_0| = 1`.
pub fn sp_order(dim: u32, q: u64) -> BigInt {
    assert!(dim % 2 == 0);
    let n = (dim / 2) as u64;
    let mut acc = ipow(q, n * n);
    for i in 1..=n {
        acc *= ipow(q, 2 * i) - 1;
    }
    acc
}

/// `|O^ε_{2n}(q)| = 2 q^{n²-n} (q^n - ε) Π_{i=1..n-1}(q^{2i} - 1)` for
/// `n ≥ 1`, with `|O^ε_0| = 1`.
pub fn o_order(eps: Sign, dim: u32, q: u64) -> BigInt {
    assert!(dim % 2 == 0);
    if dim == 0 {
        return BigInt::one();
    }
    let n = (dim / 2) as u64;
    let mut acc = BigInt::from(2) * ipow(q, n * n - n);
    acc *= ipow(q, n) - BigInt::from(eps.unit());
    for i in 1..n {
        acc *= ipow(q, 2 * i) - 1;
    }
    acc
}

/// `|Ω^ε_{2n}(q)| = |O^ε_{2n}(q)| / 2`.
pub fn omega_order(eps: Sign, dim: u32, q: u64) -> BigInt {
    assert!(dim % 2 == 0 && dim > 0);
    o_order(eps, dim, q) / 2
}

/// Twice the exponent `Σ_{h<i} h·m_h·m_i + ½ Σ_i (i-1)·m_i²` of `B(φ,λ)`.
fn b_exponent_doubled(lambda: &Partition) -> u64 {
    let mults = lambda.multiplicities();
    let mut doubled = 0u64;
    for &(i, mi) in mults {
        doubled += (i as u64 - 1) * (mi as u64) * (mi as u64);
        for &(h, mh) in mults {
            if h < i {
                doubled += 2 * (h as u64) * (mh as u64) * (mi as u64);
            }
        }
    }
    doubled
}

/// `A(φ,λ,i)` for self-conjugate `φ ≠ z-1`: `|U_{m_i(λ)}(q^{deg φ/2})|`.
pub fn a_factor(
    phi: &PolyOverFq,
    field: &FqField,
    lambda: &Partition,
    i: u32,
) -> Result<BigInt, OrdersError> {
    if !phi.is_self_conjugate(field) {
        return Err(OrdersError::HalfPowerExposure);
    }
    debug_assert!(!phi.is_z_minus_one(field) && phi.degree() % 2 == 0);
    let half = ipow_u64(field.q(), phi.degree() as u64 / 2);
    Ok(u_order(lambda.multiplicity(i), half))
}

fn ipow_u64(q: u64, e: u64) -> u64 {
    q.pow(e as u32)
}

/// `B(φ,λ)` for self-conjugate `φ ≠ z-1` of even degree.
pub fn b_factor(
    phi: &PolyOverFq,
    field: &FqField,
    lambda: &Partition,
) -> Result<Rat, OrdersError> {
    if !phi.is_self_conjugate(field) {
        return Err(OrdersError::HalfPowerExposure);
    }
    Ok(b_self_conjugate_by_deg(phi.degree(), lambda, field.q()))
}

/// `B(φ,λ)·B(φ*,λ)` for a conjugate pair `φ ≠ φ*`.
pub fn b_pair_factor(
    phi: &PolyOverFq,
    field: &FqField,
    lambda: &Partition,
) -> Result<Rat, OrdersError> {
    if phi.is_self_conjugate(field) {
        return Err(OrdersError::HalfPowerExposure);
    }
    Ok(b_pair_product_by_deg(phi.degree(), lambda, field.q()))
}

/// `B` depends on `φ` only through its degree; this is the self-conjugate
/// case keyed by degree (even, ≥ 2).
pub fn b_self_conjugate_by_deg(deg: u32, lambda: &Partition, q: u64) -> Rat {
    assert!(deg % 2 == 0 && deg >= 2);
    let exp = deg as u64 * b_exponent_doubled(lambda) / 2;
    let half = ipow_u64(q, deg as u64 / 2);
    let mut acc = Rat::from_integer(ipow(q, exp));
    for &(_, mi) in lambda.multiplicities() {
        acc *= Rat::from_integer(u_order(mi, half));
    }
    acc
}

/// `B(φ,λ)·B(φ*,λ)` keyed by the common degree of the pair members.
pub fn b_pair_product_by_deg(deg: u32, lambda: &Partition, q: u64) -> Rat {
    let exp = deg as u64 * b_exponent_doubled(lambda);
    let qd = ipow_u64(q, deg as u64);
    let mut acc = Rat::from_integer(ipow(q, exp));
    for &(_, mi) in lambda.multiplicities() {
        acc *= Rat::from_integer(gl_order(mi, qd));
    }
    acc
}

/// `|C_{GL_{|λ|}(q)}(g)|` for unipotent `g` of Jordan type `λ`:
/// `q^{Σ(λ'_i)²} Π_i Π_{k=1..m_i}(1 - q^{-k})`.
pub fn gl_unip_centralizer(lambda: &Partition, q: u64) -> BigInt {
    let mut acc = Rat::from_integer(ipow(q, lambda.conjugate_square_sum()));
    for &(_, mi) in lambda.multiplicities() {
        for k in 1..=mi {
            acc *= Rat::one() - qpow(q, -(k as i64));
        }
    }
    debug_assert!(acc.is_integer());
    acc.to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;
    use crate::rat;
    use num_traits::Zero;

    #[test]
    fn small_orders() {
        assert_eq!(gl_order(2, 2), BigInt::from(6));
        assert_eq!(gl_order(0, 2), BigInt::one());
        assert_eq!(u_order(1, 2), BigInt::from(3));
        assert_eq!(sp_order(2, 2), BigInt::from(6));
        assert_eq!(sp_order(0, 2), BigInt::one());
        assert_eq!(o_order(Sign::Plus, 4, 2), BigInt::from(72));
        assert_eq!(o_order(Sign::Minus, 4, 2), BigInt::from(120));
        assert_eq!(o_order(Sign::Plus, 2, 2), BigInt::from(2));
        assert_eq!(o_order(Sign::Minus, 2, 2), BigInt::from(6));
        assert_eq!(o_order(Sign::Plus, 6, 2), BigInt::from(40320));
        assert_eq!(o_order(Sign::Minus, 6, 2), BigInt::from(51840));
        assert_eq!(omega_order(Sign::Minus, 4, 2), BigInt::from(60));
    }

    #[test]
    fn u_order_matches_gl_at_negated_q() {
        // |U_n(q)| = (-1)^n |GL_n(-q)| = (-1)^n Π_{i<n}((-q)^n - (-q)^i)
        for n in 0..=5u32 {
            for q in [2i64, 3, 4, 5] {
                let neg = BigInt::from(-q);
                let mut gl_neg = BigInt::one();
                for i in 0..n {
                    gl_neg *= neg.pow(n) - neg.pow(i);
                }
                if n % 2 == 1 {
                    gl_neg = -gl_neg;
                }
                assert_eq!(u_order(n, q as u64), gl_neg, "n={n} q={q}");
            }
        }
    }

    #[test]
    fn bad_dimension_rejected() {
        assert_eq!(
            group_order(GroupFamily::Sp, 3, 2),
            Err(OrdersError::BadDimension(3))
        );
        assert_eq!(
            group_order(GroupFamily::OPlus, 5, 2),
            Err(OrdersError::BadDimension(5))
        );
    }

    #[test]
    fn form_count_polarization() {
        // |Sp|/|O⁺| + |Sp|/|O⁻| = q^{2n}
        for q in [2u64, 4] {
            for n in 1..=6u32 {
                let sp = Rat::from_integer(sp_order(2 * n, q));
                let total = &sp / Rat::from_integer(o_order(Sign::Plus, 2 * n, q))
                    + &sp / Rat::from_integer(o_order(Sign::Minus, 2 * n, q));
                assert_eq!(total, qpow(q, 2 * n as i64), "q={q} n={n}");
            }
        }
    }

    #[test]
    fn gl_unip_centralizer_examples() {
        let q = 2;
        assert_eq!(
            gl_unip_centralizer(&Partition::new([1]).unwrap(), q),
            BigInt::one()
        );
        assert_eq!(
            gl_unip_centralizer(&Partition::new([1, 1]).unwrap(), q),
            BigInt::from(6)
        );
        assert_eq!(
            gl_unip_centralizer(&Partition::new([2]).unwrap(), q),
            BigInt::from(2)
        );
    }

    #[test]
    fn gl_unipotent_mass() {
        // centralizers divide |GL| and Σ_λ |GL|/|C(λ)| = q^{n(n-1)} unipotents
        for q in [2u64, 4] {
            for n in 1..=8u32 {
                let gl = gl_order(n, q);
                let mut count = Rat::from_integer(BigInt::zero());
                for lam in partitions_of(n as u64) {
                    let c = gl_unip_centralizer(&lam, q);
                    assert_eq!(&gl % &c, BigInt::zero(), "q={q} λ={lam}");
                    count += Rat::from_integer(&gl / &c);
                }
                assert_eq!(
                    count,
                    Rat::from_integer(ipow(q, n as u64 * (n as u64 - 1))),
                    "q={q} n={n}"
                );
            }
        }
    }

    #[test]
    fn b_factor_examples() {
        let f2 = FqField::new(2).unwrap();
        let phi = PolyOverFq::parse("z^2+z+1", &f2).unwrap();
        let one_part = Partition::new([1]).unwrap();
        assert_eq!(b_factor(&phi, &f2, &one_part).unwrap(), rat(3));

        let cubic = PolyOverFq::parse("z^3+z+1", &f2).unwrap();
        assert_eq!(b_pair_factor(&cubic, &f2, &one_part).unwrap(), rat(49));
        assert_eq!(
            b_factor(&cubic, &f2, &one_part),
            Err(OrdersError::HalfPowerExposure)
        );
        assert_eq!(
            a_factor(&cubic, &f2, &one_part, 1),
            Err(OrdersError::HalfPowerExposure)
        );

        assert_eq!(
            b_factor(&phi, &f2, &Partition::empty()).unwrap(),
            rat(1)
        );
        assert_eq!(a_factor(&phi, &f2, &one_part, 1).unwrap(), BigInt::from(3));
    }
}
