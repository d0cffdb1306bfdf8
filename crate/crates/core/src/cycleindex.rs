//! Class proportions and cycle-index generating functions for
//! `O^±_{2n}(q)`, `q` even.
//!
//! A conjugacy class of `GL_{2n}(q)` restricted to the orthogonal groups is
//! labelled by [`RcfData`]: a finitely supported map from monic irreducible
//! polynomials `φ ≠ z` to partitions `λ_φ`, subject to `λ_φ = λ_{φ*}` and to
//! the odd parts of `λ_{z-1}` having even multiplicity. The two data weights
//! below give `p⁺ + p⁻` and `p⁺ - p⁻` for the class; the series builders
//! assemble the full generating functions as a product of a `z-1` factor and
//! one factor per polynomial (or per degree, using the `N*`/`M*` counts,
//! which is how orders of magnitude beyond literal polynomial enumeration
//! stay reachable).

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::orders::{b_pair_product_by_deg, b_self_conjugate_by_deg};
use crate::partitions::{partitions_of, Partition};
use crate::qpoly::{
    irreducibles, m_star_count, n_star_count, FqField, PolyOverFq, QpolyError,
};
use crate::series::{partition_sum_series, TruncatedSeries};
use crate::{qpow, rat, Rat, Sign};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleIndexError {
    #[error("rational canonical form data violates the orthogonal restrictions")]
    InvalidData,
    #[error(transparent)]
    Qpoly(#[from] QpolyError),
}

/// Rational canonical form data: `φ ↦ λ_φ`, empty partitions omitted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RcfData {
    entries: BTreeMap<PolyOverFq, Partition>,
}

impl RcfData {
    pub fn new() -> RcfData {
        RcfData::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (PolyOverFq, Partition)>>(pairs: I) -> RcfData {
        let mut data = RcfData::new();
        for (phi, lam) in pairs {
            data.insert(phi, lam);
        }
        data
    }

    /// Attach `λ_φ`; an empty partition removes the entry.
    pub fn insert(&mut self, phi: PolyOverFq, lambda: Partition) {
        if lambda.is_empty() {
            self.entries.remove(&phi);
        } else {
            self.entries.insert(phi, lambda);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&PolyOverFq, &Partition)> {
        self.entries.iter()
    }

    pub fn lambda_of(&self, phi: &PolyOverFq) -> Partition {
        self.entries.get(phi).cloned().unwrap_or_else(Partition::empty)
    }

    pub fn lambda_z_minus_one(&self, field: &FqField) -> Partition {
        self.lambda_of(&PolyOverFq::z_minus_one(field))
    }

    /// `Σ_φ |λ_φ|·deg φ`.
    pub fn dimension(&self) -> u64 {
        self.entries
            .iter()
            .map(|(phi, lam)| lam.size() * phi.degree() as u64)
            .sum()
    }

    /// The restrictions cutting `GL`-class data down to `O^±`-class data:
    /// `|λ_z| = 0`, `λ_φ = λ_{φ*}`, odd parts of `λ_{z-1}` with even
    /// multiplicity, and total dimension `2n`.
    pub fn validate_o_data(&self, field: &FqField, two_n: u64) -> bool {
        if self.dimension() != two_n {
            return false;
        }
        for (phi, lam) in &self.entries {
            if phi.is_z() || phi.constant_term() == 0 {
                return false;
            }
            if phi.is_z_minus_one(field) {
                if !lam.odd_parts_even_mult() {
                    return false;
                }
            } else {
                match phi.star(field) {
                    Ok(conj) => {
                        if self.lambda_of(&conj) != *lam {
                            return false;
                        }
                    }
                    Err(_) => return false,
                }
            }
        }
        true
    }

    /// `z-1:[2,1];z^2+z+1:[1]`
    pub fn render(&self, field: &FqField) -> String {
        let zm1 = PolyOverFq::z_minus_one(field);
        self.entries
            .iter()
            .map(|(phi, lam)| {
                let name = if *phi == zm1 { "z-1".to_string() } else { phi.to_string() };
                format!("{name}:{lam}")
            })
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn parse(s: &str, field: &FqField) -> Option<RcfData> {
        let mut data = RcfData::new();
        for chunk in s.split(';') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let (poly_str, parts_str) = chunk.split_once(':')?;
            let phi = if poly_str.trim() == "z-1" {
                PolyOverFq::z_minus_one(field)
            } else {
                PolyOverFq::parse(poly_str, field)?
            };
            let inner = parts_str.trim().strip_prefix('[')?.strip_suffix(']')?;
            let parts: Vec<i64> = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|t| t.trim().parse().ok())
                    .collect::<Option<_>>()?
            };
            data.insert(phi, Partition::new(parts).ok()?);
        }
        Some(data)
    }
}

/// The `z-1` weight of Theorem-level part 1: the proportion mass
/// `q^{l(λ)} / (q^{n(λ)+|λ|/2+o(λ)/2} Π_i (1-1/q²)⋯(1-1/q^{2⌊m_i/2⌋}))`,
/// zero off support (some odd part with odd multiplicity).
pub fn con_sum_weight(lambda: &Partition, q: u64) -> Rat {
    if !lambda.odd_parts_even_mult() {
        return Rat::zero();
    }
    let exp = lambda.len() as i64
        - lambda.n_stat() as i64
        - ((lambda.size() + lambda.odd_parts()) / 2) as i64;
    let mut acc = qpow(q, exp);
    for &(_, mi) in lambda.multiplicities() {
        for k in 1..=mi / 2 {
            acc /= Rat::one() - qpow(q, -2 * k as i64);
        }
    }
    acc
}

/// The `z-1` weight of part 2:
/// `1 / (q^{Σ(λ'_i)²/2} Π_i (1-1/q²)(1-1/q⁴)⋯(1-1/q^{m_i}))`,
/// zero unless every multiplicity is even.
pub fn con_diff_weight(lambda: &Partition, q: u64) -> Rat {
    if !lambda.all_mults_even() {
        return Rat::zero();
    }
    let mut acc = qpow(q, -((lambda.conjugate_square_sum() / 2) as i64));
    for &(_, mi) in lambda.multiplicities() {
        for k in 1..=mi / 2 {
            acc /= Rat::one() - qpow(q, -2 * k as i64);
        }
    }
    acc
}

/// `p⁺(λ) + p⁻(λ)` over the groups of dimension `|λ|`: unipotent classes
/// of Jordan type `λ`.
pub fn p_sum_unipotent(lambda: &Partition, q: u64) -> Rat {
    con_sum_weight(lambda, q)
}

/// `p⁺(λ) - p⁻(λ)`.
pub fn p_diff_unipotent(lambda: &Partition, q: u64) -> Rat {
    con_diff_weight(lambda, q)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassProportions {
    pub p_plus: Rat,
    pub p_minus: Rat,
}

impl ClassProportions {
    pub fn of(&self, eps: Sign) -> &Rat {
        match eps {
            Sign::Plus => &self.p_plus,
            Sign::Minus => &self.p_minus,
        }
    }
}

/// Proportions of `O^±_{2n}(q)` in the class labelled by `data`
/// (`2n = data.dimension()`). The empty data in dimension 0 yields
/// `p⁺ = 1, p⁻ = 0`, matching the leading term of the series.
pub fn class_proportions(
    data: &RcfData,
    field: &FqField,
) -> Result<ClassProportions, CycleIndexError> {
    let q = field.q();
    let two_n = data.dimension();
    if two_n % 2 != 0 || !data.validate_o_data(field, two_n) {
        return Err(CycleIndexError::InvalidData);
    }
    let lam_z1 = data.lambda_z_minus_one(field);
    let mut sum = con_sum_weight(&lam_z1, q);
    let mut diff = con_diff_weight(&lam_z1, q);
    for (phi, lam) in data.entries() {
        if phi.is_z_minus_one(field) {
            continue;
        }
        if phi.is_self_conjugate(field) {
            let b = b_self_conjugate_by_deg(phi.degree(), lam, q);
            sum /= &b;
            diff /= b;
            if lam.size() % 2 == 1 {
                diff = -diff;
            }
        } else {
            // pairs appear twice in the map; handle on the canonical member
            let conj = phi.star(field)?;
            if *phi < conj {
                let b2 = b_pair_product_by_deg(phi.degree(), lam, q);
                sum /= &b2;
                diff /= b2;
            }
        }
    }
    Ok(ClassProportions {
        p_plus: (&sum + &diff) / rat(2),
        p_minus: (sum - diff) / rat(2),
    })
}

/// The proportion of `Ω^ε_{2n}(q)` in the class: `2·p_ε` when
/// `l(λ_{z-1})` is even (the class lies in `Ω`), otherwise 0.
pub fn omega_class_proportion(
    data: &RcfData,
    field: &FqField,
    eps: Sign,
) -> Result<Rat, CycleIndexError> {
    let props = class_proportions(data, field)?;
    if data.lambda_z_minus_one(field).len() % 2 == 0 {
        Ok(props.of(eps) * rat(2))
    } else {
        Ok(Rat::zero())
    }
}

/// Which generating function to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// `1 + Σ u^{2n}(avg over O⁺) + Σ u^{2n}(avg over O⁻)`
    Sum,
    /// `1 + Σ u^{2n}(avg over O⁺) - Σ u^{2n}(avg over O⁻)`
    Diff,
    /// the Sum series with `g` restricted to `Ω^±` (normalizers unchanged)
    OmegaSum,
}

/// How a polynomial enters the cycle index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyClass {
    ZMinusOne,
    SelfConjugate { deg: u32 },
    Pair { deg: u32 },
}

fn z_factor<W>(weight: &W, q: u64, order: usize, variant: Variant) -> TruncatedSeries
where
    W: Fn(PolyClass, &Partition) -> Rat,
{
    partition_sum_series(
        |lam| {
            let w = match variant {
                Variant::Sum | Variant::OmegaSum => con_sum_weight(lam, q),
                Variant::Diff => con_diff_weight(lam, q),
            };
            if w.is_zero() {
                return w;
            }
            weight(PolyClass::ZMinusOne, lam) * w
        },
        |lam| match variant {
            Variant::OmegaSum => lam.len() % 2 == 0,
            _ => true,
        },
        1,
        order,
    )
}

fn self_conj_factor<W>(
    weight: &W,
    deg: u32,
    q: u64,
    order: usize,
    variant: Variant,
) -> TruncatedSeries
where
    W: Fn(PolyClass, &Partition) -> Rat,
{
    partition_sum_series(
        |lam| {
            let w = weight(PolyClass::SelfConjugate { deg }, lam);
            if w.is_zero() {
                return w;
            }
            let mut term = w / b_self_conjugate_by_deg(deg, lam, q);
            if variant == Variant::Diff && lam.size() % 2 == 1 {
                term = -term;
            }
            term
        },
        |_| true,
        deg as usize,
        order,
    )
}

fn pair_factor<W>(weight: &W, deg: u32, q: u64, order: usize) -> TruncatedSeries
where
    W: Fn(PolyClass, &Partition) -> Rat,
{
    partition_sum_series(
        |lam| {
            let w = weight(PolyClass::Pair { deg }, lam);
            if w.is_zero() {
                return w;
            }
            w / b_pair_product_by_deg(deg, lam, q)
        },
        |_| true,
        2 * deg as usize,
        order,
    )
}

/// The cycle index series with per-degree weights, assembled as the `z-1`
/// factor times `(per-degree self-conjugate factor)^{N*(q;d)}` times
/// `(per-degree pair factor)^{M*(q;d)}`.
///
/// For a pair the weight value stands for the product
/// `x_{φ,λ}·x_{φ*,λ}` of the two variables sharing the partition.
pub fn cycle_index_series_by_degree<W>(
    q: u64,
    weight: W,
    order: usize,
    variant: Variant,
) -> TruncatedSeries
where
    W: Fn(PolyClass, &Partition) -> Rat,
{
    let mut acc = z_factor(&weight, q, order, variant);
    for d in 1..=order as u32 {
        if d % 2 == 0 {
            let n = n_star_count(q, d, true);
            if n > 0 {
                acc = acc.mul(&self_conj_factor(&weight, d, q, order, variant).pow(n));
            }
        }
        if 2 * d as usize <= order {
            let m = m_star_count(q, d);
            if m > 0 {
                acc = acc.mul(&pair_factor(&weight, d, q, order).pow(m));
            }
        }
    }
    acc
}

/// The cycle index series with literal per-polynomial weights; polynomials
/// are enumerated up to degree `order` (pairs to degree `order/2`), beyond
/// which no partition assignment can reach the truncation order.
pub fn cycle_index_series<W>(
    field: &FqField,
    weight: W,
    order: usize,
    variant: Variant,
) -> Result<TruncatedSeries, CycleIndexError>
where
    W: Fn(&PolyOverFq, &Partition) -> Rat,
{
    let q = field.q();
    let zm1 = PolyOverFq::z_minus_one(field);
    let mut acc = z_factor(
        &|_: PolyClass, lam: &Partition| weight(&zm1, lam),
        q,
        order,
        variant,
    );
    for d in 1..=order as u32 {
        for phi in irreducibles(field, d)?.iter() {
            if phi.constant_term() == 0 || phi.is_z_minus_one(field) {
                continue;
            }
            if phi.is_self_conjugate(field) {
                let f = self_conj_factor(
                    &|_: PolyClass, lam: &Partition| weight(phi, lam),
                    d,
                    q,
                    order,
                    variant,
                );
                acc = acc.mul(&f);
            } else if 2 * d as usize <= order {
                let conj = phi.star(field)?;
                if *phi < conj {
                    let f = pair_factor(
                        &|_: PolyClass, lam: &Partition| weight(phi, lam) * weight(&conj, lam),
                        d,
                        q,
                        order,
                    );
                    acc = acc.mul(&f);
                }
            }
        }
    }
    Ok(acc)
}

/// Every valid [`RcfData`] of dimension `2n`, by literal assignment of
/// partitions to the polynomial inventory (self-conjugate polynomials and
/// canonical pair members of small enough degree).
pub fn enumerate_o_data(field: &FqField, two_n: u64) -> Result<Vec<RcfData>, CycleIndexError> {
    #[derive(Clone)]
    enum Slot {
        SelfConj(PolyOverFq),
        Pair(PolyOverFq, PolyOverFq),
    }

    let mut slots = Vec::new();
    for d in 1..=two_n as u32 {
        for phi in irreducibles(field, d)?.iter() {
            if phi.constant_term() == 0 || phi.is_z_minus_one(field) {
                continue;
            }
            if phi.is_self_conjugate(field) {
                slots.push((d as u64, Slot::SelfConj(phi.clone())));
            } else if 2 * d as u64 <= two_n {
                let conj = phi.star(field)?;
                if *phi < conj {
                    slots.push((2 * d as u64, Slot::Pair(phi.clone(), conj)));
                }
            }
        }
    }
    slots.sort_by_key(|(cost, _)| *cost);

    let mut out = Vec::new();
    let zm1 = PolyOverFq::z_minus_one(field);
    // choose λ_{z-1} first, then fill the remaining budget left to right
    for z_size in 0..=two_n {
        for z_lam in partitions_of(z_size) {
            if !z_lam.odd_parts_even_mult() {
                continue;
            }
            let mut data = RcfData::new();
            data.insert(zm1.clone(), z_lam);
            fill(&slots, 0, two_n - z_size, &mut data, &mut out);
        }
    }
    return Ok(out);

    fn fill(
        slots: &[(u64, Slot)],
        from: usize,
        budget: u64,
        data: &mut RcfData,
        out: &mut Vec<RcfData>,
    ) {
        if budget == 0 {
            out.push(data.clone());
            return;
        }
        for (i, (cost, slot)) in slots.iter().enumerate().skip(from) {
            if *cost > budget {
                break; // sorted by cost
            }
            for size in 1..=budget / cost {
                for lam in partitions_of(size) {
                    match slot {
                        Slot::SelfConj(phi) => {
                            data.insert(phi.clone(), lam.clone());
                            fill(slots, i + 1, budget - size * cost, data, out);
                            data.insert(phi.clone(), Partition::empty());
                        }
                        Slot::Pair(phi, conj) => {
                            data.insert(phi.clone(), lam.clone());
                            data.insert(conj.clone(), lam.clone());
                            fill(slots, i + 1, budget - size * cost, data, out);
                            data.insert(phi.clone(), Partition::empty());
                            data.insert(conj.clone(), Partition::empty());
                        }
                    }
                }
            }
        }
    }
}
