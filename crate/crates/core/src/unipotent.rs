//! Unipotent class bookkeeping for `Sp_{2n}(q)` and `O^±_{2n}(q)` in
//! characteristic 2: canonical decompositions into `W(m)` and `V(2k)`
//! summands, the invariants `s`, `t`, `δ` and class counts they control,
//! sign-sequence labels, values of the Weil difference character `β` on
//! unipotent classes, its induction `Λ` to `GL_{2n}(q)`, and the reduction
//! of odd-dimensional orthogonal groups to symplectic ones.
//!
//! A `W(m)` summand carries two Jordan blocks `J_m` (dimension `2m`), a
//! `V(2k)` summand a single block `J_{2k}`. In a canonical decomposition the
//! `W`-sizes are strictly increasing with multiplicities `a_i ≥ 1` and the
//! `V`-sizes strictly increasing with multiplicities `1 ≤ b_j ≤ 2`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cycleindex::RcfData;
use crate::orders::{gl_unip_centralizer, o_order, sp_order};
use crate::partitions::Partition;
use crate::qpoly::{FqField, PolyOverFq};
use crate::{ipow, qpow, Rat, Sign};

/// An orthogonal sum `Σ_i W(m_i)^{a_i} ⊕ Σ_j V(2k_j)^{b_j}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalDecomposition {
    /// `(m, a)` with distinct increasing `m ≥ 1`, `a ≥ 1`.
    w_terms: Vec<(u32, u32)>,
    /// `(k, b)` with distinct increasing `k ≥ 1`, `b ∈ {1, 2}`.
    v_terms: Vec<(u32, u32)>,
}

impl CanonicalDecomposition {
    pub fn new(w_terms: Vec<(u32, u32)>, v_terms: Vec<(u32, u32)>) -> CanonicalDecomposition {
        assert!(w_terms.windows(2).all(|w| w[0].0 < w[1].0));
        assert!(v_terms.windows(2).all(|w| w[0].0 < w[1].0));
        assert!(w_terms.iter().all(|&(m, a)| m >= 1 && a >= 1));
        assert!(v_terms.iter().all(|&(k, b)| k >= 1 && (1..=2).contains(&b)));
        CanonicalDecomposition { w_terms, v_terms }
    }

    pub fn w_terms(&self) -> &[(u32, u32)] {
        &self.w_terms
    }

    pub fn v_terms(&self) -> &[(u32, u32)] {
        &self.v_terms
    }

    pub fn dimension(&self) -> u64 {
        let w: u64 = self.w_terms.iter().map(|&(m, a)| 2 * m as u64 * a as u64).sum();
        let v: u64 = self.v_terms.iter().map(|&(k, b)| 2 * k as u64 * b as u64).sum();
        w + v
    }

    /// Jordan type: `2a` blocks `J_m` per `W(m)^a`, `b` blocks `J_{2k}` per
    /// `V(2k)^b`.
    pub fn jordan_type(&self) -> Partition {
        let mut parts = Vec::new();
        for &(m, a) in &self.w_terms {
            parts.extend(std::iter::repeat(m).take(2 * a as usize));
        }
        for &(k, b) in &self.v_terms {
            parts.extend(std::iter::repeat(2 * k).take(b as usize));
        }
        parts.sort_unstable_by(|x, y| y.cmp(x));
        Partition::from_sorted(parts)
    }

    /// Only `W(m)` summands, all `m` even. Exists in `O⁺` but not `O⁻`.
    pub fn is_exceptional(&self) -> bool {
        self.v_terms.is_empty()
            && !self.w_terms.is_empty()
            && self.w_terms.iter().all(|&(m, _)| m % 2 == 0)
    }

    fn w_mult(&self, m: u32) -> u32 {
        self.w_terms
            .iter()
            .find(|&&(mm, _)| mm == m)
            .map_or(0, |&(_, a)| a)
    }

    fn has_adjacent_v(&self, m: u32) -> bool {
        self.v_terms
            .iter()
            .any(|&(k, _)| 2 * k + 1 == m || (m >= 1 && 2 * k == m + 1))
    }

    /// Total Jordan block count.
    fn blocks(&self) -> u64 {
        let w: u64 = self.w_terms.iter().map(|&(_, a)| 2 * a as u64).sum();
        let v: u64 = self.v_terms.iter().map(|&(_, b)| b as u64).sum();
        w + v
    }

    pub fn render(&self) -> String {
        let mut pieces: Vec<String> = self
            .w_terms
            .iter()
            .map(|&(m, a)| format!("W({m})^{a}"))
            .collect();
        pieces.extend(self.v_terms.iter().map(|&(k, b)| format!("V({})^{b}", 2 * k)));
        pieces.join("+")
    }
}

/// Every canonical decomposition of dimension `2n`, exactly once.
pub fn enum_decomps(two_n: u64) -> Vec<CanonicalDecomposition> {
    assert!(two_n >= 2 && two_n % 2 == 0);
    let mut out = Vec::new();
    let mut w: Vec<(u32, u32)> = Vec::new();
    w_rec(two_n, 1, &mut w, &mut out);
    return out;

    fn w_rec(
        budget: u64,
        min_m: u32,
        w: &mut Vec<(u32, u32)>,
        out: &mut Vec<CanonicalDecomposition>,
    ) {
        let mut v = Vec::new();
        v_rec(budget, 1, w, &mut v, out);
        let mut m = min_m;
        while 2 * m as u64 <= budget {
            let mut a = 1u32;
            while 2 * m as u64 * a as u64 <= budget {
                w.push((m, a));
                w_rec(budget - 2 * m as u64 * a as u64, m + 1, w, out);
                w.pop();
                a += 1;
            }
            m += 1;
        }
    }

    fn v_rec(
        budget: u64,
        min_k: u32,
        w: &[(u32, u32)],
        v: &mut Vec<(u32, u32)>,
        out: &mut Vec<CanonicalDecomposition>,
    ) {
        if budget == 0 {
            out.push(CanonicalDecomposition::new(w.to_vec(), v.clone()));
            return;
        }
        let mut k = min_k;
        while 2 * k as u64 <= budget {
            for b in 1..=2u32 {
                if 2 * k as u64 * b as u64 <= budget {
                    v.push((k, b));
                    v_rec(budget - 2 * k as u64 * b as u64, k + 1, w, v, out);
                    v.pop();
                }
            }
            k += 1;
        }
    }
}

/// The class-splitting invariants. The symplectic and orthogonal rules
/// differ: `Sp` excludes `m = 1` from `I` and requires `k_1 > 1` for `δ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingInvariants {
    pub s: u32,
    pub t: u32,
    pub delta: u32,
    /// the `m` values indexing the `O`-factors (the set `I`), increasing
    pub unlinked_odd_w: Vec<u32>,
    /// the interval partition of the `V`-sizes `{k_j}` (gaps ≥ 2 cut)
    pub intervals: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Context {
    Sp,
    Orthogonal,
}

fn splitting_invariants(d: &CanonicalDecomposition, ctx: Context) -> SplittingInvariants {
    let ks: Vec<u32> = d.v_terms.iter().map(|&(k, _)| k).collect();
    let unlinked_odd_w: Vec<u32> = d
        .w_terms
        .iter()
        .map(|&(m, _)| m)
        .filter(|&m| {
            m % 2 == 1
                && (ctx == Context::Orthogonal || m > 1)
                && !d.has_adjacent_v(m)
        })
        .collect();
    let s = unlinked_odd_w.len() as u32;
    let t = ks.windows(2).filter(|w| w[1] - w[0] >= 2).count() as u32;
    let delta = match ctx {
        Context::Sp => u32::from(!ks.is_empty() && ks[0] > 1),
        Context::Orthogonal => u32::from(!ks.is_empty()),
    };
    let mut intervals: Vec<Vec<u32>> = Vec::new();
    for &k in &ks {
        match intervals.last_mut() {
            Some(iv) if k - *iv.last().unwrap() < 2 => iv.push(k),
            _ => intervals.push(vec![k]),
        }
    }
    SplittingInvariants {
        s,
        t,
        delta,
        unlinked_odd_w,
        intervals,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpInvariants {
    pub s: u32,
    pub t: u32,
    pub delta: u32,
    pub class_count: u64,
}

/// Symplectic invariants: the `G`-class of the decomposition meets
/// `Sp_{2n}(q)` in `2^{s+t+δ}` classes.
pub fn sp_invariants(d: &CanonicalDecomposition) -> SpInvariants {
    let inv = splitting_invariants(d, Context::Sp);
    SpInvariants {
        s: inv.s,
        t: inv.t,
        delta: inv.delta,
        class_count: 1u64 << (inv.s + inv.t + inv.delta),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OClassData {
    pub exists: bool,
    pub h_class_count: u64,
    /// how many `Ω`-classes each `O`-class breaks into (2 only for
    /// exceptional classes)
    pub k_splitting: u32,
}

/// Orthogonal class data for `H = O^ε_{2n}(q)`: existence, the number of
/// `H`-classes, and the `Ω`-splitting behavior.
pub fn o_class_data(d: &CanonicalDecomposition, eps: Sign) -> OClassData {
    if d.is_exceptional() {
        return match eps {
            Sign::Plus => OClassData {
                exists: true,
                h_class_count: 1,
                k_splitting: 2,
            },
            Sign::Minus => OClassData {
                exists: false,
                h_class_count: 0,
                k_splitting: 1,
            },
        };
    }
    let inv = splitting_invariants(d, Context::Orthogonal);
    let exp = inv.s + inv.t + inv.delta;
    debug_assert!(exp >= 1, "non-exceptional decompositions split a sign");
    OClassData {
        exists: true,
        h_class_count: 1u64 << (exp - 1),
        k_splitting: 1,
    }
}

/// A class label: a decomposition plus the sign sequence
/// `(α_1..α_s, β_1..β_{t+δ})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassLabel {
    pub decomposition: CanonicalDecomposition,
    pub context: Context,
    pub signs: Vec<Sign>,
}

fn sign_vectors(len: u32) -> Vec<Vec<Sign>> {
    let mut out = Vec::with_capacity(1 << len);
    for bits in 0..(1u64 << len) {
        let v: Vec<Sign> = (0..len)
            .map(|i| {
                // lexicographic with + < -
                if bits >> (len - 1 - i) & 1 == 0 {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            })
            .collect();
        out.push(v);
    }
    out
}

/// The `2^{s+t+δ}` symplectic class labels of a decomposition.
pub fn sp_class_labels(d: &CanonicalDecomposition) -> Vec<ClassLabel> {
    let inv = splitting_invariants(d, Context::Sp);
    sign_vectors(inv.s + inv.t + inv.delta)
        .into_iter()
        .map(|signs| ClassLabel {
            decomposition: d.clone(),
            context: Context::Sp,
            signs,
        })
        .collect()
}

/// The `O^ε` class labels: sign sequences with `Πα·Πβ = ε`. An exceptional
/// decomposition has a single unsigned label in `O⁺` and none in `O⁻`.
pub fn o_class_labels(d: &CanonicalDecomposition, eps: Sign) -> Vec<ClassLabel> {
    if d.is_exceptional() {
        return match eps {
            Sign::Plus => vec![ClassLabel {
                decomposition: d.clone(),
                context: Context::Orthogonal,
                signs: Vec::new(),
            }],
            Sign::Minus => Vec::new(),
        };
    }
    let inv = splitting_invariants(d, Context::Orthogonal);
    sign_vectors(inv.s + inv.t + inv.delta)
        .into_iter()
        .filter(|signs| signs.iter().copied().fold(Sign::Plus, |a, b| a * b) == eps)
        .map(|signs| ClassLabel {
            decomposition: d.clone(),
            context: Context::Orthogonal,
            signs,
        })
        .collect()
}

/// `β(g)` for the labelled symplectic unipotent class: the number of
/// invariant plus-type forms minus the number of invariant minus-type forms.
///
/// Vanishes when a `V(2)` summand is present; otherwise a product of per-piece
/// values: `q^{a_1 + 2Σ_{2|m} a_i}` on `W_0`, `α_v q^{2a_{i_v}}` on the
/// unlinked odd pieces, and `β_u q^{Σ b_j + 2Σ a_i}` per interval.
pub fn weil_diff_value(label: &ClassLabel, q: u64) -> BigInt {
    assert_eq!(label.context, Context::Sp);
    let d = &label.decomposition;
    if d.v_terms.iter().any(|&(k, _)| k == 1) {
        return BigInt::zero();
    }
    let inv = splitting_invariants(d, Context::Sp);
    assert_eq!(label.signs.len() as u32, inv.s + inv.t + inv.delta);

    // W_0: the W(1) part contributes a_1, even-m parts contribute 2a each
    let mut exponent = d.w_mult(1) as u64;
    for &(m, a) in &d.w_terms {
        if m % 2 == 0 {
            exponent += 2 * a as u64;
        }
    }
    let mut sign = Sign::Plus;
    for (v, &m) in inv.unlinked_odd_w.iter().enumerate() {
        exponent += 2 * d.w_mult(m) as u64;
        sign = sign * label.signs[v];
    }
    for (u, interval) in inv.intervals.iter().enumerate() {
        let mut piece = 0u64;
        for &(k, b) in &d.v_terms {
            if interval.contains(&k) {
                piece += b as u64;
            }
        }
        for &(m, a) in &d.w_terms {
            if m % 2 == 1 && m > 1 && !inv.unlinked_odd_w.contains(&m) {
                let linked_here = interval.iter().any(|&k| 2 * k == m + 1 || 2 * k + 1 == m);
                if linked_here {
                    piece += 2 * a as u64;
                }
            }
        }
        exponent += piece;
        sign = sign * label.signs[inv.s as usize + u];
    }
    // equivalently q^{#blocks - a_1}
    debug_assert_eq!(exponent, d.blocks() - d.w_mult(1) as u64);

    let value = ipow(q, exponent);
    match sign {
        Sign::Plus => value,
        Sign::Minus => -value,
    }
}

/// `D = dim R_u(C_G(g))` for a symplectic unipotent Jordan type, from the
/// multiplicities `c_i`:
/// `Σ_{i<j} i c_i c_j + Σ_i (i-1)c_i²/2 + Σ_{2|i} c_i/2 + Σ_{i>1 odd} c_i`.
pub fn d_exponent(lambda: &Partition) -> u64 {
    assert!(lambda.odd_parts_even_mult(), "not a symplectic Jordan type");
    let mults = lambda.multiplicities();
    let mut doubled = 0u64;
    for &(i, ci) in mults {
        let (i, ci) = (i as u64, ci as u64);
        doubled += (i - 1) * ci * ci;
        if i % 2 == 0 {
            doubled += ci;
        } else if i > 1 {
            doubled += 2 * ci;
        }
        for &(j, cj) in mults {
            if i < (j as u64) {
                doubled += 2 * i * ci * (cj as u64);
            }
        }
    }
    debug_assert!(doubled % 2 == 0);
    doubled / 2
}

/// `|C_{Sp_{2n}(q)}(g)|` for a class with all multiplicities even
/// (a `W`-only decomposition): `q^D` times the reductive factors of (cent),
/// `Sp_{2a}` for `m = 1` or even `m` and `O^{α_v}_{2a}` for odd `m > 1`.
pub fn sp_centralizer_all_even(label: &ClassLabel, q: u64) -> BigInt {
    assert_eq!(label.context, Context::Sp);
    let d = &label.decomposition;
    assert!(d.v_terms.is_empty(), "centralizer order needs a W-only class");
    let mut acc = ipow(q, d_exponent(&d.jordan_type()));
    let inv = splitting_invariants(d, Context::Sp);
    for &(m, a) in &d.w_terms {
        if m == 1 || m % 2 == 0 {
            acc *= sp_order(2 * a, q);
        } else {
            let v = inv.unlinked_odd_w.iter().position(|&mm| mm == m).unwrap();
            acc *= o_order(label.signs[v], 2 * a, q);
        }
    }
    acc
}

/// `Λ(g) = Ind_{Sp}^{GL}(β)(g)` for unipotent `g` of Jordan type `λ` with
/// multiplicities `c_i`: zero unless all `c_i` are even, in which case
/// `q^{½Σc_i - Σ_{i<j} i c_i c_j - ½Σ(i-1)c_i²} · |C_{GL}(g)| / Π|Sp_{c_i}(q)|`.
pub fn induced_weil(lambda: &Partition, q: u64) -> Rat {
    assert!(lambda.size() % 2 == 0);
    if !lambda.all_mults_even() {
        return Rat::zero();
    }
    let mults = lambda.multiplicities();
    let mut exp2: i64 = 0; // twice the exponent
    for &(i, ci) in mults {
        let (i, ci) = (i as i64, ci as i64);
        exp2 += ci - (i - 1) * ci * ci;
        for &(j, cj) in mults {
            if i < (j as i64) {
                exp2 -= 2 * i * ci * (cj as i64);
            }
        }
    }
    debug_assert!(exp2 % 2 == 0);
    let mut acc = qpow(q, exp2 / 2) * Rat::from_integer(gl_unip_centralizer(lambda, q));
    for &(_, ci) in mults {
        acc /= Rat::from_integer(sp_order(ci, q));
    }
    acc
}

/// Lift symplectic rational-canonical-form data to the odd orthogonal group
/// one dimension up: `λ_{z-1}` gains a part of size 1, nothing else moves.
pub fn jordan_lift_odd_dim(data: &RcfData, field: &FqField) -> RcfData {
    let zm1 = PolyOverFq::z_minus_one(field);
    let mut out = data.clone();
    out.insert(zm1.clone(), data.lambda_of(&zm1).with_extra_one());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;
    use crate::rat;
    use std::collections::HashSet;

    fn part(parts: &[i64]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    fn decomp(w: &[(u32, u32)], v: &[(u32, u32)]) -> CanonicalDecomposition {
        CanonicalDecomposition::new(w.to_vec(), v.to_vec())
    }

    #[test]
    fn decomposition_enumeration() {
        let d2 = enum_decomps(2);
        assert_eq!(d2.len(), 2);
        let d4: HashSet<String> = enum_decomps(4).iter().map(|d| d.render()).collect();
        let want: HashSet<String> = ["W(1)^2", "W(2)^1", "W(1)^1+V(2)^1", "V(2)^2", "V(4)^1"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(d4, want);
        for d in enum_decomps(6) {
            assert_eq!(d.dimension(), 6);
            assert_eq!(d.jordan_type().size(), 6);
            assert!(d.jordan_type().odd_parts_even_mult());
        }
    }

    #[test]
    fn sp_invariant_examples() {
        let v4 = decomp(&[], &[(2, 1)]);
        let inv = sp_invariants(&v4);
        assert_eq!((inv.s, inv.t, inv.delta, inv.class_count), (0, 0, 1, 2));

        let v2v2 = decomp(&[], &[(1, 2)]);
        assert_eq!(sp_invariants(&v2v2).class_count, 1);

        let total: u64 = enum_decomps(4).iter().map(|d| sp_invariants(d).class_count).sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn o_class_data_examples() {
        let w2 = decomp(&[(2, 1)], &[]);
        assert!(w2.is_exceptional());
        let plus = o_class_data(&w2, Sign::Plus);
        assert_eq!((plus.exists, plus.h_class_count, plus.k_splitting), (true, 1, 2));
        let minus = o_class_data(&w2, Sign::Minus);
        assert!(!minus.exists);

        let v2v2 = decomp(&[], &[(1, 2)]);
        for eps in [Sign::Plus, Sign::Minus] {
            let data = o_class_data(&v2v2, eps);
            assert_eq!((data.exists, data.h_class_count, data.k_splitting), (true, 1, 1));
        }

        // Jordan type (2,2) in O⁺₄: W(2) and V(2)² together give 2 classes
        let type22: u64 = enum_decomps(4)
            .iter()
            .filter(|d| d.jordan_type() == part(&[2, 2]))
            .map(|d| o_class_data(d, Sign::Plus).h_class_count)
            .sum();
        assert_eq!(type22, 2);
    }

    #[test]
    fn o_labels_respect_type_constraint() {
        for two_n in [2u64, 4, 6] {
            for d in enum_decomps(two_n) {
                for eps in [Sign::Plus, Sign::Minus] {
                    let labels = o_class_labels(&d, eps);
                    assert_eq!(labels.len() as u64, o_class_data(&d, eps).h_class_count);
                    if !d.is_exceptional() {
                        for l in &labels {
                            let prod = l.signs.iter().copied().fold(Sign::Plus, |a, b| a * b);
                            assert_eq!(prod, eps);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn weil_values() {
        let q = 2;
        // identity of Sp₂: W(1)¹ → q
        let w1 = decomp(&[(1, 1)], &[]);
        let labels = sp_class_labels(&w1);
        assert_eq!(labels.len(), 1);
        assert_eq!(weil_diff_value(&labels[0], q), BigInt::from(2));

        // a transvection J₂: V(2)¹ → 0
        let v2 = decomp(&[], &[(1, 1)]);
        assert_eq!(weil_diff_value(&sp_class_labels(&v2)[0], q), BigInt::zero());

        // identity of Sp₄: W(1)² → q²
        let w1sq = decomp(&[(1, 2)], &[]);
        assert_eq!(weil_diff_value(&sp_class_labels(&w1sq)[0], q), BigInt::from(4));

        // V(4)¹: two classes with values ±q
        let v4 = decomp(&[], &[(2, 1)]);
        let vals: HashSet<BigInt> = sp_class_labels(&v4)
            .iter()
            .map(|l| weil_diff_value(l, q))
            .collect();
        assert_eq!(vals, HashSet::from([BigInt::from(2), BigInt::from(-2)]));

        // W(3)¹: ±q²
        let w3 = decomp(&[(3, 1)], &[]);
        let vals: HashSet<BigInt> = sp_class_labels(&w3)
            .iter()
            .map(|l| weil_diff_value(l, q))
            .collect();
        assert_eq!(vals, HashSet::from([BigInt::from(4), BigInt::from(-4)]));
    }

    #[test]
    fn weil_magnitude_is_blocks_minus_w1() {
        for two_n in [2u64, 4, 6, 8, 10] {
            for d in enum_decomps(two_n) {
                for label in sp_class_labels(&d) {
                    let v = weil_diff_value(&label, 2);
                    if d.v_terms().iter().any(|&(k, _)| k == 1) {
                        assert_eq!(v, BigInt::zero());
                    } else {
                        use num_traits::Signed;
                        let e = d.blocks() - d.w_mult(1) as u64;
                        assert_eq!(v.abs(), ipow(2, e));
                    }
                }
            }
        }
    }

    #[test]
    fn d_exponent_examples() {
        assert_eq!(d_exponent(&part(&[1, 1])), 0);
        assert_eq!(d_exponent(&part(&[2, 2])), 3);
        assert_eq!(d_exponent(&part(&[1, 1, 1, 1])), 0);
    }

    #[test]
    fn centralizer_all_even_example() {
        // W(2)¹ in Sp₄(2): |C| = q³·|Sp₂(2)| = 48, class size 15
        let w2 = decomp(&[(2, 1)], &[]);
        let labels = sp_class_labels(&w2);
        assert_eq!(labels.len(), 1);
        let c = sp_centralizer_all_even(&labels[0], 2);
        assert_eq!(c, BigInt::from(48));
        assert_eq!(sp_order(4, 2) / c, BigInt::from(15));
    }

    #[test]
    fn induced_weil_examples() {
        assert_eq!(induced_weil(&part(&[2]), 2), rat(0));
        assert_eq!(induced_weil(&part(&[2]), 4), rat(0));
        assert_eq!(induced_weil(&part(&[1, 1]), 2), rat(2));
        assert_eq!(induced_weil(&part(&[1, 1, 1, 1]), 2), rat(112));
    }

    #[test]
    fn induced_weil_nonnegative() {
        for q in [2u64, 4] {
            for size in (2..=14u64).step_by(2) {
                for lam in partitions_of(size) {
                    assert!(induced_weil(&lam, q) >= rat(0), "q={q} λ={lam}");
                }
            }
        }
    }

    #[test]
    fn jordan_lift_examples() {
        let f = FqField::new(2).unwrap();
        let zm1 = PolyOverFq::z_minus_one(&f);

        let mut d = RcfData::new();
        d.insert(zm1.clone(), part(&[1, 1]));
        assert_eq!(
            jordan_lift_odd_dim(&d, &f).lambda_of(&zm1),
            part(&[1, 1, 1])
        );

        let mut d = RcfData::new();
        d.insert(zm1.clone(), part(&[2]));
        assert_eq!(jordan_lift_odd_dim(&d, &f).lambda_of(&zm1), part(&[2, 1]));

        let quad = PolyOverFq::parse("z^2+z+1", &f).unwrap();
        let mut d = RcfData::new();
        d.insert(quad.clone(), part(&[1]));
        let lifted = jordan_lift_odd_dim(&d, &f);
        assert_eq!(lifted.lambda_of(&quad), part(&[1]));
        assert_eq!(lifted.lambda_of(&zm1), part(&[1]));
    }
}
