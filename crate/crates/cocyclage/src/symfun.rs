//! Independent oracle for type-C Kostka-Foulkes polynomials.
//!
//! Everything is computed in the group ring of the weight lattice with
//! polynomial coefficients in `q`, over exact big-integer arithmetic. The
//! hyperoctahedral Weyl group acts by permuting and negating exponent
//! coordinates; characters arise as exact quotients of alternating sums, and
//! Kostka-Foulkes polynomials from a unitriangular solve against the
//! alternant basis. Every solve is verified by recomposing the defining
//! identity, so a wrong triangularity assumption cannot go unnoticed.
//!
//! The sign convention in the Hall-Littlewood kernel (`1 - q e^{-alpha}`
//! over the positive roots pairing positively with the weight) is the one
//! under which both specialization identities hold: `P_lambda(0)` is the
//! Weyl character and `P_lambda(1)` the orbit sum.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Desk-scale guard: the Weyl group has `2^n n!` elements.
const MAX_RANK: usize = 4;
const MAX_WEIGHT: usize = 10;

/// Polynomial in `q` with integer coefficients, ascending, no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The monomial `q^k`.
    pub fn q_power(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        QPolynomial { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        let mut p = QPolynomial {
            coeffs: coeffs.into_iter().map(BigInt::from).collect(),
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(Zero::is_zero).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &QPolynomial) -> QPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        let mut p = QPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn sub(&self, other: &QPolynomial) -> QPolynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QPolynomial {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &QPolynomial) -> QPolynomial {
        if self.is_zero() || other.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        let mut p = QPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn scale(&self, c: &BigInt) -> QPolynomial {
        let mut p = QPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        };
        p.trim();
        p
    }

    /// Evaluate at an integer point.
    pub fn eval(&self, q: i64) -> BigInt {
        let q = BigInt::from(q);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &q + c;
        }
        acc
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.sign() != num_bigint::Sign::Minus)
    }

    /// JSON shape used on the wire: `{"coeffs": [c0, c1, ...]}`.
    pub fn to_json(&self) -> String {
        let list = self
            .coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",");
        format!("{{\"coeffs\":[{list}]}}")
    }
}

impl std::fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "q")?,
                1 => write!(f, "{c}*q")?,
                _ if c.is_one() => write!(f, "q^{i}")?,
                _ => write!(f, "{c}*q^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl std::fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A signed permutation: a permutation of coordinates plus sign flips.
#[derive(Clone, Debug)]
pub struct SignedPerm {
    pub perm: Vec<usize>,
    pub neg: Vec<bool>,
}

impl SignedPerm {
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..v.len())
            .map(|i| {
                let x = v[self.perm[i]];
                if self.neg[i] {
                    -x
                } else {
                    x
                }
            })
            .collect()
    }

    /// Parity of the length: permutation sign times the sign-flip count.
    pub fn is_odd(&self) -> bool {
        let mut seen = vec![false; self.perm.len()];
        let mut transpositions = 0usize;
        for start in 0..self.perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.perm[i];
                len += 1;
            }
            transpositions += len - 1;
        }
        let flips = self.neg.iter().filter(|&&b| b).count();
        (transpositions + flips) % 2 == 1
    }
}

/// The full hyperoctahedral group on `n` coordinates.
pub fn signed_permutations(n: usize) -> Vec<SignedPerm> {
    let mut perms = vec![Vec::new()];
    for _ in 0..n {
        perms = perms
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..n).filter_map(move |v| {
                    if p.contains(&v) {
                        None
                    } else {
                        let mut q = p.clone();
                        q.push(v);
                        Some(q)
                    }
                })
            })
            .collect();
    }
    let mut out = Vec::with_capacity(perms.len() << n);
    for p in perms {
        for mask in 0u32..(1 << n) {
            out.push(SignedPerm {
                perm: p.clone(),
                neg: (0..n).map(|i| mask & (1 << i) != 0).collect(),
            });
        }
    }
    out
}

/// Finite sum of Laurent monomials `e^v` with polynomial coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupRingElem {
    n: usize,
    terms: BTreeMap<Vec<i64>, QPolynomial>,
}

impl std::fmt::Debug for GroupRingElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| format!("({c:?})e^{e:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl GroupRingElem {
    pub fn zero(n: usize) -> Self {
        GroupRingElem {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(n: usize, exp: Vec<i64>, coeff: QPolynomial) -> Self {
        let mut e = GroupRingElem::zero(n);
        e.add_term(exp, coeff);
        e
    }

    pub fn constant(n: usize, coeff: QPolynomial) -> Self {
        GroupRingElem::monomial(n, vec![0; n], coeff)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, QPolynomial> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[i64]) -> QPolynomial {
        self.terms.get(exp).cloned().unwrap_or_else(QPolynomial::zero)
    }

    pub fn add_term(&mut self, exp: Vec<i64>, coeff: QPolynomial) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&coeff);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &GroupRingElem) -> GroupRingElem {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &GroupRingElem) -> GroupRingElem {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.neg());
        }
        out
    }

    pub fn mul(&self, other: &GroupRingElem) -> GroupRingElem {
        let mut out = GroupRingElem::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exp, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &QPolynomial) -> GroupRingElem {
        let mut out = GroupRingElem::zero(self.n);
        for (e, p) in &self.terms {
            out.add_term(e.clone(), p.mul(c));
        }
        out
    }

    /// Apply a Weyl group element to every exponent.
    pub fn act(&self, w: &SignedPerm) -> GroupRingElem {
        let mut out = GroupRingElem::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(w.apply(e), c.clone());
        }
        out
    }

    /// Specialize `q` to an integer, keeping the exponents.
    pub fn eval_q(&self, q: i64) -> BTreeMap<Vec<i64>, BigInt> {
        self.terms
            .iter()
            .map(|(e, c)| (e.clone(), c.eval(q)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Sum of all coefficients after `e^v -> 1`.
    pub fn total_at_one(&self) -> BigInt {
        self.terms.values().map(|c| c.eval(1)).sum()
    }
}

fn guard(n: usize, weight: usize) -> Result<()> {
    if n > MAX_RANK {
        return Err(Error::DeskScale { n, max: MAX_RANK });
    }
    if weight > MAX_WEIGHT {
        return Err(Error::DeskScale {
            n: weight,
            max: MAX_WEIGHT,
        });
    }
    Ok(())
}

/// `rho = (n, n-1, ..., 1)`.
pub fn rho(n: usize) -> Vec<i64> {
    (1..=n as i64).rev().collect()
}

pub fn is_dominant(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1]) && v.last().map(|&x| x >= 0).unwrap_or(true)
}

/// Positive roots of type C: `e_i - e_j`, `e_i + e_j` for `i < j`, and `2e_i`.
pub fn positive_roots(n: usize) -> Vec<Vec<i64>> {
    let mut roots = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut minus = vec![0i64; n];
            minus[i] = 1;
            minus[j] = -1;
            roots.push(minus);
            let mut plus = vec![0i64; n];
            plus[i] = 1;
            plus[j] = 1;
            roots.push(plus);
        }
        let mut long = vec![0i64; n];
        long[i] = 2;
        roots.push(long);
    }
    roots
}

/// Alternating Weyl sum `sum_w (-1)^{l(w)} w(f)`.
pub fn skew_symmetrize(f: &GroupRingElem, n: usize) -> GroupRingElem {
    let mut out = GroupRingElem::zero(n);
    for w in signed_permutations(n) {
        let image = f.act(&w);
        for (e, c) in image.terms {
            out.add_term(e, if w.is_odd() { c.neg() } else { c });
        }
    }
    out
}

/// `eps(e^{lambda + rho})`, the alternant of a dominant weight.
pub fn alternant(lambda: &[i64], n: usize) -> GroupRingElem {
    let exp: Vec<i64> = lambda.iter().zip(rho(n)).map(|(a, r)| a + r).collect();
    skew_symmetrize(&GroupRingElem::monomial(n, exp, QPolynomial::one()), n)
}

fn weight_size(lambda: &[i64]) -> usize {
    lambda.iter().map(|&x| x.unsigned_abs() as usize).sum()
}

/// Exact division of an alternating element by `eps(e^rho)`.
///
/// The denominator's lexicographically largest exponent is `rho` with
/// coefficient one, so repeatedly cancelling the leading term of the
/// dividend terminates exactly when the quotient exists.
fn divide_by_weyl_denominator(mut f: GroupRingElem, n: usize) -> Result<GroupRingElem> {
    let denom = alternant(&vec![0; n], n);
    let mut quotient = GroupRingElem::zero(n);
    let mut rounds = 0usize;
    while let Some((lead_exp, lead_coeff)) = f.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        rounds += 1;
        if rounds > 1_000_000 {
            return Err(Error::NonExactQuotient);
        }
        let shift: Vec<i64> = lead_exp
            .iter()
            .zip(rho(n))
            .map(|(a, r)| a - r)
            .collect();
        quotient.add_term(shift.clone(), lead_coeff.clone());
        let piece = GroupRingElem::monomial(n, shift, lead_coeff);
        f = f.sub(&piece.mul(&denom));
        if let Some((new_lead, _)) = f.terms.iter().next_back() {
            if *new_lead >= lead_exp {
                return Err(Error::NonExactQuotient);
            }
        }
    }
    Ok(quotient)
}

/// The Weyl character `chi(lambda) = eps(e^{lambda+rho}) / eps(e^rho)`.
pub fn weyl_character(lambda: &[i64], n: usize) -> Result<GroupRingElem> {
    guard(n, weight_size(lambda))?;
    divide_by_weyl_denominator(alternant(lambda, n), n)
}

/// The orbit sum `m(lambda)`: each weight of the Weyl orbit once.
pub fn orbit_sum(lambda: &[i64], n: usize) -> Result<GroupRingElem> {
    guard(n, weight_size(lambda))?;
    let mut seen = std::collections::BTreeSet::new();
    for w in signed_permutations(n) {
        seen.insert(w.apply(lambda));
    }
    let mut out = GroupRingElem::zero(n);
    for e in seen {
        out.add_term(e, QPolynomial::one());
    }
    Ok(out)
}

/// Numerator of the Hall-Littlewood polynomial before dividing by the Weyl
/// denominator: `eps(e^{lambda+rho} prod (1 - q e^{-alpha}))` over positive
/// roots pairing positively with `lambda`.
fn hall_littlewood_numerator(lambda: &[i64], n: usize) -> GroupRingElem {
    let exp: Vec<i64> = lambda.iter().zip(rho(n)).map(|(a, r)| a + r).collect();
    let mut inner = GroupRingElem::monomial(n, exp, QPolynomial::one());
    for root in positive_roots(n) {
        let pairing: i64 = lambda.iter().zip(&root).map(|(a, b)| a * b).sum();
        if pairing > 0 {
            let neg_root: Vec<i64> = root.iter().map(|&x| -x).collect();
            let mut factor = GroupRingElem::constant(n, QPolynomial::one());
            factor.add_term(neg_root, QPolynomial::from_coeffs(vec![0, -1]));
            inner = inner.mul(&factor);
        }
    }
    skew_symmetrize(&inner, n)
}

/// The Hall-Littlewood polynomial `P_lambda(q)` as an explicit element of
/// the group ring with polynomial coefficients.
pub fn hall_littlewood(lambda: &[i64], n: usize) -> Result<GroupRingElem> {
    guard(n, weight_size(lambda))?;
    divide_by_weyl_denominator(hall_littlewood_numerator(lambda, n), n)
}

/// Dominant candidates that can carry a nonzero Kostka-Foulkes coefficient
/// against `lambda`: same parity, no larger size, at most `n` parts; ordered
/// so that the root order refines the enumeration.
fn dominant_candidates(lambda: &[i64], n: usize) -> Vec<Vec<i64>> {
    let total = weight_size(lambda);
    let mut out = Vec::new();
    for size in (total % 2..=total).step_by(2) {
        for mu in crate::shapes::partitions_bounded(size, n) {
            let mut v: Vec<i64> = mu.parts().iter().map(|&p| p as i64).collect();
            v.resize(n, 0);
            out.push(v);
        }
    }
    out.sort();
    out.sort_by_key(|v| v.iter().map(|&x| x.unsigned_abs()).sum::<u64>());
    out
}

/// Coefficients of an alternating element over the alternant basis, read
/// off its strictly dominant exponents.
fn alternant_coordinates(f: &GroupRingElem, n: usize) -> BTreeMap<Vec<i64>, QPolynomial> {
    let mut out = BTreeMap::new();
    for (e, c) in f.terms() {
        let strictly_dominant = e.windows(2).all(|w| w[0] > w[1]) && *e.last().unwrap() > 0;
        if strictly_dominant {
            let mu: Vec<i64> = e.iter().zip(rho(n)).map(|(a, r)| a - r).collect();
            out.insert(mu, c.clone());
        }
    }
    out
}

/// The Kostka-Foulkes polynomial `K_{lambda,mu}(q)` from the expansion of
/// the Weyl character over Hall-Littlewood polynomials.
///
/// Solved by forward substitution over the alternant coordinates and then
/// verified exactly: the recomposed sum must equal the alternant of
/// `lambda`, and every coefficient must be a nonnegative integer.
pub fn kostka_foulkes(lambda: &[i64], mu: &[i64], n: usize) -> Result<QPolynomial> {
    guard(n, weight_size(lambda))?;
    if !is_dominant(lambda) || !is_dominant(mu) {
        return Err(Error::WeightNotPartition);
    }
    if lambda.iter().skip(n).any(|&x| x != 0) || mu.iter().skip(n).any(|&x| x != 0) {
        return Err(Error::TooManyParts { n });
    }
    let candidates = dominant_candidates(lambda, n);
    let mut numerators = Vec::with_capacity(candidates.len());
    let mut coords = Vec::with_capacity(candidates.len());
    for nu in &candidates {
        let num = hall_littlewood_numerator(nu, n);
        coords.push(alternant_coordinates(&num, n));
        numerators.push(num);
    }
    let target: Vec<i64> = {
        let mut v = lambda.to_vec();
        v.resize(n, 0);
        v
    };
    // Each numerator expands as its own alternant plus strictly smaller
    // ones, so the system is unitriangular downward: solve from the top.
    let mut solved: Vec<QPolynomial> = vec![QPolynomial::zero(); candidates.len()];
    for i in (0..candidates.len()).rev() {
        let nu = &candidates[i];
        let mut value = if *nu == target {
            QPolynomial::one()
        } else {
            QPolynomial::zero()
        };
        for j in (i + 1)..candidates.len() {
            let contribution = coords[j].get(nu).cloned().unwrap_or_else(QPolynomial::zero);
            value = value.sub(&solved[j].mul(&contribution));
        }
        solved[i] = value;
    }
    // Recompose and check the defining identity exactly.
    let mut recomposed = GroupRingElem::zero(n);
    for (k, num) in solved.iter().zip(&numerators) {
        if !k.is_zero() {
            recomposed = recomposed.add(&num.scale(k));
        }
    }
    if recomposed != alternant(&target, n) {
        return Err(Error::OracleInconsistency(
            "Hall-Littlewood expansion does not recompose the character".into(),
        ));
    }
    for (k, nu) in solved.iter().zip(&candidates) {
        if !k.has_nonnegative_coeffs() {
            return Err(Error::OracleInconsistency(format!(
                "negative coefficient in K at {nu:?}: {k:?}"
            )));
        }
    }
    let mut muv = mu.to_vec();
    muv.resize(n, 0);
    Ok(candidates
        .iter()
        .position(|nu| *nu == muv)
        .map(|i| solved[i].clone())
        .unwrap_or_else(QPolynomial::zero))
}

/// The one-row closed formula:
/// `q^{T_n(mu)} sum_k q^{theta}` over the k-vectors of the row, with
/// `T_n(mu) = sum (n-i) mu_ibar` and `theta = sum (2(n-i)+1) k_i`.
pub fn kostka_onerow_formula(p: usize, mu: &crate::shapes::Partition, n: usize) -> Result<QPolynomial> {
    guard(n, p)?;
    if mu.size() > p {
        return Err(Error::WeightBiggerThanRow { mu: mu.size(), p });
    }
    if mu.len() > n {
        return Err(Error::TooManyParts { n });
    }
    let base: usize = (1..=n)
        .map(|i| (n - i) * mu.part(n - i + 1))
        .sum();
    let mut total = QPolynomial::zero();
    for spec in crate::typec::enumerate_row_symplectic(n, p, mu)? {
        let theta: usize = (1..=n).map(|i| (2 * (n - i) + 1) * spec.k[i - 1]).sum();
        total = total.add(&QPolynomial::q_power(base + theta));
    }
    Ok(total)
}

/// Weyl dimension of the irreducible with highest weight `lambda`:
/// the product of `<lambda + rho, alpha> / <rho, alpha>`.
pub fn weyl_dimension(lambda: &[i64], n: usize) -> BigInt {
    let rho = rho(n);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for root in positive_roots(n) {
        let pair = |v: &[i64]| -> i64 { v.iter().zip(&root).map(|(a, b)| a * b).sum() };
        let shifted: Vec<i64> = lambda.iter().zip(&rho).map(|(a, r)| a + r).collect();
        num *= BigInt::from(pair(&shifted));
        den *= BigInt::from(pair(&rho));
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{partitions_bounded, Partition};

    fn poly(coeffs: &[i64]) -> QPolynomial {
        QPolynomial::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn group_order() {
        for n in 1..=4usize {
            let order: usize = (1..=n).product::<usize>() << n;
            assert_eq!(signed_permutations(n).len(), order);
        }
    }

    #[test]
    fn skew_symmetrize_rank_one() {
        let n = 1;
        let f = GroupRingElem::monomial(n, vec![1], QPolynomial::one());
        let eps = skew_symmetrize(&f, n);
        assert_eq!(eps.coeff(&[1]), QPolynomial::one());
        assert_eq!(eps.coeff(&[-1]), QPolynomial::one().neg());
        // A symmetric element dies.
        let sym = GroupRingElem::monomial(n, vec![1], QPolynomial::one())
            .add(&GroupRingElem::monomial(n, vec![-1], QPolynomial::one()));
        assert!(skew_symmetrize(&sym, n).is_zero());
    }

    #[test]
    fn alternation_under_group_elements() {
        let n = 2;
        let a = alternant(&[3, 1], n);
        for w in signed_permutations(n) {
            let moved = a.act(&w);
            if w.is_odd() {
                assert!(a.add(&moved).is_zero(), "w = {w:?}");
            } else {
                assert_eq!(a, moved, "w = {w:?}");
            }
        }
    }

    #[test]
    fn weyl_character_examples() {
        // chi(0) = 1.
        let one = weyl_character(&[0, 0], 2).unwrap();
        assert_eq!(one, GroupRingElem::constant(2, QPolynomial::one()));
        // The standard representation of rank one.
        let chi = weyl_character(&[1], 1).unwrap();
        assert_eq!(chi.coeff(&[1]), QPolynomial::one());
        assert_eq!(chi.coeff(&[-1]), QPolynomial::one());
        assert_eq!(chi.terms().len(), 2);
    }

    #[test]
    fn weyl_character_dimensions() {
        for n in 1..=3usize {
            for size in 0..=4usize {
                for lambda in partitions_bounded(size, n) {
                    let mut v: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
                    v.resize(n, 0);
                    let chi = weyl_character(&v, n).unwrap();
                    assert_eq!(
                        chi.total_at_one(),
                        weyl_dimension(&v, n),
                        "lambda = {lambda:?}, n = {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn characters_are_group_invariant() {
        let n = 2;
        for lambda in [[2i64, 0], [2, 2], [3, 1]] {
            let chi = weyl_character(&lambda, n).unwrap();
            let p = hall_littlewood(&lambda, n).unwrap();
            for w in signed_permutations(n) {
                assert_eq!(chi.act(&w), chi, "chi at {lambda:?}");
                assert_eq!(p.act(&w), p, "P at {lambda:?}");
            }
        }
    }

    #[test]
    fn orbit_sum_examples() {
        let m = orbit_sum(&[1, 0], 2).unwrap();
        assert_eq!(m.terms().len(), 4);
        assert_eq!(m.coeff(&[1, 0]), QPolynomial::one());
        assert_eq!(m.coeff(&[0, -1]), QPolynomial::one());
        let zero = orbit_sum(&[0, 0], 2).unwrap();
        assert_eq!(zero.terms().len(), 1);
    }

    #[test]
    fn hall_littlewood_specializations() {
        for n in 1..=2usize {
            for size in 0..=4usize {
                for lambda in partitions_bounded(size, n) {
                    let mut v: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
                    v.resize(n, 0);
                    let p = hall_littlewood(&v, n).unwrap();
                    let chi = weyl_character(&v, n).unwrap();
                    let orb = orbit_sum(&v, n).unwrap();
                    assert_eq!(p.eval_q(0), chi.eval_q(0), "q=0 at {v:?}");
                    assert_eq!(p.eval_q(1), orb.eval_q(1), "q=1 at {v:?}");
                }
            }
        }
    }

    #[test]
    fn kostka_examples() {
        // K_{lambda,lambda} = 1.
        assert_eq!(kostka_foulkes(&[1], &[1], 1).unwrap(), QPolynomial::one());
        // Rank one: chi((2)) = P_(2) + q P_(0).
        assert_eq!(kostka_foulkes(&[2], &[0], 1).unwrap(), poly(&[0, 1]));
        // Rank two row of two over the empty weight: q + q^3.
        assert_eq!(
            kostka_foulkes(&[2, 0], &[0, 0], 2).unwrap(),
            poly(&[0, 1, 0, 1])
        );
    }

    #[test]
    fn onerow_formula_examples() {
        assert_eq!(
            kostka_onerow_formula(2, &Partition::empty(), 1).unwrap(),
            poly(&[0, 1])
        );
        assert_eq!(
            kostka_onerow_formula(2, &Partition::empty(), 2).unwrap(),
            poly(&[0, 1, 0, 1])
        );
        // p = |mu| collapses to the single k = 0 term.
        assert_eq!(
            kostka_onerow_formula(3, &Partition::new(vec![2, 1]).unwrap(), 2).unwrap(),
            poly(&[0, 1])
        );
    }

    #[test]
    fn kostka_specializations_against_characters() {
        // At q = 1 the coefficient counts the weight multiplicity of the
        // character; at q = 0 the expansion collapses to the identity.
        // This exercises the solve on non-row shapes as well.
        for n in 1..=2usize {
            for lsize in 0..=5usize {
                for lambda in partitions_bounded(lsize, n) {
                    let mut lv: Vec<i64> = lambda.parts().iter().map(|&x| x as i64).collect();
                    lv.resize(n, 0);
                    let chi = weyl_character(&lv, n).unwrap();
                    for msize in (lsize % 2..=lsize).step_by(2) {
                        for mu in partitions_bounded(msize, n) {
                            let mut mv: Vec<i64> =
                                mu.parts().iter().map(|&x| x as i64).collect();
                            mv.resize(n, 0);
                            let k = kostka_foulkes(&lv, &mv, n).unwrap();
                            assert_eq!(
                                k.eval(1),
                                chi.coeff(&mv).eval(1),
                                "multiplicity at {lv:?}, {mv:?}"
                            );
                            let expect_zero = if lv == mv {
                                BigInt::one()
                            } else {
                                BigInt::zero()
                            };
                            assert_eq!(k.eval(0), expect_zero, "q=0 at {lv:?}, {mv:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn kostka_matches_onerow() {
        for n in 1..=2usize {
            for p in 0..=5usize {
                for w in (p % 2..=p).step_by(2) {
                    for mu in partitions_bounded(w, n) {
                        let mut muv: Vec<i64> = mu.parts().iter().map(|&x| x as i64).collect();
                        muv.resize(n, 0);
                        let mut lam = vec![0i64; n];
                        lam[0] = p as i64;
                        assert_eq!(
                            kostka_foulkes(&lam, &muv, n).unwrap(),
                            kostka_onerow_formula(p, &mu, n).unwrap(),
                            "n = {n}, p = {p}, mu = {mu:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn desk_scale_guard() {
        assert!(weyl_character(&[1; 5], 5).is_err());
        assert!(kostka_foulkes(&[11], &[1], 1).is_err());
    }

    #[test]
    fn qpolynomial_basics() {
        let p = poly(&[1, 0, 2]);
        assert_eq!(p.eval(1), BigInt::from(3));
        assert_eq!(p.eval(2), BigInt::from(9));
        assert_eq!(p.to_json(), "{\"coeffs\":[1,0,2]}");
        assert_eq!(poly(&[0]).to_json(), "{\"coeffs\":[]}");
        assert_eq!(p.mul(&poly(&[0, 1])), poly(&[0, 1, 0, 2]));
    }
}
