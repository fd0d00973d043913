//! Free nilpotent groups of class at most 3 on a Hall basic-commutator
//! basis, and their finite exponent quotients.
//!
//! Basis for rank `m`, class `c`:
//!
//! - weight 1: `x_1, ..., x_m`;
//! - weight 2: `c_{ij} = [x_i, x_j]` for `i < j`, ordered lexicographically;
//! - weight 3: `d_{ijk} = [x_i, x_j, x_k]` for `i < j`, `k >= i` (the Hall
//!   condition), ordered lexicographically.
//!
//! The conjugation relations are exact commutator identities in class 3:
//! `x_j^{x_i} = x_j c_{ij}^{-1}`, `c_{ab}^{x_k} = c_{ab} d_{abk}` when
//! `k >= a`, and for `k < a` the Jacobi rewrite
//! `[c_{ab}, x_k] = d_{kab}^{-1} d_{kba}`.

use num::bigint::BigInt;
use num::Integer;

use crate::error::BuildError;
use crate::pc::{GenDef, PcBuilder, PcGroup, Tail};

use super::{letter_names, verify_class3_identities, verify_definitions};

/// Index bookkeeping for the Hall basis of rank `m`, class `c`.
pub(crate) struct HallBasis {
    pub m: usize,
    pub c: u32,
    pub pairs: Vec<(usize, usize)>,
    pub triples: Vec<(usize, usize, usize)>,
}

impl HallBasis {
    pub fn new(m: usize, c: u32) -> Self {
        let mut pairs = Vec::new();
        let mut triples = Vec::new();
        if c >= 2 {
            for i in 0..m {
                for j in (i + 1)..m {
                    pairs.push((i, j));
                }
            }
        }
        if c >= 3 {
            for i in 0..m {
                for j in (i + 1)..m {
                    for k in i..m {
                        triples.push((i, j, k));
                    }
                }
            }
            triples.sort();
        }
        HallBasis { m, c, pairs, triples }
    }

    pub fn ngens(&self) -> usize {
        self.m + self.pairs.len() + self.triples.len()
    }

    pub fn idx2(&self, i: usize, j: usize) -> usize {
        self.m + self.pairs.iter().position(|&p| p == (i, j)).unwrap()
    }

    pub fn idx3(&self, i: usize, j: usize, k: usize) -> usize {
        self.m
            + self.pairs.len()
            + self.triples.iter().position(|&t| t == (i, j, k)).unwrap()
    }

    pub fn weights(&self) -> Vec<u32> {
        let mut w = vec![1; self.m];
        w.extend(std::iter::repeat(2).take(self.pairs.len()));
        w.extend(std::iter::repeat(3).take(self.triples.len()));
        w
    }

    pub fn defs(&self) -> Vec<GenDef> {
        let mut d = vec![GenDef::Atom; self.m];
        for &(i, j) in &self.pairs {
            let _ = (i, j);
            d.push(GenDef::Commutator(i, j));
        }
        for &(i, j, k) in &self.triples {
            d.push(GenDef::Commutator(self.idx2(i, j), k));
        }
        d
    }

    /// Conjugation relations shared by the free group and its exponent
    /// quotients; exponents are reduced mod `q` when given.
    pub fn conjugations(&self, q: Option<&BigInt>) -> Vec<(usize, usize, Tail)> {
        let reduce = |e: i64| -> BigInt {
            let e = BigInt::from(e);
            match q {
                Some(q) => e.mod_floor(q),
                None => e,
            }
        };
        let mut out = Vec::new();
        if self.c < 2 {
            return out;
        }
        // x_j^{x_i} = x_j c_{ij}^{-1}
        for &(i, j) in &self.pairs {
            let h = self.idx2(i, j);
            out.push((i, j, vec![(j, reduce(1)), (h, reduce(-1))]));
        }
        if self.c < 3 {
            return out;
        }
        // c_{ab}^{x_k}
        for &(a, b) in &self.pairs {
            let h = self.idx2(a, b);
            for k in 0..self.m {
                if k >= a {
                    let d = self.idx3(a, b, k);
                    out.push((k, h, vec![(h, reduce(1)), (d, reduce(1))]));
                } else {
                    let d1 = self.idx3(k, a, b);
                    let d2 = self.idx3(k, b, a);
                    out.push((
                        k,
                        h,
                        vec![(h, reduce(1)), (d1, reduce(-1)), (d2, reduce(1))],
                    ));
                }
            }
        }
        out
    }
}

/// Free nilpotent group of rank `m` and class `c <= 3` on its Hall basis.
/// All relative orders are infinite.
pub fn build_free_nilpotent(m: usize, c: u32) -> Result<PcGroup, BuildError> {
    if m < 1 {
        return Err(BuildError::UnsupportedParameter("rank must be >= 1".into()));
    }
    if !(1..=3).contains(&c) {
        return Err(BuildError::UnsupportedParameter(format!(
            "class {c} unsupported (1, 2 or 3)"
        )));
    }
    let basis = HallBasis::new(m, c);
    let n = basis.ngens();
    let mut b = PcBuilder::new(format!("freenilpotent:{m}:{c}"), n)
        .names(letter_names(n))
        .weights(basis.weights())
        .relatively_free(true);
    for (i, def) in basis.defs().into_iter().enumerate() {
        b = b.definition(i, def);
    }
    for (i, k, word) in basis.conjugations(None) {
        b = b.conjugate_big(i, k, word);
    }
    let g = b.build()?;
    verify_definitions(&g)?;
    if c == 3 {
        verify_class3_identities(&g, m)?;
    }
    Ok(g)
}

/// Finite quotient of the free nilpotent group in which every basis
/// generator gets relative order `q`, where `q = p` or `q = p^2` for a
/// prime `p > c`. The constraint `p > c` makes every power tail trivial
/// (the binomial coefficients in the collection formulas vanish mod `q`),
/// so the presentation keeps the free-nilpotent conjugation tails.
pub fn build_exponent_quotient(m: usize, c: u32, q: u64) -> Result<PcGroup, BuildError> {
    if m < 1 {
        return Err(BuildError::UnsupportedParameter("rank must be >= 1".into()));
    }
    if !(2..=3).contains(&c) {
        return Err(BuildError::UnsupportedParameter(format!(
            "class {c} unsupported (2 or 3)"
        )));
    }
    let p = prime_root(q).ok_or_else(|| {
        BuildError::UnsupportedParameter(format!("modulus {q} is not p or p^2 for a prime p"))
    })?;
    if p <= c as u64 {
        return Err(BuildError::UnsupportedParameter(format!(
            "prime {p} must exceed the class {c}"
        )));
    }
    let basis = HallBasis::new(m, c);
    let n = basis.ngens();
    let qi = BigInt::from(q);
    let mut b = PcBuilder::new(format!("expquotient:{m}:{c}:{q}"), n)
        .names(letter_names(n))
        .weights(basis.weights())
        .relatively_free(true);
    for i in 0..n {
        b = b.order_big(i, qi.clone());
    }
    for (i, def) in basis.defs().into_iter().enumerate() {
        b = b.definition(i, def);
    }
    for (i, k, word) in basis.conjugations(Some(&qi)) {
        b = b.conjugate_big(i, k, word);
    }
    let g = b.build()?;
    verify_definitions(&g)?;
    if c == 3 {
        verify_class3_identities(&g, m)?;
    }
    Ok(g)
}

/// Returns `p` when `n = p` or `n = p^2` for a prime `p`.
fn prime_root(n: u64) -> Option<u64> {
    if is_prime(n) {
        return Some(n);
    }
    let r = (n as f64).sqrt().round() as u64;
    for cand in r.saturating_sub(1)..=r + 1 {
        if cand > 1 && cand * cand == n && is_prime(cand) {
            return Some(cand);
        }
    }
    None
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hall_basis_counts() {
        assert_eq!(HallBasis::new(2, 2).ngens(), 3);
        assert_eq!(HallBasis::new(2, 3).ngens(), 5);
        assert_eq!(HallBasis::new(3, 2).ngens(), 6);
        assert_eq!(HallBasis::new(3, 3).ngens(), 14);
    }

    #[test]
    fn free_abelian_has_trivial_tails() {
        let g = build_free_nilpotent(2, 1).unwrap();
        assert_eq!(g.ngens(), 2);
        let a = g.generator(0).unwrap();
        let b = g.generator(1).unwrap();
        assert_eq!(g.multiply(&a, &b).unwrap(), g.multiply(&b, &a).unwrap());
    }

    #[test]
    fn class3_rank2_basis_is_a_b_c_d_e() {
        let g = build_free_nilpotent(2, 3).unwrap();
        assert_eq!(g.ngens(), 5);
        assert_eq!(g.names(), ["a", "b", "c", "d", "e"]);
        // c = [a,b], d = [c,a], e = [c,b]
        let a = g.generator(0).unwrap();
        let b = g.generator(1).unwrap();
        let c = g.commutator2(&a, &b).unwrap();
        assert_eq!(c, g.generator(2).unwrap());
        assert_eq!(g.commutator2(&c, &a).unwrap(), g.generator(3).unwrap());
        assert_eq!(g.commutator2(&c, &b).unwrap(), g.generator(4).unwrap());
    }

    #[test]
    fn quotient_orders_multiply() {
        let g = build_exponent_quotient(2, 2, 25).unwrap();
        assert_eq!(g.order(), Some(BigInt::from(15625)));
        let h = build_exponent_quotient(3, 2, 9).unwrap();
        assert_eq!(h.ngens(), 6);
        assert_eq!(h.order(), Some(BigInt::from(9u64.pow(6))));
    }

    #[test]
    fn quotient_rejects_small_primes() {
        assert!(build_exponent_quotient(2, 3, 9).is_err()); // p = 3 = c
        assert!(build_exponent_quotient(2, 2, 8).is_err()); // not p or p^2
        assert!(build_exponent_quotient(2, 2, 4).is_err()); // p = 2 = c
    }

    #[test]
    fn class_cap_enforced() {
        assert!(build_free_nilpotent(2, 4).is_err());
        assert!(build_free_nilpotent(0, 2).is_err());
    }

    #[test]
    fn exponent_law_in_quotient() {
        let g = build_exponent_quotient(2, 3, 25).unwrap();
        let mut rng = rand::SeedableRng::seed_from_u64(11);
        let rng: &mut rand_chacha::ChaCha12Rng = &mut rng;
        for _ in 0..25 {
            let x = g.random_uniform(rng).unwrap();
            assert!(g.power(&x, &BigInt::from(25)).unwrap().is_identity());
        }
    }
}
