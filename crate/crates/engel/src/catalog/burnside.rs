//! The groups `B(m,3)`: largest `m`-generated groups of exponent 3.
//!
//! `B(m,3)` is finite, nilpotent of class at most 3, and 2-Engel. Its pc
//! basis consists of the generators `x_i`, the commutators
//! `c_{ij} = [x_i, x_j]` for `i < j`, and the triple commutators
//! `d_{ijk} = [x_i, x_j, x_k]` for `i < j < k`; every relative order is 3
//! and all power tails are trivial. Weight-3 commutators alternate in
//! their arguments (a consequence of the 2-Engel law), which pins down
//! every conjugation relation:
//!
//! - `x_j^{x_i} = x_j c_{ij}^2` for `i < j`;
//! - `c_{ab}^{x_k} = c_{ab}` when `k` repeats `a` or `b`, and otherwise
//!   `c_{ab} d^{\pm 1}` with the sign of the permutation sorting `(a,b,k)`.

use crate::error::BuildError;
use crate::pc::{GenDef, PcBuilder, PcGroup};

use super::{letter_names, verify_class3_identities, verify_definitions};

/// Builds `B(m,3)` for `1 <= m <= 4` (the size guard keeps the largest
/// instance at 3^14 elements).
pub fn build_burnside3(m: usize) -> Result<PcGroup, BuildError> {
    if m < 1 {
        return Err(BuildError::UnsupportedParameter("rank must be >= 1".into()));
    }
    if m > 4 {
        return Err(BuildError::UnsupportedParameter(
            "rank above 4 rejected (size guard)".into(),
        ));
    }
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            pairs.push((i, j));
        }
    }
    let mut triples = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            for k in (j + 1)..m {
                triples.push((i, j, k));
            }
        }
    }
    let n = m + pairs.len() + triples.len();
    let idx2 = |i: usize, j: usize| m + pairs.iter().position(|&p| p == (i, j)).unwrap();
    let idx3 = |i: usize, j: usize, k: usize| {
        m + pairs.len() + triples.iter().position(|&t| t == (i, j, k)).unwrap()
    };

    let mut weights = vec![1; m];
    weights.extend(std::iter::repeat(2).take(pairs.len()));
    weights.extend(std::iter::repeat(3).take(triples.len()));

    let mut b = PcBuilder::new(format!("burnside3:{m}"), n)
        .names(letter_names(n))
        .weights(weights)
        .relatively_free(true);
    for i in 0..n {
        b = b.order(i, 3);
    }
    for (i, def) in (0..m)
        .map(|_| GenDef::Atom)
        .chain(pairs.iter().map(|&(i, j)| GenDef::Commutator(i, j)))
        .chain(triples.iter().map(|&(i, j, k)| GenDef::Commutator(idx2(i, j), k)))
        .enumerate()
    {
        b = b.definition(i, def);
    }
    // x_j^{x_i} = x_j [x_j, x_i] = x_j c_{ij}^{-1}
    for &(i, j) in &pairs {
        b = b.conjugate(i, j, vec![(j, 1), (idx2(i, j), 2)]);
    }
    // c_{ab}^{x_k} = c_{ab} [x_a, x_b, x_k]; alternation kills repeated
    // arguments and sorts the rest with a sign.
    for &(a, bb) in &pairs {
        let h = idx2(a, bb);
        for k in 0..m {
            if k == a || k == bb {
                continue;
            }
            let (d, exp) = if k > bb {
                (idx3(a, bb, k), 1)
            } else if k > a {
                (idx3(a, k, bb), 2) // one transposition: inverse
            } else {
                (idx3(k, a, bb), 1) // 3-cycle: even
            };
            b = b.conjugate(k, h, vec![(h, 1), (d, exp)]);
        }
    }
    let g = b.build()?;
    verify_definitions(&g)?;
    if m >= 3 {
        verify_class3_identities(&g, m)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::bigint::BigInt;

    #[test]
    fn small_ranks() {
        assert_eq!(build_burnside3(1).unwrap().order(), Some(BigInt::from(3)));
        assert_eq!(build_burnside3(2).unwrap().order(), Some(BigInt::from(27)));
        assert_eq!(
            build_burnside3(3).unwrap().order(),
            Some(BigInt::from(2187))
        );
        assert_eq!(
            build_burnside3(4).unwrap().order(),
            Some(BigInt::from(3u64.pow(14)))
        );
        assert!(build_burnside3(5).is_err());
    }

    #[test]
    fn exponent_three_exhaustive_rank2() {
        let g = build_burnside3(2).unwrap();
        for x in g.elements().unwrap() {
            assert!(g.power(&x, &BigInt::from(3)).unwrap().is_identity());
        }
    }

    #[test]
    fn two_engel_exhaustive_rank2() {
        let g = build_burnside3(2).unwrap();
        let elems: Vec<_> = g.elements().unwrap().collect();
        for x in &elems {
            for y in &elems {
                assert!(g.engel_commutator(x, y, 2).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn rank3_has_class_three_witness() {
        let g = build_burnside3(3).unwrap();
        let a = g.generator(0).unwrap();
        let b = g.generator(1).unwrap();
        let c = g.generator(2).unwrap();
        let w = g.commutator(&[a, b, c]).unwrap();
        assert!(!w.is_identity());
    }
}
