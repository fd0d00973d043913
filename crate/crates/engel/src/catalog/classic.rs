//! Small named groups used throughout the test corpus: symmetric and
//! quaternion groups, dihedral 2-groups on the lower-central basis, the
//! wreath product `C3 wr C3`, and cyclic groups.

use crate::error::BuildError;
use crate::pc::{GenDef, PcBuilder, PcGroup};

use super::letter_names;

/// Symmetric group on three letters: `g1` of order 2, `g2` of order 3,
/// `g2^{g1} = g2^2`. Solvable but not nilpotent, so it carries no weight
/// metadata.
pub fn build_s3() -> Result<PcGroup, BuildError> {
    PcBuilder::new("S3", 2)
        .names(letter_names(2))
        .order(0, 2)
        .order(1, 3)
        .conjugate(0, 1, vec![(1, 2)])
        .build()
}

/// Quaternion group of order 8 on the basis `i, j, z = i^2`.
pub fn build_q8() -> Result<PcGroup, BuildError> {
    PcBuilder::new("Q8", 3)
        .names(letter_names(3))
        .order(0, 2)
        .order(1, 2)
        .order(2, 2)
        .power_tail(0, vec![(2, 1)])
        .power_tail(1, vec![(2, 1)])
        .conjugate(0, 1, vec![(1, 1), (2, 1)])
        .weights(vec![1, 1, 2])
        .definition(2, GenDef::Power(0))
        .build()
}

/// Dihedral group of order `2^k` (`k >= 3`) on the lower-central basis
/// `s, r, r^2, r^4, ...`: every relative order is 2, squaring walks down
/// the chain, and conjugation by the reflection inverts the rotations.
pub fn build_dihedral2(k: u32) -> Result<PcGroup, BuildError> {
    if !(3..=16).contains(&k) {
        return Err(BuildError::UnsupportedParameter(
            "dihedral exponent k must be in 3..=16".into(),
        ));
    }
    let n = k as usize; // s plus r, r^2, ..., r^{2^{k-2}}
    let mut b = PcBuilder::new(format!("D{}", 1u64 << k), n).names(letter_names(n));
    for i in 0..n {
        b = b.order(i, 2);
    }
    // (r^{2^t})^2 = r^{2^{t+1}}
    for t in 0..(n - 2) {
        b = b.power_tail(1 + t, vec![(2 + t, 1)]);
        b = b.definition(2 + t, GenDef::Power(1 + t));
    }
    // (r^{2^t})^s = r^{-2^t} = r^{2^t} r^{2^{t+1}} ... r^{2^{k-2}}
    for t in 0..(n - 2) {
        let word: Vec<(usize, i64)> = (1 + t..n).map(|h| (h, 1)).collect();
        b = b.conjugate(0, 1 + t, word);
    }
    let mut weights = vec![1, 1];
    weights.extend(2..=(k - 1));
    b.weights(weights).build()
}

/// The wreath product `C3 wr C3` of order 81 on the basis
/// `t, b, [b,t], [b,t,t]`: nilpotent of class 3 and not 2-Engel.
pub fn build_c3_wr_c3() -> Result<PcGroup, BuildError> {
    PcBuilder::new("C3wrC3", 4)
        .names(letter_names(4))
        .order(0, 3)
        .order(1, 3)
        .order(2, 3)
        .order(3, 3)
        .conjugate(0, 1, vec![(1, 1), (2, 1)])
        .conjugate(0, 2, vec![(2, 1), (3, 1)])
        .weights(vec![1, 1, 2, 3])
        .definition(2, GenDef::Commutator(1, 0))
        .definition(3, GenDef::Commutator(2, 0))
        .build()
}

/// Cyclic group of order `k >= 2`.
pub fn build_cyclic(k: u64) -> Result<PcGroup, BuildError> {
    if k < 2 {
        return Err(BuildError::UnsupportedParameter(
            "cyclic order must be >= 2".into(),
        ));
    }
    PcBuilder::new(format!("C{k}"), 1)
        .names(letter_names(1))
        .order(0, k)
        .weights(vec![1])
        .build()
}

/// The trivial group (no generators).
pub fn build_trivial() -> Result<PcGroup, BuildError> {
    PcBuilder::new("trivial", 0).weights(vec![]).build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::bigint::BigInt;

    #[test]
    fn orders() {
        assert_eq!(build_s3().unwrap().order(), Some(BigInt::from(6)));
        assert_eq!(build_q8().unwrap().order(), Some(BigInt::from(8)));
        assert_eq!(build_dihedral2(3).unwrap().order(), Some(BigInt::from(8)));
        assert_eq!(build_dihedral2(4).unwrap().order(), Some(BigInt::from(16)));
        assert_eq!(build_dihedral2(5).unwrap().order(), Some(BigInt::from(32)));
        assert_eq!(build_c3_wr_c3().unwrap().order(), Some(BigInt::from(81)));
        assert_eq!(build_cyclic(101).unwrap().order(), Some(BigInt::from(101)));
        assert_eq!(build_trivial().unwrap().order(), Some(BigInt::from(1)));
    }

    #[test]
    fn s3_is_nonabelian() {
        let g = build_s3().unwrap();
        let a = g.generator(0).unwrap();
        let b = g.generator(1).unwrap();
        assert_ne!(g.multiply(&a, &b).unwrap(), g.multiply(&b, &a).unwrap());
    }

    #[test]
    fn q8_relations() {
        let g = build_q8().unwrap();
        let i = g.generator(0).unwrap();
        let j = g.generator(1).unwrap();
        let z = g.generator(2).unwrap();
        assert_eq!(g.power(&i, &BigInt::from(2)).unwrap(), z);
        assert_eq!(g.power(&j, &BigInt::from(2)).unwrap(), z);
        assert_eq!(
            g.power(&i, &BigInt::from(4)).unwrap(),
            g.identity()
        );
        // ij has order 4 (it is "k")
        let k = g.multiply(&i, &j).unwrap();
        assert_eq!(g.power(&k, &BigInt::from(2)).unwrap(), z);
    }

    #[test]
    fn dihedral_rotation_orders() {
        let g = build_dihedral2(4).unwrap(); // D16
        let r = g.generator(1).unwrap();
        let mut ord = BigInt::from(1);
        let mut acc = r.clone();
        while !acc.is_identity() {
            acc = g.multiply(&acc, &r).unwrap();
            ord += 1;
        }
        assert_eq!(ord, BigInt::from(8));
        // reflection inverts the rotation
        let s = g.generator(0).unwrap();
        assert_eq!(
            g.conjugate(&r, &s).unwrap(),
            g.inverse(&r).unwrap()
        );
    }

    #[test]
    fn wreath_has_order_nine_elements() {
        let g = build_c3_wr_c3().unwrap();
        let t = g.generator(0).unwrap();
        let b = g.generator(1).unwrap();
        let tb = g.multiply(&t, &b).unwrap();
        let cube = g.power(&tb, &BigInt::from(3)).unwrap();
        assert!(!cube.is_identity());
        assert!(g.power(&tb, &BigInt::from(9)).unwrap().is_identity());
    }
}
