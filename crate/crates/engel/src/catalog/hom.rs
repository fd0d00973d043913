//! Homomorphisms between pc groups, given by generator images.
//!
//! A [`GroupHom`] stores one target element per source pc generator.
//! Constructors take images for the weight-1 generators only and extend
//! them over the whole basis through the generator definitions (each
//! higher generator is a commutator or a power of earlier ones); every
//! defining relation of the source is then checked to map to the
//! identity.

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use std::collections::HashMap;

use crate::error::HomError;
use crate::pc::{GenDef, GroupElement, PcGroup};

#[derive(Debug, Clone)]
pub struct GroupHom {
    source: PcGroup,
    target: PcGroup,
    images: Vec<GroupElement>,
}

impl GroupHom {
    /// Builds a homomorphism from images of the weight-1 generators,
    /// extending over the basis and verifying all defining relations.
    pub fn new(
        source: &PcGroup,
        target: &PcGroup,
        weight1_images: Vec<GroupElement>,
    ) -> Result<Self, HomError> {
        let atoms: Vec<usize> = (0..source.ngens())
            .filter(|&i| matches!(source.definitions()[i], GenDef::Atom))
            .collect();
        if weight1_images.len() != atoms.len() {
            return Err(HomError::RankMismatch {
                expected: atoms.len(),
                got: weight1_images.len(),
            });
        }
        let mut images: Vec<Option<GroupElement>> = vec![None; source.ngens()];
        let mut provided = weight1_images.into_iter();
        for i in 0..source.ngens() {
            images[i] = Some(match source.definitions()[i] {
                GenDef::Atom => provided.next().unwrap(),
                GenDef::Commutator(u, v) => {
                    let iu = images[u].clone().ok_or(HomError::NoExtension)?;
                    let iv = images[v].clone().ok_or(HomError::NoExtension)?;
                    target.commutator2(&iu, &iv)?
                }
                GenDef::Power(u) => {
                    let iu = images[u].clone().ok_or(HomError::NoExtension)?;
                    let r = source
                        .relative_order(u)
                        .ok_or(HomError::NoExtension)?
                        .clone();
                    target.power(&iu, &r)?
                }
            });
        }
        let hom = GroupHom {
            source: source.clone(),
            target: target.clone(),
            images: images.into_iter().map(Option::unwrap).collect(),
        };
        hom.verify_relations()?;
        Ok(hom)
    }

    /// Builds a homomorphism from explicit images of every pc generator.
    pub fn from_full_images(
        source: &PcGroup,
        target: &PcGroup,
        images: Vec<GroupElement>,
    ) -> Result<Self, HomError> {
        if images.len() != source.ngens() {
            return Err(HomError::RankMismatch {
                expected: source.ngens(),
                got: images.len(),
            });
        }
        let hom = GroupHom {
            source: source.clone(),
            target: target.clone(),
            images,
        };
        hom.verify_relations()?;
        Ok(hom)
    }

    pub fn identity(group: &PcGroup) -> Self {
        GroupHom {
            source: group.clone(),
            target: group.clone(),
            images: group.generators(),
        }
    }

    fn verify_relations(&self) -> Result<(), HomError> {
        for (idx, rel) in self.source.relators().iter().enumerate() {
            let mut acc = self.target.identity();
            for (i, e) in rel.letters() {
                let p = self.target.power(&self.images[*i], e)?;
                acc = self.target.multiply(&acc, &p)?;
            }
            if !acc.is_identity() {
                return Err(HomError::RelationViolated(idx));
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &PcGroup {
        &self.source
    }

    pub fn target(&self) -> &PcGroup {
        &self.target
    }

    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    /// Evaluates the homomorphism on a normal form.
    pub fn apply(&self, x: &GroupElement) -> Result<GroupElement, HomError> {
        if x.group() != &self.source {
            return Err(HomError::SourceMismatch);
        }
        let mut acc = self.target.identity();
        for (i, e) in x.exponents().iter().enumerate() {
            if !e.is_zero() {
                let p = self.target.power(&self.images[i], e)?;
                acc = self.target.multiply(&acc, &p)?;
            }
        }
        Ok(acc)
    }

    /// `self . other`: apply `other` first.
    pub fn compose(&self, other: &GroupHom) -> Result<GroupHom, HomError> {
        if other.target != self.source {
            return Err(HomError::EndpointMismatch);
        }
        let images = other
            .images
            .iter()
            .map(|img| self.apply(img))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GroupHom {
            source: other.source.clone(),
            target: self.target.clone(),
            images,
        })
    }

    /// Decides whether an endomorphism is bijective, returning its inverse
    /// when it is.
    ///
    /// Small finite groups are decided exhaustively. Weighted uniform
    /// presentations (exponent quotients, free nilpotent groups and
    /// `B(m,3)`) are decided through the induced maps on the lower-central
    /// layers: the weight-1 matrix must have unit determinant, after which
    /// the inverse is assembled layer by layer.
    pub fn invertible(&self) -> Result<Option<GroupHom>, HomError> {
        if !self.is_endomorphism() {
            return Err(HomError::EndpointMismatch);
        }
        if let Some(order) = self.source.order() {
            if order <= BigInt::from(10_000u32) {
                return self.invertible_exhaustive();
            }
        }
        if self.source.weights().is_some() {
            return self.invertible_layered();
        }
        Err(HomError::InvertibilityUndecided(
            "group is too large and carries no weight structure".into(),
        ))
    }

    fn invertible_exhaustive(&self) -> Result<Option<GroupHom>, HomError> {
        let mut preimage: HashMap<GroupElement, GroupElement> = HashMap::new();
        for x in self.source.elements()? {
            let y = self.apply(&x)?;
            if preimage.insert(y, x).is_some() {
                return Ok(None); // not injective
            }
        }
        let mut inv_images = Vec::with_capacity(self.source.ngens());
        for i in 0..self.source.ngens() {
            match preimage.get(&self.source.generator(i)?) {
                Some(x) => inv_images.push(x.clone()),
                None => return Ok(None), // not surjective
            }
        }
        let inverse = GroupHom::from_full_images(&self.source, &self.source, inv_images)?;
        Ok(Some(inverse))
    }

    fn invertible_layered(&self) -> Result<Option<GroupHom>, HomError> {
        let weights = self.source.weights().unwrap().to_vec();
        let n = self.source.ngens();
        // uniform coefficient ring: all orders equal (mod q) or all infinite
        let modulus: Option<BigInt> = {
            let first = self.source.relative_order(0).cloned();
            for i in 1..n {
                if self.source.relative_order(i).cloned() != first {
                    return Err(HomError::InvertibilityUndecided(
                        "mixed relative orders".into(),
                    ));
                }
            }
            first
        };
        let max_w = *weights.iter().max().unwrap_or(&1);
        let layer: Vec<Vec<usize>> = (1..=max_w)
            .map(|w| (0..n).filter(|&i| weights[i] == w).collect())
            .collect();

        // Layer-1 matrix M[row][col]: row generator coordinate of the image
        // of the col-th weight-1 generator.
        let m1 = layer_matrix(&self.images, &layer[0], &layer[0]);
        let inv1 = match invert_matrix(&m1, modulus.as_ref()) {
            Some(inv) => inv,
            None => return Ok(None),
        };

        // Start from the abelianized inverse and correct layer by layer.
        let w1_images: Vec<GroupElement> = (0..layer[0].len())
            .map(|col| {
                let exps: Vec<BigInt> = (0..n)
                    .map(|row| {
                        layer[0]
                            .iter()
                            .position(|&g| g == row)
                            .map(|r| inv1[r][col].clone())
                            .unwrap_or_else(BigInt::zero)
                    })
                    .collect();
                self.source.element_from_exponents(&exps)
            })
            .collect::<Result<_, _>>()?;
        let mut psi = GroupHom::new(&self.source, &self.source, w1_images)?;

        for w in 2..=max_w {
            let idxs = &layer[(w - 1) as usize];
            if idxs.is_empty() {
                continue;
            }
            let lw = layer_matrix(&self.images, idxs, idxs);
            let lw_inv = match invert_matrix(&lw, modulus.as_ref()) {
                Some(inv) => inv,
                None => {
                    return Err(HomError::InvertibilityUndecided(format!(
                        "layer {w} matrix is singular despite unit weight-1 determinant"
                    )))
                }
            };
            let mut corrected = Vec::new();
            for &i in &layer[0] {
                let chi = self.apply(&psi.images[i])?;
                let gen = self.source.generator(i)?;
                let err = self
                    .source
                    .multiply(&self.source.inverse(&gen)?, &chi)?;
                // err lies in gamma_w; its layer-w coordinates drive the fix
                let u: Vec<BigInt> = idxs.iter().map(|&h| err.exponents()[h].clone()).collect();
                let t = mat_vec(&lw_inv, &u, modulus.as_ref());
                let mut fix = psi.images[i].clone();
                for (pos, &h) in idxs.iter().enumerate() {
                    let basis = self.source.generator(h)?;
                    let p = self.source.power(&basis, &(-t[pos].clone()))?;
                    fix = self.source.multiply(&fix, &p)?;
                }
                corrected.push(fix);
            }
            psi = GroupHom::new(&self.source, &self.source, corrected)?;
        }

        // Exact verification both ways on all generators.
        for i in 0..n {
            let g = self.source.generator(i)?;
            if self.apply(&psi.apply(&g)?)? != g || psi.apply(&self.apply(&g)?)? != g {
                return Err(HomError::InvertibilityUndecided(
                    "layered inverse failed exact verification".into(),
                ));
            }
        }
        Ok(Some(psi))
    }
}

/// Rows: coordinates at `rows` indices of the images of the `cols` generators.
fn layer_matrix(
    images: &[GroupElement],
    rows: &[usize],
    cols: &[usize],
) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|&r| {
            cols.iter()
                .map(|&c| images[c].exponents()[r].clone())
                .collect()
        })
        .collect()
}

/// Inverse of a square integer matrix over `Z` (determinant must be a unit,
/// i.e. +-1) or over `Z_q` (determinant coprime to `q`), via the adjugate.
fn invert_matrix(m: &[Vec<BigInt>], modulus: Option<&BigInt>) -> Option<Vec<Vec<BigInt>>> {
    let n = m.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let det = determinant(m);
    let det_inv: BigInt = match modulus {
        None => {
            if det.abs().is_one() {
                det.clone()
            } else {
                return None;
            }
        }
        Some(q) => {
            let d = det.mod_floor(q);
            modular_inverse(&d, q)?
        }
    };
    let mut adj = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor = minor_matrix(m, i, j);
            let cof = determinant(&minor);
            let sign = if (i + j) % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            // adjugate is the transpose of the cofactor matrix
            let val = sign * cof * &det_inv;
            adj[j][i] = match modulus {
                Some(q) => val.mod_floor(q),
                None => val,
            };
        }
    }
    Some(adj)
}

fn minor_matrix(m: &[Vec<BigInt>], row: usize, col: usize) -> Vec<Vec<BigInt>> {
    let n = m.len();
    let mut out = Vec::with_capacity(n - 1);
    for i in 0..n {
        if i == row {
            continue;
        }
        let mut r = Vec::with_capacity(n - 1);
        for j in 0..n {
            if j == col {
                continue;
            }
            r.push(m[i][j].clone());
        }
        out.push(r);
    }
    out
}

fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    match n {
        0 => BigInt::one(),
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        _ => {
            let mut acc = BigInt::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor = minor_matrix(m, 0, j);
                let term = &m[0][j] * determinant(&minor);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

fn modular_inverse(a: &BigInt, q: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(q);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(q))
    } else {
        None
    }
}

fn mat_vec(m: &[Vec<BigInt>], v: &[BigInt], modulus: Option<&BigInt>) -> Vec<BigInt> {
    m.iter()
        .map(|row| {
            let s: BigInt = row.iter().zip(v).map(|(a, b)| a * b).sum();
            match modulus {
                Some(q) => s.mod_floor(q),
                None => s,
            }
        })
        .collect()
}

/// Precomputed binary-power ladder for an automorphism, so that
/// `phi^e(x)` costs one application per set bit of `e`.
#[derive(Debug, Clone)]
pub struct AutLadder {
    squares: Vec<GroupHom>,
}

impl AutLadder {
    pub fn new(phi: &GroupHom, max_bits: u64) -> Result<Self, HomError> {
        if !phi.is_endomorphism() {
            return Err(HomError::EndpointMismatch);
        }
        let mut squares = vec![phi.clone()];
        for _ in 1..max_bits {
            let last = squares.last().unwrap();
            squares.push(last.compose(last)?);
        }
        Ok(AutLadder { squares })
    }

    pub fn group(&self) -> &PcGroup {
        self.squares[0].source()
    }

    pub fn base(&self) -> &GroupHom {
        &self.squares[0]
    }

    /// Applies `phi^e` for `e >= 0`.
    pub fn apply_power(&self, e: &BigInt, x: &GroupElement) -> Result<GroupElement, HomError> {
        debug_assert!(!e.is_negative());
        let mag = e.magnitude();
        let bits = mag.bits();
        assert!(
            bits as usize <= self.squares.len(),
            "AutLadder too short for exponent"
        );
        let mut acc = x.clone();
        for i in 0..bits {
            if mag.bit(i) {
                acc = self.squares[i as usize].apply(&acc)?;
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn identity_hom_fixes_everything() {
        let g = catalog::build_burnside3(2).unwrap();
        let id = GroupHom::identity(&g);
        for x in g.elements().unwrap() {
            assert_eq!(id.apply(&x).unwrap(), x);
        }
    }

    #[test]
    fn swap_automorphism_has_order_two() {
        let g = catalog::build_burnside3(2).unwrap();
        let phi = GroupHom::new(
            &g,
            &g,
            vec![g.generator(1).unwrap(), g.generator(0).unwrap()],
        )
        .unwrap();
        for x in g.elements().unwrap() {
            assert_eq!(phi.apply(&phi.apply(&x).unwrap()).unwrap(), x);
        }
    }

    #[test]
    fn extension_on_free_nilpotent() {
        // a |-> a, b |-> ab fixes [a,b] in class 2.
        let g = catalog::build_free_nilpotent(2, 2).unwrap();
        let a = g.generator(0).unwrap();
        let ab = g.multiply(&a, &g.generator(1).unwrap()).unwrap();
        let phi = GroupHom::new(&g, &g, vec![a, ab]).unwrap();
        let c = g.generator(2).unwrap();
        assert_eq!(phi.apply(&c).unwrap(), c);
    }

    #[test]
    fn invalid_images_rejected() {
        // In B(2,3), sending a generator to itself and the other to a
        // commuting element must still satisfy relations; sending a |-> a,
        // b |-> a does (it factors through an abelian quotient), so use a
        // target that breaks the exponent instead: map into S3.
        let b = catalog::build_burnside3(1).unwrap(); // C3
        let s3 = catalog::build_s3().unwrap();
        // a |-> transposition violates a^3 = 1
        let res = GroupHom::new(&b, &s3, vec![s3.generator(0).unwrap()]);
        assert!(matches!(res, Err(HomError::RelationViolated(_))));
        // a |-> 3-cycle is fine
        assert!(GroupHom::new(&b, &s3, vec![s3.generator(1).unwrap()]).is_ok());
    }

    #[test]
    fn determinant_invertibility_on_exponent_quotient() {
        let g = catalog::build_exponent_quotient(2, 2, 9).unwrap();
        let a = g.generator(0).unwrap();
        let b = g.generator(1).unwrap();
        // a |-> a^3, b |-> b: determinant 3 is not a unit mod 9
        let phi = GroupHom::new(
            &g,
            &g,
            vec![g.power(&a, &BigInt::from(3)).unwrap(), b.clone()],
        )
        .unwrap();
        assert!(phi.invertible().unwrap().is_none());
        // a |-> ab, b |-> b: determinant 1
        let psi = GroupHom::new(&g, &g, vec![g.multiply(&a, &b).unwrap(), b]).unwrap();
        let inv = psi.invertible().unwrap().expect("should be invertible");
        for i in 0..g.ngens() {
            let x = g.generator(i).unwrap();
            assert_eq!(inv.apply(&psi.apply(&x).unwrap()).unwrap(), x);
        }
    }

    #[test]
    fn layered_inverse_on_class3() {
        let g = catalog::build_exponent_quotient(2, 3, 25).unwrap();
        let a = g.generator(0).unwrap();
        let b = g.generator(1).unwrap();
        let phi = GroupHom::new(
            &g,
            &g,
            vec![g.multiply(&a, &b).unwrap(), b.clone()],
        )
        .unwrap();
        let inv = phi.invertible().unwrap().expect("unit determinant");
        let mut rng = rand::SeedableRng::seed_from_u64(5);
        let rng: &mut rand_chacha::ChaCha12Rng = &mut rng;
        for _ in 0..20 {
            let x = g.random_uniform(rng).unwrap();
            assert_eq!(inv.apply(&phi.apply(&x).unwrap()).unwrap(), x);
        }
    }

    #[test]
    fn ladder_matches_iterated_application() {
        let g = catalog::build_burnside3(2).unwrap();
        let phi = GroupHom::new(
            &g,
            &g,
            vec![
                g.multiply(&g.generator(0).unwrap(), &g.generator(1).unwrap())
                    .unwrap(),
                g.generator(1).unwrap(),
            ],
        )
        .unwrap();
        let ladder = AutLadder::new(&phi, 8).unwrap();
        let x = g.generator(0).unwrap();
        let mut expect = x.clone();
        for e in 0..20u32 {
            assert_eq!(
                ladder.apply_power(&BigInt::from(e), &x).unwrap(),
                expect,
                "power {e}"
            );
            expect = phi.apply(&expect).unwrap();
        }
    }
}
