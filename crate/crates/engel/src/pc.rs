//! Polycyclic presentations and collection to normal form.
//!
//! A [`PcGroup`] is a group given by a consistent polycyclic presentation:
//! generators `g_1 < g_2 < ... < g_n`, a relative order `r_i` (possibly
//! infinite) with a power relation `g_i^{r_i} = w_i` for finite `r_i`, and
//! conjugation relations `g_k^{g_i} = v_{ik}` for `i < k`. Every element has
//! a unique normal form `g_1^{e_1} ... g_n^{e_n}` with `0 <= e_i < r_i`
//! whenever `r_i` is finite; [`PcGroup::collect`] rewrites an arbitrary
//! [`FreeWord`] into that form, which solves the word problem.
//!
//! Presentations are immutable once built and cheaply shareable; all
//! operations are pure functions of their inputs. Collection runs under a
//! per-call rewrite budget so that a malformed presentation fails loudly
//! instead of looping.

use num::bigint::{BigInt, RandBigInt};
use num::{Integer, One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{BuildError, PcError};
use crate::word::FreeWord;

/// Sparse normal word: ascending `(generator index, exponent)` pairs.
pub(crate) type Tail = Vec<(usize, BigInt)>;

/// How a polycyclic generator arises from earlier ones. Used to extend
/// generator maps from weight-1 images over the whole basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenDef {
    /// An independent generator (weight 1 in catalog groups).
    Atom,
    /// Defined as the commutator `[g_i, g_j]` of two earlier generators.
    Commutator(usize, usize),
    /// Defined as `g_i^{r_i}`, the power relation of an earlier generator.
    Power(usize),
}

/// Default per-call collection budget (rewrite steps).
pub const DEFAULT_COLLECT_BUDGET: u64 = 10_000_000;
/// Default number of associativity triples sampled when a presentation
/// is built or loaded.
pub const DEFAULT_CONSISTENCY_TRIPLES: usize = 1_000;
/// Default iteration cap for order computations in infinite groups.
pub const DEFAULT_ORDER_ITERATIONS: u64 = 1_000_000;

#[derive(Debug, PartialEq, Eq)]
pub(crate) struct PcData {
    pub(crate) label: String,
    pub(crate) names: Vec<String>,
    pub(crate) orders: Vec<Option<BigInt>>,
    pub(crate) power_tails: Vec<Tail>,
    /// `conj[i][k]`: full normal word for `g_k^{g_i}`, `i < k`; `None` means
    /// the conjugation is trivial.
    pub(crate) conj: Vec<Vec<Option<Tail>>>,
    pub(crate) conj_inv: Vec<Vec<Option<Tail>>>,
    pub(crate) weights: Option<Vec<u32>>,
    pub(crate) defs: Vec<GenDef>,
    pub(crate) relatively_free: bool,
    pub(crate) budget: u64,
    /// Rows `>= inverse_ready_from` of `conj_inv` are valid. Finished
    /// presentations have 0 here; the builder uses it while deriving.
    pub(crate) inverse_ready_from: usize,
}

/// A group presented by a consistent polycyclic presentation.
///
/// Cloning is cheap (shared immutable data).
#[derive(Debug, Clone)]
pub struct PcGroup {
    data: Arc<PcData>,
}

/// An element in normal form over a [`PcGroup`].
#[derive(Debug, Clone)]
pub struct GroupElement {
    group: PcGroup,
    exps: Vec<BigInt>,
}

/// The order of a single element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementOrder {
    Finite(BigInt),
    Infinite,
}

impl PcGroup {
    pub fn ngens(&self) -> usize {
        self.data.orders.len()
    }

    pub fn label(&self) -> &str {
        &self.data.label
    }

    pub fn names(&self) -> &[String] {
        &self.data.names
    }

    /// Relative order of generator `i`, `None` when infinite.
    pub fn relative_order(&self, i: usize) -> Option<&BigInt> {
        self.data.orders[i].as_ref()
    }

    pub fn weights(&self) -> Option<&[u32]> {
        self.data.weights.as_deref()
    }

    pub fn definitions(&self) -> &[GenDef] {
        &self.data.defs
    }

    /// Whether the group is relatively free in its variety (set by the
    /// catalog builders; governs homomorphism extension).
    pub fn is_relatively_free(&self) -> bool {
        self.data.relatively_free
    }

    pub fn is_finite(&self) -> bool {
        self.data.orders.iter().all(|r| r.is_some())
    }

    /// Group order: the product of the relative orders, `None` if infinite.
    pub fn order(&self) -> Option<BigInt> {
        let mut n = BigInt::one();
        for r in &self.data.orders {
            n *= r.as_ref()?;
        }
        Some(n)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            group: self.clone(),
            exps: vec![BigInt::zero(); self.ngens()],
        }
    }

    pub fn generator(&self, i: usize) -> Result<GroupElement, PcError> {
        if i >= self.ngens() {
            return Err(PcError::IndexOutOfRange {
                index: i,
                ngens: self.ngens(),
            });
        }
        let mut e = self.identity();
        e.exps[i] = BigInt::one();
        Ok(e)
    }

    pub fn generators(&self) -> Vec<GroupElement> {
        (0..self.ngens()).map(|i| self.generator(i).unwrap()).collect()
    }

    fn same_group(&self, other: &PcGroup) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data == other.data
    }

    fn check_member(&self, x: &GroupElement) -> Result<(), PcError> {
        if self.same_group(&x.group) {
            Ok(())
        } else {
            Err(PcError::PresentationMismatch)
        }
    }

    /// Collects a free word to its unique normal form.
    pub fn collect(&self, w: &FreeWord) -> Result<GroupElement, PcError> {
        self.collect_with_budget(w, self.data.budget)
    }

    pub fn collect_with_budget(&self, w: &FreeWord, budget: u64) -> Result<GroupElement, PcError> {
        let n = self.ngens();
        for (idx, _) in w.letters() {
            if *idx >= n {
                return Err(PcError::IndexOutOfRange {
                    index: *idx,
                    ngens: n,
                });
            }
        }
        let mut c = Collector::new(&self.data, budget);
        let mut exps = vec![BigInt::zero(); n];
        for (idx, exp) in w.letters() {
            c.right_mul(&mut exps, *idx, exp)?;
        }
        Ok(GroupElement {
            group: self.clone(),
            exps,
        })
    }

    /// Normalizes an arbitrary exponent vector, interpreting it as the word
    /// `g_1^{e_1} ... g_n^{e_n}`.
    pub fn element_from_exponents(&self, exps: &[BigInt]) -> Result<GroupElement, PcError> {
        if exps.len() != self.ngens() {
            return Err(PcError::IndexOutOfRange {
                index: exps.len(),
                ngens: self.ngens(),
            });
        }
        let mut c = Collector::new(&self.data, self.data.budget);
        let mut out = vec![BigInt::zero(); self.ngens()];
        for (k, e) in exps.iter().enumerate() {
            c.right_mul(&mut out, k, e)?;
        }
        Ok(GroupElement {
            group: self.clone(),
            exps: out,
        })
    }

    /// Normal form of `xy`.
    pub fn multiply(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement, PcError> {
        self.check_member(x)?;
        self.check_member(y)?;
        let mut c = Collector::new(&self.data, self.data.budget);
        let mut exps = x.exps.clone();
        for k in 0..self.ngens() {
            if !y.exps[k].is_zero() {
                c.right_mul(&mut exps, k, &y.exps[k])?;
            }
        }
        Ok(GroupElement {
            group: self.clone(),
            exps,
        })
    }

    /// Product of a slice of elements, identity when empty.
    pub fn multiply_all(&self, xs: &[GroupElement]) -> Result<GroupElement, PcError> {
        let mut acc = self.identity();
        for x in xs {
            acc = self.multiply(&acc, x)?;
        }
        Ok(acc)
    }

    pub fn inverse(&self, x: &GroupElement) -> Result<GroupElement, PcError> {
        self.check_member(x)?;
        let mut c = Collector::new(&self.data, self.data.budget);
        let exps = c.inv_vec(&x.exps)?;
        Ok(GroupElement {
            group: self.clone(),
            exps,
        })
    }

    /// `x^k` by binary exponentiation; `x^0` is the identity and negative
    /// exponents invert first.
    pub fn power(&self, x: &GroupElement, k: &BigInt) -> Result<GroupElement, PcError> {
        self.check_member(x)?;
        let mut c = Collector::new(&self.data, self.data.budget);
        let exps = c.pow_vec(&x.exps, k)?;
        Ok(GroupElement {
            group: self.clone(),
            exps,
        })
    }

    /// Conjugate `x^y = y^-1 x y`.
    pub fn conjugate(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement, PcError> {
        let yi = self.inverse(y)?;
        let t = self.multiply(&yi, x)?;
        self.multiply(&t, y)
    }

    /// Left-normed commutator `[x_1, ..., x_k]`; a single element is
    /// returned unchanged (the weight-1 case).
    pub fn commutator(&self, xs: &[GroupElement]) -> Result<GroupElement, PcError> {
        let (first, rest) = xs.split_first().ok_or(PcError::EmptyCommutator)?;
        self.check_member(first)?;
        let mut acc = first.clone();
        for y in rest {
            acc = self.commutator2(&acc, y)?;
        }
        Ok(acc)
    }

    /// `[x, y] = x^-1 y^-1 x y`.
    pub fn commutator2(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement, PcError> {
        let xi = self.inverse(x)?;
        let yi = self.inverse(y)?;
        let a = self.multiply(&xi, &yi)?;
        let b = self.multiply(&a, x)?;
        self.multiply(&b, y)
    }

    /// Iterated Engel commutator `[x, n y]`; `n = 0` returns `x`.
    pub fn engel_commutator(
        &self,
        x: &GroupElement,
        y: &GroupElement,
        n: u32,
    ) -> Result<GroupElement, PcError> {
        self.check_member(x)?;
        self.check_member(y)?;
        let mut acc = x.clone();
        for _ in 0..n {
            acc = self.commutator2(&acc, y)?;
        }
        Ok(acc)
    }

    /// Least `k > 0` with `x^k = 1`, or the infinite marker.
    ///
    /// Finite groups are exact (the order divides the group order, whose
    /// factorization is known from the relative orders). In infinite groups
    /// the abelianization image decides infinite order where possible;
    /// otherwise a bounded iteration runs and failing that the order is
    /// reported undecided.
    pub fn element_order(&self, x: &GroupElement) -> Result<ElementOrder, PcError> {
        self.element_order_with_iterations(x, DEFAULT_ORDER_ITERATIONS)
    }

    pub fn element_order_with_iterations(
        &self,
        x: &GroupElement,
        max_iterations: u64,
    ) -> Result<ElementOrder, PcError> {
        self.check_member(x)?;
        if x.is_identity() {
            return Ok(ElementOrder::Finite(BigInt::one()));
        }
        if let Some(n) = self.order() {
            let mut primes: Vec<BigInt> = Vec::new();
            for r in self.data.orders.iter().flatten() {
                for p in factor_primes(r).ok_or(PcError::OrderUndecided)? {
                    if !primes.contains(&p) {
                        primes.push(p);
                    }
                }
            }
            let mut k = n;
            for p in &primes {
                loop {
                    if (&k % p).is_zero() {
                        let cand = &k / p;
                        if self.power(x, &cand)?.is_identity() {
                            k = cand;
                            continue;
                        }
                    }
                    break;
                }
            }
            return Ok(ElementOrder::Finite(k));
        }
        // Infinite group: a nonzero weight-1 coordinate on an infinite-order
        // generator forces infinite order via the abelianization.
        if let Some(weights) = &self.data.weights {
            for i in 0..self.ngens() {
                if weights[i] == 1 && self.data.orders[i].is_none() && !x.exps[i].is_zero() {
                    return Ok(ElementOrder::Infinite);
                }
            }
        }
        let mut acc = x.clone();
        for k in 1..=max_iterations {
            if acc.is_identity() {
                return Ok(ElementOrder::Finite(BigInt::from(k - 1).max(BigInt::one())));
            }
            if k == max_iterations {
                break;
            }
            acc = self.multiply(&acc, x)?;
        }
        Err(PcError::OrderUndecided)
    }

    /// Streams every element exactly once (finite groups only); the count
    /// equals the product of the relative orders by normal-form uniqueness.
    pub fn elements(&self) -> Result<Elements, PcError> {
        if !self.is_finite() {
            return Err(PcError::InfiniteGroup);
        }
        Ok(Elements {
            group: self.clone(),
            counter: Some(vec![BigInt::zero(); self.ngens()]),
        })
    }

    /// Uniform random element of a finite group; exact by the normal-form
    /// bijection (each coordinate uniform in `[0, r_i)`).
    pub fn random_uniform<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<GroupElement, PcError> {
        if !self.is_finite() {
            return Err(PcError::InfiniteGroup);
        }
        let mut exps = Vec::with_capacity(self.ngens());
        for r in &self.data.orders {
            let r = r.as_ref().unwrap();
            exps.push(rng.gen_bigint_range(&BigInt::zero(), r));
        }
        Ok(GroupElement {
            group: self.clone(),
            exps,
        })
    }

    /// Random element with every exponent drawn uniformly from
    /// `[-spread, spread]` (clamped into range for finite coordinates).
    /// The sampling device for infinite catalog groups.
    pub fn random_bounded<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        spread: u32,
    ) -> Result<GroupElement, PcError> {
        let mut exps = Vec::with_capacity(self.ngens());
        let s = BigInt::from(spread);
        for r in &self.data.orders {
            let raw = rng.gen_bigint_range(&(-s.clone()), &(s.clone() + 1));
            exps.push(match r {
                Some(r) => raw.mod_floor(r),
                None => raw,
            });
        }
        Ok(GroupElement {
            group: self.clone(),
            exps,
        })
    }

    /// Breadth-first ball of the given radius over products of `gens` and
    /// their inverses. `layers[d]` holds the elements first reached at
    /// distance `d`; an error is raised when the ball outgrows `max_items`.
    pub fn growth_ball(
        &self,
        gens: &[GroupElement],
        radius: usize,
        max_items: usize,
    ) -> Result<Ball, PcError> {
        let mut steps: Vec<GroupElement> = Vec::with_capacity(gens.len() * 2);
        for g in gens {
            self.check_member(g)?;
            steps.push(g.clone());
            steps.push(self.inverse(g)?);
        }
        let mut seen: HashSet<Vec<BigInt>> = HashSet::new();
        let identity = self.identity();
        seen.insert(identity.exps.clone());
        let mut layers = vec![vec![identity]];
        for _ in 0..radius {
            let mut next = Vec::new();
            for x in layers.last().unwrap() {
                for s in &steps {
                    let y = self.multiply(x, s)?;
                    if seen.insert(y.exps.clone()) {
                        if seen.len() > max_items {
                            return Err(PcError::MemoryExceeded(max_items));
                        }
                        next.push(y);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            layers.push(next);
        }
        Ok(Ball { layers })
    }

    /// The defining relations as free words (all of which collect to the
    /// identity): power relators `g_i^{r_i} w_i^-1` and conjugation relators
    /// `g_i^-1 g_k g_i v_{ik}^-1`.
    pub fn relators(&self) -> Vec<FreeWord> {
        let n = self.ngens();
        let mut out = Vec::new();
        for i in 0..n {
            if let Some(r) = &self.data.orders[i] {
                let mut letters = vec![(i, r.clone())];
                for (k, e) in self.data.power_tails[i].iter().rev() {
                    letters.push((*k, -e));
                }
                out.push(FreeWord::new(n, letters).unwrap());
            }
        }
        for i in 0..n {
            for k in (i + 1)..n {
                let mut letters = vec![
                    (i, BigInt::from(-1)),
                    (k, BigInt::one()),
                    (i, BigInt::one()),
                ];
                match &self.data.conj[i][k] {
                    Some(v) => {
                        for (h, e) in v.iter().rev() {
                            letters.push((*h, -e));
                        }
                    }
                    None => letters.push((k, BigInt::from(-1))),
                }
                out.push(FreeWord::new(n, letters).unwrap());
            }
        }
        out
    }

    pub(crate) fn data(&self) -> &PcData {
        &self.data
    }
}

impl PartialEq for PcGroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_group(other)
    }
}
impl Eq for PcGroup {}

/// Ball of a growth function: elements grouped by word-length distance.
#[derive(Debug, Clone)]
pub struct Ball {
    pub layers: Vec<Vec<GroupElement>>,
}

impl Ball {
    /// Cumulative counts: `counts()[d]` is the size of the radius-`d` ball.
    pub fn counts(&self) -> Vec<usize> {
        let mut acc = 0;
        self.layers
            .iter()
            .map(|l| {
                acc += l.len();
                acc
            })
            .collect()
    }

    /// All elements within the final radius.
    pub fn elements(&self) -> Vec<GroupElement> {
        self.layers.iter().flatten().cloned().collect()
    }

    /// Ball size at the final computed radius.
    pub fn total(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }
}

/// Iterator over all elements of a finite pc group (mixed-radix counter
/// over the normal-form exponents).
pub struct Elements {
    group: PcGroup,
    counter: Option<Vec<BigInt>>,
}

impl Iterator for Elements {
    type Item = GroupElement;

    fn next(&mut self) -> Option<Self::Item> {
        let counter = self.counter.as_mut()?;
        let out = GroupElement {
            group: self.group.clone(),
            exps: counter.clone(),
        };
        // advance
        let mut i = self.group.ngens();
        loop {
            if i == 0 {
                self.counter = None;
                break;
            }
            i -= 1;
            counter[i] += 1;
            let r = self.group.data.orders[i].as_ref().unwrap();
            if &counter[i] < r {
                break;
            }
            counter[i] = BigInt::zero();
        }
        if self.group.ngens() == 0 {
            self.counter = None;
        }
        Some(out)
    }
}

impl GroupElement {
    pub fn group(&self) -> &PcGroup {
        &self.group
    }

    pub fn exponents(&self) -> &[BigInt] {
        &self.exps
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(BigInt::is_zero)
    }

    /// The normal form as a free word (ascending letters).
    pub fn word(&self) -> FreeWord {
        FreeWord::new(
            self.group.ngens(),
            self.exps
                .iter()
                .enumerate()
                .filter(|(_, e)| !e.is_zero())
                .map(|(i, e)| (i, e.clone())),
        )
        .unwrap()
    }

    pub(crate) fn from_exps(group: PcGroup, exps: Vec<BigInt>) -> Self {
        GroupElement { group, exps }
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_group(&other.group) && self.exps == other.exps
    }
}
impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word().display(self.group.names()))
    }
}

/// Builder for polycyclic presentations.
///
/// Conjugation relations are supplied for positive conjugators only; the
/// inverse relations are derived by collection when the presentation is
/// built, and the result is validated by randomized associativity sampling.
pub struct PcBuilder {
    label: String,
    names: Vec<String>,
    orders: Vec<Option<BigInt>>,
    power_tails: Vec<Tail>,
    conj: Vec<Vec<Option<Tail>>>,
    weights: Option<Vec<u32>>,
    defs: Vec<GenDef>,
    relatively_free: bool,
    budget: u64,
    consistency_triples: usize,
}

impl PcBuilder {
    pub fn new(label: impl Into<String>, ngens: usize) -> Self {
        PcBuilder {
            label: label.into(),
            names: (0..ngens).map(|i| format!("g{}", i + 1)).collect(),
            orders: vec![None; ngens],
            power_tails: vec![Vec::new(); ngens],
            conj: vec![vec![None; ngens]; ngens],
            weights: None,
            defs: vec![GenDef::Atom; ngens],
            relatively_free: false,
            budget: DEFAULT_COLLECT_BUDGET,
            consistency_triples: DEFAULT_CONSISTENCY_TRIPLES,
        }
    }

    pub fn names<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Self {
        self.names = names.into_iter().map(Into::into).collect();
        self
    }

    /// Sets a finite relative order for generator `i`.
    pub fn order(mut self, i: usize, r: u64) -> Self {
        self.orders[i] = Some(BigInt::from(r));
        self
    }

    pub fn order_big(mut self, i: usize, r: BigInt) -> Self {
        self.orders[i] = Some(r);
        self
    }

    /// Power tail: `g_i^{r_i}` equals the given normal word (indices `> i`).
    pub fn power_tail(mut self, i: usize, word: Vec<(usize, i64)>) -> Self {
        self.power_tails[i] = word
            .into_iter()
            .map(|(k, e)| (k, BigInt::from(e)))
            .collect();
        self
    }

    /// Conjugation relation: `g_k^{g_i}` equals the given full normal word
    /// (indices `>= k`, ascending).
    pub fn conjugate(mut self, i: usize, k: usize, word: Vec<(usize, i64)>) -> Self {
        self.conj[i][k] = Some(
            word.into_iter()
                .map(|(h, e)| (h, BigInt::from(e)))
                .collect(),
        );
        self
    }

    pub(crate) fn conjugate_big(mut self, i: usize, k: usize, word: Tail) -> Self {
        self.conj[i][k] = Some(word);
        self
    }

    pub fn weights(mut self, w: Vec<u32>) -> Self {
        self.weights = Some(w);
        self
    }

    pub fn definition(mut self, i: usize, def: GenDef) -> Self {
        self.defs[i] = def;
        self
    }

    pub fn relatively_free(mut self, flag: bool) -> Self {
        self.relatively_free = flag;
        self
    }

    pub fn collect_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn consistency_triples(mut self, triples: usize) -> Self {
        self.consistency_triples = triples;
        self
    }

    /// Validates the presentation shape, derives inverse conjugation
    /// relations, and runs randomized consistency checks.
    pub fn build(self) -> Result<PcGroup, BuildError> {
        let n = self.orders.len();
        for r in self.orders.iter().flatten() {
            if r < &BigInt::from(2) {
                return Err(BuildError::BadRelativeOrder);
            }
        }
        // Validate power tails: indices strictly above the generator,
        // ascending, exponents in range.
        for i in 0..n {
            if self.orders[i].is_none() && !self.power_tails[i].is_empty() {
                return Err(BuildError::UnsupportedParameter(
                    "power tail on an infinite-order generator".into(),
                ));
            }
            validate_word(&self.power_tails[i], n, i + 1, &self.orders).map_err(|e| match e {
                BuildError::TailIndexViolation { found, min, .. } => {
                    BuildError::TailIndexViolation { gen: i, found, min }
                }
                other => other,
            })?;
        }
        // Validate conjugation words: full words for g_k^{g_i} with indices
        // >= k (the nilpotent pc shape g_k * tail is the common case; finite
        // solvable presentations like S3 use general words starting at k).
        for i in 0..n {
            for k in 0..n {
                if let Some(w) = &self.conj[i][k] {
                    if i >= k {
                        return Err(BuildError::IndexOutOfRange(k));
                    }
                    validate_word(w, n, k, &self.orders).map_err(|e| match e {
                        BuildError::TailIndexViolation { found, min, .. } => {
                            BuildError::TailIndexViolation { gen: k, found, min }
                        }
                        other => other,
                    })?;
                }
            }
        }
        if self.names.len() != n {
            return Err(BuildError::UnsupportedParameter(
                "generator name count mismatch".into(),
            ));
        }
        if let Some(w) = &self.weights {
            if w.len() != n {
                return Err(BuildError::UnsupportedParameter(
                    "weight count mismatch".into(),
                ));
            }
        }

        let mut data = PcData {
            label: self.label,
            names: self.names,
            orders: self.orders,
            power_tails: self.power_tails,
            conj: self.conj,
            conj_inv: vec![vec![None; n]; n],
            weights: self.weights,
            defs: self.defs,
            relatively_free: self.relatively_free,
            budget: self.budget,
            inverse_ready_from: n,
        };
        derive_inverse_conjugates(&mut data)?;
        data.inverse_ready_from = 0;
        verify_conjugation_round_trips(&data)?;
        sample_associativity(&data, self.consistency_triples)?;
        Ok(PcGroup {
            data: Arc::new(data),
        })
    }
}

fn validate_word(
    w: &Tail,
    ngens: usize,
    min_index: usize,
    orders: &[Option<BigInt>],
) -> Result<(), BuildError> {
    let mut last: Option<usize> = None;
    for (k, e) in w {
        if *k >= ngens {
            return Err(BuildError::IndexOutOfRange(*k));
        }
        if *k < min_index {
            return Err(BuildError::TailIndexViolation {
                gen: 0,
                found: *k,
                min: min_index,
            });
        }
        if let Some(prev) = last {
            if *k <= prev {
                return Err(BuildError::NonAscendingWord);
            }
        }
        last = Some(*k);
        if e.is_zero() {
            return Err(BuildError::ExponentRange);
        }
        if let Some(r) = &orders[*k] {
            if e.is_negative() || e >= r {
                return Err(BuildError::ExponentRange);
            }
        }
    }
    Ok(())
}

/// Derives `conj_inv` rows from the positive conjugation relations,
/// working from the highest conjugator down so that every collection step
/// only touches rows that are already complete.
fn derive_inverse_conjugates(data: &mut PcData) -> Result<(), BuildError> {
    let n = data.orders.len();
    for i in (0..n).rev() {
        data.inverse_ready_from = i + 1;
        let row_trivial = (i + 1..n).all(|k| data.conj[i][k].is_none());
        if row_trivial {
            continue;
        }
        let nilpotent_shape = (i + 1..n).all(|k| match &data.conj[i][k] {
            None => true,
            Some(w) => !w.is_empty() && w[0].0 == k && w[0].1.is_one(),
        });
        let inv_images = if nilpotent_shape {
            derive_inverse_nilpotent(data, i)?
        } else {
            derive_inverse_by_order(data, i)?
        };
        for (k, img) in inv_images {
            data.conj_inv[i][k] = img;
        }
    }
    Ok(())
}

type InvRow = Vec<(usize, Option<Tail>)>;

/// Inverse images for a conjugator whose relations all have the shape
/// `g_k^{g_i} = g_k * t` with `t` above `k`: solve `phi(g_k * s) = g_k`
/// by downward induction on `k`.
fn derive_inverse_nilpotent(data: &PcData, i: usize) -> Result<InvRow, BuildError> {
    let n = data.orders.len();
    let mut known: Vec<Option<Vec<BigInt>>> = vec![None; n]; // inverse image vectors
    let mut out: InvRow = Vec::new();
    for k in ((i + 1)..n).rev() {
        let word = match &data.conj[i][k] {
            None => {
                let mut v = vec![BigInt::zero(); n];
                v[k] = BigInt::one();
                known[k] = Some(v);
                out.push((k, None));
                continue;
            }
            Some(w) => w,
        };
        let tail = &word[1..];
        if tail.is_empty() {
            let mut v = vec![BigInt::zero(); n];
            v[k] = BigInt::one();
            known[k] = Some(v);
            out.push((k, None));
            continue;
        }
        // s = phi^{-1}(tail^{-1}); tail letters live above k, where the
        // inverse images are already known.
        let mut c = Collector::new(data, data.budget);
        let mut s = vec![BigInt::zero(); n];
        for (h, e) in tail.iter().rev() {
            let img = known[*h]
                .as_ref()
                .ok_or_else(|| BuildError::InverseDerivation(format!("missing image g{}", h + 1)))?
                .clone();
            let powed = c
                .pow_vec(&img, &(-e.clone()))
                .map_err(|e| BuildError::InverseDerivation(e.to_string()))?;
            c.mul_vec_into(&mut s, &powed)
                .map_err(|e| BuildError::InverseDerivation(e.to_string()))?;
        }
        let mut u = vec![BigInt::zero(); n];
        u[k] = BigInt::one();
        c.mul_vec_into(&mut u, &s)
            .map_err(|e| BuildError::InverseDerivation(e.to_string()))?;
        let tail_word = vec_to_tail(&u);
        known[k] = Some(u);
        out.push((k, Some(tail_word)));
    }
    Ok(out)
}

/// Inverse images via the finite order of the conjugator:
/// conjugation by `g_i^{-1}` equals conjugation by `g_i^{r_i - 1}` followed
/// by conjugation by the inverse of the power-tail element.
fn derive_inverse_by_order(data: &PcData, i: usize) -> Result<InvRow, BuildError> {
    let n = data.orders.len();
    let r = data.orders[i].clone().ok_or_else(|| {
        BuildError::InverseDerivation(format!(
            "generator g{} has infinite order but its conjugation relations are not of nilpotent shape",
            i + 1
        ))
    })?;
    let mut c = Collector::new(data, data.budget);
    let base: Vec<Vec<BigInt>> = (i + 1..n)
        .map(|k| match &data.conj[i][k] {
            Some(w) => tail_to_vec(w, n),
            None => unit_vec(k, n),
        })
        .collect();
    let exp = &r - 1;
    let map = c
        .pow_map(i, &base, &exp)
        .map_err(|e| BuildError::InverseDerivation(e.to_string()))?;
    // Conjugation by the inverse of the power-tail element W (g_i^{r_i} = W):
    // x ^ (W^{-1}) = W x W^{-1}.
    let w_vec = tail_to_vec(&data.power_tails[i], n);
    let w_inv = c
        .inv_vec(&w_vec)
        .map_err(|e| BuildError::InverseDerivation(e.to_string()))?;
    let mut out: InvRow = Vec::new();
    for k in (i + 1)..n {
        let y = &map[k - i - 1];
        let mut acc = w_vec.clone();
        c.mul_vec_into(&mut acc, y)
            .map_err(|e| BuildError::InverseDerivation(e.to_string()))?;
        c.mul_vec_into(&mut acc, &w_inv)
            .map_err(|e| BuildError::InverseDerivation(e.to_string()))?;
        if acc == unit_vec(k, n) {
            out.push((k, None));
        } else {
            out.push((k, Some(vec_to_tail(&acc))));
        }
    }
    Ok(out)
}

/// Checks that conjugating by `g_i` then `g_i^{-1}` (and vice versa) fixes
/// every higher generator.
fn verify_conjugation_round_trips(data: &PcData) -> Result<(), BuildError> {
    let n = data.orders.len();
    for i in 0..n {
        for k in (i + 1)..n {
            let mut c = Collector::new(data, data.budget);
            let unit = unit_vec(k, n);
            let fwd = c
                .conj_pow_apply(i, &BigInt::one(), unit.clone())
                .map_err(BuildError::Pc)?;
            let back = c
                .conj_pow_apply(i, &BigInt::from(-1), fwd)
                .map_err(BuildError::Pc)?;
            if back != unit {
                return Err(BuildError::InverseDerivation(format!(
                    "round trip failed for g{} under g{}",
                    k + 1,
                    i + 1
                )));
            }
        }
    }
    Ok(())
}

/// Randomized associativity sampling: the consistency proxy demanded of
/// every presentation at build or load time.
fn sample_associativity(data: &PcData, triples: usize) -> Result<(), BuildError> {
    let n = data.orders.len();
    if n == 0 || triples == 0 {
        return Ok(());
    }
    let mut rng = ChaCha12Rng::seed_from_u64(0x9E37_79B9_7F4A_7C15);
    let sample = |rng: &mut ChaCha12Rng| -> Vec<BigInt> {
        (0..n)
            .map(|j| match &data.orders[j] {
                Some(r) => rng.gen_bigint_range(&BigInt::zero(), r),
                None => rng.gen_bigint_range(&BigInt::from(-3), &BigInt::from(4)),
            })
            .collect()
    };
    for t in 0..triples {
        let x = sample(&mut rng);
        let y = sample(&mut rng);
        let z = sample(&mut rng);
        let mut c = Collector::new(data, data.budget);
        let mut run = || -> Result<(Vec<BigInt>, Vec<BigInt>), PcError> {
            let mut xy = x.clone();
            c.mul_vec_into(&mut xy, &y)?;
            c.mul_vec_into(&mut xy, &z)?;
            let mut yz = y.clone();
            c.mul_vec_into(&mut yz, &z)?;
            let mut x_yz = x.clone();
            c.mul_vec_into(&mut x_yz, &yz)?;
            Ok((xy, x_yz))
        };
        let (lhs, rhs) = run().map_err(|e| BuildError::ConsistencyCheck(e.to_string()))?;
        if lhs != rhs {
            return Err(BuildError::ConsistencyCheck(format!(
                "associativity failed on sampled triple #{t}"
            )));
        }
    }
    Ok(())
}

pub(crate) fn unit_vec(k: usize, n: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[k] = BigInt::one();
    v
}

pub(crate) fn tail_to_vec(w: &Tail, n: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    for (k, e) in w {
        v[*k] = e.clone();
    }
    v
}

pub(crate) fn vec_to_tail(v: &[BigInt]) -> Tail {
    v.iter()
        .enumerate()
        .filter(|(_, e)| !e.is_zero())
        .map(|(k, e)| (k, e.clone()))
        .collect()
}

fn factor_primes(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut primes = Vec::new();
    let mut m = n.clone();
    let mut d = BigInt::from(2);
    let cap = BigInt::from(2_000_000u64);
    while &d * &d <= m {
        if d > cap {
            return None;
        }
        if (&m % &d).is_zero() {
            primes.push(d.clone());
            while (&m % &d).is_zero() {
                m /= &d;
            }
        }
        d += 1;
    }
    if m > BigInt::one() {
        primes.push(m);
    }
    Some(primes)
}

/// Collection-from-the-left engine. Each rewrite step debits a budget so
/// malformed presentations terminate with an explicit error.
pub(crate) struct Collector<'a> {
    p: &'a PcData,
    budget: u64,
    start_budget: u64,
}

impl<'a> Collector<'a> {
    pub(crate) fn new(p: &'a PcData, budget: u64) -> Self {
        Collector {
            p,
            budget,
            start_budget: budget,
        }
    }

    fn debit(&mut self) -> Result<(), PcError> {
        if self.budget == 0 {
            return Err(PcError::BudgetExceeded(self.start_budget));
        }
        self.budget -= 1;
        Ok(())
    }

    /// Right-multiplies the normal form in `exps` by `g_j^m`.
    pub(crate) fn right_mul(
        &mut self,
        exps: &mut [BigInt],
        j: usize,
        m: &BigInt,
    ) -> Result<(), PcError> {
        if m.is_zero() {
            return Ok(());
        }
        self.debit()?;
        let n = exps.len();
        let has_tail = exps[j + 1..].iter().any(|e| !e.is_zero());
        if !has_tail {
            exps[j] += m;
            return self.normalize_at(exps, j);
        }
        // A . g_j^{e_j} . T . g_j^m  =  A . g_j^{e_j + m} . T^{g_j^m}
        let mut tail = vec![BigInt::zero(); n];
        for k in (j + 1)..n {
            std::mem::swap(&mut tail[k], &mut exps[k]);
        }
        let conj_tail = self.conj_pow_apply(j, m, tail)?;
        exps[j] += m;
        self.normalize_at(exps, j)?;
        self.mul_vec_into_above(exps, &conj_tail, j)?;
        Ok(())
    }

    /// Reduces `exps[j]` into `[0, r_j)`, multiplying in the power-tail
    /// element as needed. The entries above `j` must currently be zero.
    fn normalize_at(&mut self, exps: &mut [BigInt], j: usize) -> Result<(), PcError> {
        let r = match &self.p.orders[j] {
            Some(r) => r,
            None => return Ok(()),
        };
        if !exps[j].is_negative() && &exps[j] < r {
            return Ok(());
        }
        debug_assert!(exps[j + 1..].iter().all(BigInt::is_zero));
        let (q, e) = exps[j].div_mod_floor(r);
        exps[j] = e;
        if q.is_zero() || self.p.power_tails[j].is_empty() {
            return Ok(());
        }
        let w = tail_to_vec(&self.p.power_tails[j], exps.len());
        let wq = self.pow_vec(&w, &q)?;
        self.mul_vec_into_above(exps, &wq, j)?;
        Ok(())
    }

    fn mul_vec_into_above(
        &mut self,
        exps: &mut [BigInt],
        other: &[BigInt],
        j: usize,
    ) -> Result<(), PcError> {
        for k in (j + 1)..exps.len() {
            if !other[k].is_zero() {
                let e = other[k].clone();
                self.right_mul(exps, k, &e)?;
            }
        }
        Ok(())
    }

    /// Multiplies the normal form `exps` by the normal form `other`.
    pub(crate) fn mul_vec_into(
        &mut self,
        exps: &mut Vec<BigInt>,
        other: &[BigInt],
    ) -> Result<(), PcError> {
        for k in 0..exps.len() {
            if !other[k].is_zero() {
                let e = other[k].clone();
                self.right_mul(exps, k, &e)?;
            }
        }
        Ok(())
    }

    /// Inverse of a normal form: collect `g_n^{-e_n} ... g_1^{-e_1}`.
    pub(crate) fn inv_vec(&mut self, v: &[BigInt]) -> Result<Vec<BigInt>, PcError> {
        let mut out = vec![BigInt::zero(); v.len()];
        for k in (0..v.len()).rev() {
            if !v[k].is_zero() {
                let e = -v[k].clone();
                self.right_mul(&mut out, k, &e)?;
            }
        }
        Ok(out)
    }

    /// `v^k` by binary exponentiation.
    pub(crate) fn pow_vec(&mut self, v: &[BigInt], k: &BigInt) -> Result<Vec<BigInt>, PcError> {
        let n = v.len();
        if k.is_zero() {
            return Ok(vec![BigInt::zero(); n]);
        }
        let base = if k.is_negative() {
            self.inv_vec(v)?
        } else {
            v.to_vec()
        };
        let mag = k.magnitude().clone();
        let bits = mag.bits();
        let mut acc: Option<Vec<BigInt>> = None;
        let mut cur = base;
        for i in 0..bits {
            if mag.bit(i) {
                acc = Some(match acc {
                    None => cur.clone(),
                    Some(mut a) => {
                        self.mul_vec_into(&mut a, &cur)?;
                        a
                    }
                });
            }
            if i + 1 < bits {
                let snapshot = cur.clone();
                self.mul_vec_into(&mut cur, &snapshot)?;
            }
        }
        Ok(acc.unwrap())
    }

    /// Applies the conjugation automorphism of `g_j^m` to the normal form
    /// `t` (supported above `j`): computes `(g_j^{-m}) t (g_j^m)`.
    pub(crate) fn conj_pow_apply(
        &mut self,
        j: usize,
        m: &BigInt,
        t: Vec<BigInt>,
    ) -> Result<Vec<BigInt>, PcError> {
        if m.is_zero() {
            return Ok(t);
        }
        let n = t.len();
        let neg = m.is_negative();
        let row = if neg {
            if j < self.p.inverse_ready_from {
                return Err(PcError::MissingInverseRelation { i: j, k: 0 });
            }
            &self.p.conj_inv[j]
        } else {
            &self.p.conj[j]
        };
        if ((j + 1)..n).all(|k| row[k].is_none()) {
            return Ok(t);
        }
        let base: Vec<Vec<BigInt>> = ((j + 1)..n)
            .map(|k| match &row[k] {
                Some(w) => tail_to_vec(w, n),
                None => unit_vec(k, n),
            })
            .collect();
        let map = self.pow_map(j, &base, &m.abs())?;
        self.apply_map(j, &map, &t)
    }

    /// Image map raised to a nonnegative power, by square-and-multiply
    /// over composition.
    fn pow_map(
        &mut self,
        j: usize,
        base: &[Vec<BigInt>],
        k: &BigInt,
    ) -> Result<Vec<Vec<BigInt>>, PcError> {
        debug_assert!(!k.is_negative());
        if k.is_one() {
            return Ok(base.to_vec());
        }
        let mag = k.magnitude().clone();
        let bits = mag.bits();
        let mut acc: Option<Vec<Vec<BigInt>>> = None;
        let mut cur = base.to_vec();
        for i in 0..bits {
            if mag.bit(i) {
                acc = Some(match acc {
                    None => cur.clone(),
                    Some(a) => self.compose_map(j, &cur, &a)?,
                });
            }
            if i + 1 < bits {
                cur = self.compose_map(j, &cur, &cur)?;
            }
        }
        Ok(acc.expect("pow_map called with k = 0"))
    }

    fn compose_map(
        &mut self,
        j: usize,
        f: &[Vec<BigInt>],
        g: &[Vec<BigInt>],
    ) -> Result<Vec<Vec<BigInt>>, PcError> {
        g.iter().map(|img| self.apply_map(j, f, img)).collect()
    }

    /// Evaluates a generator-image map on a normal form supported above `j`.
    fn apply_map(
        &mut self,
        j: usize,
        map: &[Vec<BigInt>],
        v: &[BigInt],
    ) -> Result<Vec<BigInt>, PcError> {
        self.debit()?;
        let n = v.len();
        let mut acc = vec![BigInt::zero(); n];
        for k in (j + 1)..n {
            if v[k].is_zero() {
                continue;
            }
            let img = &map[k - j - 1];
            if img == &unit_vec(k, n) {
                // common fast path: generator fixed by the map
                let e = v[k].clone();
                self.right_mul(&mut acc, k, &e)?;
            } else {
                let powed = self.pow_vec(img, &v[k])?;
                self.mul_vec_into(&mut acc, &powed)?;
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn heisenberg() -> PcGroup {
        // a, b, c = [a, b]; b^a = b c^-1, c central.
        PcBuilder::new("heisenberg", 3)
            .names(["a", "b", "c"])
            .conjugate(0, 1, vec![(1, 1), (2, -1)])
            .weights(vec![1, 1, 2])
            .build()
            .unwrap()
    }

    fn b23() -> PcGroup {
        // Exponent-3 group of order 27: a, b, c = [a, b], b^a = b c^2.
        PcBuilder::new("b23", 3)
            .names(["a", "b", "c"])
            .order(0, 3)
            .order(1, 3)
            .order(2, 3)
            .conjugate(0, 1, vec![(1, 1), (2, 2)])
            .weights(vec![1, 1, 2])
            .build()
            .unwrap()
    }

    fn exps(e: &GroupElement) -> Vec<i64> {
        e.exponents()
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect()
    }

    #[test]
    fn heisenberg_collects_ba() {
        let g = heisenberg();
        let w = FreeWord::parse("b a", 3, g.names()).unwrap();
        let x = g.collect(&w).unwrap();
        assert_eq!(exps(&x), vec![1, 1, -1]);
    }

    #[test]
    fn empty_word_is_identity() {
        let g = heisenberg();
        let x = g.collect(&FreeWord::identity(3)).unwrap();
        assert!(x.is_identity());
    }

    #[test]
    fn heisenberg_commutator_is_c() {
        let g = heisenberg();
        let a = g.generator(0).unwrap();
        let b = g.generator(1).unwrap();
        let c = g.commutator(&[a, b]).unwrap();
        assert_eq!(exps(&c), vec![0, 0, 1]);
    }

    #[test]
    fn heisenberg_inverse() {
        let g = heisenberg();
        let ab = g
            .collect(&FreeWord::parse("a b", 3, g.names()).unwrap())
            .unwrap();
        let inv = g.inverse(&ab).unwrap();
        assert_eq!(exps(&inv), vec![-1, -1, -1]);
        assert!(g.multiply(&ab, &inv).unwrap().is_identity());
    }

    #[test]
    fn cube_law_in_exponent_three_group() {
        let g = b23();
        let w = FreeWord::parse("a a a", 3, g.names()).unwrap();
        assert!(g.collect(&w).unwrap().is_identity());
        for x in g.elements().unwrap() {
            assert!(g.power(&x, &BigInt::from(3)).unwrap().is_identity());
        }
    }

    #[test]
    fn enumeration_counts_order() {
        let g = b23();
        assert_eq!(g.elements().unwrap().count(), 27);
        assert_eq!(g.order(), Some(BigInt::from(27)));
    }

    #[test]
    fn power_zero_and_negative() {
        let g = heisenberg();
        let a = g.generator(0).unwrap();
        assert!(g.power(&a, &BigInt::zero()).unwrap().is_identity());
        let five = g.power(&a, &BigInt::from(5)).unwrap();
        assert_eq!(exps(&five), vec![5, 0, 0]);
        let m5 = g.power(&a, &BigInt::from(-5)).unwrap();
        assert_eq!(
            g.inverse(&five).unwrap().exponents(),
            m5.exponents()
        );
    }

    #[test]
    fn commutator_single_and_repeated() {
        let g = b23();
        let a = g.generator(0).unwrap();
        assert_eq!(g.commutator(&[a.clone()]).unwrap(), a);
        assert!(g.commutator(&[a.clone(), a]).unwrap().is_identity());
        assert!(matches!(
            g.commutator(&[]),
            Err(PcError::EmptyCommutator)
        ));
    }

    #[test]
    fn engel_commutator_base_cases() {
        let g = heisenberg();
        let a = g.generator(0).unwrap();
        let b = g.generator(1).unwrap();
        assert_eq!(g.engel_commutator(&a, &b, 0).unwrap(), a);
        assert_eq!(
            g.engel_commutator(&a, &b, 1).unwrap(),
            g.commutator2(&a, &b).unwrap()
        );
        // class-2 group is 2-Engel
        assert!(g.engel_commutator(&a, &b, 2).unwrap().is_identity());
    }

    #[test]
    fn element_order_cases() {
        let g = b23();
        assert_eq!(
            g.element_order(&g.identity()).unwrap(),
            ElementOrder::Finite(BigInt::one())
        );
        for x in g.elements().unwrap() {
            if !x.is_identity() {
                assert_eq!(
                    g.element_order(&x).unwrap(),
                    ElementOrder::Finite(BigInt::from(3))
                );
            }
        }
        let h = heisenberg();
        let a = h.generator(0).unwrap();
        assert_eq!(h.element_order(&a).unwrap(), ElementOrder::Infinite);
    }

    #[test]
    fn growth_ball_b23() {
        let g = b23();
        let gens = vec![g.generator(0).unwrap(), g.generator(1).unwrap()];
        let ball = g.growth_ball(&gens, 1, 10_000).unwrap();
        assert_eq!(ball.counts(), vec![1, 5]);
        let sat = g.growth_ball(&gens, 10, 10_000).unwrap();
        assert_eq!(sat.total(), 27);
    }

    #[test]
    fn relators_collect_to_identity() {
        for g in [heisenberg(), b23()] {
            for r in g.relators() {
                assert!(g.collect(&r).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn mismatched_presentations_rejected() {
        let g = heisenberg();
        let h = b23();
        let a = g.generator(0).unwrap();
        let b = h.generator(0).unwrap();
        assert!(matches!(
            g.multiply(&a, &b),
            Err(PcError::PresentationMismatch)
        ));
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let g = heisenberg();
        let w = FreeWord::parse("b a b a b a", 3, g.names()).unwrap();
        assert!(matches!(
            g.collect_with_budget(&w, 2),
            Err(PcError::BudgetExceeded(2))
        ));
    }

    #[test]
    fn out_of_range_collect_index() {
        let g = heisenberg();
        let w = FreeWord::parse("g3", 4, &[]).unwrap();
        assert!(g.collect(&w).is_ok());
        let w5 = FreeWord::parse("g4", 4, &[]).unwrap();
        assert!(matches!(
            g.collect(&w5),
            Err(PcError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn descending_conjugate_tail_rejected() {
        // conjugate of g2 mentioning g1: violates the pc shape
        let res = PcBuilder::new("bad", 3)
            .conjugate(0, 1, vec![(0, 1), (1, 1)])
            .build();
        assert!(matches!(res, Err(BuildError::TailIndexViolation { .. })));
    }

    #[test]
    fn s3_by_general_pc_shape() {
        // g1 order 2, g2 order 3, g2^g1 = g2^2 — solvable but not nilpotent.
        let g = PcBuilder::new("s3", 2)
            .order(0, 2)
            .order(1, 3)
            .conjugate(0, 1, vec![(1, 2)])
            .build()
            .unwrap();
        assert_eq!(g.elements().unwrap().count(), 6);
        let a = g.generator(0).unwrap();
        let b = g.generator(1).unwrap();
        let ab = g.multiply(&a, &b).unwrap();
        // (ab)^2 = 1 in S3
        assert!(g.power(&ab, &BigInt::from(2)).unwrap().is_identity());
        // b^a = b^2
        let conj = g.conjugate(&b, &a).unwrap();
        assert_eq!(exps(&conj), vec![0, 2]);
    }

    #[test]
    fn random_uniform_is_seed_stable() {
        let g = b23();
        let mut r1 = ChaCha12Rng::seed_from_u64(7);
        let mut r2 = ChaCha12Rng::seed_from_u64(7);
        for _ in 0..20 {
            assert_eq!(
                g.random_uniform(&mut r1).unwrap(),
                g.random_uniform(&mut r2).unwrap()
            );
        }
    }
}
