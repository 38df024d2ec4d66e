//! Invariant theory of the cyclic quotient `C^2 / mu_n`, where a primitive
//! root `xi` acts by `xi (u1, u2) = (xi^q u1, xi u2)`.
//!
//! The invariant ring is spanned by the monomials `u1^a u2^b` with
//! `q a + b = 0 (mod n)`. Its minimal generators all lie in the box
//! `0 <= a, b <= n`, so the exponent monoid is enumerated there and reduced
//! to its Hilbert basis. Under the diagonal `C*`-action the monomial
//! `u1^a u2^b` has weight `a + b`.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::exactnum::gcd_u64;
use crate::weights::WeightVector;

/// Largest `n` accepted by the library. Keeps `q * a + b` inside a `u64`.
pub const MAX_ORDER: u64 = u32::MAX as u64;

/// The datum `(n, q)` with `n >= 2`, `0 < q < n` and `gcd(q, n) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CyclicQuotient {
    n: u64,
    q: u64,
}

impl CyclicQuotient {
    pub fn new(n: u64, q: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidCyclic(format!("n = {n} must be at least 2")));
        }
        if n > MAX_ORDER {
            return Err(Error::InvalidCyclic(format!("n = {n} exceeds {MAX_ORDER}")));
        }
        if q == 0 || q >= n {
            return Err(Error::InvalidCyclic(format!("q = {q} must satisfy 0 < q < {n}")));
        }
        if gcd_u64(q, n) != 1 {
            return Err(Error::InvalidCyclic(format!("gcd(q, n) = gcd({q}, {n}) is not 1")));
        }
        Ok(Self { n, q })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_homogeneous(&self) -> bool {
        self.q == 1
    }

    /// Whether `u1^a u2^b` is invariant.
    pub fn is_invariant(&self, a: u64, b: u64) -> bool {
        (self.q * (a % self.n) + b % self.n).is_multiple_of(self.n)
    }

    /// Smallest `b >= 0` with `q a + b = 0 (mod n)`.
    fn min_companion(&self, a: u64) -> u64 {
        (self.n - (self.q * (a % self.n)) % self.n) % self.n
    }
}

impl fmt::Display for CyclicQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C^2/mu_{}(q={})", self.n, self.q)
    }
}

/// Exponent pair `(a, b)` of an invariant monomial `u1^a u2^b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvariantMonomial {
    pub a: u64,
    pub b: u64,
}

impl InvariantMonomial {
    pub fn new(a: u64, b: u64) -> Self {
        Self { a, b }
    }

    /// Diagonal weight `a + b`.
    pub fn weight(&self) -> u64 {
        self.a + self.b
    }

    /// Weight under the action `t (u1, u2) = (t^alpha u1, t^beta u2)`.
    pub fn weight_under(&self, alpha: u64, beta: u64) -> u128 {
        alpha as u128 * self.a as u128 + beta as u128 * self.b as u128
    }
}

impl fmt::Display for InvariantMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// All nonzero invariant exponents in the box `[0, n]^2`, sorted by `(a, b)`.
pub fn invariant_monomials(cq: &CyclicQuotient) -> Vec<InvariantMonomial> {
    let n = cq.n;
    let mut out = Vec::with_capacity(n as usize + 3);
    for a in 0..=n {
        let b0 = cq.min_companion(a);
        // b0 < n, so only b0 and b0 + n can land in [0, n]; the latter only when b0 = 0.
        for b in [b0, b0 + n] {
            if b <= n && (a, b) != (0, 0) {
                out.push(InvariantMonomial::new(a, b));
            }
        }
    }
    out
}

/// Hilbert basis of the invariant exponent monoid, sorted by
/// `(weight ascending, a ascending)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    elements: Vec<InvariantMonomial>,
}

impl GeneratorSet {
    pub fn elements(&self) -> &[InvariantMonomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, m: &InvariantMonomial) -> bool {
        self.elements.contains(m)
    }

    pub fn min_weight(&self) -> u64 {
        self.elements[0].weight()
    }

    /// Generators whose diagonal weight is minimal, in ascending `a`.
    pub fn lowest_weight_elements(&self) -> &[InvariantMonomial] {
        let w = self.min_weight();
        let end = self.elements.iter().take_while(|m| m.weight() == w).count();
        &self.elements[..end]
    }

    /// Each generator paired with its weight under `(alpha, beta)`.
    pub fn perturbed_weights(&self, alpha: u64, beta: u64) -> Vec<(InvariantMonomial, u128)> {
        self.elements
            .iter()
            .map(|m| (*m, m.weight_under(alpha, beta)))
            .collect()
    }

    /// The unique generator minimizing `alpha a + beta b`, if the minimum is strict.
    pub fn strict_minimizer(&self, alpha: u64, beta: u64) -> Option<InvariantMonomial> {
        let mut best: Option<(InvariantMonomial, u128)> = None;
        let mut tied = false;
        for m in &self.elements {
            let w = m.weight_under(alpha, beta);
            match best {
                Some((_, bw)) if w > bw => {}
                Some((_, bw)) if w == bw => tied = true,
                _ => {
                    best = Some((*m, w));
                    tied = false;
                }
            }
        }
        if tied {
            None
        } else {
            best.map(|(m, _)| m)
        }
    }
}

/// Reduces the boxed invariant monomials to the minimal generating set.
///
/// An element `x` is decomposable exactly when some other nonzero boxed
/// invariant `y` sits below it componentwise: the difference `x - y` is then
/// invariant, nonzero and boxed. Walking the monomials in `(a, b)` order,
/// every previously seen element has `a' <= a` and differs from `x`, so it is
/// enough to track the smallest `b'` seen so far. This computes the same
/// fixed point as repeatedly stripping pairwise sums, in linear time.
pub fn minimal_generators(cq: &CyclicQuotient) -> GeneratorSet {
    let mut min_b_seen = u64::MAX;
    let mut elements = Vec::new();
    for m in invariant_monomials(cq) {
        if min_b_seen > m.b {
            elements.push(m);
        }
        min_b_seen = min_b_seen.min(m.b);
    }
    elements.sort_by_key(|m| (m.weight(), m.a));
    GeneratorSet { elements }
}

/// Multiset of diagonal weights `a + b` of the generators, descending.
pub fn diagonal_weights(cq: &CyclicQuotient) -> WeightVector {
    diagonal_weights_of(&minimal_generators(cq))
}

pub fn diagonal_weights_of(gens: &GeneratorSet) -> WeightVector {
    WeightVector::from_list(gens.elements().iter().map(|m| BigUint::from(m.weight())))
        .expect("a generator set holds at least (n,0) and (0,n)")
}

/// Among the generators of least diagonal weight, the one with the smallest
/// `u1`-exponent.
pub fn lowest_generator(cq: &CyclicQuotient) -> Result<InvariantMonomial> {
    lowest_generator_of(cq, &minimal_generators(cq))
}

fn lowest_generator_of(cq: &CyclicQuotient, gens: &GeneratorSet) -> Result<InvariantMonomial> {
    if cq.is_homogeneous() {
        return Err(Error::HomogeneousInput { n: cq.n });
    }
    Ok(gens.elements()[0])
}

/// Coprime weights `alpha > beta` of a perturbed `C*`-action on `C^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SeparatingAction {
    pub alpha: u64,
    pub beta: u64,
}

impl SeparatingAction {
    /// Checks that `alpha > beta >= 1` are coprime and that `chosen` is the
    /// strict unique minimizer of `alpha a + beta b` over `gens`.
    pub fn verify(&self, gens: &GeneratorSet, chosen: &InvariantMonomial) -> bool {
        self.beta >= 1
            && self.alpha > self.beta
            && gcd_u64(self.alpha, self.beta) == 1
            && gens.strict_minimizer(self.alpha, self.beta) == Some(*chosen)
    }
}

/// First `(alpha, beta) = (s + 1, s)`, `s = 1, 2, ...`, under which the
/// lowest generator becomes the unique generator of least weight.
pub fn separating_action(cq: &CyclicQuotient) -> Result<SeparatingAction> {
    let gens = minimal_generators(cq);
    let chosen = lowest_generator_of(cq, &gens)?;
    Ok(separating_action_of(&gens, &chosen))
}

fn separating_action_of(gens: &GeneratorSet, chosen: &InvariantMonomial) -> SeparatingAction {
    // Generators with a' > a and a' + b' >= a + b lose for every s; those with
    // a' < a have a' + b' > a + b and lose once s >= a. So s <= max(a, 1).
    (1u64..)
        .map(|s| SeparatingAction { alpha: s + 1, beta: s })
        .find(|act| gens.strict_minimizer(act.alpha, act.beta) == Some(*chosen))
        .expect("a separating pair exists for s = max(a, 1)")
}

/// The quantities attached to the lowest generator: `d = gcd(q - 1, n)`,
/// `n' = n / d` and the covering degree bound `(a + b) / d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoveringData {
    pub d: u64,
    pub n_prime: u64,
    /// `None` when `q = 1`.
    pub chosen_generator: Option<InvariantMonomial>,
    pub degree_bound: Option<u64>,
}

pub fn covering_data(cq: &CyclicQuotient) -> CoveringData {
    let d = gcd_u64(cq.q - 1, cq.n);
    let n_prime = cq.n / d;
    if cq.is_homogeneous() {
        return CoveringData {
            d,
            n_prime,
            chosen_generator: None,
            degree_bound: None,
        };
    }
    let chosen = lowest_generator(cq).expect("q != 1");
    let w = chosen.weight();
    // a + b = (q a + b) - (q - 1) a, and both terms are multiples of d.
    assert_eq!(w % d, 0, "d = {d} must divide a + b = {w} for {cq}");
    let degree_bound = w / d;
    assert!(degree_bound < n_prime, "(a+b)/d = {degree_bound} must be below n' = {n_prime} for {cq}");
    CoveringData {
        d,
        n_prime,
        chosen_generator: Some(chosen),
        degree_bound: Some(degree_bound),
    }
}

/// Generators, weights, lowest generator and separating action of one
/// datum, computed from a single Hilbert-basis pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicAnalysis {
    pub datum: CyclicQuotient,
    pub generators: GeneratorSet,
    pub weights: WeightVector,
    pub lowest: Option<InvariantMonomial>,
    pub separating: Option<SeparatingAction>,
}

pub fn analyze(cq: &CyclicQuotient) -> CyclicAnalysis {
    let generators = minimal_generators(cq);
    let weights = diagonal_weights_of(&generators);
    let lowest = lowest_generator_of(cq, &generators).ok();
    let separating = lowest.map(|m| separating_action_of(&generators, &m));
    CyclicAnalysis {
        datum: *cq,
        generators,
        weights,
        lowest,
        separating,
    }
}
