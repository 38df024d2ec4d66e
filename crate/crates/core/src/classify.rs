//! Verdicts on metric conicalness and bi-Lipschitz distinguishability.
//!
//! The engines only decide the obstructions that are proven for weight data:
//!
//! * homogeneous weights give a metric cone;
//! * unequal two lowest weights rule out a metric cone;
//! * a non-homogeneous cyclic quotient is never conical, witnessed by a
//!   perturbed action that isolates one lowest-weight generator;
//! * two germs whose weight ratios satisfy
//!   `v_{r-1}/v_r > w_1/w_s` (or the mirrored inequality) are not
//!   bi-Lipschitz homeomorphic.
//!
//! A weight list cannot show that it comes from a normal surface germ.
//! Every verdict is conditional on the caller's reading of the input.
//! Each negative verdict carries a certificate that can be re-checked without
//! the engine.

use std::cmp::Ordering;

use num_bigint::BigUint;

use crate::cyclic_quotient::{analyze, CyclicQuotient, GeneratorSet, InvariantMonomial, SeparatingAction};
use crate::exactnum::{cmp_ratio, Ratio};
use crate::link_topology::{same_link, seifert_data, LinkComparison, SeifertData};
use crate::weights::{brieskorn_weights, BrieskornTriple, WeightVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConicalKind {
    MetricallyConical,
    NotConical,
    Unknown,
}

impl ConicalKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConicalKind::MetricallyConical => "metrically_conical",
            ConicalKind::NotConical => "not_conical",
            ConicalKind::Unknown => "unknown",
        }
    }
}

/// Which obstruction produced a `NotConical` verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mechanism {
    /// The two lowest weights of `weights` differ.
    Theorem1 { weights: WeightVector },
    /// The diagonal weights tie at the bottom; `action` makes `generator`
    /// the unique generator of least weight.
    Theorem1_5 {
        weights: WeightVector,
        action: SeparatingAction,
        generator: InvariantMonomial,
    },
}

impl Mechanism {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mechanism::Theorem1 { .. } => "theorem_1",
            Mechanism::Theorem1_5 { .. } => "theorem_1_5",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicalVerdict {
    pub kind: ConicalKind,
    /// Present exactly when `kind` is `NotConical`.
    pub mechanism: Option<Mechanism>,
}

impl ConicalVerdict {
    fn conical() -> Self {
        Self { kind: ConicalKind::MetricallyConical, mechanism: None }
    }

    fn unknown() -> Self {
        Self { kind: ConicalKind::Unknown, mechanism: None }
    }

    fn not_conical(mechanism: Mechanism) -> Self {
        Self { kind: ConicalKind::NotConical, mechanism: Some(mechanism) }
    }

    /// Re-checks the certificate. A `Theorem1_5` certificate needs the
    /// generator set it was computed from.
    pub fn verify(&self, generators: Option<&GeneratorSet>) -> bool {
        match (&self.kind, &self.mechanism) {
            (ConicalKind::NotConical, Some(Mechanism::Theorem1 { weights })) => {
                let (second, lowest) = weights.two_lowest();
                second != lowest
            }
            (ConicalKind::NotConical, Some(Mechanism::Theorem1_5 { weights, action, generator })) => {
                let (second, lowest) = weights.two_lowest();
                second == lowest
                    && generators.is_some_and(|g| action.verify(g, generator))
            }
            (ConicalKind::NotConical, None) => false,
            (_, Some(_)) => false,
            (_, None) => true,
        }
    }
}

/// Conicalness from weights alone: homogeneous means conical, unequal
/// lowest weights mean not conical, anything else is undecided.
pub fn conical_from_weights(w: &WeightVector) -> ConicalVerdict {
    if w.is_homogeneous() {
        return ConicalVerdict::conical();
    }
    let (second, lowest) = w.two_lowest();
    if second != lowest {
        ConicalVerdict::not_conical(Mechanism::Theorem1 { weights: w.clone() })
    } else {
        ConicalVerdict::unknown()
    }
}

/// Decides conicalness of a cyclic quotient. Never `Unknown`.
pub fn conical_cyclic(cq: &CyclicQuotient) -> ConicalVerdict {
    conical_cyclic_with_generators(cq).0
}

/// As [`conical_cyclic`], also returning the generator set the certificate
/// refers to.
pub fn conical_cyclic_with_generators(cq: &CyclicQuotient) -> (ConicalVerdict, GeneratorSet) {
    let an = analyze(cq);
    if cq.is_homogeneous() {
        return (ConicalVerdict::conical(), an.generators);
    }
    let (second, lowest) = an.weights.two_lowest();
    let verdict = if second != lowest {
        ConicalVerdict::not_conical(Mechanism::Theorem1 { weights: an.weights })
    } else {
        ConicalVerdict::not_conical(Mechanism::Theorem1_5 {
            weights: an.weights,
            action: an.separating.expect("q != 1"),
            generator: an.lowest.expect("q != 1"),
        })
    };
    (verdict, an.generators)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CompareKind {
    NotBiLipschitz,
    Inconclusive,
}

impl CompareKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CompareKind::NotBiLipschitz => "not_bi_lipschitz",
            CompareKind::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `v_{r-1}/v_r > w_1/w_s`.
    Left,
    /// `w_{s-1}/w_s > v_1/v_r`.
    Right,
}

impl Side {
    pub fn as_str(&self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// The fired inequality `lhs > rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub side: Side,
    pub lhs: Ratio,
    pub rhs: Ratio,
}

impl Certificate {
    pub fn verify(&self) -> bool {
        cmp_ratio(&self.lhs, &self.rhs) == Ordering::Greater
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompareVerdict {
    pub kind: CompareKind,
    pub certificate: Option<Certificate>,
}

/// Exact check of the two ratio inequalities between `v` and `w`.
pub fn compare_weights(v: &WeightVector, w: &WeightVector) -> CompareVerdict {
    let (v_top, v_sub) = v.extreme_ratios();
    let (w_top, w_sub) = w.extreme_ratios();
    let fired = if cmp_ratio(&v_sub, &w_top) == Ordering::Greater {
        Some(Certificate { side: Side::Left, lhs: v_sub, rhs: w_top })
    } else if cmp_ratio(&w_sub, &v_top) == Ordering::Greater {
        Some(Certificate { side: Side::Right, lhs: w_sub, rhs: v_top })
    } else {
        None
    };
    match fired {
        Some(c) => CompareVerdict { kind: CompareKind::NotBiLipschitz, certificate: Some(c) },
        None => CompareVerdict { kind: CompareKind::Inconclusive, certificate: None },
    }
}

/// Genus the source text states for both links of the homeomorphic,
/// non-bi-Lipschitz pair. Reported next to the computed value, never used.
pub const STATED_LINK_GENUS: u64 = 26;

/// One side of the Brieskorn pair `z1^2 + z2^51 + z3^102` and
/// `z1^12 + z2^15 + z3^20`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollarySide {
    pub triple: BrieskornTriple,
    pub weights: WeightVector,
    pub link: SeifertData,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryReport {
    pub v: CorollarySide,
    pub w: CorollarySide,
    pub link_comparison: LinkComparison,
    pub compare: CompareVerdict,
    pub stated_genus: u64,
    /// Genus of the `v` link; equal to the `w` genus whenever the links agree.
    pub computed_genus: BigUint,
}

pub fn corollary_report() -> CorollaryReport {
    let side = |a1, a2, a3| {
        let triple = BrieskornTriple::new(a1, a2, a3).expect("valid exponents");
        CorollarySide {
            triple,
            weights: brieskorn_weights(&triple),
            link: seifert_data(&triple),
        }
    };
    let v = side(2, 51, 102);
    let w = side(12, 15, 20);
    let link_comparison = same_link(&v.link, &w.link);
    let compare = compare_weights(&v.weights, &w.weights);
    let computed_genus = v.link.genus.clone();
    CorollaryReport {
        v,
        w,
        link_comparison,
        compare,
        stated_genus: STATED_LINK_GENUS,
        computed_genus,
    }
}
