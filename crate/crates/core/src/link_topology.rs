//! Seifert invariants of Brieskorn links `Sigma(a1, a2, a3)`.
//!
//! With `l = lcm(a1, a2, a3)` and `P = a1 a2 a3`:
//!
//! * Euler number `e = -P / l^2`;
//! * over the axis `z_i = 0` lie `gcd(a_j, a_k)` fibers of multiplicity
//!   `l / lcm(a_j, a_k)` (multiplicity 1 means the fibers are regular);
//! * base genus `g = 1 + (P / l - sum_{i<j} gcd(a_i, a_j)) / 2`.
//!
//! Only `(genus, euler, multiplicities)` are computed. Without the Seifert
//! pairs of the exceptional fibers these classify the link only when there
//! are no exceptional fibers, and [`same_link`] reports accordingly.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exactnum::{gcd, lcm, Ratio};
use crate::weights::BrieskornTriple;

/// Base genus, Euler number and exceptional fibers of a Seifert fibration.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertData {
    pub genus: BigUint,
    pub euler: Ratio,
    /// `(multiplicity, count)` pairs, multiplicity >= 2, sorted by multiplicity.
    pub fibers: Vec<(BigUint, BigUint)>,
}

impl SeifertData {
    pub fn has_exceptional_fibers(&self) -> bool {
        !self.fibers.is_empty()
    }
}

pub fn seifert_data(triple: &BrieskornTriple) -> SeifertData {
    let a = triple.as_big();
    let l = triple.lcm();
    let product = triple.product();

    let euler = Ratio::new(
        -BigInt::from_biguint(Sign::Plus, product.clone()),
        BigInt::from_biguint(Sign::Plus, &l * &l),
    )
    .expect("l is positive");

    let mut fibers: Vec<(BigUint, BigUint)> = Vec::new();
    for i in 0..3 {
        let (aj, ak) = (&a[(i + 1) % 3], &a[(i + 2) % 3]);
        let multiplicity = &l / lcm(aj, ak).expect("exponents are positive");
        if multiplicity <= BigUint::one() {
            continue;
        }
        let count = gcd(aj, ak);
        match fibers.iter_mut().find(|(m, _)| *m == multiplicity) {
            Some((_, c)) => *c += count,
            None => fibers.push((multiplicity, count)),
        }
    }
    fibers.sort();

    let pair_gcds: BigUint = (0..3).map(|i| gcd(&a[i], &a[(i + 1) % 3])).sum();
    let twice_genus_minus_two =
        BigInt::from_biguint(Sign::Plus, &product / &l) - BigInt::from_biguint(Sign::Plus, pair_gcds);
    let (half, rem): (BigInt, BigInt) = twice_genus_minus_two.div_rem(&BigInt::from(2));
    assert!(rem.is_zero(), "non-integral genus for {triple:?}");
    let genus = (half + BigInt::one())
        .to_biguint()
        .unwrap_or_else(|| panic!("negative genus for {triple:?}"));

    SeifertData { genus, euler, fibers }
}

/// Outcome of comparing two links through their Seifert invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LinkComparison {
    /// Both are circle bundles with the same genus and Euler number.
    EquivalentBundle,
    /// All computed invariants agree but exceptional fibers are present,
    /// so the comparison is not conclusive.
    InvariantsAgree,
    Distinguished,
}

impl LinkComparison {
    pub fn as_str(&self) -> &'static str {
        match self {
            LinkComparison::EquivalentBundle => "equivalent_bundle",
            LinkComparison::InvariantsAgree => "invariants_agree",
            LinkComparison::Distinguished => "distinguished",
        }
    }
}

pub fn same_link(x: &SeifertData, y: &SeifertData) -> LinkComparison {
    if x != y {
        LinkComparison::Distinguished
    } else if x.fibers.is_empty() {
        LinkComparison::EquivalentBundle
    } else {
        LinkComparison::InvariantsAgree
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sd(a: u64, b: u64, c: u64) -> SeifertData {
        seifert_data(&BrieskornTriple::new(a, b, c).unwrap())
    }

    fn fibers(s: &SeifertData) -> Vec<(u64, u64)> {
        s.fibers
            .iter()
            .map(|(m, c)| (u64::try_from(m).unwrap(), u64::try_from(c).unwrap()))
            .collect()
    }

    #[test]
    fn corollary_links() {
        // Smooth completion of x^2 = -(1 + y^51): odd-degree hyperelliptic, genus (51 - 1) / 2.
        let hyperelliptic_genus = BigUint::from((51u64 - 1) / 2);
        let v = sd(2, 51, 102);
        assert_eq!(v.euler.to_string(), "-1/1");
        assert!(v.fibers.is_empty());
        assert_eq!(v.genus, hyperelliptic_genus);

        let w = sd(12, 15, 20);
        assert_eq!(w.euler.to_string(), "-1/1");
        assert!(w.fibers.is_empty());
        assert_eq!(w.genus, v.genus);
        assert_eq!(same_link(&v, &w), LinkComparison::EquivalentBundle);
    }

    #[test]
    fn plane_curve_case() {
        let s = sd(3, 3, 3);
        assert_eq!(s.euler.to_string(), "-3/1");
        assert!(s.fibers.is_empty());
        assert_eq!(s.genus, BigUint::from(1u8));
    }

    #[test]
    fn pairwise_coprime_case() {
        let s = sd(2, 3, 5);
        assert_eq!(s.euler.to_string(), "-1/30");
        assert_eq!(s.genus, BigUint::zero());
        assert_eq!(fibers(&s), vec![(2, 1), (3, 1), (5, 1)]);
    }

    #[test]
    fn repeated_multiplicities_merge() {
        // (2,2,3): axis 3 carries gcd(2,2) = 2 fibers of multiplicity 6/2 = 3.
        let s = sd(2, 2, 3);
        assert_eq!(fibers(&s), vec![(3, 2)]);
        assert_eq!(s.genus, BigUint::zero());
    }

    #[test]
    fn comparator() {
        let x = sd(2, 3, 5);
        let y = sd(2, 3, 7);
        assert_eq!(same_link(&x, &y), LinkComparison::Distinguished);
        assert_eq!(same_link(&y, &x), LinkComparison::Distinguished);
        assert_eq!(same_link(&x, &x), LinkComparison::InvariantsAgree);
        let z = sd(4, 4, 4);
        assert_eq!(same_link(&z, &z), LinkComparison::EquivalentBundle);
    }
}
