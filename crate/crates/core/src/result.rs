use std::collections::BTreeSet;

use crate::monomial::{Monomial, TermOrder};
use crate::polynomial::Polynomial;

/// Output of [`crate::ess_gb`] and [`crate::bm_gb`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbResult {
    pub order: TermOrder,
    /// The reduced Gröbner basis, sorted by decreasing leading monomial.
    pub basis: Vec<Polynomial>,
    /// Standard monomials, increasing.
    pub standard_monomials: Vec<Monomial>,
    /// `separators[t]` is 1 at point `t` and 0 at every other point.
    pub separators: Vec<Polynomial>,
}

impl GbResult {
    pub(crate) fn new(
        order: TermOrder,
        mut basis: Vec<Polynomial>,
        mut standard_monomials: Vec<Monomial>,
        separators: Vec<Polynomial>,
    ) -> Self {
        basis.sort_by(|a, b| {
            order.cmp(
                b.leading_monomial().expect("basis elements are nonzero"),
                a.leading_monomial().expect("basis elements are nonzero"),
            )
        });
        standard_monomials.sort_by(|a, b| order.cmp(a, b));
        GbResult {
            order,
            basis,
            standard_monomials,
            separators,
        }
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.basis.iter().filter_map(Polynomial::leading_monomial)
    }

    /// Variables occurring in some standard monomial (0-based, increasing).
    pub fn essential_vars(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self
            .standard_monomials
            .iter()
            .flat_map(|m| m.support())
            .collect();
        set.into_iter().collect()
    }

    /// Basis in canonical text form, one polynomial per line.
    pub fn canonical_basis(&self) -> String {
        let mut s = String::new();
        for g in &self.basis {
            s.push_str(&g.to_string());
            s.push('\n');
        }
        s
    }

    /// 64-bit FNV-1a hash of [`Self::canonical_basis`].
    pub fn checksum(&self) -> u64 {
        fnv1a(self.canonical_basis().as_bytes())
    }
}

pub fn fnv1a(bytes: &[u8]) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    bytes
        .iter()
        .fold(OFFSET, |h, &b| (h ^ b as u64).wrapping_mul(PRIME))
}
