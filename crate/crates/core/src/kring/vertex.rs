use std::collections::BTreeMap;
use std::fmt::{Debug, Display};

use num_traits::{One, Zero};

use super::{Localized, ULaurent};
use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Coefficient rings usable in the vertex ring.
pub trait Coefficient: Clone + PartialEq + Debug + Display + Zero + One {
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
}

impl<const K: i64> Coefficient for Localized<K> {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl Coefficient for ULaurent {
    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }
}

/// Element of the ring generated by `Q^v` for the vertices of a host graph,
/// modulo `(Q^v)^2`: a map from vertex subsets `S` to the coefficient of
/// `Q^S`. Absent keys are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexClass<C> {
    vertices: usize,
    coeffs: BTreeMap<VertexSet, C>,
}

impl<C: Coefficient> VertexClass<C> {
    pub fn zero(vertices: usize) -> Self {
        assert!(vertices <= 64);
        Self {
            vertices,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(vertices: usize) -> Self {
        let mut out = Self::zero(vertices);
        out.set(VertexSet::empty(), C::one());
        out
    }

    /// `c Q^S`.
    pub fn monomial(vertices: usize, set: VertexSet, c: C) -> Self {
        let mut out = Self::zero(vertices);
        out.set(set, c);
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn set(&mut self, set: VertexSet, c: C) {
        assert!(set.is_subset(VertexSet::full(self.vertices)), "subset outside the host graph");
        if c.is_zero() {
            self.coeffs.remove(&set);
        } else {
            self.coeffs.insert(set, c);
        }
    }

    pub fn get(&self, set: VertexSet) -> C {
        self.coeffs.get(&set).cloned().unwrap_or_else(C::zero)
    }

    /// Nonzero coefficients, ordered by subset bitmask.
    pub fn iter(&self) -> impl Iterator<Item = (VertexSet, &C)> {
        self.coeffs.iter().map(|(s, c)| (*s, c))
    }

    fn same_host(&self, other: &Self) -> Result<()> {
        if self.vertices == other.vertices {
            Ok(())
        } else {
            Err(Error::HostMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_host(other)?;
        let mut out = self.clone();
        for (s, c) in &other.coeffs {
            out.set(*s, out.get(*s).add_ref(c));
        }
        Ok(out)
    }

    /// Product with `Q^S Q^T = 0` whenever `S` and `T` meet.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_host(other)?;
        let mut out = Self::zero(self.vertices);
        for (s, a) in &self.coeffs {
            for (t, b) in &other.coeffs {
                if s.is_disjoint(*t) {
                    let u = s.union(*t);
                    out.set(u, out.get(u).add_ref(&a.mul_ref(b)));
                }
            }
        }
        Ok(out)
    }

    /// `Exp(F)(S) = Σ over set partitions S = ∐ S_i of Π F(S_i)`, so that
    /// `Exp(x Q^v) = 1 + x Q^v`. Needs `F(∅) = 0`.
    pub fn exp(&self) -> Result<Self> {
        if let Some(c) = self.coeffs.get(&VertexSet::empty()) {
            return Err(Error::NonzeroConstantTerm(c.to_string()));
        }
        let full = VertexSet::full(self.vertices);
        let mut table: BTreeMap<VertexSet, C> = BTreeMap::new();
        table.insert(VertexSet::empty(), C::one());
        // Subsets in increasing bitmask order visit proper subsets first.
        for s in full.subsets().skip(1) {
            let anchor = s.min().expect("nonempty subset");
            let rest = s.difference(VertexSet::singleton(anchor));
            let mut acc = C::zero();
            // The block containing the smallest vertex is {anchor} ∪ t.
            for t in rest.subsets() {
                let block = t.with(anchor);
                if let Some(f) = self.coeffs.get(&block) {
                    let e = &table[&s.difference(block)];
                    if !e.is_zero() {
                        acc = acc.add_ref(&f.mul_ref(e));
                    }
                }
            }
            table.insert(s, acc);
        }
        let mut out = Self::zero(self.vertices);
        for (s, c) in table {
            out.set(s, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kring::RationalQL;

    fn x() -> RationalQL {
        RationalQL::x()
    }

    #[test]
    fn exp_of_single_vertex() {
        let f = VertexClass::monomial(1, VertexSet::singleton(0), x());
        let e = f.exp().unwrap();
        assert_eq!(e.get(VertexSet::empty()), RationalQL::one());
        assert_eq!(e.get(VertexSet::singleton(0)), x());
    }

    #[test]
    fn exp_of_two_singletons_multiplies() {
        let y = RationalQL::q();
        let mut f = VertexClass::zero(2);
        f.set(VertexSet::singleton(0), x());
        f.set(VertexSet::singleton(1), y.clone());
        let e = f.exp().unwrap();
        assert_eq!(e.get(VertexSet::full(2)), &x() * &y);
    }

    #[test]
    fn exp_rejects_constant_term() {
        let f: VertexClass<RationalQL> = VertexClass::one(2);
        assert!(matches!(f.exp(), Err(Error::NonzeroConstantTerm(_))));
    }

    #[test]
    fn square_zero_product() {
        let a = VertexClass::monomial(2, VertexSet::singleton(0), x());
        assert_eq!(a.mul(&a).unwrap(), VertexClass::zero(2));
        assert!(matches!(a.mul(&VertexClass::zero(3)), Err(Error::HostMismatch)));
    }

    #[test]
    fn exp_counts_set_partitions() {
        // With F = Σ_{S≠∅} Q^S over the integers in u, Exp(F)(S) is the Bell number.
        let n = 4;
        let mut f = VertexClass::zero(n);
        for s in VertexSet::full(n).subsets().skip(1) {
            f.set(s, ULaurent::one());
        }
        let e = f.exp().unwrap();
        let bell = [1, 1, 2, 5, 15];
        for s in VertexSet::full(n).subsets() {
            assert_eq!(e.get(s), ULaurent::monomial(bell[s.len()], 0));
        }
    }
}
