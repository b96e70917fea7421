//! The change of basis between a finite inverse semigroup algebra and
//! the convolution algebra of its underlying groupoid, its Möbius
//! inverse, and the resulting matrix-block decomposition.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::groupoid::{convolve, underlying_groupoid, AlgebraElement, DiscreteGroupoid};
use crate::matrix::Matrix;
use crate::poset::{mobius_matrix, zeta_matrix, MobiusTable};
use crate::semigroup::{InverseSemigroup, SubGroup};

/// Exhaustive multiplicativity checking up to this order; pairs are
/// sampled above it.
const EXHAUSTIVE_PAIR_BOUND: usize = 200;

/// The isomorphism KS -> K(underlying groupoid), element s mapping to
/// the sum of the arrows below s in the natural order. Columns of
/// `forward` are images of basis elements; `inverse` is its Möbius
/// inverse.
pub struct IsoWitness {
    pub groupoid: DiscreteGroupoid,
    pub forward: Matrix,
    pub inverse: Matrix,
    /// How multiplicativity was verified.
    pub pairs_checked: PairPolicy,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairPolicy {
    Exhaustive,
    Sampled { pairs: usize, seed: u64 },
}

/// Image of basis element s: the indicator of its downset, as an
/// algebra element of the underlying groupoid (arrow i = element i).
fn theta_of(s: &InverseSemigroup, field: &FieldSpec, x: usize) -> AlgebraElement {
    let mut out = AlgebraElement::zero(*field);
    for t in s.down_set(x) {
        out.add_term(t, field.one());
    }
    out
}

/// Builds the isomorphism and verifies multiplicativity and exact
/// invertibility. A multiplicativity failure indicates an upstream bug
/// and is surfaced as an error naming the offending pair.
pub fn theta(s: &InverseSemigroup, field: &FieldSpec, seed: u64) -> Result<IsoWitness> {
    let n = s.order;
    let gpd = underlying_groupoid(s);
    let poset = s.natural_order_poset();
    let mob = MobiusTable::new(&poset);

    // forward[t][x] = 1 iff t <= x: the transpose-free column convention
    // makes `forward` the zeta matrix of the natural order
    let forward = zeta_matrix(&poset, field).transpose();
    let inverse = mobius_matrix(&poset, &mob, field).transpose();
    let prod = forward.mul(&inverse);
    if prod != Matrix::identity(n, *field) {
        return Err(Error::ThetaFailure(0, 0));
    }

    let check = |x: usize, y: usize| -> Result<()> {
        let lhs = theta_of(s, field, s.product(x, y));
        let rhs = convolve(&gpd, &theta_of(s, field, x), &theta_of(s, field, y))?;
        if lhs != rhs {
            return Err(Error::ThetaFailure(x, y));
        }
        Ok(())
    };
    let pairs_checked = if n <= EXHAUSTIVE_PAIR_BOUND {
        for x in 0..n {
            for y in 0..n {
                check(x, y)?;
            }
        }
        PairPolicy::Exhaustive
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pairs = (n * n).min(40_000);
        for _ in 0..pairs {
            check(rng.gen_range(0..n), rng.gen_range(0..n))?;
        }
        PairPolicy::Sampled { pairs, seed }
    };

    Ok(IsoWitness {
        groupoid: gpd,
        forward,
        inverse,
        pairs_checked,
    })
}

/// Per-D-class block data: an n x n matrix algebra over the group
/// algebra of the maximal subgroup, where n counts the idempotents.
#[derive(Debug, Clone)]
pub struct Block {
    pub class_rep: usize,
    pub multiplicity: usize,
    pub group: SubGroup,
}

#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub total_dimension: usize,
}

/// The block decomposition read off the D-class structure. The
/// dimension bookkeeping sum of n^2 |G_e| always equals |S|.
pub fn decompose(s: &InverseSemigroup) -> BlockDecomposition {
    let blocks: Vec<Block> = s
        .d_classes()
        .classes
        .into_iter()
        .map(|c| Block {
            class_rep: c.rep,
            multiplicity: c.idempotents.len(),
            group: c.group,
        })
        .collect();
    let total_dimension = blocks
        .iter()
        .map(|b| b.multiplicity * b.multiplicity * b.group.order())
        .sum();
    assert_eq!(
        total_dimension, s.order,
        "block dimensions must add up to |S|"
    );
    BlockDecomposition {
        blocks,
        total_dimension,
    }
}

/// The identity of KS: the Möbius preimage of the sum of idempotent
/// arrows, verified as a two-sided unit under the semigroup product.
pub fn semigroup_identity(
    s: &InverseSemigroup,
    field: &FieldSpec,
    seed: u64,
) -> Result<AlgebraElement> {
    let w = theta(s, field, seed)?;
    let mut idem_indicator = Matrix::zero(s.order, 1, *field);
    for &e in &s.idempotents {
        idem_indicator.set(e, 0, field.one());
    }
    let coeffs = w.inverse.mul(&idem_indicator);
    let mut unit = AlgebraElement::zero(*field);
    for t in 0..s.order {
        unit.add_term(t, coeffs.get(t, 0).clone());
    }

    // semigroup algebra product against every basis element
    let ks_mul = |f: &AlgebraElement, g: &AlgebraElement| -> AlgebraElement {
        let mut out = AlgebraElement::zero(*field);
        for (a, ca) in &f.coeffs {
            for (b, cb) in &g.coeffs {
                out.add_term(s.product(*a, *b), ca.mul(cb));
            }
        }
        out
    };
    for t in 0..s.order {
        let d = AlgebraElement::delta(*field, t);
        assert_eq!(ks_mul(&unit, &d), d, "identity fails on the left");
        assert_eq!(ks_mul(&d, &unit), d, "identity fails on the right");
    }
    Ok(unit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn fields() -> [FieldSpec; 2] {
        [FieldSpec::Prime(5), FieldSpec::Rational]
    }

    #[test]
    fn theta_on_chain_is_the_zeta_matrix() {
        let s = samples::chain_semilattice(3);
        let f = FieldSpec::Prime(5);
        let w = theta(&s, &f, 0).unwrap();
        // on a chain 0 < 1 < 2 the image of e is the sum of all t <= e
        for x in 0..3 {
            for t in 0..3 {
                let expect = if t <= x { f.one() } else { f.zero() };
                assert_eq!(*w.forward.get(t, x), expect);
            }
        }
    }

    #[test]
    fn theta_i2_multiplicative_and_unitriangular() {
        let s = samples::symmetric_inverse_monoid(2);
        for f in fields() {
            let w = theta(&s, &f, 0).unwrap();
            assert_eq!(w.pairs_checked, PairPolicy::Exhaustive);
            // diagonal ones, inverse exact
            for i in 0..s.order {
                assert!(w.forward.get(i, i).is_one());
            }
            assert_eq!(w.forward.mul(&w.inverse), Matrix::identity(s.order, f));
        }
    }

    #[test]
    fn theta_of_b2_zero_is_a_singleton() {
        let s = samples::brandt_b2();
        let f = FieldSpec::Rational;
        let w = theta(&s, &f, 0).unwrap();
        // element 0 (the zero) is minimal: its column is the single arrow 0
        for t in 0..s.order {
            let expect = if t == 0 { f.one() } else { f.zero() };
            assert_eq!(*w.forward.get(t, 0), expect);
        }
    }

    #[test]
    fn decompose_i2() {
        let s = samples::symmetric_inverse_monoid(2);
        let d = decompose(&s);
        let mut shape: Vec<(usize, usize)> = d
            .blocks
            .iter()
            .map(|b| (b.multiplicity, b.group.order()))
            .collect();
        shape.sort();
        assert_eq!(shape, vec![(1, 1), (1, 2), (2, 1)]);
        assert_eq!(d.total_dimension, 7);
    }

    #[test]
    fn decompose_i3() {
        let s = samples::symmetric_inverse_monoid(3);
        let d = decompose(&s);
        let mut shape: Vec<(usize, usize)> = d
            .blocks
            .iter()
            .map(|b| (b.multiplicity, b.group.order()))
            .collect();
        shape.sort();
        assert_eq!(shape, vec![(1, 1), (1, 6), (3, 1), (3, 2)]);
        assert_eq!(d.total_dimension, 34);
    }

    #[test]
    fn decompose_b2() {
        let s = samples::brandt_b2();
        let d = decompose(&s);
        let mut shape: Vec<(usize, usize)> = d
            .blocks
            .iter()
            .map(|b| (b.multiplicity, b.group.order()))
            .collect();
        shape.sort();
        assert_eq!(shape, vec![(1, 1), (2, 1)]);
        assert_eq!(d.total_dimension, 5);
    }

    #[test]
    fn identity_of_a_monoid_is_its_unit_element() {
        let s = samples::symmetric_inverse_monoid(2);
        let f = FieldSpec::Rational;
        let unit = semigroup_identity(&s, &f, 0).unwrap();
        let pb = s.partial_bijections.as_ref().unwrap();
        let id = (0..s.order)
            .find(|&x| pb[x] == crate::semigroup::PartialBijection::identity(2))
            .unwrap();
        assert_eq!(unit, AlgebraElement::delta(f, id));
    }

    #[test]
    fn identity_of_chain_semilattice() {
        let s = samples::chain_semilattice(3);
        for f in fields() {
            // the chain is a monoid with top element 2
            let unit = semigroup_identity(&s, &f, 0).unwrap();
            assert_eq!(unit, AlgebraElement::delta(f, 2));
        }
    }

    #[test]
    fn identity_of_b2_exists() {
        // B2 has no multiplicative identity element, yet its algebra is
        // unital: the unit is a genuine linear combination
        let s = samples::brandt_b2();
        let f = FieldSpec::Prime(5);
        let unit = semigroup_identity(&s, &f, 0).unwrap();
        assert!(unit.coeffs.len() > 1);
    }
}
