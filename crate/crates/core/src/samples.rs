//! Standard small inverse semigroups used throughout tests and examples.

use crate::semigroup::{BuildOptions, InverseSemigroup, PartialBijection};

/// Generators for the symmetric inverse monoid on `n` points:
/// an n-cycle, a transposition, and the partial identity missing point 0.
pub fn i_n_generators(n: usize) -> Vec<PartialBijection> {
    assert!(n >= 1);
    let mut gens = Vec::new();
    if n >= 2 {
        // transposition (0 1)
        let mut imgs: Vec<Option<usize>> = (0..n).map(Some).collect();
        imgs[0] = Some(1);
        imgs[1] = Some(0);
        gens.push(PartialBijection::new(n, imgs).unwrap());
    }
    if n >= 3 {
        // the n-cycle
        let imgs: Vec<Option<usize>> = (0..n).map(|x| Some((x + 1) % n)).collect();
        gens.push(PartialBijection::new(n, imgs).unwrap());
    }
    // partial identity on {1, .., n-1}
    let mut imgs: Vec<Option<usize>> = (0..n).map(Some).collect();
    imgs[0] = None;
    gens.push(PartialBijection::new(n, imgs).unwrap());
    gens
}

/// The symmetric inverse monoid on `n` points (all partial bijections).
pub fn symmetric_inverse_monoid(n: usize) -> InverseSemigroup {
    InverseSemigroup::closure(&i_n_generators(n), &BuildOptions::default())
        .expect("standard generators close")
}

/// The 5-element Brandt semigroup of 2x2 matrix units with zero.
/// Indices: 0 = zero, 1 = e11, 2 = e22, 3 = e12, 4 = e21.
pub fn brandt_b2() -> InverseSemigroup {
    let unit = |i: usize| -> Option<(usize, usize)> {
        match i {
            1 => Some((1, 1)),
            2 => Some((2, 2)),
            3 => Some((1, 2)),
            4 => Some((2, 1)),
            _ => None,
        }
    };
    let pack = |p: (usize, usize)| -> usize {
        match p {
            (1, 1) => 1,
            (2, 2) => 2,
            (1, 2) => 3,
            (2, 1) => 4,
            _ => unreachable!(),
        }
    };
    let table: Vec<Vec<usize>> = (0..5)
        .map(|a| {
            (0..5)
                .map(|b| match (unit(a), unit(b)) {
                    (Some((i, j)), Some((k, l))) if j == k => pack((i, l)),
                    _ => 0,
                })
                .collect()
        })
        .collect();
    let star = vec![0, 1, 2, 4, 3];
    InverseSemigroup::from_table(table, Some(star), &BuildOptions::default())
        .expect("matrix units form an inverse semigroup")
}

/// Chain semilattice on `n` elements under minimum.
pub fn chain_semilattice(n: usize) -> InverseSemigroup {
    let table = (0..n).map(|i| (0..n).map(|j| i.min(j)).collect()).collect();
    let star = (0..n).collect();
    InverseSemigroup::from_table(table, Some(star), &BuildOptions::default())
        .expect("a meet-semilattice is an inverse semigroup")
}

/// A two-point discrete groupoid source: semilattice {e, f} with ef = 0
/// would need a zero; instead this is the 2-element antichain plus bottom.
pub fn antichain_with_zero(n: usize) -> InverseSemigroup {
    // elements: 0 = zero, 1..=n the atoms; distinct atoms multiply to zero
    let size = n + 1;
    let table = (0..size)
        .map(|i| (0..size).map(|j| if i == j { i } else { 0 }).collect())
        .collect();
    let star = (0..size).collect();
    InverseSemigroup::from_table(table, Some(star), &BuildOptions::default())
        .expect("an antichain with zero is a semilattice")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_orders() {
        assert_eq!(symmetric_inverse_monoid(2).order, 7);
        assert_eq!(symmetric_inverse_monoid(3).order, 34);
        assert_eq!(brandt_b2().order, 5);
        assert_eq!(chain_semilattice(4).order, 4);
        assert_eq!(antichain_with_zero(2).order, 3);
    }
}
