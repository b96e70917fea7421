//! Filters, characters, and ultrafilters on the idempotent semilattice
//! of a finite inverse semigroup, plus the spectral action on characters.

use crate::error::{Error, Result};
use crate::germs::FiniteAction;
use crate::semigroup::{InverseSemigroup, SubGroup};

/// A filter on E(S): nonempty, meet-closed, upward-closed set of
/// idempotents. Finite semilattice filters are always principal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filter {
    /// Member idempotents (semigroup indices, ascending).
    pub elements: Vec<usize>,
    /// The minimum of the filter; the filter equals its upset.
    pub principal_min: usize,
    /// True when the filter is maximal among proper filters.
    pub ultrafilter: bool,
}

fn upset(s: &InverseSemigroup, e: usize) -> Vec<usize> {
    s.idempotents
        .iter()
        .copied()
        .filter(|&f| s.idempotent_leq(e, f))
        .collect()
}

fn is_filter(s: &InverseSemigroup, members: &[usize]) -> bool {
    if members.is_empty() {
        return false;
    }
    for &e in members {
        for &f in members {
            if !members.contains(&s.idempotent_meet(e, f)) {
                return false;
            }
        }
        for &f in &s.idempotents {
            if s.idempotent_leq(e, f) && !members.contains(&f) {
                return false;
            }
        }
    }
    true
}

/// The zero (minimum) of E(S), when one exists.
pub fn semilattice_zero(s: &InverseSemigroup) -> Option<usize> {
    s.idempotents
        .iter()
        .copied()
        .find(|&z| s.idempotents.iter().all(|&e| s.idempotent_leq(z, e)))
}

/// Primitive idempotents: minimal among the nonzero idempotents when a
/// zero exists; plain minimal idempotents otherwise (zero-free
/// convention, reported by `ultrafilters`).
pub fn primitive_idempotents(s: &InverseSemigroup) -> Vec<usize> {
    let zero = semilattice_zero(s);
    s.idempotents
        .iter()
        .copied()
        .filter(|&e| {
            if Some(e) == zero {
                return false;
            }
            s.idempotents
                .iter()
                .all(|&f| Some(f) == zero || f == e || !s.idempotent_leq(f, e))
        })
        .collect()
}

/// All filters on E(S). For a finite semilattice these are exactly the
/// principal upsets; for |E| <= 20 this is asserted against a
/// brute-force enumeration of all upward-closed meet-closed subsets.
pub fn all_filters(s: &InverseSemigroup) -> Vec<Filter> {
    let primitives = primitive_idempotents(s);
    let proper_max: Vec<usize> = primitives;
    let filters: Vec<Filter> = s
        .idempotents
        .iter()
        .map(|&e| Filter {
            elements: upset(s, e),
            principal_min: e,
            ultrafilter: proper_max.contains(&e),
        })
        .collect();

    let ne = s.idempotents.len();
    if ne <= 20 {
        let mut count = 0usize;
        for mask in 1u64..(1 << ne) {
            let members: Vec<usize> = (0..ne)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| s.idempotents[i])
                .collect();
            if is_filter(s, &members) {
                count += 1;
                assert!(
                    filters.iter().any(|f| f.elements == members),
                    "found a non-principal filter"
                );
            }
        }
        assert_eq!(count, filters.len(), "principal filter count mismatch");
    }
    filters
}

/// The maximal proper filters, verified two ways: via primitive
/// idempotents and via direct containment testing.
pub fn ultrafilters(s: &InverseSemigroup) -> Vec<Filter> {
    let filters = all_filters(s);
    let from_primitives: Vec<&Filter> = filters.iter().filter(|f| f.ultrafilter).collect();

    // independent route: maximal among proper filters by containment
    let all_idems = &s.idempotents;
    let proper: Vec<&Filter> = filters
        .iter()
        .filter(|f| f.elements.len() < all_idems.len() || semilattice_zero(s).is_none())
        .collect();
    let maximal: Vec<&Filter> = proper
        .iter()
        .copied()
        .filter(|f| {
            !proper.iter().any(|g| {
                g.elements != f.elements && f.elements.iter().all(|e| g.elements.contains(e))
            })
        })
        .collect();

    let mut a: Vec<Vec<usize>> = from_primitives.iter().map(|f| f.elements.clone()).collect();
    let mut b: Vec<Vec<usize>> = maximal.iter().map(|f| f.elements.clone()).collect();
    a.sort();
    b.sort();
    assert_eq!(a, b, "primitive route disagrees with maximality route");

    from_primitives.into_iter().cloned().collect()
}

/// The spectral action of S on characters of E(S). Characters of a
/// finite semilattice are the indicators of principal upsets, so the
/// space is identified with E(S) itself via e <-> the character of e's
/// upset; point i of the action is `s.idempotents[i]`.
pub fn spectral_action(s: &InverseSemigroup) -> FiniteAction {
    let idems = &s.idempotents;
    let pos = |e: usize| idems.iter().position(|&f| f == e).unwrap();

    // beta_t(chi) is defined when chi(t* t) = 1; the resulting character
    // f -> chi(t* f t) is matched against the principal characters.
    let maps: Vec<Vec<Option<usize>>> = (0..s.order)
        .map(|t| {
            let dom = s.dom_idem(t);
            idems
                .iter()
                .map(|&e| {
                    if !s.idempotent_leq(e, dom) {
                        return None;
                    }
                    let evaluate = |f: usize| {
                        let conj = s.product(s.product(s.star_of(t), f), t);
                        s.idempotent_leq(e, conj)
                    };
                    let image = idems
                        .iter()
                        .copied()
                        .find(|&c| idems.iter().all(|&f| evaluate(f) == s.idempotent_leq(c, f)))
                        .expect("spectral image is a principal character");
                    Some(pos(image))
                })
                .collect()
        })
        .collect();

    let action = FiniteAction::new(s.clone(), idems.len(), maps)
        .expect("spectral action satisfies the action axioms");

    // the identification e <-> chi must carry this action to the Munn action
    let munn = s.munn_action();
    for t in 0..s.order {
        for i in 0..idems.len() {
            assert_eq!(
                action.apply(t, i),
                munn.apply(t, i),
                "spectral action disagrees with the Munn action"
            );
        }
    }
    action
}

/// The stabilized elements at the character of e's upset, with the
/// maximal-group-image quotient map s -> s*e into G_e.
pub struct IsotropyData {
    /// Elements s with e <= s*s and s e s* = e.
    pub stabilizer: Vec<usize>,
    /// The maximal subgroup G_e.
    pub group: SubGroup,
    /// For each stabilizer element, the local index of s*e in G_e.
    pub quotient: Vec<usize>,
}

/// Isotropy at the principal character of `e`: the stabilizer under the
/// spectral action surjects onto G_e by s -> s*e, and two stabilizer
/// elements map equally exactly when they share a lower bound there.
pub fn isotropy_at(s: &InverseSemigroup, e: usize) -> Result<IsotropyData> {
    if !s.is_idempotent(e) {
        return Err(Error::InvalidInput(format!("{e} is not an idempotent")));
    }
    let stabilizer: Vec<usize> = (0..s.order)
        .filter(|&t| {
            s.idempotent_leq(e, s.dom_idem(t)) && s.product(s.product(t, e), s.star_of(t)) == e
        })
        .collect();
    let group = s.maximal_subgroup(e);
    let local = |x: usize| group.elements.iter().position(|&g| g == x).unwrap();
    let quotient: Vec<usize> = stabilizer.iter().map(|&t| local(s.product(t, e))).collect();

    // surjectivity, and the kernel pair criterion
    for gi in 0..group.order() {
        assert!(quotient.contains(&gi), "quotient map must be onto G_e");
    }
    for (i, &a) in stabilizer.iter().enumerate() {
        for (j, &b) in stabilizer.iter().enumerate() {
            let same = quotient[i] == quotient[j];
            let share = stabilizer
                .iter()
                .any(|&u| s.natural_leq(u, a) && s.natural_leq(u, b));
            assert_eq!(same, share, "maximal-group-image kernel mismatch");
        }
    }
    Ok(IsotropyData {
        stabilizer,
        group,
        quotient,
    })
}

/// Maximal elements of the intersection of the principal downsets of s
/// and t; every common lower bound lies below one of them.
pub fn downset_meet_generators(sg: &InverseSemigroup, s: usize, t: usize) -> Vec<usize> {
    let common: Vec<usize> = (0..sg.order)
        .filter(|&u| sg.natural_leq(u, s) && sg.natural_leq(u, t))
        .collect();
    common
        .iter()
        .copied()
        .filter(|&u| common.iter().all(|&v| v == u || !sg.natural_leq(u, v)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn chain_filters_are_suffixes() {
        let s = samples::chain_semilattice(3);
        let filters = all_filters(&s);
        assert_eq!(filters.len(), 3);
        let mut sizes: Vec<usize> = filters.iter().map(|f| f.elements.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn chain_unique_ultrafilter() {
        // chain 0 < 1 < 2: the unique primitive is 1 (minimal nonzero)
        let s = samples::chain_semilattice(3);
        let uf = ultrafilters(&s);
        assert_eq!(uf.len(), 1);
        assert_eq!(uf[0].principal_min, 1);
    }

    #[test]
    fn i2_has_four_principal_filters() {
        let s = samples::symmetric_inverse_monoid(2);
        assert_eq!(all_filters(&s).len(), 4);
    }

    #[test]
    fn b2_ultrafilters_at_matrix_unit_idempotents() {
        let s = samples::brandt_b2();
        let uf = ultrafilters(&s);
        let mut mins: Vec<usize> = uf.iter().map(|f| f.principal_min).collect();
        mins.sort();
        assert_eq!(mins, vec![1, 2]);
    }

    #[test]
    fn singleton_zero_semilattice_has_no_ultrafilter() {
        let s = samples::chain_semilattice(1);
        assert!(primitive_idempotents(&s).is_empty());
        assert!(ultrafilters(&s).is_empty());
    }

    #[test]
    fn spectral_action_matches_munn_by_construction() {
        // the coincidence assertion lives inside spectral_action
        for s in [samples::symmetric_inverse_monoid(2), samples::brandt_b2()] {
            let _ = spectral_action(&s);
        }
    }

    #[test]
    fn b2_spectral_moves_e22_to_e11() {
        let s = samples::brandt_b2();
        let act = spectral_action(&s);
        let i11 = s.idempotents.iter().position(|&e| e == 1).unwrap();
        let i22 = s.idempotents.iter().position(|&e| e == 2).unwrap();
        // e12 maps the character at e22 to the character at e11
        assert_eq!(act.apply(3, i22), Some(i11));
    }

    #[test]
    fn i2_isotropy_at_top_is_s2() {
        let s = samples::symmetric_inverse_monoid(2);
        let pb = s.partial_bijections.as_ref().unwrap();
        let top = (0..s.order)
            .find(|&x| pb[x] == crate::semigroup::PartialBijection::identity(2))
            .unwrap();
        let data = isotropy_at(&s, top).unwrap();
        assert_eq!(data.group.order(), 2);
    }

    #[test]
    fn semilattice_isotropy_trivial() {
        let s = samples::chain_semilattice(4);
        for &e in &s.idempotents {
            assert_eq!(isotropy_at(&s, e).unwrap().group.order(), 1);
        }
    }

    #[test]
    fn downset_generators_idempotent_pair_is_meet() {
        let s = samples::symmetric_inverse_monoid(2);
        for &e in &s.idempotents {
            for &f in &s.idempotents {
                assert_eq!(
                    downset_meet_generators(&s, e, f),
                    vec![s.idempotent_meet(e, f)]
                );
            }
        }
    }

    #[test]
    fn downset_generators_cover_common_lower_bounds() {
        let s = samples::symmetric_inverse_monoid(2);
        for a in 0..s.order {
            for b in 0..s.order {
                let gens = downset_meet_generators(&s, a, b);
                for u in 0..s.order {
                    let below_both = s.natural_leq(u, a) && s.natural_leq(u, b);
                    let below_gen = gens.iter().any(|&g| s.natural_leq(u, g));
                    assert_eq!(below_both, below_gen);
                }
            }
        }
    }

    #[test]
    fn transposition_meet_identity_is_empty_map() {
        let s = samples::symmetric_inverse_monoid(2);
        let pb = s.partial_bijections.as_ref().unwrap();
        let id = (0..s.order)
            .find(|&x| pb[x] == crate::semigroup::PartialBijection::identity(2))
            .unwrap();
        let tr = (0..s.order)
            .find(|&x| pb[x].domain().len() == 2 && pb[x].apply(0) == Some(1))
            .unwrap();
        let gens = downset_meet_generators(&s, tr, id);
        assert_eq!(gens.len(), 1);
        assert!(pb[gens[0]].domain().is_empty());
    }
}
