//! Finite actions of inverse semigroups on finite sets, germ groupoids,
//! the slice product law, isotropy generators, and the extraction and
//! reconstruction of covariant representation pairs.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::groupoid::DiscreteGroupoid;
use crate::matrix::Matrix;
use crate::semigroup::InverseSemigroup;
use crate::stone;

/// An action of an inverse semigroup on a finite set by partial
/// bijections: element s is defined exactly on the domain of s*s and
/// maps it bijectively onto the domain of ss*.
#[derive(Debug, Clone)]
pub struct FiniteAction {
    pub semigroup: InverseSemigroup,
    pub n_points: usize,
    /// Per element, the image of each point (None outside the domain).
    maps: Vec<Vec<Option<usize>>>,
}

impl FiniteAction {
    pub fn new(
        semigroup: InverseSemigroup,
        n_points: usize,
        maps: Vec<Vec<Option<usize>>>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::BadAction(msg));
        if maps.len() != semigroup.order {
            return bad("one map per semigroup element required".into());
        }
        for (s, m) in maps.iter().enumerate() {
            if m.len() != n_points {
                return bad(format!("map of element {s} has wrong length"));
            }
            let mut seen = vec![false; n_points];
            for y in m.iter().flatten() {
                if *y >= n_points {
                    return bad(format!("element {s} maps out of range"));
                }
                if seen[*y] {
                    return bad(format!("element {s} does not act injectively"));
                }
                seen[*y] = true;
            }
        }
        let act = FiniteAction {
            semigroup,
            n_points,
            maps,
        };
        act.validate()?;
        Ok(act)
    }

    fn validate(&self) -> Result<()> {
        let s = &self.semigroup;
        let bad = |msg: String| Err(Error::BadAction(msg));
        // homomorphism: the map of s.t is the composite (t first)
        for a in 0..s.order {
            for b in 0..s.order {
                let ab = s.product(a, b);
                for x in 0..self.n_points {
                    let composed = self.apply(b, x).and_then(|y| self.apply(a, y));
                    if self.maps[ab][x] != composed {
                        return bad(format!(
                            "homomorphism fails at elements ({a},{b}), point {x}"
                        ));
                    }
                }
            }
        }
        // idempotents act as partial identities
        for &e in &s.idempotents {
            for x in 0..self.n_points {
                if let Some(y) = self.apply(e, x) {
                    if y != x {
                        return bad(format!("idempotent {e} moves point {x}"));
                    }
                }
            }
            // domain intersections match idempotent meets
            for &f in &s.idempotents {
                let ef = s.idempotent_meet(e, f);
                for x in 0..self.n_points {
                    let both = self.apply(e, x).is_some() && self.apply(f, x).is_some();
                    if both != self.apply(ef, x).is_some() {
                        return bad(format!(
                            "domain of meet of ({e},{f}) differs from the intersection at {x}"
                        ));
                    }
                }
            }
        }
        // non-degenerate: every point lies in some idempotent's domain
        for x in 0..self.n_points {
            if !s.idempotents.iter().any(|&e| self.apply(e, x).is_some()) {
                return bad(format!("point {x} is outside every idempotent domain"));
            }
        }
        Ok(())
    }

    #[inline]
    pub fn apply(&self, s: usize, x: usize) -> Option<usize> {
        self.maps[s][x]
    }

    pub fn domain(&self, s: usize) -> Vec<usize> {
        (0..self.n_points)
            .filter(|&x| self.maps[s][x].is_some())
            .collect()
    }

    /// Orbit of a point under all elements, ascending.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n_points];
        seen[x] = true;
        let mut queue = vec![x];
        let mut i = 0;
        while i < queue.len() {
            let y = queue[i];
            for s in 0..self.semigroup.order {
                if let Some(z) = self.apply(s, y) {
                    if !seen[z] {
                        seen[z] = true;
                        queue.push(z);
                    }
                }
            }
            i += 1;
        }
        queue.sort();
        queue
    }

    /// Germ equivalence at a point: (s,x) ~ (t,x) iff some common lower
    /// bound of s and t is defined at x. Decided via the maximal
    /// elements of the downset intersection.
    pub fn germ_equivalent(&self, s: usize, t: usize, x: usize) -> bool {
        stone::downset_meet_generators(&self.semigroup, s, t)
            .iter()
            .any(|&u| self.apply(u, x).is_some())
    }

    /// Least-index element representing the germ of (s, x).
    pub fn canonical_rep(&self, s: usize, x: usize) -> usize {
        (0..self.semigroup.order)
            .find(|&t| self.apply(t, x).is_some() && self.germ_equivalent(s, t, x))
            .expect("s itself represents its germ")
    }
}

/// A germ: a canonical (element, point) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Germ {
    pub point: usize,
    pub rep: usize,
}

/// The groupoid of germs of a finite action. Units are the points of
/// the action; arrow i carries the germ `germs[i]`.
#[derive(Debug, Clone)]
pub struct GermGroupoid {
    pub groupoid: DiscreteGroupoid,
    pub germs: Vec<Germ>,
    arrow_index: HashMap<(usize, usize), usize>,
}

impl GermGroupoid {
    /// Arrow carrying the germ of (s, x), for x in the domain of s.
    pub fn arrow_of(&self, action: &FiniteAction, s: usize, x: usize) -> usize {
        let rep = action.canonical_rep(s, x);
        self.arrow_index[&(x, rep)]
    }
}

/// Builds the germ groupoid: arrows are germ classes ordered by
/// (point, canonical representative); composition of [s, ty] after
/// [t, y] is [st, y].
pub fn germ_groupoid(action: &FiniteAction) -> Result<GermGroupoid> {
    let s = &action.semigroup;

    // the germ relation must be an equivalence pointwise
    for x in 0..action.n_points {
        let defined: Vec<usize> = (0..s.order)
            .filter(|&a| action.apply(a, x).is_some())
            .collect();
        for &a in &defined {
            assert!(
                action.germ_equivalent(a, a, x),
                "germ relation not reflexive"
            );
            for &b in &defined {
                assert_eq!(
                    action.germ_equivalent(a, b, x),
                    action.germ_equivalent(b, a, x),
                    "germ relation not symmetric"
                );
                for &c in &defined {
                    if action.germ_equivalent(a, b, x) && action.germ_equivalent(b, c, x) {
                        assert!(
                            action.germ_equivalent(a, c, x),
                            "germ relation not transitive"
                        );
                    }
                }
            }
        }
    }

    let mut germ_set: BTreeSet<Germ> = BTreeSet::new();
    for a in 0..s.order {
        for x in 0..action.n_points {
            if action.apply(a, x).is_some() {
                germ_set.insert(Germ {
                    point: x,
                    rep: action.canonical_rep(a, x),
                });
            }
        }
    }
    let germs: Vec<Germ> = germ_set.into_iter().collect();
    let arrow_index: HashMap<(usize, usize), usize> = germs
        .iter()
        .enumerate()
        .map(|(i, g)| ((g.point, g.rep), i))
        .collect();

    let dom: Vec<usize> = germs.iter().map(|g| g.point).collect();
    let ran: Vec<usize> = germs
        .iter()
        .map(|g| action.apply(g.rep, g.point).unwrap())
        .collect();
    let inv: Vec<usize> = germs
        .iter()
        .map(|g| {
            let sx = action.apply(g.rep, g.point).unwrap();
            let rep = action.canonical_rep(s.star_of(g.rep), sx);
            arrow_index[&(sx, rep)]
        })
        .collect();
    let unit_arrow: Vec<usize> = (0..action.n_points)
        .map(|x| {
            let e = s
                .idempotents
                .iter()
                .copied()
                .find(|&e| action.apply(e, x).is_some())
                .expect("action is non-degenerate");
            arrow_index[&(x, action.canonical_rep(e, x))]
        })
        .collect();
    let mut comp = HashMap::new();
    for (gi, g) in germs.iter().enumerate() {
        for (hi, h) in germs.iter().enumerate() {
            if dom[gi] != ran[hi] {
                continue;
            }
            let st = s.product(g.rep, h.rep);
            let rep = action.canonical_rep(st, h.point);
            comp.insert((gi, hi), arrow_index[&(h.point, rep)]);
        }
    }
    let labels = germs
        .iter()
        .map(|g| format!("[{}, {}]", s.labels[g.rep], g.point))
        .collect();
    let groupoid = DiscreteGroupoid::new(action.n_points, dom, ran, inv, unit_arrow, comp, labels)?;
    Ok(GermGroupoid {
        groupoid,
        germs,
        arrow_index,
    })
}

/// The set of germ arrows of a slice (s, U) for U inside the domain of s.
pub fn slice_arrows(
    gg: &GermGroupoid,
    action: &FiniteAction,
    s: usize,
    u: &[usize],
) -> BTreeSet<usize> {
    u.iter().map(|&x| gg.arrow_of(action, s, x)).collect()
}

/// Verifies the slice product law (s,U)(t,V) = (st, t*(U meet tV)) over
/// the test family of all singletons plus the full domains.
pub fn slice_product_check(action: &FiniteAction) -> Result<bool> {
    let gg = germ_groupoid(action)?;
    let s = &action.semigroup;
    let family = |a: usize| -> Vec<Vec<usize>> {
        let dom = action.domain(a);
        let mut out: Vec<Vec<usize>> = dom.iter().map(|&x| vec![x]).collect();
        out.push(dom);
        out
    };
    for a in 0..s.order {
        for b in 0..s.order {
            for u in family(a) {
                for v in family(b) {
                    if !slice_product_holds(&gg, action, a, &u, b, &v) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// The law for one specific pair of slices; exposed so tests can sweep
/// all subsets on one small case.
pub fn slice_product_holds(
    gg: &GermGroupoid,
    action: &FiniteAction,
    a: usize,
    u: &[usize],
    b: usize,
    v: &[usize],
) -> bool {
    // setwise product of the two germ-arrow sets
    let ua = slice_arrows(gg, action, a, u);
    let vb = slice_arrows(gg, action, b, v);
    let mut setwise = BTreeSet::new();
    for &g in &ua {
        for &h in &vb {
            if let Some(gh) = gg.groupoid.compose(g, h) {
                setwise.insert(gh);
            }
        }
    }
    // formula: (ab, b^{-1}(U meet bV))
    let s = &action.semigroup;
    let ab = s.product(a, b);
    let bv: BTreeSet<usize> = v.iter().filter_map(|&x| action.apply(b, x)).collect();
    let w: Vec<usize> = action
        .domain(b)
        .into_iter()
        .filter(|&x| {
            let bx = action.apply(b, x).unwrap();
            u.contains(&bx) && bv.contains(&bx)
        })
        .collect();
    let formula = slice_arrows(gg, action, ab, &w);
    setwise == formula
}

/// The germ groupoid of the spectral action, together with the element
/// -> arrow embedding. Asserts that the embedding is an isomorphism
/// onto the underlying groupoid structure.
pub fn universal_groupoid(s: &InverseSemigroup) -> Result<(GermGroupoid, Vec<usize>)> {
    let action = stone::spectral_action(s);
    let gg = germ_groupoid(&action)?;
    let underlying = crate::groupoid::underlying_groupoid(s);
    assert_eq!(
        gg.groupoid.n_arrows, underlying.n_arrows,
        "universal groupoid has the wrong arrow count"
    );

    // the embedding t -> germ of (t, point of t*t)
    let point_of = |e: usize| s.idempotents.iter().position(|&f| f == e).unwrap();
    let embed: Vec<usize> = (0..s.order)
        .map(|t| gg.arrow_of(&action, t, point_of(s.dom_idem(t))))
        .collect();

    // bijectivity and functoriality
    let image: BTreeSet<usize> = embed.iter().copied().collect();
    assert_eq!(image.len(), s.order, "embedding is not injective");
    for t in 0..s.order {
        assert_eq!(gg.groupoid.dom[embed[t]], underlying.dom[t]);
        assert_eq!(gg.groupoid.ran[embed[t]], underlying.ran[t]);
        assert_eq!(gg.groupoid.inv[embed[t]], embed[s.star_of(t)]);
        for r in 0..s.order {
            match (
                underlying.compose(t, r),
                gg.groupoid.compose(embed[t], embed[r]),
            ) {
                (Some(tr), Some(a)) => assert_eq!(a, embed[tr], "embedding not functorial"),
                (None, None) => {}
                _ => panic!("composability disagrees under the embedding"),
            }
        }
    }
    Ok((gg, embed))
}

/// Least-index transversal for the orbit of x: for each orbit point y
/// the least element carrying x to y, with an idempotent at x itself.
pub fn default_transversal(action: &FiniteAction, x: usize) -> Vec<(usize, usize)> {
    let s = &action.semigroup;
    action
        .orbit(x)
        .into_iter()
        .map(|y| {
            let p = if y == x {
                s.idempotents
                    .iter()
                    .copied()
                    .find(|&e| action.apply(e, x).is_some())
                    .expect("non-degenerate action")
            } else {
                (0..s.order)
                    .find(|&p| action.apply(p, x) == Some(y))
                    .expect("y lies in the orbit of x")
            };
            (y, p)
        })
        .collect()
}

/// Isotropy generators at a base point: for each generator a (and its
/// inverse) and each orbit point y with a defined at y, the germ of
/// p_{ay}* a p_y at x. Asserts their closure equals the enumerated
/// isotropy group of the germ groupoid at x.
pub fn isotropy_generators(
    action: &FiniteAction,
    x: usize,
    gens: &[usize],
    transversal: &[(usize, usize)],
) -> Result<Vec<usize>> {
    let s = &action.semigroup;
    let mut p_of: HashMap<usize, usize> = HashMap::new();
    for &(y, p) in transversal {
        if action.apply(p, x) != Some(y) {
            return Err(Error::BadTransversal(y));
        }
        if y == x && !s.is_idempotent(p) {
            return Err(Error::BadTransversal(y));
        }
        p_of.insert(y, p);
    }
    let orbit = action.orbit(x);
    if orbit.iter().any(|y| !p_of.contains_key(y)) {
        return Err(Error::InvalidInput(
            "transversal does not cover the orbit".into(),
        ));
    }

    let gg = germ_groupoid(action)?;
    let mut all_gens: Vec<usize> = gens.to_vec();
    all_gens.extend(gens.iter().map(|&a| s.star_of(a)));

    let mut gen_arrows: BTreeSet<usize> = BTreeSet::new();
    gen_arrows.insert(gg.groupoid.unit_arrow[x]);
    for &a in &all_gens {
        for &y in &orbit {
            let Some(ay) = action.apply(a, y) else {
                continue;
            };
            let u = s.product(s.product(s.star_of(p_of[&ay]), a), p_of[&y]);
            if action.apply(u, x).is_some() {
                gen_arrows.insert(gg.arrow_of(action, u, x));
            }
        }
    }

    // close under the groupoid product (all arrows are isotropy at x)
    let mut closed: BTreeSet<usize> = gen_arrows.clone();
    loop {
        let mut grew = false;
        let current: Vec<usize> = closed.iter().copied().collect();
        for &g in &current {
            for &h in &current {
                let gh = gg.groupoid.compose(g, h).expect("isotropy arrows compose");
                if closed.insert(gh) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let enumerated: BTreeSet<usize> = gg.groupoid.isotropy(x).into_iter().collect();
    assert_eq!(
        closed, enumerated,
        "generators fail to generate the isotropy group"
    );
    Ok(gen_arrows.into_iter().collect())
}

/// Extracts the covariant pair (pi, sigma) from an algebra homomorphism
/// on the germ groupoid (given as one matrix per arrow), verifies the
/// covariance axioms, reconstructs the homomorphism from the pair, and
/// reports whether the roundtrip reproduces the input exactly.
pub fn covariant_roundtrip(
    action: &FiniteAction,
    gg: &GermGroupoid,
    phi: &[Matrix],
    field: &FieldSpec,
) -> Result<bool> {
    let n = gg.groupoid.n_arrows;
    if phi.len() != n {
        return Err(Error::DimensionMismatch(
            "one matrix per arrow required".into(),
        ));
    }
    let dim = phi.first().map_or(0, |m| m.rows);
    for m in phi {
        if m.rows != dim || m.cols != dim || m.field != *field {
            return Err(Error::DimensionMismatch(
                "homomorphism matrices must be square over one field".into(),
            ));
        }
    }
    let zero = Matrix::zero(dim, dim, *field);

    // homomorphism check on the arrow basis
    for g in 0..n {
        for h in 0..n {
            let expect = match gg.groupoid.compose(g, h) {
                Some(gh) => phi[gh].clone(),
                None => zero.clone(),
            };
            if phi[g].mul(&phi[h]) != expect {
                return Err(Error::NotHomomorphism(g, h));
            }
        }
    }

    let s = &action.semigroup;
    let pi = |points: &[usize]| -> Matrix {
        let mut acc = zero.clone();
        for &x in points {
            acc = acc.add(&phi[gg.groupoid.unit_arrow[x]]);
        }
        acc
    };
    let sigma = |t: usize| -> Matrix {
        let mut acc = zero.clone();
        for x in action.domain(t) {
            acc = acc.add(&phi[gg.arrow_of(action, t, x)]);
        }
        acc
    };

    // covariance: pi on an idempotent domain equals sigma there, and
    // sigma(t) pi(chi_U) sigma(t*) = pi(chi_{tU}) on the test family
    for &e in &s.idempotents {
        if pi(&action.domain(e)) != sigma(e) {
            return Ok(false);
        }
    }
    for t in 0..s.order {
        let dom = action.domain(t);
        let mut family: Vec<Vec<usize>> = dom.iter().map(|&x| vec![x]).collect();
        family.push(dom.clone());
        for u in family {
            let tu: Vec<usize> = u.iter().map(|&x| action.apply(t, x).unwrap()).collect();
            let lhs = sigma(t).mul(&pi(&u)).mul(&sigma(s.star_of(t)));
            if lhs != pi(&tu) {
                return Ok(false);
            }
        }
    }

    // reconstruction: each germ arrow is sigma(rep) cut down to its point
    for (i, germ) in gg.germs.iter().enumerate() {
        let rebuilt = sigma(germ.rep).mul(&pi(&[germ.point]));
        if rebuilt != phi[i] {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn munn_germ_groupoid_of_i2_matches_underlying() {
        let s = samples::symmetric_inverse_monoid(2);
        let act = s.munn_action();
        let gg = germ_groupoid(&act).unwrap();
        assert_eq!(gg.groupoid.n_arrows, 7);
        assert_eq!(gg.groupoid.n_units, 4);
    }

    #[test]
    fn semilattice_munn_germs_collapse_to_units() {
        let s = samples::chain_semilattice(4);
        let act = s.munn_action();
        let gg = germ_groupoid(&act).unwrap();
        assert_eq!(gg.groupoid.n_arrows, 4);
        assert!((0..4).all(|a| gg.groupoid.is_unit_arrow(a)));
    }

    #[test]
    fn universal_groupoid_sizes() {
        for (s, arrows) in [
            (samples::symmetric_inverse_monoid(2), 7),
            (samples::brandt_b2(), 5),
            (samples::chain_semilattice(3), 3),
        ] {
            let (gg, embed) = universal_groupoid(&s).unwrap();
            assert_eq!(gg.groupoid.n_arrows, arrows);
            assert_eq!(embed.len(), s.order);
        }
    }

    #[test]
    fn slice_product_law_on_munn_actions() {
        for s in [
            samples::symmetric_inverse_monoid(2),
            samples::brandt_b2(),
            samples::chain_semilattice(3),
        ] {
            assert!(slice_product_check(&s.munn_action()).unwrap());
        }
    }

    #[test]
    fn slice_product_all_subsets_on_b2() {
        // pointwise sufficiency of the singleton family, checked against
        // every subset pair on one small case
        let s = samples::brandt_b2();
        let act = s.munn_action();
        let gg = germ_groupoid(&act).unwrap();
        for a in 0..s.order {
            for b in 0..s.order {
                let da = act.domain(a);
                let db = act.domain(b);
                for mu in 0u32..(1 << da.len()) {
                    let u: Vec<usize> = da
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mu >> i & 1 == 1)
                        .map(|(_, &x)| x)
                        .collect();
                    for mv in 0u32..(1 << db.len()) {
                        let v: Vec<usize> = db
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| mv >> i & 1 == 1)
                            .map(|(_, &x)| x)
                            .collect();
                        assert!(slice_product_holds(&gg, &act, a, &u, b, &v));
                    }
                }
            }
        }
    }

    #[test]
    fn isotropy_generators_i2_top() {
        let s = samples::symmetric_inverse_monoid(2);
        let act = s.munn_action();
        // base point: the top idempotent's index among idempotents
        let pb = s.partial_bijections.as_ref().unwrap();
        let top = (0..s.order)
            .find(|&t| pb[t] == crate::semigroup::PartialBijection::identity(2))
            .unwrap();
        let x = s.idempotents.iter().position(|&e| e == top).unwrap();
        let gens: Vec<usize> = (0..s.order).collect();
        let transversal = default_transversal(&act, x);
        let arrows = isotropy_generators(&act, x, &gens, &transversal).unwrap();
        let gg = germ_groupoid(&act).unwrap();
        assert_eq!(gg.groupoid.isotropy(x).len(), 2);
        assert!(!arrows.is_empty());
    }

    #[test]
    fn bad_transversal_rejected() {
        let s = samples::brandt_b2();
        let act = s.munn_action();
        let x = 0;
        let orbit = act.orbit(x);
        let bogus: Vec<(usize, usize)> = orbit.iter().map(|&y| (y, 0)).collect();
        if orbit.len() > 1 {
            assert!(matches!(
                isotropy_generators(&act, x, &[0], &bogus),
                Err(Error::BadTransversal(_))
            ));
        }
    }

    #[test]
    fn covariant_roundtrip_zero_map() {
        let s = samples::brandt_b2();
        let act = s.munn_action();
        let gg = germ_groupoid(&act).unwrap();
        let f = FieldSpec::Prime(5);
        let phi: Vec<Matrix> = (0..gg.groupoid.n_arrows)
            .map(|_| Matrix::zero(2, 2, f))
            .collect();
        assert!(covariant_roundtrip(&act, &gg, &phi, &f).unwrap());
    }

    #[test]
    fn covariant_rejects_non_homomorphism() {
        let s = samples::chain_semilattice(2);
        let act = s.munn_action();
        let gg = germ_groupoid(&act).unwrap();
        let f = FieldSpec::Prime(5);
        let phi: Vec<Matrix> = (0..gg.groupoid.n_arrows)
            .map(|_| Matrix::identity(1, f))
            .collect();
        // distinct units both mapping to the identity cannot multiply to zero
        assert!(matches!(
            covariant_roundtrip(&act, &gg, &phi, &f),
            Err(Error::NotHomomorphism(_, _))
        ));
    }
}
