//! Finite discrete groupoids and their convolution algebras: units,
//! centers via class functions and via commutants, slice semigroups,
//! and the tiny-scale presentation quotient.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;
use crate::semigroup::{BuildOptions, InverseSemigroup};

/// A finite groupoid with units identified with their identity arrows.
#[derive(Debug, Clone)]
pub struct DiscreteGroupoid {
    pub n_units: usize,
    pub n_arrows: usize,
    /// Per arrow, its domain and range unit.
    pub dom: Vec<usize>,
    pub ran: Vec<usize>,
    pub inv: Vec<usize>,
    /// Per unit, the index of its identity arrow.
    pub unit_arrow: Vec<usize>,
    comp: HashMap<(usize, usize), usize>,
    pub labels: Vec<String>,
}

impl DiscreteGroupoid {
    /// Validates all groupoid axioms exhaustively.
    pub fn new(
        n_units: usize,
        dom: Vec<usize>,
        ran: Vec<usize>,
        inv: Vec<usize>,
        unit_arrow: Vec<usize>,
        comp: HashMap<(usize, usize), usize>,
        labels: Vec<String>,
    ) -> Result<Self> {
        let n = dom.len();
        let bad = |msg: String| Err(Error::BadGroupoid(msg));
        if ran.len() != n || inv.len() != n || labels.len() != n || unit_arrow.len() != n_units {
            return bad("inconsistent arrow data lengths".into());
        }
        for g in 0..n {
            if dom[g] >= n_units || ran[g] >= n_units || inv[g] >= n {
                return bad(format!("arrow {g} has out-of-range data"));
            }
        }
        for (x, &u) in unit_arrow.iter().enumerate() {
            if dom[u] != x || ran[u] != x || inv[u] != u {
                return bad(format!("unit arrow {u} is not an identity at {x}"));
            }
        }
        for g in 0..n {
            for h in 0..n {
                let defined = comp.contains_key(&(g, h));
                if defined != (dom[g] == ran[h]) {
                    return bad(format!("composability of ({g},{h}) misdeclared"));
                }
                if let Some(&gh) = comp.get(&(g, h)) {
                    if dom[gh] != dom[h] || ran[gh] != ran[g] {
                        return bad(format!("composite of ({g},{h}) has wrong endpoints"));
                    }
                }
            }
            // inverse laws and identity absorption
            if comp[&(inv[g], g)] != unit_arrow[dom[g]] || comp[&(g, inv[g])] != unit_arrow[ran[g]]
            {
                return bad(format!("inverse laws fail at arrow {g}"));
            }
            if comp[&(unit_arrow[ran[g]], g)] != g || comp[&(g, unit_arrow[dom[g]])] != g {
                return bad(format!("identity laws fail at arrow {g}"));
            }
        }
        for g in 0..n {
            for h in 0..n {
                if dom[g] != ran[h] {
                    continue;
                }
                for k in 0..n {
                    if dom[h] != ran[k] {
                        continue;
                    }
                    if comp[&(comp[&(g, h)], k)] != comp[&(g, comp[&(h, k)])] {
                        return bad(format!("associativity fails at ({g},{h},{k})"));
                    }
                }
            }
        }
        Ok(DiscreteGroupoid {
            n_units,
            n_arrows: n,
            dom,
            ran,
            inv,
            unit_arrow,
            comp,
            labels,
        })
    }

    /// Composite `g . h`, defined when dom(g) = ran(h).
    pub fn compose(&self, g: usize, h: usize) -> Option<usize> {
        self.comp.get(&(g, h)).copied()
    }

    pub fn is_unit_arrow(&self, g: usize) -> bool {
        self.unit_arrow[self.dom[g]] == g
    }

    /// Orbit partition of the units (x ~ y when an arrow joins them).
    pub fn unit_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n_units];
        let mut orbits = Vec::new();
        for x in 0..self.n_units {
            if seen[x] {
                continue;
            }
            let mut orbit = vec![x];
            seen[x] = true;
            let mut i = 0;
            while i < orbit.len() {
                let y = orbit[i];
                for g in 0..self.n_arrows {
                    if self.dom[g] == y && !seen[self.ran[g]] {
                        seen[self.ran[g]] = true;
                        orbit.push(self.ran[g]);
                    }
                }
                i += 1;
            }
            orbit.sort();
            orbits.push(orbit);
        }
        orbits
    }

    /// Isotropy arrows at a unit: dom = ran = x.
    pub fn isotropy(&self, x: usize) -> Vec<usize> {
        (0..self.n_arrows)
            .filter(|&g| self.dom[g] == x && self.ran[g] == x)
            .collect()
    }
}

/// A finitely supported element of the convolution algebra, in the
/// arrow basis. Stored entries are nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement {
    pub field: FieldSpec,
    pub coeffs: BTreeMap<usize, Scalar>,
}

impl AlgebraElement {
    pub fn zero(field: FieldSpec) -> Self {
        AlgebraElement {
            field,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn delta(field: FieldSpec, arrow: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(arrow, field.one());
        AlgebraElement { field, coeffs }
    }

    pub fn from_pairs(field: FieldSpec, pairs: &[(usize, Scalar)]) -> Self {
        let mut out = AlgebraElement::zero(field);
        for (g, c) in pairs {
            out.add_term(*g, c.clone());
        }
        out
    }

    pub fn add_term(&mut self, arrow: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.remove(&arrow) {
            Some(prev) => {
                let s = prev.add(&c);
                if !s.is_zero() {
                    self.coeffs.insert(arrow, s);
                }
            }
            None => {
                self.coeffs.insert(arrow, c);
            }
        }
    }

    pub fn coeff(&self, arrow: usize) -> Scalar {
        self.coeffs
            .get(&arrow)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (g, c) in &other.coeffs {
            out.add_term(*g, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.field);
        for (g, a) in &self.coeffs {
            out.add_term(*g, a.mul(c));
        }
        out
    }

    pub fn neg(&self) -> AlgebraElement {
        self.scale(&self.field.from_i64(-1))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient vector over all arrows, as a column matrix.
    pub fn to_column(&self, n_arrows: usize) -> Matrix {
        let mut m = Matrix::zero(n_arrows, 1, self.field);
        for (g, c) in &self.coeffs {
            m.set(*g, 0, c.clone());
        }
        m
    }
}

/// Convolution: bilinear extension of the rule that delta_g * delta_h
/// is delta of the composite when composable and zero otherwise.
pub fn convolve(
    gpd: &DiscreteGroupoid,
    f: &AlgebraElement,
    g: &AlgebraElement,
) -> Result<AlgebraElement> {
    if f.field != g.field {
        return Err(Error::FieldMismatch {
            expected: f.field.to_string(),
            found: g.field.to_string(),
        });
    }
    let mut out = AlgebraElement::zero(f.field);
    for (a, ca) in &f.coeffs {
        for (b, cb) in &g.coeffs {
            if let Some(ab) = gpd.compose(*a, *b) {
                out.add_term(ab, ca.mul(cb));
            }
        }
    }
    Ok(out)
}

/// The two-sided identity: the sum of the unit arrows.
pub fn algebra_unit(gpd: &DiscreteGroupoid, field: &FieldSpec) -> AlgebraElement {
    let mut out = AlgebraElement::zero(*field);
    for &u in &gpd.unit_arrow {
        out.add_term(u, field.one());
    }
    out
}

/// The underlying groupoid of an inverse semigroup: arrow i is element
/// i, units are the idempotents, composition is the semigroup product
/// on composable pairs.
pub fn underlying_groupoid(s: &InverseSemigroup) -> DiscreteGroupoid {
    let unit_of: HashMap<usize, usize> = s
        .idempotents
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let n = s.order;
    let dom: Vec<usize> = (0..n).map(|x| unit_of[&s.dom_idem(x)]).collect();
    let ran: Vec<usize> = (0..n).map(|x| unit_of[&s.ran_idem(x)]).collect();
    let inv = s.star.clone();
    let unit_arrow = s.idempotents.clone();
    let mut comp = HashMap::new();
    for g in 0..n {
        for h in 0..n {
            if s.dom_idem(g) == s.ran_idem(h) {
                comp.insert((g, h), s.product(g, h));
            }
        }
    }
    DiscreteGroupoid::new(
        s.idempotents.len(),
        dom,
        ran,
        inv,
        unit_arrow,
        comp,
        s.labels.clone(),
    )
    .expect("the underlying groupoid satisfies the axioms")
}

/// Conjugacy classes of isotropy arrows, transported across each orbit:
/// g ~ z g z^{-1} for every arrow z with dom(z) = dom(g).
fn isotropy_conjugacy_classes(gpd: &DiscreteGroupoid) -> Vec<Vec<usize>> {
    let iso: Vec<usize> = (0..gpd.n_arrows)
        .filter(|&g| gpd.dom[g] == gpd.ran[g])
        .collect();
    let mut assigned = vec![false; gpd.n_arrows];
    let mut classes = Vec::new();
    for &g0 in &iso {
        if assigned[g0] {
            continue;
        }
        let mut class = vec![g0];
        assigned[g0] = true;
        let mut i = 0;
        while i < class.len() {
            let g = class[i];
            for z in 0..gpd.n_arrows {
                if gpd.dom[z] != gpd.dom[g] {
                    continue;
                }
                let zg = gpd.compose(z, g).unwrap();
                let c = gpd.compose(zg, gpd.inv[z]).unwrap();
                if !assigned[c] {
                    assigned[c] = true;
                    class.push(c);
                }
            }
            i += 1;
        }
        class.sort();
        classes.push(class);
    }
    classes
}

/// Center basis as class-function indicators: one per conjugation orbit
/// of isotropy arrows. Cross-checked against the commutant-derived
/// center dimension, and each element is verified central.
pub fn center_basis(gpd: &DiscreteGroupoid, field: &FieldSpec) -> Vec<AlgebraElement> {
    let classes = isotropy_conjugacy_classes(gpd);
    let basis: Vec<AlgebraElement> = classes
        .iter()
        .map(|class| {
            let pairs: Vec<(usize, Scalar)> = class.iter().map(|&g| (g, field.one())).collect();
            AlgebraElement::from_pairs(*field, &pairs)
        })
        .collect();

    for b in &basis {
        for g in 0..gpd.n_arrows {
            let dg = AlgebraElement::delta(*field, g);
            let left = convolve(gpd, b, &dg).unwrap();
            let right = convolve(gpd, &dg, b).unwrap();
            assert_eq!(left, right, "class function is not central");
        }
    }
    assert_eq!(
        basis.len(),
        center_dimension_commutant(gpd, field),
        "class-function count disagrees with the commutant dimension"
    );
    basis
}

/// Center dimension via linear algebra alone: the nullspace dimension
/// of the system f * delta_g = delta_g * f over all arrows g.
pub fn center_dimension_commutant(gpd: &DiscreteGroupoid, field: &FieldSpec) -> usize {
    let n = gpd.n_arrows;
    // unknowns: coefficients f_h; one equation row per (g, output arrow)
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for g in 0..n {
        let mut eq: BTreeMap<usize, Vec<Scalar>> = BTreeMap::new();
        for h in 0..n {
            if let Some(hg) = gpd.compose(h, g) {
                let row = eq.entry(hg).or_insert_with(|| vec![field.zero(); n]);
                row[h] = row[h].add(&field.one());
            }
            if let Some(gh) = gpd.compose(g, h) {
                let row = eq.entry(gh).or_insert_with(|| vec![field.zero(); n]);
                row[h] = row[h].sub(&field.one());
            }
        }
        for (_, row) in eq {
            if row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return n;
    }
    let flat: Vec<Scalar> = rows.iter().flatten().cloned().collect();
    let m = Matrix::new(rows.len(), n, *field, flat).unwrap();
    n - m.rank()
}

/// All slices of the groupoid: arrow subsets on which dom and ran are
/// both injective, as sorted index vectors in lexicographic order.
pub fn enumerate_slices(gpd: &DiscreteGroupoid, cap: usize) -> Result<Vec<Vec<usize>>> {
    if gpd.n_arrows > cap {
        return Err(Error::SliceCapExceeded {
            cap,
            arrows: gpd.n_arrows,
        });
    }
    let mut slices = BTreeSet::new();
    for mask in 0u64..(1 << gpd.n_arrows) {
        let subset: Vec<usize> = (0..gpd.n_arrows).filter(|&g| mask >> g & 1 == 1).collect();
        let doms: BTreeSet<usize> = subset.iter().map(|&g| gpd.dom[g]).collect();
        let rans: BTreeSet<usize> = subset.iter().map(|&g| gpd.ran[g]).collect();
        if doms.len() == subset.len() && rans.len() == subset.len() {
            slices.insert(subset);
        }
    }
    Ok(slices.into_iter().collect())
}

/// The inverse semigroup of slices under setwise product, together
/// with the slice list indexing its elements.
pub fn slice_semigroup(
    gpd: &DiscreteGroupoid,
    cap: usize,
) -> Result<(InverseSemigroup, Vec<Vec<usize>>)> {
    let slices = enumerate_slices(gpd, cap)?;
    let pos: HashMap<&Vec<usize>, usize> = slices.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let product = |u: &[usize], v: &[usize]| -> Vec<usize> {
        let mut out = BTreeSet::new();
        for &g in u {
            for &h in v {
                if let Some(gh) = gpd.compose(g, h) {
                    out.insert(gh);
                }
            }
        }
        out.into_iter().collect()
    };
    let n = slices.len();
    let table: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| pos[&product(&slices[i], &slices[j])])
                .collect()
        })
        .collect();
    let star: Vec<usize> = (0..n)
        .map(|i| {
            let mut inv: Vec<usize> = slices[i].iter().map(|&g| gpd.inv[g]).collect();
            inv.sort();
            pos[&inv]
        })
        .collect();
    let opts = BuildOptions {
        assoc_exhaustive_bound: n.max(1),
        ..Default::default()
    };
    let sg = InverseSemigroup::from_table(table, Some(star), &opts)?;
    Ok((sg, slices))
}

/// Verifies the presentation of the convolution algebra as the slice
/// semigroup algebra modulo the ideal generated by the relations
/// U + V - (U union V) for disjoint unit subsets: the quotient
/// dimension must equal the arrow count.
pub fn presentation_check(gpd: &DiscreteGroupoid, field: &FieldSpec, cap: usize) -> Result<bool> {
    let (sg, slices) = slice_semigroup(gpd, cap)?;
    let n = slices.len();
    let pos: HashMap<&Vec<usize>, usize> = slices.iter().enumerate().map(|(i, s)| (s, i)).collect();

    // relators: for disjoint unit subsets U, V the element
    // delta_U + delta_V - delta_{U union V}; V = empty kills the empty slice
    let units = gpd.unit_arrow.clone();
    let u_count = units.len();
    let mut relators: Vec<Vec<Scalar>> = Vec::new();
    for mu in 0u64..(1 << u_count) {
        for mv in 0u64..(1 << u_count) {
            if mu & mv != 0 {
                continue;
            }
            let pick = |mask: u64| -> Vec<usize> {
                let mut s: Vec<usize> = (0..u_count)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| units[i])
                    .collect();
                s.sort();
                s
            };
            let (u, v) = (pick(mu), pick(mv));
            let mut w: Vec<usize> = u.iter().chain(v.iter()).copied().collect();
            w.sort();
            let mut row = vec![field.zero(); n];
            row[pos[&u]] = row[pos[&u]].add(&field.one());
            row[pos[&v]] = row[pos[&v]].add(&field.one());
            row[pos[&w]] = row[pos[&w]].sub(&field.one());
            if row.iter().any(|c| !c.is_zero()) {
                relators.push(row);
            }
        }
    }

    // two-sided ideal: span of a . r . b over all slice basis elements
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for r in &relators {
        for a in 0..n {
            for b in 0..n {
                let mut row = vec![field.zero(); n];
                for (i, c) in r.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let arb = sg.product(sg.product(a, i), b);
                    row[arb] = row[arb].add(c);
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let ideal_rank = if rows.is_empty() {
        0
    } else {
        let flat: Vec<Scalar> = rows.iter().flatten().cloned().collect();
        Matrix::new(rows.len(), n, *field, flat).unwrap().rank()
    };
    Ok(n - ideal_rank == gpd.n_arrows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn f5() -> FieldSpec {
        FieldSpec::Prime(5)
    }

    /// Discrete groupoid on n points: only identity arrows.
    pub fn discrete_space(n: usize) -> DiscreteGroupoid {
        let comp = (0..n).map(|i| ((i, i), i)).collect();
        DiscreteGroupoid::new(
            n,
            (0..n).collect(),
            (0..n).collect(),
            (0..n).collect(),
            (0..n).collect(),
            comp,
            (0..n).map(|i| format!("x{i}")).collect(),
        )
        .unwrap()
    }

    #[test]
    fn underlying_groupoid_of_i2() {
        let s = samples::symmetric_inverse_monoid(2);
        let g = underlying_groupoid(&s);
        assert_eq!(g.n_arrows, 7);
        assert_eq!(g.n_units, 4);
    }

    #[test]
    fn underlying_groupoid_of_b2() {
        let s = samples::brandt_b2();
        let g = underlying_groupoid(&s);
        assert_eq!(g.n_arrows, 5);
        assert_eq!(g.n_units, 3);
        // the two non-unit arrows are mutually inverse
        let non_units: Vec<usize> = (0..5).filter(|&a| !g.is_unit_arrow(a)).collect();
        assert_eq!(non_units, vec![3, 4]);
        assert_eq!(g.inv[3], 4);
        assert_eq!(g.inv[4], 3);
    }

    #[test]
    fn semilattice_groupoid_has_only_identities() {
        let s = samples::chain_semilattice(3);
        let g = underlying_groupoid(&s);
        assert!((0..g.n_arrows).all(|a| g.is_unit_arrow(a)));
    }

    #[test]
    fn convolution_basis_rules_in_b2() {
        let s = samples::brandt_b2();
        let g = underlying_groupoid(&s);
        // delta_{e12} * delta_{e21} = delta_{e11}
        let e12 = AlgebraElement::delta(f5(), 3);
        let e21 = AlgebraElement::delta(f5(), 4);
        assert_eq!(
            convolve(&g, &e12, &e21).unwrap(),
            AlgebraElement::delta(f5(), 1)
        );
        // delta_{e12} * delta_{e12} = 0 (not composable)
        assert!(convolve(&g, &e12, &e12).unwrap().is_zero());
    }

    #[test]
    fn convolution_rejects_field_mismatch() {
        let g = discrete_space(1);
        let a = AlgebraElement::delta(f5(), 0);
        let b = AlgebraElement::delta(FieldSpec::Rational, 0);
        assert!(matches!(
            convolve(&g, &a, &b),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn unit_is_two_sided_identity_on_i2() {
        let s = samples::symmetric_inverse_monoid(2);
        let g = underlying_groupoid(&s);
        let u = algebra_unit(&g, &f5());
        assert_eq!(u.coeffs.len(), 4);
        for a in 0..g.n_arrows {
            let d = AlgebraElement::delta(f5(), a);
            assert_eq!(convolve(&g, &u, &d).unwrap(), d);
            assert_eq!(convolve(&g, &d, &u).unwrap(), d);
        }
    }

    #[test]
    fn convolution_associative_on_b2() {
        let s = samples::brandt_b2();
        let g = underlying_groupoid(&s);
        for a in 0..5 {
            for b in 0..5 {
                for c in 0..5 {
                    let (da, db, dc) = (
                        AlgebraElement::delta(f5(), a),
                        AlgebraElement::delta(f5(), b),
                        AlgebraElement::delta(f5(), c),
                    );
                    let l = convolve(&g, &convolve(&g, &da, &db).unwrap(), &dc).unwrap();
                    let r = convolve(&g, &da, &convolve(&g, &db, &dc).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn center_of_i2_over_f5_has_dimension_4() {
        let s = samples::symmetric_inverse_monoid(2);
        let g = underlying_groupoid(&s);
        assert_eq!(center_basis(&g, &f5()).len(), 4);
    }

    #[test]
    fn center_of_group_case_counts_conjugacy_classes() {
        // one unit, arrows = S3 realized as the top D-class of I3 is
        // overkill here; use the cyclic group C3 as a groupoid instead
        let n = 3;
        let mut comp = HashMap::new();
        for i in 0..n {
            for j in 0..n {
                comp.insert((i, j), (i + j) % n);
            }
        }
        let g = DiscreteGroupoid::new(
            1,
            vec![0; n],
            vec![0; n],
            (0..n).map(|i| (n - i) % n).collect(),
            vec![0],
            comp,
            (0..n).map(|i| format!("g{i}")).collect(),
        )
        .unwrap();
        assert_eq!(center_basis(&g, &FieldSpec::Prime(7)).len(), 3);
    }

    #[test]
    fn slice_count_of_one_arrow_groupoid() {
        let g = discrete_space(1);
        let slices = enumerate_slices(&g, 6).unwrap();
        assert_eq!(slices.len(), 2);
    }

    #[test]
    fn slice_semigroup_of_b2_is_inverse() {
        let s = samples::brandt_b2();
        let g = underlying_groupoid(&s);
        let (sg, slices) = slice_semigroup(&g, 6).unwrap();
        assert_eq!(sg.order, slices.len());
        // the full unit set is the identity slice
        let id = slices.iter().position(|sl| *sl == vec![0, 1, 2]).unwrap();
        for x in 0..sg.order {
            assert_eq!(sg.product(id, x), x);
            assert_eq!(sg.product(x, id), x);
        }
    }

    #[test]
    fn slice_cap_errors() {
        let s = samples::symmetric_inverse_monoid(2);
        let g = underlying_groupoid(&s);
        match enumerate_slices(&g, 6) {
            Err(Error::SliceCapExceeded { cap: 6, arrows: 7 }) => {}
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn presentation_one_arrow() {
        let g = discrete_space(1);
        assert!(presentation_check(&g, &f5(), 6).unwrap());
    }

    #[test]
    fn presentation_two_point_space() {
        let g = discrete_space(2);
        let slices = enumerate_slices(&g, 6).unwrap();
        assert_eq!(slices.len(), 4);
        assert!(presentation_check(&g, &f5(), 6).unwrap());
    }

    #[test]
    fn presentation_b2() {
        let s = samples::brandt_b2();
        let g = underlying_groupoid(&s);
        assert!(presentation_check(&g, &f5(), 6).unwrap());
    }
}
