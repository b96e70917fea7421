//! Finite inverse semigroups: construction from generators or tables,
//! involution, natural partial order, D-classes, maximal subgroups.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::germs::FiniteAction;
use crate::poset::FinitePoset;

/// Partial injective map on `{0..degree-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialBijection {
    pub degree: usize,
    /// `images[x] = Some(y)` when the map sends x to y.
    images: Vec<Option<usize>>,
}

impl PartialBijection {
    pub fn new(degree: usize, images: Vec<Option<usize>>) -> Result<Self> {
        if images.len() != degree {
            return Err(Error::InvalidInput(
                "image vector length must equal degree".into(),
            ));
        }
        let mut seen = vec![false; degree];
        for y in images.iter().flatten() {
            if *y >= degree {
                return Err(Error::InvalidInput(format!("image {y} out of range")));
            }
            if seen[*y] {
                return Err(Error::InvalidInput("mapping is not injective".into()));
            }
            seen[*y] = true;
        }
        Ok(PartialBijection { degree, images })
    }

    pub fn from_pairs(degree: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut images = vec![None; degree];
        for &(x, y) in pairs {
            if x >= degree {
                return Err(Error::InvalidInput(format!("point {x} out of range")));
            }
            if images[x].is_some() {
                return Err(Error::InvalidInput(format!("point {x} mapped twice")));
            }
            images[x] = Some(y);
        }
        PartialBijection::new(degree, images)
    }

    pub fn identity(degree: usize) -> Self {
        PartialBijection {
            degree,
            images: (0..degree).map(Some).collect(),
        }
    }

    pub fn empty(degree: usize) -> Self {
        PartialBijection {
            degree,
            images: vec![None; degree],
        }
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.images.get(x).copied().flatten()
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &PartialBijection) -> PartialBijection {
        assert_eq!(self.degree, other.degree);
        let images = (0..self.degree)
            .map(|x| other.apply(x).and_then(|y| self.apply(y)))
            .collect();
        PartialBijection {
            degree: self.degree,
            images,
        }
    }

    pub fn inverse(&self) -> PartialBijection {
        let mut images = vec![None; self.degree];
        for (x, y) in self.images.iter().enumerate() {
            if let Some(y) = y {
                images[*y] = Some(x);
            }
        }
        PartialBijection {
            degree: self.degree,
            images,
        }
    }

    pub fn domain(&self) -> Vec<usize> {
        (0..self.degree)
            .filter(|&x| self.images[x].is_some())
            .collect()
    }

    /// Canonical serialization key: (sorted domain, image sequence).
    pub fn sort_key(&self) -> (Vec<usize>, Vec<usize>) {
        let dom = self.domain();
        let imgs = dom.iter().map(|&x| self.images[x].unwrap()).collect();
        (dom, imgs)
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.domain()
            .into_iter()
            .map(|x| (x, self.images[x].unwrap()))
            .collect()
    }
}

impl std::fmt::Display for PartialBijection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let pairs: Vec<String> = self
            .pairs()
            .iter()
            .map(|(x, y)| format!("{x}->{y}"))
            .collect();
        write!(f, "[{}]", pairs.join(","))
    }
}

/// How associativity was verified at construction time.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum AssocCheck {
    Exhaustive,
    Sampled { triples: usize, seed: u64 },
}

/// A finite inverse semigroup with precomputed table, involution and
/// idempotent data. Elements are dense indices `0..order`.
#[derive(Debug, Clone)]
pub struct InverseSemigroup {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub star: Vec<usize>,
    pub idempotents: Vec<usize>,
    pub labels: Vec<String>,
    pub partial_bijections: Option<Vec<PartialBijection>>,
    pub assoc_check: AssocCheck,
}

/// Construction knobs for closure and table verification.
#[derive(Debug, Clone)]
pub struct BuildOptions {
    /// Abort closure when this many elements have been discovered.
    pub element_cap: usize,
    /// Exhaustive associativity checking up to this order; sampled above.
    pub assoc_exhaustive_bound: usize,
    /// Seed for sampled associativity checking.
    pub seed: u64,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            element_cap: 20_000,
            assoc_exhaustive_bound: 256,
            seed: 0,
        }
    }
}

fn check_associativity(table: &[Vec<usize>], opts: &BuildOptions) -> Result<AssocCheck> {
    let n = table.len();
    let prod = |a: usize, b: usize| table[a][b];
    if n <= opts.assoc_exhaustive_bound {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if prod(prod(i, j), k) != prod(i, prod(j, k)) {
                        return Err(Error::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(AssocCheck::Exhaustive)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let triples = 10 * n * n;
        for _ in 0..triples {
            let (i, j, k) = (
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
            );
            if prod(prod(i, j), k) != prod(i, prod(j, k)) {
                return Err(Error::NotAssociative { i, j, k });
            }
        }
        Ok(AssocCheck::Sampled {
            triples,
            seed: opts.seed,
        })
    }
}

impl InverseSemigroup {
    /// Closure of a generating set of partial bijections (and their
    /// inverses) under composition. Element order is breadth-first
    /// discovery order with lexicographic tie-break on (domain, images).
    pub fn closure(generators: &[PartialBijection], opts: &BuildOptions) -> Result<Self> {
        let Some(first) = generators.first() else {
            return Err(Error::InvalidInput(
                "at least one generator required".into(),
            ));
        };
        let degree = first.degree;
        if generators.iter().any(|g| g.degree != degree) {
            return Err(Error::InvalidInput(
                "generators must share one degree".into(),
            ));
        }

        let mut seed: BTreeMap<(Vec<usize>, Vec<usize>), PartialBijection> = BTreeMap::new();
        for g in generators {
            seed.insert(g.sort_key(), g.clone());
            let inv = g.inverse();
            seed.insert(inv.sort_key(), inv);
        }

        let mut elems: Vec<PartialBijection> = Vec::new();
        let mut index: HashMap<PartialBijection, usize> = HashMap::new();
        let mut frontier: Vec<usize> = Vec::new();
        for (_, g) in seed {
            index.insert(g.clone(), elems.len());
            frontier.push(elems.len());
            elems.push(g);
        }

        while !frontier.is_empty() {
            let mut fresh: BTreeMap<(Vec<usize>, Vec<usize>), PartialBijection> = BTreeMap::new();
            for a in 0..elems.len() {
                for &b in &frontier {
                    for p in [elems[a].compose(&elems[b]), elems[b].compose(&elems[a])] {
                        if !index.contains_key(&p) {
                            fresh.insert(p.sort_key(), p);
                        }
                    }
                }
            }
            frontier.clear();
            for (_, p) in fresh {
                if elems.len() >= opts.element_cap {
                    return Err(Error::ClosureCapExceeded {
                        cap: opts.element_cap,
                    });
                }
                index.insert(p.clone(), elems.len());
                frontier.push(elems.len());
                elems.push(p);
            }
        }

        let n = elems.len();
        let table: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| index[&elems[i].compose(&elems[j])])
                    .collect()
            })
            .collect();
        let star: Vec<usize> = (0..n).map(|i| index[&elems[i].inverse()]).collect();
        let labels = elems.iter().map(|p| p.to_string()).collect();

        let assoc_check = check_associativity(&table, opts)?;
        let s = InverseSemigroup {
            order: n,
            table,
            star,
            idempotents: Vec::new(),
            labels,
            partial_bijections: Some(elems),
            assoc_check,
        };
        s.finish(opts)
    }

    /// Builds and verifies a semigroup from a raw multiplication table.
    /// When `star` is absent it is recovered as the unique generalized
    /// inverse of each element.
    pub fn from_table(
        table: Vec<Vec<usize>>,
        star: Option<Vec<usize>>,
        opts: &BuildOptions,
    ) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidInput("empty table".into()));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(Error::InvalidInput(
                    "table is not square over valid indices".into(),
                ));
            }
        }
        let assoc_check = check_associativity(&table, opts)?;

        let prod = |a: usize, b: usize| table[a][b];
        let star = match star {
            Some(st) => {
                if st.len() != n || st.iter().any(|&x| x >= n) {
                    return Err(Error::InvalidInput("star vector invalid".into()));
                }
                for s in 0..n {
                    let t = st[s];
                    if prod(prod(s, t), s) != s || prod(prod(t, s), t) != t {
                        return Err(Error::BadStar(s));
                    }
                }
                st
            }
            None => {
                let mut st = vec![0usize; n];
                for s in 0..n {
                    let mut found = None;
                    for t in 0..n {
                        if prod(prod(s, t), s) == s && prod(prod(t, s), t) == t {
                            if let Some(prev) = found {
                                return Err(Error::InverseNotUnique {
                                    elem: s,
                                    a: prev,
                                    b: t,
                                });
                            }
                            found = Some(t);
                        }
                    }
                    st[s] = found.ok_or(Error::NotRegular(s))?;
                }
                st
            }
        };

        // uniqueness of generalized inverses (equivalently: idempotents commute)
        for s in 0..n {
            for t in 0..n {
                if t != star[s] && prod(prod(s, t), s) == s && prod(prod(t, s), t) == t {
                    return Err(Error::InverseNotUnique {
                        elem: s,
                        a: star[s],
                        b: t,
                    });
                }
            }
        }

        let labels = (0..n).map(|i| format!("s{i}")).collect();
        let s = InverseSemigroup {
            order: n,
            table,
            star,
            idempotents: Vec::new(),
            labels,
            partial_bijections: None,
            assoc_check,
        };
        s.finish(opts)
    }

    fn finish(mut self, _opts: &BuildOptions) -> Result<Self> {
        self.idempotents = (0..self.order).filter(|&e| self.table[e][e] == e).collect();
        // idempotents commute pairwise (the inverse-semigroup criterion)
        for &e in &self.idempotents {
            for &f in &self.idempotents {
                if self.table[e][f] != self.table[f][e] {
                    return Err(Error::InverseNotUnique {
                        elem: e,
                        a: f,
                        b: self.table[e][f],
                    });
                }
            }
        }
        Ok(self)
    }

    #[inline]
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    #[inline]
    pub fn star_of(&self, a: usize) -> usize {
        self.star[a]
    }

    pub fn is_idempotent(&self, e: usize) -> bool {
        self.table[e][e] == e
    }

    /// `s* s` — the domain idempotent.
    pub fn dom_idem(&self, s: usize) -> usize {
        self.product(self.star[s], s)
    }

    /// `s s*` — the range idempotent.
    pub fn ran_idem(&self, s: usize) -> usize {
        self.product(s, self.star[s])
    }

    /// Natural partial order: `s <= t` iff `s = t s* s`.
    pub fn natural_leq(&self, s: usize, t: usize) -> bool {
        self.product(t, self.dom_idem(s)) == s
    }

    /// Principal downset of `s` in the natural order, ascending indices.
    pub fn down_set(&self, s: usize) -> Vec<usize> {
        (0..self.order)
            .filter(|&t| self.natural_leq(t, s))
            .collect()
    }

    /// The natural partial order on all elements as a poset.
    pub fn natural_order_poset(&self) -> FinitePoset {
        let n = self.order;
        let mut leq = vec![vec![false; n]; n];
        for s in 0..n {
            for t in 0..n {
                leq[s][t] = self.natural_leq(s, t);
            }
        }
        FinitePoset::new(leq).expect("natural order is a partial order")
    }

    /// Idempotent order restricted to `idempotents` (e <= f iff ef = e).
    pub fn idempotent_leq(&self, e: usize, f: usize) -> bool {
        self.table[e][f] == e
    }

    /// Meet of two idempotents (their product).
    pub fn idempotent_meet(&self, e: usize, f: usize) -> usize {
        self.table[e][f]
    }

    /// D-class partition of the idempotents with witnesses and maximal subgroups.
    pub fn d_classes(&self) -> DClassData {
        let mut class_of: HashMap<usize, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();

        // e D f iff some s has s*s = e, ss* = f; union over all elements
        let mut parent: HashMap<usize, usize> = self.idempotents.iter().map(|&e| (e, e)).collect();
        fn find(parent: &mut HashMap<usize, usize>, x: usize) -> usize {
            let p = parent[&x];
            if p == x {
                x
            } else {
                let r = find(parent, p);
                parent.insert(x, r);
                r
            }
        }
        for s in 0..self.order {
            let e = self.dom_idem(s);
            let f = self.ran_idem(s);
            let (re, rf) = (find(&mut parent, e), find(&mut parent, f));
            if re != rf {
                let lo = re.min(rf);
                let hi = re.max(rf);
                parent.insert(hi, lo);
            }
        }
        for &e in &self.idempotents {
            let root = find(&mut parent, e);
            let idx = *class_of.entry(root).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[idx].push(e);
        }

        let mut out = Vec::new();
        for members in classes {
            let rep = members[0]; // lowest index: idempotents scanned ascending
            let mut witnesses = Vec::new();
            for &f in &members {
                // lowest-index s with s*s = rep, ss* = f
                let s = (0..self.order)
                    .find(|&s| self.dom_idem(s) == rep && self.ran_idem(s) == f)
                    .expect("D-equivalent idempotents have a witness");
                witnesses.push((f, s));
            }
            let group = self.maximal_subgroup(rep);
            out.push(DClass {
                rep,
                idempotents: members,
                witnesses,
                group,
            });
        }
        DClassData { classes: out }
    }

    /// Maximal subgroup at an idempotent: `{s : ss* = e = s*s}`.
    pub fn maximal_subgroup(&self, e: usize) -> SubGroup {
        assert!(self.is_idempotent(e));
        let elements: Vec<usize> = (0..self.order)
            .filter(|&s| self.dom_idem(s) == e && self.ran_idem(s) == e)
            .collect();
        let pos: HashMap<usize, usize> =
            elements.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let table = elements
            .iter()
            .map(|&a| elements.iter().map(|&b| pos[&self.product(a, b)]).collect())
            .collect();
        let identity = pos[&e];
        SubGroup {
            elements,
            table,
            identity,
        }
    }

    /// The Munn action: `s` acts on `{e : e <= s*s}` by `e -> s e s*`.
    pub fn munn_action(&self) -> FiniteAction {
        let idems = self.idempotents.clone();
        let pos: HashMap<usize, usize> = idems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let maps = (0..self.order)
            .map(|s| {
                let dom = self.dom_idem(s);
                idems
                    .iter()
                    .map(|&e| {
                        if self.idempotent_leq(e, dom) {
                            let img = self.product(self.product(s, e), self.star[s]);
                            Some(pos[&img])
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect();
        FiniteAction::new(self.clone(), idems.len(), maps).expect("Munn action is valid")
    }

    /// Coarse isomorphism profile for closure-order independence checks:
    /// (order, idempotent count, sorted multiset of (class size, group order)).
    pub fn profile(&self) -> (usize, usize, Vec<(usize, usize)>) {
        let mut classes: Vec<(usize, usize)> = self
            .d_classes()
            .classes
            .iter()
            .map(|c| (c.idempotents.len(), c.group.elements.len()))
            .collect();
        classes.sort();
        (self.order, self.idempotents.len(), classes)
    }
}

/// A group sitting inside a semigroup, with its induced table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubGroup {
    /// Semigroup element indices, ascending.
    pub elements: Vec<usize>,
    /// Product table in local indices.
    pub table: Vec<Vec<usize>>,
    /// Local index of the identity.
    pub identity: usize,
}

impl SubGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.table[a][b] == self.identity && self.table[b][a] == self.identity)
            .expect("group element has an inverse")
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.table[x][a];
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// A generator of the whole group if it is cyclic.
    pub fn cyclic_generator(&self) -> Option<usize> {
        (0..self.order()).find(|&g| self.element_order(g) == self.order())
    }
}

#[derive(Debug, Clone)]
pub struct DClass {
    /// Chosen representative idempotent (lowest index).
    pub rep: usize,
    /// All idempotents in the class, ascending.
    pub idempotents: Vec<usize>,
    /// Per idempotent `f`, a witness `s` with `s*s = rep`, `ss* = f`.
    pub witnesses: Vec<(usize, usize)>,
    /// Maximal subgroup at the representative.
    pub group: SubGroup,
}

#[derive(Debug, Clone)]
pub struct DClassData {
    pub classes: Vec<DClass>,
}

/// Generates a pseudorandom 2-generated closure for stress corpora.
/// Retries with fresh generators until the closure fits under `max_order`.
pub fn random_closure(seed: u64, degree: usize, max_order: usize) -> InverseSemigroup {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut gens = Vec::new();
        for _ in 0..2 {
            let mut images = vec![None; degree];
            let mut used = vec![false; degree];
            for x in 0..degree {
                if rng.gen_bool(0.7) {
                    let free: Vec<usize> = (0..degree).filter(|&y| !used[y]).collect();
                    if free.is_empty() {
                        continue;
                    }
                    let y = free[rng.gen_range(0..free.len())];
                    images[x] = Some(y);
                    used[y] = true;
                }
            }
            gens.push(PartialBijection::new(degree, images).unwrap());
        }
        let opts = BuildOptions {
            element_cap: max_order,
            ..Default::default()
        };
        if let Ok(s) = InverseSemigroup::closure(&gens, &opts) {
            if s.order <= max_order {
                return s;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn closure_of_identity_is_trivial() {
        let id = PartialBijection::identity(2);
        let s = InverseSemigroup::closure(&[id], &BuildOptions::default()).unwrap();
        assert_eq!(s.order, 1);
    }

    #[test]
    fn closure_i2_has_order_7() {
        let s = samples::symmetric_inverse_monoid(2);
        assert_eq!(s.order, 7);
        assert_eq!(s.idempotents.len(), 4);
    }

    #[test]
    fn closure_i3_has_order_34() {
        let s = samples::symmetric_inverse_monoid(3);
        assert_eq!(s.order, 34);
        assert_eq!(s.idempotents.len(), 8);
    }

    #[test]
    fn closure_cap_errors() {
        let gens = samples::i_n_generators(3);
        let opts = BuildOptions {
            element_cap: 10,
            ..Default::default()
        };
        match InverseSemigroup::closure(&gens, &opts) {
            Err(Error::ClosureCapExceeded { cap }) => assert_eq!(cap, 10),
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn brandt_b2_from_table() {
        let s = samples::brandt_b2();
        assert_eq!(s.order, 5);
        // star swaps the two non-idempotent matrix units
        let e12 = 3;
        let e21 = 4;
        assert_eq!(s.star_of(e12), e21);
        assert_eq!(s.star_of(e21), e12);
    }

    #[test]
    fn from_table_rejects_non_associative() {
        // a 2-element "table" with a(ab)=(aa)b broken
        let table = vec![vec![1, 0], vec![0, 0]];
        match InverseSemigroup::from_table(table, None, &BuildOptions::default()) {
            Err(Error::NotAssociative { .. }) => {}
            other => panic!("expected associativity error, got {other:?}"),
        }
    }

    #[test]
    fn from_table_rejects_noncommuting_idempotents() {
        // left-zero semigroup of order 2: xy = x; every element idempotent,
        // every pair (s, t) satisfies sts = s, so inverses are not unique
        let table = vec![vec![0, 0], vec![1, 1]];
        match InverseSemigroup::from_table(table, None, &BuildOptions::default()) {
            Err(Error::InverseNotUnique { .. }) => {}
            other => panic!("expected inverse uniqueness error, got {other:?}"),
        }
    }

    #[test]
    fn chain_semilattice_star_is_identity() {
        let s = samples::chain_semilattice(3);
        assert_eq!(s.order, 3);
        for e in 0..3 {
            assert_eq!(s.star_of(e), e);
        }
    }

    #[test]
    fn natural_order_basics() {
        let s = samples::symmetric_inverse_monoid(2);
        for x in 0..s.order {
            assert!(s.natural_leq(x, x));
        }
        let empty = (0..s.order)
            .find(|&x| {
                s.partial_bijections.as_ref().unwrap()[x]
                    .domain()
                    .is_empty()
            })
            .unwrap();
        let id = (0..s.order)
            .find(|&x| s.partial_bijections.as_ref().unwrap()[x] == PartialBijection::identity(2))
            .unwrap();
        let transpose = (0..s.order)
            .find(|&x| {
                let p = &s.partial_bijections.as_ref().unwrap()[x];
                p.domain().len() == 2 && p.apply(0) == Some(1)
            })
            .unwrap();
        assert!(s.natural_leq(empty, id));
        assert!(!s.natural_leq(transpose, id));
        assert!(!s.natural_leq(id, transpose));
    }

    #[test]
    fn d_classes_of_i2() {
        let s = samples::symmetric_inverse_monoid(2);
        let dc = s.d_classes();
        let mut sizes: Vec<(usize, usize)> = dc
            .classes
            .iter()
            .map(|c| (c.idempotents.len(), c.group.order()))
            .collect();
        sizes.sort();
        assert_eq!(sizes, vec![(1, 1), (1, 2), (2, 1)]);
        for c in &dc.classes {
            for &(f, w) in &c.witnesses {
                assert_eq!(s.dom_idem(w), c.rep);
                assert_eq!(s.ran_idem(w), f);
            }
        }
    }

    #[test]
    fn d_classes_of_b2() {
        let s = samples::brandt_b2();
        let dc = s.d_classes();
        let mut sizes: Vec<usize> = dc.classes.iter().map(|c| c.idempotents.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2]);
        assert!(dc.classes.iter().all(|c| c.group.order() == 1));
    }

    #[test]
    fn semilattice_d_classes_are_singletons() {
        let s = samples::chain_semilattice(4);
        let dc = s.d_classes();
        assert_eq!(dc.classes.len(), 4);
        assert!(dc
            .classes
            .iter()
            .all(|c| c.idempotents.len() == 1 && c.group.order() == 1));
    }

    #[test]
    fn star_antiautomorphism() {
        let s = samples::symmetric_inverse_monoid(2);
        for a in 0..s.order {
            assert_eq!(s.star_of(s.star_of(a)), a);
            for b in 0..s.order {
                assert_eq!(
                    s.star_of(s.product(a, b)),
                    s.product(s.star_of(b), s.star_of(a))
                );
            }
        }
    }

    #[test]
    fn munn_action_moves_rank_one_idempotents() {
        let s = samples::symmetric_inverse_monoid(2);
        let act = s.munn_action();
        let pb = s.partial_bijections.as_ref().unwrap();
        let transpose = (0..s.order)
            .find(|&x| pb[x].domain().len() == 2 && pb[x].apply(0) == Some(1))
            .unwrap();
        let e0 = (0..s.order)
            .find(|&x| pb[x].pairs() == vec![(0, 0)])
            .unwrap();
        let e1 = (0..s.order)
            .find(|&x| pb[x].pairs() == vec![(1, 1)])
            .unwrap();
        let i0 = s.idempotents.iter().position(|&e| e == e0).unwrap();
        let i1 = s.idempotents.iter().position(|&e| e == e1).unwrap();
        assert_eq!(act.apply(transpose, i0), Some(i1));
    }

    #[test]
    fn closure_generator_order_invariance() {
        let gens = samples::i_n_generators(3);
        let mut rev = gens.clone();
        rev.reverse();
        let a = InverseSemigroup::closure(&gens, &BuildOptions::default()).unwrap();
        let b = InverseSemigroup::closure(&rev, &BuildOptions::default()).unwrap();
        assert_eq!(a.profile(), b.profile());
    }
}
