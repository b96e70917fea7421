//! Representation theory over finite groupoids: Schützenberger-style
//! L-class structures, induction and restriction, spinning-based
//! simplicity tests, isomorphism testing with certificates, and the
//! classification of irreducible representations of inverse semigroup
//! algebras.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::groupoid::{underlying_groupoid, DiscreteGroupoid};
use crate::matrix::{kron, Matrix};
use crate::semigroup::{InverseSemigroup, SubGroup};

/// Number of pseudorandom probe vectors added to the standard basis
/// when spinning for simplicity.
const SPIN_PROBES: usize = 8;
/// Number of pseudorandom combinations tried when searching for an
/// invertible intertwiner.
const ISO_TRIES: usize = 64;

fn random_scalar<R: Rng>(field: &FieldSpec, rng: &mut R) -> Scalar {
    match field {
        FieldSpec::Prime(p) => field.from_i64(rng.gen_range(0..*p) as i64),
        FieldSpec::Rational => field.from_i64(rng.gen_range(-5..=5)),
    }
}

/// A representation of a finite group: one invertible matrix per group
/// element (local indices of the SubGroup).
#[derive(Debug, Clone)]
pub struct GroupRep {
    pub group: SubGroup,
    pub dim: usize,
    pub matrices: Vec<Matrix>,
    pub field: FieldSpec,
}

impl GroupRep {
    pub fn new(group: SubGroup, matrices: Vec<Matrix>, field: FieldSpec) -> Result<Self> {
        let m = group.order();
        if matrices.len() != m {
            return Err(Error::DimensionMismatch(
                "one matrix per group element required".into(),
            ));
        }
        let dim = matrices[0].rows;
        for mat in &matrices {
            if mat.rows != dim || mat.cols != dim || mat.field != field {
                return Err(Error::DimensionMismatch(
                    "representation matrices must be square over one field".into(),
                ));
            }
        }
        if matrices[group.identity] != Matrix::identity(dim, field) {
            return Err(Error::InvalidInput(
                "group identity must act as the identity matrix".into(),
            ));
        }
        for a in 0..m {
            for b in 0..m {
                if matrices[a].mul(&matrices[b]) != matrices[group.product(a, b)] {
                    return Err(Error::InvalidInput(format!(
                        "representation is not multiplicative at group pair ({a},{b})"
                    )));
                }
            }
        }
        Ok(GroupRep {
            group,
            dim,
            matrices,
            field,
        })
    }

    pub fn trivial(group: SubGroup, field: FieldSpec) -> Self {
        let matrices = (0..group.order())
            .map(|_| Matrix::identity(1, field))
            .collect();
        GroupRep::new(group, matrices, field).expect("trivial representation is valid")
    }
}

/// A module over the convolution algebra of a groupoid: one matrix per
/// arrow, composable products multiplying and non-composable products
/// vanishing, with the unit arrows summing to the identity.
#[derive(Debug, Clone)]
pub struct GroupoidModule {
    pub dim: usize,
    pub field: FieldSpec,
    pub act: Vec<Matrix>,
    pub basis_labels: Vec<String>,
}

impl GroupoidModule {
    pub fn new(
        gpd: &DiscreteGroupoid,
        act: Vec<Matrix>,
        field: FieldSpec,
        basis_labels: Vec<String>,
    ) -> Result<Self> {
        let n = gpd.n_arrows;
        if act.len() != n {
            return Err(Error::DimensionMismatch(
                "one matrix per arrow required".into(),
            ));
        }
        let dim = act[0].rows;
        for m in &act {
            if m.rows != dim || m.cols != dim || m.field != field {
                return Err(Error::DimensionMismatch(
                    "module matrices must be square over one field".into(),
                ));
            }
        }
        let zero = Matrix::zero(dim, dim, field);
        for g in 0..n {
            for h in 0..n {
                let expect = match gpd.compose(g, h) {
                    Some(gh) => &act[gh],
                    None => &zero,
                };
                if act[g].mul(&act[h]) != *expect {
                    return Err(Error::NotHomomorphism(g, h));
                }
            }
        }
        let mut units = zero;
        for &u in &gpd.unit_arrow {
            units = units.add(&act[u]);
        }
        if units != Matrix::identity(dim, field) {
            return Err(Error::DegenerateModule);
        }
        Ok(GroupoidModule {
            dim,
            field,
            act,
            basis_labels,
        })
    }

    /// The left regular module: arrows act on the arrow basis by
    /// composition.
    pub fn regular(gpd: &DiscreteGroupoid, field: FieldSpec) -> Self {
        let n = gpd.n_arrows;
        let act = (0..n)
            .map(|g| {
                let mut m = Matrix::zero(n, n, field);
                for h in 0..n {
                    if let Some(gh) = gpd.compose(g, h) {
                        m.set(gh, h, field.one());
                    }
                }
                m
            })
            .collect();
        GroupoidModule::new(gpd, act, field, gpd.labels.clone())
            .expect("the regular module is well defined")
    }
}

/// The dom-fiber at a unit with its free right isotropy action, a
/// transversal, and the factorization of every fiber element.
#[derive(Debug, Clone)]
pub struct LClassStructure {
    pub x: usize,
    /// Arrows with domain x, ascending.
    pub l_arrows: Vec<usize>,
    /// Isotropy group at x, elements = arrow indices.
    pub group: SubGroup,
    /// One arrow per range fiber; the identity arrow represents x's fiber.
    pub transversal: Vec<usize>,
    /// Per element of `l_arrows`: (transversal position, local group index)
    /// with arrow = transversal[i] composed with group element.
    pub factorization: Vec<(usize, usize)>,
}

/// Computes the L-class structure at a unit. The transversal picks the
/// lowest arrow index in each range fiber, except that the identity
/// arrow always represents the fiber of x itself.
pub fn l_class(gpd: &DiscreteGroupoid, x: usize) -> LClassStructure {
    let l_arrows: Vec<usize> = (0..gpd.n_arrows).filter(|&g| gpd.dom[g] == x).collect();
    let iso: Vec<usize> = l_arrows
        .iter()
        .copied()
        .filter(|&g| gpd.ran[g] == x)
        .collect();
    let iso_pos: HashMap<usize, usize> = iso.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    let table: Vec<Vec<usize>> = iso
        .iter()
        .map(|&a| {
            iso.iter()
                .map(|&b| iso_pos[&gpd.compose(a, b).unwrap()])
                .collect()
        })
        .collect();
    let group = SubGroup {
        elements: iso.clone(),
        table,
        identity: iso_pos[&gpd.unit_arrow[x]],
    };

    let mut transversal: Vec<usize> = Vec::new();
    let mut fiber_of: HashMap<usize, usize> = HashMap::new();
    for &g in &l_arrows {
        let r = gpd.ran[g];
        if let std::collections::hash_map::Entry::Vacant(e) = fiber_of.entry(r) {
            e.insert(transversal.len());
            transversal.push(if r == x { gpd.unit_arrow[x] } else { g });
        }
    }

    // the right isotropy action is free, so |L_x| = |T| |G_x|
    assert_eq!(l_arrows.len(), transversal.len() * group.order());
    let factorization = l_arrows
        .iter()
        .map(|&g| {
            let ti = fiber_of[&gpd.ran[g]];
            let h = gpd.compose(gpd.inv[transversal[ti]], g).unwrap();
            if gpd.compose(transversal[ti], h).unwrap() == transversal[ti] {
                assert_eq!(h, gpd.unit_arrow[x], "right isotropy action is not free");
            }
            (ti, iso_pos[&h])
        })
        .collect();
    LClassStructure {
        x,
        l_arrows,
        group,
        transversal,
        factorization,
    }
}

/// Induction: the module on basis (transversal element, vector of V).
/// An arrow g sends t (x) v to t' (x) M(h) v where g composed with t
/// factors as t' h across the transversal.
pub fn induce(
    gpd: &DiscreteGroupoid,
    lc: &LClassStructure,
    v: &GroupRep,
) -> Result<GroupoidModule> {
    if v.group.table != lc.group.table || v.group.identity != lc.group.identity {
        return Err(Error::GroupMismatch);
    }
    let d = v.dim;
    let nt = lc.transversal.len();
    let dim = nt * d;
    let l_pos: HashMap<usize, usize> = lc
        .l_arrows
        .iter()
        .enumerate()
        .map(|(i, &g)| (g, i))
        .collect();

    let act: Vec<Matrix> = (0..gpd.n_arrows)
        .map(|g| {
            let mut m = Matrix::zero(dim, dim, v.field);
            for (ti, &t) in lc.transversal.iter().enumerate() {
                if gpd.dom[g] != gpd.ran[t] {
                    continue;
                }
                let gt = gpd.compose(g, t).unwrap();
                let (ti2, h) = lc.factorization[l_pos[&gt]];
                let block = &v.matrices[h];
                for i in 0..d {
                    for j in 0..d {
                        m.set(ti2 * d + i, ti * d + j, block.get(i, j).clone());
                    }
                }
            }
            m
        })
        .collect();
    let labels = lc
        .transversal
        .iter()
        .flat_map(|&t| (0..d).map(move |j| format!("({t}) x v{j}")))
        .collect();
    GroupoidModule::new(gpd, act, v.field, labels)
}

/// Restriction at a unit: the image of the unit arrow's action, carrying
/// the isotropy group action. Returns None when that image is zero.
pub fn restrict(gpd: &DiscreteGroupoid, m: &GroupoidModule, x: usize) -> Option<GroupRep> {
    let p = &m.act[gpd.unit_arrow[x]];
    // basis of the column space: nonzero rows of the reduced transpose
    let mut rt = p.transpose();
    rt.rref();
    let mut cols: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..rt.rows {
        let row: Vec<Scalar> = (0..rt.cols).map(|j| rt.get(i, j).clone()).collect();
        if row.iter().any(|c| !c.is_zero()) {
            cols.push(row);
        }
    }
    let r = cols.len();
    if r == 0 {
        return None;
    }
    let mut basis = Matrix::zero(m.dim, r, m.field);
    for (j, col) in cols.iter().enumerate() {
        for i in 0..m.dim {
            basis.set(i, j, col[i].clone());
        }
    }

    let lc = l_class(gpd, x);
    let matrices: Vec<Matrix> = lc
        .group
        .elements
        .iter()
        .map(|&g| {
            let image = m.act[g].mul(&basis);
            match crate::matrix::solve(&basis, &image).expect("dimensions agree") {
                crate::matrix::SolveResult::Solution(c) => c,
                crate::matrix::SolveResult::Inconsistent => {
                    panic!("restricted action leaves the image subspace")
                }
            }
        })
        .collect();
    Some(
        GroupRep::new(lc.group, matrices, m.field)
            .expect("restriction defines a group representation"),
    )
}

fn spin_span(m: &GroupoidModule, v: &Matrix) -> usize {
    // grow the span of v under all arrow actions until stable
    let mut vectors: Vec<Matrix> = vec![v.clone()];
    loop {
        let mut candidates = vectors.clone();
        for w in &vectors {
            for a in &m.act {
                candidates.push(a.mul(w));
            }
        }
        let rows: Vec<Scalar> = candidates
            .iter()
            .flat_map(|c| (0..m.dim).map(|i| c.get(i, 0).clone()))
            .collect();
        let mut r = Matrix::new(candidates.len(), m.dim, m.field, rows).unwrap();
        let pivots = r.rref();
        let rank = pivots.len();
        let mut next: Vec<Matrix> = Vec::new();
        for i in 0..rank {
            let mut col = Matrix::zero(m.dim, 1, m.field);
            for j in 0..m.dim {
                col.set(j, 0, r.get(i, j).clone());
            }
            next.push(col);
        }
        if next.len() == vectors.len() {
            return rank;
        }
        vectors = next;
    }
}

/// Spinning simplicity test: every probe vector (the standard basis
/// plus seeded pseudorandom vectors) must generate the whole module.
pub fn is_simple(m: &GroupoidModule, seed: u64) -> Result<bool> {
    if m.dim == 0 {
        return Err(Error::DegenerateModule);
    }
    let mut probes: Vec<Matrix> = Vec::new();
    for i in 0..m.dim {
        let mut e = Matrix::zero(m.dim, 1, m.field);
        e.set(i, 0, m.field.one());
        probes.push(e);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SPIN_PROBES {
        let mut v = Matrix::zero(m.dim, 1, m.field);
        for i in 0..m.dim {
            v.set(i, 0, random_scalar(&m.field, &mut rng));
        }
        if !v.is_zero() {
            probes.push(v);
        }
    }
    for v in &probes {
        if spin_span(m, v) < m.dim {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Basis of the intertwiner space {T : T A_g = B_g T for all g}.
fn intertwiner_basis(
    a_mats: &[Matrix],
    b_mats: &[Matrix],
    dim_a: usize,
    dim_b: usize,
    field: &FieldSpec,
) -> Vec<Matrix> {
    let unknowns = dim_a * dim_b;
    let mut rows: Vec<Scalar> = Vec::new();
    let mut n_rows = 0;
    for (a, b) in a_mats.iter().zip(b_mats) {
        // vec(T A) = (A^T kron I) vec(T); vec(B T) = (I kron B) vec(T)
        let lhs = kron(&a.transpose(), &Matrix::identity(dim_b, *field));
        let rhs = kron(&Matrix::identity(dim_a, *field), b);
        for i in 0..unknowns {
            for j in 0..unknowns {
                rows.push(lhs.get(i, j).sub(rhs.get(i, j)));
            }
        }
        n_rows += unknowns;
    }
    let system = Matrix::new(n_rows, unknowns, *field, rows).unwrap();
    system
        .nullspace()
        .into_iter()
        .map(|v| {
            // column-major unstacking
            let mut t = Matrix::zero(dim_b, dim_a, *field);
            for j in 0..dim_a {
                for i in 0..dim_b {
                    t.set(i, j, v.get(j * dim_b + i, 0).clone());
                }
            }
            t
        })
        .collect()
}

fn invertible_combination(basis: &[Matrix], field: &FieldSpec, seed: u64) -> Option<Matrix> {
    let dim = basis.first()?.rows;
    if basis[0].cols != dim {
        return None;
    }
    for t in basis {
        if t.rank() == dim {
            return Some(t.clone());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ISO_TRIES {
        let mut combo = Matrix::zero(dim, dim, *field);
        for t in basis {
            combo = combo.add(&t.scale(&random_scalar(field, &mut rng)));
        }
        if combo.rank() == dim {
            return Some(combo);
        }
    }
    None
}

/// Module isomorphism test: equal dimensions plus an invertible
/// intertwiner, returned as the certificate.
pub fn modules_isomorphic(m: &GroupoidModule, n: &GroupoidModule, seed: u64) -> Option<Matrix> {
    if m.dim != n.dim || m.field != n.field {
        return None;
    }
    let basis = intertwiner_basis(&m.act, &n.act, m.dim, n.dim, &m.field);
    invertible_combination(&basis, &m.field, seed)
}

/// Group representation isomorphism with certificate.
pub fn group_reps_isomorphic(a: &GroupRep, b: &GroupRep, seed: u64) -> Option<Matrix> {
    if a.dim != b.dim || a.field != b.field || a.group.table != b.group.table {
        return None;
    }
    let basis = intertwiner_basis(&a.matrices, &b.matrices, a.dim, b.dim, &a.field);
    invertible_combination(&basis, &a.field, seed)
}

/// Dimension of the intertwiner space Hom(M, N).
pub fn hom_dimension(m: &GroupoidModule, n: &GroupoidModule) -> usize {
    intertwiner_basis(&m.act, &n.act, m.dim, n.dim, &m.field).len()
}

/// The fiber module on basis L_x itself (arrows act by composition).
pub fn l_class_module(gpd: &DiscreteGroupoid, x: usize, field: &FieldSpec) -> GroupoidModule {
    let lc = l_class(gpd, x);
    let pos: HashMap<usize, usize> = lc
        .l_arrows
        .iter()
        .enumerate()
        .map(|(i, &g)| (g, i))
        .collect();
    let dim = lc.l_arrows.len();
    let act = (0..gpd.n_arrows)
        .map(|g| {
            let mut m = Matrix::zero(dim, dim, *field);
            for (j, &t) in lc.l_arrows.iter().enumerate() {
                if let Some(gt) = gpd.compose(g, t) {
                    m.set(pos[&gt], j, field.one());
                }
            }
            m
        })
        .collect();
    let labels = lc.l_arrows.iter().map(|&g| gpd.labels[g].clone()).collect();
    GroupoidModule::new(gpd, act, *field, labels).expect("the fiber module is well defined")
}

/// Built-in irreducible representations: trivial group, cyclic groups
/// (over a prime field containing the needed roots of unity, or the
/// rationals for orders 1 and 2), and the symmetric group on three
/// letters. Everything else requires a user-supplied list.
pub fn builtin_group_irreps(group: &SubGroup, field: &FieldSpec) -> Result<Vec<GroupRep>> {
    let n = group.order();
    if n == 1 {
        return Ok(vec![GroupRep::trivial(group.clone(), *field)]);
    }
    if let Some(g) = group.cyclic_generator() {
        // express each element as a power of the generator
        let mut power_of = vec![0usize; n];
        let mut cur = group.identity;
        for k in 0..n {
            power_of[cur] = k;
            cur = group.table[cur][g];
        }
        let roots: Vec<Scalar> = match field {
            FieldSpec::Rational if n == 2 => vec![field.one(), field.from_i64(-1)],
            FieldSpec::Rational => {
                return Err(Error::NoBuiltinIrreps(format!(
                    "cyclic group of order {n} over the rationals"
                )))
            }
            FieldSpec::Prime(p) => {
                let w = crate::field::root_of_unity(*p, n as u64).ok_or_else(|| {
                    Error::NoBuiltinIrreps(format!(
                        "cyclic group of order {n} over F{p}: no primitive root"
                    ))
                })?;
                let mut rs = Vec::with_capacity(n);
                let mut acc = 1u64;
                for _ in 0..n {
                    rs.push(field.from_i64(acc as i64));
                    acc = acc * w % p;
                }
                rs
            }
        };
        let reps = (0..n)
            .map(|k| {
                let matrices = (0..n)
                    .map(|el| {
                        let val = roots[power_of[el] * k % n].clone();
                        Matrix::new(1, 1, *field, vec![val]).unwrap()
                    })
                    .collect();
                GroupRep::new(group.clone(), matrices, *field)
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(reps);
    }
    if n == 6 {
        // the nonabelian group of order 6: find a of order 3 and b of
        // order 2 with b a b = a^2
        let a = (0..n)
            .find(|&x| group.element_order(x) == 3)
            .expect("order-3 element exists");
        let b = (0..n)
            .find(|&x| group.element_order(x) == 2)
            .expect("order-2 element exists");
        let a2 = group.table[a][a];
        assert_eq!(
            group.table[group.table[b][a]][b], a2,
            "presentation relation"
        );

        // decompose every element as a^i b^j
        let mut word_of = vec![(0usize, 0usize); n];
        for i in 0..3 {
            for j in 0..2 {
                let mut el = group.identity;
                for _ in 0..i {
                    el = group.table[el][a];
                }
                for _ in 0..j {
                    el = group.table[el][b];
                }
                word_of[el] = (i, j);
            }
        }
        let m1 = |v: i64| Matrix::from_i64(1, 1, *field, &[v]);
        let m2 = |vals: [i64; 4]| Matrix::from_i64(2, 2, *field, &vals);
        let r = m2([0, -1, 1, -1]);
        let s = m2([0, 1, 1, 0]);
        let build = |on_a: Matrix, on_b: Matrix| -> Result<GroupRep> {
            let matrices = (0..n)
                .map(|el| {
                    let (i, j) = word_of[el];
                    let mut m = Matrix::identity(on_a.rows, *field);
                    for _ in 0..i {
                        m = m.mul(&on_a);
                    }
                    for _ in 0..j {
                        m = m.mul(&on_b);
                    }
                    m
                })
                .collect();
            GroupRep::new(group.clone(), matrices, *field)
        };
        return Ok(vec![
            build(m1(1), m1(1))?,
            build(m1(1), m1(-1))?,
            build(r, s)?,
        ]);
    }
    Err(Error::NoBuiltinIrreps(format!("group of order {n}")))
}

/// One classified irreducible: an induced module over the underlying
/// groupoid together with its translation to semigroup matrices.
pub struct ClassifiedIrrep {
    pub class_rep: usize,
    pub group_irrep_index: usize,
    pub dim: usize,
    pub module: GroupoidModule,
    /// Per semigroup element s, the sum of the arrow actions over the
    /// downset of s: the module pulled back along the change of basis.
    pub s_matrices: Vec<Matrix>,
}

pub struct Classification {
    pub irreps: Vec<ClassifiedIrrep>,
    /// True when the characteristic divides no maximal subgroup order
    /// and the dimension sum certificate holds.
    pub complete_certified: bool,
}

/// Classifies the irreducible representations of KS by inducing each
/// irreducible of each maximal subgroup from its D-class
/// representative. Supplied lists override the built-ins per class
/// representative and must pass their own completeness check first.
pub fn classify_irreps(
    s: &InverseSemigroup,
    field: &FieldSpec,
    seed: u64,
    supplied: &HashMap<usize, Vec<GroupRep>>,
) -> Result<Classification> {
    let gpd = underlying_groupoid(s);
    let classes = s.d_classes();
    let mut irreps: Vec<ClassifiedIrrep> = Vec::new();
    let mut maschke = true;

    for class in &classes.classes {
        let e = class.rep;
        let x = s.idempotents.iter().position(|&f| f == e).unwrap();
        let lc = l_class(&gpd, x);
        let group_irreps = match supplied.get(&e) {
            Some(list) => {
                let got: usize = list.iter().map(|v| v.dim * v.dim).sum();
                if got != lc.group.order() {
                    return Err(Error::IncompleteGroupList {
                        order: lc.group.order(),
                        got,
                    });
                }
                list.clone()
            }
            None => {
                let list = builtin_group_irreps(&lc.group, field)?;
                let got: usize = list.iter().map(|v| v.dim * v.dim).sum();
                if got != lc.group.order() {
                    return Err(Error::IncompleteGroupList {
                        order: lc.group.order(),
                        got,
                    });
                }
                list
            }
        };
        if let FieldSpec::Prime(p) = field {
            if (lc.group.order() as u64).is_multiple_of(*p) {
                maschke = false;
            }
        }
        for (vi, v) in group_irreps.iter().enumerate() {
            let module = induce(&gpd, &lc, v)?;
            let s_matrices: Vec<Matrix> = (0..s.order)
                .map(|t| {
                    let mut m = Matrix::zero(module.dim, module.dim, *field);
                    for u in s.down_set(t) {
                        m = m.add(&module.act[u]);
                    }
                    m
                })
                .collect();
            irreps.push(ClassifiedIrrep {
                class_rep: e,
                group_irrep_index: vi,
                dim: module.dim,
                module,
                s_matrices,
            });
        }
    }

    for irrep in &irreps {
        assert!(
            is_simple(&irrep.module, seed)?,
            "induced module failed the simplicity test"
        );
    }
    for i in 0..irreps.len() {
        for j in i + 1..irreps.len() {
            assert!(
                modules_isomorphic(&irreps[i].module, &irreps[j].module, seed).is_none(),
                "two classified irreducibles are isomorphic"
            );
        }
    }
    let complete_certified = if maschke {
        let total: usize = irreps.iter().map(|r| r.dim * r.dim).sum();
        assert_eq!(total, s.order, "dimension sum certificate failed");
        true
    } else {
        false
    };
    Ok(Classification {
        irreps,
        complete_certified,
    })
}

/// Whether the given S-representations distinguish every pair of
/// elements; returns the first unseparated pair as a witness.
pub fn separates_points(
    s: &InverseSemigroup,
    reps: &[Vec<Matrix>],
) -> (bool, Option<(usize, usize)>) {
    for a in 0..s.order {
        for b in a + 1..s.order {
            if !reps.iter().any(|r| r[a] != r[b]) {
                return (false, Some((a, b)));
            }
        }
    }
    (true, None)
}

/// A module is spectral when some unit arrow acts nonzero. This is
/// automatic for non-degenerate nonzero finite modules (the unit
/// actions sum to the identity), and that is asserted.
pub fn is_spectral(gpd: &DiscreteGroupoid, m: &GroupoidModule) -> Result<bool> {
    if m.dim == 0 {
        return Err(Error::DegenerateModule);
    }
    let spectral = gpd.unit_arrow.iter().any(|&u| !m.act[u].is_zero());
    assert!(
        spectral,
        "a non-degenerate nonzero module is always spectral"
    );
    Ok(spectral)
}
