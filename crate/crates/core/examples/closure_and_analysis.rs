//! Build the symmetric inverse monoid I_3 from two permutations and one
//! partial identity, then report its coarse structure: idempotents,
//! D-classes and maximal subgroups.
//!
//! Run with `cargo run --example closure_and_analysis`.

use groupoid_algebra::semigroup::{BuildOptions, InverseSemigroup, PartialBijection};

fn main() {
    let gens = vec![
        PartialBijection::from_pairs(3, &[(0, 1), (1, 0), (2, 2)]).unwrap(),
        PartialBijection::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap(),
        PartialBijection::from_pairs(3, &[(1, 1), (2, 2)]).unwrap(),
    ];
    let s = InverseSemigroup::closure(&gens, &BuildOptions::default()).unwrap();

    println!("order: {}", s.order);
    println!("idempotents: {:?}", s.idempotents);

    let dc = s.d_classes();
    println!("D-classes: {}", dc.classes.len());
    for c in &dc.classes {
        println!(
            "  rep {} ({}): {} idempotents, maximal subgroup of order {}",
            c.rep,
            s.labels[c.rep],
            c.idempotents.len(),
            c.group.order()
        );
    }

    // Every element sits below a unique smallest restriction-closed cover;
    // the natural partial order records exactly these restrictions.
    let below: Vec<usize> = (0..s.order).filter(|&a| s.natural_leq(a, 0)).collect();
    println!(
        "elements below {} in the natural order: {:?}",
        s.labels[0], below
    );
}
