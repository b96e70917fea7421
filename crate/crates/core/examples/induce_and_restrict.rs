//! Induction and restriction between maximal-subgroup representations
//! and groupoid modules, with the adjunction dimension identity
//! dim Hom(Ind V, M) = dim Hom(V, Res M) checked exactly.
//!
//! Run with `cargo run --example induce_and_restrict`.

use groupoid_algebra::field::FieldSpec;
use groupoid_algebra::groupoid;
use groupoid_algebra::reps;
use groupoid_algebra::samples;

fn main() {
    let s = samples::symmetric_inverse_monoid(2);
    let g = groupoid::underlying_groupoid(&s);
    let field = FieldSpec::Prime(5);

    // Induce the trivial representation of the isotropy group at unit 0
    // up to a module over the whole groupoid algebra.
    let lc = reps::l_class(&g, 0);
    println!(
        "L-class at unit 0: {} arrows, isotropy group of order {}",
        lc.l_arrows.len(),
        lc.group.order()
    );

    let trivial = reps::GroupRep::trivial(lc.group.clone(), field);
    let induced = reps::induce(&g, &lc, &trivial).unwrap();
    println!("induced module dimension: {}", induced.dim);
    println!("simple: {}", reps::is_simple(&induced, 0).unwrap());

    // Restriction recovers a representation of the isotropy group, and
    // hom spaces match across the adjunction.
    let restricted = reps::restrict(&g, &induced, 0).unwrap();
    println!("restricted back to a group rep of dim {}", restricted.dim);

    let projective = reps::l_class_module(&g, 0, &field);
    let hom = reps::hom_dimension(&projective, &induced);
    println!(
        "dim Hom(P_0, Ind triv) = {hom} = dim Res(Ind triv) = {}",
        restricted.dim
    );
    assert_eq!(hom, restricted.dim);
}
