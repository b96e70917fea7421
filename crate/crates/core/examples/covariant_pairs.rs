//! Disintegration and reconstruction of a groupoid-algebra representation
//! as a covariant pair: a representation pi of the functions on the unit
//! space together with sigma defined on semigroup elements, satisfying the
//! covariance relations, from which the original representation is
//! recovered arrow by arrow.
//!
//! Run with `cargo run --example covariant_pairs`.

use groupoid_algebra::field::FieldSpec;
use groupoid_algebra::germs;
use groupoid_algebra::reps;
use groupoid_algebra::samples;

fn main() {
    let s = samples::brandt_b2();
    let action = s.munn_action();
    let gg = germs::germ_groupoid(&action).unwrap();
    let field = FieldSpec::Prime(5);

    // Left regular representation of the germ groupoid algebra.
    let regular = reps::GroupoidModule::regular(&gg.groupoid, field);
    println!(
        "left regular module of the germ groupoid of B_2: dimension {}",
        regular.dim
    );

    let ok = germs::covariant_roundtrip(&action, &gg, &regular.act, &field).unwrap();
    println!(
        "covariance relations verified and reconstruction matches on all {} arrows: {ok}",
        gg.groupoid.n_arrows
    );
}
