//! Slices of a discrete groupoid (arrow sets with injective domain and
//! range maps) form an inverse semigroup under setwise product, and the
//! groupoid algebra is presented as the slice algebra modulo the relators
//! delta_U + delta_V - delta_{U u V} for disjoint unit sets U, V.
//!
//! Run with `cargo run --example presentation`.

use groupoid_algebra::field::FieldSpec;
use groupoid_algebra::groupoid;
use groupoid_algebra::samples;

fn main() {
    let field = FieldSpec::Prime(5);
    let s = samples::brandt_b2();
    let g = groupoid::underlying_groupoid(&s);

    let slices = groupoid::enumerate_slices(&g, 6).unwrap();
    println!(
        "B_2 underlying groupoid: {} arrows, {} slices",
        g.n_arrows,
        slices.len()
    );

    let (slice_sg, carriers) = groupoid::slice_semigroup(&g, 6).unwrap();
    println!("slice inverse semigroup has order {}", slice_sg.order);
    for (i, c) in carriers.iter().enumerate().take(5) {
        println!("  slice {i}: arrows {c:?}");
    }

    let ok = groupoid::presentation_check(&g, &field, 6).unwrap();
    println!(
        "quotient of the slice algebra by unit relators has dimension {} = #arrows: {}",
        g.n_arrows, ok
    );
}
