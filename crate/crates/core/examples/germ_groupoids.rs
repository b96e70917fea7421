//! Germs of an inverse semigroup action. Acting on itself via the Munn
//! representation, every inverse semigroup yields a germ groupoid
//! isomorphic to its underlying groupoid; that isomorphism and the slice
//! product law are both checked here.
//!
//! Run with `cargo run --example germ_groupoids`.

use groupoid_algebra::germs;
use groupoid_algebra::samples;

fn main() {
    let s = samples::brandt_b2();
    let action = s.munn_action();
    println!(
        "Munn action of B_2: {} elements acting on {} idempotents",
        s.order, action.n_points
    );

    let gg = germs::germ_groupoid(&action).unwrap();
    println!(
        "germ groupoid: {} units, {} arrows",
        gg.groupoid.n_units, gg.groupoid.n_arrows
    );
    for (i, _germ) in gg.germs.iter().enumerate() {
        println!(
            "  arrow {i}: {} (dom {}, ran {})",
            gg.groupoid.labels[i], gg.groupoid.dom[i], gg.groupoid.ran[i]
        );
    }

    // Slices multiply by the pullback rule (s, U)(t, V) = (st, t*(U n tV)).
    assert!(germs::slice_product_check(&action).unwrap());
    println!("slice product law holds on singletons and full domains");

    // The universal groupoid of S is the germ groupoid of the Munn action,
    // and s |-> [s, dom(s)] is a bijective functor onto it.
    let (universal, embed) = germs::universal_groupoid(&s).unwrap();
    println!(
        "universal groupoid has {} arrows; embedding of S: {:?}",
        universal.groupoid.n_arrows, embed
    );
}
