//! Finite Stone duality for the idempotent semilattice: every filter is
//! principal, ultrafilters correspond to primitive idempotents, and the
//! spectral action on ultrafilters coincides with the Munn action.
//!
//! Run with `cargo run --example stone_duality`.

use groupoid_algebra::samples;
use groupoid_algebra::stone;

fn main() {
    let s = samples::symmetric_inverse_monoid(2);

    let filters = stone::all_filters(&s);
    println!("filters of E(I_2): {}", filters.len());
    for f in &filters {
        println!(
            "  principal at {} ({}), ultrafilter: {}",
            f.principal_min, s.labels[f.principal_min], f.ultrafilter
        );
    }

    let prim = stone::primitive_idempotents(&s);
    println!("primitive idempotents: {prim:?}");
    let uf = stone::ultrafilters(&s);
    assert_eq!(uf.len(), prim.len());

    // The spectral action is rebuilt from characters; its construction
    // asserts pointwise agreement with the Munn action.
    let action = stone::spectral_action(&s);
    println!(
        "spectral action: {} elements on {} character points, equal to the Munn action",
        s.order, action.n_points
    );

    // Isotropy at an idempotent: stabilizer modulo common-lower-bound
    // kernel gives the maximal subgroup.
    let e = *s.idempotents.first().unwrap();
    let iso = stone::isotropy_at(&s, e).unwrap();
    println!(
        "isotropy at {}: stabilizer of size {}, group of order {}",
        s.labels[e],
        iso.stabilizer.len(),
        iso.group.order()
    );
}
