//! The semigroup algebra KS of a finite inverse semigroup is isomorphic to
//! the convolution algebra of its underlying groupoid. The change of basis
//! sends each element to the sum of its downset; its inverse is Möbius
//! inversion, so both matrices are unitriangular in a linear extension.
//!
//! Run with `cargo run --example groupoid_isomorphism`.

use groupoid_algebra::field::FieldSpec;
use groupoid_algebra::io;
use groupoid_algebra::iso;
use groupoid_algebra::samples;

fn main() {
    let s = samples::symmetric_inverse_monoid(2);
    for field in [FieldSpec::Prime(5), FieldSpec::Rational] {
        let w = iso::theta(&s, &field, 0).unwrap();
        println!(
            "theta over {field:?}: {} arrows, multiplicativity checked ({:?})",
            w.groupoid.n_arrows, w.pairs_checked
        );
    }

    // The groupoid algebra has an obvious unit: the sum of unit arrows.
    // Pulled back through theta it names the identity of KS, which exists
    // even when S has no identity element.
    let b2 = samples::brandt_b2();
    let unit = iso::semigroup_identity(&b2, &FieldSpec::Rational, 0).unwrap();
    print!("identity of Q[B2]: ");
    let terms: Vec<String> = unit
        .coeffs
        .iter()
        .map(|(g, c)| format!("{} * {}", io::scalar_json(c), b2.labels[*g]))
        .collect();
    println!("{}", terms.join(" + "));
}
