//! The center of a groupoid convolution algebra, computed two independent
//! ways: class indicator functions on conjugacy classes of isotropy
//! arrows, and the nullspace of the commutation constraints. The two
//! dimensions must agree.
//!
//! Run with `cargo run --example center`.

use groupoid_algebra::field::FieldSpec;
use groupoid_algebra::groupoid;
use groupoid_algebra::samples;

fn main() {
    let field = FieldSpec::Rational;
    for (name, s) in [
        ("I_2", samples::symmetric_inverse_monoid(2)),
        ("I_3", samples::symmetric_inverse_monoid(3)),
        ("B_2", samples::brandt_b2()),
    ] {
        let g = groupoid::underlying_groupoid(&s);
        let basis = groupoid::center_basis(&g, &field);
        let commutant = groupoid::center_dimension_commutant(&g, &field);
        assert_eq!(basis.len(), commutant);
        println!(
            "Z(Q[{name}]): dimension {} by class functions, {} by commutant",
            basis.len(),
            commutant
        );
        for (i, b) in basis.iter().enumerate() {
            let arrows: Vec<&str> = b.coeffs.keys().map(|&a| g.labels[a].as_str()).collect();
            println!("  basis vector {i}: support {{{}}}", arrows.join(", "));
        }
    }
}
