//! Möbius inversion on the natural partial order of an inverse semigroup:
//! zeta transform followed by Möbius inversion is the identity, and the
//! zeta and Möbius matrices are mutually inverse over any field.
//!
//! Run with `cargo run --example mobius_inversion`.

use groupoid_algebra::field::FieldSpec;
use groupoid_algebra::matrix::Matrix;
use groupoid_algebra::poset::{
    mobius_invert, mobius_matrix, zeta_matrix, zeta_transform, MobiusTable,
};
use groupoid_algebra::samples;
use num::BigInt;

fn main() {
    let s = samples::symmetric_inverse_monoid(2);
    let poset = s.natural_order_poset();
    let mob = MobiusTable::new(&poset);

    println!("linear extension: {:?}", poset.linear_extension());
    for x in 0..s.order {
        let row: Vec<String> = (0..s.order).map(|y| mob.mu(x, y).to_string()).collect();
        println!("mu({x}, -) = [{}]", row.join(", "));
    }

    let f: Vec<BigInt> = (0..s.order as i64).map(BigInt::from).collect();
    let g = zeta_transform(&poset, &f);
    let back = mobius_invert(&poset, &mob, &g);
    assert_eq!(f, back);
    println!("zeta then Möbius recovers f = {:?}", f);

    for field in [FieldSpec::Rational, FieldSpec::Prime(5)] {
        let z = zeta_matrix(&poset, &field);
        let m = mobius_matrix(&poset, &mob, &field);
        assert_eq!(z.mul(&m), Matrix::identity(s.order, field));
        println!("zeta * mobius = identity over {field:?}");
    }
}
