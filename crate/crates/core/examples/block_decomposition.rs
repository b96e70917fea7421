//! Over a field of good characteristic the algebra of a finite inverse
//! semigroup decomposes into matrix blocks: one block M_n(K G_e) per
//! D-class, where n counts the idempotents of the class and G_e is its
//! maximal subgroup. The dimensions always add up to |S|, with no
//! characteristic assumption needed for the bookkeeping.
//!
//! Run with `cargo run --example block_decomposition`.

use groupoid_algebra::iso;
use groupoid_algebra::samples;

fn main() {
    for (name, s) in [
        ("I_2".to_string(), samples::symmetric_inverse_monoid(2)),
        ("I_3".to_string(), samples::symmetric_inverse_monoid(3)),
        ("B_2".to_string(), samples::brandt_b2()),
        (
            "chain of length 4".to_string(),
            samples::chain_semilattice(4),
        ),
    ] {
        let d = iso::decompose(&s);
        println!("{name} (order {}):", s.order);
        for b in &d.blocks {
            println!(
                "  M_{}(K G) with |G| = {}  (class rep {})",
                b.multiplicity,
                b.group.order(),
                b.class_rep
            );
        }
        assert_eq!(d.total_dimension, s.order);
        println!("  sum of n^2 * |G| = {} = |S|", d.total_dimension);
    }
}
