//! Cartan matrices, positive roots and the t-classes of each supported type.
//!
//! cargo run --example root_data

use schubert_flag::{CartanType, RootDatum};

fn main() {
    for ty in [CartanType::g2(), CartanType::f4(), CartanType::b(3).unwrap(), CartanType::d(4).unwrap()] {
        let rd = RootDatum::new(ty);
        println!("== {ty}: {} positive roots, |W| = {}", rd.positive_roots().len(), ty.weyl_group_order());
        for row in rd.cartan_matrix() {
            println!("   {row:?}");
        }
        let highest = rd.positive_roots().iter().max_by_key(|b| b.height()).unwrap();
        println!("   highest root (simple coords) {:?}", highest.simple_coords);
        for tc in rd.t_basis() {
            println!("   {} = {}", tc.name, tc.weight.to_polynomial());
        }
    }
}
