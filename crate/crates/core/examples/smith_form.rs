//! Smith normal form with unimodular transforms.
//!
//! cargo run --example smith_form

use schubert_flag::{smith_normal_form, IntegerMatrix};

fn main() {
    let m = IntegerMatrix::from_rows(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let s = smith_normal_form(&m);
    let v = s.v.as_ref().unwrap();
    println!("M =\n{m}");
    println!("invariant factors {:?}", s.factors.iter().map(|d| d.to_string()).collect::<Vec<_>>());
    println!("U M V =\n{}", s.u.mul(&m).mul(v));
    assert_eq!(s.u.mul(&m).mul(v), s.d);
}
