//! Divided difference operators on polynomials in the fundamental weights.
//!
//! cargo run --example divided_differences

use schubert_flag::{parse_polynomial, CartanType, SchubertCalculus};

fn main() -> schubert_flag::Result<()> {
    let calc = SchubertCalculus::new(CartanType::b(3)?);
    let f = parse_polynomial(calc.datum(), "t1*t2*t3")?;
    println!("c3 = {f}");
    for i in 1..=3 {
        println!("Delta_{i}(c3) = {}", calc.divided_difference(i, &f)?);
    }
    // Braid relation: 2323 = 3232 in B3, so both words give the same operator.
    let d1 = calc.delta_word(&[2, 3, 2, 3], &f.pow(2))?;
    let d2 = calc.delta_word(&[3, 2, 3, 2], &f.pow(2))?;
    println!("Delta_2323(c3^2) = {d1}");
    assert_eq!(d1, d2);

    let g = parse_polynomial(calc.datum(), "w1^2*w3 - 3*w2*w3^2")?;
    let by_division = calc.divided_difference_by_division(2, &g)?;
    assert_eq!(calc.divided_difference(2, &g)?, by_division);
    println!("Delta_2({g}) = {by_division}");
    Ok(())
}
