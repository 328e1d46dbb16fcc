//! Expanding polynomials in the Schubert basis and Chevalley's formula.
//!
//! cargo run --example schubert_expansion

use schubert_flag::{parse_polynomial, CartanType, SchubertCalculus};

fn main() -> schubert_flag::Result<()> {
    let calc = SchubertCalculus::new(CartanType::f4());
    let c3 = calc.datum().chern(3);
    let e = calc.expand(&c3)?;
    println!("F4 c3 = {e}");
    println!("F4 c3 / 2 = {}", e.div_exact(2)?);

    let f = parse_polynomial(calc.datum(), "t1*t2*t3*t4 - 2*t*(t1*t2*t3 + t1*t2*t4 + t1*t3*t4 + t2*t3*t4) + 8*t^4")?;
    println!("F4 c4 - 2tc3 + 8t^4 = {}", calc.expand(&f)?);

    let w = calc.element("1232")?;
    for alpha in 1..=4 {
        println!("Z_{alpha} * Z_{w} = {}", calc.chevalley_product(alpha, &w)?);
    }
    println!("{}", serde_json::to_string(&e.to_json()).unwrap());
    Ok(())
}
