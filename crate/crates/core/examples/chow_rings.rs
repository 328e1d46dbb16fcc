//! Chow rings of Spin(m), SO(m), G2 and F4 from the Schubert basis.
//!
//! cargo run --release --example chow_rings

use std::sync::Arc;

use schubert_flag::chow::group_name;
use schubert_flag::{chow_groups, verify_chow, CartanType, ChowPresentation, ChowRing, SchubertCalculus, Variant};

fn main() -> schubert_flag::Result<()> {
    let mut cases = vec![(CartanType::g2(), Variant::SimplyConnected), (CartanType::f4(), Variant::SimplyConnected)];
    for ty in [CartanType::b(3)?, CartanType::d(4)?, CartanType::b(4)?] {
        cases.push((ty, Variant::SimplyConnected));
        cases.push((ty, Variant::SpecialOrthogonal));
    }
    for (ty, variant) in cases {
        let calc = Arc::new(SchubertCalculus::new(ty));
        let groups = chow_groups(calc.clone(), variant, None)?;
        let pres = ChowPresentation::closed_form(ty, variant)?;
        let report = verify_chow(calc, variant, None)?;
        println!("A({}) = {pres}", group_name(ty, variant));
        println!("   strata {groups}; {} checks, {} failed", report.len(), report.failures().count());
    }

    // X4 = [Z_1234] in A(F4): 3 X4 = 0, X4^2 != 0, X4^3 = 0.
    let ring = ChowRing::new(Arc::new(SchubertCalculus::new(CartanType::f4())), Variant::SimplyConnected)?;
    let x4 = schubert_flag::SchubertExpansion::indicator(&ring.calculus().element("1234")?);
    let sq = ring.multiply(&x4, &x4)?;
    let cube = ring.multiply(&sq, &x4)?;
    println!("order of X4: {:?}", ring.order(&x4)?.map(|o| o.to_string()));
    println!("X4^2 zero: {}, X4^3 zero: {}", ring.is_zero(&sq)?, ring.is_zero(&cube)?);
    Ok(())
}
