//! Arithmetic in GF(p^deg): modulus choice, inverses, a primitive element.
//!
//! cargo run --example field_arithmetic -- 9

use conic_kakeya::GaloisField;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q: u32 = std::env::args().nth(1).map_or(Ok(9), |s| s.parse())?;
    let f = GaloisField::of_order(q)?;
    println!("GF({q}) = GF({}^{}), modulus {:?} (constant term first)", f.p(), f.deg(), f.modulus());
    let g = f.primitive_element();
    println!("primitive element {g} of order {}", f.order(g)?);
    for a in f.nonzero_elements().take(6) {
        let inv = f.inv(a)?;
        println!("  {a} * {inv} = {}", f.mul(a, inv));
    }
    let frob: Vec<u32> = f.elements().map(|a| f.pow(a, f.p() as u64).code()).collect();
    println!("Frobenius x -> x^p on codes: {frob:?}");
    Ok(())
}
