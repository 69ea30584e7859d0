//! Exact arithmetic in ℚ(√2, √3) and Fourier polynomials over it.

use quatgeom::scalars::{QuadExt, TrigPoly};

fn main() {
    let x = &QuadExt::sqrt2() + &QuadExt::sqrt3();
    let inv = x.checked_inv().expect("nonzero");
    println!("(√2 + √3)⁻¹ = {inv}");
    println!("check: {}", &x * &inv);

    for m in 0..=6 {
        println!("cos({m}π/12) = {}", QuadExt::cos_pi12(m));
    }

    // h = ½cos 4t + ⅛cos 8t and its derivative, evaluated exactly at π/12 multiples.
    let h = TrigPoly::cos(4, QuadExt::rat(1, 2)).add(&TrigPoly::cos(8, QuadExt::rat(1, 8)));
    let dh = h.deriv();
    println!("h  = {h}\nh′ = {dh}");
    for m in [0, 1, 2, 3] {
        println!("h′({m}π/12) = {}", dh.eval_pi12(m));
    }
    println!("h′ is odd: {}", dh.is_odd());
}
