//! Closed, non-parallel perturbations of the quaternion-Kähler 4-form.

use quatgeom::harmonic::{boundary_check, coclosedness, interior_samples, killing_triviality, HSpec, Normalization};
use quatgeom::wolf::{Space, WolfSpaceModel};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g2 = WolfSpaceModel::build(Space::G2So4);
    for spec in ["cos:4:1/2", "cos:4:1/2,8:1/8", "cos:2:1"] {
        let h: HSpec = spec.parse()?;
        let boundary = boundary_check(&h, &g2)?;
        print!("{spec:<16} extends smoothly: {:<5}", boundary.pass());
        match coclosedness(&g2, &h, Normalization::Unit) {
            Ok(c) => println!("  dΩ̃ = 0: {}  d*Ω̃ = 0: {}", c.closed, c.star_closed),
            Err(e) => println!("  ({e})"),
        }
    }

    // On HP(2) the same construction is only an isometric change of coordinates.
    let hp2 = WolfSpaceModel::build(Space::Hp2);
    let r = killing_triviality(&hp2, &"cos:4:1".parse()?, &interior_samples(Space::Hp2, 20));
    println!("hp2 Gram defect over {} samples: {:.1e}", r.samples, r.max_defect);
    Ok(())
}
