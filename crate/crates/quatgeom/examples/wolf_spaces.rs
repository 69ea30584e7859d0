//! The three Wolf spaces as cohomogeneity-one SU(3)-manifolds.

use quatgeom::harmonic::interior_samples;
use quatgeom::wolf::{isotropy_weights, Space, WolfSpaceModel};

fn main() {
    for space in Space::ALL {
        let model = WolfSpaceModel::build(space);
        let ts = interior_samples(space, 20);
        println!("{} on (0, {:.4})", model.name(), model.t_end());
        println!("  Ad-pullback vs closed-form coframe: {:.2e}", model.pullback_defect(&ts));
        for (label, m) in [("generic", 1), ("t = 0", 0), ("t = T", space.t_end_pi12())] {
            println!("  stabilizer at {label}: dim {}", model.stabilizer_pi12(m).len());
        }
        if let Some(weights) = isotropy_weights(&model) {
            let w: Vec<String> = weights.iter().map(|w| format!("{}^{}", w.weight, w.dim())).collect();
            println!("  isotropy weights: {}", w.join(" "));
        }
    }
}
