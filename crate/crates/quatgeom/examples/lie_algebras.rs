//! Structure constants of su(3), sp(3), su(4) and g₂ with their exact self-checks.

use quatgeom::liealg::{build_g2, build_sp3, build_su3, build_su4};

fn main() {
    println!("{:<6} {:>4} {:>8} {:>6} {:>9} {:>8}", "alg", "dim", "Jacobi", "d²", "matrices", "κ/tr");
    for alg in [build_su3(), build_sp3(), build_su4(), build_g2()] {
        println!(
            "{:<6} {:>4} {:>8} {:>6} {:>9} {:>8}",
            alg.name(),
            alg.dim(),
            alg.jacobi_violations(),
            alg.d_squared_violations(),
            alg.realization_violations().map_or("-".into(), |v| v.to_string()),
            alg.killing_trace_multiple().map_or("?".into(), |m| m.to_string()),
        );
    }
}
