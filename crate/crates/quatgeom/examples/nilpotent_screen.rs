//! Which nilpotent Jordan types can perturb the quaternionic 4-form, and the
//! quaternionic angle of a pair of lines.

use quatgeom::perturb::{omega_in_e_basis, quaternionic_angle, screen_all, Quat, QuatVector};
use quatgeom::scalars::rat;

fn main() {
    println!("Ω in the adapted basis has {} terms", omega_in_e_basis().len());
    for r in screen_all() {
        let verdict = if r.excluded() { "excluded" } else { "kept" };
        println!("{:<18} dim K = {:>2}  {verdict}", r.partition.to_string(), r.kernel_dim);
    }

    let one = Quat::real(rat(1, 1));
    let p = Quat::new(rat(1, 2), rat(0, 1), rat(1, 3), rat(0, 1));
    let q = Quat::new(rat(0, 1), rat(2, 1), rat(0, 1), rat(-1, 1));
    let angle = quaternionic_angle(&QuatVector::new(one.clone(), p), &QuatVector::new(one, q)).expect("nonzero lines");
    println!("Q([1:p], [1:q]) = {angle}");
}
