//! Ricci tensor of the perturbed G₂/SO(4) metric along the orbit parameter.
//!
//! `cargo run --example ricci_profile -- "logsin:1/2"` takes any profile spec.

use quatgeom::curvature::{g2_tabulated_ricci, MetricFamily};
use quatgeom::harmonic::{HSpec, Normalization};
use quatgeom::wolf::{Space, WolfSpaceModel};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "cos:4:1/2".into());
    let h: HSpec = spec.parse()?;
    let model = WolfSpaceModel::build(Space::G2So4);
    let metric = MetricFamily::new(&model, &h, Normalization::Unit)?;
    println!("h = {h}");
    println!("{:>6} {:>12} {:>12} {:>10}", "t", "scalar", "‖Ric−s/8‖", "vs table");
    for k in 1..8 {
        let t = model.t_end() * k as f64 / 8.0;
        let r = metric.ricci_at(t)?;
        let table = match h.profile() {
            Some(p) => {
                let dp = p.deriv();
                let reference = g2_tabulated_ricci(dp.eval(t), dp.deriv().eval(t), t);
                format!("{:.1e}", (&r.ricci - reference).amax())
            }
            None => "-".into(),
        };
        println!("{t:>6.3} {:>12.6} {:>12.6} {table:>10}", r.scalar, r.einstein_deviation);
    }
    Ok(())
}
