//! Weight decompositions and the central elements E^m, F^m, K^m.
//!
//! ```bash
//! cargo run --example weights_and_central
//! ```

use qsu2::families;
use qsu2::repcore::CentralValue;
use qsu2::scalar::render_scalar;
use qsu2::QContext;

fn main() {
    let ctx = QContext::new(4).expect("m >= 3");
    let m = ctx.m();

    // A simple module is a direct sum of K-eigenspaces whose eigenvalues
    // form one q-power orbit.
    let rep = families::cyclic_module(&ctx, ctx.root_of_unity(1), ctx.one(), ctx.one())
        .expect("nondegenerate");
    let wd = rep.weight_decomposition().expect("K is diagonal");
    println!("cyclic module at m = {m}: weights");
    for space in &wd.spaces {
        println!(
            "  {} = lambda q^{}  multiplicity {}",
            render_scalar(&space.eigenvalue, &ctx),
            space.orbit_exponent,
            space.multiplicity()
        );
    }

    // The counterexample module doubles its extreme weight: q^(m/2) equals
    // q^(m/2 - m).
    let ce = families::counterexample_module(&ctx);
    let wd = ce.weight_decomposition().unwrap();
    println!(
        "\ncounterexample at m = {m}: {} weights on {} dimensions",
        wd.spaces.len(),
        wd.dim
    );
    for space in &wd.spaces {
        println!(
            "  {}  multiplicity {}  columns {:?}",
            render_scalar(&space.eigenvalue, &ctx),
            space.multiplicity(),
            space.columns
        );
    }

    // E^m, F^m, K^m are central; on an irreducible module they act as
    // scalars (Schur), and on the cyclic family the scalars have closed
    // forms F^m = a, K^m = lambda^m, E^m = b prod c_p.
    let fmt = |v: &CentralValue| match v {
        CentralValue::Scalar(c) => format!("scalar {}", render_scalar(c, &ctx)),
        CentralValue::NotScalar => "NOT scalar".into(),
    };
    let central = rep.central_scalars();
    println!("\ncyclic module central elements:");
    println!("  E^{m} = {}", fmt(&central.e_power));
    println!("  F^{m} = {}", fmt(&central.f_power));
    println!("  K^{m} = {}", fmt(&central.k_power));

    let central = ce.central_scalars();
    println!("counterexample central elements (reducible, so not all scalar):");
    println!("  E^{m} = {}", fmt(&central.e_power));
    println!("  F^{m} = {}", fmt(&central.f_power));
    println!("  K^{m} = {}", fmt(&central.k_power));
}
