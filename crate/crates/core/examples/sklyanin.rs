//! The Sklyanin generator transform and the floating-point square-root
//! forms, including the unitary regime.
//!
//! ```bash
//! cargo run --example sklyanin
//! ```

use num::complex::Complex64;

use qsu2::families::{self, cyclic_symmetric_form, sklyanin_generators, symmetric_form};
use qsu2::scalar::render_scalar;
use qsu2::QContext;

fn main() {
    let ctx = QContext::new(5).expect("m >= 3");

    // S_0, S_1, S_+, S_- are an exact linear change of generators; K is
    // recovered from S_0 and S_1 with no loss.
    let rep = families::generic_irrep(&ctx, 3, ctx.one()).unwrap();
    let quad = sklyanin_generators(&rep);
    let recovered = quad.recover_k(&ctx);
    println!(
        "Sklyanin round trip on generic(N=3): K recovered exactly: {}",
        recovered == *rep.k()
    );
    println!(
        "scale c = (q - q^-1)/(2i) = {}",
        render_scalar(&families::sklyanin_scale(&ctx), &ctx)
    );

    // The square-root normal form lives over complex doubles; with one
    // branch choice shared by E and F it is transpose-symmetric.
    let form = symmetric_form(&ctx, rep.params()).unwrap();
    println!(
        "square-root form: J+ = (J-)^t within {:.1e}",
        form.transpose_deviation.max(f64::MIN_POSITIVE)
    );
    for p in 0..form.dim - 1 {
        let e = form.jplus.get(p, p + 1);
        println!("  ladder entry {}: {:+.6} {:+.6}i", p + 1, e.re, e.im);
    }

    // Unitary regime: alpha = conj(beta) and a real weight exponent make
    // J+ the adjoint of J-: these are the three-real-parameter unitary
    // representations.
    let unitary = cyclic_symmetric_form(
        3,
        Complex64::new(0.3, 0.0),
        Complex64::new(0.5, 0.2),
        Complex64::new(0.5, -0.2),
    )
    .unwrap();
    println!(
        "unitary cyclic form at m = 3: J+ = (J-)^dagger within {:.1e}",
        unitary
            .adjoint_deviation
            .expect("unitary condition detected")
            .max(f64::MIN_POSITIVE)
    );
}
