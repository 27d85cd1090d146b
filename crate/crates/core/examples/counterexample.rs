//! Complete reducibility fails at a root of unity: an (m+1)-dimensional
//! module with a submodule that has no invariant complement.
//!
//! ```bash
//! cargo run --example counterexample
//! ```

use qsu2::analysis::{cyclic_span, has_complement, is_invariant, sub_quotient, Subspace};
use qsu2::families;
use qsu2::scalar::render_scalar;
use qsu2::{Cyclotomic, QContext};

fn main() {
    let ctx = QContext::new(3).expect("m >= 3");
    let m = ctx.m();
    let rep = families::counterexample_module(&ctx);
    let l = ctx.conductor();
    println!(
        "the module: dimension {}, K e_p = q^(m/2 - p) e_p, F a plain ladder,",
        rep.dim()
    );
    println!(
        "E e_p = (p)_q (1-p)_q e_(p-1); relations {}",
        if rep.verify_relations().all_pass() {
            "hold exactly"
        } else {
            "VIOLATED"
        }
    );

    let unit = |i: usize| {
        let mut v = vec![Cyclotomic::zero(l); m + 1];
        v[i] = Cyclotomic::one(l);
        v
    };

    // The last basis line is a submodule: E and F both kill e_m.
    let line = Subspace::from_vectors(m + 1, l, [unit(m)]);
    println!("\nspan{{e_{m}}} invariant: {}", is_invariant(&rep, &line));

    // Its sub and quotient are perfectly good modules...
    let (sub, quotient) = sub_quotient(&rep, &line).unwrap();
    println!(
        "sub: dim {} with K = {};  quotient: dim {}",
        sub.dim(),
        render_scalar(sub.k().get(0, 0), &ctx),
        quotient.dim()
    );

    // ...but the extension does not split: no invariant complement exists,
    // from either side.
    println!(
        "invariant complement of span{{e_{m}}}: {}",
        match has_complement(&rep, &line).unwrap() {
            Some(_) => "exists",
            None => "none",
        }
    );
    let tail = Subspace::from_vectors(m + 1, l, (1..=m).map(unit));
    println!(
        "invariant complement of span{{e_1..e_{m}}}: {}",
        match has_complement(&rep, &tail).unwrap() {
            Some(_) => "exists",
            None => "none",
        }
    );

    // Cyclic spans show the submodule lattice directly.
    for i in [0, 1, m] {
        let span = cyclic_span(&rep, &unit(i)).unwrap();
        println!("cyclic span of e_{i}: dimension {}", span.dim());
    }
    println!("\nthe module is reducible but indecomposable: not completely reducible");
}
