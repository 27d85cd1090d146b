//! When are two cyclic modules isomorphic? The parameter-level criterion
//! against the exact intertwiner oracle.
//!
//! ```bash
//! cargo run --example isomorphism
//! ```

use qsu2::analysis::{are_isomorphic, iso_criterion_cyclic, rotate_cyclic_params};
use qsu2::cli::format_matrix;
use qsu2::families::{self, CyclicParams};
use qsu2::scalar::render_scalar;
use qsu2::QContext;

fn main() {
    let ctx = QContext::new(3).expect("m >= 3");
    let show = |p: &CyclicParams| {
        format!(
            "M(lambda={}, a={}, b={})",
            render_scalar(&p.lambda, &ctx),
            render_scalar(&p.a, &ctx),
            render_scalar(&p.b, &ctx)
        )
    };
    let build = |p: &CyclicParams| {
        families::cyclic_module(&ctx, p.lambda.clone(), p.a.clone(), p.b.clone())
            .expect("nondegenerate")
    };

    let base = CyclicParams {
        lambda: ctx.root_of_unity(1),
        a: ctx.one(),
        b: ctx.one(),
    };

    // Rotating the cyclic basis to start at e_j changes the parameters but
    // not the module; the criterion finds the matching weight shift and the
    // intertwiner solver produces the explicit isomorphism.
    let rotated = rotate_cyclic_params(&ctx, &base, 1).unwrap();
    println!("{}  vs  {}", show(&base), show(&rotated));
    match iso_criterion_cyclic(&ctx, &base, &rotated).unwrap() {
        Some(r) => println!("criterion: isomorphic with lambda' = lambda q^{r}"),
        None => println!("criterion: not isomorphic"),
    }
    let t = are_isomorphic(&build(&base), &build(&rotated))
        .unwrap()
        .expect("oracle agrees");
    println!("invertible intertwiner:\n{}", format_matrix(&t, &ctx));

    // Same boundary product and weight, different boundary ratio: a
    // different module. The oracle sees an empty hom space.
    let stretched = CyclicParams {
        lambda: base.lambda.clone(),
        a: ctx.integer(2),
        b: base.b.scale(&qsu2::scalar::rat_frac(1, 2)),
    };
    println!("{}  vs  {}", show(&base), show(&stretched));
    println!(
        "criterion: {:?}, oracle: {}",
        iso_criterion_cyclic(&ctx, &base, &stretched).unwrap(),
        match are_isomorphic(&build(&base), &build(&stretched)).unwrap() {
            Some(_) => "isomorphic",
            None => "not isomorphic",
        }
    );

    // Flipping both boundary signs preserves every product the naive
    // criterion sees, but F^m = a is central, hence an invariant: the
    // modules are NOT isomorphic, and both tests agree.
    let flipped = CyclicParams {
        lambda: base.lambda.clone(),
        a: -&base.a,
        b: -&base.b,
    };
    println!("{}  vs  {}", show(&base), show(&flipped));
    println!(
        "criterion: {:?}, oracle: {}",
        iso_criterion_cyclic(&ctx, &base, &flipped).unwrap(),
        match are_isomorphic(&build(&base), &build(&flipped)).unwrap() {
            Some(_) => "isomorphic",
            None => "not isomorphic",
        }
    );
}
