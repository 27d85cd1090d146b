//! Construct one module from every family and verify the defining relations
//! exactly.
//!
//! ```bash
//! cargo run --example construct_families
//! ```

use qsu2::cli::format_matrix;
use qsu2::families;
use qsu2::QContext;

fn main() {
    let ctx = QContext::new(6).expect("m >= 3");
    println!(
        "all families at m = {} (conductor {})\n",
        ctx.m(),
        ctx.conductor()
    );

    let half = families::half_m_irrep(&ctx, ctx.q_power(1)).expect("nondegenerate weight");
    let reps = vec![
        families::generic_irrep(&ctx, 3, ctx.i_unit().clone()).expect("admissible size"),
        half,
        families::cyclic_module(&ctx, ctx.q_half().clone(), ctx.one(), ctx.integer(2))
            .expect("nondegenerate parameters"),
        families::counterexample_module(&ctx),
    ];

    for rep in &reps {
        let report = rep.verify_relations();
        println!(
            "{:<16} dim {}  relations: {}",
            rep.params().label(),
            rep.dim(),
            if report.all_pass() {
                "hold exactly"
            } else {
                "VIOLATED"
            }
        );
        for check in &report.checks {
            println!(
                "    {} {}",
                if check.passed { "ok  " } else { "FAIL" },
                check.relation.description()
            );
        }
    }

    // Degenerate parameters are refused, naming the vanishing coefficient.
    println!();
    match families::half_m_irrep(&ctx, ctx.one()) {
        Err(e) => println!("half_m with lambda = 1 is refused: {e}"),
        Ok(_) => unreachable!("lambda = 1 is degenerate"),
    }
    match families::generic_irrep(&ctx, 5, ctx.one()) {
        Err(e) => println!("generic with N = 5 at m = 6 is refused: {e}"),
        Ok(_) => unreachable!("N > m/2 hits (m/2)_q = 0"),
    }

    // The triangular normal form: K diagonal, F a unit ladder, E carries
    // the interior coefficients.
    let rep = &reps[0];
    println!("\ngeneric(N = 3, omega = i) in the triangular normal form:");
    println!("K:\n{}", format_matrix(rep.k(), &ctx));
    println!("E:\n{}", format_matrix(rep.e(), &ctx));
    println!("F:\n{}", format_matrix(rep.f(), &ctx));
}
