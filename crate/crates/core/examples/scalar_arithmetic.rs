//! The exact scalar layer: the cyclotomic session field, quantum integers,
//! and the expression grammar.
//!
//! ```bash
//! cargo run --example scalar_arithmetic
//! ```

use qsu2::scalar::{parse_scalar, render_scalar};
use qsu2::QContext;

fn main() {
    // Fix the order of q. The session field is Q(zeta_L) with
    // L = lcm(4, 2m), so q, q^(1/2) and i all live in one field and every
    // computation below is exact.
    let ctx = QContext::new(5).expect("m >= 3");
    println!(
        "m = {}, conductor L = {}, field degree {}",
        ctx.m(),
        ctx.conductor(),
        qsu2::scalar::field(ctx.conductor()).degree
    );

    // Quantum integers (n)_q = (q^n - q^-n)/(q - q^-1).
    for n in 0..=6 {
        println!("({n})_q = {}", render_scalar(&ctx.q_int(n), &ctx));
    }
    println!(
        "periodicity: (7)_q == (2)_q is {}",
        ctx.q_int(7) == ctx.q_int(2)
    );

    // The expression grammar: integers, rationals, q, s = q^(1/2), i.
    for text in ["q^2 + 1/2", "i*s", "q^-1", "(1 + q)^2 / 2"] {
        let value = parse_scalar(text, &ctx).expect("well-formed expression");
        let canonical = render_scalar(&value, &ctx);
        let back = parse_scalar(&canonical, &ctx).expect("canonical form re-parses");
        assert_eq!(back, value);
        let (re, im) = value.embed();
        println!("{text:>16}  =  {canonical}  ~  {re:+.6} {im:+.6}i");
    }

    // Exact division: (q - q^-1) / (q - q^-1) = 1.
    let diff = &ctx.q_power(1) - &ctx.q_power(-1);
    println!(
        "(q - q^-1)/(q - q^-1) = {}",
        render_scalar(&diff.div(&diff).unwrap(), &ctx)
    );
}
