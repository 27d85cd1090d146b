//! The torsion scan behind the classification: for a ladder of dimension N
//! the closing condition (N)_q (mu+1-N)_q = 0 either pins the weight to
//! four torsion candidates or leaves it free.
//!
//! At even m this exhibits the gap: every candidate at m/2 < N < m is
//! reducible, with an explicit invariant subspace as the certificate.
//!
//! ```bash
//! cargo run --example torsion_scan
//! ```

use qsu2::analysis::{scan_highest_weight, ScanMode};
use qsu2::cli::format_family;
use qsu2::scalar::render_scalar;
use qsu2::QContext;

fn main() {
    let ctx = QContext::new(6).expect("m >= 3");
    let m = ctx.m();
    println!("highest-weight scan at m = {m}\n");
    for n in 1..=m {
        let report = scan_highest_weight(&ctx, n).unwrap();
        let mode = match report.mode {
            ScanMode::Torsion => "torsion: 4 weight candidates",
            ScanMode::FreeParameter => "free weight parameter",
        };
        println!("N = {n} ({mode})");
        for entry in &report.entries {
            match entry.certificate.witness() {
                None => println!(
                    "  lambda = {:<12} irreducible  [{}]",
                    render_scalar(&entry.lambda, &ctx),
                    format_family(&entry.family, &ctx)
                ),
                Some(w) => println!(
                    "  lambda = {:<12} reducible, invariant subspace of dim {}",
                    render_scalar(&entry.lambda, &ctx),
                    w.dim()
                ),
            }
        }
    }
    println!("\ndimensions m/2 < N < m carry no irreducible; N = m is rescued by");
    println!("the cyclic family with nonzero wrap-around boundaries (see the");
    println!("classification example).");
}
