//! The classification tables: which dimensions carry an irreducible
//! representation when q is a primitive m-th root of unity.
//!
//! For odd m the answer is every 1 <= N <= m; for even m it is
//! 1 <= N <= m/2 together with N = m, with a certified gap in between.
//!
//! ```bash
//! cargo run --example classification
//! ```

use qsu2::analysis::classify;
use qsu2::cli::classification_table;
use qsu2::QContext;

fn main() {
    for m in 3..=8 {
        let ctx = QContext::new(m).expect("m >= 3");
        let report = classify(&ctx).expect("classification agrees with the predicted table");
        println!("{}", classification_table(&report, &ctx));
    }
}
