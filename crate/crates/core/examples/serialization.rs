//! Exact JSON serialization: representations round-trip through documents
//! with scalars as expression strings or raw coefficient arrays.
//!
//! ```bash
//! cargo run --example serialization
//! ```

use qsu2::cli::{deserialize_rep, document_from_str, document_to_string, serialize_rep};
use qsu2::families;
use qsu2::QContext;

fn main() {
    let ctx = QContext::new(4).expect("m >= 3");
    let rep = families::cyclic_module(&ctx, ctx.root_of_unity(1), ctx.integer(2), ctx.one())
        .expect("nondegenerate");

    // Human-facing form: scalars are grammar strings.
    let doc = serialize_rep(&rep, false);
    let text = document_to_string(&doc);
    println!("{text}\n");

    let back = deserialize_rep(&document_from_str(&text).unwrap()).unwrap();
    println!(
        "round trip is exact, entrywise: {}",
        back.k() == rep.k() && back.e() == rep.e() && back.f() == rep.f()
    );

    // Machine form: raw power-basis coefficients.
    let raw = serialize_rep(&rep, true);
    let raw_text = document_to_string(&raw);
    let back_raw = deserialize_rep(&document_from_str(&raw_text).unwrap()).unwrap();
    println!(
        "raw-coefficient round trip is exact: {}",
        back_raw.e() == rep.e()
    );
    println!(
        "(raw document is {} bytes, expression document {} bytes)",
        raw_text.len(),
        text.len()
    );
}
