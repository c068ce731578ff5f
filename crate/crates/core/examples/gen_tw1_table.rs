//! Regenerates `src/randmat/tw1_table.rs` from the Painleve II integrator.
//!
//! cargo run -p sphiso --example gen_tw1_table > crates/core/src/randmat/tw1_table.rs

use sphiso::randmat::tracy_widom::{generate_table, TABLE_MAX, TABLE_MIN, TABLE_STEP};

fn main() {
    let table = generate_table();
    println!("// Generated by examples/gen_tw1_table.rs; do not edit.");
    println!(
        "// F_1(s) at s = {TABLE_MIN} + k * {TABLE_STEP}, k = 0..{}, up to s = {TABLE_MAX}.",
        table.len() - 1
    );
    println!();
    println!("#[rustfmt::skip]");
    println!("pub(super) static TW1_TABLE: [f64; {}] = [", table.len());
    for row in table.chunks(4) {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:?}")).collect();
        println!("    {},", cells.join(", "));
    }
    println!("];");
}
