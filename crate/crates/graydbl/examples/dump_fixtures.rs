//! Dump a few JSON fixtures: a double category, a valid monoid structure and
//! one with the wrong unit. Usage: `cargo run --example dump_fixtures <dir>`.
use graydbl::dbl::{zoo, ObjId};
use graydbl::monoid::discrete_monoid_data;

fn main() {
    let dir = std::env::args().nth(1).unwrap_or_else(|| ".".into());
    let mut broken = discrete_monoid_data(&zoo::cyclic_table(2), 0);
    broken.unit = ObjId(1);
    std::fs::write(
        format!("{dir}/broken-unit.json"),
        serde_json::to_string_pretty(&broken).unwrap(),
    )
    .unwrap();
    let good = discrete_monoid_data(&zoo::cyclic_table(2), 0);
    std::fs::write(format!("{dir}/xor-monoid.json"), serde_json::to_string_pretty(&good).unwrap())
        .unwrap();
    std::fs::write(
        format!("{dir}/generator.json"),
        serde_json::to_string_pretty(&zoo::generator()).unwrap(),
    )
    .unwrap();
}
