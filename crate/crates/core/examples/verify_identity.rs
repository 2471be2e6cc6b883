//! Randomized verification against the exhaustive check on Z_n.

use magma_check::expr::parse_identity_any;
use magma_check::field::FieldConfig;
use magma_check::structure::make_zn;
use magma_check::verify::{brute_force_verify, verify_identity};

fn main() {
    let ring = make_zn(24, true).unwrap();
    let cfg = FieldConfig::with_seed(1);
    for text in ["(a*b)*c = a*(b*c)", "a*(b+c) = (a*b)+(a*c)", "a*b = a+b"] {
        let id = parse_identity_any(text).unwrap();
        let fast = verify_identity(&ring, &id, &cfg).unwrap();
        let slow = brute_force_verify(&ring, &id).unwrap();
        println!("{text:<26} randomized: {fast:?}\n{:<26} exhaustive: {slow:?}", "");
    }
}
