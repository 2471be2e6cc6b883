//! Field and ring checks, including a single corrupted table entry.

use magma_check::algebra::fixtures::{galois_field, matrix_ring_2x2};
use magma_check::algebra::{field_verify, ring_check};
use magma_check::field::FieldConfig;
use magma_check::structure::make_zn;

fn main() {
    let gf8 = galois_field(2, &[1, 1, 0, 1]);
    println!("GF(8) field: {:?}", field_verify(&gf8).unwrap());
    println!("Z_6 field:   {:?}", field_verify(&make_zn(6, true).unwrap()).unwrap());

    let cfg = FieldConfig::default();
    let m2 = matrix_ring_2x2(2);
    println!("M_2(F_2) ring: {:?}", ring_check(&m2, &cfg, true).unwrap().verdict);

    let bad = make_zn(8, true).unwrap().mutate_entry("*", 3, 5, 0).unwrap();
    println!("Z_8 with 3*5 := 0: {:?}", ring_check(&bad, &cfg, false).unwrap().verdict);
}
