//! 4 sets → multichromatic squares (one per shift) → and, from a square
//! instance, a constant-term identity instance.

use magma_check::detect::{detect_multichromatic_kap, detect_multichromatic_square, IntSet};
use magma_check::reduce::{fourap_to_square, square_to_identity, Family, DEFAULT_WINDOW};
use magma_check::verify::{brute_force_verify, Verdict};

fn main() {
    let sets: Vec<IntSet> = [vec![1, 9], vec![4, 12], vec![7, 3], vec![10, 18]]
        .into_iter()
        .map(|m| IntSet::new(20, m).unwrap())
        .collect();
    println!("direct: {:?}", detect_multichromatic_kap(&sets).unwrap());

    let red = fourap_to_square(&sets, DEFAULT_WINDOW).unwrap();
    println!("{} shifts, matrices of size {}", red.deltas().count(), red.size());
    for delta in red.deltas() {
        let ms = red.instance(delta);
        if let Some(w) = detect_multichromatic_square(&ms).unwrap() {
            println!("delta {delta}: square {w:?} -> AP {:?}", red.witness_to_ap(delta, w));
            let inst = square_to_identity(&ms, Family::F1).unwrap();
            let v = brute_force_verify(&inst.structure, &inst.identity).unwrap();
            println!("f1 on |S| = {}: {v:?}", inst.structure.n());
            if let Verdict::Fails { witness: Some(t) } = &v {
                println!("decoded: {:?}", inst.decode_witness([t[0], t[1], t[2]]));
            }
            break;
        }
    }
}
