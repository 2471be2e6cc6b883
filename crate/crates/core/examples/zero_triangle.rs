use magma_check::detect::{detect_zero_triangle_graph, WeightedGraph};
use magma_check::reduce::{zero_triangle_to_constant_identity, zero_triangle_to_counting};
use magma_check::verify::{brute_force_verify, count_distributive_triples, Verdict};

fn main() {
    let mut g = WeightedGraph::new(4);
    g.set(0, 1, 3);
    g.set(1, 2, -1);
    g.set(0, 2, -2);
    g.set(2, 3, 4);
    println!("zero triangle: {:?}", detect_zero_triangle_graph(&g));

    let ctic = zero_triangle_to_constant_identity(&g).unwrap();
    let v = brute_force_verify(&ctic.structure, &ctic.identity).unwrap();
    println!("constant identity on |S| = {}: {v:?}", ctic.structure.n());
    if let Verdict::Fails { witness: Some(t) } = &v {
        println!("decoded triangle: {:?}", ctic.decode_witness([t[0], t[1], t[2]]));
    }

    let s = zero_triangle_to_counting(&g).unwrap();
    let count = count_distributive_triples(&s).unwrap();
    let n = s.n() as u64;
    println!("|S| = {n}: {count} distributive triples, {} above |S|^3 - n^3", count as i64 - (n.pow(3) - 64) as i64);
}
