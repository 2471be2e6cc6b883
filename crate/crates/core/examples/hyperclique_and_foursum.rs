use magma_check::detect::{detect_foursum, detect_hyperclique, IntSet};
use magma_check::reduce::{ap_to_hyperclique, fourap_to_foursum};

fn main() {
    let sets: Vec<IntSet> = [vec![3, 10], vec![5, 14], vec![7, 1], vec![9, 20]]
        .into_iter()
        .map(|m| IntSet::new(30, m).unwrap())
        .collect();

    let h = ap_to_hyperclique(&sets).unwrap();
    println!("hypergraph: q={}, parts {:?}, {} edges", h.q, h.hypergraph.part_sizes(), h.hypergraph.edge_count());
    if let Some(c) = detect_hyperclique(&h.hypergraph) {
        println!("clique {c:?} -> AP {:?}", h.to_ap(&c));
    }

    let f = fourap_to_foursum(&sets).unwrap();
    if let Some(b) = detect_foursum(&f.lists).unwrap() {
        println!("4-SUM {b:?} -> AP {:?}", f.to_ap(b));
    }
}
