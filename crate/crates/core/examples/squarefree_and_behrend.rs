use magma_check::detect::detect_square;
use magma_check::reduce::{behrend_partition, best_behrend_partition, squarefree_matrices};

fn main() {
    for n in [100, 1000, 5000] {
        let p = behrend_partition(n, 16);
        let best = best_behrend_partition(n);
        println!("n={n}: q=16 gives {} classes, best q={} gives {}", p.len(), best.q, best.len());
    }
    let ms = squarefree_matrices(40);
    let ones: usize = ms.iter().map(|m| m.count_ones()).sum();
    let clean = ms.iter().all(|m| detect_square(m).unwrap().is_none());
    println!("{} square-free masks on 40x40 covering {ones} cells, all clean: {clean}", ms.len());
}
