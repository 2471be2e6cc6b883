use magma_check::detect::{detect_kap, detect_square, detect_triangle, BinaryMatrix, Graph, IntSet};

fn main() {
    let m = BinaryMatrix::from_strs(&["1010", "0000", "1010", "0001"]);
    println!("square: {:?}", detect_square(&m).unwrap());

    let primes = IntSet::new(60, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]).unwrap();
    println!("3-AP in primes: {:?}", detect_kap(&primes, 3).unwrap());
    println!("4-AP in primes: {:?}", detect_kap(&primes, 4).unwrap());

    let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
    println!("triangle in C5: {:?}", detect_triangle(&c5));
}
