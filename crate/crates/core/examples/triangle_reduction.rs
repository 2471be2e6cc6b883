//! A graph becomes a structure that is distributive iff the graph has no
//! triangle.

use magma_check::detect::{detect_triangle, Graph};
use magma_check::expr::parse_identity_any;
use magma_check::field::FieldConfig;
use magma_check::reduce::triangle_to_distributivity;
use magma_check::verify::verify_identity;
use rand::SeedableRng;

fn main() {
    let dist = parse_identity_any("a*(b+c) = (a*b)+(a*c)").unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for p in [0.1, 0.2, 0.4] {
        let g = Graph::random(20, p, &mut rng);
        let s = triangle_to_distributivity(&g).unwrap();
        let v = verify_identity(&s, &dist, &FieldConfig::default()).unwrap();
        println!("p={p}: triangle {:?}, distributive {}", detect_triangle(&g), v.holds());
    }
}
