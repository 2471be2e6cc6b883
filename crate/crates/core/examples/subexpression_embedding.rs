use magma_check::expr::{parse_expression, Identity};
use magma_check::reduce::subexpression_embedding;
use magma_check::structure::{OpTable, Structure};
use magma_check::verify::brute_force_verify;

fn main() {
    // everything is 0 except 1*2 = 1
    let t = OpTable::from_fn(3, |x, y| if x == 1 && y == 2 { 1 } else { 0 });
    let s = Structure::new(3, vec![("*".into(), t)]).unwrap().with_constant("inf", 0).unwrap();
    for text in ["(a*b)*c", "(a*b)*(c*a)"] {
        let f = parse_expression(text, None).unwrap();
        let emb = subexpression_embedding(&s, &f).unwrap();
        let plain = brute_force_verify(&s, &Identity::ConstantTerm(f)).unwrap();
        let lifted = brute_force_verify(&emb.structure, &emb.identity).unwrap();
        println!("{text}: {} -> {} elements, constant {} / {}", s.n(), emb.structure.n(), plain.holds(), lifted.holds());
    }
}
