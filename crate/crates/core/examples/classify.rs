use magma_check::expr::{classify_identity, parse_identity_any};

fn main() {
    let ids = [
        "(a*b)*c = a*(b*c)",
        "a*(b+c) = (a*b)+(a*c)",
        "((a*b)+(a*c))+(b*c) = _const",
        "(c*((a*b)*(b*a)))*(c+c) = (b*a)+(a*b)",
        "a*b = (a*b)+c",
    ];
    for text in ids {
        match classify_identity(&parse_identity_any(text).unwrap()) {
            Ok(r) => println!("{:<10} {text}", r.name()),
            Err(e) => println!("{:<10} {text} ({e})", "-"),
        }
    }
}
