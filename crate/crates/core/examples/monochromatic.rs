//! Colour coding for monochromatic APs and back.

use magma_check::detect::{detect_kap, IntSet};
use magma_check::reduce::{colorize_kap, monochromatize_kap};

fn main() {
    let a = IntSet::new(50, [2, 9, 16, 23, 31, 40]).unwrap();
    let colourings = colorize_kap(&a, 4, 1024, 7).unwrap();
    let hits = colourings.iter().filter(|c| magma_check::detect::detect_multichromatic_kap(c).unwrap().is_some()).count();
    println!("4-AP {:?}; {hits}/1024 colourings keep it multichromatic", detect_kap(&a, 4).unwrap());

    let Some(lucky) = colourings.iter().find(|c| magma_check::detect::detect_multichromatic_kap(c).unwrap().is_some()) else {
        return;
    };
    let mono = monochromatize_kap(lucky).unwrap();
    println!("{} monochromatic instances from a lucky colouring", mono.len());
    for inst in &mono {
        if let Some(w) = detect_kap(&inst.set, 4).unwrap() {
            println!("tuple {:?}: {w:?} -> {:?}", inst.tuple, inst.to_multi(w));
        }
    }
}
