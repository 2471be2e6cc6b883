use magma_check::cli::{bench, BenchSuite};

fn main() {
    for suite in [BenchSuite::Quadratic, BenchSuite::Matrix, BenchSuite::Cubic] {
        let (rows, slope) = bench(suite, &[64, 128, 256], 0).unwrap();
        for r in &rows {
            println!("{suite:?} n={} {:.2} ms ({} runs)", r.n, r.ms, r.runs);
        }
        println!("{suite:?} slope {:.2}", slope.unwrap());
    }
}
