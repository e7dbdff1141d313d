//! Growth of the unital subring count of M2(GF(2^n)): the ratio against
//! sigma(n) 2^{2n} / 2 tends to 1 as n grows, but the convergence is very
//! slow. These are the predicted counts only, no ring is enumerated.

use ringgraph::verify::{asymptotic_ratio, predict_m2};

fn main() {
    println!("{:>3} {:>16} {:>9}", "n", "v1(M2(GF(2^n)))", "ratio");
    for n in 1..=16u64 {
        let v1 = predict_m2(2, n, true).vertex_count;
        println!("{n:>3} {v1:>16} {:>9.4}", asymptotic_ratio(2, n));
    }
}
