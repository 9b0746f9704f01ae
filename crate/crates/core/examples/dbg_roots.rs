use fanopencil::covariants::Covariants;
use fanopencil::fano::FanoContext;
use fanopencil::pencil::lift;
use fanopencil::poly::{UniPoly, Var};

fn main() {
    let ctx = FanoContext::new();
    let cov = Covariants::new();
    let start = std::time::Instant::now();
    // X (X^2-1)(X^2-4)(X^2-9) = X^7 - 14 X^5 + 49 X^3 - 36 X
    let p = UniPoly::from_ints(Var::X, &[0, -36, 0, 49, 0, -14, 0, 1]);
    let report = lift(&ctx, &cov, &p, 200, None).unwrap();
    println!("took {:?}", start.elapsed());
    println!(
        "certified {} | degenerate {} | not rational {} | not certified {}",
        report.certified.len(),
        report.skipped_degenerate.len(),
        report.not_rational.len(),
        report.not_certified.len()
    );
    let paper_q = UniPoly::from_ints(
        Var::X,
        &[-151380, -192228, -22709, 93494, 28812, -18578, -259],
    );
    for c in &report.certified {
        if c.q.proportionality(&paper_q).is_some() {
            println!("structure {} matches the published Q", c.structure_index);
        }
    }
}
