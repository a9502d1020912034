//! Runs every verification suite and prints one summary line per suite.

use weyl_cartan::analysis::{self, AnalysisOptions};
use weyl_cartan::classical::{self, ClassicalOptions};
use weyl_cartan::{cartan, su11, weyl};

fn main() {
    let reports = vec![
        weyl::suite::verify_suite(2),
        cartan::verify_suite(8),
        su11::verify_suite(8, 10),
        classical::verify_suite(&ClassicalOptions::default()).expect("classical suite"),
        analysis::verify_suite(&AnalysisOptions::default()),
    ];
    let mut ok = true;
    for r in &reports {
        println!("{}", r.summary_line());
        for c in r.failures() {
            println!("  {:?} {} [{}] residual {:.2e}", c.status, c.tag, c.params, c.residual);
        }
        ok &= r.passed();
    }
    std::process::exit(if ok { 0 } else { 1 });
}
