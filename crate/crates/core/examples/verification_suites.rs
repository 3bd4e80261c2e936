//! Running the property suites programmatically.

use mcg_cocycles::verify::{run, Config, Suite, VerifyReport};

fn main() {
    let cfg = Config { genera: vec![2, 3], samples: 50, seed: 1, ..Config::default() };
    for suite in [Suite::Words, Suite::Descent, Suite::ReferenceVectors] {
        let report = VerifyReport::new(suite, &cfg, run(suite, &cfg));
        print!("{}", report.to_text());
    }
}
