//! Tightest bisubmodular and submodular relaxations of a four-variable
//! function whose two relaxation classes disagree.
//!
//! ```text
//! cargo run --release --example relaxation_gap
//! ```

use genroof::bisub::PairLabeling;
use genroof::card::fig1d;
use genroof::lp::{pointwise_max_relaxation, tightest_relaxation, RelaxationClass};

fn main() {
    let f = fig1d();
    for class in [RelaxationClass::Bisubmodular, RelaxationClass::Submodular] {
        let r = tightest_relaxation(&f, class).expect("a relaxation always exists");
        println!("{class:>6}: max min g = {}", r.t);
    }

    // the gap also shows up pointwise at the all-(0,0) labeling
    let u0 = PairLabeling::zeros(4);
    for class in [RelaxationClass::Bisubmodular, RelaxationClass::Submodular] {
        let v = pointwise_max_relaxation(&f, &u0, class).unwrap();
        println!("{class:>6}: max g({u0}) = {v}");
    }
}
