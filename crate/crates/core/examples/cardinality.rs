//! Cardinality-dependent functions: the conditions on G and the expanded
//! function on {0, 1/2, 1}^n.

use genroof::bisub::{is_bisubmodular, HalfLabeling};
use genroof::card::{check_card_conditions, expand, CardinalityFn};
use genroof::rational::int;

fn main() {
    // concave in each count, rising towards the integral layer
    let g = CardinalityFn::from_fn(3, |a, b| int((3 * (a + b) - a * a - b * b) as i64));
    let h = expand(&g);
    match check_card_conditions(&g) {
        None => println!("conditions hold"),
        Some(v) => println!("violated {v}"),
    }
    println!("expanded is bisubmodular: {}", is_bisubmodular(&h));
    for x in ["000", "0h1", "hhh", "111"] {
        let x: HalfLabeling = x.parse().unwrap();
        println!("  g({x}) = {}", h.eval(&x).unwrap());
    }

    let square = CardinalityFn::from_fn(2, |a, _| int((a * a) as i64));
    let v = check_card_conditions(&square).unwrap();
    println!("a^2 fails: {v}");
    println!("expanded is bisubmodular: {}", is_bisubmodular(&expand(&square)));
}
