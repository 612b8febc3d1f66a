//! The Lovász extension of a function on {-1, 0, 1}^n: evaluation, convexity
//! and total half-integrality.

use genroof::lovasz::{
    convexity_probe, lovasz_eval, signed_ordering_of, total_integrality_verify, LPoint, ProbeMode,
    SignedFunction,
};
use genroof::rational::{int, rat};

fn main() {
    // h(v) = max(v1, v2, 0) + |v1 - v2|, bisubmodular on {-1,0,1}^2
    let h = SignedFunction::from_fn(2, |v| {
        let m = v[0].max(v[1]).max(0);
        int(m as i64 + (v[0] - v[1]).abs() as i64)
    });
    let x = LPoint::new(vec![rat(1, 3), rat(-3, 4)]).unwrap();
    println!("ordering at {x}: {}", signed_ordering_of(&x));
    println!("h^({x}) = {}", lovasz_eval(&h, &x).unwrap());
    println!("grid probe: {:?}", convexity_probe(&h, ProbeMode::default()).unwrap().map(|w| (w.x, w.y)));
    let report = total_integrality_verify(&h, None).unwrap();
    println!("totally half-integral: {} ({} functions)", report.holds(), report.functions_checked);

    // a bump at the origin breaks convexity
    let bump = SignedFunction::from_fn(1, |v| int((v[0] == 0) as i64));
    let w = convexity_probe(&bump, ProbeMode::default()).unwrap().unwrap();
    println!("bump: midpoint of {} and {} has value {} > {}", w.x, w.y, w.midpoint_value, w.average);
    println!("bump: {}", total_integrality_verify(&bump, None).unwrap().failure.unwrap());
}
