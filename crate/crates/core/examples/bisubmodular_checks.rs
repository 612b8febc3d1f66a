//! The four characterizations of bisubmodularity on a few functions, and the
//! sizes of their inequality systems.

use genroof::bisub::{check_bisubmodular, inequality_set, HalfFunction, Method};
use genroof::rational::{int, rat};

fn report(name: &str, g: &HalfFunction) {
    print!("{name:<22}");
    for m in Method::ALL {
        print!(" {m}:{}", check_bisubmodular(g, m).holds());
    }
    println!();
    if let Some(v) = check_bisubmodular(g, Method::C).violation {
        println!("  {} + {} > {} + {}  ({} > {})", v.low, v.high, v.u, v.v, v.lhs, v.rhs);
    }
}

fn main() {
    // |x - 1/2| summed over nodes: convex in each coordinate
    let tent = HalfFunction::from_fn(2, |x| x.doubled().iter().map(|&t| rat((t != 1) as i64, 2)).sum());
    report("sum |x_i - 1/2|", &tent);

    let bump = HalfFunction::from_fn(2, |x| int((x.doubled() == [1, 1]) as i64));
    report("bump at (1/2, 1/2)", &bump);

    let modular = HalfFunction::from_fn(3, |x| x.values().iter().sum());
    report("x1 + x2 + x3", &modular);

    for n in 1..=4 {
        let sizes: Vec<String> = Method::ALL
            .iter()
            .map(|&m| format!("{m}={}", inequality_set(n, m).len()))
            .collect();
        println!("n = {n}: nontrivial inequalities {}", sizes.join(" "));
    }
}
