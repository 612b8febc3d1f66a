//! The exact simplex: an optimum, an infeasibility certificate and an
//! unbounded ray, each re-verified against the program.

use genroof::lp::{LinearProgram, LpResult, Relation};
use genroof::rational::{int, rat};

fn main() {
    let mut lp = LinearProgram::new();
    let x = lp.add_variable("x", Some(int(0)), None);
    let y = lp.add_variable("y", Some(int(0)), None);
    lp.set_objective(vec![(x, int(3)), (y, int(2))]).unwrap();
    lp.add_constraint("cap", vec![(x, int(1)), (y, int(1))], Relation::Le, int(4)).unwrap();
    lp.add_constraint("mix", vec![(x, int(1)), (y, int(3))], Relation::Le, int(6)).unwrap();
    lp.add_constraint("slope", vec![(x, int(2)), (y, int(-1))], Relation::Le, rat(13, 2)).unwrap();
    print!("{}", lp.to_text());
    let res = lp.solve();
    println!("{} {:?} verified {}", res.status(), res.value().map(|v| v.to_string()), res.verify(&lp));

    lp.add_constraint("floor", vec![(x, int(1)), (y, int(1))], Relation::Ge, int(5)).unwrap();
    if let LpResult::Infeasible(cert) = lp.solve() {
        let named: Vec<String> = cert
            .support()
            .into_iter()
            .map(|k| format!("{} x {}", cert.multipliers[k], lp.constraints()[k].name))
            .collect();
        println!("infeasible: {} verified {}", named.join(", "), cert.verify(&lp));
    }

    let mut open = LinearProgram::new();
    let t = open.add_free("t");
    open.set_objective(vec![(t, int(1))]).unwrap();
    open.add_constraint("low", vec![(t, int(1))], Relation::Ge, int(0)).unwrap();
    let res = open.solve();
    println!("{} verified {}", res.status(), res.verify(&open));
}
