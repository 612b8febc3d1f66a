//! Two bisubmodular relaxations of one function: only one of them extends to
//! a symmetric submodular function on the doubled domain. The other comes with
//! an exact infeasibility certificate.

use genroof::card::{check_card_conditions, expand, fig1b, fig1c};
use genroof::lp::{extension_feasible, LpResult};

fn main() {
    for (name, g) in [("fig1b", fig1b().unwrap()), ("fig1c", fig1c().unwrap())] {
        println!("{name}: conditions hold = {}", check_card_conditions(&g).is_none());
        let ext = extension_feasible(&expand(&g), true).unwrap();
        match &ext.result {
            LpResult::Infeasible(cert) => {
                println!("  no extension; certificate verifies = {}", cert.verify(&ext.lp));
                for k in cert.support() {
                    println!("  {} x [{}]", cert.multipliers[k], ext.lp.constraints()[k].name);
                }
            }
            feasible => {
                let x = feasible.assignment().unwrap();
                for (v, value) in ext.lp.variables().iter().zip(x) {
                    println!("  {} = {value}", v.name);
                }
            }
        }
    }
}
