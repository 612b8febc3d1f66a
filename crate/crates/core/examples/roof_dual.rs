//! Roof duality on a small frustrated quadratic: the bound from one max-flow,
//! the half-integral minimizer and the nodes it fixes.

use genroof::bisub::persistency_extract;
use genroof::enumerate::{brute_min, EnumBound};
use genroof::pbf::{edge_table, BinaryLabeling, QuadraticPbf};
use genroof::rational::int;
use genroof::roof::solve_roofdual;

fn main() {
    // x4 wants to be 0; the triangle on x1..x3 is frustrated
    let mut q = QuadraticPbf::new(4);
    q.add_unary(3, int(0), int(3)).unwrap();
    let differ = || edge_table(int(2), int(0), int(0), int(2));
    q.add_edge(0, 1, differ()).unwrap();
    q.add_edge(1, 2, differ()).unwrap();
    q.add_edge(0, 2, differ()).unwrap();
    q.add_edge(2, 3, edge_table(int(1), int(0), int(0), int(1))).unwrap();

    let s = solve_roofdual(&q).unwrap();
    println!("roof-dual bound  {}", s.bound);
    println!("x_hat            {}", s.x_hat);
    println!("u = (x|y)        {}", s.u);

    let exact = brute_min(BinaryLabeling::all(4), 16, EnumBound::default(), |x| q.eval(x).unwrap()).unwrap();
    println!("min f            {} at {}", exact.value, exact.argmins[0]);

    let g = s.g.to_pair_function().restrict_minus();
    let p = persistency_extract(&g, &s.x_hat, EnumBound::default()).unwrap();
    for i in p.fixed_nodes() {
        println!("x{} is fixed to {}", i + 1, p.fixed[i].unwrap() as u8);
    }
}
