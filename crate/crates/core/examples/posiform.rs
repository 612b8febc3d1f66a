//! From a table to a multilinear polynomial, a posiform with nonpositive
//! monomials, and the symmetric submodular relaxation built from it.

use genroof::pbf::{BinaryLabeling, PbfTable};
use genroof::poly::{posiform_decompose, to_multilinear};
use genroof::rational::int;
use genroof::roof::build_submodular_relaxation;

fn main() {
    // x1 x2 x3 - 2 x1 x2 + x3
    let f = PbfTable::from_fn(3, |x| {
        let b: Vec<i64> = x.bits().iter().map(|&v| v as i64).collect();
        int(b[0] * b[1] * b[2] - 2 * b[0] * b[1] + b[2])
    });
    let poly = to_multilinear(&f);
    for (nodes, c) in poly.terms() {
        println!("coefficient of {nodes:?}: {c}");
    }
    let p = posiform_decompose(&f);
    println!("posiform constant {}", p.constant);
    for m in &p.monomials {
        println!("  {m}");
    }
    let g = build_submodular_relaxation(&f);
    println!("relaxation symmetric {} submodular {} tight {}", g.is_symmetric(), g.is_submodular(), g.is_relaxation_of(&f));
    let x = BinaryLabeling::from_index(3, 0b110);
    println!("f({x}) = {}", f.eval(&x).unwrap());
}
