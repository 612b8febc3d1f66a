//! Exact linear programming and the relaxation programs built on it.

mod num;
pub mod relax;
pub mod simplex;

pub use relax::{
    extension_feasible, extension_program, gen_bisub_constraints, gen_submodular_constraints,
    pointwise_max_relaxation, submodular_orbit, tightest_relaxation, Extension, RelaxationClass,
    RelaxationTable, Tightest,
};
pub use simplex::{simplex_solve, Constraint, FarkasCertificate, LinearProgram, LpResult, Relation, Variable};
