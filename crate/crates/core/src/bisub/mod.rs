//! The half-integral domain, its doubled binary encoding, and bisubmodularity.

pub mod check;
pub mod function;
pub mod labeling;
pub mod persistency;

pub use check::{check_bisubmodular, inequality_set, is_bisubmodular, ExchangeInequality, Method, Verdict, Violation};
pub use function::{extend_to_xstar, HalfFunction, PairFunction, XStarExtension};
pub use labeling::{
    classify, decode, encode, half_join, half_meet, mate_flip, pair_join, pair_meet, reduce,
    DomainClass, HalfLabeling, PairLabeling,
};
pub use persistency::{autarky, persistency_extract, Persistency};
