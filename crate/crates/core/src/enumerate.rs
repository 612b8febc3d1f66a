//! Exhaustive minimization, the ground-truth oracle used throughout.

use crate::error::{Error, Result};
use crate::rational::Rational;

pub const ENUM_BOUND_ENV: &str = "GENROOF_MAX_ENUM";

/// Largest domain the exhaustive routines will enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumBound(pub u128);

impl Default for EnumBound {
    fn default() -> Self {
        EnumBound(3u128.pow(12))
    }
}

impl EnumBound {
    /// Reads `GENROOF_MAX_ENUM`, falling back to the default `3^12`.
    pub fn from_env() -> Self {
        std::env::var(ENUM_BOUND_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(EnumBound)
            .unwrap_or_default()
    }

    pub fn check(self, size: u128) -> Result<()> {
        if size > self.0 {
            return Err(Error::DomainTooLarge {
                size,
                bound: self.0,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minimum<L> {
    pub value: Rational,
    /// Every minimizer, in enumeration order.
    pub argmins: Vec<L>,
}

/// Minimizes `f` over `points`, which must be produced in lexicographic order.
/// `size` is the domain size checked against `bound` before any evaluation.
pub fn brute_min<L, I, F>(points: I, size: u128, bound: EnumBound, mut f: F) -> Result<Minimum<L>>
where
    I: IntoIterator<Item = L>,
    F: FnMut(&L) -> Rational,
{
    bound.check(size)?;
    let mut best: Option<Minimum<L>> = None;
    for p in points {
        let v = f(&p);
        match &mut best {
            None => {
                best = Some(Minimum {
                    value: v,
                    argmins: vec![p],
                })
            }
            Some(m) => {
                if v < m.value {
                    m.value = v;
                    m.argmins = vec![p];
                } else if v == m.value {
                    m.argmins.push(p);
                }
            }
        }
    }
    best.ok_or_else(|| Error::Precondition("empty domain".into()))
}
