//! Autarky and persistency for minimizers of bisubmodular functions.

use crate::bisub::function::HalfFunction;
use crate::bisub::labeling::{half_join, HalfLabeling};
use crate::enumerate::EnumBound;
use crate::error::{Error, Result};
use crate::pbf::{check_len, BinaryLabeling};
use crate::rational::Rational;

/// `z = (y ⊔ x) ⊔ x` for integral `y`: takes `x_i` where it is integral and
/// `y_i` where `x_i = 1/2`.
pub fn autarky(x: &HalfLabeling, y: &HalfLabeling) -> Result<BinaryLabeling> {
    check_len(x.len(), y.len())?;
    if !y.is_integral() {
        return Err(Error::NonIntegral(y.to_string()));
    }
    let z = half_join(&half_join(y, x)?, x)?;
    Ok(z.to_binary().expect("autarky labeling is integral"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Persistency {
    /// `Some(bit)` for nodes fixed by an integral component of the minimizer.
    pub fixed: Vec<Option<bool>>,
    /// An integral minimizer agreeing with every fixed node.
    pub minimizer: BinaryLabeling,
    pub value: Rational,
}

impl Persistency {
    pub fn fixed_nodes(&self) -> Vec<usize> {
        (0..self.fixed.len()).filter(|&i| self.fixed[i].is_some()).collect()
    }
}

/// Fixes the integral components of the half-integral minimizer `x_hat`,
/// completes the remaining nodes by enumeration and confirms the completion
/// attains the minimum of `f` over binary labelings.
pub fn persistency_extract(
    f: &HalfFunction,
    x_hat: &HalfLabeling,
    bound: EnumBound,
) -> Result<Persistency> {
    check_len(f.n(), x_hat.len())?;
    let half_min = f.minimize(bound)?;
    if f.eval(x_hat)? != half_min.value {
        return Err(Error::NotMinimizer(x_hat.to_string()));
    }
    let fixed: Vec<Option<bool>> = x_hat
        .doubled()
        .iter()
        .map(|&t| match t {
            0 => Some(false),
            2 => Some(true),
            _ => None,
        })
        .collect();
    let binary_min = f.minimize_binary(bound)?;

    let mut best: Option<(BinaryLabeling, Rational)> = None;
    for y in BinaryLabeling::all(f.n()) {
        let agrees = fixed
            .iter()
            .zip(y.bits())
            .all(|(fx, &b)| fx.is_none_or(|v| v == b));
        if !agrees {
            continue;
        }
        let v = f.eval(&HalfLabeling::from_binary(&y))?;
        if best.as_ref().is_none_or(|(_, bv)| v < *bv) {
            best = Some((y, v));
        }
    }
    let (minimizer, value) = best.expect("at least one completion exists");
    if value != binary_min.value {
        return Err(Error::PersistencyViolated {
            completion: value.to_string(),
            minimum: binary_min.value.to_string(),
        });
    }
    Ok(Persistency {
        fixed,
        minimizer,
        value,
    })
}
