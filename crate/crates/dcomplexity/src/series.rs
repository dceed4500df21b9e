//! Truncated integer power series obtained by exact polynomial long
//! division. Coefficient `n` of the three series below reproduces `c_{n,d}`,
//! `b_{n,d}` and `N(n, d)` respectively, giving an independent route to each.

use crate::error::{Error, Result};
use crate::word::Gap;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// A truncated power series with exact integer coefficients, constant term
/// first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSeries {
    coefficients: Vec<BigInt>,
}

impl IntSeries {
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Coefficient of `z^n`, zero past the truncation order.
    pub fn coefficient(&self, n: usize) -> BigInt {
        self.coefficients.get(n).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn truncation_order(&self) -> usize {
        self.coefficients.len() - 1
    }
}

/// Divides `numerator` by `denominator` as power series, keeping terms up to
/// `z^order`. Every step must divide exactly over the integers; a remainder
/// anywhere means the rational function is not integral and the caller's
/// formula is wrong.
fn divide_exact(numerator: &[BigInt], denominator: &[BigInt], order: usize) -> Result<IntSeries> {
    let d0 = denominator
        .first()
        .filter(|c| !c.is_zero())
        .ok_or_else(|| Error::DomainError("denominator has zero constant term".into()))?;
    let mut q: Vec<BigInt> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = numerator.get(n).cloned().unwrap_or_else(BigInt::zero);
        for j in 1..=n.min(denominator.len() - 1) {
            acc -= &denominator[j] * &q[n - j];
        }
        let (quot, rem) = acc.div_rem(d0);
        if !rem.is_zero() {
            return Err(Error::InternalInvariantBroken(format!(
                "non-exact series division at order {n}"
            )));
        }
        q.push(quot);
    }
    Ok(IntSeries { coefficients: q })
}

/// Denominator `1 - 2z + z^{d+1}` shared by all three generating functions.
fn core_denominator(d: usize) -> Vec<BigInt> {
    let mut den = vec![BigInt::zero(); d + 2];
    den[0] = BigInt::one();
    den[1] = BigInt::from(-2);
    den[d + 1] = BigInt::one();
    den
}

/// Generating function of `c_{n,d}`:
/// `(1 + (d-2)z - z^2 - ... - z^d) / (1 - 2z + z^{d+1})`, for `d >= 2`.
pub fn series_f(d: Gap, order: usize) -> Result<IntSeries> {
    if d.get() < 2 {
        return Err(Error::DNotSupported);
    }
    let dv = d.get();
    let mut num = vec![BigInt::zero(); dv + 1];
    num[0] = BigInt::one();
    num[1] = BigInt::from(dv as i64 - 2);
    for c in num.iter_mut().take(dv + 1).skip(2) {
        *c = BigInt::from(-1);
    }
    divide_exact(&num, &core_denominator(dv), order)
}

/// Generating function of `b_{n,d}`: `z(1 - z) / (1 - 2z + z^{d+1})`.
pub fn series_b(d: Gap, order: usize) -> Result<IntSeries> {
    let num = vec![BigInt::zero(), BigInt::one(), BigInt::from(-1)];
    divide_exact(&num, &core_denominator(d.get()), order)
}

/// Generating function of `N(n, d)`: `z / ((1 - z)(1 - 2z + z^{d+1}))`.
pub fn series_n(d: Gap, order: usize) -> Result<IntSeries> {
    let num = vec![BigInt::zero(), BigInt::one()];
    // (1 - z) * (1 - 2z + z^{d+1})
    let core = core_denominator(d.get());
    let mut den = vec![BigInt::zero(); core.len() + 1];
    for (i, c) in core.iter().enumerate() {
        den[i] += c;
        den[i + 1] -= c;
    }
    divide_exact(&num, &den, order)
}
