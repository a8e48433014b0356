//! Exact money arithmetic in integer minor units (US cents).
//!
//! Ledger entries and capex/opex sums stay exact; division-heavy derived
//! metrics (NPV, cost per subscriber) convert to f64 at the edges.

use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Money(i64);

impl Money {
    pub const ZERO: Money = Money(0);

    pub const fn from_cents(cents: i64) -> Self {
        Money(cents)
    }

    /// Whole-dollar constructor, exact.
    pub const fn from_usd_int(usd: i64) -> Self {
        Money(usd * 100)
    }

    /// Rounds to the nearest cent, ties away from zero.
    pub fn from_usd(usd: f64) -> Self {
        Money(libm::round(usd * 100.0) as i64)
    }

    pub const fn cents(&self) -> i64 {
        self.0
    }

    pub fn as_usd(&self) -> f64 {
        self.0 as f64 / 100.0
    }

    /// Scale by a count, exact.
    pub fn mul_u64(&self, n: u64) -> Money {
        Money(self.0 * n as i64)
    }

    /// Scale by a real factor, rounded to the nearest cent.
    pub fn mul_f64(&self, k: f64) -> Money {
        Money(libm::round(self.0 as f64 * k) as i64)
    }
}

impl Add for Money {
    type Output = Money;
    fn add(self, rhs: Money) -> Money {
        Money(self.0 + rhs.0)
    }
}

impl AddAssign for Money {
    fn add_assign(&mut self, rhs: Money) {
        self.0 += rhs.0;
    }
}

impl Sub for Money {
    type Output = Money;
    fn sub(self, rhs: Money) -> Money {
        Money(self.0 - rhs.0)
    }
}

impl Sum for Money {
    fn sum<I: Iterator<Item = Money>>(iter: I) -> Money {
        iter.fold(Money::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for Money {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.0 < 0 { "-" } else { "" };
        let abs = self.0.unsigned_abs();
        write!(f, "{}{}.{:02}", sign, abs / 100, abs % 100)
    }
}
