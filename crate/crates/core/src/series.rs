//! Univariate power series over the rationals, truncated after `x^order`.

use num_traits::{One, Zero};

use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Series(pub Vec<Rational>);

impl Series {
    pub fn from_fn(order: usize, f: impl Fn(usize) -> Rational) -> Self {
        Series((0..=order).map(f).collect())
    }

    pub fn order(&self) -> usize {
        self.0.len() - 1
    }

    pub fn mul(&self, other: &Series) -> Series {
        let n = self.order();
        Series::from_fn(n, |k| {
            (0..=k).fold(Rational::zero(), |acc, i| acc + &self.0[i] * &other.0[k - i])
        })
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Series {
        let n = self.order();
        let a0 = self.0[0].clone();
        assert!(!a0.is_zero(), "series with zero constant term is not invertible");
        let mut b = vec![Rational::zero(); n + 1];
        b[0] = a0.recip();
        for k in 1..=n {
            let s = (1..=k).fold(Rational::zero(), |acc, i| acc + &self.0[i] * &b[k - i]);
            b[k] = -s / &a0;
        }
        Series(b)
    }

    /// `log` of a series with constant term 1, via `(log f)' = f'/f`.
    pub fn log(&self) -> Series {
        assert!(self.0[0].is_one(), "log needs constant term 1");
        let n = self.order();
        let deriv = Series::from_fn(n, |k| {
            if k < n {
                &self.0[k + 1] * int(k as i64 + 1)
            } else {
                Rational::zero()
            }
        });
        let q = deriv.mul(&self.inverse());
        Series::from_fn(n, |k| {
            if k == 0 {
                Rational::zero()
            } else {
                &q.0[k - 1] / int(k as i64)
            }
        })
    }
}

/// Coefficients of `x^k / k!` style factorials as rationals.
pub(crate) fn factorial(k: usize) -> Rational {
    (1..=k as i64).fold(Rational::one(), |acc, i| acc * int(i))
}
