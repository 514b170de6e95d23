// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Exact rationals and vertex weightings.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Arbitrary-precision fraction in lowest terms with a positive denominator.
///
/// Displays as `p/q`, or bare `p` when the denominator is one.
pub type Rational = num_rational::BigRational;

/// Shorthand for `p/q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn integer(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// A map vertex -> value in `[0, 1]`.
#[derive(Clone, PartialEq, Eq)]
pub struct Weighting {
    values: Vec<Rational>,
}

impl Weighting {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        let one = Rational::one();
        if let Some(v) = values.iter().position(|x| x.is_negative() || *x > one) {
            return Err(Error::WeightOutOfRange(v));
        }
        Ok(Weighting { values })
    }

    pub fn zeros(n: usize) -> Self {
        Weighting {
            values: vec![Rational::zero(); n],
        }
    }

    /// Every vertex gets `value`. Panics if `value` is outside `[0, 1]`.
    pub fn constant(n: usize, value: Rational) -> Self {
        Self::new(vec![value; n]).expect("constant weight in [0, 1]")
    }

    /// The 0/1 indicator of `set`.
    pub fn indicator(set: &VertexSet) -> Self {
        let mut w = Self::zeros(set.capacity());
        for v in set.iter() {
            w.values[v] = Rational::one();
        }
        w
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: usize) -> &Rational {
        &self.values[v]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// `g(V)`.
    pub fn total(&self) -> Rational {
        self.values.iter().fold(Rational::zero(), |acc, x| acc + x)
    }

    /// `g(U)` for `U = set`.
    pub fn weight_of(&self, set: &VertexSet) -> Rational {
        set.iter()
            .fold(Rational::zero(), |acc, v| acc + &self.values[v])
    }

    /// Rescales to integer numerators over the least common denominator.
    pub(crate) fn scaled(&self) -> (Vec<BigInt>, BigInt) {
        let denom = self
            .values
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let nums = self
            .values
            .iter()
            .map(|x| x.numer() * (&denom / x.denom()))
            .collect();
        (nums, denom)
    }
}

impl fmt::Debug for Weighting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.values.iter().map(|x| x.to_string()))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displays_lowest_terms() {
        assert_eq!(ratio(6, 4).to_string(), "3/2");
        assert_eq!(ratio(10, 5).to_string(), "2");
        assert_eq!(ratio(-2, -4).to_string(), "1/2");
    }

    #[test]
    fn rejects_out_of_range_weights() {
        assert_eq!(
            Weighting::new(vec![ratio(1, 2), ratio(3, 2)]),
            Err(Error::WeightOutOfRange(1))
        );
        assert_eq!(
            Weighting::new(vec![ratio(-1, 3)]),
            Err(Error::WeightOutOfRange(0))
        );
    }

    #[test]
    fn totals_and_scaling() {
        let w = Weighting::new(vec![ratio(1, 2), ratio(1, 3), integer(0)]).unwrap();
        assert_eq!(w.total(), ratio(5, 6));
        assert_eq!(w.weight_of(&VertexSet::from_iter(3, [0, 2])), ratio(1, 2));
        let (nums, d) = w.scaled();
        assert_eq!(d, BigInt::from(6));
        assert_eq!(
            nums,
            vec![BigInt::from(3), BigInt::from(2), BigInt::from(0)]
        );
    }
}
