use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Laurent2, RationalQL};
use crate::error::{Error, Result};

/// Laurent polynomial in `u = q/(1-q)^2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ULaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl ULaurent {
    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        let mut out = Self::default();
        out.add_term(k, c.into());
        out
    }

    /// `Σ_i coeffs[i] u^(offset + i)`.
    pub fn from_coefficients<C: Into<BigInt> + Clone>(offset: i64, coeffs: &[C]) -> Self {
        let mut out = Self::default();
        for (i, c) in coeffs.iter().enumerate() {
            out.add_term(offset + i as i64, c.clone().into());
        }
        out
    }

    pub fn add_term(&mut self, k: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn coefficient(&self, k: i64) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    /// Coefficients of `u^offset, u^(offset+1), ..., u^(offset+len-1)`.
    pub fn coefficients(&self, offset: i64, len: usize) -> Vec<BigInt> {
        (0..len as i64).map(|i| self.coefficient(offset + i)).collect()
    }

    /// The class in `q`: `u^k = q^k (1-q)^(-2k)`.
    pub fn to_rational(&self) -> RationalQL {
        let mut out = RationalQL::zero();
        for (&k, c) in &self.terms {
            let term = if k >= 0 {
                RationalQL::new(Laurent2::monomial(c.clone(), k, 0), 2 * k as u32, 0)
            } else {
                let one_minus_q = &Laurent2::one() - &Laurent2::q();
                RationalQL::from_laurent(&Laurent2::monomial(c.clone(), k, 0) * &one_minus_q.pow(2 * k.unsigned_abs() as u32))
            };
            out = &out + &term;
        }
        out
    }

    /// Writes an `L`-free class as a Laurent polynomial in `u` by peeling off
    /// the lowest power of `q` until nothing is left.
    pub fn from_q_series(f: &RationalQL) -> Result<Self> {
        if f.den_qx() > 0 || !f.numerator().is_x_free() {
            return Err(Error::NotExpressibleInU(format!("{f} involves L")));
        }
        let mut out = Self::default();
        if f.is_zero() {
            return Ok(out);
        }
        // u^k has order -2k at q = 1, so the top power is half the pole order.
        let order = if f.den_q() > 0 {
            -i64::from(f.den_q())
        } else {
            i64::from(f.numerator().multiplicity_of_one_minus(1, 0))
        };
        if order % 2 != 0 {
            return Err(Error::NotExpressibleInU(format!("{f} has odd order {order} at q = 1")));
        }
        let top = -order / 2;
        let mut rest = f.clone();
        while !rest.is_zero() {
            let m = rest.numerator().min_q().expect("nonzero numerator");
            if m > top {
                return Err(Error::NotExpressibleInU(format!("{f}: remainder {rest} starts above u^{top}")));
            }
            let c = rest.numerator().coefficient(m, 0);
            let piece = Self::monomial(c.clone(), m);
            rest = &rest - &piece.to_rational();
            out.add_term(m, c);
        }
        Ok(out)
    }
}

impl Zero for ULaurent {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for ULaurent {
    fn one() -> Self {
        Self::monomial(1, 0)
    }
}

impl Add for ULaurent {
    type Output = ULaurent;
    fn add(mut self, rhs: ULaurent) -> ULaurent {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl Mul for ULaurent {
    type Output = ULaurent;
    fn mul(self, rhs: ULaurent) -> ULaurent {
        let mut out = ULaurent::default();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl fmt::Display for ULaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (&k, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if n == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.abs();
            match (abs.is_one(), k) {
                (_, 0) => write!(f, "{abs}")?,
                (true, 1) => f.write_str("u")?,
                (true, _) => write!(f, "u^{k}")?,
                (false, 1) => write!(f, "{abs}*u")?,
                (false, _) => write!(f, "{abs}*u^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_minus_q() -> RationalQL {
        RationalQL::one() - RationalQL::q()
    }

    #[test]
    fn pure_power() {
        for g in 0..4i64 {
            // q^(1-g) (1-q)^(2(g-1)) = u^(1-g)
            let f = if g >= 1 {
                &RationalQL::monomial(1, 1 - g, 0) * &one_minus_q().pow(2 * (g - 1) as u32)
            } else {
                &RationalQL::q() * &RationalQL::inverse_denominator(2, 0)
            };
            assert_eq!(ULaurent::from_q_series(&f).unwrap(), ULaurent::monomial(1, 1 - g), "g = {g}");
        }
    }

    #[test]
    fn node_factor_identity() {
        // (1 - q + q^2) = (1-q)^2 (1 + u)
        let lhs = RationalQL::one() - RationalQL::q() + RationalQL::monomial(1, 2, 0);
        let rhs = &one_minus_q().pow(2) * &ULaurent::from_coefficients(0, &[1, 1]).to_rational();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn triangle_expansion() {
        let node = RationalQL::one() - RationalQL::q() + RationalQL::monomial(1, 2, 0);
        let f = &node.pow(3) * &RationalQL::inverse_denominator(6, 0);
        assert_eq!(
            ULaurent::from_q_series(&f).unwrap(),
            ULaurent::from_coefficients(0, &[1, 3, 3, 1])
        );
    }

    #[test]
    fn rejects_non_u_series() {
        assert!(ULaurent::from_q_series(&RationalQL::inverse_denominator(1, 0)).is_err());
        assert!(ULaurent::from_q_series(&RationalQL::x()).is_err());
        // 1/(1-q)^2 = u/q is not a Laurent polynomial in u.
        assert!(ULaurent::from_q_series(&RationalQL::inverse_denominator(2, 0)).is_err());
    }

    #[test]
    fn render() {
        assert_eq!(ULaurent::from_coefficients(-1, &[1, -2, 0, 3]).to_string(), "u^-1 - 2 + 3*u^2");
    }
}
