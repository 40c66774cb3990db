use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::Laurent2;
use crate::error::{Error, Result};

/// `num / ((1 - q)^den_q * (1 - q x^K)^den_qx)` over Laurent polynomials in
/// `q` and `x`, kept with no common factor of `1 - q` or `1 - q x^K`
/// between numerator and denominator. Both denominators are irreducible and
/// the only units are signed monomials, so this form is unique and
/// structural equality is equality of classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Localized<const K: i64> {
    num: Laurent2,
    den_q: u32,
    den_qx: u32,
}

/// Classes in `q` and `L`, localized at `1 - q` and `1 - qL`.
pub type RationalQL = Localized<1>;

/// Weight polynomials in `q` and `t`, localized at `1 - q` and `1 - qt^2`.
pub type WeightPoly = Localized<2>;

impl<const K: i64> Localized<K> {
    pub fn new(num: Laurent2, den_q: u32, den_qx: u32) -> Self {
        let mut out = Self { num, den_q, den_qx };
        out.canonicalize();
        out
    }

    pub fn from_laurent(num: Laurent2) -> Self {
        Self::new(num, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, i: i64, j: i64) -> Self {
        Self::from_laurent(Laurent2::monomial(c, i, j))
    }

    pub fn integer(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    /// The second variable: `L` or `t`.
    pub fn x() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `1 / ((1 - q)^a (1 - q x^K)^b)`.
    pub fn inverse_denominator(a: u32, b: u32) -> Self {
        Self::new(Laurent2::one(), a, b)
    }

    pub fn numerator(&self) -> &Laurent2 {
        &self.num
    }

    pub fn den_q(&self) -> u32 {
        self.den_q
    }

    pub fn den_qx(&self) -> u32 {
        self.den_qx
    }

    pub fn is_polynomial(&self) -> bool {
        self.den_q == 0 && self.den_qx == 0
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.den_q = 0;
            self.den_qx = 0;
            return;
        }
        while self.den_q > 0 {
            match self.num.div_one_minus(1, 0) {
                Some(n) => {
                    self.num = n;
                    self.den_q -= 1;
                }
                None => break,
            }
        }
        while self.den_qx > 0 {
            match self.num.div_one_minus(1, K) {
                Some(n) => {
                    self.num = n;
                    self.den_qx -= 1;
                }
                None => break,
            }
        }
    }

    fn one_minus_q() -> Laurent2 {
        &Laurent2::one() - &Laurent2::q()
    }

    fn one_minus_qx() -> Laurent2 {
        &Laurent2::one() - &Laurent2::monomial(1, 1, K)
    }

    /// Numerator over the larger denominator `(a, b)`.
    fn lifted(&self, a: u32, b: u32) -> Laurent2 {
        let mut n = self.num.clone();
        n = &n * &Self::one_minus_q().pow(a - self.den_q);
        &n * &Self::one_minus_qx().pow(b - self.den_qx)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// `(q x)^e` for any integer `e`.
    pub fn qx_power(e: i64) -> Self {
        Self::monomial(1, e, e)
    }

    /// Equality by cross-multiplication, independent of canonical form.
    pub fn cross_eq(&self, other: &Self) -> bool {
        let a = self.den_q.max(other.den_q);
        let b = self.den_qx.max(other.den_qx);
        self.lifted(a, b) == other.lifted(a, b)
    }

    /// `q -> c q` for an integer `c`.
    pub fn scale_q(&self, c: &BigInt) -> Result<Self> {
        if (self.den_q > 0 || self.den_qx > 0) && !c.is_one() {
            return Err(Error::Substitution(format!(
                "q -> {c}*q moves the poles of a class with denominator; only polynomials are supported"
            )));
        }
        let num = self
            .num
            .scale_q(c)
            .ok_or_else(|| Error::Substitution(format!("q -> {c}*q on a negative power of q")))?;
        Ok(Self::new(num, self.den_q, self.den_qx))
    }

    /// `q -> 1`; only for classes without denominator. The result has no `q`.
    pub fn at_q_one(&self) -> Result<Self> {
        if !self.is_polynomial() {
            return Err(Error::Substitution(format!(
                "q -> 1 in {self}: the denominator does not cancel"
            )));
        }
        Ok(Self::from_laurent(self.num.map_exponents(|_, j| (0, j))))
    }

    /// `x -> 1`: both denominators become powers of `1 - q`.
    pub fn at_x_one(&self) -> Self {
        Self::new(self.num.map_exponents(|i, _| (i, 0)), self.den_q + self.den_qx, 0)
    }

    pub fn render(&self) -> String {
        let x = if K == 1 { "L" } else { "t" };
        let num = self.num.render(x);
        if self.is_polynomial() {
            return num;
        }
        let mut den = Vec::new();
        match self.den_q {
            0 => {}
            1 => den.push("(1-q)".to_string()),
            a => den.push(format!("(1-q)^{a}")),
        }
        let qx = if K == 1 { "(1-q*L)" } else { "(1-q*t^2)" };
        match self.den_qx {
            0 => {}
            1 => den.push(qx.to_string()),
            b => den.push(format!("{qx}^{b}")),
        }
        let num = if self.num.len() > 1 { format!("({num})") } else { num };
        format!("{num}/({})", den.join("*"))
    }

    /// Numerator terms as `[q exponent, x exponent, "coefficient"]`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .num
            .terms()
            .map(|(&(i, j), c)| json!([i, j, c.to_string()]))
            .collect();
        let x = if K == 1 { "den_qL" } else { "den_qt2" };
        json!({ "num": terms, "den_q": self.den_q, x: self.den_qx })
    }
}

impl RationalQL {
    /// `L -> t^2`, landing in the weight-polynomial ring.
    pub fn to_weight(&self) -> WeightPoly {
        WeightPoly::new(self.num.map_exponents(|i, j| (i, 2 * j)), self.den_q, self.den_qx)
    }
}

impl<const K: i64> Zero for Localized<K> {
    fn zero() -> Self {
        Self::from_laurent(Laurent2::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<const K: i64> One for Localized<K> {
    fn one() -> Self {
        Self::integer(1)
    }
}

impl<const K: i64> Add<&Localized<K>> for &Localized<K> {
    type Output = Localized<K>;
    fn add(self, rhs: &Localized<K>) -> Localized<K> {
        let a = self.den_q.max(rhs.den_q);
        let b = self.den_qx.max(rhs.den_qx);
        Localized::new(&self.lifted(a, b) + &rhs.lifted(a, b), a, b)
    }
}

impl<const K: i64> Sub<&Localized<K>> for &Localized<K> {
    type Output = Localized<K>;
    fn sub(self, rhs: &Localized<K>) -> Localized<K> {
        self + &(-rhs)
    }
}

impl<const K: i64> Mul<&Localized<K>> for &Localized<K> {
    type Output = Localized<K>;
    fn mul(self, rhs: &Localized<K>) -> Localized<K> {
        Localized::new(&self.num * &rhs.num, self.den_q + rhs.den_q, self.den_qx + rhs.den_qx)
    }
}

impl<const K: i64> Neg for &Localized<K> {
    type Output = Localized<K>;
    fn neg(self) -> Localized<K> {
        Localized {
            num: -&self.num,
            den_q: self.den_q,
            den_qx: self.den_qx,
        }
    }
}

impl<const K: i64> Neg for Localized<K> {
    type Output = Localized<K>;
    fn neg(self) -> Localized<K> {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<const K: i64> $tr for Localized<K> {
            type Output = Localized<K>;
            fn $m(self, rhs: Localized<K>) -> Localized<K> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<const K: i64> fmt::Display for Localized<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
