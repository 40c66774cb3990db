use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

/// Laurent polynomial in two variables `q` and `x` with big-integer
/// coefficients; keys are `(exponent of q, exponent of x)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Laurent2 {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl Laurent2 {
    pub fn monomial(c: impl Into<BigInt>, i: i64, j: i64) -> Self {
        let mut out = Self::default();
        out.add_term(i, j, c.into());
        out
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = ((i64, i64), BigInt)>>(terms: I) -> Self {
        let mut out = Self::default();
        for ((i, j), c) in terms {
            out.add_term(i, j, c);
        }
        out
    }

    pub fn add_term(&mut self, i: i64, j: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, i: i64, j: i64) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether `x` does not occur.
    pub fn is_x_free(&self) -> bool {
        self.terms.keys().all(|&(_, j)| j == 0)
    }

    /// Smallest `q`-exponent, if nonzero.
    pub fn min_q(&self) -> Option<i64> {
        self.terms.keys().map(|&(i, _)| i).min()
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(|&(i, j)| i < 0 || j < 0)
    }

    /// Multiplies by `q^di x^dj`.
    pub fn shift(&self, di: i64, dj: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(i, j), c)| ((i + di, j + dj), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        Self {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Applies `(i, j) -> (fi(i, j), fj(i, j))` to every exponent, summing
    /// colliding terms.
    pub fn map_exponents(&self, f: impl Fn(i64, i64) -> (i64, i64)) -> Self {
        let mut out = Self::default();
        for (&(i, j), c) in &self.terms {
            let (a, b) = f(i, j);
            out.add_term(a, b, c.clone());
        }
        out
    }

    /// `q -> c q`; an exponent `i < 0` needs `c^i` integral.
    pub fn scale_q(&self, c: &BigInt) -> Option<Self> {
        let mut out = Self::default();
        for (&(i, j), v) in &self.terms {
            let factor = if i >= 0 {
                Pow::pow(c, i as u64)
            } else if c.abs().is_one() {
                Pow::pow(c, i.unsigned_abs())
            } else {
                return None;
            };
            out.add_term(i, j, v * factor);
        }
        Some(out)
    }

    /// Exact division by `1 - q^a x^b`, or `None` if it does not divide.
    /// Requires `a > 0`, or `a == 0 < b`.
    pub fn div_one_minus(&self, a: i64, b: i64) -> Option<Self> {
        assert!(a > 0 || (a == 0 && b > 0), "unsupported divisor exponent ({a}, {b})");
        // Monomials differing by multiples of (a, b) form one line; along a
        // line the division is univariate: the quotient coefficients are the
        // running sums, and the full sum must vanish.
        let step = |i: i64, j: i64| if a > 0 { Integer::div_floor(&i, &a) } else { Integer::div_floor(&j, &b) };
        let mut lines: BTreeMap<(i64, i64), BTreeMap<i64, BigInt>> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            let k = step(i, j);
            lines.entry((i - k * a, j - k * b)).or_default().insert(k, c.clone());
        }
        let mut out = Self::default();
        for ((i0, j0), coeffs) in lines {
            let first = *coeffs.keys().next().expect("nonempty line");
            let last = *coeffs.keys().next_back().expect("nonempty line");
            let mut running = BigInt::zero();
            for k in first..last {
                if let Some(c) = coeffs.get(&k) {
                    running += c;
                }
                out.add_term(i0 + k * a, j0 + k * b, running.clone());
            }
            running += &coeffs[&last];
            if !running.is_zero() {
                return None;
            }
        }
        Some(out)
    }

    /// Largest `k` with `(1 - q^a x^b)^k` dividing `self` (nonzero input).
    pub fn multiplicity_of_one_minus(&self, a: i64, b: i64) -> u32 {
        assert!(!self.is_zero(), "multiplicity of the zero polynomial");
        let mut k = 0;
        let mut cur = self.clone();
        while let Some(next) = cur.div_one_minus(a, b) {
            cur = next;
            k += 1;
        }
        k
    }

    /// Text form with monomials ascending in `(i, j)`, such as
    /// `1 - q + q^2*L`.
    pub fn render(&self, x: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (n, (&(i, j), c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if n == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if !abs.is_one() || (i == 0 && j == 0) {
                factors.push(abs.to_string());
            }
            for (var, e) in [("q", i), (x, j)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            let _ = write!(out, "{}", factors.join("*"));
        }
        out
    }
}

impl Zero for Laurent2 {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Laurent2 {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl Add<&Laurent2> for &Laurent2 {
    type Output = Laurent2;
    fn add(self, rhs: &Laurent2) -> Laurent2 {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub<&Laurent2> for &Laurent2 {
    type Output = Laurent2;
    fn sub(self, rhs: &Laurent2) -> Laurent2 {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl Mul<&Laurent2> for &Laurent2 {
    type Output = Laurent2;
    fn mul(self, rhs: &Laurent2) -> Laurent2 {
        let mut out = Laurent2::default();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Laurent2 {
    type Output = Laurent2;
    fn neg(self) -> Laurent2 {
        Laurent2 {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Laurent2 {
            type Output = Laurent2;
            fn $m(self, rhs: Laurent2) -> Laurent2 {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Laurent2 {
    type Output = Laurent2;
    fn neg(self) -> Laurent2 {
        -&self
    }
}

impl fmt::Display for Laurent2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64, i64)]) -> Laurent2 {
        Laurent2::from_terms(terms.iter().map(|&(i, j, c)| ((i, j), BigInt::from(c))))
    }

    #[test]
    fn render_examples() {
        assert_eq!(p(&[(0, 0, 1), (1, 0, -1), (2, 1, 1)]).render("L"), "1 - q + q^2*L");
        assert_eq!(p(&[(-1, 2, -3)]).render("L"), "-3*q^-1*L^2");
        assert_eq!(Laurent2::zero().render("L"), "0");
        assert_eq!(p(&[(0, 0, -1)]).render("t"), "-1");
    }

    #[test]
    fn division_by_one_minus_q() {
        let one_minus_q = p(&[(0, 0, 1), (1, 0, -1)]);
        let f = p(&[(0, 0, 2), (3, 1, 5), (-2, 4, 1)]);
        let prod = &f * &one_minus_q;
        assert_eq!(prod.div_one_minus(1, 0), Some(f.clone()));
        assert_eq!(f.div_one_minus(1, 0), None);
        assert_eq!(prod.multiplicity_of_one_minus(1, 0), 1);
    }

    #[test]
    fn division_by_one_minus_qx() {
        for (a, b) in [(1, 0), (1, 1), (1, 2), (0, 1), (2, 1), (1, -1)] {
            let d = p(&[(0, 0, 1), (a, b, -1)]);
            let f = p(&[(0, 0, 1), (1, 0, -1), (2, 1, 1), (-1, -3, 7), (5, 2, -2)]);
            let prod = &(&f * &d) * &d;
            assert_eq!(prod.multiplicity_of_one_minus(a, b), 2, "({a},{b})");
            assert_eq!(prod.div_one_minus(a, b).unwrap().div_one_minus(a, b), Some(f.clone()));
        }
    }

    #[test]
    fn scale_q_negative_exponent() {
        let f = p(&[(-1, 0, 1), (2, 0, 1)]);
        assert_eq!(f.scale_q(&BigInt::from(-1)), Some(p(&[(-1, 0, -1), (2, 0, 1)])));
        assert_eq!(f.scale_q(&BigInt::from(2)), None);
    }
}
