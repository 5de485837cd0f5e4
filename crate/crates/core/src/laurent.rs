//! Integer Laurent polynomials in `t`, their valuations at `t = 1`, and the
//! quantum integer families built from them.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::Error;

/// Order of vanishing, with `Infinite` reserved for the zero element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<u64> {
        match self {
            Order::Finite(d) => Some(d),
            Order::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Order::Infinite
    }

    pub fn to_json(self) -> Value {
        match self {
            Order::Finite(d) => json!(d.to_string()),
            Order::Infinite => json!("inf"),
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(d) => write!(f, "{d}"),
            Order::Infinite => write!(f, "inf"),
        }
    }
}

/// Dense Laurent polynomial: `coeffs[i]` is the coefficient of `t^(low + i)`.
/// Canonical: either empty (zero, `low == 0`) or with nonzero first and last entries.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        Self::from_dense(e, vec![c.into()])
    }

    /// `t^e`.
    pub fn t_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    /// `h = t - 1`.
    pub fn h() -> Self {
        Self::from_terms([(1, 1), (0, -1)])
    }

    /// `z = s - s^-1 = t^2 - t^-2`.
    pub fn z() -> Self {
        Self::from_terms([(2, 1), (-2, -1)])
    }

    pub fn from_dense(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.normalize();
        p
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_dense(lo, coeffs)
    }

    fn normalize(&mut self) {
        let end = self.coeffs.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1);
        self.coeffs.truncate(end);
        let start = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
        if start > 0 {
            self.coeffs.drain(..start);
            self.low += start as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low_degree(&self) -> i64 {
        self.low
    }

    pub fn high_degree(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.low;
        if i < 0 || i as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms().count()
    }

    /// Multiply by `t^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + e, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitute `t -> t^k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Formal derivative with respect to `t`.
    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|(e, _)| *e != 0)
                .map(|(e, c)| (e - 1, c * BigInt::from(e))),
        )
    }

    /// Coefficients of `t^0 .. t^deg` after multiplying by the smallest `t^m`
    /// (m >= 0) that clears negative exponents.
    fn cleared(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let shift = self.low.max(0) as usize;
        let mut v = vec![BigInt::zero(); shift];
        v.extend(self.coeffs.iter().cloned());
        v
    }

    /// Taylor expansion at `t = 1`: the polynomial `g` with `g(h) = t^m f(t)` at
    /// `t = 1 + h`, where `t^m` clears negative exponents (m = 0 when there are none).
    pub fn expand_at_one(&self) -> HPoly {
        let a = self.cleared();
        let mut g: Vec<BigInt> = Vec::with_capacity(a.len());
        for c in a.iter().rev() {
            // g <- g * (1 + h) + c
            g.push(BigInt::zero());
            for i in (1..g.len()).rev() {
                let prev = g[i - 1].clone();
                g[i] += prev;
            }
            g[0] += c;
        }
        HPoly::new(g)
    }

    /// Exact division by `h = t - 1`, if it divides.
    pub fn div_h(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let a = &self.coeffs;
        let n = a.len();
        if n == 1 {
            return None;
        }
        // quotient q of degree n-2 (relative to low): a(t) = (t - 1) q(t)
        let mut q = vec![BigInt::zero(); n - 1];
        q[n - 2] = a[n - 1].clone();
        for i in (1..n - 1).rev() {
            q[i - 1] = &a[i] + &q[i];
        }
        if !(&a[0] + &q[0]).is_zero() {
            return None;
        }
        Some(Self::from_dense(self.low, q))
    }

    /// Multiplicity of `t = 1` as a zero.
    pub fn order(&self) -> Order {
        if self.is_zero() {
            return Order::Infinite;
        }
        let mut d = 0;
        let mut f = self.clone();
        while let Some(q) = f.div_h() {
            f = q;
            d += 1;
        }
        Order::Finite(d)
    }

    /// Least `d` whose `h^d` coefficient (after clearing negative exponents) is
    /// not divisible by `p`.
    pub fn mod_p_order(&self, p: u64) -> Order {
        let pb = BigInt::from(p);
        let a: Vec<u64> = self
            .cleared()
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().unwrap())
            .collect();
        let mut g: Vec<u64> = Vec::with_capacity(a.len());
        for c in a.iter().rev() {
            g.push(0);
            for i in (1..g.len()).rev() {
                g[i] = (g[i] + g[i - 1]) % p;
            }
            g[0] = (g[0] + c) % p;
        }
        match g.iter().position(|&c| c != 0) {
            Some(d) => Order::Finite(d as u64),
            None => Order::Infinite,
        }
    }

    /// Sorted `[exponent, "coefficient"]` pairs.
    pub fn to_json(&self) -> Value {
        Value::Array(self.terms().map(|(e, c)| json!([e, c.to_string()])).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self, Error> {
        let arr = v.as_array().ok_or_else(|| Error::Parse("polynomial must be an array".into()))?;
        let mut terms = Vec::new();
        for item in arr {
            let pair = item.as_array().filter(|a| a.len() == 2);
            let pair = pair.ok_or_else(|| Error::Parse("term must be [exp, coef]".into()))?;
            let e = pair[0].as_i64().ok_or_else(|| Error::Parse("bad exponent".into()))?;
            let c: BigInt = pair[1]
                .as_str()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::Parse("bad coefficient".into()))?;
            terms.push((e, c));
        }
        Ok(Self::from_terms(terms))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{mag}t^{e}")?,
            }
        }
        Ok(())
    }
}

fn add_into(dst: &mut LaurentPoly, src: &LaurentPoly, sign: bool) {
    if src.is_zero() {
        return;
    }
    if dst.is_zero() {
        *dst = if sign { src.clone() } else { -src };
        return;
    }
    let lo = dst.low.min(src.low);
    let hi = dst.high_degree().max(src.high_degree());
    if lo < dst.low {
        let pad = (dst.low - lo) as usize;
        let mut v = vec![BigInt::zero(); pad];
        v.append(&mut dst.coeffs);
        dst.coeffs = v;
        dst.low = lo;
    }
    dst.coeffs.resize((hi - lo + 1) as usize, BigInt::zero());
    let off = (src.low - dst.low) as usize;
    for (i, c) in src.coeffs.iter().enumerate() {
        if sign {
            dst.coeffs[off + i] += c;
        } else {
            dst.coeffs[off + i] -= c;
        }
    }
    dst.normalize();
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        add_into(self, rhs, true);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        add_into(self, rhs, false);
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        r += rhs;
        r
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        r -= rhs;
        r
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, v)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |a, b| &a * &b)
    }
}

/// Integer polynomial in `h`; `coeffs[d]` multiplies `h^d`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct HPoly {
    coeffs: Vec<BigInt>,
}

impl HPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        HPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn order(&self) -> Order {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(d) => Order::Finite(d as u64),
            None => Order::Infinite,
        }
    }

    /// Back to a polynomial in `t`.
    pub fn to_laurent(&self) -> LaurentPoly {
        let h = LaurentPoly::h();
        let mut acc = LaurentPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * &h;
            acc += &LaurentPoly::constant(c.clone());
        }
        acc
    }
}

/// Binomial coefficient, zero outside `0 <= k <= n`. Negative `n` with `k` in a
/// nonvanishing position is outside every sum used here and is rejected.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    assert!(n >= 0, "binomial({n}, {k}) with negative top is not used");
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `[k] = (s^k - s^-k)/(s - s^-1)` with `s = t^2`.
pub fn quantum_int(k: i64) -> LaurentPoly {
    if k == 0 {
        return LaurentPoly::zero();
    }
    if k < 0 {
        return -quantum_int(-k);
    }
    LaurentPoly::from_terms((0..k).map(|i| (2 * (k - 1 - 2 * i), 1)))
}

/// `(a,k] = t^(a(k^2-1)) [k]`.
pub fn framed_quantum_int(a: i64, k: i64) -> LaurentPoly {
    quantum_int(k).shift(a * (k * k - 1))
}

/// `<k> = (t^k - 1)/(t - 1)`, defined for `k >= 0`.
pub fn gauss_polynomial(k: i64) -> Result<LaurentPoly, Error> {
    if k < 0 {
        return Err(Error::Domain(format!("gauss polynomial <{k}> needs k >= 0")));
    }
    Ok(LaurentPoly::from_terms((0..k).map(|i| (i, 1))))
}

/// `[k]` written as a polynomial in `[2]` (renormalized Chebyshev form).
pub fn chebyshev_quantum_int(k: i64) -> LaurentPoly {
    if k <= 0 {
        return if k == 0 { LaurentPoly::zero() } else { -chebyshev_quantum_int(-k) };
    }
    let two = quantum_int(2);
    (0..=(k - 1) / 2)
        .map(|j| {
            let sign = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            two.pow((k - 2 * j - 1) as u32).scale(&(binomial(k - j - 1, j) * sign))
        })
        .sum()
}

/// Cabled quantum integer `[k,c)`.
pub fn cabled_quantum_int(k: i64, c: i64) -> LaurentPoly {
    if c < 0 || k == 0 {
        return LaurentPoly::zero();
    }
    if k < 0 {
        return -cabled_quantum_int(-k, c);
    }
    let two = quantum_int(2);
    let mut acc = LaurentPoly::zero();
    for j in 0..=k / 2 {
        let b1 = binomial(k - j - 1, j);
        if b1.is_zero() {
            continue;
        }
        let b2 = binomial(k - 2 * j - 1, c);
        if b2.is_zero() {
            continue;
        }
        let sign = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        acc += &two.pow((k - 2 * j - 1 - c) as u32).scale(&(b1 * b2 * sign));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn ring_basics() {
        assert!((&LaurentPoly::t_pow(1) * &LaurentPoly::t_pow(-1)).is_one());
        let a = lp(&[(1, 1), (0, 1)]);
        let b = lp(&[(1, 1), (0, -1)]);
        assert_eq!(&a * &b, lp(&[(2, 1), (0, -1)]));
        let two = quantum_int(2);
        assert_eq!(&two * &two, lp(&[(4, 1), (0, 2), (-4, 1)]));
        assert!((&a - &a).is_zero());
        assert_eq!(a.pow(3), lp(&[(3, 1), (2, 3), (1, 3), (0, 1)]));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(LaurentPoly::t_pow(2).derivative(), lp(&[(1, 2)]));
        assert!(LaurentPoly::constant(5).derivative().is_zero());
        assert_eq!(quantum_int(2).derivative(), lp(&[(1, 2), (-3, -2)]));
    }

    #[test]
    fn expansion_at_one() {
        let e = LaurentPoly::t_pow(1).expand_at_one();
        assert_eq!(e.coeffs(), &[BigInt::from(1), BigInt::from(1)]);
        let e = LaurentPoly::t_pow(2).expand_at_one();
        assert_eq!(e.coeffs(), &[BigInt::from(1), BigInt::from(2), BigInt::from(1)]);
        let f = lp(&[(1, 1), (-1, 2)]);
        assert_eq!(f.expand_at_one().coeff(0), f.eval_at_one());
        assert_eq!(f.expand_at_one().order(), Order::Finite(0));
        let g = lp(&[(3, 2), (1, -5), (0, 7)]);
        assert_eq!(g.expand_at_one().to_laurent(), g);
    }

    #[test]
    fn orders() {
        assert_eq!(LaurentPoly::zero().order(), Order::Infinite);
        assert_eq!(lp(&[(2, 1), (0, -1)]).order(), Order::Finite(1));
        let phi_hopf = &quantum_int(4) - &quantum_int(2).pow(2);
        assert_eq!(phi_hopf.order(), Order::Finite(2));
        assert_eq!(phi_hopf.shift(-7).order(), Order::Finite(2));
        assert_eq!(LaurentPoly::h().pow(5).shift(-3).order(), Order::Finite(5));
    }

    #[test]
    fn mod_p_orders() {
        let h = LaurentPoly::h();
        assert_eq!(h.scale(&BigInt::from(5)).mod_p_order(5), Order::Infinite);
        assert_eq!(h.mod_p_order(5), Order::Finite(1));
        let f = &h.pow(2) + &h.scale(&BigInt::from(5));
        assert_eq!(f.mod_p_order(5), Order::Finite(2));
        assert_eq!(f.mod_p_order(7), Order::Finite(1));
    }

    #[test]
    fn quantum_integers() {
        assert!(quantum_int(1).is_one());
        assert_eq!(quantum_int(2), lp(&[(2, 1), (-2, 1)]));
        assert_eq!(quantum_int(3), lp(&[(4, 1), (0, 1), (-4, 1)]));
        assert!(quantum_int(0).is_zero());
        assert_eq!(quantum_int(-3), -quantum_int(3));
    }

    #[test]
    fn framed_and_gauss() {
        assert_eq!(framed_quantum_int(0, 3), quantum_int(3));
        assert_eq!(framed_quantum_int(1, 2), lp(&[(5, 1), (1, 1)]));
        for a in -4..=4 {
            assert!(framed_quantum_int(a, 1).is_one());
        }
        assert!(gauss_polynomial(0).unwrap().is_zero());
        assert!(gauss_polynomial(1).unwrap().is_one());
        assert_eq!(gauss_polynomial(3).unwrap(), lp(&[(2, 1), (1, 1), (0, 1)]));
        assert!(gauss_polynomial(-1).is_err());
    }

    #[test]
    fn cabled_examples() {
        for k in -4..=4 {
            assert!(cabled_quantum_int(k, -1).is_zero());
            assert_eq!(cabled_quantum_int(k, 0), quantum_int(k));
        }
        assert!(cabled_quantum_int(2, 1).is_one());
        assert_eq!(cabled_quantum_int(3, 1), lp(&[(2, 2), (-2, 2)]));
        assert_eq!(cabled_quantum_int(-3, 1), -cabled_quantum_int(3, 1));
    }

    #[test]
    fn chebyshev_and_recursion() {
        let two = quantum_int(2);
        for k in 0..=12 {
            assert_eq!(chebyshev_quantum_int(k), quantum_int(k), "k = {k}");
        }
        for k in 2..=12 {
            assert_eq!(&(&two * &quantum_int(k - 1)) - &quantum_int(k - 2), quantum_int(k));
        }
    }

    #[test]
    fn json_roundtrip() {
        let f = lp(&[(-3, -12), (0, 1), (5, 40)]);
        let v = f.to_json();
        assert_eq!(v.to_string(), r#"[[-3,"-12"],[0,"1"],[5,"40"]]"#);
        assert_eq!(LaurentPoly::from_json(&v).unwrap(), f);
    }

    #[test]
    fn display() {
        assert_eq!(lp(&[(2, 1), (-2, -3), (0, 2)]).to_string(), "t^2 + 2 - 3t^-2");
    }

    fn poly() -> impl Strategy<Value = LaurentPoly> {
        (-6i64..6, prop::collection::vec(-4i64..=4, 1..8))
            .prop_map(|(low, c)| LaurentPoly::from_dense(low, c.into_iter().map(BigInt::from).collect()))
    }

    fn nonzero() -> impl Strategy<Value = LaurentPoly> {
        poly().prop_filter("nonzero", |f| !f.is_zero())
    }

    proptest! {
        #[test]
        fn order_is_a_valuation(f in nonzero(), g in nonzero()) {
            let (a, b) = (f.order().finite().unwrap(), g.order().finite().unwrap());
            prop_assert_eq!((&f * &g).order(), Order::Finite(a + b));
            let s = &f + &g;
            prop_assert!(s.is_zero() || s.order().finite().unwrap() >= a.min(b));
        }

        #[test]
        fn order_ignores_powers_of_t(f in nonzero(), k in -9i64..9) {
            prop_assert_eq!(f.shift(k).order(), f.order());
        }

        #[test]
        fn mod_p_order_dominates_order(f in nonzero(), p in prop::sample::select(vec![3u64, 5, 7, 11])) {
            prop_assert!(f.mod_p_order(p) >= f.order());
        }
    }
}
