//! The cyclotomic ring `Z[t]/(phi_p)` in the `h = t - 1` basis, its `h`-adic
//! valuation, projections, Gauss sums and the closed-form sums built from
//! quantum integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::Error;
use crate::laurent::{
    binomial, cabled_quantum_int, framed_quantum_int, gauss_polynomial, quantum_int, HPoly,
    LaurentPoly, Order,
};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An odd prime `p = 2n + 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeLevel {
    p: u64,
}

impl PrimeLevel {
    pub fn new(p: i64) -> Result<Self, Error> {
        if p < 3 || !is_prime(p as u64) {
            return Err(Error::NotOddPrime(p));
        }
        Ok(PrimeLevel { p: p as u64 })
    }

    pub fn p(self) -> u64 {
        self.p
    }

    /// `(p - 3)/2`.
    pub fn n(self) -> u64 {
        (self.p - 3) / 2
    }

    /// `(p - 1)/2`.
    pub fn m(self) -> u64 {
        (self.p - 1) / 2
    }

    fn pb(self) -> BigInt {
        BigInt::from(self.p)
    }

    /// Coefficients of the cyclotomic polynomial in `h`: entry `i` is `C(p, i+1)`.
    pub fn phi_in_h(self) -> Vec<BigInt> {
        (0..self.p as i64).map(|i| binomial(self.p as i64, i + 1)).collect()
    }
}

impl fmt::Display for PrimeLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.p)
    }
}

/// `p`-adic valuation of a nonzero integer.
pub fn vp(x: &BigInt, p: u64) -> u64 {
    assert!(!x.is_zero());
    let pb = BigInt::from(p);
    let mut x = x.clone();
    let mut v = 0;
    loop {
        let (q, r) = x.div_rem(&pb);
        if !r.is_zero() {
            return v;
        }
        x = q;
        v += 1;
    }
}

pub fn legendre(a: i64, p: u64) -> i64 {
    let pi = p as i64;
    let a = a.rem_euclid(pi) as u64;
    if a == 0 {
        return 0;
    }
    let mut r: u64 = 1;
    let mut b = a;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    if r == 1 {
        1
    } else {
        -1
    }
}

/// Element of the cyclotomic ring, stored as its reduced form
/// `x_0 + x_1 h + ... + x_{p-2} h^{p-2}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycElem {
    level: PrimeLevel,
    x: Vec<BigInt>,
}

/// Lowest-order representative `sum_d c_d h^(order + d)`, `d < p - 1`, with `c_0` prime to `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub order: u64,
    pub coeffs: Vec<BigInt>,
}

/// Residue `value mod modulus`, `0 <= value < modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Residue {
    pub value: BigInt,
    pub modulus: BigInt,
}

impl Residue {
    pub fn add(&self, other: &Residue) -> Residue {
        assert_eq!(self.modulus, other.modulus);
        Residue {
            value: (&self.value + &other.value).mod_floor(&self.modulus),
            modulus: self.modulus.clone(),
        }
    }
}

fn reduce_h(level: PrimeLevel, mut g: Vec<BigInt>) -> CycElem {
    let p = level.p as usize;
    let phi = level.phi_in_h();
    if g.len() >= p {
        for deg in (p - 1..g.len()).rev() {
            if g[deg].is_zero() {
                continue;
            }
            let c = g[deg].clone();
            let base = deg + 1 - p;
            for (i, f) in phi.iter().enumerate() {
                g[base + i] -= &c * f;
            }
        }
    }
    g.resize(p - 1, BigInt::zero());
    CycElem { level, x: g }
}

/// `sum a_e t^e` (exponents already folded into `0..p`) rewritten in `h`.
fn t_to_h(a: &[BigInt]) -> Vec<BigInt> {
    let mut g: Vec<BigInt> = Vec::with_capacity(a.len());
    for c in a.iter().rev() {
        g.push(BigInt::zero());
        for i in (1..g.len()).rev() {
            let prev = g[i - 1].clone();
            g[i] += prev;
        }
        g[0] += c;
    }
    g
}

impl CycElem {
    pub fn zero(level: PrimeLevel) -> Self {
        CycElem { level, x: vec![BigInt::zero(); level.p as usize - 1] }
    }

    pub fn from_int(level: PrimeLevel, c: impl Into<BigInt>) -> Self {
        let mut e = Self::zero(level);
        e.x[0] = c.into();
        e
    }

    pub fn one(level: PrimeLevel) -> Self {
        Self::from_int(level, 1)
    }

    pub fn t_pow(level: PrimeLevel, e: i64) -> Self {
        Self::reduce(&LaurentPoly::t_pow(e), level)
    }

    pub fn h(level: PrimeLevel) -> Self {
        let mut e = Self::zero(level);
        e.x[1] = BigInt::one();
        e
    }

    /// Image of a Laurent polynomial: fold exponents mod `p`, substitute
    /// `t = 1 + h`, then reduce top-down modulo `phi_p`.
    pub fn reduce(f: &LaurentPoly, level: PrimeLevel) -> Self {
        let p = level.p as i64;
        let mut a = vec![BigInt::zero(); p as usize];
        for (e, c) in f.terms() {
            a[e.rem_euclid(p) as usize] += c;
        }
        Self::from_folded(level, &a)
    }

    /// From coefficients `a[e]` of `t^e`, `0 <= e < p`.
    pub fn from_folded(level: PrimeLevel, a: &[BigInt]) -> Self {
        assert_eq!(a.len(), level.p as usize);
        reduce_h(level, t_to_h(a))
    }

    /// From an arbitrary integer polynomial in `h`.
    pub fn from_h_coeffs(level: PrimeLevel, g: Vec<BigInt>) -> Self {
        reduce_h(level, g)
    }

    pub fn level(&self) -> PrimeLevel {
        self.level
    }

    pub fn reduced(&self) -> &[BigInt] {
        &self.x
    }

    pub fn is_zero(&self) -> bool {
        self.x.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.level)
    }

    /// Representative polynomial in `t` of degree at most `p - 2`.
    pub fn to_laurent(&self) -> LaurentPoly {
        HPoly::new(self.x.clone()).to_laurent()
    }

    fn check(&self, other: &CycElem) -> Result<(), Error> {
        if self.level != other.level {
            return Err(Error::LevelMismatch(self.level.p, other.level.p));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &CycElem) -> Result<CycElem, Error> {
        self.check(other)?;
        let x = self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect();
        Ok(CycElem { level: self.level, x })
    }

    pub fn checked_sub(&self, other: &CycElem) -> Result<CycElem, Error> {
        self.check(other)?;
        let x = self.x.iter().zip(&other.x).map(|(a, b)| a - b).collect();
        Ok(CycElem { level: self.level, x })
    }

    pub fn checked_mul(&self, other: &CycElem) -> Result<CycElem, Error> {
        self.check(other)?;
        let n = self.x.len();
        let mut g = vec![BigInt::zero(); 2 * n - 1];
        for (i, a) in self.x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.x.iter().enumerate() {
                if !b.is_zero() {
                    g[i + j] += a * b;
                }
            }
        }
        Ok(reduce_h(self.level, g))
    }

    pub fn scale(&self, c: &BigInt) -> CycElem {
        CycElem { level: self.level, x: self.x.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, n: u64) -> CycElem {
        let mut acc = Self::one(self.level);
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

    /// `min_d ((p-1) v_p(x_d) + d)`.
    pub fn p_order(&self) -> Order {
        let p = self.level.p;
        self.x
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| (p - 1) * vp(c, p) + d as u64)
            .min()
            .map_or(Order::Infinite, Order::Finite)
    }

    /// Bottom-up normal form.
    pub fn normal_form(&self) -> Result<NormalForm, Error> {
        if self.is_zero() {
            return Err(Error::InfiniteOrder);
        }
        let p = self.level.p as usize;
        let pb = self.level.pb();
        let phi = self.level.phi_in_h();
        let mut g = self.x.clone();
        let k = loop {
            let k = g.iter().position(|c| !c.is_zero()).unwrap();
            if !g[k].is_multiple_of(&pb) {
                break k;
            }
            let q = &g[k] / &pb;
            if g.len() < k + p {
                g.resize(k + p, BigInt::zero());
            }
            for (i, f) in phi.iter().enumerate() {
                g[k + i] -= &q * f;
            }
        };
        // fold anything at degree >= k + p - 1 back down, top-down
        let top = k + p - 1;
        if g.len() > top {
            for deg in (top..g.len()).rev() {
                if g[deg].is_zero() {
                    continue;
                }
                let c = g[deg].clone();
                let base = deg + 1 - p;
                for (i, f) in phi.iter().enumerate() {
                    g[base + i] -= &c * f;
                }
            }
        }
        g.resize(top, BigInt::zero());
        Ok(NormalForm { order: k as u64, coeffs: g[k..top].to_vec() })
    }

    /// Image under `t -> t^k`.
    pub fn galois_conjugate(&self, k: i64) -> Result<CycElem, Error> {
        if k.rem_euclid(self.level.p as i64) == 0 {
            return Err(Error::Domain(format!("conjugation exponent {k} divisible by p")));
        }
        Ok(Self::reduce(&self.to_laurent().substitute_power(k), self.level))
    }

    /// Product of all Galois conjugates, an integer.
    pub fn norm(&self) -> BigInt {
        let mut acc = self.clone();
        for k in 2..self.level.p as i64 {
            acc = &acc * &self.galois_conjugate(k).unwrap();
        }
        debug_assert!(acc.x[1..].iter().all(|c| c.is_zero()));
        acc.x[0].clone()
    }

    pub fn invert_unit(&self) -> Result<CycElem, Error> {
        let level = self.level;
        let mut prod = Self::one(level);
        for k in 2..level.p as i64 {
            prod = &prod * &self.galois_conjugate(k)?;
        }
        let norm = self * &prod;
        let n = &norm.x[0];
        if !norm.x[1..].iter().all(|c| c.is_zero()) || !n.abs().is_one() {
            return Err(Error::NotUnit(n.to_string()));
        }
        let inv = prod.scale(n);
        if !(self * &inv).is_one() {
            return Err(Error::NotUnit(n.to_string()));
        }
        Ok(inv)
    }

    /// `prod_{k=2}^{p-1} (t^k - 1)`, the cofactor of `h` in `p`.
    pub fn h_cofactor(level: PrimeLevel) -> CycElem {
        let f: LaurentPoly = (2..level.p as i64)
            .map(|k| &LaurentPoly::t_pow(k) - &LaurentPoly::one())
            .product();
        Self::reduce(&f, level)
    }

    /// Exact quotient by `h^m`.
    pub fn div_h_power(&self, m: u64) -> Result<CycElem, Error> {
        if m == 0 || self.is_zero() {
            return Ok(self.clone());
        }
        let ord = self.p_order();
        if ord < Order::Finite(m) {
            return Err(Error::NotDivisible(m, ord.to_string()));
        }
        let y = self * &Self::h_cofactor(self.level).pow(m);
        let pm = self.level.pb().pow(m as u32);
        let mut x = Vec::with_capacity(y.x.len());
        for c in &y.x {
            let (q, r) = c.div_rem(&pm);
            if !r.is_zero() {
                return Err(Error::NotDivisible(m, "non-integral quotient".into()));
            }
            x.push(q);
        }
        Ok(CycElem { level: self.level, x })
    }

    /// `pi^d`: the coefficient of `h^(d mod (p-1))` modulo `p^(1 + d/(p-1))`.
    pub fn pi_d(&self, d: u64) -> Residue {
        let p = self.level.p;
        let k = 1 + d / (p - 1);
        let modulus = BigInt::from(p).pow(k as u32);
        let value = self.x[(d % (p - 1)) as usize].mod_floor(&modulus);
        Residue { value, modulus }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "p": self.level.p.to_string(),
            "reduced": self.x.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<CycElem, Error> {
        let bad = || Error::Parse("bad cyclotomic element".into());
        let p: i64 = match &v["p"] {
            Value::String(s) => s.parse().map_err(|_| bad())?,
            Value::Number(n) => n.as_i64().ok_or_else(bad)?,
            _ => return Err(bad()),
        };
        let level = PrimeLevel::new(p)?;
        let arr = v["reduced"].as_array().ok_or_else(bad)?;
        if arr.len() != level.p as usize - 1 {
            return Err(bad());
        }
        let x = arr
            .iter()
            .map(|c| c.as_str().and_then(|s| s.parse::<BigInt>().ok()).ok_or_else(bad))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CycElem { level, x })
    }
}

impl NormalForm {
    pub fn to_elem(&self, level: PrimeLevel) -> CycElem {
        let mut g = vec![BigInt::zero(); self.order as usize];
        g.extend(self.coeffs.iter().cloned());
        CycElem::from_h_coeffs(level, g)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order.to_string(),
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Debug for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.x.iter().map(|c| c.to_string()).collect();
        write!(f, "[p={}; {}]", self.level.p, parts.join(", "))
    }
}

impl Add for &CycElem {
    type Output = CycElem;
    fn add(self, rhs: &CycElem) -> CycElem {
        self.checked_add(rhs).expect("level mismatch")
    }
}

impl Sub for &CycElem {
    type Output = CycElem;
    fn sub(self, rhs: &CycElem) -> CycElem {
        self.checked_sub(rhs).expect("level mismatch")
    }
}

impl Mul for &CycElem {
    type Output = CycElem;
    fn mul(self, rhs: &CycElem) -> CycElem {
        self.checked_mul(rhs).expect("level mismatch")
    }
}

impl Neg for &CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        CycElem { level: self.level, x: self.x.iter().map(|c| -c).collect() }
    }
}

/// `[k]! = [1][2]...[k]`.
pub fn quantum_factorial(k: u64) -> LaurentPoly {
    (1..=k as i64).map(quantum_int).product()
}

/// `<k>! = <1><2>...<k>`.
pub fn gauss_factorial(k: u64) -> LaurentPoly {
    (1..=k as i64).map(|i| gauss_polynomial(i).unwrap()).product()
}

/// Gauss sum `G_a = sum_{k=1}^p t^(a k^2)`; `G_0 = p`.
pub fn gauss_sum(a: i64, level: PrimeLevel) -> CycElem {
    let p = level.p as i64;
    let f = LaurentPoly::from_terms((1..=p).map(|k| ((a * k * k).rem_euclid(p), 1)));
    CycElem::reduce(&f, level)
}

/// Closed form `(a|p) (-1)^m [m]! z^m`.
pub fn gauss_sum_closed_form(a: i64, level: PrimeLevel) -> CycElem {
    let m = level.m();
    let sign = legendre(a, level.p) * if m % 2 == 0 { 1 } else { -1 };
    let f = (&quantum_factorial(m) * &LaurentPoly::z().pow(m as u32)).scale(&BigInt::from(sign));
    CycElem::reduce(&f, level)
}

/// The p-sum `(a|c) = sum_{k=1}^{m} (a,k] [k,c)`, summed in the Laurent ring.
pub fn p_sum_laurent(a: i64, c: i64, level: PrimeLevel) -> LaurentPoly {
    (1..=level.m() as i64)
        .map(|k| &framed_quantum_int(a, k) * &cabled_quantum_int(k, c))
        .sum()
}

pub fn p_sum(a: i64, c: i64, level: PrimeLevel) -> CycElem {
    CycElem::reduce(&p_sum_laurent(a, c, level), level)
}

/// `b_a`, the p-bracket of the a-framed unknot.
pub fn unknot_bracket_b(a: i64, level: PrimeLevel) -> CycElem {
    p_sum(a, 0, level)
}

/// `(-1)^n [m]!^2 z^(2n)`.
pub fn b_zero_closed_form(level: PrimeLevel) -> CycElem {
    let n = level.n();
    let mf = quantum_factorial(level.m());
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let f = (&(&mf * &mf) * &LaurentPoly::z().pow(2 * n as u32)).scale(&BigInt::from(sign));
    CycElem::reduce(&f, level)
}

/// `r` in `o_p(b_a) = r n`: 2 when `p | a`, else 1.
pub fn framing_multiplicity(a: i64, level: PrimeLevel) -> u64 {
    if a.rem_euclid(level.p as i64) == 0 {
        2
    } else {
        1
    }
}

/// The unit `u_a = b_a / h^(rn)`.
pub fn unit_u(a: i64, level: PrimeLevel) -> CycElem {
    unknot_bracket_b(a, level)
        .div_h_power(framing_multiplicity(a, level) * level.n())
        .expect("o_p(b_a) >= rn")
}

/// `v_o = [m]! (z/h)^n`.
pub fn unit_v_zero(level: PrimeLevel) -> CycElem {
    let z_over_h = LaurentPoly::z().div_h().expect("h divides z");
    let f = &quantum_factorial(level.m()) * &z_over_h.pow(level.n() as u32);
    CycElem::reduce(&f, level)
}

/// `s_j = sum_{k=1}^{m} [jk][k]`.
pub fn sum_s(j: i64, level: PrimeLevel) -> CycElem {
    let f: LaurentPoly = (1..=level.m() as i64)
        .map(|k| &quantum_int(j * k) * &quantum_int(k))
        .sum();
    CycElem::reduce(&f, level)
}

/// `t_a = sum_{k=1}^{m} s^(a(k^2-1)) [k^2]`.
pub fn sum_t(a: i64, level: PrimeLevel) -> CycElem {
    let f: LaurentPoly = (1..=level.m() as i64)
        .map(|k| quantum_int(k * k).shift(2 * a * (k * k - 1)))
        .sum();
    CycElem::reduce(&f, level)
}

/// `sum_{k=1}^{m} 1 = m`.
pub fn sum_u(level: PrimeLevel) -> CycElem {
    CycElem::from_int(level, level.m())
}

/// `sum_{1 <= j <= k <= m} 1 = m(m+1)/2`.
pub fn sum_v(level: PrimeLevel) -> CycElem {
    let m = level.m();
    CycElem::from_int(level, m * (m + 1) / 2)
}

/// `sum_{1 <= j <= k <= m} q^(sign * 2 j (j-1))`.
pub fn signed_pair_sum(sign: i64, level: PrimeLevel) -> CycElem {
    let m = level.m() as i64;
    let mut terms = Vec::new();
    for k in 1..=m {
        for j in 1..=k {
            terms.push((sign * 8 * j * (j - 1), 1));
        }
    }
    CycElem::reduce(&LaurentPoly::from_terms(terms), level)
}

/// Observed p-order table for `(a|c)`, `a in 0..p`, `0 <= c <= n`, with the
/// conjectured value `r (n - c)` alongside. Reported, never asserted.
pub fn p_sum_order_table(level: PrimeLevel) -> Vec<(i64, i64, Order, u64)> {
    let n = level.n() as i64;
    let cells: Vec<(i64, i64)> = (0..level.p as i64)
        .flat_map(|a| (0..=n).map(move |c| (a, c)))
        .collect();
    crate::par::map(&cells, |&(a, c)| {
        let r = framing_multiplicity(a, level);
        (a, c, p_sum(a, c, level).p_order(), r * (n - c) as u64)
    })
}
