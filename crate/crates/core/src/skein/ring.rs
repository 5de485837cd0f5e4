//! Coefficient rings for bracket evaluation. The engine only needs addition
//! and multiplication by signed powers of `t`, so any quotient of `Z[t, t^-1]`
//! works; the cyclic rings `Z[t]/(t^p - 1)` map onto the cyclotomic ring.

use std::sync::atomic::{AtomicBool, Ordering};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::laurent::LaurentPoly;

pub trait Coeffs: Sync {
    type Elem: Clone + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn add_assign(&self, acc: &mut Self::Elem, x: &Self::Elem);
    /// `x * t^e`
    fn shift(&self, x: &Self::Elem, e: i64) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;

    /// `x * (-(t^2 + t^-2))`, the loop value.
    fn mul_loop(&self, x: &Self::Elem) -> Self::Elem {
        let mut y = self.shift(x, 2);
        self.add_assign(&mut y, &self.shift(x, -2));
        self.neg(&y)
    }

    /// `acc += x * t^e * loop^k`
    fn add_term(&self, acc: &mut Self::Elem, x: &Self::Elem, e: i64, loops: usize) {
        let mut y = self.shift(x, e);
        for _ in 0..loops {
            y = self.mul_loop(&y);
        }
        self.add_assign(acc, &y);
    }
}

pub struct LaurentCoeffs;

impl Coeffs for LaurentCoeffs {
    type Elem = LaurentPoly;

    fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero()
    }

    fn one(&self) -> LaurentPoly {
        LaurentPoly::one()
    }

    fn is_zero(&self, x: &LaurentPoly) -> bool {
        x.is_zero()
    }

    fn add_assign(&self, acc: &mut LaurentPoly, x: &LaurentPoly) {
        *acc += x;
    }

    fn shift(&self, x: &LaurentPoly, e: i64) -> LaurentPoly {
        x.shift(e)
    }

    fn neg(&self, x: &LaurentPoly) -> LaurentPoly {
        -x.clone()
    }
}

/// `Z[t]/(t^p - 1)` with `i128` coefficients; overflow is recorded, not wrapped
/// silently, and callers must check [`CyclicI128::overflowed`].
pub struct CyclicI128 {
    p: usize,
    overflow: AtomicBool,
    /// Nonzero terms `(exponent, coefficient)` of `loop^k`, folded mod `t^p - 1`.
    loop_powers: Vec<Vec<(usize, i128)>>,
}

/// A crossing closes at most two loops per smoothing.
const LOOP_TABLE: usize = 4;

impl CyclicI128 {
    pub fn new(p: u64) -> Self {
        let p = p as usize;
        let mut pows = Vec::with_capacity(LOOP_TABLE + 1);
        let mut cur = vec![0i128; p];
        cur[0] = 1;
        for _ in 0..=LOOP_TABLE {
            pows.push(cur.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect());
            let mut next = vec![0i128; p];
            for (i, &c) in cur.iter().enumerate() {
                next[(i + 2) % p] -= c;
                next[(i + p - 2) % p] -= c;
            }
            cur = next;
        }
        CyclicI128 { p, overflow: AtomicBool::new(false), loop_powers: pows }
    }

    pub fn overflowed(&self) -> bool {
        self.overflow.load(Ordering::Relaxed)
    }

    fn flag(&self) {
        self.overflow.store(true, Ordering::Relaxed);
    }
}

impl Coeffs for CyclicI128 {
    type Elem = Box<[i128]>;

    fn zero(&self) -> Self::Elem {
        vec![0; self.p].into_boxed_slice()
    }

    fn one(&self) -> Self::Elem {
        let mut v = self.zero();
        v[0] = 1;
        v
    }

    fn is_zero(&self, x: &Self::Elem) -> bool {
        x.iter().all(|&c| c == 0)
    }

    fn add_assign(&self, acc: &mut Self::Elem, x: &Self::Elem) {
        for (a, &b) in acc.iter_mut().zip(x.iter()) {
            match a.checked_add(b) {
                Some(s) => *a = s,
                None => {
                    self.flag();
                    *a = a.wrapping_add(b);
                }
            }
        }
    }

    fn shift(&self, x: &Self::Elem, e: i64) -> Self::Elem {
        let mut v = self.zero();
        let r = e.rem_euclid(self.p as i64) as usize;
        for (i, &c) in x.iter().enumerate() {
            v[(i + r) % self.p] = c;
        }
        v
    }

    fn neg(&self, x: &Self::Elem) -> Self::Elem {
        x.iter()
            .map(|&c| {
                c.checked_neg().unwrap_or_else(|| {
                    self.flag();
                    0
                })
            })
            .collect()
    }

    fn add_term(&self, acc: &mut Self::Elem, x: &Self::Elem, e: i64, loops: usize) {
        if let Some(terms) = self.loop_powers.get(loops) {
            let p = self.p;
            let r = e.rem_euclid(p as i64) as usize;
            let mut ok = true;
            for &(j, f) in terms {
                let mut k = (r + j) % p;
                for &c in x.iter() {
                    let a = &mut acc[k];
                    let s = match f {
                        1 => a.checked_add(c),
                        -1 => a.checked_sub(c),
                        _ => c.checked_mul(f).and_then(|y| a.checked_add(y)),
                    };
                    match s {
                        Some(s) => *a = s,
                        None => {
                            ok = false;
                            *a = a.wrapping_add(c.wrapping_mul(f));
                        }
                    }
                    k += 1;
                    if k == p {
                        k = 0;
                    }
                }
            }
            if !ok {
                self.flag();
            }
            return;
        }
        let mut y = self.shift(x, e);
        for _ in 0..loops {
            y = self.mul_loop(&y);
        }
        self.add_assign(acc, &y);
    }
}

/// `Z[t]/(t^p - 1)` with arbitrary-precision coefficients.
pub struct CyclicBig {
    p: usize,
}

impl CyclicBig {
    pub fn new(p: u64) -> Self {
        CyclicBig { p: p as usize }
    }
}

impl Coeffs for CyclicBig {
    type Elem = Vec<BigInt>;

    fn zero(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.p]
    }

    fn one(&self) -> Vec<BigInt> {
        let mut v = self.zero();
        v[0] = BigInt::from(1);
        v
    }

    fn is_zero(&self, x: &Vec<BigInt>) -> bool {
        x.iter().all(|c| c.is_zero())
    }

    fn add_assign(&self, acc: &mut Vec<BigInt>, x: &Vec<BigInt>) {
        for (a, b) in acc.iter_mut().zip(x) {
            *a += b;
        }
    }

    fn shift(&self, x: &Vec<BigInt>, e: i64) -> Vec<BigInt> {
        let mut v = self.zero();
        let r = e.rem_euclid(self.p as i64) as usize;
        for (i, c) in x.iter().enumerate() {
            v[(i + r) % self.p] = c.clone();
        }
        v
    }

    fn neg(&self, x: &Vec<BigInt>) -> Vec<BigInt> {
        x.iter().map(|c| -c).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_multiplication() {
        let r = LaurentCoeffs;
        let d = r.mul_loop(&r.one());
        assert_eq!(d, -LaurentPoly::from_terms([(2, 1), (-2, 1)]));
        let c = CyclicI128::new(5);
        let d = c.mul_loop(&c.one());
        assert_eq!(&*d, &[0, 0, -1, -1, 0]);
        let b = CyclicBig::new(5);
        let mut acc = b.zero();
        b.add_term(&mut acc, &b.one(), 1, 2);
        // t * (t^2 + t^-2)^2 = t^5 + 2t + t^-3 = 1 + 2t + t^2 mod t^5 - 1
        let want: Vec<BigInt> = [1, 2, 1, 0, 0].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(acc, want);
    }

    #[test]
    fn overflow_is_flagged() {
        let c = CyclicI128::new(3);
        let mut x = c.one();
        x[0] = i128::MAX;
        let mut acc = x.clone();
        c.add_assign(&mut acc, &x);
        assert!(c.overflowed());
    }
}
