use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Symmetric integer matrix: framings on the diagonal, linking numbers off it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingMatrix {
    a: Vec<Vec<i64>>,
}

/// Counts of positive, negative and zero eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignatureTriple {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl SignatureTriple {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    /// First Betti number.
    pub b: usize,
    /// Rank of `H_1` with `F_p` coefficients.
    pub b_p: usize,
    /// `|H_1|`, `None` when infinite.
    pub order: Option<BigInt>,
    pub invariant_factors: Vec<BigInt>,
}

impl LinkingMatrix {
    pub fn new(a: Vec<Vec<i64>>) -> Self {
        for (i, row) in a.iter().enumerate() {
            assert_eq!(row.len(), a.len(), "matrix must be square");
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(x, a[j][i], "matrix must be symmetric");
            }
        }
        LinkingMatrix { a }
    }

    pub fn size(&self) -> usize {
        self.a.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.a
    }

    /// Sum of the off-diagonal linking numbers `lk(i, j)` over `i < j`.
    pub fn lambda(&self) -> i64 {
        let n = self.size();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| self.a[i][j]).sum()
    }

    pub fn signature_triple(&self) -> SignatureTriple {
        let n = self.size();
        let mut m: Vec<Vec<BigRational>> = self
            .a
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        let mut t = SignatureTriple { positive: 0, negative: 0, zero: 0 };
        let mut k = 0;
        while k < n {
            let swap = |m: &mut Vec<Vec<BigRational>>, i: usize, j: usize| {
                m.swap(i, j);
                for r in m.iter_mut() {
                    r.swap(i, j);
                }
            };
            if let Some(i) = (k..n).find(|&i| !m[i][i].is_zero()) {
                swap(&mut m, k, i);
                let piv = m[k][k].clone();
                if piv.is_positive() {
                    t.positive += 1;
                } else {
                    t.negative += 1;
                }
                for i in k + 1..n {
                    let f = &m[i][k] / &piv;
                    if f.is_zero() {
                        continue;
                    }
                    for j in k + 1..n {
                        let d = &f * &m[k][j];
                        m[i][j] -= d;
                    }
                }
                k += 1;
                continue;
            }
            let pair = (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !m[i][j].is_zero());
            let Some((i, j)) = pair else {
                t.zero += n - k;
                break;
            };
            // zero diagonal with b = m[i][j] != 0: a hyperbolic pair
            swap(&mut m, k, i);
            swap(&mut m, k + 1, j);
            t.positive += 1;
            t.negative += 1;
            let b = m[k][k + 1].clone();
            for r in k + 2..n {
                for c in k + 2..n {
                    // subtract B^T M^{-1} B with M^{-1} = [[0, 1/b], [1/b, 0]]
                    let d = (&m[k][r] * &m[k + 1][c] + &m[k + 1][r] * &m[k][c]) / &b;
                    m[r][c] -= d;
                }
            }
            k += 2;
        }
        t
    }

    /// Smith normal form diagonal, nonnegative, each dividing the next.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        smith_diagonal(self.a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn determinant(&self) -> BigInt {
        let n = self.size();
        let mut m: Vec<Vec<BigRational>> = self
            .a
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        let mut det = BigRational::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            if p != k {
                m.swap(p, k);
                det = -det;
            }
            det *= &m[k][k];
            for i in k + 1..n {
                let f = &m[i][k] / &m[k][k];
                for j in k..n {
                    let d = &f * &m[k][j];
                    m[i][j] -= d;
                }
            }
        }
        det.to_integer()
    }

    /// Homology of the surgery manifold, from the Smith normal form.
    pub fn homology(&self, p: u64) -> Homology {
        let f = self.invariant_factors();
        let pb = BigInt::from(p);
        let b = f.iter().filter(|x| x.is_zero()).count();
        let b_p = f.iter().filter(|x| x.is_multiple_of(&pb)).count();
        let order = if b == 0 { Some(f.iter().product()) } else { None };
        Homology { b, b_p, order, invariant_factors: f }
    }
}

fn smith_diagonal(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let n = m.len();
    for k in 0..n {
        loop {
            // smallest nonzero entry in the remaining block as pivot
            let mut best: Option<(usize, usize)> = None;
            for i in k..n {
                for j in k..n {
                    if !m[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            m.swap(k, pi);
            for r in m.iter_mut() {
                r.swap(k, pj);
            }
            let mut clean = true;
            for i in k + 1..n {
                let q = m[i][k].div_floor(&m[k][k]);
                if !q.is_zero() {
                    for j in k..n {
                        let d = &q * &m[k][j];
                        m[i][j] -= d;
                    }
                }
                clean &= m[i][k].is_zero();
            }
            for j in k + 1..n {
                let q = m[k][j].div_floor(&m[k][k]);
                if !q.is_zero() {
                    for i in k..n {
                        let d = &q * &m[i][k];
                        m[i][j] -= d;
                    }
                }
                clean &= m[k][j].is_zero();
            }
            if !clean {
                continue;
            }
            // pivot must divide the rest of the block
            let bad = (k + 1..n)
                .flat_map(|i| (k + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !m[i][j].is_multiple_of(&m[k][k]));
            match bad {
                Some((i, _)) => {
                    for j in k..n {
                        let v = m[i][j].clone();
                        m[k][j] += v;
                    }
                }
                None => break,
            }
        }
    }
    let mut d: Vec<BigInt> = (0..n).map(|i| m[i][i].abs()).collect();
    // zeros last
    d.sort_by(|a, b| match (a.is_zero(), b.is_zero()) {
        (true, false) => std::cmp::Ordering::Greater,
        (false, true) => std::cmp::Ordering::Less,
        _ => a.cmp(b),
    });
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lm(a: &[&[i64]]) -> LinkingMatrix {
        LinkingMatrix::new(a.iter().map(|r| r.to_vec()).collect())
    }

    /// Rank over `F_p` by plain elimination.
    fn rank_mod_p(m: &LinkingMatrix, p: i64) -> usize {
        let n = m.size();
        let mut a: Vec<Vec<i64>> = m.rows().iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
        let mut rank = 0;
        for c in 0..n {
            let Some(r) = (rank..n).find(|&r| a[r][c] != 0) else { continue };
            a.swap(rank, r);
            let inv = (1..p).find(|x| x * a[rank][c] % p == 1).unwrap();
            for i in 0..n {
                if i != rank && a[i][c] != 0 {
                    let f = a[i][c] * inv % p;
                    for j in 0..n {
                        a[i][j] = (a[i][j] - f * a[rank][j]).rem_euclid(p);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn signatures() {
        let t = lm(&[&[0, 1], &[1, 0]]).signature_triple();
        assert_eq!((t.positive, t.negative, t.zero), (1, 1, 0));
        let t = lm(&[&[0, 0], &[0, 0]]).signature_triple();
        assert_eq!((t.positive, t.negative, t.zero), (0, 0, 2));
        let t = lm(&[&[-3]]).signature_triple();
        assert_eq!(t.signature(), -1);
        let t = lm(&[&[1, 2], &[2, 1]]).signature_triple();
        assert_eq!((t.positive, t.negative, t.zero), (1, 1, 0));
        let t = lm(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]).signature_triple();
        assert_eq!((t.positive, t.negative, t.zero), (1, 1, 1));
        let t = lm(&[]).signature_triple();
        assert_eq!(t.signature(), 0);
    }

    #[test]
    fn homology_examples() {
        let h = lm(&[&[5]]).homology(5);
        assert_eq!((h.b, h.b_p, h.order), (0, 1, Some(BigInt::from(5))));
        let h = lm(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]).homology(3);
        assert_eq!((h.b, h.b_p, h.order), (3, 3, None));
        let h = lm(&[&[2, 1], &[1, 2]]).homology(3);
        assert_eq!((h.b, h.b_p, h.order.clone()), (0, 1, Some(BigInt::from(3))));
        assert_eq!(h.invariant_factors, vec![BigInt::from(1), BigInt::from(3)]);
        let h = lm(&[]).homology(7);
        assert_eq!((h.b, h.b_p, h.order), (0, 0, Some(BigInt::from(1))));
    }

    #[test]
    fn smith_agrees_with_determinant_and_rank() {
        let cases: Vec<Vec<Vec<i64>>> = vec![
            vec![vec![4, 6, 2], vec![6, 0, 3], vec![2, 3, -5]],
            vec![vec![6, 3], vec![3, 6]],
            vec![vec![0, 2, 2], vec![2, 0, 2], vec![2, 2, 0]],
            vec![vec![9, 3, 0], vec![3, 1, 0], vec![0, 0, 3]],
        ];
        for a in cases {
            let m = LinkingMatrix::new(a);
            let f = m.invariant_factors();
            let prod: BigInt = f.iter().product();
            assert_eq!(prod, m.determinant().abs());
            for w in f.windows(2) {
                assert!(w[1].is_zero() || w[1].is_multiple_of(&w[0]));
            }
            for p in [2u64, 3, 5] {
                assert_eq!(m.homology(p).b_p, m.size() - rank_mod_p(&m, p as i64));
            }
        }
    }

    fn symmetric() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..6).prop_flat_map(|n| {
            prop::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
                (0..n).map(|i| (0..n).map(|j| v[i.min(j) * n + i.max(j)]).collect()).collect()
            })
        })
    }

    proptest! {
        #[test]
        fn signature_is_a_congruence_invariant(a in symmetric(), seed in any::<u64>()) {
            let n = a.len();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                perm.swap(i, (s % (i as u64 + 1)) as usize);
                s /= i as u64 + 1;
            }
            let b: Vec<Vec<i64>> = perm.iter().map(|&i| perm.iter().map(|&j| a[i][j]).collect()).collect();
            let t = LinkingMatrix::new(a).signature_triple();
            prop_assert_eq!(t.positive + t.negative + t.zero, n);
            prop_assert_eq!(LinkingMatrix::new(b).signature_triple(), t);
        }

        #[test]
        fn rational_rank_bounds_mod_p_rank(a in symmetric(), p in prop::sample::select(vec![3u64, 5, 7])) {
            let h = LinkingMatrix::new(a).homology(p);
            prop_assert!(h.b <= h.b_p);
        }
    }
}
