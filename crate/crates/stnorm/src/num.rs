//! Rational scalars and the small exact linear algebra used everywhere else.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn int_rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Parses a decimal-free rational string: `"p/q"` or `"p"`, optional sign.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational literal".into());
    }
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (s, None),
    };
    let check = |t: &str| -> Result<Int, String> {
        let t = t.trim();
        let body = t.strip_prefix('-').or_else(|| t.strip_prefix('+')).unwrap_or(t);
        if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("invalid rational literal {s:?}"));
        }
        Int::from_str(t).map_err(|e| e.to_string())
    };
    let n = check(num)?;
    match den {
        None => Ok(Rat::from_integer(n)),
        Some(d) => {
            let d = check(d)?;
            if d.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Formats a rational as `"p/q"`, or `"p"` when integral.
pub fn fmt_rat(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn factorial(n: u32) -> Int {
    let mut acc = Int::one();
    for k in 2..=n as u64 {
        acc *= Int::from(k);
    }
    acc
}

pub fn pow2(e: u64) -> Int {
    Int::one() << e
}

pub fn rat_pow(base: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

/// Floor of the k-th root of a nonnegative integer, by Newton iteration.
pub fn int_nth_root_floor(x: &Int, k: u32) -> Int {
    assert!(k >= 1 && !x.is_negative());
    if x.is_zero() || x.is_one() || k == 1 {
        return x.clone();
    }
    let bits = x.bits();
    let mut guess = Int::one() << (bits / k as u64 + 1);
    let kk = Int::from(k);
    let km1 = Int::from(k - 1);
    loop {
        // next = ((k-1)*g + x / g^{k-1}) / k
        let gpow = num_traits::pow::pow(guess.clone(), (k - 1) as usize);
        let next: Int = (&km1 * &guess + x / &gpow) / &kk;
        if next >= guess {
            break;
        }
        guess = next;
    }
    while num_traits::pow::pow(guess.clone(), k as usize) > *x {
        guess -= 1;
    }
    guess
}

/// Exact k-th root of a nonnegative rational, when one exists.
pub fn rat_nth_root_exact(x: &Rat, k: u32) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let rn = int_nth_root_floor(x.numer(), k);
    let rd = int_nth_root_floor(x.denom(), k);
    if num_traits::pow::pow(rn.clone(), k as usize) == *x.numer()
        && num_traits::pow::pow(rd.clone(), k as usize) == *x.denom()
    {
        Some(Rat::new(rn, rd))
    } else {
        None
    }
}

pub fn lcm_int(a: &Int, b: &Int) -> Int {
    if a.is_zero() || b.is_zero() {
        Int::zero()
    } else {
        (a * b).abs() / a.gcd(b)
    }
}

// ---------------------------------------------------------------------------
// Dense rational matrices, just enough for hulls, charts and lattice work.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<Vec<Rat>>,
}

impl Mat {
    pub fn from_rows(a: Vec<Vec<Rat>>) -> Self {
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        debug_assert!(a.iter().all(|r| r.len() == cols));
        Mat { rows, cols, a }
    }

    pub fn identity(n: usize) -> Self {
        let mut a = vec![vec![Rat::zero(); n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = Rat::one();
        }
        Mat { rows: n, cols: n, a }
    }

    /// Row echelon form in place; returns (rank, pivot column per step).
    fn eliminate(&mut self) -> (usize, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.a[i][c].is_zero()) else {
                continue;
            };
            self.a.swap(r, p);
            let inv = self.a[r][c].recip();
            for x in self.a[r].iter_mut() {
                *x *= &inv;
            }
            for i in 0..self.rows {
                if i != r && !self.a[i][c].is_zero() {
                    let f = self.a[i][c].clone();
                    for c2 in 0..self.cols {
                        let t = &self.a[r][c2] * &f;
                        self.a[i][c2] -= t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (r, pivots)
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate().0
    }

    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.a.clone();
        let mut det = Rat::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
                return Rat::zero();
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det *= &m[c][c];
            let inv = m[c][c].recip();
            for i in c + 1..n {
                if !m[i][c].is_zero() {
                    let f = &m[i][c] * &inv;
                    for c2 in c..n {
                        let t = &m[c][c2] * &f;
                        m[i][c2] -= t;
                    }
                }
            }
        }
        det
    }

    /// Solves `self * x = b`; `None` when inconsistent. For underdetermined
    /// systems an arbitrary consistent solution is returned (free vars = 0).
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = self.clone();
        for (i, row) in aug.a.iter_mut().enumerate() {
            row.push(b[i].clone());
        }
        aug.cols += 1;
        let (_, pivots) = aug.eliminate();
        // Inconsistent iff a pivot lands in the augmented column.
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.a[r][self.cols].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::from_rows(
            self.a
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    let mut r = row.clone();
                    r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
                    r
                })
                .collect(),
        );
        let (rank, _) = aug.eliminate();
        if rank < n {
            return None;
        }
        Some(Mat::from_rows(
            aug.a.into_iter().map(|row| row[n..].to_vec()).collect(),
        ))
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        self.a.iter().map(|row| dot(row, v)).collect()
    }

    /// A basis of the kernel, as column vectors.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let (_, pivots) = m.eliminate();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rat::zero(); self.cols];
                v[f] = Rat::one();
                for (r, &c) in pivots.iter().enumerate() {
                    v[c] = -m.a[r][f].clone();
                }
                v
            })
            .collect()
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Integer row reduction to (row-style) Hermite normal form.
///
/// Returns `(h, u)` with `u * m = h`, `u` unimodular, `h` in HNF with zero
/// rows last. Used for membership and exact solving over ℤ.
pub fn hermite_normal_form(m: &[Vec<Int>]) -> (Vec<Vec<Int>>, Vec<Vec<Int>>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut h: Vec<Vec<Int>> = m.to_vec();
    let mut u: Vec<Vec<Int>> = (0..rows)
        .map(|i| {
            (0..rows)
                .map(|j| if i == j { Int::one() } else { Int::zero() })
                .collect()
        })
        .collect();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            // Find the row at or below r with the smallest nonzero |entry|.
            let mut best: Option<usize> = None;
            for i in r..rows {
                if !h[i][c].is_zero()
                    && best.map_or(true, |b| h[i][c].abs() < h[b][c].abs())
                {
                    best = Some(i);
                }
            }
            let Some(p) = best else { break };
            h.swap(r, p);
            u.swap(r, p);
            if h[r][c].is_negative() {
                for x in h[r].iter_mut() {
                    *x = -x.clone();
                }
                for x in u[r].iter_mut() {
                    *x = -x.clone();
                }
            }
            let mut done = true;
            for i in r + 1..rows {
                if !h[i][c].is_zero() {
                    let q = h[i][c].div_floor(&h[r][c]);
                    for j in 0..cols {
                        let t = &h[r][j] * &q;
                        h[i][j] -= t;
                    }
                    for j in 0..rows {
                        let t = &u[r][j] * &q;
                        u[i][j] -= t;
                    }
                    if !h[i][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if !h[r][c].is_zero() {
            // Reduce entries above the pivot.
            for i in 0..r {
                let q = h[i][c].div_floor(&h[r][c]);
                if !q.is_zero() {
                    for j in 0..cols {
                        let t = &h[r][j] * &q;
                        h[i][j] -= t;
                    }
                    for j in 0..rows {
                        let t = &u[r][j] * &q;
                        u[i][j] -= t;
                    }
                }
            }
            r += 1;
        }
    }
    (h, u)
}

/// Solves `x * m = target` over ℤ (row vector x), if a solution exists.
pub fn solve_integer_combination(m: &[Vec<Int>], target: &[Int]) -> Option<Vec<Int>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    if rows == 0 {
        return target.iter().all(Int::is_zero).then(Vec::new);
    }
    assert_eq!(target.len(), cols);
    let (h, u) = hermite_normal_form(m);
    // Solve y * h = target by forward substitution over the pivot columns.
    let mut y = vec![Int::zero(); rows];
    let mut t: Vec<Int> = target.to_vec();
    for (i, hrow) in h.iter().enumerate() {
        let Some(c) = hrow.iter().position(|x| !x.is_zero()) else {
            break;
        };
        let (q, rem) = t[c].div_rem(&hrow[c]);
        if !rem.is_zero() {
            return None;
        }
        y[i] = q;
        for j in 0..cols {
            let d = &hrow[j] * &y[i];
            t[j] -= d;
        }
    }
    if t.iter().any(|x| !x.is_zero()) {
        return None;
    }
    // x = y * u
    let x = (0..rows)
        .map(|j| (0..rows).map(|i| &y[i] * &u[i][j]).sum())
        .collect();
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rat("-7").unwrap(), int_rat(-7));
        assert_eq!(parse_rat(" 10/4 ").unwrap(), rat(5, 2));
        assert!(parse_rat("1.5").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("").is_err());
        assert_eq!(fmt_rat(&rat(5, 2)), "5/2");
        assert_eq!(fmt_rat(&int_rat(-3)), "-3");
    }

    #[test]
    fn nth_roots() {
        assert_eq!(int_nth_root_floor(&Int::from(10000), 2), Int::from(100));
        assert_eq!(int_nth_root_floor(&Int::from(9999), 2), Int::from(99));
        assert_eq!(int_nth_root_floor(&Int::from(27), 3), Int::from(3));
        assert_eq!(int_nth_root_floor(&Int::from(26), 3), Int::from(2));
        assert_eq!(rat_nth_root_exact(&rat(16, 9), 2), Some(rat(4, 3)));
        assert_eq!(rat_nth_root_exact(&rat(2, 1), 2), None);
    }

    #[test]
    fn linear_algebra() {
        let m = Mat::from_rows(vec![
            vec![int_rat(2), int_rat(1)],
            vec![int_rat(1), int_rat(3)],
        ]);
        assert_eq!(m.det(), int_rat(5));
        assert_eq!(m.rank(), 2);
        let x = m.solve(&[int_rat(5), int_rat(10)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![int_rat(5), int_rat(10)]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv.mul_vec(&[int_rat(5), int_rat(10)]), x);

        let sing = Mat::from_rows(vec![
            vec![int_rat(1), int_rat(2)],
            vec![int_rat(2), int_rat(4)],
        ]);
        assert_eq!(sing.rank(), 1);
        assert!(sing.inverse().is_none());
        assert!(sing.solve(&[int_rat(1), int_rat(3)]).is_none());
        let ns = sing.nullspace();
        assert_eq!(ns.len(), 1);
        assert_eq!(sing.mul_vec(&ns[0]), vec![Rat::zero(), Rat::zero()]);
    }

    #[test]
    fn integer_combinations() {
        let m = vec![
            vec![Int::from(2), Int::from(0)],
            vec![Int::from(0), Int::from(3)],
            vec![Int::from(1), Int::from(1)],
        ];
        let t = vec![Int::from(5), Int::from(7)];
        let x = solve_integer_combination(&m, &t).unwrap();
        for j in 0..2 {
            let got: Int = (0..3).map(|i| &x[i] * &m[i][j]).sum();
            assert_eq!(got, t[j]);
        }
        // 1 is not in the lattice generated by (2,0) and (0,3) alone in x-coord parity terms.
        let m2 = vec![vec![Int::from(2)]];
        assert!(solve_integer_combination(&m2, &[Int::from(3)]).is_none());
        assert!(solve_integer_combination(&m2, &[Int::from(4)]).is_some());
    }
}
