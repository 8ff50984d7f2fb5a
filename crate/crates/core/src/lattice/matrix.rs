use core::fmt;

use num_integer::Integer;

use crate::sum::{exact_add, ExactSum};
use crate::{Error, Result};

/// M = (k l; n m) with 64-bit entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix2 {
    pub k: i64,
    pub l: i64,
    pub n: i64,
    pub m: i64,
}

impl fmt::Display for IntMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.k, self.l, self.n, self.m)
    }
}

impl IntMatrix2 {
    pub const IDENTITY: IntMatrix2 = IntMatrix2::new(1, 0, 0, 1);

    pub const fn new(k: i64, l: i64, n: i64, m: i64) -> Self {
        IntMatrix2 { k, l, n, m }
    }

    /// km − ln, or an overflow error if it leaves the 64-bit range.
    pub fn det(&self) -> Result<i64> {
        let d = i128::from(self.k) * i128::from(self.m) - i128::from(self.l) * i128::from(self.n);
        i64::try_from(d).map_err(|_| Error::Overflow("determinant"))
    }

    pub fn checked_mul(&self, other: &IntMatrix2) -> Result<IntMatrix2> {
        let entry = |a: i64, b: i64, c: i64, d: i64| -> Result<i64> {
            let v = i128::from(a) * i128::from(b) + i128::from(c) * i128::from(d);
            i64::try_from(v).map_err(|_| Error::Overflow("matrix product"))
        };
        Ok(IntMatrix2 {
            k: entry(self.k, other.k, self.l, other.n)?,
            l: entry(self.k, other.l, self.l, other.m)?,
            n: entry(self.n, other.k, self.m, other.n)?,
            m: entry(self.n, other.l, self.m, other.m)?,
        })
    }

    /// The inverse of a determinant-1 matrix.
    pub fn sl2_inverse(&self) -> Result<IntMatrix2> {
        if self.det()? != 1 {
            return Err(Error::domain("matrix is not in SL(2, Z)"));
        }
        let neg = |v: i64| v.checked_neg().ok_or(Error::Overflow("matrix inverse"));
        Ok(IntMatrix2::new(self.m, neg(self.l)?, neg(self.n)?, self.k))
    }

    pub fn max_abs(&self) -> u64 {
        self.k
            .unsigned_abs()
            .max(self.l.unsigned_abs())
            .max(self.n.unsigned_abs())
            .max(self.m.unsigned_abs())
    }
}

/// All matrices with max(|k|, |l|, |n|, |m|) ≤ B.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoxSpec {
    pub bound: i64,
}

impl BoxSpec {
    /// Boxes with more points than this are refused.
    pub const MAX_POINTS: u64 = 1 << 32;

    pub fn new(bound: i64) -> Result<Self> {
        let b = BoxSpec { bound };
        b.validate()?;
        Ok(b)
    }

    pub fn side(&self) -> u64 {
        2 * self.bound as u64 + 1
    }

    /// (2B + 1)⁴, saturating.
    pub fn points(&self) -> u64 {
        let s = self.side();
        s.saturating_mul(s).saturating_mul(s).saturating_mul(s)
    }

    pub fn validate(&self) -> Result<()> {
        if self.bound < 0 {
            return Err(Error::domain("box bound must be non-negative"));
        }
        if self.bound > 1 << 20 || self.points() > Self::MAX_POINTS {
            return Err(Error::MemoryGuard {
                requested: self.points(),
                cap: Self::MAX_POINTS,
            });
        }
        Ok(())
    }

    pub fn contains(&self, m: &IntMatrix2) -> bool {
        m.max_abs() <= self.bound as u64
    }

    /// Every matrix of the box, in lexicographic (k, l, n, m) order.
    pub fn iter(&self) -> impl Iterator<Item = IntMatrix2> {
        let b = self.bound;
        (-b..=b).flat_map(move |k| {
            (-b..=b).flat_map(move |l| (-b..=b).flat_map(move |n| (-b..=b).map(move |m| IntMatrix2::new(k, l, n, m))))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetPartition<T> {
    pub sum_zero: T,
    pub sum_pos: T,
    pub sum_neg: T,
    /// Accumulated independently of the three strata.
    pub total: T,
    pub count_zero: u64,
    pub count_pos: u64,
    pub count_neg: u64,
}

impl<T: ExactSum> DetPartition<T> {
    /// sum_zero + sum_pos + sum_neg, checked.
    pub fn strata_sum(&self) -> Result<T> {
        exact_add(exact_add(self.sum_zero, self.sum_pos, "partition_by_det")?, self.sum_neg, "partition_by_det")
    }

    pub fn is_exact(&self) -> bool {
        self.strata_sum().is_ok_and(|s| s == self.total)
    }
}

/// Splits Σ_{M in box} f(M) by the sign of det M.
pub fn partition_by_det<T: ExactSum>(bx: &BoxSpec, mut f: impl FnMut(&IntMatrix2) -> T) -> Result<DetPartition<T>> {
    bx.validate()?;
    const WHAT: &str = "partition_by_det";
    let mut p = DetPartition {
        sum_zero: T::ZERO,
        sum_pos: T::ZERO,
        sum_neg: T::ZERO,
        total: T::ZERO,
        count_zero: 0,
        count_pos: 0,
        count_neg: 0,
    };
    for mat in bx.iter() {
        let v = f(&mat);
        p.total = exact_add(p.total, v, WHAT)?;
        match mat.det()?.signum() {
            0 => {
                p.sum_zero = exact_add(p.sum_zero, v, WHAT)?;
                p.count_zero += 1;
            }
            1 => {
                p.sum_pos = exact_add(p.sum_pos, v, WHAT)?;
                p.count_pos += 1;
            }
            _ => {
                p.sum_neg = exact_add(p.sum_neg, v, WHAT)?;
                p.count_neg += 1;
            }
        }
    }
    Ok(p)
}

/// Streams the rank ≤ 1 matrices of a box, each exactly once, without
/// scanning the whole box: a zero first row allows any second row, and a
/// nonzero primitive-direction first row (k, l) = g·(k′, l′) forces the second
/// row onto the multiples j·(k′, l′).
#[derive(Debug, Clone)]
pub struct DetZeroIter {
    bound: i64,
    k: i64,
    l: i64,
    // cursor over the second row: (n, m) for the zero first row, j otherwise
    a: i64,
    b: i64,
    j_hi: i64,
    dir: (i64, i64),
    done: bool,
}

impl DetZeroIter {
    fn start_row(&mut self) {
        let b = self.bound;
        if self.k == 0 && self.l == 0 {
            self.a = -b;
            self.b = -b;
        } else {
            let g = self.k.gcd(&self.l);
            self.dir = (self.k / g, self.l / g);
            let step = self.dir.0.abs().max(self.dir.1.abs());
            let j_max = b / step;
            self.a = -j_max;
            self.j_hi = j_max;
        }
    }

    fn advance_row(&mut self) {
        let b = self.bound;
        if self.l < b {
            self.l += 1;
        } else if self.k < b {
            self.k += 1;
            self.l = -b;
        } else {
            self.done = true;
            return;
        }
        self.start_row();
    }
}

impl Iterator for DetZeroIter {
    type Item = IntMatrix2;

    fn next(&mut self) -> Option<IntMatrix2> {
        let b = self.bound;
        while !self.done {
            if self.k == 0 && self.l == 0 {
                if self.a <= b {
                    let out = IntMatrix2::new(0, 0, self.a, self.b);
                    if self.b < b {
                        self.b += 1;
                    } else {
                        self.b = -b;
                        self.a += 1;
                    }
                    return Some(out);
                }
            } else if self.a <= self.j_hi {
                let j = self.a;
                self.a += 1;
                return Some(IntMatrix2::new(self.k, self.l, j * self.dir.0, j * self.dir.1));
            }
            self.advance_row();
        }
        None
    }
}

pub fn enumerate_det_zero(bx: &BoxSpec) -> Result<DetZeroIter> {
    bx.validate()?;
    let b = bx.bound;
    let mut it = DetZeroIter {
        bound: b,
        k: -b,
        l: -b,
        a: 0,
        b: 0,
        j_hi: 0,
        dir: (0, 0),
        done: false,
    };
    it.start_row();
    Ok(it)
}
