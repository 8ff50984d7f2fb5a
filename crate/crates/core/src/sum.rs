//! Compensated (Neumaier) accumulation.

use crate::Complex64;

/// Running sum with an error-compensation term.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub const fn new() -> Self {
        NeumaierSum { sum: 0.0, comp: 0.0 }
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if libm::fabs(self.sum) >= libm::fabs(x) {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl Extend<f64> for NeumaierSum {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for x in iter {
            self.add(x);
        }
    }
}

impl FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = NeumaierSum::new();
        s.extend(iter);
        s
    }
}

/// Componentwise compensated sum of complex numbers.
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexSum {
    re: NeumaierSum,
    im: NeumaierSum,
}

impl ComplexSum {
    pub const fn new() -> Self {
        ComplexSum {
            re: NeumaierSum::new(),
            im: NeumaierSum::new(),
        }
    }

    #[inline]
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

impl FromIterator<Complex64> for ComplexSum {
    fn from_iter<I: IntoIterator<Item = Complex64>>(iter: I) -> Self {
        let mut s = ComplexSum::new();
        for z in iter {
            s.add(z);
        }
        s
    }
}

/// Values that can be accumulated without silent loss: integer types use
/// checked arithmetic, floats only refuse to produce non-finite results.
pub trait ExactSum: Copy + PartialEq + core::fmt::Debug {
    const ZERO: Self;
    fn checked_add(self, other: Self) -> Option<Self>;
    fn checked_neg(self) -> Option<Self>;
}

macro_rules! exact_int {
    ($($t:ty),*) => {$(
        impl ExactSum for $t {
            const ZERO: Self = 0;
            #[inline]
            fn checked_add(self, other: Self) -> Option<Self> {
                <$t>::checked_add(self, other)
            }
            #[inline]
            fn checked_neg(self) -> Option<Self> {
                <$t>::checked_neg(self)
            }
        }
    )*};
}

exact_int!(i64, i128);

impl ExactSum for f64 {
    const ZERO: Self = 0.0;
    #[inline]
    fn checked_add(self, other: Self) -> Option<Self> {
        let s = self + other;
        s.is_finite().then_some(s)
    }
    #[inline]
    fn checked_neg(self) -> Option<Self> {
        Some(-self)
    }
}

/// Adds with overflow reported as an error naming `what`.
pub fn exact_add<T: ExactSum>(a: T, b: T, what: &'static str) -> crate::Result<T> {
    a.checked_add(b).ok_or(crate::Error::Overflow(what))
}
