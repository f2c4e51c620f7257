//! Outward-rounded `f64` intervals.
//!
//! Every arithmetic result is widened by a few ulps in each direction, which
//! over-approximates true directed rounding. Conversions from exact rationals
//! are padded to absorb the conversion error of `BigRational::to_f64`.

use core::f64::consts::PI;
use num_traits::ToPrimitive;

use crate::rat::Rat;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

fn down(x: f64, steps: u32) -> f64 {
    let mut x = x;
    for _ in 0..steps {
        x = x.next_down();
    }
    x
}

fn up(x: f64, steps: u32) -> f64 {
    let mut x = x;
    for _ in 0..steps {
        x = x.next_up();
    }
    x
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "inverted interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    pub fn point(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    pub fn zero() -> Self {
        Interval::point(0.0)
    }

    pub fn one() -> Self {
        Interval::point(1.0)
    }

    /// Encloses an exact rational. `BigRational::to_f64` converts numerator
    /// and denominator separately (≤1 ulp each) and divides (correctly
    /// rounded), so an 8-ulp pad over-covers the conversion error.
    pub fn from_rat(x: &Rat) -> Self {
        let f = x.to_f64().unwrap_or(f64::NAN);
        if !f.is_finite() {
            return Interval::new(f64::NEG_INFINITY, f64::INFINITY);
        }
        Interval::new(down(f, 8), up(f, 8))
    }

    pub fn hull(a: Self, b: Self) -> Self {
        Interval::new(a.lo.min(b.lo), a.hi.max(b.hi))
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(0.0)
    }

    pub fn is_positive(&self) -> bool {
        self.lo > 0.0
    }

    pub fn is_negative(&self) -> bool {
        self.hi < 0.0
    }

    pub fn neg(self) -> Self {
        Interval::new(-self.hi, -self.lo)
    }

    pub fn add(self, o: Self) -> Self {
        Interval::new(down(self.lo + o.lo, 1), up(self.hi + o.hi, 1))
    }

    pub fn sub(self, o: Self) -> Self {
        self.add(o.neg())
    }

    pub fn mul(self, o: Self) -> Self {
        let c = [
            self.lo * o.lo,
            self.lo * o.hi,
            self.hi * o.lo,
            self.hi * o.hi,
        ];
        let mut lo = c[0];
        let mut hi = c[0];
        for &v in &c[1..] {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        Interval::new(down(lo, 1), up(hi, 1))
    }

    /// Reciprocal; panics if the interval straddles zero.
    pub fn recip(self) -> Self {
        assert!(
            !self.contains_zero(),
            "reciprocal of interval containing zero"
        );
        Interval::new(down(1.0 / self.hi, 1), up(1.0 / self.lo, 1))
    }

    pub fn div(self, o: Self) -> Self {
        self.mul(o.recip())
    }

    pub fn powi(self, k: u32) -> Self {
        let mut acc = Interval::one();
        let mut base = self;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            k >>= 1;
        }
        acc
    }

    /// Square root of a nonnegative interval (clamps tiny negative `lo` to 0).
    pub fn sqrt(self) -> Self {
        assert!(self.hi >= 0.0, "sqrt of negative interval");
        let lo = if self.lo <= 0.0 {
            0.0
        } else {
            down(libm::sqrt(self.lo), 2).max(0.0)
        };
        Interval::new(lo, up(libm::sqrt(self.hi), 2))
    }

    pub fn abs(self) -> Self {
        if self.lo >= 0.0 {
            self
        } else if self.hi <= 0.0 {
            self.neg()
        } else {
            Interval::new(0.0, self.hi.max(-self.lo))
        }
    }

    /// Enclosure of `cos` over the whole interval of angles.
    pub fn cos_range(theta_lo: f64, theta_hi: f64) -> Self {
        enclose_trig(theta_lo, theta_hi, libm::cos, 0.0)
    }

    /// Enclosure of `sin` over the whole interval of angles.
    pub fn sin_range(theta_lo: f64, theta_hi: f64) -> Self {
        // sin(t) = cos(t - pi/2); extrema of sin at pi/2 + k*pi
        enclose_trig(theta_lo, theta_hi, libm::sin, PI / 2.0)
    }
}

/// Hull of {f(lo), f(hi)} plus ±1 whenever an extremum of f may lie inside.
/// `offset` is the phase of the maxima: maxima of f at `offset + 2kπ`.
fn enclose_trig(lo: f64, hi: f64, f: fn(f64) -> f64, offset: f64) -> Interval {
    const TRIG_PAD: u32 = 6;
    if !(lo.is_finite() && hi.is_finite()) || hi - lo >= 2.0 * PI {
        return Interval::new(-1.0, 1.0);
    }
    let va = f(lo);
    let vb = f(hi);
    let mut out = Interval::new(down(va.min(vb), TRIG_PAD).max(-1.0), up(va.max(vb), TRIG_PAD).min(1.0));
    // conservative test for presence of extrema: use padded bounds in units of pi
    let slop = 1e-9;
    let k_lo = libm::ceil((lo - offset) / PI - slop) as i64;
    let k_hi = libm::floor((hi - offset) / PI + slop) as i64;
    for k in k_lo..=k_hi {
        if k % 2 == 0 {
            out.hi = 1.0;
        } else {
            out.lo = -1.0;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_frac;

    #[test]
    fn arithmetic_encloses() {
        let a = Interval::from_rat(&rat_frac(1, 3));
        let b = Interval::from_rat(&rat_frac(2, 3));
        let s = a.add(b);
        assert!(s.contains(1.0));
        let p = a.mul(b);
        assert!(p.contains(2.0 / 9.0));
        assert!(p.width() < 1e-14);
    }

    #[test]
    fn sqrt_and_pow() {
        let x = Interval::point(2.0).sqrt();
        assert!(x.contains(core::f64::consts::SQRT_2));
        let y = Interval::point(3.0).powi(4);
        assert!(y.contains(81.0));
    }

    #[test]
    fn trig_ranges_cover_extrema() {
        let c = Interval::cos_range(-0.1, 0.1);
        assert_eq!(c.hi, 1.0);
        assert!(c.lo <= libm::cos(0.1));
        let s = Interval::sin_range(1.4, 1.8);
        assert_eq!(s.hi, 1.0);
        let full = Interval::cos_range(0.0, 7.0);
        assert_eq!((full.lo, full.hi), (-1.0, 1.0));
    }
}
