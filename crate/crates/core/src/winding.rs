//! Argument-principle winding numbers on circles, with interval-certified
//! nonvanishing. Used as an independent zero-counting oracle for the Rouché
//! step and for cross-checking the exact engine.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::poly::RatPoly;
use crate::rat::Rat;

/// Axis-aligned rectangle enclosure of a complex value.
#[derive(Debug, Clone, Copy)]
pub struct ComplexBox {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexBox {
    pub fn new(re: Interval, im: Interval) -> Self {
        ComplexBox { re, im }
    }

    pub fn point(re: f64, im: f64) -> Self {
        ComplexBox::new(Interval::point(re), Interval::point(im))
    }

    pub fn add(self, o: Self) -> Self {
        ComplexBox::new(self.re.add(o.re), self.im.add(o.im))
    }

    pub fn mul(self, o: Self) -> Self {
        ComplexBox::new(
            self.re.mul(o.re).sub(self.im.mul(o.im)),
            self.re.mul(o.im).add(self.im.mul(o.re)),
        )
    }

    pub fn conj(self) -> Self {
        ComplexBox::new(self.re, self.im.neg())
    }

    fn sq(x: Interval) -> Interval {
        let m = x.abs();
        m.mul(m)
    }

    /// Enclosure of `|z|^2`.
    pub fn abs_sq(self) -> Interval {
        Self::sq(self.re).add(Self::sq(self.im))
    }

    pub fn contains_zero(self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }
}

/// Horner evaluation of a complex series with interval real coefficients.
pub fn horner_complex(coeffs: &[Interval], z: ComplexBox) -> ComplexBox {
    let mut acc = ComplexBox::point(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc.mul(z).add(ComplexBox::new(*c, Interval::zero()));
    }
    acc
}

/// A complex function that can be evaluated over rectangles with certified
/// enclosures (truncation error included by the implementor).
pub trait ComplexMap {
    fn eval_box(&self, z: ComplexBox) -> ComplexBox;
}

/// Polynomial with exact rational coefficients as a `ComplexMap`.
pub struct PolyMap {
    coeffs: Vec<Interval>,
}

impl PolyMap {
    pub fn new(p: &RatPoly) -> Self {
        PolyMap {
            coeffs: p.interval_coeffs(),
        }
    }
}

impl ComplexMap for PolyMap {
    fn eval_box(&self, z: ComplexBox) -> ComplexBox {
        horner_complex(&self.coeffs, z)
    }
}

/// Truncated power series plus a rigid tail bound: the enclosure is the
/// truncation's value fattened by `±tail` in both components. The caller is
/// responsible for `tail` bounding the dropped terms on the circle in use.
pub struct TruncatedSeriesMap {
    pub coeffs: Vec<Interval>,
    pub tail: f64,
}

impl ComplexMap for TruncatedSeriesMap {
    fn eval_box(&self, z: ComplexBox) -> ComplexBox {
        let v = horner_complex(&self.coeffs, z);
        let pad = Interval::new(-self.tail, self.tail);
        ComplexBox::new(v.re.add(pad), v.im.add(pad))
    }
}

/// Enclosure of the argument of a rectangle with `re > 0`, in (-pi/2, pi/2).
fn arg_range(w: ComplexBox) -> Interval {
    debug_assert!(w.re.is_positive());
    let lo = if w.im.lo >= 0.0 {
        libm::atan2(w.im.lo, w.re.hi)
    } else {
        libm::atan2(w.im.lo, w.re.lo)
    };
    let hi = if w.im.hi >= 0.0 {
        libm::atan2(w.im.hi, w.re.lo)
    } else {
        libm::atan2(w.im.hi, w.re.hi)
    };
    // a few ulps for atan2 itself
    Interval::new((lo - 1e-15).max(-PI), (hi + 1e-15).min(PI))
}

fn circle_point(radius: Interval, theta: f64) -> ComplexBox {
    let c = Interval::cos_range(theta, theta);
    let s = Interval::sin_range(theta, theta);
    ComplexBox::new(radius.mul(c), radius.mul(s))
}

fn arc_box(radius: Interval, t0: f64, t1: f64) -> ComplexBox {
    ComplexBox::new(
        radius.mul(Interval::cos_range(t0, t1)),
        radius.mul(Interval::sin_range(t0, t1)),
    )
}

const START_ARCS: usize = 64;
const MAX_ARCS: usize = 1 << 20;

/// Winding number of `f` around 0 along the circle `|z| = radius`,
/// traversed counterclockwise.
///
/// The circle is covered by arcs whose image boxes must exclude zero
/// (certifying nonvanishing); the arc count doubles until every consecutive
/// argument increment is certified `< pi/2` and the total winds up within a
/// quarter turn of a multiple of `2π`. Fails with the offending arc if the
/// cap of 2^20 arcs is reached.
pub fn winding_number(f: &dyn ComplexMap, radius: &Rat) -> Result<i64> {
    let r = Interval::from_rat(radius);
    let mut n = START_ARCS;
    let mut last_bad = (0.0, 2.0 * PI);
    while n <= MAX_ARCS {
        match try_winding(f, r, n) {
            Ok(w) => return Ok(w),
            Err(arc) => {
                last_bad = arc;
                n *= 2;
            }
        }
    }
    Err(Error::InconclusiveArc {
        theta_lo: last_bad.0,
        theta_hi: last_bad.1,
    })
}

fn try_winding(
    f: &dyn ComplexMap,
    radius: Interval,
    n: usize,
) -> core::result::Result<i64, (f64, f64)> {
    let step = 2.0 * PI / n as f64;
    // certify nonvanishing on the whole circle
    for i in 0..n {
        let t0 = i as f64 * step;
        let t1 = t0 + step;
        if f.eval_box(arc_box(radius, t0, t1)).contains_zero() {
            return Err((t0, t1));
        }
    }
    let points: Vec<ComplexBox> = (0..=n)
        .map(|i| f.eval_box(circle_point(radius, if i == n { 0.0 } else { i as f64 * step })))
        .collect();
    let mut total = Interval::zero();
    for i in 0..n {
        let p = points[i + 1].mul(points[i].conj());
        if !p.re.is_positive() {
            // increment not certified < pi/2; refine
            return Err((i as f64 * step, (i + 1) as f64 * step));
        }
        total = total.add(arg_range(p));
    }
    let turns = total.mid() / (2.0 * PI);
    let w = libm::round(turns) as i64;
    let target = 2.0 * PI * w as f64;
    if total.lo > target - PI / 2.0 && total.hi < target + PI / 2.0 {
        Ok(w)
    } else {
        Err((0.0, step))
    }
}
