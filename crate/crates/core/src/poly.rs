//! Exact rational polynomials: arithmetic, Sturm chains, square-free
//! decomposition, and root isolation. Everything here is exact; the interval
//! evaluators exist only so callers can pre-filter before exact decisions.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::rat::{rat_i64, Rat};

/// Dense univariate polynomial over the rationals, low degree first.
/// Trailing zeros are stripped; the zero polynomial has an empty coefficient
/// vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

/// One endpoint of a counting interval.
#[derive(Debug, Clone, PartialEq)]
pub enum Endpoint {
    NegInf,
    PosInf,
    At(Rat),
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    pub fn constant(c: Rat) -> Self {
        RatPoly::new(vec![c])
    }

    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        RatPoly::new(v)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        RatPoly::new(coeffs.iter().map(|&c| rat_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; 0 for the zero polynomial by convention of the callers that
    /// check `is_zero` first.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn interval_coeffs(&self) -> Vec<Interval> {
        self.coeffs.iter().map(Interval::from_rat).collect()
    }

    pub fn eval_interval(&self, x: Interval) -> Interval {
        horner_interval(&self.interval_coeffs(), x)
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        RatPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat_i64(i as i64 + 1))
                .collect(),
        )
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, o: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &RatPoly) -> RatPoly {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &Rat) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, o: &RatPoly) -> RatPoly {
        if self.is_zero() || o.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    /// Euclidean division: returns (quotient, remainder).
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        let lead = d.leading();
        if rem.len() <= dd {
            return (RatPoly::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let q = &rem[i] / &lead;
            if q.is_zero() {
                continue;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                let sub = c * &q;
                rem[idx] -= sub;
            }
            quot[i - dd] = q;
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    /// Scales by the positive rational that makes the coefficients a
    /// primitive integer vector. Sign-preserving; keeps Sturm remainders from
    /// blowing up.
    pub fn primitive(&self) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        for v in &ints {
            num_gcd = num_gcd.gcd(v);
        }
        RatPoly::new(
            ints.into_iter()
                .map(|v| Rat::from_integer(v / &num_gcd))
                .collect(),
        )
    }

    /// Monic gcd via Euclid with primitive normalization per step.
    pub fn gcd(&self, o: &RatPoly) -> RatPoly {
        let mut a = self.primitive();
        let mut b = o.primitive();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.primitive();
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading();
        a.scale(&lead.recip())
    }

    /// Square-free part `P / gcd(P, P')`.
    pub fn square_free_part(&self) -> RatPoly {
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.clone();
        }
        self.div_rem(&g).0
    }

    /// Yun's algorithm: returns `(factor, multiplicity)` pairs with square-free
    /// pairwise-coprime factors, product of `factor^multiplicity` equal to
    /// `self` up to a constant.
    pub fn square_free_decomposition(&self) -> Vec<(RatPoly, usize)> {
        let mut out = Vec::new();
        if self.is_zero() || self.degree() == 0 {
            return out;
        }
        let f = self.clone();
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.div_rem(&a).0;
        let mut c = df.div_rem(&a).0;
        let mut i = 1usize;
        loop {
            let d = c.sub(&b.derivative());
            a = b.gcd(&d);
            if a.degree() > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            i += 1;
            if b.degree() == 0 {
                break;
            }
        }
        out
    }

    /// Cauchy root bound: all complex roots have modulus < bound.
    pub fn cauchy_bound(&self) -> Rat {
        let lead = self.leading();
        let mut m = Rat::zero();
        for c in &self.coeffs[..self.coeffs.len().saturating_sub(1)] {
            let r = (c / &lead).abs();
            if r > m {
                m = r;
            }
        }
        m + Rat::one()
    }
}

pub fn horner_interval(coeffs: &[Interval], x: Interval) -> Interval {
    let mut acc = Interval::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add(*c);
    }
    acc
}

/// Sturm chain of the square-free part of `p`.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    pub fn new(p: &RatPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let sf = p.square_free_part().primitive();
        let mut chain = vec![sf.clone()];
        if sf.degree() >= 1 {
            chain.push(sf.derivative().primitive());
            loop {
                let n = chain.len();
                let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(r.neg().primitive());
                if chain.last().unwrap().degree() == 0 {
                    break;
                }
            }
        }
        Ok(SturmChain { chain })
    }

    fn variations_at(&self, x: &Endpoint) -> usize {
        let mut prev: i8 = 0;
        let mut v = 0;
        for p in &self.chain {
            let s: i8 = match x {
                Endpoint::At(r) => {
                    let val = p.eval(r);
                    if val.is_zero() {
                        0
                    } else if val.is_positive() {
                        1
                    } else {
                        -1
                    }
                }
                Endpoint::PosInf => {
                    if p.leading().is_positive() {
                        1
                    } else {
                        -1
                    }
                }
                Endpoint::NegInf => {
                    let s = if p.leading().is_positive() { 1 } else { -1 };
                    if p.degree() % 2 == 0 {
                        s
                    } else {
                        -s
                    }
                }
            };
            if s == 0 {
                continue;
            }
            if prev != 0 && s != prev {
                v += 1;
            }
            prev = s;
        }
        v
    }

    /// Number of distinct real roots in `(lo, hi]` (open at `lo`, closed at
    /// `hi`; infinite endpoints allowed).
    pub fn count(&self, lo: &Endpoint, hi: &Endpoint) -> usize {
        let a = self.variations_at(lo);
        let b = self.variations_at(hi);
        a.saturating_sub(b)
    }
}

/// Distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &RatPoly, lo: &Endpoint, hi: &Endpoint) -> Result<usize> {
    Ok(SturmChain::new(p)?.count(lo, hi))
}

/// Isolating intervals `(lo, hi]` for all distinct real roots of the
/// square-free part of `p`, pairwise disjoint, each containing exactly one
/// distinct root, refined until `hi - lo <= max_width`.
pub fn isolate_real_roots(p: &RatPoly, max_width: &Rat) -> Result<Vec<(Rat, Rat)>> {
    let chain = SturmChain::new(p)?;
    let bound = p.square_free_part().cauchy_bound();
    let lo = -bound.clone();
    let hi = bound;
    let total = chain.count(&Endpoint::At(lo.clone()), &Endpoint::At(hi.clone()));
    let mut stack = vec![(lo, hi, total)];
    let mut out = Vec::new();
    while let Some((lo, hi, n)) = stack.pop() {
        if n == 0 {
            continue;
        }
        if n == 1 && (&hi - &lo) <= *max_width {
            out.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / rat_i64(2);
        let left = chain.count(&Endpoint::At(lo.clone()), &Endpoint::At(mid.clone()));
        stack.push((lo, mid.clone(), left));
        stack.push((mid, hi, n - left));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_frac;

    fn poly(c: &[i64]) -> RatPoly {
        RatPoly::from_i64(c)
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = poly(&[2, -3, 1, 5]);
        let b = poly(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
    }

    #[test]
    fn sturm_counts_quadratics() {
        // z^2 + 1: no real roots
        let p = poly(&[1, 0, 1]);
        assert_eq!(
            sturm_count(&p, &Endpoint::NegInf, &Endpoint::PosInf).unwrap(),
            0
        );
        // (z+1)(z+2)(z+3) on (-4, 0]
        let p = poly(&[6, 11, 6, 1]);
        assert_eq!(
            sturm_count(&p, &Endpoint::At(rat_i64(-4)), &Endpoint::At(rat_i64(0))).unwrap(),
            3
        );
        // 1 - z + z^2/4 = (1 - z/2)^2 on (0, 4]: one distinct root
        let p = RatPoly::new(vec![rat_i64(1), rat_i64(-1), rat_frac(1, 4)]);
        assert_eq!(
            sturm_count(&p, &Endpoint::At(rat_i64(0)), &Endpoint::At(rat_i64(4))).unwrap(),
            1
        );
    }

    #[test]
    fn half_open_endpoint_convention() {
        // root exactly at an endpoint: (lo, hi] includes hi, excludes lo
        let p = poly(&[0, 1]); // z
        assert_eq!(
            sturm_count(&p, &Endpoint::At(rat_i64(0)), &Endpoint::At(rat_i64(1))).unwrap(),
            0
        );
        assert_eq!(
            sturm_count(&p, &Endpoint::At(rat_i64(-1)), &Endpoint::At(rat_i64(0))).unwrap(),
            1
        );
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(sturm_count(&RatPoly::zero(), &Endpoint::NegInf, &Endpoint::PosInf).is_err());
    }

    #[test]
    fn yun_decomposition() {
        // (z+1)^2 (z-2)^3
        let f = poly(&[1, 1]);
        let g = poly(&[-2, 1]);
        let p = f.mul(&f).mul(&g).mul(&g).mul(&g);
        let dec = p.square_free_decomposition();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0].1, 2);
        assert_eq!(dec[1].1, 3);
        assert_eq!(dec[0].0.degree(), 1);
        assert_eq!(dec[1].0.degree(), 1);
    }

    #[test]
    fn isolation_separates_roots() {
        // roots at 1, 2, 3
        let p = poly(&[-6, 11, -6, 1]);
        let iv = isolate_real_roots(&p, &rat_frac(1, 64)).unwrap();
        assert_eq!(iv.len(), 3);
        for w in iv.windows(2) {
            assert!(w[0].1 <= w[1].0);
        }
        for (lo, hi) in &iv {
            assert_eq!(
                sturm_count(&p, &Endpoint::At(lo.clone()), &Endpoint::At(hi.clone())).unwrap(),
                1
            );
        }
    }
}
