//! Hyperbolicity certification and CZDS checks built on the exact Sturm
//! machinery.

use alloc::vec::Vec;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{isolate_real_roots, sturm_count, Endpoint, RatPoly};
use crate::rat::{rat_frac, Rat};

/// Isolating interval `(lo, hi]` for one distinct real root, with its
/// multiplicity and exact sign.
#[derive(Debug, Clone)]
pub struct RootBracket {
    pub lo: Rat,
    pub hi: Rat,
    pub multiplicity: usize,
    /// -1, 0, or 1: the sign of the root itself (exact).
    pub sign: i8,
}

/// Exact account of the real/nonreal zero split of a real polynomial.
#[derive(Debug, Clone)]
pub struct HyperbolicityReport {
    pub degree: usize,
    /// Real roots counted with multiplicity.
    pub real_root_count: usize,
    /// Nonreal roots counted with multiplicity; always even.
    pub z_c: usize,
    pub brackets: Vec<RootBracket>,
    /// True iff every zero is real and strictly negative.
    pub all_negative: bool,
    /// True iff every real root is simple.
    pub all_simple: bool,
}

impl HyperbolicityReport {
    /// Real-rooted with every root `<= 0`.
    pub fn all_real_nonpositive(&self) -> bool {
        self.z_c == 0 && self.brackets.iter().all(|b| b.sign <= 0)
    }

    /// Real-rooted (possibly with multiplicities).
    pub fn is_hyperbolic(&self) -> bool {
        self.z_c == 0
    }
}

fn root_sign(factor: &RatPoly, lo: &Rat, hi: &Rat) -> Result<i8> {
    if hi.is_negative() {
        return Ok(-1);
    }
    if !lo.is_negative() {
        return Ok(1);
    }
    if factor.eval(&Rat::zero()).is_zero() {
        return Ok(0);
    }
    let left = sturm_count(factor, &Endpoint::At(lo.clone()), &Endpoint::At(Rat::zero()))?;
    Ok(if left == 1 { -1 } else { 1 })
}

/// Exact real/nonreal zero account of `p` via square-free decomposition and
/// Sturm isolation.
pub fn hyperbolicity_report(p: &RatPoly) -> Result<HyperbolicityReport> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let degree = p.degree();
    if degree == 0 {
        return Ok(HyperbolicityReport {
            degree: 0,
            real_root_count: 0,
            z_c: 0,
            brackets: Vec::new(),
            all_negative: true,
            all_simple: true,
        });
    }
    let width = rat_frac(1, 1 << 20);
    let mut brackets = Vec::new();
    let mut real_with_mult = 0usize;
    for (factor, mult) in p.square_free_decomposition() {
        for (lo, hi) in isolate_real_roots(&factor, &width)? {
            let sign = root_sign(&factor, &lo, &hi)?;
            real_with_mult += mult;
            brackets.push(RootBracket {
                lo,
                hi,
                multiplicity: mult,
                sign,
            });
        }
    }
    brackets.sort_by(|a, b| a.lo.cmp(&b.lo));
    let z_c = degree - real_with_mult;
    let all_simple = brackets.iter().all(|b| b.multiplicity == 1);
    let all_negative = z_c == 0 && brackets.iter().all(|b| b.sign < 0);
    Ok(HyperbolicityReport {
        degree,
        real_root_count: real_with_mult,
        z_c,
        brackets,
        all_negative,
        all_simple,
    })
}

/// Exact count of nonreal zeros (with multiplicity), skipping the root
/// isolation that `hyperbolicity_report` performs. Much cheaper inside
/// bisection loops that only branch on real-rootedness.
pub fn nonreal_count(p: &RatPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let degree = p.degree();
    if degree == 0 {
        return Ok(0);
    }
    let mut real_with_mult = 0usize;
    for (factor, mult) in p.square_free_decomposition() {
        if factor.degree() == 0 {
            continue;
        }
        real_with_mult += mult * sturm_count(&factor, &Endpoint::NegInf, &Endpoint::PosInf)?;
    }
    Ok(degree - real_with_mult)
}

/// Outcome of a complex-zero-decreasing check for one multiplier sequence
/// against one polynomial.
#[derive(Debug, Clone)]
pub struct CzdsOutcome {
    pub z_c_before: usize,
    pub z_c_after: usize,
    pub satisfied: bool,
}

/// Applies `gamma` termwise to the coefficients of `p` and compares nonreal
/// zero counts. `gamma` must cover every coefficient of `p`.
pub fn czds_check(gamma: &[Rat], p: &RatPoly) -> Result<CzdsOutcome> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if gamma.len() < p.degree() + 1 {
        return Err(Error::BadArgument(alloc::format!(
            "gamma has {} entries, need {}",
            gamma.len(),
            p.degree() + 1
        )));
    }
    let before = hyperbolicity_report(p)?.z_c;
    let mapped = RatPoly::new(
        p.coeffs()
            .iter()
            .zip(gamma.iter())
            .map(|(c, g)| c * g)
            .collect(),
    );
    let after = if mapped.is_zero() {
        0
    } else {
        hyperbolicity_report(&mapped)?.z_c
    };
    Ok(CzdsOutcome {
        z_c_before: before,
        z_c_after: after,
        satisfied: after <= before,
    })
}
