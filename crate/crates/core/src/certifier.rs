//! The non-membership pipeline for entire functions with increasing second
//! quotients and limit below `q_∞`, plus Hutchinson's criterion and the
//! top-level classifier.
//!
//! The pipeline mirrors the proof it certifies. Work with the alternating
//! normalization `φ(x) = Σ (−1)^k b_k x^k` (where `b_k` are the normalized
//! coefficients, `b_0 = b_1 = 1`), so that zeros of `f` on the negative axis
//! become zeros of `φ` on the positive axis:
//!
//! 1. `q_2 ≥ 3` is necessary for membership (floor lemma) — quantified by an
//!    exact residual;
//! 2. `φ > 0` on `[0, q_2]` (segment positivity via theta-section
//!    domination);
//! 3. `|S_4| ≥ q_2/(q_3² q_4)` on the circle `|z| = q_2` while
//!    `|R_5| ≤ q_2/(q_3³ q_4³ − q_3²)` there, so `φ = S_4 + R_5` has the same
//!    number of zeros inside the disk as `S_4` (Rouché);
//! 4. a quartic apolar to `S_4` with all roots in the closed disk forces at
//!    least one zero of `S_4` — hence of `φ` — inside it (Grace).
//!
//! A zero of `φ` of modulus < `q_2` that cannot be real (coefficient signs
//! put any real zero in `(0, q_2)`, where positivity holds) must be nonreal:
//! `f` is not in the Laguerre-Pólya class.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::engine::{hyperbolicity_report, nonreal_count};
use crate::error::{Error, Result};
use crate::poly::{sturm_count, Endpoint, RatPoly};
use crate::rat::{rat_frac, rat_i64, rat_powi, Rat};
use crate::series::{quotients, CoefficientSeries, Monotonicity, QuotientRule};
use crate::theta::{alternating_section, scaled_section_is_real_rooted, QinfBracket};
use crate::winding::{winding_number, PolyMap};

/// Verdict of a single lemma-level verifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    NotInLp,
    Inconclusive,
}

/// Record of the `q_2 ≥ 3` floor lemma.
#[derive(Debug, Clone)]
pub struct Q2FloorRecord {
    /// `a_1² a_2 / a_0³ + 3 a_1 a_3 / a_0² − 4 a_2² / a_0²`: nonnegative
    /// whenever `f ∈ L-P` with increasing quotients.
    pub residual: Rat,
    /// The same test in quotient form: `q_3 (q_2 − 4) + 3`.
    pub reduced: Rat,
    /// The weaker power-sum necessary condition `q_2 ≥ 2`.
    pub q2_at_least_2: bool,
    pub verdict: Verdict,
}

/// Floor lemma on the first four coefficients: under the increasing-quotient
/// hypothesis, a negative residual already disproves membership.
pub fn lemma_q2_floor(a0: &Rat, a1: &Rat, a2: &Rat, a3: &Rat) -> Result<Q2FloorRecord> {
    for (i, a) in [a0, a1, a2, a3].iter().enumerate() {
        if !a.is_positive() {
            return Err(Error::NonPositive { index: i });
        }
    }
    let residual = a1 * a1 * a2 / (a0 * a0 * a0) + rat_i64(3) * a1 * a3 / (a0 * a0)
        - rat_i64(4) * a2 * a2 / (a0 * a0);
    let q2 = a1 * a1 / (a0 * a2);
    let q3 = a2 * a2 / (a1 * a3);
    let reduced = &q3 * (&q2 - rat_i64(4)) + rat_i64(3);
    // residual · q_2² q_3 / (a_2 a_1²/a_0³...) — the two agree in sign
    debug_assert_eq!(
        residual.is_negative(),
        reduced.is_negative(),
        "floor residual and reduced form disagree in sign"
    );
    Ok(Q2FloorRecord {
        verdict: if residual.is_negative() {
            Verdict::NotInLp
        } else {
            Verdict::Inconclusive
        },
        q2_at_least_2: q2 >= rat_i64(2),
        residual,
        reduced,
    })
}

/// Exact certification that a polynomial is ≥ 0 on `[lo, hi]`: no
/// odd-multiplicity roots inside, nonnegative endpoint values, and a
/// positive sample (even-multiplicity zeros are allowed to touch).
pub fn poly_nonneg_on(p: &RatPoly, lo: &Rat, hi: &Rat) -> Result<bool> {
    if p.is_zero() {
        return Ok(true);
    }
    if p.eval(lo).is_negative() || p.eval(hi).is_negative() {
        return Ok(false);
    }
    let mut odd_part = RatPoly::constant(Rat::one());
    for (factor, mult) in p.square_free_decomposition() {
        if mult % 2 == 1 && factor.degree() > 0 {
            odd_part = odd_part.mul(&factor);
        }
    }
    if odd_part.degree() > 0 {
        let mut inside = sturm_count(
            &odd_part,
            &Endpoint::At(lo.clone()),
            &Endpoint::At(hi.clone()),
        )?;
        if inside > 0 && odd_part.eval(hi).is_zero() {
            inside -= 1; // a sign-preserving zero exactly at the endpoint
        }
        if inside > 0 {
            return Ok(false);
        }
    }
    // constant sign apart from touching zeros; one nonzero sample decides
    let n = p.degree() + 2;
    for j in 1..=n {
        let x = lo + (hi - lo) * rat_frac(j as i64, (n + 1) as i64);
        let v = p.eval(&x);
        if !v.is_zero() {
            return Ok(v.is_positive());
        }
    }
    Ok(false)
}

/// One certified piece of the segment-positivity cover.
#[derive(Debug, Clone)]
pub struct TraceEntry {
    pub lo: Rat,
    pub hi: Rat,
    pub method: &'static str,
}

/// Witness that `φ > 0` on `[0, q_2]`.
#[derive(Debug, Clone)]
pub struct PositivityWitness {
    /// Section index: `S_{2m+1}(·, g_√c)` is not real-rooted for this `m`.
    pub m: usize,
    pub q2: Rat,
    pub trace: Vec<TraceEntry>,
}

const M_CAP: usize = 1 << 12;

/// Smallest `m` (doubling search) with the odd theta section at `a² = c`
/// not real-rooted; exists whenever `c < q_∞` since `c_{2m+1} ↑ q_∞`.
fn find_section_index(c: &Rat) -> Result<usize> {
    let mut m = 1usize;
    while m <= M_CAP {
        if !scaled_section_is_real_rooted(c, 2 * m + 1)? {
            return Ok(m);
        }
        m *= 2;
    }
    Err(Error::Hypothesis(format!(
        "no odd theta section up to degree {} leaves the Laguerre-Polya class at a^2 = limit; \
         the limit is likely not below q_inf",
        2 * M_CAP + 1
    )))
}

/// The truncation `S_n(x, φ) = Σ_{k≤n} (−1)^k b_k x^k` as an exact polynomial.
fn phi_section(normalized: &CoefficientSeries, n: usize) -> Result<RatPoly> {
    let mat = normalized.materialize_to(n)?;
    let coeffs = mat
        .coeffs()
        .iter()
        .take(n + 1)
        .enumerate()
        .map(|(k, b)| if k % 2 == 1 { -b } else { b.clone() })
        .collect();
    Ok(RatPoly::new(coeffs))
}

/// Certifies `φ(x) > 0` for all `x ∈ [0, q_2]`, given increasing quotients
/// with `q_2 ≥ 2` and certified limit `c < q_∞`.
///
/// Cover: `[0, 1]` by term domination; `(1, q_2)` by the polynomial
/// domination `S_{2m+1}(x, φ) ≥ A_{2m+1}(x; c) > 0` plus a positive
/// remainder; `x = q_2` by an exact partial sum with alternating tail bound.
pub fn positivity_on_segment(
    series: &CoefficientSeries,
    limit: &Rat,
    qinf: &QinfBracket,
) -> Result<PositivityWitness> {
    if *limit >= qinf.lo {
        return Err(Error::Hypothesis(String::from(
            "limit of quotients is not certified below q_inf",
        )));
    }
    let m = find_section_index(limit)?;
    positivity_with_m(series, limit, m)
}

/// Re-verifies the positivity cover for an already-known section index `m`
/// (used by certificate verification, which repeats checks but not
/// searches). The non-real-rootedness of the degree `2m+1` theta section at
/// `a² = limit` itself proves `limit < c_{2m+1} < q_∞`, so no external
/// `q_∞` bracket is needed here.
pub fn positivity_with_m(
    series: &CoefficientSeries,
    limit: &Rat,
    m: usize,
) -> Result<PositivityWitness> {
    let normalized = series.normalize();
    let prof = quotients(&normalized.materialize_to(8)?, 8)?;
    let q2 = prof.q_n(2).clone();
    if q2 < rat_i64(2) {
        return Err(Error::Hypothesis(String::from(
            "segment positivity requires q_2 >= 2",
        )));
    }
    if prof.monotone == Monotonicity::Decreasing && !prof.q.iter().all(|q| q == &q2) {
        return Err(Error::Hypothesis(String::from(
            "segment positivity requires increasing quotients",
        )));
    }
    if scaled_section_is_real_rooted(limit, 2 * m + 1)? {
        return Err(Error::Hypothesis(format!(
            "the degree {} theta section at a^2 = limit is real-rooted; \
             m does not witness limit < c_{}",
            2 * m + 1,
            2 * m + 1
        )));
    }
    let mut trace = Vec::new();

    // [0, 1]: 1 ≥ x > x²/q_2 > … — strictly decreasing terms pair up
    let p3 = prof.p_n(3);
    if !(*p3 > Rat::one()) {
        return Err(Error::Hypothesis(String::from(
            "term domination on [0, 1] needs p_3 > 1",
        )));
    }
    trace.push(TraceEntry {
        lo: Rat::zero(),
        hi: Rat::one(),
        method: "term-domination",
    });

    // (1, q_2): theta-section domination
    let n = 2 * m + 1;
    let a_sec = alternating_section(limit, n);
    // A_{2m+1}(·; c) > 0 on [1, c]: positive at 1, no zeros in (1, c]
    let pos_at_one = a_sec.eval(&Rat::one()).is_positive();
    let zeros = sturm_count(
        &a_sec,
        &Endpoint::At(Rat::one()),
        &Endpoint::At(limit.clone()),
    )?;
    if !pos_at_one || zeros != 0 {
        return Err(Error::Hypothesis(String::from(
            "theta-section positivity failed on (1, limit) despite non-membership",
        )));
    }
    // S_{2m+1}(x, φ) − A_{2m+1}(x; c) ≥ 0 on [1, q_2]
    let s_phi = phi_section(&normalized, n)?;
    let dom = s_phi.sub(&a_sec);
    if !poly_nonneg_on(&dom, &Rat::one(), &q2)? {
        return Err(Error::Hypothesis(String::from(
            "section domination by the theta section failed on [1, q_2]",
        )));
    }
    // positive remainder: terms of φ beyond degree 2m+1 decrease at x ≤ q_2
    let tail_prof = quotients(&normalized.materialize_to(n + 3)?, n + 3)?;
    if !(*tail_prof.p_n(n + 2) > q2) {
        return Err(Error::Hypothesis(String::from(
            "remainder positivity needs p_{2m+3} > q_2",
        )));
    }
    trace.push(TraceEntry {
        lo: Rat::one(),
        hi: q2.clone(),
        method: "theta-section-domination",
    });

    // x = q_2: exact partial sum, alternating tail bounded by the first
    // omitted term (valid in the decreasing-term regime k ≥ 2m+3)
    let mut k_top = n + 3;
    loop {
        let mat = normalized.materialize_to(k_top + 1)?;
        let mut partial = Rat::zero();
        for (k, b) in mat.coeffs().iter().take(k_top + 1).enumerate() {
            let t = b * rat_powi(&q2, k as i64);
            partial += if k % 2 == 1 { -t } else { t };
        }
        let next = mat.coeffs()[k_top + 1].clone() * rat_powi(&q2, (k_top + 1) as i64);
        if &partial - &next > Rat::zero() {
            break;
        }
        k_top += 4;
        if k_top > n + 40 {
            return Err(Error::Hypothesis(String::from(
                "endpoint value phi(q_2) could not be certified positive",
            )));
        }
    }
    trace.push(TraceEntry {
        lo: q2.clone(),
        hi: q2.clone(),
        method: "exact-partial-sum",
    });

    Ok(PositivityWitness { m, q2, trace })
}

// ---------------------------------------------------------------------------
// Circle bounds for S_4 and R_5 on |z| = q_2.
// ---------------------------------------------------------------------------

/// `S_4(z) = 1 − z + z²/q_2 − z³/(q_2² q_3) + z⁴/(q_2³ q_3² q_4)` — the
/// degree-4 truncation of the normalized alternating series.
pub fn s4_poly(q2: &Rat, q3: &Rat, q4: &Rat) -> RatPoly {
    RatPoly::new(alloc::vec![
        Rat::one(),
        -Rat::one(),
        q2.recip(),
        -(q2 * q2 * q3).recip(),
        (q2 * q2 * q2 * q3 * q3 * q4).recip(),
    ])
}

/// Chebyshev polynomials of the first kind `T_0..T_n`.
fn chebyshev_t(n: usize) -> Vec<RatPoly> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(RatPoly::from_i64(&[1]));
    if n >= 1 {
        out.push(RatPoly::from_i64(&[0, 1]));
    }
    for k in 2..=n {
        let two_x: RatPoly = RatPoly::from_i64(&[0, 2]);
        let next = two_x.mul(&out[k - 1]).sub(&out[k - 2]);
        out.push(next);
    }
    out
}

/// `|P(r e^{iθ})|²` as an exact polynomial in `t = cos θ`, via
/// `Σ_{j,k} p_j p_k r^{j+k} cos((j−k)θ)` and `cos(mθ) = T_m(t)`.
fn modulus_sq_poly(p: &RatPoly, r: &Rat) -> RatPoly {
    let d = p.degree();
    let cheb = chebyshev_t(d);
    let mut out = RatPoly::zero();
    for j in 0..=d {
        for k in 0..=d {
            let c = p.coeff(j) * p.coeff(k) * rat_powi(r, (j + k) as i64);
            out = out.add(&cheb[j.abs_diff(k)].scale(&c));
        }
    }
    out
}

fn check_q_range(q2: &Rat, q3: &Rat, q4: &Rat) -> Result<()> {
    if !(*q2 >= rat_i64(3) && *q2 < rat_i64(4) && q3 >= q2 && q4 >= q3) {
        return Err(Error::BadArgument(String::from(
            "circle bounds require 3 <= q2 < 4 and q2 <= q3 <= q4",
        )));
    }
    Ok(())
}

/// Report of the circle-minimum lemma for `S_4`.
#[derive(Debug, Clone)]
pub struct CircleMinReport {
    /// Analytic lower bound `q_2/(q_3² q_4)` for `|S_4|` on `|z| = q_2`.
    pub bound: Rat,
    /// Exact proof that `|S_4|² ≥ bound²` holds on the whole circle.
    pub certified: bool,
    /// Minimum of `|S_4|²` over the sample grid (≥ bound², exactly).
    pub sampled_min_sq: Rat,
    pub samples: usize,
    pub sampled_ok: bool,
}

const THETA_SAMPLES: usize = 64;

/// Certified minimum of `|S_4|` on the circle `|z| = q_2`: the analytic
/// bound, a whole-circle exact proof, and a sampled cross-check.
pub fn s4_circle_min(q2: &Rat, q3: &Rat, q4: &Rat) -> Result<CircleMinReport> {
    check_q_range(q2, q3, q4)?;
    let bound = q2 / (q3 * q3 * q4);
    let bound_sq = &bound * &bound;
    let m = modulus_sq_poly(&s4_poly(q2, q3, q4), q2);
    let d = m.sub(&RatPoly::constant(bound_sq.clone()));
    let certified = poly_nonneg_on(&d, &rat_i64(-1), &rat_i64(1))?;
    let mut sampled_min_sq: Option<Rat> = None;
    for i in 0..=THETA_SAMPLES {
        let t = rat_i64(-1) + rat_frac(2 * i as i64, THETA_SAMPLES as i64);
        let v = m.eval(&t);
        if sampled_min_sq.as_ref().is_none_or(|cur| v < *cur) {
            sampled_min_sq = Some(v);
        }
    }
    let sampled_min_sq = sampled_min_sq.expect("nonempty grid");
    let sampled_ok = sampled_min_sq >= bound_sq;
    Ok(CircleMinReport {
        bound,
        certified,
        sampled_min_sq,
        samples: THETA_SAMPLES + 1,
        sampled_ok,
    })
}

/// Report of the tail-bound lemma for `R_5`.
#[derive(Debug, Clone)]
pub struct TailBoundReport {
    /// Analytic upper bound `q_2/(q_3³ q_4³ − q_3²)` for `|R_5|` on the circle.
    pub bound: Rat,
    pub samples: usize,
    /// Every sampled enclosure of `|R_5|` stayed below the bound.
    pub sampled_ok: bool,
    /// Degree of the truncation used for sampling.
    pub truncation: usize,
}

/// Verifies the tail bound against the extremal admissible series: among all
/// increasing quotient sequences extending `(q_2, q_3, q_4)`, coefficients
/// are maximized by `q_k = q_4` for `k ≥ 5`, so its `|R_5|` dominates.
pub fn tail_bound_r5(q2: &Rat, q3: &Rat, q4: &Rat) -> Result<TailBoundReport> {
    check_q_range(q2, q3, q4)?;
    let denom = q3 * q3 * q3 * q4 * q4 * q4 - q3 * q3;
    if !denom.is_positive() {
        return Err(Error::BadArgument(String::from(
            "tail bound requires q3^3 q4^3 > q3^2",
        )));
    }
    let bound = q2 / denom;

    // extremal coefficients b_k (k ≥ 5) and the terms c_k = b_k q_2^k
    let mut terms = Vec::new(); // c_k for k = 5..
    let mut b = (q2 * q2 * q2 * q3 * q3 * q4).recip(); // b_4
    let mut pk = q2 * q3 * q4; // p_4 = q2·q3·q4 (product of q's up to 4)
    let mut truncation = 4usize;
    let mut c = &b * rat_powi(q2, 4); // term at k = 4 (not part of R_5)
    loop {
        truncation += 1;
        pk *= q4; // p_k = p_{k−1} · q_k with q_k = q_4
        b = &b / &pk;
        c = &c * q2 / &pk;
        terms.push(c.clone());
        // stop once the geometric tail is far below the bound
        let ratio = q2 / &pk; // next-term ratio bound (p increasing)
        if ratio < rat_frac(1, 2) && &c * rat_i64(4) < &bound / rat_i64(1000) || truncation >= 80 {
            break;
        }
    }
    let ratio = q2 / &pk;
    let geo_tail = &c * &ratio / (Rat::one() - &ratio);
    // threshold for the truncated part: |R_trunc| ≤ bound − geo_tail
    let allowed = &bound - &geo_tail;
    if !allowed.is_positive() {
        return Err(Error::PrecisionCap(String::from(
            "tail truncation could not get below the analytic bound",
        )));
    }
    let allowed_sq = &allowed * &allowed;

    // |R_trunc(q2 e^{iθ})|² = C(t)² + (1−t²) S(t)², C from T_k, S from U_{k−1}
    let k_hi = truncation;
    let cheb = chebyshev_t(k_hi);
    let mut cheb_u = Vec::with_capacity(k_hi); // U_0..U_{k_hi−1}
    cheb_u.push(RatPoly::from_i64(&[1]));
    cheb_u.push(RatPoly::from_i64(&[0, 2]));
    for k in 2..k_hi {
        let two_x: RatPoly = RatPoly::from_i64(&[0, 2]);
        let next = two_x.mul(&cheb_u[k - 1]).sub(&cheb_u[k - 2]);
        cheb_u.push(next);
    }
    let mut cpoly = RatPoly::zero();
    let mut spoly = RatPoly::zero();
    for (idx, ck) in terms.iter().enumerate() {
        let k = 5 + idx;
        let signed = if k % 2 == 1 { -ck.clone() } else { ck.clone() };
        cpoly = cpoly.add(&cheb[k].scale(&signed));
        spoly = spoly.add(&cheb_u[k - 1].scale(&signed));
    }
    let one_minus_t2 = RatPoly::from_i64(&[1, 0, -1]);
    let mod_sq = cpoly.mul(&cpoly).add(&spoly.mul(&spoly).mul(&one_minus_t2));
    let mut sampled_ok = true;
    for i in 0..=THETA_SAMPLES {
        let t = rat_i64(-1) + rat_frac(2 * i as i64, THETA_SAMPLES as i64);
        if mod_sq.eval(&t) > allowed_sq {
            sampled_ok = false;
            break;
        }
    }
    Ok(TailBoundReport {
        bound,
        samples: THETA_SAMPLES + 1,
        sampled_ok,
        truncation,
    })
}

/// The Rouché margin: circle minimum of `|S_4|` minus tail bound of `|R_5|`.
pub fn rouche_margin(q2: &Rat, q3: &Rat, q4: &Rat) -> Result<Rat> {
    check_q_range(q2, q3, q4)?;
    let denom = q3 * q3 * q3 * q4 * q4 * q4 - q3 * q3;
    Ok(q2 / (q3 * q3 * q4) - q2 / denom)
}

/// The Grace apolarity witness.
#[derive(Debug, Clone)]
pub struct GraceWitness {
    /// `Q(z) = z² (z² + 2(q_2 − 6) z − 3 q_2 (q_2 − 4))`, apolar to `S_4`.
    pub q_poly: RatPoly,
    /// Roots `{0, 0, q_2, −3(q_2 − 4)}` of `Q`.
    pub roots: Vec<Rat>,
    /// `Σ (−1)^k a_k b_{4−k} / C(4,k)` — exactly zero by construction.
    pub apolarity_residual: Rat,
    /// All roots of `Q` lie in the closed disk `|z| ≤ q_2`.
    pub roots_in_disk: bool,
    /// Zeros of `S_4` in the open disk, by the argument principle.
    pub inside_count: i64,
}

/// Builds the quartic apolar to `S_4` whose roots all lie in the closed disk
/// `|z| ≤ q_2`; by Grace's theorem `S_4` then has a zero in that disk.
pub fn grace_apolar_witness(q2: &Rat, q3: &Rat, q4: &Rat) -> Result<GraceWitness> {
    if *q2 < rat_i64(3) {
        return Err(Error::BadArgument(String::from(
            "the Grace witness needs q2 >= 3 (otherwise -3(q2-4) escapes the disk)",
        )));
    }
    let s4 = s4_poly(q2, q3, q4);
    let q_poly = RatPoly::new(alloc::vec![
        Rat::zero(),
        Rat::zero(),
        rat_i64(-3) * q2 * (q2 - rat_i64(4)),
        rat_i64(2) * (q2 - rat_i64(6)),
        Rat::one(),
    ]);
    let roots = alloc::vec![
        Rat::zero(),
        Rat::zero(),
        q2.clone(),
        rat_i64(-3) * (q2 - rat_i64(4)),
    ];
    let binom = [1i64, 4, 6, 4, 1];
    let mut residual = Rat::zero();
    for k in 0..=4usize {
        let term = s4.coeff(k) * q_poly.coeff(4 - k) / rat_i64(binom[k]);
        residual += if k % 2 == 1 { -term } else { term };
    }
    let roots_in_disk = roots.iter().all(|r| r.abs() <= *q2);
    let inside_count = winding_number(&PolyMap::new(&s4), q2)?;
    Ok(GraceWitness {
        q_poly,
        roots,
        apolarity_residual: residual,
        roots_in_disk,
        inside_count,
    })
}

// ---------------------------------------------------------------------------
// Certificate assembly.
// ---------------------------------------------------------------------------

/// The evidence bundle whose joint validity implies `f ∉ L-P`.
#[derive(Debug, Clone)]
pub struct NonMembershipCertificate {
    pub q2: Rat,
    pub q3: Rat,
    pub q4: Rat,
    /// Limit of the quotients, from the generating rule.
    pub limit: Rat,
    /// The `q_∞` bracket the limit was certified against.
    pub qinf_lo: Rat,
    pub qinf_hi: Rat,
    pub q2_floor: Q2FloorRecord,
    /// Present on the full pipeline path (q_2 ≥ 3); absent when the floor
    /// lemma alone already concluded.
    pub positivity: Option<PositivityWitness>,
    pub circle: Option<CircleMinReport>,
    pub tail: Option<TailBoundReport>,
    pub rouche_margin: Option<Rat>,
    pub grace: Option<GraceWitness>,
}

fn rule_limit_and_monotonicity(rule: &QuotientRule) -> Result<(Rat, bool)> {
    match rule {
        QuotientRule::Constant { q } => Ok((q.clone(), true)),
        QuotientRule::LimitIncreasing { c, d } => {
            if d.is_negative() {
                Ok((c.clone(), false))
            } else {
                Ok((c.clone(), true))
            }
        }
        QuotientRule::List { .. } => Err(Error::Hypothesis(String::from(
            "a finite quotient list carries no limit; the hypothesis lim q_n = c is not checkable",
        ))),
    }
}

/// Runs the full non-membership pipeline. Fails with a named hypothesis
/// (mapped to INCONCLUSIVE by callers) when any gate is violated.
pub fn certify_not_lp(
    series: &CoefficientSeries,
    qinf: &QinfBracket,
) -> Result<NonMembershipCertificate> {
    let rule = series.generator().ok_or_else(|| {
        Error::Hypothesis(String::from(
            "finite coefficient data carries no limit; provide a quotient rule",
        ))
    })?;
    let (limit, increasing) = rule_limit_and_monotonicity(rule)?;
    if !increasing {
        return Err(Error::Hypothesis(String::from(
            "quotients are decreasing; the non-membership pipeline needs them increasing",
        )));
    }
    let normalized = series.normalize();
    let mat = normalized.materialize_to(5)?;
    let prof = quotients(&mat, 5)?;
    let (q2, q3, q4) = (
        prof.q_n(2).clone(),
        prof.q_n(3).clone(),
        prof.q_n(4).clone(),
    );
    let b = mat.coeffs();
    let q2_floor = lemma_q2_floor(&b[0], &b[1], &b[2], &b[3])?;
    if q2 < rat_i64(3) {
        return match q2_floor.verdict {
            Verdict::NotInLp => Ok(NonMembershipCertificate {
                q2,
                q3,
                q4,
                limit,
                qinf_lo: qinf.lo.clone(),
                qinf_hi: qinf.hi.clone(),
                q2_floor,
                positivity: None,
                circle: None,
                tail: None,
                rouche_margin: None,
                grace: None,
            }),
            Verdict::Inconclusive => Err(Error::Hypothesis(String::from(
                "q_2 < 3 but the floor residual is nonnegative",
            ))),
        };
    }
    if limit >= qinf.lo {
        return Err(Error::Hypothesis(format!(
            "limit of quotients is not certified below q_inf (bracket lower end {})",
            qinf.lo
        )));
    }
    let positivity = positivity_on_segment(&normalized, &limit, qinf)?;
    let circle = s4_circle_min(&q2, &q3, &q4)?;
    let tail = tail_bound_r5(&q2, &q3, &q4)?;
    let margin = &circle.bound - &tail.bound;
    if !margin.is_positive() || !circle.certified || !circle.sampled_ok || !tail.sampled_ok {
        return Err(Error::Hypothesis(String::from(
            "the Rouche margin on |z| = q_2 could not be certified positive",
        )));
    }
    let grace = grace_apolar_witness(&q2, &q3, &q4)?;
    if !grace.apolarity_residual.is_zero() || !grace.roots_in_disk || grace.inside_count < 1 {
        return Err(Error::Hypothesis(String::from(
            "the Grace witness failed to place a zero of S_4 in the disk",
        )));
    }
    Ok(NonMembershipCertificate {
        q2,
        q3,
        q4,
        limit,
        qinf_lo: qinf.lo.clone(),
        qinf_hi: qinf.hi.clone(),
        q2_floor,
        positivity: Some(positivity),
        circle: Some(circle),
        tail: Some(tail),
        rouche_margin: Some(margin),
        grace: Some(grace),
    })
}

// ---------------------------------------------------------------------------
// Hutchinson's criterion.
// ---------------------------------------------------------------------------

/// Report of Hutchinson's test (`q_n ≥ 4` for all `n`) and the associated
/// real-rootedness suite over sections and consecutive-term sub-polynomials.
#[derive(Debug, Clone)]
pub struct HutchinsonReport {
    pub n_max: usize,
    pub all_q_ge_4: bool,
    pub first_violation: Option<(usize, Rat)>,
    pub checked_subpolys: usize,
    /// All full sections real-rooted with negative zeros, and all checked
    /// sub-polynomials real-rooted with nonpositive zeros.
    pub suite_passed: bool,
    /// Whether every full section also had only simple zeros (can fail on
    /// the boundary q ≡ 4, e.g. S_2 has a double root at −4).
    pub all_sections_simple: bool,
    /// A section with nonreal zeros, when the q-condition fails: (degree, Z_c).
    pub nonreal_section: Option<(usize, usize)>,
}

const SUBPOLY_SPAN: usize = 8;

/// Hutchinson's criterion with exact verification: if `q_n ≥ 4` up to
/// `n_max`, every full section must have simple negative zeros and every
/// consecutive-term sub-polynomial (span ≤ 8) only real nonpositive zeros.
pub fn hutchinson_check(series: &CoefficientSeries, n_max: usize) -> Result<HutchinsonReport> {
    if n_max < 2 {
        return Err(Error::BadArgument(String::from(
            "hutchinson check needs n_max >= 2",
        )));
    }
    let mat = series.materialize_to(n_max)?;
    let prof = quotients(&mat, n_max)?;
    let four = rat_i64(4);
    let mut first_violation = None;
    for n in 2..=n_max {
        if *prof.q_n(n) < four {
            first_violation = Some((n, prof.q_n(n).clone()));
            break;
        }
    }
    if let Some((n_bad, q_bad)) = first_violation {
        // exhibit a nonreal section when one exists
        let mut nonreal_section = None;
        for n in 2..=n_max {
            let p = RatPoly::new(mat.coeffs()[..=n].to_vec());
            let z_c = nonreal_count(&p)?;
            if z_c > 0 {
                nonreal_section = Some((n, z_c));
                break;
            }
        }
        return Ok(HutchinsonReport {
            n_max,
            all_q_ge_4: false,
            first_violation: Some((n_bad, q_bad)),
            checked_subpolys: 0,
            suite_passed: false,
            all_sections_simple: false,
            nonreal_section,
        });
    }
    let mut checked = 0usize;
    let mut ok = true;
    let mut simple = true;
    for n in 2..=n_max {
        for m in 0..n {
            if m != 0 && n - m > SUBPOLY_SPAN {
                continue;
            }
            // Σ_{k=m}^{n} a_k z^k = z^m · (shifted); the z^m factor only adds
            // zeros at the origin, allowed by "real and non-positive"
            let shifted = RatPoly::new(mat.coeffs()[m..=n].to_vec());
            let report = hyperbolicity_report(&shifted)?;
            checked += 1;
            let pass = if m == 0 {
                simple &= report.all_simple;
                report.is_hyperbolic() && report.all_negative
            } else {
                report.all_real_nonpositive()
            };
            if !pass {
                ok = false;
            }
        }
    }
    Ok(HutchinsonReport {
        n_max,
        all_q_ge_4: true,
        first_violation: None,
        checked_subpolys: checked,
        suite_passed: ok,
        all_sections_simple: simple,
        nonreal_section: None,
    })
}

// ---------------------------------------------------------------------------
// Top-level classifier.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpVerdict {
    InLp,
    NotInLp,
    Inconclusive,
}

/// Decision of the three-branch classifier, with its justification.
#[derive(Debug, Clone)]
pub struct Classification {
    pub verdict: LpVerdict,
    pub reason: String,
    pub diagnostic: Option<String>,
    pub certificate: Option<NonMembershipCertificate>,
}

fn inconclusive(reason: String, diagnostic: Option<String>) -> Classification {
    Classification {
        verdict: LpVerdict::Inconclusive,
        reason,
        diagnostic,
        certificate: None,
    }
}

/// Decision tree: `q_n ≥ 4` for all `n` → in L-P (Hutchinson);
/// decreasing with limit ≥ `q_∞` → in L-P; increasing with limit < `q_∞` →
/// run the non-membership pipeline; anything else is inconclusive.
pub fn classify(series: &CoefficientSeries, qinf: &QinfBracket) -> Result<Classification> {
    let rule = match series.generator() {
        Some(r) => r.clone(),
        None => {
            let n = series.max_index();
            let diag = if n >= 2 {
                let prof = quotients(series, n)?;
                Some(format!(
                    "materialized prefix has {:?} quotients; no analytic limit is available",
                    prof.monotone
                ))
            } else {
                None
            };
            return Ok(inconclusive(
                String::from("finite coefficient data: the theorem hypotheses need a limit"),
                diag,
            ));
        }
    };
    let four = rat_i64(4);
    let (limit, increasing) = match rule_limit_and_monotonicity(&rule) {
        Ok(v) => v,
        Err(Error::Hypothesis(msg)) => return Ok(inconclusive(msg, None)),
        Err(e) => return Err(e),
    };
    // infimum of q_n over n ≥ 2: q_2 for increasing rules, the limit otherwise
    let q_inf_over_n = if increasing {
        rule.q(2).unwrap_or_else(|| limit.clone())
    } else {
        limit.clone()
    };
    if q_inf_over_n >= four {
        return Ok(Classification {
            verdict: LpVerdict::InLp,
            reason: String::from("q_n >= 4 for all n: Hutchinson branch"),
            diagnostic: None,
            certificate: None,
        });
    }
    if !increasing || rule.q(2) == Some(limit.clone()) {
        // decreasing rules (constant counts as both monotone directions)
        if limit >= qinf.hi {
            return Ok(Classification {
                verdict: LpVerdict::InLp,
                reason: String::from(
                    "decreasing quotients with limit certified >= q_inf: theta branch",
                ),
                diagnostic: None,
                certificate: None,
            });
        }
    }
    if increasing && limit < qinf.lo {
        return match certify_not_lp(series, qinf) {
            Ok(cert) => Ok(Classification {
                verdict: LpVerdict::NotInLp,
                reason: String::from(
                    "increasing quotients with limit certified below q_inf: certificate issued",
                ),
                diagnostic: None,
                certificate: Some(cert),
            }),
            Err(Error::Hypothesis(msg)) => Ok(inconclusive(msg, None)),
            Err(e) => Err(e),
        };
    }
    let diagnostic = if limit < qinf.lo {
        Some(String::from(
            "lim inf q_n < q_inf: all but finitely many sections must have nonreal zeros \
             (diagnostic only; no certificate is derived from this)",
        ))
    } else if limit < qinf.hi {
        Some(String::from(
            "the limit falls inside the current q_inf bracket; tighten the bracket to decide",
        ))
    } else {
        None
    };
    Ok(inconclusive(
        String::from("no theorem branch applies to this quotient profile"),
        diagnostic,
    ))
}
