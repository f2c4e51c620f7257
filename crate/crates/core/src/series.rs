//! Coefficient series with positive entries, their quotient profiles
//! `p_n = a_{n-1}/a_n`, `q_n = p_n/p_{n-1}`, and conversions between the two
//! representations. All arithmetic is exact rational.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{parse_rat, rat_i64, Rat};

/// Rule generating the second quotients `q_2, q_3, ...` on demand.
#[derive(Debug, Clone, PartialEq)]
pub enum QuotientRule {
    /// `q_n = q` for all `n >= 2`.
    Constant { q: Rat },
    /// Explicit finite list `q_2, ..., q_{len+1}`.
    List { q: Vec<Rat> },
    /// `q_n = c - d/n` for `n >= 2`; increasing when `d > 0`.
    LimitIncreasing { c: Rat, d: Rat },
}

impl QuotientRule {
    /// `q_n`, `n >= 2`; `None` past the end of a finite list.
    pub fn q(&self, n: usize) -> Option<Rat> {
        debug_assert!(n >= 2);
        match self {
            QuotientRule::Constant { q } => Some(q.clone()),
            QuotientRule::List { q } => q.get(n - 2).cloned(),
            QuotientRule::LimitIncreasing { c, d } => Some(c - d / rat_i64(n as i64)),
        }
    }

    /// Analytic limit of `q_n`, when the rule defines one.
    pub fn limit(&self) -> Option<Rat> {
        match self {
            QuotientRule::Constant { q } => Some(q.clone()),
            QuotientRule::List { .. } => None,
            QuotientRule::LimitIncreasing { c, .. } => Some(c.clone()),
        }
    }

    /// Largest index this rule can materialize coefficients to, if finite.
    pub fn max_index(&self) -> Option<usize> {
        match self {
            QuotientRule::List { q } => Some(q.len() + 1),
            _ => None,
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            QuotientRule::Constant { q } => {
                if !q.is_positive() {
                    return Err(Error::NonPositive { index: 2 });
                }
            }
            QuotientRule::List { q } => {
                if q.is_empty() {
                    return Err(Error::BadArgument("empty quotient list".to_string()));
                }
                for (i, v) in q.iter().enumerate() {
                    if !v.is_positive() {
                        return Err(Error::NonPositive { index: i + 2 });
                    }
                }
            }
            QuotientRule::LimitIncreasing { c, d } => {
                let q2 = c - d / rat_i64(2);
                if !q2.is_positive() {
                    return Err(Error::BadArgument(format!(
                        "limit-increasing rule needs q_2 = c - d/2 > 0, got {q2}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Positive Taylor coefficients, materialized up to `max_index`, optionally
/// backed by a quotient rule that generated them.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSeries {
    entries: Vec<Rat>,
    generator: Option<(QuotientRule, Rat, Rat)>, // (rule, a0, a1)
}

impl CoefficientSeries {
    /// Builds from explicit coefficients `a_0..a_n`; all must be positive.
    pub fn from_coeffs(entries: Vec<Rat>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::BadArgument(
                "need at least a_0 and a_1".to_string(),
            ));
        }
        for (i, a) in entries.iter().enumerate() {
            if !a.is_positive() {
                return Err(Error::NonPositive { index: i });
            }
        }
        Ok(CoefficientSeries {
            entries,
            generator: None,
        })
    }

    /// Builds from a quotient rule, materializing coefficients to `n_max`
    /// using `a_n = a_1 / (q_2^{n-1} q_3^{n-2} ... q_n) * (a_1/a_0)^{n-1}`,
    /// computed incrementally via `p_n = p_{n-1} q_n`, `a_n = a_{n-1}/p_n`.
    pub fn from_rule(rule: QuotientRule, a0: Rat, a1: Rat, n_max: usize) -> Result<Self> {
        rule.validate()?;
        if !a0.is_positive() {
            return Err(Error::NonPositive { index: 0 });
        }
        if !a1.is_positive() {
            return Err(Error::NonPositive { index: 1 });
        }
        if let Some(m) = rule.max_index() {
            if n_max > m {
                return Err(Error::BadArgument(format!(
                    "rule only defines quotients up to index {m}, requested {n_max}"
                )));
            }
        }
        let mut entries = vec![a0.clone(), a1.clone()];
        let mut p = &a0 / &a1; // p_1
        for n in 2..=n_max {
            let q = rule.q(n).expect("length checked above");
            p *= &q; // p_n = q_n p_{n-1}
            let next = entries.last().unwrap() / &p;
            entries.push(next);
        }
        Ok(CoefficientSeries {
            entries,
            generator: Some((rule, a0, a1)),
        })
    }

    pub fn coeff(&self, k: usize) -> Option<&Rat> {
        self.entries.get(k)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.entries
    }

    pub fn max_index(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn generator(&self) -> Option<&QuotientRule> {
        self.generator.as_ref().map(|(r, _, _)| r)
    }

    /// Rematerializes to a (possibly larger) index; explicit series cannot
    /// grow.
    pub fn materialize_to(&self, n_max: usize) -> Result<CoefficientSeries> {
        if n_max <= self.max_index() {
            return Ok(self.clone());
        }
        match &self.generator {
            Some((rule, a0, a1)) => {
                CoefficientSeries::from_rule(rule.clone(), a0.clone(), a1.clone(), n_max)
            }
            None => Err(Error::BadArgument(format!(
                "series has only {} coefficients and no generator",
                self.entries.len()
            ))),
        }
    }

    /// Rescales to `a_0 = a_1 = 1` via `b_k = a_0^{-1} a_k (a_0/a_1)^k`,
    /// which preserves every second quotient.
    pub fn normalize(&self) -> CoefficientSeries {
        let a0 = &self.entries[0];
        let a1 = &self.entries[1];
        let r = a0 / a1;
        let mut power = Rat::one();
        let entries: Vec<Rat> = self
            .entries
            .iter()
            .map(|a| {
                let b = a / a0 * &power;
                power *= &r;
                b
            })
            .collect();
        CoefficientSeries {
            entries,
            generator: self.generator.as_ref().map(|(rule, _, _)| {
                (rule.clone(), Rat::one(), Rat::one())
            }),
        }
    }
}

/// Monotonicity of a finite quotient prefix (non-strict).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    Increasing,
    Decreasing,
    Neither,
}

/// The sequences `p_n` (n >= 1) and `q_n` (n >= 2) with prefix metadata.
#[derive(Debug, Clone)]
pub struct QuotientProfile {
    /// `p_1..p_{n_max}`.
    pub p: Vec<Rat>,
    /// `q_2..q_{n_max}`.
    pub q: Vec<Rat>,
    /// Non-strict monotonicity of the materialized `q` prefix.
    pub monotone: Monotonicity,
    /// Whether the prefix is also strictly monotone.
    pub strict: bool,
    /// `(value, error bound)`: the rule's analytic limit (error 0) or the
    /// last materialized `q_n` with the last increment as a heuristic error.
    pub limit_estimate: Option<(Rat, Rat)>,
}

impl QuotientProfile {
    pub fn q_n(&self, n: usize) -> &Rat {
        &self.q[n - 2]
    }

    pub fn p_n(&self, n: usize) -> &Rat {
        &self.p[n - 1]
    }
}

/// Computes the quotient profile of `series` up to `q_{n_max}`.
pub fn quotients(series: &CoefficientSeries, n_max: usize) -> Result<QuotientProfile> {
    if n_max < 2 {
        return Err(Error::BadArgument(format!(
            "n_max must be >= 2, got {n_max}"
        )));
    }
    let series = series.materialize_to(n_max)?;
    let a = series.coeffs();
    let p: Vec<Rat> = (1..=n_max).map(|n| &a[n - 1] / &a[n]).collect();
    let q: Vec<Rat> = (2..=n_max).map(|n| &p[n - 1] / &p[n - 2]).collect();
    let mut incr = true;
    let mut decr = true;
    let mut strict_incr = true;
    let mut strict_decr = true;
    for w in q.windows(2) {
        match w[0].cmp(&w[1]) {
            core::cmp::Ordering::Less => {
                decr = false;
                strict_decr = false;
            }
            core::cmp::Ordering::Greater => {
                incr = false;
                strict_incr = false;
            }
            core::cmp::Ordering::Equal => {
                strict_incr = false;
                strict_decr = false;
            }
        }
    }
    let monotone = if incr {
        Monotonicity::Increasing
    } else if decr {
        Monotonicity::Decreasing
    } else {
        Monotonicity::Neither
    };
    let strict = (incr && strict_incr) || (decr && strict_decr);
    let limit_estimate = match series.generator().and_then(|r| r.limit()) {
        Some(c) => Some((c, Rat::zero())),
        None => {
            let last = q.last().unwrap();
            let err = if q.len() >= 2 {
                (last - &q[q.len() - 2]).abs()
            } else {
                Rat::zero()
            };
            Some((last.clone(), err))
        }
    };
    Ok(QuotientProfile {
        p,
        q,
        monotone,
        strict,
        limit_estimate,
    })
}

/// Reconstructs the normalized series with the given quotients
/// (`q[0]` is `q_2`). Exact inverse of [`quotients`] after normalization.
pub fn coeffs_from_quotients(q: &[Rat], a0: Rat, a1: Rat) -> Result<CoefficientSeries> {
    CoefficientSeries::from_rule(QuotientRule::List { q: q.to_vec() }, a0, a1, q.len() + 1)
}

/// Parses the coefficient file format: one entry per line, `k value`, where
/// `value` is `p/q` or a decimal literal. Blank lines and `#` comments are
/// skipped. Indices must be contiguous from 0.
pub fn parse_coefficient_file(text: &str) -> Result<CoefficientSeries> {
    let mut entries: Vec<(usize, Rat)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (k, v) = match (parts.next(), parts.next(), parts.next()) {
            (Some(k), Some(v), None) => (k, v),
            _ => {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("expected 'k value', got {line:?}"),
                })
            }
        };
        let k: usize = k.parse().map_err(|_| Error::Parse {
            line: lineno + 1,
            message: format!("bad index {k:?}"),
        })?;
        let v = parse_rat(v).map_err(|e| Error::Parse {
            line: lineno + 1,
            message: format!("{e}"),
        })?;
        if !v.is_positive() {
            return Err(Error::NonPositive { index: k });
        }
        entries.push((k, v));
    }
    entries.sort_by_key(|(k, _)| *k);
    for (expected, (k, _)) in entries.iter().enumerate() {
        if *k != expected {
            return Err(Error::Parse {
                line: 0,
                message: format!("indices not contiguous from 0: missing {expected}"),
            });
        }
    }
    CoefficientSeries::from_coeffs(entries.into_iter().map(|(_, v)| v).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat_frac, rat_powi};

    #[test]
    fn parses_coefficient_file() {
        let s = parse_coefficient_file("0 1\n1 1\n2 1/4\n").unwrap();
        assert_eq!(s.coeff(2), Some(&rat_frac(1, 4)));
        assert!(parse_coefficient_file("0 1\n1 1\n2 -1/4\n").is_err());
        assert!(parse_coefficient_file("0 1\n2 1\n").is_err());
        assert!(parse_coefficient_file("0 1\nbogus\n").is_err());
    }

    #[test]
    fn constant_rule_materializes_by_telescoping() {
        // q = 4, a0 = a1 = 1: a_3 = 1/(q_2^2 q_3) = 1/64
        let s = CoefficientSeries::from_rule(
            QuotientRule::Constant { q: rat_i64(4) },
            rat_i64(1),
            rat_i64(1),
            3,
        )
        .unwrap();
        assert_eq!(s.coeff(3), Some(&rat_frac(1, 64)));
        // a_k = 4^{-k(k-1)/2}
        let s = s.materialize_to(6).unwrap();
        for k in 0..=6i64 {
            assert_eq!(*s.coeff(k as usize).unwrap(), rat_powi(&rat_i64(4), -k * (k - 1) / 2));
        }
    }

    #[test]
    fn theta_coefficients_have_constant_quotients() {
        // a_k = 2^{-k^2}: q_n = 4 for all n
        let entries: Vec<Rat> = (0..=8i64).map(|k| rat_powi(&rat_i64(2), -k * k)).collect();
        let s = CoefficientSeries::from_coeffs(entries).unwrap();
        let prof = quotients(&s, 8).unwrap();
        for q in &prof.q {
            assert_eq!(*q, rat_i64(4));
        }
        assert_eq!(prof.monotone, Monotonicity::Increasing);
        assert!(!prof.strict);
    }

    #[test]
    fn factorial_quotients() {
        // a_k = 1/k!: q_n = n/(n-1)
        let mut fact = rat_i64(1);
        let mut entries = vec![rat_i64(1)];
        for k in 1..=8i64 {
            fact *= rat_i64(k);
            entries.push(fact.clone().recip());
        }
        let s = CoefficientSeries::from_coeffs(entries).unwrap();
        let prof = quotients(&s, 8).unwrap();
        for n in 2..=8usize {
            assert_eq!(*prof.q_n(n), rat_frac(n as i64, n as i64 - 1));
        }
        assert_eq!(prof.monotone, Monotonicity::Decreasing);
    }

    #[test]
    fn all_ones_identity() {
        let s = CoefficientSeries::from_coeffs(vec![rat_i64(1); 6]).unwrap();
        let prof = quotients(&s, 5).unwrap();
        assert!(prof.p.iter().all(|p| *p == rat_i64(1)));
        assert!(prof.q.iter().all(|q| *q == rat_i64(1)));
    }

    #[test]
    fn reconstruction_examples() {
        // q = (3, 4): a_2 = 1/3, a_3 = 1/36
        let s = coeffs_from_quotients(&[rat_i64(3), rat_i64(4)], rat_i64(1), rat_i64(1)).unwrap();
        assert_eq!(s.coeff(2), Some(&rat_frac(1, 3)));
        assert_eq!(s.coeff(3), Some(&rat_frac(1, 36)));
        // q = 1: all coefficients 1
        let s = coeffs_from_quotients(&vec![rat_i64(1); 5], rat_i64(1), rat_i64(1)).unwrap();
        assert!(s.coeffs().iter().all(|a| *a == rat_i64(1)));
        assert!(coeffs_from_quotients(&[], rat_i64(1), rat_i64(1)).is_err());
    }

    #[test]
    fn normalization_example() {
        // a = (4, 2, 1): b_2 = a_2 a_0 / a_1^2 = 1
        let s = CoefficientSeries::from_coeffs(vec![rat_i64(4), rat_i64(2), rat_i64(1)]).unwrap();
        let n = s.normalize();
        assert_eq!(n.coeffs(), &[rat_i64(1), rat_i64(1), rat_i64(1)]);
        // idempotent on normalized input
        assert_eq!(n.normalize().coeffs(), n.coeffs());
    }

    #[test]
    fn normalization_preserves_quotients() {
        let s = CoefficientSeries::from_coeffs(vec![
            rat_frac(3, 2),
            rat_frac(7, 5),
            rat_frac(2, 3),
            rat_frac(1, 9),
            rat_frac(1, 100),
        ])
        .unwrap();
        let before = quotients(&s, 4).unwrap();
        let after = quotients(&s.normalize(), 4).unwrap();
        assert_eq!(before.q, after.q);
    }

    #[test]
    fn round_trip_through_quotients() {
        let s = CoefficientSeries::from_coeffs(vec![
            rat_i64(2),
            rat_i64(3),
            rat_frac(5, 4),
            rat_frac(1, 7),
        ])
        .unwrap();
        let prof = quotients(&s, 3).unwrap();
        let back = coeffs_from_quotients(&prof.q, rat_i64(1), rat_i64(1)).unwrap();
        assert_eq!(back.coeffs(), s.normalize().coeffs());
    }

    #[test]
    fn limit_increasing_rule() {
        // q_n = 3.2 - 0.2/n
        let rule = QuotientRule::LimitIncreasing {
            c: rat_frac(16, 5),
            d: rat_frac(1, 5),
        };
        assert_eq!(rule.q(2).unwrap(), rat_frac(31, 10));
        assert_eq!(rule.limit().unwrap(), rat_frac(16, 5));
        let s = CoefficientSeries::from_rule(rule, rat_i64(1), rat_i64(1), 10).unwrap();
        let prof = quotients(&s, 10).unwrap();
        assert_eq!(prof.monotone, Monotonicity::Increasing);
        assert!(prof.strict);
        assert_eq!(prof.limit_estimate.unwrap(), (rat_frac(16, 5), Rat::zero()));
    }
}
