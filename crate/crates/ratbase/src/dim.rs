//! Dimension bounds and box-counting estimates for the span set of a sparse
//! base.
//!
//! In the sparse regime (`p > 2q − 1`) the closure of the span set is a
//! Cantor set of measure zero; its box-counting (hence Hausdorff) dimension
//! admits closed-form upper bounds:
//!
//! - `ln 2 / ln z` — each refinement level splits an interval into at most
//!   two survivors;
//! - `ln(2q−1) / ln p` — a value window of size `p^j` admits at most
//!   `(2q−1)^j` difference-alphabet suffixes;
//! - for base 5/2 only, the sharper two-level count `ln 3 / (2 ln z)`.
//!
//! The closed form `(ln(2q−1) − ln q)/(ln p − ln q)` is *conjectured* to be
//! the exact dimension; it is reported with that label and never used as
//! ground truth.
//!
//! Logarithms are enclosed rigorously: `ln x = e·ln 2 + 2·atanh(t)` with
//! `t = (m−1)/(m+1)`, `m = x·2^{−e} ∈ [1, 2)`, and the `atanh` series
//! truncated with an explicit remainder bound. No floating point enters any
//! comparison.

use num::{BigInt, BigRational, BigUint, One, Signed, Zero};

use crate::base::Base;
use crate::real::{fraction_string, RealEnclosure};
use crate::span::gamma_omega;
use crate::tree::{depth_counts, AutomatonKind};
use crate::{Error, Result, DEFAULT_ENCLOSURE_DEPTH};

/// Default width target for logarithm enclosures: `10^{−24}`, far below
/// every tolerance used in reports and tests.
pub fn default_log_width() -> BigRational {
    BigRational::new(BigInt::one(), num::pow::pow(BigInt::from(10), 24))
}

/// Encloses `atanh(t)` for `0 ≤ t < 1` with width at most `width_target`,
/// using the odd power series with the geometric remainder bound
/// `Σ_{i>j} t^{2i+1}/(2i+1) ≤ t^{2j+3}/((2j+3)(1−t²))`.
fn atanh_enclosure(t: &BigRational, width_target: &BigRational) -> RealEnclosure {
    debug_assert!(!t.is_negative() && t < &BigRational::one());
    let t2 = t * t;
    let one_minus_t2 = BigRational::one() - &t2;
    let mut term = t.clone();
    let mut sum = BigRational::zero();
    let mut j: u64 = 0;
    loop {
        sum += &term / BigRational::from_integer((2 * j + 1).into());
        term *= &t2;
        let tail = &term / (BigRational::from_integer((2 * j + 3).into()) * &one_minus_t2);
        if &tail <= width_target {
            let hi = &sum + tail;
            return RealEnclosure::new(sum, hi);
        }
        j += 1;
    }
}

/// Multiplies `x` by `2^k` exactly (for either sign of `k`).
fn scale_pow2(x: &BigRational, k: i64) -> BigRational {
    if k >= 0 {
        BigRational::new(x.numer() << k as usize, x.denom().clone())
    } else {
        BigRational::new(x.numer().clone(), x.denom() << (-k) as usize)
    }
}

/// Encloses `ln x` for a positive rational `x`, with width at most
/// `width_target`.
///
/// ```
/// use ratbase::dim::{default_log_width, ln_enclosure};
/// use num::BigRational;
///
/// let two = BigRational::from_integer(2.into());
/// let enc = ln_enclosure(&two, &default_log_width()).unwrap();
/// // ln 2 = 0.6931471805599453…
/// let below = BigRational::new(6931471805599453u64.into(), 10u64.pow(16).into());
/// let above = BigRational::new(6931471805599454u64.into(), 10u64.pow(16).into());
/// assert!(enc.lo() > &below && enc.hi() < &above);
/// ```
///
/// # Errors
///
/// [`Error::NonPositiveLog`] when `x ≤ 0`.
pub fn ln_enclosure(x: &BigRational, width_target: &BigRational) -> Result<RealEnclosure> {
    if !x.is_positive() {
        return Err(Error::NonPositiveLog {
            value: fraction_string(x),
        });
    }
    let one = BigRational::one();
    let two = &one + &one;
    // Normalise x = 2^e · m with m ∈ [1, 2), seeding e from bit lengths so
    // huge inputs take O(1) adjustment steps.
    let mut e = x.numer().bits() as i64 - x.denom().bits() as i64;
    let mut m = scale_pow2(x, -e);
    while m >= two {
        m = scale_pow2(&m, -1);
        e += 1;
    }
    while m < one {
        m = scale_pow2(&m, 1);
        e -= 1;
    }
    let ln_m = if m.is_one() {
        RealEnclosure::point(BigRational::zero())
    } else {
        let t = (&m - &one) / (&m + &one); // ∈ (0, 1/3)
        let quarter_target = width_target / BigRational::from_integer(4.into());
        atanh_enclosure(&t, &quarter_target).scale_nonneg(&two)
    };
    if e == 0 {
        return Ok(ln_m);
    }
    let ea = e.unsigned_abs();
    let ln2_target = width_target / BigRational::from_integer(BigInt::from(4u64 * ea));
    let third = BigRational::new(BigInt::one(), BigInt::from(3));
    let ln2 = atanh_enclosure(&third, &ln2_target).scale_nonneg(&two);
    let scaled = ln2.scale_nonneg(&BigRational::from_integer(ea.into()));
    let shift = if e < 0 { scaled.neg() } else { scaled };
    Ok(ln_m.add(&shift))
}

/// Upper bounds (and the conjectured exact value) for the Hausdorff and
/// box-counting dimension of the span set of one sparse base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionBounds {
    /// The base the bounds describe.
    pub base: Base,
    /// `ln 2 / ln z`: proved upper bound from the two-way branching of the
    /// refinement.
    pub branching_bound: RealEnclosure,
    /// `ln(2q−1) / ln p`: proved upper bound from counting
    /// difference-alphabet words inside `p`-adic value windows.
    pub word_count_bound: RealEnclosure,
    /// `(ln(2q−1) − ln q) / (ln p − ln q)`: the conjectured exact dimension.
    /// Unproved — reported for comparison, never used as ground truth.
    pub conjectured_value: RealEnclosure,
    /// `ln 3 / (2 ln z)`: proved upper bound special to base 5/2, from a
    /// two-level refinement count; `None` for every other base.
    pub two_step_bound: Option<RealEnclosure>,
}

/// One display row of [`DimensionBounds`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionRow {
    /// Short identifier of the quantity.
    pub name: &'static str,
    /// The closed form evaluated.
    pub formula: &'static str,
    /// Epistemic status of the value.
    pub provenance: &'static str,
    /// Certified enclosure of the value.
    pub value: RealEnclosure,
}

impl DimensionBounds {
    /// The bounds as labeled display rows, proved bounds first.
    pub fn rows(&self) -> Vec<DimensionRow> {
        let mut rows = vec![
            DimensionRow {
                name: "branching",
                formula: "ln 2 / ln z",
                provenance: "proved upper bound",
                value: self.branching_bound.clone(),
            },
            DimensionRow {
                name: "word-count",
                formula: "ln(2q−1) / ln p",
                provenance: "proved upper bound",
                value: self.word_count_bound.clone(),
            },
        ];
        if let Some(two_step) = &self.two_step_bound {
            rows.push(DimensionRow {
                name: "two-step",
                formula: "ln 3 / (2 ln z)",
                provenance: "proved upper bound (base 5/2 only)",
                value: two_step.clone(),
            });
        }
        rows.push(DimensionRow {
            name: "conjecture",
            formula: "(ln(2q−1) − ln q) / (ln p − ln q)",
            provenance: "conjecture — not established, not used as ground truth",
            value: self.conjectured_value.clone(),
        });
        rows
    }
}

/// Evaluates the dimension upper bounds of a sparse base with certified
/// logarithm enclosures (width ≤ 10^{−24} per logarithm).
///
/// # Errors
///
/// [`Error::WrongRegime`] when `p ≤ 2q − 1`: there the span set is a full
/// interval of dimension 1 and the bounds do not apply.
pub fn hausdorff_upper_bounds(b: &Base) -> Result<DimensionBounds> {
    if !b.is_sparse() {
        return Err(Error::WrongRegime {
            need: "p > 2q − 1 (sparse regime)",
            p: b.p(),
            q: b.q(),
        });
    }
    let w = default_log_width();
    let rat = |v: u64| BigRational::from_integer(BigInt::from(v));
    let ln2 = ln_enclosure(&rat(2), &w)?;
    let ln_p = ln_enclosure(&rat(b.p()), &w)?;
    let ln_q = ln_enclosure(&rat(b.q()), &w)?;
    let ln_wide = ln_enclosure(&rat(2 * b.q() - 1), &w)?;
    let ln_z = ln_p.sub(&ln_q);
    let branching_bound = ln2
        .div_pos(&ln_z)
        .expect("ln z > 0 since p > q and enclosures are tight");
    let word_count_bound = ln_wide
        .div_pos(&ln_p)
        .expect("ln p > 0 since p ≥ 2");
    let conjectured_value = ln_wide
        .sub(&ln_q)
        .div_pos(&ln_z)
        .expect("ln z > 0");
    let two_step_bound = if b.p() == 5 && b.q() == 2 {
        let ln3 = ln_enclosure(&rat(3), &w)?;
        let two_ln_z = ln_z.scale_nonneg(&rat(2));
        Some(ln3.div_pos(&two_ln_z).expect("2 ln z > 0"))
    } else {
        None
    };
    Ok(DimensionBounds {
        base: *b,
        branching_bound,
        word_count_bound,
        conjectured_value,
        two_step_bound,
    })
}

/// One depth of the empirical box-counting sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxCountRow {
    /// Refinement depth `j`.
    pub depth: usize,
    /// `N_j`: the number of length-`j` span-automaton labels from 0 — one
    /// covering interval of length `r_j = ω·z^{−j}` per label.
    pub labels: BigUint,
    /// Enclosure of `ln N_j / ln(1/r_j)`; `None` while the denominator is
    /// not certainly positive (small `j`).
    pub ratio: Option<RealEnclosure>,
}

/// Computes the empirical dimension sequence `ln N_j / (j·ln z − ln ω)` for
/// `j ≤ j_max`. The sequence approaches the box-counting dimension from
/// finite depth; it is an estimate, not a certified bound.
///
/// # Errors
///
/// [`Error::WrongRegime`] when `p ≤ 2q − 1`, and
/// [`Error::FrontierCapExceeded`] when a refinement generation outgrows
/// `cap`.
pub fn box_counting_estimate(b: &Base, j_max: usize, cap: usize) -> Result<Vec<BoxCountRow>> {
    if !b.is_sparse() {
        return Err(Error::WrongRegime {
            need: "p > 2q − 1 (sparse regime)",
            p: b.p(),
            q: b.q(),
        });
    }
    let w = default_log_width();
    let rat = |v: u64| BigRational::from_integer(BigInt::from(v));
    let ln_z = ln_enclosure(&rat(b.p()), &w)?.sub(&ln_enclosure(&rat(b.q()), &w)?);
    let omega = gamma_omega(b, DEFAULT_ENCLOSURE_DEPTH).omega;
    // ln is monotone: enclose ln ω through the endpoints of ω's enclosure.
    let ln_omega = RealEnclosure::new(
        ln_enclosure(omega.lo(), &w)?.lo().clone(),
        ln_enclosure(omega.hi(), &w)?.hi().clone(),
    );
    let counts = depth_counts(b, AutomatonKind::Span, j_max, cap)?;
    let mut rows = Vec::with_capacity(counts.len());
    for (j, n_j) in counts.iter().enumerate() {
        let depth_rat = rat(j as u64);
        let denominator = ln_z.scale_nonneg(&depth_rat).sub(&ln_omega);
        let ratio = if denominator.lo().is_positive() {
            let numerator = ln_enclosure(
                &BigRational::from_integer(BigInt::from(n_j.clone())),
                &w,
            )?;
            numerator.div_pos(&denominator)
        } else {
            None
        };
        rows.push(BoxCountRow {
            depth: j,
            labels: n_j.clone(),
            ratio,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::decimal_string;

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::new(num.into(), den.into())
    }

    #[test]
    fn ln_of_one_is_exactly_zero() {
        let enc = ln_enclosure(&BigRational::one(), &default_log_width()).unwrap();
        assert_eq!(enc, RealEnclosure::point(BigRational::zero()));
    }

    #[test]
    fn ln_of_powers_of_two_stack_exactly() {
        let w = default_log_width();
        let ln2 = ln_enclosure(&rat(2, 1), &w).unwrap();
        let ln8 = ln_enclosure(&rat(8, 1), &w).unwrap();
        // ln 8 = 3 ln 2: the scaled enclosure must meet the direct one, and
        // both must respect the width target.
        assert!(ln8.intersects(&ln2.scale_nonneg(&rat(3, 1))));
        assert!(ln8.width() <= w);
        assert!(ln2.width() <= w);
    }

    #[test]
    fn ln_brackets_known_decimals() {
        let w = default_log_width();
        // ln 10 = 2.302585092994045684…
        let ln10 = ln_enclosure(&rat(10, 1), &w).unwrap();
        assert!(ln10.lo() > &rat(2302585092994045, 1_000_000_000_000_000));
        assert!(ln10.hi() < &rat(2302585092994046, 1_000_000_000_000_000));
        // ln(1/2) = −ln 2 = −0.693147180559945…
        let lnh = ln_enclosure(&rat(1, 2), &w).unwrap();
        assert!(lnh.lo() > &rat(-693147180559946, 1_000_000_000_000_000));
        assert!(lnh.hi() < &rat(-693147180559945, 1_000_000_000_000_000));
    }

    #[test]
    fn ln_rejects_non_positive_input() {
        for bad in [rat(0, 1), rat(-3, 7)] {
            assert!(matches!(
                ln_enclosure(&bad, &default_log_width()),
                Err(Error::NonPositiveLog { .. })
            ));
        }
    }

    #[test]
    fn bounds_for_seven_thirds() {
        let b = Base::new(7, 3).unwrap();
        let bounds = hausdorff_upper_bounds(&b).unwrap();
        assert_eq!(decimal_string(bounds.branching_bound.lo(), 4), "0.8181");
        assert_eq!(decimal_string(bounds.word_count_bound.lo(), 4), "0.8271");
        assert!(
            bounds.branching_bound.hi() < bounds.word_count_bound.lo(),
            "the branching bound is the sharper one for 7/3"
        );
        assert!(bounds.two_step_bound.is_none());
        // The conjectured value sits strictly below both proved bounds.
        assert!(bounds.conjectured_value.hi() < bounds.branching_bound.lo());
        let rows = bounds.rows();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().any(|r| r.provenance.contains("conjecture")));
    }

    #[test]
    fn bounds_for_five_halves_include_two_step() {
        let b = Base::new(5, 2).unwrap();
        let bounds = hausdorff_upper_bounds(&b).unwrap();
        assert_eq!(bounds.rows().len(), 4);
        let two_step = bounds.two_step_bound.as_ref().expect("special bound for 5/2");
        assert_eq!(decimal_string(two_step.lo(), 4), "0.5995");
        assert!(two_step.hi() < bounds.branching_bound.lo());
    }

    #[test]
    fn bounds_refuse_interval_regime() {
        for (p, q) in [(3u64, 2u64), (4, 3)] {
            let b = Base::new(p, q).unwrap();
            assert!(matches!(
                hausdorff_upper_bounds(&b),
                Err(Error::WrongRegime { .. })
            ));
            assert!(matches!(
                box_counting_estimate(&b, 5, 1 << 16),
                Err(Error::WrongRegime { .. })
            ));
        }
    }

    #[test]
    fn box_rows_skip_then_stabilize() {
        let b = Base::new(7, 3).unwrap();
        let rows = box_counting_estimate(&b, 8, 1 << 16).unwrap();
        assert_eq!(rows.len(), 9);
        assert_eq!(rows[0].labels, BigUint::from(1u32));
        assert!(rows[0].ratio.is_none(), "depth 0 has no meaningful scale");
        assert_eq!(rows[2].labels, BigUint::from(3u32));
        let bound = hausdorff_upper_bounds(&b).unwrap().branching_bound;
        let late = rows[8].ratio.as_ref().expect("defined by depth 8");
        // Early depths oscillate; by depth 8 the ratio sits under the bound
        // with generous slack.
        assert!(late.hi() < &(bound.lo() + rat(1, 10)));
    }
}
