//! Closed-form bounds on `N(G, S)`.
//!
//! Every bound is a function of three integers: `g = |G|`, `h = |H_G(S)|` and
//! `s = |S|`. Fractional powers are never rounded through floating point; a
//! ceiling of `x^(p/q)` is evaluated as the least integer `t` with
//! `t^q >= x^p`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::abelian::{stabilizer, GroupSubset};
use crate::error::{Error, Result};

/// Least `t` with `t^root >= value`, by binary search over big integers.
pub fn ceil_root(value: &BigUint, root: u32) -> BigUint {
    assert!(root >= 1, "root must be positive");
    if value.is_zero() || value.is_one() || root == 1 {
        return value.clone();
    }
    // t <= 2^ceil(bits/root) satisfies the predicate
    let bits = value.bits();
    let mut hi = BigUint::one() << bits.div_ceil(u64::from(root));
    let mut lo = BigUint::one();
    while lo < hi {
        let mid: BigUint = (&lo + &hi) >> 1;
        if mid.pow(root) >= *value {
            hi = mid;
        } else {
            lo = mid + 1u32;
        }
    }
    lo
}

/// Least `t` with `t^root >= mantissa^exponent`.
pub fn ceil_root_power(mantissa: u64, exponent: u32, root: u32) -> u64 {
    assert!(mantissa >= 1, "mantissa must be positive");
    let value = BigUint::from(mantissa).pow(exponent);
    to_u64(ceil_root(&value, root))
}

fn to_u64(v: BigUint) -> u64 {
    u64::try_from(v).expect("root exceeds u64")
}

fn check_divides(divisor: u64, value: u64) -> Result<()> {
    if divisor == 0 || value % divisor != 0 {
        return Err(Error::Divisibility { divisor, value });
    }
    Ok(())
}

fn check_triple(g: u64, h: u64, s: u64) -> Result<()> {
    if g == 0 || h == 0 || s == 0 {
        return Err(Error::Range(format!(
            "g={g}, h={h}, s={s} must be positive"
        )));
    }
    if s > g {
        return Err(Error::Range(format!("|S|={s} exceeds |G|={g}")));
    }
    check_divides(h, g)?;
    check_divides(h, s)
}

fn exponent(x: u64) -> Result<u32> {
    u32::try_from(x).map_err(|_| Error::Range(format!("exponent {x} too large")))
}

/// One element dropped from every `H`-coset: `g - g/h + 1`.
pub fn thm1_lower(g: u64, h: u64) -> Result<u64> {
    if g == 0 {
        return Err(Error::Range("g must be positive".into()));
    }
    check_divides(h, g)?;
    Ok(g - g / h + 1)
}

/// Counting bound `floor((s-1) g / s) + 1`.
pub fn upper_bound(g: u64, s: u64) -> Result<u64> {
    if s == 0 || s > g {
        return Err(Error::Range(format!("need 1 <= s <= g, got s={s}, g={g}")));
    }
    let num = u128::from(s - 1) * u128::from(g);
    Ok((num / u128::from(s)) as u64 + 1)
}

/// `ceil(h^(1/s) g^(1-1/s))`, the least `t` with `t^s >= h g^(s-1)`.
pub fn lemma_lower(g: u64, h: u64, s: u64) -> Result<u64> {
    check_triple(g, h, s)?;
    let value = BigUint::from(h) * BigUint::from(g).pow(exponent(s - 1)?);
    Ok(to_u64(ceil_root(&value, exponent(s)?)))
}

/// `(g - g/h) + ceil((g/h)^((s-h)/s))`.
pub fn thm2_lower(g: u64, h: u64, s: u64) -> Result<u64> {
    check_triple(g, h, s)?;
    let quotient = g / h;
    // (g/h)^((s-h)/s) = (g/h)^((s'-1)/s') with s' = s/h
    let s_prime = s / h;
    let term = ceil_root_power(quotient, exponent(s_prime - 1)?, exponent(s_prime)?);
    Ok(g - quotient + term)
}

/// Real-valued check of
/// `(h-1)/h * g + (g/h)^(1-h/s) >= h^(1/s) * g^(1-1/s)` up to `tolerance`.
pub fn proposition_check(g: f64, h: f64, s: f64, tolerance: f64) -> Result<bool> {
    if !(h >= 1.0 && s >= 1.0 && g >= h) || !g.is_finite() || !s.is_finite() {
        return Err(Error::Range(format!(
            "need g >= h >= 1 and s >= 1, got g={g}, h={h}, s={s}"
        )));
    }
    Ok(proposition_gap(g, h, s) >= -tolerance)
}

/// `LHS - RHS` of the inequality checked by [`proposition_check`].
pub fn proposition_gap(g: f64, h: f64, s: f64) -> f64 {
    let lhs = (h - 1.0) / h * g + (g / h).powf(1.0 - h / s);
    let rhs = h.powf(1.0 / s) * g.powf(1.0 - 1.0 / s);
    lhs - rhs
}

/// All bounds for one `(G, S)` pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub group_size: u64,
    pub s: u64,
    pub h: u64,
    pub thm1_lower: u64,
    pub lemma_lower: u64,
    pub thm2_lower: u64,
    pub upper: u64,
    pub best_lower: u64,
}

impl BoundsReport {
    pub fn from_sizes(g: u64, h: u64, s: u64) -> Result<BoundsReport> {
        let thm1_lower = thm1_lower(g, h)?;
        let lemma_lower = lemma_lower(g, h, s)?;
        let thm2_lower = thm2_lower(g, h, s)?;
        let upper = upper_bound(g, s)?;
        Ok(BoundsReport {
            group_size: g,
            s,
            h,
            thm1_lower,
            lemma_lower,
            thm2_lower,
            upper,
            best_lower: thm1_lower.max(lemma_lower).max(thm2_lower),
        })
    }

    /// `|T| = |G| / |H|`.
    pub fn transversal_size(&self) -> u64 {
        self.group_size / self.h
    }

    /// Lower and upper bounds meet, so `N(G, S)` is determined.
    pub fn is_tight(&self) -> bool {
        self.best_lower == self.upper
    }
}

pub fn bounds_report(set: &GroupSubset) -> Result<BoundsReport> {
    let h = stabilizer(set)?.order();
    BoundsReport::from_sizes(set.group().size() as u64, h as u64, set.len() as u64)
}
