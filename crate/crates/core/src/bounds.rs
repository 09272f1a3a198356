//! Kernel-size bound calculators, all in exact integer arithmetic:
//!
//! - `g(k)  = C(k+1, 2) - 1`
//! - `f(k)  = 5 * g(k)` (the improved kernel bound)
//! - `fOld(k) = g(k) + (k-1) * (C(g(k), 2) + 2*g(k) + 1)` (the bound it
//!   replaces)
//! - `gp(k, p) = ceil(k * (k^(1/(p-1)) + 2))` (the hole-free refinement)

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelBounds {
    pub k: u64,
    pub p: Option<u32>,
    pub g: u64,
    pub f: u64,
    #[serde(rename = "fOld")]
    pub f_old: u64,
    pub gp: Option<u64>,
}

fn choose2(x: u128) -> u128 {
    x * x.saturating_sub(1) / 2
}

/// Smallest integer `m` with `m >= k^(p/(p-1))`, i.e. the least `m` such
/// that `m^(p-1) >= k^p`. Binary search keeps everything integral; the
/// irrational root is never materialized.
fn ceil_k_pow_p_over_p_minus_1(k: u64, p: u32) -> u128 {
    let k = k as u128;
    if k == 0 {
        return 0;
    }
    let target = k.checked_pow(p).expect("k^p overflows u128");
    let (mut lo, mut hi) = (1u128, k * k); // k^(p/(p-1)) <= k^2 for p >= 2
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if mid.checked_pow(p - 1).is_none_or(|m| m >= target) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

pub fn kernel_bounds(k: u64, p: Option<u32>) -> Result<KernelBounds> {
    if k < 1 {
        return Err(Error::usage("k must be at least 1"));
    }
    if k > 10_000_000 {
        // Keeps every u128 intermediate below overflow; the u64 output
        // range gives out far earlier anyway.
        return Err(Error::capacity("bounds are supported for k <= 10^7"));
    }
    if let Some(p) = p {
        if p < 3 {
            return Err(Error::usage("p must be at least 3 when given"));
        }
    }
    let narrow = |x: u128| -> Result<u64> {
        u64::try_from(x).map_err(|_| Error::capacity(format!("bound overflows u64 for k = {k}")))
    };
    let kk = k as u128;
    let g = choose2(kk + 1) - 1;
    let f = 5 * g;
    let f_old = g + (kk - 1) * (choose2(g) + 2 * g + 1);
    // gp(k, p) = 2k + ceil(k^(p/(p-1))).
    let gp = match p {
        Some(p) => Some(narrow(2 * kk + ceil_k_pow_p_over_p_minus_1(k, p))?),
        None => None,
    };
    Ok(KernelBounds {
        k,
        p,
        g: narrow(g)?,
        f: narrow(f)?,
        f_old: narrow(f_old)?,
        gp,
    })
}
