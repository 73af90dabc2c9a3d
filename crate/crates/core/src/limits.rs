//! Size guards for operations that enumerate every subset of a carrier.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::set::MAX_POINTS;

pub const DEFAULT_SIZE_LIMIT: usize = 12;
pub const DEFAULT_FAMILY_LIMIT: usize = 16;
pub const SIZE_LIMIT_ENV: &str = "ORDTOP_SIZE_LIMIT";

/// Carrier bound for subset enumeration. `ORDTOP_SIZE_LIMIT` overrides the
/// default; the value is read once per process and capped at 64.
pub fn size_limit() -> usize {
    static LIMIT: OnceLock<usize> = OnceLock::new();
    *LIMIT.get_or_init(|| {
        std::env::var(SIZE_LIMIT_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .map(|v| v.min(MAX_POINTS))
            .unwrap_or(DEFAULT_SIZE_LIMIT)
    })
}

pub fn check_carrier(what: &'static str, size: usize) -> Result<()> {
    check(what, size, size_limit())
}

pub fn check(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::SizeLimit { what, size, limit })
    } else {
        Ok(())
    }
}
