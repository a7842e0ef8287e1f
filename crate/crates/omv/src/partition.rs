//! Column-partition solver for sparse query supports.

use crate::error::{check_len, OmvError, Result};
use crate::matrix::{bool_mv, BoolMatrix};

/// Group size `max(1, ⌊n2^t⌋)` for exponent `t`.
pub fn group_size(n2: usize, t: f64) -> Result<usize> {
    if !(t > 0.0 && t <= 1.0) {
        return Err(OmvError::Exponent(t));
    }
    Ok(((n2 as f64).powf(t).floor() as usize).clamp(1, n2))
}

/// Number of column groups used for exponent `t`.
pub fn group_count(n2: usize, t: f64) -> Result<usize> {
    Ok(n2.div_ceil(group_size(n2, t)?))
}

/// Answers each query as the OR of products restricted to column groups.
pub fn sparse_partition_solve(m: &BoolMatrix, queries: &[Vec<bool>], t: f64) -> Result<Vec<Vec<bool>>> {
    let g = group_size(m.cols(), t)?;
    queries
        .iter()
        .map(|v| {
            check_len(m.cols(), v.len())?;
            let mut out = vec![false; m.rows()];
            for lo in (0..v.len()).step_by(g) {
                let hi = (lo + g).min(v.len());
                if !v[lo..hi].iter().any(|&b| b) {
                    continue;
                }
                let mut restricted = vec![false; v.len()];
                restricted[lo..hi].copy_from_slice(&v[lo..hi]);
                for (o, r) in out.iter_mut().zip(bool_mv(m, &restricted)?) {
                    *o |= r;
                }
            }
            Ok(out)
        })
        .collect()
}
