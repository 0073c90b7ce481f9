//! Block partitions, the Schatten pinching inequality, and the
//! super-additivity gaps of the positive/negative p-energies under
//! block-diagonal restriction.

use serde::Serialize;

use crate::eigen::eigenvalues;
use crate::energy::{p_energy, schatten_norm_pow};
use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;

/// Ordered list of diagonal block sizes partitioning a matrix order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPartition {
    sizes: Vec<usize>,
}

impl BlockPartition {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() || sizes.iter().any(|&s| s == 0) {
            return Err(Error::EmptyPartition);
        }
        Ok(Self { sizes })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }

    fn check_fits(&self, n: usize) -> Result<()> {
        let sum = self.total();
        if sum != n {
            return Err(Error::PartitionMismatch { sum, n });
        }
        Ok(())
    }

    /// Offsets of each block start.
    fn starts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.sizes.len());
        let mut acc = 0;
        for &s in &self.sizes {
            out.push(acc);
            acc += s;
        }
        out
    }
}

/// Whole-matrix value, block-diagonal sum, and their difference for one
/// of the pinching/super-additivity quantities.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct GapReport {
    pub p: f64,
    pub whole: f64,
    pub parts_sum: f64,
    pub gap: f64,
}

/// Positive- and negative-energy gaps of one partitioned matrix.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SuperadditivityGaps {
    pub pos: GapReport,
    pub neg: GapReport,
}

/// Contiguous principal blocks along the diagonal, in order.
pub fn diagonal_blocks(m: &SymmetricMatrix, part: &BlockPartition) -> Result<Vec<SymmetricMatrix>> {
    part.check_fits(m.order())?;
    part.starts()
        .iter()
        .zip(part.sizes())
        .map(|(&start, &size)| {
            let keep: Vec<usize> = (start..start + size).collect();
            m.principal_submatrix(&keep)
        })
        .collect()
}

/// Pinching gap `||M||_p^p - sum_i ||M_ii||_p^p`, nonnegative for every
/// block partition and every p >= 1.
pub fn pinching_gap(m: &SymmetricMatrix, part: &BlockPartition, p: f64) -> Result<GapReport> {
    if p < 1.0 {
        return Err(Error::InvalidExponent { p });
    }
    let whole = schatten_norm_pow(&eigenvalues(m)?, p)?;
    let mut parts_sum = 0.0;
    for block in diagonal_blocks(m, part)? {
        parts_sum += schatten_norm_pow(&eigenvalues(&block)?, p)?;
    }
    Ok(GapReport { p, whole, parts_sum, gap: whole - parts_sum })
}

/// Super-additivity gaps `E_p^+(M) - sum_i E_p^+(M_ii)` and the negative
/// counterpart. Both are nonnegative for every partition and p >= 1.
pub fn superadditivity_gap(
    m: &SymmetricMatrix,
    part: &BlockPartition,
    p: f64,
    tol: f64,
) -> Result<SuperadditivityGaps> {
    if p < 1.0 {
        return Err(Error::InvalidExponent { p });
    }
    let whole = p_energy(&eigenvalues(m)?, p, tol)?;
    let mut pos_sum = 0.0;
    let mut neg_sum = 0.0;
    for block in diagonal_blocks(m, part)? {
        let r = p_energy(&eigenvalues(&block)?, p, tol)?;
        pos_sum += r.e_pos;
        neg_sum += r.e_neg;
    }
    Ok(SuperadditivityGaps {
        pos: GapReport { p, whole: whole.e_pos, parts_sum: pos_sum, gap: whole.e_pos - pos_sum },
        neg: GapReport { p, whole: whole.e_neg, parts_sum: neg_sum, gap: whole.e_neg - neg_sum },
    })
}

/// Simultaneous row/column permutation placing each vertex group
/// contiguously, plus the matching partition. The spectrum is invariant
/// under this relabeling, so pinching on arbitrary vertex subsets reduces
/// to contiguous blocks.
pub fn conformal_permutation(
    m: &SymmetricMatrix,
    groups: &[Vec<usize>],
) -> Result<(SymmetricMatrix, BlockPartition)> {
    let n = m.order();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for group in groups {
        if group.is_empty() {
            return Err(Error::NotAPartition { n });
        }
        for &v in group {
            if v >= n || seen[v] {
                return Err(Error::NotAPartition { n });
            }
            seen[v] = true;
            order.push(v);
        }
    }
    if order.len() != n {
        return Err(Error::NotAPartition { n });
    }
    let permuted = SymmetricMatrix::from_fn(n, |i, j| m.get(order[i], order[j]))?;
    let part = BlockPartition::new(groups.iter().map(|g| g.len()).collect())?;
    Ok((permuted, part))
}
