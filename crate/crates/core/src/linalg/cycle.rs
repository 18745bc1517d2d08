//! Eigenvalue multiplicities of a map that cycles a block decomposition.

use serde::Serialize;

use super::{charpoly, LinalgError, Matrix};
use crate::galois::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockCycleReport {
    pub block_dim: usize,
    pub cycle_length: usize,
    /// Scalar by which the l-th power acts on the first block.
    pub scalar: u64,
    /// Whether the charpoly equals `(x^l - scalar)^d`.
    pub charpoly_shape_ok: bool,
    /// Multiplicity shared by every eigenvalue.
    pub multiplicity: u32,
}

/// `x` acts on `F^(l d)` split into `l` consecutive coordinate blocks of
/// size `d`; block `i` must map into block `i + 1 (mod l)` and `x^l` must be
/// scalar on the first block.
pub fn block_cycle_multiplicity_check(
    block_dim: usize,
    cycle_map: &Matrix,
) -> Result<BlockCycleReport, LinalgError> {
    let n = cycle_map.rows();
    if !cycle_map.is_square() || block_dim == 0 || n % block_dim != 0 {
        return Err(LinalgError::NotACycle("blocks do not tile the space".into()));
    }
    let l = n / block_dim;
    let block_of = |i: usize| i / block_dim;
    for j in 0..n {
        for i in 0..n {
            if cycle_map.get(i, j) != 0 && block_of(i) != (block_of(j) + 1) % l {
                return Err(LinalgError::NotACycle(format!(
                    "entry ({}, {}) leaves the cyclic block pattern",
                    i, j
                )));
            }
        }
    }
    let pw = cycle_map.pow(l as u64);
    let first = pw.submatrix(0..block_dim, 0..block_dim);
    let scalar = first
        .scalar_value()
        .ok_or_else(|| LinalgError::NotACycle("l-th power is not scalar on the first block".into()))?;
    if scalar == 0 {
        return Err(LinalgError::NotACycle("cycle map is singular".into()));
    }
    let f = cycle_map.field();
    let chi = charpoly(cycle_map)?;
    let shape = Polynomial::binomial(f, l, scalar).pow(block_dim as u32);
    let decomposition = chi.squarefree_decomposition()?;
    let mults: Vec<u32> = decomposition.iter().map(|(_, m)| *m).collect();
    let multiplicity = mults[0];
    if mults.iter().any(|&m| m != multiplicity) {
        return Err(LinalgError::NotACycle("eigenvalue multiplicities differ".into()));
    }
    Ok(BlockCycleReport {
        block_dim,
        cycle_length: l,
        scalar,
        charpoly_shape_ok: chi == shape,
        multiplicity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::make_field;

    #[test]
    fn swap_of_two_planes() {
        let f = make_field(7, 1, None).unwrap();
        // x maps block 0 to block 1 by the identity and back by the identity
        let x = Matrix::from_ints(&f, &[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let r = block_cycle_multiplicity_check(2, &x).unwrap();
        assert_eq!(r.multiplicity, 2);
        assert!(r.charpoly_shape_ok);
    }

    #[test]
    fn one_dimensional_blocks() {
        let f = make_field(7, 1, None).unwrap();
        let x = Matrix::from_ints(&f, &[&[0, 0, 3], &[1, 0, 0], &[0, 2, 0]]);
        assert_eq!(block_cycle_multiplicity_check(1, &x).unwrap().multiplicity, 1);
    }

    #[test]
    fn rejects_non_cycles() {
        let f = make_field(7, 1, None).unwrap();
        let x = Matrix::identity(&f, 4);
        assert!(matches!(
            block_cycle_multiplicity_check(2, &x),
            Err(LinalgError::NotACycle(_))
        ));
    }
}
