//! Whether a chosen element lies in the finite group `G(q)`, with the
//! identities checked.

use serde::Serialize;

use super::a2::a2_weyl_matrix;
use super::RepError;
use crate::galois::Field;
use crate::linalg::{charpoly, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembershipReport {
    pub group: String,
    pub holds: bool,
    pub certificate: Vec<IdentityCheck>,
}

impl MembershipReport {
    fn new(group: String, certificate: Vec<IdentityCheck>) -> Self {
        MembershipReport {
            group,
            holds: certificate.iter().all(|c| c.holds),
            certificate,
        }
    }
}

fn check(identity: impl Into<String>, holds: bool) -> IdentityCheck {
    IdentityCheck {
        identity: identity.into(),
        holds,
    }
}

pub(crate) fn determinant(m: &Matrix) -> Result<u64, RepError> {
    let f = m.field();
    let c0 = charpoly(m)?.coeff(0);
    Ok(if m.rows() % 2 == 0 { c0 } else { f.neg(c0) })
}

fn diag3(f: &Field, t1: u64, t2: u64) -> Result<Matrix, RepError> {
    let t3 = f
        .inv(f.mul(t1, t2))
        .ok_or_else(|| RepError::BadTorus("torus coordinates must be nonzero".into()))?;
    Ok(Matrix::diagonal(f, &[t1, t2, t3]))
}

/// `diag(t_1, t_2, (t_1 t_2)^{-1})` and the Weyl representative in `SL_3(q)`.
pub fn membership_sl3(field: &Field, q: u64, t1: u64, t2: u64) -> Result<MembershipReport, RepError> {
    let t = diag3(field, t1, t2)?;
    let w = a2_weyl_matrix(field);
    Ok(MembershipReport::new(
        format!("SL3({})", q),
        vec![
            check(format!("t1^{} = t1", q), field.in_subfield(t1, q)),
            check(format!("t2^{} = t2", q), field.in_subfield(t2, q)),
            check("det t = 1", determinant(&t)? == 1),
            check("det n_w = 1", determinant(&w)? == 1),
        ],
    ))
}

fn unitary_checks(name: &str, x: &Matrix, q: u64) -> Result<Vec<IdentityCheck>, RepError> {
    let f = x.field();
    let entries_ok = x.data().iter().all(|&c| f.in_subfield(c, q * q));
    let inv_t = x.inverse()?.transpose();
    Ok(vec![
        check(format!("{} has entries in GF({})", name, q * q), entries_ok),
        check(format!("det {} = 1", name), determinant(x)? == 1),
        check(format!("{0}^(-T) = {0}^({1})", name, q), inv_t == x.map_pow(q)),
    ])
}

/// Membership in `SU_3(q) = {x in SL_3(q^2) : x^{-T} = x^(q)}` of the
/// torus element and the Weyl representative; `field` contains GF(q^2).
pub fn membership_su3(field: &Field, q: u64, t1: u64, t2: u64) -> Result<MembershipReport, RepError> {
    let t = diag3(field, t1, t2)?;
    let mut cert = unitary_checks("t", &t, q)?;
    cert.extend(unitary_checks("n_w", &a2_weyl_matrix(field), q)?);
    Ok(MembershipReport::new(format!("SU3({})", q), cert))
}

/// Split `D_4(q)`: every root value lies in GF(q).
pub fn membership_d4(field: &Field, q: u64, a: &[u64; 4]) -> MembershipReport {
    let cert = a
        .iter()
        .enumerate()
        .map(|(i, &x)| check(format!("a{0}^{1} = a{0}", i + 1, q), x != 0 && field.in_subfield(x, q)))
        .collect();
    MembershipReport::new(format!("D4({})", q), cert)
}

/// Twisted `3D_4(q)`: fixed by triality followed by the q-power map, i.e.
/// `a_i = a_{perm(i)}^q` with `perm` the triality permutation.
pub fn membership_3d4(field: &Field, q: u64, a: &[u64; 4], perm: &[usize]) -> MembershipReport {
    let cert = (0..4)
        .map(|i| {
            let j = perm[i];
            check(
                format!("a{} = a{}^{}", i + 1, j + 1, q),
                a[i] != 0 && field.pow_exact(a[j], q) == a[i],
            )
        })
        .collect();
    MembershipReport::new(format!("3D4({})", q), cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su3_torus_of_order_q_plus_one() {
        for q in [5u64, 7, 11] {
            let f = Field::gf(q * q).unwrap();
            let t1 = f.pow(f.primitive(), q - 1);
            assert_eq!(f.order_of(t1), Some(q + 1));
            assert!(membership_su3(&f, q, t1, 1).unwrap().holds);
            let bad = f.primitive();
            assert!(!membership_su3(&f, q, bad, 1).unwrap().holds);
        }
    }

    #[test]
    fn sl3_requires_base_field() {
        let f = Field::gf(49).unwrap();
        assert!(membership_sl3(&f, 7, 3, 1).unwrap().holds);
        assert!(!membership_sl3(&f, 7, f.primitive(), 1).unwrap().holds);
    }
}
