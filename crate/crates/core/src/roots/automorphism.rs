//! Automorphisms of Dynkin diagrams and their action on weights.

use serde::Serialize;

use super::system::{RootSystem, TypeLetter, Weight};
use super::RootError;

/// A permutation of the simple roots preserving the Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramAutomorphism {
    /// `perm[i]` is the image of simple root `i` (0-based).
    pub perm: Vec<usize>,
    pub order: u32,
}

impl DiagramAutomorphism {
    /// `sum a_i omega_i -> sum a_i omega_perm(i)`.
    pub fn apply_weight(&self, w: &Weight) -> Weight {
        let c = w.coords();
        let mut out = c.to_vec();
        for (i, &j) in self.perm.iter().enumerate() {
            out[j] = c[i];
        }
        Weight::from_rational(out)
    }

    /// Image of a root in simple-root coordinates.
    pub fn apply_root(&self, root: &[i64]) -> Vec<i64> {
        let mut out = vec![0; root.len()];
        for (i, &j) in self.perm.iter().enumerate() {
            out[j] = root[i];
        }
        out
    }

    pub fn fixes(&self, w: &Weight) -> bool {
        self.apply_weight(w) == *w
    }

    pub fn preserves_cartan(&self, system: &RootSystem) -> bool {
        let c = system.cartan();
        let n = self.perm.len();
        n == system.rank()
            && (0..n).all(|i| (0..n).all(|j| c[i][j] == c[self.perm[i]][self.perm[j]]))
    }

    /// Least `k >= 1` with `perm^k = id`.
    pub fn actual_order(&self) -> u32 {
        let mut cur: Vec<usize> = self.perm.clone();
        let mut k = 1;
        while cur.iter().enumerate().any(|(i, &j)| i != j) {
            cur = cur.iter().map(|&j| self.perm[j]).collect();
            k += 1;
        }
        k
    }
}

/// The diagram automorphism of the given order: the flip of `A_n` (n >= 2),
/// the swap of the two end nodes of `D_n`, triality on `D_4`
/// (`alpha_1 -> alpha_4 -> alpha_3 -> alpha_1`) and the flip of `E_6`.
pub fn diagram_automorphism(system: &RootSystem, order: u32) -> Result<DiagramAutomorphism, RootError> {
    let n = system.rank();
    let mut perm: Vec<usize> = (0..n).collect();
    match (system.letter(), order) {
        (TypeLetter::A, 2) if n >= 2 => perm.reverse(),
        (TypeLetter::D, 2) => perm.swap(n - 2, n - 1),
        (TypeLetter::D, 3) if n == 4 => perm = vec![3, 1, 0, 2],
        (TypeLetter::E, 2) if n == 6 => {
            perm.swap(0, 5);
            perm.swap(2, 4);
        }
        _ => {
            return Err(RootError::NoSuchAutomorphism {
                name: system.name(),
                order,
            })
        }
    }
    let tau = DiagramAutomorphism { perm, order };
    debug_assert!(tau.preserves_cartan(system) && tau.actual_order() == order);
    Ok(tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::build_root_system;
    use std::collections::BTreeSet;

    fn sys(l: TypeLetter, n: usize) -> RootSystem {
        build_root_system(l, n).unwrap()
    }

    #[test]
    fn triality_cycle() {
        let d4 = sys(TypeLetter::D, 4);
        let t = diagram_automorphism(&d4, 3).unwrap();
        assert_eq!(t.apply_root(&[1, 0, 0, 0]), vec![0, 0, 0, 1]);
        assert_eq!(t.apply_root(&[0, 0, 1, 0]), vec![1, 0, 0, 0]);
        assert_eq!(t.apply_root(&[0, 0, 0, 1]), vec![0, 0, 1, 0]);
        assert!(t.fixes(&Weight::omega(4, 2)));
        assert!(!t.fixes(&Weight::omega(4, 1)));
    }

    #[test]
    fn flips_fix_expected_weights() {
        let a3 = sys(TypeLetter::A, 3);
        let t = diagram_automorphism(&a3, 2).unwrap();
        assert_eq!(t.perm, vec![2, 1, 0]);
        assert!(t.fixes(&Weight::fundamental(&[0, 2, 0])));
        let a2 = sys(TypeLetter::A, 2);
        let t = diagram_automorphism(&a2, 2).unwrap();
        assert_eq!(t.apply_weight(&Weight::omega(2, 1)), Weight::omega(2, 2));
        assert!(t.fixes(&Weight::fundamental(&[1, 1])));
    }

    #[test]
    fn automorphisms_preserve_roots_and_cartan() {
        for (l, n, k) in [
            (TypeLetter::A, 2, 2),
            (TypeLetter::A, 5, 2),
            (TypeLetter::D, 4, 2),
            (TypeLetter::D, 4, 3),
            (TypeLetter::D, 6, 2),
            (TypeLetter::E, 6, 2),
        ] {
            let s = sys(l, n);
            let t = diagram_automorphism(&s, k).unwrap();
            assert!(t.preserves_cartan(&s));
            assert_eq!(t.actual_order(), k);
            let roots: BTreeSet<Vec<i64>> = s.positive_roots().iter().cloned().collect();
            let images: BTreeSet<Vec<i64>> = s.positive_roots().iter().map(|a| t.apply_root(a)).collect();
            assert_eq!(roots, images);
        }
    }

    #[test]
    fn missing_automorphisms() {
        for (l, n, k) in [
            (TypeLetter::A, 1, 2),
            (TypeLetter::B, 3, 2),
            (TypeLetter::D, 5, 3),
            (TypeLetter::E, 7, 2),
            (TypeLetter::G, 2, 2),
        ] {
            assert!(matches!(
                diagram_automorphism(&sys(l, n), k),
                Err(RootError::NoSuchAutomorphism { .. })
            ));
        }
    }
}
