//! Characteristic-zero weight multiplicities by Freudenthal's recursion.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::time::Instant;

use num_rational::Rational64;
use num_traits::Zero;

use super::system::{RootSystem, Weight};
use super::RootError;

type Rat = Rational64;

/// All weight multiplicities of one irreducible module, indexed by
/// dominant weight.
#[derive(Debug, Clone)]
pub struct DominantCharacter {
    pub highest: Vec<i64>,
    /// Multiplicity of each dominant weight, in fundamental coordinates.
    pub multiplicities: BTreeMap<Vec<i64>, u64>,
}

impl DominantCharacter {
    pub fn multiplicity(&self, system: &RootSystem, mu: &[i64]) -> u64 {
        let d = system.dominant_int(mu);
        self.multiplicities.get(&d).copied().unwrap_or(0)
    }

    /// Sum of all weight multiplicities (the module dimension).
    pub fn total(&self, system: &RootSystem) -> u64 {
        self.multiplicities
            .iter()
            .map(|(w, m)| m * system.orbit_size(w))
            .sum()
    }
}

struct Form {
    q: Vec<Vec<Rat>>,
}

impl Form {
    fn new(system: &RootSystem) -> Self {
        let n = system.rank();
        let q = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| system.inner(&Weight::omega(n, i + 1), &Weight::omega(n, j + 1)))
                    .collect()
            })
            .collect();
        Form { q }
    }

    fn inner(&self, a: &[i64], b: &[i64]) -> Rat {
        let mut s = Rat::zero();
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    s += self.q[i][j] * Rat::from_integer(x * y);
                }
            }
        }
        s
    }
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add_scaled(a: &[i64], b: &[i64], k: i64) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + k * y).collect()
}

/// Whether `highest - mu` is a nonnegative integer combination of simple roots.
fn below(system: &RootSystem, highest: &[i64], mu: &[i64]) -> bool {
    match system.root_lattice_coords(&sub(highest, mu)) {
        Some(c) => c.iter().all(|&x| x >= 0),
        None => false,
    }
}

/// Dominant weights `mu <= highest`, sorted by decreasing height.
fn dominant_weights_below(system: &RootSystem, highest: &[i64], pos_fund: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut seen: HashMap<Vec<i64>, i64> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(highest.to_vec(), 0);
    queue.push_back((highest.to_vec(), 0));
    while let Some((w, depth)) = queue.pop_front() {
        for (a, root) in pos_fund.iter().zip(system.positive_roots()) {
            let v = sub(&w, a);
            if v.iter().all(|&x| x >= 0) && !seen.contains_key(&v) {
                let h: i64 = root.iter().sum();
                seen.insert(v.clone(), depth + h);
                queue.push_back((v, depth + h));
            }
        }
    }
    let mut out: Vec<(i64, Vec<i64>)> = seen.into_iter().map(|(w, _)| {
        let c = system.root_lattice_coords(&sub(highest, &w)).unwrap();
        (c.iter().sum(), w)
    }).collect();
    out.sort();
    out.into_iter().map(|(_, w)| w).collect()
}

/// Freudenthal's recursion over all dominant weights below `highest`.
/// Stops with `BudgetExceeded` once `deadline` passes.
pub fn dominant_character(
    system: &RootSystem,
    highest: &Weight,
    deadline: Option<Instant>,
) -> Result<DominantCharacter, RootError> {
    let lambda = highest
        .integral()
        .filter(|v| v.len() == system.rank() && v.iter().all(|&x| x >= 0))
        .ok_or(RootError::NotDominant)?;
    let form = Form::new(system);
    let pos_fund: Vec<Vec<i64>> = system
        .positive_roots()
        .iter()
        .map(|a| system.root_weight(a).integral().unwrap())
        .collect();
    let rho = vec![1; system.rank()];
    let lr = add_scaled(&lambda, &rho, 1);
    let norm_lr = form.inner(&lr, &lr);
    let mut mult: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for mu in dominant_weights_below(system, &lambda, &pos_fund) {
        if deadline.is_some_and(|d| Instant::now() > d) {
            return Err(RootError::BudgetExceeded);
        }
        if mu == lambda {
            mult.insert(mu, 1);
            continue;
        }
        let mr = add_scaled(&mu, &rho, 1);
        let denom = norm_lr - form.inner(&mr, &mr);
        let mut num = Rat::zero();
        for a in &pos_fund {
            let mut k = 1;
            loop {
                let nu = add_scaled(&mu, a, k);
                if !below(system, &lambda, &nu) {
                    break;
                }
                let d = system.dominant_int(&nu);
                if let Some(&m) = mult.get(&d) {
                    num += Rat::from_integer(m as i64) * form.inner(&nu, a);
                }
                k += 1;
            }
        }
        let m = Rat::from_integer(2) * num / denom;
        assert!(m.is_integer() && m >= Rat::zero(), "non-integral multiplicity");
        mult.insert(mu, m.to_integer() as u64);
    }
    mult.retain(|_, m| *m > 0);
    Ok(DominantCharacter {
        highest: lambda,
        multiplicities: mult,
    })
}

/// Characteristic-zero multiplicity of `mu` in the irreducible module with
/// the given dominant highest weight.
pub fn freudenthal_multiplicity(system: &RootSystem, highest: &Weight, mu: &Weight) -> Result<u64, RootError> {
    let ch = dominant_character(system, highest, None)?;
    let m = mu.integral().ok_or(RootError::NotIntegral)?;
    Ok(ch.multiplicity(system, &m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{build_root_system, TypeLetter};

    #[test]
    fn adjoint_multiplicities() {
        let a2 = build_root_system(TypeLetter::A, 2).unwrap();
        let adj = Weight::fundamental(&[1, 1]);
        assert_eq!(freudenthal_multiplicity(&a2, &adj, &Weight::zero(2)).unwrap(), 2);
        let alpha1 = a2.root_weight(&[1, 0]);
        assert_eq!(freudenthal_multiplicity(&a2, &adj, &alpha1).unwrap(), 1);
        let d4 = build_root_system(TypeLetter::D, 4).unwrap();
        assert_eq!(
            freudenthal_multiplicity(&d4, &Weight::omega(4, 2), &Weight::zero(4)).unwrap(),
            4
        );
    }

    #[test]
    fn non_weights_have_multiplicity_zero() {
        let a2 = build_root_system(TypeLetter::A, 2).unwrap();
        let adj = Weight::fundamental(&[1, 1]);
        let far = Weight::fundamental(&[3, 0]);
        assert_eq!(freudenthal_multiplicity(&a2, &adj, &far).unwrap(), 0);
        assert_eq!(
            freudenthal_multiplicity(&a2, &Weight::fundamental(&[-1, 1]), &far).unwrap_err(),
            RootError::NotDominant
        );
    }

    #[test]
    fn totals_match_weyl_dimension() {
        for (l, n, hw) in [
            (TypeLetter::B, 3, vec![2, 0, 0]),
            (TypeLetter::G, 2, vec![1, 1]),
            (TypeLetter::C, 3, vec![0, 1, 0]),
            (TypeLetter::A, 3, vec![0, 2, 0]),
        ] {
            let s = build_root_system(l, n).unwrap();
            let w = Weight::fundamental(&hw);
            let ch = dominant_character(&s, &w, None).unwrap();
            assert_eq!(Rat::from_integer(ch.total(&s) as i64), s.weyl_dimension(&w));
        }
    }
}
