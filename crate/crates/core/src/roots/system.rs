//! Finite root systems in Bourbaki numbering.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::RootError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeLetter {
    pub fn parse(s: &str) -> Result<Self, RootError> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => TypeLetter::A,
            "B" => TypeLetter::B,
            "C" => TypeLetter::C,
            "D" => TypeLetter::D,
            "E" => TypeLetter::E,
            "F" => TypeLetter::F,
            "G" => TypeLetter::G,
            _ => return Err(RootError::InvalidType(s.to_string())),
        })
    }
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

impl Serialize for TypeLetter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

type Rat = Rational64;

fn r(n: i64) -> Rat {
    Rat::from_integer(n)
}

fn half(n: i64) -> Rat {
    Rat::new(n, 2)
}

/// A root system with its Cartan data.
#[derive(Debug, Clone)]
pub struct RootSystem {
    letter: TypeLetter,
    rank: usize,
    /// `cartan[i][j] = <alpha_i, alpha_j^vee>`.
    cartan: Vec<Vec<i64>>,
    /// Inverse Cartan matrix: row i gives omega_i in simple-root coordinates.
    cartan_inv: Vec<Vec<Rat>>,
    /// Symmetric form on simple roots, long roots of squared length 2.
    gram: Vec<Vec<Rat>>,
    /// Simple roots in epsilon coordinates, where a standard realization is used.
    simple_eps: Option<Vec<Vec<Rat>>>,
    positive_roots: Vec<Vec<i64>>,
}

/// Coordinate systems for weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Fundamental,
    SimpleRoot,
    Epsilon,
}

/// A weight, stored in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<Rat>,
}

impl Weight {
    pub fn fundamental(coords: &[i64]) -> Self {
        Weight {
            coords: coords.iter().map(|&c| r(c)).collect(),
        }
    }

    pub fn from_rational(coords: Vec<Rat>) -> Self {
        Weight { coords }
    }

    /// The fundamental weight omega_i (1-based, as in the usual notation).
    pub fn omega(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Self::fundamental(&v)
    }

    pub fn zero(rank: usize) -> Self {
        Self::fundamental(&vec![0; rank])
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// Integral fundamental coordinates, if integral.
    pub fn integral(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| *c >= Rat::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight {
            coords: self.coords.iter().map(|a| a * r(k)).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    format!("w{}", i + 1)
                } else {
                    format!("{}w{}", c, i + 1)
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn dynkin_gram(rank: usize, edges: &[(usize, usize)]) -> Vec<Vec<Rat>> {
    let mut g = vec![vec![r(0); rank]; rank];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = r(2);
    }
    for &(a, b) in edges {
        g[a - 1][b - 1] = r(-1);
        g[b - 1][a - 1] = r(-1);
    }
    g
}

fn eps_vec(dim: usize, entries: &[(usize, Rat)]) -> Vec<Rat> {
    let mut v = vec![r(0); dim];
    for &(i, c) in entries {
        v[i] += c;
    }
    v
}

fn simple_roots_eps(letter: TypeLetter, n: usize) -> Option<Vec<Vec<Rat>>> {
    use TypeLetter::*;
    let diff = |dim: usize, i: usize| eps_vec(dim, &[(i, r(1)), (i + 1, r(-1))]);
    Some(match letter {
        A => (0..n).map(|i| diff(n + 1, i)).collect(),
        B => {
            let mut v: Vec<_> = (0..n - 1).map(|i| diff(n, i)).collect();
            v.push(eps_vec(n, &[(n - 1, r(1))]));
            v
        }
        C => {
            let mut v: Vec<_> = (0..n - 1).map(|i| diff(n, i)).collect();
            v.push(eps_vec(n, &[(n - 1, r(2))]));
            v
        }
        D => {
            let mut v: Vec<_> = (0..n - 1).map(|i| diff(n, i)).collect();
            v.push(eps_vec(n, &[(n - 2, r(1)), (n - 1, r(1))]));
            v
        }
        F => vec![
            diff(4, 1),
            diff(4, 2),
            eps_vec(4, &[(3, r(1))]),
            vec![half(1), half(-1), half(-1), half(-1)],
        ],
        G => vec![diff(3, 0), eps_vec(3, &[(0, r(-2)), (1, r(1)), (2, r(1))])],
        E => return None,
    })
}

fn invert(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { r(1) } else { r(0) }).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero()).expect("invertible");
        a.swap(c, p);
        inv.swap(c, p);
        let s = a[c][c].recip();
        for j in 0..n {
            a[c][j] *= s;
            inv[c][j] *= s;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let k = a[i][c];
                for j in 0..n {
                    let (ac, ic) = (a[c][j], inv[c][j]);
                    a[i][j] -= k * ac;
                    inv[i][j] -= k * ic;
                }
            }
        }
    }
    inv
}

/// Builds the root system of the given type and rank.
pub fn build_root_system(letter: TypeLetter, rank: usize) -> Result<RootSystem, RootError> {
    use TypeLetter::*;
    let valid = match letter {
        A => rank >= 1,
        B | C => rank >= 2,
        D => rank >= 4,
        E => (6..=8).contains(&rank),
        F => rank == 4,
        G => rank == 2,
    };
    if !valid {
        return Err(RootError::InvalidType(format!("{}{}", letter, rank)));
    }
    let simple_eps = simple_roots_eps(letter, rank);
    let gram = match &simple_eps {
        Some(eps) => {
            let raw: Vec<Vec<Rat>> = eps
                .iter()
                .map(|a| {
                    eps.iter()
                        .map(|b| a.iter().zip(b).map(|(x, y)| x * y).sum())
                        .collect()
                })
                .collect();
            let longest = (0..rank).map(|i| raw[i][i]).max().unwrap();
            let s = r(2) / longest;
            raw.into_iter()
                .map(|row| row.into_iter().map(|x| x * s).collect())
                .collect()
        }
        None => {
            let mut edges = vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)];
            if rank >= 7 {
                edges.push((6, 7));
            }
            if rank == 8 {
                edges.push((7, 8));
            }
            dynkin_gram(rank, &edges)
        }
    };
    let cartan: Vec<Vec<i64>> = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| {
                    let v = r(2) * gram[i][j] / gram[j][j];
                    assert!(v.is_integer());
                    v.to_integer()
                })
                .collect()
        })
        .collect();
    let cartan_rat: Vec<Vec<Rat>> = cartan
        .iter()
        .map(|row| row.iter().map(|&x| r(x)).collect())
        .collect();
    let cartan_inv = invert(&cartan_rat);
    let positive_roots = positive_roots(&cartan);
    Ok(RootSystem {
        letter,
        rank,
        cartan,
        cartan_inv,
        gram,
        simple_eps,
        positive_roots,
    })
}

/// Positive roots in simple-root coordinates, by height then lexicographically.
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut level: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut ordered = Vec::new();
    while !level.is_empty() {
        level.sort();
        for b in &level {
            all.insert(b.clone());
        }
        ordered.extend(level.iter().cloned());
        let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
        for beta in &level {
            for i in 0..n {
                // pairing <beta, alpha_i^vee>
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        level = next.into_iter().collect();
    }
    ordered
}

impl RootSystem {
    pub fn letter(&self) -> TypeLetter {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.letter, self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<Rat>] {
        &self.gram
    }

    /// Positive roots in simple-root coordinates.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// All roots: positive ones followed by their negatives.
    pub fn roots(&self) -> Vec<Vec<i64>> {
        let mut v = self.positive_roots.clone();
        v.extend(self.positive_roots.iter().map(|a| a.iter().map(|x| -x).collect()));
        v
    }

    pub fn highest_root(&self) -> &[i64] {
        self.positive_roots.last().unwrap()
    }

    pub fn has_epsilon_coordinates(&self) -> bool {
        self.simple_eps.is_some()
    }

    /// Fundamental weights in simple-root coordinates (rows).
    pub fn fundamental_weights(&self) -> &[Vec<Rat>] {
        &self.cartan_inv
    }

    /// Half the sum of the positive roots, as a weight (all coordinates 1).
    pub fn weyl_vector(&self) -> Weight {
        Weight::fundamental(&vec![1; self.rank])
    }

    fn check(&self, w: &Weight) -> Result<(), RootError> {
        if w.coords.len() == self.rank {
            Ok(())
        } else {
            Err(RootError::WrongRank {
                expected: self.rank,
                found: w.coords.len(),
            })
        }
    }

    /// Simple-root coordinates of a weight.
    pub fn to_simple_root(&self, w: &Weight) -> Vec<Rat> {
        (0..self.rank)
            .map(|j| (0..self.rank).map(|i| w.coords[i] * self.cartan_inv[i][j]).sum())
            .collect()
    }

    pub fn from_simple_root(&self, c: &[Rat]) -> Weight {
        Weight {
            coords: (0..self.rank)
                .map(|j| (0..self.rank).map(|i| c[i] * r(self.cartan[i][j])).sum())
                .collect(),
        }
    }

    /// Root given in simple-root coordinates, as a weight.
    pub fn root_weight(&self, root: &[i64]) -> Weight {
        let c: Vec<Rat> = root.iter().map(|&x| r(x)).collect();
        self.from_simple_root(&c)
    }

    pub fn to_epsilon(&self, w: &Weight) -> Result<Vec<Rat>, RootError> {
        let eps = self
            .simple_eps
            .as_ref()
            .ok_or_else(|| RootError::NoEpsilonCoordinates(self.name()))?;
        let c = self.to_simple_root(w);
        let dim = eps[0].len();
        Ok((0..dim)
            .map(|k| (0..self.rank).map(|i| c[i] * eps[i][k]).sum())
            .collect())
    }

    /// Inverse of [`RootSystem::to_epsilon`] for vectors in the span of the roots.
    pub fn from_epsilon(&self, v: &[Rat]) -> Result<Weight, RootError> {
        let eps = self
            .simple_eps
            .as_ref()
            .ok_or_else(|| RootError::NoEpsilonCoordinates(self.name()))?;
        // <v, alpha_j^vee> = 2 (v, alpha_j) / (alpha_j, alpha_j) in the epsilon form
        let coords = eps
            .iter()
            .map(|a| {
                let va: Rat = v.iter().zip(a).map(|(x, y)| x * y).sum();
                let aa: Rat = a.iter().map(|x| x * x).sum();
                r(2) * va / aa
            })
            .collect();
        let w = Weight { coords };
        if self.to_epsilon(&w)? != v {
            return Err(RootError::NotInRootSpan);
        }
        Ok(w)
    }

    pub fn weight_in(&self, w: &Weight, basis: Basis) -> Result<Vec<Rat>, RootError> {
        self.check(w)?;
        match basis {
            Basis::Fundamental => Ok(w.coords.clone()),
            Basis::SimpleRoot => Ok(self.to_simple_root(w)),
            Basis::Epsilon => self.to_epsilon(w),
        }
    }

    pub fn weight_from(&self, coords: &[Rat], basis: Basis) -> Result<Weight, RootError> {
        let w = match basis {
            Basis::Fundamental => Weight {
                coords: coords.to_vec(),
            },
            Basis::SimpleRoot => self.from_simple_root(coords),
            Basis::Epsilon => return self.from_epsilon(coords),
        };
        self.check(&w)?;
        Ok(w)
    }

    /// The invariant form `(a, b)`, long roots of squared length 2.
    pub fn inner(&self, a: &Weight, b: &Weight) -> Rat {
        let ca = self.to_simple_root(a);
        let cb = self.to_simple_root(b);
        let mut s = r(0);
        for i in 0..self.rank {
            if ca[i].is_zero() {
                continue;
            }
            for j in 0..self.rank {
                s += ca[i] * self.gram[i][j] * cb[j];
            }
        }
        s
    }

    /// Simple reflection `s_i` (0-based) on fundamental coordinates.
    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let a = w.coords[i];
        Weight {
            coords: (0..self.rank).map(|j| w.coords[j] - a * r(self.cartan[i][j])).collect(),
        }
    }

    fn reflect_int(&self, w: &mut [i64], i: usize) {
        let a = w[i];
        if a != 0 {
            for j in 0..self.rank {
                w[j] -= a * self.cartan[i][j];
            }
        }
    }

    /// Dominant representative of the Weyl orbit of an integral weight.
    pub fn dominant_int(&self, w: &[i64]) -> Vec<i64> {
        let mut v = w.to_vec();
        while let Some(i) = (0..self.rank).find(|&i| v[i] < 0) {
            self.reflect_int(&mut v, i);
        }
        v
    }

    /// Orbit of an integral weight under the Weyl group, sorted.
    pub fn orbit_int(&self, w: &[i64]) -> Vec<Vec<i64>> {
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.to_vec());
        queue.push_back(w.to_vec());
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank {
                if v[i] == 0 {
                    continue;
                }
                let mut u = v.clone();
                self.reflect_int(&mut u, i);
                if seen.insert(u.clone()) {
                    queue.push_back(u);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Order of the Weyl group, as the orbit size of a regular weight.
    /// Enumerates the orbit, so only practical below rank 7.
    pub fn weyl_group_order(&self) -> u64 {
        self.orbit_size(&vec![1; self.rank])
    }

    /// Orbit size of an integral weight via its dominant representative.
    pub fn orbit_size(&self, w: &[i64]) -> u64 {
        self.orbit_int(w).len() as u64
    }

    /// Weyl dimension formula for a dominant integral weight.
    pub fn weyl_dimension(&self, highest: &Weight) -> Rat {
        let lr = highest.add(&self.weyl_vector());
        let rho = self.weyl_vector();
        let mut d = r(1);
        for a in &self.positive_roots {
            let aw = self.root_weight(a);
            d *= self.inner(&lr, &aw) / self.inner(&rho, &aw);
        }
        d
    }

    /// Simple-root coordinates of an integral weight in the root lattice,
    /// if it lies there.
    pub(crate) fn root_lattice_coords(&self, w: &[i64]) -> Option<Vec<i64>> {
        let wt = Weight::fundamental(w);
        self.to_simple_root(&wt)
            .into_iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

/// Full Weyl orbit of a weight, in sorted order.
pub fn weyl_orbit(system: &RootSystem, w: &Weight) -> Result<Vec<Weight>, RootError> {
    system.check(w)?;
    if let Some(v) = w.integral() {
        return Ok(system
            .orbit_int(&v)
            .into_iter()
            .map(|c| Weight::fundamental(&c))
            .collect());
    }
    let mut seen: BTreeSet<Weight> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(v) = queue.pop_front() {
        for i in 0..system.rank {
            let u = system.reflect(&v, i);
            if seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(l: TypeLetter, n: usize) -> RootSystem {
        build_root_system(l, n).unwrap()
    }

    #[test]
    fn classical_root_counts() {
        use TypeLetter::*;
        let expect = [
            (A, 2, 3),
            (A, 3, 6),
            (B, 3, 9),
            (C, 3, 9),
            (D, 4, 12),
            (E, 6, 36),
            (E, 7, 63),
            (E, 8, 120),
            (F, 4, 24),
            (G, 2, 6),
        ];
        for (l, n, k) in expect {
            assert_eq!(sys(l, n).positive_roots().len(), k, "{}{}", l, n);
        }
    }

    #[test]
    fn cartan_diagonal_is_two() {
        for (l, n) in [(TypeLetter::B, 3), (TypeLetter::G, 2), (TypeLetter::F, 4)] {
            let s = sys(l, n);
            assert!((0..n).all(|i| s.cartan()[i][i] == 2));
        }
        let g2 = sys(TypeLetter::G, 2);
        assert_eq!(g2.cartan()[1][0], -3);
    }

    #[test]
    fn invalid_types() {
        assert!(build_root_system(TypeLetter::D, 3).is_err());
        assert!(build_root_system(TypeLetter::E, 9).is_err());
        assert!(build_root_system(TypeLetter::B, 1).is_err());
    }

    #[test]
    fn a2_adjoint_is_sum_of_simple_roots() {
        let s = sys(TypeLetter::A, 2);
        let w = Weight::fundamental(&[1, 1]);
        assert_eq!(s.to_simple_root(&w), vec![r(1), r(1)]);
        assert_eq!(s.highest_root(), &[1, 1]);
    }

    #[test]
    fn d4_highest_root() {
        let s = sys(TypeLetter::D, 4);
        assert_eq!(s.highest_root(), &[1, 2, 1, 1]);
        let hw = s.root_weight(s.highest_root());
        assert_eq!(hw, Weight::omega(4, 2));
        assert_eq!(s.to_epsilon(&hw).unwrap(), vec![r(1), r(1), r(0), r(0)]);
        assert_eq!(s.roots().len(), 24);
    }

    #[test]
    fn basis_roundtrip() {
        let s = sys(TypeLetter::B, 3);
        let w = Weight::fundamental(&[1, 0, 3]);
        for b in [Basis::Fundamental, Basis::SimpleRoot, Basis::Epsilon] {
            let c = s.weight_in(&w, b).unwrap();
            assert_eq!(s.weight_from(&c, b).unwrap(), w);
        }
    }

    #[test]
    fn orbit_sizes() {
        let a2 = sys(TypeLetter::A, 2);
        assert_eq!(weyl_orbit(&a2, &Weight::omega(2, 1)).unwrap().len(), 3);
        let d4 = sys(TypeLetter::D, 4);
        assert_eq!(weyl_orbit(&d4, &Weight::omega(4, 2)).unwrap().len(), 24);
        let a3 = sys(TypeLetter::A, 3);
        assert_eq!(weyl_orbit(&a3, &Weight::omega(3, 2).scale(2)).unwrap().len(), 6);
        assert_eq!(d4.weyl_group_order(), 192);
        assert_eq!(sys(TypeLetter::G, 2).weyl_group_order(), 12);
    }

    #[test]
    fn weyl_dimensions() {
        let d4 = sys(TypeLetter::D, 4);
        assert_eq!(d4.weyl_dimension(&Weight::omega(4, 2)), r(28));
        let a3 = sys(TypeLetter::A, 3);
        assert_eq!(a3.weyl_dimension(&Weight::omega(3, 2).scale(2)), r(20));
        let g2 = sys(TypeLetter::G, 2);
        assert_eq!(g2.weyl_dimension(&Weight::omega(2, 1)), r(7));
    }
}
