//! Root finding in a finite field.

use super::field::Field;
use super::poly;
use super::{FieldElement, GaloisError};

/// Fields up to this size are searched exhaustively.
const EXHAUSTIVE_LIMIT: u64 = 1 << 16;

/// All roots in `f` of the polynomial with coefficient codes `coeffs`,
/// without multiplicity, in canonical enumeration order.
pub(crate) fn poly_roots(f: &Field, coeffs: &[u64]) -> Vec<u64> {
    let g = poly::trim(coeffs.to_vec());
    if g.len() <= 1 {
        return Vec::new();
    }
    let mut roots = if f.size() <= EXHAUSTIVE_LIMIT {
        f.elements()
            .filter(|&x| eval(f, &g, x) == 0)
            .collect::<Vec<_>>()
    } else {
        // split off the product of distinct linear factors, gcd(g, x^s - x)
        let g = poly::monic(f, &g);
        let xs = poly::powmod(f, &[0, 1], f.size() as u128, &g);
        let lin = poly::gcd(f, &g, &poly::sub(f, &xs, &[0, 1]));
        let mut out = Vec::new();
        split_linear(f, &lin, &mut out);
        out
    };
    roots.sort_by_key(|&r| f.rank(r));
    roots.dedup();
    roots
}

fn eval(f: &Field, g: &[u64], x: u64) -> u64 {
    g.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Equal-degree splitting of a monic product of distinct linear factors.
fn split_linear(f: &Field, g: &[u64], out: &mut Vec<u64>) {
    match g.len() {
        0 | 1 => {}
        2 => out.push(f.neg(g[0])),
        n => {
            let p = f.characteristic();
            for rank in 1..f.size() {
                let delta = f.from_rank(rank);
                let h = if p == 2 {
                    // trace of delta*x, sum of (delta x)^(2^i)
                    let m = f.total_degree();
                    let mut term = poly::rem(f, &[0, delta], g);
                    let mut acc = term.clone();
                    for _ in 1..m {
                        term = poly::mulmod(f, &term, &term, g);
                        acc = poly::add(f, &acc, &term);
                    }
                    poly::gcd(f, g, &acc)
                } else {
                    let e = ((f.size() - 1) / 2) as u128;
                    let pw = poly::powmod(f, &[delta, 1], e, g);
                    poly::gcd(f, g, &poly::sub(f, &pw, &[1]))
                };
                if h.len() > 1 && h.len() < n {
                    let (q, _) = poly::divrem(f, g, &h);
                    split_linear(f, &h, out);
                    split_linear(f, &poly::monic(f, &q), out);
                    return;
                }
            }
            unreachable!("splitting element exists for a product of distinct linears")
        }
    }
}

/// All k-th roots of `a` lying in `ambient`, in canonical enumeration order.
pub fn all_kth_roots(
    a: &FieldElement,
    k: usize,
    ambient: &Field,
) -> Result<Vec<FieldElement>, GaloisError> {
    if k == 0 {
        return Err(GaloisError::DegreeZero);
    }
    let c = ambient.embed_code(a.field(), a.code())?;
    if k == 1 {
        return Ok(vec![FieldElement::from_code(ambient, c)]);
    }
    let mut coeffs = vec![0u64; k + 1];
    coeffs[0] = ambient.neg(c);
    coeffs[k] = 1;
    Ok(poly_roots(ambient, &coeffs)
        .into_iter()
        .map(|r| FieldElement::from_code(ambient, r))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::make_field;

    #[test]
    fn cube_roots_of_six_mod_seven() {
        let f = make_field(7, 1, None).unwrap();
        let six = FieldElement::from_code(&f, 6);
        let r: Vec<u64> = all_kth_roots(&six, 3, &f)
            .unwrap()
            .iter()
            .map(|e| e.code())
            .collect();
        assert_eq!(r, vec![3, 5, 6]);
    }

    #[test]
    fn square_root_of_nonsquare_needs_extension() {
        let f = make_field(7, 1, None).unwrap();
        let three = FieldElement::from_code(&f, 3);
        assert!(all_kth_roots(&three, 2, &f).unwrap().is_empty());
        let f49 = make_field(7, 2, Some(&f)).unwrap();
        let r = all_kth_roots(&three, 2, &f49).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r[0].add(&r[1]).unwrap(), FieldElement::zero(&f49));
        assert_eq!(r[0].mul(&r[0]).unwrap().code(), 3);
    }

    #[test]
    fn splitting_path_agrees_with_enumeration() {
        // GF(2^17) is above the exhaustive limit
        let big = make_field(2, 17, None).unwrap();
        let g = big.primitive();
        let a = big.pow(g, 3 * 5);
        let roots = poly_roots(&big, &[big.neg(a), 0, 0, 1]);
        // 3 does not divide 2^17 - 1, so the cube root is unique
        assert_eq!(roots, vec![big.pow(g, 5)]);
        let sq = poly_roots(&big, &[big.neg(big.mul(a, a)), 0, 1]);
        assert_eq!(sq, vec![a]);
        // a product of three distinct linears
        let r1 = big.pow(g, 7);
        let r2 = big.pow(g, 11);
        let r3 = big.pow(g, 1000);
        let mut c = vec![1u64];
        for r in [r1, r2, r3] {
            c = poly::mul(&big, &c, &[r, 1]);
        }
        let mut expect = vec![r1, r2, r3];
        expect.sort_by_key(|&r| big.rank(r));
        assert_eq!(poly_roots(&big, &c), expect);
    }
}
