//! Exact arithmetic for the coefficient side of the engine: rationals,
//! polynomials and rational functions in `n`, and the ring `K(n)[x]` with
//! `x^2 = 1` together with its shift action.

mod coef;
mod poly;
mod ratfunc;

pub use coef::CoefElem;
pub use poly::PolyN;
pub use ratfunc::RatFunc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;
use crate::Result;

/// Substitute `n -> n + k` in a rational function.
pub fn shift_ratfunc(r: &RatFunc, k: i64) -> RatFunc {
    r.shift(k)
}

/// Apply `sigma^k` to a coefficient.
pub fn coef_sigma(c: &CoefElem, k: i64) -> CoefElem {
    c.sigma(k)
}

/// Dispersion of two nonzero polynomials:
/// `max { k >= 0 | gcd(f(n), g(n+k)) != 1 }`, or `None` when no such `k`
/// exists. Computed from the integer roots of the resultant
/// `Res_n(f(n), g(n+k))` viewed as a polynomial in `k`; the resultant
/// itself is recovered by Lagrange interpolation from exact evaluations.
pub fn dispersion(f: &PolyN, g: &PolyN) -> Result<Option<u64>> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        unreachable!()
    };
    if df == 0 || dg == 0 {
        // constants are units: no nontrivial gcd at any shift
        return Ok(None);
    }
    // deg_k Res_n(f(n), g(n+k)) <= deg f * deg g
    let deg_bound = df * dg;
    let samples: Vec<(i64, crate::number::Rational)> = (0..=deg_bound as i64)
        .map(|k| (k, f.resultant(&g.shift(k))))
        .collect();
    let res_in_k = lagrange_interpolate(&samples);
    debug_assert!(!res_in_k.is_zero(), "resultant cannot vanish identically");
    let mut best: Option<u64> = None;
    for root in res_in_k.integer_roots() {
        if root < BigInt::zero() {
            continue;
        }
        let k: u64 = root.try_into().expect("root within scanned range");
        // the root of the resultant certifies a common factor; confirm with
        // an exact gcd so interpolation can never overstate the answer
        if !f.gcd(&g.shift(k as i64)).is_constant() {
            best = Some(best.map_or(k, |b| b.max(k)));
        }
    }
    Ok(best)
}

/// Membership test for `K[n]_P`: true iff the denominator of `r` is a
/// nonzero constant times a product of the polynomials in `P` with at
/// least one positive exponent, and the numerator is coprime to all of
/// them. Constant members of `P` fold into the scalar and contribute no
/// exponent.
pub fn in_kn_p(r: &RatFunc, p_set: &[PolyN]) -> Result<bool> {
    let mut rest = r.den().clone();
    let mut exponent_total = 0u64;
    for p in p_set {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if p.is_constant() {
            continue;
        }
        let prim = p.primitive();
        while rest.divisible_by(&prim) {
            rest = rest.exact_div(&prim);
            exponent_total += 1;
        }
    }
    if !rest.is_constant() || exponent_total == 0 {
        return Ok(false);
    }
    for p in p_set {
        if p.is_constant() {
            continue;
        }
        if !r.num().gcd(p).is_constant() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Reconstructs the unique polynomial of degree `< samples.len()` through
/// the exact sample points `(k, value)`.
fn lagrange_interpolate(samples: &[(i64, crate::number::Rational)]) -> PolyN {
    use crate::number::Rational;
    let mut acc = PolyN::zero();
    for (i, (xi, yi)) in samples.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = PolyN::one();
        let mut denom = Rational::from_integer(BigInt::from(1));
        for (j, (xj, _)) in samples.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = &basis * &PolyN::linear(1, -xj);
            denom *= Rational::from_integer(BigInt::from(xi - xj));
        }
        acc = &acc + &basis.scale(&(yi / denom));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::{rat_int, Rational};

    fn p(coeffs: &[i64]) -> PolyN {
        PolyN::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    /// Brute-force dispersion oracle: scan shifts directly.
    fn dispersion_brute(f: &PolyN, g: &PolyN, k_max: i64) -> Option<u64> {
        let mut best = None;
        for k in 0..=k_max {
            if !f.gcd(&g.shift(k)).is_constant() {
                best = Some(k as u64);
            }
        }
        best
    }

    #[test]
    fn dispersion_examples() {
        assert_eq!(dispersion(&p(&[3, 1]), &p(&[0, 1])).unwrap(), Some(3));
        assert_eq!(dispersion(&p(&[0, 1]), &p(&[0, 1])).unwrap(), Some(0));
        assert_eq!(dispersion(&p(&[3, 2]), &p(&[1, 1])).unwrap(), None);
    }

    #[test]
    fn dispersion_rejects_zero() {
        assert_eq!(
            dispersion(&PolyN::zero(), &p(&[1, 1])),
            Err(Error::ZeroPolynomial)
        );
        assert_eq!(
            dispersion(&p(&[1, 1]), &PolyN::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn dispersion_constants_have_none() {
        assert_eq!(dispersion(&p(&[5]), &p(&[0, 1])).unwrap(), None);
    }

    #[test]
    fn dispersion_matches_brute_force() {
        // a small family of products of linear forms and quadratics
        let cases = [
            (&p(&[-1, 1]) * &p(&[5, 1]), p(&[0, 1])),
            (&p(&[0, 1]) * &p(&[-7, 1]), &p(&[-2, 1]) * &p(&[3, 1])),
            (p(&[1, 0, 1]), p(&[1, 0, 1])),
            (p(&[2, 3]), p(&[1, 3])),
            (&p(&[-4, 2]) * &p(&[1, 1]), p(&[-1, 2])),
        ];
        for (f, g) in cases {
            assert_eq!(
                dispersion(&f, &g).unwrap(),
                dispersion_brute(&f, &g, 50),
                "mismatch for f={f}, g={g}"
            );
        }
    }

    #[test]
    fn kn_p_membership() {
        let n_plus_1 = p(&[1, 1]);
        // 1/(n+1)^2 in K[n]_{n+1}
        let r = RatFunc::new(p(&[1]), &n_plus_1 * &n_plus_1).unwrap();
        assert!(in_kn_p(&r, std::slice::from_ref(&n_plus_1)).unwrap());
        // a polynomial has exponent vector zero
        let r = RatFunc::from_poly(p(&[5, 1]));
        assert!(!in_kn_p(&r, std::slice::from_ref(&n_plus_1)).unwrap());
        // a denominator factor outside P
        let r = RatFunc::new(p(&[1]), &n_plus_1 * &p(&[3, 2])).unwrap();
        assert!(!in_kn_p(&r, std::slice::from_ref(&n_plus_1)).unwrap());
        // numerator must stay coprime to P
        let r = RatFunc::new(p(&[2, 2]), &n_plus_1 * &n_plus_1).unwrap();
        assert!(!in_kn_p(&r, std::slice::from_ref(&n_plus_1)).unwrap());
        // zero member of P is an error
        assert!(in_kn_p(&r, &[PolyN::zero()]).is_err());
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let q = p(&[2, -3, 0, 1]);
        let samples: Vec<(i64, Rational)> = (0..=3).map(|k| (k, q.eval_int(k))).collect();
        assert_eq!(lagrange_interpolate(&samples), q);
    }
}
