use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::gallai::BigCount;

/// `H(x) = -x log2 x - (1 - x) log2 (1 - x)`, with `H(0) = H(1) = 0`.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::InvalidParameter(format!("entropy argument {x} is outside [0, 1]")));
    }
    let term = |y: f64| if y == 0.0 { 0.0 } else { -y * y.log2() };
    Ok(term(x) + term(1.0 - x))
}

/// Exact `C(m, k)`.
pub fn binomial(m: u64, k: u64) -> BigCount {
    if k > m {
        return BigCount::zero();
    }
    let k = k.min(m - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (m - i) / (i + 1);
    }
    BigCount::from(acc)
}

fn pow(base: u64, exp: u64) -> BigUint {
    BigUint::from(base).pow(exp as u32)
}

/// Checks `C(m, k) <= 2^(H(k/m) m)` exactly.
///
/// `2^(H(k/m) m) = m^m / (k^k (m - k)^(m - k))`, so the comparison is done as
/// `C(m, k) k^k (m - k)^(m - k) <= m^m` on big integers (with `0^0 = 1`).
pub fn entropy_binomial_bound_check(m: u64, k: u64) -> Result<bool> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    if k > m {
        return Err(Error::InvalidParameter(format!("x m = {k} exceeds m = {m}")));
    }
    if m > u32::MAX as u64 {
        return Err(Error::Capacity(format!("m = {m} is too large for exact powers")));
    }
    let lhs = binomial(m, k).into_biguint() * pow(k, k) * pow(m - k, m - k);
    Ok(lhs <= pow(m, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entropy_values() {
        assert_eq!(binary_entropy(0.5).unwrap(), 1.0);
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0).unwrap(), 0.0);
        // -0.1 log2 0.1 - 0.9 log2 0.9 = 0.33219 + 0.13682
        assert!((binary_entropy(0.1).unwrap() - 0.4690).abs() < 1e-4);
        assert!(binary_entropy(-0.01).is_err());
        assert!(binary_entropy(1.01).is_err());
        assert!(binary_entropy(f64::NAN).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 5), BigCount::from(252));
        assert_eq!(binomial(20, 2), BigCount::from(190));
        assert_eq!(binomial(60, 3), BigCount::from(34220));
        assert_eq!(binomial(3, 4), BigCount::zero());
        assert_eq!(binomial(0, 0), BigCount::one());
    }

    #[test]
    fn bound_examples() {
        assert!(entropy_binomial_bound_check(10, 5).unwrap());
        assert!(entropy_binomial_bound_check(7, 0).unwrap());
        assert!(entropy_binomial_bound_check(20, 2).unwrap());
        assert!(entropy_binomial_bound_check(1, 1).unwrap());
        assert!(entropy_binomial_bound_check(0, 0).is_err());
        assert!(entropy_binomial_bound_check(3, 4).is_err());
    }

    #[test]
    fn bound_agrees_with_floating_point_for_m_20() {
        for k in 0..=20u64 {
            let h = binary_entropy(k as f64 / 20.0).unwrap();
            let lhs = binomial(20, k).to_u64().unwrap() as f64;
            assert!(lhs <= 2f64.powf(h * 20.0) * (1.0 + 1e-12));
        }
    }
}
