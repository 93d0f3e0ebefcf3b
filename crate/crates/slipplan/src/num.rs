//! Scalar trait and normal-distribution kernels, generic over f32/f64.

/// Floating-point scalar the numeric kernels are written against.
pub trait Real:
    num_traits::Float + num_traits::FromPrimitive + std::fmt::Debug + Send + Sync + 'static
{
    /// Lift an `f64` constant into the scalar type.
    fn c(v: f64) -> Self {
        Self::from_f64(v).expect("constant representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Complementary error function, rational approximation accurate to
/// roughly machine precision in f64.
pub fn erfc<R: Real>(x: R) -> R {
    let y = x.abs();
    let r = if y <= R::c(0.46875) {
        R::one() - erf_small(y)
    } else if y <= R::c(4.0) {
        erfc_mid(y)
    } else {
        erfc_large(y)
    };
    if x < R::zero() {
        R::c(2.0) - r
    } else {
        r
    }
}

/// Error function.
pub fn erf<R: Real>(x: R) -> R {
    let y = x.abs();
    let r = if y <= R::c(0.46875) {
        erf_small(y)
    } else {
        R::one() - erfc(y)
    };
    if x < R::zero() {
        -r
    } else {
        r
    }
}

// |x| <= 0.46875
fn erf_small<R: Real>(y: R) -> R {
    const A: [f64; 5] = [
        3.16112374387056560e0,
        1.13864154151050156e2,
        3.77485237685302021e2,
        3.20937758913846947e3,
        1.85777706184603153e-1,
    ];
    const B: [f64; 4] = [
        2.36012909523441209e1,
        2.44024637934444173e2,
        1.28261652607737228e3,
        2.84423683343917062e3,
    ];
    let z = y * y;
    let mut num = R::c(A[4]) * z;
    let mut den = z;
    for i in 0..3 {
        num = (num + R::c(A[i])) * z;
        den = (den + R::c(B[i])) * z;
    }
    y * (num + R::c(A[3])) / (den + R::c(B[3]))
}

// 0.46875 < x <= 4
fn erfc_mid<R: Real>(y: R) -> R {
    const C: [f64; 9] = [
        5.64188496988670089e-1,
        8.88314979438837594e0,
        6.61191906371416295e1,
        2.98635138197400131e2,
        8.81952221241769090e2,
        1.71204761263407058e3,
        2.05107837782607147e3,
        1.23033935479799725e3,
        2.15311535474403846e-8,
    ];
    const D: [f64; 8] = [
        1.57449261107098347e1,
        1.17693950891312499e2,
        5.37181101862009858e2,
        1.62138957456669019e3,
        3.29079923573345963e3,
        4.36261909014324716e3,
        3.43936767414372164e3,
        1.23033935480374942e3,
    ];
    let mut num = R::c(C[8]) * y;
    let mut den = y;
    for i in 0..7 {
        num = (num + R::c(C[i])) * y;
        den = (den + R::c(D[i])) * y;
    }
    let frac = (num + R::c(C[7])) / (den + R::c(D[7]));
    scaled_exp(y) * frac
}

// x > 4
fn erfc_large<R: Real>(y: R) -> R {
    const P: [f64; 6] = [
        3.05326634961232344e-1,
        3.60344899949804439e-1,
        1.25781726111229246e-1,
        1.60837851487422766e-2,
        6.58749161529837803e-4,
        1.63153871373020978e-2,
    ];
    const Q: [f64; 5] = [
        2.56852019228982242e0,
        1.87295284992346047e0,
        5.27905102951428412e-1,
        6.05183413124413191e-2,
        2.33520497626869185e-3,
    ];
    // erfc underflows past ~26.5 in f64 (earlier in f32).
    if y * y > -R::min_positive_value().ln() {
        return R::zero();
    }
    let z = (y * y).recip();
    let mut num = R::c(P[5]) * z;
    let mut den = z;
    for i in 0..4 {
        num = (num + R::c(P[i])) * z;
        den = (den + R::c(Q[i])) * z;
    }
    let mut r = z * (num + R::c(P[4])) / (den + R::c(Q[4]));
    r = (R::c(std::f64::consts::FRAC_1_PI.sqrt()) - r) / y;
    scaled_exp(y) * r
}

// exp(-y^2) split to limit rounding in the argument.
fn scaled_exp<R: Real>(y: R) -> R {
    let sixteen = R::c(16.0);
    let ysq = (y * sixteen).trunc() / sixteen;
    let del = (y - ysq) * (y + ysq);
    (-ysq * ysq).exp() * (-del).exp()
}

/// Standard normal probability density.
pub fn std_normal_pdf<R: Real>(z: R) -> R {
    let inv_sqrt_2pi = R::c(0.39894228040143267794);
    inv_sqrt_2pi * (-z * z / R::c(2.0)).exp()
}

/// Normal density with the given mean and standard deviation (`sd > 0`).
pub fn normal_pdf<R: Real>(x: R, mean: R, sd: R) -> R {
    let z = (x - mean) / sd;
    std_normal_pdf(z) / sd
}

/// Normal cumulative distribution with the given mean and standard
/// deviation (`sd > 0`).
pub fn normal_cdf<R: Real>(x: R, mean: R, sd: R) -> R {
    let z = (x - mean) / (sd * R::c(std::f64::consts::SQRT_2));
    R::c(0.5) * erfc(-z)
}

/// Inverse standard normal CDF (Acklam's rational initializer, one Halley
/// polish against [`normal_cdf`]).
pub fn std_normal_inv_cdf<R: Real>(p: R) -> R {
    assert!(
        p > R::zero() && p < R::one(),
        "probability must be in (0, 1)"
    );
    const A: [f64; 6] = [
        -3.969683028665376e+01,
        2.209460984245205e+02,
        -2.759285104469687e+02,
        1.383577518672690e+02,
        -3.066479806614716e+01,
        2.506628277459239e+00,
    ];
    const B: [f64; 5] = [
        -5.447609879822406e+01,
        1.615858368580409e+02,
        -1.556989798598866e+02,
        6.680131188771972e+01,
        -1.328068155288572e+01,
    ];
    const C: [f64; 6] = [
        -7.784894002430293e-03,
        -3.223964580411365e-01,
        -2.400758277161838e+00,
        -2.549732539343734e+00,
        4.374664141464968e+00,
        2.938163982698783e+00,
    ];
    const D: [f64; 4] = [
        7.784695709041462e-03,
        3.224671290700398e-01,
        2.445134137142996e+00,
        3.754408661907416e+00,
    ];
    let p_low = R::c(0.02425);
    let mut x = if p < p_low {
        let q = (-R::c(2.0) * p.ln()).sqrt();
        (((((R::c(C[0]) * q + R::c(C[1])) * q + R::c(C[2])) * q + R::c(C[3])) * q + R::c(C[4]))
            * q
            + R::c(C[5]))
            / ((((R::c(D[0]) * q + R::c(D[1])) * q + R::c(D[2])) * q + R::c(D[3])) * q + R::one())
    } else if p <= R::one() - p_low {
        let q = p - R::c(0.5);
        let r = q * q;
        (((((R::c(A[0]) * r + R::c(A[1])) * r + R::c(A[2])) * r + R::c(A[3])) * r + R::c(A[4]))
            * r
            + R::c(A[5]))
            * q
            / (((((R::c(B[0]) * r + R::c(B[1])) * r + R::c(B[2])) * r + R::c(B[3])) * r
                + R::c(B[4]))
                * r
                + R::one())
    } else {
        let q = (-R::c(2.0) * (R::one() - p).ln()).sqrt();
        -((((((R::c(C[0]) * q + R::c(C[1])) * q + R::c(C[2])) * q + R::c(C[3])) * q
            + R::c(C[4]))
            * q
            + R::c(C[5]))
            / ((((R::c(D[0]) * q + R::c(D[1])) * q + R::c(D[2])) * q + R::c(D[3])) * q
                + R::one()))
    };
    // Halley step.
    let e = normal_cdf(x, R::zero(), R::one()) - p;
    let sqrt_2pi = R::c(2.5066282746310002);
    let u = e * sqrt_2pi * (x * x / R::c(2.0)).exp();
    x = x - u / (R::one() + x * u / R::c(2.0));
    x
}

/// Inverse normal CDF with the given mean and standard deviation.
pub fn normal_inv_cdf<R: Real>(p: R, mean: R, sd: R) -> R {
    mean + sd * std_normal_inv_cdf(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn erf_reference_points() {
        // Abscissas with well-known values.
        assert!((erf(0.0f64)).abs() < 1e-300);
        assert!((erf(1.0f64) - 0.8427007929497149).abs() < 1e-15);
        assert!((erfc(1.0f64) - 0.15729920705028513).abs() < 1e-15);
        assert!((erfc(5.0f64) - 1.5374597944280347e-12).abs() < 1e-24);
        assert!((erf(-1.0f64) + 0.8427007929497149).abs() < 1e-15);
        assert!((erfc(-2.0f64) - 1.9953222650189528).abs() < 1e-14);
    }

    #[test]
    fn erfc_underflows_cleanly() {
        assert_eq!(erfc(40.0f64), 0.0);
        assert_eq!(erfc(-40.0f64), 2.0);
    }

    #[test]
    fn normal_cdf_symmetry() {
        let f = normal_cdf(0.88f64, 0.88, 0.12);
        assert_eq!(f, 0.5);
        for &x in &[-3.0f64, -0.7, 0.1, 1.9, 4.2] {
            let a = normal_cdf(x, 0.0, 1.0);
            let b = normal_cdf(-x, 0.0, 1.0);
            assert!((a + b - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn inverse_cdf_round_trip() {
        for &p in &[1e-9f64, 1e-4, 0.05, 0.3, 0.5, 0.77, 0.95, 0.9999, 1.0 - 1e-9] {
            let x = std_normal_inv_cdf(p);
            let back = normal_cdf(x, 0.0, 1.0);
            assert!((back - p).abs() < 1e-13, "p={p} back={back}");
        }
    }

    #[test]
    fn kernels_instantiate_at_f32() {
        let f = normal_cdf(0.5f32, 0.0, 1.0);
        assert!((f - 0.691_462_5).abs() < 1e-5);
        let q = std_normal_inv_cdf(0.05f32);
        assert!((q + 1.644_85).abs() < 1e-4);
    }
}
