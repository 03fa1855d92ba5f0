//! Finite-difference derivatives.

/// Fourth-order central stencil for f''(x); error O(h⁴) for smooth f.
/// The caller chooses `h`; the stencil is exact for cubics.
pub fn second_derivative<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (-f(x + 2.0 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2.0 * h))
        / (12.0 * h * h)
}
