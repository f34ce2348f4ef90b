//! Gauss-Legendre quadrature.
//!
//! Nodes and weights are computed by Newton iteration on the Legendre
//! polynomial recurrence. Rules on an interval `[a, b]` are affine images of
//! the reference rule on `[-1, 1]`.

/// A one-dimensional quadrature rule: paired nodes and weights.
#[derive(Debug, Clone)]
pub struct QuadRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadRule {
    /// Gauss-Legendre rule with `n` nodes on `[-1, 1]`.
    pub fn gauss_legendre(n: usize) -> Self {
        assert!(n >= 1, "quadrature rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        // Roots come in +/- pairs; solve for the non-negative half.
        for i in 0..n.div_ceil(2) {
            // Tricomi-style initial guess.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        QuadRule { nodes, weights }
    }

    /// Gauss-Legendre rule mapped to `[a, b]`.
    pub fn gauss_legendre_on(n: usize, a: f64, b: f64) -> Self {
        let reference = Self::gauss_legendre(n);
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        QuadRule {
            nodes: reference.nodes.iter().map(|x| mid + half * x).collect(),
            weights: reference.weights.iter().map(|w| w * half).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Integrate a function over the rule's interval.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Legendre polynomial `P_n(x)` and its derivative by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_interval_length() {
        for n in [1, 2, 5, 64, 512] {
            let rule = QuadRule::gauss_legendre_on(n, 0.0, 3.0);
            let total: f64 = rule.weights.iter().sum();
            assert!((total - 3.0).abs() < 1e-12, "n = {n}: sum = {total}");
        }
    }

    #[test]
    fn exact_for_polynomials_of_degree_2n_minus_1() {
        let rule = QuadRule::gauss_legendre_on(8, 0.0, 1.0);
        // x^15 integrates to 1/16 on [0,1].
        let got = rule.integrate(|x| x.powi(15));
        assert!((got - 1.0 / 16.0).abs() < 1e-14, "got {got}");
    }

    #[test]
    fn matches_known_five_point_rule() {
        let rule = QuadRule::gauss_legendre(5);
        let known = [
            -0.9061798459386640,
            -0.5384693101056831,
            0.0,
            0.5384693101056831,
            0.9061798459386640,
        ];
        for (x, k) in rule.nodes.iter().zip(known) {
            assert!((x - k).abs() < 1e-14);
        }
        assert!((rule.weights[2] - 0.5688888888888889).abs() < 1e-14);
    }

    #[test]
    fn resolves_oscillatory_integrands() {
        // 512 nodes must integrate cos(64 pi t) on [0, 1] to machine precision.
        let rule = QuadRule::gauss_legendre_on(512, 0.0, 1.0);
        let got = rule.integrate(|t| (64.0 * std::f64::consts::PI * t).cos());
        assert!(got.abs() < 1e-13, "got {got}");
        let got2 = rule.integrate(|t| (64.0 * std::f64::consts::PI * t).cos().powi(2));
        assert!((got2 - 0.5).abs() < 1e-13, "got {got2}");
    }
}
