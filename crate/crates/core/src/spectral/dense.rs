//! Dense symmetric eigensolvers: cyclic Jacobi and shifted power iteration.

/// Row-major square matrix of `f64`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> SymMatrix {
        SymMatrix { n, data: vec![0.0; n * n] }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks(self.n.max(1))
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        self.rows().map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }
}

/// Eigenvalues (ascending) and matching unit eigenvectors (as columns of
/// `vectors`, i.e. `vectors[k]` is the `k`-th eigenvector).
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm falls below
/// `1e−13·‖M‖`.
pub fn jacobi(m: &SymMatrix) -> Eigen {
    let n = m.order();
    let mut a = m.data.clone();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let norm = m.frobenius();
    let target = 1e-13 * norm;
    let mut sweeps = 0;
    loop {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j] * a[i * n + j])
            .sum::<f64>()
            .sqrt();
        if off <= target || sweeps >= 100 {
            break;
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    Eigen {
        values: idx.iter().map(|&i| a[i * n + i]).collect(),
        vectors: idx.iter().map(|&i| (0..n).map(|k| v[k * n + i]).collect()).collect(),
        sweeps,
    }
}

/// Largest eigenpair of a nonnegative irreducible symmetric operator by power
/// iteration on `M + shift·I`, finished with a Rayleigh quotient.
pub fn power_iteration(apply: impl Fn(&[f64]) -> Vec<f64>, n: usize, shift: f64, tol: f64, max_iter: usize) -> (f64, Vec<f64>) {
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut lambda = 0.0;
    for _ in 0..max_iter {
        let mx = apply(&x);
        let rq: f64 = mx.iter().zip(&x).map(|(a, b)| a * b).sum();
        let resid = mx.iter().zip(&x).map(|(a, b)| (a - rq * b).abs()).fold(0.0, f64::max);
        lambda = rq;
        let mut y: Vec<f64> = mx.iter().zip(&x).map(|(a, b)| a + shift * b).collect();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            return (0.0, x);
        }
        y.iter_mut().for_each(|v| *v /= norm);
        x = y;
        if resid <= tol * rq.abs().max(1.0) {
            break;
        }
    }
    (lambda, x)
}
