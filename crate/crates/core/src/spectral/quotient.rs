//! Equitable partitions, exact quotient matrices and characteristic
//! polynomials (Faddeev–LeVerrier over the rationals).

use super::poly::{q_int, Polynomial, Q};
use crate::error::{Error, Result};
use crate::graph::{refine_partition, Graph};
use num_traits::Zero;
use serde::Serialize;

/// Coarsest equitable refinement of `seed`.
pub fn equitable_partition(g: &Graph, seed: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let n = g.order();
    let mut seen = vec![false; n];
    for &v in seed.iter().flatten() {
        if v >= n || seen[v] {
            return Err(Error::Invalid(format!("seed is not a partition of 0..{n} (vertex {v})")));
        }
        seen[v] = true;
    }
    if seen.iter().any(|&s| !s) || seed.iter().any(Vec::is_empty) {
        return Err(Error::Invalid("seed does not cover every vertex with nonempty cells".into()));
    }
    Ok(refine_partition(g, seed.to_vec()))
}

/// The neighbour-count matrix if `cells` is equitable.
fn counts(g: &Graph, cells: &[Vec<usize>]) -> std::result::Result<Vec<Vec<usize>>, String> {
    let n = g.order();
    let mut cell_of = vec![usize::MAX; n];
    for (i, c) in cells.iter().enumerate() {
        for &v in c {
            if v >= n || cell_of[v] != usize::MAX {
                return Err(format!("vertex {v} repeated or out of range"));
            }
            cell_of[v] = i;
        }
    }
    if cell_of.contains(&usize::MAX) || cells.iter().any(Vec::is_empty) {
        return Err("cells must be nonempty and cover every vertex".into());
    }
    let k = cells.len();
    let mut b = vec![vec![0usize; k]; k];
    for (i, cell) in cells.iter().enumerate() {
        for (pos, &v) in cell.iter().enumerate() {
            let mut row = vec![0usize; k];
            for u in g.neighbors(v) {
                row[cell_of[u]] += 1;
            }
            if pos == 0 {
                b[i] = row;
            } else if row != b[i] {
                return Err(format!("vertices {} and {v} of cell {i} have different neighbour counts", cell[0]));
            }
        }
    }
    Ok(b)
}

pub fn is_equitable(g: &Graph, cells: &[Vec<usize>]) -> bool {
    counts(g, cells).is_ok()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientMatrix {
    pub cells: Vec<Vec<usize>>,
    pub sizes: Vec<usize>,
    /// `b[i][j]`: neighbours in cell `j` of any vertex of cell `i`.
    #[serde(serialize_with = "ser_matrix")]
    pub b: Vec<Vec<Q>>,
}

fn ser_matrix<S: serde::Serializer>(b: &[Vec<Q>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let text: Vec<Vec<String>> = b.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    serde::Serialize::serialize(&text, s)
}

/// Quotient of `g` by an equitable partition (error if not equitable).
pub fn quotient(g: &Graph, cells: &[Vec<usize>]) -> Result<QuotientMatrix> {
    let b = counts(g, cells).map_err(Error::NotEquitable)?;
    Ok(QuotientMatrix {
        cells: cells.to_vec(),
        sizes: cells.iter().map(Vec::len).collect(),
        b: b.into_iter().map(|r| r.into_iter().map(|x| q_int(x as i64)).collect()).collect(),
    })
}

impl QuotientMatrix {
    pub fn order(&self) -> usize {
        self.b.len()
    }

    /// Quotient of `A_α`: `α·diag(row sums) + (1−α)·B`.
    pub fn alpha(&self, alpha: &Q) -> Vec<Vec<Q>> {
        let one_minus = q_int(1) - alpha;
        self.b
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let deg: Q = row.iter().fold(Q::zero(), |a, x| a + x);
                row.iter()
                    .enumerate()
                    .map(|(j, x)| {
                        let off = &one_minus * x;
                        if i == j {
                            off + alpha * &deg
                        } else {
                            off
                        }
                    })
                    .collect()
            })
            .collect()
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.b.iter().map(|r| r.iter().map(super::poly::q_to_f64).collect()).collect()
    }
}

/// `det(xI − M)` by the Faddeev–LeVerrier recursion.
pub fn char_poly_matrix(m: &[Vec<Q>]) -> Polynomial {
    let n = m.len();
    let mut coeffs = vec![Q::zero(); n + 1];
    coeffs[n] = q_int(1);
    // mk = M_k with M_1 = I; c_{n−k} = −tr(M·M_k)/k; M_{k+1} = M·M_k + c_{n−k} I
    let mut mk: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| q_int((i == j) as i64)).collect()).collect();
    for k in 1..=n {
        let prod: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(Q::zero(), |acc, l| acc + &m[i][l] * &mk[l][j]))
                    .collect()
            })
            .collect();
        let trace = (0..n).fold(Q::zero(), |acc, i| acc + &prod[i][i]);
        let c = -trace / q_int(k as i64);
        coeffs[n - k] = c.clone();
        mk = prod;
        for (i, row) in mk.iter_mut().enumerate() {
            row[i] += &c;
        }
    }
    Polynomial::new(coeffs)
}

pub fn char_poly(q: &QuotientMatrix) -> Polynomial {
    char_poly_matrix(&q.b)
}

#[cfg(test)]
mod tests {
    use super::super::poly::{max_real_root, q_frac};
    use super::*;

    /// Oracle: `det(x0·I − M)` by Gaussian elimination at a rational point.
    fn det_at(m: &[Vec<Q>], x0: &Q) -> Q {
        let n = m.len();
        let mut a: Vec<Vec<Q>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { x0 - &m[i][j] } else { -m[i][j].clone() }).collect())
            .collect();
        let mut det = q_int(1);
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else { return Q::zero() };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let piv = a[col][col].clone();
            det *= &piv;
            for r in col + 1..n {
                let f = &a[r][col] / &piv;
                for c in col..n {
                    let sub = &f * &a[col][c];
                    a[r][c] -= sub;
                }
            }
        }
        det
    }

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&x| q_int(x)).collect()).collect()
    }

    #[test]
    fn faddeev_matches_elimination() {
        let m = int_matrix(&[&[1, 2, 6], &[2, 0, 3], &[2, 1, 0]]);
        let p = char_poly_matrix(&m);
        for x in [-3, -1, 0, 2, 5] {
            assert_eq!(p.eval(&q_int(x)), det_at(&m, &q_int(x)));
        }
        assert_eq!(p.eval(&q_frac(7, 3)), det_at(&m, &q_frac(7, 3)));
        let id = int_matrix(&[&[1, 0], &[0, 1]]);
        assert_eq!(char_poly_matrix(&id), Polynomial::from_ints(&[1, -2, 1]));
    }

    #[test]
    fn quotient_examples() {
        let c4 = Graph::cycle(4);
        let q = quotient(&c4, &[vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(q.b, int_matrix(&[&[2]]));
        assert_eq!(max_real_root(&char_poly(&q), 0.0).unwrap(), 2.0);
        let star = Graph::star(3);
        assert!(matches!(quotient(&star, &[vec![0, 1, 2, 3]]), Err(Error::NotEquitable(_))));
        let cells = equitable_partition(&star, &[vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(cells.len(), 2);
        assert!(is_equitable(&star, &cells));
        assert!(equitable_partition(&star, &[vec![0, 1]]).is_err());
    }

    #[test]
    fn alpha_quotient_rows() {
        let star = Graph::star(3);
        let q = quotient(&star, &[vec![0], vec![1, 2, 3]]).unwrap();
        let half = q_frac(1, 2);
        let qa = q.alpha(&half);
        assert_eq!(qa, vec![vec![q_frac(3, 2), q_frac(3, 2)], vec![q_frac(1, 2), q_frac(1, 2)]]);
    }
}
