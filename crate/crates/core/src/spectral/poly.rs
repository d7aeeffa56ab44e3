//! Univariate polynomials over the rationals, Sturm sequences and certified
//! root isolation.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

pub type Q = BigRational;

pub fn q_int(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn q_frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Exact rational value of a finite float.
pub fn q_from_f64(x: f64) -> Q {
    Q::from_float(x).expect("finite float")
}

pub fn q_to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Dense polynomial with ascending coefficients; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Q>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Q>) -> Polynomial {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&c| q_int(c)).collect())
    }

    pub fn zero() -> Polynomial {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Q) -> Polynomial {
        Polynomial::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Q> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &Q) -> Ordering {
        self.eval(x).cmp(&Q::zero())
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + q_to_f64(c))
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * q_int(i as i64))
                .collect(),
        )
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &Polynomial, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(Q::zero);
        Polynomial::new((0..n).map(|i| get(self, i) + get(other, i)).collect())
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&q_int(-1)))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return (Polynomial::zero(), self.clone());
        };
        let mut quot = vec![Q::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            Some(l) => self.scale(&(Q::one() / l)),
            None => Polynomial::zero(),
        }
    }

    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Same roots, all simple.
    pub fn square_free(&self) -> Polynomial {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }

    /// Sturm sequence `p, p', −rem(p, p'), …`.
    pub fn sturm(&self) -> Vec<Polynomial> {
        let mut seq = vec![self.clone(), self.derivative()];
        while !seq.last().unwrap().is_zero() {
            let k = seq.len();
            let r = seq[k - 2].div_rem(&seq[k - 1]).1;
            seq.push(r.scale(&q_int(-1)));
        }
        seq.pop();
        seq
    }

    /// Cauchy bound: every real root has absolute value below the result.
    pub fn root_bound(&self) -> Q {
        let lead = self.leading().expect("nonzero polynomial").abs();
        let m = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs() / &lead)
            .max()
            .unwrap_or_else(Q::zero);
        (m + Q::one()).ceil()
    }
}

fn sign_changes(seq: &[Polynomial], x: &Q) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for p in seq {
        let s = p.sign_at(x);
        if s != Ordering::Equal {
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Sign changes of the Sturm sequence at `+∞`.
fn sign_changes_at_infinity(seq: &[Polynomial]) -> usize {
    let signs: Vec<Ordering> = seq.iter().map(|p| p.leading().unwrap().cmp(&Q::zero())).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// A one-root isolating interval `(lo, hi]` of a square-free polynomial.
#[derive(Clone, Debug)]
pub struct Isolated {
    pub poly: Polynomial,
    pub sturm: Vec<Polynomial>,
    pub lo: Q,
    pub hi: Q,
}

impl Isolated {
    /// Number of roots strictly above `x`.
    pub fn roots_above(&self, x: &Q) -> usize {
        sign_changes(&self.sturm, x) - sign_changes_at_infinity(&self.sturm)
    }

    fn half(&mut self) {
        if self.poly.sign_at(&self.hi) == Ordering::Equal {
            self.lo = self.hi.clone();
            return;
        }
        let mid = (&self.lo + &self.hi) / q_int(2);
        if self.poly.sign_at(&mid) == Ordering::Equal {
            self.lo = mid.clone();
            self.hi = mid;
            return;
        }
        if self.roots_above(&mid) >= 1 {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Bisect until `hi − lo ≤ width`.
    pub fn refine(&mut self, width: &Q) {
        while &(&self.hi - &self.lo) > width {
            self.half();
        }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> Q {
        (&self.lo + &self.hi) / q_int(2)
    }
}

/// Isolate the largest real root `≥ lower` of `p` in an interval containing
/// no other root.
pub fn isolate_max_root(p: &Polynomial, lower: &Q) -> Result<Isolated> {
    let fail = || Error::NoRoot(q_to_f64(lower));
    if p.degree().unwrap_or(0) == 0 {
        return Err(fail());
    }
    let poly = p.square_free();
    let sturm = poly.sturm();
    let hi = poly.root_bound().max(lower.clone() + Q::one());
    let mut iso = Isolated { poly, sturm, lo: lower.clone(), hi };
    let above_lower = iso.roots_above(lower);
    if above_lower == 0 {
        return if iso.poly.sign_at(lower) == Ordering::Equal {
            iso.hi = lower.clone();
            Ok(iso)
        } else {
            Err(fail())
        };
    }
    // narrow (lo, hi] until it holds exactly the top root
    while iso.roots_above(&iso.lo) > 1 {
        let mid = iso.midpoint();
        if iso.roots_above(&mid) >= 1 {
            iso.lo = mid;
        } else {
            iso.hi = mid;
        }
    }
    Ok(iso)
}

/// A located root with its exact certificate.
#[derive(Clone, Debug, PartialEq)]
pub struct CertifiedRoot {
    pub value: f64,
    /// The polynomial changes sign (or vanishes) on `[value − tol, value + tol]`
    /// and has no root above `value + tol`.
    pub tol: f64,
}

/// Largest real root `≥ lower`, to absolute tolerance `1e−12` (relative for
/// roots above 1): exact bisection, Newton polish, then an exact sign check.
pub fn max_real_root(p: &Polynomial, lower: f64) -> Result<f64> {
    Ok(max_real_root_certified(p, lower, 1e-12)?.value)
}

pub fn max_real_root_certified(p: &Polynomial, lower: f64, tol: f64) -> Result<CertifiedRoot> {
    let mut iso = isolate_max_root(p, &q_from_f64(lower))?;
    if iso.is_exact() {
        return Ok(CertifiedRoot { value: q_to_f64(&iso.lo), tol: 0.0 });
    }
    let scale = q_to_f64(&iso.hi).abs().max(q_to_f64(&iso.lo).abs()).max(1.0);
    let tol = tol * scale;
    iso.refine(&q_from_f64(tol / 8.0));
    let (lo, hi) = (q_to_f64(&iso.lo), q_to_f64(&iso.hi));
    let mut r = if iso.is_exact() { lo } else { q_to_f64(&iso.midpoint()) };
    // Newton polish, kept only while it stays inside the isolating interval
    let d = iso.poly.derivative();
    for _ in 0..4 {
        let step = iso.poly.eval_f64(r) / d.eval_f64(r);
        let next = r - step;
        if !next.is_finite() || next < lo || next > hi {
            break;
        }
        r = next;
    }
    let (a, b) = (q_from_f64(r - tol), q_from_f64(r + tol));
    let sa = iso.poly.sign_at(&a);
    let sb = iso.poly.sign_at(&b);
    let certified = (sa != sb || sa == Ordering::Equal) && iso.roots_above(&b) == 0;
    if !certified {
        return Err(Error::Invalid(format!("root certification failed near {r}")));
    }
    Ok(CertifiedRoot { value: r, tol })
}

/// Exact comparison of the largest real roots (at or above `lower`) of two
/// polynomials.
#[derive(Clone, Debug)]
pub struct RootComparison {
    /// `Greater` means the largest root of `p` exceeds that of `q`.
    pub ordering: Ordering,
    /// Rational point separating the two roots (absent when equal).
    pub test_point: Option<Q>,
    pub sign_p: Ordering,
    pub sign_q: Ordering,
    /// Roots of `p` and of `q` strictly above the test point.
    pub roots_above_p: usize,
    pub roots_above_q: usize,
}

/// Decide which largest root is bigger by refining isolating intervals until
/// they are disjoint and evaluating both polynomials at a rational point
/// between them. Never subtracts floats.
pub fn compare_max_roots(p: &Polynomial, q: &Polynomial, lower: &Q) -> Result<RootComparison> {
    let mut a = isolate_max_root(p, lower)?;
    let mut b = isolate_max_root(q, lower)?;
    let common = a.poly.gcd(&b.poly);
    let shared_top = common.degree().unwrap_or(0) > 0
        && isolate_max_root(&common, lower).is_ok_and(|c| {
            // the shared root is the top root of both iff it lies in both intervals
            c.roots_above(&a.lo) > 0 && c.roots_above(&b.lo) > 0 && c.roots_above(&a.hi) == 0 && c.roots_above(&b.hi) == 0
        });
    if shared_top {
        return Ok(RootComparison {
            ordering: Ordering::Equal,
            test_point: None,
            sign_p: Ordering::Equal,
            sign_q: Ordering::Equal,
            roots_above_p: 0,
            roots_above_q: 0,
        });
    }
    while !(a.hi < b.lo || b.hi < a.lo) {
        let wa = &a.hi - &a.lo;
        let wb = &b.hi - &b.lo;
        if wa >= wb {
            a.half();
        } else {
            b.half();
        }
    }
    let (ordering, x) = if a.hi < b.lo {
        (Ordering::Less, (&a.hi + &b.lo) / q_int(2))
    } else {
        (Ordering::Greater, (&b.hi + &a.lo) / q_int(2))
    };
    Ok(RootComparison {
        ordering,
        sign_p: p.sign_at(&x),
        sign_q: q.sign_at(&x),
        roots_above_p: a.roots_above(&x),
        roots_above_q: b.roots_above(&x),
        test_point: Some(x),
    })
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || i == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = Polynomial::from_ints(&[-1, 0, 1]); // x^2 - 1
        let q = Polynomial::from_ints(&[1, 1]); // x + 1
        let (d, r) = p.div_rem(&q);
        assert_eq!(d, Polynomial::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(p.gcd(&q), q);
        let sq = p.mul(&q); // (x-1)(x+1)^2
        assert_eq!(sq.square_free(), p);
        assert_eq!(p.to_string(), "x^2 - 1");
        assert_eq!(Polynomial::from_ints(&[9, -17, -1, 1]).to_string(), "x^3 - x^2 - 17x + 9");
    }

    #[test]
    fn roots() {
        let p = Polynomial::from_ints(&[-6, 0, 1]);
        assert!((max_real_root(&p, 0.0).unwrap() - 6f64.sqrt()).abs() < 1e-12);
        let p = Polynomial::from_ints(&[0, 0, -1, 1]); // x^3 - x^2
        assert_eq!(max_real_root(&p, 0.5).unwrap(), 1.0);
        assert_eq!(max_real_root(&Polynomial::from_ints(&[0, 0, 1]), 0.0).unwrap(), 0.0);
        assert!(max_real_root(&Polynomial::from_ints(&[1, 0, 1]), 0.0).is_err());
        assert!(max_real_root(&Polynomial::from_ints(&[-6, 0, 1]), 3.0).is_err());
        // repeated top root
        let p = Polynomial::from_ints(&[-2, 1]).mul(&Polynomial::from_ints(&[-2, 1])).mul(&Polynomial::from_ints(&[1, 1]));
        assert!((max_real_root(&p, -5.0).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn large_roots_keep_relative_precision() {
        // x^2 - 2e6 has root ~1414.2
        let p = Polynomial::from_ints(&[-2_000_000, 0, 1]);
        let r = max_real_root(&p, 1.0).unwrap();
        assert!((r - 2e6f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn comparison() {
        let p = Polynomial::from_ints(&[-6, 0, 1]);
        let q = Polynomial::from_ints(&[-7, 0, 1]);
        let c = compare_max_roots(&p, &q, &q_int(0)).unwrap();
        assert_eq!(c.ordering, Ordering::Less);
        assert_eq!((c.sign_p, c.sign_q), (Ordering::Greater, Ordering::Less));
        assert_eq!((c.roots_above_p, c.roots_above_q), (0, 1));
        let c = compare_max_roots(&q, &p, &q_int(0)).unwrap();
        assert_eq!(c.ordering, Ordering::Greater);
        let pq = p.mul(&Polynomial::from_ints(&[1, 1]));
        assert_eq!(compare_max_roots(&p, &pq, &q_int(0)).unwrap().ordering, Ordering::Equal);
        // rational root on the boundary of an interval
        let a = Polynomial::from_ints(&[-2, 1]);
        let b = Polynomial::from_ints(&[-3, 1]);
        assert_eq!(compare_max_roots(&a, &b, &q_int(0)).unwrap().ordering, Ordering::Less);
    }
}
