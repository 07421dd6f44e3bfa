//! Determinants: a fraction-free elimination oracle and two closed forms.
//!
//! The closed forms cover two Vandermonde-type matrices that drive the
//! order-condition analysis:
//!
//! - the pure power matrix `(a_j^i), i,j = 1..n`, whose determinant is
//!   `prod_{j<k} (a_k - a_j) * prod_j a_j`;
//! - the "gapped" matrix with a unit first row followed by rows `a_j^i`
//!   for `i = 2..n` (exponent pattern {0, 2, 3, ..., n}), whose determinant
//!   is `prod_{j<k} (a_k - a_j) * sum_j prod_{k != j} a_k`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{RationalMatrix, MAX_DET_SIZE};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Denominators are cleared row by row so every intermediate quantity stays
/// an integer; the divisions in the Bareiss update are exact.
pub fn det_oracle(m: &RationalMatrix) -> Result<Rational> {
    if !m.is_square() {
        return Err(Error::Domain(format!(
            "determinant of a non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if n > MAX_DET_SIZE {
        return Err(Error::Domain(format!(
            "matrix size {n} exceeds the n <= {MAX_DET_SIZE} cap"
        )));
    }
    if n == 0 {
        return Ok(Rational::one());
    }

    // Row scaling: multiply row i by the lcm of its denominators.
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let lcm = m
            .row(i)
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let row = m
            .row(i)
            .iter()
            .map(|x| x.numer() * (&lcm / x.denom()))
            .collect();
        scale *= lcm;
        a.push(row);
    }

    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return Ok(Rational::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev; // exact by Sylvester's identity
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }

    Ok(Rational::new(&a[n - 1][n - 1] * sign, scale))
}

/// The matrix `(a_j^i)` with `i, j = 1..n`.
pub fn power_vandermonde_matrix(a: &[Rational]) -> RationalMatrix {
    let n = a.len();
    RationalMatrix::from_fn(n, n, |i, j| pow(&a[j], (i + 1) as u32))
}

/// Closed form `prod_{j<k} (a_k - a_j) * prod_j a_j` for
/// [`power_vandermonde_matrix`]. Nonzero whenever the `a_j` are pairwise
/// distinct and none of them is zero.
pub fn det_power_vandermonde(a: &[Rational]) -> Rational {
    difference_product(a) * a.iter().product::<Rational>()
}

/// Unit first row, then rows `a_j^i` for `i = 2..n` (needs `n >= 2`).
pub fn gapped_vandermonde_matrix(a: &[Rational]) -> Result<RationalMatrix> {
    let n = a.len();
    if n < 2 {
        return Err(Error::Domain(format!(
            "gapped Vandermonde matrix needs n >= 2, got {n}"
        )));
    }
    Ok(RationalMatrix::from_fn(n, n, |i, j| {
        if i == 0 {
            Rational::one()
        } else {
            pow(&a[j], (i + 1) as u32)
        }
    }))
}

/// Closed form `prod_{j<k} (a_k - a_j) * sum_j prod_{k != j} a_k` for
/// [`gapped_vandermonde_matrix`]. Nonzero whenever `a_1 = 0` and the
/// remaining entries are pairwise distinct (and then necessarily nonzero).
pub fn det_gapped_vandermonde(a: &[Rational]) -> Result<Rational> {
    let n = a.len();
    if n < 2 {
        return Err(Error::Domain(format!(
            "gapped Vandermonde determinant needs n >= 2, got {n}"
        )));
    }
    let mut cofactor_sum = Rational::zero();
    for j in 0..n {
        let mut prod = Rational::one();
        for (k, x) in a.iter().enumerate() {
            if k != j {
                prod *= x;
            }
        }
        cofactor_sum += prod;
    }
    Ok(difference_product(a) * cofactor_sum)
}

fn difference_product(a: &[Rational]) -> Rational {
    let mut prod = Rational::one();
    for j in 0..a.len() {
        for k in j + 1..a.len() {
            prod *= &a[k] - &a[j];
        }
    }
    prod
}

fn pow(x: &Rational, k: u32) -> Rational {
    Rational::new(x.numer().pow(k), x.denom().pow(k))
}

/// Outcome of the randomized closed-form-vs-oracle comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaVerification {
    pub lemma1_ok: bool,
    pub lemma2_ok: bool,
    pub trials: usize,
}

impl LemmaVerification {
    pub fn all_ok(&self) -> bool {
        self.lemma1_ok && self.lemma2_ok
    }
}

/// Compares both closed forms against [`det_oracle`] on `trials` random
/// rational vectors with sizes up to `n_max` and entries in [-10, 10], and
/// checks the nonzero criteria on qualifying inputs.
pub fn verify_determinant_identities(
    n_max: usize,
    trials: usize,
    seed: u64,
) -> Result<LemmaVerification> {
    use rand::SeedableRng;

    if !(2..=MAX_DET_SIZE).contains(&n_max) {
        return Err(Error::Domain(format!(
            "n_max must lie in 2..={MAX_DET_SIZE}, got {n_max}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lemma1_ok = true;
    let mut lemma2_ok = true;

    for _ in 0..trials {
        let n = rng.random_range(1..=n_max);
        let a = random_rationals(&mut rng, n);
        let closed = det_power_vandermonde(&a);
        let oracle = det_oracle(&power_vandermonde_matrix(&a))?;
        if closed != oracle {
            lemma1_ok = false;
        }
        let distinct_nonzero = pairwise_distinct(&a) && a.iter().all(|x| !x.is_zero());
        if distinct_nonzero && closed.is_zero() {
            lemma1_ok = false;
        }

        let n2 = rng.random_range(2..=n_max);
        let mut b = random_rationals(&mut rng, n2);
        let closed = det_gapped_vandermonde(&b)?;
        let oracle = det_oracle(&gapped_vandermonde_matrix(&b)?)?;
        if closed != oracle {
            lemma2_ok = false;
        }
        // Qualifying input for the nonzero criterion: zero first entry, the
        // rest pairwise distinct.
        b[0] = Rational::zero();
        if pairwise_distinct(&b) {
            let closed = det_gapped_vandermonde(&b)?;
            if closed.is_zero() {
                lemma2_ok = false;
            }
            if closed != det_oracle(&gapped_vandermonde_matrix(&b)?)? {
                lemma2_ok = false;
            }
        }
    }

    Ok(LemmaVerification {
        lemma1_ok,
        lemma2_ok,
        trials,
    })
}

fn random_rationals(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|_| {
            let numer = rng.random_range(-10i64..=10);
            let denom = rng.random_range(1i64..=6);
            crate::rational::rat(numer, denom)
        })
        .collect()
}

fn pairwise_distinct(a: &[Rational]) -> bool {
    for j in 0..a.len() {
        for k in j + 1..a.len() {
            if a[j] == a[k] {
                return false;
            }
        }
    }
    true
}
