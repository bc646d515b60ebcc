//! Brute-force reference implementation of Cl(d,1) through dense matrices.
//!
//! Nothing here reuses the table construction in [`crate::algebra`]: blade
//! products are evaluated by literally bubble-sorting generator words and
//! contracting repeated generators, and every basis blade gets a dense
//! left-multiplication matrix. It is slow and only meant for cross-checks.

use std::sync::OnceLock;

use crate::algebra::Space;
use crate::error::{Error, Result};
use crate::multivector::Multivector;

/// Sorts a generator word into ascending order by adjacent transpositions and
/// returns the sign picked up along the way. Repeated generators end up
/// adjacent; they are not contracted here.
pub fn transposition_sign(word: &mut [u8]) -> f64 {
    let mut sign = 1.0;
    let n = word.len();
    for pass in 0..n {
        for i in 0..n.saturating_sub(1 + pass) {
            if word[i] > word[i + 1] {
                word.swap(i, i + 1);
                sign = -sign;
            }
        }
    }
    sign
}

fn metric(generator: u8) -> f64 {
    if generator == 0 {
        -1.0
    } else {
        1.0
    }
}

/// Multiplies two generator words, returning the sign and the reduced ascending word.
fn multiply_words(a: &[u8], b: &[u8]) -> (f64, Vec<u8>) {
    let mut word: Vec<u8> = a.iter().chain(b.iter()).copied().collect();
    let mut sign = transposition_sign(&mut word);
    let mut reduced = Vec::with_capacity(word.len());
    let mut i = 0;
    while i < word.len() {
        if i + 1 < word.len() && word[i] == word[i + 1] {
            sign *= metric(word[i]);
            i += 2;
        } else {
            reduced.push(word[i]);
            i += 1;
        }
    }
    (sign, reduced)
}

fn word_of(name: &str) -> Vec<u8> {
    if name == "1" {
        return Vec::new();
    }
    name[1..].bytes().map(|b| b - b'0').collect()
}

/// Left-multiplication matrices `M(B_i)` acting on coefficient vectors.
#[derive(Debug, Clone)]
pub struct MatrixRep {
    pub space: Space,
    pub dimension: usize,
    /// `left_mul[i][k][j]`: coefficient of `B_k` in `B_i B_j`.
    pub left_mul: Vec<Vec<Vec<f64>>>,
}

impl MatrixRep {
    pub fn new(space: Space) -> MatrixRep {
        let names = space.basis_names();
        let n = names.len();
        let words: Vec<Vec<u8>> = names.iter().map(|s| word_of(s)).collect();
        // orientation of each named blade and its ascending form
        let ascending: Vec<(f64, Vec<u8>)> = words
            .iter()
            .map(|w| {
                let mut sorted = w.clone();
                let s = transposition_sign(&mut sorted);
                (s, sorted)
            })
            .collect();
        let mut left_mul = vec![vec![vec![0.0; n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                let (sign, reduced) = multiply_words(&words[i], &words[j]);
                let k = ascending
                    .iter()
                    .position(|(_, w)| *w == reduced)
                    .expect("closed under multiplication");
                left_mul[i][k][j] = sign * ascending[k].0;
            }
        }
        MatrixRep { space, dimension: n, left_mul }
    }

    pub fn for_space(space: Space) -> &'static MatrixRep {
        static CELLS: [OnceLock<MatrixRep>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
        CELLS[space.dim() - 1].get_or_init(|| MatrixRep::new(space))
    }

    /// Dense matrix of left multiplication by `a`.
    pub fn matrix_of(&self, a: &[f64]) -> Vec<Vec<f64>> {
        let n = self.dimension;
        let mut m = vec![vec![0.0; n]; n];
        for (i, &ai) in a.iter().enumerate().take(n) {
            if ai == 0.0 {
                continue;
            }
            for (row, src) in m.iter_mut().zip(&self.left_mul[i]) {
                for (x, y) in row.iter_mut().zip(src) {
                    *x += ai * y;
                }
            }
        }
        m
    }

    pub fn product(&self, a: &[f64], b: &[f64]) -> Vec<f64> {
        let m = self.matrix_of(a);
        m.iter().map(|row| row.iter().zip(b).map(|(x, y)| x * y).sum()).collect()
    }

    /// Truncated series `sum_{k < terms} B^k / k!`.
    pub fn exp(&self, b: &[f64], terms: usize) -> Vec<f64> {
        let n = self.dimension;
        let m = self.matrix_of(b);
        let mut term = vec![0.0; n];
        term[0] = 1.0;
        let mut sum = term.clone();
        for k in 1..terms {
            let next: Vec<f64> = m
                .iter()
                .map(|row| row.iter().zip(&term).map(|(x, y)| x * y).sum::<f64>() / k as f64)
                .collect();
            term = next;
            for (s, t) in sum.iter_mut().zip(&term) {
                *s += t;
            }
        }
        sum
    }
}

fn check_same(a: &Multivector, b: &Multivector) -> Result<()> {
    if a.space() != b.space() {
        return Err(Error::AlgebraMismatch { left: a.space().name(), right: b.space().name() });
    }
    Ok(())
}

/// Geometric product evaluated through the matrix representation.
pub fn rep_product(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    check_same(a, b)?;
    let rep = MatrixRep::for_space(a.space());
    let c = rep.product(a.coeffs(), b.coeffs());
    Ok(Multivector::from_coeffs(a.algebra(), &c))
}

/// Power-series exponential with a fixed number of terms (40 is plenty for norms up to 5).
pub fn rep_exp(b: &Multivector, terms: usize) -> Multivector {
    let rep = MatrixRep::for_space(b.space());
    Multivector::from_coeffs(b.algebra(), &rep.exp(b.coeffs(), terms))
}
