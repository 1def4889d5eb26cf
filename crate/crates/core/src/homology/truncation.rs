//! Exactness oracle independent of the Hermite-form code: tensor the complex
//! with `Q[t]/(t^N)` and compare homology dimensions over `Q`.

use super::resolution::FreeComplex;
use super::polymatrix::PolyMatrix;
use crate::exactalg::linalg::rank;
use crate::exactalg::Rat;

/// The `Q`-matrix of `M` acting on `(Q[t]/t^n)^cols`, in the basis `t^0, ..., t^{n-1}`
/// of each coordinate.
fn truncate(m: &PolyMatrix, n: usize) -> Vec<Vec<Rat>> {
    let mut out = vec![vec![Rat::zero(); m.cols() * n]; m.rows() * n];
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let f = m.get(r, c);
            for (k, a) in f.coeffs().iter().enumerate().take(n) {
                for j in 0..n - k {
                    out[r * n + j + k][c * n + j] = a.clone();
                }
            }
        }
    }
    out
}

/// `dim_Q H_i(F / t^n F)` for `i = 0..=length`.
pub fn truncated_homology_dims(c: &FreeComplex, n: usize) -> Vec<u64> {
    let k = c.length();
    let mut dims = vec![0u64; k + 1];
    for s in c.strands() {
        let ranks: Vec<usize> = s.differentials.iter().map(|d| rank(&truncate(d, n))).collect();
        for (i, dim) in dims.iter_mut().enumerate() {
            let size = if i < k { s.differentials[i].rows() } else if k > 0 { s.differentials[k - 1].cols() } else { 0 };
            let out = if i == 0 { 0 } else { ranks[i - 1] };
            let into = if i < k { ranks[i] } else { 0 };
            *dim += (size * n - out - into) as u64;
        }
    }
    dims
}

/// Verdict on exactness in degrees `>= 1`, for complexes whose `H_0` is killed by `t`.
///
/// If `F` resolves such a module `M` then `H_0 = M`, `H_1 = Tor_1(M, Q[t]/t^n) = M` and the
/// higher truncated homology vanishes, for every `n`. Two consecutive truncation levels
/// beyond every entry degree expose kernels that grow with `n`.
pub fn truncation_verdict(c: &FreeComplex) -> bool {
    let deg = c.strands().iter().flat_map(|s| s.differentials.iter().map(PolyMatrix::max_degree)).max().unwrap_or(0);
    let n = 2 + deg;
    let a = truncated_homology_dims(c, n);
    let b = truncated_homology_dims(c, n + 1);
    if a != b {
        return false;
    }
    if a.iter().skip(2).any(|&d| d != 0) {
        return false;
    }
    a.len() < 2 || a[0] == a[1]
}
