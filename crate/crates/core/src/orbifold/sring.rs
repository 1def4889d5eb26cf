use super::pic::{pic_normal_form, OrbifoldData, PicElement};
use crate::error::{Error, Result};
use crate::exactalg::ProjPoint;

/// Checks `lambda_1 = inf`, `lambda_2 = 0` and finite `lambda_i` for `i >= 3`.
pub(crate) fn check_normalized(data: &OrbifoldData) -> Result<()> {
    let l = data.lambda();
    if l[0] != ProjPoint::Infinity {
        return Err(Error::UnsupportedPresentation(format!("lambda_1 must be inf, got {}", l[0])));
    }
    if l.len() > 1 && l[1] != ProjPoint::from(0) {
        return Err(Error::UnsupportedPresentation(format!("lambda_2 must be 0, got {}", l[1])));
    }
    if let Some(p) = l.iter().skip(2).find(|p| **p == ProjPoint::Infinity) {
        return Err(Error::UnsupportedPresentation(format!("lambda_i for i >= 3 must be finite, got {p}")));
    }
    Ok(())
}

/// Exponent vectors of the normal monomials of `S` in degree `deg`.
///
/// `S = k[x_1..x_n] / (x_i^{r_i} - x_2^{r_2} + lambda_i x_1^{r_1})_{i >= 3}`; the leading
/// terms `x_i^{r_i}` are pairwise coprime, so normal monomials are those with
/// `e_i < r_i` for `i >= 3`. For `n = 1` a coordinate of degree `c` vanishing at `0`
/// is adjoined; its exponent is the last entry.
pub fn s_monomials(data: &OrbifoldData, deg: &PicElement) -> Result<Vec<Vec<u64>>> {
    check_normalized(data)?;
    if deg.a.len() != data.n() {
        return Err(Error::InvalidInput(format!("degree has {} coefficients, expected {}", deg.a.len(), data.n())));
    }
    let deg = pic_normal_form(data, deg.m, &deg.a);
    if deg.m < 0 {
        return Ok(Vec::new());
    }
    let r = data.r();
    // a monomial of degree (m; a) is prod x_i^{a_i + r_i k_i} with sum k_i = m
    let mut out = Vec::new();
    let m = deg.m as u64;
    for k1 in 0..=m {
        let k2 = m - k1;
        let mut e: Vec<u64> = deg.a.iter().map(|&a| a as u64).collect();
        e[0] += u64::from(r[0]) * k1;
        if data.n() == 1 {
            e.push(k2);
        } else {
            e[1] += u64::from(r[1]) * k2;
        }
        out.push(e);
    }
    Ok(out)
}

/// Dimension of the degree `deg` piece of `S`.
pub fn s_dim(data: &OrbifoldData, deg: &PicElement) -> Result<u64> {
    Ok(s_monomials(data, deg)?.len() as u64)
}
