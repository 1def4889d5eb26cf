use std::fmt;

use super::poly::write_terms;
use super::{EffDivisor, Poly, ProjPoint, Rat};

/// A homogeneous form of fixed degree `d` in `u0, u1`, i.e. a global section of
/// `O(d)` on the projective line. `coeffs[k]` is the coefficient of `u0^k u1^(d-k)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HomForm {
    coeffs: Vec<Rat>,
}

impl HomForm {
    pub fn zero(degree: u32) -> Self {
        HomForm { coeffs: vec![Rat::zero(); degree as usize + 1] }
    }

    pub fn constant(c: Rat) -> Self {
        HomForm { coeffs: vec![c] }
    }

    /// `coeffs[k]` multiplies `u0^k u1^(len-1-k)`; the slice must be nonempty.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a form needs degree + 1 coefficients");
        HomForm { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        HomForm::from_coeffs(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    /// `u0 - q u1` for a finite point, `u1` for infinity.
    pub fn linear_vanishing_at(p: &ProjPoint) -> Self {
        match p {
            ProjPoint::Finite(q) => HomForm { coeffs: vec![-q, Rat::one()] },
            ProjPoint::Infinity => HomForm { coeffs: vec![Rat::one(), Rat::zero()] },
        }
    }

    pub fn degree(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn mul(&self, other: &HomForm) -> HomForm {
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        HomForm { coeffs: out }
    }

    /// Sum of two forms of the same degree.
    pub fn add(&self, other: &HomForm) -> HomForm {
        assert_eq!(self.degree(), other.degree(), "adding forms of different degree");
        HomForm { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, c: &Rat) -> HomForm {
        HomForm { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn neg(&self) -> HomForm {
        HomForm { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    /// Restriction to the chart `u1 = 1`, as a polynomial in `u = u0/u1`.
    pub fn dehomogenize(&self) -> Poly {
        Poly::from_coeffs(self.coeffs.clone())
    }

    /// Vanishing order at `p`; `None` for the zero form.
    pub fn order_at(&self, p: &ProjPoint) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        match p {
            ProjPoint::Infinity => {
                let top = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
                Some(self.degree() - top as u32)
            }
            ProjPoint::Finite(q) => self.dehomogenize().root_multiplicity(q),
        }
    }

    /// The vanishing divisor of a nonzero form.
    pub fn divisor(&self) -> Option<EffDivisor> {
        if self.is_zero() {
            return None;
        }
        let at_inf = self.order_at(&ProjPoint::Infinity).unwrap();
        let mut pairs = vec![(ProjPoint::Infinity, at_inf)];
        // Finite roots are rational only in the cases we construct; collect the
        // ones visible as linear factors over the rationals.
        let mut f = self.dehomogenize();
        for q in rational_roots(&f) {
            let m = f.root_multiplicity(&q).unwrap();
            let lin = Poly::from_coeffs(vec![-&q, Rat::one()]);
            f = f.exact_div(&lin.pow(m)).unwrap();
            pairs.push((ProjPoint::Finite(q), m));
        }
        if f.degree().unwrap_or(0) > 0 {
            return None;
        }
        Some(EffDivisor::from_pairs(pairs))
    }

    /// Scales so that the coefficient of the highest nonzero `u0`-power is one.
    pub fn normalized(&self) -> HomForm {
        match self.coeffs.iter().rev().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().unwrap()),
        }
    }
}

/// Rational roots of a polynomial with rational coefficients (rational root test
/// on the integer-cleared polynomial).
fn rational_roots(f: &Poly) -> Vec<Rat> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};

    let Some(deg) = f.degree() else { return Vec::new() };
    if deg == 0 {
        return Vec::new();
    }
    let lcm = f.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f.coeffs().iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    if low > 0 {
        roots.push(Rat::zero());
    }
    let a0 = ints[low].abs();
    let an = ints[deg].abs();
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let mut out = Vec::new();
        let mut k = BigInt::one();
        while &k * &k <= *n {
            if (n % &k).is_zero() {
                out.push(k.clone());
                out.push(n / &k);
            }
            k += 1;
        }
        out
    };
    let mut seen = std::collections::BTreeSet::new();
    for p in divisors(&a0) {
        for q in divisors(&an) {
            for sign in [1i64, -1] {
                let cand = Rat::from_int(sign) * Rat::ratio(p.clone(), q.clone());
                if seen.insert(cand.clone()) && f.eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

impl fmt::Display for HomForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree() as usize;
        let power = |var: &str, e: usize| match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        write_terms(
            f,
            self.coeffs.iter().enumerate().rev().map(|(k, c)| {
                let parts: Vec<String> = [power("u0", k), power("u1", d - k)]
                    .into_iter()
                    .filter(|s| !s.is_empty())
                    .collect();
                (c.clone(), parts.join("*"))
            }),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_matches_expansion() {
        let d = EffDivisor::from_pairs([(ProjPoint::from(1), 1), (ProjPoint::from(2), 1)]);
        assert_eq!(d.section().to_string(), "u0^2 - 3*u0*u1 + 2*u1^2");
        assert_eq!(EffDivisor::zero().section().to_string(), "1");
    }

    #[test]
    fn orders_and_divisor() {
        let d = EffDivisor::from_pairs([
            (ProjPoint::from(0), 2),
            (ProjPoint::Finite(Rat::new(-3, 2)), 1),
            (ProjPoint::Infinity, 3),
        ]);
        let s = d.section();
        assert_eq!(s.degree(), 6);
        assert_eq!(s.order_at(&ProjPoint::Infinity), Some(3));
        assert_eq!(s.order_at(&ProjPoint::from(0)), Some(2));
        assert_eq!(s.order_at(&ProjPoint::from(5)), Some(0));
        assert_eq!(s.divisor(), Some(d));
        assert_eq!(HomForm::zero(2).order_at(&ProjPoint::Infinity), None);
    }

    #[test]
    fn normalization() {
        let f = HomForm::from_ints(&[4, 2, 0]);
        assert_eq!(f.normalized(), HomForm::from_ints(&[2, 1, 0]));
    }
}
