//! Dense univariate polynomials in `t` with arbitrary precision integer
//! coefficients. Only what the determinantal-divisor oracle needs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients are stored lowest degree first with no trailing zeros, so
/// the zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exponent: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exponent + 1];
        coeffs[exponent] = BigInt::from(coeff);
        IntPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Lowest power of `t` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// `Some(e)` when the polynomial is `c·t^e` for some nonzero `c`.
    pub fn as_monomial(&self) -> Option<usize> {
        let v = self.valuation()?;
        (v + 1 == self.coeffs.len()).then_some(v)
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> IntPoly {
        let Some(lead) = self.leading() else {
            return IntPoly::zero();
        };
        let mut g = self.content();
        if lead.is_negative() {
            g = -g;
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    fn shifted(&self, by: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); by];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Pseudo-remainder of `self` by a nonzero `divisor`.
    pub fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().expect("nonzero").clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let top = r.leading().expect("nonzero").clone();
            r = &r.scale(&lead) - &divisor.scale(&top).shifted(dr - dd);
        }
        r
    }

    /// Greatest common divisor over `Q[t]`, returned primitive with a
    /// positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    /// Quotient `self / divisor` when it exists in `Z[t]`.
    pub fn exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dd = divisor.degree()?;
        let lead = divisor.leading()?;
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(dr) = r.degree() {
            if dr < dd {
                return None;
            }
            let (c, rem) = r.leading()?.div_rem(lead);
            if !rem.is_zero() {
                return None;
            }
            r = &r - &divisor.scale(&c).shifted(dr - dd);
            q[dr - dd] = c;
        }
        Some(IntPoly::from_coeffs(q))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &IntPoly, i: usize| p.coeffs.get(i).cloned().unwrap_or_default();
        IntPoly::from_coeffs((0..len).map(|i| get(self, i) + get(rhs, i)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let show_coeff = e == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}
