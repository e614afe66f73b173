//! Exact truncated power series and the closed-form generating functions
//! built from compositions of the Catalan series.
//!
//! All arithmetic is over `BigRational`. A series carries the order up to
//! which its coefficients are known; every operation propagates the order it
//! can actually guarantee, so precision lost to divisions by series with a
//! zero constant term is tracked rather than silently filled with garbage.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 20;
/// Largest order accepted by the generating-function constructors.
pub const MAX_ORDER: usize = 30;
/// Extra working order used to absorb valuation loss in divisions.
const WORK_MARGIN: usize = 8;

#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn constant(c: i64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::from_integer(c.into());
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(1, order)
    }

    /// `c * x^k`.
    pub fn monomial(c: i64, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = BigRational::from_integer(c.into());
        }
        s
    }

    pub fn x(order: usize) -> Self {
        Self::monomial(1, 1, order)
    }

    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (i, &c) in coeffs.iter().enumerate().take(order + 1) {
            s.coeffs[i] = BigRational::from_integer(c.into());
        }
        s
    }

    pub fn from_rationals(mut coeffs: Vec<BigRational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(BigRational::zero());
        }
        TruncatedSeries { coeffs }
    }

    /// Highest exponent whose coefficient is known.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; zero beyond the order.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Index of the first nonzero coefficient, if any is known.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order());
        TruncatedSeries {
            coeffs: self.coeffs[..=keep].to_vec(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(c.into()))
    }

    /// `x^k * self`; the known order grows by `k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TruncatedSeries { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `1 / self`; needs a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Series(
                "reciprocal of a series with zero constant term".into(),
            ));
        }
        let n = self.order();
        let inv0 = c0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for m in 1..=n {
            let mut acc = BigRational::zero();
            for i in 1..=m {
                acc += &self.coeffs[i] * &out[m - i];
            }
            out.push(-(acc * &inv0));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `self / den`, cancelling a common power of `x` first.
    ///
    /// When `den` has valuation `v`, the quotient is known to order
    /// `min(order(self), order(den)) - v`.
    pub fn div(&self, den: &TruncatedSeries) -> Result<Self> {
        let v = den
            .valuation()
            .ok_or_else(|| Error::Series("division by a series with no known nonzero term".into()))?;
        let order = self.order().min(den.order());
        if v > order {
            return Err(Error::Series("division loses all known terms".into()));
        }
        if self.coeffs[..v].iter().any(|c| !c.is_zero()) {
            return Err(Error::Series(format!(
                "quotient is not a power series: denominator has valuation {v}, numerator {:?}",
                self.valuation()
            )));
        }
        let num = TruncatedSeries {
            coeffs: self.coeffs[v..=order].to_vec(),
        };
        let den = TruncatedSeries {
            coeffs: den.coeffs[v..=order].to_vec(),
        };
        Ok(&num * &den.reciprocal()?)
    }

    /// `self(inner)`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &TruncatedSeries) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Series(
                "composition needs an inner series with zero constant term".into(),
            ));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = TruncatedSeries::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn to_integers(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::Series(format!("coefficient of x^{i} is {c}, not an integer")))
                }
            })
            .collect()
    }

    pub fn to_i128(&self) -> Option<Vec<i128>> {
        self.coeffs
            .iter()
            .map(|c| if c.is_integer() { c.to_integer().to_i128() } else { None })
            .collect()
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} + O(x^{})", self.order() + 1)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    if i == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&TruncatedSeries> for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: &TruncatedSeries) -> TruncatedSeries {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// Catalan numbers `1, 1, 2, 5, 14, ...` by the convolution `c(m+1) = Σ c(i) c(m-i)`.
pub fn catalan_series(order: usize) -> TruncatedSeries {
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    for m in 0..order {
        let next: BigInt = (0..=m).map(|i| &c[i] * &c[m - i]).sum();
        c.push(next);
    }
    TruncatedSeries {
        coeffs: c.into_iter().map(BigRational::from_integer).collect(),
    }
}

/// The Catalan compositions `t0 = C(x)`, `t1 = C(x t0)`, `t2 = C(x t0 t1)`.
#[derive(Clone, Debug)]
pub struct CatalanTower {
    pub x: TruncatedSeries,
    pub t0: TruncatedSeries,
    pub t1: TruncatedSeries,
    pub t2: TruncatedSeries,
}

impl CatalanTower {
    pub fn new(order: usize) -> Result<Self> {
        let x = TruncatedSeries::x(order);
        let c = catalan_series(order);
        let t0 = c.clone();
        let t1 = c.compose(&(&x * &t0))?;
        let t2 = c.compose(&(&(&x * &t0) * &t1))?;
        Ok(CatalanTower { x, t0, t1, t2 })
    }

    pub fn order(&self) -> usize {
        self.x.order()
    }

    fn int(&self, c: i64) -> TruncatedSeries {
        TruncatedSeries::constant(c, self.order())
    }

    /// Evaluates `Σ c · t0^a · t1^b` over `(c, a, b)` terms.
    pub fn poly(&self, terms: &[(i64, u32, u32)]) -> TruncatedSeries {
        let mut acc = TruncatedSeries::zero(self.order());
        for &(c, a, b) in terms {
            let term = &self.t0.pow(a) * &self.t1.pow(b);
            acc = &acc + &term.scale_int(c);
        }
        acc
    }

    /// The five polynomials in `t0, t1` appearing in the tier-2 closed form.
    pub fn h_polynomials(&self) -> [TruncatedSeries; 5] {
        let t0 = &self.t0;
        let h0 = &(&self.int(2) - t0)
            * &self.poly(&[(1, 2, 0), (2, 1, 1), (-2, 1, 0), (-1, 0, 1), (1, 0, 0)]);
        let h1 = self.poly(&[
            (-2, 4, 2),
            (3, 4, 1),
            (6, 3, 2),
            (3, 4, 0),
            (-5, 2, 2),
            (-12, 3, 0),
            (-9, 2, 1),
            (2, 1, 2),
            (11, 2, 0),
            (-7, 1, 1),
            (3, 1, 0),
            (4, 0, 1),
            (-4, 0, 0),
        ]);
        let h2 = self.poly(&[
            (2, 5, 2),
            (-6, 5, 1),
            (-2, 4, 2),
            (-3, 5, 0),
            (-7, 3, 2),
            (12, 4, 0),
            (14, 3, 1),
            (7, 2, 2),
            (-3, 3, 0),
            (18, 2, 1),
            (-4, 1, 2),
            (-18, 2, 0),
            (3, 1, 1),
            (5, 1, 0),
            (-2, 0, 1),
            (2, 0, 0),
        ]);
        let h3 = t0
            * &self.poly(&[
                (3, 5, 1),
                (-2, 4, 2),
                (1, 5, 0),
                (6, 4, 1),
                (3, 3, 2),
                (-4, 4, 0),
                (-14, 3, 1),
                (4, 2, 2),
                (-6, 3, 0),
                (-15, 2, 1),
                (-3, 1, 2),
                (15, 2, 0),
                (-12, 1, 1),
                (2, 0, 2),
                (6, 1, 0),
                (-4, 0, 0),
            ]);
        let h4 = -&(&t0.pow(2)
            * &self.poly(&[
                (4, 4, 1),
                (-3, 3, 1),
                (-3, 3, 0),
                (-10, 2, 1),
                (2, 2, 0),
                (-1, 1, 1),
                (7, 1, 0),
                (-2, 0, 1),
                (-2, 0, 0),
            ]));
        [h0, h1, h2, h3, h4]
    }
}

fn check_order(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        return Err(Error::CapExceeded {
            what: "series order",
            requested: order,
            cap: MAX_ORDER,
        });
    }
    Ok(())
}

/// Cuts a series assembled at working precision back to `order`, checking
/// that enough terms survived and that all of them are integers.
fn finish(s: TruncatedSeries, order: usize) -> Result<TruncatedSeries> {
    if s.order() < order {
        return Err(Error::Series(format!(
            "only {} terms survived, {order} requested",
            s.order()
        )));
    }
    let s = s.truncate(order);
    s.to_integers()?;
    Ok(s)
}

/// `M^U_j(x)`, the `j`-th `y`-derivative at `y = 0` of the generating
/// function of up-oriented permutations, for `j` in `0..=2`.
///
/// The coefficient of `x^n` divided by `j!` counts up-oriented permutations
/// of length `n` and rev-tier `j`.
pub fn mu_u_series(j: usize, order: usize) -> Result<TruncatedSeries> {
    check_order(order)?;
    let work = order + WORK_MARGIN;
    let tw = CatalanTower::new(work)?;
    let x = &tw.x;
    let t0 = &tw.t0;
    let t1 = &tw.t1;
    let one = tw.int(1);
    let two = tw.int(2);
    let s = match j {
        0 => {
            // C(x) - (1 - x) / (1 - 2x)
            let ratio = (&one - x).div(&(&one - &x.scale_int(2)))?;
            t0 - &ratio
        }
        1 => {
            let xt0 = x * t0;
            let one_minus_x_t0 = &(&one - x) - t0;
            let inner = &(&one - &xt0).div(&(&one - &xt0.scale_int(2)))? - t1;
            let first = (&xt0 * &inner).div(&one_minus_x_t0)?;
            // 1 - x + x(2x - 3) t0
            let bracket = &(&one - x) + &(&(x * &(&x.scale_int(2) - &tw.int(3))) * t0);
            let num = &(&t0.pow(6) * &bracket).shift(4);
            let den = &(&(&one - &x.scale_int(2)) * &one_minus_x_t0)
                * &(&one - &xt0.scale_int(2));
            &first + &num.div(&den)?
        }
        2 => {
            let t2 = &tw.t2;
            let xt0 = x * t0;
            let two_x_minus_1 = &x.scale_int(2) - &one;
            let a = &(&xt0 + x) - &one; // x t0 + x - 1
            let b = &(&(&xt0 * t1) + &xt0) - &one; // x t0 t1 + x t0 - 1
            let c = &(&xt0 + t1) - &one; // x t0 + t1 - 1
            // t0^2 + x t0 - 3 t0 - 2x + 2
            let d = &(&(&(&t0.pow(2) + &xt0) - &t0.scale_int(3)) - &x.scale_int(2)) + &two;
            let lead = &(&(&(&(&(t1 * &t0.pow(2)) * &two_x_minus_1) * &(t0 - &two)) * &a.pow(2))
                * &b)
                * t2;
            let mut hsum = TruncatedSeries::zero(work);
            for (i, h) in tw.h_polynomials().iter().enumerate() {
                hsum = &hsum + &h.shift(i);
            }
            let num = (&lead + &hsum).shift(2).scale_int(2);
            let den = &(&(&(&b * &c) * &d) * &a.pow(2)) * &two_x_minus_1;
            num.div(&den)?
        }
        _ => {
            return Err(Error::InvalidArgument(format!(
                "closed forms exist for j = 0, 1, 2 only (got {j})"
            )))
        }
    };
    finish(s, order)
}

fn factorial_rational(j: usize) -> BigRational {
    BigRational::from_integer((1..=j as i64).product::<i64>().into())
}

/// Generating function of permutations with rev-tier exactly `t`, for `t` in `0..=2`.
pub fn tier_series(t: usize, order: usize) -> Result<TruncatedSeries> {
    check_order(order)?;
    match t {
        0 => Ok(catalan_series(order)),
        1 | 2 => {
            let hi = mu_u_series(t, order)?.scale(&factorial_rational(t).recip());
            let lo = mu_u_series(t - 1, order)?.scale(&factorial_rational(t - 1).recip());
            finish(&hi + &lo, order)
        }
        _ => Err(Error::InvalidArgument(format!(
            "tier series available for t = 0, 1, 2 only (got {t})"
        ))),
    }
}

/// `1 / (1 - x C(x C(x)))`.
pub fn wilf_series(order: usize) -> Result<TruncatedSeries> {
    check_order(order)?;
    let x = TruncatedSeries::x(order);
    let c = catalan_series(order);
    let inner = c.compose(&(&x * &c))?;
    let s = (&TruncatedSeries::one(order) - &(&x * &inner)).reciprocal()?;
    finish(s, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncatedSeries) -> Vec<i128> {
        s.to_i128().unwrap()
    }

    #[test]
    fn geometric_reciprocal() {
        let s = TruncatedSeries::from_integers(&[1, -2], 6).reciprocal().unwrap();
        assert_eq!(ints(&s), vec![1, 2, 4, 8, 16, 32, 64]);
        assert!(TruncatedSeries::x(4).reciprocal().is_err());
    }

    #[test]
    fn multiply_by_zero() {
        let s = catalan_series(5);
        assert_eq!(&s * &TruncatedSeries::zero(5), TruncatedSeries::zero(5));
    }

    #[test]
    fn catalan_numbers() {
        assert_eq!(ints(&catalan_series(5)), vec![1, 1, 2, 5, 14, 42]);
        assert_eq!(ints(&catalan_series(10))[10], 16796);
        let c = catalan_series(12);
        let x = TruncatedSeries::x(12);
        assert_eq!(&TruncatedSeries::one(12) + &(&x * &c.pow(2)), c);
    }

    #[test]
    fn compose_with_x_catalan() {
        let c = catalan_series(8);
        let x = TruncatedSeries::x(8);
        let t1 = c.compose(&(&x * &c)).unwrap();
        // oracle: [x^m] C(xC) = sum_k cat(k) [x^(m-k)] C^k, with C^k by repeated i128 convolution
        let cat: Vec<i128> = vec![1, 1, 2, 5, 14, 42, 132, 429, 1430];
        let mut power = vec![vec![0i128; 9]; 9];
        power[0][0] = 1;
        for k in 1..9 {
            for a in 0..9 {
                for b in 0..9 - a {
                    power[k][a + b] += power[k - 1][a] * cat[b];
                }
            }
        }
        let oracle: Vec<i128> = (0..9)
            .map(|m| (0..=m).map(|k| cat[k] * power[k][m - k]).sum())
            .collect();
        assert_eq!(ints(&t1), oracle);
        assert_eq!(ints(&t1)[..5], [1, 1, 3, 11, 44]);
        assert_eq!(&c, &(&TruncatedSeries::one(8) + &(&x * &c.pow(2))));
        assert!(c.compose(&c).is_err());
    }

    #[test]
    fn division_cancels_valuation() {
        // (2x + 2x^2) / (x) = 2 + 2x, one order lost
        let num = TruncatedSeries::from_integers(&[0, 2, 2], 5);
        let q = num.div(&TruncatedSeries::x(5)).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(ints(&q), vec![2, 2, 0, 0, 0]);
        let bad = TruncatedSeries::from_integers(&[1, 2], 5);
        assert!(bad.div(&TruncatedSeries::x(5)).is_err());
    }

    #[test]
    fn mu_u_zero_restates_catalan() {
        let m0 = mu_u_series(0, 15).unwrap();
        let one = TruncatedSeries::one(15);
        let x = TruncatedSeries::x(15);
        let rational = (&one - &x).div(&(&one - &x.scale_int(2))).unwrap();
        assert_eq!(&m0 + &rational, catalan_series(15));
        assert_eq!(ints(&m0)[3..8], [1, 6, 26, 100, 365]);
    }

    #[test]
    fn mu_u_one_and_two() {
        let m1 = ints(&mu_u_series(1, 11).unwrap());
        assert_eq!(
            m1[4..],
            [2, 21, 148, 884, 4852, 25407, 129480, 649576]
        );
        let m2 = ints(&mu_u_series(2, 11).unwrap());
        assert_eq!(
            m2[5..],
            [10, 160, 1636, 13704, 102876, 722772, 4867904]
        );
    }

    #[test]
    fn tier_and_wilf() {
        assert_eq!(ints(&tier_series(2, 7).unwrap())[4..], [2, 26, 228, 1702]);
        assert_eq!(ints(&tier_series(1, 7).unwrap())[3..], [1, 8, 47, 248, 1249]);
        assert_eq!(ints(&tier_series(0, 7).unwrap())[6], 132);
        let w = ints(&wilf_series(10).unwrap());
        assert_eq!(w[..7], [1, 1, 2, 6, 22, 89, 380]);
        assert_eq!(w[10], 162560);
    }

    #[test]
    fn caps_and_ranges() {
        assert!(mu_u_series(3, 5).is_err());
        assert!(mu_u_series(0, MAX_ORDER + 1).is_err());
        assert!(tier_series(3, 5).is_err());
    }

    #[test]
    fn display() {
        let s = TruncatedSeries::from_integers(&[1, -1, 0, 3], 3);
        assert_eq!(s.to_string(), "1 - x + 3x^3");
    }
}
