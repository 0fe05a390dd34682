//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! An element is stored by its rational coordinates in the power basis
//! `1, ζ, …, ζ^{φ(N)-1}`. Values with different conductors are lifted to
//! the least common multiple before combining.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest degree
/// first. Cached per process.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return Arc::clone(p);
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let den = cyclotomic_poly(d);
            num = divide_monic(&num, &den);
        }
    }
    let p = Arc::new(num);
    cache.lock().unwrap().insert(n, Arc::clone(&p));
    p
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        q[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

pub fn euler_phi(n: u32) -> usize {
    cyclotomic_poly(n).len() - 1
}

#[derive(Clone)]
pub struct CycScalar {
    conductor: u32,
    coords: Vec<BigRational>,
}

fn reduce_poly(mut poly: Vec<BigRational>, conductor: u32) -> Vec<BigRational> {
    let phi = cyclotomic_poly(conductor);
    let d = phi.len() - 1;
    while poly.len() > d {
        let top = poly.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        // x^k = -(Φ - x^d) x^{k-d}
        let shift = poly.len() - d;
        for (i, &c) in phi[..d].iter().enumerate() {
            if c != 0 {
                poly[shift + i] -= &top * BigRational::from_integer(BigInt::from(c));
            }
        }
    }
    poly.resize(d, BigRational::zero());
    poly
}

impl CycScalar {
    pub fn zero(conductor: u32) -> Self {
        CycScalar {
            conductor,
            coords: vec![BigRational::zero(); euler_phi(conductor)],
        }
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_rational(conductor, BigRational::one())
    }

    pub fn from_int(conductor: u32, v: i64) -> Self {
        Self::from_rational(conductor, BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(conductor: u32, v: BigRational) -> Self {
        let mut s = Self::zero(conductor);
        s.coords[0] = v;
        s
    }

    /// `ζ_N^k`.
    pub fn zeta_power(conductor: u32, k: i64) -> Self {
        let k = k.rem_euclid(conductor as i64) as usize;
        let mut poly = vec![BigRational::zero(); k + 1];
        poly[k] = BigRational::one();
        CycScalar {
            conductor,
            coords: reduce_poly(poly, conductor),
        }
    }

    /// Builds a value from power-basis coordinates, reducing if needed.
    pub fn from_coords(conductor: u32, coords: Vec<BigRational>) -> Result<Self> {
        if conductor == 0 {
            return Err(Error::InvalidArgument("conductor must be positive".into()));
        }
        Ok(CycScalar {
            conductor,
            coords: reduce_poly(coords, conductor),
        })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational, if it lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| self.coords[0].clone())
    }

    /// Re-expresses the value with conductor `m`, a multiple of the current one.
    pub fn lift(&self, m: u32) -> Self {
        if m == self.conductor {
            return self.clone();
        }
        assert!(m.is_multiple_of(self.conductor), "cannot lift conductor {} to {m}", self.conductor);
        let step = (m / self.conductor) as usize;
        let mut poly = vec![BigRational::zero(); (self.coords.len().max(1) - 1) * step + 1];
        for (i, c) in self.coords.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        CycScalar {
            conductor: m,
            coords: reduce_poly(poly, m),
        }
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        let m = a.conductor.lcm(&b.conductor);
        (a.lift(m), b.lift(m))
    }

    /// Multiplicative inverse, by solving `self · y = 1` in coordinates.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.to_rational() {
            return Some(Self::from_rational(self.conductor, r.recip()));
        }
        let d = self.coords.len();
        // Column j of the multiplication matrix is self · ζ^j.
        let mut columns = Vec::with_capacity(d);
        for j in 0..d {
            let z = CycScalar::zeta_power(self.conductor, j as i64);
            columns.push((self * &z).coords);
        }
        let mut rows: Vec<Vec<BigRational>> = (0..d)
            .map(|i| {
                let mut r: Vec<BigRational> = columns.iter().map(|c| c[i].clone()).collect();
                r.push(if i == 0 { BigRational::one() } else { BigRational::zero() });
                r
            })
            .collect();
        for col in 0..d {
            let p = (col..d).find(|&r| !rows[r][col].is_zero())?;
            rows.swap(col, p);
            let inv = rows[col][col].recip();
            for v in rows[col].iter_mut() {
                *v *= &inv;
            }
            for r in 0..d {
                if r != col && !rows[r][col].is_zero() {
                    let f = rows[r][col].clone();
                    let pivot = rows[col].clone();
                    for (v, p) in rows[r].iter_mut().zip(pivot) {
                        *v -= &f * p;
                    }
                }
            }
        }
        Some(CycScalar {
            conductor: self.conductor,
            coords: rows.into_iter().map(|mut r| r.pop().unwrap()).collect(),
        })
    }

    /// Comma-separated coordinates, e.g. `1/2,0,-3`.
    pub fn coords_string(&self) -> String {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        parts.join(",")
    }

    pub fn parse_coords(conductor: u32, text: &str) -> std::result::Result<Self, String> {
        let mut coords = Vec::new();
        for tok in text.split(',') {
            let tok = tok.trim();
            let r: BigRational = tok.parse().map_err(|_| format!("bad coordinate {tok:?}"))?;
            coords.push(r);
        }
        if coords.len() != euler_phi(conductor) {
            return Err(format!(
                "expected {} coordinates for conductor {conductor}, found {}",
                euler_phi(conductor),
                coords.len()
            ));
        }
        Ok(CycScalar { conductor, coords })
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coords == other.coords;
        }
        let (a, b) = Self::aligned(self, other);
        a.coords == b.coords
    }
}

impl Eq for CycScalar {}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = match i {
                0 => c.to_string(),
                _ => {
                    let z = if i == 1 {
                        format!("z{}", self.conductor)
                    } else {
                        format!("z{}^{i}", self.conductor)
                    };
                    if c.is_one() {
                        z
                    } else if (-c).is_one() {
                        format!("-{z}")
                    } else {
                        format!("{c}*{z}")
                    }
                }
            };
            terms.push(term);
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = terms[0].clone();
        for t in &terms[1..] {
            match t.strip_prefix('-') {
                Some(rest) => out.push_str(&format!(" - {rest}")),
                None => out.push_str(&format!(" + {t}")),
            }
        }
        write!(f, "{out}")
    }
}

impl<'a> Add<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, rhs: &CycScalar) {
        if self.conductor != rhs.conductor {
            let (a, b) = CycScalar::aligned(self, rhs);
            *self = a;
            for (x, y) in self.coords.iter_mut().zip(&b.coords) {
                *x += y;
            }
            return;
        }
        for (x, y) in self.coords.iter_mut().zip(&rhs.coords) {
            *x += y;
        }
    }
}

impl SubAssign<&CycScalar> for CycScalar {
    fn sub_assign(&mut self, rhs: &CycScalar) {
        *self += &(-rhs);
    }
}

impl<'a> Sub<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar {
            conductor: self.conductor,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

impl<'a> Mul<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        if self.conductor != rhs.conductor {
            let (a, b) = CycScalar::aligned(self, rhs);
            return &a * &b;
        }
        if self.coords.len() == 1 {
            return CycScalar {
                conductor: self.conductor,
                coords: vec![&self.coords[0] * &rhs.coords[0]],
            };
        }
        let d = self.coords.len();
        let mut poly = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if !b.is_zero() {
                    poly[i + j] += a * b;
                }
            }
        }
        CycScalar {
            conductor: self.conductor,
            coords: reduce_poly(poly, self.conductor),
        }
    }
}

impl Mul for CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: CycScalar) -> CycScalar {
        &self * &rhs
    }
}

impl Add for CycScalar {
    type Output = CycScalar;
    fn add(mut self, rhs: CycScalar) -> CycScalar {
        self += &rhs;
        self
    }
}

impl Sub for CycScalar {
    type Output = CycScalar;
    fn sub(mut self, rhs: CycScalar) -> CycScalar {
        self -= &rhs;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(9), 6);
    }

    #[test]
    fn roots_of_unity_close_up() {
        for n in 1..=12u32 {
            let z = CycScalar::zeta_power(n, 1);
            let mut acc = CycScalar::one(n);
            for _ in 0..n {
                acc = &acc * &z;
            }
            assert!(acc.is_one(), "zeta_{n}^{n} = {acc}");
            // 1 + ζ + … + ζ^{n-1} = 0 for n > 1
            let mut sum = CycScalar::zero(n);
            for k in 0..n as i64 {
                sum += &CycScalar::zeta_power(n, k);
            }
            assert_eq!(sum.is_zero(), n > 1);
        }
    }

    #[test]
    fn inverse_and_lifting() {
        let a = &CycScalar::one(5) + &CycScalar::zeta_power(5, 2);
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_one());
        let z3 = CycScalar::zeta_power(3, 1);
        let z6sq = CycScalar::zeta_power(6, 2);
        assert_eq!(z3, z6sq);
        assert_eq!(CycScalar::from_int(1, 2), CycScalar::from_int(4, 2));
        let mixed = &z3 + &CycScalar::zeta_power(4, 1);
        assert_eq!(mixed.conductor(), 12);
    }

    #[test]
    fn coords_round_trip() {
        let a = &CycScalar::from_int(7, -3) + &CycScalar::zeta_power(7, 4);
        let text = a.coords_string();
        assert_eq!(CycScalar::parse_coords(7, &text).unwrap(), a);
        assert!(CycScalar::parse_coords(7, "1,2").is_err());
    }
}
