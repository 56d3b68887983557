//! Plain 2×2 complex and 3×3 rational matrices.
//!
//! Text form is row-major: rows separated by `;`, entries by `,`, e.g.
//! `i,0;0,i`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::scalar::{ApproxComplex, GaussianRational, Rational, Scalar};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat2<S> {
    pub m: [[S; 2]; 2],
}

pub type ExactMat2 = Mat2<GaussianRational>;
pub type ApproxMat2 = Mat2<ApproxComplex>;

impl<S: Scalar> Mat2<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        Mat2 { m: [[a, b], [c, d]] }
    }

    pub fn identity() -> Self {
        Mat2::new(S::one(), S::zero(), S::zero(), S::one())
    }

    pub fn get(&self, row: usize, col: usize) -> &S {
        &self.m[row][col]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let e = |r: usize, c: usize| self.m[r][0].mul(&rhs.m[0][c]).add(&self.m[r][1].mul(&rhs.m[1][c]));
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Mat2::new(
            self.m[0][0].conj(),
            self.m[1][0].conj(),
            self.m[0][1].conj(),
            self.m[1][1].conj(),
        )
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        self.map(S::conj)
    }

    pub fn neg(&self) -> Self {
        self.map(S::neg)
    }

    pub fn scale(&self, k: &S) -> Self {
        self.map(|x| k.mul(x))
    }

    pub fn det(&self) -> S {
        self.m[0][0].mul(&self.m[1][1]).sub(&self.m[0][1].mul(&self.m[1][0]))
    }

    pub fn apply(&self, v: &[S; 2]) -> [S; 2] {
        [
            self.m[0][0].mul(&v[0]).add(&self.m[0][1].mul(&v[1])),
            self.m[1][0].mul(&v[0]).add(&self.m[1][1].mul(&v[1])),
        ]
    }

    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        Mat2::new(f(&self.m[0][0]), f(&self.m[0][1]), f(&self.m[1][0]), f(&self.m[1][1]))
    }

    fn entries(&self) -> impl Iterator<Item = &S> {
        self.m.iter().flatten()
    }

    pub fn close_to(&self, other: &Self, tol: f64) -> bool {
        self.entries().zip(other.entries()).all(|(a, b)| a.close_to(b, tol))
    }

    /// Row-major lexicographic order over the entries.
    pub fn lex_cmp(&self, other: &Self, tol: f64) -> Ordering {
        self.entries()
            .zip(other.entries())
            .map(|(a, b)| a.lex_cmp(b, tol))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.entries().zip(other.entries()).map(|(a, b)| a.distance(b)).fold(0.0, f64::max)
    }

    pub fn to_approx(&self) -> ApproxMat2 {
        Mat2 { m: [[self.m[0][0].to_approx(), self.m[0][1].to_approx()], [self.m[1][0].to_approx(), self.m[1][1].to_approx()]] }
    }
}

impl ExactMat2 {
    pub fn from_ints(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> Self {
        let g = |(re, im): (i64, i64)| GaussianRational::from_ints(re, im);
        Mat2::new(g(a), g(b), g(c), g(d))
    }

    pub fn inverse(&self) -> Result<Self, Error> {
        let inv_det = self.det().inv().ok_or(Error::Singular)?;
        Ok(Mat2::new(
            &self.m[1][1] * &inv_det,
            &(-&self.m[0][1]) * &inv_det,
            &(-&self.m[1][0]) * &inv_det,
            &self.m[0][0] * &inv_det,
        ))
    }
}

impl<S: fmt::Display> fmt::Display for Mat2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{},{}", self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1])
    }
}

fn parse_grid<T: FromStr<Err = Error>, const N: usize>(s: &str) -> Result<[[T; N]; N], Error> {
    let rows: Vec<&str> = s.trim().split(';').collect();
    if rows.len() != N {
        return Err(Error::parse(format!("expected {N} rows in `{s}`, found {}", rows.len())));
    }
    let mut parsed = Vec::with_capacity(N);
    for row in rows {
        let cells: Vec<&str> = row.split(',').collect();
        if cells.len() != N {
            return Err(Error::parse(format!("expected {N} entries in row `{row}`")));
        }
        let cells = cells.into_iter().map(str::parse).collect::<Result<Vec<T>, _>>()?;
        parsed.push(<[T; N]>::try_from(cells).unwrap_or_else(|_| unreachable!()));
    }
    Ok(<[[T; N]; N]>::try_from(parsed).unwrap_or_else(|_| unreachable!()))
}

impl FromStr for ExactMat2 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(Mat2 { m: parse_grid::<GaussianRational, 2>(s)? })
    }
}

impl serde::Serialize for ExactMat2 {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        s.collect_str(self)
    }
}

/// 3×3 rational matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Mat3 {
    pub m: [[Rational; 3]; 3],
}

impl Mat3 {
    pub fn from_fn(f: impl Fn(usize, usize) -> Rational) -> Self {
        Mat3 { m: std::array::from_fn(|r| std::array::from_fn(|c| f(r, c))) }
    }

    pub fn identity() -> Self {
        Mat3::diag(1, 1, 1)
    }

    pub fn diag(a: i64, b: i64, c: i64) -> Self {
        let d = [a, b, c];
        Mat3::from_fn(|r, col| if r == col { d[r].into() } else { Rational::zero() })
    }

    pub fn from_ints(rows: [[i64; 3]; 3]) -> Self {
        Mat3::from_fn(|r, c| rows[r][c].into())
    }

    pub fn mul(&self, rhs: &Mat3) -> Mat3 {
        Mat3::from_fn(|r, c| {
            (0..3).fold(Rational::zero(), |acc, k| acc + &self.m[r][k] * &rhs.m[k][c])
        })
    }

    pub fn transpose(&self) -> Mat3 {
        Mat3::from_fn(|r, c| self.m[c][r].clone())
    }

    pub fn neg(&self) -> Mat3 {
        Mat3::from_fn(|r, c| -&self.m[r][c])
    }

    pub fn det(&self) -> Rational {
        let m = &self.m;
        let minor = |a: usize, b: usize, c: usize, d: usize| &m[1][a] * &m[2][b] - &m[1][c] * &m[2][d];
        &m[0][0] * &minor(1, 2, 2, 1) - &m[0][1] * &minor(0, 2, 2, 0) + &m[0][2] * &minor(0, 1, 1, 0)
    }

    pub fn apply(&self, v: &[Rational; 3]) -> [Rational; 3] {
        std::array::from_fn(|r| (0..3).fold(Rational::zero(), |acc, k| acc + &self.m[r][k] * &v[k]))
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat3::identity()
    }
}

impl fmt::Display for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.m.iter().enumerate() {
            if r > 0 {
                write!(f, ";")?;
            }
            write!(f, "{},{},{}", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

impl FromStr for Mat3 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(Mat3 { m: parse_grid::<Rational, 3>(s)? })
    }
}

impl serde::Serialize for Mat3 {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        s.collect_str(self)
    }
}
