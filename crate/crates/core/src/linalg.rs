//! Dense vectors and square matrices over [`Scalar`].
//!
//! Dimensions stay small (at most ten or so), so everything is stored dense.
//! Products skip zero entries, which keeps basis-vector work cheap.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Result};
use crate::scalar::Scalar;

/// Coordinates of an element in a fixed basis.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector {
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn zero(dim: usize) -> Self {
        Vector {
            coords: vec![Scalar::zero(); dim],
        }
    }

    /// The `k`-th standard basis vector (0-based).
    pub fn basis(dim: usize, k: usize) -> Self {
        assert!(k < dim, "basis index {k} out of range for dimension {dim}");
        let mut v = Vector::zero(dim);
        v.coords[k] = Scalar::one();
        v
    }

    pub fn from_coords(coords: Vec<Scalar>) -> Self {
        Vector { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector {
            coords: coords.iter().map(|&c| Scalar::from_int(c)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// Indices and values of the nonzero coordinates.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, factor: &Scalar) -> Vector {
        if factor.is_zero() {
            return Vector::zero(self.dim());
        }
        Vector {
            coords: self.coords.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn try_add(&self, other: &Vector) -> Result<Vector> {
        check_dim("vector addition", "right operand", self.dim(), other.dim())?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Vector) -> Result<Vector> {
        check_dim(
            "vector subtraction",
            "right operand",
            self.dim(),
            other.dim(),
        )?;
        Ok(self.sub_unchecked(other))
    }

    /// `self += factor * other`
    pub(crate) fn add_scaled(&mut self, factor: &Scalar, other: &Vector) {
        if factor.is_zero() {
            return;
        }
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            if !b.is_zero() {
                *a += &(factor * b);
            }
        }
    }

    fn add_unchecked(&self, other: &Vector) -> Vector {
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn sub_unchecked(&self, other: &Vector) -> Vector {
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Linear combination written against basis labels, e.g. `2*e2 - 1/3*e3`.
    pub fn display_with<'a>(&'a self, labels: &'a [String]) -> impl fmt::Display + 'a {
        LabeledVector {
            vector: self,
            labels,
        }
    }
}

struct LabeledVector<'a> {
    vector: &'a Vector,
    labels: &'a [String],
}

impl fmt::Display for LabeledVector<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.vector.nonzero() {
            let label = self.labels.get(k).map(String::as_str).unwrap_or("?");
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if magnitude.is_one() {
                write!(f, "{label}")?;
            } else {
                write!(f, "{magnitude}*{label}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coords).finish()
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, k: usize) -> &Scalar {
        &self.coords[k]
    }
}

/// Panics on dimension mismatch; use [`Vector::try_add`] for checked addition.
impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector addition: dimension mismatch");
        self.add_unchecked(rhs)
    }
}

/// Panics on dimension mismatch; use [`Vector::try_sub`] for checked subtraction.
impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(
            self.dim(),
            rhs.dim(),
            "vector subtraction: dimension mismatch"
        );
        self.sub_unchecked(rhs)
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

/// A linear map on the carrier space, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Operator {
    dim: usize,
    entries: Vec<Scalar>,
}

impl Operator {
    pub fn zero(dim: usize) -> Self {
        Operator {
            dim,
            entries: vec![Scalar::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Operator::zero(dim);
        for k in 0..dim {
            m.entries[k * dim + k] = Scalar::one();
        }
        m
    }

    /// Builds the matrix whose `k`-th column is `columns[k]`.
    pub fn from_columns(columns: &[Vector]) -> Result<Self> {
        let dim = columns.len();
        let mut m = Operator::zero(dim);
        for (k, col) in columns.iter().enumerate() {
            check_dim("operator from columns", "column", dim, col.dim())?;
            for (row, c) in col.coords.iter().enumerate() {
                m.entries[row * dim + k] = c.clone();
            }
        }
        Ok(m)
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            check_dim("operator from rows", "row", dim, row.len())?;
            entries.extend(row);
        }
        Ok(Operator { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.dim + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> + '_ {
        self.entries.chunks(self.dim.max(1))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        check_dim("operator application", "vector", self.dim, v.dim())?;
        let mut out = Vector::zero(self.dim);
        for (col, c) in v.nonzero() {
            for row in 0..self.dim {
                let m = self.get(row, col);
                if !m.is_zero() {
                    out.coords[row] += &(m * c);
                }
            }
        }
        Ok(out)
    }

    pub fn compose(&self, other: &Operator) -> Result<Operator> {
        check_dim("operator product", "right factor", self.dim, other.dim)?;
        let n = self.dim;
        let mut out = Operator::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Operator) -> Result<Operator> {
        check_dim("operator addition", "right operand", self.dim, other.dim)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Operator) -> Result<Operator> {
        check_dim("operator subtraction", "right operand", self.dim, other.dim)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn scale(&self, factor: &Scalar) -> Operator {
        Operator {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    /// `P·Q − Q·P`.
    pub fn commutator(&self, other: &Operator) -> Result<Operator> {
        check_dim("operator commutator", "right operand", self.dim, other.dim)?;
        self.compose(other)?.try_sub(&other.compose(self)?)
    }

    fn zip_with(&self, other: &Operator, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Operator {
        Operator {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

impl fmt::Debug for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl Serialize for Operator {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.rows())
    }
}

/// Free-function form of [`Operator::commutator`].
pub fn operator_commutator(p: &Operator, q: &Operator) -> Result<Operator> {
    p.commutator(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(rows: &[&[i64]]) -> Operator {
        Operator::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn commutator_with_self_and_identity_vanish() {
        let p = op(&[&[1, 2, 0], &[0, -1, 3], &[4, 0, 5]]);
        let q = op(&[&[0, 1, 1], &[2, 0, 0], &[0, -3, 1]]);
        assert!(p.commutator(&p).unwrap().is_zero());
        assert!(Operator::identity(3).commutator(&q).unwrap().is_zero());
        assert!(!p.commutator(&q).unwrap().is_zero());
    }

    #[test]
    fn compose_matches_apply() {
        let p = op(&[&[1, 2], &[3, 4]]);
        let q = op(&[&[0, -1], &[5, 2]]);
        let v = Vector::from_ints(&[7, -3]);
        let pq = p.compose(&q).unwrap();
        assert_eq!(
            pq.apply(&v).unwrap(),
            p.apply(&q.apply(&v).unwrap()).unwrap()
        );
    }

    #[test]
    fn from_columns_places_columns() {
        let m = Operator::from_columns(&[Vector::from_ints(&[1, 2]), Vector::from_ints(&[3, 4])])
            .unwrap();
        assert_eq!(
            m.apply(&Vector::basis(2, 1)).unwrap(),
            Vector::from_ints(&[3, 4])
        );
    }

    #[test]
    fn dimension_errors() {
        let p = Operator::identity(2);
        let q = Operator::identity(3);
        assert!(p.commutator(&q).is_err());
        assert!(p.apply(&Vector::zero(3)).is_err());
        assert!(Vector::zero(2).try_add(&Vector::zero(3)).is_err());
    }

    #[test]
    fn labeled_display() {
        let labels: Vec<String> = ["e1", "e2", "e3"].iter().map(|s| s.to_string()).collect();
        let v = Vector::from_coords(vec![
            Scalar::from_int(-1),
            Scalar::from_int(2),
            Scalar::ratio(-1, 3).unwrap(),
        ]);
        assert_eq!(v.display_with(&labels).to_string(), "-e1 + 2*e2 - 1/3*e3");
        assert_eq!(Vector::zero(3).display_with(&labels).to_string(), "0");
    }
}
