//! Substitution sets that make exhaustive checking sound.
//!
//! A multilinear identity holds everywhere iff it holds on basis vectors.
//! When a variable occurs `m` times per monomial, the identity is a
//! homogeneous polynomial of degree `m` in that variable's coordinates, and
//! over a field of characteristic 0 it vanishes iff it vanishes on a
//! unisolvent point set:
//!
//! * `m ≤ 2`: basis vectors and sums `e_i + e_j` (`i < j`) suffice;
//! * `m ≥ 3`: every `Σ c_k e_k` with `c_k ≥ 0` and `1 ≤ Σ c_k ≤ m`;
//! * inhomogeneous variables (degrees differ between monomials) use the
//!   same lattice with the zero vector included.
//!
//! Assignments are enumerated as a cartesian product with the first variable
//! outermost, so the stream has a fixed total order that workers can index.

use crate::linalg::Vector;

/// How one variable must be sampled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Polarization {
    /// Every monomial has the same degree (at most the given multiplicity).
    Homogeneous(usize),
    /// Degrees differ between monomials; the value is the largest one.
    General(usize),
}

impl Polarization {
    pub fn multiplicity(self) -> usize {
        match self {
            Polarization::Homogeneous(m) | Polarization::General(m) => m,
        }
    }
}

/// Candidate vectors for one variable, in stream order.
pub fn candidates(dim: usize, shape: Polarization) -> Vec<Vector> {
    match shape {
        Polarization::Homogeneous(m) if m <= 2 => subset_sums(dim, m.max(1)),
        Polarization::Homogeneous(m) => lattice(dim, 1, m),
        Polarization::General(m) => lattice(dim, 0, m.max(1)),
    }
}

/// Sums of `1..=max_terms` distinct basis vectors, by size then lexicographically.
fn subset_sums(dim: usize, max_terms: usize) -> Vec<Vector> {
    let mut out = Vec::new();
    for size in 1..=max_terms.min(dim) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let mut coords = vec![0i64; dim];
            for &k in &idx {
                coords[k] = 1;
            }
            out.push(Vector::from_ints(&coords));
            // next combination
            let mut p = size;
            while p > 0 && idx[p - 1] == dim - size + p - 1 {
                p -= 1;
            }
            if p == 0 {
                break;
            }
            idx[p - 1] += 1;
            for q in p..size {
                idx[q] = idx[q - 1] + 1;
            }
        }
    }
    out
}

/// Nonnegative integer combinations with coefficient sum in `lo..=hi`,
/// grouped by sum, each group in reverse-lexicographic coefficient order.
fn lattice(dim: usize, lo: usize, hi: usize) -> Vec<Vector> {
    fn rec(dim: usize, pos: usize, left: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if pos + 1 == dim {
            cur.push(left as i64);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for c in (0..=left).rev() {
            cur.push(c as i64);
            rec(dim, pos + 1, left - c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for total in lo..=hi {
        let mut group = Vec::new();
        rec(dim, 0, total, &mut Vec::new(), &mut group);
        out.extend(group.iter().map(|c| Vector::from_ints(c)));
    }
    out
}

/// A lazily indexed cartesian product of per-variable candidate sets.
#[derive(Clone, Debug)]
pub struct SubstitutionStream {
    candidates: Vec<Vec<Vector>>,
    len: u64,
}

impl SubstitutionStream {
    pub fn new(dim: usize, shapes: &[Polarization]) -> Self {
        assert!(dim >= 1, "substitution stream needs a positive dimension");
        let candidates: Vec<Vec<Vector>> = shapes.iter().map(|&s| candidates(dim, s)).collect();
        let len = candidates
            .iter()
            .map(|c| c.len() as u64)
            .try_fold(1u64, |acc, n| acc.checked_mul(n))
            .expect("substitution count overflows u64");
        SubstitutionStream { candidates, len }
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn arity(&self) -> usize {
        self.candidates.len()
    }

    /// The `index`-th assignment; the last variable varies fastest.
    pub fn get(&self, index: u64) -> Vec<Vector> {
        assert!(index < self.len, "substitution index out of range");
        let mut rest = index;
        let mut picks = vec![0usize; self.candidates.len()];
        for (slot, cands) in picks.iter_mut().zip(&self.candidates).rev() {
            let n = cands.len() as u64;
            *slot = (rest % n) as usize;
            rest /= n;
        }
        picks
            .iter()
            .zip(&self.candidates)
            .map(|(&p, c)| c[p].clone())
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vec<Vector>> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }
}

/// The stream for an identity homogeneous in every variable, with the given
/// per-variable multiplicities.
pub fn substitution_stream(dim: usize, multiplicities: &[usize]) -> SubstitutionStream {
    let shapes: Vec<Polarization> = multiplicities
        .iter()
        .map(|&m| Polarization::Homogeneous(m))
        .collect();
    SubstitutionStream::new(dim, &shapes)
}

#[cfg(test)]
fn integer_coords(v: &Vector) -> Vec<i64> {
    v.coords()
        .iter()
        .map(|c| {
            assert!(c.is_integer());
            i64::try_from(c.numer()).expect("small coefficient")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(substitution_stream(3, &[1, 1]).len(), 9);
        assert_eq!(substitution_stream(3, &[2]).len(), 6);
        assert_eq!(substitution_stream(7, &[1, 1, 1, 1]).len(), 2401);
        assert_eq!(substitution_stream(7, &[2, 1, 1]).len(), 28 * 49);
        assert_eq!(substitution_stream(1, &[2]).len(), 1);
    }

    #[test]
    fn order_is_lexicographic_with_last_variable_fastest() {
        let s = substitution_stream(3, &[1, 1]);
        let pairs: Vec<(Vec<i64>, Vec<i64>)> = s
            .iter()
            .map(|v| (integer_coords(&v[0]), integer_coords(&v[1])))
            .collect();
        assert_eq!(pairs[0], (vec![1, 0, 0], vec![1, 0, 0]));
        assert_eq!(pairs[1], (vec![1, 0, 0], vec![0, 1, 0]));
        assert_eq!(pairs[3], (vec![0, 1, 0], vec![1, 0, 0]));
    }

    #[test]
    fn multiplicity_two_candidates() {
        let c: Vec<Vec<i64>> = candidates(3, Polarization::Homogeneous(2))
            .iter()
            .map(integer_coords)
            .collect();
        assert_eq!(
            c,
            vec![
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![0, 0, 1],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 1, 1]
            ]
        );
    }

    #[test]
    fn higher_multiplicities_use_the_lattice() {
        // 1 ≤ Σc ≤ 3 in dimension 2: 2 + 3 + 4
        assert_eq!(candidates(2, Polarization::Homogeneous(3)).len(), 9);
        // with zero included
        assert_eq!(candidates(2, Polarization::General(1)).len(), 3);
        assert!(candidates(2, Polarization::General(1))[0].is_zero());
    }

    /// x1^2 x2 − x1 x2^2 vanishes on every 0/1 vector but not on the lattice.
    #[test]
    fn lattice_separates_cubic_that_subset_sums_miss() {
        let f = |v: &[i64]| v[0] * v[0] * v[1] - v[0] * v[1] * v[1];
        assert!(subset_sums(2, 3).iter().all(|v| f(&integer_coords(v)) == 0));
        assert!(candidates(2, Polarization::Homogeneous(3))
            .iter()
            .any(|v| f(&integer_coords(v)) != 0));
    }
}
