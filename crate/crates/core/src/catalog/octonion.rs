//! Cayley–Dickson doubling over the integers.
//!
//! An element of the level-`k` algebra is a coefficient vector of length
//! `2^k`; the first half and second half are the two components of the pair.
//! Level 3 gives the octonions with basis `e_0 = 1, e_1, …, e_7`.

/// `(a, b)(c, d) = (ac − d̄b, da + bc̄)`
pub fn mul(p: &[i64], q: &[i64]) -> Vec<i64> {
    assert_eq!(p.len(), q.len());
    assert!(p.len().is_power_of_two());
    if p.len() == 1 {
        return vec![p[0] * q[0]];
    }
    let h = p.len() / 2;
    let (a, b) = p.split_at(h);
    let (c, d) = q.split_at(h);
    let first = sub(&mul(a, c), &mul(&conj(d), b));
    let second = add(&mul(d, a), &mul(b, &conj(c)));
    [first, second].concat()
}

/// `conj(a, b) = (ā, −b)`
pub fn conj(p: &[i64]) -> Vec<i64> {
    if p.len() == 1 {
        return p.to_vec();
    }
    let h = p.len() / 2;
    let mut out = conj(&p[..h]);
    out.extend(p[h..].iter().map(|x| -x));
    out
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn unit(len: usize, k: usize) -> Vec<i64> {
    let mut v = vec![0; len];
    v[k] = 1;
    v
}

/// Commutator `[e_i, e_j] = e_i e_j − e_j e_i` of imaginary octonion units
/// `i, j ∈ 1..=7`, as coordinates on `e_1..e_7`.
pub fn imaginary_commutator(i: usize, j: usize) -> Vec<i64> {
    let a = unit(8, i);
    let b = unit(8, j);
    let c = sub(&mul(&a, &b), &mul(&b, &a));
    assert_eq!(c[0], 0, "commutator of imaginary units has a real part");
    c[1..].to_vec()
}
