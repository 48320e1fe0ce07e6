use std::collections::HashMap;
use std::sync::{Mutex, MutexGuard};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::array::IntersectionArray;
use crate::error::Error;
use crate::exactnum::{isolate_real_roots, AlgebraicReal, Elem, ExactValue, Tower};

/// A value in `Q(theta_i)`, stored as a polynomial in `theta_i` with
/// rational coefficients.
pub(crate) type FieldPoly = Vec<BigRational>;

/// Exact eigensystem of an intersection array.
///
/// `p[i][j] = v_j(theta_i)` is the first eigenmatrix and `q[l][i] =
/// m_i p[i][l] / k_l` the second, so that `P Q = n I` and `Q` has a first
/// column of ones. Krein parameters are computed on demand.
#[derive(Debug)]
pub struct SpectralData {
    array: IntersectionArray,
    /// Descending; `eigenvalues[0] = k`.
    pub eigenvalues: Vec<ExactValue>,
    pub multiplicities: Vec<ExactValue>,
    pub p: Vec<Vec<ExactValue>>,
    pub q: Vec<Vec<ExactValue>>,
    n: BigRational,
    sizes: Vec<BigRational>,
    roots: Vec<AlgebraicReal>,
    /// `q_poly[l][i]`: `Q_li` as a polynomial in `theta_i`.
    pub(crate) q_poly: Vec<Vec<FieldPoly>>,
    p_poly: Vec<Vec<FieldPoly>>,
    m_poly: Vec<FieldPoly>,
    /// `1/m_i`, a polynomial in `theta_i` as well.
    m_inv_poly: Vec<FieldPoly>,
    cache: Mutex<Cache>,
}

#[derive(Debug, Default)]
pub(crate) struct Cache {
    krein_zero: HashMap<[usize; 3], bool>,
    pub(crate) degree: HashMap<(usize, usize), Option<usize>>,
    /// Per node column `a`: Newton weights, or `None` if the nodes repeat.
    pub(crate) weights: HashMap<usize, Option<Vec<Vec<FieldPoly>>>>,
}

/// Computes eigenvalues, multiplicities, `P` and `Q` exactly.
pub fn spectrum(arr: &IntersectionArray) -> Result<SpectralData, Error> {
    arr.check_basic()?;
    let d = arr.diameter();
    let polys = arr.recurrence_polynomials();
    let chi = &polys[d + 1];
    let g = chi.gcd(&chi.derivative());
    if g.degree().unwrap_or(0) > 0 {
        let rep = isolate_real_roots(&g)
            .into_iter()
            .next()
            .map(|r| ExactValue::from_algebraic(r).to_string())
            .unwrap_or_else(|| "(non-real)".to_string());
        return Err(Error::RepeatedEigenvalue(rep));
    }
    let mut roots: Vec<AlgebraicReal> = isolate_real_roots(chi);
    if roots.len() != d + 1 {
        return Err(Error::NonRealEigenvalue);
    }
    roots.reverse();
    debug_assert_eq!(roots[0].as_integer(), Some(BigInt::from(arr.k())));

    let sizes = arr.sizes();
    let n = arr.vertex_count();
    // v_j = p_j / (c_1 ... c_j)
    let mut cprod = vec![BigRational::one()];
    for j in 1..=d {
        let next = &cprod[j - 1] * BigRational::from_integer(arr.c(j).into());
        cprod.push(next);
    }

    let mut p_out = vec![Vec::with_capacity(d + 1); d + 1];
    let mut m_out = Vec::with_capacity(d + 1);
    let mut q_out = vec![vec![ExactValue::from_int(0); d + 1]; d + 1];
    let mut p_poly = vec![Vec::with_capacity(d + 1); d + 1];
    let mut q_poly = vec![vec![Vec::new(); d + 1]; d + 1];
    let mut m_poly = Vec::with_capacity(d + 1);
    let mut m_inv_poly = Vec::with_capacity(d + 1);
    // each row of P, m_i and column i of Q live in Q(theta_i)
    for (i, root) in roots.iter().enumerate() {
        let (mut t, th) = Tower::with_points(std::slice::from_ref(root));
        let row: Vec<Elem> = (0..=d)
            .map(|j| {
                let raw = t.eval_poly(&polys[j], &th[0]);
                t.mul_full(&raw, &t.constant(cprod[j].recip()))
            })
            .collect();
        let mut s = t.zero();
        for (j, v) in row.iter().enumerate() {
            let sq = t.mul_full(v, v);
            s = t.add(&s, &t.mul_full(&sq, &t.constant(sizes[j].recip())));
        }
        // s >= 1: the j = 0 term is 1 and the rest are squares over positive k_j
        let m_inv = t.mul_full(&s, &t.constant(n.recip()));
        let m = t
            .inv(&m_inv)
            .expect("multiplicity denominator is at least 1");
        for v in &row {
            p_out[i].push(t.to_exact(v));
            p_poly[i].push(t.coefficients(v));
        }
        for l in 0..=d {
            let ql = t.mul_full(&t.mul_full(&m, &row[l]), &t.constant(sizes[l].recip()));
            q_out[l][i] = t.to_exact(&ql);
            q_poly[l][i] = t.coefficients(&ql);
        }
        m_out.push(t.to_exact(&m));
        m_poly.push(t.coefficients(&m));
        m_inv_poly.push(t.coefficients(&m_inv));
    }

    Ok(SpectralData {
        array: arr.clone(),
        eigenvalues: roots
            .iter()
            .cloned()
            .map(ExactValue::from_algebraic)
            .collect(),
        multiplicities: m_out,
        p: p_out,
        q: q_out,
        n,
        sizes,
        roots,
        q_poly,
        p_poly,
        m_poly,
        m_inv_poly,
        cache: Mutex::new(Cache::default()),
    })
}

impl SpectralData {
    pub fn array(&self) -> &IntersectionArray {
        &self.array
    }

    pub fn diameter(&self) -> usize {
        self.array.diameter()
    }

    pub fn vertex_count(&self) -> &BigRational {
        &self.n
    }

    pub fn sizes(&self) -> &[BigRational] {
        &self.sizes
    }

    pub(crate) fn cache(&self) -> MutexGuard<'_, Cache> {
        self.cache.lock().unwrap_or_else(|e| e.into_inner())
    }

    /// An exact field containing the eigenvalues with the given indices,
    /// and those eigenvalues as elements of it.
    pub fn eigen_field(&self, indices: &[usize]) -> (Tower, Vec<Elem>) {
        let pts: Vec<AlgebraicReal> = indices.iter().map(|&i| self.roots[i].clone()).collect();
        Tower::with_points(&pts)
    }

    /// `Q_li` inside a field from [`SpectralData::eigen_field`], where
    /// `theta_i` is the element standing for eigenvalue `i`.
    pub(crate) fn q_in(&self, t: &Tower, theta_i: &Elem, l: usize, i: usize) -> Elem {
        t.eval_rational_poly(&self.q_poly[l][i], theta_i)
    }

    pub(crate) fn m_in(&self, t: &Tower, theta_i: &Elem, i: usize) -> Elem {
        t.eval_rational_poly(&self.m_poly[i], theta_i)
    }

    pub(crate) fn m_inv_in(&self, t: &Tower, theta_i: &Elem, i: usize) -> Elem {
        t.eval_rational_poly(&self.m_inv_poly[i], theta_i)
    }

    pub(crate) fn field_value(&self, t: &Tower, theta_i: &Elem, v: &[BigRational]) -> Elem {
        t.eval_rational_poly(v, theta_i)
    }

    pub fn eigenvalues_integral(&self) -> bool {
        self.eigenvalues.iter().all(ExactValue::is_integer)
    }

    /// True when `n` and every `m_i` are positive integers.
    pub fn multiplicities_are_positive_integers(&self) -> bool {
        self.n.is_integer()
            && self
                .multiplicities
                .iter()
                .all(|m| m.is_integer() && m.sign() > 0)
    }

    /// `P_il / k_l` inside a field from [`SpectralData::eigen_field`]. Up to
    /// the nonzero factor `m_i` this is `Q_li`, with much smaller
    /// coefficients.
    pub(crate) fn scaled_q_in(&self, t: &Tower, theta_i: &Elem, l: usize, i: usize) -> Elem {
        let v = t.eval_rational_poly(&self.p_poly[i][l], theta_i);
        t.mul_full(&v, &t.constant(self.sizes[l].recip()))
    }

    /// `T = sum_l P_il P_jl P_hl / k_l^2`, so that
    /// `q^h_ij = m_i m_j T / n`; symmetric in `i, j, h`.
    fn krein_core(&self, idx: [usize; 3]) -> (Tower, Vec<Elem>, Elem) {
        let (t, th) = self.eigen_field(&idx);
        let mut acc = t.zero();
        for l in 0..=self.diameter() {
            let a = t.eval_rational_poly(&self.p_poly[idx[0]][l], &th[0]);
            let b = t.eval_rational_poly(&self.p_poly[idx[1]][l], &th[1]);
            let c = t.eval_rational_poly(&self.p_poly[idx[2]][l], &th[2]);
            let prod = t.mul_full(&t.mul_full(&a, &b), &c);
            let k2 = &self.sizes[l] * &self.sizes[l];
            acc = t.add(&acc, &t.mul_full(&prod, &t.constant(k2.recip())));
        }
        (t, th, acc)
    }

    /// Krein parameter `q^h_ij`.
    pub fn krein(&self, i: usize, j: usize, h: usize) -> ExactValue {
        let (mut t, th, core) = self.krein_core([i, j, h]);
        let mi = self.field_value(&t, &th[0], &self.m_poly[i]);
        let mj = self.field_value(&t, &th[1], &self.m_poly[j]);
        let v = t.mul_full(&t.mul_full(&core, &mi), &mj);
        let v = t.mul_full(&v, &t.constant(self.n.recip()));
        t.to_exact(&v)
    }

    pub fn krein_is_zero(&self, i: usize, j: usize, h: usize) -> bool {
        let mut key = [i, j, h];
        key.sort_unstable();
        if let Some(&z) = self.cache().krein_zero.get(&key) {
            return z;
        }
        let (mut t, _, core) = self.krein_core(key);
        let z = t.is_zero(&core);
        self.cache().krein_zero.insert(key, z);
        z
    }

    /// Sign of `q^h_ij`.
    pub fn krein_sign(&self, i: usize, j: usize, h: usize) -> i32 {
        if self.krein_is_zero(i, j, h) {
            return 0;
        }
        let (mut t, _, core) = self.krein_core([i, j, h]);
        t.sign(&core) * self.multiplicities[i].sign() * self.multiplicities[j].sign()
    }

    /// All Krein parameters are nonnegative.
    pub fn krein_nonnegative(&self) -> bool {
        let d = self.diameter();
        for h in 0..=d {
            for i in 0..=d {
                for j in i..=d {
                    if self.krein_sign(i, j, h) < 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Checks `P Q = n I`, `sum m_i = n` and `theta_0 = k` exactly.
    pub fn verify_identities(&self) -> bool {
        let d = self.diameter();
        let k = ExactValue::from_int(self.array.k());
        if self.eigenvalues[0] != k || self.multiplicities[0] != ExactValue::from_int(1) {
            return false;
        }
        let all: Vec<usize> = (0..=d).collect();
        let (mut t, th) = self.eigen_field(&all);
        let mut total = t.zero();
        for (x, m) in th.iter().zip(&self.m_poly) {
            total = t.add(&total, &self.field_value(&t, x, m));
        }
        let diff = t.sub(&total, &t.constant(self.n.clone()));
        if !t.is_zero(&diff) {
            return false;
        }
        for i in 0..=d {
            for i2 in 0..=d {
                let (mut t, th) = self.eigen_field(&[i, i2]);
                let mut s = t.zero();
                for l in 0..=d {
                    let pv = self.field_value(&t, &th[0], &self.p_poly[i][l]);
                    let qv = self.q_in(&t, &th[1], l, i2);
                    s = t.add(&s, &t.mul_full(&pv, &qv));
                }
                if i == i2 {
                    s = t.sub(&s, &t.constant(self.n.clone()));
                }
                if !t.is_zero(&s) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(s: &str) -> IntersectionArray {
        s.parse().unwrap()
    }

    fn ints(v: &[ExactValue]) -> Vec<i64> {
        v.iter().map(|x| x.as_i64().unwrap()).collect()
    }

    #[test]
    fn odd7() {
        let s = spectrum(&arr("{4,3,3;1,1,2}")).unwrap();
        assert_eq!(ints(&s.eigenvalues), vec![4, 2, -1, -3]);
        assert_eq!(ints(&s.multiplicities), vec![1, 14, 14, 6]);
        assert_eq!(s.vertex_count(), &BigRational::from_integer(35.into()));
        assert!(s.verify_identities());
        assert!(s.krein_nonnegative());
        assert!(s.q.iter().all(|row| row[0] == ExactValue::from_int(1)));
    }

    #[test]
    fn heptagon_is_irrational() {
        let s = spectrum(&arr("{2,1,1;1,1,1}")).unwrap();
        assert_eq!(s.eigenvalues[0], ExactValue::from_int(2));
        for (e, j) in s.eigenvalues[1..].iter().zip([1, 2, 3]) {
            let want = 2.0 * (2.0 * std::f64::consts::PI * j as f64 / 7.0).cos();
            assert!((e.to_f64() - want).abs() < 1e-12);
        }
        assert_eq!(ints(&s.multiplicities), vec![1, 2, 2, 2]);
        assert!(s.verify_identities());
        assert!(s.krein_nonnegative());
    }

    #[test]
    fn folded_cube() {
        let s = spectrum(&arr("{7,6,5;1,2,3}")).unwrap();
        assert_eq!(ints(&s.eigenvalues), vec![7, 3, -1, -5]);
        assert_eq!(ints(&s.multiplicities), vec![1, 21, 35, 7]);
        // natural ordering is Q-polynomial, so q^1_13 vanishes
        assert!(s.krein_is_zero(1, 3, 1));
        assert!(!s.krein_is_zero(1, 2, 1));
    }

    #[test]
    fn invalid_array_is_rejected() {
        assert!(matches!(
            spectrum(&arr("{2,1;2,1}")),
            Err(Error::InvalidArray(_))
        ));
    }
}
