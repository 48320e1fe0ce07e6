use serde::Serialize;

use super::array::IntersectionArray;
use super::data::{spectrum, FieldPoly, SpectralData};
use crate::error::Error;
use crate::exactnum::{Elem, ExactValue, Tower};

/// A Q-polynomial ordering `E_0, E_{perm[1]}, ..., E_{perm[D]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QPolyOrdering {
    /// Indices into the descending eigenvalue list; `permutation[0] = 0`.
    pub permutation: Vec<usize>,
    /// Eigenvalues in this order.
    pub eigenvalues: Vec<ExactValue>,
    /// `sigma_l = Q_{l, perm[1]}` for `0 <= l <= D`.
    pub dual_eigenvalues: Vec<ExactValue>,
    /// Coefficients (lowest degree first) of `q_j` with
    /// `Q_{l, perm[j]} = q_j(sigma_l)`; `q_j` has degree exactly `j`.
    pub witnesses: Vec<Vec<ExactValue>>,
    /// Set when the multiplicities are not positive integers, so the
    /// ordering is only a formal property of the array.
    pub formal: bool,
}

/// Outcome of both Q-polynomial criteria on one ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderingCheck {
    pub permutation: Vec<usize>,
    pub definition: bool,
    pub krein: bool,
}

/// Every permutation of `1..=d`, lexicographic.
pub fn permutations(d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=d).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..cur.len().saturating_sub(1))
            .rev()
            .find(|&i| cur[i] < cur[i + 1])
        else {
            break;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

impl SpectralData {
    /// Newton weights `w[r][l] = 1 / prod_{t <= r, t != l} (s_l - s_t)` for
    /// the nodes `s_l = Q_{l,a} / m_a`, as polynomials in `theta_a`; `None`
    /// if two nodes coincide. Rescaling nodes and values by nonzero
    /// constants leaves interpolation degrees unchanged.
    fn newton_weights(&self, a: usize) -> Option<Vec<Vec<FieldPoly>>> {
        if let Some(w) = self.cache().weights.get(&a) {
            return w.clone();
        }
        let d = self.diameter();
        let (mut t, th) = self.eigen_field(&[a]);
        let nodes: Vec<Elem> = (0..=d)
            .map(|l| self.scaled_q_in(&t, &th[0], l, a))
            .collect();
        let mut inv = vec![vec![t.zero(); d + 1]; d + 1];
        let mut distinct = true;
        'pairs: for l in 0..=d {
            for s in l + 1..=d {
                let diff = t.sub(&nodes[l], &nodes[s]);
                match t.inv(&diff) {
                    Some(x) => {
                        inv[s][l] = t.neg(&x);
                        inv[l][s] = x;
                    }
                    None => {
                        distinct = false;
                        break 'pairs;
                    }
                }
            }
        }
        let out = distinct.then(|| {
            let mut w: Vec<Vec<Elem>> = vec![vec![t.one()]];
            for r in 1..=d {
                let mut row: Vec<Elem> = (0..r)
                    .map(|l| t.mul_full(&w[r - 1][l], &inv[l][r]))
                    .collect();
                let last = (0..r).fold(t.one(), |acc, s| t.mul_full(&acc, &inv[r][s]));
                row.push(last);
                w.push(row);
            }
            w.iter()
                .map(|row| row.iter().map(|e| t.coefficients(e)).collect())
                .collect()
        });
        self.cache().weights.insert(a, out.clone());
        out
    }

    /// Newton coefficients of the interpolant through
    /// `(Q_{l,a} / m_a, Q_{l,c} / m_c)`, in a field holding `theta_a` and
    /// `theta_c`, together with the nodes.
    fn newton_coefficients(
        &self,
        a: usize,
        c: usize,
        w: &[Vec<FieldPoly>],
    ) -> (Tower, Vec<Elem>, Vec<Elem>, Vec<Elem>) {
        let d = self.diameter();
        let (t, th) = self.eigen_field(&[a, c]);
        let ys: Vec<Elem> = (0..=d)
            .map(|l| self.scaled_q_in(&t, &th[1], l, c))
            .collect();
        let coeffs = (0..=d)
            .map(|r| {
                (0..=r).fold(t.zero(), |acc, l| {
                    let wl = self.field_value(&t, &th[0], &w[r][l]);
                    t.add(&acc, &t.mul_full(&wl, &ys[l]))
                })
            })
            .collect();
        let nodes = (0..=d)
            .map(|l| self.scaled_q_in(&t, &th[0], l, a))
            .collect();
        (t, th, nodes, coeffs)
    }

    /// Degree of the interpolant of column `c` on the nodes of column `a`.
    fn interpolant_degree(&self, a: usize, c: usize) -> Option<usize> {
        if let Some(&deg) = self.cache().degree.get(&(a, c)) {
            return deg;
        }
        let deg = self.newton_weights(a).map(|w| {
            let (mut t, _, _, coeffs) = self.newton_coefficients(a, c, &w);
            (0..coeffs.len())
                .rev()
                .find(|&r| !t.is_zero(&coeffs[r]))
                .unwrap_or(0)
        });
        self.cache().degree.insert((a, c), deg);
        deg
    }

    /// Column `perm[j]` interpolates to degree exactly `j` on the nodes of
    /// column `perm[1]`.
    fn definition_check(&self, perm: &[usize]) -> bool {
        let a = perm[1];
        (1..perm.len()).all(|j| self.interpolant_degree(a, perm[j]) == Some(j))
    }

    /// `q^{perm[1]}_{perm[i], perm[j]}` vanishes exactly when `|i - j| > 1`.
    fn krein_check(&self, perm: &[usize]) -> bool {
        let one = perm[1];
        for i in 0..perm.len() {
            for j in i + 1..perm.len() {
                if self.krein_is_zero(perm[i], perm[j], one) != (j - i > 1) {
                    return false;
                }
            }
        }
        true
    }

    /// Witness polynomials in the normalization of `Q`: if `r` interpolates
    /// the rescaled data then `q(x) = m_c r(x / m_a)`.
    fn witness(&self, perm: &[usize]) -> Vec<Vec<ExactValue>> {
        let a = perm[1];
        let w = self
            .newton_weights(a)
            .expect("passing ordering has distinct nodes");
        perm.iter()
            .map(|&c| {
                let (mut t, th, nodes, coeffs) = self.newton_coefficients(a, c, &w);
                let mono = newton_to_monomial(&mut t, &coeffs, &nodes);
                let mc = self.m_in(&t, &th[1], c);
                let ma_inv = self.m_inv_in(&t, &th[0], a);
                let mut scale = mc;
                mono.iter()
                    .map(|e| {
                        let v = t.mul_full(e, &scale);
                        scale = t.mul_full(&scale, &ma_inv);
                        t.to_exact(&v)
                    })
                    .collect()
            })
            .collect()
    }

    /// Both Q-polynomial criteria on one ordering of eigenvalue indices,
    /// which must start with 0.
    pub fn check_ordering(&self, permutation: &[usize]) -> OrderingCheck {
        assert!(
            permutation.first() == Some(&0) && permutation.len() == self.diameter() + 1,
            "ordering must list every eigenvalue index, starting with 0"
        );
        OrderingCheck {
            definition: self.definition_check(permutation),
            krein: self.krein_check(permutation),
            permutation: permutation.to_vec(),
        }
    }

    /// Runs both Q-polynomial criteria on every ordering of the nontrivial
    /// eigenvalues, lexicographically by permutation.
    pub fn ordering_checks(&self) -> Vec<OrderingCheck> {
        permutations(self.diameter())
            .into_iter()
            .map(|tail| {
                let mut permutation = vec![0];
                permutation.extend(tail);
                self.check_ordering(&permutation)
            })
            .collect()
    }

    /// Every Q-polynomial ordering with its witness polynomials. The
    /// definition and Krein criteria are both evaluated and must agree.
    pub fn q_polynomial_orderings(&self) -> Result<Vec<QPolyOrdering>, Error> {
        let formal = !self.multiplicities_are_positive_integers();
        let mut out = Vec::new();
        for c in self.ordering_checks() {
            if c.definition != c.krein {
                return Err(Error::CriterionDisagreement {
                    ordering: c.permutation,
                    definition: c.definition,
                    krein: c.krein,
                });
            }
            if !c.definition {
                continue;
            }
            let perm = c.permutation;
            out.push(QPolyOrdering {
                witnesses: self.witness(&perm),
                eigenvalues: perm.iter().map(|&i| self.eigenvalues[i].clone()).collect(),
                dual_eigenvalues: self.q.iter().map(|row| row[perm[1]].clone()).collect(),
                permutation: perm,
                formal,
            });
        }
        Ok(out)
    }
}

/// Monomial coefficients of a Newton-form polynomial, trailing zeros
/// removed.
fn newton_to_monomial(t: &mut Tower, coeffs: &[Elem], nodes: &[Elem]) -> Vec<Elem> {
    let mut out: Vec<Elem> = vec![t.zero(); coeffs.len()];
    // basis = prod_{s<r} (x - nodes[s]), built incrementally
    let mut basis: Vec<Elem> = vec![t.one()];
    for (r, c) in coeffs.iter().enumerate() {
        for (i, b) in basis.iter().enumerate() {
            out[i] = t.add(&out[i], &t.mul_full(c, b));
        }
        if r + 1 < coeffs.len() {
            let mut next = vec![t.zero(); basis.len() + 1];
            for (i, b) in basis.iter().enumerate() {
                next[i + 1] = t.add(&next[i + 1], b);
                next[i] = t.sub(&next[i], &t.mul_full(b, &nodes[r]));
            }
            basis = next;
        }
    }
    while out.len() > 1 && t.is_zero(out.last().unwrap()) {
        out.pop();
    }
    out
}

/// Q-polynomial orderings of an intersection array.
pub fn q_polynomial_orderings(arr: &IntersectionArray) -> Result<Vec<QPolyOrdering>, Error> {
    spectrum(arr)?.q_polynomial_orderings()
}

/// `a_i = 0` for `i < D` and `a_D != 0`.
pub fn is_almost_bipartite(arr: &IntersectionArray) -> bool {
    arr.is_almost_bipartite()
}
