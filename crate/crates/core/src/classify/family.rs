use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::Error;
use crate::exactnum::{ExactValue, Tower};
use crate::spectral::IntersectionArray;

/// A point `(beta, mu)` of the diameter-3 family with its parameters and
/// eigenvalues `theta_0..theta_3` in Q-polynomial order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct D3FamilyPoint {
    pub beta: ExactValue,
    pub mu: i64,
    pub k: ExactValue,
    pub c2: ExactValue,
    pub c3: ExactValue,
    /// `(beta^2 + beta - 1)(beta^2 + beta - 1 - beta mu)`.
    pub b2: ExactValue,
    /// `b2 == k - mu`.
    pub b2_consistent: bool,
    pub theta: Vec<ExactValue>,
    /// `{k, k-1, k-mu; 1, mu, c3}` when `k` and `c3` are integers that fit.
    pub array: Option<IntersectionArray>,
}

/// Evaluates `k`, `c_2 = mu`, `c_3` and `theta_0..theta_3` at `(beta, mu)`.
/// Infeasible points are returned as they are.
pub fn d3_family(beta: &ExactValue, mu: i64) -> Result<D3FamilyPoint, Error> {
    if mu < 1 {
        return Err(Error::Parameter(format!("mu must be at least 1, got {mu}")));
    }
    let (mut t, e) = Tower::with_values(std::slice::from_ref(beta));
    let b = &e[0];
    let one = t.one();
    let m = t.int(mu);
    let b1 = t.add(b, &one);
    let bb = t.mul_full(b, b);
    // beta^2 + beta - 1
    let g = t.sub(&t.add(&bb, b), &one);
    let k = t.add(
        &one,
        &t.mul_full(
            &t.sub(&bb, &one),
            &t.sub(&t.mul_full(b, &t.add(b, &t.int(2))), &t.mul_full(&b1, &m)),
        ),
    );
    let g_mu = t.sub(&g, &t.mul_full(&b1, &m));
    let c3 = t.neg(&t.mul_full(&b1, &g_mu));
    let g_beta_mu = t.sub(&g, &t.mul_full(b, &m));
    let theta1 = t.mul_full(&b1, &g_beta_mu);
    let theta3 = t.sub(&t.sub(&one, b), &bb);
    let b2 = t.mul_full(&g, &g_beta_mu);
    let b2_consistent = t.equal(&b2, &t.sub(&k, &m));

    let k = t.to_exact(&k);
    let c3 = t.to_exact(&c3);
    let theta = vec![
        k.clone(),
        t.to_exact(&theta1),
        t.to_exact(&g_mu),
        t.to_exact(&theta3),
    ];
    let array = match (
        k.as_integer().and_then(|x| x.to_i64()),
        c3.as_integer().and_then(|x| x.to_i64()),
    ) {
        (Some(ki), Some(c3i)) => ki
            .checked_sub(mu)
            .and_then(|b2i| IntersectionArray::new(vec![ki, ki - 1, b2i], vec![1, mu, c3i]).ok()),
        _ => None,
    };
    Ok(D3FamilyPoint {
        beta: beta.clone(),
        mu,
        k,
        c2: ExactValue::from_int(mu),
        c3,
        b2: t.to_exact(&b2),
        b2_consistent,
        theta,
        array,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::isolate_real_roots;
    use crate::exactnum::IntPolynomial;

    fn ints(v: &[ExactValue]) -> Vec<i64> {
        v.iter().map(|x| x.as_i64().unwrap()).collect()
    }

    #[test]
    fn known_points() {
        let p = d3_family(&ExactValue::from_int(-2), 1).unwrap();
        assert_eq!(
            ints(&[p.k.clone(), p.c2.clone(), p.c3.clone()]),
            vec![4, 1, 2]
        );
        assert_eq!(ints(&p.theta), vec![4, -3, 2, -1]);
        assert_eq!(p.array.unwrap().to_string(), "{4,3,3;1,1,2}");
        let p = d3_family(&ExactValue::from_int(2), 2).unwrap();
        assert_eq!(
            ints(&[p.k.clone(), p.c2.clone(), p.c3.clone()]),
            vec![7, 2, 3]
        );
        assert_eq!(ints(&p.theta), vec![7, 3, -1, -5]);
        let p = d3_family(&ExactValue::from_int(-3), 1).unwrap();
        assert_eq!(
            ints(&[p.k.clone(), p.c2.clone(), p.c3.clone()]),
            vec![41, 1, 14]
        );
        assert_eq!(ints(&p.theta), vec![41, -16, 7, -5]);
        assert!(p.b2_consistent);
        assert_eq!(p.array.unwrap().to_string(), "{41,40,40;1,1,14}");
        assert!(d3_family(&ExactValue::from_int(-3), 0).is_err());
    }

    #[test]
    fn heptagon_point() {
        let roots = isolate_real_roots(&IntPolynomial::from_i64(&[-1, -2, 1, 1]));
        for r in roots {
            let p = d3_family(&ExactValue::from_algebraic(r), 1).unwrap();
            assert_eq!(p.k, ExactValue::from_int(2));
            assert_eq!(p.c3, ExactValue::from_int(1));
            assert!(p.b2_consistent);
            assert_eq!(p.array.unwrap().to_string(), "{2,1,1;1,1,1}");
        }
    }
}
