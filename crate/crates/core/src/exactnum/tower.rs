//! Exact arithmetic in `Q(a_0, ..., a_{r-1})` for real algebraic numbers
//! `a_i`.
//!
//! An element is a polynomial in the generators, reduced by a triangular set
//! of moduli `g_i(x_0, ..., x_i)`, each monic in `x_i`. The moduli start from
//! the defining polynomials and are split lazily whenever a zero test or an
//! inversion meets a zero divisor; the factor that vanishes at the chosen
//! point is picked by interval evaluation, which always terminates because
//! exactly one of two coprime factors vanishes there. Every answer is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::algebraic::{isolate_real_roots, AlgebraicReal};
use super::interval::Interval;
use super::poly::IntPolynomial;
use super::value::ExactValue;

/// A tower element. At depth 0 it is a rational; at depth `d > 0` it is a
/// polynomial in generator `d - 1` whose coefficients live at depth `d - 1`.
#[derive(Clone, Debug, PartialEq)]
pub enum Elem {
    Rat(BigRational),
    Poly(Vec<Elem>),
}

impl Elem {
    fn is_structural_zero(&self) -> bool {
        match self {
            Elem::Rat(r) => r.is_zero(),
            Elem::Poly(c) => c.is_empty(),
        }
    }

    fn into_coeffs(self) -> Vec<Elem> {
        match self {
            Elem::Poly(c) => c,
            Elem::Rat(_) => panic!("rational has no coefficient list"),
        }
    }

    /// The rational value if the element is structurally constant.
    pub fn as_constant(&self) -> Option<&BigRational> {
        match self {
            Elem::Rat(r) => Some(r),
            Elem::Poly(c) if c.is_empty() => None,
            Elem::Poly(c) if c.len() == 1 => c[0].as_constant(),
            Elem::Poly(_) => None,
        }
    }

    fn is_constant_zero(&self) -> bool {
        match self {
            Elem::Rat(r) => r.is_zero(),
            Elem::Poly(c) => c.is_empty(),
        }
    }
}

fn trim(mut v: Vec<Elem>) -> Vec<Elem> {
    while v.last().is_some_and(Elem::is_structural_zero) {
        v.pop();
    }
    v
}

fn add(a: &Elem, b: &Elem) -> Elem {
    match (a, b) {
        (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x + y),
        (Elem::Poly(x), Elem::Poly(y)) => Elem::Poly(add_coeffs(x, y)),
        _ => panic!("depth mismatch in tower addition"),
    }
}

fn add_coeffs(x: &[Elem], y: &[Elem]) -> Vec<Elem> {
    let n = x.len().max(y.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        match (x.get(i), y.get(i)) {
            (Some(a), Some(b)) => out.push(add(a, b)),
            (Some(a), None) | (None, Some(a)) => out.push(a.clone()),
            (None, None) => unreachable!(),
        }
    }
    trim(out)
}

fn neg(a: &Elem) -> Elem {
    match a {
        Elem::Rat(x) => Elem::Rat(-x),
        Elem::Poly(c) => Elem::Poly(c.iter().map(neg).collect()),
    }
}

fn sub(a: &Elem, b: &Elem) -> Elem {
    add(a, &neg(b))
}

fn sub_coeffs(x: &[Elem], y: &[Elem]) -> Vec<Elem> {
    add_coeffs(x, &y.iter().map(neg).collect::<Vec<_>>())
}

#[derive(Clone, Debug)]
struct Generator {
    point: AlgebraicReal,
    /// Monic in this generator; coefficients at this generator's index depth.
    modulus: Vec<Elem>,
}

/// A tower of real algebraic generators with exclusive-access mutation:
/// zero tests may split moduli and refine isolating intervals.
#[derive(Clone, Debug, Default)]
pub struct Tower {
    gens: Vec<Generator>,
}

impl Tower {
    /// Builds a tower over the irrational values among `points` and returns
    /// one element per input. Equal points share a generator; rational
    /// points become constants.
    pub fn with_points(points: &[AlgebraicReal]) -> (Tower, Vec<Elem>) {
        let mut tower = Tower::default();
        let mut slot: Vec<Option<usize>> = Vec::with_capacity(points.len());
        let mut distinct: Vec<AlgebraicReal> = Vec::new();
        for p in points {
            if p.is_rational() {
                slot.push(None);
                continue;
            }
            match distinct.iter().position(|q| q == p) {
                Some(i) => slot.push(Some(i)),
                None => {
                    distinct.push(p.clone());
                    slot.push(Some(distinct.len() - 1));
                }
            }
        }
        for p in &distinct {
            tower.push_generator(p.clone());
        }
        let depth = tower.depth();
        let elems = points
            .iter()
            .zip(slot)
            .map(|(p, s)| match s {
                None => tower.constant(p.as_rational().unwrap().clone()),
                Some(i) => tower.generator(i),
            })
            .collect();
        debug_assert!(tower.depth() == depth);
        (tower, elems)
    }

    /// Same as [`Tower::with_points`] for exact values.
    pub fn with_values(values: &[ExactValue]) -> (Tower, Vec<Elem>) {
        let pts: Vec<AlgebraicReal> = values.iter().map(ExactValue::to_algebraic).collect();
        Self::with_points(&pts)
    }

    pub fn depth(&self) -> usize {
        self.gens.len()
    }

    /// Adds an irrational generator. Earlier generators that are distinct
    /// roots of the same defining polynomial are divided out of the new
    /// modulus up front.
    fn push_generator(&mut self, point: AlgebraicReal) {
        let idx = self.gens.len();
        let def = point.defining_polynomial();
        let mut modulus: Vec<Elem> = def
            .coeffs()
            .iter()
            .map(|c| lift(BigRational::from_integer(c.clone()), idx))
            .collect();
        // make monic
        let lc = BigRational::from_integer(def.leading());
        let inv = lift(BigRational::one() / lc, idx);
        modulus = modulus.iter().map(|c| self.mul(c, &inv, idx)).collect();
        for (j, g) in self.gens.iter().enumerate() {
            if g.point.defining_polynomial() == def {
                // divide by (x - x_j)
                let xj = self.generator_at(j, idx);
                let lin = vec![neg(&xj), lift(BigRational::one(), idx)];
                modulus = self.poly_divrem_monic(&modulus, &lin, idx).0;
            }
        }
        self.gens.push(Generator { point, modulus });
    }

    /// The element `x_i` at full depth.
    pub fn generator(&self, i: usize) -> Elem {
        self.generator_at(i, self.depth())
    }

    fn generator_at(&self, i: usize, depth: usize) -> Elem {
        assert!(i < depth);
        // x_i at depth i+1 is Poly([0, 1]); lift constants above it.
        let mut e = Elem::Poly(vec![
            lift(BigRational::zero(), i),
            lift(BigRational::one(), i),
        ]);
        for _ in i + 1..depth {
            e = Elem::Poly(vec![e]);
        }
        e
    }

    pub fn constant(&self, r: BigRational) -> Elem {
        lift(r, self.depth())
    }

    pub fn int(&self, i: i64) -> Elem {
        self.constant(BigRational::from_integer(BigInt::from(i)))
    }

    pub fn zero(&self) -> Elem {
        self.int(0)
    }

    pub fn one(&self) -> Elem {
        self.int(1)
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        add(a, b)
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        sub(a, b)
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        neg(a)
    }

    pub fn mul_full(&self, a: &Elem, b: &Elem) -> Elem {
        self.mul(a, b, self.depth())
    }

    pub fn pow(&self, a: &Elem, e: u32) -> Elem {
        let mut out = self.one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = self.mul_full(&out, &base);
            }
            base = self.mul_full(&base, &base);
            e >>= 1;
        }
        out
    }

    /// Evaluates an integer polynomial at a tower element.
    pub fn eval_poly(&self, p: &IntPolynomial, x: &Elem) -> Elem {
        p.coeffs().iter().rev().fold(self.zero(), |acc, c| {
            let t = self.mul_full(&acc, x);
            add(&t, &self.constant(BigRational::from_integer(c.clone())))
        })
    }

    /// Rational coefficients of an element of a tower with at most one
    /// generator, lowest degree first.
    pub fn coefficients(&self, a: &Elem) -> Vec<BigRational> {
        let d = self.depth();
        assert!(d <= 1, "coefficient extraction needs a single generator");
        match self.reduce_full(a, d) {
            Elem::Rat(r) => vec![r],
            Elem::Poly(c) => c
                .into_iter()
                .map(|e| match e {
                    Elem::Rat(r) => r,
                    Elem::Poly(_) => unreachable!(),
                })
                .collect(),
        }
    }

    /// Evaluates a polynomial with rational coefficients at a tower element.
    pub fn eval_rational_poly(&self, p: &[BigRational], x: &Elem) -> Elem {
        p.iter().rev().fold(self.zero(), |acc, c| {
            let t = self.mul_full(&acc, x);
            add(&t, &self.constant(c.clone()))
        })
    }

    /// Exact zero test at the tower's point.
    pub fn is_zero(&mut self, a: &Elem) -> bool {
        // cheap exclusion first: most nonzero elements separate from 0 after
        // a few rounds of refinement
        for _ in 0..4 {
            if a.as_constant().is_some() || self.enclose(a).strict_sign().is_some() {
                break;
            }
            for _ in 0..8 {
                self.refine();
            }
        }
        if self.enclose(a).strict_sign().is_some() {
            return false;
        }
        let d = self.depth();
        self.is_zero_at(a, d)
    }

    /// Sign at the tower's point.
    pub fn sign(&mut self, a: &Elem) -> i32 {
        if self.is_zero(a) {
            return 0;
        }
        loop {
            if let Some(s) = self.enclose(a).strict_sign() {
                return s;
            }
            self.refine_points(self.depth());
        }
    }

    pub fn cmp(&mut self, a: &Elem, b: &Elem) -> std::cmp::Ordering {
        let d = sub(a, b);
        self.sign(&d).cmp(&0)
    }

    pub fn equal(&mut self, a: &Elem, b: &Elem) -> bool {
        let d = sub(a, b);
        self.is_zero(&d)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&mut self, a: &Elem) -> Option<Elem> {
        let d = self.depth();
        if self.is_zero_at(a, d) {
            return None;
        }
        Some(self.inv_nonzero(a, d))
    }

    pub fn div(&mut self, a: &Elem, b: &Elem) -> Option<Elem> {
        let i = self.inv(b)?;
        Some(self.mul_full(a, &i))
    }

    /// Interval enclosure at the current precision.
    pub fn enclose(&self, a: &Elem) -> Interval {
        self.enclose_at(a, self.depth())
    }

    /// Halves the isolating interval of every generator.
    pub fn refine(&mut self) {
        let d = self.depth();
        self.refine_points(d);
    }

    /// The exact rational value if the element is rational at the point.
    pub fn as_rational(&mut self, a: &Elem) -> Option<BigRational> {
        match self.to_exact(a) {
            ExactValue::Rational(r) => Some(r),
            ExactValue::Algebraic(_) => None,
        }
    }

    /// Converts to a standalone exact value (rational or defining polynomial
    /// with isolating interval).
    pub fn to_exact(&mut self, a: &Elem) -> ExactValue {
        let d = self.depth();
        let a = self.reduce_full(a, d);
        if let Some(r) = a.as_constant() {
            return ExactValue::Rational(r.clone());
        }
        if a.is_constant_zero() {
            return ExactValue::Rational(BigRational::zero());
        }
        let annihilator = self.annihilating_polynomial(&a);
        let roots = isolate_real_roots(&annihilator);
        loop {
            let enc = self.enclose(&a);
            let mut hits = roots.iter().filter(|r| r.interval().meets(&enc));
            if let (Some(r), None) = (hits.next(), hits.next()) {
                return ExactValue::from_algebraic(r.clone());
            }
            self.refine_points(d);
        }
    }

    // ---- internals -------------------------------------------------------

    fn mul(&self, a: &Elem, b: &Elem, depth: usize) -> Elem {
        match (a, b) {
            (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x * y),
            (Elem::Poly(x), Elem::Poly(y)) => {
                if x.is_empty() || y.is_empty() {
                    return Elem::Poly(Vec::new());
                }
                let lower = depth - 1;
                let mut out = vec![lift(BigRational::zero(), lower); x.len() + y.len() - 1];
                for (i, ai) in x.iter().enumerate() {
                    if ai.is_structural_zero() {
                        continue;
                    }
                    for (j, bj) in y.iter().enumerate() {
                        if bj.is_structural_zero() {
                            continue;
                        }
                        let t = self.mul(ai, bj, lower);
                        out[i + j] = add(&out[i + j], &t);
                    }
                }
                Elem::Poly(self.reduce_by_modulus(trim(out), depth))
            }
            _ => panic!("depth mismatch in tower multiplication"),
        }
    }

    /// Reduces a coefficient vector at `depth` by generator `depth-1`'s
    /// modulus.
    fn reduce_by_modulus(&self, mut v: Vec<Elem>, depth: usize) -> Vec<Elem> {
        let m = &self.gens[depth - 1].modulus;
        let dm = m.len() - 1;
        let lower = depth - 1;
        while v.len() > dm {
            let top = v.pop().unwrap();
            if top.is_structural_zero() {
                continue;
            }
            let shift = v.len() - dm;
            for (i, mi) in m.iter().take(dm).enumerate() {
                let t = self.mul(&top, mi, lower);
                v[shift + i] = sub(&v[shift + i], &t);
            }
        }
        trim(v)
    }

    /// Reduces coefficients recursively, then by this level's modulus.
    fn reduce_full(&self, a: &Elem, depth: usize) -> Elem {
        match a {
            Elem::Rat(_) => a.clone(),
            Elem::Poly(c) => {
                let c: Vec<Elem> = c.iter().map(|x| self.reduce_full(x, depth - 1)).collect();
                Elem::Poly(self.reduce_by_modulus(trim(c), depth))
            }
        }
    }

    fn enclose_at(&self, a: &Elem, depth: usize) -> Interval {
        match a {
            Elem::Rat(r) => Interval::point(r.clone()),
            Elem::Poly(c) => {
                let x = self.gens[depth - 1].point.interval();
                self.enclose_poly(c, &x, depth - 1)
            }
        }
    }

    /// Horner enclosure of a polynomial whose coefficients live at `depth`.
    fn enclose_poly(&self, c: &[Elem], x: &Interval, depth: usize) -> Interval {
        c.iter().rev().fold(Interval::zero(), |acc, ci| {
            acc.mul(x).add(&self.enclose_at(ci, depth))
        })
    }

    fn refine_points(&mut self, depth: usize) {
        for g in self.gens.iter_mut().take(depth) {
            g.point.bisect();
        }
    }

    fn is_zero_at(&mut self, a: &Elem, depth: usize) -> bool {
        if depth == 0 {
            return a.is_structural_zero();
        }
        let a = self.reduce_full(a, depth).into_coeffs();
        let a = self.poly_trim(a, depth - 1);
        if a.is_empty() {
            return true;
        }
        if a.len() == 1 {
            return false;
        }
        let g = self.gens[depth - 1].modulus.clone();
        let d = self.poly_gcd(g.clone(), a, depth - 1);
        if d.len() == 1 {
            return false;
        }
        let (quot, _) = self.poly_divrem_monic(&g, &d, depth - 1);
        let d_vanishes = self.which_vanishes(&d, &quot, depth);
        self.gens[depth - 1].modulus = if d_vanishes { d } else { quot };
        d_vanishes
    }

    /// Exactly one of the coprime factors `d`, `q` vanishes at the point of
    /// generator `depth-1`; returns true when it is `d`.
    fn which_vanishes(&mut self, d: &[Elem], q: &[Elem], depth: usize) -> bool {
        loop {
            let x = self.gens[depth - 1].point.interval();
            if !self.enclose_poly(d, &x, depth - 1).contains_zero() {
                return false;
            }
            if !self.enclose_poly(q, &x, depth - 1).contains_zero() {
                return true;
            }
            self.refine_points(depth);
        }
    }

    /// Inverse of an element known to be nonzero at the point, whose level
    /// modulus is already coprime to it (guaranteed after `is_zero_at`).
    fn inv_nonzero(&mut self, a: &Elem, depth: usize) -> Elem {
        if depth == 0 {
            match a {
                Elem::Rat(r) => return Elem::Rat(BigRational::one() / r),
                Elem::Poly(_) => unreachable!(),
            }
        }
        let f = depth - 1;
        let a = self.reduce_full(a, depth).into_coeffs();
        let a = self.poly_trim(a, f);
        if a.len() == 1 {
            let c = self.inv_nonzero(&a[0], f);
            return Elem::Poly(vec![c]);
        }
        loop {
            let g = self.gens[f].modulus.clone();
            // extended Euclid: t_i * a == r_i (mod g)
            let (mut r0, mut r1) = (g.clone(), a.clone());
            let mut t0: Vec<Elem> = Vec::new();
            let mut t1: Vec<Elem> = vec![lift(BigRational::one(), f)];
            while r1.len() > 1 {
                let (q, r) = self.poly_divrem(&r0, &r1, f);
                let r = self.poly_trim(r, f);
                let qt = self.poly_mul(&q, &t1, f);
                let t2 = sub_coeffs(&t0, &qt);
                r0 = std::mem::replace(&mut r1, r);
                t0 = std::mem::replace(&mut t1, t2);
            }
            if r1.is_empty() {
                // nontrivial common factor r0; the point is a root of g / r0
                let lc_inv = self.inv_nonzero(r0.last().unwrap(), f);
                let monic: Vec<Elem> = r0.iter().map(|c| self.mul(c, &lc_inv, f)).collect();
                let (quot, _) = self.poly_divrem_monic(&g, &monic, f);
                self.gens[f].modulus = quot;
                continue;
            }
            let c_inv = self.inv_nonzero(&r1[0], f);
            let t: Vec<Elem> = t1.iter().map(|c| self.mul(c, &c_inv, f)).collect();
            return Elem::Poly(self.reduce_by_modulus(trim(t), depth));
        }
    }

    /// Drops leading coefficients that vanish at the point (coefficients at
    /// `depth`).
    fn poly_trim(&mut self, mut p: Vec<Elem>, depth: usize) -> Vec<Elem> {
        while let Some(last) = p.last() {
            let last = last.clone();
            if self.is_zero_at(&last, depth) {
                p.pop();
            } else {
                break;
            }
        }
        p
    }

    fn poly_mul(&self, a: &[Elem], b: &[Elem], depth: usize) -> Vec<Elem> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![lift(BigRational::zero(), depth); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                let t = self.mul(x, y, depth);
                out[i + j] = add(&out[i + j], &t);
            }
        }
        trim(out)
    }

    /// Division with remainder; `b` must have a nonzero leading coefficient
    /// at the point.
    fn poly_divrem(&mut self, a: &[Elem], b: &[Elem], depth: usize) -> (Vec<Elem>, Vec<Elem>) {
        let lc_inv = {
            let lc = b.last().expect("division by zero polynomial").clone();
            let nz = !self.is_zero_at(&lc, depth);
            assert!(nz, "leading coefficient vanishes");
            self.inv_nonzero(&lc, depth)
        };
        let monic: Vec<Elem> = b.iter().map(|c| self.mul(c, &lc_inv, depth)).collect();
        let (q, r) = self.poly_divrem_monic(a, &monic, depth);
        let q = q.iter().map(|c| self.mul(c, &lc_inv, depth)).collect();
        (trim(q), r)
    }

    /// Division by a polynomial whose leading coefficient is one.
    fn poly_divrem_monic(&self, a: &[Elem], b: &[Elem], depth: usize) -> (Vec<Elem>, Vec<Elem>) {
        let db = b.len() - 1;
        let mut r = a.to_vec();
        if r.len() <= db {
            return (Vec::new(), trim(r));
        }
        let mut q = vec![lift(BigRational::zero(), depth); r.len() - db];
        while r.len() > db {
            let top = r.pop().unwrap();
            let shift = r.len() - db;
            for (i, bi) in b.iter().take(db).enumerate() {
                let t = self.mul(&top, bi, depth);
                r[shift + i] = sub(&r[shift + i], &t);
            }
            q[shift] = top;
        }
        (trim(q), trim(r))
    }

    /// Monic gcd over the field at `depth`.
    fn poly_gcd(&mut self, a: Vec<Elem>, b: Vec<Elem>, depth: usize) -> Vec<Elem> {
        let mut a = self.poly_trim(a, depth);
        let mut b = self.poly_trim(b, depth);
        while !b.is_empty() {
            let (_, r) = self.poly_divrem(&a, &b, depth);
            let r = self.poly_trim(r, depth);
            a = std::mem::replace(&mut b, r);
        }
        let lc_inv = self.inv_nonzero(&a.last().unwrap().clone(), depth);
        a.iter().map(|c| self.mul(c, &lc_inv, depth)).collect()
    }

    /// Dimension of the tower as a rational vector space.
    fn dimension(&self, depth: usize) -> usize {
        self.gens
            .iter()
            .take(depth)
            .map(|g| g.modulus.len() - 1)
            .product()
    }

    /// Coordinates of a fully reduced element in the monomial basis.
    fn flatten(&self, a: &Elem, depth: usize, out: &mut Vec<BigRational>) {
        match a {
            Elem::Rat(r) => out.push(r.clone()),
            Elem::Poly(c) => {
                let deg = self.gens[depth - 1].modulus.len() - 1;
                let block = self.dimension(depth - 1);
                for i in 0..deg {
                    match c.get(i) {
                        Some(ci) => self.flatten(ci, depth - 1, out),
                        None => out.extend(std::iter::repeat_n(BigRational::zero(), block)),
                    }
                }
            }
        }
    }

    /// A square-free integer polynomial vanishing at `a`, from the first
    /// rational linear dependency among its powers.
    fn annihilating_polynomial(&mut self, a: &Elem) -> IntPolynomial {
        let depth = self.depth();
        let n = self.dimension(depth);
        // rows: (vector, combination of powers), pivot = first nonzero index
        let mut rows: Vec<(usize, Vec<BigRational>, Vec<BigRational>)> = Vec::new();
        let mut power = self.one();
        for k in 0..=n {
            let reduced = self.reduce_full(&power, depth);
            let mut v = Vec::with_capacity(n);
            self.flatten(&reduced, depth, &mut v);
            let mut comb = vec![BigRational::zero(); n + 1];
            comb[k] = BigRational::one();
            for (pivot, row, rc) in &rows {
                if v[*pivot].is_zero() {
                    continue;
                }
                let f = &v[*pivot] / &row[*pivot];
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= &f * y;
                }
                for (x, y) in comb.iter_mut().zip(rc) {
                    *x -= &f * y;
                }
            }
            match v.iter().position(|x| !x.is_zero()) {
                Some(p) => rows.push((p, v, comb)),
                None => return rational_coeffs_to_int(&comb).square_free_part(),
            }
            power = self.mul_full(&power, a);
        }
        unreachable!("powers beyond the dimension are always dependent")
    }
}

fn rational_coeffs_to_int(c: &[BigRational]) -> IntPolynomial {
    let lcm = c.iter().fold(BigInt::one(), |acc, x| {
        num_integer::Integer::lcm(&acc, x.denom())
    });
    IntPolynomial::new(
        c.iter()
            .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
            .collect(),
    )
    .primitive_part()
}

/// Embeds a rational at the given depth.
fn lift(r: BigRational, depth: usize) -> Elem {
    if depth == 0 {
        return Elem::Rat(r);
    }
    if r.is_zero() {
        return Elem::Poly(Vec::new());
    }
    Elem::Poly(vec![lift(r, depth - 1)])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn sqrt_two_squared_is_two() {
        let roots = isolate_real_roots(&p(&[-2, 0, 1]));
        let (mut t, e) = Tower::with_points(&roots[1..]);
        let sq = t.mul_full(&e[0], &e[0]);
        assert_eq!(
            t.as_rational(&sq),
            Some(BigRational::from_integer(2.into()))
        );
        let inv = t.inv(&e[0]).unwrap();
        let half = t.sub(
            &t.mul_full(&inv, &inv),
            &t.constant(BigRational::new(1.into(), 2.into())),
        );
        assert!(t.is_zero(&half));
        assert_eq!(t.sign(&e[0]), 1);
    }

    #[test]
    fn heptagon_roots_sum_and_product() {
        // roots of x^3 + x^2 - 2x - 1: sum -1, product 1
        let roots = isolate_real_roots(&p(&[-1, -2, 1, 1]));
        let (mut t, e) = Tower::with_points(&roots);
        let s = t.add(&t.add(&e[0], &e[1]), &e[2]);
        assert_eq!(
            t.as_rational(&s),
            Some(BigRational::from_integer((-1).into()))
        );
        let pr = t.mul_full(&t.mul_full(&e[0], &e[1]), &e[2]);
        assert_eq!(t.as_rational(&pr), Some(BigRational::one()));
        // 2cos(a)^2 - 2 = 2cos(2a): squaring the largest root lands on the middle one
        let dbl = t.sub(&t.mul_full(&e[2], &e[2]), &t.int(2));
        let v = t.to_exact(&dbl);
        assert_eq!(v.to_algebraic(), roots[1]);
    }

    #[test]
    fn zero_divisor_is_split_away() {
        // generator sqrt(2) given through the reducible (x^2-2)(x^2-3)
        let roots = isolate_real_roots(&p(&[6, 0, -5, 0, 1]));
        let sqrt2 = roots[2].clone();
        let (mut t, e) = Tower::with_points(&[sqrt2]);
        let z = t.sub(&t.mul_full(&e[0], &e[0]), &t.int(2));
        assert!(t.is_zero(&z));
        let w = t.sub(&t.mul_full(&e[0], &e[0]), &t.int(3));
        assert!(!t.is_zero(&w));
        let wi = t.inv(&w).unwrap();
        let one = t.mul_full(&w, &wi);
        assert_eq!(t.as_rational(&one), Some(BigRational::one()));
    }

    #[test]
    fn mixed_fields_sqrt2_sqrt3() {
        let r2 = isolate_real_roots(&p(&[-2, 0, 1]))[1].clone();
        let r3 = isolate_real_roots(&p(&[-3, 0, 1]))[1].clone();
        let (mut t, e) = Tower::with_points(&[r2, r3]);
        let s = t.add(&e[0], &e[1]);
        // (sqrt2 + sqrt3)^2 = 5 + 2 sqrt6
        let v = t.to_exact(&s);
        assert_eq!(
            v.to_algebraic().defining_polynomial(),
            p(&[1, 0, -10, 0, 1])
        );
        assert!((v.to_f64() - (2f64.sqrt() + 3f64.sqrt())).abs() < 1e-14);
        assert!(!t.is_zero(&s));
    }
}
