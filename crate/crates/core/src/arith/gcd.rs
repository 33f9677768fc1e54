//! Multivariate polynomial gcd over the integers.
//!
//! Recursive scheme: strip the monomial content, pick a main variable shared by
//! both operands, split off the content with respect to it (recursively), and
//! run the subresultant remainder sequence on the primitive parts viewed as
//! univariate polynomials over the ring of the remaining variables.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{IntPoly, Monomial, Poly};

/// Gcd normalized to a positive leading coefficient; `gcd(p, 0)` is `p` normalized.
pub fn poly_gcd(p: &IntPoly, q: &IntPoly) -> IntPoly {
    if p.is_zero() {
        return normalize_sign(q.clone());
    }
    if q.is_zero() {
        return normalize_sign(p.clone());
    }
    let mp = p.monomial_content();
    let mq = q.monomial_content();
    let mg = mp.meet(&mq);
    let g = gcd_core(&p.div_monomial(&mp), &q.div_monomial(&mq));
    normalize_sign(g.mul_monomial(&mg, &BigInt::one()))
}

/// Flips the sign so the graded-lex leading coefficient is positive.
pub fn normalize_sign(p: IntPoly) -> IntPoly {
    if p.leading_coeff().is_negative() {
        p.neg()
    } else {
        p
    }
}

/// Primitive part and integer content, with positive leading coefficient.
pub fn primitive_part(p: &IntPoly) -> (BigInt, IntPoly) {
    if p.is_zero() {
        return (BigInt::zero(), p.clone());
    }
    let mut c = p.int_content();
    if p.leading_coeff().is_negative() {
        c = -c;
    }
    let pp = p.div_coeff_exact(&c).expect("content divides");
    (c, pp)
}

fn gcd_core(p: &IntPoly, q: &IntPoly) -> IntPoly {
    let vars = p.vars().clone();
    if p.is_constant() || q.is_constant() {
        return IntPoly::constant(&vars, p.int_content().gcd(&q.int_content()));
    }
    // cheap exits when one operand divides the other
    let (small, large) = if p.num_terms() <= q.num_terms() { (p, q) } else { (q, p) };
    if small.total_degree() <= large.total_degree() && large.div_exact(small).is_some() {
        return small.clone();
    }
    let n = vars.len();
    let main = (0..n)
        .filter(|&v| p.uses_var(v) && q.uses_var(v))
        .min_by_key(|&v| (p.degree_in(v).min(q.degree_in(v)), p.degree_in(v).max(q.degree_in(v))));
    let Some(x) = main else {
        // no shared variable: only integer factors can be common
        return IntPoly::constant(&vars, p.int_content().gcd(&q.int_content()));
    };
    let pu = to_univariate(p, x);
    let qu = to_univariate(q, x);
    let cp = univariate_content(&pu);
    let cq = univariate_content(&qu);
    let c = poly_gcd(&cp, &cq);
    let pu = div_univariate(&pu, &cp);
    let qu = div_univariate(&qu, &cq);
    let g = subresultant_gcd(pu, qu);
    let gc = univariate_content(&g);
    let g = div_univariate(&g, &gc);
    &c * &from_univariate(&g, x)
}

type Univariate = Vec<IntPoly>;

fn to_univariate(p: &IntPoly, x: usize) -> Univariate {
    let deg = p.degree_in(x) as usize;
    let mut buckets: Vec<Vec<(Monomial, BigInt)>> = vec![Vec::new(); deg + 1];
    for (m, c) in p.terms() {
        let e = m.exponents()[x] as usize;
        let mut exps = m.exponents().to_vec();
        exps[x] = 0;
        buckets[e].push((Monomial::from_exponents(&exps), c.clone()));
    }
    buckets
        .into_iter()
        .map(|t| Poly::from_terms(p.vars(), t))
        .collect()
}

fn from_univariate(u: &[IntPoly], x: usize) -> IntPoly {
    let vars = u[0].vars().clone();
    let mut terms = Vec::new();
    for (e, c) in u.iter().enumerate() {
        let xe = Monomial::var(vars.len(), x);
        let shift = Monomial::from_exponents(
            &xe.exponents().iter().map(|&v| v * e as u16).collect::<Vec<_>>(),
        );
        for (m, k) in c.terms() {
            terms.push((m.mul(&shift), k.clone()));
        }
    }
    Poly::from_terms(&vars, terms)
}

fn trim(u: &mut Univariate) {
    while u.last().is_some_and(|c| c.is_zero()) {
        u.pop();
    }
}

fn udeg(u: &Univariate) -> usize {
    u.len() - 1
}

fn univariate_content(u: &[IntPoly]) -> IntPoly {
    let vars = u[0].vars().clone();
    let mut g = IntPoly::zero(&vars);
    // gcd is cheapest when started from the sparsest coefficient
    let mut order: Vec<&IntPoly> = u.iter().filter(|c| !c.is_zero()).collect();
    order.sort_by_key(|c| c.num_terms());
    for c in order {
        g = poly_gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn div_univariate(u: &[IntPoly], d: &IntPoly) -> Univariate {
    if d.is_one() {
        return u.to_vec();
    }
    u.iter()
        .map(|c| c.div_exact(d).expect("content divides every coefficient"))
        .collect()
}

fn pseudo_remainder(a: &Univariate, b: &Univariate) -> Univariate {
    let db = udeg(b);
    let lcb = &b[db];
    let mut r = a.clone();
    trim(&mut r);
    let mut e = udeg(a) as i64 - db as i64 + 1;
    while !r.is_empty() && udeg(&r) >= db {
        let dr = udeg(&r);
        let t = r[dr].clone();
        let s = dr - db;
        for c in r.iter_mut() {
            *c = &*c * lcb;
        }
        for (j, bj) in b.iter().enumerate() {
            let prod = &t * bj;
            r[j + s] = &r[j + s] - &prod;
        }
        debug_assert!(r[dr].is_zero());
        trim(&mut r);
        e -= 1;
    }
    if e > 0 && !r.is_empty() {
        let f = lcb.pow(e as u32);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

/// Last nonzero subresultant of two primitive univariate polynomials; its
/// primitive part is the gcd.
fn subresultant_gcd(a: Univariate, b: Univariate) -> Univariate {
    let (mut a, mut b) = if udeg(&a) >= udeg(&b) { (a, b) } else { (b, a) };
    let vars = a[0].vars().clone();
    let mut g = IntPoly::one(&vars);
    let mut h = IntPoly::one(&vars);
    loop {
        let delta = (udeg(&a) - udeg(&b)) as u32;
        let r = pseudo_remainder(&a, &b);
        if r.is_empty() {
            return b;
        }
        if udeg(&r) == 0 {
            return vec![IntPoly::one(&vars)];
        }
        let divisor = &g * &h.pow(delta);
        a = b;
        b = div_univariate(&r, &divisor);
        g = a[udeg(&a)].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => g
                .pow(d)
                .div_exact(&h.pow(d - 1))
                .expect("subresultant h-update is exact"),
        };
    }
}
