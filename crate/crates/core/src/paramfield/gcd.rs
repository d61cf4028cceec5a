//! Multivariate GCD over the integers for [`ParamPolynomial`].
//!
//! A cheap modular test settles the common case (coprime inputs) without any
//! pseudo-division. Otherwise the heuristic GCD (evaluation at a large integer,
//! recursion, symmetric ξ-adic reconstruction, trial division) runs, with the
//! recursive primitive PRS as the fallback when it gives up.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use num_traits::{One, ToPrimitive, Zero};

use super::poly::{HalfExponents, ParamPolynomial, NPARAMS};

const P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn addmod(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

fn submod(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn powmod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b);
        }
        b = mulmod(b, b);
        e >>= 1;
    }
    r
}

fn invmod(a: u64) -> u64 {
    powmod(a, P - 2)
}

fn bigint_mod(c: &BigInt) -> u64 {
    let m = c.mod_floor(&BigInt::from(P));
    m.to_u64().expect("reduced residue fits in u64")
}

/// Fixed pseudo-random evaluation points, one per parameter. Deterministic so
/// normal forms never depend on run order.
const EVAL_POINTS: [u64; NPARAMS] = [
    0x1d8e_4e27_c47d_124f % P,
    0x0a3b_91f2_7705_c3e9 % P,
    0x13c6_ef37_2fe9_4f82 % P,
    0x05be_e3b5_1e4c_9d71 % P,
    0x1f83_d9ab_fb41_bd6b % P,
    0x0c84_2c9e_2b7f_aa35 % P,
];

/// Image of `p` as a univariate polynomial in `var` (dense, index = exponent),
/// every other parameter replaced by its evaluation point.
fn univariate_image(p: &ParamPolynomial, var: usize) -> Vec<u64> {
    let deg = p.degree_in(var).max(0) as usize;
    let mut out = vec![0u64; deg + 1];
    for (e, c) in p.terms() {
        let mut v = bigint_mod(c);
        for (k, &x) in e.0.iter().enumerate() {
            if k == var || x == 0 {
                continue;
            }
            debug_assert!(x > 0);
            v = mulmod(v, powmod(EVAL_POINTS[k], x as u64));
        }
        let d = e.0[var] as usize;
        out[d] = addmod(out[d], v);
    }
    out
}

fn trim(p: &mut Vec<u64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn uni_gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // a mod b
        let lb = invmod(*b.last().unwrap());
        while a.len() >= b.len() {
            let lead = mulmod(*a.last().unwrap(), lb);
            let off = a.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                a[off + i] = submod(a[off + i], mulmod(lead, bc));
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// True when `a` and `b` provably share no factor of positive degree.
/// A `false` answer is inconclusive.
fn provably_coprime(a: &ParamPolynomial, b: &ParamPolynomial) -> bool {
    let va = a.variables();
    let vb = b.variables();
    for var in 0..NPARAMS {
        if !(va[var] && vb[var]) {
            continue;
        }
        let ia = univariate_image(a, var);
        let ib = univariate_image(b, var);
        // degrees must survive the evaluation for the bound to be valid
        if ia.last() == Some(&0) || ib.last() == Some(&0) {
            return false;
        }
        if uni_gcd_degree(ia, ib) > 0 {
            return false;
        }
    }
    true
}

fn normalize_sign(p: ParamPolynomial) -> ParamPolynomial {
    if p.leading_coefficient_sign() == Some(true) {
        -p
    } else {
        p
    }
}

/// GCD of two polynomials with nonnegative exponents, including the integer
/// content and any common monomial, normalized to a positive leading coefficient.
pub fn poly_gcd(a: &ParamPolynomial, b: &ParamPolynomial) -> ParamPolynomial {
    debug_assert!(a.is_nonnegative() && b.is_nonnegative());
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    let ma = a.min_exponents();
    let mb = b.min_exponents();
    let common = ma.meet(&mb);
    let a1 = a.shift(-ma);
    let b1 = b.shift(-mb);
    if is_constant(&a1) || is_constant(&b1) || provably_coprime(&a1, &b1) {
        return int_gcd_poly(&a1, &b1).shift(common);
    }
    let g = heu_gcd(&a1, &b1).unwrap_or_else(|| gcd_rec(&a1, &b1));
    normalize_sign(g.shift(common))
}

fn int_gcd_poly(a: &ParamPolynomial, b: &ParamPolynomial) -> ParamPolynomial {
    ParamPolynomial::constant(a.content().gcd(&b.content()))
}

fn is_constant(p: &ParamPolynomial) -> bool {
    p.len() == 1 && p.terms().next().is_some_and(|(e, _)| e.is_zero())
}

fn gcd_rec(a: &ParamPolynomial, b: &ParamPolynomial) -> ParamPolynomial {
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    if is_constant(a) || is_constant(b) {
        return int_gcd_poly(a, b);
    }
    if a == b || a == &-b {
        return normalize_sign(a.clone());
    }
    // monomial factors are handled by the caller only at top level
    let ma = a.min_exponents();
    let mb = b.min_exponents();
    if !ma.is_zero() || !mb.is_zero() {
        let g = gcd_rec(&a.shift(-ma), &b.shift(-mb));
        return g.shift(ma.meet(&mb));
    }
    if provably_coprime(a, b) {
        return int_gcd_poly(a, b);
    }
    let va = a.variables();
    let vb = b.variables();
    for var in 0..NPARAMS {
        if va[var] && !vb[var] {
            return gcd_rec(&content_in(a, var), b);
        }
        if vb[var] && !va[var] {
            return gcd_rec(a, &content_in(b, var));
        }
    }
    // same variable set; pick the main variable of least degree
    let var = (0..NPARAMS)
        .filter(|&k| va[k])
        .min_by_key(|&k| a.degree_in(k).max(b.degree_in(k)))
        .expect("nonconstant polynomial has a variable");
    let ca = content_in(a, var);
    let cb = content_in(b, var);
    let c = gcd_rec(&ca, &cb);
    let mut pa = a.exact_div(&ca).expect("content divides");
    let mut pb = b.exact_div(&cb).expect("content divides");
    if pa.degree_in(var) < pb.degree_in(var) {
        std::mem::swap(&mut pa, &mut pb);
    }
    loop {
        let r = pseudo_remainder(&pa, &pb, var);
        if r.is_zero() {
            break;
        }
        if r.degree_in(var) == 0 {
            pb = ParamPolynomial::one();
            break;
        }
        pa = pb;
        pb = primitive_part_in(&r, var);
    }
    let g = primitive_part_in(&pb, var);
    normalize_sign(&c * &g)
}

const HEU_TRIES: usize = 6;

/// Heuristic GCD over all variables occurring in either input. `None` means
/// every evaluation point was unlucky.
fn heu_gcd(a: &ParamPolynomial, b: &ParamPolynomial) -> Option<ParamPolynomial> {
    let va = a.variables();
    let vb = b.variables();
    let vars: Vec<usize> = (0..NPARAMS).filter(|&k| va[k] || vb[k]).collect();
    heu_rec(a, b, &vars).map(|(g, _, _)| g)
}

fn max_norm(p: &ParamPolynomial) -> BigInt {
    p.terms().map(|(_, c)| c.abs()).max().unwrap_or_default()
}

/// Substitutes the integer `x` for variable `var`.
fn eval_var(p: &ParamPolynomial, var: usize, x: &BigInt) -> ParamPolynomial {
    let mut powers: Vec<BigInt> = vec![BigInt::one()];
    let mut out = ParamPolynomial::zero();
    for (e, c) in p.terms() {
        let d = e.0[var] as usize;
        while powers.len() <= d {
            let next = powers.last().expect("nonempty") * x;
            powers.push(next);
        }
        let mut e2 = *e;
        e2.0[var] = 0;
        out.add_term(e2, c * &powers[d]);
    }
    out
}

/// Inverse of [`eval_var`] for polynomials with coefficients below `x / 2`:
/// peels off symmetric residues modulo `x` as the coefficients of `var^0, var^1, ...`.
fn interpolate(h: &ParamPolynomial, var: usize, x: &BigInt) -> ParamPolynomial {
    let half = x >> 1;
    let mut rest = h.clone();
    let mut out = ParamPolynomial::zero();
    let mut d = 0;
    while !rest.is_zero() {
        let mut next = ParamPolynomial::zero();
        for (e, c) in rest.terms() {
            let mut r = c.mod_floor(x);
            if r > half {
                r -= x;
            }
            let q = (c - &r) / x;
            if !r.is_zero() {
                let mut e2 = *e;
                e2.0[var] = d;
                out.add_term(e2, r);
            }
            if !q.is_zero() {
                next.add_term(*e, q);
            }
        }
        rest = next;
        d += 1;
    }
    normalize_sign(out)
}

fn primitive(p: ParamPolynomial) -> ParamPolynomial {
    let c = p.content();
    if c.is_zero() || c.is_one() {
        p
    } else {
        p.div_int(&c)
    }
}

/// Returns `(g, a / g, b / g)` with `g` the GCD of `a` and `b` in `ℤ[vars]`.
fn heu_rec(
    a: &ParamPolynomial,
    b: &ParamPolynomial,
    vars: &[usize],
) -> Option<(ParamPolynomial, ParamPolynomial, ParamPolynomial)> {
    if a.is_zero() || b.is_zero() {
        return None;
    }
    let Some((&var, rest)) = vars.split_first() else {
        let ca = a.coefficient(&HalfExponents::ZERO);
        let cb = b.coefficient(&HalfExponents::ZERO);
        let g = ca.gcd(&cb);
        return Some((
            ParamPolynomial::constant(g.clone()),
            ParamPolynomial::constant(ca / &g),
            ParamPolynomial::constant(cb / &g),
        ));
    };
    let ig = a.content().gcd(&b.content());
    let a = a.div_int(&ig);
    let b = b.div_int(&ig);
    let na = max_norm(&a);
    let nb = max_norm(&b);
    let bound: BigInt = BigInt::from(2) * na.clone().min(nb.clone()) + 29;
    let lca = a.leading().map(|(_, c)| c.abs()).unwrap_or_else(BigInt::one);
    let lcb = b.leading().map(|(_, c)| c.abs()).unwrap_or_else(BigInt::one);
    let mut x = std::cmp::max(
        std::cmp::min(bound.clone(), BigInt::from(99) * bound.sqrt()),
        BigInt::from(2) * std::cmp::min(&na / &lca, &nb / &lcb) + 4,
    );
    let scale = |g: ParamPolynomial| if ig.is_one() { g } else { g.scale_int(&ig) };
    for _ in 0..HEU_TRIES {
        let ea = eval_var(&a, var, &x);
        let eb = eval_var(&b, var, &x);
        if !ea.is_zero() && !eb.is_zero() {
            if let Some((h, cfa, cfb)) = heu_rec(&ea, &eb, rest) {
                let g = primitive(interpolate(&h, var, &x));
                if !g.is_zero() {
                    if let (Some(qa), Some(qb)) = (a.exact_div(&g), b.exact_div(&g)) {
                        return Some((scale(g), qa, qb));
                    }
                }
                let cofa = interpolate(&cfa, var, &x);
                if !cofa.is_zero() {
                    if let Some(g) = a.exact_div(&cofa) {
                        if let Some(qb) = b.exact_div(&g) {
                            return Some((scale(g), cofa, qb));
                        }
                    }
                }
                let cofb = interpolate(&cfb, var, &x);
                if !cofb.is_zero() {
                    if let Some(g) = b.exact_div(&cofb) {
                        if let Some(qa) = a.exact_div(&g) {
                            return Some((scale(g), qa, cofb));
                        }
                    }
                }
            }
        }
        x = BigInt::from(73794) * &x * x.sqrt().sqrt() / 27011;
    }
    None
}

/// GCD of the coefficients of `p` viewed as a polynomial in `var`.
fn content_in(p: &ParamPolynomial, var: usize) -> ParamPolynomial {
    let parts = p.split_by(var);
    let mut coeffs: Vec<ParamPolynomial> = parts.into_values().collect();
    coeffs.sort_by_key(|c| c.len());
    let mut g = ParamPolynomial::zero();
    for c in coeffs {
        g = gcd_rec(&g, &c);
        if is_constant(&g) {
            // only integer content can remain
            let ints = p.content();
            return ParamPolynomial::constant(ints);
        }
    }
    g
}

fn primitive_part_in(p: &ParamPolynomial, var: usize) -> ParamPolynomial {
    let c = content_in(p, var);
    let pp = p.exact_div(&c).expect("content divides");
    normalize_sign(pp)
}

fn pseudo_remainder(a: &ParamPolynomial, b: &ParamPolynomial, var: usize) -> ParamPolynomial {
    let db = b.degree_in(var);
    let parts_b = b.split_by(var);
    let lcb = parts_b.get(&db).cloned().unwrap_or_default();
    let mut r = a.clone();
    loop {
        if r.is_zero() {
            return r;
        }
        let dr = r.degree_in(var);
        if dr < db {
            return r;
        }
        let lcr = r.split_by(var).remove(&dr).unwrap_or_default();
        let mut shift = HalfExponents::ZERO;
        shift.0[var] = dr - db;
        let lhs = &lcb * &r;
        let rhs = &lcr.shift(shift) * b;
        r = &lhs - &rhs;
        // keep coefficient growth in check
        let c = r.content();
        if !c.is_zero() && !c.is_one() {
            r = r.div_int(&c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::poly::Param;
    use super::*;

    fn v(p: Param) -> ParamPolynomial {
        ParamPolynomial::monomial(BigInt::one(), HalfExponents::single(p, 1))
    }

    fn c(k: i64) -> ParamPolynomial {
        ParamPolynomial::constant(BigInt::from(k))
    }

    #[test]
    fn coprime_inputs() {
        let a = &v(Param::Q) + &c(1);
        let b = &v(Param::Q) - &c(1);
        assert_eq!(poly_gcd(&a, &b), c(1));
    }

    #[test]
    fn shared_factor_is_recovered() {
        let f = &(&v(Param::Q) * &v(Param::T)) - &c(1);
        let g1 = &(&v(Param::T0) + &v(Param::Q)) + &c(2);
        let g2 = &(&v(Param::U0) * &v(Param::Q)) - &v(Param::Un);
        let a = &(&f * &g1) * &c(6);
        let b = &(&f * &g2) * &c(4);
        let g = poly_gcd(&a, &b);
        assert_eq!(g, &f * &c(2));
    }

    #[test]
    fn repeated_factor_and_monomial() {
        let f = &v(Param::Q) - &v(Param::T);
        let m = v(Param::Tn);
        let a = &(&f * &f) * &m;
        let b = &(&f * &(&v(Param::Q) + &c(1))) * &(&m * &m);
        let g = poly_gcd(&a, &b);
        let expected = normalize_sign(&f * &m);
        assert_eq!(g, expected);
    }

    #[test]
    fn heuristic_agrees_with_prs() {
        let f = &(&(&v(Param::Q) * &v(Param::T)) - &c(3)) * &(&v(Param::Un) + &v(Param::T0));
        let g1 = &(&v(Param::T0) * &v(Param::T0)) + &(&v(Param::Q) * &c(5));
        let g2 = &(&v(Param::U0) * &v(Param::Q)) - &(&v(Param::Un) * &c(7));
        let a = &(&f * &g1) * &c(6);
        let b = &(&(&f * &g2) * &c(4)) * &g1;
        let prs = normalize_sign(gcd_rec(&a, &b));
        let heu = normalize_sign(heu_gcd(&a, &b).unwrap());
        assert_eq!(prs, heu);
        assert_eq!(heu, normalize_sign(&(&f * &g1) * &c(2)));
    }

    #[test]
    fn univariate_modular_degree() {
        // (x-1)(x-2) and (x-1)(x-3)
        let a = vec![2, P - 3, 1];
        let b = vec![3, P - 4, 1];
        assert_eq!(uni_gcd_degree(a, b), 1);
    }
}
