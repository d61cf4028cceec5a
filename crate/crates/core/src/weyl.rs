//! The affine Weyl group of type C̃n acting on `ℤⁿ` and on affine functionals,
//! and the finite group `W₀ = (±1)ⁿ ⋊ Sₙ` of signed permutations.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::laurent::{AffineExponent, Exponent};
use crate::paramfield::{HalfExponents, Param};
use crate::scalar::{Params, Scalar, S};

/// Indices `i_1 ... i_m` of generators, read left to right as the product
/// `s_{i_1} ⋯ s_{i_m}` (and likewise for `T_i`, `S_i`).
pub type GeneratorWord = Vec<usize>;

/// Element `σπ` of `W₀`, acting on vectors by `(w·v)_i = σ_i v_{π⁻¹(i)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    /// `σ_1, ..., σ_n`, each `±1`.
    pub signs: Vec<i8>,
    /// `π(1), ..., π(n)`, one-based.
    pub perm: Vec<usize>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation { signs: vec![1; n], perm: (1..=n).collect() }
    }

    pub fn new(signs: Vec<i8>, perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n || signs.iter().any(|s| *s != 1 && *s != -1) {
            return Err(Error::InvalidArgument("signs must be ±1, one per index".into()));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p == 0 || p > n || seen[p - 1] {
                return Err(Error::InvalidArgument(format!("{perm:?} is not a permutation")));
            }
            seen[p - 1] = true;
        }
        Ok(SignedPermutation { signs, perm })
    }

    /// The simple reflection `s_i`, `1 ≤ i ≤ n`.
    pub fn generator(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "finite Weyl group generator out of range");
        let mut w = Self::identity(n);
        if i == n {
            w.signs[n - 1] = -1;
        } else {
            w.perm.swap(i - 1, i);
        }
        w
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    /// `π⁻¹(i)`, one-based.
    pub fn position_of(&self, i: usize) -> usize {
        self.perm.iter().position(|&p| p == i).expect("permutation") + 1
    }

    pub fn act(&self, v: &[i32]) -> Exponent {
        (1..=self.rank()).map(|i| self.signs[i - 1] as i32 * v[self.position_of(i) - 1]).collect()
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &Self) -> Self {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut signs = vec![1i8; n];
        for k in 1..=n {
            let mid = rhs.perm[k - 1];
            let fin = self.perm[mid - 1];
            perm[k - 1] = fin;
            signs[fin - 1] = rhs.signs[mid - 1] * self.signs[fin - 1];
        }
        SignedPermutation { signs, perm }
    }

    pub fn inverse(&self) -> Self {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut signs = vec![1i8; n];
        for j in 1..=n {
            let i = self.perm[j - 1];
            perm[i - 1] = j;
            signs[j - 1] = self.signs[i - 1];
        }
        SignedPermutation { signs, perm }
    }
}

/// `s_i · v` for the affine action: `s_0·v = (-v_1 - 1, v_2, ...)`,
/// `s_n·v = (..., -v_n)`, otherwise `v_i ↔ v_{i+1}`.
pub fn affine_action(i: usize, v: &[i32]) -> Exponent {
    let n = v.len();
    assert!(i <= n, "generator index out of range");
    let mut out = v.to_vec();
    if i == 0 {
        out[0] = -v[0] - 1;
    } else if i == n {
        out[n - 1] = -v[n - 1];
    } else {
        out.swap(i - 1, i);
    }
    out
}

/// Applies a word to `v`: the rightmost letter acts first.
pub fn act_word(word: &[usize], v: &[i32]) -> Exponent {
    word.iter().rev().fold(v.to_vec(), |acc, &i| affine_action(i, &acc))
}

/// `s_i` on affine functionals `v + rδ`; only `s_0` moves the δ-part.
pub fn functional_action(i: usize, e: &AffineExponent) -> AffineExponent {
    let n = e.v.len();
    assert!(i <= n, "generator index out of range");
    let mut v = e.v.clone();
    let mut k = e.k;
    if i == 0 {
        k -= v[0];
        v[0] = -v[0];
    } else if i == n {
        v[n - 1] = -v[n - 1];
    } else {
        v.swap(i - 1, i);
    }
    AffineExponent { v, k }
}

/// Number of factors on each side of the braid relation between `s_i` and `s_j`,
/// or `None` when there is none (the two nodes of C̃1).
pub fn coxeter_order(n: usize, i: usize, j: usize) -> Option<usize> {
    if i == j {
        return Some(1);
    }
    if n == 1 {
        return None;
    }
    let (a, b) = (i.min(j), i.max(j));
    if b - a >= 2 {
        Some(2)
    } else if a == 0 || b == n {
        Some(4)
    } else {
        Some(3)
    }
}

/// The word `(s_i ⋯ s_{n-1})(s_n ⋯ s_0)(s_1 ⋯ s_{i-1})` realizing translation by `e_i`.
pub fn translation_word(n: usize, i: usize) -> GeneratorWord {
    let mut w: GeneratorWord = (i..n).collect();
    w.extend((0..=n).rev());
    w.extend(1..i);
    w
}

/// `w_α = σ_α π_α`: signs of `α` (with `sgn 0 = +1`) and the ordering of indices
/// by decreasing `|α_i|`, ties broken left to right for `α_i ≥ 0` and then right to
/// left for `α_i < 0`.
pub fn w_alpha(alpha: &[i32]) -> SignedPermutation {
    let n = alpha.len();
    let signs: Vec<i8> = alpha.iter().map(|&a| if a < 0 { -1 } else { 1 }).collect();
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by(|&i, &j| {
        let (ai, aj) = (alpha[i - 1], alpha[j - 1]);
        aj.abs().cmp(&ai.abs()).then_with(|| (ai < 0).cmp(&(aj < 0))).then_with(|| {
            if ai >= 0 {
                i.cmp(&j)
            } else {
                j.cmp(&i)
            }
        })
    });
    SignedPermutation { signs, perm: order }
}

/// True for weakly decreasing nonnegative vectors.
pub fn is_partition(v: &[i32]) -> bool {
    v.iter().all(|&x| x >= 0) && v.windows(2).all(|w| w[0] >= w[1])
}

/// Doubled parameter exponents of `q^{ᾱ_i}`, where `ᾱ = α + w_α·ρ` and `q^{ρ_i} = s t^{n-i}`.
pub fn spectral_exponents(alpha: &[i32]) -> Vec<HalfExponents> {
    let n = alpha.len();
    let w = w_alpha(alpha);
    (1..=n)
        .map(|i| {
            let p = w.position_of(i);
            let rho = S + HalfExponents::single(Param::T, 2 * (n - p) as i32);
            HalfExponents::single(Param::Q, 2 * alpha[i - 1]) + rho.scale(w.signs[i - 1] as i32)
        })
        .collect()
}

/// The `Y`-eigenvalues `(q^{ᾱ_1}, ..., q^{ᾱ_n})` on the eigenspace labelled by `α`.
pub fn spectral_vector<F: Scalar>(params: &Params<F>, alpha: &[i32]) -> Vec<F> {
    spectral_exponents(alpha).into_iter().map(|e| params.monomial(1, e)).collect()
}

/// `s_i` acting on a spectral vector (the multiplicative form of the affine action on `ᾱ`).
pub fn reflect_spectral_exponents(i: usize, spec: &[HalfExponents]) -> Vec<HalfExponents> {
    let n = spec.len();
    let mut out = spec.to_vec();
    if i == 0 {
        out[0] = -spec[0] + HalfExponents::single(Param::Q, -2);
    } else if i == n {
        out[n - 1] = -spec[n - 1];
    } else {
        out.swap(i - 1, i);
    }
    out
}

/// A word `i_1 ... i_m` such that applying `s_{i_1}`, then `s_{i_2}`, ... to `0`
/// reaches `α`, every step moves the vector, and `s_0` occurs exactly `|α|` times.
pub fn chain_to(alpha: &[i32]) -> GeneratorWord {
    let n = alpha.len();
    let mut a = alpha.to_vec();
    let mut reduction = Vec::new();
    let mut step = |i: usize, a: &mut Exponent| {
        let next = affine_action(i, a);
        debug_assert_ne!(&next, a);
        *a = next;
        reduction.push(i);
    };
    while a.iter().any(|&x| x != 0) {
        if let Some(j) = a.iter().position(|&x| x < 0).map(|j| j + 1) {
            for i in (1..j).rev() {
                step(i, &mut a);
            }
            step(0, &mut a);
        } else {
            let j = a.iter().rposition(|&x| x > 0).expect("nonzero vector") + 1;
            for i in j..n {
                step(i, &mut a);
            }
            step(n, &mut a);
        }
    }
    reduction.reverse();
    reduction
}

/// Replays a chain from `0`, returning every intermediate vector (including both ends).
pub fn replay_chain(n: usize, word: &[usize]) -> Vec<Exponent> {
    let mut cur = vec![0; n];
    let mut out = vec![cur.clone()];
    for &i in word {
        cur = affine_action(i, &cur);
        out.push(cur.clone());
    }
    out
}

/// All `2ⁿ n!` elements of `W₀` with one reduced word each, found by breadth-first
/// search over right multiplication by `s_1, ..., s_n`.
pub fn enumerate_w0(n: usize) -> Result<Vec<(SignedPermutation, GeneratorWord)>> {
    if n > 6 {
        return Err(Error::RankTooLarge(n));
    }
    let gens: Vec<SignedPermutation> = (1..=n).map(|i| SignedPermutation::generator(n, i)).collect();
    let id = SignedPermutation::identity(n);
    let mut seen: HashMap<SignedPermutation, usize> = HashMap::new();
    let mut out = vec![(id.clone(), GeneratorWord::new())];
    seen.insert(id, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for (j, g) in gens.iter().enumerate() {
            let w = out[k].0.compose(g);
            if seen.contains_key(&w) {
                continue;
            }
            let mut word = out[k].1.clone();
            word.push(j + 1);
            seen.insert(w.clone(), out.len());
            out.push((w, word));
            queue.push_back(out.len() - 1);
        }
    }
    Ok(out)
}

/// The group element named by a word over `1..n`.
pub fn word_element(n: usize, word: &[usize]) -> SignedPermutation {
    word.iter().fold(SignedPermutation::identity(n), |acc, &i| acc.compose(&SignedPermutation::generator(n, i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_action_examples() {
        assert_eq!(affine_action(0, &[0, 0]), vec![-1, 0]);
        assert_eq!(affine_action(2, &[3, 5]), vec![3, -5]);
        assert_eq!(affine_action(1, &[3, 5]), vec![5, 3]);
    }

    #[test]
    fn functional_action_examples() {
        let e = functional_action(0, &AffineExponent::new(vec![1, 0], 0));
        assert_eq!(e, AffineExponent::new(vec![-1, 0], -1));
        let z = functional_action(0, &AffineExponent::new(vec![0, 0], 0));
        assert_eq!(z, AffineExponent::new(vec![0, 0], 0));
    }

    #[test]
    fn w_alpha_worked_example() {
        let w = w_alpha(&[-2, 2, 1, -1, 0, 1, -1]);
        assert_eq!(w.signs, vec![-1, 1, 1, -1, 1, 1, -1]);
        assert_eq!(w.perm, vec![2, 1, 3, 6, 7, 4, 5]);
        let lam = w.inverse().act(&[-2, 2, 1, -1, 0, 1, -1]);
        assert_eq!(lam, vec![2, 2, 1, 1, 1, 1, 0]);
    }

    #[test]
    fn w_alpha_trivial_cases() {
        assert_eq!(w_alpha(&[0, 0, 0]), SignedPermutation::identity(3));
        assert_eq!(w_alpha(&[3, 2, 1]), SignedPermutation::identity(3));
    }

    #[test]
    fn spectral_vector_at_zero_is_rho() {
        let e = spectral_exponents(&[0, 0]);
        assert_eq!(e, Params::<num_rational::BigRational>::rho_exponents(2));
        let e1 = spectral_exponents(&[1, 0]);
        assert_eq!(e1[0], e[0] + HalfExponents::single(Param::Q, 2));
        assert_eq!(e1[1], e[1]);
    }

    #[test]
    fn chain_examples() {
        assert!(chain_to(&[0, 0]).is_empty());
        assert_eq!(chain_to(&[-1, 0, 0]), vec![0]);
        let w = chain_to(&[2, -1]);
        assert_eq!(replay_chain(2, &w).last().unwrap(), &vec![2, -1]);
        assert_eq!(w.iter().filter(|&&i| i == 0).count(), 3);
    }

    #[test]
    fn w0_sizes() {
        let one = enumerate_w0(1).unwrap();
        assert_eq!(one.len(), 2);
        assert_eq!(one[1].1, vec![1]);
        let two = enumerate_w0(2).unwrap();
        assert_eq!(two.len(), 8);
        assert_eq!(two.iter().map(|(_, w)| w.len()).max(), Some(4));
        assert_eq!(enumerate_w0(3).unwrap().len(), 48);
        assert!(matches!(enumerate_w0(7), Err(Error::RankTooLarge(7))));
    }

    #[test]
    fn words_replay_to_elements() {
        let generic = [7, -3, 2];
        for (w, word) in enumerate_w0(3).unwrap() {
            assert_eq!(act_word(&word, &generic), w.act(&generic));
            assert_eq!(word_element(3, &word), w);
        }
    }

    #[test]
    fn translation_word_translates() {
        for n in 1..=4 {
            for i in 1..=n {
                let v: Vec<i32> = (0..n as i32).map(|k| 3 * k - 2).collect();
                let mut expected = v.clone();
                expected[i - 1] += 1;
                assert_eq!(act_word(&translation_word(n, i), &v), expected, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn coxeter_orders() {
        assert_eq!(coxeter_order(2, 0, 1), Some(4));
        assert_eq!(coxeter_order(2, 1, 2), Some(4));
        assert_eq!(coxeter_order(2, 0, 2), Some(2));
        assert_eq!(coxeter_order(4, 1, 2), Some(3));
        assert_eq!(coxeter_order(1, 0, 1), None);
    }
}
