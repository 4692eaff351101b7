//! Permutations, reduced words, Bruhat order, compositions and the minimal
//! left coset representatives of Young subgroups.
//!
//! Conventions: a permutation is stored by its images `w(1), ..., w(n)`;
//! products compose right to left, `(wv)(j) = w(v(j))`; simple reflections
//! `s_i` are indexed from 1; `s_i w` swaps the values `i, i+1` in one-line
//! notation and `w s_i` swaps the positions `i, i+1`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymGroupError {
    #[error("not a permutation of 1..{n}: {images:?}")]
    NotAPermutation { n: usize, images: Vec<usize> },
    #[error("generator index {index} out of range for S_{n}")]
    GeneratorOutOfRange { index: usize, n: usize },
    #[error("composition {parts:?} does not sum to {n}")]
    BadComposition { parts: Vec<usize>, n: usize },
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    // 0-based images
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n as u8).collect() }
    }

    /// The simple transposition `s_i = (i, i+1)`, `1 ≤ i < n`.
    pub fn simple(n: usize, i: usize) -> Result<Self, SymGroupError> {
        if i == 0 || i >= n {
            return Err(SymGroupError::GeneratorOutOfRange { index: i, n });
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    /// The transposition `(a, b)` of 1-based points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a - 1, b - 1);
        p
    }

    /// From one-line notation with 1-based entries.
    pub fn from_one_line(images: &[usize]) -> Result<Self, SymGroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(SymGroupError::NotAPermutation { n, images: images.to_vec() });
            }
            seen[v - 1] = true;
        }
        Ok(Perm { images: images.iter().map(|&v| (v - 1) as u8).collect() })
    }

    /// `s_{i_1} s_{i_2} ... s_{i_k}`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self, SymGroupError> {
        let mut p = Self::identity(n);
        for &i in word {
            p = p.right_mul_simple(i)?;
        }
        Ok(p)
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `w(j)` for a 1-based point `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm { images: other.images.iter().map(|&j| self.images[j as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Perm { images: inv }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    fn check_index(&self, i: usize) -> Result<(), SymGroupError> {
        if i == 0 || i >= self.n() {
            return Err(SymGroupError::GeneratorOutOfRange { index: i, n: self.n() });
        }
        Ok(())
    }

    /// `s_i w`.
    pub fn left_mul_simple(&self, i: usize) -> Result<Perm, SymGroupError> {
        self.check_index(i)?;
        let (a, b) = ((i - 1) as u8, i as u8);
        let images = self
            .images
            .iter()
            .map(|&v| {
                if v == a {
                    b
                } else if v == b {
                    a
                } else {
                    v
                }
            })
            .collect();
        Ok(Perm { images })
    }

    /// `w s_i`.
    pub fn right_mul_simple(&self, i: usize) -> Result<Perm, SymGroupError> {
        self.check_index(i)?;
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Ok(Perm { images })
    }

    /// `ℓ(s_i w) < ℓ(w)`, i.e. `i+1` appears before `i` in one-line notation.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.images[i - 1] > inv.images[i]
    }

    /// `ℓ(w s_i) < ℓ(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// Reduced word `[i_1, ..., i_k]` with `w = s_{i_1} ⋯ s_{i_k}`, built by
    /// repeatedly stripping the leftmost right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.n()).find(|&i| w.has_right_descent(i)) {
            rev.push(i);
            w.images.swap(i - 1, i);
        }
        rev.reverse();
        rev
    }

    /// Every reduced word of `w`.
    pub fn all_reduced_words(&self) -> Vec<Vec<usize>> {
        if self.is_identity() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in 1..self.n() {
            if self.has_right_descent(i) {
                let shorter = self.right_mul_simple(i).unwrap();
                for mut word in shorter.all_reduced_words() {
                    word.push(i);
                    out.push(word);
                }
            }
        }
        out
    }

    /// Right action on sequences: `(wα)_j = α_{w^{-1}(j)}`.
    pub fn act<T: Clone>(&self, seq: &[T]) -> Vec<T> {
        assert_eq!(seq.len(), self.n());
        let mut out = seq.to_vec();
        for (j, &v) in self.images.iter().enumerate() {
            out[v as usize] = seq[j].clone();
        }
        out
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(Perm { images: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.one_line().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.one_line().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(deserializer)?;
        Perm::from_one_line(&v).map_err(serde::de::Error::custom)
    }
}

/// Bruhat order `u ≤ w`.
///
/// Uses the lifting property: if `s` is a left descent of `w` then
/// `u ≤ w` iff `min(u, su) ≤ sw`. This is equivalent to the subword
/// criterion on reduced words.
pub fn bruhat_leq(u: &Perm, w: &Perm) -> bool {
    assert_eq!(u.n(), w.n());
    if u.length() > w.length() {
        return false;
    }
    if w.is_identity() {
        return u.is_identity();
    }
    let s = (1..w.n()).find(|&i| w.has_left_descent(i)).unwrap();
    let sw = w.left_mul_simple(s).unwrap();
    let lower = if u.has_left_descent(s) { u.left_mul_simple(s).unwrap() } else { u.clone() };
    bruhat_leq(&lower, &sw)
}

/// An `r`-composition of `n`: `r` nonnegative parts (zeros allowed).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    /// Checks that the parts sum to `n`.
    pub fn of(parts: Vec<usize>, n: usize) -> Result<Self, SymGroupError> {
        if parts.iter().sum::<usize>() != n {
            return Err(SymGroupError::BadComposition { parts, n });
        }
        Ok(Composition { parts })
    }

    /// The one-block composition `(n)`.
    pub fn whole(n: usize) -> Self {
        Composition { parts: vec![n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts `r`.
    pub fn r(&self) -> usize {
        self.parts.len()
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `μ̄^k = μ_1 + ... + μ_k`.
    pub fn partial_sum(&self, k: usize) -> usize {
        self.parts[..k].iter().sum()
    }

    /// 0-based block index of each 1-based position, as a vector of length `n`.
    pub fn block_of_positions(&self) -> Vec<usize> {
        self.parts.iter().enumerate().flat_map(|(k, &m)| std::iter::repeat_n(k, m)).collect()
    }

    /// The character pattern `(0^{μ_1}, 1^{μ_2}, ..., (r-1)^{μ_r})`.
    pub fn pattern(&self) -> Vec<usize> {
        self.block_of_positions()
    }

    /// Generator indices `i` with `s_i ∈ S_μ`.
    pub fn internal_generators(&self) -> Vec<usize> {
        let blocks = self.block_of_positions();
        (1..self.n()).filter(|&i| blocks[i - 1] == blocks[i]).collect()
    }

    /// `true` when `i` and `i+1` lie in the same block.
    pub fn is_internal(&self, i: usize) -> bool {
        let blocks = self.block_of_positions();
        i >= 1 && i < self.n() && blocks[i - 1] == blocks[i]
    }

    pub fn contains(&self, w: &Perm) -> bool {
        let blocks = self.block_of_positions();
        (1..=w.n()).all(|j| blocks[j - 1] == blocks[w.apply(j) - 1])
    }

    /// Elements of the Young subgroup `S_μ`.
    pub fn young_subgroup(&self) -> Vec<Perm> {
        Perm::all(self.n()).into_iter().filter(|w| self.contains(w)).collect()
    }

    /// `μ` with part `k` (0-based) decreased by one, if positive.
    pub fn minus(&self, k: usize) -> Option<Composition> {
        if self.parts[k] == 0 {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[k] -= 1;
        Some(Composition { parts })
    }

    pub fn plus(&self, k: usize) -> Composition {
        let mut parts = self.parts.clone();
        parts[k] += 1;
        Composition { parts }
    }

    /// All `r`-compositions of `n`, in reverse lexicographic order of parts
    /// (so `(n, 0, ..., 0)` comes first).
    pub fn all(r: usize, n: usize) -> Vec<Composition> {
        fn rec(r: usize, n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if r == 1 {
                prefix.push(n);
                out.push(Composition { parts: prefix.clone() });
                prefix.pop();
                return;
            }
            for first in (0..=n).rev() {
                prefix.push(first);
                rec(r - 1, n - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if r == 0 {
            if n == 0 {
                out.push(Composition { parts: vec![] });
            }
            return out;
        }
        rec(r, n, &mut Vec::new(), &mut out);
        out
    }

    /// `n! / Π μ_k!`.
    pub fn index(&self) -> usize {
        let fact = |m: usize| (1..=m).product::<usize>();
        fact(self.n()) / self.parts.iter().map(|&m| fact(m)).product::<usize>()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `O(μ)`: the minimal-length left coset representatives of `S_μ` in `S_n`,
/// i.e. the permutations increasing on every block of positions, in
/// lexicographic order of one-line notation.
pub fn coset_reps(mu: &Composition) -> Vec<Perm> {
    let blocks = mu.block_of_positions();
    Perm::all(mu.n()).into_iter().filter(|w| (1..w.n()).all(|i| blocks[i - 1] != blocks[i] || !w.has_right_descent(i))).collect()
}

/// Factors `w = τu` with `τ ∈ O(μ)`, `u ∈ S_μ` and `ℓ(w) = ℓ(τ) + ℓ(u)`.
pub fn coset_factorize(w: &Perm, mu: &Composition) -> (Perm, Perm) {
    let mut images = w.images.clone();
    let mut start = 0;
    for &m in mu.parts() {
        images[start..start + m].sort_unstable();
        start += m;
    }
    let tau = Perm { images };
    let u = tau.inverse().compose(w);
    (tau, u)
}

/// Standard reduced word for `(1, m+1) = s_m ⋯ s_2 s_1 s_2 ⋯ s_m`.
pub fn cycle_word(m: usize) -> Vec<usize> {
    let mut word: Vec<usize> = (1..=m).rev().collect();
    word.extend(2..=m);
    word
}
