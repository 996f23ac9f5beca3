//! The stack-sorting map, its orbits and the `Ln1` family.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::exactla::Vector;
use crate::{Error, Result, Scalar};

/// A bijection on `{1, …, n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty".into()));
        }
        let mut seen = vec![false; n];
        for &e in &entries {
            let i = e as usize;
            if i == 0 || i > n {
                return Err(Error::InvalidPermutation(format!(
                    "entry {e} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[i - 1], true) {
                return Err(Error::InvalidPermutation(format!("entry {e} repeated")));
            }
        }
        Ok(Self(entries))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &e)| e as usize == i + 1)
    }

    /// The permutation as a point of `R^n`.
    pub fn to_point<T: Scalar>(&self) -> Vector<T> {
        self.0.iter().map(|&e| T::from_int(e as i64)).collect()
    }

    /// One pass of the stack: an entry pops every smaller entry on top of the
    /// stack before being pushed; the remainder is flushed at the end.
    pub fn stack_sort(&self) -> Self {
        Self(stack_sort_seq(&self.0))
    }

    /// `s^k(self)`.
    pub fn stack_sort_iter(&self, k: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..k {
            if p.is_identity() {
                break;
            }
            p = p.stack_sort();
        }
        p
    }

    pub fn sort_orbit(&self) -> SortOrbit {
        let mut steps = vec![self.clone()];
        while !steps.last().expect("nonempty").is_identity() {
            let next = steps.last().expect("nonempty").stack_sort();
            steps.push(next);
        }
        SortOrbit { steps }
    }

    /// Number of passes needed to reach the identity.
    pub fn sortability_index(&self) -> usize {
        let mut p = self.clone();
        let mut t = 0;
        while !p.is_identity() {
            p = p.stack_sort();
            t += 1;
        }
        t
    }

    pub fn is_exactly_t_sortable(&self, t: usize) -> bool {
        self.sortability_index() == t
    }

    /// Ends with `n` followed by `1`. Never true for `n < 3`.
    pub fn is_ln1(&self) -> bool {
        let n = self.len();
        n >= 3 && self.0[n - 2] as usize == n && self.0[n - 1] == 1
    }

    pub fn descent_count(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// Whether `s^i(self)` ends with `(n-i) 1 (n-i+1) … n`, i.e. its last
    /// `i + 2` entries are exactly that block.
    pub fn tail_form_check(&self, i: usize) -> Result<bool> {
        if !self.is_ln1() {
            return Err(Error::InvalidPermutation(format!(
                "{self} does not end with n,1"
            )));
        }
        let n = self.len();
        if i == 0 || i > n - 2 {
            return Err(Error::OutOfRange(format!("iteration {i} not in 1..={}", n - 2)));
        }
        let it = self.stack_sort_iter(i);
        let suffix = tail_pattern(n, i);
        Ok(it.entries().ends_with(&suffix))
    }

    /// Splits at the maximum entry: `(L, n, R)`.
    pub fn split_at_max(&self) -> (&[u32], u32, &[u32]) {
        let pos = self
            .0
            .iter()
            .enumerate()
            .max_by_key(|(_, &e)| e)
            .map(|(i, _)| i)
            .expect("nonempty");
        (&self.0[..pos], self.0[pos], &self.0[pos + 1..])
    }
}

/// `(n-i), 1, (n-i+1), …, n`.
fn tail_pattern(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![(n - i) as u32, 1];
    v.extend((n - i + 1..=n).map(|x| x as u32));
    v
}

/// Stack-sorts an arbitrary sequence of distinct values.
pub fn stack_sort_seq(seq: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(seq.len());
    let mut stack: Vec<u32> = Vec::new();
    for &x in seq {
        while stack.last().is_some_and(|&top| x > top) {
            out.push(stack.pop().expect("checked"));
        }
        stack.push(x);
    }
    out.extend(stack.into_iter().rev());
    out
}

/// `τ_n = 2 3 … n 1`.
pub fn tau(n: usize) -> Result<Permutation> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("tau requires n >= 2, got {n}")));
    }
    let mut v: Vec<u32> = (2..=n as u32).collect();
    v.push(1);
    Ok(Permutation(v))
}

/// All permutations `L n 1` with `L` a permutation of `{2, …, n-1}`, in
/// lexicographic order.
pub fn enumerate_ln1(n: usize) -> Result<Vec<Permutation>> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("L^n requires n >= 3, got {n}")));
    }
    let middle: Vec<u32> = (2..n as u32).collect();
    Ok(all_arrangements(&middle)
        .into_iter()
        .map(|mut l| {
            l.push(n as u32);
            l.push(1);
            Permutation(l)
        })
        .collect())
}

/// Every permutation of `{1, …, n}` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let base: Vec<u32> = (1..=n as u32).collect();
    all_arrangements(&base).into_iter().map(Permutation).collect()
}

/// Lexicographic arrangements of a sorted slice, by repeated next-permutation.
fn all_arrangements(sorted: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = sorted.to_vec();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("pivot exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// The iterates `s^0(π), s^1(π), …` up to and including the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SortOrbit {
    steps: Vec<Permutation>,
}

impl SortOrbit {
    pub fn steps(&self) -> &[Permutation] {
        &self.steps
    }

    /// Exact sortability index.
    pub fn index(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn points<T: Scalar>(&self) -> Vec<Vector<T>> {
        self.steps.iter().map(Permutation::to_point).collect()
    }
}

impl fmt::Display for Permutation {
    /// Compact one-line form for `n <= 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for e in &self.0 {
                write!(f, "{e}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"23451"` (single digits) or `"2,3,4,5,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let entries: Result<Vec<u32>> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad entry {t:?}")))
                })
                .collect()
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::InvalidPermutation(format!("bad digit {c:?}")))
                })
                .collect()
        };
        Self::new(entries?)
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}
