//! Partitions and standard Young tableaux.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Standard tableau as the (row, col) position of each entry `1..=n`, 0-based.
pub type Tableau = Vec<(usize, usize)>;

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Option<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn row_len(&self, row: usize) -> usize {
        self.parts.get(row).copied().unwrap_or(0)
    }

    /// 0-based `(row, col)` of the boxes that can be added.
    pub fn addable(&self) -> Vec<(usize, usize)> {
        (0..=self.parts.len()).filter(|&row| row == 0 || self.row_len(row - 1) > self.row_len(row)).map(|row| (row, self.row_len(row))).collect()
    }

    /// 0-based `(row, col)` of the boxes that can be removed.
    pub fn removable(&self) -> Vec<(usize, usize)> {
        (0..self.parts.len()).filter(|&row| self.row_len(row) > self.row_len(row + 1)).map(|row| (row, self.row_len(row) - 1)).collect()
    }

    pub fn add_box(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Partition::new(parts).expect("addable box")
    }

    pub fn remove_box(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        Partition::new(parts).expect("removable box")
    }

    /// All partitions of `n`, largest first in lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// `λ_i − λ_{i+1} < e` for every `i` (including the last part).
    pub fn is_restricted(&self, e: usize) -> bool {
        (0..self.parts.len()).all(|i| self.row_len(i) - self.row_len(i + 1) < e)
    }

    /// Standard tableaux, each listing where `1, 2, ..., n` sit.
    pub fn standard_tableaux(&self) -> Vec<Tableau> {
        fn rec(shape: &Partition, out: &mut Vec<Tableau>) {
            if shape.is_empty() {
                out.push(Vec::new());
                return;
            }
            // the largest entry occupies a removable box
            for (row, col) in shape.removable() {
                let mut smaller = Vec::new();
                rec(&shape.remove_box(row), &mut smaller);
                for mut t in smaller {
                    t.push((row, col));
                    out.push(t);
                }
            }
        }
        let mut out = Vec::new();
        rec(self, &mut out);
        out.sort();
        out
    }

    /// Number of standard tableaux by the hook length formula.
    pub fn hook_count(&self) -> usize {
        let n = self.size();
        let mut num: u128 = (1..=n as u128).product();
        let conj = self.conjugate();
        for (row, &len) in self.parts.iter().enumerate() {
            for col in 0..len {
                let hook = (len - col - 1) + (conj.row_len(col) - row - 1) + 1;
                num /= hook as u128;
            }
        }
        num as usize
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.row_len(0);
        Partition { parts: (0..cols).map(|c| self.parts.iter().filter(|&&p| p > c).count()).collect() }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `col − row` of a 0-based box.
pub fn content(cell: (usize, usize)) -> i64 {
    cell.1 as i64 - cell.0 as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::all(0), vec![Partition::empty()]);
        assert_eq!(p(&[2, 1]).standard_tableaux().len(), 2);
        for n in 0..=6 {
            let total: usize = Partition::all(n).iter().map(|s| s.standard_tableaux().len().pow(2)).sum();
            assert_eq!(total, (1..=n).product::<usize>());
            for s in Partition::all(n) {
                assert_eq!(s.hook_count(), s.standard_tableaux().len());
            }
        }
    }

    #[test]
    fn boxes() {
        let s = p(&[2, 1]);
        assert_eq!(s.addable(), vec![(0, 2), (1, 1), (2, 0)]);
        assert_eq!(s.removable(), vec![(0, 1), (1, 0)]);
        assert_eq!(s.conjugate(), s);
        assert!(p(&[1, 1]).is_restricted(2));
        assert!(!p(&[2]).is_restricted(2));
        assert!(Partition::new(vec![1, 2]).is_none());
    }
}
