//! Words in the free monoid on the generators, compared in
//! degree-lexicographic order: shorter words first, ties broken by the
//! leftmost differing generator index.

use std::cmp::Ordering;

/// A product of generators, stored as their indices in declaration order.
/// The empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    indices: Vec<usize>,
}

impl Word {
    pub fn one() -> Self {
        Word::default()
    }

    pub fn from_indices(indices: Vec<usize>) -> Self {
        Word { indices }
    }

    pub fn single(index: usize) -> Self {
        Word {
            indices: vec![index],
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut indices = Vec::with_capacity(self.len() + other.len());
        indices.extend_from_slice(&self.indices);
        indices.extend_from_slice(&other.indices);
        Word { indices }
    }

    /// `prefix · mid · suffix` from raw index slices.
    pub fn splice(prefix: &[usize], mid: &[usize], suffix: &[usize]) -> Word {
        let mut indices = Vec::with_capacity(prefix.len() + mid.len() + suffix.len());
        indices.extend_from_slice(prefix);
        indices.extend_from_slice(mid);
        indices.extend_from_slice(suffix);
        Word { indices }
    }

    pub fn pow(&self, k: usize) -> Word {
        let mut indices = Vec::with_capacity(self.len() * k);
        for _ in 0..k {
            indices.extend_from_slice(&self.indices);
        }
        Word { indices }
    }

    /// Occurrences of each generator, as a vector of length `n_gens`.
    pub fn exponents(&self, n_gens: usize) -> Vec<usize> {
        let mut e = vec![0usize; n_gens];
        for &i in &self.indices {
            e[i] += 1;
        }
        e
    }

    /// Whether the generator indices never decrease left to right.
    pub fn is_sorted(&self) -> bool {
        self.indices.windows(2).all(|w| w[0] <= w[1])
    }

    /// Render with generator names, grouping repeated factors as powers.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut run_start = 0;
        for i in 1..=self.indices.len() {
            if i == self.indices.len() || self.indices[i] != self.indices[run_start] {
                let name = &names[self.indices[run_start]];
                let count = i - run_start;
                if count == 1 {
                    parts.push(name.clone());
                } else {
                    parts.push(format!("{name}^{count}"));
                }
                run_start = i;
            }
        }
        parts.join(" ")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.indices.cmp(&other.indices))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Word({:?})", self.indices)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(ix: &[usize]) -> Word {
        Word::from_indices(ix.to_vec())
    }

    #[test]
    fn degree_dominates_lexicographic_order() {
        assert!(w(&[1, 1]) < w(&[0, 0, 0]));
        assert!(w(&[0, 1]) < w(&[1, 0]));
        assert!(w(&[]) < w(&[0]));
        assert_eq!(w(&[0, 1]).cmp(&w(&[0, 1])), std::cmp::Ordering::Equal);
    }

    #[test]
    fn rendering_groups_powers() {
        let names = vec!["x".to_string(), "y".to_string()];
        assert_eq!(w(&[0, 1, 1]).render(&names), "x y^2");
        assert_eq!(w(&[]).render(&names), "1");
        assert_eq!(w(&[1, 0, 1]).render(&names), "y x y");
    }

    #[test]
    fn exponents_count_occurrences() {
        assert_eq!(w(&[0, 1, 1]).exponents(3), vec![1, 2, 0]);
        assert!(w(&[0, 0, 1]).is_sorted());
        assert!(!w(&[1, 0]).is_sorted());
    }
}
