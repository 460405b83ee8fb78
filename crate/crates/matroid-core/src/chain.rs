use crate::{MatroidError, Result, SubsetMask};

/// A strictly increasing chain of subsets of a ground set of size `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetChain {
    sets: Vec<SubsetMask>,
    n: usize,
}

impl SetChain {
    pub fn new(n: usize, sets: Vec<SubsetMask>) -> Result<Self> {
        let full = SubsetMask::full(n);
        for s in &sets {
            if !s.is_subset_of(full) {
                return Err(MatroidError::InvalidChain(format!(
                    "{s} is not a subset of a ground set of size {n}"
                )));
            }
        }
        for w in sets.windows(2) {
            if !w[0].is_proper_subset_of(w[1]) {
                return Err(MatroidError::InvalidChain(format!(
                    "{} is not strictly contained in {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(SetChain { sets, n })
    }

    /// The chain `∅ ⊂ S_1 ⊂ ... ⊂ E`, adding the endpoints when missing.
    pub fn spanning(n: usize, interior: &[SubsetMask]) -> Result<Self> {
        let mut sets = Vec::with_capacity(interior.len() + 2);
        sets.push(SubsetMask::EMPTY);
        for &s in interior {
            if !s.is_empty() && s != SubsetMask::full(n) {
                sets.push(s);
            }
        }
        sets.push(SubsetMask::full(n));
        SetChain::new(n, sets)
    }

    /// Initial segments `{order[0..s]}` for each size in `sizes`.
    pub fn initial_segments(order: &[usize], sizes: &[usize]) -> Result<Self> {
        let n = order.len();
        let sets = sizes
            .iter()
            .map(|&s| {
                if s > n {
                    Err(MatroidError::InvalidChain(format!(
                        "segment size {s} exceeds {n}"
                    )))
                } else {
                    Ok(SubsetMask::from_elements(order[..s].iter().copied()))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        SetChain::new(n, sets)
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[SubsetMask] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn includes_bottom(&self) -> bool {
        self.sets.first() == Some(&SubsetMask::EMPTY)
    }

    pub fn includes_top(&self) -> bool {
        self.sets.last() == Some(&SubsetMask::full(self.n))
    }

    /// Number of steps of a chain running from `∅` to `E`.
    pub fn length(&self) -> usize {
        self.sets.len().saturating_sub(1)
    }

    /// The complementary chain `E \ S_{k-i}`.
    pub fn reversed_complement(&self) -> SetChain {
        let sets = self
            .sets
            .iter()
            .rev()
            .map(|s| s.complement(self.n))
            .collect();
        SetChain { sets, n: self.n }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_strict_chains() {
        let a = SubsetMask::from_elements([0]);
        assert!(SetChain::new(3, vec![a, a]).is_err());
        assert!(SetChain::new(3, vec![SubsetMask::from_elements([0, 1]), a]).is_err());
    }

    #[test]
    fn spanning_adds_endpoints() {
        let c = SetChain::spanning(4, &[SubsetMask::from_elements([1])]).unwrap();
        assert!(c.includes_bottom() && c.includes_top());
        assert_eq!(c.length(), 2);
    }

    #[test]
    fn reversed_complement_is_an_involution() {
        let c = SetChain::initial_segments(&[3, 1, 0, 2], &[0, 1, 3, 4]).unwrap();
        assert_eq!(c.reversed_complement().reversed_complement(), c);
        assert!(c.reversed_complement().includes_bottom());
    }
}
