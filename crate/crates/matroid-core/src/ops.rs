use crate::{Matroid, MatroidError, Result, SubsetMask, MAX_GROUND_SET};

/// A simple matroid together with the parallel classes it was collapsed from.
#[derive(Clone, Debug)]
pub struct Simplification {
    pub matroid: Matroid,
    /// Original element kept for each element of `matroid`.
    pub kept: Vec<usize>,
    /// Size of the parallel class of each kept element.
    pub multiplicities: Vec<usize>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            let next = self.0[cur];
            self.0[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }

    /// Classes restricted to `within`, ordered by smallest element.
    fn classes(&mut self, within: SubsetMask) -> Vec<SubsetMask> {
        let mut out: Vec<(usize, SubsetMask)> = Vec::new();
        for e in within.iter() {
            let root = self.find(e);
            match out.iter_mut().find(|(r, _)| *r == root) {
                Some((_, class)) => *class = class.with(e),
                None => out.push((root, SubsetMask::singleton(e))),
            }
        }
        out.into_iter().map(|(_, c)| c).collect()
    }
}

impl Matroid {
    /// Bases are the complements of the bases of `self`.
    pub fn dual(&self) -> Matroid {
        let n = self.ground_size();
        let bases = self.bases().iter().map(|b| b.complement(n)).collect();
        Matroid::from_bases_unchecked(n, bases).expect("dual of a matroid is a matroid")
    }

    /// `M | S`, relabelled onto `0..|S|` in increasing order.
    pub fn restrict(&self, s: SubsetMask) -> Result<Matroid> {
        self.check_subset(s)?;
        if s.is_empty() {
            return Err(MatroidError::EmptyGroundSet);
        }
        let r = self.rank_of(s);
        let mut bases: Vec<SubsetMask> = self
            .bases()
            .iter()
            .map(|b| b.intersection(s))
            .filter(|b| b.len() == r)
            .map(|b| b.compress(s))
            .collect();
        bases.sort_unstable();
        bases.dedup();
        Matroid::from_bases_unchecked(s.len(), bases)
    }

    /// `M \ S`.
    pub fn delete(&self, s: SubsetMask) -> Result<Matroid> {
        self.check_subset(s)?;
        self.restrict(s.complement(self.ground_size()))
    }

    /// `M / S`, relabelled onto the remaining elements in increasing order.
    pub fn contract(&self, s: SubsetMask) -> Result<Matroid> {
        self.check_subset(s)?;
        let n = self.ground_size();
        let rest = s.complement(n);
        if rest.is_empty() {
            return Err(MatroidError::EmptyGroundSet);
        }
        let rs = self.rank_of(s);
        let mut bases: Vec<SubsetMask> = self
            .bases()
            .iter()
            .filter(|b| b.intersection(s).len() == rs)
            .map(|b| b.intersection(rest).compress(rest))
            .collect();
        bases.sort_unstable();
        bases.dedup();
        Matroid::from_bases_unchecked(rest.len(), bases)
    }

    /// `M|T / S` for `S ⊆ T`, on the elements of `T \ S`.
    pub fn minor(&self, contract: SubsetMask, keep: SubsetMask) -> Result<Matroid> {
        if !contract.is_subset_of(keep) {
            return Err(MatroidError::InvalidChain(format!(
                "{contract} is not contained in {keep}"
            )));
        }
        let restricted = self.restrict(keep)?;
        restricted.contract(contract.compress(keep))
    }

    /// `self ⊕ other`, with the elements of `other` shifted past those of `self`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n1 = self.ground_size();
        let n = n1 + other.ground_size();
        if n > MAX_GROUND_SET {
            return Err(MatroidError::GroundSetTooLarge(n));
        }
        let mut bases = Vec::with_capacity(self.bases().len() * other.bases().len());
        for &b1 in self.bases() {
            for &b2 in other.bases() {
                bases.push(b1.union(b2.shifted(n1)));
            }
        }
        Matroid::from_bases_unchecked(n, bases)
    }

    /// Add a new element `n` parallel to `e`.
    pub fn parallel_extension(&self, e: usize) -> Result<Matroid> {
        let n = self.ground_size();
        if e >= n {
            return Err(MatroidError::ElementOutOfRange { element: e, n });
        }
        if n + 1 > MAX_GROUND_SET {
            return Err(MatroidError::GroundSetTooLarge(n + 1));
        }
        let mut bases = self.bases().to_vec();
        for &b in self.bases() {
            if b.contains(e) {
                bases.push(b.without(e).with(n));
            }
        }
        Matroid::from_bases_unchecked(n + 1, bases)
    }

    /// Relabel element `e` as `perm[e]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Matroid> {
        let n = self.ground_size();
        let mut seen = SubsetMask::EMPTY;
        for &p in perm {
            if p >= n || seen.contains(p) {
                return Err(MatroidError::InvalidChain(format!(
                    "{perm:?} is not a permutation of 0..{n}"
                )));
            }
            seen = seen.with(p);
        }
        if perm.len() != n {
            return Err(MatroidError::InvalidChain(format!(
                "{perm:?} is not a permutation of 0..{n}"
            )));
        }
        let bases = self
            .bases()
            .iter()
            .map(|b| SubsetMask::from_elements(b.iter().map(|e| perm[e])))
            .collect();
        Matroid::from_bases_unchecked(n, bases)
    }

    /// Collapse parallel classes to their smallest element.
    pub fn simplify(&self) -> Result<Simplification> {
        if self.has_loops() {
            return Err(MatroidError::LoopsPresent);
        }
        let n = self.ground_size();
        let mut kept = Vec::new();
        let mut multiplicities = Vec::new();
        let mut assigned = SubsetMask::EMPTY;
        for e in 0..n {
            if assigned.contains(e) {
                continue;
            }
            let class = (e..n)
                .filter(|&f| f == e || self.rank_of(SubsetMask::from_elements([e, f])) == 1)
                .fold(SubsetMask::EMPTY, |acc, f| acc.with(f));
            assigned = assigned.union(class);
            kept.push(e);
            multiplicities.push(class.len());
        }
        let matroid = self.restrict(SubsetMask::from_elements(kept.iter().copied()))?;
        Ok(Simplification {
            matroid,
            kept,
            multiplicities,
        })
    }

    pub fn is_simple(&self) -> bool {
        !self.has_loops()
            && (0..self.ground_size()).all(|e| {
                (e + 1..self.ground_size())
                    .all(|f| self.rank_of(SubsetMask::from_elements([e, f])) == 2)
            })
    }

    /// Connected components of `M`, ordered by smallest element.
    ///
    /// `e` and `f` are merged whenever `B - e + f` is a basis for some basis `B`.
    pub fn connected_components(&self) -> Vec<SubsetMask> {
        let n = self.ground_size();
        let mut is_basis = vec![false; 1 << n];
        for b in self.bases() {
            is_basis[b.index()] = true;
        }
        let mut uf = UnionFind::new(n);
        for &b in self.bases() {
            let outside = b.complement(n);
            for e in b.iter() {
                let rest = b.without(e);
                for f in outside.iter() {
                    if is_basis[rest.with(f).index()] {
                        uf.union(e, f);
                    }
                }
            }
        }
        uf.classes(self.ground())
    }

    /// Components of `M | S` (empty for `S = ∅`), via fundamental circuits of
    /// a greedy basis of `S`.
    pub fn components_of(&self, s: SubsetMask) -> Vec<SubsetMask> {
        let mut basis = SubsetMask::EMPTY;
        for e in s.iter() {
            if self.rank_of(basis.with(e)) > basis.len() {
                basis = basis.with(e);
            }
        }
        let mut uf = UnionFind::new(self.ground_size());
        for e in s.difference(basis).iter() {
            let with_e = basis.with(e);
            for b in basis.iter() {
                if self.rank_of(with_e.without(b)) == basis.len() {
                    uf.union(e, b);
                }
            }
        }
        uf.classes(s)
    }

    /// Number of connected components of `M | S`; loops count individually.
    pub fn component_count(&self, s: SubsetMask) -> usize {
        self.components_of(s).len()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    pub(crate) fn check_subset(&self, s: SubsetMask) -> Result<()> {
        let n = self.ground_size();
        match s.difference(self.ground()).first() {
            Some(element) => Err(MatroidError::ElementOutOfRange { element, n }),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(r: usize, n: usize) -> Matroid {
        Matroid::uniform(r, n).unwrap()
    }

    #[test]
    fn dual_of_u25_is_u35() {
        assert_eq!(u(2, 5).dual(), u(3, 5));
    }

    #[test]
    fn direct_sum_multiplies_basis_counts() {
        let m = u(1, 2).direct_sum(&u(1, 2)).unwrap();
        assert_eq!(m.bases().len(), 4);
        assert_eq!(m.connected_components().len(), 2);
    }

    #[test]
    fn contraction_and_deletion_of_u23() {
        assert_eq!(u(2, 3).contract(SubsetMask::singleton(0)).unwrap(), u(1, 2));
        assert_eq!(u(2, 3).delete(SubsetMask::singleton(0)).unwrap(), u(2, 2));
        assert_eq!(
            u(2, 3).contract(SubsetMask::full(3)).unwrap_err(),
            MatroidError::EmptyGroundSet
        );
    }

    #[test]
    fn simplify_collapses_parallel_classes() {
        let m = u(2, 3).parallel_extension(1).unwrap().parallel_extension(1).unwrap();
        let s = m.simplify().unwrap();
        assert_eq!(s.matroid, u(2, 3));
        assert_eq!(s.kept, vec![0, 1, 2]);
        assert_eq!(s.multiplicities, vec![1, 3, 1]);
        assert!(!m.is_simple());
        assert!(s.matroid.is_simple());
    }

    #[test]
    fn simplify_rejects_loops() {
        let m = u(0, 1).direct_sum(&u(1, 2)).unwrap();
        assert_eq!(m.simplify().unwrap_err(), MatroidError::LoopsPresent);
    }

    #[test]
    fn components_of_sum_and_uniform() {
        assert_eq!(u(2, 4).connected_components().len(), 1);
        let m = u(1, 2).direct_sum(&u(2, 3)).unwrap();
        assert_eq!(
            m.connected_components(),
            vec![SubsetMask(0b00011), SubsetMask(0b11100)]
        );
        assert_eq!(m.component_count(m.ground()), 2);
        assert_eq!(m.component_count(SubsetMask::EMPTY), 0);
        assert_eq!(m.component_count(SubsetMask(0b00101)), 2);
    }

    #[test]
    fn loops_and_coloops_are_singleton_components() {
        let m = u(0, 1).direct_sum(&u(1, 1)).unwrap().direct_sum(&u(1, 2)).unwrap();
        assert_eq!(m.connected_components().len(), 3);
        assert_eq!(m.component_count(m.ground()), 3);
    }

    #[test]
    fn permute_relabels() {
        let m = u(1, 1).direct_sum(&u(0, 1)).unwrap();
        let p = m.permute(&[1, 0]).unwrap();
        assert_eq!(p.loops(), SubsetMask::singleton(0));
        assert!(m.permute(&[0, 0]).is_err());
    }

    #[test]
    fn minor_matches_restrict_then_contract() {
        let m = u(3, 6);
        let keep = SubsetMask(0b011110);
        let c = SubsetMask(0b000110);
        assert_eq!(m.minor(c, keep).unwrap(), u(1, 2));
    }
}
