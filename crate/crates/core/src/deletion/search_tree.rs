use std::collections::HashSet;

use super::{sort_sets, DeletionSet, DeletionTarget};
use crate::graph::Graph;
use crate::recognition::{all_forbidden_occurrences, find_forbidden_occurrence, is_member, ForbiddenFamily};

/// Vertex subsets inducing a forbidden pattern, in scan order
/// (size, then lexicographic).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OccurrenceList(Vec<Vec<usize>>);

impl OccurrenceList {
    pub fn as_slice(&self) -> &[Vec<usize>] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// First entry disjoint from `hit`.
    pub fn first_unhit(&self, hit: &[usize]) -> Option<&[usize]> {
        self.0
            .iter()
            .find(|a| a.iter().all(|v| !hit.contains(v)))
            .map(Vec::as_slice)
    }
}

pub fn enumerate_occurrences(g: &Graph, fam: &ForbiddenFamily) -> OccurrenceList {
    OccurrenceList(all_forbidden_occurrences(g, fam))
}

/// `γ_1..γ_k`, each in `1..=d`: at phase `i` take the `γ_i`-th vertex of the
/// first occurrence not yet hit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BranchString(Vec<usize>);

impl BranchString {
    pub fn new(choices: Vec<usize>) -> Self {
        assert!(choices.iter().all(|&c| c >= 1), "branch choices are 1-based");
        BranchString(choices)
    }

    pub fn choices(&self) -> &[usize] {
        &self.0
    }

    /// All strings in `[d]^k`, lexicographically.
    pub fn all(d: usize, k: usize) -> impl Iterator<Item = BranchString> {
        let total = d.checked_pow(k as u32).expect("branch string space overflows");
        (0..total).map(move |mut idx| {
            let mut digits = vec![0; k];
            for slot in digits.iter_mut().rev() {
                *slot = idx % d + 1;
                idx /= d;
            }
            BranchString(digits)
        })
    }
}

/// Runs one root-to-leaf path of the search tree. Returns the set picked
/// when every occurrence is hit on or before the last phase.
pub fn follow_branch_string(g: &Graph, fam: &ForbiddenFamily, gamma: &BranchString) -> Option<Vec<usize>> {
    let mut picked: Vec<usize> = Vec::new();
    let mut phases = gamma.choices().iter();
    loop {
        let (rest, map) = g.remove_vertices(&picked);
        let Some(occurrence) = find_forbidden_occurrence(&rest, fam) else {
            picked.sort_unstable();
            return Some(picked);
        };
        let choice = *phases.next()?;
        let v = *occurrence.get(choice - 1)?;
        picked.push(map[v]);
    }
}

/// Minimal deletion sets plus the size of the tree that produced them.
#[derive(Debug, Clone)]
pub struct DeletionSearch {
    pub sets: Vec<DeletionSet>,
    /// Search-tree nodes visited; at most `sum_{i<=k} d^i`.
    pub nodes: usize,
}

struct Tree<'a> {
    g: &'a Graph,
    fam: &'a ForbiddenFamily,
    k: usize,
    nodes: usize,
    found: HashSet<Vec<usize>>,
}

impl Tree<'_> {
    fn first_occurrence(&self, picked: &[usize]) -> Option<Vec<usize>> {
        let (rest, map) = self.g.remove_vertices(picked);
        if is_member(&rest, self.fam) {
            return None;
        }
        let occ = find_forbidden_occurrence(&rest, self.fam).expect("non-member has an occurrence");
        Some(occ.into_iter().map(|v| map[v]).collect())
    }

    fn explore(&mut self, picked: &mut Vec<usize>) {
        self.nodes += 1;
        let Some(occurrence) = self.first_occurrence(picked) else {
            let mut set = picked.clone();
            set.sort_unstable();
            self.found.insert(set);
            return;
        };
        if picked.len() == self.k {
            return;
        }
        for v in occurrence {
            picked.push(v);
            self.explore(picked);
            picked.pop();
        }
    }

    fn is_minimal(&self, set: &[usize]) -> bool {
        (0..set.len()).all(|i| {
            let mut smaller = set.to_vec();
            smaller.remove(i);
            !is_member(&self.g.remove_vertices(&smaller).0, self.fam)
        })
    }
}

/// Bounded search tree over the first un-hit occurrence. Sets reached on
/// several branches are reported once; non-minimal ones are dropped.
pub fn search_deletion_sets(g: &Graph, fam: &ForbiddenFamily, k: usize) -> DeletionSearch {
    let mut tree = Tree {
        g,
        fam,
        k,
        nodes: 0,
        found: HashSet::new(),
    };
    tree.explore(&mut Vec::with_capacity(k));
    let mut sets: Vec<Vec<usize>> = tree.found.iter().filter(|s| tree.is_minimal(s)).cloned().collect();
    sort_sets(&mut sets);
    let target = DeletionTarget::Family(fam.name().to_string());
    DeletionSearch {
        sets: sets.into_iter().map(|s| DeletionSet::new(s, target.clone())).collect(),
        nodes: tree.nodes,
    }
}

/// Every inclusion-minimal deletion set of size at most `k`, by size then
/// lexicographically. `[∅]` for members of the class, `[]` if the distance
/// exceeds `k`.
pub fn enumerate_deletion_sets(g: &Graph, fam: &ForbiddenFamily, k: usize) -> Vec<DeletionSet> {
    search_deletion_sets(g, fam, k).sets
}

pub fn minimum_deletion_set(g: &Graph, fam: &ForbiddenFamily, k: usize) -> Option<DeletionSet> {
    enumerate_deletion_sets(g, fam, k).into_iter().next()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognition::builtin_family;

    fn sets(list: &[DeletionSet]) -> Vec<Vec<usize>> {
        list.iter().map(|s| s.vertices().to_vec()).collect()
    }

    #[test]
    fn occurrence_examples() {
        let cograph = builtin_family("cograph").unwrap();
        assert_eq!(
            enumerate_occurrences(&Graph::path(4), &cograph).as_slice(),
            &[vec![0, 1, 2, 3]]
        );
        assert!(enumerate_occurrences(&Graph::cycle(4), &cograph).is_empty());
        assert_eq!(
            enumerate_occurrences(&Graph::path(5), &cograph).as_slice(),
            &[vec![0, 1, 2, 3], vec![1, 2, 3, 4]]
        );
        let occ = enumerate_occurrences(&Graph::path(5), &cograph);
        assert_eq!(occ.first_unhit(&[0]), Some(&[1, 2, 3, 4][..]));
        assert_eq!(occ.first_unhit(&[2]), None);
    }

    #[test]
    fn deletion_examples() {
        let cograph = builtin_family("cograph").unwrap();
        let p4 = enumerate_deletion_sets(&Graph::path(4), &cograph, 1);
        assert_eq!(sets(&p4), vec![vec![0], vec![1], vec![2], vec![3]]);
        assert_eq!(p4[0].target(), &DeletionTarget::Family("cograph".into()));

        for k in 0..3 {
            assert_eq!(
                sets(&enumerate_deletion_sets(&Graph::cycle(4), &cograph, k)),
                vec![Vec::<usize>::new()]
            );
        }
        assert!(enumerate_deletion_sets(&Graph::cycle(5), &cograph, 1).is_empty());
        assert!(enumerate_deletion_sets(&Graph::path(4), &cograph, 0).is_empty());
    }

    #[test]
    fn minimum_examples() {
        let cograph = builtin_family("cograph").unwrap();
        let s = minimum_deletion_set(&Graph::cycle(5), &cograph, 2).unwrap();
        assert_eq!(s.vertices(), &[0, 1]);
        let (rest, _) = Graph::cycle(5).remove_vertices(s.vertices());
        assert!(is_member(&rest, &cograph));
        assert!(minimum_deletion_set(&Graph::complete(4), &cograph, 0)
            .unwrap()
            .is_empty());
        assert_eq!(minimum_deletion_set(&Graph::cycle(5), &cograph, 1), None);
        // all ten pairs of C5 are minimal
        assert_eq!(enumerate_deletion_sets(&Graph::cycle(5), &cograph, 2).len(), 10);
    }

    #[test]
    fn node_count_bound() {
        let cograph = builtin_family("cograph").unwrap();
        let g = Graph::path(9);
        for k in 0..4 {
            let search = search_deletion_sets(&g, &cograph, k);
            let bound: usize = (0..=k as u32).map(|i| 4usize.pow(i)).sum();
            assert!(search.nodes <= bound, "{} > {bound}", search.nodes);
        }
    }

    #[test]
    fn branch_strings_agree_with_tree() {
        let fam = builtin_family("threshold").unwrap();
        let g = Graph::path(6).disjoint_union(&Graph::cycle(4));
        for k in 0..4 {
            let mut from_strings: HashSet<Vec<usize>> = BranchString::all(4, k)
                .filter_map(|gamma| follow_branch_string(&g, &fam, &gamma))
                .collect();
            let tree = enumerate_deletion_sets(&g, &fam, k);
            from_strings.retain(|s| {
                (0..s.len()).all(|i| {
                    let mut t = s.clone();
                    t.remove(i);
                    !is_member(&g.remove_vertices(&t).0, &fam)
                })
            });
            let mut from_strings: Vec<Vec<usize>> = from_strings.into_iter().collect();
            sort_sets(&mut from_strings);
            assert_eq!(from_strings, sets(&tree), "k={k}");
        }
    }

    #[test]
    fn branch_string_space() {
        let all: Vec<_> = BranchString::all(2, 2).collect();
        assert_eq!(
            all,
            vec![
                BranchString::new(vec![1, 1]),
                BranchString::new(vec![1, 2]),
                BranchString::new(vec![2, 1]),
                BranchString::new(vec![2, 2]),
            ]
        );
        assert_eq!(BranchString::all(4, 0).count(), 1);
    }
}
