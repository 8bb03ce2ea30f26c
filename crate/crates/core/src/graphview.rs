//! Undirected control graph: one vertex per letter, one edge per field.

use crate::error::Result;
use crate::monoid::DisjointSets;
use crate::permgroup::BasisIndexPair;
use crate::systems::SystemSpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ControlGraph {
    n: usize,
    edges: Vec<BasisIndexPair>,
}

impl ControlGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = BasisIndexPair>) -> Result<Self> {
        let mut edges: Vec<_> = edges.into_iter().collect();
        for e in &edges {
            e.check_range(n)?;
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[BasisIndexPair] {
        &self.edges
    }

    /// Connected components, singletons included, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut sets = DisjointSets::new(self.n);
        for e in &self.edges {
            sets.union(e.i(), e.j());
        }
        sets.blocks()
    }

    /// Components with at least two vertices; comparable with an orbit partition.
    pub fn nontrivial_components(&self) -> Vec<Vec<usize>> {
        self.components().into_iter().filter(|c| c.len() >= 2).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 1..=self.n {
            if !self.edges.iter().any(|e| e.touches(v)) {
                out.push_str(&format!("  {v};\n"));
            }
        }
        for e in &self.edges {
            out.push_str(&format!("  {} -- {};\n", e.i(), e.j()));
        }
        out.push('}');
        out
    }
}

/// Vertices `1..=n`, edges = control pairs plus the drift pair.
pub fn build_graph(spec: &SystemSpec) -> Result<ControlGraph> {
    ControlGraph::new(spec.n, spec.fields())
}

pub fn connectivity_verdict(g: &ControlGraph) -> bool {
    g.is_connected()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{class_of, star_fold};
    use crate::systems::Family;
    use proptest::prelude::*;

    fn pairs(list: &[(usize, usize)]) -> Vec<BasisIndexPair> {
        list.iter().map(|&(i, j)| BasisIndexPair::new(i, j).unwrap()).collect()
    }

    #[test]
    fn build_from_specs() {
        let spec = SystemSpec::new(Family::SOn, 5, pairs(&[(1, 2), (2, 3), (4, 5)]));
        let g = build_graph(&spec).unwrap();
        assert_eq!(g.edges(), pairs(&[(1, 2), (2, 3), (4, 5)]).as_slice());
        assert_eq!(g.components(), vec![vec![1, 2, 3], vec![4, 5]]);
        assert!(!connectivity_verdict(&g));

        let drift_only = SystemSpec::new(Family::SOn, 3, []).with_drift(BasisIndexPair::new(1, 2).unwrap());
        assert_eq!(build_graph(&drift_only).unwrap().edges().len(), 1);

        let markov = SystemSpec::new(Family::Markov, 4, pairs(&[(1, 4), (2, 3)]));
        assert_eq!(build_graph(&markov).unwrap().edges(), pairs(&[(1, 4), (2, 3)]).as_slice());
    }

    #[test]
    fn component_examples() {
        let g = ControlGraph::new(5, pairs(&[(1, 2), (2, 3), (3, 4), (4, 5)])).unwrap();
        assert_eq!(g.components(), vec![vec![1, 2, 3, 4, 5]]);
        assert!(connectivity_verdict(&g));
        let empty = ControlGraph::new(3, []).unwrap();
        assert_eq!(empty.components(), vec![vec![1], vec![2], vec![3]]);
        assert!(connectivity_verdict(&ControlGraph::new(1, []).unwrap()));
        assert!(ControlGraph::new(3, pairs(&[(1, 4)])).is_err());
    }

    #[test]
    fn dot_output() {
        let g = ControlGraph::new(3, pairs(&[(1, 2)])).unwrap();
        assert_eq!(g.to_dot(), "graph G {\n  3;\n  1 -- 2;\n}");
    }

    proptest! {
        #[test]
        fn components_match_star_fold_orbits(raw in proptest::collection::vec((1usize..=7, 1usize..=7), 0..12)) {
            let edges: Vec<_> = raw.iter().filter_map(|&(a, b)| BasisIndexPair::unordered(a, b).ok()).collect();
            let g = ControlGraph::new(7, edges.clone()).unwrap();
            let orbits = class_of(&star_fold(&edges, 7).unwrap());
            prop_assert_eq!(g.nontrivial_components(), orbits.orbits().to_vec());
            let mut doubled = edges.clone();
            doubled.extend(edges.iter().rev());
            prop_assert_eq!(ControlGraph::new(7, doubled).unwrap().components(), g.components());
        }
    }
}
