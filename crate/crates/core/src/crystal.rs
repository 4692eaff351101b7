//! Multipartitions, Kashiwara operators by the signature rule, Kleshchev
//! multipartitions, tensor crystals `B(λ)^{⊗r}` and the comparison with the
//! branching graph of simple modules at generic `q`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;

use crate::cyclo::WeightDatum;
use crate::partition::Partition;
use crate::rep::{restrict_branch, simple_labels, simple_module, Invariants, RepError};
use crate::scalars::Specialization;
use crate::symgroup::Composition;

/// `(charge + col − row) mod e` for a 1-based box; `e = None` keeps integers.
pub fn residue(row: usize, col: usize, charge: i64, e: Option<u32>) -> i64 {
    reduce_residue(charge + col as i64 - row as i64, e)
}

fn reduce_residue(v: i64, e: Option<u32>) -> i64 {
    match e {
        Some(e) => v.rem_euclid(e as i64),
        None => v,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multipartition {
    components: Vec<Partition>,
    charges: Vec<i64>,
    e: Option<u32>,
}

/// A 0-based box `(component, row, col)`.
pub type Node = (usize, usize, usize);

impl Multipartition {
    pub fn empty(charges: &[i64], e: Option<u32>) -> Self {
        Multipartition { components: vec![Partition::empty(); charges.len()], charges: charges.to_vec(), e }
    }

    pub fn new(components: Vec<Partition>, charges: &[i64], e: Option<u32>) -> Option<Self> {
        (components.len() == charges.len()).then(|| Multipartition { components, charges: charges.to_vec(), e })
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn charges(&self) -> &[i64] {
        &self.charges
    }

    pub fn e(&self) -> Option<u32> {
        self.e
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn node_residue(&self, (k, row, col): Node) -> i64 {
        residue(row + 1, col + 1, self.charges[k], self.e)
    }

    /// Addable (`true`) and removable (`false`) `i`-nodes in reading order:
    /// components last to first, rows bottom to top.
    pub fn signature(&self, i: i64) -> Vec<(Node, bool)> {
        let i = reduce_residue(i, self.e);
        let mut out = Vec::new();
        for (k, p) in self.components.iter().enumerate().rev() {
            let mut cells: Vec<(Node, bool)> = p.addable().into_iter().map(|(r, c)| ((k, r, c), true)).collect();
            cells.extend(p.removable().into_iter().map(|(r, c)| ((k, r, c), false)));
            cells.sort_by_key(|c| std::cmp::Reverse(c.0 .1));
            out.extend(cells.into_iter().filter(|(node, _)| self.node_residue(*node) == i));
        }
        out
    }

    /// The signature after cancelling every addable node that precedes a removable one.
    fn reduced_signature(&self, i: i64) -> Vec<(Node, bool)> {
        let mut stack: Vec<(Node, bool)> = Vec::new();
        for entry in self.signature(i) {
            if !entry.1 && stack.last().is_some_and(|top| top.1) {
                stack.pop();
            } else {
                stack.push(entry);
            }
        }
        stack
    }

    /// The good addable `i`-node.
    pub fn good_addable(&self, i: i64) -> Option<Node> {
        self.reduced_signature(i).into_iter().find(|(_, add)| *add).map(|(n, _)| n)
    }

    /// The good removable `i`-node.
    pub fn good_removable(&self, i: i64) -> Option<Node> {
        self.reduced_signature(i).into_iter().rev().find(|(_, add)| !*add).map(|(n, _)| n)
    }

    pub fn kashiwara_f(&self, i: i64) -> Option<Multipartition> {
        let (k, row, _) = self.good_addable(i)?;
        let mut out = self.clone();
        out.components[k] = out.components[k].add_box(row);
        Some(out)
    }

    pub fn kashiwara_e(&self, i: i64) -> Option<Multipartition> {
        let (k, row, _) = self.good_removable(i)?;
        let mut out = self.clone();
        out.components[k] = out.components[k].remove_box(row);
        Some(out)
    }

    /// Residues at which some node can be added.
    pub fn addable_residues(&self) -> BTreeSet<i64> {
        let mut out = BTreeSet::new();
        for (k, p) in self.components.iter().enumerate() {
            for (r, c) in p.addable() {
                out.insert(self.node_residue((k, r, c)));
            }
        }
        out
    }

    pub fn removable_residues(&self) -> BTreeSet<i64> {
        let mut out = BTreeSet::new();
        for (k, p) in self.components.iter().enumerate() {
            for (r, c) in p.removable() {
                out.insert(self.node_residue((k, r, c)));
            }
        }
        out
    }

    /// Reachable from the empty multipartition by `f̃` operators.
    pub fn is_kleshchev(&self) -> bool {
        if self.size() == 0 {
            return true;
        }
        self.removable_residues().into_iter().filter_map(|i| self.kashiwara_e(i)).any(|m| m.is_kleshchev())
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|p| if p.is_empty() { "∅".to_string() } else { p.to_string() }).collect();
        if parts.len() == 1 {
            write!(f, "{}", parts[0])
        } else {
            write!(f, "[{}]", parts.join("|"))
        }
    }
}

/// Kleshchev multipartitions of `n`. With a single charge this is the direct
/// `e`-restricted test; otherwise reachability from `∅`.
pub fn kleshchev_enumerate(n: usize, lambda: &WeightDatum, e: Option<u32>) -> Vec<Multipartition> {
    let charges = lambda.charges();
    if charges.len() == 1 {
        return Partition::all(n)
            .into_iter()
            .filter(|p| e.is_none_or(|e| p.is_restricted(e as usize)))
            .map(|p| Multipartition::new(vec![p], &charges, e).unwrap())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
    }
    kleshchev_reachable(n, lambda, e)
}

/// Kleshchev multipartitions of `n` by breadth-first search with `f̃`.
pub fn kleshchev_reachable(n: usize, lambda: &WeightDatum, e: Option<u32>) -> Vec<Multipartition> {
    let mut level = BTreeSet::from([Multipartition::empty(&lambda.charges(), e)]);
    for _ in 0..n {
        level = level.iter().flat_map(|m| m.addable_residues().into_iter().filter_map(move |i| m.kashiwara_f(i))).collect();
    }
    level.into_iter().collect()
}

/// A vertex of `B(λ)^{⊗r}`: one Kleshchev multipartition per slot.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrystalNode {
    pub slots: Vec<Multipartition>,
}

impl CrystalNode {
    pub fn size(&self) -> usize {
        self.slots.iter().map(Multipartition::size).sum()
    }
}

impl fmt::Display for CrystalNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.slots.iter().map(|m| m.to_string()).collect();
        write!(f, "{}", s.join(" ⊗ "))
    }
}

/// Arrow `from → to` of colour `(i, k)`: residue `i` acting on slot `k` (1-based).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Arrow {
    pub from: String,
    pub to: String,
    pub i: i64,
    pub k: usize,
}

/// A graded graph with string-labelled vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BranchGraph {
    pub levels: Vec<Vec<String>>,
    pub arrows: Vec<Arrow>,
}

impl BranchGraph {
    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn to_dot(&self) -> String {
        let mut ids = BTreeMap::new();
        let mut out = String::from("digraph crystal {\n  rankdir=TB;\n");
        for (n, level) in self.levels.iter().enumerate() {
            let _ = writeln!(out, "  subgraph level{n} {{\n    rank=same;");
            for label in level {
                let id = ids.len();
                ids.insert(label.clone(), id);
                let _ = writeln!(out, "    n{id} [label=\"{label}\"];");
            }
            out.push_str("  }\n");
        }
        for a in &self.arrows {
            let _ = writeln!(out, "  n{} -> n{} [label=\"{}@{}\"];", ids[&a.from], ids[&a.to], a.i, a.k);
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("graph serializes")
    }
}

/// `B(λ)^{⊗r}` up to level `n_max`, arrows from `f̃_i` on each slot.
pub fn tensor_crystal(lambda: &WeightDatum, r: usize, e: Option<u32>, n_max: usize) -> (Vec<Vec<CrystalNode>>, BranchGraph) {
    let empty = Multipartition::empty(&lambda.charges(), e);
    let mut levels = vec![vec![CrystalNode { slots: vec![empty; r] }]];
    let mut arrows = BTreeSet::new();
    for _ in 0..n_max {
        let mut next = BTreeSet::new();
        for node in levels.last().unwrap() {
            for k in 0..r {
                for i in node.slots[k].addable_residues() {
                    if let Some(m) = node.slots[k].kashiwara_f(i) {
                        let mut target = node.clone();
                        target.slots[k] = m;
                        arrows.insert(Arrow { from: node.to_string(), to: target.to_string(), i, k: k + 1 });
                        next.insert(target);
                    }
                }
            }
        }
        levels.push(next.into_iter().collect());
    }
    let graph =
        BranchGraph { levels: levels.iter().map(|l| l.iter().map(|n| n.to_string()).collect()).collect(), arrows: arrows.into_iter().collect() };
    (levels, graph)
}

/// `Σ_{μ ∈ C_r(n)} Π_k |K^λ_{μ_k}|` from the direct Kleshchev enumeration.
pub fn predicted_level_size(lambda: &WeightDatum, r: usize, e: Option<u32>, n: usize) -> usize {
    let counts: Vec<usize> = (0..=n).map(|m| kleshchev_enumerate(m, lambda, e).len()).collect();
    Composition::all(r, n).iter().map(|mu| mu.parts().iter().map(|&m| counts[m]).product::<usize>()).sum()
}

/// The vertex of `B(Λ_i)^{⊗r}` labelling `S_μ(L.)`.
pub fn crystal_label(shapes: &[Partition], charge: i64) -> CrystalNode {
    CrystalNode { slots: shapes.iter().map(|s| Multipartition::new(vec![s.clone()], &[charge], None).unwrap()).collect() }
}

/// Branching graph of the simple modules for `λ = {charge: 1}` at generic `q`.
///
/// Vertices are the simple modules, named by their crystal label. Each summand
/// `(k, q^a)` of a restriction is identified with a simple module one level down
/// by comparing isomorphism invariants, and becomes the arrow of colour
/// `(i, k)` with `a = 2i − charge`.
pub fn module_graph(r: usize, charge: i64, n_max: usize) -> Result<BranchGraph, RepError> {
    let lambda = WeightDatum::from_charges(&[charge]);
    let mut graph = BranchGraph::default();
    let mut below: Vec<(Invariants, String)> = Vec::new();
    for n in 0..=n_max {
        let mut here = Vec::new();
        for (mu, shapes) in simple_labels(r, n) {
            let m = simple_module(&mu, &shapes, &lambda, Specialization::Generic)?;
            let label = crystal_label(&shapes, charge).to_string();
            if n > 0 {
                for s in restrict_branch(&m)? {
                    let inv = Invariants::of(&s.lower())?;
                    let from = below
                        .iter()
                        .find(|(b, _)| *b == inv)
                        .map(|(_, l)| l.clone())
                        .ok_or_else(|| RepError::RelationFailure(format!("summand (k={}, a=q^{}) of {label} is not a known simple", s.k, s.a)))?;
                    if (s.a as i64 + charge).rem_euclid(2) != 0 {
                        return Err(RepError::RelationFailure(format!("eigenvalue q^{} has no residue", s.a)));
                    }
                    graph.arrows.push(Arrow { from, to: label.clone(), i: (s.a as i64 + charge) / 2, k: s.k });
                }
            }
            here.push((Invariants::of(&m)?, label));
        }
        let mut labels: Vec<String> = here.iter().map(|(_, l)| l.clone()).collect();
        labels.sort();
        graph.levels.push(labels);
        below = here;
    }
    graph.arrows.sort();
    Ok(graph)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompareReport {
    pub isomorphic: bool,
    pub level_sizes: (Vec<usize>, Vec<usize>),
    pub arrow_counts: (usize, usize),
    pub first_divergence: Option<String>,
}

/// Compares two graded graphs level by level: vertex sets, then arrows with colours.
pub fn branch_graph_compare(module: &BranchGraph, crystal: &BranchGraph, n_max: usize) -> CompareReport {
    let clip = |g: &BranchGraph| -> (Vec<BTreeSet<String>>, BTreeMap<Arrow, usize>) {
        let levels: Vec<BTreeSet<String>> = g.levels.iter().take(n_max + 1).map(|l| l.iter().cloned().collect()).collect();
        let known: BTreeSet<&String> = levels.iter().flatten().collect();
        let mut arrows = BTreeMap::new();
        for a in g.arrows.iter().filter(|a| known.contains(&a.to)) {
            *arrows.entry(a.clone()).or_insert(0) += 1;
        }
        (levels, arrows)
    };
    let (ml, ma) = clip(module);
    let (cl, ca) = clip(crystal);
    let mut first = None;
    for n in 0..ml.len().max(cl.len()) {
        let (a, b) = (ml.get(n), cl.get(n));
        if a != b {
            let a = a.cloned().unwrap_or_default();
            let b = b.cloned().unwrap_or_default();
            let only_m: Vec<&String> = a.difference(&b).collect();
            let only_c: Vec<&String> = b.difference(&a).collect();
            first = Some(format!("level {n}: only in module graph {only_m:?}, only in crystal {only_c:?}"));
            break;
        }
    }
    if first.is_none() {
        if let Some((arrow, _)) = ma.iter().find(|(a, m)| ca.get(*a) != Some(m)).or_else(|| ca.iter().find(|(a, m)| ma.get(*a) != Some(m))) {
            first = Some(format!("arrow {} -> {} colour {}@{}", arrow.from, arrow.to, arrow.i, arrow.k));
        }
    }
    CompareReport {
        isomorphic: first.is_none(),
        level_sizes: (ml.iter().map(BTreeSet::len).collect(), cl.iter().map(BTreeSet::len).collect()),
        arrow_counts: (ma.values().sum(), ca.values().sum()),
        first_divergence: first,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l0() -> WeightDatum {
        WeightDatum::from_charges(&[0])
    }

    fn single(parts: &[usize], e: Option<u32>) -> Multipartition {
        Multipartition::new(vec![Partition::new(parts.to_vec()).unwrap()], &[0], e).unwrap()
    }

    #[test]
    fn residues() {
        assert_eq!(residue(1, 1, 0, Some(2)), 0);
        assert_eq!(residue(2, 1, 0, Some(2)), 1);
        assert_eq!(residue(1, 2, 1, Some(2)), 0);
        assert_eq!(residue(2, 1, 0, None), -1);
    }

    #[test]
    fn kashiwara_examples() {
        let e = Some(2);
        assert_eq!(single(&[1], e).kashiwara_e(0), Some(single(&[], e)));
        assert_eq!(single(&[1], e).kashiwara_f(1), Some(single(&[1, 1], e)));
        assert_eq!(single(&[], e).kashiwara_e(0), None);
        assert_eq!(single(&[], e).kashiwara_f(0), Some(single(&[1], e)));
    }

    #[test]
    fn kleshchev_examples() {
        let names = |v: Vec<Multipartition>| v.iter().map(|m| m.to_string()).collect::<Vec<_>>();
        assert_eq!(names(kleshchev_enumerate(2, &l0(), Some(2))), vec!["(1,1)"]);
        assert_eq!(names(kleshchev_enumerate(2, &l0(), Some(3))), vec!["(1,1)", "(2)"]);
        assert_eq!(kleshchev_enumerate(0, &l0(), Some(2)).len(), 1);
    }

    #[test]
    fn restricted_equals_reachable() {
        for e in [Some(2), Some(3), Some(4), None] {
            for n in 0..=6 {
                assert_eq!(kleshchev_enumerate(n, &l0(), e), kleshchev_reachable(n, &l0(), e), "e={e:?} n={n}");
            }
        }
    }

    #[test]
    fn partial_inverses() {
        let lambda = WeightDatum::from_charges(&[0, 1]);
        for n in 0..=4 {
            for m in kleshchev_reachable(n, &lambda, Some(3)) {
                assert!(m.is_kleshchev());
                for i in 0..3 {
                    if let Some(up) = m.kashiwara_f(i) {
                        assert_eq!(up.kashiwara_e(i).as_ref(), Some(&m));
                    }
                    if let Some(down) = m.kashiwara_e(i) {
                        assert_eq!(down.kashiwara_f(i).as_ref(), Some(&m));
                    }
                }
            }
        }
    }

    #[test]
    fn tensor_levels() {
        let (levels, graph) = tensor_crystal(&l0(), 2, Some(2), 2);
        assert_eq!(levels[2].len(), 3);
        assert_eq!(graph.level_sizes(), vec![1, 2, 3]);
        for n in 0..=4 {
            assert_eq!(tensor_crystal(&l0(), 2, Some(3), 4).1.level_sizes()[n], predicted_level_size(&l0(), 2, Some(3), n));
        }
        let dot = graph.to_dot();
        assert!(dot.contains("label=\"0@1\""));
    }

    #[test]
    fn young_graph() {
        let (_, crystal) = tensor_crystal(&l0(), 1, None, 3);
        assert_eq!(crystal.level_sizes(), vec![1, 1, 2, 3]);
        let module = module_graph(1, 0, 3).unwrap();
        let report = branch_graph_compare(&module, &crystal, 3);
        assert!(report.isomorphic, "{report:?}");
        let empty = BranchGraph::default();
        assert!(branch_graph_compare(&empty, &empty, 0).isomorphic);
        let (_, shorter) = tensor_crystal(&l0(), 1, None, 2);
        assert!(!branch_graph_compare(&module, &shorter, 3).isomorphic);
    }
}
