//! Strong components and the contraction (condensation) of a problem.
//!
//! Components are numbered by their smallest member, so the numbering is
//! a function of the problem alone.

use std::collections::VecDeque;

use crate::relation::DecisionProblem;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongComponent {
    pub index: usize,
    /// Ascending, never empty.
    pub members: Vec<usize>,
}

/// The contraction: components plus the component-level relation between
/// distinct components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condensation {
    components: Vec<StrongComponent>,
    edges: Vec<(usize, usize)>,
    component_of: Vec<usize>,
}

/// Ground sets of the components with no incoming edge from another
/// component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalFamily {
    pub indices: Vec<usize>,
    pub ground_sets: Vec<Vec<usize>>,
}

impl MaximalFamily {
    /// Sorted union of the ground sets.
    pub fn union(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.ground_sets.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

impl Condensation {
    pub fn components(&self) -> &[StrongComponent] {
        &self.components
    }

    /// Sorted pairs `(i, j)` with `i != j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn component_of(&self, x: usize) -> usize {
        self.component_of[x]
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Kahn's algorithm over the component edges. `None` means a cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let k = self.components.len();
        let mut indegree = vec![0usize; k];
        let mut out = vec![Vec::new(); k];
        for &(i, j) in &self.edges {
            indegree[j] += 1;
            out[i].push(j);
        }
        let mut queue: VecDeque<usize> = (0..k).filter(|&i| indegree[i] == 0).collect();
        let mut order = Vec::with_capacity(k);
        while let Some(i) = queue.pop_front() {
            order.push(i);
            for &j in &out[i] {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    queue.push_back(j);
                }
            }
        }
        (order.len() == k).then_some(order)
    }

    pub fn maximal(&self) -> MaximalFamily {
        maximal_components(self)
    }
}

/// Strong components in canonical order, via an iterative Tarjan search.
pub fn strong_components(p: &DecisionProblem) -> Vec<StrongComponent> {
    const UNVISITED: usize = usize::MAX;
    let n = p.n();
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    // (vertex, position in its successor list)
    let mut frames: Vec<(usize, usize)> = Vec::new();
    let mut next_index = 0;
    let mut raw: Vec<Vec<usize>> = Vec::new();

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        frames.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&(v, pos)) = frames.last() {
            if let Some(&w) = p.successors(v).get(pos) {
                if let Some(top) = frames.last_mut() {
                    top.1 += 1;
                }
                if index[w] == UNVISITED {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }

            frames.pop();
            if let Some(&(parent, _)) = frames.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut members = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    members.push(w);
                    if w == v {
                        break;
                    }
                }
                members.sort_unstable();
                raw.push(members);
            }
        }
    }

    raw.sort_unstable_by_key(|members| members[0]);
    raw.into_iter()
        .enumerate()
        .map(|(index, members)| StrongComponent { index, members })
        .collect()
}

pub fn contraction(p: &DecisionProblem) -> Condensation {
    let components = strong_components(p);
    let mut component_of = vec![0; p.n()];
    for c in &components {
        for &x in &c.members {
            component_of[x] = c.index;
        }
    }
    let mut edges: Vec<(usize, usize)> = p
        .edges()
        .iter()
        .map(|&(u, v)| (component_of[u], component_of[v]))
        .filter(|&(i, j)| i != j)
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Condensation { components, edges, component_of }
}

pub fn maximal_components(c: &Condensation) -> MaximalFamily {
    let mut has_incoming = vec![false; c.len()];
    for &(_, j) in c.edges() {
        has_incoming[j] = true;
    }
    let indices: Vec<usize> = (0..c.len()).filter(|&i| !has_incoming[i]).collect();
    let ground_sets = indices.iter().map(|&i| c.components[i].members.clone()).collect();
    MaximalFamily { indices, ground_sets }
}

/// Whether every ordered pair, including `(x, x)`, is joined by a path of
/// length at least one. A loop-free singleton problem is not strongly
/// connected.
pub fn is_strongly_connected(p: &DecisionProblem) -> bool {
    match p.n() {
        1 => p.dominates(0, 0),
        _ => strong_components(p).len() == 1,
    }
}
