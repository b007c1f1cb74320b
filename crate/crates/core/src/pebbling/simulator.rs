//! Pebbling moves and exhaustive solvability search on small graphs.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{GasketError, Result};
use crate::graph::Adjacency;

/// Pebble counts indexed by vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PebbleConfiguration {
    counts: Vec<u32>,
}

impl PebbleConfiguration {
    pub fn new(counts: Vec<u32>) -> Self {
        PebbleConfiguration { counts }
    }

    pub fn empty(vertices: usize) -> Self {
        PebbleConfiguration::new(vec![0; vertices])
    }

    /// All `pebbles` on vertex `v`.
    pub fn stacked(vertices: usize, v: usize, pebbles: u32) -> Self {
        let mut c = PebbleConfiguration::empty(vertices);
        c.counts[v] = pebbles;
        c
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn get(&self, v: usize) -> u32 {
        self.counts[v]
    }

    pub fn add(&mut self, v: usize, pebbles: u32) {
        self.counts[v] += pebbles;
    }

    pub fn weight(&self) -> u64 {
        self.counts.iter().map(|&c| c as u64).sum()
    }

    pub fn covers_all(&self) -> bool {
        self.counts.iter().all(|&c| c > 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Move {
    pub from: usize,
    pub to: usize,
}

/// Remove two pebbles from `from` and add one to the adjacent `to`.
pub fn apply_move<G: Adjacency>(
    g: &G,
    c: &PebbleConfiguration,
    from: usize,
    to: usize,
) -> Result<PebbleConfiguration> {
    let n = g.vertex_count();
    if c.counts.len() != n {
        return Err(GasketError::Domain(format!(
            "configuration has {} entries, graph has {n} vertices",
            c.counts.len()
        )));
    }
    if from >= n || to >= n {
        return Err(GasketError::VertexOutOfRange {
            index: from.max(to),
            count: n,
        });
    }
    if !g.has_edge(from, to) {
        return Err(GasketError::IllegalMove {
            from,
            to,
            reason: "vertices are not adjacent",
        });
    }
    if c.counts[from] < 2 {
        return Err(GasketError::IllegalMove {
            from,
            to,
            reason: "fewer than two pebbles on the source",
        });
    }
    let mut next = c.clone();
    next.counts[from] -= 2;
    next.counts[to] += 1;
    Ok(next)
}

/// Apply `moves` in order.
pub fn replay<G: Adjacency>(
    g: &G,
    c: &PebbleConfiguration,
    moves: &[Move],
) -> Result<PebbleConfiguration> {
    moves
        .iter()
        .try_fold(c.clone(), |state, m| apply_move(g, &state, m.from, m.to))
}

/// Limits for the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest graph [`pebbling_number_search`] will enumerate.
    pub max_vertices: usize,
    /// Largest configuration weight any search accepts (at most 255).
    pub max_weight: u32,
    /// Largest number of memoized states per solver.
    pub max_states: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_vertices: 6,
            max_weight: 64,
            max_states: 20_000_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Goal {
    /// Put a pebble on this vertex.
    Reach(usize),
    /// Put a pebble on every vertex at once.
    Cover,
}

/// Memoized depth-first search over configurations. Every move lowers the
/// weight by one, so the state graph is acyclic and the search terminates.
/// The memo persists across queries on the same solver.
pub struct PebbleSolver<'g, G: Adjacency> {
    graph: &'g G,
    goal: Goal,
    budget: SearchBudget,
    memo: HashMap<Vec<u8>, bool>,
    /// For reachability: `2^(depth - d(v, target))`, the weight of one pebble
    /// on `v` in the potential `sum_v c(v) 2^-d(v, target)`, scaled by
    /// `2^depth`. Moves never increase that potential and the goal needs it
    /// to be at least 1.
    potential: Option<(Vec<u128>, u128)>,
}

impl<'g, G: Adjacency> PebbleSolver<'g, G> {
    pub fn new(graph: &'g G, goal: Goal, budget: SearchBudget) -> Result<Self> {
        if budget.max_weight > u8::MAX as u32 {
            return Err(GasketError::Domain("max_weight must be at most 255".into()));
        }
        let potential = match goal {
            Goal::Reach(t) => {
                if t >= graph.vertex_count() {
                    return Err(GasketError::VertexOutOfRange {
                        index: t,
                        count: graph.vertex_count(),
                    });
                }
                potential_weights(graph, t)
            }
            Goal::Cover => None,
        };
        Ok(PebbleSolver {
            graph,
            goal,
            budget,
            memo: HashMap::new(),
            potential,
        })
    }

    pub fn goal(&self) -> Goal {
        self.goal
    }

    pub fn states_explored(&self) -> usize {
        self.memo.len()
    }

    fn encode(&self, c: &PebbleConfiguration) -> Result<Vec<u8>> {
        let n = self.graph.vertex_count();
        if c.counts.len() != n {
            return Err(GasketError::Domain(format!(
                "configuration has {} entries, graph has {n} vertices",
                c.counts.len()
            )));
        }
        if c.weight() > self.budget.max_weight as u64 {
            return Err(GasketError::BudgetExceeded(format!(
                "weight {} exceeds the search limit {}",
                c.weight(),
                self.budget.max_weight
            )));
        }
        Ok(c.counts.iter().map(|&x| x as u8).collect())
    }

    fn goal_met(&self, state: &[u8]) -> bool {
        match self.goal {
            Goal::Reach(t) => state[t] > 0,
            Goal::Cover => state.iter().all(|&x| x > 0),
        }
    }

    fn hopeless(&self, state: &[u8]) -> bool {
        match self.goal {
            Goal::Cover => {
                let weight: usize = state.iter().map(|&x| x as usize).sum();
                let empty = state.iter().filter(|&&x| x == 0).count();
                weight < empty
            }
            Goal::Reach(_) => match &self.potential {
                Some((scale, needed)) => {
                    let total: u128 = state.iter().zip(scale).map(|(&x, &s)| x as u128 * s).sum();
                    total < *needed
                }
                None => false,
            },
        }
    }

    fn search(&mut self, state: &mut Vec<u8>) -> Result<bool> {
        if self.goal_met(state) {
            return Ok(true);
        }
        if self.hopeless(state) {
            return Ok(false);
        }
        if let Some(&known) = self.memo.get(state.as_slice()) {
            return Ok(known);
        }
        if self.memo.len() >= self.budget.max_states {
            return Err(GasketError::BudgetExceeded(format!(
                "more than {} configurations explored",
                self.budget.max_states
            )));
        }
        let graph = self.graph;
        let mut found = false;
        'outer: for v in 0..state.len() {
            if state[v] < 2 {
                continue;
            }
            for &w in graph.neighbors(v) {
                state[v] -= 2;
                state[w] += 1;
                let ok = self.search(state);
                state[v] += 2;
                state[w] -= 1;
                if ok? {
                    found = true;
                    break 'outer;
                }
            }
        }
        self.memo.insert(state.clone(), found);
        Ok(found)
    }

    pub fn is_solvable(&mut self, c: &PebbleConfiguration) -> Result<bool> {
        let mut state = self.encode(c)?;
        self.search(&mut state)
    }

    /// A move sequence reaching the goal, if one exists.
    pub fn solve(&mut self, c: &PebbleConfiguration) -> Result<Option<Vec<Move>>> {
        let mut state = self.encode(c)?;
        if !self.search(&mut state)? {
            return Ok(None);
        }
        let graph = self.graph;
        let mut moves = Vec::new();
        while !self.goal_met(&state) {
            let mut next_move = None;
            'pick: for v in 0..state.len() {
                if state[v] < 2 {
                    continue;
                }
                for &w in graph.neighbors(v) {
                    state[v] -= 2;
                    state[w] += 1;
                    let ok = self.search(&mut state)?;
                    if ok {
                        next_move = Some(Move { from: v, to: w });
                        break 'pick;
                    }
                    state[v] += 2;
                    state[w] -= 1;
                }
            }
            match next_move {
                Some(m) => moves.push(m),
                None => {
                    return Err(GasketError::Invariant(
                        "solvable state has no solvable successor".into(),
                    ))
                }
            }
        }
        Ok(Some(moves))
    }
}

fn potential_weights<G: Adjacency>(g: &G, target: usize) -> Option<(Vec<u128>, u128)> {
    let mut dist = vec![u32::MAX; g.vertex_count()];
    let mut queue = std::collections::VecDeque::from([target]);
    dist[target] = 0;
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == u32::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let depth = dist.iter().copied().filter(|&d| d != u32::MAX).max()?;
    // 255 pebbles times 2^depth must fit.
    if depth > 100 {
        return None;
    }
    let scale = dist
        .iter()
        .map(|&d| {
            if d == u32::MAX {
                0
            } else {
                1u128 << (depth - d)
            }
        })
        .collect();
    Some((scale, 1u128 << depth))
}

/// Whether some move sequence puts a pebble on `target`.
pub fn is_reachable<G: Adjacency>(
    g: &G,
    c: &PebbleConfiguration,
    target: usize,
    budget: SearchBudget,
) -> Result<bool> {
    PebbleSolver::new(g, Goal::Reach(target), budget)?.is_solvable(c)
}

pub fn reach_moves<G: Adjacency>(
    g: &G,
    c: &PebbleConfiguration,
    target: usize,
    budget: SearchBudget,
) -> Result<Option<Vec<Move>>> {
    PebbleSolver::new(g, Goal::Reach(target), budget)?.solve(c)
}

/// Whether some move sequence leaves a pebble on every vertex simultaneously.
pub fn is_cover_solvable<G: Adjacency>(
    g: &G,
    c: &PebbleConfiguration,
    budget: SearchBudget,
) -> Result<bool> {
    PebbleSolver::new(g, Goal::Cover, budget)?.is_solvable(c)
}

pub fn cover_moves<G: Adjacency>(
    g: &G,
    c: &PebbleConfiguration,
    budget: SearchBudget,
) -> Result<Option<Vec<Move>>> {
    PebbleSolver::new(g, Goal::Cover, budget)?.solve(c)
}

/// Every configuration of the given weight on `vertices` vertices, in reverse
/// lexicographic order starting from everything on vertex 0.
#[derive(Clone, Debug)]
pub struct Configurations {
    current: Option<Vec<u32>>,
}

pub fn configurations(vertices: usize, weight: u32) -> Configurations {
    let current = (vertices > 0).then(|| {
        let mut c = vec![0; vertices];
        c[0] = weight;
        c
    });
    Configurations { current }
}

impl Iterator for Configurations {
    type Item = PebbleConfiguration;

    fn next(&mut self) -> Option<Self::Item> {
        let out = self.current.clone()?;
        let c = self.current.as_mut().unwrap();
        let last = c.len() - 1;
        match (0..last).rev().find(|&i| c[i] > 0) {
            Some(i) => {
                c[i] -= 1;
                let tail = std::mem::take(&mut c[last]);
                c[i + 1] = tail + 1;
            }
            None => self.current = None,
        }
        Some(PebbleConfiguration::new(out))
    }
}

/// Smallest `t` such that every weight-`t` configuration can reach every
/// vertex, by exhaustive enumeration.
pub fn pebbling_number_search<G: Adjacency>(g: &G, budget: SearchBudget) -> Result<u32> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(GasketError::Domain("empty graph".into()));
    }
    if n > budget.max_vertices {
        return Err(GasketError::BudgetExceeded(format!(
            "{n} vertices exceeds the enumeration limit {}",
            budget.max_vertices
        )));
    }
    let mut solvers: Vec<_> = (0..n)
        .map(|t| PebbleSolver::new(g, Goal::Reach(t), budget))
        .collect::<Result<_>>()?;
    'weights: for t in 1..=budget.max_weight {
        for config in configurations(n, t) {
            for solver in &mut solvers {
                if !solver.is_solvable(&config)? {
                    continue 'weights;
                }
            }
        }
        return Ok(t);
    }
    Err(GasketError::BudgetExceeded(format!(
        "no weight up to {} pebbles every configuration",
        budget.max_weight
    )))
}
