//! Exact minimum dominating sets, the closed form for the domination number
//! of `S_n`, the helper-corner variants, and domination efficiency.
//!
//! The search is a branch and bound on 128-bit vertex masks, which covers every
//! level up to 5 (`|V_5| = 123`).

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Pow};

use crate::error::{GasketError, Result};
use crate::graph::{vertex_count, Adjacency, Corner, GasketGraph};

/// Largest level accepted by [`min_dominating_set`].
pub const MAX_SEARCH_LEVEL: u32 = 5;
/// Largest level accepted by [`gamma_k`].
pub const MAX_HELPER_LEVEL: u32 = 4;

/// Which vertices must be dominated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    All,
    /// Every vertex except the three corners.
    NonCorners,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominatingSet {
    pub members: Vec<usize>,
    pub helpers: Vec<Corner>,
    pub target: Target,
}

impl DominatingSet {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

type Mask = u128;

fn bit(v: usize) -> Mask {
    1 << v
}

fn closed_neighborhoods(g: &GasketGraph) -> Vec<Mask> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().fold(bit(v), |m, &w| m | bit(w)))
        .collect()
}

fn target_mask(g: &GasketGraph, target: Target) -> Mask {
    let all = if g.vertex_count() == 128 {
        Mask::MAX
    } else {
        bit(g.vertex_count()) - 1
    };
    match target {
        Target::All => all,
        Target::NonCorners => g.corners().iter().fold(all, |m, &c| m & !bit(c)),
    }
}

fn iter_bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(v)
    })
}

struct Search<'a> {
    nbhd: &'a [Mask],
    /// `covers[u]`: vertices whose closed neighborhood contains `u`.
    covers: &'a [Vec<usize>],
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search<'_> {
    /// Each undominated `u` needs some dominator `c` with `u` in `N[c]`. Giving
    /// `u` weight `1 / max_c |N[c] & undominated|` makes every dominator's
    /// weight at most 1, so the total weight bounds the remaining picks.
    /// Weights are scaled by 60 = lcm(1..=5).
    fn lower_bound(&self, undominated: Mask) -> usize {
        let mut scaled = 0usize;
        let mut widest = 1;
        for u in iter_bits(undominated) {
            let best_cover = self.covers[u]
                .iter()
                .map(|&c| (self.nbhd[c] & undominated).count_ones() as usize)
                .max()
                .unwrap_or(1);
            widest = widest.max(best_cover);
            scaled += 60 / best_cover;
        }
        let weighted = scaled.div_ceil(60);
        let simple = (undominated.count_ones() as usize).div_ceil(widest);
        weighted.max(simple)
    }

    fn run(&mut self, undominated: Mask) {
        if undominated == 0 {
            if self.current.len() < self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        if self.current.len() + self.lower_bound(undominated) >= self.best.len() {
            return;
        }
        // Branch on the lowest-index undominated vertex; one of its
        // dominators must be chosen. Larger gains first, ties by index.
        let v = undominated.trailing_zeros() as usize;
        let mut options: Vec<(u32, usize)> = self.covers[v]
            .iter()
            .map(|&c| ((self.nbhd[c] & undominated).count_ones(), c))
            .collect();
        options.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
        for (_, c) in options {
            self.current.push(c);
            self.run(undominated & !self.nbhd[c]);
            self.current.pop();
        }
    }
}

fn greedy(nbhd: &[Mask], mut undominated: Mask) -> Vec<usize> {
    let mut chosen = Vec::new();
    while undominated != 0 {
        let c = (0..nbhd.len())
            .max_by_key(|&c| ((nbhd[c] & undominated).count_ones(), std::cmp::Reverse(c)))
            .expect("nonempty graph");
        chosen.push(c);
        undominated &= !nbhd[c];
    }
    chosen
}

fn solve(g: &GasketGraph, target: Target, helpers: &[Corner]) -> Result<DominatingSet> {
    if g.vertex_count() > 128 {
        return Err(GasketError::SizeLimit {
            level: g.level(),
            max: MAX_SEARCH_LEVEL,
        });
    }
    let nbhd = closed_neighborhoods(g);
    let mut covers = vec![Vec::new(); nbhd.len()];
    for (c, &m) in nbhd.iter().enumerate() {
        for u in iter_bits(m) {
            covers[u].push(c);
        }
    }
    let mut undominated = target_mask(g, target);
    for &h in helpers {
        undominated &= !nbhd[g.corner(h)];
    }
    // The greedy cover is a valid incumbent; the search only replaces it with
    // strictly smaller sets.
    let mut search = Search {
        nbhd: &nbhd,
        covers: &covers,
        best: greedy(&nbhd, undominated),
        current: Vec::new(),
    };
    search.run(undominated);
    let mut members = search.best;
    members.sort_unstable();
    let mut helpers = helpers.to_vec();
    helpers.sort();
    helpers.dedup();
    let set = DominatingSet {
        members,
        helpers,
        target,
    };
    validate_domination(g, &set)?;
    Ok(set)
}

/// Minimum dominating set of the whole graph, by exact search.
pub fn min_dominating_set(g: &GasketGraph) -> Result<DominatingSet> {
    if g.level() > MAX_SEARCH_LEVEL {
        return Err(GasketError::SizeLimit {
            level: g.level(),
            max: MAX_SEARCH_LEVEL,
        });
    }
    solve(g, Target::All, &[])
}

/// Minimum set dominating every non-corner vertex when the `helpers` corners
/// also dominate their closed neighborhoods. Helpers do not count toward the
/// size; members may be any vertex, corners included.
pub fn helped_dominating_set(g: &GasketGraph, helpers: &[Corner]) -> Result<DominatingSet> {
    if g.level() > MAX_HELPER_LEVEL {
        return Err(GasketError::SizeLimit {
            level: g.level(),
            max: MAX_HELPER_LEVEL,
        });
    }
    solve(g, Target::NonCorners, helpers)
}

/// All helper sets of size `k`, in a fixed order.
pub fn helper_sets(k: usize) -> Vec<Vec<Corner>> {
    let all = Corner::ALL;
    match k {
        0 => vec![vec![]],
        1 => all.iter().map(|&c| vec![c]).collect(),
        2 => vec![
            vec![Corner::T, Corner::L],
            vec![Corner::T, Corner::R],
            vec![Corner::L, Corner::R],
        ],
        3 => vec![all.to_vec()],
        _ => vec![],
    }
}

/// `γ_n^k` for `k = |helpers|`. Every helper set of the same size is solved
/// and the results must agree.
pub fn gamma_k(g: &GasketGraph, helpers: &[Corner]) -> Result<usize> {
    let mut distinct = helpers.to_vec();
    distinct.sort();
    distinct.dedup();
    let k = distinct.len();
    let value = helped_dominating_set(g, &distinct)?.size();
    for set in helper_sets(k) {
        let other = helped_dominating_set(g, &set)?.size();
        if other != value {
            return Err(GasketError::Invariant(format!(
                "helper sets {distinct:?} and {set:?} give {value} and {other}"
            )));
        }
    }
    Ok(value)
}

/// Closed form of the domination number: 1, 2, then `3^(n-2)` from level 3 on.
pub fn gamma_closed_form(n: u32) -> BigUint {
    assert!(n >= 1, "levels start at 1");
    match n {
        1 => BigUint::one(),
        2 => BigUint::from(2u32),
        _ => Pow::pow(BigUint::from(3u32), n - 2),
    }
}

/// Domination number by the recurrence `γ_n = 3 γ_(n-1)` from `γ_3 = 3`.
pub fn gamma_recursive(n: u32) -> BigUint {
    if n <= 3 {
        return gamma_closed_form(n);
    }
    let mut gamma = BigUint::from(3u32);
    for _ in 4..=n {
        gamma *= 3u32;
    }
    gamma
}

/// `|V_n| / (5 γ_n)`: covered vertices over total closed-neighborhood capacity.
pub fn efficiency(n: u32) -> Result<BigRational> {
    if n < 3 {
        return Err(GasketError::Domain(format!(
            "efficiency is defined from level 3, got {n}"
        )));
    }
    let vertices = BigUint::from(vertex_count(n));
    let capacity = gamma_closed_form(n) * 5u32;
    Ok(BigRational::new(vertices.into(), capacity.into()))
}

/// Every target vertex is a member, a helper, or adjacent to one.
pub fn validate_domination(g: &GasketGraph, set: &DominatingSet) -> Result<()> {
    let n = g.vertex_count();
    let mut dominated = vec![false; n];
    let sources = set
        .members
        .iter()
        .copied()
        .chain(set.helpers.iter().map(|&h| g.corner(h)));
    for v in sources {
        if v >= n {
            return Err(GasketError::VertexOutOfRange { index: v, count: n });
        }
        dominated[v] = true;
        for &w in g.neighbors(v) {
            dominated[w] = true;
        }
    }
    let corners = g.corners();
    let missed = (0..n).find(|&v| {
        let wanted = match set.target {
            Target::All => true,
            Target::NonCorners => !corners.contains(&v),
        };
        wanted && !dominated[v]
    });
    match missed {
        Some(v) => Err(GasketError::InvalidCertificate(format!(
            "vertex {v} is not dominated"
        ))),
        None => Ok(()),
    }
}
