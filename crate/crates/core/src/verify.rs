//! Property suites run by `gasket verify`. Each check is evaluated on the
//! supplied graph, which need not be a correct `S_n`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::coloring::{three_coloring, validate_coloring};
use crate::domination::{
    efficiency, gamma_closed_form, gamma_k, gamma_recursive, helper_sets, min_dominating_set,
};
use crate::error::{GasketError, Result};
use crate::graph::{
    edge_count, generate, side_length, vertex_count, Adjacency, Corner, GasketGraph, SmallGraph,
};
use crate::hamilton::{
    cycle_length_range, cycle_of_length, ham_cycle, ham_path, ham_path_avoid, path_length_range,
    path_of_length,
};
use crate::pebbling::distance::{has_triangle_symmetry, stacking_value_from_census, Bfs};
use crate::pebbling::{
    beta_census_checks, configurations, lambda_recursive, pebbling_number_search, replay, Goal,
    PebbleConfiguration, PebbleSolver, SearchBudget,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Core,
    Cycles,
    Domination,
    Pebbling,
}

impl FromStr for Suite {
    type Err = GasketError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "core" => Ok(Suite::Core),
            "cycles" => Ok(Suite::Cycles),
            "domination" => Ok(Suite::Domination),
            "pebbling" => Ok(Suite::Pebbling),
            other => Err(GasketError::Parse(format!("unknown suite {other:?}"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::All => "all",
            Suite::Core => "core",
            Suite::Cycles => "cycles",
            Suite::Domination => "domination",
            Suite::Pebbling => "pebbling",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub outcome: Outcome,
    pub detail: String,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.outcome != Outcome::Fail
    }
}

struct Recorder {
    suite: Suite,
    results: Vec<CheckResult>,
}

impl Recorder {
    fn check(&mut self, name: impl Into<String>, outcome: Result<String>) {
        let (outcome, detail) = match outcome {
            Ok(detail) => (Outcome::Pass, detail),
            Err(e) => (Outcome::Fail, e.to_string()),
        };
        self.results.push(CheckResult {
            suite: self.suite,
            name: name.into(),
            outcome,
            detail,
        });
    }

    fn skip(&mut self, name: impl Into<String>, why: impl Into<String>) {
        self.results.push(CheckResult {
            suite: self.suite,
            name: name.into(),
            outcome: Outcome::Skip,
            detail: why.into(),
        });
    }
}

fn fail<T>(msg: String) -> Result<T> {
    Err(GasketError::Invariant(msg))
}

fn expect_eq<T: PartialEq + fmt::Display>(what: &str, got: T, want: T) -> Result<String> {
    if got == want {
        Ok(format!("{what} = {got}"))
    } else {
        fail(format!("{what} = {got}, expected {want}"))
    }
}

/// Run one suite (or all of them) against `g`.
pub fn run_suite(g: &GasketGraph, suite: Suite) -> Vec<CheckResult> {
    match suite {
        Suite::All => [
            Suite::Core,
            Suite::Cycles,
            Suite::Domination,
            Suite::Pebbling,
        ]
        .into_iter()
        .flat_map(|s| run_suite(g, s))
        .collect(),
        Suite::Core => core_suite(g),
        Suite::Cycles => cycles_suite(g),
        Suite::Domination => domination_suite(g),
        Suite::Pebbling => pebbling_suite(g),
    }
}

fn core_suite(g: &GasketGraph) -> Vec<CheckResult> {
    let mut r = Recorder {
        suite: Suite::Core,
        results: Vec::new(),
    };
    let n = g.level();
    r.check(
        "vertex count",
        expect_eq("|V|", g.vertex_count() as u128, vertex_count(n)),
    );
    r.check(
        "edge count",
        expect_eq("|E|", g.edge_count() as u128, edge_count(n)),
    );
    r.check("degree census", {
        let corners = g.corners();
        match (0..g.vertex_count())
            .find(|&v| g.degree(v) != if corners.contains(&v) { 2 } else { 4 })
        {
            Some(v) => fail(format!(
                "vertex {v} at {} has degree {}",
                g.coord(v),
                g.degree(v)
            )),
            None => Ok(format!("{:?}", g.degree_census())),
        }
    });
    r.check("edge directions", {
        let bad = g.edges().iter().find(|&&(u, v)| {
            let (p, q) = (g.coord(u), g.coord(v));
            let da = p.a as i64 - q.a as i64;
            let db = p.b as i64 - q.b as i64;
            !matches!((da.abs(), db.abs()), (1, 0) | (0, 1)) && !(da == -db && da.abs() == 1)
        });
        match bad {
            Some(&(u, v)) => fail(format!(
                "edge {} - {} is not a unit step",
                g.coord(u),
                g.coord(v)
            )),
            None => Ok("all unit steps".into()),
        }
    });
    r.check(
        "connected",
        if g.is_connected() {
            Ok("one component".into())
        } else {
            fail("graph is disconnected".into())
        },
    );
    r.check("proper 3-coloring", {
        let coloring = three_coloring(g);
        validate_coloring(g, &coloring).map(|_| format!("class sizes {:?}", coloring.class_sizes()))
    });
    if n >= 2 {
        r.check("sub-copy decomposition", subcopy_partition(g));
    } else {
        r.skip("sub-copy decomposition", "level 1 has no sub-copies");
    }
    r.results
}

fn subcopy_partition(g: &GasketGraph) -> Result<String> {
    let mut total_edges = 0;
    let mut total_vertices = 0;
    let mut owner = vec![0u8; g.edge_count()];
    let smaller = crate::graph::generate_with_max(g.level() - 1, g.level())?;
    for c in Corner::ALL {
        let (copy, offset) = g.subcopy(c)?;
        if copy != smaller {
            return fail(format!("sub-copy {c} differs from S{}", g.level() - 1));
        }
        total_edges += copy.edge_count();
        total_vertices += copy.vertex_count();
        for &(u, v) in copy.edges() {
            let lift = |x: usize| {
                let p = copy.coord(x);
                g.require_index(crate::graph::Coord::new(p.a + offset.a, p.b + offset.b))
            };
            let (a, b) = (lift(u)?, lift(v)?);
            let e = g
                .edges()
                .binary_search(&(a.min(b), a.max(b)))
                .map_err(|_| GasketError::Invariant("lifted edge missing".into()))?;
            owner[e] += 1;
        }
    }
    if owner.iter().any(|&k| k != 1) {
        return fail("some edge lies in zero or several sub-copies".into());
    }
    if total_vertices != g.vertex_count() + 3 {
        return fail(format!(
            "sub-copies hold {total_vertices} vertices, expected |V| + 3 = {}",
            g.vertex_count() + 3
        ));
    }
    Ok(format!("3 x {} edges", total_edges / 3))
}

const CORNER_PAIRS: [(Corner, Corner); 6] = [
    (Corner::T, Corner::L),
    (Corner::T, Corner::R),
    (Corner::L, Corner::T),
    (Corner::L, Corner::R),
    (Corner::R, Corner::T),
    (Corner::R, Corner::L),
];

/// Lengths to try in `[lo, hi]`: all of them when `exhaustive`, otherwise the
/// ends and about 64 evenly spaced values.
fn sample_lengths(lo: usize, hi: usize, exhaustive: bool) -> Vec<usize> {
    if exhaustive || hi - lo <= 64 {
        return (lo..=hi).collect();
    }
    let step = (hi - lo) / 64;
    let mut out: Vec<usize> = (lo..=hi).step_by(step).collect();
    if out.last() != Some(&hi) {
        out.push(hi);
    }
    out
}

fn cycles_suite(g: &GasketGraph) -> Vec<CheckResult> {
    let mut r = Recorder {
        suite: Suite::Cycles,
        results: Vec::new(),
    };
    let n = g.level();
    for (from, to) in CORNER_PAIRS {
        r.check(
            format!("hamiltonian path {from}->{to}"),
            ham_path(g, from, to).map(|p| format!("{} vertices", p.vertices.len())),
        );
    }
    for (from, to) in CORNER_PAIRS {
        r.check(
            format!("corner-avoiding path {from}->{to}"),
            ham_path_avoid(g, from, to).map(|p| format!("{} vertices", p.vertices.len())),
        );
    }
    r.check(
        "hamiltonian cycle",
        ham_cycle(g).map(|c| format!("length {}", c.len())),
    );
    let (lo, hi) = path_length_range(n);
    let lengths = sample_lengths(lo, hi, n <= 4);
    for (from, to) in CORNER_PAIRS {
        r.check(format!("path lengths {from}->{to}"), {
            lengths
                .iter()
                .try_for_each(|&len| path_of_length(g, from, to, len).map(|_| ()))
                .map(|_| format!("{} lengths in [{lo}, {hi}]", lengths.len()))
        });
    }
    let (lo, hi) = cycle_length_range(n);
    let lengths = sample_lengths(lo, hi, n <= 5);
    r.check("cycle lengths", {
        lengths
            .iter()
            .try_for_each(|&len| cycle_of_length(g, len).map(|_| ()))
            .map(|_| format!("{} lengths in [{lo}, {hi}]", lengths.len()))
    });
    r.results
}

fn domination_suite(g: &GasketGraph) -> Vec<CheckResult> {
    let mut r = Recorder {
        suite: Suite::Domination,
        results: Vec::new(),
    };
    let n = g.level();
    if n <= crate::domination::MAX_SEARCH_LEVEL {
        r.check(
            "exact domination number",
            min_dominating_set(g).and_then(|set| {
                expect_eq("gamma", BigUint::from(set.size()), gamma_closed_form(n))
            }),
        );
    } else {
        r.skip("exact domination number", "level above search ceiling");
    }
    if n <= crate::domination::MAX_HELPER_LEVEL {
        let values: Result<Vec<usize>> = (0..=3).map(|k| gamma_k(g, &helper_sets(k)[0])).collect();
        match values {
            Ok(v) => {
                r.check("helper-set symmetry", Ok(format!("gamma^0..3 = {v:?}")));
                r.check(
                    "helper monotonicity",
                    if v[0] >= v[1] && v[2] >= v[3] {
                        Ok("gamma^0 >= gamma^1, gamma^2 >= gamma^3".into())
                    } else {
                        fail(format!("gamma^k = {v:?}"))
                    },
                );
                if n == 4 {
                    let gamma = gamma_closed_form(4).to_usize().unwrap();
                    r.check(
                        "helper lower bounds",
                        if v[0] == gamma && v[1] == gamma && v[2] + 1 >= gamma && v[3] + 1 >= gamma
                        {
                            Ok(format!("gamma^k = {v:?} against gamma = {gamma}"))
                        } else {
                            fail(format!("gamma^k = {v:?} against gamma = {gamma}"))
                        },
                    );
                }
            }
            Err(e) => r.check("helper-set symmetry", Err(e)),
        }
    } else {
        r.skip("helper-set symmetry", "level above search ceiling");
    }
    r.check("closed form matches recursion", {
        (1..=12)
            .find(|&m| gamma_closed_form(m) != gamma_recursive(m))
            .map_or(Ok("levels 1..=12".into()), |m| fail(format!("level {m}")))
    });
    r.check("efficiency", efficiency_checks());
    r.results
}

fn efficiency_checks() -> Result<String> {
    let e3 = efficiency(3)?;
    let e4 = efficiency(4)?;
    let e9 = efficiency(9)?.to_f64().unwrap_or(f64::NAN);
    let decreasing = (3..12).all(|m| efficiency(m).ok() > efficiency(m + 1).ok());
    if e3 == BigRational::from_integer(1.into())
        && e4 == BigRational::new(14.into(), 15.into())
        && (e9 - 0.9).abs() < 1e-3
        && decreasing
    {
        Ok(format!("e3 = {e3}, e4 = {e4}, e9 = {e9:.6}"))
    } else {
        fail(format!("e3 = {e3}, e4 = {e4}, e9 = {e9}"))
    }
}

fn pebbling_suite(g: &GasketGraph) -> Vec<CheckResult> {
    let mut r = Recorder {
        suite: Suite::Pebbling,
        results: Vec::new(),
    };
    let n = g.level();
    // One BFS per source covers the diameter, corner maximality and lambda.
    let exhaustive = n <= 9 || !has_triangle_symmetry(g);
    let sources: Vec<usize> = if exhaustive {
        (0..g.vertex_count()).collect()
    } else {
        let side = g.side();
        (0..g.vertex_count())
            .filter(|&v| {
                let p = g.coord(v);
                p.a <= p.b && p.b <= side - p.a - p.b
            })
            .collect()
    };
    let mut bfs = Bfs::new(g.vertex_count());
    let mut diameter = 0u32;
    let mut best = BigUint::default();
    let mut disconnected = false;
    for &v in &sources {
        match bfs.census(g, v) {
            Some(beta) => {
                diameter = diameter.max(beta.len() as u32 - 1);
                let st = stacking_value_from_census(&beta);
                if st > best {
                    best = st;
                }
            }
            None => {
                disconnected = true;
                break;
            }
        }
    }
    let scope = if exhaustive {
        "all sources"
    } else {
        "orbit representatives"
    };
    if disconnected {
        let e = || fail::<String>("graph is disconnected".into());
        r.check("diameter", e());
        r.check("corner maximizes ST", e());
        r.check("lambda recursion equals max ST", e());
    } else {
        r.check(
            "diameter",
            expect_eq("diam", diameter, side_length(n)).map(|d| format!("{d} ({scope})")),
        );
        r.check("corner maximizes ST", {
            let corner_st = bfs
                .census(g, g.corner(Corner::L))
                .map(|beta| stacking_value_from_census(&beta))
                .unwrap_or_default();
            let others_ok = Corner::ALL.iter().all(|&c| {
                bfs.census(g, g.corner(c))
                    .map(|beta| stacking_value_from_census(&beta))
                    == Some(corner_st.clone())
            });
            if corner_st == best && others_ok {
                Ok(format!("ST(corner) = max over {scope}"))
            } else {
                fail(format!("ST(corner) = {corner_st}, max = {best}"))
            }
        });
        r.check(
            "lambda recursion equals max ST",
            expect_eq("lambda", best.clone(), lambda_recursive(n)),
        );
    }
    if n >= 2 {
        r.check("census identities", {
            Corner::ALL
                .iter()
                .try_fold(0, |acc, &c| {
                    let report = beta_census_checks(g, c)?;
                    if report.passed() {
                        Ok(acc + report.checked)
                    } else {
                        fail(report.violations.join("; "))
                    }
                })
                .map(|k| format!("{k} identities over three corners"))
        });
    } else {
        r.skip("census identities", "level 1");
    }
    r.check("simulator oracles", simulator_oracles());
    r.check("simulator: stacking theorem on S2", stacking_on_level_two());
    r.results
}

fn simulator_oracles() -> Result<String> {
    let budget = SearchBudget::default();
    let k3 = pebbling_number_search(&SmallGraph::complete(3), budget)?;
    let p3 = pebbling_number_search(&SmallGraph::path(3), budget)?;
    if (k3, p3) == (3, 4) {
        Ok(format!("pi(K3) = {k3}, pi(P3) = {p3}"))
    } else {
        fail(format!("pi(K3) = {k3}, pi(P3) = {p3}"))
    }
}

/// Every weight-17 configuration on `S_2` is cover-solvable and the 16-pebble
/// corner stack is not. Also replays one witness per configuration.
pub fn stacking_on_level_two() -> Result<String> {
    let g = generate(2)?;
    let mut solver = PebbleSolver::new(&g, Goal::Cover, SearchBudget::default())?;
    let mut checked = 0;
    for config in configurations(6, 17) {
        let moves = solver.solve(&config)?.ok_or_else(|| {
            GasketError::Invariant(format!("{:?} is not cover-solvable", config.counts()))
        })?;
        if !replay(&g, &config, &moves)?.covers_all() {
            return fail(format!("witness for {:?} does not cover", config.counts()));
        }
        checked += 1;
    }
    let short = PebbleConfiguration::stacked(6, g.corner(Corner::L), 16);
    if solver.is_solvable(&short)? {
        return fail("16 pebbles on a corner cover S2".into());
    }
    Ok(format!(
        "{checked} configurations of weight 17 solved; corner stack of 16 fails"
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_levels_pass_everything() {
        for n in 1..=3 {
            let g = generate(n).unwrap();
            let results = run_suite(&g, Suite::All);
            for res in &results {
                assert!(
                    res.passed(),
                    "level {n}: {} failed: {}",
                    res.name,
                    res.detail
                );
            }
        }
    }

    #[test]
    fn corrupted_graph_fails_core() {
        let g = generate(3).unwrap();
        let mut doc = crate::io::GraphDocument::from(&g);
        doc.edges.pop();
        doc.edge_count -= 1;
        let broken = GasketGraph::try_from(doc).unwrap();
        let results = run_suite(&broken, Suite::Core);
        assert!(results.iter().any(|r| !r.passed()));
        let results = run_suite(&broken, Suite::Cycles);
        assert!(results.iter().any(|r| !r.passed()));
    }

    #[test]
    fn suite_names_parse() {
        for s in ["all", "core", "cycles", "domination", "pebbling"] {
            assert_eq!(s.parse::<Suite>().unwrap().to_string(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
