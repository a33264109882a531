//! Seeded randomized property suites over every module.
//!
//! Each suite draws from its own ChaCha stream (seed plus the suite's fixed
//! index), so results do not depend on which other suites run.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::canon::{canonical_form, is_isomorphic};
use crate::constructors::{make_u_ng, make_ubar_ng, star_graph};
use crate::decompose::decompose_unicyclic;
use crate::enumerate::unicyclic_graphs;
use crate::graph::{edge, Edge, Graph};
use crate::spectra::{
    eigen_symmetric, eigenvalues_symmetric, laplacian, laplacian_spectral_radius, perron_vector,
    rayleigh_b, signless_spectral_radius, PerronVector, DEFAULT_TOL,
};
use crate::theory::{
    build_ordering, check_f_properties, find_pair, path_recursion_residual, ubar_odd_clauses,
    ung_even_clauses, witness_vector, ClauseStatus, EigvecReport, RATIO_THRESHOLD,
};
use crate::transforms::{chain_paths, flatten_trees, graft_edge, guo_pair, open_and_chain, open_cycle, GraftSite};

/// Largest order drawn by the randomized suites.
pub const MAX_ORDER: usize = 14;
/// Randomized suites run at least this many instances.
pub const MIN_INSTANCES: usize = 100;

const EQ_TOL: f64 = 1e-9;
const STRICT: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    All,
    Graph,
    Spectra,
    Transforms,
    Enumerate,
    Theory,
}

impl Scope {
    pub fn includes(self, module: Scope) -> bool {
        self == Scope::All || self == module
    }

    pub fn name(self) -> &'static str {
        match self {
            Scope::All => "all",
            Scope::Graph => "graph",
            Scope::Spectra => "spectra",
            Scope::Transforms => "transforms",
            Scope::Enumerate => "enumerate",
            Scope::Theory => "theory",
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "all" => Scope::All,
            "graph" | "graph-core" => Scope::Graph,
            "spectra" => Scope::Spectra,
            "transforms" => Scope::Transforms,
            "enumerate" => Scope::Enumerate,
            "theory" => Scope::Theory,
            other => return Err(format!("unknown scope {other:?}")),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub scope: Scope,
    pub instances: usize,
    pub failures: usize,
    /// What `extreme` measures.
    pub measure: &'static str,
    pub extreme: Option<f64>,
    pub first_failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.instances > 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyReport {
    pub seed: u64,
    pub scope: Scope,
    pub suites: Vec<SuiteResult>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteResult> {
        self.suites.iter().find(|s| s.name == name)
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["suite", "scope", "instances", "failures", "measure", "extreme", "status"])
            .expect("in-memory write");
        for s in &self.suites {
            w.write_record([
                s.name.to_string(),
                s.scope.to_string(),
                s.instances.to_string(),
                s.failures.to_string(),
                s.measure.to_string(),
                s.extreme.map(|v| format!("{v:.3e}")).unwrap_or_default(),
                if s.passed() { "pass" } else { "fail" }.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ASCII output")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }
}

/// Running counts for one suite. `extreme` keeps the largest value when
/// `keep_max`, otherwise the smallest.
struct Tally {
    instances: usize,
    failures: usize,
    extreme: Option<f64>,
    keep_max: bool,
    first_failure: Option<String>,
}

impl Tally {
    fn max() -> Self {
        Tally { instances: 0, failures: 0, extreme: None, keep_max: true, first_failure: None }
    }

    fn min() -> Self {
        Tally { keep_max: false, ..Tally::max() }
    }

    fn observe(&mut self, value: f64) {
        let v = match self.extreme {
            None => value,
            Some(e) if self.keep_max => e.max(value),
            Some(e) => e.min(value),
        };
        self.extreme = Some(v);
    }

    fn fail(&mut self, detail: impl FnOnce() -> String) {
        self.failures += 1;
        if self.first_failure.is_none() {
            self.first_failure = Some(detail());
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.fail(detail);
        }
    }

    /// Unwraps a library result, counting an error as a failed instance.
    fn attempt<T, E: fmt::Display>(&mut self, r: Result<T, E>, context: impl Fn() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.instances += 1;
                self.fail(|| format!("{}: {e}", context()));
                None
            }
        }
    }
}

fn lambda(g: &Graph) -> Result<f64, String> {
    laplacian_spectral_radius(g).map_err(|e| e.to_string())
}

fn mu(g: &Graph) -> Result<f64, String> {
    signless_spectral_radius(g).map_err(|e| e.to_string())
}

fn shuffled(rng: &mut ChaCha8Rng, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = g.vertices().collect();
    perm.shuffle(rng);
    g.relabel(&perm).expect("a shuffle is a permutation")
}

fn tree_edges(rng: &mut ChaCha8Rng, n: usize, offset: usize) -> Vec<Edge> {
    (2..=n).map(|v| (rng.gen_range(1..v) + offset, v + offset)).collect()
}

fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let g = Graph::new(n, tree_edges(rng, n, 0)).expect("valid tree");
    shuffled(rng, &g)
}

/// Cycle `1..=g` with the remaining vertices hung one by one at random
/// earlier vertices, then shuffled.
fn random_unicyclic(rng: &mut ChaCha8Rng, n: usize, g: usize) -> Graph {
    let mut edges: Vec<Edge> = (1..=g).map(|i| (i, i % g + 1)).collect();
    edges.extend((g + 1..=n).map(|v| (rng.gen_range(1..v), v)));
    let graph = Graph::new(n, edges).expect("valid unicyclic graph");
    shuffled(rng, &graph)
}

fn add_random_edges(rng: &mut ChaCha8Rng, g: &Graph, extra: usize) -> Graph {
    let n = g.order();
    let missing: Vec<Edge> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    let chosen: Vec<Edge> = missing.choose_multiple(rng, extra.min(missing.len())).copied().collect();
    g.edit(&[], &chosen).expect("chosen pairs are non-edges")
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let base = if n >= 3 && rng.gen_bool(0.25) {
        star_graph(n).expect("n >= 1")
    } else {
        random_tree(rng, n)
    };
    let extra = rng.gen_range(0..=n);
    let graph = add_random_edges(rng, &base, extra);
    shuffled(rng, &graph)
}

/// A connected bipartite graph: a tree or an even-girth unicyclic graph.
fn random_bipartite(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    if n >= 4 && rng.gen_bool(0.5) {
        let g = 2 * rng.gen_range(2..=n / 2);
        random_unicyclic(rng, n, g)
    } else {
        random_tree(rng, n)
    }
}

/// Base graph for the attachment surgeries: bipartite half of the time.
fn random_base(rng: &mut ChaCha8Rng, n: usize, bipartite: bool) -> Graph {
    if bipartite {
        random_bipartite(rng, n)
    } else {
        random_connected(rng, n)
    }
}

fn perron_in_original_labels(p: &PerronVector, perm: &[usize]) -> PerronVector {
    PerronVector {
        components: perm.iter().map(|&w| p.x(w)).collect(),
        ..p.clone()
    }
}

fn strict_margin(report: &EigvecReport) -> Option<f64> {
    report
        .clauses
        .iter()
        .filter(|c| c.clause != "i" && c.status != ClauseStatus::NotApplicable)
        .filter_map(|c| c.measured)
        .reduce(f64::min)
}

// ---------------------------------------------------------------- graph

fn decomposition_roundtrip(rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::max();
    for _ in 0..2 * MIN_INSTANCES {
        let n = rng.gen_range(3..=MAX_ORDER);
        let g = rng.gen_range(3..=n);
        let graph = random_unicyclic(rng, n, g);
        let Some(d) = t.attempt(decompose_unicyclic(&graph), || format!("{graph:?}")) else { continue };
        t.instances += 1;
        let mut rebuilt: Vec<Edge> = d.cycle_edges();
        for &c in d.cycle() {
            let tree = d.tree_vertices(c).expect("cycle vertex");
            let members: Vec<usize> = std::iter::once(c).chain(tree.iter().copied()).collect();
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    if graph.has_edge(u, v) {
                        rebuilt.push(edge(u, v));
                    }
                }
            }
        }
        rebuilt.sort_unstable();
        let sum: usize = d.attach_sizes().iter().sum();
        t.observe((graph.size() as f64 - graph.order() as f64).abs());
        t.check(
            graph.size() == n && d.girth() == g && sum == n - g && rebuilt.iter().eq(graph.edges().collect::<Vec<_>>().iter()),
            || format!("round trip failed on {graph:?}"),
        );
    }
    t
}

fn u_girth(_: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::max();
    for n in 4..=MAX_ORDER {
        for g in 3..n {
            let Some(u) = t.attempt(make_u_ng(n, g), || format!("U({n},{g})")) else { continue };
            t.instances += 1;
            t.check(u.girth() == Some(g) && u.is_unicyclic(), || format!("U({n},{g}) girth {:?}", u.girth()));
        }
    }
    t
}

fn canonical_relabel(rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::max();
    for _ in 0..MIN_INSTANCES {
        let n = rng.gen_range(3..=MAX_ORDER);
        let graph = if rng.gen_bool(0.5) {
            let g = rng.gen_range(3..=n);
            random_unicyclic(rng, n, g)
        } else {
            random_connected(rng, n)
        };
        t.instances += 1;
        let form = canonical_form(&graph);
        let mut bad = 0;
        for _ in 0..50 {
            if canonical_form(&shuffled(rng, &graph)) != form {
                bad += 1;
            }
        }
        t.observe(bad as f64);
        t.check(bad == 0, || format!("{bad} relabelings changed the form of {graph:?}"));
    }
    t
}

fn opposite_edge(rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::max();
    for _ in 0..MIN_INSTANCES {
        let n = rng.gen_range(4..=MAX_ORDER);
        let g = 2 * rng.gen_range(1..=(n - 1) / 2) + 1;
        let graph = random_unicyclic(rng, n, g);
        let Some(d) = t.attempt(decompose_unicyclic(&graph), || format!("{graph:?}")) else { continue };
        t.instances += 1;
        for &j in d.cycle() {
            let (a, b) = d.opposite_edge(j).expect("odd girth");
            let ok = d.cycle_distance(j, a) == Ok((g - 1) / 2)
                && d.cycle_distance(j, b) == Ok((g - 1) / 2)
                && graph.has_edge(a, b);
            t.check(ok, || format!("opposite edge of {j} in {graph:?} is {a}-{b}"));
        }
    }
    t
}

// -------------------------------------------------------------- spectra

fn bipartite_equality(rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::max();
    for _ in 0..2 * MIN_INSTANCES {
        let n = rng.gen_range(2..=MAX_ORDER);
        let graph = random_bipartite(rng, n);
        let Some((l, m)) = t.attempt(lambda(&graph).and_then(|l| Ok((l, mu(&graph)?))), || format!("{graph:?}")) else {
            continue;
        };
        t.instances += 1;
        t.observe((l - m).abs());
        t.check((l - m).abs() <= EQ_TOL, || format!("lambda {l} vs mu {m} on {graph:?}"));
    }
    t
}

fn odd_girth_gap(rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::min();
    for _ in 0..MIN_INSTANCES {
        let n = rng.gen_range(3..=MAX_ORDER);
        let g = 2 * rng.gen_range(1..=(n - 1) / 2) + 1;
        let graph = random_unicyclic(rng, n, g);
        let Some((l, m)) = t.attempt(lambda(&graph).and_then(|l| Ok((l, mu(&graph)?))), || format!("{graph:?}")) else {
            continue;
        };
        t.instances += 1;
        t.observe(m - l);
        t.check(m - l > STRICT, || format!("mu {m} not above lambda {l} on {graph:?}"));
    }
    t
}

fn max_degree_bound(rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::min();
    for _ in 0..2 * MIN_INSTANCES {
        let n = rng.gen_range(2..=MAX_ORDER);
        let graph = random_connected(rng, n);
        let Some(l) = t.attempt(lambda(&graph), || format!("{graph:?}")) else { continue };
        t.instances += 1;
        let delta = graph.max_degree() as f64;
        let gap = l - (delta + 1.0);
        t.observe(gap);
        let equal = gap.abs() <= 1e-6;
        t.check(
            gap >= -EQ_TOL && equal == (graph.max_degree() == n - 1),
            || format!("lambda {l}, max degree {delta}, n {n}"),
        );
    }
    t
}

fn edge_addition(rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::min();
    for _ in 0..2 * MIN_INSTANCES {
        let n = rng.gen_range(3..=MAX_ORDER);
        let graph = random_connected(rng, n);
        if graph.size() == n * (n - 1) / 2 {
            continue;
        }
        let bigger = add_random_edges(rng, &graph, 1);
        let Some((a, b)) = t.attempt(lambda(&graph).and_then(|a| Ok((a, lambda(&bigger)?))), || format!("{graph:?}")) else {
            continue;
        };
        t.instances += 1;
        t.observe(b - a);
        t.check(b >= a - EQ_TOL, || format!("adding an edge dropped lambda {a} -> {b}"));
    }
    t
}

fn eigenpair_residual(rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::max();
    for _ in 0..MIN_INSTANCES {
        let n = rng.gen_range(2..=16);
        let graph = random_connected(rng, n);
        let l = laplacian(&graph);
        let Some(dec) = t.attempt(eigen_symmetric(&l, DEFAULT_TOL), || format!("{graph:?}")) else { continue };
        t.instances += 1;
        let mut worst = dec.spectrum.smallest().abs();
        for (value, vector) in dec.spectrum.eigenvalues.iter().zip(&dec.vectors) {
            let lv = l.mul_vec(vector);
            let r = lv.iter().zip(vector).map(|(a, b)| (a - value * b).powi(2)).sum::<f64>().sqrt();
            worst = worst.max(r);
        }
        t.observe(worst);
        t.check(worst <= EQ_TOL, || format!("residual {worst} on {graph:?}"));
    }
    t
}

fn rayleigh_bound(rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::min();
    for _ in 0..MIN_INSTANCES {
        let n = rng.gen_range(2..=MAX_ORDER);
        let graph = random_connected(rng, n);
        let Some(m) = t.attempt(mu(&graph), || format!("{graph:?}")) else { continue };
        t.instances += 1;
        for _ in 0..100 {
            let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let Ok(r) = rayleigh_b(&graph, &x) else { continue };
            t.observe(m - r);
            t.check(r <= m + EQ_TOL, || format!("quotient {r} above mu {m}"));
        }
    }
    t
}

fn relabel_spectrum(rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::max();
    for _ in 0..MIN_INSTANCES {
        let n = rng.gen_range(2..=16);
        let graph = random_connected(rng, n);
        let other = shuffled(rng, &graph);
        let spectra = eigenvalues_symmetric(&laplacian(&graph), DEFAULT_TOL)
            .and_then(|a| Ok((a, eigenvalues_symmetric(&laplacian(&other), DEFAULT_TOL)?)));
        let Some((a, b)) = t.attempt(spectra, || format!("{graph:?}")) else { continue };
        t.instances += 1;
        let dev = a
            .eigenvalues
            .iter()
            .zip(&b.eigenvalues)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        t.observe(dev);
        t.check(dev <= EQ_TOL, || format!("relabeled spectra differ by {dev}"));
    }
    t
}

// ----------------------------------------------------------- transforms

fn graft_monotone(rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::min();
    while t.instances < 2 * MIN_INSTANCES {
        let n0 = rng.gen_range(2..=8);
        let bipartite = rng.gen_bool(0.5);
        let base = random_base(rng, n0, bipartite);
        let room = MAX_ORDER - n0;
        let k = rng.gen_range(1..=room / 2);
        let l = rng.gen_range(k..=room - k);
        let v = rng.gen_range(1..=n0);
        let p: Vec<usize> = std::iter::once(v).chain(n0 + 1..=n0 + k).collect();
        let q: Vec<usize> = std::iter::once(v).chain(n0 + k + 1..=n0 + k + l).collect();
        let mut attach: Vec<Edge> = p.windows(2).map(|w| (w[0], w[1])).collect();
        attach.extend(q.windows(2).map(|w| (w[0], w[1])));
        let g = base.with_extra_vertices(k + l, &attach).expect("fresh path vertices");
        let site = GraftSite::new(p.clone(), q.clone());
        let Some(h) = t.attempt(graft_edge(&g, &site), || format!("{g:?} at {v}")) else { continue };
        let Some((a, b)) = t.attempt(lambda(&g).and_then(|a| Ok((a, lambda(&h)?))), || format!("{g:?}")) else {
            continue;
        };
        t.instances += 1;
        t.observe(a - b);
        let shape = h.order() == g.order() && h.size() == g.size() && h.has_edge(q[l], p[k]) && !h.has_edge(p[k - 1], p[k]);
        t.check(shape, || format!("graft changed the wrong edges on {g:?}"));
        t.check(b <= a + EQ_TOL, || format!("graft raised lambda {a} -> {b} on {g:?}"));
        if g.is_bipartite() {
            t.check(a - b > STRICT, || format!("bipartite graft not strict: {a} -> {b} on {g:?}"));
        }
    }
    t
}

fn guo_equality(rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::max();
    while t.instances < 2 * MIN_INSTANCES {
        let n0 = rng.gen_range(2..=8);
        let bipartite = rng.gen_bool(0.5);
        let base = random_base(rng, n0, bipartite);
        let s = rng.gen_range(2..=4);
        let kmax = (MAX_ORDER - n0) / s;
        if kmax == 0 {
            continue;
        }
        let k = rng.gen_range(1..=kmax);
        let pairs: Vec<(usize, usize)> = (1..=s).flat_map(|a| (a + 1..=s).map(move |b| (a, b))).collect();
        let count = rng.gen_range(1..=pairs.len());
        let tips: Vec<(usize, usize)> = pairs.choose_multiple(rng, count).copied().collect();
        let v = rng.gen_range(1..=n0);
        let Some((plain, joined)) = t.attempt(guo_pair(&base, v, s, k, &tips), || format!("{base:?}")) else {
            continue;
        };
        let Some((a, b)) = t.attempt(lambda(&plain).and_then(|a| Ok((a, lambda(&joined)?))), || format!("{plain:?}")) else {
            continue;
        };
        t.instances += 1;
        t.observe((a - b).abs());
        t.check((a - b).abs() <= EQ_TOL, || format!("{a} vs {b} for s={s} k={k} tips={tips:?} on {base:?}"));
    }
    t
}

fn flatten_idempotent(rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::max();
    for _ in 0..MIN_INSTANCES {
        let n = rng.gen_range(4..=MAX_ORDER);
        let g = rng.gen_range(3..n);
        let graph = random_unicyclic(rng, n, g);
        let Some((flat, _)) = t.attempt(flatten_trees(&graph), || format!("{graph:?}")) else { continue };
        let Some((again, grafts)) = t.attempt(flatten_trees(&flat), || format!("{flat:?}")) else { continue };
        t.instances += 1;
        t.observe(grafts as f64);
        let loads_kept = decompose_unicyclic(&graph).map(|d| d.attach_sizes().to_vec())
            == decompose_unicyclic(&flat).map(|d| d.attach_sizes().to_vec());
        t.check(grafts == 0 && again == flat && loads_kept, || format!("flatten not idempotent on {graph:?}"));
    }
    t
}

/// Flatten, then chain (even girth) or open and chain (odd girth) along a
/// constructed ordering; `λ` must not increase at any step.
fn surgery_ladder(rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::min();
    let mut attempts = 0;
    while t.instances < MIN_INSTANCES && attempts < 100 * MIN_INSTANCES {
        attempts += 1;
        let n = rng.gen_range(6..=MAX_ORDER);
        let g = rng.gen_range(4..=n - 2);
        let factor = if g % 2 == 0 { 1 } else { 2 };
        let graph = random_unicyclic(rng, n, g);
        let Ok((g1, grafts)) = flatten_trees(&graph) else { continue };
        let Ok(d) = decompose_unicyclic(&g1) else { continue };
        if d.c_set().len() < 2 {
            continue;
        }
        let Ok(Some(order)) = build_ordering(&d, factor) else { continue };
        let seq = order.sequence;
        let Some(l0) = t.attempt(lambda(&graph), || format!("{graph:?}")) else { continue };
        let Some(l1) = t.attempt(lambda(&g1), || format!("{g1:?}")) else { continue };
        t.instances += 1;
        t.check(l1 <= l0 + EQ_TOL, || format!("flatten raised lambda {l0} -> {l1}"));
        if g % 2 == 0 && grafts > 0 {
            t.check(l0 - l1 > STRICT, || format!("bipartite flatten not strict: {l0} -> {l1} on {graph:?}"));
        }
        if g % 2 == 0 {
            let Some(g2) = t.attempt(chain_paths(&g1, &seq), || format!("{g1:?} {seq:?}")) else { continue };
            let Some(l2) = t.attempt(lambda(&g2), || format!("{g2:?}")) else { continue };
            t.observe(l1 - l2);
            t.check(is_isomorphic(&g2, &make_u_ng(n, g).expect("n > g")), || format!("chain of {g1:?} is not U"));
            t.check(l1 - l2 > STRICT, || format!("chain not strict: {l1} -> {l2} on {g1:?} along {seq:?}"));
        } else {
            let Some(h2) = t.attempt(open_cycle(&g1, seq[0]), || format!("{g1:?}")) else { continue };
            let Some(h3) = t.attempt(open_and_chain(&g1, &seq), || format!("{g1:?} {seq:?}")) else { continue };
            let Some(l2) = t.attempt(lambda(&h2), || format!("{h2:?}")) else { continue };
            let Some(l3) = t.attempt(lambda(&h3), || format!("{h3:?}")) else { continue };
            t.observe(l2 - l3);
            t.check(is_isomorphic(&h3, &make_ubar_ng(n, g).expect("odd g < n")), || format!("open-chain of {g1:?} is not the opened U"));
            t.check(l2 <= l1 + EQ_TOL, || format!("opening raised lambda {l1} -> {l2}"));
            t.check(l2 - l3 > STRICT, || format!("open-chain not strict: {l2} -> {l3} on {g1:?} along {seq:?}"));
        }
    }
    t
}

// ---------------------------------------------------------------- theory

/// `4.0 .. 4.3` for the monotonicity clause alone, then 46 points from the
/// ratio threshold upwards.
pub fn f_grid() -> Vec<f64> {
    let mut grid = vec![4.0, 4.1, 4.2, 4.3];
    grid.extend((0..46).map(|i| RATIO_THRESHOLD + 0.1 * i as f64));
    grid
}

fn f_recursion(_: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::min();
    let grid = f_grid();
    let Some(r) = t.attempt(check_f_properties(&grid, 50), || "grid".into()) else { return t };
    t.instances = r.points;
    t.observe(r.min_margin);
    for f in r.failures.iter() {
        t.fail(|| format!("{f:?}"));
    }
    t
}

fn witness_identities(_: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::max();
    for g in (4..=20).step_by(2) {
        let Some(w) = t.attempt(witness_vector(g), || format!("g={g}")) else { continue };
        t.instances += 1;
        let q = (1u128 << (2 * w.k)) - 1;
        let ok = w.a_sq == 2 * q && w.edge_sum == 9 * q && w.rayleigh() == num_rational::Ratio::new(9, 2);
        t.observe(w.a_sq as f64);
        t.check(ok, || format!("identities fail at g={g}"));
    }
    t
}

fn u_above_four_and_a_half(_: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::min();
    for g in [4, 6, 8] {
        for n in (3 * g / 2).max(g + 1)..=16 {
            let Some(l) = t.attempt(make_u_ng(n, g).map_err(|e| e.to_string()).and_then(|u| lambda(&u)), || format!("U({n},{g})")) else {
                continue;
            };
            t.instances += 1;
            t.observe(l - 4.5);
            t.check(l >= 4.5 - EQ_TOL, || format!("lambda(U({n},{g})) = {l}"));
        }
    }
    t
}

fn ubar_above_ratio_threshold(_: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::min();
    for g in [5, 7, 9] {
        for n in g + 2..=16 {
            let pair = make_ubar_ng(n, g)
                .and_then(|b| Ok((b, make_u_ng(n, g)?)))
                .map_err(|e| e.to_string())
                .and_then(|(b, u)| Ok((mu(&b)?, lambda(&b)?, lambda(&u)?)));
            let Some((m, lb, lu)) = t.attempt(pair, || format!("({n},{g})")) else { continue };
            t.instances += 1;
            t.observe(m - RATIO_THRESHOLD);
            t.check(m > RATIO_THRESHOLD, || format!("mu(Ubar({n},{g})) = {m}"));
            t.check((lb - lu).abs() <= EQ_TOL, || format!("lambda(Ubar) {lb} vs lambda(U) {lu} at ({n},{g})"));
        }
    }
    t
}

fn eigvec_suite(rng: &mut ChaCha8Rng, even: bool) -> Tally {
    let mut t = Tally::min();
    for _ in 0..3 * MIN_INSTANCES / 2 {
        let (n, g) = loop {
            let g = rng.gen_range(3..MAX_ORDER);
            if (g % 2 == 0) == even {
                break (rng.gen_range(g + 1..=MAX_ORDER), g);
            }
        };
        let graph = if even { make_u_ng(n, g) } else { make_ubar_ng(n, g) }.expect("valid parameters");
        let mut perm: Vec<usize> = graph.vertices().collect();
        perm.shuffle(rng);
        let relabeled = graph.relabel(&perm).expect("permutation");
        let Some(p) = t.attempt(perron_vector(&relabeled, DEFAULT_TOL), || format!("({n},{g})")) else { continue };
        t.instances += 1;
        let p = perron_in_original_labels(&p, &perm);
        let report = if even { ung_even_clauses(n, g, &p, EQ_TOL) } else { ubar_odd_clauses(n, g, &p, EQ_TOL) };
        if let Some(m) = strict_margin(&report) {
            t.observe(m);
        }
        t.check(report.passed(), || {
            let bad: Vec<_> = report.clauses.iter().filter(|c| c.status == ClauseStatus::Fail).collect();
            format!("({n},{g}) mu={}: {bad:?}", report.mu)
        });
    }
    t
}

fn u_eigvec_orderings(rng: &mut ChaCha8Rng) -> Tally {
    eigvec_suite(rng, true)
}

fn ubar_eigvec_orderings(rng: &mut ChaCha8Rng) -> Tally {
    eigvec_suite(rng, false)
}

/// A pendant path on a bipartite base: components follow
/// `x_{v_i} = f_{k-i}(μ) x_{v_{i+1}}` and decrease outwards.
fn path_recursion(rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::max();
    while t.instances < MIN_INSTANCES {
        let n0 = rng.gen_range(2..=8);
        let base = random_bipartite(rng, n0);
        let k = rng.gen_range(1..=MAX_ORDER - n0);
        let v = rng.gen_range(1..=n0);
        let path: Vec<usize> = std::iter::once(v).chain(n0 + 1..=n0 + k).collect();
        let attach: Vec<Edge> = path.windows(2).map(|w| (w[0], w[1])).collect();
        let graph = base.with_extra_vertices(k, &attach).expect("fresh path vertices");
        let Some(p) = t.attempt(perron_vector(&graph, DEFAULT_TOL), || format!("{graph:?}")) else { continue };
        t.instances += 1;
        let residual = path_recursion_residual(&p, &path);
        t.observe(residual);
        t.check(residual < 1e-8, || format!("residual {residual} on {graph:?}"));
        if p.mu >= 4.0 {
            let decreasing = path.windows(2).all(|w| p.x(w[0]) - p.x(w[1]) > STRICT);
            t.check(decreasing, || format!("components not decreasing along the path on {graph:?}"));
        }
    }
    t
}

// ------------------------------------------------------------- enumerate

/// Every `(n, g)` with `n <= MAX_ORDER` in the range where the pair lemma
/// applies with `factor`.
fn pair_range(factor: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 5..=MAX_ORDER {
        for g in 3..n - 1 {
            let needed = if factor == 1 { 2 * g - 1 } else { 3 * g - 1 };
            if n >= needed {
                out.push((n, g));
            }
        }
    }
    out
}

fn pair_existence(_: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::min();
    for factor in [1, 2] {
        for (n, g) in pair_range(factor) {
            for graph in unicyclic_graphs(n, g).expect("valid range") {
                let d = decompose_unicyclic(&graph).expect("generated graphs are unicyclic");
                if d.c_set().len() < 2 {
                    continue;
                }
                t.instances += 1;
                match find_pair(&d, factor) {
                    Ok(Some((i, j))) => {
                        let slack = d.attach_size(i).unwrap_or(0) as f64 - (factor * d.cycle_distance(i, j).unwrap_or(usize::MAX / 4)) as f64;
                        t.observe(slack);
                        t.check(slack >= 0.0, || format!("pair ({i},{j}) violates the bound in {graph:?}"));
                    }
                    other => t.fail(|| format!("no pair (factor {factor}) in {graph:?}: {other:?}")),
                }
            }
        }
    }
    t
}

/// Prefix condition recomputed from graph distances rather than cycle
/// positions.
fn independent_prefix_check(graph: &Graph, loads: &[(usize, usize)], seq: &[usize], factor: usize) -> bool {
    let mut expect: Vec<usize> = loads.iter().map(|&(v, _)| v).collect();
    let mut got = seq.to_vec();
    expect.sort_unstable();
    got.sort_unstable();
    if expect != got {
        return false;
    }
    let load = |v: usize| loads.iter().find(|&&(w, _)| w == v).map_or(0, |&(_, l)| l);
    let mut sum = 0;
    for (j, &v) in seq.iter().enumerate() {
        if j > 0 && sum < factor * graph.distance(seq[0], v).unwrap_or(usize::MAX / 4) {
            return false;
        }
        sum += load(v);
    }
    true
}

fn ordering_construction(_: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::min();
    for factor in [1, 2] {
        for (n, g) in pair_range(factor) {
            for graph in unicyclic_graphs(n, g).expect("valid range") {
                let d = decompose_unicyclic(&graph).expect("generated graphs are unicyclic");
                let loads: Vec<(usize, usize)> = d
                    .cycle()
                    .iter()
                    .zip(d.attach_sizes())
                    .filter(|(_, &l)| l > 0)
                    .map(|(&v, &l)| (v, l))
                    .collect();
                if loads.len() < 2 {
                    continue;
                }
                t.instances += 1;
                match build_ordering(&d, factor) {
                    Ok(Some(o)) => {
                        t.observe(o.len() as f64);
                        t.check(independent_prefix_check(&graph, &loads, &o.sequence, factor), || {
                            format!("ordering {:?} fails the re-check on {graph:?}", o.sequence)
                        });
                    }
                    other => t.fail(|| format!("no ordering (factor {factor}) for {graph:?}: {other:?}")),
                }
            }
        }
    }
    t
}

fn family_distinct(_: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::max();
    for n in 4..=10 {
        for g in 3..=n {
            let forms: Vec<_> = unicyclic_graphs(n, g).expect("valid").map(|x| canonical_form(&x)).collect();
            let again: Vec<_> = unicyclic_graphs(n, g).expect("valid").map(|x| canonical_form(&x)).collect();
            let mut sorted = forms.clone();
            sorted.sort();
            sorted.dedup();
            t.instances += 1;
            t.observe(forms.len() as f64);
            t.check(sorted.len() == forms.len() && forms == again, || format!("family ({n},{g}) repeats or is unstable"));
        }
    }
    t
}

type SuiteFn = fn(&mut ChaCha8Rng) -> Tally;

/// `(name, module, measure, suite)`; the position is the stream index.
const SUITES: &[(&str, Scope, &str, SuiteFn)] = &[
    ("decomposition-roundtrip", Scope::Graph, "max |m - n|", decomposition_roundtrip),
    ("u-girth", Scope::Graph, "none", u_girth),
    ("canonical-relabel", Scope::Graph, "max changed forms", canonical_relabel),
    ("opposite-edge", Scope::Graph, "none", opposite_edge),
    ("bipartite-equality", Scope::Spectra, "max |lambda - mu|", bipartite_equality),
    ("odd-girth-gap", Scope::Spectra, "min mu - lambda", odd_girth_gap),
    ("max-degree-bound", Scope::Spectra, "min lambda - (max degree + 1)", max_degree_bound),
    ("edge-addition", Scope::Spectra, "min lambda change", edge_addition),
    ("eigenpair-residual", Scope::Spectra, "max residual", eigenpair_residual),
    ("rayleigh-bound", Scope::Spectra, "min mu - quotient", rayleigh_bound),
    ("relabel-spectrum", Scope::Spectra, "max eigenvalue deviation", relabel_spectrum),
    ("graft-monotone", Scope::Transforms, "min lambda decrease", graft_monotone),
    ("guo-equality", Scope::Transforms, "max |lambda difference|", guo_equality),
    ("flatten-idempotent", Scope::Transforms, "max second-pass grafts", flatten_idempotent),
    ("surgery-ladder", Scope::Transforms, "min final-step decrease", surgery_ladder),
    ("f-recursion", Scope::Theory, "min inequality margin", f_recursion),
    ("witness-identities", Scope::Theory, "largest a_sq", witness_identities),
    ("u-above-4.5", Scope::Theory, "min lambda - 4.5", u_above_four_and_a_half),
    ("ubar-above-4.383", Scope::Theory, "min mu - 4.383", ubar_above_ratio_threshold),
    ("u-eigvec-orderings", Scope::Theory, "min strict margin", u_eigvec_orderings),
    ("ubar-eigvec-orderings", Scope::Theory, "min strict margin", ubar_eigvec_orderings),
    ("path-recursion", Scope::Theory, "max residual", path_recursion),
    ("pair-existence", Scope::Enumerate, "min slack", pair_existence),
    ("ordering-construction", Scope::Enumerate, "min ordering length", ordering_construction),
    ("family-distinct", Scope::Enumerate, "largest family", family_distinct),
];

/// Names of all suites with their module.
pub fn suite_names() -> Vec<(&'static str, Scope)> {
    SUITES.iter().map(|&(name, scope, _, _)| (name, scope)).collect()
}

/// Runs every suite in `scope` with `seed`. Deterministic given both.
pub fn run_properties(scope: Scope, seed: u64) -> PropertyReport {
    let suites = SUITES
        .iter()
        .enumerate()
        .filter(|(_, (_, module, _, _))| scope.includes(*module))
        .map(|(index, &(name, module, measure, run))| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(index as u64);
            let t = run(&mut rng);
            SuiteResult {
                name,
                scope: module,
                instances: t.instances,
                failures: t.failures,
                measure,
                extreme: t.extreme,
                first_failure: t.first_failure,
            }
        })
        .collect();
    PropertyReport { seed, scope, suites }
}
