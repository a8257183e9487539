//! Theorem-level verification campaigns.
//!
//! Each campaign combines families, spectra, counting, and bound checks into
//! a `VerificationReport`: a deterministic list of certified check rows plus
//! witnesses for anything that fails or stays indeterminate. Campaigns never
//! assert an asymptotic statement outside its hypothesis; they downgrade to
//! `report` status and record the observations instead. Strict spectral
//! comparisons are certified by disjoint Collatz-Wielandt intervals, with one
//! re-solve at `tol/100` before declaring an overlap indeterminate.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bounds::{
    first_key_bound_ii, first_key_residual_i, l_vs_t_checks, move_one_check,
    shift_residual_check, BoundCheck, CheckKind, Interval, Verdict,
};
use crate::canon::canonical_code;
use crate::counting::{c_n_f, count_copies, count_copies_partitioned, covering_number, Pattern};
use crate::error::Error;
use crate::families::{
    enumerate_all_graphs, enumerate_family, l_graph, perturbed_multipartite, t_star_graph, turan,
    turan_sizes, y_graph, PartitionedGraph,
};
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::spectral::{spectral_radius, EmbeddedSpec, SpectralResult};
use crate::Result;

/// Campaign outcome: `pass` (all checks certified under met hypotheses),
/// `fail` (a falsified assertable claim), or `report` (observations only:
/// unmet hypotheses, probes, indeterminate rows).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Status {
    Pass,
    Fail,
    Report,
}

/// Typed parameter value for the report header.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(untagged))]
pub enum ParamValue {
    Int(i64),
    Float(f64),
    Str(String),
}

impl From<usize> for ParamValue {
    fn from(v: usize) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<f64> for ParamValue {
    fn from(v: f64) -> Self {
        ParamValue::Float(v)
    }
}

impl From<&str> for ParamValue {
    fn from(v: &str) -> Self {
        ParamValue::Str(v.into())
    }
}

/// Extremal or violating graph attached to a report.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Witness {
    pub graph6: String,
    pub sidecar: Sidecar,
}

/// Family bookkeeping attached to a witness; empty for plain graphs.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Sidecar {
    pub base_sizes: Vec<usize>,
    pub parts: Vec<Vec<usize>>,
    pub alpha1: usize,
    pub alpha2: usize,
}

impl Witness {
    pub fn from_partitioned(pg: &PartitionedGraph) -> Result<Self> {
        Ok(Witness {
            graph6: emit_graph6(pg.graph())?,
            sidecar: Sidecar {
                base_sizes: pg.base_sizes().to_vec(),
                parts: pg.parts().to_vec(),
                alpha1: pg.alpha1(),
                alpha2: pg.alpha2(),
            },
        })
    }

    pub fn from_graph(g: &Graph) -> Result<Self> {
        Ok(Witness {
            graph6: emit_graph6(g)?,
            sidecar: Sidecar { base_sizes: Vec::new(), parts: Vec::new(), alpha1: 0, alpha2: 0 },
        })
    }
}

/// Structured pass/fail/report outcome of one campaign.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct VerificationReport {
    pub theorem: String,
    pub params: BTreeMap<String, ParamValue>,
    pub status: Status,
    pub checks: Vec<BoundCheck>,
    pub witnesses: Vec<Witness>,
    /// Filled in by the caller after timing; excluded from the checksummed
    /// report body.
    pub wallclock_ms: u64,
}

impl VerificationReport {
    fn new(theorem: &str, params: BTreeMap<String, ParamValue>) -> Self {
        VerificationReport {
            theorem: theorem.into(),
            params,
            status: Status::Report,
            checks: Vec::new(),
            witnesses: Vec::new(),
            wallclock_ms: 0,
        }
    }

    /// Derives the campaign status: certified failures of hard assertions
    /// under met hypotheses fail the run; probes, findings under unmet
    /// hypotheses, skips, and indeterminate rows downgrade to `report`.
    fn finalize(mut self, campaign_hypothesis_met: bool) -> Self {
        let mut any_soft = !campaign_hypothesis_met;
        let mut any_fail = false;
        for c in &self.checks {
            match c.verdict {
                Verdict::Fail => {
                    if c.kind == CheckKind::Assert && c.hypothesis_met && campaign_hypothesis_met {
                        any_fail = true;
                    } else {
                        any_soft = true;
                    }
                }
                Verdict::Indeterminate | Verdict::HypothesisNotMet => any_soft = true,
                Verdict::Pass => {
                    if !c.hypothesis_met {
                        any_soft = true;
                    }
                }
            }
        }
        self.status = if any_fail {
            Status::Fail
        } else if any_soft {
            Status::Report
        } else {
            Status::Pass
        };
        self
    }
}

/// Solves a batch of (graph, tol) jobs; implementors may parallelize but
/// must return results in input order.
pub trait BatchSolver {
    fn solve_batch(&self, jobs: &[(Graph, f64)]) -> Result<Vec<SpectralResult>>;
}

/// Sequential reference solver.
pub struct SequentialSolver;

impl BatchSolver for SequentialSolver {
    fn solve_batch(&self, jobs: &[(Graph, f64)]) -> Result<Vec<SpectralResult>> {
        jobs.iter().map(|(g, tol)| spectral_radius(g, *tol)).collect()
    }
}

fn params(entries: &[(&str, ParamValue)]) -> BTreeMap<String, ParamValue> {
    entries.iter().map(|(k, v)| (String::from(*k), v.clone())).collect()
}

/// Strict `a < b` with one joint re-solve at `tol/100` on overlap. Returns
/// the check plus the (possibly re-solved) enclosures.
fn certified_strict(
    name: String,
    ga: &Graph,
    gb: &Graph,
    ra: &SpectralResult,
    rb: &SpectralResult,
    tol: f64,
) -> Result<(BoundCheck, Interval, Interval)> {
    let (mut ia, mut ib) = (Interval::from_spectral(ra), Interval::from_spectral(rb));
    if ia.hi >= ib.lo && ib.hi >= ia.lo {
        ia = Interval::from_spectral(&spectral_radius(ga, tol / 100.0)?);
        ib = Interval::from_spectral(&spectral_radius(gb, tol / 100.0)?);
    }
    Ok((BoundCheck::strictly_less(name, ia, ib), ia, ib))
}

/// Minimizer/maximizer campaign: certified per-class spectral radii over the
/// q-edge-addition family; the matching member must be the unique minimum
/// and the star/triangle member the unique maximum. Outside the theorem
/// hypothesis `q <= n/(100 r)` the run downgrades to `report`.
pub fn verify_min_max(
    n: usize,
    r: usize,
    q: usize,
    tol: f64,
    solver: &dyn BatchSolver,
) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(
        "min-max",
        params(&[("n", n.into()), ("q", q.into()), ("r", r.into()), ("tol", tol.into())]),
    );
    let hypothesis_met = 100 * r * q <= n;
    let members = enumerate_family(n, r, q)?;
    let labels: Vec<String> =
        members.iter().map(|m| m.descriptor().map(|d| d.label())).collect::<Result<_>>()?;
    let y_label = y_graph(n, r, q)?.descriptor()?.label();
    let l_label = l_graph(n, r, q)?.descriptor()?.label();
    let star_label = t_star_graph(n, r, q)?.descriptor()?.label();
    let jobs: Vec<(Graph, f64)> = members.iter().map(|m| (m.graph().clone(), tol)).collect();
    let solved = solver.solve_batch(&jobs)?;
    let yi = labels.iter().position(|l| *l == y_label).ok_or_else(|| {
        Error::Numeric("matching member missing from enumeration".into())
    })?;
    let li = labels.iter().position(|l| *l == l_label).ok_or_else(|| {
        Error::Numeric("star/triangle member missing from enumeration".into())
    })?;
    for (i, label) in labels.iter().enumerate() {
        rep.checks.push(BoundCheck::info(
            alloc::format!("lambda[{label}]"),
            Interval::from_spectral(&solved[i]),
        ));
    }
    for (i, label) in labels.iter().enumerate() {
        if i != yi {
            let (check, _, _) = certified_strict(
                alloc::format!("y-min<{label}]"),
                members[yi].graph(),
                members[i].graph(),
                &solved[yi],
                &solved[i],
                tol,
            )?;
            let check = BoundCheck { name: alloc::format!("y-min[{label}]"), ..check }
                .with_hypothesis(hypothesis_met);
            if check.verdict == Verdict::Fail {
                rep.witnesses.push(Witness::from_partitioned(&members[i])?);
            }
            rep.checks.push(check);
        }
        if i != li {
            let (check, _, _) = certified_strict(
                alloc::format!("l-max<{label}]"),
                members[i].graph(),
                members[li].graph(),
                &solved[i],
                &solved[li],
                tol,
            )?;
            let check = BoundCheck { name: alloc::format!("l-max[{label}]"), ..check }
                .with_hypothesis(hypothesis_met);
            if check.verdict == Verdict::Fail {
                rep.witnesses.push(Witness::from_partitioned(&members[i])?);
            }
            rep.checks.push(check);
        }
    }
    if q == 3 {
        // the triangle member must beat the star member
        let si = labels.iter().position(|l| *l == star_label);
        if let Some(si) = si {
            if si != li {
                let (check, _, _) = certified_strict(
                    "triangle-beats-star".into(),
                    members[si].graph(),
                    members[li].graph(),
                    &solved[si],
                    &solved[li],
                    tol,
                )?;
                rep.checks.push(check.with_hypothesis(hypothesis_met));
            }
        }
    }
    Ok(rep.finalize(hypothesis_met))
}

/// Tightness campaign: for `q >= 2 sqrt(n)` the star graph with `q-1` added
/// edges beats the matching graph with `q` added edges, while containing
/// exactly `(q-1) c(n, K_{r+1})` copies of `K_{r+1}`.
pub fn verify_tightness(n: usize, r: usize, q: usize, tol: f64) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(
        "tightness",
        params(&[("n", n.into()), ("q", q.into()), ("r", r.into()), ("tol", tol.into())]),
    );
    let mut hypothesis_met = q * q >= 4 * n && q >= 1;
    if !hypothesis_met {
        rep.checks.push(BoundCheck::skipped("q-at-least-2-sqrt-n"));
        return Ok(rep.finalize(false));
    }
    let t_star = t_star_graph(n, r, q - 1).ok();
    let y = y_graph(n, r, q).ok();
    let (Some(t_star), Some(y)) = (t_star, y) else {
        rep.checks.push(BoundCheck::skipped("constructions-fit"));
        return Ok(rep.finalize(false));
    };
    let _ = &mut hypothesis_met;
    let rt = spectral_radius(t_star.graph(), tol)?;
    let ry = spectral_radius(y.graph(), tol)?;
    let (check, _, _) = certified_strict(
        "t-star-q-minus-1-beats-y-q".into(),
        y.graph(),
        t_star.graph(),
        &ry,
        &rt,
        tol,
    )?;
    rep.checks.push(check);
    let pattern = crate::counting::analyze_pattern(&Graph::complete(r + 1))?;
    let c = c_n_f(n, &pattern)?;
    let n_t = count_copies_partitioned(&pattern, &t_star)?;
    rep.checks.push(BoundCheck::exact_eq(
        "t-star-copies-exactly-(q-1)c",
        n_t,
        (q as u64 - 1) * c,
    ));
    let n_y = count_copies_partitioned(&pattern, &y)?;
    rep.checks.push(BoundCheck::info("y-copies", Interval::point(n_y as f64)));
    rep.checks.push(BoundCheck::info("c(n,F)", Interval::point(c as f64)));
    Ok(rep.finalize(true))
}

/// Exhaustive small-n campaign: over every isomorphism class on `n <= 8`
/// vertices, any graph with spectral radius at least that of the bipartite
/// Turán graph (other than the Turán graph itself) must contain at least
/// `floor(n/2) - 1` triangles.
pub fn verify_ning_zhai(n: usize, tol: f64, solver: &dyn BatchSolver) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(
        "ning-zhai",
        params(&[("n", n.into()), ("tol", tol.into())]),
    );
    let t = turan(n, 2)?;
    let t_code = canonical_code(t.graph())?;
    let rt = spectral_radius(t.graph(), tol.min(1e-10))?;
    let classes = enumerate_all_graphs(n)?;
    let triangle = crate::counting::analyze_pattern(&Graph::complete(3))?;
    let bound = (n / 2).saturating_sub(1) as u64;
    let jobs: Vec<(Graph, f64)> = classes.iter().map(|g| (g.clone(), tol)).collect();
    let solved = solver.solve_batch(&jobs)?;
    let mut qualifying = 0u64;
    let mut violations = 0u64;
    let mut indeterminate = 0u64;
    for (g, sol) in classes.iter().zip(&solved) {
        if canonical_code(g)? == t_code {
            continue;
        }
        // certified below lambda(T_{n,2})? then the implication is vacuous
        if sol.interval.1 < rt.interval.0 {
            continue;
        }
        qualifying += 1;
        let triangles = count_copies(&triangle, g)?;
        if triangles >= bound {
            continue;
        }
        // triangle-deficient: the spectral condition must now be decided
        let rg = spectral_radius(g, 1e-12)?;
        let rt2 = spectral_radius(t.graph(), 1e-12)?;
        if rg.interval.1 < rt2.interval.0 {
            continue; // certified below after re-solve
        }
        if rg.interval.0 >= rt2.interval.1 {
            violations += 1;
            rep.witnesses.push(Witness::from_graph(g)?);
            rep.checks.push(BoundCheck::le(
                alloc::format!("triangles[{}]", emit_graph6(g)?),
                Interval::point(bound as f64),
                Interval::point(triangles as f64),
            ));
        } else {
            indeterminate += 1;
            rep.checks.push(
                BoundCheck::strictly_less(
                    alloc::format!("lambda-indeterminate[{}]", emit_graph6(g)?),
                    Interval::new(rg.interval.0, rg.interval.1),
                    Interval::new(rt2.interval.0, rt2.interval.1),
                ),
            );
            rep.witnesses.push(Witness::from_graph(g)?);
        }
    }
    rep.checks.push(BoundCheck::info("classes-scanned", Interval::point(classes.len() as f64)));
    rep.checks.push(BoundCheck::info("qualifying", Interval::point(qualifying as f64)));
    rep.checks.push(BoundCheck::exact_eq("violations", violations, 0));
    rep.checks.push(BoundCheck::info("indeterminate", Interval::point(indeterminate as f64)));
    Ok(rep.finalize(true))
}

/// Supersaturation campaign: every family member must contain at least
/// `q * c(n,F)` copies of F; a deterministic perturbed battery (extra
/// class-edges, a few cross-deletions) is scanned for spectral-threshold
/// counterexamples, which are findings, never failures.
pub fn verify_supersat(
    n: usize,
    r: usize,
    q: usize,
    pattern: &Pattern,
    tol: f64,
    solver: &dyn BatchSolver,
) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(
        "supersat",
        params(&[
            ("f", pattern.vertex_count().into()),
            ("n", n.into()),
            ("q", q.into()),
            ("r", r.into()),
            ("tol", tol.into()),
        ]),
    );
    if pattern.chromatic_number() != r + 1 {
        return Err(Error::InvalidArgument(alloc::format!(
            "pattern has chromatic number {}, need r + 1 = {}",
            pattern.chromatic_number(),
            r + 1
        )));
    }
    let c = c_n_f(n, pattern)?;
    let need = q as u64 * c;
    let members = enumerate_family(n, r, q)?;
    let jobs: Vec<(Graph, f64)> = members.iter().map(|m| (m.graph().clone(), tol)).collect();
    let solved = solver.solve_batch(&jobs)?;
    let mut min_interval = Interval::new(f64::MAX, f64::MAX);
    let mut max_interval = Interval::new(f64::MIN, f64::MIN);
    for sol in &solved {
        min_interval = Interval::new(
            min_interval.lo.min(sol.interval.0),
            min_interval.hi.min(sol.interval.1),
        );
        max_interval = Interval::new(
            max_interval.lo.max(sol.interval.0),
            max_interval.hi.max(sol.interval.1),
        );
    }
    for member in &members {
        let label = member.descriptor()?.label();
        let copies = count_copies_partitioned(pattern, member)?;
        let check = BoundCheck::le(
            alloc::format!("copies-at-least-qc[{label}]"),
            Interval::point(need as f64),
            Interval::point(copies as f64),
        );
        if check.verdict == Verdict::Fail {
            rep.witnesses.push(Witness::from_partitioned(member)?);
        }
        rep.checks.push(check);
    }
    rep.checks.push(BoundCheck::info("lambda-threshold-min", min_interval));
    rep.checks.push(BoundCheck::info("lambda-threshold-max", max_interval));
    rep.checks.push(BoundCheck::info("c(n,F)", Interval::point(c as f64)));

    // perturbed battery: alpha1 in {q, q+1, q+2} class-edges (matching or
    // star), alpha2 in {0, 1, 2} cross-deletions, both away from and
    // touching the class-edge vertices
    let sizes = turan_sizes(n, r);
    let off1 = sizes[0];
    for &a1 in &[q, q + 1, q + 2] {
        for shape in ["matching", "star"] {
            let class: Vec<(usize, usize)> = match shape {
                "matching" => (0..a1).map(|i| (2 * i, 2 * i + 1)).collect(),
                _ => (1..=a1).map(|i| (0, i)).collect(),
            };
            let head: usize = class.iter().map(|&(_, b)| b).max().map_or(0, |b| b + 1);
            if head > sizes[0] {
                continue;
            }
            for a2 in 0..=2usize {
                for touching in [false, true] {
                    let deleted: Vec<(usize, usize)> = if touching {
                        (0..a2).map(|t| (t, off1 + t)).collect()
                    } else {
                        if head + a2 > sizes[0] {
                            continue;
                        }
                        (0..a2).map(|t| (head + t, off1 + t)).collect()
                    };
                    if touching && a2 == 0 {
                        continue; // same as non-touching a2 = 0
                    }
                    let pg = perturbed_multipartite(&sizes, &class, &deleted)?;
                    let sol = spectral_radius(pg.graph(), tol)?;
                    let label = alloc::format!(
                        "scan[{shape},a1={a1},a2={a2},touch={}]",
                        usize::from(touching)
                    );
                    // only spectrally qualifying graphs feed the falsifier
                    if sol.interval.1 < min_interval.lo {
                        rep.checks.push(
                            BoundCheck::info(alloc::format!("{label}:below-threshold"), {
                                Interval::from_spectral(&sol)
                            }),
                        );
                        continue;
                    }
                    let copies = count_copies_partitioned(pattern, &pg)?;
                    let check = BoundCheck::le(
                        label,
                        Interval::point(need as f64),
                        Interval::point(copies as f64),
                    )
                    .as_probe();
                    if check.verdict == Verdict::Fail {
                        rep.witnesses.push(Witness::from_partitioned(&pg)?);
                    }
                    rep.checks.push(check);
                }
            }
        }
    }
    Ok(rep.finalize(true))
}

/// Covering campaign: the matching member has covering number exactly `s`
/// and at least `s * c(n,F) - C n^{f-3}` copies; the Turán graph has
/// covering number 0. Star members are recorded for context.
pub fn verify_covering(
    n: usize,
    r: usize,
    s: usize,
    pattern: &Pattern,
    covering_c: f64,
    tol: f64,
) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(
        "covering",
        params(&[
            ("covering_c", covering_c.into()),
            ("f", pattern.vertex_count().into()),
            ("n", n.into()),
            ("r", r.into()),
            ("s", s.into()),
            ("tol", tol.into()),
        ]),
    );
    let c = c_n_f(n, pattern)?;
    let y = y_graph(n, r, s)?;
    let tau_y = covering_number(pattern, y.graph())?;
    rep.checks.push(BoundCheck::exact_eq("tau(Y)=s", tau_y, s as u64));
    let n_y = count_copies_partitioned(pattern, &y)?;
    let f = pattern.vertex_count() as f64;
    let floor_bound = s as f64 * c as f64 - covering_c * libm::pow(n as f64, f - 3.0);
    rep.checks.push(BoundCheck::le(
        "copies(Y)-above-floor",
        Interval::point(floor_bound),
        Interval::point(n_y as f64),
    ));
    let t = turan(n, r)?;
    let tau_t = covering_number(pattern, t.graph())?;
    rep.checks.push(BoundCheck::exact_eq("tau(Turan)=0", tau_t, 0));
    rep.checks.push(BoundCheck::info("s*c(n,F)", Interval::point(s as f64 * c as f64)));
    for (name, pg) in [("L", l_graph(n, r, s)?), ("T-star", t_star_graph(n, r, s)?)] {
        let tau = covering_number(pattern, pg.graph())?;
        let copies = count_copies_partitioned(pattern, &pg)?;
        rep.checks.push(BoundCheck::info(
            alloc::format!("tau({name})"),
            Interval::point(tau as f64),
        ));
        rep.checks.push(BoundCheck::info(
            alloc::format!("copies({name})"),
            Interval::point(copies as f64),
        ));
    }
    let _ = tol;
    Ok(rep.finalize(true))
}

/// Star-variant campaign: the star member satisfies the supersaturation
/// count, and the certified chain `lambda(Y) < lambda(T-star) <= lambda(L)`
/// holds.
pub fn verify_t_variant(
    n: usize,
    r: usize,
    q: usize,
    pattern: &Pattern,
    tol: f64,
) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(
        "t-variant",
        params(&[
            ("f", pattern.vertex_count().into()),
            ("n", n.into()),
            ("q", q.into()),
            ("r", r.into()),
            ("tol", tol.into()),
        ]),
    );
    let t = t_star_graph(n, r, q)?;
    let y = y_graph(n, r, q)?;
    let l = l_graph(n, r, q)?;
    let c = c_n_f(n, pattern)?;
    let copies = count_copies_partitioned(pattern, &t)?;
    rep.checks.push(BoundCheck::le(
        "t-star-copies-at-least-qc",
        Interval::point((q as u64 * c) as f64),
        Interval::point(copies as f64),
    ));
    let rt = spectral_radius(t.graph(), tol)?;
    let ry = spectral_radius(y.graph(), tol)?;
    let rl = spectral_radius(l.graph(), tol)?;
    let (check, _, _) =
        certified_strict("y-below-t-star".into(), y.graph(), t.graph(), &ry, &rt, tol)?;
    rep.checks.push(check);
    if t.descriptor()? == l.descriptor()? {
        rep.checks.push(BoundCheck::info(
            "t-star-equals-l",
            Interval::from_spectral(&rt),
        ));
    } else {
        let (check, _, _) =
            certified_strict("t-star-below-l".into(), t.graph(), l.graph(), &rt, &rl, tol)?;
        rep.checks.push(check);
    }
    for (name, sol) in [("lambda(Y)", &ry), ("lambda(T-star)", &rt), ("lambda(L)", &rl)] {
        rep.checks.push(BoundCheck::info(name, Interval::from_spectral(sol)));
    }
    Ok(rep.finalize(true))
}

/// Near-balanced part sizes summing to `n` with extreme gap `gap`
/// (deterministic; r = 2 needs `n + gap` even, r >= 3 always solvable).
pub fn sizes_with_gap(n: usize, r: usize, gap: usize) -> Option<Vec<usize>> {
    if r == 2 {
        if !(n + gap).is_multiple_of(2) || gap >= n {
            return None;
        }
        return Some(vec![(n + gap) / 2, (n - gap) / 2]);
    }
    let base = n / r;
    for s_last in (base.saturating_sub(gap).max(1)..=base).rev() {
        let s_first = s_last + gap;
        let rest = n - s_first - s_last;
        if r == 2 {
            continue;
        }
        // distribute rest over r-2 middle parts as evenly as possible
        let mid = r - 2;
        if rest < mid * s_last || rest > mid * s_first {
            continue;
        }
        let mut sizes = vec![s_first];
        let mut left = rest;
        for i in 0..mid {
            let remaining_slots = mid - i;
            let v = left.div_ceil(remaining_slots);
            let v = v.clamp(s_last, s_first);
            sizes.push(v);
            left -= v;
        }
        sizes.push(s_last);
        let mut sorted = sizes.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if sorted.iter().sum::<usize>() == n && sorted[0] - sorted[r - 1] == gap {
            return Some(sorted);
        }
    }
    None
}

/// Perturbation-estimate battery at scale `n`: residual checks on balanced
/// and near-balanced hosts with small added matchings/stars and a few
/// cross-deletions, plus the unbalanced-parts upper bound for small `k`.
pub fn verify_first_key(n: usize, r: usize, tol: f64) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(
        "first-key",
        params(&[("n", n.into()), ("r", r.into()), ("tol", tol.into())]),
    );
    let balanced = turan_sizes(n, r);
    let near = sizes_with_gap(n, r, 2);
    let mut hosts: Vec<(&str, Vec<usize>)> = vec![("balanced", balanced.clone())];
    if let Some(nb) = near {
        hosts.push(("near-balanced", nb));
    }
    for (host_name, sizes) in &hosts {
        let off1 = sizes[0];
        for &a1 in &[0usize, 1, 3, 5] {
            for shape in ["matching", "star"] {
                if shape == "star" && a1 < 2 {
                    continue; // star and matching coincide below 2 edges
                }
                let class: Vec<(usize, usize)> = match shape {
                    "matching" => (0..a1).map(|i| (2 * i, 2 * i + 1)).collect(),
                    _ => (1..=a1).map(|i| (0, i)).collect(),
                };
                let head = class.iter().map(|&(_, b)| b).max().map_or(0, |b| b + 1);
                for a2 in [0usize, 1, 2] {
                    if head + a2 > sizes[0] {
                        continue;
                    }
                    let deleted: Vec<(usize, usize)> =
                        (0..a2).map(|t| (head + t, off1 + t)).collect();
                    let pg = perturbed_multipartite(sizes, &class, &deleted)?;
                    let mut check = first_key_residual_i(&pg, tol)?;
                    check.name =
                        alloc::format!("first-key-residual-i[{host_name},{shape},a1={a1},a2={a2}]");
                    if check.verdict == Verdict::Fail {
                        rep.witnesses.push(Witness::from_partitioned(&pg)?);
                    }
                    rep.checks.push(check);
                }
            }
        }
    }
    // part (ii): unbalanced hosts, small k so the quartic stays contractive
    for k in 1..=5usize {
        if let Some(sizes) = sizes_with_gap(n, r, 2 * k) {
            for &a1 in &[0usize, 2] {
                let class: Vec<(usize, usize)> = (0..a1).map(|i| (2 * i, 2 * i + 1)).collect();
                let pg = perturbed_multipartite(&sizes, &class, &[])?;
                let mut check = first_key_bound_ii(&pg, k, tol)?;
                check.name = alloc::format!("first-key-bound-ii[k={k},a1={a1}]");
                if check.verdict == Verdict::Fail {
                    rep.witnesses.push(Witness::from_partitioned(&pg)?);
                }
                rep.checks.push(check);
            }
        }
    }
    Ok(rep.finalize(true))
}

/// Move-one-vertex battery at scale `n`: enclosures of the spectral shift
/// for extreme-part gaps `d = 2..=10` over bipartite and tripartite hosts.
pub fn verify_move_one(n: usize, tol: f64) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(
        "move-one",
        params(&[("n", n.into()), ("tol", tol.into())]),
    );
    for d in 2..=10usize {
        for r in [2usize, 3] {
            let Some(sizes) = sizes_with_gap(n, r, d) else {
                continue;
            };
            let (lower, upper) = move_one_check(&sizes, 0, r - 1, tol)?;
            let lower = BoundCheck {
                name: alloc::format!("move-one-lower[r={r},d={d}]"),
                ..lower
            };
            let upper = BoundCheck {
                name: alloc::format!("move-one-upper[r={r},d={d}]"),
                ..upper
            };
            rep.checks.push(lower);
            rep.checks.push(upper);
        }
    }
    Ok(rep.finalize(true))
}

/// One-vertex-shift battery at scale `n` with window parameter `eps`: small
/// embeddings on near-balanced bipartite and tripartite hosts. Hosts whose
/// embeddings overwhelm the window at this scale are exercised in tests, not
/// here (the window constant is asymptotic).
pub fn verify_shift(n: usize, eps: f64, tol: f64) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(
        "shift",
        params(&[("eps", eps.into()), ("n", n.into()), ("tol", tol.into())]),
    );
    let e = Graph::from_edges(2, &[(0, 1)]);
    let empty = Graph::empty(0);
    let mut instances: Vec<(String, EmbeddedSpec, usize, usize)> = Vec::new();
    if let Some(sz) = sizes_with_gap(n, 2, 4) {
        instances.push((
            "r2,gap4,empty".into(),
            EmbeddedSpec::plain(sz.clone())?,
            0,
            1,
        ));
        instances.push((
            "r2,gap4,K2-in-large".into(),
            EmbeddedSpec::new(sz.clone(), vec![e.clone(), empty.clone()])?,
            0,
            1,
        ));
        instances.push((
            "r2,gap4,K2-in-small".into(),
            EmbeddedSpec::new(sz, vec![empty.clone(), e.clone()])?,
            0,
            1,
        ));
    }
    if let Some(sz) = sizes_with_gap(n, 2, 6) {
        instances.push((
            "r2,gap6,K2-in-large".into(),
            EmbeddedSpec::new(sz, vec![e.clone(), empty.clone()])?,
            0,
            1,
        ));
    }
    if let Some(sz) = sizes_with_gap(n, 2, 0) {
        instances.push(("r2,equal,empty".into(), EmbeddedSpec::plain(sz)?, 0, 1));
    }
    if let Some(sz) = sizes_with_gap(n, 3, 5) {
        instances.push((
            "r3,gap5,K2-in-large".into(),
            EmbeddedSpec::new(sz.clone(), vec![e.clone(), empty.clone(), empty.clone()])?,
            0,
            2,
        ));
        instances.push((
            "r3,gap5,2K2-in-large".into(),
            EmbeddedSpec::new(sz, vec![Graph::matching(2), empty.clone(), empty.clone()])?,
            0,
            2,
        ));
    }
    if let Some(sz) = sizes_with_gap(n, 3, 3) {
        instances.push(("r3,gap3,empty".into(), EmbeddedSpec::plain(sz)?, 0, 2));
    }
    for (label, spec, i, j) in instances {
        let mut check = shift_residual_check(&spec, i, j, eps, tol)?;
        check.name = alloc::format!("shift-residual[{label}]");
        if check.verdict == Verdict::Fail {
            rep.witnesses.push(Witness::from_partitioned(
                &crate::families::from_embedded_spec(&spec)?,
            )?);
        }
        rep.checks.push(check);
    }
    Ok(rep.finalize(true))
}

/// Star-vs-family comparisons at one (n, r, q).
pub fn verify_l_vs_t(
    n: usize,
    r: usize,
    q: usize,
    tol: f64,
    delta65: f64,
) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(
        "l-vs-t",
        params(&[
            ("delta65", delta65.into()),
            ("n", n.into()),
            ("q", q.into()),
            ("r", r.into()),
            ("tol", tol.into()),
        ]),
    );
    let (first, second) = l_vs_t_checks(n, r, q, tol, delta65)?;
    rep.checks.push(first);
    rep.checks.push(second);
    Ok(rep.finalize(true))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn min_max_small_hypothesis_unmet() {
        // (12,2,1): hypothesis n >= 100rq fails -> report with observations
        let rep = verify_min_max(12, 2, 1, 1e-10, &SequentialSolver).unwrap();
        assert_eq!(rep.status, Status::Report);
        assert!(rep.checks.iter().any(|c| c.name.starts_with("lambda[")));
    }

    #[test]
    fn min_max_certifies_at_moderate_scale() {
        // (24,2,... hypothesis 100rq <= n fails but ordering still certifies;
        // use a configuration with met hypothesis: n=200, r=2, q=1
        let rep = verify_min_max(200, 2, 1, 1e-9, &SequentialSolver).unwrap();
        assert_eq!(rep.status, Status::Pass);
    }

    #[test]
    fn tightness_small() {
        // smallest bipartite instance where both constructions fit: q = 16 =
        // 2 sqrt(64) and the 16-edge matching fills a 32-part exactly
        let rep = verify_tightness(64, 2, 16, 1e-10).unwrap();
        assert_eq!(rep.status, Status::Pass, "checks: {:?}", rep.checks);
        // below the q >= 2 sqrt(n) threshold: report
        let rep = verify_tightness(64, 2, 15, 1e-10).unwrap();
        assert_eq!(rep.status, Status::Report);
        // r = 3 at n = 64: the matching cannot fit a 22-part; reported
        let rep = verify_tightness(64, 3, 16, 1e-10).unwrap();
        assert_eq!(rep.status, Status::Report);
        assert!(rep.checks.iter().any(|c| c.name == "constructions-fit"));
    }

    #[test]
    fn ning_zhai_tiny() {
        let rep = verify_ning_zhai(5, 1e-9, &SequentialSolver).unwrap();
        assert_eq!(rep.status, Status::Pass);
        let scanned = rep
            .checks
            .iter()
            .find(|c| c.name == "classes-scanned")
            .unwrap()
            .lhs
            .lo;
        assert_eq!(scanned, 34.0);
    }

    #[test]
    fn sizes_with_gap_examples() {
        assert_eq!(sizes_with_gap(400, 2, 4), Some(vec![202, 198]));
        assert_eq!(sizes_with_gap(400, 2, 3), None); // parity
        let s = sizes_with_gap(400, 3, 5).unwrap();
        assert_eq!(s.iter().sum::<usize>(), 400);
        assert_eq!(s[0] - s[2], 5);
        let s = sizes_with_gap(1000, 3, 2).unwrap();
        assert_eq!(s.iter().sum::<usize>(), 1000);
        assert_eq!(s[0] - s[2], 2);
    }

    #[test]
    fn covering_small() {
        let pattern = crate::counting::analyze_pattern(&Graph::complete(3)).unwrap();
        let rep = verify_covering(20, 2, 2, &pattern, 0.0, 1e-9).unwrap();
        assert_eq!(rep.status, Status::Pass);
    }

    #[test]
    fn t_variant_small() {
        let pattern = crate::counting::analyze_pattern(&Graph::complete(3)).unwrap();
        let rep = verify_t_variant(40, 2, 3, &pattern, 1e-10).unwrap();
        assert_eq!(rep.status, Status::Pass, "checks: {:?}", rep.checks);
    }
}
