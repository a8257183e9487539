//! IO companion for the core library: battery configuration, report
//! serialization (JSON body + CSV flattening), a threaded batch solver, and
//! the argument plumbing shared by the CLI binary and its tests.

use std::fs;
use std::io::Read;
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use specsat_core::counting::{analyze_pattern, Pattern};
use specsat_core::families::PartitionedGraph;
use specsat_core::graph::Graph;
use specsat_core::graph6::parse_graph6;
use specsat_core::harness::{BatchSolver, SequentialSolver, VerificationReport};
use specsat_core::spectral::{spectral_radius, SpectralResult};
use specsat_core::Error as CoreError;

/// Environment variable pointing at the battery config file.
pub const CONFIG_ENV: &str = "SPECSAT_CONFIG";

/// Versioned battery configuration. Flag > config file > default.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub config_version: u32,
    /// Target width of certified spectral enclosures.
    pub tol: f64,
    /// Envelope constant for the empirical copy-sandwich probe.
    pub probe_constant: f64,
    /// Floor constant C in `s c(n,F) - C n^{f-3}` for covering runs.
    pub covering_c: f64,
    /// Linear range fraction for the additive star comparison.
    pub lvst_delta: f64,
    /// Window parameter for the one-vertex shift battery.
    pub shift_eps: f64,
    /// Worker cap for parallel batteries.
    pub jobs: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            config_version: 1,
            tol: 1e-10,
            probe_constant: 10.0,
            covering_c: 0.0,
            lvst_delta: 0.05,
            shift_eps: 0.075,
            jobs: 1,
        }
    }
}

impl Config {
    /// Loads from an explicit path, else `SPECSAT_CONFIG`, else defaults.
    pub fn load(path: Option<&Path>) -> Result<Config, String> {
        let chosen = match path {
            Some(p) => Some(p.to_path_buf()),
            None => std::env::var_os(CONFIG_ENV).map(std::path::PathBuf::from),
        };
        match chosen {
            None => Ok(Config::default()),
            Some(p) => {
                let text = fs::read_to_string(&p)
                    .map_err(|e| format!("cannot read config {}: {e}", p.display()))?;
                serde_json::from_str(&text)
                    .map_err(|e| format!("invalid config {}: {e}", p.display()))
            }
        }
    }
}

/// Report JSON (pretty, deterministic field order).
pub fn report_to_json(rep: &VerificationReport) -> String {
    serde_json::to_string_pretty(rep).expect("report serialization is infallible")
}

/// The checksummed report body: the report JSON with the volatile
/// `wallclock_ms` member removed. Byte-stable across runs.
pub fn report_body(json: &str) -> Result<String, String> {
    let mut value: serde_json::Value =
        serde_json::from_str(json).map_err(|e| format!("invalid report JSON: {e}"))?;
    if let Some(obj) = value.as_object_mut() {
        obj.remove("wallclock_ms");
    }
    serde_json::to_string_pretty(&value).map_err(|e| e.to_string())
}

/// Flattens report checks into CSV rows (header included).
pub fn reports_to_csv(reports: &[serde_json::Value]) -> String {
    let mut out = String::from(
        "theorem,check,kind,verdict,hypothesis_met,lhs_lo,lhs_hi,rhs_lo,rhs_hi,margin\n",
    );
    for rep in reports {
        let theorem = rep["theorem"].as_str().unwrap_or("");
        for check in rep["checks"].as_array().into_iter().flatten() {
            let name = check["name"].as_str().unwrap_or("");
            let name = if name.contains(',') || name.contains('"') {
                format!("\"{}\"", name.replace('"', "\"\""))
            } else {
                name.to_string()
            };
            out.push_str(&format!(
                "{theorem},{name},{},{},{},{},{},{},{},{}\n",
                check["kind"].as_str().unwrap_or(""),
                check["verdict"].as_str().unwrap_or(""),
                check["hypothesis_met"],
                check["lhs"]["lo"],
                check["lhs"]["hi"],
                check["rhs"]["lo"],
                check["rhs"]["hi"],
                check["margin"],
            ));
        }
    }
    out
}

/// Order-preserving threaded batch solver.
pub struct ThreadedSolver {
    pub jobs: usize,
}

impl BatchSolver for ThreadedSolver {
    fn solve_batch(
        &self,
        items: &[(Graph, f64)],
    ) -> specsat_core::Result<Vec<SpectralResult>> {
        let workers = self.jobs.min(items.len()).max(1);
        if workers <= 1 {
            return SequentialSolver.solve_batch(items);
        }
        let next = AtomicUsize::new(0);
        let slots: Vec<Mutex<Option<specsat_core::Result<SpectralResult>>>> =
            items.iter().map(|_| Mutex::new(None)).collect();
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= items.len() {
                        break;
                    }
                    let (g, tol) = &items[i];
                    let result = spectral_radius(g, *tol);
                    *slots[i].lock().expect("poisoned slot") = Some(result);
                });
            }
        });
        slots
            .into_iter()
            .map(|m| m.into_inner().expect("poisoned slot").expect("worker filled slot"))
            .collect()
    }
}

/// Picks a solver honoring the worker cap.
pub fn solver_for(jobs: usize) -> Box<dyn BatchSolver> {
    if jobs <= 1 {
        Box::new(SequentialSolver)
    } else {
        Box::new(ThreadedSolver { jobs })
    }
}

/// Named pattern or raw graph6: cliques `K3..K6`, odd cycles `C5/C7/C9`,
/// books `B2/B3/B4`, wheels `W5/W7`, else a graph6 line.
pub fn pattern_by_name(name: &str) -> Result<Pattern, CoreError> {
    let g = match name {
        "K3" => Graph::complete(3),
        "K4" => Graph::complete(4),
        "K5" => Graph::complete(5),
        "K6" => Graph::complete(6),
        "C5" => Graph::cycle(5),
        "C7" => Graph::cycle(7),
        "C9" => Graph::cycle(9),
        "B2" => Graph::book(2),
        "B3" => Graph::book(3),
        "B4" => Graph::book(4),
        "W5" => Graph::wheel(5),
        "W7" => Graph::wheel(7),
        other => parse_graph6(other)?,
    };
    analyze_pattern(&g)
}

/// Sidecar JSON for a family member.
#[derive(Debug, Serialize)]
pub struct SidecarOut<'a> {
    pub base_sizes: &'a [usize],
    pub parts: &'a [Vec<usize>],
    pub alpha1: usize,
    pub alpha2: usize,
}

pub fn sidecar_json(pg: &PartitionedGraph) -> String {
    serde_json::to_string(&SidecarOut {
        base_sizes: pg.base_sizes(),
        parts: pg.parts(),
        alpha1: pg.alpha1(),
        alpha2: pg.alpha2(),
    })
    .expect("sidecar serialization is infallible")
}

/// Reads graph6 lines from a file or stdin (`-`).
pub fn read_graph6_input(input: &str) -> Result<Vec<Graph>, String> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("cannot read stdin: {e}"))?;
        buf
    } else {
        fs::read_to_string(input).map_err(|e| format!("cannot read {input}: {e}"))?
    };
    let mut graphs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| format!("line {}: {e}", lineno + 1))?;
        graphs.push(g);
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use specsat_core::harness::{verify_l_vs_t, SequentialSolver};

    #[test]
    fn config_roundtrip_and_defaults() {
        let c = Config::default();
        assert_eq!(c.config_version, 1);
        let json = serde_json::to_string(&c).unwrap();
        let back: Config = serde_json::from_str(&json).unwrap();
        assert_eq!(back.tol, c.tol);
        // unknown fields are rejected
        assert!(serde_json::from_str::<Config>("{\"nope\": 1}").is_err());
    }

    #[test]
    fn report_body_strips_wallclock() {
        let mut rep = verify_l_vs_t(200, 2, 1, 1e-9, 0.05).unwrap();
        rep.wallclock_ms = 1234;
        let with = report_to_json(&rep);
        assert!(with.contains("wallclock_ms"));
        let body = report_body(&with).unwrap();
        assert!(!body.contains("wallclock_ms"));
    }

    #[test]
    fn threaded_solver_matches_sequential() {
        let graphs: Vec<(Graph, f64)> = (2..10)
            .map(|k| (Graph::complete_multipartite(&[k, k - 1]).unwrap(), 1e-10))
            .collect();
        let seq = SequentialSolver.solve_batch(&graphs).unwrap();
        let par = ThreadedSolver { jobs: 4 }.solve_batch(&graphs).unwrap();
        for (a, b) in seq.iter().zip(&par) {
            assert_eq!(a.interval, b.interval);
        }
    }

    #[test]
    fn patterns_by_name() {
        assert_eq!(pattern_by_name("K4").unwrap().chromatic_number(), 4);
        assert_eq!(pattern_by_name("C5").unwrap().chromatic_number(), 3);
        assert_eq!(pattern_by_name("W5").unwrap().chromatic_number(), 4);
        assert!(pattern_by_name("Bw").is_ok()); // graph6 K_3
        assert!(pattern_by_name("!!").is_err());
    }
}
