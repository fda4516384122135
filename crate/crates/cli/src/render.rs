//! `--pretty` renderings.

use std::fmt::Write;

use schubitope::diagram::Diagram;
use schubitope::polytope::{GeneralizedPermutahedron, LatticePointSet};
use schubitope::subset::Subset;
use schubitope::verify::SweepReport;

pub fn diagram(d: &Diagram) -> String {
    let mut s = d.to_string();
    let cols: Vec<String> = d.columns().iter().map(ToString::to_string).collect();
    let _ = writeln!(s, "columns: ({})", cols.join(", "));
    s
}

pub fn points(p: &LatticePointSet) -> String {
    p.points.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
}

/// One row per nonempty subset, sorted by size then lexicographically.
pub fn inequalities(gp: &GeneralizedPermutahedron) -> String {
    let n = gp.n();
    let full = Subset::full(n);
    let mut subsets: Vec<Subset> = Subset::nonempty(n).collect();
    subsets.sort_by_key(|s| (s.len(), s.to_vec()));
    let width = subsets.iter().map(|s| s.to_string().len()).max().unwrap_or(0);
    let mut out = String::new();
    for s in subsets {
        let rel = if s == full { "=" } else { "<=" };
        let _ = writeln!(out, "sum over {:<width$}  {rel:>2} {}", s.to_string(), gp.bound(s));
    }
    out
}

pub fn reports(rs: &[SweepReport]) -> String {
    let mut out = format!(
        "{:<28} {:>7} {:>7} {:>7} {:>10} {:>6}\n",
        "sweep", "total", "passed", "failed", "elapsed_ms", "seed"
    );
    for r in rs {
        let _ = writeln!(
            out,
            "{:<28} {:>7} {:>7} {:>7} {:>10} {:>6}",
            r.sweep,
            r.total,
            r.passed,
            r.failed.len(),
            r.elapsed_ms,
            r.seed
        );
        for w in &r.failed {
            let _ = writeln!(out, "  counterexample: {w}");
        }
    }
    out
}
