//! Parameter sweeps rendered as CSV.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use unruh_min::correlations::{self, Branch, MeasurementSearch};
use unruh_min::dynamics::{classify, sum_min, Side};
use unruh_min::states::{Couplings, XStateParams};
use unruh_min::unruh::{build_tripartite, closed_form_ai, closed_form_aii, reduce_ai, reduce_aii, UnruhPoint};

use crate::format::{cell, sig12};
use crate::settings::{parse_range, Settings};
use crate::CliError;

pub const HEADER: &str = "c1,c2,c3,w,T,side,N,D,Bmax,regime,t_sc,method,oracle_delta";

/// A single reduction, or `N_AI + N_AII`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Target {
    AI,
    AII,
    Sum,
}

impl Target {
    pub fn as_str(&self) -> &'static str {
        match self {
            Target::AI => "AI",
            Target::AII => "AII",
            Target::Sum => "SUM",
        }
    }
}

impl FromStr for Target {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s.trim().to_ascii_uppercase().as_str() {
            "AI" => Ok(Target::AI),
            "AII" => Ok(Target::AII),
            "SUM" => Ok(Target::Sum),
            _ => Err(CliError::Usage(format!("unknown side `{s}` (AI, AII or SUM)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Measures {
    pub n: bool,
    pub d: bool,
    pub bmax: bool,
}

impl FromStr for Measures {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let mut m = Measures { n: false, d: false, bmax: false };
        for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
            match item.to_ascii_lowercase().as_str() {
                "n" | "min" => m.n = true,
                "d" | "discord" => m.d = true,
                "bmax" | "chsh" => m.bmax = true,
                _ => return Err(CliError::Usage(format!("unknown measure `{item}` (N, D, Bmax)"))),
            }
        }
        Ok(m)
    }
}

/// Everything computed at one `(c, w, T, target)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Evaluation {
    pub n: f64,
    pub d: Option<f64>,
    pub bmax: Option<f64>,
    pub branch: Option<Branch>,
    pub regime: &'static str,
    pub boundary: bool,
    pub t_sc: Option<f64>,
    /// `|N_variational - N_closed|` on a physical sign pattern.
    pub oracle_delta: Option<f64>,
    /// Oracle requested but no sign pattern of `c` is a state.
    pub oracle_skipped: bool,
}

impl Evaluation {
    pub fn regime_label(&self) -> String {
        if self.boundary {
            format!("{}(boundary)", self.regime)
        } else {
            self.regime.to_string()
        }
    }

    pub fn method(&self) -> &'static str {
        if self.oracle_delta.is_some() {
            "closed_form+variational"
        } else {
            "closed_form"
        }
    }
}

fn variational(p: &XStateParams, u: &UnruhPoint, side: Side) -> Result<f64, CliError> {
    let tri = build_tripartite(p, u);
    let rho = match side {
        Side::AI => reduce_ai(&tri)?,
        Side::AII => reduce_aii(&tri)?,
    };
    Ok(correlations::min_variational(&rho, &MeasurementSearch::default())?)
}

pub fn evaluate(c: &Couplings, u: &UnruhPoint, target: Target, oracle: bool) -> Result<Evaluation, CliError> {
    let pattern = if oracle { c.physical_sign_pattern() } else { None };
    let oracle_skipped = oracle && pattern.is_none();
    let side = match target {
        Target::AI => Side::AI,
        Target::AII => Side::AII,
        Target::Sum => {
            let s = sum_min(c, u);
            let oracle_delta = match &pattern {
                Some(p) => Some((variational(p, u, Side::AI)? + variational(p, u, Side::AII)? - s.value).abs()),
                None => None,
            };
            return Ok(Evaluation {
                n: s.value,
                d: None,
                bmax: None,
                branch: None,
                regime: s.regime.as_str(),
                boundary: false,
                t_sc: s.t_sc,
                oracle_delta,
                oracle_skipped,
            });
        }
    };
    let bloch = match side {
        Side::AI => closed_form_ai(c, u),
        Side::AII => closed_form_aii(c, u),
    };
    let r = correlations::report(&bloch);
    let label = classify(c, side);
    let oracle_delta = match &pattern {
        Some(p) => Some((variational(p, u, side)? - r.n).abs()),
        None => None,
    };
    Ok(Evaluation {
        n: r.n,
        d: Some(r.d),
        bmax: Some(r.bmax),
        branch: Some(r.branch),
        regime: label.case.as_str(),
        boundary: label.boundary,
        t_sc: label.t_sc(u.w()),
        oracle_delta,
        oracle_skipped,
    })
}

/// A fully parsed sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub couplings: Vec<Couplings>,
    pub w: f64,
    pub temperatures: Vec<f64>,
    pub targets: Vec<Target>,
    pub measures: Measures,
    pub oracle: bool,
}

impl SweepSpec {
    pub fn from_settings(s: &Settings) -> Result<Self, CliError> {
        let couplings = if s.get("werner").is_empty() {
            let c1 = parse_range(s.get("c1"), false)?;
            let c2 = parse_range(s.get("c2"), false)?;
            let c3 = parse_range(s.get("c3"), false)?;
            let mut out = Vec::with_capacity(c1.len() * c2.len() * c3.len());
            for &a in &c1 {
                for &b in &c2 {
                    for &c in &c3 {
                        out.push(Couplings::new(a, b, c)?);
                    }
                }
            }
            out
        } else {
            parse_range(s.get("werner"), false)?
                .into_iter()
                .map(|a| Couplings::new(a, -a, a))
                .collect::<Result<_, _>>()?
        };
        let log = match s.get("t_scale") {
            "log" => true,
            "linear" => false,
            other => return Err(CliError::Usage(format!("t_scale must be log or linear, got `{other}`"))),
        };
        let w = crate::parse_number(s.get("w"))?;
        let temperatures = parse_range(s.get("T"), log)?;
        for &t in &temperatures {
            UnruhPoint::new(w, t)?;
        }
        let mut targets = s.get("sides").split(',').map(str::parse).collect::<Result<Vec<Target>, _>>()?;
        targets.sort();
        targets.dedup();
        let oracle = match s.get("oracle") {
            "true" | "1" | "yes" => true,
            "false" | "0" | "no" => false,
            other => return Err(CliError::Usage(format!("oracle must be true or false, got `{other}`"))),
        };
        Ok(Self { couplings, w, temperatures, targets, measures: s.get("measures").parse()?, oracle })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub c: Couplings,
    pub w: f64,
    pub temperature: f64,
    pub target: Target,
    pub eval: Evaluation,
}

fn row_order(a: &(Target, f64, [f64; 3]), b: &(Target, f64, [f64; 3])) -> Ordering {
    a.0.cmp(&b.0)
        .then(a.1.total_cmp(&b.1))
        .then_with(|| a.2.iter().zip(&b.2).map(|(x, y)| x.total_cmp(y)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal))
}

/// Evaluates every grid point on the current rayon pool. Row order depends
/// only on the spec: side, then temperature, then couplings.
pub fn run(spec: &SweepSpec) -> Result<Vec<Row>, CliError> {
    let mut jobs = Vec::new();
    for &target in &spec.targets {
        for &t in &spec.temperatures {
            for c in &spec.couplings {
                jobs.push((target, t, c.as_array()));
            }
        }
    }
    jobs.sort_by(row_order);
    jobs.dedup();
    jobs.par_iter()
        .map(|&(target, t, c)| {
            let c = Couplings::new(c[0], c[1], c[2])?;
            let u = UnruhPoint::new(spec.w, t)?;
            let eval = evaluate(&c, &u, target, spec.oracle)?;
            Ok(Row { c, w: spec.w, temperature: t, target, eval })
        })
        .collect()
}

/// CSV with `#` provenance lines above the header.
pub fn render_csv(settings: &Settings, spec: &SweepSpec, rows: &[Row]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# unruh-min sweep {}", env!("CARGO_PKG_VERSION"));
    if let Some(p) = settings.preset() {
        let _ = writeln!(out, "# preset = {p}");
    }
    for (k, v, src) in settings.entries() {
        let _ = writeln!(out, "# {k} = {v} ({src})");
    }
    let mut skipped: Vec<String> = rows
        .iter()
        .filter(|r| r.eval.oracle_skipped)
        .map(|r| {
            let [a, b, c] = r.c.as_array();
            format!("({},{},{})", sig12(a), sig12(b), sig12(c))
        })
        .collect();
    skipped.sort();
    skipped.dedup();
    for c in skipped {
        let _ = writeln!(out, "# skipped oracle at c = {c}: no sign pattern is a physical state");
    }
    out.push_str(HEADER);
    out.push('\n');
    let m = spec.measures;
    for r in rows {
        let [a, b, c] = r.c.as_array();
        let e = &r.eval;
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            sig12(a),
            sig12(b),
            sig12(c),
            sig12(r.w),
            sig12(r.temperature),
            r.target.as_str(),
            cell(m.n.then_some(e.n)),
            cell(e.d.filter(|_| m.d)),
            cell(e.bmax.filter(|_| m.bmax)),
            e.regime_label(),
            cell(e.t_sc),
            e.method(),
            cell(e.oracle_delta),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn spec_for(preset: &str) -> (Settings, SweepSpec) {
        let s = Settings::resolve(Some(preset), None, &BTreeMap::new()).unwrap();
        let spec = SweepSpec::from_settings(&s).unwrap();
        (s, spec)
    }

    #[test]
    fn every_preset_parses() {
        for name in crate::presets::names() {
            let (_, spec) = spec_for(name);
            assert!(!spec.couplings.is_empty() && !spec.temperatures.is_empty(), "{name}");
        }
    }

    #[test]
    fn rows_are_sorted() {
        let mut flags = BTreeMap::new();
        flags.insert("T".to_string(), "inf,1,0.5".to_string());
        flags.insert("c1".to_string(), "0.5,0.1".to_string());
        let s = Settings::resolve(None, None, &flags).unwrap();
        let rows = run(&SweepSpec::from_settings(&s).unwrap()).unwrap();
        assert_eq!(rows.len(), 3 * 3 * 2);
        assert_eq!(rows[0].target, Target::AI);
        assert_eq!((rows[0].temperature, rows[0].c.c1()), (0.5, 0.1));
        assert_eq!(rows[5].temperature, f64::INFINITY);
        assert_eq!(rows.last().unwrap().target, Target::Sum);
    }

    #[test]
    fn csv_shape() {
        let (s, spec) = spec_for("fig8-blue");
        let csv = render_csv(&s, &spec, &run(&spec).unwrap());
        let mut lines = csv.lines().skip_while(|l| l.starts_with('#'));
        assert_eq!(lines.next(), Some(HEADER));
        let first: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(first.len(), 13);
        assert_eq!((first[5], first[7], first[8], first[9]), ("SUM", "", "", "b"));
    }

    #[test]
    fn oracle_skips_unphysical() {
        let c = Couplings::new(0.9, 0.85, 1.0).unwrap();
        let u = UnruhPoint::new(1.0, 1.0).unwrap();
        let e = evaluate(&c, &u, Target::AI, true).unwrap();
        assert!(e.oracle_skipped && e.oracle_delta.is_none());
        let c = Couplings::new(0.5, -0.3, 0.2).unwrap();
        for target in [Target::AI, Target::AII, Target::Sum] {
            let e = evaluate(&c, &u, target, true).unwrap();
            assert!(e.oracle_delta.unwrap() < 1e-8, "{target:?}");
        }
    }

    #[test]
    fn target_parsing() {
        assert_eq!("sum".parse::<Target>().unwrap(), Target::Sum);
        assert!("AIII".parse::<Target>().is_err());
        assert!("N,x".parse::<Measures>().is_err());
    }
}
