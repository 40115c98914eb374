//! Single-point JSON report.

use serde::{Serialize, Serializer};
use unruh_min::states::{Couplings, XStateParams};
use unruh_min::unruh::UnruhPoint;

use crate::sweep::{evaluate, Target};
use crate::CliError;

#[derive(Clone, Debug, PartialEq)]
pub struct PointRequest {
    pub c: [f64; 3],
    pub w: f64,
    pub temperature: f64,
    pub target: Target,
    /// Accept box-valid couplings that are not a state; only the closed
    /// forms are evaluated then.
    pub magnitudes: bool,
    pub oracle: bool,
}

fn finite_or_string<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    if x.is_finite() {
        s.serialize_f64(*x)
    } else {
        s.serialize_str(&crate::format::sig12(*x))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[allow(non_snake_case)]
pub struct PointReport {
    pub c: [f64; 3],
    pub w: f64,
    #[serde(serialize_with = "finite_or_string")]
    pub T: f64,
    pub side: &'static str,
    pub physical: bool,
    pub N: f64,
    pub D: Option<f64>,
    pub Bmax: Option<f64>,
    pub branch: Option<&'static str>,
    pub method: &'static str,
    pub regime: &'static str,
    pub boundary: bool,
    pub t_sc: Option<f64>,
    pub oracle_delta: Option<f64>,
}

pub fn point_report(req: &PointRequest) -> Result<PointReport, CliError> {
    let [a, b, c] = req.c;
    let couplings = if req.magnitudes { Couplings::new(a, b, c)? } else { XStateParams::new(a, b, c)?.couplings() };
    let u = UnruhPoint::new(req.w, req.temperature)?;
    let e = evaluate(&couplings, &u, req.target, req.oracle)?;
    Ok(PointReport {
        c: req.c,
        w: req.w,
        T: req.temperature,
        side: req.target.as_str(),
        physical: couplings.is_physical(),
        N: e.n,
        D: e.d,
        Bmax: e.bmax,
        branch: e.branch.map(|b| b.as_str()),
        method: e.method(),
        regime: e.regime,
        boundary: e.boundary,
        t_sc: e.t_sc,
        oracle_delta: e.oracle_delta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn req(c: [f64; 3], t: f64) -> PointRequest {
        PointRequest { c, w: 1.0, temperature: t, target: Target::AI, magnitudes: false, oracle: false }
    }

    #[test]
    fn werner_at_zero_temperature() {
        let r = point_report(&req([0.8, -0.8, 0.8], 0.0)).unwrap();
        assert!((r.N - 0.32).abs() < 1e-14);
        assert!(r.physical);
        assert_eq!(r.branch, Some("x_zero"));
    }

    #[test]
    fn strict_unless_magnitudes() {
        let mut r = req([0.9, 0.85, 1.0], 1.0);
        assert!(matches!(point_report(&r), Err(CliError::Unphysical(_))));
        r.magnitudes = true;
        let rep = point_report(&r).unwrap();
        assert!(!rep.physical);
        assert_eq!(rep.regime, "ii_sudden");
        r.c = [1.2, 0.0, 0.0];
        assert!(matches!(point_report(&r), Err(CliError::Unphysical(_))));
    }

    #[test]
    fn json_renders_infinity() {
        let r = point_report(&req([0.5, -0.5, 0.5], f64::INFINITY)).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains(r#""T":"inf""#), "{json}");
        assert!(json.starts_with(r#"{"c":[0.5,-0.5,0.5],"w":1.0,"#), "{json}");
    }
}
