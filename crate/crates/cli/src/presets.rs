//! Named parameter sets reproducing the reference figures.
//!
//! The transverse couplings of several sets violate the X-state positivity
//! conditions; the closed forms depend on `c_i^2` only, so the curves are
//! still well defined. Oracle cells use a physical sign pattern when one
//! exists.

pub struct Preset {
    pub name: &'static str,
    pub description: &'static str,
    pub values: &'static [(&'static str, &'static str)],
}

const T_LOG: (&str, &str) = ("T", "0.01:100:200");

pub const PRESETS: &[Preset] = &[
    Preset {
        name: "fig1-red",
        description: "A-I MIN vs T, case i, c = (1, 0.9, 0.5)",
        values: &[("c1", "1"), ("c2", "0.9"), ("c3", "0.5"), T_LOG, ("sides", "AI")],
    },
    Preset {
        name: "fig1-blue",
        description: "A-I MIN vs T, sudden change, c = (0.9, 0.85, 1)",
        values: &[("c1", "0.9"), ("c2", "0.85"), ("c3", "1"), T_LOG, ("sides", "AI")],
    },
    Preset {
        name: "fig2",
        description: "A-I sudden-change temperature vs c1 at c3 = 0.9 (t_sc column)",
        values: &[("c1", "0.64:0.89:26"), ("c2", "1"), ("c3", "0.9"), ("T", "1"), ("sides", "AI")],
    },
    Preset {
        name: "fig3",
        description: "A-I MIN over the (c1, c2) plane at c3 = 0 for T = 0.1, 1, 20",
        values: &[("c1", "0:1:21"), ("c2", "0:1:21"), ("c3", "0"), ("T", "0.1,1,20"), ("sides", "AI")],
    },
    Preset {
        name: "fig4",
        description: "Werner states: Bmax and MIN vs T",
        values: &[("werner", "0.2,0.4,0.6,0.8,1"), T_LOG, ("sides", "AI"), ("measures", "N,Bmax")],
    },
    Preset {
        name: "fig5",
        description: "Werner states: geometric discord and MIN vs T",
        values: &[("werner", "0.2,0.4,0.6,0.8,1"), T_LOG, ("sides", "AI"), ("measures", "N,D")],
    },
    Preset {
        name: "fig6-red",
        description: "A-II MIN vs T, c = (1, 0.9, 0.5)",
        values: &[("c1", "1"), ("c2", "0.9"), ("c3", "0.5"), T_LOG, ("sides", "AII")],
    },
    Preset {
        name: "fig6-blue",
        description: "A-II MIN vs T, sudden change, c = (0.9, 0.55, 1)",
        values: &[("c1", "0.9"), ("c2", "0.55"), ("c3", "1"), T_LOG, ("sides", "AII")],
    },
    Preset {
        name: "fig7",
        description: "A-II sudden-change temperature vs c1 at c3 = 0.9 (t_sc column)",
        values: &[("c1", "0.02:0.62:31"), ("c2", "1"), ("c3", "0.9"), ("T", "1"), ("sides", "AII")],
    },
    Preset {
        name: "fig8-aii",
        description: "A-II MIN over the (c1, c2) plane at c3 = 0 for T = inf, 2, 1",
        values: &[("c1", "0:1:21"), ("c2", "0:1:21"), ("c3", "0"), ("T", "1,2,inf"), ("sides", "AII")],
    },
    Preset {
        name: "fig8-red",
        description: "N_AI + N_AII vs T, constant regime, c = (1, 0.9, 0.5)",
        values: &[("c1", "1"), ("c2", "0.9"), ("c3", "0.5"), T_LOG, ("sides", "SUM"), ("measures", "N")],
    },
    Preset {
        name: "fig8-blue",
        description: "N_AI + N_AII vs T, decreasing then constant, c = (0.9, 0.85, 1)",
        values: &[("c1", "0.9"), ("c2", "0.85"), ("c3", "1"), T_LOG, ("sides", "SUM"), ("measures", "N")],
    },
    Preset {
        name: "fig8-yellow",
        description: "N_AI + N_AII vs T, fast then slow, c = (0.9, 0.5, 1)",
        values: &[("c1", "0.9"), ("c2", "0.5"), ("c3", "1"), T_LOG, ("sides", "SUM"), ("measures", "N")],
    },
];

pub fn find(name: &str) -> Option<&'static Preset> {
    PRESETS.iter().find(|p| p.name == name)
}

pub fn names() -> Vec<&'static str> {
    PRESETS.iter().map(|p| p.name).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::settings::DEFAULTS;

    #[test]
    fn names_are_unique_and_keys_known() {
        let mut seen = names();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), PRESETS.len());
        for p in PRESETS {
            for (k, _) in p.values {
                assert!(DEFAULTS.iter().any(|(d, _)| d == k), "{}: {k}", p.name);
            }
        }
    }
}
