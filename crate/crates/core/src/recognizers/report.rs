use serde_json::{json, Value};

use super::{hamiltonian_hereditary_violation, is_chordal, is_complete, is_strongly_chordal};
use crate::caps::caps;
use crate::graphs::{find_induced, Certificate, Graph, Pattern};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlagValue {
    Yes,
    No,
    /// Not computed because the graph exceeds a size cap.
    Skipped,
}

impl FlagValue {
    fn from_bool(b: bool) -> Self {
        if b {
            FlagValue::Yes
        } else {
            FlagValue::No
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            FlagValue::Yes => Some(true),
            FlagValue::No => Some(false),
            FlagValue::Skipped => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    pub value: FlagValue,
    pub certificate: Option<Certificate>,
}

impl Flag {
    fn new(value: bool, certificate: Option<Certificate>) -> Flag {
        Flag {
            value: FlagValue::from_bool(value),
            certificate,
        }
    }

    fn skipped() -> Flag {
        Flag {
            value: FlagValue::Skipped,
            certificate: None,
        }
    }

    fn pattern_free(g: &Graph, p: Pattern) -> Flag {
        let hit = find_induced(p, g);
        Flag::new(hit.is_none(), hit)
    }

    fn to_json(&self) -> Value {
        let value = match self.value.as_bool() {
            Some(b) => json!(b),
            None => json!("skipped"),
        };
        json!({
            "value": value,
            "certificate": self.certificate.as_ref().map(Certificate::to_json),
        })
    }
}

/// Membership of one graph in every class the crate recognizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub chordal: Flag,
    pub strongly_chordal: Flag,
    pub claw_free: Flag,
    pub net_free: Flag,
    pub three_sun_free: Flag,
    pub unit_interval: Flag,
    pub hamiltonian_hereditary: Flag,
    pub complete: Flag,
    /// Largest k for which k-suns were searched.
    pub sun_cap: usize,
}

impl ClassReport {
    pub fn to_json(&self) -> Value {
        json!({
            "chordal": self.chordal.to_json(),
            "strongly_chordal": self.strongly_chordal.to_json(),
            "claw_free": self.claw_free.to_json(),
            "net_free": self.net_free.to_json(),
            "three_sun_free": self.three_sun_free.to_json(),
            "unit_interval": self.unit_interval.to_json(),
            "hamiltonian_hereditary": self.hamiltonian_hereditary.to_json(),
            "complete": self.complete.to_json(),
            "sun_cap": self.sun_cap,
        })
    }

    /// `(name, value)` pairs, for DOT annotations.
    pub fn summary(&self) -> Vec<(String, String)> {
        [
            ("chordal", &self.chordal),
            ("strongly_chordal", &self.strongly_chordal),
            ("claw_free", &self.claw_free),
            ("net_free", &self.net_free),
            ("three_sun_free", &self.three_sun_free),
            ("unit_interval", &self.unit_interval),
            ("hamiltonian_hereditary", &self.hamiltonian_hereditary),
            ("complete", &self.complete),
        ]
        .into_iter()
        .map(|(k, f)| {
            let v = f
                .value
                .as_bool()
                .map_or("skipped".to_string(), |b| b.to_string());
            (k.to_string(), v)
        })
        .collect()
    }

    /// The report's internal consistency: unit interval is exactly chordal
    /// plus the three forbidden patterns, and strongly chordal implies
    /// chordal.
    pub fn is_consistent(&self) -> bool {
        let b = |f: &Flag| f.value.as_bool();
        let ui = b(&self.chordal)
            .zip(b(&self.claw_free))
            .zip(b(&self.net_free))
            .zip(b(&self.three_sun_free));
        let ui_ok = match ui {
            Some((((c, cl), ne), su)) => b(&self.unit_interval) == Some(c && cl && ne && su),
            None => true,
        };
        let sc_ok = !(b(&self.strongly_chordal) == Some(true) && b(&self.chordal) == Some(false));
        ui_ok && sc_ok
    }
}

/// Runs every recognizer. Exponential flags above their caps are reported
/// as skipped rather than failing.
pub fn classify_graph(g: &Graph) -> ClassReport {
    let (chordal, chordal_cert) = is_chordal(g);
    let chordal = Flag::new(chordal, Some(chordal_cert));
    let strongly_chordal = match is_strongly_chordal(g) {
        Ok((v, c)) => Flag::new(v, Some(c)),
        Err(_) => Flag::skipped(),
    };
    let claw_free = Flag::pattern_free(g, Pattern::Claw);
    let net_free = Flag::pattern_free(g, Pattern::Net);
    let three_sun_free = Flag::pattern_free(g, Pattern::ThreeSun);
    let unit_interval = [&claw_free, &net_free, &three_sun_free]
        .into_iter()
        .find(|f| chordal.value == FlagValue::Yes && f.value == FlagValue::No)
        .unwrap_or(&chordal)
        .clone();
    let hamiltonian_hereditary = match hamiltonian_hereditary_violation(g) {
        Ok(v) => Flag::new(v.is_none(), None),
        Err(_) => Flag::skipped(),
    };
    ClassReport {
        complete: Flag::new(is_complete(g), None),
        chordal,
        strongly_chordal,
        claw_free,
        net_free,
        three_sun_free,
        unit_interval,
        hamiltonian_hereditary,
        sun_cap: caps().sun_k,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::CertificateKind;

    #[test]
    fn claw_row() {
        let r = classify_graph(&Graph::star(3));
        assert_eq!(r.chordal.value, FlagValue::Yes);
        assert_eq!(r.claw_free.value, FlagValue::No);
        assert_eq!(r.unit_interval.value, FlagValue::No);
        assert_eq!(
            r.unit_interval.certificate.as_ref().unwrap().kind,
            CertificateKind::Claw
        );
        assert!(r.is_consistent());
    }

    #[test]
    fn c4_and_net() {
        assert_eq!(
            classify_graph(&Graph::cycle(4)).chordal.value,
            FlagValue::No
        );
        let r = classify_graph(&Pattern::Net.graph());
        assert_eq!(r.chordal.value, FlagValue::Yes);
        assert_eq!(r.net_free.value, FlagValue::No);
        assert_eq!(r.hamiltonian_hereditary.value, FlagValue::No);
        let j = r.to_json();
        assert_eq!(j["net_free"]["value"], json!(false));
        assert_eq!(j["net_free"]["certificate"]["kind"], json!("net"));
    }

    #[test]
    fn large_graphs_skip_exponential_flags() {
        let r = classify_graph(&Graph::path(30));
        assert_eq!(r.hamiltonian_hereditary.value, FlagValue::Skipped);
        assert_eq!(r.strongly_chordal.value, FlagValue::Skipped);
        assert_eq!(r.unit_interval.value, FlagValue::Yes);
        assert_eq!(r.to_json()["strongly_chordal"]["value"], json!("skipped"));
    }
}
