//! Event logs of the radius sweeps.

use std::collections::HashSet;
use std::fmt;

/// Something an algorithm can deactivate. Endpoint `e` is side `e % 2`
/// (0 for a, 1 for b) of agent `e / 2`; in a standalone clustering run it
/// is simply datapoint `e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Token {
    Agent(usize),
    Endpoint(usize),
}

impl Token {
    pub fn endpoint(agent: usize, side: usize) -> Token {
        Token::Endpoint(2 * agent + side)
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Token::Agent(i) => write!(f, "agent{i}"),
            Token::Endpoint(e) if e % 2 == 0 => write!(f, "a{}", e / 2),
            Token::Endpoint(e) => write!(f, "b{}", e / 2),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TraceEvent {
    pub radius: f64,
    pub opened: Vec<usize>,
    pub deactivated: Vec<Token>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct RunTrace {
    pub events: Vec<TraceEvent>,
}

impl RunTrace {
    /// Appends an event unless it is empty.
    pub fn push(&mut self, radius: f64, opened: Vec<usize>, mut deactivated: Vec<Token>) {
        if opened.is_empty() && deactivated.is_empty() {
            return;
        }
        deactivated.sort_unstable();
        self.events.push(TraceEvent { radius, opened, deactivated });
    }

    pub fn opened(&self) -> Vec<usize> {
        self.events.iter().flat_map(|e| e.opened.iter().copied()).collect()
    }

    /// Radii never decrease and nothing is deactivated twice.
    pub fn is_well_formed(&self) -> bool {
        let mut seen = HashSet::new();
        let mut last = f64::NEG_INFINITY;
        for e in &self.events {
            if e.radius < last {
                return false;
            }
            last = e.radius;
            for t in &e.deactivated {
                if !seen.insert(*t) {
                    return false;
                }
            }
        }
        true
    }

    /// One line per event: `radius,opened,deactivated` with `;` inside
    /// fields.
    pub fn to_csv(&self, label: impl Fn(usize) -> String) -> String {
        let mut out = String::from("radius,opened,deactivated\n");
        for e in &self.events {
            let opened: Vec<String> = e.opened.iter().map(|&c| label(c)).collect();
            let gone: Vec<String> = e.deactivated.iter().map(|t| t.to_string()).collect();
            out.push_str(&format!("{},{},{}\n", fmt_real(e.radius), opened.join(";"), gone.join(";")));
        }
        out
    }
}

/// Formats an extended real, writing infinity as `inf`.
pub fn fmt_real(x: f64) -> String {
    if x == f64::INFINITY {
        "inf".to_string()
    } else {
        format!("{x}")
    }
}
