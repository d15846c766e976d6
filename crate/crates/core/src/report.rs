use serde::Serialize;

/// Worst residual observed for one law over a sample.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LawResidual {
    pub law: &'static str,
    pub max_residual: f64,
    pub samples: usize,
}

/// Per-law worst-case residuals, in the order the laws were first recorded.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct AxiomReport {
    pub laws: Vec<LawResidual>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers a law with no samples so it appears even when the sample
    /// set is empty.
    pub fn declare(&mut self, law: &'static str) {
        self.entry(law);
    }

    /// Records one residual; NaN is treated as an infinite failure.
    pub fn record(&mut self, law: &'static str, residual: f64) {
        let residual = if residual.is_nan() {
            f64::INFINITY
        } else {
            residual
        };
        let entry = self.entry(law);
        entry.samples += 1;
        if residual > entry.max_residual {
            entry.max_residual = residual;
        }
    }

    fn entry(&mut self, law: &'static str) -> &mut LawResidual {
        let idx = match self.laws.iter().position(|l| l.law == law) {
            Some(i) => i,
            None => {
                self.laws.push(LawResidual {
                    law,
                    max_residual: 0.0,
                    samples: 0,
                });
                self.laws.len() - 1
            }
        };
        &mut self.laws[idx]
    }

    pub fn max_residual(&self, law: &str) -> Option<f64> {
        self.laws
            .iter()
            .find(|l| l.law == law)
            .map(|l| l.max_residual)
    }

    pub fn worst(&self) -> f64 {
        self.laws.iter().map(|l| l.max_residual).fold(0.0, f64::max)
    }

    pub fn failures(&self, tol: f64) -> Vec<&LawResidual> {
        self.laws
            .iter()
            .filter(|l| l.max_residual.is_nan() || l.max_residual >= tol)
            .collect()
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.failures(tol).is_empty()
    }

    pub fn merge(&mut self, other: AxiomReport) {
        for l in other.laws {
            let entry = self.entry(l.law);
            entry.samples += l.samples;
            entry.max_residual = entry.max_residual.max(l.max_residual);
        }
    }
}
