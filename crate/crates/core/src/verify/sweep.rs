use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::conformality::{
    conformality_check, petal_width, DEFAULT_CONFORMALITY_SAMPLES, DEFAULT_EPSILON,
    DEGENERACY_THRESHOLD,
};
use crate::error::{Error, Result};
use crate::maps::MapFamily;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepOptions {
    pub epsilon: f64,
    pub samples: usize,
    pub width_samples: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            epsilon: DEFAULT_EPSILON,
            samples: DEFAULT_CONFORMALITY_SAMPLES,
            width_samples: 1024,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub alpha: f64,
    pub beta: f64,
    pub winding: Option<i64>,
    pub conformal: bool,
    pub degenerate: bool,
    pub width: Option<f64>,
    pub boundary_turns: Option<i64>,
    pub error: Option<String>,
}

/// Conformality and degeneracy over an `(α, β)` grid, `α`-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub alphas: Vec<f64>,
    pub betas: Vec<f64>,
    pub options: SweepOptions,
    pub entries: Vec<SweepEntry>,
}

impl SweepResult {
    pub fn get(&self, i: usize, j: usize) -> &SweepEntry {
        &self.entries[i * self.betas.len() + j]
    }

    /// CSV with header `alpha,beta,winding,conformal,degenerate,width,boundary_turns,error`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("alpha,beta,winding,conformal,degenerate,width,boundary_turns,error\n");
        let opt_i = |v: Option<i64>| v.map(|x| x.to_string()).unwrap_or_default();
        for e in &self.entries {
            s.push_str(&format!(
                "{:.16e},{:.16e},{},{},{},{},{},{}\n",
                e.alpha,
                e.beta,
                opt_i(e.winding),
                e.conformal,
                e.degenerate,
                e.width.map(|w| format!("{w:.6e}")).unwrap_or_default(),
                opt_i(e.boundary_turns),
                e.error.as_deref().unwrap_or("").replace([',', '\n'], ";"),
            ));
        }
        s
    }
}

fn node(alpha: f64, beta: f64, opts: &SweepOptions) -> SweepEntry {
    let mut e = SweepEntry {
        alpha,
        beta,
        winding: None,
        conformal: false,
        degenerate: false,
        width: None,
        boundary_turns: None,
        error: None,
    };
    let family = match MapFamily::two_petal(alpha, beta) {
        Ok(f) => f,
        Err(err) => {
            e.error = Some(err.to_string());
            return e;
        }
    };
    let mut errors = Vec::new();
    match petal_width(&family, opts.width_samples) {
        Ok(w) => {
            e.width = Some(w);
            e.degenerate = w < DEGENERACY_THRESHOLD;
        }
        Err(err) => errors.push(err.to_string()),
    }
    match conformality_check(&family, opts.epsilon, opts.samples) {
        Ok(c) => {
            e.winding = Some(c.winding);
            e.conformal = c.ok;
            e.boundary_turns = Some(c.boundary_turns);
        }
        Err(err) => errors.push(err.to_string()),
    }
    if !errors.is_empty() {
        e.error = Some(errors.join("; "));
    }
    e
}

/// Runs the two-petal conformality and degeneracy checks at every node.
/// Node failures are recorded in the entry and do not stop the sweep.
pub fn sweep(alphas: &[f64], betas: &[f64], options: SweepOptions) -> Result<SweepResult> {
    if alphas.is_empty() || betas.is_empty() {
        return Err(Error::invalid("grid", "grids must be non-empty"));
    }
    let nodes: Vec<(f64, f64)> = alphas
        .iter()
        .flat_map(|&a| betas.iter().map(move |&b| (a, b)))
        .collect();
    let entries = nodes.par_iter().map(|&(a, b)| node(a, b, &options)).collect();
    Ok(SweepResult {
        alphas: alphas.to_vec(),
        betas: betas.to_vec(),
        options,
        entries,
    })
}
