use std::path::{Path, PathBuf};

use buchwald::buchwald::{build, BuchwaldSolution, ChiMode, PotentialCoefficients};
use buchwald::bvp::{BvpSolution, ProblemSpec, VerifyOptions};
use buchwald::{Material, ModalParams};
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::CliError;

/// A solution given directly by its separation constants and coefficients.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModalDoc {
    pub material: Material,
    pub params: ModalParams,
    #[serde(default)]
    pub coefficients: PotentialCoefficients,
    #[serde(default = "ChiMode::zero")]
    pub chi: ChiMode,
    /// Overrides the ψ⊥ weights of the two transverse terms.
    #[serde(default)]
    pub psi_weights: Option<[f64; 2]>,
}

/// Output of `solve`, read back for evaluation.
#[derive(Deserialize)]
struct SolvedDoc {
    solution: BuchwaldSolution,
}

/// Anything that determines a displacement field.
pub enum SolutionDoc {
    Problem(ProblemSpec),
    Solved(BuchwaldSolution),
    Modal(ModalDoc),
}

pub struct Source {
    pub path: PathBuf,
    pub text: String,
}

impl Source {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Ok(Self {
            path: path.to_path_buf(),
            text,
        })
    }

    pub fn parse<T: DeserializeOwned>(&self) -> Result<T, CliError> {
        serde_json::from_str(&self.text).map_err(|e| CliError::Parse {
            path: self.path.clone(),
            line: e.line(),
            column: e.column(),
            message: without_position(&e),
        })
    }
}

pub fn solution_doc(src: &Source) -> Result<SolutionDoc, CliError> {
    let value: serde_json::Value = src.parse()?;
    let Some(obj) = value.as_object() else {
        return Err(CliError::Input(format!(
            "{}: expected a JSON object",
            src.path.display()
        )));
    };
    // reparse from text so diagnostics keep their line and column
    Ok(if obj.contains_key("solution") {
        SolutionDoc::Solved(src.parse::<SolvedDoc>()?.solution)
    } else if obj.contains_key("problem") {
        SolutionDoc::Problem(src.parse()?)
    } else {
        SolutionDoc::Modal(src.parse()?)
    })
}

impl SolutionDoc {
    pub fn into_solution(self, opts: &VerifyOptions) -> Result<BuchwaldSolution, CliError> {
        match self {
            SolutionDoc::Problem(spec) => {
                let solved: BvpSolution = spec.solve(opts)?;
                Ok(solved.solution)
            }
            SolutionDoc::Solved(sol) => {
                sol.material.validate().map_err(|e| CliError::Input(e.to_string()))?;
                Ok(sol)
            }
            SolutionDoc::Modal(doc) => {
                let sol = build(&doc.material, &doc.params, &doc.coefficients, &doc.chi)
                    .map_err(|e| CliError::Input(e.to_string()))?;
                Ok(match doc.psi_weights {
                    Some([g1, g2]) => sol.with_psi_weights(g1, g2),
                    None => sol,
                })
            }
        }
    }
}

/// serde_json appends " at line L column C"; the caller reports it separately.
fn without_position(e: &serde_json::Error) -> String {
    let full = e.to_string();
    let suffix = format!(" at line {} column {}", e.line(), e.column());
    full.strip_suffix(&suffix).unwrap_or(&full).to_string()
}
