//! The stencil JSON schema and scheme-name resolution.
//!
//! Stencil files carry rationals as `"p/q"` strings so golden files stay
//! exact: `{"r": 1, "c": ["-1/2", "0", "1/2"], "wave_speed": "1"}`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use semidisc::order::{max_order_stencil, Stencil};
use semidisc::pde::SchemeSpec;
use semidisc::rational::parse_rational;

use crate::CliError;

#[derive(Debug, Serialize, Deserialize)]
pub struct StencilFile {
    pub r: usize,
    pub c: Vec<String>,
    pub wave_speed: String,
}

impl StencilFile {
    pub fn from_stencil(stencil: &Stencil) -> Self {
        Self {
            r: stencil.radius(),
            c: stencil.coefficients().iter().map(|x| x.to_string()).collect(),
            wave_speed: stencil.wave_speed().to_string(),
        }
    }

    pub fn into_stencil(self) -> Result<Stencil, CliError> {
        let c = self
            .c
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        let speed = parse_rational(&self.wave_speed)?;
        Ok(Stencil::new(self.r, c, speed)?)
    }
}

pub fn load_stencil(path: &Path) -> Result<Stencil, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let file: StencilFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("invalid stencil file {}: {e}", path.display())))?;
    file.into_stencil()
}

/// A scheme plus its design spatial order (used for step-size rules).
pub struct ResolvedScheme {
    pub spec: SchemeSpec,
    pub order: Option<usize>,
    pub label: String,
}

/// Resolves a `--scheme` argument: a built-in name or a stencil JSON path.
pub fn resolve_scheme(name: &str) -> Result<ResolvedScheme, CliError> {
    let builtin = |spec: SchemeSpec, order: usize| ResolvedScheme {
        spec,
        order: Some(order),
        label: name.to_string(),
    };
    Ok(match name {
        "central2" => builtin(SchemeSpec::linear_stencil(&max_order_stencil(1)?), 2),
        "central4" => builtin(SchemeSpec::linear_stencil(&max_order_stencil(2)?), 4),
        "central6" => builtin(SchemeSpec::linear_stencil(&max_order_stencil(3)?), 6),
        "upwind1" => builtin(SchemeSpec::upwind_linear(1)?, 1),
        "upwind3" => builtin(SchemeSpec::upwind_linear(2)?, 3),
        "weno3" => builtin(SchemeSpec::weno(2)?, 3),
        "weno5" => builtin(SchemeSpec::weno(3)?, 5),
        other => {
            let path = Path::new(other);
            if !path.exists() {
                return Err(CliError::Usage(format!(
                    "unknown scheme {other:?}: not a built-in name and no such file"
                )));
            }
            let stencil = load_stencil(path)?;
            ResolvedScheme {
                order: stencil.order(),
                spec: SchemeSpec::linear_stencil(&stencil),
                label: other.to_string(),
            }
        }
    })
}
