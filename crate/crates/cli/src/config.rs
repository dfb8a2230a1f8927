//! Run configuration shared by the subcommands, and parsing of multicurve
//! arguments.

use std::path::PathBuf;

use clap::Args;
use serde::{Deserialize, Serialize};

use framed_core::framing::{framing_from_gsb, Framing};
use framed_core::surface_core::neighborhood::neighborhood_boundary;
use framed_core::{canonical_triangulation, NormalMulticurve, OrientedCurve, SurfaceType, Triangulation};

use crate::CliError;

pub const DEFAULT_SEED: u64 = 20_240_611;

#[derive(Args, Debug, Clone)]
pub struct SurfaceArgs {
    #[arg(long)]
    pub g: u32,
    #[arg(long)]
    pub n: u32,
    /// winding numbers of the punctures, comma separated
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub sig: Vec<i64>,
    /// (x_1, y_1, …, x_g, y_g) on the stored basis; zeros when omitted
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub values: Option<Vec<i64>>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

/// Everything that determines a run. Reports embed it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub surface: SurfaceType,
    pub values: Vec<i64>,
    pub signature: Vec<i64>,
    pub bounds: Vec<(String, u32)>,
    pub out: Option<PathBuf>,
    pub seed: u64,
}

impl RunConfig {
    pub fn new(s: &SurfaceArgs) -> Self {
        RunConfig {
            surface: SurfaceType { g: s.g, n: s.n },
            values: s.values.clone().unwrap_or_else(|| vec![0; 2 * s.g as usize]),
            signature: s.sig.clone(),
            bounds: Vec::new(),
            out: None,
            seed: s.seed,
        }
    }

    pub fn with_bound(mut self, name: &str, b: u32) -> Self {
        self.bounds.push((name.into(), b));
        self
    }

    pub fn build(&self) -> Result<(Triangulation, Framing), CliError> {
        let tri = canonical_triangulation(self.surface.g, self.surface.n).map_err(CliError::usage)?;
        let phi = framing_from_gsb(&tri, &self.values, &self.signature).map_err(CliError::usage)?;
        Ok((tri, phi))
    }
}

/// A multicurve given as JSON `{"surface":…,"weights":[…]}`, as `@path` to
/// such a file, or as basis names: `a1`, `b2`, and `c3` for the curve
/// cutting off the third handle.
pub fn parse_multicurve(tri: &Triangulation, arg: &str) -> Result<NormalMulticurve, CliError> {
    let arg = arg.trim();
    let text = if let Some(p) = arg.strip_prefix('@') {
        std::fs::read_to_string(p).map_err(|e| CliError::Usage(format!("cannot read {p}: {e}")))?
    } else {
        arg.to_string()
    };
    if text.trim_start().starts_with('{') {
        let m: NormalMulticurve = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("bad multicurve: {e}")))?;
        return m.rehydrate(tri).map_err(CliError::usage);
    }
    let mut curves: Vec<OrientedCurve> = Vec::new();
    for name in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        curves.push(named_curve(tri, name)?);
    }
    if curves.is_empty() {
        return Err(CliError::Usage("empty multicurve".into()));
    }
    NormalMulticurve::from_curves(tri, &curves).map_err(CliError::usage)
}

fn named_curve(tri: &Triangulation, name: &str) -> Result<OrientedCurve, CliError> {
    let bad = || CliError::Usage(format!("unknown curve name {name:?}; use a<i>, b<i> or c<i>"));
    let (kind, idx) = name.split_at(1);
    let i: usize = idx.parse().map_err(|_| bad())?;
    if i == 0 || i > tri.gsb().len() {
        return Err(bad());
    }
    let (a, b) = tri.gsb()[i - 1].clone();
    match kind {
        "a" => Ok(a),
        "b" => Ok(b),
        "c" => {
            let nb = neighborhood_boundary(tri, &[a, b]).map_err(CliError::usage)?;
            nb.boundary.single().cloned().map_err(CliError::usage)
        }
        _ => Err(bad()),
    }
}
