//! The structure report printed by the command-line tool.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::dim_t;
use crate::center::center_report;
use crate::error::Result;
use crate::quotient::{wedderburn_blocks, Verdicts, verdicts};
use crate::radical::{nilpotent_index, rad_dim};
use crate::scheme::SchemeSpec;
use crate::verify::VerifySummary;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecEcho {
    pub sizes: Vec<u64>,
    pub characteristic: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSummary {
    pub signature: String,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub spec: SpecEcho,
    pub dim_t: u64,
    pub dim_z: usize,
    pub rad_dim: usize,
    pub nilpotent_index: usize,
    pub center_rad_dim: usize,
    pub center_nilpotent_index: usize,
    pub blocks: Vec<BlockSummary>,
    pub verdicts: Verdicts,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerifySummary>,
}

impl Report {
    pub fn build(spec: &SchemeSpec) -> Result<Report> {
        let center = center_report(spec)?;
        let blocks = wedderburn_blocks(spec)?
            .into_iter()
            .map(|b| BlockSummary {
                signature: b.signature.to_string(),
                size: b.size,
            })
            .collect();
        Ok(Report {
            spec: SpecEcho {
                sizes: spec.sizes().to_vec(),
                characteristic: spec.characteristic(),
            },
            // enumeration already succeeded, so n is within the cap
            dim_t: dim_t(spec) as u64,
            dim_z: center.dim,
            rad_dim: rad_dim(spec)?,
            nilpotent_index: nilpotent_index(spec),
            center_rad_dim: center.rad_dim,
            center_nilpotent_index: center.nilpotent_index,
            blocks,
            verdicts: verdicts(spec),
            verification: None,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let sizes: Vec<String> = self.spec.sizes.iter().map(u64::to_string).collect();
        let _ = writeln!(s, "sizes: {}", sizes.join(","));
        let _ = writeln!(s, "characteristic: {}", self.spec.characteristic);
        let _ = writeln!(s, "dim T: {}", self.dim_t);
        let _ = writeln!(s, "dim Z(T): {}", self.dim_z);
        let _ = writeln!(s, "dim Rad T: {}", self.rad_dim);
        let _ = writeln!(s, "nilpotent index of Rad T: {}", self.nilpotent_index);
        let _ = writeln!(s, "dim Rad Z(T): {}", self.center_rad_dim);
        let _ = writeln!(s, "nilpotent index of Rad Z(T): {}", self.center_nilpotent_index);
        let _ = writeln!(s, "blocks: {}", self.blocks.len());
        for b in &self.blocks {
            let _ = writeln!(s, "  signature {}: M_{}", b.signature, b.size);
        }
        let v = &self.verdicts;
        let _ = writeln!(
            s,
            "semisimple: {}, frobenius: {}, symmetric: {}",
            v.semisimple, v.frobenius, v.symmetric
        );
        if let Some(summary) = &self.verification {
            let _ = writeln!(s, "verification (base points {}, seed {}):", summary.base_points.join(" "), summary.seed);
            for c in &summary.checks {
                let mark = if c.passed { "ok" } else { "FAILED" };
                let _ = write!(s, "  {:<26} {:>8} {}", c.name, c.comparisons, mark);
                if !c.passed {
                    let _ = write!(s, ": {}", c.detail);
                }
                s.push('\n');
            }
        }
        s
    }
}
