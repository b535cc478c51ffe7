//! Reference bound curves in the entanglement–mixedness plane.
//!
//! Two one-parameter state families trace the curves other states are
//! compared against: the isotropic mixture at the maximal angle (swept over
//! its entangled range `γ ∈ [1/3, 1]`) and the maximally-entangled-mixed
//! boundary family over its full concurrence range `γ ∈ [0, 1]`.

use beamsplit::measures;
use beamsplit::states::{mems_bound_state, werner};
use beamsplit::Result;
use std::f64::consts::FRAC_PI_4;

use crate::format::fmt12;

pub const CSV_HEADER: &str = "gamma,eof,entropy_joint,linear_entropy";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundCurve {
    Werner,
    Mems,
}

impl BoundCurve {
    fn domain(self) -> (f64, f64) {
        match self {
            BoundCurve::Werner => (1.0 / 3.0, 1.0),
            BoundCurve::Mems => (0.0, 1.0),
        }
    }

    fn state(self, gamma: f64) -> Result<beamsplit::qlinalg::DensityMatrix4> {
        match self {
            BoundCurve::Werner => werner(gamma, FRAC_PI_4),
            BoundCurve::Mems => mems_bound_state(gamma),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct BoundRow {
    pub gamma: f64,
    pub eof: f64,
    pub entropy_joint: f64,
    pub linear_entropy: f64,
}

pub fn run_bounds(curve: BoundCurve, points: usize) -> Result<Vec<BoundRow>> {
    if points < 2 {
        return Err(beamsplit::Error::ParamOutOfRange(format!(
            "points = {points} < 2"
        )));
    }
    let (lo, hi) = curve.domain();
    let mut rows = Vec::with_capacity(points);
    for k in 0..points {
        let gamma = if k == 0 {
            lo
        } else if k == points - 1 {
            hi
        } else {
            lo + (hi - lo) * k as f64 / (points - 1) as f64
        };
        let rho = curve.state(gamma)?;
        rows.push(BoundRow {
            gamma,
            eof: measures::eof(&rho)?,
            entropy_joint: measures::entropy_joint(&rho),
            linear_entropy: measures::linear_entropy(&rho),
        });
    }
    Ok(rows)
}

pub fn to_csv(rows: &[BoundRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&fmt12(r.gamma));
        for v in [r.eof, r.entropy_joint, r.linear_entropy] {
            out.push(',');
            out.push_str(&fmt12(v));
        }
        out.push('\n');
    }
    out
}
