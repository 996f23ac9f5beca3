//! One row per permutation of `[n]`: how its sorting orbit sits in space.

use std::cmp::Ordering;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use stacksort_core::ehrhart::{count_lattice, Region};
use stacksort_core::permutations::all_permutations;
use stacksort_core::polytope::orbit_polytope;
use stacksort_core::{Error, Permutation, Rational};

use crate::{Outcome, EXIT_USAGE};

pub const COLUMNS: &str = "perm,index,orbit_size,affine_dim,simplex,normalized_volume,lattice_points_t1,hollow";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub perm: String,
    pub index: usize,
    pub orbit_size: usize,
    pub affine_dim: usize,
    pub simplex: bool,
    /// Only for simplices.
    pub normalized_volume: Option<u64>,
    pub lattice_points_t1: u64,
    /// `None` when the interior cannot be classified.
    pub hollow: Option<bool>,
}

impl Row {
    pub fn compute(perm: &Permutation) -> Result<Self, Error> {
        let orbit = perm.sort_orbit();
        let p = orbit_polytope::<Rational>(perm);
        let one = Rational::from_integer(1.into());
        let simplex = p.is_simplex();
        let normalized_volume = if simplex { p.normalized_volume()?.to_u64() } else { None };
        let hollow = match count_lattice(&p, &one, Region::RelativeInterior) {
            Ok(c) => Some(c == 0),
            Err(Error::UnclassifiedInside(_)) => None,
            Err(e) => return Err(e),
        };
        Ok(Self {
            perm: perm.to_string(),
            index: orbit.index(),
            orbit_size: orbit.steps().len(),
            affine_dim: p.affine_dim(),
            simplex,
            normalized_volume,
            lattice_points_t1: count_lattice(&p, &one, Region::Closed)?,
            hollow,
        })
    }

    fn csv(&self) -> String {
        let opt = |v: Option<String>| v.unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{}",
            self.perm,
            self.index,
            self.orbit_size,
            self.affine_dim,
            self.simplex,
            opt(self.normalized_volume.map(|v| v.to_string())),
            self.lattice_points_t1,
            opt(self.hollow.map(|h| h.to_string())),
        )
    }
}

/// Largest volume first (blank volumes last), then most lattice points,
/// then the permutation itself.
fn order(a: &Row, b: &Row) -> Ordering {
    let vol = match (a.normalized_volume, b.normalized_volume) {
        (Some(x), Some(y)) => y.cmp(&x),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => Ordering::Equal,
    };
    vol.then(b.lattice_points_t1.cmp(&a.lattice_points_t1)).then_with(|| a.perm.cmp(&b.perm))
}

pub fn explore(n: usize) -> Result<Vec<Row>, Error> {
    if !(2..=7).contains(&n) {
        return Err(Error::OutOfRange(format!("explore needs 2 <= n <= 7, got {n}")));
    }
    let mut rows = all_permutations(n).par_iter().map(Row::compute).collect::<Result<Vec<_>, _>>()?;
    rows.sort_by(order);
    Ok(rows)
}

pub fn to_csv(rows: &[Row]) -> String {
    let mut s = format!("{COLUMNS}\n");
    for r in rows {
        s.push_str(&r.csv());
        s.push('\n');
    }
    s
}

pub fn cmd_explore(n: usize, as_json: bool) -> Outcome {
    match explore(n) {
        Ok(rows) => {
            let stdout = if as_json {
                let mut s = serde_json::to_string_pretty(&rows).expect("rows serialize");
                s.push('\n');
                s
            } else {
                to_csv(&rows)
            };
            Outcome { stdout, stderr: String::new(), code: 0 }
        }
        Err(e @ Error::OutOfRange(_)) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: EXIT_USAGE },
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: crate::exit_code(&e) },
    }
}
