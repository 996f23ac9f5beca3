use std::str::FromStr;

use stacksort_core::equivalence::lecture_hall_simplex;
use stacksort_core::polytope::{orbit_polytope, stack_simplex, unit_cube};
use stacksort_core::{permutations::tau, Error, Permutation, Result, VPolytope};

/// A polytope named on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolytopeSpec {
    Tau(usize),
    LectureHall(usize),
    Cube(usize),
    Point,
    Orbit(Permutation),
}

impl FromStr for PolytopeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "point" {
            return Ok(Self::Point);
        }
        let Some((kind, n)) = s.split_once(':') else {
            return s.parse().map(Self::Orbit);
        };
        let n: usize = n.trim().parse().map_err(|_| Error::OutOfRange(format!("bad size in {s:?}")))?;
        match kind.trim() {
            "tau" => Ok(Self::Tau(n)),
            "lecturehall" => Ok(Self::LectureHall(n)),
            "cube" => Ok(Self::Cube(n)),
            other => Err(Error::OutOfRange(format!("unknown builtin {other:?}"))),
        }
    }
}

impl PolytopeSpec {
    pub fn build(&self) -> Result<VPolytope> {
        match self {
            Self::Tau(n) => stack_simplex(*n),
            Self::LectureHall(n) => lecture_hall_simplex(*n),
            Self::Cube(n) => unit_cube(*n),
            Self::Point => VPolytope::from_int_points(&[vec![0]]),
            Self::Orbit(p) => Ok(orbit_polytope(p)),
        }
    }
}

/// `P − τ_n` with `n` the ambient dimension.
pub fn translate_by_tau(p: &VPolytope) -> Result<VPolytope> {
    p.translate(&-tau(p.ambient_dim())?.to_point())
}
