//! JSON and CSV renderings. Rationals are written as `"p/q"`, or `"p"` when
//! the denominator is one.

use serde_json::{json, Value};

use crate::ehrhart::{DilateCount, EhrhartResult};
use crate::equivalence::TransformCertificate;
use crate::polytope::Polytope;
use crate::scalar::format_ratio;
use crate::ExactScalar;

pub fn rational<T: ExactScalar>(v: &T) -> Value {
    Value::String(format_ratio(v))
}

/// `{"ambient", "vertices", "affine_dim", "simplex"}`; vertices are the
/// extreme points in input order.
pub fn polytope_json<T: ExactScalar>(p: &Polytope<T>) -> Value {
    let vertices: Vec<Vec<Value>> = p.vertices().iter().map(|v| v.iter().map(rational).collect()).collect();
    json!({
        "ambient": p.ambient_dim(),
        "vertices": vertices,
        "affine_dim": p.affine_dim(),
        "simplex": p.is_simplex(),
    })
}

pub fn ehrhart_json(r: &EhrhartResult) -> Value {
    let poly: Vec<Value> = r.poly.coeffs().iter().map(rational).collect();
    json!({
        "poly": poly,
        "hstar": r.hstar,
        "hollow": r.hollow,
        "gorenstein_index": r.gorenstein.index,
    })
}

/// Integer entries as JSON numbers.
pub fn certificate_json<T: ExactScalar>(c: &TransformCertificate<T>) -> Value {
    let int = |v: &T| -> Value {
        let b = v.to_big().to_integer();
        match i64::try_from(&b) {
            Ok(i) => json!(i),
            Err(_) => Value::String(b.to_string()),
        }
    };
    let m = c.matrix();
    let matrix: Vec<Vec<Value>> = (0..m.rows()).map(|i| m.row(i).iter().map(int).collect()).collect();
    let translation: Vec<Value> = c.translation().iter().map(int).collect();
    json!({ "matrix": matrix, "translation": translation })
}

/// `lambda,closed,interior` rows; each pair must share the same dilate.
pub fn count_table_csv<T: ExactScalar>(rows: &[(DilateCount<T>, DilateCount<T>)]) -> String {
    let mut out = String::from("lambda,closed,interior\n");
    for (closed, interior) in rows {
        debug_assert_eq!(closed.lam, interior.lam);
        out.push_str(&format!("{},{},{}\n", format_ratio(&closed.lam), closed.count, interior.count));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ehrhart::{ehrhart_result, Region};
    use crate::equivalence::simplex_to_lecturehall_certificate;
    use crate::polytope::{stack_simplex, stack_simplex_at_origin};
    use crate::scalar::parse_ratio;
    use crate::Rational;

    #[test]
    fn polytope_schema() {
        let p = stack_simplex::<Rational>(3).unwrap();
        let v = polytope_json(&p);
        assert_eq!(v["ambient"], 3);
        assert_eq!(v["affine_dim"], 2);
        assert_eq!(v["simplex"], true);
        assert_eq!(v["vertices"][0], json!(["2", "3", "1"]));
        let half = p.dilate(&parse_ratio("1/2").unwrap()).unwrap();
        assert_eq!(polytope_json(&half)["vertices"][0], json!(["1", "3/2", "1/2"]));
    }

    #[test]
    fn ehrhart_schema() {
        let r = ehrhart_result(&stack_simplex::<Rational>(4).unwrap(), 6).unwrap();
        assert_eq!(
            ehrhart_json(&r),
            json!({"poly": ["1", "3", "3", "1"], "hstar": [1, 4, 1], "hollow": true, "gorenstein_index": 2})
        );
    }

    #[test]
    fn certificate_schema() {
        let c = simplex_to_lecturehall_certificate::<Rational>(2).unwrap();
        assert_eq!(certificate_json(&c), json!({"matrix": [[-1, 0], [-1, -1]], "translation": [2, 5]}));
    }

    #[test]
    fn csv_table() {
        let p = stack_simplex_at_origin::<Rational>(3).unwrap();
        let rows: Vec<_> = ["0", "1/2", "5/2"]
            .iter()
            .map(|s| {
                let lam: Rational = parse_ratio(s).unwrap();
                (
                    DilateCount::compute(&p, lam.clone(), Region::Closed).unwrap(),
                    DilateCount::compute(&p, lam, Region::RelativeInterior).unwrap(),
                )
            })
            .collect();
        assert_eq!(count_table_csv(&rows), "lambda,closed,interior\n0,1,0\n1/2,2,0\n5/2,12,2\n");
    }
}
