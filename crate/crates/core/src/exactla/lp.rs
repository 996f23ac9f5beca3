use super::{Matrix, Vector};
use crate::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

/// `coeffs · x  (≤ | = | ≥)  rhs` over free variables `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint<T> {
    pub coeffs: Vector<T>,
    pub rel: Relation,
    pub rhs: T,
}

impl<T: Scalar> Constraint<T> {
    pub fn new(coeffs: Vector<T>, rel: Relation, rhs: T) -> Self {
        Self { coeffs, rel, rhs }
    }

    pub fn holds_at(&self, x: &Vector<T>) -> bool {
        let lhs = self.coeffs.dot(x);
        match self.rel {
            Relation::Le => lhs <= self.rhs,
            Relation::Eq => lhs == self.rhs,
            Relation::Ge => lhs >= self.rhs,
        }
    }
}

/// Exact feasibility of a system of linear constraints.
pub fn lp_feasible<T: Scalar>(constraints: &[Constraint<T>]) -> bool {
    lp_feasible_point(constraints).is_some()
}

/// A feasible point, if any, found by phase-1 simplex with Bland's rule.
///
/// Variables are free; each is split as `x = x⁺ - x⁻`. Rows are normalised to
/// a nonnegative right-hand side, `≤` rows get a slack that starts basic, and
/// `=`/`≥` rows get an artificial variable. The sum of artificials is then
/// minimised; the system is feasible iff that minimum is zero.
pub fn lp_feasible_point<T: Scalar>(constraints: &[Constraint<T>]) -> Option<Vector<T>> {
    let nvars = constraints.first().map_or(0, |c| c.coeffs.len());
    assert!(
        constraints.iter().all(|c| c.coeffs.len() == nvars),
        "constraints must share a variable count"
    );
    if constraints.is_empty() {
        return Some(Vector::zeros(nvars));
    }

    let m = constraints.len();
    // Column layout: [x⁺ (nvars) | x⁻ (nvars) | slack/surplus (m) | artificial (m)].
    let slack0 = 2 * nvars;
    let art0 = slack0 + m;
    let ncols = art0 + m;
    let mut tab = Matrix::<T>::zeros(m + 1, ncols + 1);
    let mut basis = vec![0usize; m];
    let mut is_art_row = vec![false; m];

    for (i, c) in constraints.iter().enumerate() {
        let flip = c.rhs < T::zero();
        let sgn = if flip { -T::one() } else { T::one() };
        let rel = match (c.rel, flip) {
            (Relation::Le, true) => Relation::Ge,
            (Relation::Ge, true) => Relation::Le,
            (r, _) => r,
        };
        for j in 0..nvars {
            let a = sgn.clone() * c.coeffs[j].clone();
            tab[(i, nvars + j)] = -a.clone();
            tab[(i, j)] = a;
        }
        tab[(i, ncols)] = sgn * c.rhs.clone();
        match rel {
            Relation::Le => {
                tab[(i, slack0 + i)] = T::one();
                basis[i] = slack0 + i;
            }
            Relation::Ge => {
                tab[(i, slack0 + i)] = -T::one();
                tab[(i, art0 + i)] = T::one();
                basis[i] = art0 + i;
                is_art_row[i] = true;
            }
            Relation::Eq => {
                tab[(i, art0 + i)] = T::one();
                basis[i] = art0 + i;
                is_art_row[i] = true;
            }
        }
    }

    // Reduced costs of the phase-1 objective (sum of artificials).
    let obj = m;
    for i in (0..m).filter(|&i| is_art_row[i]) {
        for j in 0..=ncols {
            let v = tab[(obj, j)].clone() - tab[(i, j)].clone();
            tab[(obj, j)] = v;
        }
    }
    for i in (0..m).filter(|&i| is_art_row[i]) {
        tab[(obj, art0 + i)] = T::zero();
    }

    // Bland: lowest-index column with negative reduced cost enters.
    while let Some(enter) = (0..ncols).find(|&j| tab[(obj, j)] < T::zero()) {
        // Ratio test; ties broken by the lowest basic variable index.
        let mut leave: Option<(usize, T)> = None;
        for i in 0..m {
            let a = &tab[(i, enter)];
            if *a <= T::zero() {
                continue;
            }
            let ratio = tab[(i, ncols)].clone() / a.clone();
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // The phase-1 objective is bounded below by zero.
        let (row, _) = leave.expect("phase-1 problem is bounded");
        pivot(&mut tab, row, enter);
        basis[row] = enter;
    }

    if !tab[(obj, ncols)].is_zero() {
        return None;
    }
    let mut x: Vector<T> = Vector::zeros(nvars);
    for (i, &b) in basis.iter().enumerate() {
        if b < nvars {
            x[b] = x[b].clone() + tab[(i, ncols)].clone();
        } else if b < 2 * nvars {
            x[b - nvars] = x[b - nvars].clone() - tab[(i, ncols)].clone();
        }
    }
    Some(x)
}

fn pivot<T: Scalar>(tab: &mut Matrix<T>, row: usize, col: usize) {
    let width = tab.cols();
    let inv = T::one() / tab[(row, col)].clone();
    for j in 0..width {
        tab[(row, j)] = tab[(row, j)].clone() * inv.clone();
    }
    for i in 0..tab.rows() {
        if i == row || tab[(i, col)].is_zero() {
            continue;
        }
        let f = tab[(i, col)].clone();
        for j in 0..width {
            let v = tab[(i, j)].clone() - f.clone() * tab[(row, j)].clone();
            tab[(i, j)] = v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use proptest::prelude::*;

    fn c(coeffs: &[i64], rel: Relation, rhs: i64) -> Constraint<Rational> {
        Constraint::new(Vector::from_ints(coeffs), rel, Rational::from_int(rhs))
    }


    #[test]
    fn interval_examples() {
        assert!(lp_feasible(&[c(&[1], Relation::Ge, 0), c(&[1], Relation::Le, 1)]));
        assert!(!lp_feasible(&[c(&[1], Relation::Ge, 1), c(&[1], Relation::Le, 0)]));
        assert!(lp_feasible::<Rational>(&[]));
        assert!(!lp_feasible(&[c(&[0, 0], Relation::Eq, 1)]));
    }

    #[test]
    fn convex_combination_of_orbit() {
        // w ≥ 0, Σw = 1, Σ w_i v_i = (2,2,2) for v ∈ {231, 213, 123}.
        let verts = [[2, 3, 1], [2, 1, 3], [1, 2, 3]];
        let mut cs = Vec::new();
        for i in 0..3 {
            let mut e = [0; 3];
            e[i] = 1;
            cs.push(c(&e, Relation::Ge, 0));
        }
        cs.push(c(&[1, 1, 1], Relation::Eq, 1));
        for k in 0..3 {
            let row: Vec<i64> = verts.iter().map(|v| v[k]).collect();
            cs.push(c(&row, Relation::Eq, 2));
        }
        let w = lp_feasible_point(&cs).unwrap();
        assert!(cs.iter().all(|k| k.holds_at(&w)));
        // (3,3,3) is off the plane Σx = 6.
        let last = cs.len() - 1;
        cs[last] = c(&[1, 2, 3], Relation::Eq, 3);
        cs[last - 1] = c(&[3, 1, 2], Relation::Eq, 3);
        cs[last - 2] = c(&[2, 2, 1], Relation::Eq, 3);
        assert!(!lp_feasible(&cs));
    }

    /// Brute-force oracle: boxes the variables to make the region pointed,
    /// then tries every vertex candidate obtained by making `nvars` of the
    /// constraints tight.
    fn vertex_enumeration_feasible(cs: &[Constraint<Rational>], nvars: usize) -> bool {
        const BOX: i64 = 1000;
        let mut all = cs.to_vec();
        for j in 0..nvars {
            let mut e = vec![0; nvars];
            e[j] = 1;
            all.push(c(&e, Relation::Le, BOX));
            all.push(c(&e, Relation::Ge, -BOX));
        }
        let k = all.len();
        let mut idx: Vec<usize> = (0..nvars).collect();
        loop {
            let rows: Vec<Vec<Rational>> = idx.iter().map(|&i| all[i].coeffs.as_slice().to_vec()).collect();
            let a = Matrix::from_rows(rows).unwrap();
            let b: Vector<Rational> = idx.iter().map(|&i| all[i].rhs.clone()).collect();
            if let Ok(Some(x)) = a.solve(&b) {
                if all.iter().all(|con| con.holds_at(&x)) {
                    return true;
                }
            }
            // next combination
            let mut i = nvars;
            loop {
                if i == 0 {
                    return false;
                }
                i -= 1;
                if idx[i] < k - nvars + i {
                    idx[i] += 1;
                    for j in i + 1..nvars {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    fn system() -> impl Strategy<Value = (usize, Vec<Constraint<Rational>>)> {
        (2usize..=3).prop_flat_map(|nv| {
            let con = (proptest::collection::vec(-3i64..=3, nv), 0..3u8, -4i64..=4).prop_map(
                |(co, r, rhs)| {
                    let rel = [Relation::Le, Relation::Eq, Relation::Ge][r as usize];
                    c(&co, rel, rhs)
                },
            );
            (Just(nv), proptest::collection::vec(con, 1..=6))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn agrees_with_vertex_enumeration((nv, cs) in system()) {
            let got = lp_feasible_point(&cs);
            if let Some(x) = &got {
                prop_assert!(cs.iter().all(|k| k.holds_at(x)));
            }
            prop_assert_eq!(got.is_some(), vertex_enumeration_feasible(&cs, nv));
        }
    }
}
