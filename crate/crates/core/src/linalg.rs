//! Dense linear algebra over an arbitrary [`Field`]: row reduction, kernels,
//! solving and span membership. Matrices are row-major `Vec<Vec<E>>`.

use crate::field::Field;

/// Reduces `rows` to reduced row echelon form in place and returns the pivot
/// columns. Zero rows are dropped.
pub fn rref<F: Field>(field: &F, rows: &mut Vec<Vec<F::Elem>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][col])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][col]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[col]) {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(x, &field.mul(&f, p));
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(field, &mut m, ncols).len()
}

/// A basis of `{ x : M x = 0 }` where `M` has `ncols` columns.
pub fn kernel<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> Vec<Vec<F::Elem>> {
    let mut m = rows.to_vec();
    let pivots = rref(field, &mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![field.zero(); ncols];
            v[fc] = field.one();
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = field.neg(&row[fc]);
            }
            v
        })
        .collect()
}

/// One solution of `M x = b`, if the system is consistent.
pub fn solve<F: Field>(
    field: &F,
    rows: &[Vec<F::Elem>],
    rhs: &[F::Elem],
    ncols: usize,
) -> Option<Vec<F::Elem>> {
    let mut aug: Vec<Vec<F::Elem>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(field, &mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![field.zero(); ncols];
    for (row, &pc) in aug.iter().zip(&pivots) {
        x[pc] = row[ncols].clone();
    }
    Some(x)
}

/// Transposes a list of column vectors into row-major form.
pub fn columns_to_rows<E: Clone>(cols: &[Vec<E>]) -> Vec<Vec<E>> {
    if cols.is_empty() {
        return Vec::new();
    }
    (0..cols[0].len())
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect()
}

pub fn in_span<F: Field>(field: &F, basis: &[Vec<F::Elem>], v: &[F::Elem]) -> bool {
    if basis.is_empty() {
        return v.iter().all(|x| field.is_zero(x));
    }
    solve(field, &columns_to_rows(basis), v, basis.len()).is_some()
}

/// A basis of the intersection of two subspaces given by bases.
pub fn intersect<F: Field>(
    field: &F,
    a: &[Vec<F::Elem>],
    b: &[Vec<F::Elem>],
) -> Vec<Vec<F::Elem>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let dim = a[0].len();
    // Solve sum x_i a_i - sum y_j b_j = 0 and map back through a.
    let mut cols: Vec<Vec<F::Elem>> = a.to_vec();
    cols.extend(b.iter().map(|v| v.iter().map(|x| field.neg(x)).collect()));
    let ker = kernel(field, &columns_to_rows(&cols), cols.len());
    let mut out: Vec<Vec<F::Elem>> = ker
        .iter()
        .map(|k| {
            let mut v = vec![field.zero(); dim];
            for (coef, av) in k.iter().zip(a) {
                for (slot, x) in v.iter_mut().zip(av) {
                    *slot = field.add(slot, &field.mul(coef, x));
                }
            }
            v
        })
        .collect();
    let pivots = rref(field, &mut out, dim);
    out.truncate(pivots.len());
    out
}
