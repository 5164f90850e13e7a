//! Dense linear algebra over GF(p): row echelon forms, kernels, intersections.

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime, so a^(p-2) is the inverse of a nonzero a.
    debug_assert!(!a.is_multiple_of(p));
    let (mut base, mut exp, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

#[inline]
fn axpy(dst: &mut [u32], coef: u32, src: &[u32], p: u32) {
    // dst -= coef * src
    if coef == 0 {
        return;
    }
    let c = (p - coef) as u64;
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = ((*d as u64 + c * s as u64) % p as u64) as u32;
    }
}

fn scale(row: &mut [u32], coef: u32, p: u32) {
    for x in row.iter_mut() {
        *x = ((*x as u64 * coef as u64) % p as u64) as u32;
    }
}

/// Reduced row-echelon form with zero rows removed.
pub(crate) fn rref(mut rows: Vec<Vec<u32>>, p: u32) -> Vec<Vec<u32>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][col], p);
        scale(&mut rows[rank], inv, p);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank {
                let coef = row[col];
                axpy(row, coef, &pivot_row, p);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows
}

pub(crate) fn pivot_columns(rref_rows: &[Vec<u32>]) -> Vec<usize> {
    rref_rows
        .iter()
        .map(|r| r.iter().position(|&x| x != 0).expect("rref rows are nonzero"))
        .collect()
}

/// Residual of `v` after elimination against an RREF basis; zero iff `v` is in the span.
pub(crate) fn reduce(v: &[u32], rref_rows: &[Vec<u32>], p: u32) -> Vec<u32> {
    let mut v = v.to_vec();
    for row in rref_rows {
        let piv = row.iter().position(|&x| x != 0).expect("rref rows are nonzero");
        let coef = v[piv];
        axpy(&mut v, coef, row, p);
    }
    v
}

pub(crate) fn in_span(v: &[u32], rref_rows: &[Vec<u32>], p: u32) -> bool {
    reduce(v, rref_rows, p).iter().all(|&x| x == 0)
}

/// Basis of `{x : M x = 0}` for `M` given by rows of length `ncols`.
pub(crate) fn nullspace(rows: &[Vec<u32>], ncols: usize, p: u32) -> Vec<Vec<u32>> {
    let r = rref(rows.to_vec(), p);
    let pivots = pivot_columns(&r);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![0u32; ncols];
        x[free] = 1;
        for (row, &pc) in r.iter().zip(&pivots) {
            x[pc] = (p - row[free]) % p;
        }
        basis.push(x);
    }
    basis
}

/// Intersection of two row spaces (Zassenhaus), returned in RREF.
pub(crate) fn intersect(a: &[Vec<u32>], b: &[Vec<u32>], ncols: usize, p: u32) -> Vec<Vec<u32>> {
    let mut rows = Vec::with_capacity(a.len() + b.len());
    for r in a {
        let mut row = r.clone();
        row.extend_from_slice(r);
        rows.push(row);
    }
    for r in b {
        let mut row = r.clone();
        row.extend(std::iter::repeat_n(0, ncols));
        rows.push(row);
    }
    let reduced = rref(rows, p);
    let inter: Vec<Vec<u32>> = reduced
        .into_iter()
        .filter(|row| row[..ncols].iter().all(|&x| x == 0))
        .map(|row| row[ncols..].to_vec())
        .collect();
    rref(inter, p)
}

/// `M v` for `M` with rows of length `v.len()`.
pub(crate) fn mat_vec(m: &[Vec<u32>], v: &[u32], p: u32) -> Vec<u32> {
    m.iter()
        .map(|row| (row.iter().zip(v).map(|(&a, &b)| a as u64 * b as u64).sum::<u64>() % p as u64) as u32)
        .collect()
}

/// `A B` for row-major matrices.
pub(crate) fn mat_mul(a: &[Vec<u32>], b: &[Vec<u32>], p: u32) -> Vec<Vec<u32>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (row.iter().zip(b).map(|(&x, br)| x as u64 * br[j] as u64).sum::<u64>() % p as u64) as u32)
                .collect()
        })
        .collect()
}

/// Echelon data for repeated [`solve_completion`] calls with fixed `positions`.
pub(crate) fn completion_basis(rows: &[Vec<u32>], positions: &[usize], p: u32) -> Vec<Vec<u32>> {
    let aug: Vec<Vec<u32>> = rows
        .iter()
        .map(|r| positions.iter().map(|&c| r[c]).chain(r.iter().copied()).collect())
        .collect();
    rref(aug, p)
}

/// A vector of the row space whose entries at the `f` prepared positions equal `values`.
pub(crate) fn solve_completion(reduced: &[Vec<u32>], f: usize, n: usize, values: &[u32], p: u32) -> Option<Vec<u32>> {
    let mut residual = values.to_vec();
    let mut out = vec![0u32; n];
    for row in reduced {
        let piv = row.iter().position(|&x| x != 0).expect("rref rows are nonzero");
        if piv >= f {
            break;
        }
        let coef = residual[piv];
        if coef == 0 {
            continue;
        }
        axpy(&mut residual, coef, &row[..f], p);
        // out += coef * row[f..]
        axpy(&mut out, (p - coef) % p, &row[f..], p);
    }
    residual.iter().all(|&x| x == 0).then_some(out)
}

/// A vector of the row space whose entries at `positions` equal `values`, if one exists.
#[cfg(test)]
pub(crate) fn complete(rows: &[Vec<u32>], positions: &[usize], values: &[u32], p: u32) -> Option<Vec<u32>> {
    let n = rows.first().map_or(0, Vec::len);
    solve_completion(&completion_basis(rows, positions, p), positions.len(), n, values, p)
}
